"""ontoforge: natural language to OWL Functional Syntax, with supervised enrichment."""

from .evaluation import EvalReport, PairScore, evaluate, pattern_backend, score_pair
from .gateway import (
    BackendConfig,
    PromptExample,
    Strategy,
    ValidationOutcome,
    Verdict,
    build_prompt,
    export_dataset,
    import_dataset,
    translate_remote,
    validate_completion,
)
from .ofs import (
    Axiom,
    ClassExpr,
    EntityName,
    Kind,
    OntologyDocument,
    ParseError,
    canonical_set,
    parse_axiom,
    parse_document,
    serialize,
    serialize_axiom,
)
from .patterns import (
    Backend,
    NoPatternMatch,
    TranslationResult,
    normalize_entity_name,
    parse_count,
    singularize,
    translate,
)
from .store import (
    MergeReport,
    Ontology,
    StagedChange,
    Status,
    commit,
    load_document,
    save_document,
    signature_of,
    stage,
)

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "Backend",
    "BackendConfig",
    "ClassExpr",
    "EntityName",
    "EvalReport",
    "Kind",
    "MergeReport",
    "NoPatternMatch",
    "Ontology",
    "OntologyDocument",
    "PairScore",
    "ParseError",
    "PromptExample",
    "StagedChange",
    "Status",
    "Strategy",
    "TranslationResult",
    "ValidationOutcome",
    "Verdict",
    "build_prompt",
    "canonical_set",
    "commit",
    "evaluate",
    "export_dataset",
    "import_dataset",
    "load_document",
    "normalize_entity_name",
    "parse_axiom",
    "parse_count",
    "parse_document",
    "pattern_backend",
    "save_document",
    "score_pair",
    "serialize",
    "serialize_axiom",
    "signature_of",
    "singularize",
    "stage",
    "translate",
    "translate_remote",
    "validate_completion",
]
