"""Rule-based English -> Functional Syntax translation.

A fixed, ordered catalog of sentence shapes; the first rule that matches
wins and anything else raises NoPatternMatch so the caller can fall back to
a remote model.  Conventions: class and property names are lowercased with
underscores for spaces, individual names keep their capitalization, and a
capitalized subject means an individual while a lowercase one means a class.

Declarations are derived from the logical axioms each rule emits, so every
entity referenced by a result is also declared in it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, TYPE_CHECKING

from .ofs import (
    AllValuesFrom,
    AsymmetricObjectProperty,
    Axiom,
    ClassAssertion,
    ComplementOf,
    Declaration,
    DisjointClasses,
    EntityName,
    EquivalentClasses,
    ExactCardinality,
    IntersectionOf,
    Kind,
    MinCardinality,
    NegativeObjectPropertyAssertion,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    SymmetricObjectProperty,
    entity_uses,
)

if TYPE_CHECKING:
    from .gateway import ValidationOutcome


class NoPatternMatch(ValueError):
    """No catalog rule fires for the sentence."""

    def __init__(self, sentence: str):
        super().__init__(f"no translation rule matches: {sentence!r}")
        self.sentence = sentence


class UnrepresentableName(ValueError):
    """Phrase cannot be turned into a legal entity name."""


class NotANumber(ValueError):
    """Token is neither a numeral nor a known number word."""


class Backend(Enum):
    PATTERN = "pattern"
    LLM = "llm"


@dataclass(frozen=True)
class TranslationResult:
    sentence: str
    axioms: tuple[Axiom, ...]
    backend: Backend
    pattern_id: Optional[str] = None
    raw_completion: Optional[str] = None
    validation: Optional["ValidationOutcome"] = None


# ---------------------------------------------------------------------------
# Word-level helpers
# ---------------------------------------------------------------------------

_PHRASE_RE = re.compile(r"[A-Za-z0-9 \-]+\Z")
_LOCAL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def normalize_entity_name(phrase: str, kind: Kind) -> EntityName:
    """Spaces and hyphens become underscores; classes and properties lowercase."""
    phrase = phrase.strip()
    if not phrase or not _PHRASE_RE.match(phrase):
        raise UnrepresentableName(f"cannot name an entity after {phrase!r}")
    local = "_".join(phrase.replace("-", " ").split())
    if kind is not Kind.NAMED_INDIVIDUAL:
        local = local.lower()
    if not _LOCAL_RE.match(local):
        raise UnrepresentableName(f"cannot name an entity after {phrase!r}")
    return EntityName(local, kind)


_IRREGULAR_SINGULARS = {
    "children": "child",
    "people": "person",
    "men": "man",
    "women": "woman",
    "mice": "mouse",
    "feet": "foot",
    "teeth": "tooth",
    "geese": "goose",
}

_VES_SINGULARS = {
    "calves": "calf",
    "halves": "half",
    "hooves": "hoof",
    "knives": "knife",
    "leaves": "leaf",
    "lives": "life",
    "loaves": "loaf",
    "scarves": "scarf",
    "shelves": "shelf",
    "thieves": "thief",
    "wives": "wife",
    "wolves": "wolf",
}


def singularize(noun: str) -> str:
    """Suffix-rule singularization; words already singular come back unchanged."""
    if noun in _IRREGULAR_SINGULARS:
        return _IRREGULAR_SINGULARS[noun]
    if noun.endswith("ies") and len(noun) > 3:
        return noun[:-3] + "y"
    if noun.endswith("ves"):
        return _VES_SINGULARS.get(noun, noun[:-3] + "f")
    if noun.endswith(("ses", "xes", "zes", "ches", "shes")):
        return noun[:-2]
    if noun.endswith("s") and not noun.endswith("ss"):
        return noun[:-1]
    return noun


_NUMBER_WORDS = {
    word: value
    for value, word in enumerate(
        "zero one two three four five six seven eight nine ten eleven twelve "
        "thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty".split()
    )
}


def parse_count(token: str) -> int:
    """Decimal numeral or an English number word zero..twenty."""
    text = token.strip().lower()
    if text.isdigit():
        return int(text)
    if text in _NUMBER_WORDS:
        return _NUMBER_WORDS[text]
    raise NotANumber(f"not a count: {token!r}")


_THIRD_PERSON_IRREGULAR = {"have": "has", "do": "does", "be": "is", "go": "goes"}


def _third_person(verb: str) -> str:
    if verb in _THIRD_PERSON_IRREGULAR:
        return _THIRD_PERSON_IRREGULAR[verb]
    if verb.endswith("s"):
        return verb
    if verb.endswith(("sh", "ch", "x", "z", "o")):
        return verb + "es"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in "aeiou":
        return verb[:-1] + "ies"
    return verb + "s"


_BASE_IRREGULAR = {"has": "have", "does": "do", "is": "be", "goes": "go"}


def _base_verb(verb: str) -> str:
    if verb in _BASE_IRREGULAR:
        return _BASE_IRREGULAR[verb]
    if verb.endswith("ies") and len(verb) > 3:
        return verb[:-3] + "y"
    if verb.endswith(("shes", "ches", "xes", "zes", "ses")):
        return verb[:-2]
    if verb.endswith("s") and not verb.endswith("ss"):
        return verb[:-1]
    return verb


def _same_base_phrase(a: str, b: str) -> bool:
    left, right = a.split(), b.split()
    if len(left) != len(right):
        return False
    return _base_verb(left[0]) == _base_verb(right[0]) and left[1:] == right[1:]


# ---------------------------------------------------------------------------
# Rule catalog
# ---------------------------------------------------------------------------

_CAP = r"[A-Z][A-Za-z]*(?: [A-Z][A-Za-z]*)*"
_LW = r"[a-z]+"
_LSEQ = r"[a-z]+(?: [a-z]+)*"

# Verbs that would turn copular or auxiliary sentences into bogus relations.
_BLOCKED_VERBS = frozenset({"is", "are", "was", "were", "am", "be", "been", "do", "does", "did", "not"})
_ARTICLES = ("a ", "an ", "the ")
# Function words that disqualify a phrase from being read as a noun phrase.
_NON_NOUNS = frozenset({
    "how", "many", "much", "what", "which", "who", "whom", "why", "where",
    "when", "there", "this", "that", "these", "those", "no", "not", "some",
    "any", "all", "every", "each", "other",
})


def _nounish(phrase: str) -> bool:
    return all(word not in _NON_NOUNS for word in phrase.split())


def _cls(phrase: str) -> EntityName:
    return normalize_entity_name(phrase, Kind.CLASS)


def _prop(phrase: str) -> EntityName:
    return normalize_entity_name(phrase, Kind.OBJECT_PROPERTY)


def _ind(phrase: str) -> EntityName:
    return normalize_entity_name(phrase, Kind.NAMED_INDIVIDUAL)


def _singular_phrase(phrase: str) -> str:
    words = phrase.split()
    words[-1] = singularize(words[-1])
    return " ".join(words)


def _split_list(text: str) -> list[str]:
    return [part for chunk in text.split(",") for part in chunk.split(" and ") if part.strip()]


def _p1(m: re.Match) -> list[Axiom]:
    individual = _ind(m["subj"])
    return [ClassAssertion(_cls(word), individual) for word in m["classes"].split()]


def _p2(sentence: str) -> Optional[list[Axiom]]:
    m = re.fullmatch(rf"every (?P<sub>{_LSEQ}) is an? (?P<sup>{_LSEQ})", sentence)
    if m:
        return [SubClassOf(_cls(m["sub"]), _cls(m["sup"]))]
    m = re.fullmatch(rf"(?P<subs>[a-z][a-z ,]*?) are a type of (?P<sup>{_LSEQ})", sentence)
    if m:
        sup = _cls(m["sup"])
        return [SubClassOf(_cls(_singular_phrase(s)), sup) for s in _split_list(m["subs"])]
    m = re.fullmatch(rf"all (?P<subs>[a-z][a-z ,]*?) are (?P<sup>{_LSEQ})", sentence)
    if not m:
        m = re.fullmatch(rf"(?P<subs>[a-z][a-z ,]*?) are (?P<sup>{_LSEQ})", sentence)
    if m and not m["sup"].startswith(_ARTICLES) and _nounish(m["sup"]):
        subs = [s.strip() for s in _split_list(m["subs"])]
        if all(re.fullmatch(_LSEQ, s) and _nounish(s) for s in subs):
            sup = _cls(_singular_phrase(m["sup"]))
            return [SubClassOf(_cls(_singular_phrase(s)), sup) for s in subs]
    return None


def _p3(m: re.Match) -> Optional[list[Axiom]]:
    individuals = _split_list(m["inds"])
    if len(individuals) < 2:
        return None
    cls = _cls(singularize(m["cls"]))
    return [ClassAssertion(cls, _ind(name.strip())) for name in individuals]


def _p4(m: re.Match) -> list[Axiom]:
    return [DisjointClasses((_cls(m["c1"]), _cls(m["c2"])))]


def _p5(m: re.Match) -> list[Axiom]:
    return [ClassAssertion(ComplementOf(_cls(m["cls"])), _ind(m["subj"]))]


def _p6(m: re.Match) -> list[Axiom]:
    prop = _prop("has " + singularize(m["rel"]))
    first, second = _ind(m["i1"]), _ind(m["i2"])
    return [
        ObjectPropertyAssertion(prop, first, second),
        ObjectPropertyAssertion(prop, second, first),
    ]


def _p7(m: re.Match) -> Optional[list[Axiom]]:
    if m["verb"] in _BLOCKED_VERBS:
        return None
    try:
        count = parse_count(m["count"])
    except NotANumber:
        return None
    restriction = ExactCardinality(count, _prop(m["verb"]), _cls(singularize(m["obj"])))
    return [ClassAssertion(restriction, _ind(m["subj"]))]


def _p8(m: re.Match) -> Optional[list[Axiom]]:
    if m["verb"] in _BLOCKED_VERBS:
        return None
    restriction = SomeValuesFrom(_prop(m["verb"]), _cls(singularize(m["obj"])))
    return [ClassAssertion(restriction, _ind(m["subj"]))]


def _p9(m: re.Match) -> Optional[list[Axiom]]:
    if m["verb"] in _BLOCKED_VERBS:
        return None
    restriction = AllValuesFrom(_prop(_third_person(m["verb"])), _cls(singularize(m["obj"])))
    return [SubClassOf(_cls(singularize(m["sub"])), restriction)]


def _p10(m: re.Match) -> Optional[list[Axiom]]:
    try:
        count = parse_count(m["count"])
    except NotANumber:
        return None
    restriction = ExactCardinality(count, _prop("has"), _cls(singularize(m["obj"])))
    return [EquivalentClasses((_cls(singularize(m["sub"])), restriction))]


def _p11(m: re.Match) -> Optional[list[Axiom]]:
    try:
        count = parse_count(m["count"])
    except NotANumber:
        return None
    restriction = MinCardinality(count, _prop("has"), _cls(singularize(m["c3"])))
    defined = IntersectionOf((_cls(m["c2"]), restriction))
    return [EquivalentClasses((_cls(m["c1"]), defined))]


def _p12(m: re.Match) -> list[Axiom]:
    prop = _prop("has " + m["rel"])
    return [ObjectPropertyAssertion(prop, _ind(m["i1"]), _ind(m["i2"]))]


def _p13(m: re.Match) -> Optional[list[Axiom]]:
    if m["verb"] in _BLOCKED_VERBS:
        return None
    prop = _prop(_third_person(m["verb"]))
    return [NegativeObjectPropertyAssertion(prop, _ind(m["i1"]), _ind(m["i2"]))]


def _p14(m: re.Match) -> Optional[list[Axiom]]:
    phrase = m["phrase"]
    if phrase in _BLOCKED_VERBS or phrase in ("and", "or"):
        return None
    return [ObjectPropertyAssertion(_prop(phrase), _ind(m["i1"]), _ind(m["i2"]))]


def _p15(m: re.Match) -> Optional[list[Axiom]]:
    if m["verb"] in _BLOCKED_VERBS:
        return None
    prop = _prop(_third_person(m["verb"]))
    first, second = _ind(m["i1"]), _ind(m["i2"])
    return [
        ObjectPropertyAssertion(prop, first, second),
        ObjectPropertyAssertion(prop, second, first),
    ]


def _p16(m: re.Match) -> list[Axiom]:
    return [ObjectPropertyRange(_prop("has " + m["rel"]), _cls(m["cls"]))]


def _p17(m: re.Match) -> list[Axiom]:
    return [SubObjectPropertyOf(_prop("has " + m["r1"]), _prop("has " + m["r2"]))]


def _p18(m: re.Match) -> Optional[list[Axiom]]:
    if m["p1"] != m["p2"]:
        return None
    return [SymmetricObjectProperty(_prop(m["p1"]))]


def _p19(m: re.Match) -> Optional[list[Axiom]]:
    if not _same_base_phrase(m["p1"], m["p2"]):
        return None
    return [AsymmetricObjectProperty(_prop(m["p1"]))]


def _p20(m: re.Match) -> Optional[list[Axiom]]:
    if m["verb"] in _BLOCKED_VERBS:
        return None
    return [ObjectPropertyDomain(_prop(m["verb"]), _cls(m["cls"]))]


def _regex_rule(pattern: str, handler: Callable[[re.Match], Optional[list[Axiom]]]):
    compiled = re.compile(pattern)

    def matcher(sentence: str) -> Optional[list[Axiom]]:
        m = compiled.fullmatch(sentence)
        return handler(m) if m else None

    return matcher


_RULES: tuple[tuple[str, Callable[[str], Optional[list[Axiom]]]], ...] = (
    ("P1", _regex_rule(rf"(?P<subj>{_CAP}) is an? (?P<classes>{_LSEQ})", _p1)),
    ("P2", _p2),
    ("P3", _regex_rule(
        rf"(?P<inds>{_CAP}(?:, {_CAP})*(?:,? and {_CAP})?) are (?P<cls>{_LW})", _p3)),
    ("P4", _regex_rule(rf"no (?P<c1>{_LSEQ}) is an? (?P<c2>{_LSEQ})", _p4)),
    ("P5", _regex_rule(rf"(?P<subj>{_CAP}) is not an? (?P<cls>{_LSEQ})", _p5)),
    ("P6", _regex_rule(
        rf"(?P<i1>{_CAP}) and (?P<i2>{_CAP}) are each other's (?P<rel>{_LW})", _p6)),
    ("P7", _regex_rule(
        rf"(?P<subj>{_CAP}) (?P<verb>{_LW}) (?P<count>[A-Za-z0-9]+) (?P<obj>{_LW})", _p7)),
    ("P8", _regex_rule(rf"(?P<subj>{_CAP}) (?P<verb>{_LW}) (?P<obj>{_LW})", _p8)),
    ("P9", _regex_rule(rf"(?P<sub>{_LW}) (?P<verb>{_LW}) only (?P<obj>{_LW})", _p9)),
    ("P10", _regex_rule(
        rf"all (?P<sub>{_LW}) have exactly (?P<count>[A-Za-z0-9]+) (?P<obj>{_LW})", _p10)),
    ("P11", _regex_rule(
        rf"an? (?P<c1>{_LW}) is an? (?P<c2>{_LW}) who has at least "
        rf"(?P<count>[A-Za-z0-9]+) (?P<c3>{_LW})", _p11)),
    ("P12", _regex_rule(rf"(?P<i1>{_CAP})'s (?P<rel>{_LSEQ}) is (?P<i2>{_CAP})", _p12)),
    ("P13", _regex_rule(
        rf"(?P<i1>{_CAP}) does not (?P<verb>{_LW}) (?P<i2>{_CAP})", _p13)),
    ("P14", _regex_rule(rf"(?P<i1>{_CAP}) (?P<phrase>{_LSEQ}) (?P<i2>{_CAP})", _p14)),
    ("P15", _regex_rule(
        rf"(?P<i1>{_CAP}) and (?P<i2>{_CAP}) (?P<verb>{_LW}) each other", _p15)),
    ("P16", _regex_rule(
        rf"any(?:one|body) who is an? (?P<rel>{_LSEQ}) is (?P<cls>{_LSEQ})", _p16)),
    ("P17", _regex_rule(
        rf"any(?:one|body) who has an? (?P<r1>{_LSEQ}) has an? (?P<r2>{_LSEQ})", _p17)),
    ("P18", _regex_rule(rf"if X (?P<p1>{_LSEQ}) Y then Y (?P<p2>{_LSEQ}) X", _p18)),
    ("P19", _regex_rule(
        rf"if X (?P<p1>{_LSEQ}) Y then Y does not (?P<p2>{_LSEQ}) X", _p19)),
    ("P20", _regex_rule(
        rf"any(?:one|body) who (?P<verb>{_LW}) something is an? (?P<cls>{_LSEQ})", _p20)),
)


def _with_declarations(logical: list[Axiom]) -> list[Axiom]:
    by_kind: dict[Kind, dict[str, EntityName]] = {kind: {} for kind in Kind}
    for axiom in logical:
        for use in entity_uses(axiom):
            by_kind[use.kind].setdefault(use.local, use)
    order = (Kind.CLASS, Kind.OBJECT_PROPERTY, Kind.NAMED_INDIVIDUAL)
    declarations = [
        Declaration(entity) for kind in order for entity in by_kind[kind].values()
    ]
    return declarations + logical


def translate(sentence: str) -> TranslationResult:
    """Translate one English sentence; raises NoPatternMatch when no rule fires."""
    if not sentence or not sentence.strip():
        raise ValueError("sentence must be non-empty")
    cleaned = re.sub(r"\s+", " ", sentence).strip()
    cleaned = cleaned.rstrip(".!?").rstrip()
    for rule_id, matcher in _RULES:
        logical = matcher(cleaned)
        if logical is not None:
            axioms = tuple(_with_declarations(logical))
            return TranslationResult(sentence, axioms, Backend.PATTERN, pattern_id=rule_id)
    raise NoPatternMatch(sentence)
