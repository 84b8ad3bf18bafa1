"""Remote-completion backend: prompt building, dataset export, validation.

The gateway speaks to any HTTP completions endpoint that accepts
``{model, prompt, temperature, max_tokens, stop}`` and returns JSON with a
text field (path configurable).  Completions are validated line by line and
only well-formed, well-typed axioms survive into the translation result;
everything else lands in the rejected list for the human to see.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

import requests

from .ofs import Axiom, Declaration, Kind, ParseError, parse_axiom, well_formedness_problem
from .patterns import Backend, TranslationResult
from .store import Ontology

API_KEY_ENV = "ONTOFORGE_LLM_API_KEY"

# Fine-tuning dataset separators; fixed so exported files are byte-stable.
PROMPT_TERMINATOR = "\n\n###\n\n"
COMPLETION_PREFIX = " "
COMPLETION_STOP = "\nEND"

ZERO_SHOT_TEMPLATE = "Translate '{sentence}' into Functional Syntax"

# One initial attempt plus up to three retries with 1s/2s/4s backoff.
MAX_ATTEMPTS = 4
RETRY_BASE_DELAY = 1.0


class GatewayError(Exception):
    """Base for remote-translation failures."""


class NetworkError(GatewayError):
    pass


class AuthError(GatewayError):
    pass


class EmptyCompletion(GatewayError):
    pass


class UnusableCompletion(GatewayError):
    def __init__(self, outcome: "ValidationOutcome"):
        reasons = "; ".join(f"{r.line!r}: {r.reason}" for r in outcome.rejected) or "empty"
        super().__init__(f"no usable axiom in completion ({reasons})")
        self.outcome = outcome


class InvalidExample(GatewayError):
    def __init__(self, index: int, cause: Exception):
        super().__init__(f"dataset example {index} has an unparseable completion: {cause}")
        self.index = index


class Strategy(Enum):
    ZERO_SHOT = "zero_shot"
    FEW_SHOT = "few_shot"
    FINE_TUNED = "fine_tuned"


@dataclass(frozen=True)
class PromptExample:
    prompt: str
    completion: str


@dataclass
class BackendConfig:
    strategy: Strategy = Strategy.FINE_TUNED
    endpoint: str = ""
    model: str = ""
    examples: tuple[PromptExample, ...] = ()
    api_key: Optional[str] = None
    api_key_env: str = API_KEY_ENV
    temperature: float = 0.0
    max_tokens: int = 256
    timeout: float = 30.0
    response_path: str = "choices.0.text"

    def __post_init__(self) -> None:
        if not 0.0 <= self.temperature <= 1.0:
            raise ValueError("temperature must be in [0, 1]")
        if self.strategy is Strategy.FEW_SHOT and not self.examples:
            raise ValueError("few-shot strategy needs at least one example")

    @classmethod
    def from_dict(cls, data: dict) -> "BackendConfig":
        examples = tuple(
            PromptExample(e["prompt"], e["completion"]) for e in data.get("examples", ())
        )
        if not examples and data.get("examples_path"):
            examples = tuple(import_dataset(Path(data["examples_path"]).read_bytes()))
        return cls(
            strategy=Strategy(data.get("strategy", "fine_tuned")),
            endpoint=data.get("endpoint", ""),
            model=data.get("model", ""),
            examples=examples,
            api_key=data.get("api_key"),
            api_key_env=data.get("api_key_env", API_KEY_ENV),
            temperature=data.get("temperature", 0.0),
            max_tokens=data.get("max_tokens", 256),
            timeout=data.get("timeout", 30.0),
            response_path=data.get("response_path", "choices.0.text"),
        )

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "BackendConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


class Verdict(Enum):
    CLEAN = "clean"
    PARTIAL = "partial"
    UNUSABLE = "unusable"


@dataclass(frozen=True)
class RejectedLine:
    line: str
    reason: str


@dataclass(frozen=True)
class ValidationOutcome:
    valid_axioms: tuple[Axiom, ...]
    rejected: tuple[RejectedLine, ...]
    verdict: Verdict


# ---------------------------------------------------------------------------
# Prompts and datasets
# ---------------------------------------------------------------------------

def build_prompt(sentence: str, config: BackendConfig) -> dict:
    """The JSON request body for one translation call."""
    if not sentence or not sentence.strip():
        raise ValueError("sentence must be non-empty")
    if config.strategy is Strategy.ZERO_SHOT:
        text = ZERO_SHOT_TEMPLATE.format(sentence=sentence)
    elif config.strategy is Strategy.FEW_SHOT:
        blocks = [
            f"{ex.prompt}{PROMPT_TERMINATOR}{COMPLETION_PREFIX}{ex.completion}{COMPLETION_STOP}\n\n"
            for ex in config.examples
        ]
        text = "".join(blocks) + sentence + PROMPT_TERMINATOR
    else:
        text = sentence + PROMPT_TERMINATOR
    return {
        "model": config.model,
        "prompt": text,
        "temperature": config.temperature,
        "max_tokens": config.max_tokens,
        "stop": [COMPLETION_STOP],
    }


def export_dataset(examples: Sequence[PromptExample]) -> bytes:
    """JSON-lines fine-tuning file; byte-stable across runs.

    One object per line with exactly the fields ``prompt`` and ``completion``;
    the prompt carries the terminator, the completion a leading space and the
    stop sequence.
    """
    lines = []
    for index, example in enumerate(examples):
        for line in example.completion.splitlines():
            if not line.strip():
                continue
            try:
                parse_axiom(line)
            except ParseError as error:
                raise InvalidExample(index, error) from error
        record = {
            "prompt": example.prompt + PROMPT_TERMINATOR,
            "completion": COMPLETION_PREFIX + example.completion + COMPLETION_STOP,
        }
        lines.append(json.dumps(record, ensure_ascii=False))
    if not lines:
        return b""
    return ("\n".join(lines) + "\n").encode("utf-8")


def import_dataset(data: Union[bytes, str]) -> list[PromptExample]:
    """Inverse of export_dataset; tolerates records without the terminators."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    examples = []
    for index, line in enumerate(data.splitlines()):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            prompt, completion = record["prompt"], record["completion"]
        except (json.JSONDecodeError, KeyError, TypeError) as error:
            raise InvalidExample(index, error) from error
        if prompt.endswith(PROMPT_TERMINATOR):
            prompt = prompt[: -len(PROMPT_TERMINATOR)]
        if completion.endswith(COMPLETION_STOP):
            completion = completion[: -len(COMPLETION_STOP)]
        if completion.startswith(COMPLETION_PREFIX):
            completion = completion[len(COMPLETION_PREFIX):]
        examples.append(PromptExample(prompt, completion))
    return examples


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate_completion(raw: str, ontology: Ontology) -> ValidationOutcome:
    """Parse and type-check a completion line by line.

    Lines that fail to parse are rejected with a syntax reason.  Parsed
    axioms are checked against the completion's own declarations plus the
    ontology signature: wrong-kind uses are rejected as ill-typed, entities
    declared nowhere as undeclared.  Survivors keep their input order.
    """
    parsed: list[tuple[str, Optional[Axiom]]] = []
    rejected: list[RejectedLine] = []
    for line in raw.splitlines():
        text = line.strip()
        if not text:
            continue
        try:
            parsed.append((text, parse_axiom(text)))
        except ParseError as error:
            rejected.append(RejectedLine(text, f"syntax: {error}"))
            parsed.append((text, None))

    declared: dict[str, set[Kind]] = {
        name: {kind} for name, kind in ontology.signature().items()
    }
    for _, axiom in parsed:
        if isinstance(axiom, Declaration):
            declared.setdefault(axiom.entity.local, set()).add(axiom.entity.kind)

    valid: list[Axiom] = []
    for text, axiom in parsed:
        if axiom is None:
            continue
        problem = well_formedness_problem(axiom, declared)
        if problem is None:
            valid.append(axiom)
        else:
            rejected.append(RejectedLine(text, f"{problem[0]}: {problem[1]}"))

    if not valid:
        verdict = Verdict.UNUSABLE
    elif rejected:
        verdict = Verdict.PARTIAL
    else:
        verdict = Verdict.CLEAN
    return ValidationOutcome(tuple(valid), tuple(rejected), verdict)


# ---------------------------------------------------------------------------
# Remote calls
# ---------------------------------------------------------------------------

Transport = Callable[[dict, BackendConfig], str]


def _extract_text(payload: object, path: str) -> str:
    current = payload
    for segment in path.split("."):
        try:
            if segment.lstrip("-").isdigit():
                current = current[int(segment)]  # type: ignore[index]
            else:
                current = current[segment]  # type: ignore[index]
        except (KeyError, IndexError, TypeError) as error:
            raise NetworkError(
                f"response has no field at {path!r}: {error}"
            ) from error
    if not isinstance(current, str):
        raise NetworkError(f"response field {path!r} is not text")
    return current


def http_transport(payload: dict, config: BackendConfig) -> str:
    """POST the payload, retrying transient failures with exponential backoff."""
    key = config.api_key or os.environ.get(config.api_key_env or API_KEY_ENV)
    if not key:
        raise AuthError(
            f"no API key: set {config.api_key_env or API_KEY_ENV} or put api_key in the config"
        )
    if not config.endpoint:
        raise NetworkError("no completions endpoint configured")
    headers = {"Authorization": f"Bearer {key}"}
    delay = RETRY_BASE_DELAY
    failure: Optional[NetworkError] = None
    for attempt in range(MAX_ATTEMPTS):
        if attempt:
            time.sleep(delay)
            delay *= 2
        try:
            response = requests.post(
                config.endpoint, json=payload, headers=headers, timeout=config.timeout
            )
        except requests.RequestException as error:
            failure = NetworkError(str(error))
            continue
        if response.status_code in (401, 403):
            raise AuthError(f"endpoint rejected credentials (HTTP {response.status_code})")
        if response.status_code == 429 or response.status_code >= 500:
            failure = NetworkError(f"HTTP {response.status_code} from endpoint")
            continue
        if response.status_code >= 400:
            raise NetworkError(f"HTTP {response.status_code}: {response.text[:200]}")
        try:
            body = response.json()
        except ValueError as error:
            raise NetworkError(f"endpoint returned non-JSON body: {error}") from error
        return _extract_text(body, config.response_path)
    assert failure is not None
    raise failure


def translate_remote(
    sentence: str,
    config: BackendConfig,
    ontology: Ontology,
    transport: Optional[Transport] = None,
) -> TranslationResult:
    """Prompt -> completion -> validated axioms, with the raw text kept for audit."""
    payload = build_prompt(sentence, config)
    raw = (transport or http_transport)(payload, config)
    if not raw or not raw.strip():
        raise EmptyCompletion(f"endpoint returned an empty completion for {sentence!r}")
    outcome = validate_completion(raw, ontology)
    if outcome.verdict is Verdict.UNUSABLE:
        raise UnusableCompletion(outcome)
    return TranslationResult(
        sentence,
        outcome.valid_axioms,
        Backend.LLM,
        raw_completion=raw,
        validation=outcome,
    )
