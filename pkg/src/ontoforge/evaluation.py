"""Scoring backends against gold sentence/axiom pairs.

The headline metric is set-based F1 over canonical axiom sets, so scores are
invariant under line reordering and whitespace.  Token accuracy is a
secondary, order-aware surface metric: the longest-common-subsequence ratio
of the token streams, tokens split on whitespace and parentheses.
"""
from __future__ import annotations

import datetime as _dt
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .gateway import PromptExample, Verdict, validate_completion
from .ofs import Axiom, canonical_set, parse_axiom, serialize
from .patterns import translate
from .store import Ontology

_TOKEN_SPLIT = re.compile(r"[\s()]+")


def tokenize(text: str) -> list[str]:
    return [token for token in _TOKEN_SPLIT.split(text) if token]


def _lcs_length(left: Sequence[str], right: Sequence[str]) -> int:
    if not left or not right:
        return 0
    previous = [0] * (len(right) + 1)
    for a in left:
        current = [0]
        for j, b in enumerate(right, start=1):
            if a == b:
                current.append(previous[j - 1] + 1)
            else:
                current.append(max(previous[j], current[j - 1]))
        previous = current
    return previous[-1]


@dataclass(frozen=True)
class PairScore:
    exact: bool
    precision: float
    recall: float
    f1: float
    token_accuracy: float
    parse_failed: bool


def score_pair(gold: Sequence[Axiom], predicted_raw: str) -> PairScore:
    """Score one prediction against its gold axioms.

    Precision/recall/F1 are computed over canonical sets of the lines that
    survive validation (against an empty ontology).  A prediction with no
    usable axiom at all counts as a parse failure and scores zero.
    """
    if not gold:
        raise ValueError("gold axiom list must be non-empty")
    gold_set = canonical_set(gold)
    outcome = validate_completion(predicted_raw, Ontology.empty())
    parse_failed = outcome.verdict is Verdict.UNUSABLE

    if parse_failed:
        precision = recall = f1 = Fraction(0)
        exact = False
    else:
        predicted_set = canonical_set(outcome.valid_axioms)
        overlap = len(gold_set & predicted_set)
        precision = Fraction(overlap, len(predicted_set)) if predicted_set else Fraction(0)
        recall = Fraction(overlap, len(gold_set))
        total = precision + recall
        f1 = 2 * precision * recall / total if total else Fraction(0)
        exact = gold_set == predicted_set

    gold_tokens = tokenize(serialize(list(gold)))
    predicted_tokens = tokenize(predicted_raw)
    longest = max(len(gold_tokens), len(predicted_tokens))
    token_accuracy = (
        Fraction(_lcs_length(gold_tokens, predicted_tokens), longest) if longest else Fraction(1)
    )

    return PairScore(
        exact=exact,
        precision=float(precision),
        recall=float(recall),
        f1=float(f1),
        token_accuracy=float(token_accuracy),
        parse_failed=parse_failed,
    )


@dataclass(frozen=True)
class EvalReport:
    scores: tuple[PairScore, ...]
    failures: tuple[tuple[int, str], ...]
    backend: str
    dataset: str
    created_at: str

    @property
    def mean_f1(self) -> float:
        return sum(s.f1 for s in self.scores) / len(self.scores)

    @property
    def mean_token_accuracy(self) -> float:
        return sum(s.token_accuracy for s in self.scores) / len(self.scores)

    @property
    def exact_match_rate(self) -> float:
        return sum(s.exact for s in self.scores) / len(self.scores)

    @property
    def parse_failure_rate(self) -> float:
        return sum(s.parse_failed for s in self.scores) / len(self.scores)

    def to_dict(self) -> dict:
        return {
            "backend": self.backend,
            "dataset": self.dataset,
            "created_at": self.created_at,
            "aggregates": {
                "mean_f1": self.mean_f1,
                "mean_token_accuracy": self.mean_token_accuracy,
                "exact_match_rate": self.exact_match_rate,
                "parse_failure_rate": self.parse_failure_rate,
                "pairs": len(self.scores),
            },
            "pairs": [
                {
                    "exact": s.exact,
                    "precision": s.precision,
                    "recall": s.recall,
                    "f1": s.f1,
                    "token_accuracy": s.token_accuracy,
                    "parse_failed": s.parse_failed,
                }
                for s in self.scores
            ],
            "failures": [{"index": i, "error": msg} for i, msg in self.failures],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        header = f"{'#':>3}  {'exact':5}  {'prec':>6}  {'rec':>6}  {'f1':>6}  {'tok':>6}  flags"
        lines = [header, "-" * len(header)]
        for index, s in enumerate(self.scores):
            flags = "parse-failed" if s.parse_failed else ""
            lines.append(
                f"{index:>3}  {str(s.exact).lower():5}  {s.precision:6.3f}  "
                f"{s.recall:6.3f}  {s.f1:6.3f}  {s.token_accuracy:6.3f}  {flags}"
            )
        lines.append("-" * len(header))
        lines.append(
            f"backend={self.backend} dataset={self.dataset} pairs={len(self.scores)} "
            f"exact={self.exact_match_rate:.3f} mean_f1={self.mean_f1:.3f} "
            f"mean_tok={self.mean_token_accuracy:.3f} parse_fail={self.parse_failure_rate:.3f}"
        )
        return "\n".join(lines)


def pattern_backend(sentence: str) -> str:
    """The deterministic rule backend in raw-completion form."""
    return serialize(translate(sentence).axioms)


def evaluate(
    dataset: Sequence[PromptExample],
    backend: Callable[[str], str],
    backend_name: str = "backend",
    dataset_name: str = "dataset",
) -> EvalReport:
    """score_pair over every example; backend exceptions are recorded, never raised."""
    if not dataset:
        raise ValueError("dataset must be non-empty")
    scores: list[PairScore] = []
    failures: list[tuple[int, str]] = []
    for index, example in enumerate(dataset):
        gold = [parse_axiom(line) for line in example.completion.splitlines() if line.strip()]
        try:
            raw: Optional[str] = backend(example.prompt)
        except Exception as error:  # noqa: BLE001 - any backend failure is a data point
            failures.append((index, f"{type(error).__name__}: {error}"))
            raw = None
        if raw is None:
            scores.append(PairScore(False, 0.0, 0.0, 0.0, 0.0, True))
        else:
            scores.append(score_pair(gold, raw))
    created = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    return EvalReport(tuple(scores), tuple(failures), backend_name, dataset_name, created)
