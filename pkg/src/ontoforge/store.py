"""Active-ontology state: staging classification and supervised commit.

An Ontology is an immutable snapshot (axiom set + revision counter); staging
classifies incoming axioms against a snapshot without touching it, and commit
produces the next snapshot.  Snapshots can be shared freely across threads;
callers serialize commits per ontology (the service layer holds one lock per
session).
"""
from __future__ import annotations

import time
import uuid
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .ofs import (
    Axiom,
    ClassAssertion,
    Declaration,
    DEFAULT_PREFIX_IRI,
    EntityName,
    Kind,
    ObjectPropertyAssertion,
    OntologyDocument,
    canonical_set,
    declared_entity,
    normalize_axiom,
    parse_document,
    serialize,
    well_formedness_problem,
)


class KindConflict(ValueError):
    """One local name declared under two different kinds."""

    def __init__(self, name: str):
        super().__init__(f"':{name}' is declared under more than one kind")
        self.name = name


class StaleStage(RuntimeError):
    """The ontology moved in a way that invalidates a staged decision."""


class IllegalAccept(ValueError):
    """Attempt to accept a Conflict/Invalid item (or a nonexistent index)."""


class Status(Enum):
    NEW = "new"
    DUPLICATE = "duplicate"
    CONFLICT = "conflict"
    INVALID = "invalid"


@dataclass(frozen=True)
class Ontology:
    axioms: frozenset = frozenset()
    revision: int = 0

    @staticmethod
    def empty() -> "Ontology":
        return Ontology()

    @classmethod
    def from_axioms(cls, axioms: Iterable[Axiom], revision: int = 0) -> "Ontology":
        """Deduplicate and verify kind uniqueness; raises KindConflict."""
        unique = canonical_set(list(axioms))
        seen: dict[str, Kind] = {}
        for axiom in unique:
            entity = declared_entity(axiom)
            if entity is None:
                continue
            if seen.setdefault(entity.local, entity.kind) != entity.kind:
                raise KindConflict(entity.local)
        return cls(unique, revision)

    def signature(self) -> dict[str, Kind]:
        """Name -> kind for every declared entity."""
        return {
            axiom.entity.local: axiom.entity.kind
            for axiom in self.axioms
            if isinstance(axiom, Declaration)
        }


@dataclass(frozen=True)
class StagedItem:
    axiom: Axiom
    status: Status
    detail: str = ""


@dataclass(frozen=True)
class StagedChange:
    id: str
    sentence: str
    items: tuple[StagedItem, ...]
    base_revision: int
    created_at: float = field(default_factory=time.time)


@dataclass(frozen=True)
class MergeReport:
    added: int
    skipped_duplicates: int
    rejected: int
    new_revision: int


def stage(ontology: Ontology, axioms: Sequence[Axiom], sentence: str) -> StagedChange:
    """Classify axioms against the ontology; never mutates it.

    New: not present and well formed.  Duplicate: already in the axiom set.
    Conflict: a declaration reusing a known name under a different kind
    (known = ontology signature plus earlier declarations in this batch).
    Invalid: a logical axiom that is ill-typed or references an entity
    declared neither in the batch nor in the ontology.
    """
    signature = ontology.signature()
    local: dict[str, Kind] = {}
    conflicts: dict[int, str] = {}
    for index, axiom in enumerate(axioms):
        entity = declared_entity(axiom)
        if entity is None:
            continue
        existing = signature.get(entity.local, local.get(entity.local))
        if existing is not None and existing != entity.kind:
            conflicts[index] = f"':{entity.local}' is already declared as {existing.value}"
        else:
            local.setdefault(entity.local, entity.kind)

    declared = {name: {kind} for name, kind in signature.items()}
    for name, kind in local.items():
        declared.setdefault(name, set()).add(kind)

    items = []
    for index, axiom in enumerate(axioms):
        if axiom in ontology.axioms:
            items.append(StagedItem(axiom, Status.DUPLICATE, "already present in the ontology"))
        elif index in conflicts:
            items.append(StagedItem(axiom, Status.CONFLICT, conflicts[index]))
        else:
            problem = well_formedness_problem(axiom, declared)
            if problem is not None:
                items.append(StagedItem(axiom, Status.INVALID, f"{problem[0]}: {problem[1]}"))
            else:
                items.append(StagedItem(axiom, Status.NEW))
    return StagedChange(uuid.uuid4().hex, sentence, tuple(items), ontology.revision)


def commit(
    ontology: Ontology, staged: StagedChange, accepted: Iterable[int]
) -> tuple[Ontology, MergeReport]:
    """Insert the accepted items and report what happened.

    Accepted items are re-checked against the current snapshot, so accepted
    "new" axioms that arrived through another stage in the meantime count as
    skipped duplicates and recommitting a stage is a no-op.  StaleStage is
    raised when the decision can no longer be applied at all: the stage
    claims a future revision, or an accepted declaration's name has since
    been taken by a different kind.
    """
    indices = sorted(set(accepted))
    for index in indices:
        if not 0 <= index < len(staged.items):
            raise IllegalAccept(f"no staged item with index {index}")
        item = staged.items[index]
        if item.status in (Status.CONFLICT, Status.INVALID):
            raise IllegalAccept(
                f"item {index} is {item.status.value} and cannot be accepted: {item.detail}"
            )
    if staged.base_revision > ontology.revision:
        raise StaleStage(
            f"stage was taken at revision {staged.base_revision}, "
            f"ontology is at {ontology.revision}"
        )

    axioms = set(ontology.axioms)
    signature = ontology.signature()
    added = 0
    skipped = 0
    for index in indices:
        normalized = normalize_axiom(staged.items[index].axiom)
        if normalized in axioms:
            skipped += 1
            continue
        entity = declared_entity(normalized)
        if entity is not None:
            existing = signature.get(entity.local)
            if existing is not None and existing != entity.kind:
                raise StaleStage(
                    f"':{entity.local}' was declared as {existing.value} after staging"
                )
            signature[entity.local] = entity.kind
        axioms.add(normalized)
        added += 1

    rejected = len(staged.items) - len(indices)
    revision = ontology.revision + 1 if added else ontology.revision
    report = MergeReport(added, skipped, rejected, revision)
    return Ontology(frozenset(axioms), revision), report


def signature_of(ontology: Ontology) -> dict[Kind, list[str]]:
    """Declared names partitioned by kind, each list sorted."""
    listing: dict[Kind, list[str]] = {kind: [] for kind in Kind}
    for name, kind in ontology.signature().items():
        listing[kind].append(name)
    for names in listing.values():
        names.sort()
    return listing


def class_members(ontology: Ontology) -> dict[str, list[str]]:
    """Class name -> sorted individuals asserted into it (named classes only)."""
    members: dict[str, set[str]] = {}
    for axiom in ontology.axioms:
        if isinstance(axiom, ClassAssertion) and isinstance(axiom.ce, EntityName):
            members.setdefault(axiom.ce.local, set()).add(axiom.individual.local)
    return {name: sorted(inds) for name, inds in sorted(members.items())}


def property_assertions(ontology: Ontology) -> dict[str, list[tuple[str, str]]]:
    """Property name -> sorted (subject, object) pairs asserted with it."""
    pairs: dict[str, set[tuple[str, str]]] = {}
    for axiom in ontology.axioms:
        if isinstance(axiom, ObjectPropertyAssertion):
            pairs.setdefault(axiom.prop.local, set()).add(
                (axiom.subject.local, axiom.object.local)
            )
    return {name: sorted(ps) for name, ps in sorted(pairs.items())}


def save_document(ontology: Ontology) -> str:
    """Canonical `.ofn` text: default prefix, Ontology wrapper, one axiom per line."""
    lines = [f"Prefix(:=<{DEFAULT_PREFIX_IRI}>)", "Ontology("]
    body = serialize(list(ontology.axioms), canonical=True)
    if body:
        lines.append(body)
    lines.append(")")
    return "\n".join(lines) + "\n"


def load_document(text: str) -> Ontology:
    """Parse `.ofn` text into a deduplicated revision-0 ontology."""
    document: OntologyDocument = parse_document(text)
    return Ontology.from_axioms(document.axioms)
