"""Seeded random axiom generator for round-trip and property tests."""
from __future__ import annotations

import random

from ontoforge.ofs import (
    AllValuesFrom,
    AsymmetricObjectProperty,
    Axiom,
    ClassAssertion,
    ClassExpr,
    ComplementOf,
    Declaration,
    DisjointClasses,
    EntityName,
    EquivalentClasses,
    ExactCardinality,
    IntersectionOf,
    Kind,
    MAX_CARDINALITY,
    MaxCardinality,
    MinCardinality,
    NegativeObjectPropertyAssertion,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    SymmetricObjectProperty,
)

_CLASS_POOL = ["girl", "flower", "rose", "animal", "fire_truck", "x9", "a", "Big_Thing"]
_PROP_POOL = ["owns", "has_sister", "eats", "knows", "is_a_fan_of", "p1"]
_IND_POOL = ["Anna", "Britney_Spears", "Mia", "x", "Nola", "I42"]


def _cls(rng: random.Random) -> EntityName:
    return EntityName(rng.choice(_CLASS_POOL), Kind.CLASS)


def _prop(rng: random.Random) -> EntityName:
    return EntityName(rng.choice(_PROP_POOL), Kind.OBJECT_PROPERTY)


def _ind(rng: random.Random) -> EntityName:
    return EntityName(rng.choice(_IND_POOL), Kind.NAMED_INDIVIDUAL)


def _count(rng: random.Random) -> int:
    return rng.choice([0, 1, 2, 3, 17, MAX_CARDINALITY])


def random_class_expr(rng: random.Random, depth: int) -> ClassExpr:
    if depth <= 0:
        return _cls(rng)
    pick = rng.randrange(8)
    if pick == 0:
        return _cls(rng)
    if pick == 1:
        return ComplementOf(random_class_expr(rng, depth - 1))
    if pick == 2:
        ops = tuple(random_class_expr(rng, depth - 1) for _ in range(rng.randint(2, 3)))
        return IntersectionOf(ops)
    if pick == 3:
        return SomeValuesFrom(_prop(rng), random_class_expr(rng, depth - 1))
    if pick == 4:
        return AllValuesFrom(_prop(rng), random_class_expr(rng, depth - 1))
    cls = (ExactCardinality, MinCardinality, MaxCardinality)[pick - 5]
    filler = random_class_expr(rng, depth - 1) if rng.random() < 0.7 else None
    return cls(_count(rng), _prop(rng), filler)


def random_axiom(rng: random.Random, depth: int = 4) -> Axiom:
    pick = rng.randrange(12)
    if pick == 0:
        kind = rng.choice(list(Kind))
        pool = {Kind.CLASS: _cls, Kind.OBJECT_PROPERTY: _prop, Kind.NAMED_INDIVIDUAL: _ind}
        return Declaration(pool[kind](rng))
    if pick == 1:
        return ClassAssertion(random_class_expr(rng, depth - 1), _ind(rng))
    if pick == 2:
        return SubClassOf(random_class_expr(rng, depth - 1), random_class_expr(rng, depth - 1))
    if pick == 3:
        ops = tuple(random_class_expr(rng, depth - 1) for _ in range(rng.randint(2, 3)))
        return DisjointClasses(ops)
    if pick == 4:
        ops = tuple(random_class_expr(rng, depth - 1) for _ in range(rng.randint(2, 3)))
        return EquivalentClasses(ops)
    if pick == 5:
        return ObjectPropertyAssertion(_prop(rng), _ind(rng), _ind(rng))
    if pick == 6:
        return NegativeObjectPropertyAssertion(_prop(rng), _ind(rng), _ind(rng))
    if pick == 7:
        return ObjectPropertyDomain(_prop(rng), random_class_expr(rng, depth - 1))
    if pick == 8:
        return ObjectPropertyRange(_prop(rng), random_class_expr(rng, depth - 1))
    if pick == 9:
        return SubObjectPropertyOf(_prop(rng), _prop(rng))
    if pick == 10:
        return SymmetricObjectProperty(_prop(rng))
    return AsymmetricObjectProperty(_prop(rng))
