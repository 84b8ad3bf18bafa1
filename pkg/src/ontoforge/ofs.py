"""OWL Functional Syntax subset: AST, parser, serializer, structural equality.

Axioms: Declaration, ClassAssertion, SubClassOf, DisjointClasses,
EquivalentClasses, ObjectPropertyAssertion, NegativeObjectPropertyAssertion,
ObjectPropertyDomain, ObjectPropertyRange, SubObjectPropertyOf,
SymmetricObjectProperty, AsymmetricObjectProperty.

Class expressions: named classes plus ObjectComplementOf,
ObjectIntersectionOf, ObjectSomeValuesFrom, ObjectAllValuesFrom and the
exact/min/max cardinality restrictions.

Everything in this module is an immutable value; there is no file I/O and
no shared state, so all functions are safe for unrestricted concurrent use.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping, Optional, Sequence, Union

MAX_CARDINALITY = 2**31 - 1
DEFAULT_PREFIX_IRI = "http://example.org/ontology#"

_LOCAL_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Kind(Enum):
    CLASS = "Class"
    OBJECT_PROPERTY = "ObjectProperty"
    NAMED_INDIVIDUAL = "NamedIndividual"


class ParseError(ValueError):
    """Malformed Functional Syntax input."""

    def __init__(self, position: int, message: str):
        super().__init__(f"at offset {position}: {message}")
        self.position = position
        self.reason = message


class UnknownConstructor(ParseError):
    """A constructor outside the supported subset (or not OWL at all)."""


class MissingOntologyWrapper(ParseError):
    """Document input without an ``Ontology(...)`` block."""


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EntityName:
    """A named entity; serialized with the default prefix, e.g. ``:has_sister``."""

    local: str
    kind: Kind

    def __post_init__(self) -> None:
        if not _LOCAL_NAME_RE.match(self.local):
            raise ValueError(f"illegal entity name {self.local!r}")


@dataclass(frozen=True)
class ComplementOf:
    operand: "ClassExpr"


@dataclass(frozen=True)
class IntersectionOf:
    operands: tuple["ClassExpr", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "operands", tuple(self.operands))
        if len(self.operands) < 2:
            raise ValueError("ObjectIntersectionOf needs at least two operands")


@dataclass(frozen=True)
class SomeValuesFrom:
    prop: EntityName
    filler: "ClassExpr"


@dataclass(frozen=True)
class AllValuesFrom:
    prop: EntityName
    filler: "ClassExpr"


@dataclass(frozen=True)
class Cardinality:
    n: int
    prop: EntityName
    filler: Optional["ClassExpr"] = None

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_CARDINALITY:
            raise ValueError(f"cardinality {self.n} out of range")


@dataclass(frozen=True)
class ExactCardinality(Cardinality):
    _keyword = "ObjectExactCardinality"


@dataclass(frozen=True)
class MinCardinality(Cardinality):
    _keyword = "ObjectMinCardinality"


@dataclass(frozen=True)
class MaxCardinality(Cardinality):
    _keyword = "ObjectMaxCardinality"


ClassExpr = Union[
    EntityName,
    ComplementOf,
    IntersectionOf,
    SomeValuesFrom,
    AllValuesFrom,
    ExactCardinality,
    MinCardinality,
    MaxCardinality,
]


@dataclass(frozen=True)
class Declaration:
    entity: EntityName


@dataclass(frozen=True)
class ClassAssertion:
    ce: ClassExpr
    individual: EntityName


@dataclass(frozen=True)
class SubClassOf:
    sub: ClassExpr
    sup: ClassExpr


class _NaryAxiom:
    """Shared equality for axioms whose operand order is semantically irrelevant.

    Equality and hashing sort the operands by their serialized text;
    serialization itself preserves the stored order.
    """

    operands: tuple[ClassExpr, ...]

    def _key(self) -> tuple[str, ...]:
        return tuple(sorted(serialize_class_expr(op) for op in self.operands))

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and self._key() == other._key()  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._key()))


@dataclass(frozen=True, eq=False)
class DisjointClasses(_NaryAxiom):
    operands: tuple[ClassExpr, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "operands", tuple(self.operands))
        if len(self.operands) < 2:
            raise ValueError("DisjointClasses needs at least two operands")


@dataclass(frozen=True, eq=False)
class EquivalentClasses(_NaryAxiom):
    operands: tuple[ClassExpr, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "operands", tuple(self.operands))
        if len(self.operands) < 2:
            raise ValueError("EquivalentClasses needs at least two operands")


@dataclass(frozen=True)
class ObjectPropertyAssertion:
    prop: EntityName
    subject: EntityName
    object: EntityName


@dataclass(frozen=True)
class NegativeObjectPropertyAssertion:
    prop: EntityName
    subject: EntityName
    object: EntityName


@dataclass(frozen=True)
class ObjectPropertyDomain:
    prop: EntityName
    ce: ClassExpr


@dataclass(frozen=True)
class ObjectPropertyRange:
    prop: EntityName
    ce: ClassExpr


@dataclass(frozen=True)
class SubObjectPropertyOf:
    sub: EntityName
    sup: EntityName


@dataclass(frozen=True)
class SymmetricObjectProperty:
    prop: EntityName


@dataclass(frozen=True)
class AsymmetricObjectProperty:
    prop: EntityName


Axiom = Union[
    Declaration,
    ClassAssertion,
    SubClassOf,
    DisjointClasses,
    EquivalentClasses,
    ObjectPropertyAssertion,
    NegativeObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    SubObjectPropertyOf,
    SymmetricObjectProperty,
    AsymmetricObjectProperty,
]


@dataclass(frozen=True)
class OntologyDocument:
    """File-level wrapper: prefix declarations plus one ``Ontology(...)`` block."""

    prefixes: tuple[tuple[str, str], ...] = ()
    ontology_iri: Optional[str] = None
    axioms: tuple[Axiom, ...] = ()


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def serialize_entity(entity: EntityName) -> str:
    return ":" + entity.local


def serialize_class_expr(ce: ClassExpr) -> str:
    if isinstance(ce, EntityName):
        return serialize_entity(ce)
    if isinstance(ce, ComplementOf):
        return f"ObjectComplementOf({serialize_class_expr(ce.operand)})"
    if isinstance(ce, IntersectionOf):
        inner = " ".join(serialize_class_expr(op) for op in ce.operands)
        return f"ObjectIntersectionOf({inner})"
    if isinstance(ce, SomeValuesFrom):
        return f"ObjectSomeValuesFrom({serialize_entity(ce.prop)} {serialize_class_expr(ce.filler)})"
    if isinstance(ce, AllValuesFrom):
        return f"ObjectAllValuesFrom({serialize_entity(ce.prop)} {serialize_class_expr(ce.filler)})"
    if isinstance(ce, Cardinality):
        parts = [str(ce.n), serialize_entity(ce.prop)]
        if ce.filler is not None:
            parts.append(serialize_class_expr(ce.filler))
        return f"{ce._keyword}({' '.join(parts)})"
    raise TypeError(f"not a class expression: {ce!r}")


def serialize_axiom(axiom: Axiom) -> str:
    if isinstance(axiom, Declaration):
        return f"Declaration({axiom.entity.kind.value}({serialize_entity(axiom.entity)}))"
    if isinstance(axiom, ClassAssertion):
        return f"ClassAssertion({serialize_class_expr(axiom.ce)} {serialize_entity(axiom.individual)})"
    if isinstance(axiom, SubClassOf):
        return f"SubClassOf({serialize_class_expr(axiom.sub)} {serialize_class_expr(axiom.sup)})"
    if isinstance(axiom, DisjointClasses):
        return f"DisjointClasses({' '.join(serialize_class_expr(op) for op in axiom.operands)})"
    if isinstance(axiom, EquivalentClasses):
        return f"EquivalentClasses({' '.join(serialize_class_expr(op) for op in axiom.operands)})"
    if isinstance(axiom, ObjectPropertyAssertion):
        return (f"ObjectPropertyAssertion({serialize_entity(axiom.prop)} "
                f"{serialize_entity(axiom.subject)} {serialize_entity(axiom.object)})")
    if isinstance(axiom, NegativeObjectPropertyAssertion):
        return (f"NegativeObjectPropertyAssertion({serialize_entity(axiom.prop)} "
                f"{serialize_entity(axiom.subject)} {serialize_entity(axiom.object)})")
    if isinstance(axiom, ObjectPropertyDomain):
        return f"ObjectPropertyDomain({serialize_entity(axiom.prop)} {serialize_class_expr(axiom.ce)})"
    if isinstance(axiom, ObjectPropertyRange):
        return f"ObjectPropertyRange({serialize_entity(axiom.prop)} {serialize_class_expr(axiom.ce)})"
    if isinstance(axiom, SubObjectPropertyOf):
        return f"SubObjectPropertyOf({serialize_entity(axiom.sub)} {serialize_entity(axiom.sup)})"
    if isinstance(axiom, SymmetricObjectProperty):
        return f"SymmetricObjectProperty({serialize_entity(axiom.prop)})"
    if isinstance(axiom, AsymmetricObjectProperty):
        return f"AsymmetricObjectProperty({serialize_entity(axiom.prop)})"
    raise TypeError(f"not an axiom: {axiom!r}")


def normalize_axiom(axiom: Axiom) -> Axiom:
    """Return the equality representative: n-ary operands sorted lexicographically."""
    if isinstance(axiom, (DisjointClasses, EquivalentClasses)):
        ordered = tuple(sorted(axiom.operands, key=serialize_class_expr))
        return type(axiom)(ordered)
    return axiom


_VARIANT_RANK: dict[type, int] = {
    ClassAssertion: 0,
    SubClassOf: 1,
    DisjointClasses: 2,
    EquivalentClasses: 3,
    ObjectPropertyAssertion: 4,
    NegativeObjectPropertyAssertion: 5,
    ObjectPropertyDomain: 6,
    ObjectPropertyRange: 7,
    SubObjectPropertyOf: 8,
    SymmetricObjectProperty: 9,
    AsymmetricObjectProperty: 10,
}

_KIND_RANK = {Kind.CLASS: 0, Kind.OBJECT_PROPERTY: 1, Kind.NAMED_INDIVIDUAL: 2}


def canonical_set(axioms: Sequence[Axiom]) -> frozenset:
    """Deduplicate under structural equality, with n-ary operand order normalized."""
    return frozenset(normalize_axiom(a) for a in axioms)


def serialize(axioms: Sequence[Axiom], canonical: bool = False) -> str:
    """One axiom per line.

    ``canonical=False`` keeps input order and stored operand order.
    ``canonical=True`` deduplicates and orders: Class declarations, then
    ObjectProperty declarations, then NamedIndividual declarations (each
    alphabetical), then logical axioms by (variant rank, serialized text).
    """
    if not canonical:
        return "\n".join(serialize_axiom(a) for a in axioms)

    unique = canonical_set(axioms)
    decls = sorted(
        (a for a in unique if isinstance(a, Declaration)),
        key=lambda a: (_KIND_RANK[a.entity.kind], a.entity.local),
    )
    logical = sorted(
        ((type(a), serialize_axiom(a)) for a in unique if not isinstance(a, Declaration)),
        key=lambda pair: (_VARIANT_RANK[pair[0]], pair[1]),
    )
    lines = [serialize_axiom(a) for a in decls] + [text for _, text in logical]
    return "\n".join(lines)


def serialize_document(doc: OntologyDocument) -> str:
    """Render a document; the default prefix is always emitted."""
    prefixes = list(doc.prefixes)
    if not any(name == "" for name, _ in prefixes):
        prefixes.insert(0, ("", DEFAULT_PREFIX_IRI))
    lines = [f"Prefix({name}:=<{iri}>)" for name, iri in prefixes]
    header = "Ontology(" if doc.ontology_iri is None else f"Ontology(<{doc.ontology_iri}>"
    lines.append(header)
    lines.extend(serialize_axiom(a) for a in doc.axioms)
    lines.append(")")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Entity uses and well-formedness
# ---------------------------------------------------------------------------

def _class_expr_uses(ce: ClassExpr) -> Iterator[EntityName]:
    if isinstance(ce, EntityName):
        yield ce
    elif isinstance(ce, ComplementOf):
        yield from _class_expr_uses(ce.operand)
    elif isinstance(ce, IntersectionOf):
        for op in ce.operands:
            yield from _class_expr_uses(op)
    elif isinstance(ce, (SomeValuesFrom, AllValuesFrom)):
        yield ce.prop
        yield from _class_expr_uses(ce.filler)
    elif isinstance(ce, Cardinality):
        yield ce.prop
        if ce.filler is not None:
            yield from _class_expr_uses(ce.filler)
    else:
        raise TypeError(f"not a class expression: {ce!r}")


def entity_uses(axiom: Axiom) -> list[EntityName]:
    """All entity occurrences of a logical axiom, with their positional kinds.

    A Declaration declares rather than uses; it yields nothing.
    """
    if isinstance(axiom, Declaration):
        return []
    if isinstance(axiom, ClassAssertion):
        return [*_class_expr_uses(axiom.ce), axiom.individual]
    if isinstance(axiom, SubClassOf):
        return [*_class_expr_uses(axiom.sub), *_class_expr_uses(axiom.sup)]
    if isinstance(axiom, (DisjointClasses, EquivalentClasses)):
        return [u for op in axiom.operands for u in _class_expr_uses(op)]
    if isinstance(axiom, (ObjectPropertyAssertion, NegativeObjectPropertyAssertion)):
        return [axiom.prop, axiom.subject, axiom.object]
    if isinstance(axiom, (ObjectPropertyDomain, ObjectPropertyRange)):
        return [axiom.prop, *_class_expr_uses(axiom.ce)]
    if isinstance(axiom, SubObjectPropertyOf):
        return [axiom.sub, axiom.sup]
    if isinstance(axiom, (SymmetricObjectProperty, AsymmetricObjectProperty)):
        return [axiom.prop]
    raise TypeError(f"not an axiom: {axiom!r}")


def declared_entity(axiom: Axiom) -> Optional[EntityName]:
    return axiom.entity if isinstance(axiom, Declaration) else None


def well_formedness_problem(
    axiom: Axiom, declared: Mapping[str, set[Kind]]
) -> Optional[tuple[str, str]]:
    """Check a logical axiom against a name->kinds map.

    Returns ``None`` when fine, else ``("ill-typed", msg)`` when a use
    contradicts a declared kind, or ``("undeclared", msg)`` when an entity is
    declared nowhere.  Kind mismatches win over missing declarations.
    """
    undeclared: list[EntityName] = []
    for use in entity_uses(axiom):
        kinds = declared.get(use.local)
        if kinds is None:
            undeclared.append(use)
        elif use.kind not in kinds:
            have = "/".join(sorted(k.value for k in kinds))
            return ("ill-typed", f"':{use.local}' used as {use.kind.value} but declared as {have}")
    if undeclared:
        names = ", ".join(f"':{u.local}'" for u in undeclared)
        return ("undeclared", f"{names} not declared")
    return None


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

_AXIOM_KEYWORDS = frozenset({
    "Declaration", "ClassAssertion", "SubClassOf", "DisjointClasses",
    "EquivalentClasses", "ObjectPropertyAssertion",
    "NegativeObjectPropertyAssertion", "ObjectPropertyDomain",
    "ObjectPropertyRange", "SubObjectPropertyOf", "SymmetricObjectProperty",
    "AsymmetricObjectProperty",
})

_CLASS_EXPR_KEYWORDS = frozenset({
    "ObjectComplementOf", "ObjectIntersectionOf", "ObjectSomeValuesFrom",
    "ObjectAllValuesFrom", "ObjectExactCardinality", "ObjectMinCardinality",
    "ObjectMaxCardinality",
})

# Constructors that belong to OWL 2 Functional Syntax but not to this subset.
_FOREIGN_OWL_KEYWORDS = frozenset({
    "AnnotationAssertion", "AnnotationPropertyDomain", "AnnotationPropertyRange",
    "DataAllValuesFrom", "DataExactCardinality", "DataHasValue",
    "DataMaxCardinality", "DataMinCardinality", "DataPropertyAssertion",
    "DataPropertyDomain", "DataPropertyRange", "DataSomeValuesFrom",
    "DatatypeDefinition", "DifferentIndividuals", "DisjointDataProperties",
    "DisjointObjectProperties", "DisjointUnion", "EquivalentDataProperties",
    "EquivalentObjectProperties", "FunctionalDataProperty",
    "FunctionalObjectProperty", "HasKey", "Import",
    "InverseFunctionalObjectProperty", "InverseObjectProperties",
    "IrreflexiveObjectProperty", "NegativeDataPropertyAssertion",
    "ObjectHasSelf", "ObjectHasValue", "ObjectInverseOf", "ObjectOneOf",
    "ObjectPropertyChain", "ObjectUnionOf", "ReflexiveObjectProperty",
    "SameIndividual", "SubAnnotationPropertyOf", "SubDataPropertyOf",
    "TransitiveObjectProperty",
})


@dataclass(frozen=True)
class _Token:
    kind: str  # "(", ")", "=", ":", "word", "name", "number", "iri", "eof"
    text: str
    pos: int


class _Lexer:
    """Pulls one token at a time so errors surface in document order."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def next(self) -> _Token:
        text, n = self.text, len(self.text)
        i = self.pos
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            self.pos = i
            return _Token("eof", "", i)
        start = i
        c = text[i]
        if c in "()=":
            self.pos = i + 1
            return _Token(c, c, start)
        if c == "<":
            j = text.find(">", i + 1)
            if j < 0:
                raise ParseError(start, "unterminated IRI (missing '>')")
            self.pos = j + 1
            return _Token("iri", text[i + 1:j], start)
        if c == ":":
            j = i + 1
            if j < n and (text[j].isalpha()):
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.pos = j
                return _Token("name", text[i + 1:j], start)
            self.pos = i + 1
            return _Token(":", ":", start)
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            self.pos = j
            return _Token("number", text[i:j], start)
        if c.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            self.pos = j
            return _Token("word", text[i:j], start)
        raise ParseError(start, f"unexpected character {c!r}")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self._lexer = _Lexer(text)
        self.tok = self._lexer.next()

    def _advance(self) -> _Token:
        tok = self.tok
        self.tok = self._lexer.next()
        return tok

    def _expect(self, kind: str, what: str) -> _Token:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            raise ParseError(self.tok.pos, f"expected {what}, found {found!r}")
        return self._advance()

    def _entity(self, kind: Kind) -> EntityName:
        tok = self._expect("name", f"a {kind.value} name like ':x'")
        return EntityName(tok.text, kind)

    def _number(self) -> int:
        tok = self._expect("number", "a non-negative integer")
        value = int(tok.text)
        if value > MAX_CARDINALITY:
            raise ParseError(tok.pos, f"cardinality {value} exceeds {MAX_CARDINALITY}")
        return value

    # -- class expressions --------------------------------------------------

    def _class_expr(self) -> ClassExpr:
        tok = self.tok
        if tok.kind == "name":
            self._advance()
            return EntityName(tok.text, Kind.CLASS)
        if tok.kind != "word":
            found = tok.text or "end of input"
            raise ParseError(tok.pos, f"expected a class expression, found {found!r}")
        word = tok.text
        if word not in _CLASS_EXPR_KEYWORDS:
            if word in _AXIOM_KEYWORDS:
                raise ParseError(tok.pos, f"'{word}' is an axiom, not a class expression")
            raise UnknownConstructor(tok.pos, f"unknown class expression constructor '{word}'")
        self._advance()
        self._expect("(", "'('")
        if word == "ObjectComplementOf":
            ce: ClassExpr = ComplementOf(self._class_expr())
        elif word == "ObjectIntersectionOf":
            ops = [self._class_expr(), self._class_expr()]
            while self.tok.kind != ")":
                ops.append(self._class_expr())
            ce = IntersectionOf(tuple(ops))
        elif word in ("ObjectSomeValuesFrom", "ObjectAllValuesFrom"):
            prop = self._entity(Kind.OBJECT_PROPERTY)
            filler = self._class_expr()
            ce = (SomeValuesFrom if word == "ObjectSomeValuesFrom" else AllValuesFrom)(prop, filler)
        else:
            n = self._number()
            prop = self._entity(Kind.OBJECT_PROPERTY)
            filler = None if self.tok.kind == ")" else self._class_expr()
            cls = {
                "ObjectExactCardinality": ExactCardinality,
                "ObjectMinCardinality": MinCardinality,
                "ObjectMaxCardinality": MaxCardinality,
            }[word]
            ce = cls(n, prop, filler)
        self._expect(")", "')'")
        return ce

    # -- axioms --------------------------------------------------------------

    def axiom(self) -> Axiom:
        tok = self.tok
        if tok.kind != "word":
            found = tok.text or "end of input"
            raise ParseError(tok.pos, f"expected an axiom constructor, found {found!r}")
        word = tok.text
        if word not in _AXIOM_KEYWORDS:
            if word in _FOREIGN_OWL_KEYWORDS:
                raise UnknownConstructor(tok.pos, f"constructor '{word}' is outside the supported subset")
            if word in _CLASS_EXPR_KEYWORDS:
                raise UnknownConstructor(tok.pos, f"'{word}' is a class expression, not an axiom")
            raise UnknownConstructor(tok.pos, f"unknown constructor '{word}'")
        self._advance()
        self._expect("(", "'('")
        axiom = getattr(self, "_axiom_" + word)()
        self._expect(")", "')'")
        return axiom

    def _axiom_Declaration(self) -> Declaration:
        tok = self._expect("word", "'Class', 'ObjectProperty' or 'NamedIndividual'")
        try:
            kind = Kind(tok.text)
        except ValueError:
            raise ParseError(tok.pos, f"unknown entity kind '{tok.text}'") from None
        self._expect("(", "'('")
        entity = self._entity(kind)
        self._expect(")", "')'")
        return Declaration(entity)

    def _axiom_ClassAssertion(self) -> ClassAssertion:
        ce = self._class_expr()
        individual = self._entity(Kind.NAMED_INDIVIDUAL)
        return ClassAssertion(ce, individual)

    def _axiom_SubClassOf(self) -> SubClassOf:
        return SubClassOf(self._class_expr(), self._class_expr())

    def _nary(self) -> tuple[ClassExpr, ...]:
        ops = [self._class_expr(), self._class_expr()]
        while self.tok.kind != ")":
            ops.append(self._class_expr())
        return tuple(ops)

    def _axiom_DisjointClasses(self) -> DisjointClasses:
        return DisjointClasses(self._nary())

    def _axiom_EquivalentClasses(self) -> EquivalentClasses:
        return EquivalentClasses(self._nary())

    def _prop_pair(self) -> tuple[EntityName, EntityName, EntityName]:
        prop = self._entity(Kind.OBJECT_PROPERTY)
        subject = self._entity(Kind.NAMED_INDIVIDUAL)
        obj = self._entity(Kind.NAMED_INDIVIDUAL)
        return prop, subject, obj

    def _axiom_ObjectPropertyAssertion(self) -> ObjectPropertyAssertion:
        return ObjectPropertyAssertion(*self._prop_pair())

    def _axiom_NegativeObjectPropertyAssertion(self) -> NegativeObjectPropertyAssertion:
        return NegativeObjectPropertyAssertion(*self._prop_pair())

    def _axiom_ObjectPropertyDomain(self) -> ObjectPropertyDomain:
        return ObjectPropertyDomain(self._entity(Kind.OBJECT_PROPERTY), self._class_expr())

    def _axiom_ObjectPropertyRange(self) -> ObjectPropertyRange:
        return ObjectPropertyRange(self._entity(Kind.OBJECT_PROPERTY), self._class_expr())

    def _axiom_SubObjectPropertyOf(self) -> SubObjectPropertyOf:
        return SubObjectPropertyOf(self._entity(Kind.OBJECT_PROPERTY),
                                   self._entity(Kind.OBJECT_PROPERTY))

    def _axiom_SymmetricObjectProperty(self) -> SymmetricObjectProperty:
        return SymmetricObjectProperty(self._entity(Kind.OBJECT_PROPERTY))

    def _axiom_AsymmetricObjectProperty(self) -> AsymmetricObjectProperty:
        return AsymmetricObjectProperty(self._entity(Kind.OBJECT_PROPERTY))

    # -- documents -----------------------------------------------------------

    def document(self) -> OntologyDocument:
        prefixes: list[tuple[str, str]] = []
        while self.tok.kind == "word" and self.tok.text == "Prefix":
            self._advance()
            self._expect("(", "'('")
            pname = ""
            if self.tok.kind == "word":
                pname = self._advance().text
            self._expect(":", "':'")
            self._expect("=", "'='")
            iri = self._expect("iri", "an IRI in angle brackets")
            self._expect(")", "')'")
            prefixes.append((pname, iri.text))
        if not (self.tok.kind == "word" and self.tok.text == "Ontology"):
            raise MissingOntologyWrapper(self.tok.pos, "expected 'Ontology('")
        self._advance()
        self._expect("(", "'('")
        iri_text: Optional[str] = None
        if self.tok.kind == "iri":
            iri_text = self._advance().text
        axioms: list[Axiom] = []
        while self.tok.kind != ")":
            if self.tok.kind == "eof":
                raise ParseError(self.tok.pos, "expected ')' to close Ontology(")
            axioms.append(self.axiom())
        self._advance()
        self._expect_eof()
        return OntologyDocument(tuple(prefixes), iri_text, tuple(axioms))

    def _expect_eof(self) -> None:
        if self.tok.kind != "eof":
            raise ParseError(self.tok.pos, f"unexpected trailing input {self.tok.text!r}")


def parse_axiom(text: str) -> Axiom:
    """Parse exactly one axiom; surrounding whitespace allowed."""
    parser = _Parser(text)
    axiom = parser.axiom()
    parser._expect_eof()
    return axiom


def parse_document(text: str) -> OntologyDocument:
    """Parse a full document: ``Prefix(...)`` declarations then ``Ontology(...)``."""
    return _Parser(text).document()
