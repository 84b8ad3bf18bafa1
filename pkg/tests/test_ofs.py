import itertools
import random

import pytest

from ontoforge import corpus
from ontoforge.ofs import (
    ClassAssertion,
    ComplementOf,
    Declaration,
    EntityName,
    ExactCardinality,
    Kind,
    MissingOntologyWrapper,
    ParseError,
    SubClassOf,
    UnknownConstructor,
    canonical_set,
    parse_axiom,
    parse_document,
    serialize,
    serialize_axiom,
    serialize_document,
)

from axiom_gen import random_axiom

GIRL = EntityName("girl", Kind.CLASS)
ANNA = EntityName("Anna", Kind.NAMED_INDIVIDUAL)


class TestParseAxiom:
    def test_class_assertion(self):
        assert parse_axiom("ClassAssertion(:girl :Anna)") == ClassAssertion(GIRL, ANNA)

    def test_minimal_declaration(self):
        assert parse_axiom("Declaration(Class(:x))") == Declaration(EntityName("x", Kind.CLASS))

    def test_unknown_constructor_position(self):
        with pytest.raises(UnknownConstructor) as exc:
            parse_axiom("is(Anna, girl)")
        assert exc.value.position == 0
        assert "is" in str(exc.value)

    def test_surrounding_whitespace(self):
        assert parse_axiom("  SubClassOf(:rose :flower)\n") == SubClassOf(
            EntityName("rose", Kind.CLASS), EntityName("flower", Kind.CLASS)
        )

    def test_complement_assertion(self):
        ax = parse_axiom("ClassAssertion(ObjectComplementOf(:cat) :Tina)")
        assert ax == ClassAssertion(
            ComplementOf(EntityName("cat", Kind.CLASS)),
            EntityName("Tina", Kind.NAMED_INDIVIDUAL),
        )

    def test_cardinality_without_filler(self):
        ax = parse_axiom("ClassAssertion(ObjectExactCardinality(2 :owns) :Mia)")
        assert isinstance(ax.ce, ExactCardinality)
        assert ax.ce.filler is None

    def test_cardinality_bounds(self):
        parse_axiom(f"ClassAssertion(ObjectMinCardinality({2**31 - 1} :owns) :Mia)")
        with pytest.raises(ParseError):
            parse_axiom(f"ClassAssertion(ObjectMinCardinality({2**31} :owns) :Mia)")

    def test_foreign_owl_constructor(self):
        with pytest.raises(UnknownConstructor) as exc:
            parse_axiom("DataPropertyAssertion(:age :Anna 7)")
        assert "outside the supported subset" in str(exc.value)

    @pytest.mark.parametrize(
        "bad",
        [
            "is(Anna, girl)",
            "ObjectPropertyAssertion(:likes :Anna :movie_class_ref",
            "",
        ],
    )
    def test_rejection_corpus(self, bad):
        with pytest.raises(ParseError):
            parse_axiom(bad)

    def test_kinds_assigned_by_position(self):
        ax = parse_axiom("ObjectPropertyAssertion(:has_sister :Anna :Sarah)")
        assert ax.prop.kind is Kind.OBJECT_PROPERTY
        assert ax.subject.kind is Kind.NAMED_INDIVIDUAL
        assert ax.object.kind is Kind.NAMED_INDIVIDUAL


class TestParseDocument:
    def test_empty_ontology(self):
        doc = parse_document("Ontology()")
        assert doc.axioms == ()
        assert doc.prefixes == ()

    def test_prefix_and_axiom(self):
        doc = parse_document(
            "Prefix(:=<http://example.org/o#>) Ontology(Declaration(Class(:girl)))"
        )
        assert doc.prefixes == (("", "http://example.org/o#"),)
        assert doc.axioms == (Declaration(GIRL),)

    def test_named_prefix_and_iri(self):
        doc = parse_document(
            "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
            "Ontology(<http://example.org/family>\n"
            "Declaration(Class(:girl))\n)"
        )
        assert doc.prefixes == (("owl", "http://www.w3.org/2002/07/owl#"),)
        assert doc.ontology_iri == "http://example.org/family"

    def test_missing_wrapper(self):
        with pytest.raises(MissingOntologyWrapper):
            parse_document("Declaration(Class(:girl))")

    def test_duplicates_preserved(self):
        doc = parse_document("Ontology(Declaration(Class(:x)) Declaration(Class(:x)))")
        assert len(doc.axioms) == 2

    def test_gold_corpus_document_round_trip(self):
        # All 19 gold completions joined into one document.
        body = "\n".join(completion for _, completion in corpus.rows())
        text = f"Prefix(:=<http://example.org/o#>)\nOntology(\n{body}\n)"
        doc = parse_document(text)
        assert parse_document(serialize_document(doc)) == doc


class TestSerialize:
    def test_canonical_grouping(self):
        rose = EntityName("rose", Kind.CLASS)
        flower = EntityName("flower", Kind.CLASS)
        axioms = [Declaration(rose), Declaration(flower), SubClassOf(rose, flower)]
        assert serialize(axioms, canonical=True) == (
            "Declaration(Class(:flower))\n"
            "Declaration(Class(:rose))\n"
            "SubClassOf(:rose :flower)"
        )

    def test_empty(self):
        assert serialize([]) == ""
        assert serialize([], canonical=True) == ""

    def test_permutation_oracle(self):
        # Every ordering of a 3-axiom row serializes to the same canonical text.
        _, axioms = corpus.parsed_rows()[0]
        rendered = {
            serialize(list(perm), canonical=True) for perm in itertools.permutations(axioms)
        }
        assert len(rendered) == 1

    def test_canonical_is_function_of_canonical_set(self):
        rng = random.Random(7)
        for _ in range(50):
            axioms = [random_axiom(rng) for _ in range(rng.randint(0, 6))]
            shuffled = list(axioms)
            rng.shuffle(shuffled)
            duplicated = shuffled + shuffled
            assert canonical_set(axioms) == canonical_set(duplicated)
            assert serialize(axioms, canonical=True) == serialize(duplicated, canonical=True)

    def test_non_canonical_preserves_order(self):
        ax = parse_axiom("DisjointClasses(:woman :man)")
        assert serialize_axiom(ax) == "DisjointClasses(:woman :man)"


class TestCanonicalSet:
    def test_idempotent_duplicate(self):
        a = parse_axiom("Declaration(Class(:x))")
        assert canonical_set([a, a]) == canonical_set([a])

    def test_nary_normalization_oracle(self):
        left = canonical_set([parse_axiom("DisjointClasses(:woman :man)")])
        right = canonical_set([parse_axiom("DisjointClasses(:man :woman)")])
        assert left == right

    def test_brandon_row_any_order(self):
        _, axioms = next(
            row for row in corpus.parsed_rows() if row[0] == "Brandon is a male artist"
        )
        expected = canonical_set(axioms)
        for perm in itertools.permutations(axioms):
            assert canonical_set(list(perm)) == expected
        assert len(expected) == 5

    def test_permutation_invariant_and_idempotent(self):
        rng = random.Random(99)
        for _ in range(50):
            axioms = [random_axiom(rng) for _ in range(rng.randint(1, 6))]
            shuffled = list(axioms)
            rng.shuffle(shuffled)
            once = canonical_set(axioms)
            assert canonical_set(shuffled) == once
            assert canonical_set(list(once)) == once


class TestStructuralEquality:
    def test_equivalence_relation(self):
        rng = random.Random(3)
        pool = [random_axiom(rng) for _ in range(40)]
        pool += [parse_axiom(serialize_axiom(a)) for a in pool[:20]]
        for a in pool:
            assert a == a
        for a, b in itertools.combinations(pool, 2):
            assert (a == b) == (b == a)
            if a == b:
                assert hash(a) == hash(b)
        for a, b, c in itertools.combinations(pool, 3):
            if a == b and b == c:
                assert a == c

    def test_whitespace_insensitive(self):
        a = parse_axiom("SubClassOf(:rose :flower)")
        b = parse_axiom("  SubClassOf( :rose\n\t:flower )  ")
        assert a == b


class TestRoundTrip:
    def test_gold_rows(self):
        for _, axioms in corpus.parsed_rows():
            for axiom in axioms:
                assert parse_axiom(serialize_axiom(axiom)) == axiom

    def test_random_axioms(self):
        rng = random.Random(20240811)
        for _ in range(300):
            axiom = random_axiom(rng, depth=4)
            assert parse_axiom(serialize([axiom])) == axiom

    def test_entity_name_validation(self):
        with pytest.raises(ValueError):
            EntityName("9lives", Kind.CLASS)
        with pytest.raises(ValueError):
            EntityName("has sister", Kind.OBJECT_PROPERTY)
