import pytest

from ontoforge import corpus
from ontoforge.ofs import (
    ClassAssertion,
    Declaration,
    EntityName,
    Kind,
    SubClassOf,
    canonical_set,
    entity_uses,
    parse_axiom,
    serialize,
)
from ontoforge.patterns import (
    Backend,
    NoPatternMatch,
    NotANumber,
    UnrepresentableName,
    normalize_entity_name,
    parse_count,
    singularize,
    translate,
)


class TestNormalizeEntityName:
    def test_individual_keeps_capitalization(self):
        entity = normalize_entity_name("Britney Spears", Kind.NAMED_INDIVIDUAL)
        assert entity == EntityName("Britney_Spears", Kind.NAMED_INDIVIDUAL)

    def test_property_lowercased(self):
        entity = normalize_entity_name("has sister", Kind.OBJECT_PROPERTY)
        assert entity.local == "has_sister"

    def test_class_lowercased(self):
        assert normalize_entity_name("Girl", Kind.CLASS).local == "girl"

    def test_hyphen_becomes_underscore(self):
        assert normalize_entity_name("x-ray", Kind.CLASS).local == "x_ray"

    @pytest.mark.parametrize("bad", ["crème brûlée", "50%", "", "9lives"])
    def test_unrepresentable(self, bad):
        with pytest.raises(UnrepresentableName):
            normalize_entity_name(bad, Kind.CLASS)


class TestSingularize:
    @pytest.mark.parametrize(
        "plural,singular",
        [
            ("bikes", "bike"),
            ("flies", "fly"),
            ("sheep", "sheep"),
            ("lilies", "lily"),
            ("children", "child"),
            ("women", "woman"),
            ("wolves", "wolf"),
            ("knives", "knife"),
            ("boxes", "box"),
            ("glasses", "glass"),
            ("glass", "glass"),
            ("tail", "tail"),
        ],
    )
    def test_rules(self, plural, singular):
        assert singularize(plural) == singular


class TestParseCount:
    def test_numeral(self):
        assert parse_count("2") == 2

    def test_word(self):
        assert parse_count("one") == 1

    def test_zero(self):
        assert parse_count("zero") == 0

    def test_twenty(self):
        assert parse_count("twenty") == 20

    @pytest.mark.parametrize("bad", ["hundred", "twenty-one", "", "x"])
    def test_not_a_number(self, bad):
        with pytest.raises(NotANumber):
            parse_count(bad)


class TestGoldReproduction:
    @pytest.mark.parametrize("sentence,gold", corpus.parsed_rows(),
                             ids=[s for s, _ in corpus.rows()])
    def test_row(self, sentence, gold):
        result = translate(sentence)
        assert result.backend is Backend.PATTERN
        assert canonical_set(result.axioms) == canonical_set(gold)

    def test_anna_row_exact_axioms(self):
        result = translate("Anna is a girl")
        assert list(result.axioms) == [
            parse_axiom("Declaration(Class(:girl))"),
            parse_axiom("Declaration(NamedIndividual(:Anna))"),
            parse_axiom("ClassAssertion(:girl :Anna)"),
        ]
        assert result.pattern_id == "P1"

    def test_rabbits_row(self):
        result = translate("rabbits eat only carrots")
        expected = {
            parse_axiom("Declaration(Class(:carrot))"),
            parse_axiom("Declaration(Class(:rabbit))"),
            parse_axiom("Declaration(ObjectProperty(:eats))"),
            parse_axiom("SubClassOf(:rabbit ObjectAllValuesFrom(:eats :carrot))"),
        }
        assert set(result.axioms) == expected


class TestRuleShapes:
    def test_list_fan_out(self):
        result = translate("bugs, ants, ladybugs, flies are insects")
        insect = EntityName("insect", Kind.CLASS)
        expected = canonical_set(
            [Declaration(insect)]
            + [Declaration(EntityName(n, Kind.CLASS)) for n in ("bug", "ant", "ladybug", "fly")]
            + [SubClassOf(EntityName(n, Kind.CLASS), insect) for n in ("bug", "ant", "ladybug", "fly")]
        )
        assert canonical_set(result.axioms) == expected

    def test_connective_variants(self):
        for sentence in ("every man is a person", "all lilies are flowers",
                         "cats are a type of animal", "cats are animals"):
            result = translate(sentence)
            assert result.pattern_id == "P2"
            assert any(isinstance(a, SubClassOf) for a in result.axioms)

    def test_capitalization_disambiguation(self):
        upper = translate("Anna and Lana are girls")
        lower = translate("foxes and wolves are animals")
        assert upper.pattern_id == "P3"
        assert sum(isinstance(a, ClassAssertion) for a in upper.axioms) == 2
        assert lower.pattern_id == "P2"
        assert sum(isinstance(a, SubClassOf) for a in lower.axioms) == 2

    def test_scenario_sentences(self):
        s4 = translate("Anna and Lana are each other's sisters")
        assert parse_axiom("ObjectPropertyAssertion(:has_sister :Anna :Lana)") in s4.axioms
        assert parse_axiom("ObjectPropertyAssertion(:has_sister :Lana :Anna)") in s4.axioms
        s5 = translate("Nola and Anna are each other's cousins")
        assert parse_axiom("Declaration(ObjectProperty(:has_cousin))") in s5.axioms

    def test_domain_rule(self):
        result = translate("anyone who owns something is an owner")
        assert parse_axiom("ObjectPropertyDomain(:owns :owner)") in result.axioms
        assert result.pattern_id == "P20"

    def test_trailing_punctuation(self):
        assert canonical_set(translate("Anna is a girl.").axioms) == canonical_set(
            translate("Anna is a girl").axioms
        )

    def test_asymmetric_needs_matching_phrases(self):
        with pytest.raises(NoPatternMatch):
            translate("if X likes Y then Y does not hate X")

    @pytest.mark.parametrize(
        "sentence",
        [
            "the weather was nice yesterday",
            "Sarah is female",
            "how many roses are there",
            "colorless green ideas sleep furiously today maybe",
        ],
    )
    def test_no_pattern_match(self, sentence):
        with pytest.raises(NoPatternMatch):
            translate(sentence)

    def test_empty_sentence(self):
        with pytest.raises(ValueError):
            translate("   ")


class TestResultProperties:
    def test_closure_invariant(self):
        for sentence, _ in corpus.rows():
            result = translate(sentence)
            declared = {a.entity.local for a in result.axioms if isinstance(a, Declaration)}
            for axiom in result.axioms:
                for use in entity_uses(axiom):
                    assert use.local in declared, (sentence, use.local)

    def test_deterministic(self):
        for sentence, _ in corpus.rows():
            assert translate(sentence) == translate(sentence)

    def test_round_trip_through_parser(self):
        for sentence, _ in corpus.rows():
            result = translate(sentence)
            text = serialize(result.axioms)
            reparsed = [parse_axiom(line) for line in text.splitlines()]
            assert reparsed == list(result.axioms)
