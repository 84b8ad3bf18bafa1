import json

import pytest

from ontoforge import corpus
from ontoforge.gateway import (
    AuthError,
    BackendConfig,
    COMPLETION_STOP,
    EmptyCompletion,
    InvalidExample,
    NetworkError,
    PROMPT_TERMINATOR,
    PromptExample,
    Strategy,
    UnusableCompletion,
    Verdict,
    build_prompt,
    export_dataset,
    http_transport,
    import_dataset,
    translate_remote,
    validate_completion,
)
from ontoforge.ofs import canonical_set, parse_axiom, serialize
from ontoforge.patterns import Backend, translate
from ontoforge.store import Ontology, commit, stage

GOLD_EXAMPLES = [PromptExample(s, c) for s, c in corpus.rows()]


def fine_tuned(**kwargs):
    return BackendConfig(endpoint="https://llm.invalid/v1/completions", model="m", **kwargs)


class TestBuildPrompt:
    def test_zero_shot_instruction(self):
        payload = build_prompt("Anna is a girl", fine_tuned(strategy=Strategy.ZERO_SHOT))
        assert "Translate 'Anna is a girl' into Functional Syntax" in payload["prompt"]

    def test_fine_tuned_terminator(self):
        payload = build_prompt("Anna is a girl", fine_tuned())
        assert payload["prompt"] == "Anna is a girl\n\n###\n\n"

    def test_few_shot_blocks(self):
        config = fine_tuned(strategy=Strategy.FEW_SHOT, examples=(GOLD_EXAMPLES[0],))
        payload = build_prompt("every rose is a flower", config)
        assert GOLD_EXAMPLES[0].prompt in payload["prompt"]
        assert GOLD_EXAMPLES[0].completion in payload["prompt"]
        assert payload["prompt"].endswith("every rose is a flower" + PROMPT_TERMINATOR)

    def test_empty_sentence_rejected(self):
        config = fine_tuned(strategy=Strategy.FEW_SHOT, examples=(GOLD_EXAMPLES[0],))
        with pytest.raises(ValueError):
            build_prompt("", config)

    def test_stop_sequence_in_payload(self):
        payload = build_prompt("x is a y", fine_tuned())
        assert payload["stop"] == [COMPLETION_STOP]

    def test_few_shot_needs_examples(self):
        with pytest.raises(ValueError):
            fine_tuned(strategy=Strategy.FEW_SHOT)

    def test_temperature_range(self):
        with pytest.raises(ValueError):
            fine_tuned(temperature=1.5)


class TestDataset:
    def test_single_row_format(self):
        data = export_dataset([GOLD_EXAMPLES[0]])
        record = json.loads(data.decode("utf-8"))
        assert set(record) == {"prompt", "completion"}
        assert record["prompt"] == "Anna is a girl" + PROMPT_TERMINATOR
        assert record["completion"].startswith(" Declaration(Class(:girl))\n")
        assert record["completion"].endswith("\nEND")

    def test_empty_list(self):
        assert export_dataset([]) == b""

    def test_round_trip_identity(self):
        assert import_dataset(export_dataset(GOLD_EXAMPLES)) == GOLD_EXAMPLES

    def test_byte_stable(self):
        assert export_dataset(GOLD_EXAMPLES) == export_dataset(GOLD_EXAMPLES)

    def test_invalid_completion_rejected(self):
        bad = PromptExample("Anna is a girl", "is(Anna, girl)")
        with pytest.raises(InvalidExample) as exc:
            export_dataset([GOLD_EXAMPLES[0], bad])
        assert exc.value.index == 1

    def test_import_malformed_line(self):
        with pytest.raises(InvalidExample):
            import_dataset(b'{"prompt": "x"}\n')


class TestValidateCompletion:
    def test_gold_row_clean(self):
        raw = corpus.rows()[0][1]
        outcome = validate_completion(raw, Ontology.empty())
        assert outcome.verdict is Verdict.CLEAN
        assert len(outcome.valid_axioms) == 3
        assert outcome.rejected == ()

    def test_unparseable_line_unusable(self):
        outcome = validate_completion("is(Anna, girl)", Ontology.empty())
        assert outcome.verdict is Verdict.UNUSABLE
        assert outcome.valid_axioms == ()
        assert len(outcome.rejected) == 1
        assert outcome.rejected[0].reason.startswith("syntax")

    def test_ill_typed_assertion_partial(self):
        raw = corpus.rows()[0][1] + "\nObjectPropertyAssertion(:married_to :Anna :girl)"
        outcome = validate_completion(raw, Ontology.empty())
        assert outcome.verdict is Verdict.PARTIAL
        assert len(outcome.valid_axioms) == 3
        assert len(outcome.rejected) == 1
        assert "ill-typed" in outcome.rejected[0].reason

    def test_undeclared_reference_rejected(self):
        outcome = validate_completion("ClassAssertion(:girl :Anna)", Ontology.empty())
        assert outcome.verdict is Verdict.UNUSABLE
        assert "undeclared" in outcome.rejected[0].reason

    def test_ontology_signature_supplies_declarations(self):
        staged = stage(
            Ontology.empty(),
            [parse_axiom(line) for line in corpus.rows()[0][1].splitlines()],
            "s1",
        )
        onto, _ = commit(Ontology.empty(), staged, range(3))
        outcome = validate_completion("ClassAssertion(:girl :Anna)", onto)
        assert outcome.verdict is Verdict.CLEAN

    def test_empty_raw_unusable(self):
        assert validate_completion("", Ontology.empty()).verdict is Verdict.UNUSABLE

    def test_pattern_outputs_always_clean(self):
        for sentence, _ in corpus.rows():
            raw = serialize(translate(sentence).axioms)
            outcome = validate_completion(raw, Ontology.empty())
            assert outcome.verdict is Verdict.CLEAN, sentence

    def test_no_axiom_invented(self):
        raw = corpus.rows()[0][1]
        outcome = validate_completion(raw, Ontology.empty())
        parseable = {parse_axiom(line) for line in raw.splitlines()}
        assert set(outcome.valid_axioms) <= parseable


class TestTranslateRemote:
    def test_gold_replay(self):
        raw = corpus.rows()[1][1]
        result = translate_remote(
            "every rose is a flower",
            fine_tuned(),
            Ontology.empty(),
            transport=lambda payload, config: raw,
        )
        assert result.backend is Backend.LLM
        assert canonical_set(result.axioms) == canonical_set(
            [parse_axiom(line) for line in raw.splitlines()]
        )
        assert result.raw_completion == raw

    def test_empty_completion(self):
        with pytest.raises(EmptyCompletion):
            translate_remote(
                "every rose is a flower",
                fine_tuned(),
                Ontology.empty(),
                transport=lambda payload, config: "",
            )

    def test_partial_surfaced(self):
        raw = corpus.rows()[0][1] + "\nObjectPropertyAssertion(:married_to :Anna :girl)"
        result = translate_remote(
            "Anna is a girl", fine_tuned(), Ontology.empty(),
            transport=lambda payload, config: raw,
        )
        assert len(result.axioms) == 3
        assert result.validation is not None
        assert result.validation.verdict is Verdict.PARTIAL

    def test_unusable_completion(self):
        with pytest.raises(UnusableCompletion):
            translate_remote(
                "Anna is a girl", fine_tuned(), Ontology.empty(),
                transport=lambda payload, config: "is(Anna, girl)",
            )

    def test_deterministic_with_mock(self):
        raw = corpus.rows()[0][1]
        transport = lambda payload, config: raw
        first = translate_remote("Anna is a girl", fine_tuned(), Ontology.empty(), transport)
        second = translate_remote("Anna is a girl", fine_tuned(), Ontology.empty(), transport)
        assert first == second


class FakeResponse:
    def __init__(self, status_code=200, body=None, text=""):
        self.status_code = status_code
        self._body = body
        self.text = text

    def json(self):
        if self._body is None:
            raise ValueError("no body")
        return self._body


class TestHttpTransport:
    def test_missing_key_is_auth_error(self, monkeypatch):
        monkeypatch.delenv("ONTOFORGE_LLM_API_KEY", raising=False)
        with pytest.raises(AuthError):
            http_transport({}, fine_tuned())

    def test_auth_rejection(self, monkeypatch):
        monkeypatch.setattr(
            "ontoforge.gateway.requests.post",
            lambda *a, **k: FakeResponse(status_code=401),
        )
        with pytest.raises(AuthError):
            http_transport({}, fine_tuned(api_key="k"))

    def test_retries_transient_then_succeeds(self, monkeypatch):
        responses = [
            FakeResponse(status_code=500),
            FakeResponse(status_code=429),
            FakeResponse(body={"choices": [{"text": "ok"}]}),
        ]
        calls = []

        def fake_post(*args, **kwargs):
            response = responses[len(calls)]
            calls.append(1)
            return response

        monkeypatch.setattr("ontoforge.gateway.requests.post", fake_post)
        sleeps = []
        monkeypatch.setattr("ontoforge.gateway.time.sleep", sleeps.append)
        assert http_transport({}, fine_tuned(api_key="k")) == "ok"
        assert len(calls) == 3
        assert sleeps == [1.0, 2.0]

    def test_gives_up_after_three_retries(self, monkeypatch):
        calls = []
        monkeypatch.setattr(
            "ontoforge.gateway.requests.post",
            lambda *a, **k: calls.append(1) or FakeResponse(status_code=503),
        )
        sleeps = []
        monkeypatch.setattr("ontoforge.gateway.time.sleep", sleeps.append)
        with pytest.raises(NetworkError):
            http_transport({}, fine_tuned(api_key="k"))
        assert len(calls) == 4  # initial attempt + three retries
        assert sleeps == [1.0, 2.0, 4.0]

    def test_response_path_extraction(self, monkeypatch):
        monkeypatch.setattr(
            "ontoforge.gateway.requests.post",
            lambda *a, **k: FakeResponse(body={"output": {"text": "hello"}}),
        )
        config = fine_tuned(api_key="k", response_path="output.text")
        assert http_transport({}, config) == "hello"

    def test_bad_response_shape(self, monkeypatch):
        monkeypatch.setattr(
            "ontoforge.gateway.requests.post",
            lambda *a, **k: FakeResponse(body={"nope": 1}),
        )
        with pytest.raises(NetworkError):
            http_transport({}, fine_tuned(api_key="k"))


class TestConfigLoading:
    def test_from_file(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({
            "strategy": "zero_shot",
            "endpoint": "https://llm.invalid/v1",
            "model": "gpt-x",
            "temperature": 0.5,
        }))
        config = BackendConfig.from_file(path)
        assert config.strategy is Strategy.ZERO_SHOT
        assert config.model == "gpt-x"
        assert config.temperature == 0.5

    def test_examples_path(self, tmp_path):
        data_path = tmp_path / "gold.jsonl"
        data_path.write_bytes(export_dataset(GOLD_EXAMPLES[:2]))
        config = BackendConfig.from_dict({
            "strategy": "few_shot",
            "endpoint": "https://llm.invalid/v1",
            "examples_path": str(data_path),
        })
        assert config.examples == tuple(GOLD_EXAMPLES[:2])
