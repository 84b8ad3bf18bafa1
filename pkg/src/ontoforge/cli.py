"""Command-line front door.

Exit codes: 0 success, 1 usage, 2 parse/translation failure,
3 network/backend failure.
"""
from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional

import click

from . import corpus, store
from .evaluation import evaluate, pattern_backend
from .gateway import (
    BackendConfig,
    GatewayError,
    PromptExample,
    export_dataset,
    import_dataset,
    translate_remote,
)
from .ofs import ParseError, serialize, serialize_axiom
from .patterns import NoPatternMatch, UnrepresentableName, translate
from .store import IllegalAccept, KindConflict, Ontology, Status

USAGE_EXIT = 1
TRANSLATION_EXIT = 2
BACKEND_EXIT = 3

_ACCEPTABLE = (Status.NEW, Status.DUPLICATE)


def _load_config(path: Optional[str]) -> Optional[BackendConfig]:
    return BackendConfig.from_file(path) if path else None


def _translate_once(sentence: str, backend: str, config: Optional[BackendConfig],
                    ontology: Ontology):
    if backend == "pattern":
        return translate(sentence)
    if backend == "llm":
        if config is None:
            raise click.UsageError("--backend llm needs --config with an endpoint")
        return translate_remote(sentence, config, ontology)
    try:
        return translate(sentence)
    except NoPatternMatch:
        if config is None or not config.endpoint:
            raise
        return translate_remote(sentence, config, ontology)


@click.group()
def cli() -> None:
    """Translate English sentences into Functional Syntax axioms."""


@cli.command("translate")
@click.argument("sentence")
@click.option("--backend", type=click.Choice(["pattern", "llm", "auto"]), default="auto",
              show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              help="JSON backend config for the llm/auto backends.")
def translate_command(sentence: str, backend: str, config_path: Optional[str]) -> None:
    """Print the axioms for one sentence."""
    result = _translate_once(sentence, backend, _load_config(config_path), Ontology.empty())
    click.echo(serialize(result.axioms))


def _echo_stage(staged) -> None:
    for index, item in enumerate(staged.items):
        detail = f"  ({item.detail})" if item.detail else ""
        click.echo(f"  [{index}] {item.status.value:9} {serialize_axiom(item.axiom)}{detail}")


def _choose_indices(staged) -> list[int]:
    acceptable = [i for i, item in enumerate(staged.items) if item.status in _ACCEPTABLE]
    reply = click.prompt(
        "accept which items? [a]ll / [n]one / comma-separated indices",
        default="a", show_default=True,
    ).strip().lower()
    if reply in ("a", "all", ""):
        return acceptable
    if reply in ("n", "none"):
        return []
    try:
        chosen = sorted({int(part) for part in reply.split(",") if part.strip()})
    except ValueError:
        raise click.UsageError(f"cannot read index list {reply!r}")
    return chosen


@cli.command("enrich")
@click.option("--ontology", "ontology_path", required=True, type=click.Path(dir_okay=False),
              help="`.ofn` file to enrich; created if missing.")
@click.option("--input", "input_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Text file with one sentence per line.")
@click.option("--backend", type=click.Choice(["pattern", "llm", "auto"]), default="auto",
              show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--yes", is_flag=True, help="Accept every new/duplicate axiom without asking.")
def enrich_command(ontology_path: str, input_path: str, backend: str,
                   config_path: Optional[str], yes: bool) -> None:
    """Translate a sentence file and merge accepted axioms into an ontology."""
    config = _load_config(config_path)
    path = Path(ontology_path)
    ontology = store.load_document(path.read_text(encoding="utf-8")) if path.exists() \
        else Ontology.empty()

    failures = 0
    sentences = [line.strip() for line in Path(input_path).read_text(encoding="utf-8").splitlines()]
    for sentence in sentences:
        if not sentence or sentence.startswith("#"):
            continue
        click.echo(f"> {sentence}")
        try:
            result = _translate_once(sentence, backend, config, ontology)
        except (NoPatternMatch, GatewayError) as error:
            click.echo(f"  skipped: {error}", err=True)
            failures += 1
            continue
        staged = store.stage(ontology, list(result.axioms), sentence)
        _echo_stage(staged)
        accepted = [i for i, item in enumerate(staged.items) if item.status in _ACCEPTABLE] \
            if yes else _choose_indices(staged)
        ontology, report = store.commit(ontology, staged, accepted)
        click.echo(
            f"  merged: +{report.added} axioms, {report.skipped_duplicates} duplicates "
            f"skipped, {report.rejected} rejected (revision {report.new_revision})"
        )

    path.write_text(store.save_document(ontology), encoding="utf-8")
    click.echo(f"wrote {path}")
    if failures:
        raise SystemExit(TRANSLATION_EXIT)


@cli.command("eval")
@click.option("--dataset", "dataset_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON-lines file with prompt/completion pairs.")
@click.option("--backend", type=click.Choice(["pattern", "llm"]), default="pattern",
              show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--report", "report_path", type=click.Path(dir_okay=False),
              help="Also write the report as JSON.")
def eval_command(dataset_path: str, backend: str, config_path: Optional[str],
                 report_path: Optional[str]) -> None:
    """Score a backend against a gold dataset."""
    dataset = import_dataset(Path(dataset_path).read_bytes())
    if backend == "pattern":
        run = pattern_backend
    else:
        config = _load_config(config_path)
        if config is None:
            raise click.UsageError("--backend llm needs --config with an endpoint")

        def run(sentence: str) -> str:
            result = translate_remote(sentence, config, Ontology.empty())
            return result.raw_completion or ""

    report = evaluate(dataset, run, backend_name=backend, dataset_name=dataset_path)
    click.echo(report.to_table())
    if report_path:
        Path(report_path).write_text(report.to_json(), encoding="utf-8")
        click.echo(f"wrote {report_path}")


@cli.group("dataset")
def dataset_group() -> None:
    """Fine-tuning dataset tooling."""


@dataset_group.command("export")
@click.option("--out", "out_path", type=click.Path(dir_okay=False),
              help="Destination file; stdout when omitted.")
def dataset_export(out_path: Optional[str]) -> None:
    """Export the bundled gold corpus as a JSON-lines fine-tuning file."""
    examples = [PromptExample(s, c) for s, c in corpus.rows()]
    data = export_dataset(examples)
    if out_path:
        Path(out_path).write_bytes(data)
        click.echo(f"wrote {out_path} ({len(examples)} examples)")
    else:
        sys.stdout.buffer.write(data)


@cli.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--static-dir", "static_dir", type=click.Path(file_okay=False),
              help="Directory with the web UI build; defaults to ./frontend/dist when present.")
def serve_command(host: str, port: int, config_path: Optional[str],
                  static_dir: Optional[str]) -> None:
    """Run the HTTP service (and the web UI when its build is available)."""
    import uvicorn

    from .service import create_app

    if static_dir is None and Path("frontend/dist").is_dir():
        static_dir = "frontend/dist"
    app = create_app(backend_config=_load_config(config_path), static_dir=static_dir)
    uvicorn.run(app, host=host, port=port)


def main(argv: Optional[list[str]] = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as error:
        return error.exit_code
    except click.ClickException as error:
        error.show()
        return USAGE_EXIT
    except click.Abort:
        click.echo("aborted", err=True)
        return USAGE_EXIT
    except (ParseError, NoPatternMatch, KindConflict, UnrepresentableName,
            IllegalAccept) as error:
        click.echo(f"error: {error}", err=True)
        return TRANSLATION_EXIT
    except GatewayError as error:
        click.echo(f"backend error: {error}", err=True)
        return BACKEND_EXIT
    except SystemExit as error:
        return int(error.code or 0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
