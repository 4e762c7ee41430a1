#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/harness/cli.py                                                          #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 08:35:35 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Command Line Interface

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.
"""
from __future__ import annotations

import os
import sys
from types import SimpleNamespace
from typing import List, Optional, Type

import click
from dependency_injector.wiring import Provide, Provider, inject

from drowsy_lab import KINDS, RANDOM_STATE, VARIANTS
from drowsy_lab.baselines.classifier import CLASSIFIERS
from drowsy_lab.baselines.features import EXTRACTORS
from drowsy_lab.container import DrowsyLab
from drowsy_lab.core.exceptions import DrowsyLabError
from drowsy_lab.core.service.io import IOService
from drowsy_lab.dataset.container import export_container, export_metadata_csv, import_container
from drowsy_lab.dataset.published import bundle_stats, compare_to_published, import_published
from drowsy_lab.dataset.synthetic import synth_generate
from drowsy_lab.harness.protocol import (
    EPOCHS,
    REPEATS,
    UNBALANCED_EPOCHS,
    evaluate_baseline,
    evaluate_loso_balanced,
    evaluate_loso_unbalanced,
    evaluate_variants,
)
from drowsy_lab.harness.report import EvalReport
from drowsy_lab.interpret.heatmap import SIGMA, interpret_sample
from drowsy_lab.interpret.cam import TOP_N
from drowsy_lab.interpret.render import export_heatmap
from drowsy_lab.model.checkpoint import load_checkpoint, save_checkpoint
from drowsy_lab.model.config import ModelConfig
from drowsy_lab.training.optimizer import AdamState
from drowsy_lab.training.trainer import BATCH_SIZE, Trainer

USAGE_ERROR = 1


# ------------------------------------------------------------------------------------------------ #
#                                       SETTINGS                                                   #
# ------------------------------------------------------------------------------------------------ #
@inject
def _section(name: str, config: dict = Provide[DrowsyLab.config]) -> dict:
    return dict((config or {}).get(name) or {})


@inject
def _io(io: Type[IOService] = Provide[DrowsyLab.core.io]) -> Type[IOService]:
    return io


def _model_config(variant: str = None) -> ModelConfig:
    section = _section("model")
    if variant:
        section["variant"] = variant
    return ModelConfig.from_dict(section)


def _harness(settings: SimpleNamespace) -> dict:
    """Global flags win over the harness section, which wins over the defaults."""
    section = _section("harness")
    training = _section("training")
    return {
        "epochs": _first(settings.epochs, section.get("epochs"), EPOCHS),
        "repeats": _first(settings.repeats, section.get("repeats"), REPEATS),
        "threads": _first(settings.threads, section.get("threads"), 1),
        "unbalanced_epochs": _first(
            settings.epochs, section.get("unbalanced_epochs"), UNBALANCED_EPOCHS
        ),
        "test_batch": section.get("test_batch"),
        "batch_size": training.get("batch_size", BATCH_SIZE),
        "adam": AdamState.from_dict(training),
    }


def _first(*values):
    return next(value for value in values if value is not None)


def _out(settings: SimpleNamespace, filename: str) -> str:
    return os.path.join(settings.out, filename)


def _write_report(settings: SimpleNamespace, report: EvalReport, stem: str) -> None:
    io = _io()
    report.export_csv(_out(settings, f"{stem}.csv"), io=io)
    report.export_summary(_out(settings, f"{stem}_summary.json"), io=io)
    peak = report.peak()
    click.echo(
        f"{report.protocol} {report.variant}: peak mean accuracy {peak['acc_mean']:.4f} "
        f"(stderr {peak['acc_stderr']:.4f}) at epoch {peak['epoch']} over {len(report)} rows."
    )


# ------------------------------------------------------------------------------------------------ #
#                                        ROOT GROUP                                                #
# ------------------------------------------------------------------------------------------------ #
@click.group()
@click.option("--seed", type=int, default=RANDOM_STATE, show_default=True, help="Base seed.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="JSON document merged over the YAML configuration.",
)
@click.option(
    "--out",
    type=click.Path(file_okay=False),
    default="out",
    show_default=True,
    help="Directory receiving every artifact.",
)
@click.option("--epochs", type=click.IntRange(min=1), default=None, help="Training epochs.")
@click.option("--repeats", type=click.IntRange(min=1), default=None, help="Protocol repeats.")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Fold workers.")
@click.pass_context
@inject
def cli(
    ctx: click.Context,
    seed: int,
    config_path: Optional[str],
    out: str,
    epochs: Optional[int],
    repeats: Optional[int],
    threads: Optional[int],
    config=Provider[DrowsyLab.config],
) -> None:
    """Interpretable separable-convolution network for EEG drowsiness detection."""
    if config_path:
        config.from_dict(_io().read(config_path))
    ctx.obj = SimpleNamespace(seed=seed, out=out, epochs=epochs, repeats=repeats, threads=threads)


# ------------------------------------------------------------------------------------------------ #
#                                      DATASET COMMANDS                                            #
# ------------------------------------------------------------------------------------------------ #
@cli.group()
def dataset() -> None:
    """Import, export, synthesize and summarize sample bundles."""


@dataset.command("import")
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--kind", type=click.Choice(KINDS), default="unbalanced", show_default=True)
@click.option("--name", default=None, help="Output stem; defaults to the kind.")
@click.pass_obj
def dataset_import(settings: SimpleNamespace, source: str, kind: str, name: str) -> None:
    """Converts the published MATLAB arrays or an EEGB container into <out>/<name>.eegb."""
    io = _io()
    if source.lower().endswith(".mat"):
        bundle = import_published(source, kind=kind, io=io)
    else:
        bundle = import_container(source, io=io)
    path = _out(settings, f"{name or bundle.kind}.eegb")
    export_container(bundle, path, io=io)
    click.echo(f"Wrote {len(bundle)} samples of {len(bundle.subjects)} subjects to {path}.")


@dataset.command("export")
@click.argument("bundle_path", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def dataset_export(settings: SimpleNamespace, bundle_path: str) -> None:
    """Writes the per-sample metadata CSV of a container."""
    io = _io()
    bundle = import_container(bundle_path, io=io)
    stem = os.path.splitext(os.path.basename(bundle_path))[0]
    path = _out(settings, f"{stem}_metadata.csv")
    export_metadata_csv(bundle, path, io=io)
    click.echo(f"Wrote metadata of {len(bundle)} samples to {path}.")


@dataset.command("synth")
@click.option("--subjects", type=int, default=4, show_default=True)
@click.option("--per-class", type=int, default=100, show_default=True)
@click.option("--name", default="synthetic", show_default=True)
@click.pass_obj
def dataset_synth(settings: SimpleNamespace, subjects: int, per_class: int, name: str) -> None:
    """Generates a synthetic bundle with spindle-bearing drowsy samples."""
    bundle = synth_generate(n_subjects=subjects, n_per_class=per_class, seed=settings.seed)
    path = _out(settings, f"{name}.eegb")
    export_container(bundle, path, io=_io())
    click.echo(f"Wrote {len(bundle)} synthetic samples to {path}.")


@dataset.command("stats")
@click.argument("bundle_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--reference", is_flag=True, help="Show the published counts beside the bundle's.")
def dataset_stats(bundle_path: str, reference: bool) -> None:
    """Prints per-subject alert and drowsy counts."""
    bundle = import_container(bundle_path, io=_io())
    table = compare_to_published(bundle) if reference else bundle_stats(bundle)
    click.echo(table.to_string(index=False))


# ------------------------------------------------------------------------------------------------ #
#                                         TRAIN                                                    #
# ------------------------------------------------------------------------------------------------ #
@cli.command()
@click.argument("bundle_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--variant", type=click.Choice(VARIANTS), default=None)
@click.option("--name", default="model", show_default=True)
@click.pass_obj
def train(settings: SimpleNamespace, bundle_path: str, variant: str, name: str) -> None:
    """Trains on a whole bundle; writes <out>/<name>.ckpt and <out>/<name>_train.csv."""
    io = _io()
    bundle = import_container(bundle_path, io=io)
    config = _model_config(variant)
    options = _harness(settings)
    epochs = _first(settings.epochs, _section("training").get("epochs"), options["epochs"])
    trainer = Trainer(config=config, adam=options["adam"], batch_size=options["batch_size"])
    params, report = trainer.fit(bundle, epochs=epochs, seed=settings.seed)
    save_checkpoint(params, config, settings.seed, epochs, _out(settings, f"{name}.ckpt"), io=io)
    report.export_csv(_out(settings, f"{name}_train.csv"), io=io)
    click.echo(
        f"Trained {config.variant} for {epochs} epochs: final loss {report.losses[-1]:.6f}, "
        f"accuracy {report.accuracies[-1]:.4f}."
    )


# ------------------------------------------------------------------------------------------------ #
#                                      EVAL COMMANDS                                               #
# ------------------------------------------------------------------------------------------------ #
@cli.group(name="eval")
def evaluate() -> None:
    """Leave-one-subject-out evaluation protocols."""


@evaluate.command("loso")
@click.argument("bundle_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--variant", type=click.Choice(VARIANTS), default=None)
@click.pass_obj
def eval_loso(settings: SimpleNamespace, bundle_path: str, variant: str) -> None:
    """Repeated LOSO on a balanced bundle, scored after every epoch."""
    bundle = import_container(bundle_path, io=_io())
    config = _model_config(variant)
    options = _harness(settings)
    report = evaluate_loso_balanced(
        bundle,
        config=config,
        epochs=options["epochs"],
        repeats=options["repeats"],
        seed=settings.seed,
        threads=options["threads"],
        adam=options["adam"],
        batch_size=options["batch_size"],
        test_batch=options["test_batch"],
    )
    _write_report(settings, report, f"loso_{config.variant}")


@evaluate.command("unbalanced")
@click.argument("balanced_path", type=click.Path(exists=True, dir_okay=False))
@click.argument("unbalanced_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--variant", type=click.Choice(VARIANTS), default=None)
@click.pass_obj
def eval_unbalanced(
    settings: SimpleNamespace, balanced_path: str, unbalanced_path: str, variant: str
) -> None:
    """Trains on other subjects' balanced data, tests on the held-out unbalanced data."""
    io = _io()
    balanced = import_container(balanced_path, io=io)
    unbalanced = import_container(unbalanced_path, io=io)
    config = _model_config(variant)
    options = _harness(settings)
    report = evaluate_loso_unbalanced(
        balanced,
        unbalanced,
        config=config,
        epochs=options["unbalanced_epochs"],
        seed=settings.seed,
        repeats=settings.repeats or 1,
        threads=options["threads"],
        adam=options["adam"],
        batch_size=options["batch_size"],
        test_batch=options["test_batch"],
    )
    _write_report(settings, report, f"unbalanced_{config.variant}")
    click.echo(report.by_subject().to_string(index=False))


@evaluate.command("baseline")
@click.argument("bundle_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--extractor", type=click.Choice(list(EXTRACTORS)), required=True)
@click.option("--classifier", "kind", type=click.Choice(list(CLASSIFIERS)), required=True)
@click.option(
    "--test-bundle",
    "test_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Score held-out subjects on this bundle instead.",
)
@click.pass_obj
def eval_baseline(
    settings: SimpleNamespace, bundle_path: str, extractor: str, kind: str, test_path: str
) -> None:
    """Deterministic LOSO of a feature extractor and classifier."""
    io = _io()
    bundle = import_container(bundle_path, io=io)
    test_bundle = import_container(test_path, io=io) if test_path else None
    report = evaluate_baseline(
        bundle, extractor, kind, test_bundle=test_bundle, threads=_harness(settings)["threads"]
    )
    _write_report(settings, report, f"baseline_{extractor}_{kind}")


@evaluate.command("variants")
@click.argument("bundle_path", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def eval_variants(settings: SimpleNamespace, bundle_path: str) -> None:
    """Runs the balanced protocol for every architecture variant."""
    bundle = import_container(bundle_path, io=_io())
    options = _harness(settings)
    reports = evaluate_variants(
        bundle,
        epochs=options["epochs"],
        repeats=options["repeats"],
        seed=settings.seed,
        config=_model_config(),
        threads=options["threads"],
        adam=options["adam"],
        batch_size=options["batch_size"],
        test_batch=options["test_batch"],
    )
    for variant, report in reports.items():
        _write_report(settings, report, f"loso_{variant}")


# ------------------------------------------------------------------------------------------------ #
#                                       INTERPRET                                                  #
# ------------------------------------------------------------------------------------------------ #
def parse_samples(text: str, size: int) -> range:
    """Parses 'i' or 'i:j' (half-open) into a range of sample indices."""
    try:
        if ":" in text:
            start, stop = (int(part) for part in text.split(":", 1))
        else:
            start = int(text)
            stop = start + 1
    except ValueError:
        raise click.BadParameter(f"Expected an index or a range i:j, got {text!r}.")
    if not 0 <= start < stop <= size:
        raise click.BadParameter(f"Samples {text} lie outside the bundle of {size} samples.")
    return range(start, stop)


@cli.command()
@click.argument("bundle_path", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--checkpoint",
    "checkpoint_path",
    type=click.Path(exists=True, dir_okay=False),
    required=True,
)
@click.option("--sample", "sample_spec", required=True, help="Sample index i or range i:j.")
@click.pass_obj
def interpret(
    settings: SimpleNamespace, bundle_path: str, checkpoint_path: str, sample_spec: str
) -> None:
    """Writes a CSV, SVG and JSON heatmap for every selected sample, normalizing each with
    the batch statistics of its subject."""
    io = _io()
    bundle = import_container(bundle_path, io=io)
    params, config, _, _ = load_checkpoint(checkpoint_path, io=io)
    section = _section("interpret")
    sigma = float(section.get("sigma", SIGMA))
    top_n = int(section.get("top_n", TOP_N))
    references = {}
    for index in parse_samples(sample_spec, len(bundle)):
        sample = bundle[index]
        if sample.subject_id not in references:
            references[sample.subject_id] = bundle.subset([sample.subject_id]).signals()
        result = interpret_sample(
            sample.signal,
            params,
            config,
            sigma=sigma,
            top_n=top_n,
            reference=references[sample.subject_id],
        )
        export_heatmap(
            result,
            sample.signal,
            settings.out,
            f"sample_{index:05d}",
            subject=sample.subject_id,
            label=sample.label,
            io=io,
        )
        click.echo(
            f"Sample {index}: subject {sample.subject_id}, label {sample.label}, "
            f"predicted {result.predicted}."
        )


# ------------------------------------------------------------------------------------------------ #
#                                         ENTRY                                                    #
# ------------------------------------------------------------------------------------------------ #
def main(argv: List[str] = None) -> int:
    """Runs the CLI and returns its exit code."""
    container = DrowsyLab()
    container.core.init_resources()
    container.wire(modules=[__name__])
    try:
        result = cli.main(args=argv, prog_name="drowsy-lab", standalone_mode=False)
        return result if isinstance(result, int) else 0
    except click.exceptions.Exit as e:
        return e.exit_code
    except (click.ClickException, click.Abort) as e:
        click.echo(f"Usage error: {e}", err=True)
        return USAGE_ERROR
    except DrowsyLabError as e:
        click.echo(f"{e.__class__.__name__}: {e}", err=True)
        return e.exit_code
    except OSError as e:
        click.echo(f"Data error: {e}", err=True)
        return DrowsyLabError.exit_code
    except ValueError as e:
        click.echo(f"Usage error: {e}", err=True)
        return USAGE_ERROR
    finally:
        container.unwire()
        container.core.shutdown_resources()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
