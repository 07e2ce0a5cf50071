"""temponym command line interface.

Exit codes: 0 success, 2 usage error, 3 data error, 4 partial results
(some records could not be resolved).
"""
from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click

from . import audit as audit_mod
from . import dataset as dataset_mod
from . import errors, report, services
from . import model as model_mod
from . import shifts as shifts_mod

EXIT_DATA_ERROR = 3
EXIT_PARTIAL = 4


def parse_year_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise click.BadParameter(f"expected START..END, got {text!r}")


def _load_data(index_path, data_dir):
    if index_path and data_dir:
        raise click.UsageError("--index and --dir are mutually exclusive")
    try:
        if index_path:
            return dataset_mod.load_index(index_path)
        directory = Path(data_dir) if data_dir else dataset_mod.bundled_sample_dir()
        return dataset_mod.load_directory(directory)
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)


def _emit(payload, fmt: str, csv_rows=None, csv_header=None) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        out = io.StringIO()
        writer = csv.writer(out)
        if csv_header:
            writer.writerow(csv_header)
        writer.writerows(csv_rows or [])
        click.echo(out.getvalue().rstrip("\n"))


data_options = [
    click.option("--index", "index_path", type=click.Path(exists=True), default=None,
                 help="Persisted index file produced by `temponym ingest`."),
    click.option("--dir", "data_dir", type=click.Path(exists=True, file_okay=False),
                 default=None,
                 help="Directory of yobYYYY.txt files (default: bundled sample)."),
]


def with_data_options(fn):
    for option in reversed(data_options):
        fn = option(fn)
    return fn


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True), default=None,
              help="JSON file of default option values, keyed by subcommand.")
@click.pass_context
def main(ctx, config_path):
    """Temporally-aware name-gender analysis over SSA yearly name data."""
    if config_path:
        with open(config_path) as fh:
            ctx.default_map = json.load(fh)


@main.command()
@click.option("--dir", "data_dir", type=click.Path(exists=True, file_okay=False),
              required=True)
@click.option("--years", default=None, help="Restrict to a range, e.g. 1880..2023.")
@click.option("--strict/--lenient", default=True,
              help="Abort on invalid rows (default) or skip them with a tally.")
@click.option("--out", "out_path", type=click.Path(), required=True)
def ingest(data_dir, years, strict, out_path):
    """Parse SSA yearly files and persist a checksummed index."""
    wanted = None
    if years:
        lo, hi = parse_year_range(years)
        wanted = range(lo, hi + 1)
    try:
        data = dataset_mod.load_directory(data_dir, years=wanted, strict=strict)
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)
    dataset_mod.save_index(data, out_path)
    summary = dataset_mod.dataset_summary(data)
    skipped = sum(t.skipped for t in data.tables.values())
    click.echo(
        f"indexed {len(data.years_loaded)} years, "
        f"{summary['grand_total']} births, {summary['distinct_names']} names"
        + (f", {skipped} rows skipped" if skipped else "")
    )


@main.command()
@with_data_options
@click.option("--name", required=True)
@click.option("--year", type=int, default=None)
@click.option("--window", type=int, default=None, help="Half-width around --year.")
@click.option("--pooled", default=None, help="Pooled range, e.g. 1880..2020.")
@click.option("--policy", type=click.Choice(["majority", "t95"]), default="majority")
@click.option("--fold-diacritics", is_flag=True, default=False)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def query(index_path, data_dir, name, year, window, pooled, policy, fold_diacritics, fmt):
    """Female-gender probability for a name in a temporal context."""
    if year is None and pooled is None:
        raise click.UsageError("provide --year or --pooled")
    data = _load_data(index_path, data_dir)
    chosen_policy = model_mod.MAJORITY if policy == "majority" else model_mod.T95
    try:
        if pooled is not None:
            prob = model_mod.p_female_pooled(
                data, name, parse_year_range(pooled), fold_diacritics=fold_diacritics
            )
        elif window:
            prob = model_mod.p_female_windowed(
                data, name, year, window, fold_diacritics=fold_diacritics
            )
        else:
            prob = model_mod.p_female(data, name, year, fold_diacritics=fold_diacritics)
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)
    label = model_mod.classify(prob, chosen_policy)
    payload = {
        "name": prob.name,
        "context": prob.context,
        "p_female": round(prob.p_female, 6),
        "female_count": prob.female_count,
        "male_count": prob.male_count,
        "support": prob.support,
        "label": label.value,
    }
    _emit(
        payload, fmt,
        csv_header=["name", "context", "p_female", "female_count", "male_count", "label"],
        csv_rows=[[prob.name, prob.context, f"{prob.p_female:.4f}",
                   prob.female_count, prob.male_count, label.value]],
    )


@main.command()
@with_data_options
@click.option("--y1", type=int, default=shifts_mod.DEFAULT_YEAR_PAIR[0], show_default=True)
@click.option("--y2", type=int, default=shifts_mod.DEFAULT_YEAR_PAIR[1], show_default=True)
@click.option("--weighted", is_flag=True, default=False)
@click.option("--top", type=int, default=50, show_default=True)
@click.option("--min-support", type=int, default=shifts_mod.DEFAULT_MIN_SUPPORT,
              show_default=True)
@click.option("--min-delta", type=float, default=shifts_mod.DEFAULT_MIN_ABS_DELTA,
              show_default=True, help="Qualifying |shift| threshold (x100 scale).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def shift(index_path, data_dir, y1, y2, weighted, top, min_support, min_delta, fmt):
    """Rank gender shifts between two years; reports summary statistics."""
    data = _load_data(index_path, data_dir)
    try:
        entries = shifts_mod.rank_shifts(
            data, y1, y2, min_support_each_year=min_support, top_k=top, weighted=weighted
        )
        qualifying = shifts_mod.qualifying_names(
            data, y1, y2, min_support=min_support, min_abs_delta=min_delta
        )
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)
    stats = (
        shifts_mod.shift_statistics(entries, use_weighted=weighted) if entries else None
    )
    meta = {
        "y1": y1, "y2": y2, "weighted": weighted,
        "min_support": min_support, "min_abs_delta": min_delta,
        "qualifying_count": len(qualifying),
    }
    if fmt == "json":
        payload = {
            "meta": meta,
            "statistics": stats.__dict__ if stats else None,
            "entries": [entry.__dict__ for entry in entries],
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        rows = [
            [rank, e.name, f"{e.p1:.4f}", f"{e.p2:.4f}", f"{e.delta_scaled:.4f}",
             e.support_y1, e.support_y2, f"{e.weight:.1f}", f"{e.weighted_shift:.1f}"]
            for rank, e in enumerate(entries, start=1)
        ]
        _emit(None, "csv",
              csv_header=["rank", "name", "p1", "p2", "delta_scaled",
                          "support_y1", "support_y2", "weight", "weighted_shift"],
              csv_rows=rows)
        click.echo(f"# qualifying names at |delta|>={min_delta}: {len(qualifying)}",
                   err=True)


@main.command()
@with_data_options
@click.option("--year", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def ambiguity(index_path, data_dir, year, fmt):
    """Share of children given a name used for both sexes that year."""
    data = _load_data(index_path, data_dir)
    try:
        share = model_mod.ambiguous_name_share(data, year)
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)
    _emit({"year": year, "ambiguous_share": share}, fmt,
          csv_header=["year", "ambiguous_share"],
          csv_rows=[[year, f"{share:.4f}"]])


@main.command(name="audit")
@with_data_options
@click.option("--corpus", "corpus_path", type=click.Path(exists=True), default=None,
              help="Corpus CSV (default: the bundled Leslie fixture).")
@click.option("--cohort", default="fixed:35", show_default=True,
              help="fixed:OFFSET, uniform:OFFSET:HALF or triangular:OFFSET:HALF.")
@click.option("--atemporal", default="1880..2020", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def audit_cmd(index_path, data_dir, corpus_path, cohort, atemporal, fmt):
    """Temporal vs atemporal expected-female audit of a corpus."""
    data = _load_data(index_path, data_dir)
    try:
        records = (
            audit_mod.load_corpus_csv(corpus_path)
            if corpus_path else audit_mod.load_leslie_fixture()
        )
        model = audit_mod.CohortModel.parse(cohort)
        result = audit_mod.audit_corpus(
            records, data, cohort_model=model,
            atemporal_range=parse_year_range(atemporal),
        )
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)
    payload = {
        "config": result.config,
        "rows": [
            {**row.__dict__, "overcount": row.overcount} for row in result.rows
        ],
        "totals": {
            "records": result.total_records,
            "unresolved": result.total_unresolved,
            "overcount": result.total_overcount,
        },
    }
    _emit(payload, fmt,
          csv_header=["period", "n_records", "n_unresolved",
                      "expected_female_temporal", "expected_female_atemporal",
                      "overcount"],
          csv_rows=[[row.period, row.n_records, row.n_unresolved,
                     f"{row.expected_female_temporal:.4f}",
                     f"{row.expected_female_atemporal:.4f}",
                     f"{row.overcount:.4f}"] for row in result.rows])
    if result.total_unresolved:
        sys.exit(EXIT_PARTIAL)


@main.command()
@with_data_options
@click.option("--names", default=None, help="Comma-separated names.")
@click.option("--names-file", type=click.Path(exists=True), default=None,
              help="File with one name per line.")
@click.option("--ssa-year", type=int, default=1925, show_default=True)
@click.option("--services", "services_spec", default="fixtures", show_default=True,
              help='"fixtures" or "genderize-live:URL".')
@click.option("--fixture-file", type=click.Path(exists=True), default=None)
@click.option("--cache-dir", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def compare(index_path, data_dir, names, names_file, ssa_year, services_spec,
            fixture_file, cache_dir, fmt):
    """Compare third-party gender predictions against SSA ground truth."""
    if names:
        name_list = [n.strip() for n in names.split(",") if n.strip()]
    elif names_file:
        name_list = [
            line.strip() for line in Path(names_file).read_text().splitlines()
            if line.strip()
        ]
    else:
        raise click.UsageError("provide --names or --names-file")

    data = _load_data(index_path, data_dir)
    try:
        if services_spec == "fixtures":
            configs = services.fixture_configs(fixture_file)
        elif services_spec.startswith("genderize-live:"):
            configs = [services.ServiceConfig(
                service_id="genderize", mode="live",
                endpoint_url=services_spec.split(":", 1)[1],
            )]
        else:
            raise errors.ConfigError(f"unknown services spec {services_spec!r}")
        cache = services.PredictionCache(cache_dir) if cache_dir else None
        rows = services.comparison_table(name_list, data, ssa_year, configs, cache=cache)
        metrics = services.divergence_metrics(rows) if rows else None
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)

    service_ids = sorted({sid for row in rows for sid in row.predictions})
    if fmt == "json":
        payload = {
            "ssa_year": ssa_year,
            "rows": [
                {
                    "name": row.name,
                    "ssa_p_female": row.ssa_p_female,
                    "services": {
                        sid: {
                            "label": p.predicted_label,
                            "p_female": p.p_female,
                            "divergence": row.divergence(sid),
                        }
                        for sid, p in row.predictions.items()
                    },
                    "errors": row.cell_errors,
                }
                for row in rows
            ],
            "metrics": {
                "per_service": metrics["per_service"],
                "label_disagreement": {
                    f"{a}/{b}": n for (a, b), n in metrics["label_disagreement"].items()
                },
            } if metrics else None,
        }
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        header = ["name", "ssa_p_female"]
        for sid in service_ids:
            header += [f"{sid}_label", f"{sid}_p_female", f"{sid}_divergence"]
        csv_rows = []
        for row in rows:
            out = [row.name,
                   f"{row.ssa_p_female:.4f}" if row.ssa_p_female is not None else ""]
            for sid in service_ids:
                p = row.predictions.get(sid)
                d = row.divergence(sid)
                out += [
                    p.predicted_label if p else "",
                    f"{p.p_female:.4f}" if p and p.p_female is not None else "",
                    f"{d:.4f}" if d is not None else "",
                ]
            csv_rows.append(out)
        _emit(None, "csv", csv_header=header, csv_rows=csv_rows)
    if any(row.cell_errors for row in rows):
        sys.exit(EXIT_PARTIAL)


@main.group()
def plot():
    """Emit plot-ready data series (no rendering)."""


@plot.command()
@with_data_options
@click.option("--names", default=None, help="Comma-separated names.")
@click.option("--top-shifts", type=int, default=None,
              help="Instead of --names, use the top-N weighted shifting names.")
@click.option("--years", default="1925,1950,1975,2000", show_default=True,
              help="Comma-separated years or a range like 1925..2000.")
@click.option("--y1", type=int, default=shifts_mod.DEFAULT_YEAR_PAIR[0], show_default=True)
@click.option("--y2", type=int, default=shifts_mod.DEFAULT_YEAR_PAIR[1], show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def trajectories(index_path, data_dir, names, top_shifts, years, y1, y2, fmt):
    """p(F) trajectories for named or top-shifting names."""
    data = _load_data(index_path, data_dir)
    if ".." in years:
        lo, hi = parse_year_range(years)
        year_list = list(range(lo, hi + 1))
    else:
        year_list = [int(y) for y in years.split(",")]
    try:
        if top_shifts is not None:
            entries = shifts_mod.rank_shifts(data, y1, y2, top_k=top_shifts, weighted=True)
            name_list = [e.name for e in entries]
        elif names:
            name_list = [n.strip() for n in names.split(",") if n.strip()]
        else:
            raise click.UsageError("provide --names or --top-shifts")
        series = report.emit_trajectories(data, name_list, year_list)
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)
    _emit_series(series, fmt)


@plot.command()
@click.option("--corpus", "corpus_path", type=click.Path(exists=True), default=None,
              help="Labeled corpus CSV (default: the bundled Leslie fixture).")
@click.option("--reference", type=float, default=None,
              help=f"Constant reference p(F) line (e.g. {report.NAMSOR_LESLIE_REFERENCE}).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def bubbles(corpus_path, reference, fmt):
    """Year-by-year publication bubbles per known-gender stratum."""
    try:
        records = (
            audit_mod.load_corpus_csv(corpus_path)
            if corpus_path else audit_mod.load_leslie_fixture()
        )
        series = report.emit_bubble_series(records, reference_value=reference)
    except errors.TemponymError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_DATA_ERROR)
    _emit_series(series, fmt)


def _emit_series(series, fmt: str) -> None:
    if fmt == "json":
        payload = [
            {"series_id": s.series_id,
             "points": [{"x": x, "y": y, "size": size} for x, y, size in s.points]}
            for s in series
        ]
        click.echo(json.dumps(payload, indent=2))
    else:
        rows = [
            [s.series_id, x, f"{y:.6f}", "" if size is None else size]
            for s in series for x, y, size in s.points
        ]
        _emit(None, "csv", csv_header=["series_id", "x", "y", "size"], csv_rows=rows)


if __name__ == "__main__":
    main()
