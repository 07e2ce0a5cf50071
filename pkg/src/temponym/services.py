"""Third-party name-gender predictions: offline fixtures or live HTTP.

The bundled fixture table carries a dated snapshot of what Gender-API,
NamSor, and Genderize.io returned for the ten 1925 benchmark names, so
divergence reports are reproducible without network access. Live mode
talks to a genderize.io-style endpoint, rate limited and disk cached;
live results drift as vendors update their databases and are reported
but never treated as ground truth.
"""
from __future__ import annotations

import csv
import datetime
import json
import os
import re
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Optional

from . import errors
from .dataset import Dataset
from .model import p_female

CACHE_VERSION = "v1"
FixtureTable = dict[str, dict[str, "ExternalPrediction"]]


@dataclass(frozen=True)
class ExternalPrediction:
    service_id: str
    name: str
    predicted_label: str  # F, M or U
    p_female: Optional[float]
    sample_count: Optional[int]
    source: str  # live | fixture
    fetched_at: str


@dataclass(frozen=True)
class ServiceConfig:
    service_id: str
    mode: str = "fixture"  # fixture | live
    endpoint_url: Optional[str] = None
    rate_limit: float = 1.0  # requests per second
    fixture_table: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        if self.mode not in ("fixture", "live"):
            raise errors.ConfigError(f"unknown service mode {self.mode!r}")
        if self.mode == "fixture" and self.fixture_table is None:
            raise errors.ConfigError(
                f"{self.service_id}: fixture mode requires a fixture table"
            )

    @property
    def api_key(self) -> Optional[str]:
        env_name = "TEMPONYM_" + re.sub(r"\W", "_", self.service_id.upper()) + "_KEY"
        return os.environ.get(env_name)


class RateLimiter:
    """Enforces a requests-per-second ceiling; clock and sleep injectable."""

    def __init__(
        self,
        rate: float,
        clock: Callable[[], float] = time.monotonic,
        sleep: Callable[[float], None] = time.sleep,
    ):
        if rate <= 0:
            raise errors.ConfigError("rate must be positive")
        self.interval = 1.0 / rate
        self.clock = clock
        self.sleep = sleep
        self._next_allowed = clock()

    def wait(self) -> None:
        now = self.clock()
        if now < self._next_allowed:
            self.sleep(self._next_allowed - now)
            now = self._next_allowed
        self._next_allowed = now + self.interval


class PredictionCache:
    """Disk cache keyed by (service, name, date) so reruns are reproducible."""

    def __init__(self, directory: Path | str):
        self.root = Path(directory) / CACHE_VERSION

    def _path(self, service_id: str, name: str, date: str) -> Path:
        return self.root / service_id / f"{name.casefold()}_{date}.json"

    def get(self, service_id: str, name: str, date: str) -> Optional[ExternalPrediction]:
        path = self._path(service_id, name, date)
        if not path.exists():
            return None
        return ExternalPrediction(**json.loads(path.read_text()))

    def put(self, prediction: ExternalPrediction, date: str) -> None:
        path = self._path(prediction.service_id, prediction.name, date)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(prediction.__dict__))
        tmp.replace(path)  # atomic: concurrent readers never see partial writes


def load_fixture_table(path: Optional[Path | str] = None) -> FixtureTable:
    """Fixture CSV -> {service_id: {casefolded name: prediction}}.

    Defaults to the bundled benchmark snapshot.
    """
    if path is None:
        source = resources.files("temponym").joinpath("data/fixtures/table1_services.csv")
        with resources.as_file(source) as bundled:
            return load_fixture_table(bundled)
    table: FixtureTable = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            p_text = (row.get("p_female") or "").strip()
            count_text = (row.get("sample_count") or "").strip()
            prediction = ExternalPrediction(
                service_id=row["service_id"],
                name=row["name"],
                predicted_label=row["label"],
                p_female=float(p_text) if p_text else None,
                sample_count=int(count_text) if count_text else None,
                source="fixture",
                fetched_at="",
            )
            table.setdefault(row["service_id"], {})[row["name"].casefold()] = prediction
    return table


def fixture_configs(path: Optional[Path | str] = None) -> list[ServiceConfig]:
    """One fixture-mode config per service present in the fixture file."""
    table = load_fixture_table(path)
    return [
        ServiceConfig(service_id=service_id, mode="fixture", fixture_table=table[service_id])
        for service_id in sorted(table)
    ]


def fetch_prediction(
    config: ServiceConfig,
    name: str,
    cache: Optional[PredictionCache] = None,
    limiter: Optional[RateLimiter] = None,
) -> ExternalPrediction:
    """One normalized prediction, from the fixture table or a live call."""
    if config.mode == "fixture":
        hit = config.fixture_table.get(name.casefold())
        if hit is None:
            raise errors.ServiceUnknownName(config.service_id, name)
        return hit

    if not config.endpoint_url:
        raise errors.ConfigError(f"{config.service_id}: live mode requires endpoint_url")

    today = datetime.date.today().isoformat()
    if cache is not None:
        cached = cache.get(config.service_id, name, today)
        if cached is not None:
            return cached

    if limiter is not None:
        limiter.wait()
    prediction = _fetch_live(config, name, today)
    if cache is not None:
        cache.put(prediction, today)
    return prediction


def _fetch_live(config: ServiceConfig, name: str, today: str) -> ExternalPrediction:
    import requests

    params = {"name": name}
    if config.api_key:
        params["apikey"] = config.api_key
    try:
        response = requests.get(config.endpoint_url, params=params, timeout=30)
    except requests.RequestException as exc:
        raise errors.NetworkError(str(exc)) from exc
    if response.status_code == 401:
        raise errors.AuthError(f"{config.service_id}: authentication failed")
    if response.status_code == 429:
        retry = float(response.headers.get("Retry-After", "1"))
        raise errors.RateLimited(retry)
    if response.status_code != 200:
        raise errors.NetworkError(
            f"{config.service_id}: HTTP {response.status_code}"
        )

    body = response.json()
    gender = body.get("gender")
    probability = body.get("probability")
    if gender not in ("female", "male"):
        raise errors.ServiceUnknownName(config.service_id, name)
    if probability is None:
        label_p = None
    else:
        label_p = float(probability)
    if label_p is None:
        p = None
    else:
        p = label_p if gender == "female" else 1.0 - label_p
    return ExternalPrediction(
        service_id=config.service_id,
        name=name,
        predicted_label="F" if gender == "female" else "M",
        p_female=p,
        sample_count=body.get("count"),
        source="live",
        fetched_at=today,
    )


@dataclass(frozen=True)
class ComparisonRow:
    name: str
    ssa_p_female: Optional[float]
    predictions: dict  # service_id -> ExternalPrediction
    cell_errors: dict  # service_id (or "ssa") -> error message

    def divergence(self, service_id: str) -> Optional[float]:
        prediction = self.predictions.get(service_id)
        if prediction is None or prediction.p_female is None or self.ssa_p_female is None:
            return None
        return abs(prediction.p_female - self.ssa_p_female)


def comparison_table(
    names: Iterable[str],
    dataset: Dataset,
    ssa_year: int,
    configs: Iterable[ServiceConfig],
    cache: Optional[PredictionCache] = None,
) -> list[ComparisonRow]:
    """One row per name: every service's prediction vs the SSA ground truth.

    Per-cell failures are recorded in the row, never fatal.
    """
    configs = list(configs)
    dataset.table(ssa_year)  # surface YearNotLoaded before any fetch
    rows = []
    for name in names:
        cell_errors: dict[str, str] = {}
        try:
            ssa = p_female(dataset, name, ssa_year).p_female
        except errors.NoData as exc:
            ssa = None
            cell_errors["ssa"] = str(exc)
        predictions = {}
        for config in configs:
            try:
                predictions[config.service_id] = fetch_prediction(config, name, cache=cache)
            except errors.TemponymError as exc:
                cell_errors[config.service_id] = str(exc)
        rows.append(
            ComparisonRow(
                name=name,
                ssa_p_female=ssa,
                predictions=predictions,
                cell_errors=cell_errors,
            )
        )
    return rows


def divergence_metrics(rows: Iterable[ComparisonRow]) -> dict:
    """Per-service divergence stats vs SSA plus pairwise label disagreement."""
    rows = list(rows)
    if not rows:
        raise errors.EmptyInput("no comparison rows")

    per_service: dict[str, list[float]] = {}
    service_ids: set[str] = set()
    for row in rows:
        for service_id in row.predictions:
            service_ids.add(service_id)
            divergence = row.divergence(service_id)
            if divergence is not None:
                per_service.setdefault(service_id, []).append(divergence)

    disagreement: dict[tuple[str, str], int] = {}
    ordered = sorted(service_ids)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            count = 0
            for row in rows:
                pa, pb = row.predictions.get(a), row.predictions.get(b)
                if pa and pb and pa.predicted_label != pb.predicted_label:
                    count += 1
            disagreement[(a, b)] = count

    return {
        "per_service": {
            service_id: {
                "max_divergence": max(values),
                "mean_divergence": sum(values) / len(values),
                "n": len(values),
            }
            for service_id, values in per_service.items()
        },
        "label_disagreement": disagreement,
    }
