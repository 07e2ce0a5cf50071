"""Audit corpora of (name, activity-year) records for temporal gender bias.

For every record, two predictors are compared: a birth-cohort-aware
temporal predictor (activity year mapped to a distribution over birth
years) and an atemporal predictor that pools counts over a wide year range
the way commercial gender APIs do. The difference in expected female mass
is the historical over-count introduced by the atemporal shortcut.
"""
from __future__ import annotations

import csv
import statistics
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import errors
from .dataset import Dataset
from .model import (
    ClassificationPolicy,
    GenderLabel,
    GenderProbability,
    MAJORITY,
    classify,
    p_female_pooled,
)

DEFAULT_COHORT_OFFSET = 35  # approximate mid-career age at publication
DEFAULT_ATEMPORAL_RANGE = (1880, 2020)

KNOWN_P_FEMALE = {"F": 0.95, "M": 0.05, "U": 0.5}


@dataclass(frozen=True)
class CohortModel:
    """Maps an activity year to a distribution over plausible birth years."""

    kind: str = "fixed-offset"
    offset_years: int = DEFAULT_COHORT_OFFSET
    half_width: int = 0

    def __post_init__(self):
        if self.kind not in ("fixed-offset", "uniform-window", "triangular-window"):
            raise errors.ConfigError(f"unknown cohort model kind {self.kind!r}")
        if self.half_width < 0:
            raise errors.ConfigError("half_width must be >= 0")

    @classmethod
    def parse(cls, text: str) -> "CohortModel":
        """Parse CLI syntax: ``fixed:35``, ``uniform:35:10``, ``triangular:35:10``."""
        parts = text.split(":")
        kinds = {"fixed": "fixed-offset", "uniform": "uniform-window",
                 "triangular": "triangular-window"}
        if parts[0] not in kinds:
            raise errors.ConfigError(f"unknown cohort spec {text!r}")
        offset = int(parts[1]) if len(parts) > 1 else DEFAULT_COHORT_OFFSET
        half = int(parts[2]) if len(parts) > 2 else 0
        return cls(kind=kinds[parts[0]], offset_years=offset, half_width=half)


@dataclass(frozen=True)
class CorpusRecord:
    record_id: str
    given_name: str
    activity_year: int
    known_gender: Optional[str] = None  # F, M, U or None for unlabeled

    @property
    def author_id(self) -> str:
        """Author part of "author:paper" record ids; whole id otherwise."""
        return self.record_id.split(":", 1)[0]

    @property
    def known_p_female(self) -> Optional[float]:
        if self.known_gender is None:
            return None
        return KNOWN_P_FEMALE[self.known_gender]


@dataclass(frozen=True)
class DecadeRow:
    period: int  # decade start, e.g. 1970
    n_records: int
    n_unresolved: int
    expected_female_temporal: float
    expected_female_atemporal: float

    @property
    def overcount(self) -> float:
        return self.expected_female_atemporal - self.expected_female_temporal


@dataclass(frozen=True)
class AuditReport:
    rows: tuple[DecadeRow, ...]
    config: dict = field(compare=False)

    @property
    def total_records(self) -> int:
        return sum(row.n_records for row in self.rows)

    @property
    def total_unresolved(self) -> int:
        return sum(row.n_unresolved for row in self.rows)

    @property
    def total_overcount(self) -> float:
        return sum(row.overcount for row in self.rows)


def infer_birth_distribution(
    activity_year: int,
    cohort_model: CohortModel,
    dataset: Optional[Dataset] = None,
) -> list[tuple[int, float]]:
    """Distribution over birth years for someone active in a given year.

    If a dataset is supplied the distribution is restricted to loaded
    years and renormalized.
    """
    center = activity_year - cohort_model.offset_years
    h = cohort_model.half_width
    if cohort_model.kind == "fixed-offset" or h == 0:
        pairs = [(center, 1.0)]
    elif cohort_model.kind == "uniform-window":
        pairs = [(year, 1.0) for year in range(center - h, center + h + 1)]
    else:  # triangular-window
        pairs = [
            (center + d, float(h + 1 - abs(d)))
            for d in range(-h, h + 1)
        ]
    if dataset is not None:
        pairs = [(year, w) for year, w in pairs if year in dataset.tables]
    total = sum(w for _, w in pairs)
    if total == 0:
        raise errors.EmptySupport(
            f"no loaded year receives cohort weight for activity year {activity_year}"
        )
    return [(year, w / total) for year, w in pairs]


def temporal_p_female(
    dataset: Dataset,
    name: str,
    birth_distribution: Sequence[tuple[int, float]],
) -> GenderProbability:
    """Mixture of per-year p(F), weighted by cohort weight x yearly usage.

    A person active in a given year is more likely born in a year when the
    name was common, so within the cohort window the mixture weights are
    proportional to the name's total count that year.
    """
    terms = []
    female_sum = male_sum = 0
    for year, weight in birth_distribution:
        counts = dataset.lookup(name, year) if year in dataset.tables else None
        if not counts or sum(counts) == 0:
            continue
        female, male = counts
        support = female + male
        terms.append((weight * support, female / support))
        female_sum += female
        male_sum += male
    if not terms:
        span = f"{birth_distribution[0][0]}..{birth_distribution[-1][0]}"
        raise errors.NoData(name, f"birth years {span}")
    norm = sum(w for w, _ in terms)
    mixture = sum(w * p for w, p in terms) / norm
    return GenderProbability(
        name=name,
        context=f"cohort mixture over {len(terms)} birth years",
        p_female=mixture,
        female_count=female_sum,
        male_count=male_sum,
    )


def _predict_pair(dataset, record, cohort_model, atemporal_range):
    """(temporal, atemporal) probabilities, or None if either lacks data."""
    try:
        dist = infer_birth_distribution(record.activity_year, cohort_model, dataset)
        temporal = temporal_p_female(dataset, record.given_name, dist)
        atemporal = p_female_pooled(dataset, record.given_name, atemporal_range)
    except (errors.NoData, errors.EmptySupport):
        return None
    return temporal, atemporal


def audit_corpus(
    records: Iterable[CorpusRecord],
    dataset: Dataset,
    cohort_model: CohortModel = CohortModel(),
    atemporal_range: tuple[int, int] = DEFAULT_ATEMPORAL_RANGE,
) -> AuditReport:
    """Decade-by-decade expected-female comparison of the two predictors.

    Records that fail either predictor are tallied as unresolved and
    excluded from both expectation sums.
    """
    buckets: dict[int, list] = {}
    for record in records:
        decade = record.activity_year // 10 * 10
        buckets.setdefault(decade, []).append(record)

    rows = []
    for decade in sorted(buckets):
        n_data = unresolved = 0
        exp_temporal = exp_atemporal = 0.0
        for record in buckets[decade]:
            pair = _predict_pair(dataset, record, cohort_model, atemporal_range)
            if pair is None:
                unresolved += 1
                continue
            temporal, atemporal = pair
            n_data += 1
            exp_temporal += temporal.p_female
            exp_atemporal += atemporal.p_female
        rows.append(
            DecadeRow(
                period=decade,
                n_records=n_data,
                n_unresolved=unresolved,
                expected_female_temporal=exp_temporal,
                expected_female_atemporal=exp_atemporal,
            )
        )
    config = {
        "cohort_model": f"{cohort_model.kind}:{cohort_model.offset_years}"
        + (f":{cohort_model.half_width}" if cohort_model.half_width else ""),
        "atemporal_range": f"{atemporal_range[0]}..{atemporal_range[1]}",
    }
    return AuditReport(rows=tuple(rows), config=config)


def evaluate_known(
    records: Iterable[CorpusRecord],
    dataset: Dataset,
    cohort_model: CohortModel = CohortModel(),
    atemporal_range: tuple[int, int] = DEFAULT_ATEMPORAL_RANGE,
    policy: ClassificationPolicy = MAJORITY,
) -> dict:
    """Score both predictors against records with known gender labels.

    Returns per-predictor confusion matrices plus per-gender paper counts,
    author counts, and median activity years.
    """
    labeled = [r for r in records if r.known_gender is not None]
    if not labeled:
        raise errors.EmptyInput("no labeled records")

    confusion = {
        "temporal": {},
        "atemporal": {},
    }
    years_by_gender: dict[str, list[int]] = {}
    authors_by_gender: dict[str, set] = {}
    for record in labeled:
        years_by_gender.setdefault(record.known_gender, []).append(record.activity_year)
        authors_by_gender.setdefault(record.known_gender, set()).add(record.author_id)

        pair = _predict_pair(dataset, record, cohort_model, atemporal_range)
        if pair is None:
            predicted = {"temporal": GenderLabel.UNKNOWN, "atemporal": GenderLabel.UNKNOWN}
        else:
            predicted = {
                "temporal": classify(pair[0], policy),
                "atemporal": classify(pair[1], policy),
            }
        for which, label in predicted.items():
            key = (record.known_gender, label.value)
            confusion[which][key] = confusion[which].get(key, 0) + 1

    return {
        "confusion": confusion,
        "record_counts": {g: len(v) for g, v in years_by_gender.items()},
        "author_counts": {g: len(v) for g, v in authors_by_gender.items()},
        "median_activity_year": {
            g: statistics.median(v) for g, v in years_by_gender.items()
        },
    }


def load_corpus_csv(path: Path | str) -> list[CorpusRecord]:
    """Read a corpus CSV: record_id,given_name,activity_year,known_gender."""
    records = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            gender = (row.get("known_gender") or "").strip() or None
            if gender is not None and gender not in KNOWN_P_FEMALE:
                raise errors.ConfigError(
                    f"record {row['record_id']}: known_gender must be F, M, U or empty"
                )
            records.append(
                CorpusRecord(
                    record_id=row["record_id"],
                    given_name=row["given_name"],
                    activity_year=int(row["activity_year"]),
                    known_gender=gender,
                )
            )
    return records


def load_leslie_fixture() -> list[CorpusRecord]:
    """The bundled 478-paper Leslie publication corpus (1970-2020)."""
    source = resources.files("temponym").joinpath("data/fixtures/leslie_corpus.csv")
    with resources.as_file(source) as path:
        return load_corpus_csv(path)
