"""Per-name gender shifts between two years, ranked and summarized.

The shift for a name is (p(F) in the later year minus p(F) in the earlier
year) scaled by 100: positive means the name moved toward female use,
negative toward male use. Rankings come unweighted (by shift magnitude
alone) or weighted by how heavily the name was used in the two years.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import errors
from .dataset import Dataset
from .model import p_female

DEFAULT_MIN_SUPPORT = 50
DEFAULT_MIN_ABS_DELTA = 20.0
DEFAULT_YEAR_PAIR = (1925, 2000)

# How two endpoint supports become a ranking weight. The mean is the
# default; the choice is configurable because no single convention exists.
WEIGHTINGS: dict[str, Callable[[int, int], float]] = {
    "mean": lambda s1, s2: (s1 + s2) / 2,
    "sum": lambda s1, s2: float(s1 + s2),
    "max": lambda s1, s2: float(max(s1, s2)),
    "log-sum": lambda s1, s2: math.log1p(s1 + s2),
}


@dataclass(frozen=True)
class ShiftEntry:
    name: str
    y1: int
    y2: int
    p1: float
    p2: float
    delta_scaled: float
    support_y1: int
    support_y2: int
    weight: float
    weighted_shift: float


@dataclass(frozen=True)
class ShiftStatistics:
    n_total: int
    n_positive: int
    n_negative: int
    median: float
    mean: float
    net_direction: str  # female | male | neutral


def gender_shift(
    dataset: Dataset,
    name: str,
    y1: int,
    y2: int,
    weighting: str = "mean",
) -> ShiftEntry:
    """Shift entry for one name; requires data at both endpoint years."""
    prob1 = p_female(dataset, name, y1)
    prob2 = p_female(dataset, name, y2)
    return _entry(name, y1, y2, prob1, prob2, WEIGHTINGS[weighting])


def _entry(name, y1, y2, prob1, prob2, weight_fn) -> ShiftEntry:
    delta = (prob2.p_female - prob1.p_female) * 100
    weight = weight_fn(prob1.support, prob2.support)
    return ShiftEntry(
        name=name,
        y1=y1,
        y2=y2,
        p1=prob1.p_female,
        p2=prob2.p_female,
        delta_scaled=delta,
        support_y1=prob1.support,
        support_y2=prob2.support,
        weight=weight,
        weighted_shift=delta * weight,
    )


def _candidates(dataset: Dataset, y1: int, y2: int, min_support: int, weighting: str):
    table1 = dataset.table(y1)
    table2 = dataset.table(y2)
    weight_fn = WEIGHTINGS[weighting]
    for name in table1.entries.keys() & table2.entries.keys():
        prob1 = p_female(dataset, name, y1)
        prob2 = p_female(dataset, name, y2)
        if prob1.support < min_support or prob2.support < min_support:
            continue
        yield _entry(name, y1, y2, prob1, prob2, weight_fn)


def rank_shifts(
    dataset: Dataset,
    y1: int,
    y2: int,
    min_support_each_year: int = DEFAULT_MIN_SUPPORT,
    top_k: int = 50,
    weighted: bool = False,
    weighting: str = "mean",
) -> list[ShiftEntry]:
    """Top-k shifts, deterministically ordered.

    Sorted descending by |shift| (or |weighted shift|); ties broken by
    larger combined support, then by name.
    """
    entries = list(_candidates(dataset, y1, y2, min_support_each_year, weighting))
    magnitude = (
        (lambda e: abs(e.weighted_shift)) if weighted else (lambda e: abs(e.delta_scaled))
    )
    entries.sort(
        key=lambda e: (-magnitude(e), -(e.support_y1 + e.support_y2), e.name)
    )
    return entries[: max(top_k, 0)]


def shift_statistics(
    entries: Iterable[ShiftEntry],
    use_weighted: bool = False,
) -> ShiftStatistics:
    """Counts, median, and mean over a shift population."""
    values = [
        entry.weighted_shift if use_weighted else entry.delta_scaled
        for entry in entries
    ]
    if not values:
        raise errors.EmptyInput("no shift entries")
    median = statistics.median(values)
    if median > 0:
        direction = "female"
    elif median < 0:
        direction = "male"
    else:
        direction = "neutral"
    return ShiftStatistics(
        n_total=len(values),
        n_positive=sum(1 for v in values if v > 0),
        n_negative=sum(1 for v in values if v < 0),
        median=median,
        mean=statistics.fmean(values),
        net_direction=direction,
    )


def qualifying_names(
    dataset: Dataset,
    y1: int,
    y2: int,
    min_support: int = DEFAULT_MIN_SUPPORT,
    min_abs_delta: float = DEFAULT_MIN_ABS_DELTA,
) -> set[str]:
    """Names whose shift magnitude and support clear the thresholds.

    With the defaults the population lands near the ~300 names that show
    a measurable shift between 1925 and 2000.
    """
    if math.isinf(min_support):
        return set()
    return {
        entry.name
        for entry in _candidates(dataset, y1, y2, int(min_support), "mean")
        if abs(entry.delta_scaled) >= min_abs_delta
    }
