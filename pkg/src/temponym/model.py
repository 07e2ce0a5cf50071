"""Female-gender probabilities for names, conditioned on time.

A probability is always an exact count ratio over an explicit temporal
context: a single year, a window around a year, or a pooled year range.
The pooled form mimics the "present-day snapshot" behaviour of commercial
gender APIs and serves as the atemporal baseline in bias audits.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import errors
from .dataset import Dataset

DEFAULT_MIN_SUPPORT = 20


class GenderLabel(Enum):
    FEMALE = "F"
    MALE = "M"
    UNKNOWN = "U"


@dataclass(frozen=True)
class GenderProbability:
    name: str
    context: str
    p_female: float
    female_count: int
    male_count: int

    @property
    def support(self) -> int:
        return self.female_count + self.male_count

    @property
    def p_male(self) -> float:
        return 1.0 - self.p_female


@dataclass(frozen=True)
class ClassificationPolicy:
    """How a probability becomes a Female/Male/Unknown label.

    ``majority`` labels by which side of 0.5 the probability falls on;
    ``symmetric-threshold`` only labels when the probability clears the
    threshold toward either gender (e.g. the common >0.95 rule).
    """

    kind: str = "majority"
    threshold: float = 0.95
    min_support: int = DEFAULT_MIN_SUPPORT

    def __post_init__(self):
        if self.kind not in ("majority", "symmetric-threshold"):
            raise errors.ConfigError(f"unknown policy kind {self.kind!r}")
        if self.kind == "symmetric-threshold" and not 0.5 < self.threshold <= 1.0:
            raise errors.ConfigError("threshold must be in (0.5, 1]")
        if self.min_support < 1:
            raise errors.ConfigError("min_support must be >= 1")


MAJORITY = ClassificationPolicy(kind="majority")
T95 = ClassificationPolicy(kind="symmetric-threshold", threshold=0.95, min_support=1)


def _ratio(female: int, male: int, pseudocount: float = 0.0) -> float:
    support = female + male
    if pseudocount:
        return (female + pseudocount) / (support + 2 * pseudocount)
    # exact ratio; Fraction keeps p * support == female to the ulp
    return float(Fraction(female, support))


def p_female(
    dataset: Dataset,
    name: str,
    year: int,
    fold_diacritics: bool = False,
    pseudocount: float = 0.0,
) -> GenderProbability:
    """p(F) for a single year of birth: female count over total count."""
    counts = dataset.lookup(name, year, fold_diacritics=fold_diacritics)
    if counts is None or sum(counts) == 0:
        raise errors.NoData(name, str(year))
    female, male = counts
    return GenderProbability(
        name=name,
        context=str(year),
        p_female=_ratio(female, male, pseudocount),
        female_count=female,
        male_count=male,
    )


def p_female_windowed(
    dataset: Dataset,
    name: str,
    center_year: int,
    half_width: int,
    fold_diacritics: bool = False,
    pseudocount: float = 0.0,
) -> GenderProbability:
    """p(F) over [center-h, center+h]; counts summed before dividing."""
    lo, hi = center_year - half_width, center_year + half_width
    return _accumulate(
        dataset, name, range(lo, hi + 1),
        context=f"{lo}..{hi} (window around {center_year})",
        fold_diacritics=fold_diacritics, pseudocount=pseudocount,
    )


def p_female_pooled(
    dataset: Dataset,
    name: str,
    year_range: range | tuple[int, int],
    fold_diacritics: bool = False,
    pseudocount: float = 0.0,
) -> GenderProbability:
    """p(F) pooled over every loaded year in the range (atemporal snapshot)."""
    if isinstance(year_range, tuple):
        year_range = range(year_range[0], year_range[1] + 1)
    return _accumulate(
        dataset, name, year_range,
        context=f"pooled {year_range[0]}..{year_range[-1]}",
        fold_diacritics=fold_diacritics, pseudocount=pseudocount,
    )


def _accumulate(dataset, name, years, context, fold_diacritics, pseudocount):
    female = male = 0
    for year in years:
        if year not in dataset.tables:
            continue
        counts = dataset.lookup(name, year, fold_diacritics=fold_diacritics)
        if counts:
            female += counts[0]
            male += counts[1]
    if female + male == 0:
        raise errors.NoData(name, context)
    return GenderProbability(
        name=name,
        context=context,
        p_female=_ratio(female, male, pseudocount),
        female_count=female,
        male_count=male,
    )


def classify(prob: GenderProbability, policy: ClassificationPolicy = MAJORITY) -> GenderLabel:
    """Label a probability under a policy; Unknown when conditions unmet."""
    if prob.support < policy.min_support:
        return GenderLabel.UNKNOWN
    # Exact rational comparison so that swapping the counts mirrors the
    # label exactly, even at threshold boundaries.
    p = Fraction(prob.female_count, prob.support)
    if float(p) != prob.p_female:  # smoothed probability; fall back to it
        p = Fraction(prob.p_female)
    if policy.kind == "majority":
        if p > Fraction(1, 2):
            return GenderLabel.FEMALE
        if p < Fraction(1, 2):
            return GenderLabel.MALE
        return GenderLabel.UNKNOWN
    threshold = Fraction(policy.threshold)
    if p > threshold:
        return GenderLabel.FEMALE
    if p < 1 - threshold:
        return GenderLabel.MALE
    return GenderLabel.UNKNOWN


def ambiguous_name_share(dataset: Dataset, year: int) -> float:
    """Share of children (not names) given a name used for both sexes."""
    table = dataset.table(year)
    if table.total_births == 0:
        return 0.0
    ambiguous = sum(
        female + male
        for female, male in table.entries.values()
        if female > 0 and male > 0
    )
    return ambiguous / table.total_births
