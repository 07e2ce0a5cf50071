"""Property suites over randomized inputs (1,000 cases per property)."""
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from temponym import audit, model, shifts
from temponym import dataset as ds

THOROUGH = settings(max_examples=1000, deadline=None)

counts = st.tuples(st.integers(0, 10**6), st.integers(0, 10**6)).filter(
    lambda fm: fm[0] + fm[1] > 0
)


def build_prob(female, male):
    data = ds.load_dataset([(1950, f"Pat,F,{female}\nPat,M,{male}\n")], strict=False)
    return model.p_female(data, "Pat", 1950)


@THOROUGH
@given(counts)
def test_probability_normalization(fm):
    female, male = fm
    prob = build_prob(female, male)
    support = female + male
    assert 0.0 <= prob.p_female <= 1.0
    assert abs(prob.p_female * support - female) <= math.ulp(float(max(female, 1)))


@THOROUGH
@given(st.lists(st.tuples(st.integers(0, 10**5), st.integers(0, 10**5)), min_size=1, max_size=5))
def test_pooling_equals_count_weighted_mean(yearly):
    sources = [
        (1950 + i, f"Pat,F,{f}\nPat,M,{m}\n") for i, (f, m) in enumerate(yearly)
    ]
    data = ds.load_dataset(sources, strict=False)
    total = sum(f + m for f, m in yearly)
    if total == 0:
        return
    # independent oracle: weighted mean of per-year ratios
    expected = sum(
        (f + m) / total * (f / (f + m)) for f, m in yearly if f + m > 0
    )
    pooled = model.p_female_pooled(data, "Pat", (1950, 1950 + len(yearly)))
    assert pooled.p_female == pytest.approx(expected, abs=1e-12)


def test_pooling_consistency_on_sample_names(sample_dataset):
    """Brute-force oracle over >=100 random real names from the archive."""
    rng = random.Random(42)
    all_names = sorted(
        set().union(*(t.entries.keys() for t in sample_dataset.tables.values()))
    )
    names = rng.sample(all_names, 120)
    lo, hi = 1880, 2020
    for name in names:
        female = male = 0
        for year in range(lo, hi + 1):
            hit = sample_dataset.tables[year].entries.get(name) if year in sample_dataset.tables else None
            if hit:
                female += hit[0]
                male += hit[1]
        if female + male == 0:
            continue
        pooled = model.p_female_pooled(sample_dataset, name, (lo, hi))
        assert pooled.female_count == female and pooled.male_count == male
        assert pooled.p_female == pytest.approx(female / (female + male))


@THOROUGH
@given(counts, counts)
def test_shift_antisymmetry(fm1, fm2):
    sources = [
        (1925, f"Pat,F,{fm1[0]}\nPat,M,{fm1[1]}\n"),
        (2000, f"Pat,F,{fm2[0]}\nPat,M,{fm2[1]}\n"),
    ]
    data = ds.load_dataset(sources, strict=False)
    forward = shifts.gender_shift(data, "Pat", 1925, 2000)
    backward = shifts.gender_shift(data, "Pat", 2000, 1925)
    assert backward.delta_scaled == -forward.delta_scaled


@THOROUGH
@given(counts, st.floats(0.501, 0.999), st.floats(0.001, 0.499))
def test_threshold_monotonicity(fm, low_threshold, bump):
    high_threshold = min(1.0, low_threshold + bump * (1.0 - low_threshold))
    prob = build_prob(*fm)
    low = model.classify(
        prob, model.ClassificationPolicy("symmetric-threshold", low_threshold, 1)
    )
    high = model.classify(
        prob, model.ClassificationPolicy("symmetric-threshold", high_threshold, 1)
    )
    # raising the threshold can only coarsen labels toward Unknown
    if high is not model.GenderLabel.UNKNOWN:
        assert low is high


@THOROUGH
@given(counts, st.sampled_from(["majority", "symmetric-threshold"]),
       st.floats(0.501, 0.999))
def test_label_complement_symmetry(fm, kind, threshold):
    female, male = fm
    policy = model.ClassificationPolicy(kind, threshold, 1)
    label = model.classify(build_prob(female, male), policy)
    swapped = model.classify(build_prob(male, female), policy)
    mirror = {
        model.GenderLabel.FEMALE: model.GenderLabel.MALE,
        model.GenderLabel.MALE: model.GenderLabel.FEMALE,
        model.GenderLabel.UNKNOWN: model.GenderLabel.UNKNOWN,
    }
    assert swapped is mirror[label]


@THOROUGH
@given(
    st.integers(1900, 2020),
    st.sampled_from(["fixed-offset", "uniform-window", "triangular-window"]),
    st.integers(0, 60),
    st.integers(0, 15),
)
def test_cohort_weight_normalization(activity_year, kind, offset, half_width):
    cohort = audit.CohortModel(kind, offset, half_width)
    dist = audit.infer_birth_distribution(activity_year, cohort)
    weights = [w for _, w in dist]
    assert all(w >= 0 for w in weights)
    assert sum(weights) == pytest.approx(1.0)


@THOROUGH
@given(
    st.lists(
        st.tuples(st.integers(0, 10**4), st.integers(0, 10**4), st.floats(0.01, 1.0)),
        min_size=1, max_size=6,
    ).filter(lambda rows: any(f + m > 0 for f, m, _ in rows))
)
def test_mixture_bounds(rows):
    sources = [
        (1950 + i, f"Pat,F,{f}\nPat,M,{m}\n") for i, (f, m, _) in enumerate(rows)
    ]
    data = ds.load_dataset(sources, strict=False)
    total_weight = sum(w for _, _, w in rows)
    dist = [(1950 + i, w / total_weight) for i, (_, _, w) in enumerate(rows)]
    mixed = audit.temporal_p_female(data, "Pat", dist)
    per_year = [f / (f + m) for f, m, _ in rows if f + m > 0]
    assert min(per_year) - 1e-12 <= mixed.p_female <= max(per_year) + 1e-12
    assert 0.0 <= mixed.p_female <= 1.0
