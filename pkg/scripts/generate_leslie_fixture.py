#!/usr/bin/env python3
"""Generate the bundled Leslie publication corpus fixture.

478 papers by 133 distinct authors named Leslie, 1970-2020:
  - 37 male authors, 242 papers, median year exactly 1995 (121 papers on
    each side, none in 1995 itself);
  - 83 female authors, 220 papers, 23 of them in or before 1995, median
    year exactly 2008;
  - 13 authors of unresolved gender, 16 papers.

record_id is "<author>:<paper>" so per-author tallies can be recovered.
Deterministic; regenerate with:  python scripts/generate_leslie_fixture.py
"""
from __future__ import annotations

import csv
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "temponym" / "data" / "fixtures" / "leslie_corpus.csv"


def spread(n: int, lo: int, hi: int) -> list[int]:
    """n years evenly spread over [lo, hi], endpoints included."""
    if n == 1:
        return [lo]
    return [lo + round(i * (hi - lo) / (n - 1)) for i in range(n)]


def main() -> None:
    male_years = spread(121, 1970, 1994) + spread(121, 1996, 2020)
    female_years = (
        spread(23, 1971, 1995)      # the sparse early contributions
        + spread(77, 1996, 2007)
        + [2008] * 30               # pins the median at 2008
        + spread(90, 2009, 2020)
    )
    unknown_years = spread(16, 1972, 2019)

    rows = []
    for gender, prefix, n_authors, years in [
        ("M", "m", 37, male_years),
        ("F", "f", 83, female_years),
        ("U", "u", 13, unknown_years),
    ]:
        for i, year in enumerate(sorted(years)):
            author = f"{prefix}{(i % n_authors) + 1:03d}"
            rows.append((f"{author}:p{i + 1:03d}", "Leslie", year, gender))

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["record_id", "given_name", "activity_year", "known_gender"])
        writer.writerows(rows)
    print(f"wrote {len(rows)} records to {OUT}")


if __name__ == "__main__":
    main()
