"""Parse SSA yearly name files into an immutable, queryable dataset.

File format is the SSA national distribution: one ``Name,Sex,Count`` record
per line, no header, one file per year of birth (``yob1925.txt``).
"""
from __future__ import annotations

import datetime
import gzip
import hashlib
import json
import re
import unicodedata
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence

from . import errors
from ._backend import merge_rows

MIN_YEAR = 1880

_YOB_RE = re.compile(r"yob(\d{4})\.txt$")

INDEX_MAGIC = b"TMPNIDX\n"
INDEX_VERSION = 1


def _max_year() -> int:
    return datetime.date.today().year


@dataclass(frozen=True)
class YearTable:
    """All name counts for one year of birth, F and M rows merged."""

    year: int
    entries: Mapping[str, tuple[int, int]]
    total_births: int
    skipped: int = 0
    _folded: Mapping[str, str] = field(repr=False, compare=False, default_factory=dict)

    def to_rows(self) -> str:
        """Serialize back to SSA row format (F rows first per name)."""
        lines = []
        for name in sorted(self.entries):
            female, male = self.entries[name]
            if female:
                lines.append(f"{name},F,{female}")
            if male:
                lines.append(f"{name},M,{male}")
        return "\n".join(lines) + ("\n" if lines else "")

    def lookup(self, name: str, fold_diacritics: bool = False) -> Optional[tuple[int, int]]:
        """Case-insensitive lookup; diacritic folding is opt-in."""
        hit = self.entries.get(name)
        if hit is not None:
            return hit
        key = name.casefold()
        if fold_diacritics:
            key = strip_diacritics(key)
        canonical = self._folded.get(key)
        if canonical is None:
            return None
        return self.entries[canonical]


@dataclass(frozen=True)
class Dataset:
    """Immutable year -> YearTable index; safe for concurrent readers."""

    tables: Mapping[int, YearTable]
    years_loaded: tuple[int, ...]

    def table(self, year: int) -> YearTable:
        try:
            return self.tables[year]
        except KeyError:
            raise errors.YearNotLoaded(year) from None

    def lookup(self, name: str, year: int, fold_diacritics: bool = False):
        return self.table(year).lookup(name, fold_diacritics=fold_diacritics)


def strip_diacritics(text: str) -> str:
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def _build_table(year: int, entries: dict[str, tuple[int, int]], skipped: int) -> YearTable:
    folded = {}
    for name in entries:
        folded[name.casefold()] = name
        folded[strip_diacritics(name.casefold())] = name
    total = sum(f + m for f, m in entries.values())
    return YearTable(
        year=year,
        entries=MappingProxyType(dict(entries)),
        total_births=total,
        skipped=skipped,
        _folded=MappingProxyType(folded),
    )


def parse_year_file(content: str, year: int, strict: bool = True) -> YearTable:
    """Parse one SSA yearly file into a merged YearTable.

    Strict mode aborts on any invalid row; lenient mode skips invalid rows
    and records how many were dropped.
    """
    if not MIN_YEAR <= year <= _max_year():
        raise errors.TemponymError(f"year {year} outside [{MIN_YEAR}, {_max_year()}]")
    entries, skipped = merge_rows(content, strict)
    return _build_table(year, entries, skipped)


def load_dataset(
    sources: Iterable[tuple[int, str]],
    strict: bool = True,
    max_workers: Optional[int] = None,
) -> Dataset:
    """Build a Dataset from (year, content) pairs; parse fans out per file.

    The result is order-independent: sources may arrive in any order.
    """
    pairs = list(sources)
    seen: set[int] = set()
    for year, _ in pairs:
        if year in seen:
            raise errors.DuplicateYear(year)
        seen.add(year)

    def parse_one(pair: tuple[int, str]) -> YearTable:
        year, content = pair
        try:
            return parse_year_file(content, year, strict=strict)
        except errors.TemponymError as exc:
            raise errors.TemponymError(f"year {year}: {exc}") from exc

    if len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            tables = list(pool.map(parse_one, pairs))
    else:
        tables = [parse_one(pair) for pair in pairs]

    by_year = {table.year: table for table in tables}
    return Dataset(
        tables=MappingProxyType(by_year),
        years_loaded=tuple(sorted(by_year)),
    )


def load_directory(
    directory: Path | str,
    years: Optional[Sequence[int]] = None,
    strict: bool = True,
) -> Dataset:
    """Load every yobYYYY.txt file in a directory, optionally filtered."""
    directory = Path(directory)
    wanted = set(years) if years is not None else None
    sources = []
    for path in sorted(directory.iterdir()):
        match = _YOB_RE.search(path.name)
        if not match:
            continue
        year = int(match.group(1))
        if wanted is not None and year not in wanted:
            continue
        sources.append((year, path.read_text()))
    return load_dataset(sources, strict=strict)


def dataset_summary(dataset: Dataset) -> dict:
    """Per-year totals, distinct name counts, and the grand total."""
    per_year = {}
    grand_total = 0
    all_names: set[str] = set()
    for year in dataset.years_loaded:
        table = dataset.tables[year]
        per_year[year] = {
            "total_births": table.total_births,
            "distinct_names": len(table.entries),
        }
        grand_total += table.total_births
        all_names.update(table.entries)
    return {
        "per_year": per_year,
        "grand_total": grand_total,
        "distinct_names": len(all_names),
    }


def bundled_sample_dir() -> Path:
    """Directory holding the packaged SSA-format sample archive."""
    return Path(__file__).resolve().parent / "data" / "ssa_sample"


# --- persisted index -------------------------------------------------------
#
# Layout: magic line, JSON header line (version + sha256 of the uncompressed
# payload + years), then a gzip-compressed payload of "year,name,f,m" lines.

def save_index(dataset: Dataset, path: Path | str) -> None:
    lines = []
    for year in dataset.years_loaded:
        table = dataset.tables[year]
        for name in sorted(table.entries):
            female, male = table.entries[name]
            lines.append(f"{year},{name},{female},{male}")
    payload = "\n".join(lines).encode()
    header = {
        "format": "temponym-index",
        "version": INDEX_VERSION,
        "sha256": hashlib.sha256(payload).hexdigest(),
        "years": list(dataset.years_loaded),
    }
    with open(path, "wb") as fh:
        fh.write(INDEX_MAGIC)
        fh.write(json.dumps(header).encode() + b"\n")
        fh.write(gzip.compress(payload))


def load_index(path: Path | str) -> Dataset:
    with open(path, "rb") as fh:
        magic = fh.read(len(INDEX_MAGIC))
        if magic != INDEX_MAGIC:
            raise errors.IndexFormatError(f"{path}: not a temponym index")
        header = json.loads(fh.readline())
        if header.get("version") != INDEX_VERSION:
            raise errors.IndexFormatError(
                f"{path}: unsupported index version {header.get('version')}"
            )
        try:
            payload = gzip.decompress(fh.read())
        except (OSError, EOFError) as exc:
            raise errors.IndexFormatError(f"{path}: corrupt payload ({exc})") from exc
    if hashlib.sha256(payload).hexdigest() != header["sha256"]:
        raise errors.IndexFormatError(f"{path}: checksum mismatch")

    per_year: dict[int, dict[str, tuple[int, int]]] = {}
    if payload:
        for line in payload.decode().split("\n"):
            year_text, name, female, male = line.split(",")
            per_year.setdefault(int(year_text), {})[name] = (int(female), int(male))
    tables = {year: _build_table(year, entries, 0) for year, entries in per_year.items()}
    return Dataset(tables=MappingProxyType(tables), years_loaded=tuple(sorted(tables)))
