"""On-disk formats: the sequence cache CSV and the b-file exchange format.

Cache CSV: header line ``n,f,L`` followed by one ``n,f(n),L(n)`` row per
line, decimal ASCII, n strictly ascending and contiguous, LF line endings,
trailing newline.  Values are tiny (f(n) <= n/2), so plain text keeps caches
human-diffable and byte-reproducible across platforms.

B-file: one ``n a(n)`` pair per line separated by a single space, ascending
n, one sequence per file — the standard plain-text interchange format for
integer sequences.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .errors import CorruptCacheError
from .sequence import SequenceRecord

CACHE_HEADER = "n,f,L"


def render_cache(records: Iterable[SequenceRecord]) -> str:
    """Serialize records to cache-CSV text (with trailing newline)."""
    lines = [CACHE_HEADER]
    lines.extend(f"{r.n},{r.f},{r.l}" for r in records)
    return "\n".join(lines) + "\n"


def render_cache_rows(records: Iterable[SequenceRecord]) -> str:
    """Data rows only (for appending to an existing cache file)."""
    return "".join(f"{r.n},{r.f},{r.l}\n" for r in records)


def parse_cache(text: str) -> list[SequenceRecord]:
    """Parse and validate cache-CSV text.

    Raises CorruptCacheError on any malformation: wrong header, non-integer
    fields, rows violating the sequence invariants, or non-contiguous n.
    An empty data section is valid (header only).
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # the trailing newline
    if not lines or lines[0] != CACHE_HEADER:
        raise CorruptCacheError(f"bad or missing header; expected {CACHE_HEADER!r}")
    records: list[SequenceRecord] = []
    for idx, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 3:
            raise CorruptCacheError(f"line {idx}: expected 3 comma-separated fields")
        try:
            n, f, l = (int(p) for p in parts)
        except ValueError:
            raise CorruptCacheError(f"line {idx}: non-integer field in {line!r}") from None
        try:
            record = SequenceRecord(n, f, l)
        except ValueError as err:
            raise CorruptCacheError(f"line {idx}: {err}") from None
        if records and record.n != records[-1].n + 1:
            raise CorruptCacheError(
                f"line {idx}: n={record.n} not contiguous after n={records[-1].n}"
            )
        records.append(record)
    return records


def load_cache(path: str | Path) -> list[SequenceRecord]:
    return parse_cache(Path(path).read_text(encoding="ascii"))


def save_cache(path: str | Path, records: Iterable[SequenceRecord]) -> None:
    Path(path).write_text(render_cache(records), encoding="ascii")


def append_cache(path: str | Path, records: Sequence[SequenceRecord]) -> None:
    """Append data rows to an existing cache file (validated by the caller)."""
    if not records:
        return
    with open(path, "a", encoding="ascii") as fh:
        fh.write(render_cache_rows(records))


def render_bfile(pairs: Iterable[tuple[int, int]]) -> str:
    """Serialize (n, a(n)) pairs to b-file text (with trailing newline)."""
    return "".join(f"{n} {value}\n" for n, value in pairs)


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse b-file text back to (n, a(n)) pairs; inverse of render_bfile."""
    pairs: list[tuple[int, int]] = []
    for idx, line in enumerate(text.splitlines(), start=1):
        parts = line.split(" ")
        if len(parts) != 2:
            raise ValueError(f"line {idx}: expected 'n a(n)' with a single space")
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def load_bfile(path: str | Path) -> list[tuple[int, int]]:
    return parse_bfile(Path(path).read_text(encoding="ascii"))


def save_bfile(path: str | Path, pairs: Iterable[tuple[int, int]]) -> None:
    Path(path).write_text(render_bfile(pairs), encoding="ascii")
