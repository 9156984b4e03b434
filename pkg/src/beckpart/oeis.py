"""Offline-first OEIS b-file lookup and prefix matching.

Reference values are consulted in order: bundled fixture, cached b-file,
then (only when explicitly allowed) an HTTP fetch.  Everything degrades to
a distinct "unavailable" status rather than an error, so offline runs
never fail on missing references.
"""

from __future__ import annotations

import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable

CACHE_ENV_VAR = "BECKPART_OEIS_CACHE"
_ID_RE = re.compile(r"A\d+")


def parse_b_file(text: str) -> dict[int, int]:
    """Parse "index value" lines; '#' comments and blank lines ignored."""
    table: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"malformed b-file line {lineno}: {raw!r}")
        try:
            idx, val = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"malformed b-file line {lineno}: {raw!r}") from None
        table[idx] = val
    return table


def _check_id(sequence_id: str) -> None:
    if not _ID_RE.fullmatch(sequence_id):
        raise ValueError(
            f"sequence id must be 'A' followed by digits, got {sequence_id!r}")


def _fixture_text(sequence_id: str) -> str | None:
    ref = resources.files("beckpart.data") / f"{sequence_id}.txt"
    try:
        return ref.read_text(encoding="ascii")
    except (FileNotFoundError, ModuleNotFoundError):
        return None


def _cache_text(sequence_id: str, cache_dir: str | None) -> str | None:
    directory = cache_dir or os.environ.get(CACHE_ENV_VAR)
    if not directory:
        return None
    path = Path(directory) / f"b{sequence_id[1:]}.txt"
    if not path.is_file():
        return None
    return path.read_text(encoding="ascii")


def _online_text(sequence_id: str, timeout: float) -> str | None:
    url = f"https://oeis.org/{sequence_id}/b{sequence_id[1:]}.txt"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read().decode("ascii")
    except (urllib.error.URLError, OSError, UnicodeDecodeError):
        return None


def load_reference(sequence_id: str, *, cache_dir: str | None = None,
                   online: bool = False, timeout: float = 10.0
                   ) -> tuple[dict[int, int] | None, str]:
    """Return (index -> value table, source name) or (None, "")."""
    _check_id(sequence_id)
    text = _fixture_text(sequence_id)
    if text is not None:
        return parse_b_file(text), "fixture"
    text = _cache_text(sequence_id, cache_dir)
    if text is not None:
        return parse_b_file(text), "cache"
    if online:
        text = _online_text(sequence_id, timeout)
        if text is not None:
            return parse_b_file(text), "online"
    return None, ""


@dataclass(frozen=True)
class MatchReport:
    """Longest-prefix comparison of computed values against a reference."""

    sequence_id: str
    status: str            # "ok" or "unavailable"
    matched: int           # longest matching prefix length
    offset: int            # shift added to computed indices
    total: int             # number of computed values
    source: str            # fixture / cache / online / ""

    @property
    def full_match(self) -> bool:
        return self.status == "ok" and self.matched == self.total


def best_prefix_match(reference: dict[int, int], values: list[int],
                      start_index: int = 0, max_shift: int = 10
                      ) -> tuple[int, int]:
    """(length, offset) of the longest prefix of ``values`` found in the
    reference at indices start_index + k + offset.

    Reference sequences may be indexed from a different origin, so shifts
    in [-max_shift, max_shift] are tried; ties prefer the smallest |offset|.
    """
    best = (0, 0)
    for offset in sorted(range(-max_shift, max_shift + 1),
                         key=lambda d: (abs(d), d)):
        length = 0
        for k, v in enumerate(values):
            idx = start_index + k + offset
            if reference.get(idx) != v:
                break
            length += 1
        if length > best[0]:
            best = (length, offset)
    return best


def crosscheck(sequence_id: str, values: Iterable[int], *,
               start_index: int = 0, cache_dir: str | None = None,
               online: bool = False) -> MatchReport:
    """Compare computed values against the named reference sequence."""
    values = list(values)
    reference, source = load_reference(sequence_id, cache_dir=cache_dir,
                                       online=online)
    if reference is None:
        return MatchReport(sequence_id, "unavailable", 0, 0, len(values), "")
    matched, offset = best_prefix_match(reference, values, start_index)
    return MatchReport(sequence_id, "ok", matched, offset, len(values), source)
