"""Euler pairs of order r: the same identity family over restricted part
sets.

S1 is materialized as an explicit finite window so membership and the
closure condition (r*S1 inside S1, S2 = S1 minus r*S1) are decidable.  A
pair failing the closure condition can still be constructed, which is how
the counterexample search is exercised; the theorem verifier refuses such
pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .identities import VerificationRecord, _record

EULER_ITEM_IDS = ("euler_item1", "euler_item2", "euler_item3", "euler_item4")


@dataclass(frozen=True)
class EulerPair:
    """Modulus r with explicit part sets realized up to ``bound``."""

    r: int
    bound: int
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    subbarao_ok: bool


def make_euler_pair(r: int, s1_members: Iterable[int], bound: int,
                    s2_override: Iterable[int] | None = None) -> EulerPair:
    """Build a pair; s2 defaults to s1 minus r*s1 within the bound.

    ``subbarao_ok`` records whether r*s1 stays inside s1 on the window and
    s2 is exactly the derived set.
    """
    if r < 2:
        raise ValueError(f"modulus r must be >= 2, got {r}")
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    s1 = sorted(set(s1_members))
    for s in s1:
        if s <= 0:
            raise ValueError(f"s1 member {s} must be positive")
        if s > bound:
            raise ValueError(f"s1 member {s} exceeds bound {bound}")
    s1_set = set(s1)
    # s1 \ r*s1: drop members expressible as r times another member
    derived_s2 = tuple(s for s in s1 if not (s % r == 0 and s // r in s1_set))
    if s2_override is None:
        s2 = derived_s2
    else:
        s2 = tuple(sorted(set(s2_override)))
        for s in s2:
            if s <= 0:
                raise ValueError(f"s2 member {s} must be positive")
            if s > bound:
                raise ValueError(f"s2 member {s} exceeds bound {bound}")
    closure = all(r * s in s1_set for s in s1 if r * s <= bound)
    return EulerPair(r, bound, tuple(s1), s2,
                     subbarao_ok=closure and s2 == derived_s2)


def _restricted_partitions(n: int, values_desc: tuple[int, ...]) -> Iterator[
        tuple[tuple[int, int], ...]]:
    """Canonical (part, mult) tuples of partitions of n with parts drawn
    from the given strictly decreasing value list."""
    def rec(remaining, idx, acc):
        if remaining == 0:
            yield acc
            return
        for i in range(idx, len(values_desc)):
            v = values_desc[i]
            if v > remaining:
                continue
            for mult in range(remaining // v, 0, -1):
                yield from rec(remaining - v * mult, i + 1, acc + ((v, mult),))
    yield from rec(n, 0, ())


class TildeTotals:
    """Accumulators for the restricted classes at one (pair, n)."""

    __slots__ = ("o_count", "o_parts", "o_distinct",
                 "d_count", "d_parts", "d_distinct", "d_window")

    def __init__(self):
        self.o_count: dict[int, int] = {}
        self.o_parts: dict[int, int] = {}
        self.o_distinct: dict[int, int] = {}
        self.d_count: dict[int, int] = {}
        self.d_parts: dict[int, int] = {}
        self.d_distinct: dict[int, int] = {}
        self.d_window: dict[int, int] = {}


@lru_cache(maxsize=None)
def tilde_totals(pair: EulerPair, n: int) -> TildeTotals:
    """One constrained-enumeration pass for each family at size n."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > pair.bound:
        raise ValueError(f"n={n} exceeds the realized window {pair.bound}")
    r = pair.r
    tot = TildeTotals()

    marked_values = frozenset(r * s for s in pair.s1 if r * s <= pair.bound)
    allowed = sorted(marked_values.union(pair.s2), reverse=True)
    for pairs in _restricted_partitions(n, tuple(allowed)):
        j = sum(1 for p, _ in pairs if p in marked_values)
        tot.o_count[j] = tot.o_count.get(j, 0) + 1
        tot.o_parts[j] = tot.o_parts.get(j, 0) + sum(m for _, m in pairs)
        tot.o_distinct[j] = tot.o_distinct.get(j, 0) + len(pairs)

    values = tuple(sorted(pair.s1, reverse=True))
    for pairs in _restricted_partitions(n, values):
        j = sum(1 for _, m in pairs if m >= r)
        tot.d_count[j] = tot.d_count.get(j, 0) + 1
        tot.d_parts[j] = tot.d_parts.get(j, 0) + sum(m for _, m in pairs)
        tot.d_distinct[j] = tot.d_distinct.get(j, 0) + len(pairs)
        window = sum(1 for _, m in pairs if r + 1 <= m <= 2 * r - 1)
        tot.d_window[j] = tot.d_window.get(j, 0) + window
    return tot


def _exact_or_cumulative(table: dict[int, int], j: int, mode: str) -> int:
    if mode == "exact":
        return table.get(j, 0)
    if mode == "at_most":
        return sum(v for i, v in table.items() if i <= j)
    raise ValueError(f"mode must be 'exact' or 'at_most', got {mode!r}")


def tilde_count(n: int, pair: EulerPair, j: int, family: str,
                mode: str = "exact") -> int:
    """Size of the restricted class: family 'O' counts partitions with
    exactly j distinct parts from r*S1 and all other parts from S2;
    family 'D' counts partitions with parts in S1 and exactly j distinct
    parts repeated >= r times."""
    if j < 0:
        raise ValueError(f"class index j must be >= 0, got {j}")
    tot = tilde_totals(pair, n)
    if family == "O":
        return _exact_or_cumulative(tot.o_count, j, mode)
    if family == "D":
        return _exact_or_cumulative(tot.d_count, j, mode)
    raise ValueError(f"family must be 'O' or 'D', got {family!r}")


def tilde_part_count_gap(n: int, pair: EulerPair, j: int,
                         mode: str = "exact") -> int:
    """Total parts over the restricted O-class minus the restricted
    D-class."""
    tot = tilde_totals(pair, n)
    return (_exact_or_cumulative(tot.o_parts, j, mode)
            - _exact_or_cumulative(tot.d_parts, j, mode))


def tilde_distinct_count_gap(n: int, pair: EulerPair, j: int,
                             mode: str = "exact") -> int:
    """Total distinct parts over the restricted D-class minus the
    restricted O-class (D-minus-O, as in the unrestricted statistic)."""
    tot = tilde_totals(pair, n)
    return (_exact_or_cumulative(tot.d_distinct, j, mode)
            - _exact_or_cumulative(tot.o_distinct, j, mode))


def tilde_repeat_window_total(n: int, pair: EulerPair, j: int) -> int:
    """Repeat-window total over the restricted exactly-j D-class."""
    return tilde_totals(pair, n).d_window.get(j, 0)


def verify_tilde_instance(item: int, pair: EulerPair, n: int,
                          j: int) -> VerificationRecord:
    """One instance of the restricted-identity family; items 1..4 are the
    cumulative/exact part-count and distinct-count statements."""
    if item not in (1, 2, 3, 4):
        raise ValueError(f"item must be in 1..4, got {item}")
    if not pair.subbarao_ok:
        raise ValueError(
            "pair fails the closure condition (r*S1 inside S1 and "
            "S2 = S1 minus r*S1); the identities are not asserted for it")
    r = pair.r
    theorem = EULER_ITEM_IDS[item - 1]
    if item in (1, 2):
        mode = "at_most" if item == 1 else "exact"
        gap = tilde_part_count_gap(n, pair, j, mode)
        o_next = (j + 1) * tilde_count(n, pair, j + 1, "O")
        d_next = (j + 1) * tilde_count(n, pair, j + 1, "D")
        if item == 1:
            rhs = [("(j+1)|O~_{j+1}|", o_next), ("(j+1)|D~_{j+1}|", d_next)]
        else:
            rhs = [("(j+1)|O~_{j+1}|-j|O~_j|",
                    o_next - j * tilde_count(n, pair, j, "O")),
                   ("(j+1)|D~_{j+1}|-j|D~_j|",
                    d_next - j * tilde_count(n, pair, j, "D"))]
        if gap % (r - 1):
            return _record(theorem, n, r, j, None, gap, rhs,
                           note=f"gap {gap} not divisible by r-1={r - 1}")
        return _record(theorem, n, r, j, None, gap // (r - 1), rhs)
    if item == 3:
        return _record(theorem, n, r, j, None,
                       tilde_distinct_count_gap(n, pair, j, "at_most"),
                       [("T~_{j+1}", tilde_repeat_window_total(n, pair, j + 1))])
    return _record(theorem, n, r, j, None,
                   tilde_distinct_count_gap(n, pair, j, "exact"),
                   [("T~_{j+1}-T~_j",
                     tilde_repeat_window_total(n, pair, j + 1)
                     - tilde_repeat_window_total(n, pair, j))])


def verify_tilde(item: int, pair: EulerPair, n_values: Iterable[int],
                 j_max: int) -> list[VerificationRecord]:
    """All instances of one item over the grid, in (n, j) order."""
    records = []
    for n in sorted(set(n_values)):
        for j in range(j_max + 1):
            records.append(verify_tilde_instance(item, pair, n, j))
    return records


def subbarao_counterexample(pair: EulerPair, n_max: int
                            ) -> tuple[int, int, int] | None:
    """Search the window for an n where the j=0 restricted classes differ.

    Returns (n, o_count, d_count) for the first witness, or None if the
    window is inconclusive.  A None on a pair with ``subbarao_ok`` False
    does not certify anything: the finite window may simply be too small.
    """
    for n in range(0, min(n_max, pair.bound) + 1):
        o = tilde_count(n, pair, 0, "O")
        d = tilde_count(n, pair, 0, "D")
        if o != d:
            return (n, o, d)
    return None
