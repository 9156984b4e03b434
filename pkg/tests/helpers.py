"""Shared test helpers: independent oracles and hypothesis strategies."""

from hypothesis import strategies as st

from beckpart.partition import Partition


def pentagonal_counts(n_max: int) -> list[int]:
    """Partition counts p(0..n_max) via Euler's recurrence with generalized
    pentagonal numbers; independent of every enumeration code path."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            g2 = k * (3 * k + 1) // 2
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


partitions = st.lists(
    st.integers(min_value=1, max_value=12), max_size=10
).map(Partition.from_parts)


def partitions_avoiding_multiples(r: int, max_part: int = 13,
                                  max_len: int = 10):
    """Partitions with no part divisible by r."""
    values = [v for v in range(1, max_part + 1) if v % r]
    return st.lists(st.sampled_from(values), max_size=max_len).map(
        Partition.from_parts)


def partitions_with_low_multiplicity(r: int, max_part: int = 12,
                                     max_distinct: int = 6):
    """Partitions with every multiplicity below r."""
    return st.dictionaries(
        keys=st.integers(min_value=1, max_value=max_part),
        values=st.integers(min_value=1, max_value=r - 1),
        max_size=max_distinct,
    ).map(lambda d: Partition(d.items()))
