"""Constructive maps between the constrained partition classes.

``glaisher_map`` rewrites multiplicities in base r and realizes the
size-preserving bijection from partitions with no part divisible by r onto
partitions with no part repeated r times.  ``franklin_map`` extends it
levelwise: strip the divisible parts, map the remainder, re-adjoin the
stripped material as repeats.  ``adjoin_and_classify`` is the two-case
adjoin map used for the double-counting arguments.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .partition import Partition

# signature shared by the base bijection and its inverse
BaseMap = Callable[[Partition, int], Partition]


def _check_modulus(r: int) -> None:
    if r < 2:
        raise ValueError(f"modulus r must be >= 2, got {r}")


def glaisher_map(lam: Partition, r: int) -> Partition:
    """Base-r multiplicity rewrite.

    Each part i with multiplicity s = sum(a_v * r^v) becomes parts i*r^v
    with multiplicity a_v.  Requires no part of ``lam`` divisible by r;
    the image has no part repeated r or more times.
    """
    _check_modulus(r)
    out = []
    for part, mult in lam.pairs:
        if part % r == 0:
            raise ValueError(f"part {part} is divisible by {r}")
        scale = 1
        while mult:
            mult, digit = divmod(mult, r)
            if digit:
                out.append((part * scale, digit))
            scale *= r
    return Partition(out)


def glaisher_inverse(mu: Partition, r: int) -> Partition:
    """Inverse rewrite: part s*r^v (s not divisible by r) with multiplicity
    a contributes a*r^v copies of s.  Requires no part repeated >= r times."""
    _check_modulus(r)
    counts: dict[int, int] = {}
    for part, mult in mu.pairs:
        if mult >= r:
            raise ValueError(f"part {part} is repeated {mult} >= {r} times")
        scale = 1
        while part % r == 0:
            part //= r
            scale *= r
        counts[part] = counts.get(part, 0) + mult * scale
    return Partition(counts.items())


def _split_divisible(lam: Partition, r: int):
    divisible = [(p, m) for p, m in lam.pairs if p % r == 0]
    rest = [(p, m) for p, m in lam.pairs if p % r != 0]
    return divisible, rest


def franklin_map(lam: Partition, r: int, *,
                 base_map: BaseMap = glaisher_map) -> Partition:
    """Map a partition with j distinct parts divisible by r to one with j
    distinct parts repeated >= r times, preserving size.

    Parts (m*r)^k are stripped, the remainder goes through ``base_map``
    (any size-preserving bijection between the two j=0 classes works;
    Glaisher's rewrite is the default), and m^(k*r) is adjoined for each
    stripped part.
    """
    _check_modulus(r)
    divisible, rest = _split_divisible(lam, r)
    image = base_map(Partition(rest), r)
    return image.union(Partition((p // r, m * r) for p, m in divisible))


def franklin_inverse(mu: Partition, r: int, *,
                     base_inverse: BaseMap = glaisher_inverse) -> Partition:
    """Inverse of ``franklin_map``: for each part with multiplicity
    a = k*r + d >= r, remove k*r copies, apply ``base_inverse`` to the
    remainder, then adjoin (part*r)^k."""
    _check_modulus(r)
    stripped = []
    rest = []
    for part, mult in mu.pairs:
        if mult >= r:
            k, d = divmod(mult, r)
            stripped.append((part * r, k))
            if d:
                rest.append((part, d))
        else:
            rest.append((part, mult))
    lam = base_inverse(Partition(rest), r)
    return lam.union(Partition(stripped))


class ZetaCase(enum.Enum):
    """Which case the adjoin map lands in."""

    COLLIDES_EXISTING = "collides_existing"  # the distinguished value is some m_t
    FRESH_PART = "fresh_part"                # all adjoined values are new


@dataclass(frozen=True)
class ZetaOutcome:
    """Result of the adjoin-and-classify map.

    ``collided_index`` is the 0-based position in the m tuple that the
    source partition's distinguished value collided with; present only in
    the COLLIDES_EXISTING case.
    """

    image: Partition
    case: ZetaCase
    collided_index: int | None = None


def _check_mk(m_vec, k_vec):
    m_vec, k_vec = tuple(m_vec), tuple(k_vec)
    if len(m_vec) != len(k_vec):
        raise ValueError("m and k tuples must have equal length")
    if any(m <= 0 for m in m_vec) or any(k <= 0 for k in k_vec):
        raise ValueError("m and k components must be positive")
    if any(a >= b for a, b in zip(m_vec, m_vec[1:])):
        raise ValueError(f"m must be strictly increasing, got {m_vec}")
    return m_vec, k_vec


def adjoin_and_classify(mu: Partition, r: int, m_vec, k_vec,
                        variant: str = "divisible_parts") -> ZetaOutcome:
    """Adjoin fixed blocks to ``mu`` and report which class the image hits.

    variant 'divisible_parts': mu must have exactly one distinct part
    divisible by r; adjoins (m_i*r)^(k_i).  The image has j = len(m_vec)
    distinct divisible parts if mu's divisible part is some m_t*r
    (COLLIDES_EXISTING), else j+1 (FRESH_PART).

    variant 'repeated_mults': mu must have exactly one part with
    multiplicity in [r+1, 2r-1] and all others below r; adjoins
    m_i^(r*k_i).  The image has j distinct over-repeated parts if the
    distinguished part equals some m_t, else j+1.
    """
    _check_modulus(r)
    m_vec, k_vec = _check_mk(m_vec, k_vec)
    if variant == "divisible_parts":
        divisible = [p for p, _ in mu.pairs if p % r == 0]
        if len(divisible) != 1:
            raise ValueError(
                f"expected exactly one distinct part divisible by {r}, "
                f"found {len(divisible)}")
        distinguished = divisible[0] // r
        block = Partition((m * r, k) for m, k in zip(m_vec, k_vec))
    elif variant == "repeated_mults":
        window = [p for p, m in mu.pairs if r + 1 <= m <= 2 * r - 1]
        outside = [p for p, m in mu.pairs if m >= r and not
                   (r + 1 <= m <= 2 * r - 1)]
        if len(window) != 1 or outside:
            raise ValueError(
                "expected exactly one part with multiplicity in "
                f"[{r + 1}, {2 * r - 1}] and all others below {r}")
        distinguished = window[0]
        block = Partition((m, r * k) for m, k in zip(m_vec, k_vec))
    else:
        raise ValueError(f"unknown variant {variant!r}")

    image = mu.union(block)
    if distinguished in m_vec:
        return ZetaOutcome(image, ZetaCase.COLLIDES_EXISTING,
                           m_vec.index(distinguished))
    return ZetaOutcome(image, ZetaCase.FRESH_PART)
