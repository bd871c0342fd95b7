"""Closed-form construction of gyrogroups of order 2**n from cyclic 2-groups.

The carrier is Z_{2**n} split into a lower half {0..m-1} (m = 2**(n-1)),
which is a cyclic subgroup under the operation, and its shifted copy
{m..2m-1}.  Everything is driven by a four-way parity partition of the
carrier: the operation, the unique nontrivial gyration (the "half-shift"
map, which adds m/2 to odd residues), and the selector that decides which
pairs gyrate nontrivially.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import FiniteGyrogroup, Permutation

__all__ = [
    "CyclicParams",
    "DEFAULT_MAX_N",
    "ParityClass",
    "Residues",
    "build_cyclic_gyrogroup",
    "classify",
    "gyration_selector",
    "half_shift",
    "half_shift_permutation",
    "inverse_element",
    "oplus",
    "residues",
]

# Cayley tables grow quadratically (n=12 is 4096x4096, ~16.7M entries); the
# cap is a guard rail, not a hard limit.
DEFAULT_MAX_N = 12


@dataclass(frozen=True)
class CyclicParams:
    """Sizes of the order-2**n construction: half size m = 2**(n-1)."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(
                f"n >= 3 required (got {self.n}): the half-shift offset m/2 must be even"
            )

    @property
    def m(self) -> int:
        return 1 << (self.n - 1)

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def half(self) -> int:
        return self.m // 2


class ParityClass(Enum):
    """One of the four parity-by-half classes partitioning the carrier."""

    EVEN_LOW = "even-low"
    ODD_LOW = "odd-low"
    EVEN_HIGH = "even-high"
    ODD_HIGH = "odd-high"

    @property
    def is_odd(self) -> bool:
        return self in (ParityClass.ODD_LOW, ParityClass.ODD_HIGH)

    @property
    def is_high(self) -> bool:
        return self in (ParityClass.EVEN_HIGH, ParityClass.ODD_HIGH)


def _check_element(p: CyclicParams, i: int) -> None:
    if not 0 <= i < p.order:
        raise ValueError(f"element {i} out of range 0..{p.order - 1}")


def classify(p: CyclicParams, i: int) -> ParityClass:
    """Parity class of element i: (odd/even) x (lower/upper half)."""
    _check_element(p, i)
    if i < p.m:
        return ParityClass.ODD_LOW if i % 2 else ParityClass.EVEN_LOW
    return ParityClass.ODD_HIGH if i % 2 else ParityClass.EVEN_HIGH


@dataclass(frozen=True)
class Residues:
    """The mod-m residues the construction is written in, all in {0..m-1}."""

    t: int  # i + j (mod m)
    s: int  # i + j + m/2 (mod m)
    r: int  # i + m/2 (mod m)


def residues(p: CyclicParams, i: int, j: int) -> Residues:
    _check_element(p, i)
    _check_element(p, j)
    return Residues(
        t=(i + j) % p.m,
        s=(i + j + p.half) % p.m,
        r=(i + p.half) % p.m,
    )


def oplus(p: CyclicParams, i: int, j: int) -> int:
    """The four-case binary operation on {0..2**n - 1}.

    Residues are reduced into {0..m-1} first and m is added afterwards, so
    each case lands in exactly one half:

    * even-high i with odd-high j  ->  s            (lower half)
    * even-high i with odd-low j   ->  s + m        (upper half)
    * i, j in the same half        ->  t            (lower half)
    * i, j in different halves     ->  t + m        (upper half)
    """
    res = residues(p, i, j)
    ci = classify(p, i)
    cj = classify(p, j)
    if ci is ParityClass.EVEN_HIGH and cj is ParityClass.ODD_HIGH:
        return res.s
    if ci is ParityClass.EVEN_HIGH and cj is ParityClass.ODD_LOW:
        return res.s + p.m
    if ci.is_high == cj.is_high:
        return res.t
    return res.t + p.m


def half_shift(p: CyclicParams, i: int) -> int:
    """The nontrivial gyration: add m/2 (mod m) to odd elements, fix even ones."""
    _check_element(p, i)
    cls = classify(p, i)
    r = (i + p.half) % p.m
    if cls is ParityClass.ODD_LOW:
        return r
    if cls is ParityClass.ODD_HIGH:
        return r + p.m
    return i


def half_shift_permutation(p: CyclicParams) -> Permutation:
    return Permutation(tuple(half_shift(p, i) for i in range(p.order)))


def gyration_selector(p: CyclicParams, a: int, b: int) -> bool:
    """True when the pair (a, b) gyrates by the half-shift map, False for identity.

    The nontrivial pairs are exactly: odd-low with anything high, odd-high
    with odd-low or even-high, and even-high with anything odd.
    """
    ca = classify(p, a)
    cb = classify(p, b)
    if ca is ParityClass.ODD_LOW:
        return cb.is_high
    if ca is ParityClass.ODD_HIGH:
        return cb is ParityClass.ODD_LOW or cb is ParityClass.EVEN_HIGH
    if ca is ParityClass.EVEN_HIGH:
        return cb.is_odd
    return False


def inverse_element(p: CyclicParams, x: int) -> int:
    """Closed-form inverse: -x mod m in the lower half, shifted likewise above."""
    _check_element(p, x)
    if x < p.m:
        return (-x) % p.m
    return (-(x - p.m)) % p.m + p.m


def build_cyclic_gyrogroup(n: int, *, max_n: int = DEFAULT_MAX_N) -> FiniteGyrogroup:
    """Materialize the full order-2**n gyrogroup tables.

    The Cayley table comes from :func:`oplus`, the gyration table from
    :func:`gyration_selector`, and the permutation list is the identity
    followed by the half-shift map.
    """
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the cap of {max_n} (tables grow as 4**n); raise max_n to override"
        )
    p = CyclicParams(n)
    m = p.m
    i = np.arange(p.order, dtype=np.int64)[:, None]
    j = np.arange(p.order, dtype=np.int64)[None, :]

    i_high = i >= m
    j_high = j >= m
    i_odd = i % 2 == 1
    j_odd = j % 2 == 1
    even_high_i = i_high & ~i_odd

    shifted = even_high_i & j_odd
    base = (i + j + np.where(shifted, p.half, 0)) % m
    cayley = base + np.where(i_high != j_high, m, 0)

    selector = (
        (i_odd & ~i_high & j_high)
        | (i_odd & i_high & ((j_odd & ~j_high) | (~j_odd & j_high)))
        | (even_high_i & j_odd)
    )
    perms = (Permutation.identity(p.order), half_shift_permutation(p))
    return FiniteGyrogroup(cayley, selector.astype(np.uint16), perms)
