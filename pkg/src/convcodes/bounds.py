"""Upper bounds on the free distance of (n, k, delta; m)_q convolutional codes.

Everything is exact integer (or Fraction) arithmetic; powers of q grow far
beyond 64 bits for the larger parameter sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .gf import prime_power


class BoundsError(ValueError):
    pass


def _check_q(q: int):
    if prime_power(q) is None:
        raise BoundsError(f"q = {q} is not a prime power")


def _check_nk(n: int, k: int, delta: int):
    if not 1 <= k <= n:
        raise BoundsError(f"need 1 <= k <= n, got n={n}, k={k}")
    if delta < 0:
        raise BoundsError("delta must be >= 0")


def _check_conv(n, k, delta, m, q):
    _check_nk(n, k, delta)
    if k >= n:
        raise BoundsError(f"need k < n, got n={n}, k={k}")
    if m < 0 or k * m < delta:
        raise BoundsError(f"need k*m >= delta, got k={k}, m={m}, delta={delta}")
    _check_q(q)


def singleton_generalized(n: int, k: int, delta: int) -> int:
    """(n-k)(floor(delta/k)+1) + delta + 1."""
    _check_nk(n, k, delta)
    return (n - k) * (delta // k + 1) + delta + 1


def mds_forney_profile(n: int, k: int, delta: int) -> tuple[int, ...]:
    """Forney indices forced on an MDS code: k-r copies of a, r of a+1."""
    _check_nk(n, k, delta)
    a, r = divmod(delta, k)
    return (a,) * (k - r) + (a + 1,) * r


def _first_index(k, delta, m) -> int:
    return 1 if k * m == delta else 0


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def griesmer_sum(d: int, dim: int, q: int) -> int:
    """sum_{l=0}^{dim-1} ceil(d / q^l)."""
    total, ql = 0, 1
    for l in range(dim):
        c = _ceil_div(d, ql)
        total += c
        if c == 1:
            # remaining terms are all 1
            total += dim - 1 - l
            break
        ql *= q
    return total


def plotkin_block(n: int, k: int, q: int) -> int:
    return (n * q ** (k - 1) * (q - 1)) // (q**k - 1)


def heller_term(n, k, delta, m, q, i) -> int:
    dim = k * (m + i) - delta
    length = n * (m + i)
    return plotkin_block(length, dim, q)


def heller(n: int, k: int, delta: int, m: int, q: int) -> int:
    """Minimum of the Plotkin bounds of the degree-truncated subcodes.

    The term for index i is at least n(m+i)(q-1)/q - 1, which grows with i,
    so the scan stops once that lower envelope exceeds the running minimum.
    """
    _check_conv(n, k, delta, m, q)
    best = None
    theta = Fraction(q - 1, q)
    for i in count(_first_index(k, delta, m)):
        if best is not None and n * (m + i) * theta - 1 > best:
            break
        t = heller_term(n, k, delta, m, q, i)
        best = t if best is None else min(best, t)
    return best


def griesmer_i0(n, k, delta, m, q) -> int:
    """Smallest i0 >= 1 with q^(k(m+i0)-delta) >= S(n,k,delta)."""
    s = singleton_generalized(n, k, delta)
    i0 = 1
    while q ** (k * (m + i0) - delta) < s:
        i0 += 1
    return i0


def griesmer_conv(n: int, k: int, delta: int, m: int, q: int) -> int:
    """Largest d' <= S(n,k,delta) passing every Griesmer inequality up to i0."""
    _check_conv(n, k, delta, m, q)
    s = singleton_generalized(n, k, delta)
    i0 = griesmer_i0(n, k, delta, m, q)
    idx = range(_first_index(k, delta, m), i0 + 1)
    for d in range(s, 0, -1):
        if all(griesmer_sum(d, k * (m + i) - delta, q) <= n * (m + i) for i in idx):
            return d
    raise AssertionError("no feasible d' (d' = 1 always satisfies the inequalities)")


def griesmer_block(n: int, k: int, q: int) -> int:
    d = 0
    while griesmer_sum(d + 1, k, q) <= n:
        d += 1
    return d


@dataclass(frozen=True)
class BlockBounds:
    singleton: int
    plotkin: int
    griesmer: int


def block_bounds(n: int, k: int, q: int) -> BlockBounds:
    if not 1 <= k < n:
        raise BoundsError(f"need 1 <= k < n, got n={n}, k={k}")
    _check_q(q)
    return BlockBounds(n - k + 1, plotkin_block(n, k, q), griesmer_block(n, k, q))


def next_prime_power(x: int) -> int:
    q = max(2, x)
    while prime_power(q) is None:
        q += 1
    return q


@dataclass(frozen=True)
class FieldSizeBound:
    bound: Fraction  # q must be >= this
    q_min: int  # smallest prime power >= bound


def mds_min_field(n: int, k: int, delta: int) -> FieldSizeBound:
    """Field-size lower bound for an MDS code with these parameters."""
    if not 1 <= k < n:
        raise BoundsError(f"need 1 <= k < n, got n={n}, k={k}")
    d = singleton_generalized(n, k, delta)
    m = max(mds_forney_profile(n, k, delta))
    if k == 1 or k * m == delta + 1:
        bound = Fraction(d, n - k + 1)
    else:
        bound = Fraction(d)
    return FieldSizeBound(bound, next_prime_power(_ceil_div(bound.numerator, bound.denominator)))


def strong_mds_index(n: int, k: int, delta: int) -> int:
    """Earliest column-distance index that can reach the free distance of an MDS code."""
    return delta // k + _ceil_div(delta, n - k)


def column_distance_cap(n: int, k: int, j: int) -> int:
    """d^c_j <= (n-k)(j+1)+1."""
    return (n - k) * (j + 1) + 1


@dataclass(frozen=True)
class MDSFlags:
    is_mds: bool
    M: int
    is_strongly_mds: bool
    is_compact: bool


def mds_flags(profile, d: int, coldist) -> MDSFlags:
    n, k, delta = profile.n, profile.k, profile.delta
    M = strong_mds_index(n, k, delta)
    if len(coldist) <= M:
        raise BoundsError(f"column distances up to index {M} are needed, got {len(coldist)}")
    is_mds = d == singleton_generalized(n, k, delta)
    compact = sorted(profile.forney) == sorted(mds_forney_profile(n, k, delta))
    return MDSFlags(is_mds, M, is_mds and coldist[M] == d, compact)


@dataclass(frozen=True)
class BoundsReport:
    singleton_gen: int
    heller: int
    griesmer: int
    i0: int
    block: BlockBounds | None
    mds_min_q: int
    mds_min_q_bound: Fraction

    def as_dict(self) -> dict:
        b = self.mds_min_q_bound
        return {
            "singleton_gen": self.singleton_gen,
            "heller": self.heller,
            "griesmer": self.griesmer,
            "i0": self.i0,
            "block": None
            if self.block is None
            else {"singleton": self.block.singleton, "plotkin": self.block.plotkin, "griesmer": self.block.griesmer},
            "mds_min_q": self.mds_min_q,
            "mds_min_q_bound": str(b) if b.denominator != 1 else b.numerator,
        }


def bounds_report(n: int, k: int, delta: int, m: int, q: int) -> BoundsReport:
    _check_conv(n, k, delta, m, q)
    fs = mds_min_field(n, k, delta)
    return BoundsReport(
        singleton_gen=singleton_generalized(n, k, delta),
        heller=heller(n, k, delta, m, q),
        griesmer=griesmer_conv(n, k, delta, m, q),
        i0=griesmer_i0(n, k, delta, m, q),
        block=block_bounds(n, k, q) if delta == 0 and m == 0 else None,
        mds_min_q=fs.q_min,
        mds_min_q_bound=fs.bound,
    )
