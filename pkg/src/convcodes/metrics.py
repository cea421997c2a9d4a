"""Distances of convolutional codes by search over the encoder state space.

The trellis is the controller-form realization of a minimal generator
matrix: row i owns a shift register holding its last nu_i message symbols,
so there are q^delta states and q^k input symbols per state.
"""

from __future__ import annotations

import heapq
import os
import time
from dataclasses import dataclass
from itertools import product

import numpy as np

from .code import profile
from .gf import construct_field
from .polymat import PolyMatrix, row_degrees

BUDGET_ENV = "CONVCODES_BUDGET_SECONDS"
MAX_STATES = 1 << 16
MAX_BLOCK_ROWS = 20


class BudgetExceeded(RuntimeError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial or {}


class Budget:
    """Wall-clock budget shared by the long searches.

    ``None`` seconds means: read the environment default, and if that is
    unset, run unbounded.
    """

    def __init__(self, seconds: float | None = None):
        if seconds is None:
            env = os.environ.get(BUDGET_ENV)
            seconds = float(env) if env else None
        self.seconds = seconds
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def check(self, what: str, partial=None):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"{what}: budget of {self.seconds}s exceeded", partial)


def _budget(b: Budget | None) -> Budget:
    return b if b is not None else Budget(float("inf"))


class CatastrophicError(ValueError):
    pass


class Trellis:
    """State transition tables of the encoder of a basic minimal matrix.

    ``next_state[s, u]`` and ``weight[s, u]`` are (S, Q) integer arrays;
    inputs u enumerate F^k in mixed radix (row 0 least significant).
    """

    def __init__(self, G: PolyMatrix, check: bool = True):
        if check:
            prof = profile(G)
            if not prof.basic:
                raise ValueError("generator matrix is not basic (no polynomial right inverse)")
            if not prof.minimal:
                raise ValueError("generator matrix is not minimal")
        f = G.field
        q, k, n = f.q, G.k, G.n
        nus = [int(d) for d in row_degrees(G)]
        delta = sum(nus)
        S, Q = q**delta, q**k
        if S > MAX_STATES:
            raise ValueError(f"{S} states exceed the limit of {MAX_STATES}")
        self.field, self.G, self.nus = f, G, nus
        self.q, self.k, self.n, self.delta = q, k, n, delta
        self.num_states, self.num_inputs = S, Q

        s_digits = (np.arange(S)[:, None] // q ** np.arange(delta)[None, :]) % q if delta else np.zeros((S, 0), int)
        u_digits = (np.arange(Q)[:, None] // q ** np.arange(k)[None, :]) % q
        offsets = np.concatenate([[0], np.cumsum(nus)])[:-1].astype(int)

        add, mul = f.add_table, f.mul_table
        out = np.zeros((S, Q, n), dtype=np.int64)
        for i in range(k):
            for j in range(nus[i] + 1):
                coeffs = np.array([G[i, c].coeff(j) for c in range(n)], dtype=np.int64)
                if not coeffs.any():
                    continue
                if j == 0:
                    sym = np.broadcast_to(u_digits[None, :, i], (S, Q))
                else:
                    sym = np.broadcast_to(s_digits[:, offsets[i] + j - 1][:, None], (S, Q))
                out = add[out, mul[sym[..., None], coeffs[None, None, :]]]
        self.output = out
        self.weight = np.count_nonzero(out, axis=2)

        nxt = np.zeros((S, Q), dtype=np.int64)
        qp = q ** np.arange(delta)
        for i in range(k):
            if nus[i] == 0:
                continue
            o = offsets[i]
            nxt += u_digits[None, :, i] * qp[o]
            for j in range(1, nus[i]):
                nxt += s_digits[:, o + j - 1][:, None] * qp[o + j]
        self.next_state = nxt
        if check:
            self._check_no_zero_cycle()

    def _zero_weight_order(self):
        """Topological order of nonzero states under zero-weight edges."""
        S = self.num_states
        succ = [[] for _ in range(S)]
        indeg = np.zeros(S, dtype=np.int64)
        ss, uu = np.nonzero(self.weight == 0)
        for s, u in zip(ss.tolist(), uu.tolist()):
            t = int(self.next_state[s, u])
            if s == 0 and u == 0:
                continue
            succ[s].append(t)
            indeg[t] += 1
        order = []
        stack = [s for s in range(S) if indeg[s] == 0]
        while stack:
            s = stack.pop()
            order.append(s)
            for t in succ[s]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    stack.append(t)
        if len(order) != S:
            raise CatastrophicError("zero-weight cycle in the state diagram")
        return order, succ

    def _check_no_zero_cycle(self):
        self._zero_weight_order()

    # -- distances --

    def free_distance(self, budget: Budget | None = None) -> int:
        """Least-weight detour: leave state 0 with a nonzero input, return to 0."""
        budget = _budget(budget)
        S = self.num_states
        dist = np.full(S, np.iinfo(np.int64).max, dtype=np.int64)
        heap = []
        best_direct = None
        for u in range(1, self.num_inputs):
            t, w = int(self.next_state[0, u]), int(self.weight[0, u])
            if t == 0:
                best_direct = w if best_direct is None else min(best_direct, w)
            elif w < dist[t]:
                dist[t] = w
                heapq.heappush(heap, (w, t))
        if best_direct is not None:
            heapq.heappush(heap, (best_direct, 0))
        done = np.zeros(S, dtype=bool)
        nxt, wt = self.next_state, self.weight
        pops = 0
        while heap:
            d, s = heapq.heappop(heap)
            if s == 0:
                return d
            if done[s]:
                continue
            done[s] = True
            pops += 1
            if pops % 1024 == 0:
                budget.check("free distance search")
            nd = d + wt[s]
            ns = nxt[s]
            for t, w in zip(ns.tolist(), nd.tolist()):
                if t == 0:
                    heapq.heappush(heap, (w, 0))
                elif w < dist[t]:
                    dist[t] = w
                    heapq.heappush(heap, (w, t))
        raise AssertionError("no path returns to the zero state")

    def column_distances(self, L: int, budget: Budget | None = None) -> list[int]:
        """d^c_0 .. d^c_L by forward dynamic programming."""
        budget = _budget(budget)
        S = self.num_states
        inf = np.iinfo(np.int64).max // 4
        dist = np.full(S, inf, dtype=np.int64)
        np.minimum.at(dist, self.next_state[0, 1:], self.weight[0, 1:])
        out = [int(dist.min())]
        flat_next = self.next_state.ravel()
        for _ in range(L):
            budget.check("column distances", {"column_distances": out})
            cand = (dist[:, None] + self.weight).ravel()
            new = np.full(S, inf, dtype=np.int64)
            np.minimum.at(new, flat_next, cand)
            dist = new
            out.append(int(dist.min()))
        return out

    def weight_spectrum(self, w_max: int, budget: Budget | None = None) -> dict[int, int]:
        """Counts of atomic paths by weight, for weights <= w_max.

        An atomic path leaves the zero state once and returns once, never
        touching zero in between.  Counted by dynamic programming over
        (state, remaining weight); zero-weight edges are processed in
        topological order, which exists because the code is not catastrophic.
        """
        budget = _budget(budget)
        S, Q = self.num_states, self.num_inputs
        order, _ = self._zero_weight_order()
        nxt, wt = self.next_state, self.weight
        # N[s, w]: paths from nonzero s to first arrival at 0 with weight w
        N = np.zeros((S, w_max + 1), dtype=np.int64)
        to_zero = nxt == 0
        zero_succ = [[] for _ in range(S)]
        for s, u in zip(*np.nonzero((wt == 0) & ~to_zero)):
            zero_succ[int(s)].append(int(nxt[s, u]))
        rev = [s for s in reversed(order) if s != 0]
        for w in range(w_max + 1):
            budget.check("weight spectrum")
            base = np.zeros(S, dtype=np.int64)
            base += ((wt == w) & to_zero).sum(axis=1)
            for om in range(1, w + 1):
                mask = (wt == om) & ~to_zero
                if mask.any():
                    ss, uu = np.nonzero(mask)
                    np.add.at(base, ss, N[nxt[ss, uu], w - om])
            col = base
            for s in rev:
                for t in zero_succ[s]:
                    col[s] += col[t]
            col[0] = 0
            N[:, w] = col
        spectrum = {}
        for u in range(1, Q):
            t, om = int(nxt[0, u]), int(wt[0, u])
            if om > w_max:
                continue
            if t == 0:
                spectrum[om] = spectrum.get(om, 0) + 1
            else:
                for w in range(om, w_max + 1):
                    c = N[t, w - om]
                    if c:
                        spectrum[w] = spectrum.get(w, 0) + int(c)
        return dict(sorted(spectrum.items()))


def free_distance(G: PolyMatrix, budget: Budget | None = None) -> int:
    return Trellis(G).free_distance(budget)


def column_distances(G: PolyMatrix, L: int, budget: Budget | None = None) -> list[int]:
    return Trellis(G).column_distances(L, budget)


def weight_spectrum(G: PolyMatrix, w_max: int, budget: Budget | None = None) -> dict[int, int]:
    return Trellis(G).weight_spectrum(w_max, budget)


@dataclass(frozen=True)
class DistanceReport:
    d_free: int
    coldist: tuple[int, ...]
    stabilization_index: int | None

    def as_dict(self):
        return {
            "d_free": self.d_free,
            "column_distances": list(self.coldist),
            "stabilization_index": self.stabilization_index,
        }


def distance_report(G: PolyMatrix, L: int | None = None, budget: Budget | None = None, trellis=None) -> DistanceReport:
    """Free distance plus column distances up to index L.

    L defaults to 2(delta+5); the column distances are extended past L if
    needed until they reach the free distance.
    """
    T = trellis or Trellis(G)
    d = T.free_distance(budget)
    L = 2 * (T.delta + 5) if L is None else L
    cd = T.column_distances(L, budget)
    while cd[-1] < d:
        cd = T.column_distances(len(cd) * 2, budget)
    stab = next(i for i, c in enumerate(cd) if c == d)
    return DistanceReport(d, tuple(cd), stab)


def block_distance(M, field) -> int:
    """Minimum weight over all nonzero message combinations of constant rows.

    M is a list of rows of field indices.  A rank-deficient M gives 0.
    """
    k = len(M)
    if k > MAX_BLOCK_ROWS:
        raise ValueError(f"{k} rows are too many to enumerate")
    q = field.q
    rows = np.asarray(M, dtype=np.int64)
    msgs = np.array(list(product(range(q), repeat=k))[1:], dtype=np.int64)
    add, mul = field.add_table, field.mul_table
    acc = np.zeros((len(msgs), rows.shape[1]), dtype=np.int64)
    for i in range(k):
        acc = add[acc, mul[msgs[:, i][:, None], rows[i][None, :]]]
    return int(np.count_nonzero(acc, axis=1).min())


def example38_families():
    """The two 3x9 ternary block-code families as functions of a_1..a_7."""
    second_rows = (
        ([1, 1, 2, 1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 2, 1, 1, 1]),
        ([1, 2, 2, 1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 2, 2, 1, 1, 1]),
    )

    def family(r2, r3):
        def build(a):
            a1, a2, a3, a4, a5, a6, a7 = a
            return [[a1, a2, a3, 0, a4, a5, 0, a6, a7], list(r2), list(r3)]

        return build

    return [family(*r) for r in second_rows]


def example38_search() -> dict:
    """Largest block distance reached by each family over all a in F_3^7."""
    F3 = construct_field(3)
    out = {"candidates": 0}
    for name, build in zip(("family1_max_d", "family2_max_d"), example38_families()):
        best = 0
        for a in product(range(3), repeat=7):
            best = max(best, block_distance(build(a), F3))
            out["candidates"] += 1
        out[name] = best
    return out


def row_weights(G: PolyMatrix) -> list[int]:
    return [sum(e.weight() for e in r) for r in G.rows]


def is_even(G: PolyMatrix) -> bool:
    """Binary code with only even-weight codewords.

    Over GF(2) the weight parity is linear in the codeword and invariant
    under shifts, so checking the generator rows suffices.
    """
    if G.field.q != 2:
        raise ValueError("evenness is defined here for binary codes only")
    return all(w % 2 == 0 for w in row_weights(G))


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


MAX_ENUM_BITS = 22  # messages held in memory at once
MAX_PARITY_BITS = 28  # messages streamed by parity_evidence
PARITY_BLOCK_BITS = 18


def _packed_basis(G: PolyMatrix, max_deg: int) -> list[np.ndarray]:
    """Bit-packed codewords z^s g_i for every row i and shift s <= max_deg."""
    k, n = G.shape
    m = int(G.degree())
    words = (n * (max_deg + m + 1) + 63) // 64
    basis = []
    for i in range(k):
        for s in range(max_deg + 1):
            vec = [0] * words
            for c in range(n):
                for j, coef in enumerate(G[i, c].coeffs):
                    if coef:
                        pos = (s + j) * n + c
                        vec[pos // 64] |= 1 << (pos % 64)
            basis.append(np.array(vec, dtype=np.uint64))
    return basis


def _span(basis: list[np.ndarray], words: int) -> np.ndarray:
    cw = np.zeros((1, words), dtype=np.uint64)
    for b in basis:
        cw = np.concatenate([cw, cw ^ b[None, :]])
    return cw


def low_degree_weights(G: PolyMatrix, max_deg: int) -> np.ndarray:
    """Weights of all codewords u G over GF(2) with deg u <= max_deg.

    The zero message is included (weight 0).
    """
    if G.field.q != 2:
        raise ValueError("binary codes only")
    bits = G.k * (max_deg + 1)
    if bits > MAX_ENUM_BITS:
        raise ValueError(f"2^{bits} messages are too many to enumerate")
    basis = _packed_basis(G, max_deg)
    return _popcount(_span(basis, len(basis[0]))).sum(axis=1)


def max_enum_degree(k: int, cap: int = 6) -> int:
    return min(cap, MAX_PARITY_BITS // k - 1)


@dataclass(frozen=True)
class ParityEvidence:
    max_deg: int
    messages: int
    all_even: bool
    all_doubly_even: bool


def parity_evidence(G: PolyMatrix, max_deg: int = 6) -> ParityEvidence:
    """Exhaustive weight check over all messages with deg u <= max_deg.

    Only weights mod 4 are kept, so the span is streamed: a fixed block of
    basis vectors is expanded once and every combination of the remaining
    ones is xored onto it.  The degree is lowered when 2^(k(max_deg+1))
    messages exceed MAX_PARITY_BITS.
    """
    if G.field.q != 2:
        raise ValueError("binary codes only")
    d = min(max_deg, max_enum_degree(G.k))
    basis = _packed_basis(G, d)
    words = len(basis[0])
    # word-major layout; uint8 sums wrap at 256, which keeps the residue mod 4
    inner = np.ascontiguousarray(_span(basis[:PARITY_BLOCK_BITS], words).T)
    outer = _span(basis[PARITY_BLOCK_BITS:], words)
    buf = np.empty(inner.shape[1], dtype=np.uint8)
    acc = np.empty_like(buf)
    even = doubly = True
    for off in outer:
        acc.fill(0)
        for j in range(words):
            np.bitwise_count(inner[j] ^ off[j], out=buf)
            acc += buf
        even = even and not (acc & 1).any()
        doubly = doubly and not (acc & 3).any()
        if not even:
            break
    return ParityEvidence(d, 1 << len(basis), even, doubly)
