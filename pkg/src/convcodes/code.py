"""Code parameters of a generator matrix, and column puncturing."""

from __future__ import annotations

from dataclasses import dataclass, field

from .polymat import NEG_INF, NotBasic, PolyMatrix, complexity, is_basic, is_row_reduced, row_degrees


@dataclass(frozen=True)
class CodeProfile:
    n: int
    k: int
    delta: int
    m: int
    q: int
    forney: tuple[int, ...]  # row degrees, largest first
    minimal: bool
    basic: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def label(self) -> str:
        return f"({self.n},{self.k},{self.delta};{self.m})_{self.q}"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "delta": self.delta,
            "m": self.m,
            "q": self.q,
            "forney": list(self.forney),
            "minimal": self.minimal,
            "basic": self.basic,
            "label": self.label,
        }


def profile(G: PolyMatrix) -> CodeProfile:
    """Parameters (n, k, delta; m)_q of G plus basic/minimal flags.

    Non-basic or non-minimal matrices are profiled, not rejected.
    """
    k, n = G.shape
    if k > n:
        raise ValueError(f"k = {k} exceeds n = {n}")
    degs = row_degrees(G)
    if any(d == NEG_INF for d in degs):
        raise ValueError("generator matrix has a zero row")
    forney = tuple(sorted((int(d) for d in degs), reverse=True))
    notes = []
    try:
        delta = complexity(G)
    except NotBasic:
        return CodeProfile(n, k, -1, max(forney), G.field.q, forney, False, False, ("rank deficient",))
    basic = is_basic(G)
    minimal = delta == sum(forney)
    if minimal != is_row_reduced(G):
        raise AssertionError("minimality tests disagree")
    if not basic:
        notes.append("no polynomial right inverse")
    if not minimal:
        notes.append("row degrees exceed the complexity")
    m = max(forney)
    if minimal and k * m < delta:
        raise AssertionError("k*m < delta for a minimal matrix")
    return CodeProfile(n, k, delta, m, G.field.q, forney, minimal, basic, tuple(notes))


def parse_columns(text: str) -> list[int]:
    """Parse ``1,2,4-12,14`` into a list of 1-based column indices."""
    cols: list[int] = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        for dash in ("-", "–"):
            if dash in part:
                a, b = part.split(dash, 1)
                cols.extend(range(int(a), int(b) + 1))
                break
        else:
            cols.append(int(part))
    return cols


def puncture(G: PolyMatrix, cols) -> PolyMatrix:
    """Keep the listed 1-based columns, in the given order.

    The result must be re-profiled; right invertibility and minimality are
    not preserved in general.
    """
    cols = list(cols)
    if len(set(cols)) != len(cols):
        raise ValueError("duplicate column index")
    for c in cols:
        if not 1 <= c <= G.n:
            raise ValueError(f"column {c} out of range 1..{G.n}")
    if len(cols) < G.k:
        raise ValueError(f"{len(cols)} columns left, fewer than k = {G.k}")
    return G.select_columns([c - 1 for c in cols])
