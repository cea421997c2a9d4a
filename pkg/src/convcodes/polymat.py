"""Polynomials in z over GF(q) and matrices of them.

Coefficients are field indices (see :mod:`convcodes.gf`).  A :class:`Poly`
is an immutable tuple of coefficients, lowest power first, with trailing
zeros stripped.
"""

from __future__ import annotations

import re
from itertools import combinations

from .gf import (
    FieldError,
    FieldSpec,
    field_of_order,
    left_kernel,
    parse_element,
    parse_modulus,
    prime_power,
    row_reduce,
)

NEG_INF = float("-inf")  # degree of the zero polynomial


class NotBasic(ValueError):
    """The matrix has no polynomial right inverse."""


class NotMember(ValueError):
    """The vector is not in the row module of the matrix."""


class ParseError(ValueError):
    pass


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, field, c: int) -> Poly:
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, c: int, e: int) -> Poly:
        return cls(field, (0,) * e + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def _same(self, other: Poly):
        if other.field != self.field:
            raise FieldError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(f, [f.add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> Poly:
        return Poly(self.field, [self.field.neg(x) for x in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        f = self.field
        if isinstance(other, int):
            return self.scale(other)
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f)
        out = [0] * (len(a) + len(b) - 1)
        mul, add = f._mul, f._add
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add[out[i + j]][row[y]]
        return Poly(f, out)

    def scale(self, c: int) -> Poly:
        row = self.field._mul[c]
        return Poly(self.field, [row[x] for x in self.coeffs])

    def shift(self, e: int) -> Poly:
        return Poly(self.field, (0,) * e + self.coeffs) if self.coeffs else self

    def truncate(self, deg: int) -> Poly:
        """Drop all terms of degree > deg."""
        return Poly(self.field, self.coeffs[: deg + 1])

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = f.inv(other.coeffs[-1])
        q = [0] * max(0, len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                t = f.mul(c, inv)
                q[i - db] = t
                for j, y in enumerate(other.coeffs):
                    r[i - db + j] = f.sub(r[i - db + j], f.mul(t, y))
        return Poly(f, q), Poly(f, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_poly(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.scale(a.field.inv(a.lead()))


class PolyMatrix:
    """k x n matrix over F[z]; entries are Poly over one field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldSpec, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        n = len(rows[0])
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix rows have different lengths")
            for e in r:
                if e.field != field:
                    raise FieldError("matrix entries over different fields")
        self.field = field
        self.rows = rows

    @classmethod
    def from_coeffs(cls, field, rows) -> PolyMatrix:
        """Build from nested lists of coefficient sequences."""
        return cls(field, [[Poly(field, e) for e in r] for r in rows])

    @classmethod
    def from_constant(cls, field, rows) -> PolyMatrix:
        return cls(field, [[Poly(field, (c,)) for c in r] for r in rows])

    @classmethod
    def identity(cls, field, k: int, n: int | None = None) -> PolyMatrix:
        n = k if n is None else n
        return cls.from_constant(field, [[1 if i == j else 0 for j in range(n)] for i in range(k)])

    @classmethod
    def zeros(cls, field, k, n) -> PolyMatrix:
        return cls(field, [[Poly(field) for _ in range(n)] for _ in range(k)])

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self):
        return (self.k, self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.rows[i]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(self.field, list(zip(*self.rows)))

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.n != other.k:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.n)]
        return PolyMatrix(self.field, [[dot(r, c) for c in cols] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def degree(self):
        return max(e.degree for r in self.rows for e in r)

    def coefficient(self, j: int) -> list[list[int]]:
        """The constant matrix of z^j coefficients."""
        return [[e.coeff(j) for e in r] for r in self.rows]

    def truncate(self, deg: int) -> PolyMatrix:
        return PolyMatrix(self.field, [[e.truncate(deg) for e in r] for r in self.rows])

    def select_columns(self, cols) -> PolyMatrix:
        return PolyMatrix(self.field, [[r[j] for j in cols] for r in self.rows])

    def __repr__(self):
        return f"PolyMatrix({self.k}x{self.n} over {self.field!r})"

    def __str__(self):
        return format_matrix(self, header=False)


def dot(u, v) -> Poly:
    it = iter(zip(u, v))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        if a.coeffs and b.coeffs:
            acc = acc + a * b
    return acc


def vec_times_matrix(u, G: PolyMatrix) -> tuple[Poly, ...]:
    """Row vector u (length k) times G."""
    if len(u) != G.k:
        raise ValueError("vector length does not match matrix rows")
    return tuple(dot(u, G.column(j)) for j in range(G.n))


def vec_weight(v) -> int:
    return sum(e.weight() for e in v)


def vec_degree(v):
    return max(e.degree for e in v)


# --- minors and complexity ---


def det_laplace(M: list[list[Poly]]) -> Poly:
    """Determinant by cofactor expansion along the first row."""
    size = len(M)
    if size == 1:
        return M[0][0]
    field = M[0][0].field
    acc = Poly(field)
    for j in range(size):
        a = M[0][j]
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = a * det_laplace(minor)
        acc = acc - term if j % 2 else acc + term
    return acc


def det_bareiss(M: list[list[Poly]]) -> Poly:
    """Fraction-free Gaussian elimination (Bareiss) over F[z]."""
    size = len(M)
    field = M[0][0].field
    A = [list(r) for r in M]
    sign = 1
    prev = Poly.constant(field, 1)
    for c in range(size - 1):
        piv = next((i for i in range(c, size) if not A[i][c].is_zero()), None)
        if piv is None:
            return Poly(field)
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            sign = -sign
        for i in range(c + 1, size):
            for j in range(c + 1, size):
                num = A[i][j] * A[c][c] - A[i][c] * A[c][j]
                quo, rem = divmod(num, prev)
                if not rem.is_zero():
                    raise ArithmeticError("Bareiss division not exact")
                A[i][j] = quo
            A[i][c] = Poly(field)
        prev = A[c][c]
    d = A[size - 1][size - 1]
    return d if sign == 1 else -d


def full_minors(G: PolyMatrix):
    """Yield (column tuple, minor) for all k x k minors of G."""
    k, n = G.shape
    if k > n:
        raise ValueError(f"k = {k} exceeds n = {n}")
    for cols in combinations(range(n), k):
        yield cols, det_laplace([[r[j] for j in cols] for r in G.rows])


def complexity(G: PolyMatrix) -> int:
    """Maximum degree of the full-size minors (0 for constant G)."""
    deg = max(m.degree for _, m in full_minors(G))
    if deg == NEG_INF:
        raise NotBasic("all full-size minors vanish; matrix is rank deficient")
    return int(deg)


def minors_gcd(G: PolyMatrix) -> Poly:
    g = Poly(G.field)
    for _, m in full_minors(G):
        g = poly_gcd(g, m)
        if g.degree == 0:
            break
    return g


def row_degrees(G: PolyMatrix) -> tuple:
    return tuple(vec_degree(r) for r in G.rows)


def leading_row_matrix(G: PolyMatrix) -> list[list[int]]:
    out = []
    for i, r in enumerate(G.rows):
        d = vec_degree(r)
        if d == NEG_INF:
            raise ValueError(f"row {i + 1} is zero")
        out.append([e.coeff(d) for e in r])
    return out


def is_row_reduced(G: PolyMatrix) -> bool:
    """Leading row coefficient matrix has full rank."""
    return len(row_reduce(G.field, leading_row_matrix(G))[0]) == G.k


def is_minimal(G: PolyMatrix) -> bool:
    """Right invertible and row degrees summing to the complexity.

    Raises NotBasic for matrices without polynomial right inverse.
    """
    right_inverse(G)
    by_minors = complexity(G) == sum(row_degrees(G))
    if by_minors != is_row_reduced(G):
        raise AssertionError("minor and leading-matrix minimality tests disagree")
    return by_minors


# --- column Hermite reduction and right inverses ---


def _column_hermite(G: PolyMatrix):
    """Unimodular column operations U with G U = [L | 0], L lower triangular.

    Returns (L as k x k list, U as n x n list).  Raises NotBasic if G has
    rank < k.
    """
    f = G.field
    k, n = G.shape
    A = [list(r) for r in G.rows]
    U = [[Poly(f, (1,)) if i == j else Poly(f) for j in range(n)] for i in range(n)]

    def colop(dst, src, factor):
        # column dst -= factor * column src
        for M in (A, U):
            for r in M:
                if not r[src].is_zero():
                    r[dst] = r[dst] - factor * r[src]

    def swap(a, b):
        for M in (A, U):
            for r in M:
                r[a], r[b] = r[b], r[a]

    for i in range(k):
        while True:
            nz = [j for j in range(i, n) if not A[i][j].is_zero()]
            if not nz:
                raise NotBasic(f"row {i + 1} is dependent on the rows above; rank < k")
            j0 = min(nz, key=lambda j: A[i][j].degree)
            if j0 != i:
                swap(i, j0)
            done = True
            for j in range(i + 1, n):
                if not A[i][j].is_zero():
                    quo = A[i][j] // A[i][i]
                    colop(j, i, quo)
                    if not A[i][j].is_zero():
                        done = False
            if done:
                break
    L = [row[:k] for row in A]
    return L, U


def right_inverse(G: PolyMatrix) -> PolyMatrix:
    """Polynomial H (n x k) with G H = I_k, or raise NotBasic."""
    f = G.field
    k, n = G.shape
    if k > n:
        raise ValueError(f"k = {k} exceeds n = {n}")
    L, U = _column_hermite(G)
    for i in range(k):
        if L[i][i].degree != 0:
            raise NotBasic("gcd of the full-size minors is not a nonzero constant")
    # Linv: inverse of lower triangular L with constant diagonal
    Linv = [[Poly(f) for _ in range(k)] for _ in range(k)]
    for c in range(k):
        for i in range(c, k):
            acc = Poly(f, (1,)) if i == c else Poly(f)
            for j in range(c, i):
                if not L[i][j].is_zero() and not Linv[j][c].is_zero():
                    acc = acc - L[i][j] * Linv[j][c]
            Linv[i][c] = acc.scale(f.inv(L[i][i].coeffs[0]))
    H = [[dot([U[r][j] for j in range(k)], [Linv[j][c] for j in range(k)]) for c in range(k)] for r in range(n)]
    Hm = PolyMatrix(f, H)
    if G @ Hm != PolyMatrix.identity(f, k):
        raise AssertionError("right inverse check failed")
    return Hm


def is_basic(G: PolyMatrix) -> bool:
    try:
        right_inverse(G)
    except NotBasic:
        return False
    return True


def membership(w, G: PolyMatrix, H: PolyMatrix | None = None) -> tuple[Poly, ...]:
    """Message u with u G = w, for right invertible G.  Raises NotMember."""
    if H is None:
        H = right_inverse(G)
    w = tuple(w)
    if len(w) != G.n:
        raise ValueError("vector length does not match matrix columns")
    u = vec_times_matrix(w, H)
    if vec_times_matrix(u, G) != w:
        raise NotMember("vector is not in the row module")
    return u


# --- row echelon form over F[z] (module membership for arbitrary row sets) ---


def row_echelon(field: FieldSpec, rows) -> list[list[Poly]]:
    """Row echelon form over F[z] by unimodular row operations.

    Returns the nonzero rows; their number is the rank.
    """
    A = [list(r) for r in rows]
    if not A:
        return []
    n = len(A[0])
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, len(A)) if not A[i][c].is_zero()]
            if not nz:
                break
            i0 = min(nz, key=lambda i: A[i][c].degree)
            A[r], A[i0] = A[i0], A[r]
            clean = True
            for i in range(r + 1, len(A)):
                if not A[i][c].is_zero():
                    quo = A[i][c] // A[r][c]
                    A[i] = [x - quo * y for x, y in zip(A[i], A[r])]
                    if not A[i][c].is_zero():
                        clean = False
            if clean:
                break
        if any(not A[i][c].is_zero() for i in range(r, len(A))):
            r += 1
        if r == len(A):
            break
    return [row for row in A[:r] if any(not e.is_zero() for e in row)]


def in_row_module(v, echelon) -> bool:
    """Whether v is an F[z]-combination of the rows of an echelon form."""
    v = list(v)
    for row in echelon:
        c = next(j for j, e in enumerate(row) if not e.is_zero())
        if v[c].is_zero():
            continue
        quo, rem = divmod(v[c], row[c])
        if not rem.is_zero():
            return False
        v = [x - quo * y for x, y in zip(v, row)]
    return all(e.is_zero() for e in v)


def minimal_basis(G: PolyMatrix) -> PolyMatrix:
    """Row-reduce G until its leading row matrix has full rank.

    Each step replaces the highest-degree row involved in a dependency of
    the leading coefficients by a combination of strictly lower degree.
    """
    f = G.field
    rows = [list(r) for r in G.rows]
    while True:
        M = PolyMatrix(f, rows)
        lead = leading_row_matrix(M)
        ker = left_kernel(f, lead)
        if not ker:
            return M
        c = ker[0]
        degs = row_degrees(M)
        i_star = max((i for i in range(len(rows)) if c[i]), key=lambda i: degs[i])
        d = degs[i_star]
        new = [Poly(f) for _ in range(M.n)]
        for i, ci in enumerate(c):
            if ci:
                shifted = [e.scale(ci).shift(d - degs[i]) for e in rows[i]]
                new = [a + b for a, b in zip(new, shifted)]
        rows[i_star] = new


# --- text format ---

def parse_terms(text: str, field: FieldSpec, var: str) -> dict[int, int]:
    """Parse a sum of ``c``, ``c*v``, ``c*v^e``, ``v``, ``v^e`` terms.

    Returns {exponent: coefficient index}.  Repeated powers are added.
    """
    out: dict[int, int] = {}
    t = text.replace(" ", "").replace("\t", "")
    if not t:
        raise ParseError("empty polynomial")
    for term in t.split("+"):
        if not term:
            raise ParseError(f"empty term in {text!r}")
        coef_txt, e = term, 0
        if term == var or term.startswith(var + "^"):
            coef_txt = "1"
            e = 1 if term == var else _int(term[len(var) + 1 :], text)
        elif "*" in term:
            coef_txt, _, mono = term.rpartition("*")
            if mono == var:
                e = 1
            elif mono.startswith(var + "^"):
                e = _int(mono[len(var) + 1 :], text)
            else:
                raise ParseError(f"bad term {term!r} (expected a power of {var})")
        try:
            c = parse_element(coef_txt, field)
        except FieldError as exc:
            raise ParseError(str(exc)) from None
        out[e] = field.add(out.get(e, 0), c)
    return out


def _int(s, ctx):
    if not s.isdigit():
        raise ParseError(f"bad exponent {s!r} in {ctx!r}")
    return int(s)


def parse_poly(text: str, field: FieldSpec, var: str = "z") -> Poly:
    terms = parse_terms(text, field, var)
    deg = max(terms)
    return Poly(field, [terms.get(i, 0) for i in range(deg + 1)])


def format_poly(p: Poly, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    f = p.field
    parts = []
    for e, c in enumerate(p.coeffs):
        if not c:
            continue
        cs = f.format(c)
        if e == 0:
            parts.append(cs)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            parts.append(mono if cs == "1" else f"{cs}*{mono}")
    return "+".join(parts)


_HEADER = re.compile(r"^field\s+GF\((\d+)\)(?:\s+modulus\s+(.+))?$")


def parse_header(line: str) -> FieldSpec:
    mt = _HEADER.match(line.strip())
    if not mt:
        raise ParseError(f"bad field header {line.strip()!r}; expected 'field GF(q) [modulus ...]'")
    q = int(mt.group(1))
    try:
        pm = prime_power(q)
        if pm is None:
            raise FieldError(f"{q} is not a prime power")
        mod = parse_modulus(mt.group(2), pm[0]) if mt.group(2) else None
        return field_of_order(q, mod)
    except FieldError as exc:
        raise ParseError(str(exc)) from None


def parse_matrix(text: str, field: FieldSpec | None = None) -> PolyMatrix:
    """Parse the matrix text format.

    Lines: an optional ``field GF(q) [modulus P(a)]`` header (required when
    no field is passed), then one matrix row per line with comma-separated
    entries.  ``#`` starts a comment; blank lines are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if lines and lines[0].startswith("field"):
        hdr = parse_header(lines[0])
        if field is not None and hdr != field:
            raise ParseError(f"header field {hdr!r} differs from expected {field!r}")
        field = hdr
        lines = lines[1:]
    if field is None:
        raise ParseError("missing 'field GF(q)' header")
    if not lines:
        raise ParseError("matrix has no rows")
    rows = [[parse_poly(e, field) for e in ln.split(",")] for ln in lines]
    try:
        return PolyMatrix(field, rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_matrix(G: PolyMatrix, header: bool = True) -> str:
    body = "\n".join(", ".join(format_poly(e) for e in r) for r in G.rows)
    return f"{G.field.header()}\n{body}\n" if header else body


__all__ = [
    "NEG_INF",
    "NotBasic",
    "NotMember",
    "ParseError",
    "Poly",
    "PolyMatrix",
    "complexity",
    "det_bareiss",
    "det_laplace",
    "format_matrix",
    "full_minors",
    "in_row_module",
    "is_basic",
    "is_minimal",
    "leading_row_matrix",
    "membership",
    "minimal_basis",
    "minors_gcd",
    "parse_matrix",
    "parse_poly",
    "right_inverse",
    "row_degrees",
    "row_echelon",
    "vec_times_matrix",
]
