"""The algebra A = F[x]/(x^n - 1), its automorphisms, and the skew ring A[z; sigma].

Skew polynomials are written with left coefficients, sum_j z^j a_j, and
multiply by the rule a z = z sigma(a).  The map ``p`` identifies F[z]^n with
A[z]: coordinate t of a vector becomes the coefficient of x^t.
"""

from __future__ import annotations

from itertools import product
from math import gcd

import numpy as np

from .gf import FieldError, FieldSpec, matrix_rank
from .polymat import (
    NotMember,
    ParseError,
    Poly,
    PolyMatrix,
    in_row_module,
    is_minimal,
    membership,
    minimal_basis,
    parse_terms,
    right_inverse,
    row_echelon,
)

MAX_CANDIDATES = 1 << 20


class NotDirectSummand(ValueError):
    """The left ideal is not the polynomial part of a convolutional code."""


class Algebra:
    """F[x]/(x^n - 1) with gcd(n, q) = 1."""

    def __init__(self, n: int, field: FieldSpec):
        if gcd(n, field.q) != 1:
            raise FieldError(f"length {n} and field size {field.q} are not coprime")
        self.n = n
        self.field = field

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.n == other.n and self.field == other.field

    def __hash__(self):
        return hash((self.n, self.field))

    def __repr__(self):
        return f"Algebra(n={self.n}, {self.field!r})"

    def element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(self, coeffs)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, [0] * self.n)

    def one(self) -> AlgebraElement:
        return self.monomial(0)

    def monomial(self, e: int, c: int = 1) -> AlgebraElement:
        v = [0] * self.n
        v[e % self.n] = c
        return AlgebraElement(self, v)

    def x(self) -> AlgebraElement:
        return self.monomial(1)

    def parse(self, text: str) -> AlgebraElement:
        """Parse a polynomial in x (exponents are reduced mod n)."""
        terms = parse_terms(text, self.field, "x")
        v = [0] * self.n
        for e, c in terms.items():
            v[e % self.n] = self.field.add(v[e % self.n], c)
        return AlgebraElement(self, v)


class AlgebraElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: Algebra, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != algebra.n:
            raise ValueError(f"need exactly {algebra.n} coefficients")
        self.algebra = algebra
        self.coeffs = coeffs

    def _same(self, other):
        if other.algebra != self.algebra:
            raise FieldError("elements of different algebras")

    def __add__(self, other):
        self._same(other)
        f = self.algebra.field
        return AlgebraElement(self.algebra, [f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._same(other)
        f = self.algebra.field
        return AlgebraElement(self.algebra, [f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        self._same(other)
        f, n = self.algebra.field, self.algebra.n
        out = [0] * n
        mul, add = f._mul, f._add
        for i, a in enumerate(self.coeffs):
            if a:
                row = mul[a]
                for j, b in enumerate(other.coeffs):
                    if b:
                        t = (i + j) % n
                        out[t] = add[out[t]][row[b]]
        return AlgebraElement(self.algebra, out)

    def scale(self, c: int):
        row = self.algebra.field._mul[c]
        return AlgebraElement(self.algebra, [row[a] for a in self.coeffs])

    def __pow__(self, e: int):
        result = self.algebra.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        f = self.algebra.field
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = f.format(c)
            if e == 0:
                parts.append(cs)
            else:
                mono = "x" if e == 1 else f"x^{e}"
                parts.append(mono if cs == "1" else f"{cs}*{mono}")
        return "+".join(parts) if parts else "0"


def validate_automorphism(a: AlgebraElement) -> bool:
    """x -> a extends to an F-algebra automorphism of A.

    Holds iff a^n = 1 and 1, a, ..., a^(n-1) are linearly independent.
    """
    A = a.algebra
    if a**A.n != A.one():
        return False
    powers = [A.one()]
    for _ in range(A.n - 1):
        powers.append(powers[-1] * a)
    return matrix_rank(A.field, [p.coeffs for p in powers]) == A.n


class Automorphism:
    """F-algebra automorphism of A determined by the image of x."""

    def __init__(self, image_of_x: AlgebraElement, check: bool = True):
        if check and not validate_automorphism(image_of_x):
            raise ValueError(f"sigma(x) = {image_of_x} does not define an automorphism")
        self.image = image_of_x
        self.algebra = image_of_x.algebra
        # sigma(x^i) for i < n, used by apply()
        p = [self.algebra.one()]
        for _ in range(self.algebra.n - 1):
            p.append(p[-1] * image_of_x)
        self._powers = p
        self._cache: dict[tuple, AlgebraElement] = {}

    @classmethod
    def identity(cls, algebra: Algebra) -> Automorphism:
        return cls(algebra.x(), check=False)

    def __call__(self, a: AlgebraElement) -> AlgebraElement:
        return apply(self, a)

    def power_apply(self, a: AlgebraElement, times: int) -> AlgebraElement:
        """sigma^times(a)."""
        key = (a.coeffs, times)
        hit = self._cache.get(key)
        if hit is None:
            hit = a
            for _ in range(times):
                hit = apply(self, hit)
            self._cache[key] = hit
        return hit

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Automorphism(x -> {self.image})"

    def __str__(self):
        return str(self.image)


def apply(sigma: Automorphism, a: AlgebraElement) -> AlgebraElement:
    """sum f_i x^i -> sum f_i sigma(x)^i."""
    if a.algebra != sigma.algebra:
        raise FieldError("element and automorphism live in different algebras")
    out = sigma.algebra.zero()
    for c, pw in zip(a.coeffs, sigma._powers):
        if c:
            out = out + pw.scale(c)
    return out


def enumerate_automorphisms(n: int, field: FieldSpec) -> list[Automorphism]:
    """All automorphisms of F[x]/(x^n - 1), ordered by sigma(x) coefficients.

    Brute force over all q^n candidates; vectorized power and rank checks.
    """
    A = Algebra(n, field)
    q = field.q
    if q**n > MAX_CANDIDATES:
        raise ValueError(f"{q}^{n} candidates exceed the search limit of {MAX_CANDIDATES}")
    cand = np.array(list(product(range(q), repeat=n)), dtype=np.int64)[:, ::-1]
    add, mul = field.add_table, field.mul_table

    def cyc_mul(a, b):
        out = np.zeros_like(a)
        for i in range(n):
            for j in range(n):
                out[:, (i + j) % n] = add[out[:, (i + j) % n], mul[a[:, i], b[:, j]]]
        return out

    # a^n by repeated squaring on the whole batch
    one = np.zeros_like(cand)
    one[:, 0] = 1
    res, base, e = one, cand, n
    while e:
        if e & 1:
            res = cyc_mul(res, base)
        base = cyc_mul(base, base)
        e >>= 1
    ok = (res == one).all(axis=1)
    out = []
    for row in cand[ok]:
        a = AlgebraElement(A, row.tolist())
        if validate_automorphism(a):
            out.append(Automorphism(a, check=False))
    out.sort(key=lambda s: tuple(reversed(s.image.coeffs)))
    return out


class SkewPoly:
    """sum_j z^j a_j in A[z; sigma], stored by left coefficients."""

    __slots__ = ("sigma", "coeffs")

    def __init__(self, sigma: Automorphism, coeffs):
        c = list(coeffs)
        for a in c:
            if a.algebra != sigma.algebra:
                raise FieldError("coefficient from a different algebra")
        while c and c[-1].is_zero():
            c.pop()
        self.sigma = sigma
        self.coeffs = tuple(c)

    @classmethod
    def from_right_coefficients(cls, sigma: Automorphism, coeffs) -> SkewPoly:
        """Normalize sum_j a_j z^j to left form via a z^j = z^j sigma^j(a)."""
        return cls(sigma, [sigma.power_apply(a, j) for j, a in enumerate(coeffs)])

    @classmethod
    def constant(cls, sigma, a: AlgebraElement) -> SkewPoly:
        return cls(sigma, [a])

    @property
    def algebra(self) -> Algebra:
        return self.sigma.algebra

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, j) -> AlgebraElement:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else self.algebra.zero()

    def _same(self, other):
        if other.sigma != self.sigma:
            raise FieldError("skew polynomials over different automorphisms")

    def __add__(self, other):
        self._same(other)
        L = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.sigma, [self.coeff(j) + other.coeff(j) for j in range(L)])

    def __sub__(self, other):
        self._same(other)
        L = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.sigma, [self.coeff(j) - other.coeff(j) for j in range(L)])

    def __mul__(self, other):
        return skew_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, SkewPoly) and self.sigma == other.sigma and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"SkewPoly({self})"

    def __str__(self):
        parts = []
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            if j == 0:
                parts.append(str(a))
            else:
                zj = "z" if j == 1 else f"z^{j}"
                parts.append(f"{zj}*({a})")
        return " + ".join(parts) if parts else "0"


def skew_multiply(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """(sum z^j a_j)(sum z^l b_l) = sum_t z^t sum_{j+l=t} sigma^l(a_j) b_l."""
    f._same(g)
    if f.is_zero() or g.is_zero():
        return SkewPoly(f.sigma, [])
    A = f.algebra
    out = [A.zero() for _ in range(len(f.coeffs) + len(g.coeffs) - 1)]
    for j, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        for l, b in enumerate(g.coeffs):
            if not b.is_zero():
                out[j + l] = out[j + l] + f.sigma.power_apply(a, l) * b
    return SkewPoly(f.sigma, out)


def parse_skew(text: str, sigma: Automorphism) -> SkewPoly:
    """Parse ``P(x) + z*(P(x)) + z^j*(P(x))``; terms with the same power add up."""
    A = sigma.algebra
    t = text.replace(" ", "")
    parts, depth, cur = [], 0, ""
    for ch in t:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    if depth:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    coeffs: dict[int, AlgebraElement] = {}
    for part in parts:
        if not part:
            raise ParseError(f"empty term in {text!r}")
        if part.startswith("z"):
            head, sep, body = part.partition("*(")
            if not sep or not body.endswith(")"):
                raise ParseError(f"z-terms must look like z^j*(P(x)), got {part!r}")
            if head == "z":
                j = 1
            elif head.startswith("z^") and head[2:].isdigit():
                j = int(head[2:])
            else:
                raise ParseError(f"bad power of z {head!r}")
            a = A.parse(body[:-1])
        else:
            j, a = 0, A.parse(part)
        coeffs[j] = coeffs[j] + a if j in coeffs else a
    deg = max(coeffs)
    return SkewPoly(sigma, [coeffs.get(j, A.zero()) for j in range(deg + 1)])


# --- the map p between F[z]^n and A[z] ---


def p_map(v, sigma: Automorphism) -> SkewPoly:
    """F[z]^n -> A[z]: the z^j coefficient of entry t becomes x^t in a_j."""
    A = sigma.algebra
    v = list(v)
    if len(v) != A.n:
        raise ValueError(f"vector length {len(v)} differs from n = {A.n}")
    deg = max((len(e.coeffs) for e in v), default=0)
    return SkewPoly(sigma, [A.element([e.coeff(j) for e in v]) for j in range(deg)])


def p_inverse(g: SkewPoly) -> tuple[Poly, ...]:
    f = g.algebra.field
    return tuple(Poly(f, [a.coeffs[t] for a in g.coeffs]) for t in range(g.algebra.n))


def sigma_circulant(g: SkewPoly) -> PolyMatrix:
    """n x n matrix with rows p^{-1}(x^i g), i = 0..n-1."""
    A = g.algebra
    rows = []
    xi = SkewPoly.constant(g.sigma, A.one())
    x = SkewPoly.constant(g.sigma, A.x())
    for _ in range(A.n):
        rows.append(p_inverse(xi * g))
        xi = x * xi
    return PolyMatrix(A.field, rows)


def ideal_generator_matrix(g: SkewPoly) -> PolyMatrix:
    """Minimal right-invertible generator matrix of p^{-1}(A[z;sigma] g).

    Circulant rows are scanned in order g, xg, x^2 g, ...; a row is kept
    unless it is an F[z]-combination of the rows kept so far.  Raises
    NotDirectSummand when the module is not a direct summand of F[z]^n.
    """
    if g.is_zero():
        raise ValueError("generator polynomial must be nonzero")
    f = g.algebra.field
    M = sigma_circulant(g)
    kept: list = []
    ech: list = []
    for r in M.rows:
        if all(e.is_zero() for e in r) or (ech and in_row_module(r, ech)):
            continue
        kept.append(r)
        ech = row_echelon(f, kept)
    if len(ech) != len(kept):
        # kept rows are dependent over F(z); use the echelon basis instead
        kept = ech
    G = PolyMatrix(f, kept)
    try:
        right_inverse(G)
    except Exception as exc:
        raise NotDirectSummand(str(exc)) from None
    if not is_minimal(G):
        G = minimal_basis(G)
    return G


def is_sigma_cyclic(G: PolyMatrix, sigma: Automorphism) -> bool:
    """p(rowspace G) is a left ideal of A[z; sigma].

    Closure under z is automatic, so it suffices that x p(v) maps back into
    the row module for every row v.  Raises NotBasic if G has no right inverse.
    """
    if G.n != sigma.algebra.n or G.field != sigma.algebra.field:
        raise ValueError("matrix does not match the algebra of sigma")
    H = right_inverse(G)
    x = SkewPoly.constant(sigma, sigma.algebra.x())
    for r in G.rows:
        w = p_inverse(x * p_map(r, sigma))
        try:
            membership(w, G, H)
        except NotMember:
            return False
    return True


def same_row_module(G1: PolyMatrix, G2: PolyMatrix) -> bool:
    """Mutual membership of all rows (both matrices right invertible)."""
    H1, H2 = right_inverse(G1), right_inverse(G2)
    try:
        for r in G2.rows:
            membership(r, G1, H1)
        for r in G1.rows:
            membership(r, G2, H2)
    except NotMember:
        return False
    return True
