"""Table-backed arithmetic in small finite fields GF(p^m), p^m <= 256.

Elements are stored as integer indices: the index of an element is the
base-p integer formed by its coefficients in the polynomial basis
1, a, a^2, ... where ``a`` is the root of the field modulus.  For prime
fields this is just the residue.  All arithmetic goes through precomputed
log/antilog tables.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product

import numpy as np

MAX_ORDER = 256

# Moduli of the fields used in the code tables (low -> high coefficients).
DEFAULT_MODULI = {
    4: (1, 1, 1),  # a^2 + a + 1
    8: (1, 1, 0, 1),  # a^3 + a + 1
    16: (1, 1, 0, 0, 1),  # a^4 + a + 1
}


class FieldError(ValueError):
    """Invalid field parameters or mixed-field arithmetic."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q == p**m, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            return (p, m) if q == 1 else None
    return None


def _polymod_p(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    """Remainder of a by the monic polynomial mod over GF(p)."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(mod) - 1
    if m < 1 or mod[-1] != 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            div = tuple(low) + (1,)
            if not any(_polymod_p(list(mod), div, p)):
                return False
    return True


class FieldSpec:
    """GF(p^m) with its arithmetic tables.  Immutable after construction."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        q = self.q
        p_pow = [p**i for i in range(m + 1)]

        def to_vec(x):
            return [(x // p_pow[i]) % p for i in range(m)]

        def from_vec(v):
            return sum(c * p_pow[i] for i, c in enumerate(v))

        # addition is coordinatewise mod p
        add = np.zeros((q, q), dtype=np.int64)
        vecs = [to_vec(x) for x in range(q)]
        for x in range(q):
            for y in range(q):
                add[x, y] = from_vec([(s + t) % p for s, t in zip(vecs[x], vecs[y])])
        neg = [from_vec([(-s) % p for s in vecs[x]]) for x in range(q)]

        # antilog table: successive powers of the generator
        if m == 1:
            gen = next(g for g in range(1, q) if _order_mod_p(g, p) == q - 1) if q > 2 else 1
        else:
            gen = p  # the element "a" (the root of the modulus)
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            if log[x] != -1:
                raise FieldError(
                    f"modulus {format_modulus(self.modulus)} is not primitive: "
                    f"its root has order {i}, not {q - 1}"
                )
            exp[i] = x
            log[x] = i
            x = self._times_gen(x, gen, vecs, from_vec)
        if x != 1:
            raise FieldError("generator order mismatch")
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]

        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            for b in range(1, q):
                mul[a, b] = exp[log[a] + log[b]]

        self.generator = gen
        self.add_table = add
        self.mul_table = mul
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)
        # plain-list copies are faster for scalar lookups
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._neg = neg
        self._exp = exp
        self._log = log
        self._inv = [0] + [exp[(q - 1 - log[a]) % (q - 1)] for a in range(1, q)]
        self._sub = [[self._add[a][neg[b]] for b in range(q)] for a in range(q)]

    def _times_gen(self, x, gen, vecs, from_vec):
        p, m = self.p, self.m
        if m == 1:
            return (x * gen) % p
        # multiply by a, reduce with a^m = -(mod[0] + ... + mod[m-1] a^(m-1))
        v = [0] + vecs[x]
        top = v[m]
        v = v[:m]
        for i in range(m):
            v[i] = (v[i] - top * self.modulus[i]) % p
        return from_vec(v)

    # structural equality: mixing fields is an error, never an embedding
    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q}) [modulus {format_modulus(self.modulus)}]"

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def header(self) -> str:
        """Matrix-file header line for this field."""
        if self.m == 1 or DEFAULT_MODULI.get(self.q) == self.modulus:
            return f"field GF({self.q})"
        return f"field GF({self.q}) modulus {format_modulus(self.modulus)}"

    # scalar arithmetic on indices
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._sub[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero in " + repr(self))
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def power(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def gen_power(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def from_int(self, c: int) -> int:
        """Image of the integer c in the prime subfield."""
        return c % self.p

    def element(self, value) -> FieldElement:
        if isinstance(value, str):
            return FieldElement(parse_element(value, self), self)
        return FieldElement(int(value), self)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(i, self) for i in range(self.q)]

    def format(self, a: int) -> str:
        if self.m == 1:
            return str(a)
        if a == 0:
            return "0"
        k = self._log[a]
        if k == 0:
            return "1"
        if k == 1:
            return "a"
        return f"a^{k}"


def _order_mod_p(g: int, p: int) -> int:
    x, k = g % p, 1
    while x != 1:
        x = (x * g) % p
        k += 1
    return k


def format_modulus(mod: tuple[int, ...]) -> str:
    terms = []
    for e in range(len(mod) - 1, -1, -1):
        c = mod[e]
        if not c:
            continue
        mono = "1" if e == 0 else ("a" if e == 1 else f"a^{e}")
        if e == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return "+".join(terms)


_MOD_TERM = re.compile(r"^(?:(\d+)\*?)?(a(?:\^(\d+))?)?$")


def parse_modulus(text: str, p: int) -> tuple[int, ...]:
    """Parse e.g. ``a^4+a+1`` into low->high coefficients over GF(p)."""
    coeffs: dict[int, int] = {}
    for term in text.replace(" ", "").split("+"):
        mt = _MOD_TERM.match(term)
        if not term or not mt or (mt.group(1) is None and mt.group(2) is None):
            raise FieldError(f"bad modulus term {term!r}")
        c = int(mt.group(1)) if mt.group(1) is not None else 1
        if mt.group(2) is None:
            e = 0
        else:
            e = int(mt.group(3)) if mt.group(3) is not None else 1
        coeffs[e] = (coeffs.get(e, 0) + c) % p
    deg = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(deg + 1))


def _primitive_default(p: int, m: int) -> tuple[int, ...]:
    for low in product(range(p), repeat=m):
        mod = tuple(reversed(low)) + (1,)
        if mod[0] == 0 or not is_irreducible(mod, p):
            continue
        try:
            FieldSpec(p, m, mod)
        except FieldError:
            continue
        return mod
    raise FieldError(f"no primitive polynomial of degree {m} over GF({p})")


@lru_cache(maxsize=None)
def construct_field(p: int, m: int = 1, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """Build GF(p^m).

    Without a modulus, q in {4, 8, 16} gets the polynomials a^2+a+1, a^3+a+1
    and a^4+a+1; other extension fields get the first primitive polynomial
    in enumeration order.  The root of the modulus must be primitive, since
    it is the element printed as ``a``.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if p**m > MAX_ORDER:
        raise FieldError(f"field order {p ** m} exceeds {MAX_ORDER}")
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    if modulus is None:
        modulus = DEFAULT_MODULI.get(p**m) or _primitive_default(p, m)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {m}")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {format_modulus(modulus)} is reducible over GF({p})")
    return FieldSpec(p, m, modulus)


def field_of_order(q: int, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    pm = prime_power(q)
    if pm is None:
        raise FieldError(f"{q} is not a prime power")
    return construct_field(pm[0], pm[1], modulus)


_ELEM = re.compile(r"^(?:a(?:\^(\d+))?|(\d+))$")


def parse_element(text: str, field: FieldSpec) -> int:
    """Parse ``0``, ``1``, ``a``, ``a^k`` (or a residue 0..p-1) to an index."""
    t = text.strip()
    mt = _ELEM.match(t)
    if not mt:
        raise FieldError(f"bad field element {text!r}")
    if mt.group(2) is not None:
        c = int(mt.group(2))
        if c >= field.p:
            raise FieldError(f"{c} is not an element of the prime field GF({field.p})")
        return c
    if field.m == 1:
        raise FieldError(f"symbol 'a' is not used for prime field GF({field.q})")
    k = int(mt.group(1)) if mt.group(1) is not None else 1
    return field.gen_power(k)


class FieldElement:
    """An element of a FieldSpec; arithmetic only within one field."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: FieldSpec):
        if not 0 <= value < field.q:
            raise FieldError(f"{value} is not an element index of {field!r}")
        self.value = value
        self.field = field

    def _check(self, other) -> int:
        if isinstance(other, int):
            return self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return other.value

    def __add__(self, other):
        b = self._check(other)
        return FieldElement(self.field.add(self.value, b), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._check(other)
        return FieldElement(self.field.sub(self.value, b), self.field)

    def __rsub__(self, other):
        b = self._check(other)
        return FieldElement(self.field.sub(b, self.value), self.field)

    def __neg__(self):
        return FieldElement(self.field.neg(self.value), self.field)

    def __mul__(self, other):
        b = self._check(other)
        return FieldElement(self.field.mul(self.value, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._check(other)
        return FieldElement(self.field.div(self.value, b), self.field)

    def __pow__(self, e: int):
        return FieldElement(self.field.power(self.value, e), self.field)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return (
            isinstance(other, FieldElement)
            and other.field == self.field
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.value, self.field))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self}, {self.field!r})"

    def __str__(self):
        return self.field.format(self.value)


def multiply(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def invert(a: FieldElement) -> FieldElement:
    return a.inverse()


# --- constant linear algebra over GF(q); matrices are lists of index rows ---


def row_reduce(field: FieldSpec, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def matrix_rank(field: FieldSpec, rows) -> int:
    return len(row_reduce(field, rows)[0])


def left_kernel(field: FieldSpec, rows) -> list[list[int]]:
    """Basis of {c : c . rows = 0} over the field."""
    k = len(rows)
    if k == 0:
        return []
    aug = [list(r) + [1 if j == i else 0 for j in range(k)] for i, r in enumerate(rows)]
    ncols = len(rows[0])
    red, _ = row_reduce(field, aug)
    # aug has full row rank, so the zero-left rows span the whole kernel
    return [r[ncols:] for r in red if not any(r[:ncols])]
