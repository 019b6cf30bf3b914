"""Exact arithmetic in GF(p^n).

Field elements are plain Python ints encoding the coefficient vector of a
residue polynomial in base p: the element sum(c_i * x^i) is stored as
sum(c_i * p^i).  For p = 2 this is literally the bit-packed coefficient
vector, so GF(2^n) arithmetic runs on machine words (n <= 63 by contract).
Prime fields are the n = 1 case with p < 2**31.

A :class:`Field` is the descriptor (characteristic, degree, verified
irreducible reduction polynomial) plus the arithmetic on raw ints.
:class:`FieldElement` is a thin immutable wrapper giving operator syntax
and the cross-field safety checks.  Both are immutable and safe to share
between tasks; every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, isprime

from .errors import (
    MixedFields,
    NonPrimeCharacteristic,
    ReduciblePolynomial,
    ZeroElement,
    ZeroInverse,
)

MAX_BINARY_DEGREE = 63
MAX_PRIME = 2**31
_EXP_TABLE_MAX = 1 << 16


# -- polynomial helpers over GF(p), coefficients as little-endian tuples ----

def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mulmod(a, b, mod, p):
    """(a*b) mod `mod` over GF(p); `mod` is monic."""
    n = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1 if a and b else 0)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for i in range(len(res) - 1, n - 1, -1):
        c = res[i]
        if c:
            for j in range(n + 1):
                res[i - n + j] = (res[i - n + j] - c * mod[j]) % p
    return _poly_trim(res)


def _poly_powmod(base, e, mod, p):
    result = (1,)
    base = _poly_mulmod(base, (1,), mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        # a mod b
        a = list(a)
        db, lb = len(b) - 1, b[-1]
        inv_lb = pow(lb, p - 2, p)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                f = c * inv_lb % p
                for j in range(db + 1):
                    a[i - db + j] = (a[i - db + j] - f * b[j]) % p
        a, b = b, _poly_trim(a)
    return a


def _is_irreducible(coeffs, p):
    """Rabin test: x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1."""
    n = len(coeffs) - 1
    if n < 1 or coeffs[-1] % p == 0:
        return False
    if n == 1:
        return True
    if coeffs[0] % p == 0:   # x divides f
        return False
    x = (0, 1)
    for r in sorted(factorint(n)):
        m = n // r
        t = _poly_powmod(x, p**m, coeffs, p)
        diff = list(t) + [0] * (2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(diff, coeffs, p)
        if len(g) - 1 != 0:
            return False
    t = _poly_powmod(x, p**n, coeffs, p)
    diff = list(t) + [0] * (2 - len(t))
    diff[1] = (diff[1] - 1) % p
    return len(_poly_trim(diff)) == 0


def _int_to_coeffs(v, p, width):
    out = []
    for _ in range(width):
        out.append(v % p)
        v //= p
    return tuple(out)


def _coeffs_to_int(c, p):
    v = 0
    for ci in reversed(c):
        v = v * p + ci
    return v


@dataclass(frozen=True)
class Field:
    """Descriptor for GF(p^n) with int-encoded elements in [0, p^n)."""

    p: int
    n: int
    reduction: tuple  # monic, length n+1, little-endian coefficients

    @property
    def q(self):
        return self.p**self.n

    @property
    def characteristic(self):
        return self.p

    @property
    def degree(self):
        return self.n

    @property
    def cardinality(self):
        return self.q

    def __post_init__(self):
        object.__setattr__(self, "_mask", None)
        object.__setattr__(self, "_tables", None)
        if self.p == 2:
            object.__setattr__(self, "_poly_bits", _coeffs_to_int(self.reduction, 2))

    # -- encoding ------------------------------------------------------

    def coeffs(self, a):
        return _int_to_coeffs(a, self.p, self.n)

    def from_coeffs(self, c):
        return _coeffs_to_int(tuple(x % self.p for x in c), self.p)

    def elements(self):
        return range(self.q)

    def element_str(self, a):
        """Bit-exact textual notation, e.g. '0x5@GF(2^3,0xB)': little-endian
        hex of the coefficient vector, then the reduction polynomial."""
        poly = _coeffs_to_int(self.reduction, self.p)
        return f"0x{a:X}@GF({self.p}^{self.n},0x{poly:X})"

    # -- arithmetic on int-encoded elements ------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.from_coeffs(x + y for x, y in zip(ca, cb))

    def neg(self, a):
        if self.p == 2:
            return a
        return self.from_coeffs(-x for x in self.coeffs(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _build_tables(self):
        if self.q > _EXP_TABLE_MAX or self.q <= 2:
            return
        gen = None
        for cand in range(1, self.q):
            if self._order_slow(cand) == self.q - 1:
                gen = cand
                break
        exp = [1] * (self.q - 1)
        log = [0] * self.q
        acc = 1
        for i in range(self.q - 1):
            exp[i] = acc
            log[acc] = i
            acc = self._mul_slow(acc, gen)
        object.__setattr__(self, "_tables", (tuple(exp), tuple(log)))

    def _mul_slow(self, a, b):
        if self.p == 2:
            res = 0
            poly = self._poly_bits
            top = 1 << self.n
            while b:
                if b & 1:
                    res ^= a
                a <<= 1
                if a & top:
                    a ^= poly
                b >>= 1
            return res
        prod = _poly_mulmod(self.coeffs(a), self.coeffs(b), self.reduction, self.p)
        return _coeffs_to_int(prod, self.p)

    def _order_slow(self, a):
        k, acc = 1, a
        while acc != 1:
            acc = self._mul_slow(acc, a)
            k += 1
            if k > self.q:
                raise ZeroElement("zero has no multiplicative order")
        return k

    def mul(self, a, b):
        if self._tables is None and self.q <= _EXP_TABLE_MAX:
            self._build_tables()
        t = self._tables
        if t is not None:
            if a == 0 or b == 0:
                return 0
            exp, log = t
            return exp[(log[a] + log[b]) % (self.q - 1)]
        return self._mul_slow(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroInverse("0 has no inverse")
        t = self._tables
        if t is not None:
            exp, log = t
            return exp[(-log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def pow(self, a, k):
        if k < 0:
            a = self.inv(a)
            k = -k
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def frobenius(self, a, h):
        """a ** (p ** h); h reduced mod n since Frobenius^n is the identity."""
        h %= self.n
        return self.pow(a, self.p**h)

    def order(self, a):
        """Least k >= 1 with a^k = 1; divides q - 1."""
        if a == 0:
            raise ZeroElement("multiplicative order of 0 is undefined")
        t = self.q - 1
        for r in factorint(t):
            while t % r == 0 and self.pow(a, t // r) == 1:
                t //= r
        return t

    def primitive_element(self):
        for cand in range(1, self.q):
            if self.order(cand) == self.q - 1:
                return cand
        raise ZeroElement("no primitive element found")  # unreachable

    def one(self):
        return 1

    def zero(self):
        return 0


@lru_cache(maxsize=None)
def _default_reduction(p, n):
    # Lexicographically least monic irreducible of degree n: smallest int
    # encoding with the x^n coefficient fixed to 1.
    for low in range(p**n):
        coeffs = _int_to_coeffs(low, p, n) + (1,)
        if _is_irreducible(coeffs, p):
            return coeffs
    raise ReduciblePolynomial(f"no irreducible polynomial of degree {n} over GF({p})")


def create_field(p, n, poly=None):
    """Build a GF(p^n) descriptor with a verified-irreducible reduction.

    `poly` is a little-endian coefficient sequence of degree exactly n;
    when absent the deterministic lexicographic-least irreducible is used
    so serialized elements are reproducible across runs.
    """
    if p < 2 or not isprime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if p >= MAX_PRIME:
        raise NonPrimeCharacteristic(f"characteristic cap is {MAX_PRIME}")
    if n < 1:
        raise ReduciblePolynomial(f"degree must be positive, got {n}")
    if p == 2 and n > MAX_BINARY_DEGREE:
        raise ReduciblePolynomial(f"GF(2^n) capped at n <= {MAX_BINARY_DEGREE}")
    if poly is None:
        coeffs = _default_reduction(p, n)
    else:
        coeffs = tuple(int(c) % p for c in poly)
        coeffs = _poly_trim(coeffs)
        if len(coeffs) != n + 1:
            raise ReduciblePolynomial(f"reduction polynomial must have degree {n}")
        if coeffs[-1] != 1:
            raise ReduciblePolynomial("reduction polynomial must be monic")
        if not _is_irreducible(coeffs, p):
            raise ReduciblePolynomial(f"{coeffs} is reducible over GF({p})")
    return Field(p, n, coeffs)


def field_of_order(q, poly=None):
    """GF(q) for a prime power q, factoring q as p^n."""
    f = factorint(q)
    if len(f) != 1:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    ((p, n),) = f.items()
    return create_field(p, n, poly)


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific field; operators enforce matching fields."""

    field: Field
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ZeroElement(f"value {self.value} outside [0, {self.field.q})")

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise MixedFields("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def frobenius(self, h):
        return FieldElement(self.field, self.field.frobenius(self.value, h))

    def multiplicative_order(self):
        return self.field.order(self.value)

    def coefficients(self):
        return self.field.coeffs(self.value)

    def __str__(self):
        return self.field.element_str(self.value)


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def inverse(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, k: int) -> FieldElement:
    return a**k


def frobenius_power(a: FieldElement, h: int) -> FieldElement:
    return a.frobenius(h)


def multiplicative_order(a: FieldElement) -> int:
    return a.multiplicative_order()
