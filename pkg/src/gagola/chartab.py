"""Exact character tables by the Dixon method.

The pipeline: class multiplication constants -> simultaneous eigenvectors
of the class-constant matrices over GF(p) for a prime p = 1 mod exponent,
p > 2*floor(sqrt(|G|)) -> degrees via exact square roots mod p -> lift of
every value to a cyclotomic integer by inverse discrete Fourier transform
over the powers of a fixed element of order e in GF(p)*.

Character values are held as multiplicity vectors: chi(g) is the sum of
eigenvalue roots of unity of the representing matrix, so the value is
sum(m_k * zeta_e^k) with small nonnegative integers m_k.  The zero test
(the predicate the Gagola scan rests on) is exact integer polynomial
remainder modulo the e-th cyclotomic polynomial; the mod-p image is used
only as a fast filter.

Everything is deterministic: matrix order, eigenvalue order, root finding
(splitting polynomials with shifts delta = 0, 1, 2, ...), and row order
(principal character first, the rest by (degree, value vector)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

import numpy as np
from sympy import isprime, nextprime

from .errors import (
    AbelianGroup,
    CapExceeded,
    LiftInconsistent,
    MultipleGagolaCharacters,
    PrimeSearchExceeded,
)
from .groups import ClassTable, FiniteGroup

TABLE_ORDER_CAP = 2000
EXPONENT_CAP = 200
PRIME_CAP = 2**31


# ---------------------------------------------------------------------------
# cyclotomic integers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(e):
    """Integer coefficients of the e-th cyclotomic polynomial, little-endian."""
    # Phi_e = (x^e - 1) / product of Phi_d over proper divisors d of e
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1
    for d in range(1, e):
        if e % d == 0:
            num = _poly_divide_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _poly_divide_exact(num, den):
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            assert c % den[-1] == 0
            q = c // den[-1]
            out[i - dd] = q
            for j, dj in enumerate(den):
                num[i - dd + j] -= q * dj
    assert not any(num)
    return out


def _remainder_mod_cyclotomic(coeffs, e):
    """Remainder of an integer polynomial modulo Phi_e; canonical in Z[zeta_e]."""
    phi = cyclotomic_polynomial(e)
    d = len(phi) - 1
    r = list(coeffs)
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            for j, pj in enumerate(phi):
                r[i - d + j] -= c * pj
    r = r[:d] + [0] * max(0, d - len(r))
    return tuple(r[:d])


@dataclass(frozen=True)
class CyclotomicInteger:
    """sum(mults[k] * zeta^k) for zeta a fixed primitive e-th root of unity.

    The multiplicity vector records eigenvalue counts, so entries are
    nonnegative; equality and the zero test reduce to the canonical
    remainder modulo the cyclotomic polynomial.
    """

    exponent: int
    mults: tuple

    def __post_init__(self):
        assert len(self.mults) == self.exponent
        assert all(m >= 0 for m in self.mults)

    @classmethod
    def integer(cls, e, value):
        # nonnegative integers embed at zeta^0; negatives via -1 = sum of
        # the nontrivial p-th roots for prime p | e would not keep the
        # multiplicity reading, so tables only produce lifted vectors and
        # this helper only accepts value >= 0.
        assert value >= 0
        return cls(e, (value,) + (0,) * (e - 1))

    def canonical(self):
        return _remainder_mod_cyclotomic(self.mults, self.exponent)

    def is_zero(self):
        return not any(self.canonical())

    def is_rational_integer(self):
        c = self.canonical()
        return not any(c[1:])

    def rational_value(self):
        c = self.canonical()
        if any(c[1:]):
            return None
        return c[0]

    def __eq__(self, other):
        return (
            isinstance(other, CyclotomicInteger)
            and self.exponent == other.exponent
            and self.canonical() == other.canonical()
        )

    def __hash__(self):
        return hash((self.exponent, self.canonical()))

    def degree_weight(self):
        return sum(self.mults)

    def conjugate(self):
        """Complex conjugate: zeta^k -> zeta^(e-k)."""
        e = self.exponent
        out = [0] * e
        for k, m in enumerate(self.mults):
            out[(-k) % e] += m
        return CyclotomicInteger(e, tuple(out))

    def to_complex(self):
        import cmath

        e = self.exponent
        return sum(
            m * cmath.exp(2j * cmath.pi * k / e) for k, m in enumerate(self.mults)
        )

    def render(self):
        """Human-readable canonical form, e.g. '-2' or 'z12^4 - 1'."""
        c = self.canonical()
        if not any(c):
            return "0"
        terms = []
        for k in range(len(c) - 1, -1, -1):
            v = c[k]
            if v == 0:
                continue
            if k == 0:
                body = str(abs(v))
            else:
                zz = f"z{self.exponent}" + (f"^{k}" if k > 1 else "")
                body = zz if abs(v) == 1 else f"{abs(v)}*{zz}"
            terms.append(("-" if v < 0 else "+", body))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def cyclotomic_linear_combination(e, weighted):
    """Exact integer combination sum(w * value) as a raw coefficient list.

    Weights may be negative; the result is meant for zero tests, not for
    storage as a multiplicity vector.
    """
    acc = [0] * e
    for w, val in weighted:
        for k, m in enumerate(val.mults):
            acc[k] += w * m
    return acc


def cyclotomic_product_coeffs(a: CyclotomicInteger, b: CyclotomicInteger):
    """Coefficients of a*b as exponents mod e (cyclic convolution)."""
    e = a.exponent
    out = [0] * e
    for i, mi in enumerate(a.mults):
        if mi:
            for j, mj in enumerate(b.mults):
                if mj:
                    out[(i + j) % e] += mi * mj
    return out


# ---------------------------------------------------------------------------
# GF(p) linear algebra (dense, deterministic)
# ---------------------------------------------------------------------------

def _modinv(a, p):
    return pow(int(a), p - 2, p)


def _rref(M, p):
    """Reduced row echelon form over GF(p); returns (matrix, pivot columns)."""
    M = [list(map(int, row)) for row in M]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = _modinv(M[r][c], p)
        M[r] = [v * inv % p for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] % p:
                f = M[i][c] % p
                M[i] = [(v - f * w) % p for v, w in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M[:r], pivots


def _nullspace(M, p, cols):
    """Basis of the right nullspace of M (rows x cols) over GF(p)."""
    R, pivots = _rref(M, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-R[r][f]) % p
        basis.append(v)
    return basis


def _charpoly(A, p):
    """Characteristic polynomial over GF(p) via Hessenberg reduction."""
    n = len(A)
    H = [[int(v) % p for v in row] for row in A]
    for col in range(n - 2):
        piv = next((r for r in range(col + 1, n) if H[r][col] % p), None)
        if piv is None:
            continue
        if piv != col + 1:
            H[col + 1], H[piv] = H[piv], H[col + 1]
            for r in range(n):
                H[r][col + 1], H[r][piv] = H[r][piv], H[r][col + 1]
        inv = _modinv(H[col + 1][col], p)
        for r in range(col + 2, n):
            f = H[r][col] * inv % p
            if f:
                H[r] = [(v - f * w) % p for v, w in zip(H[r], H[col + 1])]
                for rr in range(n):
                    H[rr][col + 1] = (H[rr][col + 1] + f * H[rr][r]) % p
    # charpoly recurrence for Hessenberg matrices: p_0 = 1,
    # p_k(x) = (x - H[k-1][k-1]) p_{k-1} - sum over trailing subdiagonals
    polys = [[1]]
    for k in range(1, n + 1):
        term = _poly_sub(
            _poly_shift(polys[k - 1]), _poly_scale(polys[k - 1], H[k - 1][k - 1], p), p
        )
        beta = 1
        for i in range(k - 1, 0, -1):
            beta = beta * H[i][i - 1] % p
            if beta:
                term = _poly_sub(
                    term, _poly_scale(polys[i - 1], beta * H[i - 1][k - 1] % p, p), p
                )
        polys.append(term)
    return polys[n]


def _poly_shift(c):
    return [0] + list(c)


def _poly_scale(c, s, p):
    return [v * s % p for v in c]


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return [(x - y) % p for x, y in zip(a, b)]


def _gf_poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _gf_poly_mod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = _modinv(b[-1], p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            f = c * inv % p
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return _gf_poly_trim(a[:db] if db <= len(a) else a)


def _gf_poly_gcd(a, b, p):
    a, b = _gf_poly_trim(list(a)), _gf_poly_trim(list(b))
    while b:
        a, b = b, _gf_poly_trim(_gf_poly_mod(a, b, p))
    if a:
        inv = _modinv(a[-1], p)
        a = [v * inv % p for v in a]
    return a


def _gf_poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _gf_poly_mod(res, mod, p)


def _gf_poly_powmod(base, e, mod, p):
    result = [1]
    base = _gf_poly_mod(list(base), mod, p)
    while e:
        if e & 1:
            result = _gf_poly_mulmod(result, base, mod, p)
        base = _gf_poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_roots(f, p):
    """All roots in GF(p) of f, deterministically ordered ascending."""
    f = _gf_poly_trim([v % p for v in f])
    # keep only the split part: gcd(x^p - x, f)
    xp = _gf_poly_powmod([0, 1], p, f, p)
    xp_minus_x = _poly_sub(xp, [0, 1], p)
    g = _gf_poly_gcd(xp_minus_x, f, p)
    roots = []
    _split_linear(g, p, roots)
    return sorted(roots)


def _split_linear(g, p, out):
    g = _gf_poly_trim(list(g))
    if len(g) <= 1:
        return
    if len(g) == 2:
        out.append((-g[0] * _modinv(g[1], p)) % p)
        return
    if g[0] == 0:
        out.append(0)
        _split_linear(_gf_poly_trim([v for v in g[1:]]), p, out)
        return
    # deterministic splitting: gcd((x + delta)^((p-1)/2) - 1, g)
    for delta in range(p):
        t = _gf_poly_powmod([delta, 1], (p - 1) // 2, g, p)
        t = _poly_sub(t, [1], p)
        h = _gf_poly_gcd(t, g, p)
        if 0 < len(h) - 1 < len(g) - 1:
            _split_linear(h, p, out)
            _split_linear(_gf_poly_divide(g, h, p), p, out)
            return
    raise LiftInconsistent("failed to split a totally-split polynomial")


def _gf_poly_divide(a, b, p):
    a = list(a)
    db = len(b) - 1
    out = [0] * (len(a) - db)
    inv = _modinv(b[-1], p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            f = c * inv % p
            out[i - db] = f
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - f * b[j]) % p
    return _gf_poly_trim(out)


def _sqrt_mod(a, p):
    """Deterministic Tonelli-Shanks; returns the root in (0, p/2) or 0."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise LiftInconsistent(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) == p - 1)
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return min(r, p - r)


# ---------------------------------------------------------------------------
# Dixon machinery
# ---------------------------------------------------------------------------

def class_constants(ct: ClassTable):
    """a[i, j, k] = #{(x, y) : x in class i, y in class j, x*y = rep of k}.

    Computed by fixing x in class i and k, when y = x^-1 * rep_k is unique;
    its class gives j.  Row identity: sum over k of a[i,j,k] * |class k|
    equals |class i| * |class j|.
    """
    G = ct.group
    r = ct.num_classes
    T = G.table
    inv = G.inv
    a = np.zeros((r, r, r), dtype=np.int64)
    reps = np.fromiter(ct.reps, dtype=np.int32)
    for i in range(r):
        xs = ct.members(i)
        invxs = inv[xs]
        for k in range(r):
            ys = T[invxs, reps[k]]
            np.add.at(a[i, :, k], ct.class_of[ys], 1)
    return a


def dixon_prime(order, exponent):
    """Smallest prime p = 1 (mod exponent) with p > 2*floor(sqrt(order))."""
    bound = 2 * isqrt(order)
    p = max(2, bound)
    while True:
        p = int(nextprime(p))
        if p > PRIME_CAP:
            raise PrimeSearchExceeded("no Dixon prime below 2^31")
        if p % exponent == 1 % exponent and p > bound:
            return p


@dataclass
class CharacterTable:
    """Exact character table: degrees, cyclotomic values per (row, class)."""

    group: FiniteGroup
    classes: ClassTable
    degrees: tuple
    values: list  # values[row][class] -> CyclotomicInteger
    dixon_prime: int
    exponent: int
    values_mod_p: np.ndarray

    @property
    def num_classes(self):
        return self.classes.num_classes

    def value(self, row, cls):
        return self.values[row][cls]

    def is_zero_at(self, row, cls):
        """Exact zero test; mod-p image is a filter, remainder is authority."""
        if int(self.values_mod_p[row, cls]) != 0:
            return False
        return self.values[row][cls].is_zero()

    def nonzero_classes(self, row):
        return [c for c in range(self.num_classes) if not self.is_zero_at(row, c)]

    def row_orthogonality_exact(self, i, j):
        """sum over classes of |C| * chi_i(g) * chi_j(g^-1), exactly."""
        e = self.exponent
        acc = [0] * e
        for c in range(self.num_classes):
            prod = cyclotomic_product_coeffs(
                self.values[i][c], self.values[j][self.classes.inverse_class(c)]
            )
            w = self.classes.sizes[c]
            for k in range(e):
                acc[k] += w * prod[k]
        rem = list(_remainder_mod_cyclotomic(acc, e))
        if i == j:
            rem[0] -= self.group.order
        return not any(rem)

    def column_orthogonality_exact(self, c1, c2):
        """sum over rows of chi(g_c1) * chi(g_c2^-1) is |C_G(g)| or 0, exactly."""
        e = self.exponent
        acc = [0] * e
        for row in range(len(self.values)):
            prod = cyclotomic_product_coeffs(
                self.values[row][c1],
                self.values[row][self.classes.inverse_class(c2)],
            )
            for k in range(e):
                acc[k] += prod[k]
        rem = list(_remainder_mod_cyclotomic(acc, e))
        if c1 == c2:
            rem[0] -= self.group.order // self.classes.sizes[c1]
        return not any(rem)

    def to_json_dict(self, group_spec=None):
        G = self.group
        return {
            "schema": "charTable/1",
            "group": group_spec or f"order-{G.order}",
            "order": G.order,
            "exponent": self.exponent,
            "dixonPrime": self.dixon_prime,
            "classes": [
                {
                    "repWord": G.word_str(r),
                    "size": s,
                    "elementOrder": G.order_of(r),
                }
                for r, s in zip(self.classes.reps, self.classes.sizes)
            ],
            "degrees": list(self.degrees),
            "values": [
                [
                    {"mult": list(v.mults), "repr": v.render()}
                    for v in row
                ]
                for row in self.values
            ],
        }


def character_table(G: FiniteGroup, cap=TABLE_ORDER_CAP, exponent_cap=EXPONENT_CAP):
    """Compute the exact character table of a materialized group."""
    if G.order > cap:
        raise CapExceeded(f"character table capped at order {cap}, |G| = {G.order}")
    e = G.exponent()
    if e > exponent_cap:
        raise CapExceeded(f"exponent cap {exponent_cap} exceeded: {e}")
    ct = G.conjugacy_classes()
    r = ct.num_classes
    p = dixon_prime(G.order, e)

    if r == 1:
        one = CyclotomicInteger.integer(e, 1)
        return CharacterTable(
            G, ct, (1,), [[one]], p, e, np.ones((1, 1), dtype=np.int64)
        )

    a = class_constants(ct)

    # split the common eigenspaces of the class-constant matrices
    spaces = [np.eye(r, dtype=np.int64)]  # column-span bases, shape (r, d)
    for i in range(1, r):
        if all(S.shape[1] == 1 for S in spaces):
            break
        A = a[i] % p
        new_spaces = []
        for S in spaces:
            if S.shape[1] == 1:
                new_spaces.append(S)
                continue
            new_spaces.extend(_split_space(A, S, p))
        spaces = new_spaces
    if not all(S.shape[1] == 1 for S in spaces) or len(spaces) != r:
        raise LiftInconsistent("common eigenspaces did not split to dimension 1")

    inv_class = [ct.inverse_class(c) for c in range(r)]
    size_inv = [_modinv(ct.sizes[c], p) for c in range(r)]
    rows_mod = []
    degrees = []
    for S in spaces:
        w = [int(v) % p for v in S[:, 0]]
        if w[0] % p == 0:
            raise LiftInconsistent("central character vanishes at the identity")
        scale = _modinv(w[0], p)
        omega = [v * scale % p for v in w]
        ratios = [omega[c] * size_inv[c] % p for c in range(r)]
        denom = sum(ct.sizes[c] * ratios[c] * ratios[inv_class[c]] for c in range(r)) % p
        chi1_sq = G.order * _modinv(denom, p) % p
        chi1 = _sqrt_mod(chi1_sq, p)
        degrees.append(chi1)
        rows_mod.append([chi1 * ratios[c] % p for c in range(r)])

    if sum(d * d for d in degrees) != G.order:
        raise LiftInconsistent("degree squares do not sum to the group order")

    # lift values: chi(g_k) = sum m_s zeta^s with
    # m_s = (1/e) sum_l chi(g_k^l) z^(-l s) mod p
    z = _element_of_order(e, p)
    zpow = [pow(z, t, p) for t in range(e)]
    e_inv = _modinv(e, p)
    power_class = [[ct.power_class(c, l) for l in range(e)] for c in range(r)]

    rows = []
    for row_mod in rows_mod:
        row_vals = []
        for c in range(r):
            pc = power_class[c]
            mults = []
            for s in range(e):
                acc = 0
                for l in range(e):
                    acc += row_mod[pc[l]] * zpow[(-l * s) % e]
                mults.append(acc % p * e_inv % p)
            mults = [int(m) for m in mults]
            val = CyclotomicInteger(e, tuple(mults))
            # internal consistency: reconstruct the mod-p image
            back = sum(m * zpow[s % e] for s, m in enumerate(mults)) % p
            if back != row_mod[c]:
                raise LiftInconsistent("lifted value disagrees with mod-p image")
            row_vals.append(val)
        if row_vals[0].rational_value() != row_mod[0] % p or sum(
            row_vals[0].mults
        ) != row_mod[0]:
            raise LiftInconsistent("lifted degree disagrees")
        rows.append(row_vals)

    # principal character first, remaining rows by (degree, value vectors)
    order_keys = []
    for idx, row in enumerate(rows):
        key = (degrees[idx], tuple(v.mults for v in row))
        order_keys.append((key, idx))
    principal = next(
        idx
        for idx, row in enumerate(rows)
        if degrees[idx] == 1 and all(v.rational_value() == 1 for v in row)
    )
    rest = sorted(
        (k for k in order_keys if k[1] != principal), key=lambda t: t[0]
    )
    perm = [principal] + [idx for _, idx in rest]
    rows = [rows[i] for i in perm]
    degrees = tuple(degrees[i] for i in perm)
    vmod = np.array(
        [[rows_mod_val for rows_mod_val in rows_mod[i]] for i in perm], dtype=np.int64
    )

    table = CharacterTable(G, ct, degrees, rows, p, e, vmod)
    _validate_mod_p(table)
    return table


def _split_space(A, S, p):
    """Split the column-span of S into eigenspaces of A (which commutes with
    the family, so S is A-invariant)."""
    r, d = S.shape
    # restriction R with A S = S R, read off at the pivot rows of S
    Sc, pivots = _rref([list(row) for row in S.T], p)
    basis = np.array(Sc, dtype=np.int64).T  # (r, d), pivots give identity rows
    AS = (A @ basis) % p
    R = AS[pivots, :] % p
    charpoly = _charpoly([list(row) for row in R.T], p)
    roots = _poly_roots(charpoly, p)
    out = []
    total = 0
    for lam in roots:
        M = (R.T - lam * np.eye(d, dtype=np.int64)) % p
        null = _nullspace([list(row) for row in M.T], p, d)
        if not null:
            continue
        U = np.array(null, dtype=np.int64).T  # (d, k)
        sub = (basis @ U) % p
        total += sub.shape[1]
        out.append(sub)
    if total != d:
        raise LiftInconsistent("eigenspace dimensions do not fill the space")
    return out


def _element_of_order(e, p):
    """Deterministic element of exact multiplicative order e in GF(p)*."""
    if e == 1:
        return 1
    g = 2
    while True:
        z = pow(g, (p - 1) // e, p)
        if z != 1 and all(
            pow(z, e // q, p) != 1 for q in _prime_divisors(e)
        ):
            return z
        g += 1
        if g >= p:
            raise LiftInconsistent("no element of required order (bad prime)")


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _validate_mod_p(table: CharacterTable):
    """Fast mod-p orthogonality screen at construction time."""
    p = table.dixon_prime
    r = table.num_classes
    V = table.values_mod_p % p
    sizes = np.fromiter(table.classes.sizes, dtype=np.int64)
    inv_class = np.fromiter(
        (table.classes.inverse_class(c) for c in range(r)), dtype=np.int64
    )
    W = V[:, inv_class]
    gram = (V * sizes[None, :]) @ W.T % p
    expect = np.zeros((r, r), dtype=np.int64)
    np.fill_diagonal(expect, table.group.order % p)
    if not np.array_equal(gram % p, expect):
        raise LiftInconsistent("mod-p row orthogonality failed")


# ---------------------------------------------------------------------------
# Gagola character detection and degree bookkeeping
# ---------------------------------------------------------------------------

@dataclass
class GagolaWitness:
    character_index: int
    degree: int
    nonzero_classes: tuple
    subgroup: object  # Subgroup of the table's group


def find_gagola_character(table: CharacterTable):
    """The unique character nonzero on exactly two classes, if one exists.

    Returns a GagolaWitness with N = union of the two nonvanishing classes,
    checked to be a normal subgroup; N is where the character does not
    vanish.  Two such characters contradict uniqueness and raise.
    """
    hits = []
    for row in range(len(table.values)):
        nz = table.nonzero_classes(row)
        if len(nz) == 2:
            hits.append((row, nz))
    if not hits:
        return None
    if len(hits) > 1:
        raise MultipleGagolaCharacters(f"rows {[h[0] for h in hits]}")
    row, nz = hits[0]
    G = table.group
    ct = table.classes
    ids = []
    for c in nz:
        ids.extend(int(i) for i in ct.members(c))
    N = G.subgroup(sorted(ids))  # closure check runs here
    if not G.is_normal(N):
        raise MultipleGagolaCharacters("nonvanishing set is not normal (bug)")
    return GagolaWitness(row, table.degrees[row], tuple(nz), N)


def degree_d_and_e(table: CharacterTable):
    """(d, e) pairs with |G| = d*(d+e) for each nonlinear irreducible degree."""
    n = table.group.order
    out = []
    for d in sorted(set(table.degrees)):
        if d == 1:
            continue
        assert n % d == 0
        e = n // d - d
        assert e >= 1
        out.append((d, e))
    if not out:
        raise AbelianGroup("all irreducible characters are linear")
    return out
