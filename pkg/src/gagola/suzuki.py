"""Suzuki 2-groups of type A and their automorphisms.

The group A(n, theta) lives on pairs (a, b) over GF(2^n) with the law
(a, c) * (b, d) = (a + b, c + d + b * theta(a)), where theta is the
Frobenius power a -> a^(2^h) and must have odd order greater than 1.
N = {(0, b)} is simultaneously the center, derived subgroup and Frattini
subgroup, and holds every involution.

Three automorphism families act on pairs directly:

  A1: (a, b) -> (a, psi(a) + b)   for psi GF(2)-linear on the field,
  A2: (a, b) -> (x*a, x*theta(x)*b)   for x nonzero,
  A3: (a, b) -> (a^(2^t), b^(2^t))    for Galois exponents t.

Conjugation in Aut is phi^sigma : m -> sigma^-1(phi(sigma(m))), matching
the displayed relations checked by `conjugation_relations_check`.  At
n = 3 the full automorphism group is brute-forced and compared against
|A1| * |A2| * |A3| = 2^(n^2) * (2^n - 1) * n with an exact factorization
of every automorphism as a1 * a2 * a3.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import gcd

import numpy as np

from .errors import (
    CapExceeded,
    InvalidTheta,
    NotAutomorphism,
    RelationFailed,
    ZeroScalar,
)
from .fields import Field, create_field
from .groups import (
    DEFAULT_CAP,
    FiniteGroup,
    SuzukiContext,
    SuzukiPair,
    generate_group,
)

MATERIALIZE_MAX_N = 6
ELEMENTWISE_MAX_N = 30


def theta_order(n, h):
    return n // gcd(n, h)


@dataclass
class SuzukiGroup:
    """A materialized A(n, theta) with its center N marked."""

    field: Field
    h: int
    group: FiniteGroup
    n_ids: tuple  # ids of {(0, b)}

    @property
    def n(self):
        return self.field.n

    @property
    def ctx(self):
        return self.group.elements[0].ctx

    @property
    def theta_order(self):
        return theta_order(self.field.n, self.h)

    def n_subgroup(self):
        return self.group.subgroup(self.n_ids, verified=True)

    def pair_id(self, a, b):
        return self.group.index[SuzukiPair(self.ctx, a, b)]

    def pair_of(self, i):
        el = self.group.elements[i]
        return (el.a, el.b)


def suzuki_context(n, h):
    """Context for element-wise arithmetic without materializing the group."""
    if not 1 <= h < n:
        raise InvalidTheta(f"need 1 <= h < n, got h={h}, n={n}")
    if n > ELEMENTWISE_MAX_N:
        raise CapExceeded(f"element-wise arithmetic capped at n <= {ELEMENTWISE_MAX_N}")
    t = theta_order(n, h)
    if t == 1 or t % 2 == 0:
        raise InvalidTheta(f"theta has order {t}; need odd order > 1")
    return SuzukiContext(create_field(2, n), h)


def suzuki_group(n, h, cap=DEFAULT_CAP):
    """Materialize A(n, theta) from the basis pairs (x^i, 0)."""
    ctx = suzuki_context(n, h)
    if n > MATERIALIZE_MAX_N:
        raise CapExceeded(f"materialization capped at n <= {MATERIALIZE_MAX_N}")
    if 4**n > cap:
        raise CapExceeded(f"|A({n})| = {4**n} passes the cap {cap}")
    gens = [SuzukiPair(ctx, 1 << i, 0) for i in range(n)]
    G = generate_group(gens, cap=cap)
    if G.order != 4**n:
        raise NotAutomorphism(f"closure gave {G.order}, expected {4**n} (bug)")
    n_ids = tuple(
        sorted(G.index[SuzukiPair(ctx, 0, b)] for b in range(2**n))
    )
    return SuzukiGroup(ctx.field, h, G, n_ids)


def suzuki_mul(ctx: SuzukiContext, x, y):
    """(a, c) * (b, d) on raw pairs."""
    F = ctx.field
    a, c = x
    b, d = y
    return (F.add(a, b), F.add(c, F.add(d, F.mul(b, ctx.theta(a)))))


def suzuki_square(ctx: SuzukiContext, x):
    a, _ = x
    return (0, ctx.field.mul(a, ctx.theta(a)))


# ---------------------------------------------------------------------------
# automorphism families
# ---------------------------------------------------------------------------

class SuzukiAutomorphism:
    """Tagged automorphism acting directly on (a, b) pairs.

    kind 'a1' carries psi as a tuple of basis images (psi applied to the
    i-th basis vector), 'a2' a nonzero field element, 'a3' a Galois
    exponent, and 'prod' a tuple of factors applied left to right.
    """

    __slots__ = ("kind", "data", "ctx")

    def __init__(self, kind, data, ctx):
        self.kind = kind
        self.data = data
        self.ctx = ctx

    def apply(self, pair):
        a, b = pair
        F = self.ctx.field
        if self.kind == "a1":
            return (a, F.add(_linear_apply(self.data, a), b))
        if self.kind == "a2":
            x = self.data
            return (F.mul(x, a), F.mul(F.mul(x, self.ctx.theta(x)), b))
        if self.kind == "a3":
            t = self.data
            return (F.frobenius(a, t), F.frobenius(b, t))
        out = (a, b)
        for f in self.data:
            out = f.apply(out)
        return out

    def inverse(self):
        ctx = self.ctx
        F = ctx.field
        if self.kind == "a1":
            return self  # characteristic 2: psi + psi = 0
        if self.kind == "a2":
            return SuzukiAutomorphism("a2", F.inv(self.data), ctx)
        if self.kind == "a3":
            return SuzukiAutomorphism("a3", (-self.data) % F.n, ctx)
        return SuzukiAutomorphism(
            "prod", tuple(f.inverse() for f in reversed(self.data)), ctx
        )

    def to_perm(self, sz: SuzukiGroup):
        """Bridge to an id-permutation of the materialized group."""
        return np.fromiter(
            (sz.pair_id(*self.apply(sz.pair_of(i))) for i in range(sz.group.order)),
            dtype=np.int32,
            count=sz.group.order,
        )

    def to_spec(self):
        if self.kind == "a1":
            return "a1:" + ",".join(f"{v:x}" for v in self.data)
        if self.kind == "a2":
            return f"a2:{self.data:x}"
        if self.kind == "a3":
            return f"a3:{self.data}"
        return ";".join(f.to_spec() for f in self.data)


def _linear_apply(basis_images, a):
    out = 0
    i = 0
    while a:
        if a & 1:
            out ^= basis_images[i]
        a >>= 1
        i += 1
    return out


def _verify_on_generators(phi: SuzukiAutomorphism, ctx: SuzukiContext):
    n = ctx.field.n
    gens = [(1 << i, 0) for i in range(n)] + [(0, 1)]
    for u in gens:
        for v in gens:
            lhs = phi.apply(suzuki_mul(ctx, u, v))
            rhs = suzuki_mul(ctx, phi.apply(u), phi.apply(v))
            if lhs != rhs:
                raise NotAutomorphism(f"{phi.to_spec()} fails at {u} * {v}")


def make_a1(ctx: SuzukiContext, psi):
    """psi: tuple of n field ints, the images of the polynomial basis."""
    psi = tuple(int(v) for v in psi)
    if len(psi) != ctx.field.n:
        raise NotAutomorphism("psi must list one image per basis vector")
    phi = SuzukiAutomorphism("a1", psi, ctx)
    _verify_on_generators(phi, ctx)
    return phi


def make_a2(ctx: SuzukiContext, x):
    if x == 0:
        raise ZeroScalar("A2 needs a nonzero scalar")
    phi = SuzukiAutomorphism("a2", int(x), ctx)
    _verify_on_generators(phi, ctx)
    return phi


def make_a3(ctx: SuzukiContext, t):
    phi = SuzukiAutomorphism("a3", int(t) % ctx.field.n, ctx)
    _verify_on_generators(phi, ctx)
    return phi


def compose(first: SuzukiAutomorphism, then: SuzukiAutomorphism):
    return SuzukiAutomorphism("prod", (first, then), first.ctx)


def conjugate(phi: SuzukiAutomorphism, sigma: SuzukiAutomorphism):
    """phi^sigma: apply sigma, then phi, then sigma^-1."""
    return SuzukiAutomorphism(
        "prod", (sigma, phi, sigma.inverse()), phi.ctx
    )


def maps_equal(f: SuzukiAutomorphism, g: SuzukiAutomorphism, ctx: SuzukiContext):
    q = ctx.field.q
    return all(
        f.apply((a, b)) == g.apply((a, b)) for a in range(q) for b in range(q)
    )


def conjugation_relations_check(sz: SuzukiGroup, exhaustive=None):
    """Verify the three conjugation relations as exact equality of maps.

    (phi_psi)^(phi_x) = phi_psi' with psi'(a) = x^-1 theta(x^-1) psi(x a),
    (phi_psi)^(phi_tau) = phi_psi'' with psi''(a) = (psi(a^tau))^(tau^-1),
    (phi_x)^(phi_tau) = phi_(x^(tau^-1)).

    At n = 3 all (psi, x, tau) triples are checked; larger n use the full
    x and tau ranges with psi running over the basis-supported maps.
    """
    ctx, F = sz.ctx, sz.field
    n, q = F.n, F.q
    if exhaustive is None:
        exhaustive = n <= 3
    if n > 4:
        raise CapExceeded("relation check runs at n <= 4")
    if exhaustive:
        psis = list(iproduct(range(q), repeat=n))
    else:
        # deterministic sample: single-basis-column maps plus the identity
        psis = [tuple(0 for _ in range(n))]
        for i in range(n):
            for v in range(q):
                psi = [0] * n
                psi[i] = v
                psis.append(tuple(psi))
    xs = list(range(1, q))
    taus = list(range(n))
    checked = 0
    for psi in psis:
        phi_psi = SuzukiAutomorphism("a1", psi, ctx)
        for x in xs:
            phi_x = SuzukiAutomorphism("a2", x, ctx)
            got = conjugate(phi_psi, phi_x)
            xinv = F.inv(x)
            coeff = F.mul(xinv, ctx.theta(xinv))
            predicted = SuzukiAutomorphism(
                "a1",
                tuple(
                    F.mul(coeff, _linear_apply(psi, F.mul(x, 1 << i)))
                    for i in range(n)
                ),
                ctx,
            )
            if not maps_equal(got, predicted, ctx):
                raise RelationFailed(f"A1^A2 at psi={psi}, x={x}")
            checked += 1
        for t in taus:
            phi_t = SuzukiAutomorphism("a3", t, ctx)
            got = conjugate(phi_psi, phi_t)
            predicted = SuzukiAutomorphism(
                "a1",
                tuple(
                    F.frobenius(_linear_apply(psi, F.frobenius(1 << i, t)), n - t)
                    for i in range(n)
                ),
                ctx,
            )
            if not maps_equal(got, predicted, ctx):
                raise RelationFailed(f"A1^A3 at psi={psi}, t={t}")
            checked += 1
    for x in xs:
        phi_x = SuzukiAutomorphism("a2", x, ctx)
        for t in taus:
            phi_t = SuzukiAutomorphism("a3", t, ctx)
            got = conjugate(phi_x, phi_t)
            predicted = SuzukiAutomorphism("a2", F.frobenius(x, n - t), ctx)
            if not maps_equal(got, predicted, ctx):
                raise RelationFailed(f"A2^A3 at x={x}, t={t}")
            checked += 1
    return {"checked": checked, "exhaustive": exhaustive}


# ---------------------------------------------------------------------------
# brute-force automorphism group at n = 3
# ---------------------------------------------------------------------------

def _family_perms(sz: SuzukiGroup):
    """Id-permutations of the three families, as sets keyed by bytes."""
    ctx, F = sz.ctx, sz.field
    n, q = F.n, F.q
    a1 = {}
    for psi in iproduct(range(q), repeat=n):
        perm = SuzukiAutomorphism("a1", psi, ctx).to_perm(sz)
        a1[perm.tobytes()] = ("a1", psi)
    a2 = {}
    for x in range(1, q):
        perm = SuzukiAutomorphism("a2", x, ctx).to_perm(sz)
        a2[perm.tobytes()] = ("a2", x)
    a3 = {}
    for t in range(n):
        perm = SuzukiAutomorphism("a3", t, ctx).to_perm(sz)
        a3[perm.tobytes()] = ("a3", t)
    return a1, a2, a3


def brute_force_aut(sz: SuzukiGroup):
    """Enumerate Aut(A(n, theta)) for n = 3 by brute force.

    Candidate generator images are elements of order 4 whose N-cosets are
    linearly independent (automorphisms preserve order and must induce a
    basis of M/N); each candidate extends along the BFS tree and survives
    iff it is a multiplication-preserving bijection.  The result is checked
    to be exactly A1 * A2 * A3: the order matches 2^(n^2) * (2^n - 1) * n
    and every automorphism factors through the families by coset sifting
    (strip the A2 A3 part from the action on N, check the rest fixes N
    pointwise and is an A1 map).
    """
    G = sz.group
    n = sz.n
    if G.order > 64:
        raise CapExceeded("full automorphism enumeration runs at n = 3 only")
    T = G.table
    m = G.order
    a_part = [sz.pair_of(i)[0] for i in range(m)]
    order4 = [i for i in range(m) if G.order_of(i) == 4]

    # candidate generator images: order 4 with linearly independent N-cosets
    cands = []
    for i1 in order4:
        s1 = {0, a_part[i1]}
        for i2 in order4:
            if a_part[i2] in s1:
                continue
            s2 = {v ^ a_part[i2] for v in s1} | s1
            for i3 in order4:
                if a_part[i3] in s2:
                    continue
                cands.append((i1, i2, i3))

    # extend every candidate along the BFS tree in one vectorized sweep
    images = np.asarray(cands, dtype=np.int32)  # (C, 3)
    C = len(cands)
    img = np.zeros((C, m), dtype=np.int32)
    for i in range(1, m):
        img[:, i] = T[img[:, G.parent_of[i]], images[:, G.gen_of[i]]]
    ok = np.ones(C, dtype=bool)
    for k, gid in enumerate(G.gen_ids):
        lhs = img[:, T[:, gid]]
        rhs = T[img, images[:, k][:, None]]
        ok &= (lhs == rhs).all(axis=1)
    bij = (np.sort(img, axis=1) == np.arange(m, dtype=np.int32)).all(axis=1)
    found = [img[i].copy() for i in np.nonzero(ok & bij)[0]]

    expected = 2 ** (n * n) * (2**n - 1) * n
    if len(found) != expected:
        raise NotAutomorphism(
            f"brute force found {len(found)} automorphisms, expected {expected}"
        )

    a1, a2, a3 = _family_perms(sz)
    a1_keys = set(a1)
    # factor each automorphism as a1 * a2 * a3 (maps applied left to right)
    a23 = {}
    for k2, v2 in a2.items():
        p2 = np.frombuffer(k2, dtype=np.int32)
        for k3, v3 in a3.items():
            p3 = np.frombuffer(k3, dtype=np.int32)
            a23[(v2, v3)] = p3[p2]  # apply a2 then a3
    n_ids = np.fromiter(sz.n_ids, dtype=np.int32)
    factorizations = []
    for phi in found:
        hit = None
        for (v2, v3), comp in a23.items():
            # phi and a2*a3 agree on N exactly when the a1 part is stripped
            if np.array_equal(phi[n_ids], comp[n_ids]):
                inv_comp = np.empty_like(comp)
                inv_comp[comp] = np.arange(len(comp), dtype=np.int32)
                rest = inv_comp[phi]  # apply phi then (a2 a3)^-1
                if rest.tobytes() in a1_keys:
                    hit = (a1[rest.tobytes()], v2, v3)
                    break
        if hit is None:
            raise NotAutomorphism("automorphism does not factor as A1*A2*A3")
        factorizations.append(hit)

    gens = [
        ("a1", tuple(1 if i == j else 0 for j in range(n))) for i in range(n)
    ] + [("a2", sz.field.primitive_element()), ("a3", 1 % n)]
    return {
        "order": len(found),
        "expected": expected,
        "generators": gens,
        "automorphisms": found,
        "factorizations": factorizations,
        "a1_keys": a1_keys,
    }


def centralizer_of_n_in_aut(sz: SuzukiGroup, aut_result=None):
    """Automorphisms fixing N pointwise; must equal A1 exactly."""
    if aut_result is None:
        aut_result = brute_force_aut(sz)
    n_ids = np.fromiter(sz.n_ids, dtype=np.int32)
    fixing = {
        phi.tobytes()
        for phi in aut_result["automorphisms"]
        if np.array_equal(phi[n_ids], n_ids)
    }
    return {
        "centralizer_size": len(fixing),
        "equals_a1": fixing == aut_result["a1_keys"],
    }


# ---------------------------------------------------------------------------
# A1 centralizer of phi_x and the congruence criterion
# ---------------------------------------------------------------------------

def centralizer_in_a1(sz_or_ctx, x, exhaustive=None):
    """C_{A1}(phi_x): psi with psi(x a) = x theta(x) psi(a) for all a.

    Solved as a GF(2) linear system on the n^2 matrix bits; when
    `exhaustive` (default n <= 4) every psi is additionally tested for
    commutation as maps and the two routes must agree.  The result also
    reports the criterion verdict: a nontrivial centralizer demands
    x * theta(x) = x^(2^j) for some j, equivalently the congruence
    2^h + 1 = 2^j mod o(x) must be solvable.
    """
    ctx = sz_or_ctx.ctx if isinstance(sz_or_ctx, SuzukiGroup) else sz_or_ctx
    F = ctx.field
    n, q = F.n, F.q
    if x == 0:
        raise ZeroScalar("phi_x needs a nonzero x")
    if exhaustive is None:
        exhaustive = n <= 4
    coeff = F.mul(x, ctx.theta(x))  # x * theta(x)

    # unknowns: psi basis images c_0..c_{n-1}, each n bits; constraints:
    # psi(x * e_i) = coeff * psi(e_i)
    rows = []
    for i in range(n):
        xi = F.mul(x, 1 << i)
        for bit in range(n):
            row = [0] * (n * n)
            for j in range(n):
                if (xi >> j) & 1:
                    row[j * n + bit] ^= 1
            # coeff * c_i: each bit of the product is linear in the bits of c_i
            for b2 in range(n):
                if (F.mul(coeff, 1 << b2) >> bit) & 1:
                    row[i * n + b2] ^= 1
            rows.append(row)
    dim = _gf2_nullity(rows, n * n)
    size_linear = 2**dim

    solvable = any(coeff == F.pow(x, 1 << j) for j in range(n))
    out = {
        "x": x,
        "order_x": F.order(x),
        "centralizer_size": size_linear,
        "criterion_power_of_two": solvable,
        "consistent": (size_linear > 1) <= solvable,
    }
    if size_linear > 1 and not solvable:
        raise RelationFailed(f"nontrivial centralizer without x*theta(x)=x^(2^j), x={x}")

    if exhaustive:
        count = 0
        for psi in iproduct(range(q), repeat=n):
            ok = all(
                _linear_apply(psi, F.mul(x, a)) == F.mul(coeff, _linear_apply(psi, a))
                for a in range(q)
            )
            if ok:
                count += 1
        out["exhaustive_size"] = count
        if count != size_linear:
            raise RelationFailed(
                f"exhaustive ({count}) and linear-solve ({size_linear}) disagree"
            )
    return out


def _gf2_nullity(rows, ncols):
    """Nullity of a GF(2) matrix given as lists of 0/1 entries."""
    packed = []
    for row in rows:
        v = 0
        for j, bit in enumerate(row):
            if bit:
                v |= 1 << j
        if v:
            packed.append(v)
    rank = 0
    for col in range(ncols):
        mask = 1 << col
        piv = next((i for i in range(rank, len(packed)) if packed[i] & mask), None)
        if piv is None:
            continue
        packed[rank], packed[piv] = packed[piv], packed[rank]
        for i in range(len(packed)):
            if i != rank and packed[i] & mask:
                packed[i] ^= packed[rank]
        rank += 1
    return ncols - rank


# ---------------------------------------------------------------------------
# squaring map and structural checks
# ---------------------------------------------------------------------------

def squaring_bijection_check(n, h):
    """bN -> b^2 is well-defined on cosets of N and bijective M/N -> N,
    equivalently a -> a * theta(a) is a bijection of the field."""
    ctx = suzuki_context(n, h)
    F = ctx.field
    image = {F.mul(a, ctx.theta(a)) for a in range(F.q)}
    # well-defined on cosets: (a, b)^2 = (0, a*theta(a)) ignores b by the law
    well_defined = all(
        suzuki_square(ctx, (a, b)) == suzuki_square(ctx, (a, 0))
        for a in range(min(F.q, 64))
        for b in range(min(F.q, 8))
    )
    return {
        "image_size": len(image),
        "bijective": len(image) == F.q,
        "well_defined": well_defined,
    }


def involutions_all_in_n(sz: SuzukiGroup):
    G = sz.group
    nset = set(sz.n_ids)
    invs = [i for i in range(G.order) if G.order_of(i) == 2]
    return all(i in nset for i in invs)


def auts_decomposition_check(sz: SuzukiGroup, aut_result):
    """Every automorphism acts as (a, b) -> (f(a), g(a) + h(b)) with f, h
    bijective linear, g(0) = 0, and h(a*theta(a)) = f(a)*theta(f(a))."""
    F = sz.field
    ctx = sz.ctx
    q = F.q
    pid = np.empty((q, q), dtype=np.int32)
    aof = np.empty(sz.group.order, dtype=np.int32)
    bof = np.empty(sz.group.order, dtype=np.int32)
    for i in range(sz.group.order):
        a, b = sz.pair_of(i)
        pid[a, b] = i
        aof[i], bof[i] = a, b
    xor = np.bitwise_xor.outer(np.arange(q), np.arange(q))
    norm = np.fromiter((F.mul(a, ctx.theta(a)) for a in range(q)), dtype=np.int64)
    for phi in aut_result["automorphisms"]:
        row0 = phi[pid[:, 0]]
        f, g = aof[row0], bof[row0]
        col0 = phi[pid[0, :]]
        if aof[col0].any():
            return False
        h = bof[col0]
        if g[0] != 0:
            return False
        if not (f[xor] == np.bitwise_xor.outer(f, f)).all():
            return False
        if not (h[xor] == np.bitwise_xor.outer(h, h)).all():
            return False
        if len(np.unique(f)) != q or len(np.unique(h)) != q:
            return False
        full = phi[pid]
        if not (aof[full] == f[:, None]).all():
            return False
        if not (bof[full] == np.bitwise_xor.outer(g, h)).all():
            return False
        fnorm = np.fromiter(
            (F.mul(int(v), ctx.theta(int(v))) for v in f), dtype=np.int64
        )
        if not np.array_equal(h[norm], fnorm):
            return False
    return True
