"""Auxiliary group families: semilinear groups, affine groups, the
Heisenberg-type extremal family of order q^3(q-1), SL2 over GF(2^n) with
its 8-dimensional twisted tensor module, Frobenius-complement checks, and
the small named groups the test corpus draws from.

All constructions materialize through the generic engine; each records
the invariants its callers rely on (orders, transitivity, markings of the
distinguished subgroups) and raises CapExceeded instead of degrading
silently when a parameter leaves desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import factorint

from .errors import (
    CapExceeded,
    HypothesisViolated,
    NotFrobeniusComplement,
    UnsupportedN,
)
from .fields import Field, create_field, field_of_order
from .groups import (
    DEFAULT_CAP,
    FiniteGroup,
    MatrixElement,
    Perm,
    Subgroup,
    generate_group,
)
from .numtheory import p_part

POINT_CAP = 2**12


# ---------------------------------------------------------------------------
# small named groups
# ---------------------------------------------------------------------------

def cyclic(k):
    return generate_group([Perm.from_cycles(k, [tuple(range(k))])])


def dihedral(k):
    """Dihedral group of order 2k on k points."""
    rot = Perm.from_cycles(k, [tuple(range(k))])
    ref = Perm([(-i) % k for i in range(k)])
    return generate_group([rot, ref])


def symmetric(k):
    return generate_group(
        [Perm.from_cycles(k, [(0, 1)]), Perm.from_cycles(k, [tuple(range(k))])]
    )


def quaternion8():
    """Q8 as 2x2 matrices over GF(3)."""
    F3 = create_field(3, 1)
    i = MatrixElement.from_rows(F3, [[0, 2], [1, 0]])
    j = MatrixElement.from_rows(F3, [[1, 1], [1, 2]])
    return generate_group([i, j])


def wreath_c3_c3():
    """C3 wr C3 on 9 points: base shifts inside blocks, top rotates blocks.
    Order 81, nilpotence class 3 (maximal class)."""
    base = Perm.from_cycles(9, [(0, 1, 2)])
    top = Perm.from_cycles(9, [(0, 3, 6), (1, 4, 7), (2, 5, 8)])
    return generate_group([base, top])


def extraspecial_27():
    """The exponent-3 extraspecial group of order 27 (unitriangular 3x3
    over GF(3))."""
    return heisenberg_base(3)


# ---------------------------------------------------------------------------
# semilinear groups
# ---------------------------------------------------------------------------

@dataclass
class SemilinearGroup:
    group: FiniteGroup
    gamma_o: Subgroup
    galois: Subgroup
    field: Field

    @property
    def order(self):
        return self.group.order


def semilinear_group(p, n, cap=DEFAULT_CAP):
    """Gamma(V) for V = GF(p^n): multiplications by the cyclic group of
    the field joined with the Galois group, acting on the p^n field points.

    Verifies |Gamma_o| = p^n - 1, |Gamma| = (p^n - 1) * n, and that
    Gamma_o is self-centralizing."""
    F = create_field(p, n)
    q = F.q
    if q > POINT_CAP:
        raise CapExceeded(f"point count {q} passes the cap {POINT_CAP}")
    gamma = F.primitive_element() if q > 2 else 1
    mult = Perm([0] + [F.mul(gamma, x) for x in range(1, q)])
    frob = Perm([F.frobenius(x, 1) for x in range(q)])
    G = generate_group([mult, frob], cap=cap)
    gamma_o = G.subgroup_closure([G.index[mult]])
    galois = G.subgroup_closure([G.index[frob]])
    expected = (q - 1) * (n if q > 2 else 1)
    if n == 1:
        expected = q - 1 if q > 2 else 1
    if G.order != max(expected, 1):
        raise CapExceeded(f"semilinear closure gave {G.order}, expected {expected}")
    if gamma_o.order != q - 1 and q > 2:
        raise CapExceeded("multiplicative part has wrong order")
    # C_Gamma(Gamma_o) = Gamma_o
    T = G.table
    cent = [
        g
        for g in range(G.order)
        if all(int(T[g, x]) == int(T[x, g]) for x in gamma_o.ids)
    ]
    if sorted(cent) != list(gamma_o.ids):
        raise CapExceeded("Gamma_o is not self-centralizing (bug)")
    return SemilinearGroup(G, gamma_o, galois, F)


def transitive_on_nonzero(sg: SemilinearGroup, H: Subgroup):
    """H <= Gamma(V) moves the point 1 onto every nonzero field point."""
    pt = 1
    orbit = {sg.group.elements[i](pt) for i in H.ids}
    return len(orbit) == sg.field.q - 1


def singer_transitive_subgroups(n, cap=DEFAULT_CAP):
    """Transitive subgroups of order 2^n - 1 in Gamma(GF(2^n)), up to
    conjugacy, each verified to contain elements of order 2^d - 1 in its
    intersection with Gamma_o for every nontrivial prime-power d | n.

    Beyond the materialization cap the arithmetic-only facts are reported
    with partial = True.
    """
    target = 2**n - 1
    divisors = [
        p**i
        for p, e in sorted(factorint(n).items())
        for i in range(1, e + 1)
    ]
    if 2**n > POINT_CAP or target * n > cap or target * n > 500:
        return {
            "n": n,
            "partial": True,
            "subgroups": [],
            "arithmetic": {d: (target % (2**d - 1) == 0) for d in divisors},
        }
    sg = semilinear_group(2, n, cap=cap)
    G = sg.group
    subs = G.subgroups_of_order(target)
    transitive = [H for H in subs if transitive_on_nonzero(sg, H)]
    # dedupe up to conjugacy in Gamma
    T = G.table
    classes = []
    seen = set()
    for H in transitive:
        if H.ids in seen:
            continue
        orbit = set()
        for g in range(G.order):
            conj = tuple(sorted(int(T[T[G.inv[g], x], g]) for x in H.ids))
            orbit.add(conj)
        seen |= orbit
        classes.append(H)
    results = []
    go_set = sg.gamma_o.id_set
    for H in classes:
        inter = sorted(set(H.ids) & go_set)
        orders = {G.order_of(i) for i in inter}
        results.append(
            {
                "order": H.order,
                "meets": {d: (2**d - 1) in orders for d in divisors},
                "intersection_order": len(inter),
            }
        )
    return {"n": n, "partial": False, "subgroups": results, "divisors": divisors}


# ---------------------------------------------------------------------------
# affine groups
# ---------------------------------------------------------------------------

def agl1(q, cap=DEFAULT_CAP):
    """AGL(1, q): x -> a x + b on the q field points; sharply 2-transitive
    of order q(q-1)."""
    F = field_of_order(q)
    if q > POINT_CAP:
        raise CapExceeded(f"point count {q} passes the cap {POINT_CAP}")
    trans = Perm([F.add(x, 1) for x in range(q)])
    if q == 2:
        return generate_group([trans], cap=cap)
    gamma = F.primitive_element()
    mult = Perm([F.mul(gamma, x) for x in range(q)])
    G = generate_group([trans, mult], cap=cap)
    if G.order != q * (q - 1):
        raise CapExceeded(f"AGL(1,{q}) closure gave {G.order}")
    return G


def sharply_two_transitive(G: FiniteGroup, points):
    """Transitive with the stabilizer of point 0 regular on the rest."""
    orbit = {G.elements[i](0) for i in range(G.order)}
    if orbit != set(range(points)):
        return False
    stab = [i for i in range(G.order) if G.elements[i](0) == 0]
    if len(stab) != points - 1:
        return False
    images = {G.elements[i](1) for i in stab}
    return images == set(range(1, points))


def affine_matrix_group(p, k, matrix_gens, cap=DEFAULT_CAP):
    """<translations of GF(p)^k> extended by the given matrices, as
    permutations of the p^k vectors (vector v encoded base p)."""
    F = create_field(p, 1)
    pts = p**k
    if pts > POINT_CAP:
        raise CapExceeded(f"point count {pts} passes the cap {POINT_CAP}")

    def decode(v):
        out = []
        for _ in range(k):
            out.append(v % p)
            v //= p
        return out

    def encode(vec):
        v = 0
        for c in reversed(vec):
            v = v * p + c % p
        return v

    gens = []
    for i in range(k):
        gens.append(
            Perm([encode([c + (1 if j == i else 0) for j, c in enumerate(decode(v))])
                  for v in range(pts)])
        )
    for M in matrix_gens:
        rows = M.rows()
        img = []
        for v in range(pts):
            vec = decode(v)
            out = [
                sum(rows[i][j] * vec[j] for j in range(k)) % p for i in range(k)
            ]
            img.append(encode(out))
        gens.append(Perm(img))
    return generate_group(gens, cap=cap)


# ---------------------------------------------------------------------------
# the extremal family of order q^3 (q - 1)
# ---------------------------------------------------------------------------

def heisenberg_base(q, cap=DEFAULT_CAP):
    """Unitriangular 3x3 matrices over GF(q): order q^3, center the (1,3)
    entries."""
    F = field_of_order(q)
    gens = []
    for i in range(F.n):
        v = F.p**i
        gens.append(MatrixElement.from_rows(F, [[1, v, 0], [0, 1, 0], [0, 0, 1]]))
        gens.append(MatrixElement.from_rows(F, [[1, 0, 0], [0, 1, v], [0, 0, 1]]))
    G = generate_group(gens, cap=cap)
    if G.order != q**3:
        raise CapExceeded(f"Heisenberg closure gave {G.order}, expected {q**3}")
    return G


def heisenberg_gagola(q, cap=DEFAULT_CAP):
    """The order-q^3(q-1) group: the Heisenberg group of GF(q) extended by
    the scalars diag(x, 1, 1), which act as (a, b, c) -> (xa, b, xc).

    Returns (G, N) with N the designated center {(0, 0, c)}; feeding the
    pair to the certifier must come back Gagola with e = q, d = q(q-1).
    """
    F = field_of_order(q)
    order = q**3 * (q - 1)
    if order > cap:
        raise CapExceeded(f"|G| = {order} passes the cap {cap}")
    gens = []
    for i in range(F.n):
        v = F.p**i
        gens.append(MatrixElement.from_rows(F, [[1, v, 0], [0, 1, 0], [0, 0, 1]]))
        gens.append(MatrixElement.from_rows(F, [[1, 0, 0], [0, 1, v], [0, 0, 1]]))
    if q > 2:
        gamma = F.primitive_element()
        gens.append(MatrixElement.from_rows(F, [[gamma, 0, 0], [0, 1, 0], [0, 0, 1]]))
    G = generate_group(gens, cap=cap)
    if G.order != order:
        raise CapExceeded(f"closure gave {G.order}, expected {order}")
    n_ids = sorted(
        i
        for i, el in enumerate(G.elements)
        if el.entries[1] == 0 and el.entries[5] == 0 and el.entries[0] == 1
    )
    N = G.subgroup(n_ids, verified=False)
    if N.order != q:
        raise CapExceeded("designated center has wrong order (bug)")
    return G, N


# ---------------------------------------------------------------------------
# SL2(2^n) and the twisted tensor module
# ---------------------------------------------------------------------------

def sl2_order(q):
    return (q - 1) * q * (q + 1)


def sl2(q, cap=DEFAULT_CAP):
    """SL2 over GF(q) for q = 2^n, materialized from transvections and the
    diagonal torus generator."""
    f = factorint(q)
    if list(f) != [2]:
        raise UnsupportedN(f"sl2 family is over GF(2^n); got q = {q}")
    F = field_of_order(q)
    if sl2_order(q) > cap:
        raise CapExceeded(f"|SL2({q})| = {sl2_order(q)} passes the cap {cap}")
    up = MatrixElement.from_rows(F, [[1, 1], [0, 1]])
    lo = MatrixElement.from_rows(F, [[1, 0], [1, 1]])
    gens = [up, lo]
    if q > 2:
        gamma = F.primitive_element()
        gens.append(MatrixElement.from_rows(F, [[gamma, 0], [0, F.inv(gamma)]]))
    G = generate_group(gens, cap=cap)
    if G.order != sl2_order(q):
        raise CapExceeded(f"SL2 closure gave {G.order}, expected {sl2_order(q)}")
    return G


def sl2_over_prime(p, cap=DEFAULT_CAP):
    """SL2 over the prime field GF(p), used as a source of Frobenius
    complements (its Sylow-2 normalizer for p = 5)."""
    F = create_field(p, 1)
    if sl2_order(p) > cap:
        raise CapExceeded(f"|SL2({p})| passes the cap")
    up = MatrixElement.from_rows(F, [[1, 1], [0, 1]])
    lo = MatrixElement.from_rows(F, [[1, 0], [1, 1]])
    G = generate_group([up, lo], cap=cap)
    if G.order != sl2_order(p):
        raise CapExceeded(f"SL2({p}) closure gave {G.order}")
    return G


def sl2_order_three_part_check(n):
    """The 3-part of |SL2(2^n)| equals 3^(a+1) where 3^a is the 3-part of n.

    The order (2^n - 1) 2^n (2^n + 1) leaves 64 bits for n > 20, so the
    3-part is taken factor by factor; the 2-power factor contributes none.
    """
    if n < 1 or n > 30:
        raise UnsupportedN("n must be in [1, 30]")
    expected = 3 * p_part(n, 3)
    got = p_part(2**n - 1, 3) * p_part(2**n + 1, 3)
    return {"n": n, "threePart": got, "expected": expected, "passed": got == expected}


@dataclass
class ModuleRep:
    """A matrix representation of a matrix group; `action` carries the
    twist parameter used to build each element's action matrix on demand."""

    group: FiniteGroup
    dimension: int
    field: Field
    action: dict


def _frobenius_twist(M: MatrixElement, m):
    F = M.field
    return MatrixElement(
        F, M.size, [F.frobenius(v, m) for v in M.entries], _check=False
    )


def _kron(A: MatrixElement, B: MatrixElement):
    F = A.field
    ka, kb = A.size, B.size
    out = []
    for i in range(ka):
        for r in range(kb):
            for j in range(ka):
                for c in range(kb):
                    out.append(F.mul(A.entries[i * ka + j], B.entries[r * kb + c]))
    return MatrixElement(F, ka * kb, out, _check=False)


def twisted_tensor_action(g: MatrixElement, m):
    """g tensor g^(2^m) tensor g^(2^2m): the 8-dimensional module action."""
    return _kron(_kron(g, _frobenius_twist(g, m)), _frobenius_twist(g, 2 * m))


def twisted_tensor_module(n=3, cap=DEFAULT_CAP):
    """The 8-dimensional twisted tensor module for SL2(2^n), n divisible
    by 3.  Materialization (and fixed-space computation) supports n = 3."""
    if n % 3 != 0:
        raise UnsupportedN("n must be divisible by 3")
    if n != 3:
        raise UnsupportedN("materialization supports n = 3 only")
    G = sl2(2**n, cap=cap)
    F = G.elements[0].field
    m = n // 3
    return ModuleRep(G, 8, F, {"twist": m})


def fixed_space_dimension(rep: ModuleRep, sub: Subgroup):
    """Dimension of the simultaneous fixed space of the subgroup on the
    twisted tensor module, by exact kernel computation over the field."""
    F = rep.field
    m = rep.action["twist"]
    dim = rep.dimension
    rows = []
    for gid in sub.gens():
        g = rep.group.elements[gid]
        act = twisted_tensor_action(g, m)
        for i in range(dim):
            row = [
                F.sub(act.entries[i * dim + j], 1 if i == j else 0)
                for j in range(dim)
            ]
            rows.append(row)
    if not rows:
        return dim
    return dim - _field_rank(rows, F)


def natural_module_fixed_dimension(G: FiniteGroup, sub: Subgroup):
    """Fixed-space dimension of a subgroup on the natural 2-dim module."""
    F = G.elements[0].field
    rows = []
    for gid in sub.gens():
        g = G.elements[gid]
        for i in range(2):
            rows.append(
                [F.sub(g.entries[i * 2 + j], 1 if i == j else 0) for j in range(2)]
            )
    if not rows:
        return 2
    return 2 - _field_rank(rows, F)


def _field_rank(rows, F: Field):
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = F.inv(rows[rank][col])
        rows[rank] = [F.mul(v, inv) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [F.sub(v, F.mul(f, w)) for v, w in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# ---------------------------------------------------------------------------
# Frobenius complement checks
# ---------------------------------------------------------------------------

def is_quaternion8(G_or_sub, ids=None):
    """Order 8, a unique involution, not cyclic."""
    if ids is None:
        G = G_or_sub.parent if isinstance(G_or_sub, Subgroup) else G_or_sub
        ids = (
            G_or_sub.ids
            if isinstance(G_or_sub, Subgroup)
            else tuple(range(G.order))
        )
    else:
        G = G_or_sub
    if len(ids) != 8:
        return False
    invol = [i for i in ids if i != 0 and G.order_of(i) == 2]
    if len(invol) != 1:
        return False
    return all(G.order_of(i) <= 4 for i in ids)


def frobenius_complement_checks(G: FiniteGroup, N: Subgroup, H: Subgroup):
    """Check the order-p subgroup structure of a Frobenius complement H,
    witnessed inside the Frobenius group G = N x| H.

    Fixed-point-freeness is verified exhaustively: C_N(h) = 1 for every
    nontrivial h in H.  Then for each prime p | |H|: if H is a Z-group
    (all Sylow subgroups cyclic) its order-p subgroup must be unique; in
    general every order-p subgroup must be normal in H unless p = 3, 9
    does not divide |H|, and the Sylow 2-subgroup of H is quaternion of
    order 8.
    """
    if N.order * H.order != G.order or (N.id_set & H.id_set) != {0}:
        raise NotFrobeniusComplement("G is not N x| H as presented")
    if not G.is_normal(N):
        raise NotFrobeniusComplement("N is not normal")
    T = G.table
    inv = G.inv
    for h in H.ids:
        if h == 0:
            continue
        for x in N.ids:
            if x != 0 and int(T[T[inv[h], x], h]) == x:
                raise NotFrobeniusComplement(
                    f"fixed point: element {x} under {h}"
                )

    Hg = H.as_group()
    report = {"order": Hg.order, "primes": {}}
    f = factorint(Hg.order)
    z_group = all(
        _is_cyclic(Hg.sylow_subgroup(p), Hg) for p in f
    )
    report["zGroup"] = z_group
    syl2_quat = 2 in f and is_quaternion8(Hg, tuple(Hg.sylow_subgroup(2).ids))
    for p in sorted(f):
        subs_p = _order_p_subgroups(Hg, p)
        all_normal = all(Hg.is_normal(S) for S in subs_p)
        entry = {
            "count": len(subs_p),
            "unique": len(subs_p) == 1,
            "allNormal": all_normal,
            "exceptionClause": (
                p == 3 and Hg.order % 9 != 0 and syl2_quat
            ),
        }
        if z_group and not entry["unique"]:
            raise HypothesisViolated(
                f"Z-group complement with several order-{p} subgroups"
            )
        entry["passed"] = entry["allNormal"] or entry["exceptionClause"]
        report["primes"][p] = entry
    report["passed"] = all(v["passed"] for v in report["primes"].values())
    return report


def _is_cyclic(S: Subgroup, G: FiniteGroup):
    return any(G.order_of(i) == S.order for i in S.ids)


def _order_p_subgroups(G: FiniteGroup, p):
    seen = set()
    out = []
    for i in range(G.order):
        if G.order_of(i) == p:
            S = G.subgroup_closure([i])
            if S.ids not in seen:
                seen.add(S.ids)
                out.append(S)
    return out
