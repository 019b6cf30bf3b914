"""Suzuki 2-groups: the multiplication law, automorphism families,
conjugation relations, brute-forced Aut at n = 3, centralizer criterion."""

from itertools import product as iproduct

import pytest

from gagola.errors import CapExceeded, InvalidTheta, ZeroScalar
from gagola.fields import create_field
from gagola.numtheory import pow2_congruence_solvable
from gagola.suzuki import (
    SuzukiAutomorphism,
    brute_force_aut,
    centralizer_in_a1,
    centralizer_of_n_in_aut,
    conjugate,
    conjugation_relations_check,
    involutions_all_in_n,
    make_a1,
    make_a2,
    make_a3,
    maps_equal,
    squaring_bijection_check,
    suzuki_context,
    suzuki_group,
    suzuki_mul,
    suzuki_square,
)


def test_group_orders():
    sz = suzuki_group(3, 1)
    assert sz.group.order == 64
    assert sz.theta_order == 3
    sz62 = suzuki_group(6, 2)
    assert sz62.group.order == 4096
    assert sz62.theta_order == 3


def test_invalid_theta():
    with pytest.raises(InvalidTheta):
        suzuki_group(2, 1)  # Gal(GF(4)) has order 2
    with pytest.raises(InvalidTheta):
        suzuki_context(6, 3)  # order 2
    with pytest.raises(InvalidTheta):
        suzuki_context(6, 1)  # order 6


def test_multiplication_law():
    ctx = suzuki_context(3, 1)
    F = ctx.field
    assert suzuki_mul(ctx, (0, 0), (5, 3)) == (5, 3)
    # (a, c)(b, d) law against direct field arithmetic
    for a, c, b, d in iproduct(range(8), repeat=4):
        got = suzuki_mul(ctx, (a, c), (b, d))
        want = (a ^ b, c ^ d ^ F.mul(b, F.frobenius(a, 1)))
        assert got == want


def test_square_lands_in_center():
    ctx = suzuki_context(3, 1)
    F = ctx.field
    g = F.primitive_element()
    # (g, 0)^2 = (0, g * g^2) = (0, g^3) = (0, g + 1)
    assert suzuki_square(ctx, (g, 0)) == (0, F.add(g, 1))
    assert suzuki_mul(ctx, (g, 0), (g, 0)) == suzuki_square(ctx, (g, 0))


def test_all_outside_n_have_order_four():
    sz = suzuki_group(3, 1)
    G = sz.group
    nset = set(sz.n_ids)
    for i in range(G.order):
        if i == 0:
            continue
        assert G.order_of(i) == (2 if i in nset else 4)


def test_involutions_in_n_up_to_n5():
    for n, h in ((3, 1), (5, 1), (5, 2)):
        assert involutions_all_in_n(suzuki_group(n, h))


def test_make_a1_zero_is_identity():
    ctx = suzuki_context(3, 1)
    phi = make_a1(ctx, (0, 0, 0))
    assert all(
        phi.apply((a, b)) == (a, b) for a in range(8) for b in range(8)
    )


def test_make_a2_primitive_has_order_seven():
    ctx = suzuki_context(3, 1)
    F = ctx.field
    phi = make_a2(ctx, F.primitive_element())
    pt = (1, 0)
    seen = [pt]
    cur = phi.apply(pt)
    while cur != pt:
        seen.append(cur)
        cur = phi.apply(cur)
    assert len(seen) == 7


def test_make_a2_zero_rejected():
    with pytest.raises(ZeroScalar):
        make_a2(suzuki_context(3, 1), 0)


def test_make_a3_fixes_one_zero():
    ctx = suzuki_context(3, 1)
    for t in range(3):
        assert make_a3(ctx, t).apply((1, 0)) == (1, 0)


def test_family_orders_by_enumeration():
    sz = suzuki_group(3, 1)
    ctx = sz.ctx
    a1 = {make_a1(ctx, psi).to_perm(sz).tobytes() for psi in iproduct(range(8), repeat=3)}
    a2 = {make_a2(ctx, x).to_perm(sz).tobytes() for x in range(1, 8)}
    a3 = {make_a3(ctx, t).to_perm(sz).tobytes() for t in range(3)}
    assert len(a1) == 2**9
    assert len(a2) == 7
    assert len(a3) == 3


def test_conjugation_relations_exhaustive_n3():
    sz = suzuki_group(3, 1)
    r = conjugation_relations_check(sz)
    assert r["exhaustive"]
    assert r["checked"] == 512 * 7 + 512 * 3 + 7 * 3


def test_conjugation_spot_values():
    sz = suzuki_group(3, 1)
    ctx = sz.ctx
    F = ctx.field
    # psi = 0 stays the identity under conjugation
    zero = SuzukiAutomorphism("a1", (0, 0, 0), ctx)
    phi_x = SuzukiAutomorphism("a2", 3, ctx)
    assert maps_equal(conjugate(zero, phi_x), zero, ctx)
    # (phi_x)^(phi_tau) with tau = 1 is phi_(x^4): tau^-1 doubles twice
    x = F.primitive_element()
    got = conjugate(SuzukiAutomorphism("a2", x, ctx), SuzukiAutomorphism("a3", 1, ctx))
    want = SuzukiAutomorphism("a2", F.pow(x, 4), ctx)
    assert maps_equal(got, want, ctx)


def test_brute_force_aut_n3():
    sz = suzuki_group(3, 1)
    aut = brute_force_aut(sz)
    assert aut["order"] == 2**9 * 7 * 3 == 10752
    # identity is found
    import numpy as np

    ident = np.arange(64, dtype=np.int32)
    assert any(np.array_equal(phi, ident) for phi in aut["automorphisms"])
    # every automorphism maps N onto N (N = Z(M) is characteristic)
    n_ids = set(sz.n_ids)
    for phi in aut["automorphisms"]:
        assert {int(phi[i]) for i in sz.n_ids} == n_ids
    # every automorphism factors through the families
    assert len(aut["factorizations"]) == aut["order"]


def test_centralizer_of_n_is_a1():
    sz = suzuki_group(3, 1)
    aut = brute_force_aut(sz)
    r = centralizer_of_n_in_aut(sz, aut)
    assert r["centralizer_size"] == 512
    assert r["equals_a1"]


def test_sylow_two_of_aut_at_n3():
    # |Aut| = 2^9 * 21 and the odd-order Galois group leaves A1 itself
    # as a Sylow 2-subgroup
    sz = suzuki_group(3, 1)
    aut = brute_force_aut(sz)
    order = aut["order"]
    two_part = order & -order
    assert two_part == 2**9


def test_centralizer_in_a1_trivial_for_order7():
    ctx = suzuki_context(3, 1)
    for x in range(2, 8):
        r = centralizer_in_a1(ctx, x)
        assert r["order_x"] == 7
        assert r["centralizer_size"] == 1
        assert r["exhaustive_size"] == 1
    assert pow2_congruence_solvable(1, 3) is False


def test_centralizer_in_a1_x_equals_one():
    ctx = suzuki_context(3, 1)
    r = centralizer_in_a1(ctx, 1)
    assert r["centralizer_size"] == 2**9  # all of A1


def test_centralizer_in_a1_nontrivial_case():
    # n = 6, h = 2, x of order 9: 2^2 + 1 = 5 = 2^5 mod 9, so the
    # criterion permits a nontrivial centralizer; the solver finds one
    ctx = suzuki_context(6, 2)
    F = ctx.field
    x = F.pow(F.primitive_element(), 7)
    assert F.order(x) == 9
    assert any(pow(2, j, 9) == 5 % 9 for j in range(6))
    r = centralizer_in_a1(ctx, x, exhaustive=False)
    assert r["centralizer_size"] > 1
    assert r["criterion_power_of_two"]


def test_squaring_bijection():
    r = squaring_bijection_check(3, 1)
    assert r["bijective"] and r["image_size"] == 8 and r["well_defined"]
    r9 = squaring_bijection_check(9, 3)
    assert r9["bijective"] and r9["image_size"] == 512


def test_materialization_caps():
    with pytest.raises(CapExceeded):
        suzuki_group(9, 3)
    with pytest.raises(CapExceeded):
        suzuki_group(6, 2, cap=1000)
