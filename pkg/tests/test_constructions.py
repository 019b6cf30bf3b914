"""Construction families: orders, markings, transitivity, module checks,
Frobenius complements."""

import pytest

from gagola.chartab import character_table, find_gagola_character
from gagola.constructions import (
    MatrixElement,
    affine_matrix_group,
    agl1,
    create_field,
    fixed_space_dimension,
    frobenius_complement_checks,
    heisenberg_base,
    heisenberg_gagola,
    natural_module_fixed_dimension,
    semilinear_group,
    sharply_two_transitive,
    singer_transitive_subgroups,
    sl2,
    sl2_order,
    sl2_order_three_part_check,
    sl2_over_prime,
    twisted_tensor_module,
)
from gagola.errors import NotFrobeniusComplement, UnsupportedN
from gagola.numtheory import p_part


# -- semilinear groups ---------------------------------------------------------

def test_semilinear_orders():
    assert semilinear_group(2, 1).order == 1
    assert semilinear_group(2, 4).order == 60
    assert semilinear_group(3, 2).order == 16
    sg = semilinear_group(2, 4)
    assert sg.gamma_o.order == 15
    assert sg.galois.order == 4


def test_singer_n4():
    r = singer_transitive_subgroups(4)
    assert not r["partial"]
    assert r["divisors"] == [2, 4]
    # the multiplicative group itself is the cyclic transitive subgroup
    assert any(s["intersection_order"] == 15 for s in r["subgroups"])
    for s in r["subgroups"]:
        assert all(s["meets"].values())


def test_singer_n6():
    r = singer_transitive_subgroups(6)
    assert not r["partial"]
    assert r["divisors"] == [2, 3]
    assert r["subgroups"], "transitive subgroups of order 63 exist"
    for s in r["subgroups"]:
        assert s["order"] == 63
        assert all(s["meets"].values())


def test_singer_n9_partial():
    r = singer_transitive_subgroups(9)
    assert r["partial"]
    assert r["arithmetic"] == {3: True, 9: True}


# -- affine groups -----------------------------------------------------------------

def test_agl1_orders_and_transitivity():
    assert agl1(2).order == 2
    a4 = agl1(4)
    assert a4.order == 12
    assert sharply_two_transitive(a4, 4)
    a8 = agl1(8)
    assert a8.order == 56
    assert sharply_two_transitive(a8, 8)


def test_agl1_4_is_a4_with_degree_3():
    G = agl1(4)
    t = character_table(G)
    assert max(t.degrees) == 3
    w = find_gagola_character(t)
    assert w is not None and w.degree == 3


def test_agl1_8_degree_7():
    t = character_table(agl1(8))
    assert max(t.degrees) == 7


# -- the extremal family --------------------------------------------------------------

def test_heisenberg_base_order():
    assert heisenberg_base(3).order == 27
    assert heisenberg_base(4).order == 64


def test_heisenberg_gagola_orders():
    for q in (3, 4, 5):
        G, N = heisenberg_gagola(q)
        assert G.order == q**3 * (q - 1)
        assert N.order == q
        # the scalars act nontrivially on N, so it is not central in G,
        # but it is the unique minimal normal subgroup
        mins = G.minimal_normal_subgroups()
        assert len(mins) == 1 and mins[0].ids == N.ids
        assert N.is_elementary_abelian()


def test_heisenberg_gagola_has_degree_q_q_minus_1():
    G, N = heisenberg_gagola(4)
    t = character_table(G)
    w = find_gagola_character(t)
    assert w is not None
    assert w.degree == 12
    assert w.subgroup.ids == N.ids


# -- sl2 ---------------------------------------------------------------------------------

def test_sl2_orders():
    assert sl2(2).order == 6
    assert sl2(4).order == 60
    assert sl2(8).order == 504
    assert sl2_order(8) == 7 * 8 * 9


def test_sl2_rejects_odd_q():
    with pytest.raises(UnsupportedN):
        sl2(3)


def test_sl2_three_part_examples():
    # direct factorization oracles
    assert p_part(6, 3) == 3
    assert sl2_order_three_part_check(1)["passed"]
    assert p_part(504, 3) == 9
    assert sl2_order_three_part_check(3)["passed"]
    assert p_part(511, 3) * p_part(513, 3) == 27  # 513 = 27 * 19
    assert sl2_order_three_part_check(9)["passed"]
    for n in range(1, 31):
        assert sl2_order_three_part_check(n)["passed"]


# -- twisted tensor module ------------------------------------------------------------------

def test_twisted_tensor_fixed_space():
    mod = twisted_tensor_module(3)
    G = mod.group
    P = G.sylow_subgroup(3)
    assert P.order == 9
    assert fixed_space_dimension(mod, P) == 0
    assert natural_module_fixed_dimension(G, P) == 0
    ident = G.subgroup([0], verified=True)
    assert fixed_space_dimension(mod, ident) == 8


def test_twisted_tensor_rejects_bad_n():
    with pytest.raises(UnsupportedN):
        twisted_tensor_module(4)
    with pytest.raises(UnsupportedN):
        twisted_tensor_module(6)


# -- frobenius complements ---------------------------------------------------------------------

def translations_of(G, p, k):
    pts = p**k

    def diff(a, b):
        out = []
        for _ in range(k):
            out.append((a - b) % p)
            a //= p
            b //= p
        return tuple(out)

    ids = [
        i
        for i in range(G.order)
        if all(
            diff(G.elements[i](v), v) == diff(G.elements[i](0), 0)
            for v in range(pts)
        )
    ]
    return G.subgroup(ids)


def test_complement_c6_on_c7():
    G = agl1(7)
    N = translations_of(G, 7, 1)
    H = G.subgroup([i for i in range(G.order) if G.elements[i](0) == 0])
    assert N.order == 7 and H.order == 6
    r = frobenius_complement_checks(G, N, H)
    assert r["zGroup"]
    assert r["primes"][2]["unique"] and r["primes"][3]["unique"]
    assert r["passed"]


def test_complement_q8_on_c3_squared():
    F3 = create_field(3, 1)
    i_m = MatrixElement.from_rows(F3, [[0, 2], [1, 0]])
    j_m = MatrixElement.from_rows(F3, [[1, 1], [1, 2]])
    G = affine_matrix_group(3, 2, [i_m, j_m])
    assert G.order == 72
    N = translations_of(G, 3, 2)
    H = G.subgroup([i for i in range(G.order) if G.elements[i](0) == 0])
    assert N.order == 9 and H.order == 8
    r = frobenius_complement_checks(G, N, H)
    assert r["primes"][2]["unique"]
    assert r["primes"][2]["allNormal"]
    assert r["passed"]


def test_complement_sl23_on_c5_squared():
    s5 = sl2_over_prime(5)
    assert s5.order == 120
    syl2 = s5.sylow_subgroup(2)
    assert syl2.order == 8
    nor = s5.normalizer(syl2)
    assert nor.order == 24
    mats = [s5.elements[i] for i in nor.gens()]
    G = affine_matrix_group(5, 2, mats)
    assert G.order == 25 * 24
    N = translations_of(G, 5, 2)
    H = G.subgroup([i for i in range(G.order) if G.elements[i](0) == 0])
    r = frobenius_complement_checks(G, N, H)
    # the order-3 subgroups are NOT normal: the exception clause fires
    assert not r["primes"][3]["allNormal"]
    assert r["primes"][3]["exceptionClause"]
    assert r["passed"]


def test_fixed_point_rejection():
    # C6 acting on C7 with a kernel mislabeled: pick H with fixed points
    G = agl1(7)
    N = translations_of(G, 7, 1)
    bad_h_ids = sorted(set(N.ids))
    with pytest.raises(NotFrobeniusComplement):
        frobenius_complement_checks(G, N, G.subgroup(bad_h_ids))
