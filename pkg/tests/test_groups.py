"""Group engine against tiny self-contained oracles.

The oracles below use plain tuple composition and dict-based closure,
independent of the engine's BFS/table machinery.
"""

import numpy as np
import pytest

from gagola.errors import (
    CapExceeded,
    HypothesisViolated,
    IncompatibleElements,
    NotNormal,
    PNotDividing,
)
from gagola.fields import create_field
from gagola.groups import (
    MatrixElement,
    Perm,
    SemidirectContext,
    SemidirectPair,
    class_three_coset_centralizer_check,
    extend_generator_images,
    find_automorphisms,
    generate_group,
    is_automorphism_perm,
)
from gagola.constructions import quaternion8, extraspecial_27, wreath_c3_c3


# -- oracles -----------------------------------------------------------------

def compose_tuple(f, g):
    """apply f then g, images as tuples"""
    return tuple(g[f[i]] for i in range(len(f)))


def closure_oracle(gens):
    els = {tuple(range(len(gens[0])))}
    frontier = list(els)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose_tuple(x, g)
                if y not in els:
                    els.add(y)
                    new.append(y)
        frontier = new
    return els


def classes_oracle(els):
    """exhaustive conjugation on a set of image tuples"""
    els = list(els)
    inv = {x: tuple(sorted(range(len(x)), key=lambda i: x[i])) for x in els}
    left = set(els)
    sizes = []
    while left:
        x = next(iter(left))
        orbit = {compose_tuple(compose_tuple(inv[g], x), g) for g in els}
        left -= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


S3_GENS = [(1, 0, 2), (1, 2, 0)]


def s3():
    return generate_group([Perm(S3_GENS[0]), Perm(S3_GENS[1])])


# -- closure -----------------------------------------------------------------

def test_trivial_group():
    G = generate_group([Perm.identity_on(3)])
    assert G.order == 1


def test_s3_closure_matches_oracle():
    assert len(closure_oracle(S3_GENS)) == 6
    assert s3().order == 6


def test_closure_cap():
    with pytest.raises(CapExceeded):
        generate_group([Perm(S3_GENS[0]), Perm(S3_GENS[1])], cap=5)


def test_mixed_kinds_rejected():
    F = create_field(3, 1)
    with pytest.raises(IncompatibleElements):
        generate_group([Perm.identity_on(2), MatrixElement.identity_of(F, 2)])


def test_words_reproduce_elements():
    G = s3()
    gens = [G.elements[i] for i in G.gen_ids]
    for i in range(G.order):
        acc = G.elements[0]
        for k in G.word(i):
            acc = acc.op(gens[k])
        assert acc == G.elements[i]


def test_table_matches_direct_products():
    G = quaternion8()
    T = G.table
    for i in range(G.order):
        for j in range(G.order):
            assert G.elements[int(T[i, j])] == G.elements[i].op(G.elements[j])


# -- conjugacy classes --------------------------------------------------------

def test_abelian_classes_are_singletons():
    C6 = generate_group([Perm.from_cycles(6, [tuple(range(6))])])
    ct = C6.conjugacy_classes()
    assert ct.sizes == (1,) * 6


def test_s3_class_sizes_match_oracle():
    assert classes_oracle(closure_oracle(S3_GENS)) == [1, 2, 3]
    assert sorted(s3().conjugacy_classes().sizes) == [1, 2, 3]


def test_q8_class_sizes():
    G = quaternion8()
    assert sorted(G.conjugacy_classes().sizes) == [1, 1, 2, 2, 2]


def test_class_equation_and_centralizer_product():
    for G in (s3(), quaternion8(), wreath_c3_c3()):
        ct = G.conjugacy_classes()
        assert sum(ct.sizes) == G.order
        for i in range(G.order):
            csize = ct.sizes[int(ct.class_of[i])]
            assert csize * G.centralizer(i).order == G.order
        assert ct.spot_check()


def test_centralizer_of_identity_and_center():
    G = quaternion8()
    assert G.centralizer(0).order == G.order
    assert G.center().order == 2


# -- characteristic subgroups --------------------------------------------------

def test_derived_subgroups():
    C6 = generate_group([Perm.from_cycles(6, [tuple(range(6))])])
    assert C6.derived_subgroup().order == 1
    G = s3()
    # oracle: the set of commutators of all pairs generates A3
    els = list(closure_oracle(S3_GENS))
    inv = {x: tuple(sorted(range(3), key=lambda i: x[i])) for x in els}
    comms = {
        compose_tuple(compose_tuple(compose_tuple(inv[a], inv[b]), a), b)
        for a in els
        for b in els
    }
    assert len(closure_oracle(list(comms))) == 3
    assert G.derived_subgroup().order == 3


def test_frattini_q8_both_routes():
    G = quaternion8()
    fast = G.frattini_subgroup()
    maximal = G.frattini_via_maximals()
    assert fast.ids == maximal.ids
    assert fast.order == 2 and fast.ids == G.center().ids


def test_frattini_cross_check_on_p_groups():
    for G in (quaternion8(), extraspecial_27()):
        assert G.frattini_subgroup().ids == G.frattini_via_maximals().ids


def test_normal_closure():
    G = s3()
    ct = G.conjugacy_classes()
    transposition = next(
        r for r in ct.reps if G.order_of(r) == 2
    )
    assert G.normal_closure([transposition]).order == 6
    three_cycle = next(r for r in ct.reps if G.order_of(r) == 3)
    assert G.normal_closure([three_cycle]).order == 3


# -- quotients ------------------------------------------------------------------

def test_quotient_by_trivial():
    G = s3()
    Q, proj = G.quotient(G.subgroup([0], verified=True))
    assert Q.order == 6


def test_quotient_q8_by_center():
    G = quaternion8()
    Q, proj = G.quotient(G.center())
    assert Q.order == 4 and Q.exponent() == 2


def test_quotient_projection_is_homomorphism():
    G = quaternion8()
    N = G.center()
    Q, proj = G.quotient(N)
    T, TQ = G.table, Q.table
    for i in range(G.order):
        for j in range(G.order):
            assert int(proj[T[i, j]]) == int(TQ[proj[i], proj[j]])
    assert Q.order * N.order == G.order


def test_quotient_requires_normal():
    G = s3()
    twist = next(i for i in range(6) if G.order_of(i) == 2)
    H = G.subgroup_closure([twist])
    with pytest.raises(NotNormal):
        G.quotient(H)


# -- sylow / core / minimal normals -----------------------------------------------

def test_sylow_s3():
    G = s3()
    assert G.sylow_subgroup(3).order == 3
    assert G.sylow_subgroup(2).order == 2
    with pytest.raises(PNotDividing):
        G.sylow_subgroup(5)


def test_o_p_trivial_for_s3():
    assert s3().o_p_subgroup(2).order == 1
    assert s3().o_p_subgroup(3).order == 3


def test_minimal_normals_q8():
    G = quaternion8()
    mins = G.minimal_normal_subgroups()
    assert len(mins) == 1 and mins[0].ids == G.center().ids


def test_normal_subgroup_lattice_s4():
    from gagola.constructions import symmetric

    S4 = symmetric(4)
    orders = sorted(N.order for N in S4.normal_subgroups())
    assert orders == [1, 4, 12, 24]


# -- element kinds ----------------------------------------------------------------

def test_matrix_inverse_and_identity():
    F = create_field(2, 3)
    M = MatrixElement.from_rows(F, [[1, 1], [0, 1]])
    assert M.op(M.inverse()).is_identity()


def test_semidirect_direct_product():
    # trivial action gives the direct product
    a = Perm.from_cycles(3, [(0, 1, 2)])
    b = Perm.from_cycles(2, [(0, 1)])
    ctx = SemidirectContext(lambda h, n: n)
    g1 = SemidirectPair(ctx, a, Perm.identity_on(2))
    g2 = SemidirectPair(ctx, Perm.identity_on(3), b)
    G = generate_group([g1, g2])
    assert G.order == 6
    assert G.is_abelian()


def test_semidirect_nontrivial_action():
    # C3 x| C2 with inversion is S3
    a = Perm.from_cycles(3, [(0, 1, 2)])
    b = Perm.from_cycles(2, [(0, 1)])

    def act(h, n):
        return n if h.is_identity() else n.inverse()

    ctx = SemidirectContext(act)
    g1 = SemidirectPair(ctx, a, Perm.identity_on(2))
    g2 = SemidirectPair(ctx, Perm.identity_on(3), b)
    G = generate_group([g1, g2])
    assert G.order == 6
    assert not G.is_abelian()


# -- automorphisms and the class-3 checker -------------------------------------

def test_automorphism_recognition():
    G = quaternion8()
    ident = np.arange(G.order, dtype=np.int32)
    assert is_automorphism_perm(G, ident)
    # conjugation by any element is an automorphism
    T = G.table
    g = 3
    sigma = np.fromiter(
        (int(T[T[G.inv[g], x], g]) for x in range(G.order)),
        dtype=np.int32,
    )
    assert is_automorphism_perm(G, sigma)


def test_class3_rejects_extraspecial():
    P = extraspecial_27()
    Z = P.center()
    sigma = np.arange(P.order, dtype=np.int32)
    with pytest.raises(HypothesisViolated, match="class"):
        class_three_coset_centralizer_check(P, Z, sigma)


def test_class3_rejects_identity_sigma():
    P = wreath_c3_c3()
    from gagola.groups import lower_central_series

    Z = lower_central_series(P)[2]
    sigma = np.arange(P.order, dtype=np.int32)
    with pytest.raises(HypothesisViolated, match="order of sigma"):
        class_three_coset_centralizer_check(P, Z, sigma)


def test_class3_wreath_with_searched_sigma():
    """Search order-2 automorphisms meeting every hypothesis; when one
    exists the conclusion must hold for all x, otherwise skip."""
    P = wreath_c3_c3()
    from gagola.groups import lower_central_series

    Z = lower_central_series(P)[2]
    assert Z.order == 3
    sigmas = find_automorphisms(P)
    hit = None
    for sigma in sigmas:
        try:
            report = class_three_coset_centralizer_check(P, Z, sigma)
        except HypothesisViolated:
            continue
        hit = report
        break
    if hit is None:
        pytest.skip("no qualifying order-2 automorphism for this group")
    assert hit.passed
    assert len(hit.witnesses) == P.order - P.derived_subgroup().order
