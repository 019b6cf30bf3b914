"""Acceptance criteria, one test per criterion.

Every check is exact (integer or cyclotomic equality); each test prints
one line `ACCEPTANCE <k> (<name>): PASS in <t>s` on success, and pytest
failure output doubles as the fail line.  Run with -s to see the lines.
"""

import time
from itertools import product as iproduct

import pytest

from gagola import chartab, numtheory as nt, pairs, suzuki as sz_mod
from gagola.constructions import (
    agl1,
    dihedral,
    extraspecial_27,
    heisenberg_gagola,
    quaternion8,
    singer_transitive_subgroups,
    sl2_order_three_part_check,
    twisted_tensor_module,
    fixed_space_dimension,
)
from gagola.suzuki import (
    brute_force_aut,
    centralizer_in_a1,
    centralizer_of_n_in_aut,
    conjugation_relations_check,
    suzuki_context,
    suzuki_group,
)


def _stamp(k, name, t0):
    print(f"\nACCEPTANCE {k} ({name}): PASS in {time.monotonic() - t0:.1f}s")


def test_criterion_01_small_e_extremes():
    t0 = time.monotonic()
    q8 = quaternion8()
    cert = pairs.gagola_certificate(q8, q8.center())
    assert cert.is_gagola
    assert (cert.d, cert.e, q8.order) == (2, 2, 8)
    assert q8.order == cert.e**4 - cert.e**3
    G, N = heisenberg_gagola(3)
    cert3 = pairs.gagola_certificate(G, N)
    assert cert3.is_gagola
    assert (cert3.d, cert3.e, G.order) == (6, 3, 54)
    assert G.order == cert3.e**4 - cert3.e**3
    _stamp(1, "small-e extremes", t0)


def test_criterion_02_extremal_family():
    t0 = time.monotonic()
    for q in (3, 4, 5, 7, 8):
        G, N = heisenberg_gagola(q)
        cert = pairs.gagola_certificate(G, N)
        assert cert.is_gagola, (q, cert.reasons)
        assert cert.e == q
        assert cert.d == q * (q - 1)
        assert G.order == q**3 * (q - 1) == cert.e**4 - cert.e**3
    _stamp(2, "extremal family q in {3,4,5,7,8}", t0)


def test_criterion_03_suzuki_automorphism_theorem():
    t0 = time.monotonic()
    sz = suzuki_group(3, 1)
    aut = brute_force_aut(sz)
    assert aut["order"] == 2**9 * 7 * 3 == 10752
    assert len(aut["factorizations"]) == 10752
    cn = centralizer_of_n_in_aut(sz, aut)
    assert cn["equals_a1"] and cn["centralizer_size"] == 512
    _stamp(3, "Aut(A(3,theta)) = A1 A2 A3, order 10752", t0)


def test_criterion_04_conjugation_relations():
    t0 = time.monotonic()
    sz = suzuki_group(3, 1)
    r = conjugation_relations_check(sz, exhaustive=True)
    assert r["exhaustive"]
    assert r["checked"] == 512 * 7 + 512 * 3 + 7 * 3
    _stamp(4, "conjugation relations exhaustive at n=3", t0)


def test_criterion_05_number_theory_suite():
    t0 = time.monotonic()
    for a in range(0, 7):
        assert nt.pow2_plus_one_three_part(a).passed
    for n in range(1, 31):
        assert nt.four_power_minus_one_three_part(n).passed
    from sympy import primerange

    exceptions = []
    for p in primerange(2, 128):
        for a in range(1, 21):
            if p**a > nt.WORD_MAX:
                break
            if (p, a) == (2, 1):
                continue
            if nt.zsigmondy(p, a) is None:
                exceptions.append((p, a))
    expected = {(2, 6)} | {
        (p, 2) for p in primerange(3, 128) if nt.is_mersenne_prime(p)
    }
    assert set(exceptions) == expected
    for n in range(1, 31):
        assert sl2_order_three_part_check(n)["passed"]
    _stamp(5, "number-theory suite", t0)


def test_criterion_06_twisted_tensor_fixed_space():
    t0 = time.monotonic()
    mod = twisted_tensor_module(3)
    P = mod.group.sylow_subgroup(3)
    assert P.order == 9
    assert fixed_space_dimension(mod, P) == 0
    _stamp(6, "8-dim twisted tensor module has trivial Sylow-3 fixed space", t0)


def test_criterion_07_transitive_subgroup_orders():
    t0 = time.monotonic()
    for n in (4, 6):
        r = singer_transitive_subgroups(n)
        assert not r["partial"]
        assert r["subgroups"], f"no transitive subgroup found at n={n}"
        for s in r["subgroups"]:
            assert s["order"] == 2**n - 1
            assert all(s["meets"].values()), (n, s)
    _stamp(7, "transitive subgroups meet all 2^d - 1 element orders", t0)


def test_criterion_08_camina_equivalence_corpus():
    t0 = time.monotonic()
    corpus = [
        ("D4", dihedral(4)),
        ("Q8", quaternion8()),
        ("extraspecial27", extraspecial_27()),
        ("heis3", heisenberg_gagola(3)[0]),
        ("heis4", heisenberg_gagola(4)[0]),
        ("agl1-4", agl1(4)),
        ("agl1-8", agl1(8)),
        ("suzuki3", suzuki_group(3, 1).group),
    ]
    pairs_checked = 0
    for name, G in corpus:
        for N in G.normal_subgroups():
            if N.order in (1, G.order):
                continue
            ev = pairs.camina_evidence(G, N)  # raises on any disagreement
            assert ev.coset_in_class == ev.centralizer_sizes_match == ev.commutators_cover
            pairs_checked += 1
    assert pairs_checked > 0
    print(f"\n  ({pairs_checked} (G, N) pairs, zero disagreements)")
    _stamp(8, "three Camina conditions agree on the corpus", t0)


def test_criterion_09_congruence_criterion():
    t0 = time.monotonic()
    ctx = suzuki_context(3, 1)
    assert nt.pow2_congruence_solvable(1, 3) is False
    for x in range(1, 8):
        r = centralizer_in_a1(ctx, x, exhaustive=True)
        assert r["exhaustive_size"] == r["centralizer_size"]
        if r["order_x"] == 7:
            assert r["centralizer_size"] == 1
        else:
            assert x == 1 and r["centralizer_size"] == 512
    _stamp(9, "A1-centralizer criterion, exhaustive and linear routes agree", t0)


def test_criterion_10_character_table_soundness():
    t0 = time.monotonic()
    from gagola.constructions import semilinear_group, sl2, symmetric, wreath_c3_c3
    from gagola.groups import Perm, generate_group

    corpus = [
        ("D4", dihedral(4)),
        ("Q8", quaternion8()),
        ("S3", symmetric(3)),
        ("S4", symmetric(4)),
        ("C6", generate_group([Perm.from_cycles(6, [tuple(range(6))])])),
        ("extraspecial27", extraspecial_27()),
        ("wreath81", wreath_c3_c3()),
        ("heis3", heisenberg_gagola(3)[0]),
        ("heis4", heisenberg_gagola(4)[0]),
        ("heis5", heisenberg_gagola(5)[0]),
        ("agl1-4", agl1(4)),
        ("agl1-8", agl1(8)),
        ("suzuki3", suzuki_group(3, 1).group),
        ("sl2-2", sl2(2)),
        ("sl2-4", sl2(4)),
        ("gamma-2-4", semilinear_group(2, 4).group),
        ("gamma-3-2", semilinear_group(3, 2).group),
    ]
    for name, G in corpus:
        assert G.order <= 500, name
        t = chartab.character_table(G)
        assert sum(d * d for d in t.degrees) == G.order, name
        r = t.num_classes
        for i in range(r):
            for j in range(r):
                assert t.row_orthogonality_exact(i, j), (name, i, j)
                assert t.column_orthogonality_exact(i, j), (name, i, j)
    _stamp(10, "exact orthogonality and degree sums, orders <= 500", t0)
