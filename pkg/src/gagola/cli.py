"""Command-line front end.

    gagola verify <suite> [--json] [--cap N] [--q 3,4,5] [--n N] [--h H]
                          [--full-aut] [--timing]
    gagola certify <group-spec> [--n-spec center|minimal] [--json] [--cap N]
    gagola chartable <group-spec> [--json] [--cap N]

Suites: numtheory, sl2, suzuki, bounds, charcheck, frobenius, all.
Exit codes: 0 all-pass, 1 any-fail, 2 usage or parse error.  The
materialization cap can also be raised through the GAGOLA_CAP variable.
Reports are deterministic; wall time goes to stderr unless --timing asks
for it inside the JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from sympy import isprime

from . import chartab, constructions as cons, numtheory as nt, pairs, specs, suzuki
from .errors import GagolaError, ParseError, UnknownSuite
from .groups import DEFAULT_CAP
from .report import FAIL, HYP_NOT_MET, PARTIAL, PASS, VerificationReport

SUITES = ("numtheory", "sl2", "suzuki", "bounds", "charcheck", "frobenius", "all")


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_numtheory(opts):
    rep = VerificationReport("numtheory")
    for a in range(0, 7):
        v = nt.pow2_plus_one_three_part(a)
        rep.record(f"pow2-three-part:a={a}", "three-part of 2^(3^a)+1", v.passed, v.detail)
    for n in range(1, 31):
        v = nt.four_power_minus_one_three_part(n)
        rep.record(f"four-power-three-part:n={n}", "three-part of 4^n-1", v.passed, v.detail)
    exceptions = []
    for p in range(2, 128):
        if not isprime(p):
            continue
        for a in range(1, 21):
            if p**a > nt.WORD_MAX:
                break
            if (p, a) == (2, 1):
                continue  # degenerate: 2^1 - 1 = 1
            if nt.zsigmondy(p, a) is None:
                exceptions.append((p, a))
    expected = {(2, 6)} | {
        (p, 2) for p in range(3, 128) if nt.is_mersenne_prime(p)
    }
    rep.record(
        "zsigmondy-exceptions",
        "primitive prime divisors exist outside the classical exceptions",
        set(exceptions) == expected,
        {"found": sorted(exceptions), "expected": sorted(expected)},
    )
    triples = nt.search_lifting_triples()
    rep.record(
        "q-part-lift-triples-found",
        "the q^2 | p^m - 1 hypothesis has instances in range",
        len(triples) > 0,
        {"count": len(triples), "first": triples[:5]},
    )
    for p, q, n in triples:
        v = nt.lifting_the_exponent_check(p, q, n)
        status = PASS if v.passed else FAIL
        if "hypothesis-not-met" in v.detail:
            status = HYP_NOT_MET
        rep.add(f"q-part-lift:p={p},q={q},n={n}", "q-part lifting identity", status, v.detail)
    return rep


def suite_sl2(opts):
    rep = VerificationReport("sl2")
    for q in (2, 4, 8):
        G = cons.sl2(q)
        rep.record(
            f"sl2-order:q={q}",
            "order (q-1)q(q+1)",
            G.order == cons.sl2_order(q),
            {"order": G.order},
        )
    for n in range(1, 31):
        v = cons.sl2_order_three_part_check(n)
        rep.record(f"sl2-three-part:n={n}", "3-part of |SL2(2^n)|", v["passed"], v)
    mod = cons.twisted_tensor_module(3)
    P = mod.group.sylow_subgroup(3)
    dim = cons.fixed_space_dimension(mod, P)
    rep.record(
        "twisted-tensor-fixed-space",
        "Sylow 3-subgroup has no fixed points on the 8-dim module",
        dim == 0,
        {"dimension": dim, "sylow_order": P.order},
    )
    nat = cons.natural_module_fixed_dimension(mod.group, P)
    rep.record(
        "natural-module-fixed-space",
        "Sylow 3-subgroup has no fixed points on the natural module",
        nat == 0,
        {"dimension": nat},
    )
    return rep


def suite_suzuki(opts):
    rep = VerificationReport("suzuki")
    n = opts.n or 3
    h = opts.h or 1
    sz = suzuki.suzuki_group(n, h, cap=opts.cap)
    G = sz.group
    rep.record(f"suzuki-order:n={n}", "|A(n, theta)| = 2^(2n)", G.order == 4**n,
               {"order": G.order})
    N = sz.n_subgroup()
    rep.record(
        f"suzuki-center:n={n}",
        "Z(M) = M' = Phi(M) = N",
        G.center().ids == N.ids
        and G.derived_subgroup().ids == N.ids
        and G.frattini_subgroup().ids == N.ids,
    )
    rep.record(
        f"suzuki-involutions:n={n}",
        "N holds every involution",
        suzuki.involutions_all_in_n(sz),
    )
    sq = suzuki.squaring_bijection_check(n, h)
    rep.record(
        f"suzuki-squaring:n={n}",
        "bN -> b^2 is a bijection M/N -> N",
        sq["bijective"] and sq["well_defined"],
        sq,
    )
    if n <= 4:
        rel = suzuki.conjugation_relations_check(sz)
        rep.record(
            f"suzuki-relations:n={n}",
            "A2, A3 normalize A1; A3 normalizes A2",
            True,
            rel,
        )
    xs = [x for x in range(1, 2**n)]
    crit_ok = True
    for x in xs:
        r = suzuki.centralizer_in_a1(sz, x, exhaustive=(n <= 3))
        crit_ok &= r["consistent"]
    rep.record(
        f"suzuki-centralizer-criterion:n={n}",
        "nontrivial A1-centralizer forces x*theta(x) = x^(2^j)",
        crit_ok,
    )
    if opts.full_aut:
        aut = suzuki.brute_force_aut(sz)
        rep.record(
            "suzuki-aut-order",
            "|Aut| = 2^(n^2) (2^n - 1) n by brute force",
            aut["order"] == aut["expected"],
            {"order": aut["order"]},
        )
        cn = suzuki.centralizer_of_n_in_aut(sz, aut)
        rep.record("suzuki-aut-centralizer", "C_Aut(N) = A1", cn["equals_a1"], cn)
        rep.record(
            "suzuki-aut-decomposition",
            "(a,b) -> (f(a), g(a)+h(b)) with h(a theta(a)) = f(a) theta(f(a))",
            suzuki.auts_decomposition_check(sz, aut),
        )
    return rep


def suite_bounds(opts):
    rep = VerificationReport("bounds")
    qs = opts.q or [3, 4, 5, 7, 8]
    family = opts.family or "heis"
    if family != "heis":
        raise UnknownSuite(f"unknown family {family!r}")
    for q in qs:
        G, N = cons.heisenberg_gagola(q, cap=max(opts.cap, q**3 * (q - 1)))
        cert = pairs.gagola_certificate(G, N)
        ok = (
            cert.is_gagola
            and cert.e == q
            and cert.d == q * (q - 1)
            and G.order == cert.e**4 - cert.e**3
        )
        rep.add(
            f"extremal-family:q={q}",
            "order q^3(q-1) with d = q(q-1), e = q; order meets e^4 - e^3",
            PASS if ok else FAIL,
            {"d": cert.d, "e": cert.e, "order": G.order, "viaCharTable": not cert.partial},
        )
        v = pairs.verify_bounds(cert)
        rep.record(
            f"bound-verdicts:q={q}",
            "d <= e^2 - e and |G| <= e^4 - e^3 at equality",
            all(v["bounds"].values()) and G.order == cert.e**4 - cert.e**3,
            v["bounds"],
        )
        if N.order <= cert.p**2:
            rep.record(
                f"small-n-index:q={q}",
                "|N| <= p^2 forces |G:N|_p >= |N|^2",
                nt.p_part(G.order // N.order, cert.p) >= N.order**2,
            )
    for q in (4, 8):
        G = cons.agl1(q)
        N = G.minimal_normal_subgroups()[0]
        cert = pairs.gagola_certificate(G, N)
        v = pairs.verify_bounds(cert)
        rep.record(
            f"affine-frobenius:q={q}",
            "e = 1 certificates are sharply 2-transitive Frobenius",
            cert.is_gagola and cert.e == 1 and v["berkovich"],
            {"d": cert.d, "e": cert.e},
        )
    return rep


def _char_corpus(cap):
    yield "perm:m=4;gens=(1,2,3,4);(1,3)", "D4"
    yield "heis:q=3", "heis3"
    yield "agl1:q=4", "agl1-4"
    yield "agl1:q=8", "agl1-8"
    yield "sl2:q=2", "sl2-2"
    yield "sl2:q=4", "sl2-4"
    yield "suzuki:n=3;h=1", "suzuki3"
    yield "gamma:p=2;n=4", "gamma-2-4"
    yield "gamma:p=3;n=2", "gamma-3-2"
    yield "heis:q=4", "heis4"
    yield "heis:q=5", "heis5"


def suite_charcheck(opts):
    rep = VerificationReport("charcheck")
    q8 = cons.quaternion8()
    grps = [("quaternion8", q8, q8.center())]
    e27 = cons.extraspecial_27()
    grps.append(("extraspecial27", e27, e27.center()))
    for spec, name in _char_corpus(opts.cap):
        G, N, _ = specs.build(spec, cap=opts.cap)
        grps.append((name, G, N))
    for name, G, N in grps:
        if G.order > 500:
            continue
        table = chartab.character_table(G)
        r = table.num_classes
        orth = all(
            table.row_orthogonality_exact(i, j) for i in range(r) for j in range(r)
        ) and all(
            table.column_orthogonality_exact(i, j)
            for i in range(r)
            for j in range(r)
        )
        rep.record(
            f"orthogonality:{name}",
            "row and column orthogonality hold exactly",
            orth,
            {"order": G.order, "classes": r},
        )
        rep.record(
            f"degree-squares:{name}",
            "sum of squared degrees is the group order",
            sum(d * d for d in table.degrees) == G.order,
            {"degrees": list(table.degrees)},
        )
        witness = chartab.find_gagola_character(table)
        if witness is not None:
            ev = pairs.camina_evidence(G, witness.subgroup)
            rep.record(
                f"gagola-implies-camina:{name}",
                "a two-class-support character forces a Camina pair",
                ev.is_camina,
            )
    return rep


def suite_frobenius(opts):
    rep = VerificationReport("frobenius")
    # C7 x| C6 inside the affine group of GF(7)
    G = cons.agl1(7)
    N = _translation_subgroup(G, 7, 1)
    H = G.subgroup([i for i in range(G.order) if G.elements[i](0) == 0])
    r = cons.frobenius_complement_checks(G, N, H)
    rep.record(
        "complement-c6",
        "Z-group complement has unique subgroups of prime order",
        r["passed"] and r["zGroup"]
        and all(v["unique"] for v in r["primes"].values()),
        r,
    )
    # Q8 on C3 x C3
    F3 = cons.create_field(3, 1)
    i_m = cons.MatrixElement.from_rows(F3, [[0, 2], [1, 0]])
    j_m = cons.MatrixElement.from_rows(F3, [[1, 1], [1, 2]])
    G = cons.affine_matrix_group(3, 2, [i_m, j_m])
    N = _translation_subgroup(G, 3, 2)
    H = G.subgroup([i for i in range(G.order) if G.elements[i](0) == 0])
    r = cons.frobenius_complement_checks(G, N, H)
    rep.record(
        "complement-q8",
        "quaternion complement: order-2 subgroup unique and normal",
        r["passed"] and r["primes"][2]["unique"],
        r,
    )
    # SL2(3) on C5 x C5: the Sylow-2 normalizer of SL2(5)
    s5 = cons.sl2_over_prime(5)
    syl2 = s5.sylow_subgroup(2)
    nor = s5.normalizer(syl2)
    mats = [s5.elements[i] for i in nor.gens()]
    G = cons.affine_matrix_group(5, 2, mats)
    N = _translation_subgroup(G, 5, 2)
    H = G.subgroup([i for i in range(G.order) if G.elements[i](0) == 0])
    r = cons.frobenius_complement_checks(G, N, H)
    rep.record(
        "complement-sl23",
        "order-3 subgroups fall under the quaternion exception clause",
        r["passed"]
        and not r["primes"][3]["allNormal"]
        and r["primes"][3]["exceptionClause"],
        r,
    )
    return rep


def _translation_subgroup(G, p, k):
    pts = p**k
    ids = [
        i
        for i in range(G.order)
        if all(
            _vec_diff(G.elements[i](v), v, p, k) == _vec_diff(G.elements[i](0), 0, p, k)
            for v in range(pts)
        )
    ]
    return G.subgroup(ids)


def _vec_diff(a, b, p, k):
    out = []
    for _ in range(k):
        out.append((a - b) % p)
        a //= p
        b //= p
    return tuple(out)


ALL_SUITES = {
    "numtheory": suite_numtheory,
    "sl2": suite_sl2,
    "suzuki": suite_suzuki,
    "bounds": suite_bounds,
    "charcheck": suite_charcheck,
    "frobenius": suite_frobenius,
}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_verify(opts):
    names = list(ALL_SUITES) if opts.suite == "all" else [opts.suite]
    if opts.suite not in SUITES:
        raise UnknownSuite(f"unknown suite {opts.suite!r}; pick from {SUITES}")
    overall_fail = False
    for name in names:
        t0 = time.monotonic()
        rep = ALL_SUITES[name](opts)
        rep.wall_time_s = time.monotonic() - t0
        if opts.json:
            print(rep.to_json(include_timing=opts.timing))
        else:
            print(rep.render_text())
        overall_fail |= rep.overall == FAIL
    return 1 if overall_fail else 0


def cmd_certify(opts):
    G, N, echo = specs.build(opts.group_spec, cap=opts.cap)
    selectors = []
    if N is not None and opts.n_spec in (None, "designated"):
        selectors = [N]
    elif opts.n_spec == "center":
        selectors = [G.center()]
    else:
        selectors = G.minimal_normal_subgroups()
    results = []
    for N_sel in selectors:
        cert = pairs.gagola_certificate(G, N_sel)
        results.append(cert)
    if opts.json:
        print(json.dumps([c.to_json_dict(echo) for c in results], indent=2))
    else:
        for c in results:
            role = "gagola" if c.is_gagola else ("camina" if c.is_camina else "plain")
            extra = f", d={c.d}, e={c.e}" if c.d else ""
            print(f"{echo}: |G|={G.order}, |N|={c.n_order}: {role}{extra}")
            if c.is_gagola:
                v = pairs.verify_bounds(c)
                print(f"  bounds: {v.get('bounds', {'berkovich': v.get('berkovich')})}")
    return 0 if all(c.is_gagola or c.is_camina for c in results) else 1


def cmd_chartable(opts):
    G, _, echo = specs.build(opts.group_spec, cap=opts.cap)
    table = chartab.character_table(G)
    if opts.json:
        print(json.dumps(table.to_json_dict(echo), indent=2))
    else:
        print(f"{echo}: order {G.order}, {table.num_classes} classes, "
              f"degrees {list(table.degrees)}")
        sizes = table.classes.sizes
        print("  class sizes: " + " ".join(str(s) for s in sizes))
        for row, vals in enumerate(table.values):
            print(f"  chi_{row}: " + "  ".join(v.render() for v in vals))
    return 0


def make_parser():
    ap = argparse.ArgumentParser(
        prog="gagola",
        description="certify Camina/Gagola pairs and verify the bound harness",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument(
            "--cap",
            type=int,
            default=int(os.environ.get("GAGOLA_CAP", DEFAULT_CAP)),
            help="materialization cap (env GAGOLA_CAP)",
        )

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=SUITES)
    pv.add_argument("--q", type=lambda s: [int(v) for v in s.split(",")])
    pv.add_argument("--family")
    pv.add_argument("--n", type=int)
    pv.add_argument("--h", type=int)
    pv.add_argument("--full-aut", action="store_true", dest="full_aut")
    pv.add_argument("--timing", action="store_true")
    common(pv)
    pv.set_defaults(fn=cmd_verify)

    pc = sub.add_parser("certify", help="certify a (G, N) pair")
    pc.add_argument("group_spec")
    pc.add_argument("--n-spec", dest="n_spec",
                    choices=["designated", "center", "minimal"])
    common(pc)
    pc.set_defaults(fn=cmd_certify)

    pt = sub.add_parser("chartable", help="print an exact character table")
    pt.add_argument("group_spec")
    common(pt)
    pt.set_defaults(fn=cmd_chartable)
    return ap


def main(argv=None):
    ap = make_parser()
    try:
        opts = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return opts.fn(opts)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except GagolaError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
