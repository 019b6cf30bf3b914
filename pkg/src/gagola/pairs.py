"""Camina and Gagola pair certification, degree/bound bookkeeping, and the
involution checks for 2-Gagola pairs.

A Camina pair (G, N) is certified by evaluating three equivalent
conditions through independent routes and insisting they agree:

  (a) for g outside N, the coset g*N lies inside the conjugacy class of g;
  (b) |C_G(g)| = |C_{G/N}(gN)| for g outside N, with the left side from a
      direct commuting scan and the right side from the materialized
      coset-action quotient;
  (c) for every g outside N and x in N there is y with [g, y] = x, found
      by exhausting commutators.

Disagreement between routes raises ConditionDisagreement: the redundancy
is the test.

A Gagola certificate additionally verifies that N is the unique minimal
normal subgroup, elementary abelian, with G transitive by conjugation on
its nonidentity elements, and that the character table (when the group
fits under the table cap) exhibits the character vanishing off N.  The
quantities d and e are computed along two independent routes, from the
character degree and from e^2 = |P:N| with d = e*(|N| - 1), and must
agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy import factorint

from . import chartab
from .errors import (
    ConditionDisagreement,
    DAndEDisagree,
    HypothesisViolated,
    NotNormal,
    NotTwoGagola,
    TrivialOrFull,
)
from .groups import FiniteGroup, Subgroup
from .numtheory import p_part


# ---------------------------------------------------------------------------
# Camina pairs
# ---------------------------------------------------------------------------

@dataclass
class CaminaEvidence:
    coset_in_class: bool          # route (a)
    centralizer_sizes_match: bool  # route (b)
    commutators_cover: bool        # route (c)
    failing_element: int | None = None

    @property
    def is_camina(self):
        return self.coset_in_class

    def to_json_dict(self):
        return {
            "cosetInClass": self.coset_in_class,
            "centralizerSizesMatch": self.centralizer_sizes_match,
            "commutatorsCover": self.commutators_cover,
        }


def _check_proper_normal(G: FiniteGroup, N: Subgroup):
    if N.order <= 1 or N.order >= G.order:
        raise TrivialOrFull(f"need 1 < N < G, got |N| = {N.order}")
    if not G.is_normal(N):
        raise NotNormal("N is not normal in G")


def camina_evidence(G: FiniteGroup, N: Subgroup) -> CaminaEvidence:
    """Evaluate the three Camina conditions independently and compare."""
    _check_proper_normal(G, N)
    T = G.table
    inv = G.inv
    n = G.order
    ct = G.conjugacy_classes()
    nset = N.id_set
    n_ids = np.fromiter(N.ids, dtype=np.int32)
    outside = [g for g in range(n) if g not in nset]

    # (a) coset containment via the class map
    cond_a = True
    witness = None
    for g in outside:
        cg = int(ct.class_of[g])
        if not all(int(ct.class_of[int(T[g, x])]) == cg for x in n_ids):
            cond_a = False
            witness = g
            break

    # (b) centralizer orders against the quotient, by direct scans
    Q, proj = G.quotient(N)
    qct = Q.conjugacy_classes()
    cond_b = True
    all_ids = np.arange(n, dtype=np.int32)
    for g in outside:
        cg_size = int(np.count_nonzero(T[all_ids, g] == T[g, all_ids]))
        qg = int(proj[g])
        cq_size = Q.order // int(qct.sizes[int(qct.class_of[qg])])
        if cg_size != cq_size:
            cond_b = False
            if witness is None:
                witness = g
            break

    # (c) commutator coverage: [g, y] over all y must reach every x in N
    cond_c = True
    member = np.zeros(n, dtype=bool)
    member[n_ids] = True
    for g in outside:
        a = T[inv[g], inv[all_ids]]
        b = T[g, all_ids]
        comm = T[a, b]
        got = {int(v) for v in comm[member[comm]]}
        if not nset <= got:
            cond_c = False
            if witness is None:
                witness = g
            break

    if not (cond_a == cond_b == cond_c):
        raise ConditionDisagreement(
            f"camina routes disagree: a={cond_a} b={cond_b} c={cond_c}"
        )
    return CaminaEvidence(cond_a, cond_b, cond_c, witness)


def is_camina_pair(G: FiniteGroup, N: Subgroup) -> bool:
    return camina_evidence(G, N).is_camina


# ---------------------------------------------------------------------------
# Gagola certificates
# ---------------------------------------------------------------------------

@dataclass
class PairCertificate:
    group: FiniteGroup
    n_subgroup: Subgroup
    is_camina: bool
    camina: CaminaEvidence
    is_gagola: bool
    reasons: list = field(default_factory=list)
    p: int | None = None
    d: int | None = None
    e: int | None = None
    n_order: int = 0
    p_index: int | None = None
    bound_verdicts: dict = field(default_factory=dict)
    gagola_witness: object = None  # chartab.GagolaWitness or None
    partial: bool = False

    def to_json_dict(self, group_spec=None):
        G = self.group
        gens = self.n_subgroup.gens()
        return {
            "schema": "pairCert/1",
            "group": group_spec or f"order-{G.order}",
            "order": G.order,
            "n": {
                "order": self.n_order,
                "generatorWords": [G.word_str(i) for i in gens],
            },
            "isCamina": self.is_camina,
            "caminaEvidence": self.camina.to_json_dict(),
            "isGagola": self.is_gagola,
            "reasons": list(self.reasons),
            "p": self.p,
            "d": self.d,
            "e": self.e,
            "pIndex": self.p_index,
            "boundVerdicts": dict(self.bound_verdicts),
            "gagolaWitness": (
                None
                if self.gagola_witness is None
                else {
                    "characterIndex": self.gagola_witness.character_index,
                    "nonzeroClasses": list(self.gagola_witness.nonzero_classes),
                }
            ),
            "partial": self.partial,
        }


def conjugation_transitive_on(G: FiniteGroup, N: Subgroup):
    """G acts transitively by conjugation on the nonidentity elements of N."""
    nontrivial = [i for i in N.ids if i != 0]
    if not nontrivial:
        return False
    T = G.table
    inv = G.inv
    seen = {nontrivial[0]}
    frontier = [nontrivial[0]]
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.gen_ids:
                y = int(T[T[inv[g], x], g])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen == set(nontrivial)


def gagola_certificate(
    G: FiniteGroup, N: Subgroup, table_cap=chartab.TABLE_ORDER_CAP
) -> PairCertificate:
    """Certify (G, N) as a p-Gagola pair.

    Structural conditions (unique minimal normal subgroup, elementary
    abelian N, conjugation transitivity on N minus identity) are always
    checked exhaustively.  The character-table route runs when |G| fits
    under `table_cap`; beyond the cap the certificate carries d and e from
    the structural route alone and is marked partial.
    """
    evidence = camina_evidence(G, N)
    cert = PairCertificate(
        group=G,
        n_subgroup=N,
        is_camina=evidence.is_camina,
        camina=evidence,
        is_gagola=False,
        n_order=N.order,
    )
    reasons = cert.reasons

    minimals = G.minimal_normal_subgroups()
    if len(minimals) != 1:
        reasons.append(f"{len(minimals)} minimal normal subgroups")
    elif minimals[0].ids != N.ids:
        reasons.append("N is not the minimal normal subgroup")
    if not N.is_elementary_abelian():
        reasons.append("N is not elementary abelian")
        return cert
    p = next(iter(factorint(N.order)))
    cert.p = p
    if not conjugation_transitive_on(G, N):
        reasons.append("G is not transitive on N minus identity")

    # structural route: e^2 = |P:N|, d = e*(|N| - 1)
    P = G.sylow_subgroup(p)
    if not N.id_set <= P.id_set:
        # N is a normal p-subgroup, so it lies in every Sylow p-subgroup
        reasons.append("N not inside the Sylow p-subgroup (bug)")
        return cert
    p_index = P.order // N.order
    cert.p_index = p_index
    e_struct = None
    import math

    r = math.isqrt(p_index)
    if r * r == p_index:
        e_struct = r
    else:
        reasons.append(f"|P:N| = {p_index} is not a perfect square")
    d_struct = e_struct * (N.order - 1) if e_struct else None

    # character route, when the group fits under the table cap
    witness = None
    if G.order <= table_cap:
        table = chartab.character_table(G, cap=table_cap)
        witness = chartab.find_gagola_character(table)
        if witness is None:
            reasons.append("no character vanishing on all but two classes")
        elif witness.subgroup.ids != N.ids:
            reasons.append("character support-complement differs from N")
            witness = None
        else:
            d_char = witness.degree
            if G.order % d_char != 0 or G.order // d_char - d_char < 1:
                reasons.append("character degree admits no positive e")
                witness = None
            else:
                e_char = G.order // d_char - d_char
                if d_struct is not None and (d_char, e_char) != (d_struct, e_struct):
                    raise DAndEDisagree(
                        f"character route (d={d_char}, e={e_char}) vs "
                        f"structural route (d={d_struct}, e={e_struct})"
                    )
                cert.d, cert.e = d_char, e_char
    else:
        cert.partial = True

    if cert.d is None and d_struct is not None and not reasons:
        cert.d, cert.e = d_struct, e_struct

    cert.gagola_witness = witness
    cert.is_gagola = not reasons and cert.d is not None and (
        witness is not None or cert.partial
    )
    if cert.is_gagola:
        assert cert.group.order == cert.d * (cert.d + cert.e)
        d, e = cert.d, cert.e
        cert.bound_verdicts = {
            "eSquaredEqualsPIndex": e * e == cert.p_index,
            "dEqualsETimesNMinusOne": d == e * (cert.n_order - 1),
            "dLeESquaredMinusE": d <= e * e - e,
            "orderLeE4MinusE3": G.order <= e**4 - e**3,
        }
    return cert


def verify_bounds(cert: PairCertificate):
    """Bound verdicts for a certificate carrying d and e.

    For e > 1: d <= e^2 - e, |G| <= e^4 - e^3, d < e^2, |G| < e^4 + e^3,
    and |N|^2 <= |G:N|_p.  For e = 1: the sharply 2-transitive Frobenius
    predicate, brute-forced from the conjugation action.
    """
    if cert.d is None or cert.e is None:
        raise HypothesisViolated("certificate has no d and e")
    G, N, e, d = cert.group, cert.n_subgroup, cert.e, cert.d
    out = {"d": d, "e": e, "order": G.order}
    if e > 1:
        index_p = p_part(G.order // N.order, cert.p)
        out["bounds"] = {
            "dLeES-E": d <= e * e - e,
            "orderLeE4-E3": G.order <= e**4 - e**3,
            "dLtE2": d < e * e,
            "orderLtE4+E3": G.order < e**4 + e**3,
            "nSquaredLePIndex": N.order**2 <= index_p,
        }
    else:
        out["berkovich"] = two_transitive_frobenius(G, N)
    return out


def two_transitive_frobenius(G: FiniteGroup, N: Subgroup):
    """G is a sharply 2-transitive Frobenius group with kernel N:
    |G| = |N| * (|N| - 1), every g outside N acts without fixed points on
    N (C_N(g) = 1), and conjugation is transitive on N minus identity."""
    if G.order != N.order * (N.order - 1):
        return False
    T = G.table
    inv = G.inv
    nset = N.id_set
    for g in range(G.order):
        if g in nset:
            continue
        fixed = sum(
            1 for x in N.ids if x != 0 and int(T[T[inv[g], x], g]) == x
        )
        if fixed:
            return False
    return conjugation_transitive_on(G, N)


# ---------------------------------------------------------------------------
# abelian-quotient and abelian-overgroup index bounds
# ---------------------------------------------------------------------------

def camina_abelian_quotient_bound(G: FiniteGroup, N: Subgroup):
    """For a Camina pair in a p-group with abelian quotient: G' = N and
    |G:N| >= |N|^2."""
    if not G.is_p_group():
        raise HypothesisViolated("G is not a p-group")
    if not camina_evidence(G, N).is_camina:
        raise HypothesisViolated("(G, N) is not a Camina pair")
    Q, _ = G.quotient(N)
    if not Q.is_abelian():
        raise HypothesisViolated("G/N is not abelian")
    derived = G.derived_subgroup()
    return {
        "derivedEqualsN": derived.ids == N.ids,
        "indexAtLeastNSquared": G.order // N.order >= N.order**2,
    }


def find_abelian_overgroups(G: FiniteGroup, N: Subgroup, p):
    """Normal abelian p-subgroups M with N < M, by scanning the normal
    subgroup lattice."""
    out = []
    for M in G.normal_subgroups():
        if M.order <= N.order or not N.id_set < M.id_set:
            continue
        f = factorint(M.order)
        if list(f) != [p]:
            continue
        if M.is_abelian():
            out.append(M)
    return out


def abelian_overgroup_bound(cert: PairCertificate, M: Subgroup):
    """For a certified Gagola pair and a normal abelian p-subgroup M > N:
    |P:M| >= |M:N|, and when |N| <= |M:N| also |N|^2 <= |P:N|."""
    if not cert.is_gagola:
        raise HypothesisViolated("certificate is not Gagola")
    G, N, p = cert.group, cert.n_subgroup, cert.p
    if not N.id_set <= M.id_set:
        raise HypothesisViolated("M does not contain N")
    if not G.is_normal(M):
        raise HypothesisViolated("M is not normal")
    if not M.is_abelian():
        raise HypothesisViolated("M is not abelian")
    if list(factorint(M.order)) != [p]:
        raise HypothesisViolated("M is not a p-group")
    P = G.sylow_subgroup(p)
    res = {
        "pIndexOverM": P.order // M.order,
        "mIndexOverN": M.order // N.order,
        "indexBound": P.order // M.order >= M.order // N.order,
    }
    if N.order <= M.order // N.order:
        res["nSquaredLePIndex"] = N.order**2 <= P.order // N.order
    return res


# ---------------------------------------------------------------------------
# involution checks for 2-Gagola pairs
# ---------------------------------------------------------------------------

def dihedral_quotient_check(Q: FiniteGroup):
    """Q is dihedral: a cyclic subgroup C of index 2 and an element outside
    inverting it.  Degenerate small cases (|Q| in {2, 4} abelian) count."""
    n = Q.order
    if n % 2 or n < 2:
        return False
    if n == 2:
        return True
    for c in range(n):
        if Q.order_of(c) == n // 2:
            C = Q.subgroup_closure([c])
            T = Q.table
            for t in range(n):
                if t in C.id_set:
                    continue
                if Q.order_of(t) == 2 and int(
                    T[T[Q.inv[t], c], t]
                ) == Q.inverse_of(c):
                    return True
    return False


def dihedral_involution_check(K: FiniteGroup, M: Subgroup, N: Subgroup):
    """Configuration check: N < M normal in K, N elementary abelian 2-group,
    M/N cyclic of odd order, |K:M| = 2, C_N(M) = 1, K/N dihedral.  Conclusion
    verified exhaustively: some involution of K lies outside M."""
    if not (K.is_normal(M) and K.is_normal(N)):
        raise HypothesisViolated("M and N must be normal in K")
    if not N.id_set < M.id_set:
        raise HypothesisViolated("need N < M")
    if not N.is_elementary_abelian() or N.order % 2:
        raise HypothesisViolated("N is not an elementary abelian 2-group")
    QM, projM = K.quotient(M)
    if QM.order != 2:
        raise HypothesisViolated("|K:M| is not 2")
    QN, projN = K.quotient(N)
    # M/N inside K/N: image of M
    mn_ids = sorted({int(projN[i]) for i in M.ids})
    MN = QN.subgroup(mn_ids, verified=True)
    if MN.order % 2 == 0:
        raise HypothesisViolated("M/N does not have odd order")
    cyclic = any(QN.order_of(i) == MN.order for i in MN.ids)
    if not cyclic:
        raise HypothesisViolated("M/N is not cyclic")
    # C_N(M) = 1: no nontrivial element of N is centralized by all of M
    T = K.table
    inv = K.inv
    fixed = [
        x
        for x in N.ids
        if x != 0 and all(int(T[T[inv[m], x], m]) == x for m in M.ids)
    ]
    if fixed:
        raise HypothesisViolated("C_N(M/N) is nontrivial")
    if not dihedral_quotient_check(QN):
        raise HypothesisViolated("K/N is not dihedral")
    invs = [
        i for i in range(K.order) if K.order_of(i) == 2 and i not in M.id_set
    ]
    return {"involutionOutsideM": bool(invs), "witness": invs[0] if invs else None}


def involution_lemma_checks(cert: PairCertificate):
    """For a certified 2-Gagola pair: every involution of G/N lies in the
    image of O_2(G), and if O_2(G)/N is not elementary abelian (has an
    element of order 4 or more) then |G:N|_2 >= |N|^2."""
    if not cert.is_gagola or cert.p != 2:
        raise NotTwoGagola("certificate is not a 2-Gagola pair")
    G, N = cert.group, cert.n_subgroup
    Q, proj = G.quotient(N)
    O2 = G.o_p_subgroup(2)
    o2_image = {int(proj[i]) for i in O2.ids}
    involutions = [i for i in range(Q.order) if Q.order_of(i) == 2]
    containment = all(i in o2_image for i in involutions)

    # exponent of O_2(G)/N: scan orders of images
    o2_quotient_orders = {Q.order_of(int(proj[i])) for i in O2.ids}
    has_order_4 = any(o >= 4 for o in o2_quotient_orders)
    out = {
        "involutionsInCore": containment,
        "involutionCount": len(involutions),
        "coreQuotientExponentAbove2": has_order_4,
    }
    if has_order_4:
        out["indexBound"] = p_part(G.order // N.order, 2) >= N.order**2
    return out
