"""Generic finite-group engine.

Groups are materialized by breadth-first closure from generators into a
dense element index (element -> id).  Everything downstream (classes,
centralizers, characteristic subgroups, quotients, Sylow subgroups) runs
on ids against a Cayley table, built lazily by composing left-translation
rows along the BFS tree, so the table costs one numpy gather per element.

Determinism contract: generators are sorted before closure, ids follow
BFS discovery order, classes are ordered by (size, representative id),
and no operation uses randomness.  Outputs are byte-stable across runs.

Element kinds (permutations, matrices over a finite field, Suzuki pairs,
semidirect pairs) share the small protocol `op`, `inverse`, `identity`,
`sort_key`; the engine never looks inside them after closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

import numpy as np
from sympy import factorint, isprime

from .errors import (
    CapExceeded,
    HypothesisViolated,
    IncompatibleElements,
    NotNormal,
    PNotDividing,
    SingularMatrix,
)
from .fields import Field

DEFAULT_CAP = 20000
DENSE_TABLE_MAX = 8192


# ---------------------------------------------------------------------------
# element kinds
# ---------------------------------------------------------------------------

class Perm:
    """Permutation of [0, m) stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise IncompatibleElements(f"not a bijection: {images}")
        self.images = images

    @classmethod
    def identity_on(cls, m):
        return cls(range(m))

    @classmethod
    def from_cycles(cls, m, cycles):
        """`cycles` uses 0-based points."""
        img = list(range(m))
        for cyc in cycles:
            for i, pt in enumerate(cyc):
                img[pt] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    def op(self, other):
        if not isinstance(other, Perm) or len(other.images) != len(self.images):
            raise IncompatibleElements("permutation degree mismatch")
        # (self*other)(x) = other(self(x)): apply self first
        return Perm(other.images[i] for i in self.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def identity(self):
        return Perm.identity_on(len(self.images))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def __call__(self, pt):
        return self.images[pt]

    def sort_key(self):
        return ("perm", self.images)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"


class MatrixElement:
    """Invertible k x k matrix over a finite field, entries int-encoded row-major."""

    __slots__ = ("field", "size", "entries")

    def __init__(self, field: Field, size, entries, _check=True):
        self.field = field
        self.size = size
        self.entries = tuple(entries)
        if len(self.entries) != size * size:
            raise IncompatibleElements("entry count does not match size")
        if _check and self.det() == 0:
            raise SingularMatrix(f"singular matrix {self.entries} over GF({field.q})")

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        return cls(field, len(rows), [v for r in rows for v in r])

    @classmethod
    def identity_of(cls, field, size):
        ent = [1 if i == j else 0 for i in range(size) for j in range(size)]
        return cls(field, size, ent, _check=False)

    def rows(self):
        k = self.size
        return [self.entries[i * k:(i + 1) * k] for i in range(k)]

    def det(self):
        F, k = self.field, self.size
        m = [list(r) for r in self.rows()]
        det = 1
        for col in range(k):
            piv = next((r for r in range(col, k) if m[r][col] != 0), None)
            if piv is None:
                return 0
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = F.neg(det)
            det = F.mul(det, m[col][col])
            inv = F.inv(m[col][col])
            for r in range(col + 1, k):
                if m[r][col]:
                    f = F.mul(m[r][col], inv)
                    for c in range(col, k):
                        m[r][c] = F.sub(m[r][c], F.mul(f, m[col][c]))
        return det

    def op(self, other):
        if (
            not isinstance(other, MatrixElement)
            or other.field != self.field
            or other.size != self.size
        ):
            raise IncompatibleElements("matrix shape or field mismatch")
        F, k = self.field, self.size
        a, b = self.entries, other.entries
        out = []
        for i in range(k):
            for j in range(k):
                acc = 0
                for t in range(k):
                    acc = F.add(acc, F.mul(a[i * k + t], b[t * k + j]))
                out.append(acc)
        return MatrixElement(self.field, k, out, _check=False)

    def inverse(self):
        F, k = self.field, self.size
        m = [list(r) + [1 if i == j else 0 for j in range(k)]
             for i, r in enumerate(self.rows())]
        for col in range(k):
            piv = next((r for r in range(col, k) if m[r][col] != 0), None)
            if piv is None:
                raise SingularMatrix("matrix is singular")
            m[col], m[piv] = m[piv], m[col]
            inv = F.inv(m[col][col])
            m[col] = [F.mul(v, inv) for v in m[col]]
            for r in range(k):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [F.sub(v, F.mul(f, w)) for v, w in zip(m[r], m[col])]
        ent = [m[i][k + j] for i in range(k) for j in range(k)]
        return MatrixElement(self.field, k, ent, _check=False)

    def identity(self):
        return MatrixElement.identity_of(self.field, self.size)

    def is_identity(self):
        return self == self.identity()

    def sort_key(self):
        return ("mat", self.size, self.field.q, self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, MatrixElement)
            and self.field == other.field
            and self.size == other.size
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.size, self.entries))

    def __repr__(self):
        return f"Mat{self.rows()}"


@dataclass(frozen=True)
class SuzukiContext:
    """Shared law for pairs over GF(2^n) twisted by theta: a -> a^(2^h)."""

    field: Field
    h: int

    def theta(self, a):
        return self.field.frobenius(a, self.h)


class SuzukiPair:
    """Element (a, b) with (a,c)*(b,d) = (a+b, c+d+b*theta(a))."""

    __slots__ = ("ctx", "a", "b")

    def __init__(self, ctx: SuzukiContext, a, b):
        self.ctx = ctx
        self.a = a
        self.b = b

    def op(self, other):
        if not isinstance(other, SuzukiPair) or other.ctx != self.ctx:
            raise IncompatibleElements("Suzuki pairs from different groups")
        F = self.ctx.field
        c = F.add(self.b, F.add(other.b, F.mul(other.a, self.ctx.theta(self.a))))
        return SuzukiPair(self.ctx, F.add(self.a, other.a), c)

    def square(self):
        F = self.ctx.field
        return SuzukiPair(self.ctx, 0, F.mul(self.a, self.ctx.theta(self.a)))

    def inverse(self):
        # (a,b)^4 = e and (a,b)^2 = (0, a*theta(a)), so inverse = (a, b + a*theta(a))
        F = self.ctx.field
        return SuzukiPair(self.ctx, self.a, F.add(self.b, F.mul(self.a, self.ctx.theta(self.a))))

    def identity(self):
        return SuzukiPair(self.ctx, 0, 0)

    def is_identity(self):
        return self.a == 0 and self.b == 0

    def sort_key(self):
        return ("suz", self.a, self.b)

    def __eq__(self, other):
        return (
            isinstance(other, SuzukiPair)
            and self.ctx == other.ctx
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Suz({self.a},{self.b})"


class SemidirectContext:
    """Action of a complement on a normal factor, as a callable
    act(h_elem, n_elem) -> n_elem that must be an automorphism for each h."""

    def __init__(self, act):
        self.act = act


class SemidirectPair:
    """Element (n, h) of a semidirect product with (n1,h1)(n2,h2) =
    (n1 * act(h1, n2), h1 * h2)."""

    __slots__ = ("ctx", "n_part", "h_part")

    def __init__(self, ctx, n_part, h_part):
        self.ctx = ctx
        self.n_part = n_part
        self.h_part = h_part

    def op(self, other):
        if not isinstance(other, SemidirectPair) or other.ctx is not self.ctx:
            raise IncompatibleElements("semidirect pairs from different products")
        return SemidirectPair(
            self.ctx,
            self.n_part.op(self.ctx.act(self.h_part, other.n_part)),
            self.h_part.op(other.h_part),
        )

    def inverse(self):
        hinv = self.h_part.inverse()
        return SemidirectPair(self.ctx, self.ctx.act(hinv, self.n_part.inverse()), hinv)

    def identity(self):
        return SemidirectPair(self.ctx, self.n_part.identity(), self.h_part.identity())

    def is_identity(self):
        return self.n_part.is_identity() and self.h_part.is_identity()

    def sort_key(self):
        return ("sd", self.n_part.sort_key(), self.h_part.sort_key())

    def __eq__(self, other):
        return (
            isinstance(other, SemidirectPair)
            and self.ctx is other.ctx
            and self.n_part == other.n_part
            and self.h_part == other.h_part
        )

    def __hash__(self):
        return hash((self.n_part, self.h_part))

    def __repr__(self):
        return f"Sd({self.n_part!r},{self.h_part!r})"


# ---------------------------------------------------------------------------
# materialized groups
# ---------------------------------------------------------------------------

class FiniteGroup:
    """A group materialized as a dense id table with a multiplication oracle.

    Always constructed through :func:`generate_group`.  Identity has id 0;
    `parent_of`/`gen_of` record the BFS tree (element = parent * generator),
    giving every element a word in the generators.
    """

    def __init__(self, elements, index, gen_ids, parent_of, gen_of):
        self.elements = elements
        self.index = index
        self.gen_ids = gen_ids
        self.parent_of = parent_of
        self.gen_of = gen_of
        self.order = len(elements)
        self._table = None
        self._inv = None
        self._classes = None
        self._orders = None
        self._normals = None

    # -- id-level oracles ------------------------------------------------

    @property
    def table(self):
        """Cayley table T[i, j] = id(x_i * x_j); built lazily via the BFS tree."""
        if self._table is None:
            n = self.order
            if n > DENSE_TABLE_MAX:
                raise CapExceeded(
                    f"dense Cayley table capped at {DENSE_TABLE_MAX} (|G| = {n})"
                )
            T = np.empty((n, n), dtype=np.int32)
            T[0] = np.arange(n, dtype=np.int32)
            # left-translation rows for the generators: L_g[j] = id(g * x_j)
            gen_rows = {}
            for gid in sorted({int(k) for k in self.gen_of[1:]}):
                g = self.elements[self.gen_ids[gid]]
                gen_rows[gid] = np.fromiter(
                    (self.index[g.op(x)] for x in self.elements),
                    dtype=np.int32,
                    count=n,
                )
            # x_i = x_parent * g, so L_{x_i} = L_{x_parent} o L_g and each
            # remaining row is a single gather along the BFS tree
            for i in range(1, n):
                T[i] = T[self.parent_of[i]][gen_rows[int(self.gen_of[i])]]
            self._table = T
        return self._table

    @property
    def inv(self):
        if self._inv is None:
            T = self.table
            self._inv = np.argmin(T, axis=1).astype(np.int32)
        return self._inv

    def mul(self, i, j):
        if self._table is not None:
            return int(self._table[i, j])
        return self.index[self.elements[i].op(self.elements[j])]

    def inverse_of(self, i):
        return int(self.inv[i])

    def conj(self, x, g):
        """id of g^-1 * x * g."""
        T = self.table
        return int(T[T[self.inv[g], x], g])

    def commutator(self, x, y):
        """id of [x, y] = x^-1 y^-1 x y."""
        T = self.table
        return int(T[T[self.inv[x], self.inv[y]], T[x, y]])

    def power(self, i, k):
        if k < 0:
            return self.power(self.inverse_of(i), -k)
        acc, base = 0, i
        T = self.table
        while k:
            if k & 1:
                acc = int(T[acc, base])
            base = int(T[base, base])
            k >>= 1
        return acc

    def order_of(self, i):
        if self._orders is None:
            self._orders = {}
        o = self._orders.get(i)
        if o is None:
            T = self.table
            o, acc = 1, i
            while acc != 0:
                acc = int(T[acc, i])
                o += 1
            self._orders[i] = o
        return o

    def exponent(self):
        ct = self.conjugacy_classes()
        e = 1
        for r in ct.reps:
            o = self.order_of(r)
            e = e * o // gcd(e, o)
        return e

    def word(self, i):
        """Word in generators for element i, as a tuple of generator indices."""
        out = []
        while i != 0:
            out.append(self.gen_of[i])
            i = self.parent_of[i]
        return tuple(reversed(out))

    def word_str(self, i):
        w = self.word(i)
        return "*".join(f"s{k}" for k in w) if w else "e"

    def is_abelian(self):
        T = self.table
        return bool(np.array_equal(T, T.T))

    def is_p_group(self):
        f = factorint(self.order)
        return len(f) == 1 and isprime(next(iter(f)))

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_classes(self):
        if self._classes is None:
            self._classes = _compute_classes(self)
        return self._classes

    # -- subgroup machinery ------------------------------------------------

    def subgroup(self, ids, verified=False):
        return Subgroup(self, ids, verified=verified)

    def subgroup_closure(self, seed_ids):
        """Smallest subgroup containing the seed ids."""
        T = self.table
        seen = {0}
        frontier = [0]
        gens = sorted(set(int(s) for s in seed_ids) - {0})
        if not gens:
            return self.subgroup([0], verified=True)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(T[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        # seed elements may have infinite order only in infinite groups, so
        # closure under right multiplication by generators suffices here:
        # inverses appear because every element has finite order.
        return self.subgroup(sorted(seen), verified=True)

    def normal_closure(self, seed_ids):
        gens = sorted(set(int(s) for s in seed_ids) - {0})
        T = self.table
        while True:
            H = self.subgroup_closure(gens)
            extra = set()
            hset = H.id_set
            for x in H.ids:
                for g in self.gen_ids:
                    c = int(T[T[self.inv[g], x], g])
                    if c not in hset:
                        extra.add(c)
            if not extra:
                return H
            gens = sorted(set(gens) | extra)

    def centralizer_ids(self, i):
        T = self.table
        return np.nonzero(T[:, i] == T[i, :])[0]

    def centralizer(self, i):
        return self.subgroup(sorted(int(x) for x in self.centralizer_ids(i)), verified=True)

    def center(self):
        ct = self.conjugacy_classes()
        ids = sorted(
            ct.reps[c] for c in range(ct.num_classes) if ct.sizes[c] == 1
        )
        return self.subgroup(ids, verified=True)

    def derived_subgroup(self):
        comms = {
            self.commutator(a, b) for a in self.gen_ids for b in self.gen_ids
        }
        return self.normal_closure(sorted(comms))

    def frattini_subgroup(self):
        """Intersection of maximal subgroups; p-group fast path G' * G^p."""
        if self.is_p_group():
            p = next(iter(factorint(self.order)))
            seeds = {self.commutator(a, b) for a in self.gen_ids for b in self.gen_ids}
            seeds |= {self.power(i, p) for i in range(self.order)}
            return self.subgroup_closure(sorted(seeds))
        maxes = self.maximal_subgroups()
        ids = reduce(lambda s, m: s & m.id_set, maxes, set(range(self.order)))
        return self.subgroup(sorted(ids), verified=True)

    def frattini_via_maximals(self):
        """Maximal-subgroup-intersection route, for cross-checks on p-groups."""
        maxes = self.maximal_subgroups()
        ids = reduce(lambda s, m: s & m.id_set, maxes, set(range(self.order)))
        return self.subgroup(sorted(ids), verified=True)

    def all_subgroups(self, limit=100000):
        """Every subgroup, as the join-closure of the cyclic subgroups."""
        atoms = set()
        for i in range(self.order):
            atoms.add(self.subgroup_closure([i]).ids)
        subs = set(atoms)
        frontier = set(atoms)
        while frontier:
            new = set()
            for a in frontier:
                for b in atoms:
                    j = self.subgroup_closure(sorted(set(a) | set(b))).ids
                    if j not in subs:
                        subs.add(j)
                        new.add(j)
                        if len(subs) > limit:
                            raise CapExceeded("subgroup lattice too large")
            frontier = new
        return [self.subgroup(s, verified=True) for s in sorted(subs, key=lambda t: (len(t), t))]

    def subgroups_of_order(self, m, limit=100000):
        """Subgroups of order m via the lattice of subgroups of order dividing m."""
        if self.order % m != 0:
            return []
        atoms = set()
        for i in range(self.order):
            c = self.subgroup_closure([i])
            if m % c.order == 0:
                atoms.add(c.ids)
        subs = set(atoms)
        frontier = set(atoms)
        while frontier:
            new = set()
            for a in frontier:
                for b in atoms:
                    if set(b) <= set(a):
                        continue
                    j = self.subgroup_closure(sorted(set(a) | set(b)))
                    if m % j.order != 0:
                        continue
                    if j.ids not in subs:
                        subs.add(j.ids)
                        new.add(j.ids)
                        if len(subs) > limit:
                            raise CapExceeded("subgroup lattice too large")
            frontier = new
        return [self.subgroup(s, verified=True) for s in sorted(subs) if len(s) == m]

    def maximal_subgroups(self):
        subs = self.all_subgroups()
        proper = [s for s in subs if s.order < self.order]
        out = []
        for s in proper:
            if not any(s.id_set < t.id_set for t in proper if t.order > s.order):
                out.append(s)
        return out

    def normal_subgroups(self):
        """All normal subgroups: join-closure of the class closures."""
        if self._normals is not None:
            return self._normals
        ct = self.conjugacy_classes()
        atoms = {self.normal_closure([r]).ids for r in ct.reps if r != 0}
        atoms.add((0,))
        subs = set(atoms)
        frontier = set(atoms)
        while frontier:
            new = set()
            for a in frontier:
                for b in atoms:
                    j = self.subgroup_closure(sorted(set(a) | set(b))).ids
                    if j not in subs:
                        subs.add(j)
                        new.add(j)
            frontier = new
        self._normals = [
            self.subgroup(s, verified=True) for s in sorted(subs, key=lambda t: (len(t), t))
        ]
        return self._normals

    def minimal_normal_subgroups(self):
        """Minimal elements among normal closures of single classes."""
        ct = self.conjugacy_classes()
        closures = {}
        for r in ct.reps:
            if r == 0:
                continue
            closures[self.normal_closure([r]).ids] = None
        cand = sorted(closures, key=len)
        out = []
        for c in cand:
            cs = set(c)
            if not any(set(o) < cs for o in cand if o != c):
                out.append(self.subgroup(c, verified=True))
        return out

    def is_normal(self, sub):
        T = self.table
        hset = sub.id_set
        for g in self.gen_ids:
            for x in sub.ids:
                if int(T[T[self.inv[g], x], g]) not in hset:
                    return False
        return True

    def sylow_subgroup(self, p):
        """Deterministic Sylow p-subgroup by growth inside normalizers."""
        if self.order % p != 0:
            raise PNotDividing(f"{p} does not divide |G| = {self.order}")
        target = 1
        m = self.order
        while m % p == 0:
            m //= p
            target *= p
        # seed: smallest-id element of order p
        seed = None
        for i in range(1, self.order):
            o = self.order_of(i)
            if o % p == 0:
                seed = self.power(i, o // p)
                break
        P = self.subgroup_closure([seed])
        while P.order < target:
            nor = self._normalizer_ids(P)
            pset = P.id_set
            grown = False
            for y in nor:
                y = int(y)
                # y normalizes P and yP has order p in N_G(P)/P, so <P, y>
                # is a p-subgroup of order p * |P|
                if y not in pset and self.power(y, p) in pset:
                    P = self.subgroup_closure(sorted(P.ids) + [y])
                    grown = True
                    break
            if not grown:
                raise PNotDividing("sylow growth stalled (bug)")
        return P

    def _normalizer_ids(self, sub):
        T = self.table
        ids = np.fromiter(sub.ids, dtype=np.int32)
        mask = np.ones(self.order, dtype=bool)
        idset = sub.id_set
        member = np.zeros(self.order, dtype=bool)
        member[list(idset)] = True
        ally = np.arange(self.order, dtype=np.int32)
        for x in ids:
            conj = T[T[self.inv, x], ally]
            mask &= member[conj]
            if not mask.any():
                break
        return np.nonzero(mask)[0]

    def normalizer(self, sub):
        return self.subgroup(sorted(int(i) for i in self._normalizer_ids(sub)), verified=True)

    def o_p_subgroup(self, p):
        """O_p(G): intersection of the conjugates of one Sylow p-subgroup."""
        if self.order % p != 0:
            return self.subgroup([0], verified=True)
        P = self.sylow_subgroup(p)
        T = self.table
        core = set(P.ids)
        for g in range(self.order):
            conj = {int(T[T[self.inv[g], x], g]) for x in P.ids}
            core &= conj
            if len(core) == 1:
                break
        return self.subgroup(sorted(core), verified=True)

    # -- quotients ---------------------------------------------------------

    def quotient(self, N):
        """Quotient by a normal subgroup, as the permutation action on right
        cosets.  Returns (quotient group, projection array id -> quotient id)."""
        if not self.is_normal(N):
            raise NotNormal("subgroup is not normal")
        T = self.table
        n_ids = np.fromiter(N.ids, dtype=np.int32)
        coset_of = np.full(self.order, -1, dtype=np.int32)
        reps = []
        for i in range(self.order):
            if coset_of[i] < 0:
                cid = len(reps)
                reps.append(i)
                coset_of[T[n_ids, i]] = cid
        k = len(reps)
        gen_perms = []
        for g in self.gen_ids:
            img = [int(coset_of[T[reps[c], g]]) for c in range(k)]
            gen_perms.append(Perm(img))
        Q = generate_group(gen_perms, cap=k)
        if Q.order != k:
            raise NotNormal("coset action degenerated (bug)")
        # projection via the BFS tree: pi(parent * s) = pi(parent) * pi(s);
        # BFS ids guarantee parent_of[i] < i, so one forward pass suffices
        proj = np.zeros(self.order, dtype=np.int32)
        qgen = [Q.index[p] for p in gen_perms]
        TQ = Q.table
        for i in range(1, self.order):
            proj[i] = TQ[proj[self.parent_of[i]], qgen[self.gen_of[i]]]
        return Q, proj


def p_power_part(m, p):
    part = 1
    while m % p == 0:
        m //= p
        part *= p
    return part


class Subgroup:
    """Subset of a parent group's ids, verified closed under the operation.

    Instances created by closure routines skip re-verification; subgroups
    built from raw id sets are checked for closure under product/inverse
    and for containing the identity.
    """

    __slots__ = ("parent", "ids", "_idset")

    def __init__(self, parent, ids, verified=False):
        self.parent = parent
        self.ids = tuple(sorted({int(i) for i in ids}))
        self._idset = frozenset(self.ids)
        if 0 not in self._idset:
            raise IncompatibleElements("subgroup must contain the identity")
        if not verified:
            T = parent.table
            s = self._idset
            for a in self.ids:
                if parent.inverse_of(a) not in s:
                    raise IncompatibleElements("subgroup not closed under inverse")
                for b in self.ids:
                    if int(T[a, b]) not in s:
                        raise IncompatibleElements("subgroup not closed under product")

    @property
    def id_set(self):
        return self._idset

    @property
    def order(self):
        return len(self.ids)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.ids == other.ids
        )

    def __hash__(self):
        return hash((id(self.parent), self.ids))

    def __repr__(self):
        return f"Subgroup(order={self.order})"

    def __contains__(self, i):
        return i in self.id_set

    def gens(self):
        """A small deterministic generating set (greedy closure growth)."""
        got = {0}
        gens = []
        for i in self.ids:
            if i not in got:
                gens.append(i)
                got = set(self.parent.subgroup_closure(gens).ids)
                if len(got) == self.order:
                    break
        return gens

    def elements(self):
        return [self.parent.elements[i] for i in self.ids]

    def as_group(self):
        """Materialize this subgroup as a standalone FiniteGroup."""
        gens = [self.parent.elements[i] for i in self.gens()] or [
            self.parent.elements[0]
        ]
        return generate_group(gens, cap=self.order)

    def is_abelian(self):
        T = self.parent.table
        return all(
            int(T[a, b]) == int(T[b, a]) for a in self.ids for b in self.ids
        )

    def is_elementary_abelian(self):
        if not self.is_abelian():
            return False
        if self.order == 1:
            return False
        f = factorint(self.order)
        if len(f) != 1:
            return False
        p = next(iter(f))
        return all(i == 0 or self.parent.order_of(i) == p for i in self.ids)

    def exponent_divides(self, k):
        return all(self.parent.power(i, k) == 0 for i in self.ids)


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

def generate_group(gens, cap=DEFAULT_CAP):
    """Materialize the group generated by `gens` by breadth-first closure.

    Ids follow BFS discovery order from the sorted generator list, so they
    are deterministic for a given generator multiset.  Raises CapExceeded
    as soon as the closure would pass `cap` elements.
    """
    if not gens:
        raise IncompatibleElements("need at least one generator")
    gens = sorted(set(gens), key=lambda g: g.sort_key())
    first = gens[0]
    for g in gens[1:]:
        if type(g) is not type(first):
            raise IncompatibleElements("generators of mixed kinds")
    identity = first.identity()
    elements = [identity]
    index = {identity: 0}
    parent_of = [0]
    gen_of = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            x = elements[i]
            for k, g in enumerate(gens):
                y = x.op(g)
                if y not in index:
                    if len(elements) >= cap:
                        raise CapExceeded(
                            f"group closure passed the cap of {cap} elements"
                        )
                    index[y] = len(elements)
                    elements.append(y)
                    parent_of.append(i)
                    gen_of.append(k)
                    nxt.append(index[y])
        frontier = nxt
    G = FiniteGroup(
        elements,
        index,
        tuple(index[g] for g in gens),
        np.asarray(parent_of, dtype=np.int32),
        np.asarray(gen_of, dtype=np.int32),
    )
    return G


# ---------------------------------------------------------------------------
# conjugacy classes
# ---------------------------------------------------------------------------

@dataclass
class ClassTable:
    """Conjugacy data: representatives (min id per class), sizes, and the
    element -> class map.  Classes are ordered by (size, representative id),
    so the identity class is always index 0."""

    group: FiniteGroup
    reps: tuple
    sizes: tuple
    class_of: np.ndarray

    @property
    def num_classes(self):
        return len(self.reps)

    def inverse_class(self, c):
        return int(self.class_of[self.group.inverse_of(self.reps[c])])

    def power_class(self, c, k):
        return int(self.class_of[self.group.power(self.reps[c], k)])

    def power_map(self, primes=None):
        """(class, prime) -> class of rep^prime, for the given primes
        (default: primes dividing the group exponent)."""
        if primes is None:
            primes = sorted(factorint(self.group.exponent()))
        return {
            (c, p): self.power_class(c, p)
            for c in range(self.num_classes)
            for p in primes
        }

    def spot_check(self):
        """Conjugating each representative by each generator stays in class."""
        G = self.group
        for c, r in enumerate(self.reps):
            for g in G.gen_ids:
                if int(self.class_of[G.conj(r, g)]) != c:
                    return False
        return True

    def members(self, c):
        return np.nonzero(self.class_of == c)[0]


def _compute_classes(G: FiniteGroup):
    T = G.table
    inv = G.inv
    n = G.order
    class_of = np.full(n, -1, dtype=np.int32)
    raw = []
    for i in range(n):
        if class_of[i] >= 0:
            continue
        cid = len(raw)
        orbit = [i]
        class_of[i] = cid
        frontier = [i]
        while frontier:
            nxt = []
            for x in frontier:
                for g in G.gen_ids:
                    y = int(T[T[inv[g], x], g])
                    if class_of[y] < 0:
                        class_of[y] = cid
                        orbit.append(y)
                        nxt.append(y)
            frontier = nxt
        raw.append((len(orbit), i))
    order = sorted(range(len(raw)), key=lambda c: raw[c])
    remap = np.empty(len(raw), dtype=np.int32)
    for new, old in enumerate(order):
        remap[old] = new
    class_of = remap[class_of]
    reps = tuple(raw[old][1] for old in order)
    sizes = tuple(raw[old][0] for old in order)
    ct = ClassTable(G, reps, sizes, class_of)
    assert sum(sizes) == n
    return ct


# ---------------------------------------------------------------------------
# automorphisms as id permutations
# ---------------------------------------------------------------------------

def is_automorphism_perm(G: FiniteGroup, sigma):
    """sigma: np.array id permutation; checks sigma[T[i,j]] == T[sigma i, sigma j]."""
    T = G.table
    return bool(np.array_equal(sigma[T], T[np.ix_(sigma, sigma)]))


def automorphism_order(G, sigma):
    n = G.order
    ident = np.arange(n)
    acc = sigma.copy()
    k = 1
    while not np.array_equal(acc, ident):
        acc = sigma[acc]
        k += 1
    return k


def extend_generator_images(G: FiniteGroup, images):
    """Extend candidate generator images (ids) along the BFS tree and verify
    the homomorphism property.  Returns the id-permutation or None."""
    T = G.table
    n = G.order
    img = np.zeros(n, dtype=np.int32)
    for i in range(1, n):
        img[i] = T[img[G.parent_of[i]], images[G.gen_of[i]]]
    if len(np.unique(img)) != n:
        return None
    for k, gid in enumerate(G.gen_ids):
        if not np.array_equal(img[T[:, gid]], T[img, images[k]]):
            return None
    return img


def find_automorphisms(G: FiniteGroup, image_candidates=None, limit=None):
    """Brute-force the automorphism group by enumerating generator images.

    `image_candidates` is an optional list (per generator) of allowed image
    ids; by default all elements of the same order as the generator.
    Intended for desk-scale groups only.
    """
    from itertools import product as iproduct

    gens = G.gen_ids
    if image_candidates is None:
        image_candidates = []
        for gid in gens:
            o = G.order_of(gid)
            image_candidates.append(
                [i for i in range(G.order) if G.order_of(i) == o]
            )
    out = []
    for images in iproduct(*image_candidates):
        img = extend_generator_images(G, images)
        if img is not None:
            out.append(img)
            if limit and len(out) >= limit:
                break
    return out


# ---------------------------------------------------------------------------
# nilpotence and the class-3 coset centralizer checker
# ---------------------------------------------------------------------------

def lower_central_series(G: FiniteGroup):
    series = [G.subgroup(range(G.order), verified=True)]
    while True:
        cur = series[-1]
        comms = {G.commutator(x, g) for x in cur.ids for g in G.gen_ids}
        nxt = G.normal_closure(sorted(comms - {0}))
        if nxt.ids == cur.ids:
            break
        series.append(nxt)
        if nxt.order == 1:
            break
    return series


def nilpotency_class(G: FiniteGroup):
    s = lower_central_series(G)
    if s[-1].order != 1:
        return None
    return len(s) - 1


@dataclass
class ClassThreeReport:
    witnesses: dict
    counterexample: object = None

    @property
    def passed(self):
        return self.counterexample is None


def class_three_coset_centralizer_check(P: FiniteGroup, Z: Subgroup, sigma):
    """For a p-group of nilpotence class 3 (p odd) with [P',P] <= Z <= Z(P) n P'
    and an order-2 automorphism sigma inverting P/P' and Z while centralizing
    P'/Z: exhibit, for every x outside P', an element y in x*P' whose
    centralizer modulo Z is exactly C_P(y) * P' / Z.

    Raises HypothesisViolated naming the first failed hypothesis.  A
    counterexample in the report would falsify the implementation, not the
    underlying statement.
    """
    f = factorint(P.order)
    if len(f) != 1:
        raise HypothesisViolated("P is not a p-group")
    p = next(iter(f))
    if p == 2:
        raise HypothesisViolated("p must be odd")
    cls = nilpotency_class(P)
    if cls != 3:
        raise HypothesisViolated(f"class is {cls}, not 3")
    derived = P.derived_subgroup()
    gamma3 = lower_central_series(P)[2]
    center = P.center()
    zset = Z.id_set
    if not gamma3.id_set <= zset:
        raise HypothesisViolated("[P',P] not contained in Z")
    if not (zset <= center.id_set and zset <= derived.id_set):
        raise HypothesisViolated("Z not contained in Z(P) and P'")
    sigma = np.asarray(sigma)
    if not is_automorphism_perm(P, sigma):
        raise HypothesisViolated("sigma is not an automorphism")
    o = automorphism_order(P, sigma)
    if o != 2:
        raise HypothesisViolated(f"order of sigma is {o}, not 2")
    T = P.table
    dset = derived.id_set
    for x in range(P.order):
        if int(T[sigma[x], x]) not in dset:
            raise HypothesisViolated("sigma does not invert P/P'")
    for z in Z.ids:
        if int(sigma[z]) != P.inverse_of(z):
            raise HypothesisViolated("sigma does not invert Z")
    for y in derived.ids:
        if int(T[sigma[y], P.inverse_of(y)]) not in zset:
            raise HypothesisViolated("sigma does not centralize P'/Z")

    witnesses = {}
    all_ids = np.arange(P.order)
    for x in range(P.order):
        if x in dset:
            continue
        coset = sorted(int(T[x, d]) for d in derived.ids)
        found = None
        for y in coset:
            comm = T[T[P.inv[y], P.inv[all_ids]], T[y, all_ids]]
            D = {int(d) for d in all_ids[np.isin(comm, list(zset))]}
            cy = {int(c) for c in P.centralizer_ids(y)}
            cyp = {int(T[c, d]) for c in cy for d in derived.ids}
            if D == cyp:
                found = y
                break
        if found is None:
            return ClassThreeReport(witnesses, counterexample=x)
        witnesses[x] = found
    return ClassThreeReport(witnesses)
