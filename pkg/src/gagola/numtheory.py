"""Integer-arithmetic lemma checkers: p-parts, Zsigmondy primes, 3-adic
congruences for powers of two, q-part lifting, and the power-of-two
congruence solvability test.

Everything runs on machine-scale integers; inputs that would push an
intermediate value past 2**63 raise Overflow instead of silently using
big integers.  All functions are pure and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from sympy import factorint, isprime, primerange

from .errors import NotDivisor, Overflow

WORD_MAX = 2**63


def _checked_pow(base, exp):
    v = base**exp
    if v > WORD_MAX:
        raise Overflow(f"{base}^{exp} exceeds 2^63")
    return v


def p_part(m, p):
    """Largest power of p dividing m."""
    if m < 1:
        raise Overflow(f"p_part needs m >= 1, got {m}")
    if m > WORD_MAX:
        raise Overflow(f"{m} exceeds 2^63")
    part = 1
    while m % p == 0:
        m //= p
        part *= p
    return part


def is_mersenne_prime(p):
    """p is prime and p + 1 is a power of two."""
    return isprime(p) and (p + 1) & p == 0


def zsigmondy(p, a):
    """Smallest prime dividing p^a - 1 but no p^b - 1 with b < a, or None.

    None occurs exactly for the degenerate (2, 1) and the classical
    exception cases: a = 2 with p a Mersenne prime, and (p, a) = (2, 6).
    A returned prime q is re-verified on every call: the multiplicative
    order of p mod q must be exactly a.
    """
    if not isprime(p):
        raise Overflow(f"p must be prime, got {p}")
    if a < 1:
        raise Overflow(f"a must be positive, got {a}")
    v = _checked_pow(p, a) - 1
    for q in sorted(factorint(v)):
        # q is a Zsigmondy prime iff the order of p modulo q is exactly a
        if pow(p, a, q) == 1 and all(pow(p, b, q) != 1 for b in range(1, a)):
            return q
    return None


@dataclass(frozen=True)
class Verdict:
    name: str
    passed: bool
    detail: str

    def __bool__(self):
        return self.passed


def pow2_plus_one_three_part(a):
    """Check that the 3-part of 2^(3^a) + 1 is exactly 3^(a+1).

    Equivalently 2^(3^a) = -1 mod 3^(a+1) but not mod 3^(a+2).
    """
    if a < 0:
        raise Overflow("a must be nonnegative")
    exp = _checked_pow(3, a)
    _checked_pow(3, a + 2)
    m1 = 3 ** (a + 1)
    m2 = 3 ** (a + 2)
    hit = pow(2, exp, m1) == m1 - 1
    sharp = pow(2, exp, m2) != m2 - 1
    return Verdict(
        f"three-part-pow2-plus-one:a={a}",
        hit and sharp,
        f"2^(3^{a}) mod 3^{a + 1} hits -1: {hit}; sharp at 3^{a + 2}: {sharp}",
    )


def four_power_minus_one_three_part(n):
    """Check ((2^n - 1)(2^n + 1))_3 == 3^(a+1) where 3^a is the 3-part of n,
    with 2^n = -1 mod 3^(a+1) for odd n and 2^n = +1 for even n."""
    if n < 1:
        raise Overflow("n must be positive")
    _checked_pow(2, 2 * n)
    a3 = p_part(n, 3)
    m = 3 * a3  # 3^(a+1)
    v = (2**n - 1) * (2**n + 1)
    part_ok = p_part(v, 3) == m
    sign = pow(2, n, m)
    sign_ok = sign == m - 1 if n % 2 == 1 else sign == 1
    return Verdict(
        f"three-part-four-power:n={n}",
        part_ok and sign_ok,
        f"(4^{n}-1)_3 = {p_part(v, 3)} (want {m}); 2^{n} mod {m} = {sign}",
    )


def lifting_the_exponent_check(p, q, n):
    """Verify the q-part identity (p^n - 1)_q = q^a * (p^m - 1)_q.

    Here n = q^a * m with q not dividing m, and the identity is claimed
    only under the hypothesis q^2 | p^m - 1.  When the hypothesis fails
    the verdict reports hypothesis-not-met and asserts nothing.
    """
    if not (isprime(p) and isprime(q)):
        raise Overflow("p and q must be prime")
    if n < 1:
        raise Overflow("n must be positive")
    qa = p_part(n, q)
    m = n // qa
    if qa == 1:
        return Verdict(
            f"q-part-lift:p={p},q={q},n={n}",
            True,
            "hypothesis-not-met: q does not divide n",
        )
    base = _checked_pow(p, m) - 1
    if base % (q * q) != 0:
        return Verdict(
            f"q-part-lift:p={p},q={q},n={n}",
            True,
            f"hypothesis-not-met: {q}^2 does not divide {p}^{m}-1",
        )
    lhs = p_part(_checked_pow(p, n) - 1, q)
    rhs = qa * p_part(base, q)
    return Verdict(
        f"q-part-lift:p={p},q={q},n={n}",
        lhs == rhs,
        f"({p}^{n}-1)_{q} = {lhs}, q^a*({p}^{m}-1)_{q} = {rhs}",
    )


def hypothesis_met(p, q, n):
    qa = p_part(n, q)
    if qa == 1:
        return False
    m = n // qa
    try:
        base = _checked_pow(p, m) - 1
        _checked_pow(p, n)
    except Overflow:
        return False
    return base % (q * q) == 0


def search_lifting_triples(p_max=50, q_max=11, n_max=40):
    """All (p, q, n) in range meeting the q^2 | p^m - 1 hypothesis.

    The hypothesis is sparse, so the suite searches rather than
    hardcoding instances; every found triple is then verified directly.
    """
    found = []
    for p in primerange(2, p_max + 1):
        for q in primerange(2, q_max + 1):
            for n in range(2, n_max + 1):
                if hypothesis_met(p, q, n):
                    found.append((p, q, n))
    return found


def pow2_congruence_solvable(h, d):
    """True iff 2^h + 1 = 2^j (mod 2^d - 1) for some j in [0, d).

    Uses the reduction h -> h mod d, valid because 2^d = 1 mod 2^d - 1.
    """
    if not 1 <= d <= 62:
        raise Overflow(f"d must be in [1, 62], got {d}")
    if h < 0:
        raise Overflow("h must be nonnegative")
    mod = (1 << d) - 1
    if mod == 1:
        return True
    target = (pow(2, h % d, mod) + 1) % mod
    return any(pow(2, j, mod) == target for j in range(d))


def prime_power_divisors_excluding(n, k, h=None):
    """Nontrivial prime-power divisors d of n that do not divide k.

    Requires k | n.  When the Frobenius exponent h is supplied, each d is
    paired with pow2_congruence_solvable(h mod d, d); otherwise with None.
    """
    if n < 1 or k < 1 or n % k != 0:
        raise NotDivisor(f"need k | n, got n={n}, k={k}")
    out = []
    for p, e in sorted(factorint(n).items()):
        for i in range(1, e + 1):
            d = p**i
            if k % d != 0:
                solv = pow2_congruence_solvable(h % d, d) if h is not None else None
                out.append((d, solv))
    return out
