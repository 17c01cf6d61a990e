"""Higher Stickelberger elements over abelian fields Q(zeta_f), their
integrality after smoothing, and K-groups of finite fields as Galois
modules.

theta_S(1-r) = sum_chi L_S(1-r, chi-bar) e_chi lives in Q[G] for
G = (Z/f)^*; its coefficients are rational.  The smoothed elements
(c^r - sigma_c) theta_S(1-r) are integral for any c prime to 2 f w_r and
to the primes in S, where w_r is the higher root-of-unity order of
Q(zeta_f).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclo import CycloNumber
from .dirichlet import enumerate_characters
from .lseries import l_value_exact
from .snf import smith_normal_form

__all__ = [
    "stickelberger_element",
    "sigma_action",
    "smoothed_element",
    "higher_w",
    "valid_smoothing_c",
    "integrality_check",
    "fractional_ideal_skeleton",
    "kgroup_finite_field",
    "kgroup_annihilates",
    "easy_annihilators",
]


def _units(f: int):
    return [a for a in range(1, f + 1) if math.gcd(a, f) == 1] or [1]


def stickelberger_element(f: int, r: int, S=()):
    """theta_S(1-r) as {a: Fraction} over units a mod f.

    The chi-component (sum_a c_a chi(a)) equals L_S(1-r, chi-bar).
    """
    units = _units(f)
    chars = enumerate_characters(f)
    phi = len(chars)
    coeffs = {}
    for a in units:
        acc = CycloNumber.zero()
        for chi in chars:
            acc = acc + l_value_exact(chi, 1 - r, S) * chi.value(a)
        acc = acc * Fraction(1, phi)
        if not acc.is_rational:
            raise RuntimeError("Stickelberger coefficient is not rational")
        coeffs[a] = acc.to_fraction()
    return coeffs


def sigma_action(theta, c: int, f: int):
    """sigma_c * theta: permutes coefficients by a -> c*a mod f."""
    out = {}
    for a, v in theta.items():
        out[c * a % f if f > 1 else 1] = v
    return out


def smoothed_element(theta, c: int, r: int, f: int):
    """(c^r - sigma_c) theta."""
    shifted = sigma_action(theta, c, f)
    return {a: c ** r * theta[a] - shifted[a] for a in theta}


def higher_w(f: int, r: int) -> int:
    """w_r(Q(zeta_f)): the largest N with Gal(Q(zeta_f, zeta_N)/Q(zeta_f))
    of exponent dividing r."""
    if r < 1:
        raise ValueError("r must be >= 1")
    candidates = {2} | {q for q in range(2, r + 2) if _is_prime(q)} \
        | {q for q, _ in _factorize(f)}
    w = 1
    for q in sorted(candidates):
        a = 0
        while True:
            qa = q ** (a + 1)
            M = math.lcm(f, qa)
            ok = all(pow(t, r, qa) == 1
                     for t in range(1, M + 1, f)
                     if math.gcd(t, M) == 1)
            if not ok:
                break
            a += 1
        w *= q ** a
    return w


def valid_smoothing_c(f: int, r: int, S=(), count: int = 5, start: int = 2):
    """The first `count` integers c > 1 prime to 2 f w_r(Q(zeta_f)) and to
    every prime in S."""
    w = higher_w(f, r)
    bad = 2 * f * w * math.prod(set(S)) if S else 2 * f * w
    out = []
    c = max(2, start)
    while len(out) < count:
        if math.gcd(c, bad) == 1:
            out.append(c)
        c += 1
    return out


def integrality_check(f: int, r: int, S=(), cs=None, count: int = 5):
    """For each c, is (c^r - sigma_c) theta_S(1-r) in Z[G]?

    Returns (theta, [(c, ok, element)]) with elements as {a: Fraction}.
    """
    theta = stickelberger_element(f, r, S)
    if cs is None:
        cs = valid_smoothing_c(f, r, S, count=count)
    results = []
    for c in cs:
        el = smoothed_element(theta, c, r, f)
        ok = all(v.denominator == 1 for v in el.values())
        results.append((c, ok, el))
    return theta, results


def fractional_ideal_skeleton(f: int, r: int, S=()):
    """Plus-part picture of theta_S(1-r) for even r: coefficients on the
    classes of (Z/f)^* / {+-1}.

    For even r only even characters contribute, so theta is determined by
    these class sums.  This is a partial invariant (denominators are not
    cleared), flagged as such in the output.
    """
    if r % 2 != 0:
        raise ValueError("the skeleton is defined for even r")
    theta = stickelberger_element(f, r, S)
    classes = {}
    for a, v in theta.items():
        key = min(a, (-a) % f) if f > 1 else 1
        classes[key] = classes.get(key, Fraction(0)) + v
    return {"partial": True, "modulus": f, "r": r, "s_primes": sorted(set(S)),
            "classes": {str(k): v for k, v in sorted(classes.items())}}


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(math.isqrt(n)) + 1))


def _factorize(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


# ---------------------------------------------------------------------------
# K-groups of finite fields as modules over the Galois group


def kgroup_finite_field(q: int, d: int, r: int):
    """K_{2r-1}(F_{q^d}) as a module over Z[Gal(F_{q^d}/F_q)] = Z[x]/(x^d-1)
    with Frobenius x acting by q^r.

    Presented as the cokernel of (C - q^r I) for the cyclic shift C; returns
    the abelian invariant factors (the group is cyclic of order q^(rd) - 1)
    and the Frobenius action.
    """
    if not _is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    C = [[1 if j == (i + 1) % d else 0 for j in range(d)] for i in range(d)]
    A = [[C[i][j] - (q ** r if i == j else 0) for j in range(d)] for i in range(d)]
    D, _, _ = smith_normal_form(A)
    inv = [D[i][i] for i in range(d) if D[i][i] not in (0, 1)]
    order = q ** (r * d) - 1
    if math.prod(inv) != order:
        raise RuntimeError("module order mismatch")
    return {"q": q, "d": d, "r": r, "order": order,
            "invariant_factors": inv, "frobenius_acts_as": q ** r % order}


def _is_prime_power(q: int) -> bool:
    return len(_factorize(q)) == 1 and q > 1


def kgroup_annihilates(coeffs, q: int, d: int, r: int) -> bool:
    """Does sum_i coeffs[i] x^i annihilate K_{2r-1}(F_{q^d})?

    The module is Z/(q^(rd)-1) with x acting as q^r, so this is a single
    congruence."""
    order = q ** (r * d) - 1
    acc = 0
    for i, c in enumerate(coeffs):
        acc = (acc + c * pow(q, r * (i % d), order)) % order
    return acc == 0


def easy_annihilators(q: int, d: int, r: int):
    """Obvious annihilators of K_{2r-1}(F_{q^d}) in Z[x]/(x^d - 1):
    the Frobenius relation x - q^r and the order q^(rd) - 1."""
    frob = [0] * d
    frob[0] = -q ** r
    if d == 1:
        frob[0] += 1
    else:
        frob[1] = 1
    order = [q ** (r * d) - 1] + [0] * (d - 1)
    gens = [frob, order]
    for g in gens:
        if not kgroup_annihilates(g, q, d, r):
            raise RuntimeError("claimed annihilator fails")
    return gens
