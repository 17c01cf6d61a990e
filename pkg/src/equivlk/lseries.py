"""Dirichlet L-values, exactly and numerically, and their functional
equation.

Exact route: L(1-r, chi) = -B_{r,chi}/r through generalized Bernoulli
numbers, a cyclotomic number in Q(chi).  Numeric route: Hurwitz zeta at a
stated bit precision.  S-truncated values multiply in the Euler factors of
the primes in S away from the modulus.

Completed L-function convention: Lambda(s, chi) = L_R(s + delta) L(s, chi)
with L_R(s) = pi^(-s/2) Gamma(s/2) and delta = 0, 1 for even, odd chi.
For primitive chi of conductor f this satisfies

    Lambda(s, chi) = W(chi) f^(1/2 - s) Lambda(1 - s, chi-bar),

with root number W(chi) = tau(chi) / (i^delta sqrt(f)).  At integer points
where the Gamma factor has a pole the L-function has a matching trivial
zero, and Lambda means the finite limit (pole residue times L').
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .cyclo import CycloNumber
from .dirichlet import DirichletChar
from .numeric import DEFAULT_BITS, detect_rational, embed_complex

__all__ = [
    "bernoulli_number",
    "bernoulli_polynomial",
    "gen_bernoulli",
    "l_value_exact",
    "l_value_numeric",
    "gauss_sum",
    "root_number",
    "archimedean_leading",
    "completed_lambda",
    "fe_residual",
    "l_value_via_fe",
    "real_place_leading",
    "complex_place_leading",
    "pi_power_prediction",
    "pi_power_ratio_check",
    "gross_equivariance_check",
]


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2 (even-index convention elsewhere unaffected)."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    # sum_{k=0}^{n} C(n+1, k) B_k = 0
    acc = Fraction(0)
    for k in range(n):
        acc += math.comb(n + 1, k) * bernoulli_number(k)
    return -acc / (n + 1)


def bernoulli_polynomial(n: int, x: Fraction) -> Fraction:
    x = Fraction(x)
    return sum((math.comb(n, k) * bernoulli_number(k) * x ** (n - k)
                for k in range(n + 1)), Fraction(0))


def gen_bernoulli(chi: DirichletChar, r: int) -> CycloNumber:
    """B_{r,chi} = f^(r-1) sum_{a=1}^{f} chi(a) B_r(a/f)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    f = chi.modulus
    acc = CycloNumber.zero()
    for a in range(1, f + 1):
        c = chi.value(a)
        if not c.is_zero:
            acc = acc + c * bernoulli_polynomial(r, Fraction(a, f))
    return acc * Fraction(f ** (r - 1))


def _truncation_exact(chi: DirichletChar, r: int, S) -> CycloNumber:
    """prod_{v in S, v prime to f} (1 - chi(v) v^(r-1)) at s = 1 - r."""
    acc = CycloNumber.one()
    for v in sorted(set(S)):
        if chi.modulus % v == 0:
            continue  # Euler factor already missing
        acc = acc * (CycloNumber.one() - chi.value(v) * Fraction(v ** (r - 1)))
    return acc


def l_value_exact(chi: DirichletChar, s: int, S=()) -> CycloNumber:
    """L_S(s, chi) at an integer s <= 0, s = 1 - r.

    An imprimitive chi gives the series with the Euler factors at primes
    dividing the modulus removed, as usual.
    """
    if s > 0:
        raise ValueError("exact values only at s <= 0")
    r = 1 - s
    value = -gen_bernoulli(chi, r) * Fraction(1, r)
    return value * _truncation_exact(chi, r, S)


def l_value_numeric(chi: DirichletChar, s, bits: int = DEFAULT_BITS, S=()):
    """L_S(s, chi) = f^(-s) sum_a chi(a) zeta(s, a/f), times S-factors."""
    f = chi.modulus
    with mp.workprec(bits + 24):
        s = mp.mpmathify(s)
        if f == 1:
            total = mp.zeta(s)
        else:
            total = mp.mpc(0)
            for a in range(1, f + 1):
                c = chi.value(a)
                if not c.is_zero:
                    total += embed_complex(c, bits + 24) * mp.zeta(s, mp.mpf(a) / f)
            total *= mp.power(f, -s)
        for v in sorted(set(S)):
            if f % v == 0:
                continue
            total *= 1 - embed_complex(chi.value(v), bits + 24) * mp.power(v, -s)
        with mp.workprec(bits):
            return +total


def gauss_sum(chi: DirichletChar) -> CycloNumber:
    """tau(chi) = sum_a chi(a) zeta_f^a, exact in Q(zeta_{ef})."""
    f = chi.modulus
    acc = CycloNumber.zero()
    for a in range(1, f + 1):
        c = chi.value(a)
        if not c.is_zero:
            acc = acc + c * CycloNumber.zeta(f, a)
    return acc


def root_number(chi: DirichletChar, bits: int = DEFAULT_BITS):
    """W(chi) = tau(chi) / (i^delta sqrt(f)); |W| = 1 for primitive chi."""
    f = chi.modulus
    tau = gauss_sum(chi)
    with mp.workprec(bits + 16):
        w = embed_complex(tau, bits + 16) / mp.sqrt(f)
        if chi.is_odd:
            w /= mp.mpc(0, 1)
        with mp.workprec(bits):
            return +w


# ---------------------------------------------------------------------------
# archimedean factors as (order, leading coefficient) at integer points


def _lr_leading(s0: int, bits: int):
    """L_R(s) = pi^(-s/2) Gamma(s/2) at s0: (order, leading coeff)."""
    with mp.workprec(bits + 16):
        if s0 <= 0 and s0 % 2 == 0:
            k = -s0 // 2
            lead = 2 * mp.mpf(-1) ** k / mp.factorial(k) * mp.power(mp.pi, -mp.mpf(s0) / 2)
            order = -1
        else:
            lead = mp.power(mp.pi, -mp.mpf(s0) / 2) * mp.gamma(mp.mpf(s0) / 2)
            order = 0
        with mp.workprec(bits):
            return order, +lead


def _lc_leading(s0: int, bits: int):
    """L_C(s) = 2 (2 pi)^(-s) Gamma(s) at s0: (order, leading coeff)."""
    with mp.workprec(bits + 16):
        if s0 <= 0:
            k = -s0
            lead = 2 * mp.power(2 * mp.pi, -s0) * mp.mpf(-1) ** k / mp.factorial(k)
            order = -1
        else:
            lead = 2 * mp.power(2 * mp.pi, -s0) * mp.gamma(s0)
            order = 0
        with mp.workprec(bits):
            return order, +lead


def archimedean_leading(chi: DirichletChar, s0: int, bits: int = DEFAULT_BITS):
    """(order, leading) of the completing factor L_R(s + delta) at s0."""
    delta = 1 if chi.is_odd else 0
    return _lr_leading(s0 + delta, bits)


def completed_lambda(chi: DirichletChar, s0: int, bits: int = DEFAULT_BITS):
    """Finite value of Lambda(s, chi) at an integer s0 (primitive chi).

    Where the Gamma factor has a simple pole the L-function has a simple
    trivial zero; the value is then (pole leading coeff) * L'(s0), with the
    derivative taken numerically.
    """
    order, lead = archimedean_leading(chi, s0, bits)
    with mp.workprec(bits + 16):
        if order == 0:
            val = lead * l_value_numeric(chi, s0, bits + 16)
        elif order == -1:
            if chi.modulus == 1 and s0 == 0:
                # zeta has no trivial zero at 0: Lambda really has a pole
                raise ValueError("Lambda(0) diverges for the trivial character")
            # central difference at tripled precision: truncation and
            # roundoff are both ~2^(-2*bits), far below the target accuracy
            wp = 3 * bits
            with mp.workprec(wp):
                h = mp.mpf(2) ** (-bits)
                deriv = (l_value_numeric(chi, mp.mpf(s0) + h, wp)
                         - l_value_numeric(chi, mp.mpf(s0) - h, wp)) / (2 * h)
            val = lead * deriv
        else:
            raise RuntimeError("unexpected pole order")
        with mp.workprec(bits):
            return +val


def fe_residual(chi: DirichletChar, s0: int, bits: int = DEFAULT_BITS):
    """| Lambda(s0, chi) - W(chi) f^(1/2 - s0) Lambda(1 - s0, chi-bar) |."""
    if not chi.is_primitive:
        raise ValueError("functional equation needs a primitive character")
    f = chi.modulus
    with mp.workprec(bits + 16):
        lhs = completed_lambda(chi, s0, bits + 16)
        rhs = (root_number(chi, bits + 16) * mp.power(f, mp.mpf(1) / 2 - s0)
               * completed_lambda(chi.conjugate(), 1 - s0, bits + 16))
        res = abs(lhs - rhs)
        with mp.workprec(bits):
            return +res


def l_value_via_fe(chi: DirichletChar, s0: int, bits: int = DEFAULT_BITS):
    """Numeric L(s0, chi) at an integer s0 <= 0 transported through the
    functional equation from the convergent side (primitive chi).

    Lambda(s0, chi) = Lambda(1-s0, chi-bar) / (W(chi-bar) f^(1/2-(1-s0)));
    dividing out the archimedean factor gives L, which is exactly 0 when
    that factor has a pole (the trivial zeros)."""
    if not chi.is_primitive:
        raise ValueError("functional equation needs a primitive character")
    if s0 > 0:
        raise ValueError("transport targets s0 <= 0")
    f = chi.modulus
    chibar = chi.conjugate()
    order, lead = archimedean_leading(chi, s0, bits)
    if order == -1:
        return mp.mpc(0)
    with mp.workprec(bits + 16):
        lam = (completed_lambda(chibar, 1 - s0, bits + 16)
               / (root_number(chibar, bits + 16) * mp.power(f, mp.mpf(1) / 2 - (1 - s0))))
        val = lam / lead
        with mp.workprec(bits):
            return +val


# ---------------------------------------------------------------------------
# pi-power rationality of archimedean leading-term ratios


def real_place_leading(s0: int, nplus: int, nminus: int, bits: int):
    """(order, leading) of L_R(s)^(n+) L_R(s+1)^(n-) at s0."""
    o1, l1 = _lr_leading(s0, bits + 16)
    o2, l2 = _lr_leading(s0 + 1, bits + 16)
    with mp.workprec(bits):
        return o1 * nplus + o2 * nminus, +(l1 ** nplus * l2 ** nminus)


def complex_place_leading(s0: int, n: int, bits: int):
    o, l = _lc_leading(s0, bits + 16)
    with mp.workprec(bits):
        return o * n, +(l ** n)


def pi_power_prediction(place: str, r: int, nplus: int, nminus: int = 0) -> int:
    """Predicted exponent k with ratio = rational * pi^k."""
    if place == "complex":
        return (1 - 2 * r) * nplus
    if place == "real":
        if r % 2 == 1:
            return (1 - r) * nplus - r * nminus
        return (1 - r) * nminus - r * nplus
    raise ValueError("place must be 'real' or 'complex'")


def pi_power_ratio_check(place: str, r: int, nplus: int, nminus: int = 0,
                         bits: int = 96, max_den: int = 10 ** 4):
    """Leading-coefficient ratio eps_v(r) / eps_v(1-r), divided by the
    predicted pi power; returns (exponent, Fraction or None)."""
    if place == "complex":
        num = complex_place_leading(r, nplus, bits)
        den = complex_place_leading(1 - r, nplus, bits)
    else:
        num = real_place_leading(r, nplus, nminus, bits)
        den = real_place_leading(1 - r, nplus, nminus, bits)
    k = pi_power_prediction(place, r, nplus, nminus)
    with mp.workprec(bits + 16):
        ratio = num[1] / den[1] / mp.power(mp.pi, k)
        rat = detect_rational(ratio, max_den=max_den, bits=bits)
    return k, rat


# ---------------------------------------------------------------------------
# Galois equivariance of exact L-values


def gross_equivariance_check(f: int, r: int, S=()):
    """sigma_t(L_S(1-r, chi)) = L_S(1-r, chi^t) for all chi mod f and all
    t prime to the order of chi; returns a list of failing (chi, t)."""
    from .dirichlet import enumerate_characters

    failures = []
    chars = enumerate_characters(f)
    values = {chi.exps: l_value_exact(chi, 1 - r, S) for chi in chars}
    for chi in chars:
        e = max(chi.order, 1)
        base = values[chi.exps]
        for t in range(1, e + 1):
            if math.gcd(t, e) != 1:
                continue
            # the value lies in Q(zeta_e); sigma_t restricts to its conductor
            lifted = base if base.n == 1 else base.galois(t % base.n)
            other = values[_power_char(chi, t).exps]
            if lifted != other:
                failures.append((chi.label(), t))
    return failures


def _power_char(chi: DirichletChar, t: int) -> DirichletChar:
    return DirichletChar(chi.modulus, tuple(t * k for k in chi.exps))
