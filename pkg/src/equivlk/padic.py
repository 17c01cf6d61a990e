"""Finite-precision p-adic numbers for odd primes.

A nonzero value is unit * p^val + O(p^(val+prec)), with the unit stored
modulo p^prec.  Zero carries only a precision bound O(p^prec).  Operations
track the number of correct digits explicitly; in particular division by a
non-unit lowers the valuation, and cancellation in sums lowers the
precision, never silently.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["PAdic", "padic_from_rational"]


class PAdic:
    __slots__ = ("p", "prec", "val", "unit")

    def __init__(self, p: int, prec: int, val: int | None, unit: int):
        if p == 2 or p < 3 or not _is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if prec < 1:
            raise ValueError("precision must be positive")
        self.p = p
        self.prec = prec
        if val is None or unit % p ** prec == 0:
            self.val = None  # zero up to O(p^prec)
            self.unit = 0
        else:
            pk = p ** prec
            unit %= pk
            # factor out any p-part the caller left in the unit
            while unit % p == 0:
                unit //= p
                val += 1
                prec -= 1
                pk //= p
                if prec == 0:
                    self.p, self.prec, self.val, self.unit = p, 1, None, 0
                    return
            self.prec = prec
            self.val = val
            self.unit = unit % pk

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(p: int, prec: int) -> "PAdic":
        return PAdic(p, prec, None, 0)

    @staticmethod
    def from_int(n: int, p: int, prec: int) -> "PAdic":
        return padic_from_rational(Fraction(n), p, prec)

    # -- predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.val is None

    def valuation(self) -> int | None:
        """v_p of the value; None means zero to the stored precision."""
        return self.val

    def is_integral(self) -> bool:
        return self.val is None or self.val >= 0

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "PAdic"):
        if self.p != other.p:
            raise ValueError("mixed primes")

    def __add__(self, other: "PAdic") -> "PAdic":
        self._check(other)
        p = self.p
        if self.is_zero and other.is_zero:
            return PAdic.zero(p, min(self.prec, other.prec))
        if self.is_zero:
            # known only mod p^prec as an absolute bound at valuation 0
            prec = min(other.prec, self.prec - other.val) if self.prec - other.val > 0 else None
            if prec is None or prec <= 0:
                return PAdic.zero(p, 1)
            return PAdic(p, prec, other.val, other.unit)
        if other.is_zero:
            return other + self
        v = min(self.val, other.val)
        # absolute precision of each term, combine at the common valuation
        abs_prec = min(self.val + self.prec, other.val + other.prec)
        prec = abs_prec - v
        if prec <= 0:
            return PAdic.zero(p, 1)
        pk = p ** prec
        total = (self.unit * p ** (self.val - v) + other.unit * p ** (other.val - v)) % pk
        if total == 0:
            return PAdic.zero(p, prec)
        return PAdic(p, prec, v, total)

    def __neg__(self) -> "PAdic":
        if self.is_zero:
            return self
        return PAdic(self.p, self.prec, self.val, -self.unit)

    def __sub__(self, other: "PAdic") -> "PAdic":
        return self + (-other)

    def __mul__(self, other: "PAdic") -> "PAdic":
        self._check(other)
        p = self.p
        if self.is_zero or other.is_zero:
            return PAdic.zero(p, min(self.prec, other.prec))
        prec = min(self.prec, other.prec)
        return PAdic(p, prec, self.val + other.val, self.unit * other.unit)

    def inverse(self) -> "PAdic":
        if self.is_zero:
            raise ZeroDivisionError("inverse of p-adic zero")
        pk = self.p ** self.prec
        return PAdic(self.p, self.prec, -self.val, pow(self.unit, -1, pk))

    def __truediv__(self, other: "PAdic") -> "PAdic":
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, PAdic):
            return NotImplemented
        if self.p != other.p:
            return False
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        prec = min(self.prec, other.prec)
        return self.val == other.val and (self.unit - other.unit) % self.p ** prec == 0

    def __hash__(self):
        return hash((self.p, self.val, self.unit))

    # -- conversion ----------------------------------------------------

    def residue(self, k: int | None = None) -> int:
        """The value mod p^k (requires val >= 0 and k <= known digits)."""
        if self.is_zero:
            return 0
        if self.val < 0:
            raise ValueError("negative valuation has no residue")
        k = self.prec + self.val if k is None else k
        if k > self.prec + self.val:
            raise ValueError("requested more digits than are known")
        return (self.unit * self.p ** self.val) % self.p ** k

    def to_json(self) -> dict:
        digits = []
        u = self.unit
        for _ in range(self.prec):
            digits.append(u % self.p)
            u //= self.p
        return {
            "p": self.p,
            "prec": self.prec,
            "val": self.val if self.val is not None else f">={self.prec}",
            "unit": digits,
        }

    def __repr__(self):
        if self.is_zero:
            return f"PAdic({self.p}; O({self.p}^{self.prec}))"
        return f"PAdic({self.p}; {self.unit}*{self.p}^{self.val} + O({self.p}^{self.val + self.prec}))"


def padic_from_rational(q, p: int, prec: int) -> "PAdic":
    """p-adic image of a rational; denominators divisible by p give
    negative valuation."""
    q = Fraction(q)
    if q == 0:
        return PAdic.zero(p, prec)
    num, den = q.numerator, q.denominator
    val = 0
    while num % p == 0:
        num //= p
        val += 1
    while den % p == 0:
        den //= p
        val -= 1
    pk = p ** prec
    unit = num * pow(den, -1, pk) % pk
    return PAdic(p, prec, val, unit)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
