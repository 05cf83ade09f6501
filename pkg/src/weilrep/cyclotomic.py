"""Exact arithmetic in the cyclotomic field Q(zeta_p) for an odd prime p.

Elements are stored on the power basis 1, zeta, ..., zeta^(p-2); the single
relation 1 + zeta + ... + zeta^(p-1) = 0 gives a canonical reduced form, so
equality is exact and decidable.  Coefficients are arbitrary-precision
rationals (fractions.Fraction).
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_order(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"order must be an odd prime, got {p}")


def legendre(a: int, p: int) -> int:
    """Quadratic character of a mod p: +1 on nonzero squares, -1 on
    nonsquares, 0 on 0 (a degenerate input for every caller here)."""
    _check_order(p)
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


class CycNum:
    """An element of Q(zeta_p), reduced on the power basis of length p-1."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs) -> None:
        _check_order(p)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def zero(cls, p: int) -> CycNum:
        return cls(p, (0,) * (p - 1))

    @classmethod
    def from_rational(cls, p: int, value) -> CycNum:
        return cls(p, (Fraction(value),) + (Fraction(0),) * (p - 2))

    @classmethod
    def zeta_power(cls, p: int, k: int) -> CycNum:
        """zeta_p^k in reduced form; k is taken mod p."""
        k %= p
        if k < p - 1:
            coeffs = [Fraction(0)] * (p - 1)
            coeffs[k] = Fraction(1)
            return cls(p, coeffs)
        # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        return cls(p, (Fraction(-1),) * (p - 1))

    def _match(self, other: CycNum) -> None:
        if self.p != other.p:
            raise ValueError(f"mixed cyclotomic orders {self.p} and {other.p}")

    def __add__(self, other):
        other = _coerce(other, self.p)
        if other is NotImplemented:
            return NotImplemented
        self._match(other)
        return CycNum(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other, self.p)
        if other is NotImplemented:
            return NotImplemented
        self._match(other)
        return CycNum(self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other, self.p)
        if other is NotImplemented:
            return NotImplemented
        self._match(other)
        p = self.p
        prod = [Fraction(0)] * p
        a, b = self.coeffs, other.coeffs
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[(i + j) % p] += ai * bj
        top = prod[p - 1]
        if top:
            return CycNum(p, tuple(c - top for c in prod[: p - 1]))
        return CycNum(p, tuple(prod[: p - 1]))

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """Exact inverse via a linear solve for x with self * x = 1."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_p)")
        p = self.p
        n = p - 1
        # column k of the multiplication matrix is self * zeta^k
        cols = [(self * CycNum.zeta_power(p, k)).coeffs for k in range(n)]
        aug = [[cols[k][i] for k in range(n)] + [Fraction(1 if i == 0 else 0)]
               for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return CycNum(p, tuple(aug[i][n] for i in range(n)))

    def __truediv__(self, other):
        other = _coerce(other, self.p)
        if other is NotImplemented:
            return NotImplemented
        self._match(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other, self.p) * self.inverse()

    def __pow__(self, exponent: int) -> CycNum:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNum.from_rational(self.p, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> CycNum:
        """Complex conjugation, zeta^k -> zeta^(p-k), re-reduced."""
        out = CycNum.zero(self.p)
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + CycNum.zeta_power(self.p, self.p - k) * c
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(self.p, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def to_complex(self) -> complex:
        """Numerical rendering at zeta_p = exp(2*pi*i/p)."""
        zeta = cmath.exp(2j * cmath.pi / self.p)
        return sum((float(c) * zeta ** k for k, c in enumerate(self.coeffs)),
                   complex(0))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> CycNum:
        return cls(data["p"],
                   [Fraction(int(num), int(den)) for num, den in data["coeffs"]])

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                unit = "z" if k == 1 else f"z^{k}"
                terms.append(unit if c == 1 else f"{c}*{unit}")
        body = " + ".join(terms) if terms else "0"
        return f"CycNum({self.p}: {body})"


def _coerce(value, p: int):
    if isinstance(value, CycNum):
        return value
    if isinstance(value, (int, Fraction)):
        return CycNum.from_rational(p, value)
    return NotImplemented


@lru_cache(maxsize=None)
def psi(z: int, p: int) -> CycNum:
    """The additive character z -> zeta_p^z of the center."""
    return CycNum.zeta_power(p, z % p)


@lru_cache(maxsize=None)
def gauss_sum(p: int, char_exp: int = 1) -> CycNum:
    """Sum of psi(a * z^2 / 2) over z in F_p, for the character psi^a.

    char_exp selects the character psi^a; a = 1 is the default used
    everywhere except the inverse-character models of the dual space.
    """
    _check_order(p)
    if char_exp % p == 0:
        raise ValueError("character exponent must be nonzero mod p")
    half = pow(2, -1, p)
    total = CycNum.zero(p)
    for z in range(p):
        total = total + psi(char_exp * half * z * z, p)
    return total


def to_float(a: CycNum) -> tuple[float, float]:
    """Render as an (re, im) pair of doubles."""
    value = a.to_complex()
    return (value.real, value.imag)
