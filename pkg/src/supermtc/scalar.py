"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An exact :class:`Scalar` is a polynomial in ``zeta_N = exp(2 pi i / N)`` with rational
coefficients, kept reduced modulo the N-th cyclotomic polynomial.  Reduction gives every
element a unique coefficient vector of length ``phi(N)``, so equality is decidable.
Binary operations move both operands into ``Q(zeta_lcm)``.

:class:`FloatScalar` is the double-precision variant.  The two never mix implicitly.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import FieldOrderError

MAX_ORDER = 1024


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    # x^n - 1 divided by Phi_d for every proper divisor d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_divide(poly, cyclotomic_poly(d))
    return tuple(poly)


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _reducer(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    # x^phi = -sum_{j<phi} c_j x^j ; keep only the nonzero tail terms
    poly = cyclotomic_poly(n)
    phi = len(poly) - 1
    return phi, tuple((j, c) for j, c in enumerate(poly[:phi]) if c)


def _reduce(vec: list[int], n: int) -> list[int]:
    phi, tail = _reducer(n)
    for i in range(len(vec) - 1, phi - 1, -1):
        c = vec[i]
        if c:
            base = i - phi
            for j, cj in tail:
                vec[base + j] -= c * cj
    if len(vec) < phi:
        vec = vec + [0] * (phi - len(vec))
    return vec[:phi]


def _check_order(n: int) -> int:
    if n > MAX_ORDER:
        raise FieldOrderError(f"cyclotomic order {n} exceeds the cap {MAX_ORDER}")
    return n


def _lcm(a: int, b: int) -> int:
    return _check_order(a * b // math.gcd(a, b))


@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(a for a in range(1, n) if math.gcd(a, n) == 1) or (1,)


class Scalar:
    """Exact element of Q(zeta_N).

    ``Scalar(order, coeffs)`` reads ``coeffs[k]`` as the coefficient of ``zeta_N**k``;
    exponents are taken mod ``order`` and the result is reduced.
    """

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("order must be a positive integer")
        _check_order(order)
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        folded = [0] * order
        for k, f in enumerate(fracs):
            folded[k % order] += f.numerator * (den // f.denominator)
        self._set(order, _reduce(folded, order), den)

    @classmethod
    def _raw(cls, order: int, num: list[int], den: int) -> Scalar:
        obj = cls.__new__(cls)
        obj._set(order, _reduce(num, order), den)
        return obj

    def _set(self, order, num, den):
        g = den
        for c in num:
            if g == 1:
                break
            g = math.gcd(g, c)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        self.order = order
        self._num = tuple(num)
        self._den = den

    # -- constructors -------------------------------------------------------------------

    @classmethod
    def rational(cls, value) -> Scalar:
        f = Fraction(value)
        return cls._raw(1, [f.numerator], f.denominator)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> Scalar:
        """``zeta_order ** power`` kept in Q(zeta_order) (no reduction of the order)."""
        vec = [0] * order
        vec[power % order] = 1
        return cls._raw(_check_order(order), vec, 1)

    # -- views --------------------------------------------------------------------------

    @property
    def coeffs(self) -> list[Fraction]:
        """Canonical coefficient vector of length ``order`` (zero above ``phi(order)``)."""
        out = [Fraction(c, self._den) for c in self._num]
        return out + [Fraction(0)] * (self.order - len(out))

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def is_real(self) -> bool:
        return self == self.conj()

    def to_complex(self) -> complex:
        n = self.order
        acc = 0j
        for k, c in enumerate(self._num):
            if c:
                acc += (c / self._den) * cmath.exp(2j * math.pi * k / n)
        return acc

    def embed(self, order: int) -> Scalar:
        """Same element viewed in Q(zeta_order); ``self.order`` must divide ``order``."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        step = order // self.order
        vec = [0] * ((len(self._num) - 1) * step + 1)
        for k, c in enumerate(self._num):
            vec[k * step] = c
        return Scalar._raw(_check_order(order), vec, self._den)

    def galois(self, a: int) -> Scalar:
        """Image under zeta_N -> zeta_N**a (``a`` coprime to N)."""
        n = self.order
        vec = [0] * n
        for k, c in enumerate(self._num):
            vec[(k * a) % n] += c
        return Scalar._raw(n, vec, self._den)

    def conj(self) -> Scalar:
        return self.galois(-1)

    # -- arithmetic ---------------------------------------------------------------------

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return Scalar.rational(other)
        if isinstance(other, FloatScalar):
            raise TypeError("exact and float scalars do not mix; convert explicitly")
        return NotImplemented

    def _common(self, other: Scalar) -> tuple[Scalar, Scalar]:
        if self.order == other.order:
            return self, other
        n = _lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        den = a._den * b._den // math.gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        num = [x * fa + y * fb for x, y in zip(a._num, b._num)]
        return Scalar._raw(a.order, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.order, [-c for c in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_rational() or other.is_rational():
            # scaling keeps the larger field without a convolution
            r, s = (self, other) if self.is_rational() else (other, self)
            n = _lcm(r.order, s.order)
            s = s.embed(n)
            c = r._num[0]
            return Scalar._raw(n, [c * x for x in s._num], r._den * s._den)
        a, b = self._common(other)
        la, lb = len(a._num), len(b._num)
        vec = [0] * (la + lb - 1)
        for i, x in enumerate(a._num):
            if x:
                for j, y in enumerate(b._num):
                    if y:
                        vec[i + j] += x * y
        return Scalar._raw(a.order, vec, a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if self.is_rational():
            f = Fraction(self._den, self._num[0])
            return Scalar._raw(self.order, [f.numerator], f.denominator)
        # x * prod_{a != 1} sigma_a(x) is the field norm, a rational number
        cofactor = Scalar.rational(1)
        for a in _units(self.order):
            if a != 1:
                cofactor = cofactor * self.galois(a)
        norm = (self * cofactor).as_fraction()
        return cofactor * Scalar.rational(1 / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = Scalar.rational(1).embed(self.order)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            raise
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a._den == b._den and a._num == b._num

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    # -- display ------------------------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self.order}, {[str(c) for c in self.coeffs[: len(self._num)]]})"

    def __str__(self):
        if self.is_rational():
            return str(self.as_fraction())
        terms = []
        for k, c in enumerate(self._num):
            if not c:
                continue
            f = Fraction(c, self._den)
            mono = "1" if k == 0 else (f"z{self.order}" if k == 1 else f"z{self.order}^{k}")
            if k == 0:
                body = str(abs(f))
            elif abs(f) == 1:
                body = mono
            else:
                body = f"{abs(f)}*{mono}"
            terms.append(("-" if f < 0 else "+", body))
        text = "".join(f" {s} {b}" for s, b in terms).strip()
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


class FloatScalar:
    """Double-precision complex value; the numeric counterpart of :class:`Scalar`."""

    __slots__ = ("re", "im")

    def __init__(self, re: float, im: float = 0.0):
        self.re = float(re)
        self.im = float(im)

    @classmethod
    def from_complex(cls, z: complex) -> FloatScalar:
        return cls(z.real, z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def _coerce(self, other):
        if isinstance(other, FloatScalar):
            return other.to_complex()
        if isinstance(other, Scalar):
            raise TypeError("exact and float scalars do not mix; convert explicitly")
        if isinstance(other, (int, float, Rational)) and not isinstance(other, bool):
            return complex(other)
        return NotImplemented

    def _wrap(self, op, other):
        z = self._coerce(other)
        if z is NotImplemented:
            return z
        return FloatScalar.from_complex(op(self.to_complex(), z))

    def __add__(self, other):
        return self._wrap(lambda a, b: a + b, other)

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(lambda a, b: a - b, other)

    def __rsub__(self, other):
        return self._wrap(lambda a, b: b - a, other)

    def __mul__(self, other):
        return self._wrap(lambda a, b: a * b, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(lambda a, b: a / b, other)

    def __rtruediv__(self, other):
        return self._wrap(lambda a, b: b / a, other)

    def __neg__(self):
        return FloatScalar(-self.re, -self.im)

    def __pow__(self, exponent):
        return FloatScalar.from_complex(self.to_complex() ** exponent)

    def conj(self) -> FloatScalar:
        return FloatScalar(self.re, -self.im)

    def inverse(self) -> FloatScalar:
        return FloatScalar.from_complex(1 / self.to_complex())

    def is_zero(self, tol: float = 1e-12) -> bool:
        return abs(self.to_complex()) <= tol

    def __eq__(self, other):
        z = self._coerce(other)
        if z is NotImplemented:
            return z
        return self.to_complex() == z

    __hash__ = None

    def __repr__(self):
        return f"FloatScalar({self.re!r}, {self.im!r})"

    def __str__(self):
        return f"{self.re:.12g}{self.im:+.12g}i"


def root_of_unity(numer: int, denom: int) -> Scalar:
    """Exact ``exp(2 pi i numer / denom)`` in Q(zeta_n) with ``n`` the reduced denominator."""
    if denom < 1:
        raise ValueError("denominator of a root of unity must be positive")
    g = math.gcd(numer, denom)
    n = denom // g
    return Scalar.zeta(n, (numer // g) % n)


def sqrt2() -> Scalar:
    """The positive square root of 2, as zeta_8 + zeta_8^7."""
    return Scalar.zeta(8, 1) + Scalar.zeta(8, 7)


def as_scalar(x) -> Scalar | FloatScalar:
    if isinstance(x, (Scalar, FloatScalar)):
        return x
    return Scalar.rational(x)


def is_positive(x, margin: float = 1e-9) -> bool:
    """Real and positive.  Exact values must be exactly real before the numeric sign test."""
    if isinstance(x, Scalar):
        if not x.is_real():
            return False
        if x.is_rational():
            return x.as_fraction() > 0
        return x.to_complex().real > margin
    z = x.to_complex()
    return abs(z.imag) <= margin and z.real > margin


def _rational_sqrt(f: Fraction) -> Fraction | None:
    if f < 0:
        return None
    p, q = math.isqrt(f.numerator), math.isqrt(f.denominator)
    if p * p == f.numerator and q * q == f.denominator:
        return Fraction(p, q)
    return None


def positive_sqrt(x: Scalar, hint: Scalar | None = None) -> Scalar:
    """Exact positive square root of a totally known positive ``x``.

    Rational squares and twice rational squares are handled directly.  Otherwise ``hint`` must be an element
    with ``|hint|**2 == x`` whose phase is a root of unity (a Gauss sum of modular data is
    such an element); the root is then ``hint`` times the conjugate phase.  Raises
    ``ArithmeticError`` when no exact root is found.
    """
    if not is_positive(x):
        raise ArithmeticError(f"{x} is not positive")
    if x.is_rational():
        r = _rational_sqrt(x.as_fraction())
        if r is not None:
            return Scalar.rational(r)
        r = _rational_sqrt(x.as_fraction() / 2)
        if r is not None:
            return r * sqrt2()
    if hint is not None and not hint.is_zero():
        target = math.sqrt(x.to_complex().real)
        phase = hint.to_complex() / target
        if abs(abs(phase) - 1) < 1e-9:
            angle = cmath.phase(phase) / (2 * math.pi)
            base = math.lcm(hint.order, x.order, 8)
            for mult in (1, 2, 3, 4, 6, 8, 12, 24):
                m = base * mult
                if m > MAX_ORDER:
                    break
                k = round(angle * m)
                if abs(angle * m - k) > 1e-6:
                    continue
                root = hint * root_of_unity(-k, m)
                if root * root == x and is_positive(root):
                    return root
    raise ArithmeticError(f"no exact square root found for {x}")
