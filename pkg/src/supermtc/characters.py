"""q-series for free-fermion characters and numeric checks of their modular behaviour.

Characters are truncated infinite products ``q^e prod_{n=1}^{terms} (1 +- q^{n - shift})^power``
with ``q^x = exp(2 pi i tau x)``.  For ``Im tau >= 0.05`` and 200+ factors the neglected tail
is below ``|q|^200`` and does not affect 1e-10 comparisons.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InputError
from .family import family_data

KINDS = {
    # kind: (sign, half-integer shift)
    "neveu_schwarz_plus": (+1, True),
    "neveu_schwarz_minus": (-1, True),
    "ramond": (+1, False),
    "eta": (-1, False),
}


@dataclass(frozen=True)
class QProduct:
    prefactor_exponent: Fraction
    kind: str
    power: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown product kind {self.kind!r}")
        if self.power < 1:
            raise InputError("power must be a positive integer")
        object.__setattr__(self, "prefactor_exponent", Fraction(self.prefactor_exponent))


def _check_tau(tau: complex, terms: int):
    if complex(tau).imag <= 0:
        raise InputError(f"tau must lie in the upper half plane, got {tau}")
    if terms < 1:
        raise InputError("terms must be at least 1")


def qpow(tau: complex, x) -> complex:
    return cmath.exp(2j * math.pi * tau * float(x))


def evaluate(p: QProduct, tau: complex, terms: int = 400) -> complex:
    _check_tau(tau, terms)
    sign, half = KINDS[p.kind]
    n = np.arange(1, terms + 1, dtype=float)
    if half:
        n -= 0.5
    factors = 1 + sign * np.exp(2j * np.pi * complex(tau) * n)
    # sum of logs keeps large powers from overflowing
    log_prod = p.power * np.sum(np.log(factors))
    return qpow(tau, p.prefactor_exponent) * complex(np.exp(log_prod))


def weights(l: int) -> list[Fraction]:
    """Lowest weights of the simple modules of the even part, in family label order."""
    if l % 2:
        return [Fraction(0), Fraction(1, 2), Fraction(l, 16)]
    return [Fraction(0), Fraction(1, 2), Fraction(l, 16), Fraction(l, 16)]


def character_vector(l: int, tau: complex, terms: int = 400) -> np.ndarray:
    """Characters ``tr q^{L0 - c/24}`` of the simple modules of F_l, c = l/2."""
    if l < 1:
        raise InputError("l must be positive")
    _check_tau(tau, terms)
    ns_plus = evaluate(QProduct(Fraction(-l, 48), "neveu_schwarz_plus", l), tau, terms)
    ns_minus = evaluate(QProduct(Fraction(-l, 48), "neveu_schwarz_minus", l), tau, terms)
    ramond = evaluate(QProduct(Fraction(l, 24), "ramond", l), tau, terms)
    even, odd = (ns_plus + ns_minus) / 2, (ns_plus - ns_minus) / 2
    k = l // 2
    if l % 2:
        # ground states: 2^(k+1) zero modes split evenly between V_+ and V_-
        return np.array([even, odd, 2**k * ramond])
    # 2^k zero-mode ground states split evenly by parity
    tw = 2 ** (k - 1) * ramond
    return np.array([even, odd, tw, tw])


def eta(tau: complex, terms: int = 400) -> complex:
    return evaluate(QProduct(Fraction(1, 24), "eta"), tau, terms)


@dataclass
class TransformReport:
    name: str
    residual: float
    tol: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.residual < self.tol

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: residual {self.residual:.3e} (tol {self.tol:g})"


def numeric_s(l: int) -> np.ndarray:
    M = family_data(l)
    return np.array([[x.to_complex() for x in row] for row in M.S])


def check_s_transform(l: int, tau: complex, terms: int = 400, tol: float = 1e-8, S=None) -> list[TransformReport]:
    """``chi(-1/tau) = S chi(tau)`` for F_l, plus ``eta(-1/tau) = sqrt(-i tau) eta(tau)``."""
    _check_tau(tau, terms)
    S = numeric_s(l) if S is None else np.asarray(S, dtype=complex)
    lhs = character_vector(l, -1 / tau, terms)
    rhs = S @ character_vector(l, tau, terms)
    chars = TransformReport(f"S-transform F_{l} at tau={tau}", float(np.abs(lhs - rhs).max()), tol)
    eta_res = abs(eta(-1 / tau, terms) - cmath.sqrt(-1j * tau) * eta(tau, terms))
    return [chars, TransformReport(f"eta weight-1/2 transform at tau={tau}", eta_res, tol)]


def check_t_transform(l: int, tau: complex, terms: int = 400, tol: float = 1e-8) -> TransformReport:
    """``chi_a(tau + 1) = exp(2 pi i (h_a - c/24)) chi_a(tau)`` with c = l/2."""
    _check_tau(tau, terms)
    c = Fraction(l, 2)
    phases = np.array([cmath.exp(2j * math.pi * float(h - c / 24)) for h in weights(l)])
    lhs = character_vector(l, tau + 1, terms)
    rhs = phases * character_vector(l, tau, terms)
    return TransformReport(f"T-transform F_{l} at tau={tau}", float(np.abs(lhs - rhs).max()), tol)


def parse_tau(text: str) -> complex:
    """Accepts ``"0.4i"``, ``"1+2i"``, ``"0.5+1.2j"``."""
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise InputError(f"cannot parse tau {text!r}") from None
