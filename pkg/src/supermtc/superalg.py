"""Bookkeeping for simple superalgebras and twisted-sector stability profiles.

Finite-dimensional simple superalgebras are ``M(m|n)`` (the full matrix superalgebra,
even part of dimension m^2 + n^2) or ``Q(k)`` (even and odd parts both ``k x k``).  A twisted
sector is summarised by how many of its irreducibles come in sigma-unstable pairs (these
carry Q-type Zhu algebras) and how many are sigma-stable (M-type).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class SuperAlgType:
    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind == "Q":
            if len(self.params) != 1 or self.params[0] < 1:
                raise InputError(f"Q needs one positive size, got {self.params}")
        elif self.kind == "M":
            if len(self.params) != 2 or min(self.params) < 0 or sum(self.params) < 1:
                raise InputError(f"M needs (m, n) with m, n >= 0 and m + n >= 1, got {self.params}")
            m, n = self.params
            object.__setattr__(self, "params", (max(m, n), min(m, n)))
        else:
            raise InputError(f"unknown superalgebra kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    @classmethod
    def parse(cls, text: str) -> SuperAlgType:
        """``"Q:2"`` or ``"M:1,1"``."""
        try:
            kind, _, rest = text.partition(":")
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise InputError(f"cannot parse superalgebra type {text!r}") from None
        return cls(kind.strip().upper(), params)

    def __str__(self):
        return f"{self.kind}:{','.join(str(p) for p in self.params)}"

    def graded_dims(self) -> tuple[int, int]:
        """(even dimension, odd dimension)."""
        if self.kind == "Q":
            k = self.params[0]
            return k * k, k * k
        m, n = self.params
        return m * m + n * n, 2 * m * n


def Q(k: int) -> SuperAlgType:
    return SuperAlgType("Q", (k,))


def M(m: int, n: int) -> SuperAlgType:
    return SuperAlgType("M", (m, n))


def tensor_type(a: SuperAlgType, b: SuperAlgType) -> SuperAlgType:
    """Graded tensor product of two simple superalgebras."""
    if a.kind == "Q" and b.kind == "Q":
        mn = a.params[0] * b.params[0]
        return M(mn, mn)
    if a.kind == "Q" or b.kind == "Q":
        q, m = (a, b) if a.kind == "Q" else (b, a)
        return Q(q.params[0] * sum(m.params))
    (m, n), (k, l) = a.params, b.params
    return M(m * k + n * l, m * l + n * k)


def type_from_graded_dims(even: int, odd: int) -> SuperAlgType:
    """The unique simple type with the given graded dimensions."""
    s, d = math.isqrt(even + odd), math.isqrt(even - odd) if even >= odd else -1
    if d >= 0 and s * s == even + odd and d * d == even - odd and (s + d) % 2 == 0 and s > 0:
        return M((s + d) // 2, (s - d) // 2)
    k = math.isqrt(even)
    if even == odd and k * k == even and k > 0:
        return Q(k)
    raise InputError(f"no simple superalgebra has graded dimensions ({even}|{odd})")


@dataclass(frozen=True)
class StabilityProfile:
    """Twisted-sector irreducibles: ``pairs`` sigma-unstable pairs, ``stable`` stable ones."""

    pairs: int
    stable: int

    def __post_init__(self):
        if self.pairs < 0 or self.stable < 0:
            raise InputError("profile counts must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> StabilityProfile:
        try:
            p, s = (int(x) for x in text.split(","))
        except ValueError:
            raise InputError(f"profile must be 'pairs,stable', got {text!r}") from None
        return cls(p, s)

    def __str__(self):
        return f"{self.pairs},{self.stable}"


UNIT_PROFILE = StabilityProfile(0, 1)


def twisted_product_profile(u: StabilityProfile, v: StabilityProfile) -> StabilityProfile:
    """Profile of the twisted sector of a tensor product, counted up to isomorphism.

    pair x pair gives one stable module (two isomorphic copies, counted once);
    pair x stable gives one unstable pair; stable x stable stays stable.
    """
    return StabilityProfile(
        pairs=u.pairs * v.stable + u.stable * v.pairs,
        stable=u.stable * v.stable + u.pairs * v.pairs,
    )


def kind_to_profile(kind: str) -> StabilityProfile:
    """Q-type Zhu algebra <-> sigma-unstable pair; M-type <-> stable module."""
    return StabilityProfile(1, 0) if kind == "Q" else StabilityProfile(0, 1)
