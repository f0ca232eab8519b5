"""The free-fermion family F_l: modular data of the even part of l free fermions.

Odd l has three simple objects ``1, psi, sigma`` with dimensions ``1, 1, sqrt2`` and
weights ``0, 1/2, l/16``.  Even ``l = 2k`` has four invertible objects ``1, psi, tw0, tw1``
of weights ``0, 1/2, k/8, k/8``.  Only dimensions and twists are taken as input.  The
S-matrix comes from balancing, and for even l the group law is the one whose data passes
full validation (Z4 when k is odd, Z2 x Z2 when k is even).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import InputError, NotModularError
from .fermionic import GradedData, sector_grading
from .modular import FusionTensor, ModularData, is_unitary, validate
from .scalar import Scalar, positive_sqrt, root_of_unity, sqrt2

ODD_LABELS = ("1", "psi", "sigma")
EVEN_LABELS = ("1", "psi", "tw0", "tw1")


def s_from_twists(fusion, twists, dims) -> list[list[Scalar]]:
    """Unitary S from fusion rules, twists and dimensions via the balancing identity.

    ``s_tilde[a][b] = theta_a^-1 theta_b^-1 sum_c N[dual a][b][c] theta_c d_c``, divided by
    ``D = sqrt(sum d^2)``.  Raises :class:`NotModularError` carrying the numeric defect
    ``max |S S^dagger - 1|`` when the result is not unitary.
    """
    N = fusion if isinstance(fusion, FusionTensor) else FusionTensor(fusion)
    r = N.rank
    if len(twists) != r or len(dims) != r:
        raise InputError("fusion, twists and dims disagree on the rank")
    if not N.is_associative():
        raise InputError("fusion rules are not associative")
    u = N.unit_index()
    if u is None:
        raise InputError("fusion rules have no unit")
    dual = [N.dual(a, u) for a in range(r)]
    st = []
    for a in range(r):
        row = []
        for b in range(r):
            acc = Scalar.rational(0)
            for c in N.products(dual[a], b):
                acc = acc + N[dual[a], b, c] * twists[c] * dims[c]
            row.append(acc / (twists[a] * twists[b]))
        st.append(row)
    dim2 = sum((d * d for d in dims), Scalar.rational(0))
    gauss = sum((d * d * t for d, t in zip(dims, twists)), Scalar.rational(0))
    try:
        D = positive_sqrt(dim2, hint=gauss)
    except ArithmeticError as exc:
        raise NotModularError(f"no exact total dimension: {exc}", defect=float("nan")) from None
    S = [[x / D for x in row] for row in st]
    ok, _ = is_unitary(S)
    if not ok:
        Sn = np.array([[x.to_complex() for x in row] for row in S])
        defect = float(np.abs(Sn @ Sn.conj().T - np.eye(r)).max())
        raise NotModularError(f"balancing S is not unitary (defect {defect:.3g})", defect=defect)
    return S


def _group_fusion(elements, add) -> np.ndarray:
    r = len(elements)
    pos = {g: i for i, g in enumerate(elements)}
    N = np.zeros((r, r, r), dtype=np.int64)
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            N[i, j, pos[add(g, h)]] = 1
    return N


def cyclic4_fusion() -> np.ndarray:
    # 1, psi, tw0, tw1 = 0, 2, 1, 3 in Z4
    return _group_fusion((0, 2, 1, 3), lambda a, b: (a + b) % 4)


def klein_fusion() -> np.ndarray:
    # 1, psi, tw0, tw1 = 00, 11, 10, 01 in Z2 x Z2
    return _group_fusion(
        ((0, 0), (1, 1), (1, 0), (0, 1)), lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)
    )


def ising_fusion() -> np.ndarray:
    N = np.zeros((3, 3, 3), dtype=np.int64)
    one, psi, sig = 0, 1, 2
    for a in range(3):
        N[one, a, a] = N[a, one, a] = 1
    N[psi, psi, one] = 1
    N[psi, sig, sig] = N[sig, psi, sig] = 1
    N[sig, sig, one] = N[sig, sig, psi] = 1
    return N


def family_twists(l: int) -> list[Scalar]:
    t = root_of_unity(l, 16)
    one, minus = Scalar.rational(1), Scalar.rational(-1)
    return [one, minus, t] if l % 2 else [one, minus, t, t]


def even_fusion_candidates(l: int) -> dict[str, np.ndarray]:
    """Both group laws on four invertible objects, keyed by name."""
    return {"Z4": cyclic4_fusion(), "Z2xZ2": klein_fusion()}


@lru_cache(maxsize=None)
def family_data(l: int) -> ModularData:
    """Modular data of F_l (the even part of ``l`` free fermions)."""
    if not isinstance(l, int) or l < 1:
        raise InputError(f"l must be a positive integer, got {l!r}")
    twists = family_twists(l)
    if l % 2:
        dims = [Scalar.rational(1), Scalar.rational(1), sqrt2()]
        fusion = ising_fusion()
        S = s_from_twists(fusion, twists, dims)
        labels = ODD_LABELS
    else:
        dims = [Scalar.rational(1)] * 4
        found = []
        for name, fusion in even_fusion_candidates(l).items():
            try:
                S = s_from_twists(fusion, twists, dims)
            except NotModularError:
                continue
            candidate = ModularData(EVEN_LABELS, 0, S, twists, fusion, name=f"F_{l}")
            if validate(candidate).ok:
                found.append((name, fusion, S))
        if len(found) != 1:
            raise NotModularError(f"expected exactly one admissible group law for l={l}, got {len(found)}")
        _, fusion, S = found[0]
        labels = EVEN_LABELS
    return ModularData(labels=labels, unit=0, S=S, twists=twists, fusion=fusion, name=f"F_{l}")


def fusion_group(l: int) -> str:
    """Name of the group law of F_l for even l ("Z4" iff l/2 is odd)."""
    if l % 2:
        raise InputError("F_l is pointed only for even l")
    M = family_data(l)
    return "Z4" if FusionTensor(cyclic4_fusion()) == M.fusion else "Z2xZ2"


@lru_cache(maxsize=None)
def ising_like(l: int) -> GradedData:
    """F_l graded by its fermion ``psi``."""
    M = family_data(l)
    return sector_grading(M, M.index("psi"))


def trivial_data() -> ModularData:
    return ModularData(labels=["1"], unit=0, S=[[1]], twists=[1], fusion=[[[1]]], name="Vec")


def central_charge_phase(l: int) -> Scalar:
    """``exp(2 pi i (l/2) / 8)``: the multiplicative central charge of F_l."""
    return root_of_unity(l, 16)

