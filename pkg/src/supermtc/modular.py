"""Modular data: labels, a unitary S-matrix, twists and (optionally) fusion rules.

S is stored in its unitary normalization.  The unnormalized ``s_tilde = S / S[unit][unit]``
and the quantum dimensions are derived on demand.

The balancing relation used throughout is the standard one with a dual on the first
index::

    theta_a theta_b s_tilde[a][b] = sum_c N[dual(a)][b][c] theta_c d_c

With this form ``(S T)^3 = (tau_1 / D) S^2`` holds for every modular category.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from .errors import InputError, NotModularError
from .scalar import FloatScalar, Scalar, as_scalar, is_positive, positive_sqrt


class FusionTensor:
    """Nonnegative integer fusion coefficients ``N[a][b][c]`` (multiplicity of c in a x b)."""

    def __init__(self, coeffs):
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.ndim != 3 or not (arr.shape[0] == arr.shape[1] == arr.shape[2]):
            raise InputError(f"fusion tensor must be rank x rank x rank, got shape {arr.shape}")
        if (arr < 0).any():
            raise InputError("fusion coefficients must be nonnegative")
        arr.setflags(write=False)
        self.coeffs = arr

    @property
    def rank(self) -> int:
        return self.coeffs.shape[0]

    def __getitem__(self, idx):
        return int(self.coeffs[idx])

    def __eq__(self, other):
        if not isinstance(other, FusionTensor):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool((self.coeffs == other.coeffs).all())

    __hash__ = None

    def __repr__(self):
        return f"FusionTensor(rank={self.rank})"

    def tolist(self) -> list:
        return self.coeffs.tolist()

    def unit_index(self) -> int | None:
        eye = np.eye(self.rank, dtype=np.int64)
        for u in range(self.rank):
            if (self.coeffs[u] == eye).all():
                return u
        return None

    def dual(self, a: int, unit: int) -> int:
        hits = np.flatnonzero(self.coeffs[a, :, unit])
        if len(hits) != 1:
            raise InputError(f"object {a} has no unique dual")
        return int(hits[0])

    def products(self, a: int, b: int) -> list[int]:
        """Labels c with nonzero ``N[a][b][c]``."""
        return [int(c) for c in np.flatnonzero(self.coeffs[a, b])]

    def is_commutative(self) -> bool:
        return bool((self.coeffs == self.coeffs.transpose(1, 0, 2)).all())

    def is_associative(self) -> bool:
        n = self.coeffs
        left = np.einsum("abe,ecd->abcd", n, n)
        right = np.einsum("bcf,afd->abcd", n, n)
        return bool((left == right).all())


@dataclass(frozen=True, eq=True)
class ModularData:
    labels: tuple
    unit: int
    S: tuple
    twists: tuple
    fusion: FusionTensor | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        rank = len(labels)
        if rank < 1:
            raise InputError("modular data needs at least one label")
        if len(set(labels)) != rank:
            raise InputError("labels must be distinct")
        S = tuple(tuple(as_scalar(x) for x in row) for row in self.S)
        if len(S) != rank or any(len(row) != rank for row in S):
            raise InputError(f"S must be {rank} x {rank}")
        twists = tuple(as_scalar(x) for x in self.twists)
        if len(twists) != rank:
            raise InputError(f"expected {rank} twists, got {len(twists)}")
        if not 0 <= self.unit < rank:
            raise InputError(f"unit index {self.unit} out of range")
        fusion = self.fusion
        if fusion is not None and not isinstance(fusion, FusionTensor):
            fusion = FusionTensor(fusion)
        if fusion is not None and fusion.rank != rank:
            raise InputError("fusion tensor rank does not match the number of labels")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "twists", twists)
        object.__setattr__(self, "fusion", fusion)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def exact(self) -> bool:
        entries = [x for row in self.S for x in row] + list(self.twists)
        return all(isinstance(x, Scalar) for x in entries)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown label {label!r}") from None

    @cached_property
    def s_tilde(self) -> tuple:
        inv = self.S[self.unit][self.unit].inverse()
        return tuple(tuple(x * inv for x in row) for row in self.S)

    @cached_property
    def dims(self) -> tuple:
        return tuple(self.s_tilde[a][self.unit] for a in range(self.rank))

    @cached_property
    def fusion_rules(self) -> FusionTensor:
        """The stored fusion tensor, or the Verlinde one when none was given."""
        return self.fusion if self.fusion is not None else verlinde_fusion(self)

    def restrict(self, indices) -> ModularData:
        """Sub-data on the given labels: S block, twists, and fusion when closed."""
        idx = sorted(set(indices))
        for i in idx:
            if not 0 <= i < self.rank:
                raise InputError(f"label index {i} out of range")
        if self.unit not in idx:
            raise InputError("sub-data must contain the unit")
        fusion = None
        if self.fusion is not None:
            full = self.fusion.coeffs
            outside = [c for c in range(self.rank) if c not in idx]
            if not full[np.ix_(idx, idx, outside)].any():
                fusion = FusionTensor(full[np.ix_(idx, idx, idx)])
        return ModularData(
            labels=[self.labels[i] for i in idx],
            unit=idx.index(self.unit),
            S=[[self.S[i][j] for j in idx] for i in idx],
            twists=[self.twists[i] for i in idx],
            fusion=fusion,
            name=f"{self.name}|sub" if self.name else "sub",
        )


def _zero_like(x):
    return FloatScalar(0.0) if isinstance(x, FloatScalar) else Scalar.rational(0)


def verlinde_fusion(M: ModularData) -> FusionTensor:
    """``N[a][b][c] = sum_x S[a][x] S[b][x] conj(S[c][x]) / S[unit][x]``, checked integral."""
    if not M.exact:
        raise InputError("Verlinde fusion needs exact data")
    r, u, S = M.rank, M.unit, M.S
    inv_unit_row = []
    for x in range(r):
        if S[u][x].is_zero():
            raise NotModularError(f"S[unit][{M.labels[x]}] vanishes")
        inv_unit_row.append(S[u][x].inverse())
    weighted_conj = [[S[c][x].conj() * inv_unit_row[x] for x in range(r)] for c in range(r)]
    out = np.zeros((r, r, r), dtype=np.int64)
    for a in range(r):
        for b in range(a, r):
            pair = [S[a][x] * S[b][x] for x in range(r)]
            for c in range(r):
                acc = Scalar.rational(0)
                for x in range(r):
                    if not pair[x].is_zero():
                        acc = acc + pair[x] * weighted_conj[c][x]
                if not acc.is_rational():
                    raise NotModularError(
                        f"Verlinde coefficient N[{M.labels[a]}][{M.labels[b]}][{M.labels[c]}] "
                        f"= {acc} is not rational"
                    )
                val = acc.as_fraction()
                if val.denominator != 1 or val < 0:
                    raise NotModularError(
                        f"Verlinde coefficient N[{M.labels[a]}][{M.labels[b]}][{M.labels[c]}] "
                        f"= {val} is not a nonnegative integer"
                    )
                out[a, b, c] = out[b, a, c] = int(val)
    return FusionTensor(out)


def quantum_dims(M: ModularData) -> list:
    return list(M.dims)


def global_dim(M: ModularData):
    total = _zero_like(M.dims[0])
    for d in M.dims:
        total = total + d * d
    return total


def gauss_sum(M: ModularData, degree: int = 1, subset=None):
    """``sum_a d_a^2 theta_a^degree`` over all labels, or over ``subset`` (label indices)."""
    if degree == 0:
        raise InputError("Gauss sum degree must be nonzero")
    idx = range(M.rank) if subset is None else subset
    total = _zero_like(M.dims[0])
    for a in idx:
        d = M.dims[a]
        total = total + d * d * M.twists[a] ** degree
    return total


def total_dim(M: ModularData) -> Scalar:
    """Positive square root D of the global dimension, exact."""
    return positive_sqrt(global_dim(M), hint=gauss_sum(M, 1))


def deligne_product(A: ModularData, B: ModularData) -> ModularData:
    """Kronecker product of two modular data; labels are ``"(a,b)"`` pairs."""
    ra, rb = A.rank, B.rank
    labels = [f"({a},{b})" for a in A.labels for b in B.labels]
    S = [
        [A.S[i][k] * B.S[j][l] for k in range(ra) for l in range(rb)]
        for i in range(ra)
        for j in range(rb)
    ]
    twists = [ta * tb for ta in A.twists for tb in B.twists]
    fa, fb = A.fusion_rules.coeffs, B.fusion_rules.coeffs
    fusion = np.einsum("ikm,jln->ijklmn", fa, fb).reshape(ra * rb, ra * rb, ra * rb)
    return ModularData(
        labels=labels,
        unit=A.unit * rb + B.unit,
        S=S,
        twists=twists,
        fusion=fusion,
        name=f"{A.name or 'A'}x{B.name or 'B'}",
    )


# -- validation -----------------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.witness is not None:
            extra = " at " + ",".join(str(w) for w in self.witness)
        if self.detail:
            extra += f" ({self.detail})"
        return f"{status}  {self.name}{extra}"


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def add(self, name, passed, witness=None, detail=""):
        self.checks.append(Check(name, bool(passed), witness, detail))

    def text(self) -> str:
        return "\n".join(c.line() for c in self.checks)


def _first(pairs, predicate):
    for p in pairs:
        if not predicate(*p):
            return p
    return None


def _matmul(A, B):
    n, m, k = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = Scalar.rational(0)
            for t in range(m):
                x, y = A[i][t], B[t][j]
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def is_unitary(U) -> tuple[bool, tuple | None]:
    """Exact test ``U conj(U)^T == 1``; returns the first offending index pair."""
    n = len(U)
    if any(len(row) != n for row in U):
        return False, None
    adj = [[U[j][i].conj() for j in range(n)] for i in range(n)]
    prod = _matmul(U, adj)
    for i, j in product(range(n), repeat=2):
        if prod[i][j] != (1 if i == j else 0):
            return False, (i, j)
    return True, None


def validate(M: ModularData) -> ValidationReport:
    """Check every modular-data axiom exactly; witnesses are label names."""
    if not M.exact:
        raise InputError("exact validation needs exact scalars (float data given)")
    rep = ValidationReport()
    r, u, S, th, L = M.rank, M.unit, M.S, M.twists, M.labels
    pairs = list(product(range(r), repeat=2))

    bad = _first(pairs, lambda a, b: S[a][b] == S[b][a])
    rep.add("S symmetric", bad is None, bad and (L[bad[0]], L[bad[1]]))

    ok, bad = is_unitary(S)
    rep.add("S unitary", ok, bad and (L[bad[0]], L[bad[1]]))

    bad = next((a for a in range(r) if not is_positive(S[u][a])), None)
    rep.add("dimensions positive", bad is None, None if bad is None else (L[bad],))

    def _root_of_unity(t):
        n = t.order if t.order % 2 == 0 else 2 * t.order
        return t ** n == 1

    bad = next((a for a in range(r) if not _root_of_unity(th[a])), None)
    rep.add("twists are roots of unity", bad is None, None if bad is None else (L[bad],))

    rep.add("unit twist is 1", th[u] == 1, None if th[u] == 1 else (L[u],))

    try:
        N = verlinde_fusion(M)
    except NotModularError as exc:
        rep.add("Verlinde integrality", False, detail=str(exc))
        N = None
    else:
        rep.add("Verlinde integrality", True)
    if M.fusion is not None:
        same = N is not None and N == M.fusion
        witness = None
        if N is not None and not same:
            a, b, c = (int(i) for i in np.argwhere(N.coeffs != M.fusion.coeffs)[0])
            witness = (L[a], L[b], L[c])
        rep.add("fusion agrees with Verlinde", same, witness)
    fusion = M.fusion if M.fusion is not None else N

    if fusion is not None and ok:
        d = M.dims
        st = M.s_tilde
        dual = [fusion.dual(a, u) for a in range(r)]

        def _balanced(a, b):
            rhs = Scalar.rational(0)
            for c in fusion.products(dual[a], b):
                rhs = rhs + fusion[dual[a], b, c] * th[c] * d[c]
            return th[a] * th[b] * st[a][b] == rhs

        bad = _first(pairs, _balanced)
        rep.add("twist equation", bad is None, bad and (L[bad[0]], L[bad[1]]))
    else:
        rep.add("twist equation", False, detail="needs unitary S and integral fusion")

    if ok and rep["dimensions positive"].passed:
        try:
            lam = gauss_sum(M) / total_dim(M)
        except ArithmeticError as exc:
            rep.add("modular relation (ST)^3 = lambda S^2", False, detail=str(exc))
        else:
            ST = [[S[i][j] * th[j] for j in range(r)] for i in range(r)]
            lhs = _matmul(_matmul(ST, ST), ST)
            S2 = _matmul(S, S)
            bad = _first(pairs, lambda a, b: lhs[a][b] == lam * S2[a][b])
            rep.add("modular relation (ST)^3 = lambda S^2", bad is None, bad and (L[bad[0]], L[bad[1]]))
    else:
        rep.add("modular relation (ST)^3 = lambda S^2", False, detail="needs unitary S")
    return rep


def charge_conjugation(M: ModularData) -> list[list[Scalar]]:
    return _matmul(M.S, M.S)
