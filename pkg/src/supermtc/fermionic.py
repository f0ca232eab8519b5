"""Fermions, Mueger centralizers and the Z2 sector grading of a modular category.

Given a fermion ``f`` in modular data ``C``, the objects braiding trivially with ``f``
form sector 0 (a super-modular category when ``C`` is a minimal modular extension of it)
and the rest form sector 1.  Fusion with ``f`` pairs sector-0 objects into orbits
``{x, f x}``; in sector 1 an object is either fixed by ``f`` (q-type) or paired with
``f x`` (an m-type pair).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import InputError, StructuralError
from .modular import (
    ModularData,
    ValidationReport,
    gauss_sum,
    global_dim,
    is_unitary,
    validate,
)
from .scalar import Scalar, sqrt2


def _check_indices(M: ModularData, indices):
    for i in indices:
        if not isinstance(i, int) or not 0 <= i < M.rank:
            raise InputError(f"label index {i!r} out of range for rank {M.rank}")


def centralizer(M: ModularData, D, within=None) -> list[int]:
    """Labels x with ``s_tilde[x][y] == d_x d_y`` for every y in ``D``.

    ``within`` restricts the candidate labels (used for centralizers inside a subcategory).
    """
    D = list(D)
    _check_indices(M, D)
    cand = range(M.rank) if within is None else sorted(within)
    S, u = M.S, M.unit
    # s_tilde[x][y] = d_x d_y  <=>  S[x][y] S[u][u] = S[x][u] S[y][u]
    return [x for x in cand if all(S[x][y] * S[u][u] == S[x][u] * S[y][u] for y in D)]


def is_fusion_closed(M: ModularData, labels) -> bool:
    keep = set(labels)
    N = M.fusion_rules
    return all(set(N.products(a, b)) <= keep for a in keep for b in keep)


def find_fermions(M: ModularData) -> list[int]:
    """Invertible order-two objects with twist -1."""
    N, u = M.fusion_rules, M.unit
    return [
        f
        for f in range(M.rank)
        if M.dims[f] == 1 and N[f, f, u] == 1 and N.products(f, f) == [u] and M.twists[f] == -1
    ]


def fusion_partner(M: ModularData, f: int, x: int) -> int:
    prods = M.fusion_rules.products(f, x)
    if len(prods) != 1 or M.fusion_rules[f, x, prods[0]] != 1:
        raise StructuralError(f"{M.labels[f]} x {M.labels[x]} is not simple")
    return prods[0]


@dataclass(frozen=True)
class GradedData:
    """Modular data with a chosen fermion and the sector/orbit structure it induces.

    Orbits are ``(rep, partner)`` index pairs where ``rep`` has the lexicographically
    smaller label; ``q_type`` lists sector-1 labels fixed by the fermion.
    """

    base: ModularData
    fermion: int
    sector: tuple
    sector0_orbits: tuple
    q_type: tuple
    m_pairs: tuple
    violations: tuple = field(default=(), compare=False)

    @property
    def labels(self):
        return self.base.labels

    def sector_labels(self, s: int) -> list[int]:
        return [i for i, t in enumerate(self.sector) if t == s]

    @property
    def grading(self) -> dict:
        return {self.base.labels[i]: t for i, t in enumerate(self.sector)}

    @property
    def profile(self) -> tuple[int, int]:
        """(#q-type, #m-pairs) in sector 1."""
        return len(self.q_type), len(self.m_pairs)


def _orbit(M, f, x):
    y = fusion_partner(M, f, x)
    a, b = sorted((x, y), key=lambda i: M.labels[i])
    return a, b


def sector_grading(M: ModularData, f: int, strict: bool = True) -> GradedData:
    """Grade ``M`` by the fermion ``f``; with ``strict`` any violated invariant raises."""
    _check_indices(M, [f])
    if f not in find_fermions(M):
        raise InputError(f"{M.labels[f]} is not a fermion")
    L, N, th, d = M.labels, M.fusion_rules, M.twists, M.dims
    zero = set(centralizer(M, [f]))
    sector = tuple(0 if x in zero else 1 for x in range(M.rank))
    violations = []

    for a, b in product(range(M.rank), repeat=2):
        for c in N.products(a, b):
            if (sector[a] + sector[b]) % 2 != sector[c]:
                violations.append(("grading closure", (L[a], L[b], L[c])))

    orbits0, q_type, m_pairs = set(), [], set()
    for x in range(M.rank):
        a, b = _orbit(M, f, x)
        if sector[x] == 0:
            if a == b:
                violations.append(("fermion fixed point in sector 0", (L[x],)))
                continue
            orbits0.add((a, b))
            if th[b] != -th[a]:
                violations.append(("theta_fx = -theta_x", (L[a], L[b])))
        elif a == b:
            q_type.append(x)
        else:
            m_pairs.add((a, b))

    sum0 = sum((d[x] * d[x] for x in range(M.rank) if sector[x] == 0), Scalar.rational(0))
    sum1 = sum((d[x] * d[x] for x in range(M.rank) if sector[x] == 1), Scalar.rational(0))
    if sum0 != sum1:
        violations.append(("dimension balance", (str(sum0), str(sum1))))
    if len(orbits0) != len(q_type) + len(m_pairs):
        violations.append(("orbit count", (len(orbits0), len(q_type), len(m_pairs))))

    G = GradedData(
        base=M,
        fermion=f,
        sector=sector,
        sector0_orbits=tuple(sorted(orbits0)),
        q_type=tuple(q_type),
        m_pairs=tuple(sorted(m_pairs)),
        violations=tuple(violations),
    )
    if strict and violations:
        name, where = violations[0]
        raise StructuralError(f"{name} violated at {where}", report=violations)
    return G


def graded_from_assignment(M: ModularData, f: int, grading: dict) -> GradedData:
    """Grade by ``f`` and check a stored label -> sector assignment agrees with it."""
    G = sector_grading(M, f)
    for label, s in grading.items():
        if G.sector[M.index(label)] != int(s):
            raise StructuralError(f"stored grading puts {label} in sector {s}; centralizer says otherwise")
    return G


def supermodular_report(M: ModularData, labels, f: int) -> ValidationReport:
    """Mueger center of the subcategory on ``labels`` must be exactly {unit, f}."""
    labels = sorted(labels)
    rep = ValidationReport()
    center = centralizer(M, labels, within=labels)
    want = sorted({M.unit, f})
    rep.add("Mueger center is {1, f}", center == want, tuple(M.labels[i] for i in center))
    rep.add("fermion twist is -1", M.twists[f] == -1, (M.labels[f],))
    return rep


def check_supermodular(G: GradedData) -> ValidationReport:
    return supermodular_report(G.base, G.sector_labels(0), G.fermion)


def check_minimal_extension(G: GradedData) -> ValidationReport:
    M = G.base
    rep = ValidationReport()
    modular = validate(M)
    rep.add("base is modular", modular.ok, detail="; ".join(c.line() for c in modular.failures()))
    rep.add("sector 0 is super-modular", check_supermodular(G).ok)
    zero = G.sector_labels(0)
    dim0 = sum((M.dims[x] * M.dims[x] for x in zero), Scalar.rational(0))
    rep.add("dim C = 2 dim C0", global_dim(M) == 2 * dim0, detail=f"{global_dim(M)} vs 2*{dim0}")
    tau0 = gauss_sum(M, 1, subset=zero)
    rep.add("Gauss sum of sector 0 vanishes", tau0.is_zero(), detail=str(tau0))
    return rep


# -- super S-matrix blocks -------------------------------------------------------------


@dataclass
class SuperSBlocks:
    """The four blocks of the super S-matrix, rows/columns in orbit order."""

    orbits: list
    q_type: list
    m_pairs: list
    ss: list
    s1: list
    one_s: list
    oneone: list
    report: ValidationReport

    @property
    def twisted(self) -> list:
        """Column order of ``s1``: q-type labels, then m-pairs."""
        return [("q", x) for x in self.q_type] + [("m", p) for p in self.m_pairs]


def assemble_super_s(G: GradedData) -> SuperSBlocks:
    """Recover the super S-matrix blocks from the S-matrix of the even part.

    Entries are read at orbit representatives; the other members must reproduce them up
    to the sign ``(-1)^r`` of the odd member, otherwise the input is rejected.
    """
    M = G.base
    S, L = M.S, M.labels
    r2 = sqrt2()
    orbits, q_type, m_pairs = list(G.sector0_orbits), list(G.q_type), list(G.m_pairs)
    rep = ValidationReport()
    problems = []

    def members(pair):
        return ((pair[0], 0), (pair[1], 1))

    def expect(name, a, b, sign, ref):
        if S[a][b] != sign * ref:
            problems.append((name, (L[a], L[b])))

    # sector0 x sector0: S[x_r][y_t] independent of r, t
    ss = []
    for X in orbits:
        row = []
        for Y in orbits:
            ref = S[X[0]][Y[0]]
            for (a, _), (b, _) in product(members(X), members(Y)):
                expect("orbit block well defined", a, b, 1, ref)
            row.append(2 * ref)
        ss.append(row)

    # sector0 x sector1: sign (-1)^r on the sector-0 member; independent of t
    s1, one_s = [], []
    for X in orbits:
        row = []
        for y in q_type:
            ref = S[X[0]][y]
            for a, sgn in members(X):
                expect("orbit x q-type sign", a, y, (-1) ** sgn, ref)
            row.append(r2 * ref)
        for Y in m_pairs:
            ref = S[X[0]][Y[0]]
            for (a, sa), (b, _) in product(members(X), members(Y)):
                expect("orbit x m-pair sign", a, b, (-1) ** sa, ref)
            row.append(2 * ref)
        s1.append(row)
    for y in q_type:
        one_s.append([r2 * S[y][X[0]] for X in orbits])
    for Y in m_pairs:
        row = []
        for X in orbits:
            ref = S[Y[0]][X[0]]
            for (a, _), (b, sb) in product(members(Y), members(X)):
                expect("m-pair x orbit sign", a, b, (-1) ** sb, ref)
            row.append(2 * ref)
        one_s.append(row)

    # q-type rows vanish on every sector-1 column
    ones = G.sector_labels(1)
    bad = [(L[y], L[w]) for y in q_type for w in ones if not S[y][w].is_zero()]
    rep.add("q-type rows vanish on sector 1", not bad, bad[0] if bad else None)

    oneone = []
    for Y in m_pairs:
        row = []
        for Z in m_pairs:
            ref = S[Y[0]][Z[0]]
            for (a, sa), (b, sb) in product(members(Y), members(Z)):
                expect("m-pair block sign", a, b, (-1) ** (sa + sb), ref)
            row.append(2 * ref)
        oneone.append(row)

    rep.add("blocks well defined", not problems, problems[0][1] if problems else None,
            problems[0][0] if problems else "")
    for name, block in (("S(sigma,sigma)", ss), ("S(sigma,1)", s1), ("S(1,sigma)", one_s), ("S(1,1)", oneone)):
        if not block:
            rep.add(f"{name} unitary", True, detail="empty")
            continue
        ok, bad = is_unitary(block)
        rep.add(f"{name} unitary", ok, bad)
    blocks = SuperSBlocks(orbits, q_type, m_pairs, ss, s1, one_s, oneone, rep)
    if problems:
        raise StructuralError(f"{problems[0][0]} fails at {problems[0][1]}", report=rep)
    return blocks


def twisted_qdims(G: GradedData, blocks: SuperSBlocks | None = None) -> dict:
    """Quantum dimensions over the superalgebra, read off the super S blocks.

    Sector-0 orbits use ``S(sigma,sigma)[X][V] / S(sigma,sigma)[V][V]``; q-type objects use
    ``S(1,sigma)[x][V] / (sqrt2 S(sigma,sigma)[V][V])`` and m-pairs drop the sqrt2.  Returns
    label -> value, keyed by orbit representative.
    """
    blocks = blocks or assemble_super_s(G)
    M = G.base
    v = next(i for i, X in enumerate(blocks.orbits) if M.unit in X)
    ref = blocks.ss[v][v]
    out = {}
    for i, X in enumerate(blocks.orbits):
        out[M.labels[X[0]]] = blocks.ss[i][v] / ref
    for i, y in enumerate(blocks.q_type):
        out[M.labels[y]] = blocks.one_s[i][v] / (sqrt2() * ref)
    for j, Y in enumerate(blocks.m_pairs):
        out[M.labels[Y[0]]] = blocks.one_s[len(blocks.q_type) + j][v] / ref
    return out
