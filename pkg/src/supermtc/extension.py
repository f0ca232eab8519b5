"""Object-level minimal modular extensions obtained by stacking free fermions.

Tensoring a fermionic theory with ``l`` free fermions and condensing the diagonal boson
``(f, psi_l)`` keeps the untwisted sector and rebuilds the twisted one from pairs of
twisted objects.  Only objects (dimension, twist, sector, orbit type) are produced; the
S-matrix on the new twisted sector is not reconstructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, StructuralError
from .family import ising_like
from .fermionic import GradedData, check_minimal_extension
from .modular import gauss_sum
from .scalar import Scalar, root_of_unity
from .superalg import StabilityProfile, twisted_product_profile


@dataclass(frozen=True)
class ExtensionObject:
    label: str
    sector: int
    dim: Scalar
    twist: Scalar
    kind: str  # "s0" (sector-0 orbit member), "q", or "m" (member of an m-type pair)
    orbit: int

    def key(self):
        return (self.dim, self.twist, self.sector, self.kind)


@dataclass(frozen=True)
class ExtensionData:
    objects: tuple
    source: tuple = ("", 0)
    gauss: Scalar = field(init=False)
    dims: tuple = field(init=False)

    def __post_init__(self):
        zero = Scalar.rational(0)
        tau = zero
        sums = [zero, zero]
        for ob in self.objects:
            sq = ob.dim * ob.dim
            sums[ob.sector] = sums[ob.sector] + sq
            if ob.sector == 1:
                tau = tau + sq * ob.twist
        object.__setattr__(self, "gauss", tau)
        object.__setattr__(self, "dims", tuple(sums))

    def sector(self, s: int) -> list:
        return [ob for ob in self.objects if ob.sector == s]

    @property
    def profile(self) -> StabilityProfile:
        ones = self.sector(1)
        q = sum(1 for ob in ones if ob.kind == "q")
        m = len({ob.orbit for ob in ones if ob.kind == "m"})
        return StabilityProfile(q, m)

    def full_gauss_sum(self) -> Scalar:
        total = Scalar.rational(0)
        for ob in self.objects:
            total = total + ob.dim * ob.dim * ob.twist
        return total

    def multiset(self) -> list:
        return [ob.key() for ob in self.objects]


def object_table(G: GradedData) -> ExtensionData:
    """The graded category's own objects as an :class:`ExtensionData`."""
    M = G.base
    objs = []
    for i, (a, b) in enumerate(G.sector0_orbits):
        for x in (a, b):
            objs.append(ExtensionObject(M.labels[x], 0, M.dims[x], M.twists[x], "s0", i))
    for i, x in enumerate(G.q_type):
        objs.append(ExtensionObject(M.labels[x], 1, M.dims[x], M.twists[x], "q", i))
    for i, (a, b) in enumerate(G.m_pairs):
        for x in (a, b):
            objs.append(ExtensionObject(M.labels[x], 1, M.dims[x], M.twists[x], "m", i))
    return ExtensionData(tuple(objs), source=(M.name, 0))


def _twisted_units(table: ExtensionData) -> list:
    """Sector-1 content grouped as ("q", obj) or ("m", (obj0, obj1))."""
    ones = table.sector(1)
    units = [("q", ob) for ob in ones if ob.kind == "q"]
    pairs = {}
    for ob in ones:
        if ob.kind == "m":
            pairs.setdefault(ob.orbit, []).append(ob)
    for orbit in sorted(pairs):
        members = pairs[orbit]
        if len(members) != 2:
            raise StructuralError(f"m-type orbit {orbit} has {len(members)} members")
        units.append(("m", tuple(members)))
    return units


def stack(table: ExtensionData, other: ExtensionData) -> ExtensionData:
    """Combine two twisted sectors under the grade-matching rule; sector 0 of ``table`` kept."""
    objs = [ob for ob in table.objects if ob.sector == 0]
    new = []
    m_id = 0
    q_id = 0
    for kx, x in _twisted_units(table):
        for ky, y in _twisted_units(other):
            if kx == "q" and ky == "q":
                d = x.dim * y.dim / 2
                t = x.twist * y.twist
                for r in (0, 1):
                    new.append(ExtensionObject(f"{x.label}*{y.label}.{r}", 1, d, t, "m", m_id))
                m_id += 1
            elif kx == "m" and ky == "m":
                (x0, _), (y0, y1) = x, y
                d, t = x0.dim * y0.dim, x0.twist * y0.twist
                for a, b in ((x0, y0), (x0, y1)):
                    new.append(ExtensionObject(f"{a.label}*{b.label}", 1, d, t, "m", m_id))
                m_id += 1
            else:
                xq = x if kx == "q" else x[0]
                yq = y if ky == "q" else y[0]
                d, t = xq.dim * yq.dim, xq.twist * yq.twist
                new.append(ExtensionObject(f"{xq.label}*{yq.label}", 1, d, t, "q", q_id))
                q_id += 1
    new.sort(key=lambda ob: (ob.kind != "q", ob.orbit, ob.label))
    name, l0 = table.source
    return ExtensionData(tuple(objs + new), source=(name, l0 + other.source[1]))


def extend(G, l: int, check: bool = True) -> ExtensionData:
    """Objects of the minimal modular extension obtained by stacking ``l`` free fermions.

    ``G`` is a :class:`GradedData` (checked to be a minimal modular extension unless
    ``check`` is false) or a previously built :class:`ExtensionData`.
    """
    if not isinstance(l, int) or l < 0:
        raise InputError(f"l must be a nonnegative integer, got {l!r}")
    if isinstance(G, GradedData):
        if check:
            rep = check_minimal_extension(G)
            if not rep.ok:
                raise StructuralError("input is not a minimal modular extension", report=rep)
        table = object_table(G)
    elif isinstance(G, ExtensionData):
        table = G
        if table.dims[0] != table.dims[1]:
            raise StructuralError("extension data violates the dimension balance")
    else:
        raise InputError("extend expects GradedData or ExtensionData")
    if l == 0:
        return table
    fermions = object_table(ising_like(l))
    fermions = ExtensionData(fermions.objects, source=("F", l))
    return stack(table, fermions)


@dataclass
class SixteenRow:
    l: int
    gauss: Scalar
    dims: tuple
    count: int
    profile: StabilityProfile


def sixteen_table(G: GradedData) -> list[SixteenRow]:
    """Gauss sums of the sixteen extensions ``l = 0..15``; raises unless pairwise distinct."""
    rep = check_minimal_extension(G)
    if not rep.ok:
        raise StructuralError("input is not a minimal modular extension", report=rep)
    rows = []
    for l in range(16):
        ext = extend(G, l, check=False)
        rows.append(SixteenRow(l, ext.gauss, ext.dims, len(ext.objects), ext.profile))
    base = gauss_sum(G.base, 1)
    for row in rows:
        if row.gauss != root_of_unity(row.l, 16) * base:
            raise StructuralError(f"Gauss sum at l={row.l} is not exp(2 pi i l/16) times the base one")
    for i in range(16):
        for j in range(i):
            if rows[i].gauss == rows[j].gauss:
                raise StructuralError(f"extensions l={j} and l={i} share the Gauss sum {rows[i].gauss}")
    return rows


def predicted_profile(G, l: int) -> StabilityProfile:
    """Twisted-sector profile of ``extend(G, l)`` from the profile calculus alone."""
    table = object_table(G) if isinstance(G, GradedData) else G
    if l == 0:
        return table.profile
    return twisted_product_profile(table.profile, object_table(ising_like(l)).profile)


def same_multiset(a, b) -> bool:
    """Exact multiset equality of tuples that contain unhashable scalars."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    remaining = list(b)
    for item in a:
        for i, other in enumerate(remaining):
            if item == other:
                del remaining[i]
                break
        else:
            return False
    return True
