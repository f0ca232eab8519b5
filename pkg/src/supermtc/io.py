"""The ``mtc-data/1`` JSON file format.

Top-level keys: ``format``, ``name``, ``cyclotomic_order`` N, ``labels``, ``unit``, ``S``,
``twists``, and optionally ``fusion`` (``[a][b][c]``), ``fermion`` and ``grading``.  A scalar
is ``{"c": [[p, q], ...]}`` with exactly N ``[numerator, denominator]`` pairs giving the
coefficients of ``zeta_N^k``, or ``{"re": x, "im": y}`` for float data.  S is stored in
its unitary normalization with a positive unit row.  When a grading is present, super
S-matrix blocks are ordered sector-0 orbits, then q-type objects, then m-type pairs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import InputError
from .fermionic import GradedData
from .modular import ModularData
from .scalar import FloatScalar, Scalar

FORMAT = "mtc-data/1"
EXTENSION_FORMAT = "mtc-extension/1"


class ParseError(InputError):
    """A malformed data file; the message carries the location."""


@dataclass
class MtcFile:
    data: ModularData
    fermion: str | None = None
    grading: dict | None = None


def data_order(M: ModularData) -> int:
    orders = [x.order for row in M.S for x in row] + [t.order for t in M.twists]
    return math.lcm(*orders)


def scalar_to_json(x, order: int) -> dict:
    if isinstance(x, FloatScalar):
        return {"re": x.re, "im": x.im}
    coeffs = x.embed(order).coeffs
    return {"c": [[c.numerator, c.denominator] for c in coeffs]}


def scalar_from_json(obj, order: int, where: str):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected a scalar object, got {type(obj).__name__}")
    if "c" in obj:
        coeffs = obj["c"]
        if not isinstance(coeffs, list) or len(coeffs) != order:
            raise ParseError(f"{where}: expected exactly {order} coefficient pairs")
        fracs = []
        for k, pair in enumerate(coeffs):
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)
                or pair[1] == 0
            ):
                raise ParseError(f"{where}.c[{k}]: expected [numerator, nonzero denominator]")
            fracs.append(Fraction(pair[0], pair[1]))
        return Scalar(order, fracs)
    if "re" in obj and "im" in obj:
        try:
            return FloatScalar(float(obj["re"]), float(obj["im"]))
        except (TypeError, ValueError):
            raise ParseError(f"{where}: re/im must be numbers") from None
    raise ParseError(f"{where}: scalar needs either 'c' or 're'/'im'")


def to_dict(M: ModularData, fermion: str | None = None, grading: dict | None = None) -> dict:
    n = data_order(M)
    out = {
        "format": FORMAT,
        "name": M.name,
        "cyclotomic_order": n,
        "labels": list(M.labels),
        "unit": M.unit,
        "S": [[scalar_to_json(x, n) for x in row] for row in M.S],
        "twists": [scalar_to_json(t, n) for t in M.twists],
    }
    if M.fusion is not None:
        out["fusion"] = M.fusion.tolist()
    if fermion is not None:
        out["fermion"] = fermion
    if grading is not None:
        out["grading"] = {k: int(v) for k, v in grading.items()}
    return out


def _format(doc: dict) -> str:
    # one key per line, one matrix row per line
    parts = []
    for key, val in doc.items():
        if key in ("S", "fusion", "objects") and val:
            body = "[\n  " + ",\n  ".join(json.dumps(row) for row in val) + "\n ]"
        else:
            body = json.dumps(val)
        parts.append(f" {json.dumps(key)}: {body}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def dumps(M: ModularData, fermion: str | None = None, grading: dict | None = None) -> str:
    return _format(to_dict(M, fermion, grading))


def dumps_extension(ext) -> str:
    return _format(extension_to_dict(ext))


def dumps_graded(G: GradedData) -> str:
    return dumps(G.base, G.base.labels[G.fermion], G.grading)


def _require(doc, key, kind, where):
    if key not in doc:
        raise ParseError(f"{where}: missing key {key!r}")
    val = doc[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise ParseError(f"{where}.{key}: wrong type {type(val).__name__}")
    return val


def loads(text: str, source: str = "<string>") -> MtcFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: top level must be an object")
    if doc.get("format") != FORMAT:
        raise ParseError(f"{source}: format must be {FORMAT!r}, got {doc.get('format')!r}")
    order = _require(doc, "cyclotomic_order", int, source)
    if order < 1:
        raise ParseError(f"{source}.cyclotomic_order: must be positive")
    labels = _require(doc, "labels", list, source)
    if not all(isinstance(x, str) for x in labels):
        raise ParseError(f"{source}.labels: must be strings")
    unit = _require(doc, "unit", int, source)
    rows = _require(doc, "S", list, source)
    if len(rows) != len(labels) or any(not isinstance(r, list) or len(r) != len(labels) for r in rows):
        raise ParseError(f"{source}.S: must be {len(labels)} x {len(labels)}")
    S = [
        [scalar_from_json(x, order, f"{source}.S[{i}][{j}]") for j, x in enumerate(row)]
        for i, row in enumerate(rows)
    ]
    tw = _require(doc, "twists", list, source)
    if len(tw) != len(labels):
        raise ParseError(f"{source}.twists: expected {len(labels)} entries")
    twists = [scalar_from_json(t, order, f"{source}.twists[{i}]") for i, t in enumerate(tw)]
    fusion = doc.get("fusion")
    if fusion is not None:
        r = len(labels)
        ok = (
            isinstance(fusion, list)
            and len(fusion) == r
            and all(isinstance(a, list) and len(a) == r for a in fusion)
            and all(isinstance(b, list) and len(b) == r for a in fusion for b in a)
            and all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for a in fusion for b in a for c in b)
        )
        if not ok:
            raise ParseError(f"{source}.fusion: must be {r}x{r}x{r} nonnegative integers")
    fermion = doc.get("fermion")
    if fermion is not None and fermion not in labels:
        raise ParseError(f"{source}.fermion: unknown label {fermion!r}")
    grading = doc.get("grading")
    if grading is not None:
        if not isinstance(grading, dict) or any(k not in labels or grading[k] not in (0, 1) for k in grading):
            raise ParseError(f"{source}.grading: must map labels to 0 or 1")
    try:
        M = ModularData(labels, unit, S, twists, fusion, name=str(doc.get("name", "")))
    except InputError as exc:
        raise ParseError(f"{source}: {exc}") from None
    return MtcFile(M, fermion, grading)


def read(path) -> MtcFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None
    return loads(text, str(path))


def write(path, M: ModularData, fermion=None, grading=None):
    Path(path).write_text(dumps(M, fermion, grading), encoding="utf-8")


def extension_to_dict(ext) -> dict:
    orders = [ob.dim.order for ob in ext.objects] + [ob.twist.order for ob in ext.objects]
    n = math.lcm(*orders, ext.gauss.order)
    return {
        "format": EXTENSION_FORMAT,
        "source": {"name": ext.source[0], "l": ext.source[1]},
        "cyclotomic_order": n,
        "objects": [
            {
                "label": ob.label,
                "sector": ob.sector,
                "dim": scalar_to_json(ob.dim, n),
                "twist": scalar_to_json(ob.twist, n),
                "type": ob.kind,
                "orbit": ob.orbit,
            }
            for ob in ext.objects
        ],
        "gauss": scalar_to_json(ext.gauss, n),
    }
