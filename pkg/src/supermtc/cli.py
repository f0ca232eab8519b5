"""``mtc`` command line.

Exit status: 0 success, 1 a check failed, 2 bad input (flags, files, arguments).
"""

from __future__ import annotations

import argparse
import platform
import sys
from pathlib import Path

from . import catalog, io
from .characters import character_vector, check_s_transform, check_t_transform, parse_tau
from .errors import InputError, NotModularError, StructuralError
from .extension import extend, sixteen_table
from .family import ising_like
from .fermionic import (
    assemble_super_s,
    centralizer,
    check_minimal_extension,
    check_supermodular,
    find_fermions,
    sector_grading,
)
from .modular import gauss_sum, global_dim, validate, verlinde_fusion
from .superalg import StabilityProfile, SuperAlgType, tensor_type, twisted_product_profile


def _load(name: str) -> io.MtcFile:
    path = Path(name)
    if path.exists():
        return io.read(path)
    entry = catalog.lookup(name)
    if entry is None:
        raise io.ParseError(f"{name}: no such file or catalog entry")
    if not entry.verify():
        raise io.ParseError(f"{entry.path}: checksum does not match the catalog index")
    return io.read(entry.path)


def _load_exact(name: str) -> io.MtcFile:
    f = _load(name)
    if not f.data.exact:
        raise InputError(f"{name}: float scalars are not accepted by exact checks")
    return f


def _fmt(x) -> str:
    z = x.to_complex()
    return f"{x}  ~ {z.real:.10f}{z.imag:+.10f}i"


def _emit_report(title, rep):
    print(f"== {title}")
    print(rep.text())
    return rep.ok


def cmd_check(args):
    f = _load_exact(args.file)
    M = f.data
    ok = _emit_report(f"validate {M.name or args.file} (rank {M.rank})", validate(M))
    if f.fermion is not None:
        if M.index(f.fermion) not in find_fermions(M):
            print(f"FAIL  stored fermion {f.fermion} is not a fermion")
            return 1
        try:
            G = sector_grading(M, M.index(f.fermion))
        except StructuralError as exc:
            print(f"FAIL  grading by {f.fermion}: {exc}")
            return 1
        if f.grading is not None:
            same = all(G.sector[M.index(k)] == v for k, v in f.grading.items())
            print(f"{'PASS' if same else 'FAIL'}  stored grading agrees with the centralizer")
            ok = ok and same
        ok = _emit_report(f"minimal modular extension over fermion {f.fermion}", check_minimal_extension(G)) and ok
        try:
            blocks = assemble_super_s(G)
        except StructuralError as exc:
            print(f"FAIL  super S blocks: {exc}")
            return 1
        ok = _emit_report("super S-matrix blocks", blocks.report) and ok
    return 0 if ok else 1


def cmd_fusion(args):
    M = _load_exact(args.file).data
    N = verlinde_fusion(M)
    L = M.labels
    for a in range(M.rank):
        for b in range(a, M.rank):
            terms = [(f"{N[a, b, c]}*" if N[a, b, c] > 1 else "") + L[c] for c in N.products(a, b)]
            print(f"{L[a]} x {L[b]} = {' + '.join(terms)}")
    return 0


def cmd_fermions(args):
    M = _load_exact(args.file).data
    found = find_fermions(M)
    print(" ".join(M.labels[f] for f in found) if found else "(none)")
    return 0


def cmd_centralizer(args):
    M = _load_exact(args.file).data
    D = [M.index(x.strip()) for x in args.of.split(",") if x.strip()]
    print(" ".join(M.labels[x] for x in centralizer(M, D)))
    return 0


def cmd_supermodular(args):
    M = _load_exact(args.file).data
    G = sector_grading(M, M.index(args.fermion))
    print("sector 0: " + " ".join(M.labels[x] for x in G.sector_labels(0)))
    print("sector 1: " + " ".join(M.labels[x] for x in G.sector_labels(1)))
    ok = _emit_report("super-modular sector 0", check_supermodular(G))
    ok = _emit_report("minimal modular extension", check_minimal_extension(G)) and ok
    return 0 if ok else 1


def cmd_gauss(args):
    M = _load(args.file).data
    print(_fmt(gauss_sum(M, args.degree)) if M.exact else str(gauss_sum(M, args.degree)))
    return 0


def cmd_ising(args):
    G = ising_like(args.l)
    M = G.base
    print(f"F_{args.l}: rank {M.rank}")
    for i, label in enumerate(M.labels):
        kind = "q" if i in G.q_type else ("m" if any(i in p for p in G.m_pairs) else "s0")
        print(f"  {label:6s} sector {G.sector[i]} {kind:2s} dim {M.dims[i]}  twist {M.twists[i]}")
    print(f"global dimension {global_dim(M)}")
    print(f"Gauss sum {_fmt(gauss_sum(M))}")
    rep = validate(M)
    ok = _emit_report("validate", rep)
    if args.emit:
        Path(args.emit).write_text(io.dumps_graded(G), encoding="utf-8")
        print(f"wrote {args.emit}")
    return 0 if ok else 1


def _graded(args):
    f = _load_exact(args.file)
    M = f.data
    return sector_grading(M, M.index(args.fermion))


def cmd_extend(args):
    G = _graded(args)
    ext = extend(G, args.l)
    print(f"extension of {G.base.name or args.file} by l={args.l}")
    for ob in ext.objects:
        print(f"  {ob.label:20s} sector {ob.sector} {ob.kind:2s} dim {ob.dim}  twist {ob.twist}")
    print(f"dims sector0 {ext.dims[0]} sector1 {ext.dims[1]}")
    print(f"Gauss sum {_fmt(ext.gauss)}")
    if args.emit:
        Path(args.emit).write_text(io.dumps_extension(ext), encoding="utf-8")
        print(f"wrote {args.emit}")
    return 0


def cmd_sixteen(args):
    G = _graded(args)
    try:
        rows = sixteen_table(G)
    except StructuralError as exc:
        print(f"FAIL  {exc}")
        return 1
    print(f"{'l':>3}  {'objects':>7}  {'profile':>7}  Gauss sum")
    for r in rows:
        print(f"{r.l:>3}  {r.count:>7}  {str(r.profile):>7}  {_fmt(r.gauss)}")
    print("PASS  16 pairwise distinct Gauss sums")
    return 0


def cmd_chars(args):
    tau = parse_tau(args.tau)
    vec = character_vector(args.l, tau, args.terms)
    M = ising_like(args.l).base
    for label, v in zip(M.labels, vec):
        print(f"chi[{label}] = {v.real:.12g}{v.imag:+.12g}i")
    if not args.check_s:
        return 0
    reports = check_s_transform(args.l, tau, args.terms, args.tol)
    reports.append(check_t_transform(args.l, tau, args.terms, args.tol))
    for r in reports:
        print(r.line())
    return 0 if all(r.passed for r in reports) else 1


def cmd_superalg(args):
    if args.op == "tensor":
        if not (args.a and args.b):
            raise InputError("--op tensor needs --a and --b")
        a, b = SuperAlgType.parse(args.a), SuperAlgType.parse(args.b)
        print(f"{a} (x) {b} = {tensor_type(a, b)}")
    else:
        if not (args.u and args.v):
            raise InputError("--op profile needs --u and --v")
        u, v = StabilityProfile.parse(args.u), StabilityProfile.parse(args.v)
        print(f"({u}) (x) ({v}) = ({twisted_product_profile(u, v)})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mtc", description="Fermionic modular data and the 16-fold way.")
    p.add_argument("--verbose", action="store_true", help="prefix reports with environment info")
    sub = p.add_subparsers(dest="command", required=True)

    def file_cmd(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("file", help="mtc-data file or catalog name (e.g. F_1)")
        s.set_defaults(func=func)
        return s

    file_cmd("check", cmd_check, "validate modular data (and its grading, if present)")
    file_cmd("fusion", cmd_fusion, "print Verlinde fusion rules")
    file_cmd("fermions", cmd_fermions, "list fermions")
    s = file_cmd("centralizer", cmd_centralizer, "Mueger centralizer of a set of labels")
    s.add_argument("--of", required=True)
    s = file_cmd("supermodular", cmd_supermodular, "grade by a fermion and check super-modularity")
    s.add_argument("--fermion", required=True)
    s = file_cmd("gauss", cmd_gauss, "Gauss sum")
    s.add_argument("--degree", type=int, default=1)
    s = sub.add_parser("ising", help="construct F_l")
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--emit")
    s.set_defaults(func=cmd_ising)
    s = file_cmd("extend", cmd_extend, "stack l free fermions onto a graded category")
    s.add_argument("--fermion", required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--emit")
    s = file_cmd("sixteen", cmd_sixteen, "Gauss sums of the sixteen minimal extensions")
    s.add_argument("--fermion", required=True)
    s = sub.add_parser("chars", help="free-fermion characters and modular checks")
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--tau", required=True)
    s.add_argument("--terms", type=int, default=400)
    s.add_argument("--check-s", action="store_true")
    s.add_argument("--tol", type=float, default=1e-8)
    s.set_defaults(func=cmd_chars)
    s = sub.add_parser("superalg", help="superalgebra types and stability profiles")
    s.add_argument("--op", choices=["tensor", "profile"], required=True)
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--u")
    s.add_argument("--v")
    s.set_defaults(func=cmd_superalg)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.verbose:
        print(f"# python {platform.python_version()} on {platform.platform()}")
    try:
        return args.func(args)
    except (StructuralError, NotModularError) as exc:
        print(f"FAIL  {exc}")
        return 1
    except (InputError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
