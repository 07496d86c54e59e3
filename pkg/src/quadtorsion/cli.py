"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 unsupported hypothesis,
4 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import InvalidInput, ResourceCapExceeded, UnsupportedCase

TABLE1_MS = (1, 2, 7, 11, 19)
TABLE1_OUT_OF_HYPOTHESIS = (5, 15)
OUT_OF_HYPOTHESIS_STATUS = "machine-only (published computation); formula hypotheses violated"


def _emit(obj, fmt, text_lines, out):
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def cmd_table1(args, out):
    from .reiner import conjugacy_decomposition

    rows = []
    for m in TABLE1_MS:
        cc = conjugacy_decomposition(m, cap=args.cap)
        rows.append({"m": m, "lambda": cc.lam, "mu": cc.mu, "c": cc.c, "h": cc.h,
                     "provenance": "formula path", "status": "ok"})
    for m in TABLE1_OUT_OF_HYPOTHESIS:
        rows.append({"m": m, "lambda": None, "mu": None, "c": None, "h": None,
                     "provenance": "none", "status": OUT_OF_HYPOTHESIS_STATUS})
    lines = [f"{'m':>3} {'lambda':>6} {'mu':>4}  provenance"]
    for r in rows:
        if r["status"] == "ok":
            lines.append(f"{r['m']:>3} {r['lambda']:>6} {r['mu']:>4}  {r['provenance']} (c={r['c']}, h={r['h']})")
        else:
            lines.append(f"{r['m']:>3} {'-':>6} {'-':>4}  {r['status']}")
    _emit({"rows": rows}, args.format, lines, out)


def cmd_report(args, out):
    from .cohomology import assemble_report

    rep = assemble_report(args.m, args.ell, args.field, tuple(args.degrees))
    obj = rep.to_json()
    lines = [f"ring {rep.ring}, l = {rep.ell}: lambda = {rep.lam}, mu = {rep.mu}"]
    for c in rep.components:
        lines.append(f"  {c.multiplicity} x {c.group} [{c.kind}]  series {c.series.format()}"
                     + (f"  generators in degrees {c.generator_degrees}" if c.generator_degrees else ""))
    lines.append(f"  total series {rep.series.format()}")
    lines.append("  dims " + " ".join(f"{d}:{n}" for d, n in rep.dims))
    lines += [f"  note: {n}" for n in rep.notes]
    _emit(obj, args.format, lines, out)


def cmd_series(args, out):
    from .cohomology import (cyclic_model, dihedral_model, invariant_dimension, series_from_model,
                             seven_torsion_model, tate_dimension)

    models = {
        "cyclic": (cyclic_model(args.ell, args.rank), False),
        "involution": (dihedral_model(args.ell, args.rank, True), True),
        "involution-real": (dihedral_model(args.ell, args.rank, False), True),
        "seven": (seven_torsion_model(), True),
    }
    model, inv = models[args.model]
    s = series_from_model(model, inv)
    lo, hi = args.degrees
    dim = invariant_dimension if inv else tate_dimension
    dims = [[d, dim(model, d)] for d in range(lo, hi + 1)]
    obj = {"model": args.model, "series": s.to_json(), "dims": dims}
    _emit(obj, args.format, [s.format(), " ".join(f"{d}:{n}" for d, n in dims)], out)


def cmd_orbits(args, out):
    from .units import orbit_count

    dec = orbit_count(args.m)
    orbits = [[str(r) for r in orb] for orb in dec.orbits]
    lines = [f"O_-{args.m}: {dec.count} orbits"] + ["  {" + ", ".join(o) + "}" for o in orbits]
    _emit({"m": args.m, "count": dec.count, "orbits": orbits}, args.format, lines, out)


def cmd_units(args, out):
    from .units import fundamental_unit_quartic, is_fundamental_certified, reduction_image

    data = fundamental_unit_quartic(args.m)
    img = reduction_image(args.m)
    obj = {
        "m": args.m,
        "torsion_order": data.torsion_order,
        "fundamental_unit": str(data.fundamental),
        "real_unit": str(data.real_unit),
        "hasse_index": data.hasse_index,
        "certified": is_fundamental_certified(data),
        "image": [str(r) for r in img.subgroup],
        "image_generators": [str(r) for r in img.generators],
        "image_full": img.is_full(),
        "residue_ring": img.kind,
    }
    lines = [f"{k}: {v}" for k, v in obj.items()]
    _emit(obj, args.format, lines, out)


def cmd_classgroup(args, out):
    from .ideals import class_group, galois_orbit_counts

    cg = class_group(args.m, args.cap)
    h_mu, h_lam = galois_orbit_counts(cg)
    obj = {
        "m": args.m,
        "h": cg.order_h,
        "h_mu": h_mu,
        "h_lambda": h_lam,
        "law": [list(r) for r in cg.law],
        "sigma_action": list(cg.sigma_action),
        "reps": [{"norm": R.norm, "basis": [list(b) for b in R.basis]} for R in cg.reps],
    }
    lines = [f"O_-{args.m}[zeta_3]: h = {cg.order_h}, (h_mu, h_lambda) = ({h_mu}, {h_lam})",
             f"sigma acts as {list(cg.sigma_action)}"]
    lines += [f"  class {i}: norm {R.norm}, basis {[list(b) for b in R.basis]}" for i, R in enumerate(cg.reps)]
    _emit(obj, args.format, lines, out)


def cmd_matrix_gen(args, out):
    from .quadring import make_order
    from .reiner import build_matrix_nonprincipal, format_matrices, principal_representatives

    if args.family == "principal":
        mats = principal_representatives(args.m)
    else:
        if args.m != 5:
            raise UnsupportedCase("the nonprincipal family is defined for m=5 only")
        o = make_order(-5)
        x, a, b = (o(*map(int, p.split(","))) for p in args.params)
        mats = [build_matrix_nonprincipal(x, a, b)]
    out.write(format_matrices(args.m, mats))


def cmd_matrix_classify(args, out):
    from .reiner import brute_force_conjugate, compute_invariants, parse_matrices

    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    m, mats = parse_matrices(text)
    invs = [compute_invariants(A, allow_partial=True, cap=args.cap) for A in mats]
    n = len(mats)
    verdicts = []
    for i in range(n):
        for j in range(i + 1, n):
            a, b = invs[i], invs[j]
            if a.c_orbit is None or b.c_orbit is None:
                v = "unknown" if a.det_class == b.det_class else "not conjugate"
            else:
                v = "conjugate" if a == b else "not conjugate"
            entry = {"i": i, "j": j, "invariants": v}
            if args.oracle:
                P = brute_force_conjugate(mats[i], mats[j], args.height)
                entry["oracle"] = "conjugate" if P is not None else f"none at height <= {args.height}"
            verdicts.append(entry)
    obj = {
        "m": m,
        "invariants": [{"r": x.r, "s": x.s, "det_class": x.det_class,
                        "c_orbit": None if x.c_orbit is None else str(x.c_orbit)} for x in invs],
        "pairs": verdicts,
        "distinct": len({(x.det_class, x.c_orbit) for x in invs}),
    }
    lines = [f"{i}: {x.label()}" for i, x in enumerate(invs)]
    lines += [f"{v['i']} ~ {v['j']}: {v['invariants']}" + (f" (oracle: {v['oracle']})" if "oracle" in v else "")
              for v in verdicts]
    lines.append(f"{obj['distinct']} distinct invariant tuples")
    _emit(obj, args.format, lines, out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quadtorsion",
                                description="Torsion in PGL_3 over quadratic rings: counts, invariants, cohomology")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_m=True):
        if need_m:
            sp.add_argument("--m", type=int, required=True, help="squarefree m > 0 (base ring O_-m)")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--cap", type=int, default=200, help="cap on the Minkowski bound")

    sp = sub.add_parser("table1", help="(lambda, mu) for m = 1, 2, 7, 11, 19")
    common(sp, False)
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("report", help="cohomology report for a ring and prime")
    common(sp, False)
    sp.add_argument("--m", type=int)
    sp.add_argument("--field", help="sqrt5, sqrt-7, sqrt2, ... instead of --m")
    sp.add_argument("--ell", type=int, default=3)
    sp.add_argument("--degrees", type=int, nargs=2, default=[-4, 12], metavar=("LO", "HI"))
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("series", help="Hilbert-Poincare series of a monomial model")
    common(sp, False)
    sp.add_argument("--model", choices=["cyclic", "involution", "involution-real", "seven"], default="involution")
    sp.add_argument("--ell", type=int, default=3)
    sp.add_argument("--rank", type=int, default=1)
    sp.add_argument("--degrees", type=int, nargs=2, default=[0, 12], metavar=("LO", "HI"))
    sp.set_defaults(func=cmd_series)

    for name, func, hlp in (("orbits", cmd_orbits, "unit orbits on O/(3)"),
                            ("units", cmd_units, "unit group of O_-m[zeta_3] and its image mod 3"),
                            ("classgroup", cmd_classgroup, "class group of O_-m[zeta_3] with Galois action")):
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("matrix-gen", help="write order-3 matrices in the exchange format")
    common(sp)
    sp.add_argument("--family", choices=["principal", "nonprincipal"], default="principal")
    sp.add_argument("--params", nargs=3, default=["0,0", "0,0", "0,0"], metavar="A,B",
                    help="x a b for the nonprincipal family, each as a,b meaning a+b*w")
    sp.set_defaults(func=cmd_matrix_gen)

    sp = sub.add_parser("matrix-classify", help="invariants and conjugacy verdicts for matrices")
    common(sp, False)
    sp.add_argument("input", nargs="?", default="-", help="file in the exchange format, - for stdin")
    sp.add_argument("--oracle", action="store_true", help="also run the brute-force conjugacy search")
    sp.add_argument("--height", type=int, default=2, help="conjugator height for --oracle")
    sp.set_defaults(func=cmd_matrix_classify)
    return p


def validate(args):
    if getattr(args, "m", None) is not None and args.m <= 0:
        raise InvalidInput("--m must be positive")
    if getattr(args, "ell", 3) not in (2, 3, 5, 7, 11, 13):
        raise InvalidInput("--ell must be a small prime")
    if getattr(args, "height", 1) <= 0 or args.cap <= 0:
        raise InvalidInput("bounds must be positive")
    if hasattr(args, "degrees") and args.degrees[0] > args.degrees[1]:
        raise InvalidInput("empty degree range")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        validate(args)
        args.func(args, out)
    except InvalidInput as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return 2
    except UnsupportedCase as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return 3
    except ResourceCapExceeded as e:
        print(f"resource cap exceeded: {e}", file=sys.stderr)
        return 4
    except OSError as e:
        print(f"invalid input: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
