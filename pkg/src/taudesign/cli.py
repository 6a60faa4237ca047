"""Command line entry point: ``taudesign <command> ...``.

Exit status is 0 when the requested verification passes (or the command is
informational), 1 when it fails or a numerical consistency check trips, and
2 on bad usage.
"""

import argparse
import json
import sys

from . import design, invariants, spherical
from .group import (
    GroupElement,
    GroupNotFiniteError,
    X0,
    binary_icosahedral_group,
    coset_representatives,
    dump_group,
    generate_closure,
    icosahedral_generators,
    stabilizer,
    trivial_group,
)
from .linalg import (
    ModelConsistencyError,
    NumericalConsistencyError,
    PreconditionError,
    TolerancePolicy,
)

GROUPS = ("icosa", "trivial", "pm", "u")


def make_group(name: str, eps_index: int, pol: TolerancePolicy):
    if name == "icosa":
        return binary_icosahedral_group(eps_index, pol)
    if name == "trivial":
        return trivial_group(pol)
    if name == "pm":
        return generate_closure([-GroupElement([[1, 0], [0, 1]])], pol=pol)
    if name == "u":
        return generate_closure([icosahedral_generators(eps_index)[2]], pol=pol)
    raise ValueError(name)


def _emit(payload, path):
    text = json.dumps(payload, indent=2)
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def cmd_group(args, pol):
    grp = make_group(args.group, args.eps_index, pol)
    text = _emit(dump_group(grp), args.json)
    if not args.json or args.json == "-":
        print(text)
    else:
        print(f"wrote {grp.order} elements to {args.json}")
    return 0


def cmd_molien(args, pol):
    grp = make_group(args.group, args.eps_index, pol)
    coeffs = invariants.molien_series(grp, args.max_degree)
    payload = {"group": args.group, "order": grp.order, "coefficients": coeffs}
    if args.group == "icosa":
        payload["closed_form"] = invariants.closed_form_icosahedral(args.max_degree)
    print(_emit(payload, args.json))
    return 0


def cmd_homdims(args, pol):
    grp = make_group(args.group, args.eps_index, pol)
    dims = invariants.hom_dimensions_into_lowest(grp, args.kmax)
    print(_emit({"group": args.group, "kmax": args.kmax, "hom_dimensions": dims}, args.json))
    return 0


def cmd_design(args, pol):
    grp = binary_icosahedral_group(args.eps_index, pol)
    stab = stabilizer(grp, X0)
    reps = coset_representatives(grp, stab)
    pair = design.LocalDesignPair.single(X0, 1.0)
    if args.reduced:
        op = design.coset_reduced_operator(grp, stab, reps, pair)
    else:
        op = design.orbit_average(grp, pair)
    report = design.verify_tau_design(op, pol=pol)
    payload = report.to_json(
        group_order=grp.order, stabilizer_order=stab.order, coset_count=len(reps)
    )
    if args.json == "-":
        print(_emit(payload, None))
    else:
        _emit(payload, args.json)
        route = "12-point coset sum" if args.reduced else "120-term orbit average"
        print(f"projection design on the section model ({route}, eps_index={args.eps_index})")
        print(f"group order {grp.order}, stabilizer order {stab.order}, {len(reps)} cosets")
        for line in report.lines():
            print(line)
    return 0 if report.verdict else 1


def cmd_spherical(args, pol):
    if args.points:
        X = spherical.SpherePointSet.from_csv(args.points)
    else:
        X = spherical.icosahedron_vertices()
    devs = spherical.design_deviations(X, args.t)
    ok = all(d < pol.eq_tol for d in devs.values())
    payload = {
        "n": X.n,
        "num_points": len(X),
        "t": args.t,
        "max_deviation": max(devs.values()),
        "verdict": ok,
    }
    print(_emit(payload, args.json))
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="taudesign", description="Finite designs for operators on SU(2) section spaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        p.add_argument("--eps-index", type=int, default=1, choices=[1, 2, 3, 4])
        p.add_argument("--tol", type=float, default=None, help="equality tolerance")
        p.add_argument("--json", metavar="PATH", default=None, help="JSON output path ('-' for stdout)")
        if group:
            p.add_argument("--group", choices=GROUPS, default="icosa")

    g = sub.add_parser("group", help="group utilities")
    gsub = g.add_subparsers(dest="action", required=True)
    common(gsub.add_parser("dump", help="print all elements as JSON"))
    g.set_defaults(func=cmd_group)

    m = sub.add_parser("molien", help="Molien series coefficients")
    common(m)
    m.add_argument("--max-degree", type=int, default=24)
    m.set_defaults(func=cmd_molien)

    h = sub.add_parser("homdims", help="dim Hom_G(S^(2k-1), S^1) for k = 1..kmax")
    common(h)
    h.add_argument("--kmax", type=int, default=5)
    h.set_defaults(func=cmd_homdims)

    d = sub.add_parser("design", help="projection design on the section model")
    dsub = d.add_subparsers(dest="action", required=True)
    dv = dsub.add_parser("verify")
    common(dv, group=False)
    dv.add_argument("--reduced", action="store_true", help="use the 12 coset representatives")
    d.set_defaults(func=cmd_design)

    s = sub.add_parser("spherical", help="spherical t-design check")
    ssub = s.add_subparsers(dest="action", required=True)
    sv = ssub.add_parser("verify")
    common(sv, group=False)
    sv.add_argument("--points", default=None, help="headerless CSV, one point per row")
    sv.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_spherical)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        pol = TolerancePolicy.from_env(eq_tol=args.tol)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        return args.func(args, pol)
    except (
        NumericalConsistencyError,
        ModelConsistencyError,
        PreconditionError,
        GroupNotFiniteError,
    ) as exc:
        print(f"taudesign: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"taudesign: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
