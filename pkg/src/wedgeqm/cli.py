"""Command-line interface.

Subcommands: ``eval``, ``ladder``, ``spectrum``, ``spheroidal``,
``interbasis``, ``verify`` and ``sample-grid``.  Output is JSON (sorted
keys, compact separators, shortest round-trip floats) or, for
``sample-grid``, CSV with header ``chart,c1,c2,c3,psi``.

Exit codes: 0 success, 1 ``verify`` found a failing suite, 2 usage,
validation or I/O error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import interbasis, ladders, spheroidal, states, verify

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

CHART_KEYS = {
    "cartesian": ("x", "y", "z"),
    "cylindrical": ("rho", "phi", "z"),
    "spherical": ("r", "theta", "phi"),
    "parabolic": ("xi", "eta", "phi"),
    "prolate": ("u", "v", "phi"),
}
_CHART_CLASS = {
    "cartesian": states.Cartesian,
    "cylindrical": states.Cylindrical,
    "spherical": states.Spherical,
    "parabolic": states.Parabolic,
}


class UsageError(ValueError):
    pass


# -- emitting ------------------------------------------------------------------------

def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        if not math.isfinite(x):
            raise ArithmeticError(f"non-finite value {x} in output")
        return x
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def emit_json(obj) -> str:
    """Deterministic JSON text; floats use their shortest round-trip repr."""
    return json.dumps(_plain(obj), sort_keys=True, separators=(",", ":")) + "\n"


def emit_csv(rows, header=("chart", "c1", "c2", "c3", "psi")) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(float(x)) if isinstance(x, (float, np.floating)) else x for x in row])
    return buf.getvalue()


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# -- parsing helpers ---------------------------------------------------------------------

def _load_state(arg: str):
    text = arg
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"state is not valid JSON: {exc}") from None
    return states.state_from_json(obj)


def _parse_point(spec: str, f: float | None):
    try:
        pairs = dict(item.split("=", 1) for item in spec.split(","))
        vals = {k.strip(): float(v) for k, v in pairs.items()}
    except ValueError:
        raise UsageError(f"bad point {spec!r}; expected name=value,...") from None
    for chart, keys in CHART_KEYS.items():
        if set(keys) == set(vals) - {"f", "z_shift"}:
            if chart == "prolate":
                ff = vals.get("f", f)
                if ff is None:
                    raise UsageError("prolate points need f")
                return chart, states.ProlateSpheroidal(vals["u"], vals["v"], vals["phi"], ff,
                                                       vals.get("z_shift", ff))
            return chart, _CHART_CLASS[chart](*(vals[k] for k in keys))
    raise UsageError(f"cannot infer chart from keys {sorted(vals)}")


def _mode(args) -> states.AngularMode:
    if args.mu is not None:
        if args.phi0 is not None:
            raise UsageError("give either --mu or --n-phi/--phi0")
        return states.AngularMode.from_mu(args.mu)
    if args.phi0 is None:
        raise UsageError("need --mu or --phi0 (with optional --n-phi)")
    return states.AngularMode(args.n_phi, args.phi0)


def _add_mode(p):
    p.add_argument("--mu", type=float, help="non-integer magnetic number (abstract mode)")
    p.add_argument("--n-phi", type=int, default=1, help="wedge mode number (default 1)")
    p.add_argument("--phi0", type=float, help="wedge opening angle in radians")


def _range(text: str):
    try:
        a, b, n = text.split(":")
        return np.linspace(float(a), float(b), int(n))
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected start:stop:count") from None


# -- subcommands ---------------------------------------------------------------------------

def cmd_eval(args):
    state = _load_state(args.state)
    f = getattr(state, "f", None)
    _, point = _parse_point(args.at, f)
    psi = states.eval_eigenfunction(state, point, args.normalization)
    return emit_json({"state": states.state_to_json(state), "at": args.at,
                      "normalization": args.normalization, "psi": psi})


def cmd_ladder(args):
    state = _load_state(args.state)
    nxt, scalar = ladders.apply_ladder(state, args.dof, args.direction)
    out = {"from": states.state_to_json(state), "dof": args.dof, "direction": args.direction,
           "scalar": scalar, "annihilated": nxt is None}
    if nxt is not None:
        out["to"] = states.state_to_json(nxt)
        out["energy_shift"] = states.energy(nxt) - states.energy(state)
    return emit_json(out)


def cmd_spectrum(args):
    mode = _mode(args)
    members = states.multiplet(args.system, args.family, args.N, mode, args.f)
    return emit_json({"system": states.SYSTEM_ALIASES.get(args.system, args.system),
                      "family": states.FAMILY_ALIASES.get(args.family, args.family), "N": args.N,
                      "mu": mode.mu, "size": len(members),
                      "states": [states.state_to_json(s) for s in members]})


def cmd_spheroidal(args):
    spec = spheroidal.SpheroidalSpec(args.mu, args.f, args.N)
    sols = spheroidal.solve_spheroidal(spec, args.form)
    return emit_json({"mu": spec.mu, "f": spec.f, "N": spec.N, "nu": spec.nu, "form": args.form,
                      "A": [s.A for s in sols], "c": [list(s.coeffs) for s in sols],
                      "n_u": [s.n_u for s in sols], "n_v": [s.n_v for s in sols]})


PAIRS = {
    ("osc", "cyl-sph"): "osc",
    ("hydrogen", "sph-par"): "par",
    ("hydrogen", "sph-spheroidal"): "spheroidal",
}


def cmd_interbasis(args):
    mode = _mode(args)
    system = states.SYSTEM_ALIASES.get(args.system, args.system)
    kind = PAIRS.get((system, args.pair))
    if kind is None:
        raise UsageError(f"unsupported pair {args.pair!r} for system {args.system!r}; "
                         f"choose from {sorted(p for s, p in PAIRS if s == system)}")
    if kind == "osc":
        m = interbasis.osc_interbasis_matrix(args.N, mode)
        if args.numeric:
            m = interbasis.numeric_overlap_matrix(m.from_basis, m.to_basis)
    elif kind == "par":
        m = interbasis.hydrogen_sph_par_matrix(args.N, mode)
        if args.numeric:
            m = interbasis.numeric_overlap_matrix(m.from_basis, m.to_basis)
    else:
        if args.f is None:
            raise UsageError("sph-spheroidal needs --f")
        m = interbasis.hydrogen_sph_spheroidal_matrix(args.N, mode, args.f)
    return emit_json(m.as_dict())


def cmd_sample_grid(args):
    state = _load_state(args.state)
    chart = args.chart
    c1, c2, c3 = _range(args.c1), _range(args.c2), _range(args.c3)
    rows = []
    if len(c1) and len(c2) and len(c3):
        g1, g2, g3 = np.meshgrid(c1, c2, c3, indexing="ij")
        g1, g2, g3 = g1.ravel(), g2.ravel(), g3.ravel()
        if chart == "prolate":
            f = args.f if args.f is not None else getattr(state, "f", None)
            if f is None:
                raise UsageError("prolate grids need --f")
            z_shift = args.z_shift if args.z_shift is not None else f
            pts = states.ProlateSpheroidal(g1, g2, g3, f, z_shift)
        else:
            pts = _CHART_CLASS[chart](g1, g2, g3)
        psi = np.atleast_1d(states.eval_eigenfunction(state, pts, args.normalization))
        rows = [(chart, a, b, c, p) for a, b, c, p in zip(g1, g2, g3, psi)]
    return emit_csv(rows)


def cmd_verify(args):
    results = verify.run_all()
    return emit_json(verify.report(results)), all(r.passed for r in results)


# -- entry point ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wedgeqm", description="Oscillator and hydrogen eigenstates in a dihedral wedge.")
    sub = p.add_subparsers(dest="command", required=True)
    state_help = "state as inline JSON or @file"

    e = sub.add_parser("eval", help="evaluate an eigenfunction at one point")
    e.add_argument("--state", required=True, help=state_help)
    e.add_argument("--at", required=True, help="point, e.g. rho=1,phi=1,z=0")
    e.add_argument("--normalization", choices=("polynomial", "unit", "table6"), default="polynomial")
    e.set_defaults(func=cmd_eval)

    l = sub.add_parser("ladder", help="apply a raising or lowering operator")
    l.add_argument("--state", required=True, help=state_help)
    l.add_argument("--dof", required=True,
                   choices=("angular", "radial", "axial", "polar", "xi", "eta", "spheroidal"))
    l.add_argument("--direction", required=True, choices=("raise", "lower"))
    l.set_defaults(func=cmd_ladder)

    s = sub.add_parser("spectrum", help="list a degenerate multiplet with energies")
    s.add_argument("--system", required=True, choices=sorted(states.SYSTEM_ALIASES))
    s.add_argument("--family", required=True, choices=sorted(states.FAMILY_ALIASES))
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--f", type=float, help="focal distance for spheroidal multiplets")
    _add_mode(s)
    s.set_defaults(func=cmd_spectrum)

    h = sub.add_parser("spheroidal", help="separation constants and coefficients")
    h.add_argument("--mu", type=float, required=True)
    h.add_argument("--f", type=float, required=True)
    h.add_argument("--N", type=int, required=True)
    h.add_argument("--form", choices=spheroidal.FORMS, default="ode")
    h.set_defaults(func=cmd_spheroidal)

    i = sub.add_parser("interbasis", help="transformation matrix between multiplets")
    i.add_argument("--system", required=True, choices=sorted(states.SYSTEM_ALIASES))
    i.add_argument("--pair", required=True, choices=sorted({p for _, p in PAIRS}))
    i.add_argument("--N", type=int, required=True)
    i.add_argument("--f", type=float)
    i.add_argument("--numeric", action="store_true", help="least-squares matrix instead of the closed form")
    _add_mode(i)
    i.set_defaults(func=cmd_interbasis)

    v = sub.add_parser("verify", help="run the invariant suites (WEDGE_TOL overrides tolerances)")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("sample-grid", help="evaluate a state on a tensor grid, CSV output")
    g.add_argument("--state", required=True, help=state_help)
    g.add_argument("--chart", required=True, choices=("cartesian", "cylindrical", "spherical", "parabolic", "prolate"))
    g.add_argument("--c1", required=True, help="start:stop:count")
    g.add_argument("--c2", required=True, help="start:stop:count")
    g.add_argument("--c3", required=True, help="start:stop:count")
    g.add_argument("--f", type=float, help="focal distance for prolate grids")
    g.add_argument("--z-shift", type=float, help="prolate centre offset (default f)")
    g.add_argument("--normalization", choices=("polynomial", "unit", "table6"), default="polynomial")
    g.set_defaults(func=cmd_sample_grid)

    for sp_ in (e, l, s, h, i, v, g):
        sp_.add_argument("--output", "-o", help="write to this path instead of stdout")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
        ok = True
        if isinstance(out, tuple):
            out, ok = out
        _write(out, args.output)
    except (ValueError, TypeError, OSError) as exc:
        print(f"wedgeqm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"wedgeqm: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK if ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
