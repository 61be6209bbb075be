"""Batch command-line front end.

Every subcommand prints the library result as deterministic JSON (sorted
keys, two-space indent); with ``--report`` the payload is wrapped in an
envelope carrying the command echo and a digest of the input files.  Exit
codes: 0 success, 1 domain error (JSON error object on stdout), 2 usage
error.  The environment variable QUIVERFORGE_SEED is reserved but ignored:
every computation here is deterministic.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path as FsPath

from . import cluster, hochschild, jacobian, mesh
from .algebra import AlgebraElement, Substitution
from .cy_lattice import cy_dimensions, hom_finite, member, solve_ratio
from .dynkin import DynkinDiagram
from .fields import field_from_name
from .ginzburg import build_ginzburg
from .hyperpotential import Hyperpotential, Potential, from_potential, transport
from .quiver import Quiver, parse_quiver_json


class CliInput:
    def __init__(self):
        self.digests = []

    def read(self, path: str) -> str:
        text = FsPath(path).read_text()
        self.digests.append({"file": path,
                             "sha256": hashlib.sha256(text.encode()).hexdigest()})
        return text

    def read_json(self, path: str) -> dict:
        return json.loads(self.read(path))


def _emit(payload, args, inputs: CliInput, argv):
    if getattr(args, "report", False):
        payload = {"command": list(argv), "inputs": inputs.digests,
                   "result": payload, "status": "ok"}
    print(json.dumps(payload, indent=2, sort_keys=True))


def _parse_field(name: str):
    return field_from_name(name)


# -- subcommand handlers ---------------------------------------------------------

def cmd_hyperpot_check(args, inputs):
    h = Hyperpotential.from_json_obj(inputs.read_json(args.file))
    report = h.check()
    payload = {"ok": report.ok, "trunc": h.trunc}
    if not report.ok:
        payload["violation"] = report.residual.to_json_obj()["terms"]
    return payload


def cmd_hyperpot_from_potential(args, inputs):
    obj = inputs.read_json(args.file)
    quiver = Quiver.from_json_obj(obj["quiver"])
    w = Potential.from_json_obj(quiver, obj["element"])
    return from_potential(w).to_json_obj()


def cmd_hyperpot_transport(args, inputs):
    phi = Substitution.from_json_obj(inputs.read_json(args.phi))
    h = Hyperpotential.from_json_obj(inputs.read_json(args.h))
    return transport(phi, h).to_json_obj()


def cmd_ginzburg_d2(args, inputs):
    h = Hyperpotential.from_json_obj(inputs.read_json(args.file))
    g = build_ginzburg(h)
    report = g.check()
    payload = {"ok": report.ok}
    if not report.ok:
        payload["d_squared"] = {
            name: val.to_json_obj()["terms"]
            for name, val in g.d_squared_on_generators().items()
            if not val.is_zero()}
    return payload


def cmd_jacobian_dims(args, inputs):
    field = _parse_field(args.field) if args.field else None
    h = Hyperpotential.from_json_obj(inputs.read_json(args.file), field)
    n = args.trunc if args.trunc else h.trunc
    return jacobian.jacobian_dimensions(h, n).to_json_obj()


def cmd_family_lambda(args, inputs):
    field = _parse_field(args.field)
    m, e = args.m, args.e
    if args.as_ == "potential":
        h = from_potential(jacobian.truncated_cycle_potential(m, e, field))
        if h.is_zero():
            raise ValueError(
                f"potential vanishes in char {field.characteristic}")
        via = "potential"
    else:
        h = jacobian.truncated_cycle_hyperpotential(m, e, field)
        via = "hyperpotential"
    qb = jacobian.jacobian_dimensions(h, m * e + 2)
    if not qb.stabilized:
        raise ValueError("quotient did not stabilize")
    return {"jacobian_dim": qb.dimension, "via": via}


def cmd_family_g2(args, inputs):
    field = _parse_field(args.field)
    return jacobian.g2_algebra(field).to_json_obj()


def cmd_hochschild_table(args, inputs):
    quiver = parse_quiver_json(inputs.read(args.file))
    field = _parse_field(args.field)
    return hochschild.hochschild_table(quiver, field, args.max_degree)


def cmd_cy_lattice(args, inputs):
    g1 = (args.d1, args.e1)
    g2pair = (args.d2, args.e2)
    finite, dprime = hom_finite(g1, g2pair)
    payload = {"D": dprime, "hom_finite": finite}
    lat = cy_dimensions(g1, g2pair)  # raises when not Hom-finite
    payload["certified"] = lat.certified
    if args.ratio is not None:
        ans = solve_ratio(args.ratio, lat)
        payload["answer"] = [ans.d, ans.e]
    if args.member is not None:
        d, e = (int(t) for t in args.member.split(","))
        ok, coeffs = member((d, e), lat)
        payload["member"] = ok
        if ok:
            payload["coeffs"] = list(coeffs)
    return payload


def cmd_orbit_build(args, inputs):
    diagram = DynkinDiagram.parse(args.diagram)
    spec = mesh.OrbitSpec.from_g_string(diagram, args.g)
    cat = mesh.OrbitCategory(spec)
    rigid = cat.rigid_indecomposables()
    cts = cat.cluster_tilting_sets()
    if args.emit == "dot":
        marks = {}
        if args.mark_ct and cts:
            marks = {v: "gray" for v in cts[0]}
        return {"__text__": mesh.emit_ar_quiver_dot(spec, marks)}
    graph = cat.exchange_graph()
    nodes = sorted(graph.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return {
        "diagram": diagram.label,
        "g": spec.g_label,
        "vertices": spec.vertex_count,
        "rigid": [list(v) for v in rigid],
        "rigid_count": len(rigid),
        "cluster_tilting": [[list(v) for v in s] for s in cts],
        "ct_count": len(cts),
        "exchange_edges": sorted([sorted((idx[a], idx[b]))
                                  for a, b in graph.edges()]),
    }


def cmd_g2_cluster_vars(args, inputs):
    return [cluster.to_display(v)
            for v in cluster.enumerate_variables(cluster.g2_seed())]


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quiverforge",
        description="Exact quiver/path-algebra computations with JSON output.")
    ap.add_argument("--report", action="store_true",
                    help="wrap output in a command-report envelope")
    sub = ap.add_subparsers(dest="command", required=True)

    hyper = sub.add_parser("hyperpot", help="hyperpotential operations")
    hsub = hyper.add_subparsers(dest="subcommand", required=True)
    p = hsub.add_parser("check")
    p.add_argument("file")
    p.set_defaults(func=cmd_hyperpot_check)
    p = hsub.add_parser("from-potential")
    p.add_argument("file")
    p.set_defaults(func=cmd_hyperpot_from_potential)
    p = hsub.add_parser("transport")
    p.add_argument("phi")
    p.add_argument("h")
    p.set_defaults(func=cmd_hyperpot_transport)

    g = sub.add_parser("ginzburg", help="dg-presentation checks")
    gsub = g.add_subparsers(dest="subcommand", required=True)
    p = gsub.add_parser("d2")
    p.add_argument("file")
    p.set_defaults(func=cmd_ginzburg_d2)

    j = sub.add_parser("jacobian", help="quotient dimensions")
    jsub = j.add_subparsers(dest="subcommand", required=True)
    p = jsub.add_parser("dims")
    p.add_argument("file")
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--field", default=None)
    p.set_defaults(func=cmd_jacobian_dims)

    fam = sub.add_parser("family", help="named algebra families")
    fsub = fam.add_subparsers(dest="subcommand", required=True)
    p = fsub.add_parser("lambda")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--field", default="Q")
    p.add_argument("--as", dest="as_", choices=["potential", "hyperpotential"],
                   default="hyperpotential")
    p.set_defaults(func=cmd_family_lambda)
    p = fsub.add_parser("g2")
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_family_g2)

    p = sub.add_parser("hochschild-table", aliases=["hochschild"],
                       help="per-degree homology dimensions")
    hs = p.add_subparsers(dest="subcommand", required=True)
    pt = hs.add_parser("table")
    pt.add_argument("file")
    pt.add_argument("--max-degree", type=int, required=True)
    pt.add_argument("--field", default="Q")
    pt.set_defaults(func=cmd_hochschild_table)

    p = sub.add_parser("cy-lattice", help="fractional CY dimension lattice")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--e1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--e2", type=int, required=True)
    p.add_argument("--ratio", default=None)
    p.add_argument("--member", default=None)
    p.set_defaults(func=cmd_cy_lattice)

    orb = sub.add_parser("orbit", help="orbit categories of translation quivers")
    osub = orb.add_subparsers(dest="subcommand", required=True)
    p = osub.add_parser("build")
    p.add_argument("--diagram", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--emit", choices=["json", "dot"], default="json")
    p.add_argument("--mark-ct", action="store_true")
    p.set_defaults(func=cmd_orbit_build)

    g2p = sub.add_parser("g2", help="the rank-2 weight-(1,3) cluster pattern")
    g2sub = g2p.add_subparsers(dest="subcommand", required=True)
    p = g2sub.add_parser("cluster-vars")
    p.set_defaults(func=cmd_g2_cluster_vars)

    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    args = ap.parse_args(argv)
    inputs = CliInput()
    try:
        payload = args.func(args, inputs)
    except (ValueError, OSError, KeyError) as exc:
        print(json.dumps({"error": str(exc)}, indent=2, sort_keys=True))
        return 1
    if isinstance(payload, dict) and "__text__" in payload:
        sys.stdout.write(payload["__text__"])
        return 0
    _emit(payload, args, inputs, argv)
    return 0


if __name__ == "__main__":
    sys.exit(main())
