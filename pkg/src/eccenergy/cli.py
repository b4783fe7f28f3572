"""Command-line entry point: ``eccenergy <verb> ...``.

Exit status is 0 on success, 1 when a verification or sweep check fails and
2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import lab
from .errors import DomainError, EccError, VerificationError
from .graph import Graph, complete_multipartite, delete_edge, parse_edge_list, parse_graph6
from .spectral import adjacency_matrix, distance_matrix, eccentricity_matrix, jacobi_eigen

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2

MATRICES = {
    "eps": eccentricity_matrix,
    "dist": distance_matrix,
    "adj": adjacency_matrix,
}


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _edge(text: str) -> tuple[int, int]:
    vals = _int_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected an edge 'u,v', got {text!r}")
    return vals[0], vals[1]


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6-encoded graph")
    src.add_argument("--edges", type=Path, help="edge-list file ('n <count>' then 'u v' lines)")
    src.add_argument("--sizes", type=_int_list, help="complete multipartite part sizes, e.g. 2,3,4")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _load_graph(args) -> tuple[Graph, str]:
    if args.graph6 is not None:
        return parse_graph6(args.graph6), args.graph6
    if args.edges is not None:
        return parse_edge_list(args.edges.read_text()), str(args.edges)
    return complete_multipartite(args.sizes), "K" + ",".join(map(str, args.sizes))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eccenergy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues with multiplicities")
    _add_graph_input(p)
    p.add_argument("--matrix", choices=(*MATRICES, "all"), default="all")
    p.add_argument("--delete", type=_edge, help="delete edge u,v first")
    _add_format(p)

    p = sub.add_parser("energy", help="eccentricity, distance and adjacency energies")
    _add_graph_input(p)
    p.add_argument("--delete", type=_edge, help="delete edge u,v first")
    _add_format(p)

    p = sub.add_parser("compare", help="energy change under edge deletion")
    _add_graph_input(p)
    p.add_argument("--edge", type=_edge, help="edge u,v (default: every edge keeping the graph connected)")
    p.add_argument("--tol", type=float, default=lab.EQUAL_TOL)
    _add_format(p)

    p = sub.add_parser("sweep-bipartite", help="K_{m,n} versus K_{m,n} - e over a grid")
    p.add_argument("--m-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--closed-form-only", action="store_true", help="skip the numeric eigensolve per point")
    _add_format(p)

    p = sub.add_parser("sweep-kpartite", help="complete multipartite graphs, every part pair")
    p.add_argument("--n-total-max", type=int, default=10)
    _add_format(p)

    p = sub.add_parser("verify", help="run named closed-form checks")
    p.add_argument("checks", nargs="*", choices=(*lab.VERIFIERS, "all"), default="all")
    p.add_argument("--limit", type=int, help="override each check's default parameter bound")
    _add_format(p)

    p = sub.add_parser("search", help="scan a graph6 corpus for an energy-change class")
    p.add_argument("--input", type=Path, required=True, help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--predicate", choices=tuple(lab.PREDICATES), required=True)
    p.add_argument("--tol", type=float, default=lab.EQUAL_TOL)
    _add_format(p)
    return parser


def _maybe_delete(g: Graph, edge) -> Graph:
    return g if edge is None else delete_edge(g, *edge)


def _cmd_spectrum(args) -> int:
    g = _maybe_delete(_load_graph(args)[0], args.delete)
    names = list(MATRICES) if args.matrix == "all" else [args.matrix]
    rows = []
    for name in names:
        for value, mult in jacobi_eigen(MATRICES[name](g)).clusters():
            rows.append({"matrix": name, "eigenvalue": value, "multiplicity": mult})
    sys.stdout.write(lab.emit(rows, args.format, header=["matrix", "eigenvalue", "multiplicity"]))
    return EXIT_OK


def _cmd_energy(args) -> int:
    g = _maybe_delete(_load_graph(args)[0], args.delete)
    rows = []
    for name, build in MATRICES.items():
        spec = jacobi_eigen(build(g))
        rows.append({"matrix": name, "energy": spec.energy, "spectral_radius": spec.spectral_radius})
    sys.stdout.write(lab.emit(rows, args.format, header=["matrix", "energy", "spectral_radius"]))
    return EXIT_OK


def _cmd_compare(args) -> int:
    g, gid = _load_graph(args)
    if args.edge is not None:
        reports = [lab.compare_edge_deletion(g, *args.edge, tol=args.tol, graph_id=gid)]
    else:
        reports = list(lab.edge_deletion_reports(g, gid, args.tol))
    sys.stdout.write(lab.emit(reports, args.format))
    return EXIT_OK


def _emit_sweep(rows, fmt) -> int:
    sys.stdout.write(lab.emit(rows, fmt))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_VERIFY


def _cmd_sweep_bipartite(args) -> int:
    if args.m_max < 2 or args.n_max < 2:
        raise DomainError("--m-max and --n-max must be at least 2")
    return _emit_sweep(lab.sweep_bipartite(args.m_max, args.n_max, not args.closed_form_only), args.format)


def _cmd_sweep_kpartite(args) -> int:
    if args.n_total_max < 4:
        raise DomainError("--n-total-max must be at least 4")
    return _emit_sweep(lab.sweep_multipartite(args.n_total_max), args.format)


def _cmd_verify(args) -> int:
    checks = [args.checks] if isinstance(args.checks, str) else args.checks
    names = list(lab.VERIFIERS) if "all" in checks else list(dict.fromkeys(checks))
    rows = []
    for name in names:
        fn, default = lab.VERIFIERS[name]
        limit = default if args.limit is None else args.limit
        failures = fn(limit)
        rows.append({"check": name, "limit": limit, "passed": not failures,
                     "failures": "; ".join(failures[:5])})
    sys.stdout.write(lab.emit(rows, args.format, header=["check", "limit", "passed", "failures"]))
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_VERIFY


def _cmd_search(args) -> int:
    if str(args.input) == "-":
        reports = lab.search_corpus(sys.stdin, args.predicate, args.tol)
    else:
        with args.input.open() as fh:
            reports = lab.search_corpus(fh, args.predicate, args.tol)
    sys.stdout.write(lab.emit(reports, args.format))
    return EXIT_OK


COMMANDS = {
    "spectrum": _cmd_spectrum,
    "energy": _cmd_energy,
    "compare": _cmd_compare,
    "sweep-bipartite": _cmd_sweep_bipartite,
    "sweep-kpartite": _cmd_sweep_kpartite,
    "verify": _cmd_verify,
    "search": _cmd_search,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (EccError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
