"""Edge-deletion experiments, theorem sweeps, corpus search and report emission."""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field, fields
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import closed_form as cf
from .equitable import is_equitable, match_within, spectrum_containment
from .errors import VerificationError
from .graph import Graph, complete_multipartite, delete_edge, is_connected, parse_graph6
from .spectral import (
    adjacency_matrix,
    distance_matrix,
    eccentricity_from_distances,
    eccentricity_matrix,
    energy,
    jacobi_eigen,
    multiplicity,
)

log = logging.getLogger(__name__)

EQUAL_TOL = 1e-7
MARGIN_TOL = 1e-7
SPECTRUM_TOL = 1e-7
DECIMALS = 6


def classify(before: float, after: float, tol: float = EQUAL_TOL) -> str:
    delta = after - before
    if abs(delta) <= tol:
        return "equal"
    return "increase" if delta > 0 else "decrease"


@dataclass(frozen=True)
class GraphEnergies:
    eps: float
    dist: float
    adj: float
    eps_positive: int


def graph_energies(g: Graph) -> GraphEnergies:
    """Energies of eps(G), D(G) and A(G); raises if ``g`` is disconnected."""
    d = distance_matrix(g)
    eps_spec = jacobi_eigen(eccentricity_from_distances(d))
    return GraphEnergies(
        eps=energy(eps_spec),
        dist=energy(jacobi_eigen(d)),
        adj=energy(jacobi_eigen(adjacency_matrix(g))),
        eps_positive=eps_spec.count_positive(),
    )


@dataclass(frozen=True)
class EnergyChangeReport:
    graph_id: str
    edge: tuple[int, int]
    eps_before: float
    eps_after: float
    dist_before: float
    dist_after: float
    adj_before: float
    adj_after: float
    eps_class: str
    dist_class: str
    eps_positive_before: int

    def to_row(self) -> dict:
        row = {}
        for f in fields(self):
            val = getattr(self, f.name)
            row[f.name] = f"{val[0]}-{val[1]}" if f.name == "edge" else val
        return row


def compare_edge_deletion(g: Graph, u: int, v: int, tol: float = EQUAL_TOL,
                          graph_id: str = "", before: GraphEnergies | None = None) -> EnergyChangeReport:
    """Energies before and after deleting ``{u, v}``.

    Raises :class:`DisconnectedGraphError` when ``g`` or ``g - uv`` is disconnected
    and :class:`DomainError` when the edge is absent.
    """
    if before is None:
        before = graph_energies(g)
    h = delete_edge(g, u, v)
    after = graph_energies(h)
    return EnergyChangeReport(
        graph_id=graph_id,
        edge=(min(u, v), max(u, v)),
        eps_before=before.eps, eps_after=after.eps,
        dist_before=before.dist, dist_after=after.dist,
        adj_before=before.adj, adj_after=after.adj,
        eps_class=classify(before.eps, after.eps, tol),
        dist_class=classify(before.dist, after.dist, tol),
        eps_positive_before=before.eps_positive,
    )


def edge_deletion_reports(g: Graph, graph_id: str = "", tol: float = EQUAL_TOL) -> Iterator[EnergyChangeReport]:
    """One report per edge whose removal keeps ``g`` connected, in sorted edge order."""
    before = graph_energies(g)
    for u, v in g.sorted_edges():
        if not is_connected(delete_edge(g, u, v)):
            continue
        yield compare_edge_deletion(g, u, v, tol, graph_id, before)


PREDICATES: dict[str, Callable[[EnergyChangeReport], bool]] = {
    "eps-increase": lambda r: r.eps_class == "increase",
    "eps-decrease": lambda r: r.eps_class == "decrease",
    "eps-equal": lambda r: r.eps_class == "equal",
    "eps-up-dist-down": lambda r: r.eps_class == "increase" and r.dist_class == "decrease",
    "eps-down-dist-up": lambda r: r.eps_class == "decrease" and r.dist_class == "increase",
    "one-positive-eps-eigenvalue-and-eps-decrease":
        lambda r: r.eps_positive_before == 1 and r.eps_class == "decrease",
}


class CorpusError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def iter_graph6_lines(stream: Iterable[str]) -> Iterator[tuple[int, str, Graph]]:
    for lineno, line in enumerate(stream, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except ValueError as exc:
            raise CorpusError(lineno, str(exc)) from exc
        yield lineno, text, g


def search_corpus_multi(stream: Iterable[str], predicates: Sequence[str],
                        tol: float = EQUAL_TOL) -> dict[str, list[EnergyChangeReport]]:
    """Like :func:`search_corpus` for several predicates in a single pass."""
    tests = {name: PREDICATES[name] for name in predicates}
    found: dict[str, list[EnergyChangeReport]] = {name: [] for name in tests}
    for lineno, text, g in iter_graph6_lines(stream):
        if not is_connected(g):
            log.warning("line %d: graph %s is disconnected, skipped", lineno, text)
            continue
        for r in edge_deletion_reports(g, text, tol):
            for name, test in tests.items():
                if test(r):
                    found[name].append(r)
    return found


def search_corpus(stream: Iterable[str], predicate: str, tol: float = EQUAL_TOL) -> list[EnergyChangeReport]:
    """Reports matching ``predicate`` over every connectivity-preserving edge deletion, in input order."""
    return search_corpus_multi(stream, [predicate], tol)[predicate]


# -- sweeps -------------------------------------------------------------------


@dataclass(frozen=True)
class SweepResult:
    """One parameter point of a sweep.

    ``checks`` must all hold; ``flags`` are recorded observations.
    """

    parameters: dict
    lhs: float
    rhs: float
    margin: float
    checks: dict[str, bool]
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_row(self) -> dict:
        row = {"parameters": " ".join(f"{k}={v}" for k, v in self.parameters.items()),
               "lhs": self.lhs, "rhs": self.rhs, "margin": self.margin, "passed": self.passed}
        row.update({f"check_{k}": v for k, v in self.checks.items()})
        row.update({f"flag_{k}": v for k, v in self.flags.items()})
        return row


def _spectra_match(a: Sequence[float], b: Sequence[float], tol: float) -> bool:
    return len(a) == len(b) and match_within(a, b, tol)


def bipartite_point(m: int, n: int, definitional: bool = True) -> SweepResult:
    lhs = float(cf.multipartite_eps_energy((m, n)))
    spec = cf.quartic_coeffs(m, n)
    roots = cf.quartic_roots(spec)
    closed = cf.EpsSpectrumClosedForm(m + n - 4, tuple(roots))
    rhs = closed.energy
    try:
        signs_ok = cf.classify_root_signs(roots, m, n).ok
    except VerificationError:
        signs_ok = False
    targets = cf.vieta_targets(spec)
    checks = {
        "margin_positive": rhs - lhs > MARGIN_TOL,
        "root_signs": signs_ok,
        "roots_avoid_minus_two": all(abs(x + 2) > cf.ROOT_TOL for x in roots),
        "vieta": all(r < 1e-6 * (1 + abs(t)) for r, t in zip(cf.vieta_residuals(roots, spec), targets)),
    }
    if definitional:
        g = delete_edge(complete_multipartite((m, n)), 0, m)
        numeric = jacobi_eigen(eccentricity_matrix(g))
        checks["spectrum_matches_numeric"] = _spectra_match(closed.values(), numeric.values, SPECTRUM_TOL)
        checks["minus_two_multiplicity"] = multiplicity(numeric, -2.0, cf.ROOT_TOL) == m + n - 4
    return SweepResult({"m": m, "n": n}, lhs, rhs, rhs - lhs, checks)


def sweep_bipartite(m_max: int, n_max: int, definitional: bool = True) -> list[SweepResult]:
    """Rows for every ``2 <= m <= min(m_max, n) <= n <= n_max``, ordered by ``(m, n)``."""
    return [bipartite_point(m, n, definitional)
            for m in range(2, m_max + 1) for n in range(m, n_max + 1)]


def multipartite_size_tuples(n_total_max: int, k_min: int = 2) -> list[tuple[int, ...]]:
    """Non-decreasing tuples of parts >= 2 with at least ``k_min`` parts and sum <= bound."""
    out = []

    def grow(prefix: list[int], total: int):
        if len(prefix) >= k_min:
            out.append(tuple(prefix))
        start = prefix[-1] if prefix else 2
        for s in range(start, n_total_max - total + 1):
            grow(prefix + [s], total + s)

    grow([], 0)
    return sorted(out, key=lambda t: (sum(t), len(t), t))


def multipartite_point(sizes: Sequence[int], part_i: int, part_j: int) -> SweepResult:
    sizes = tuple(sizes)
    g = complete_multipartite(sizes)
    u, v = cf.canonical_cross_edge(sizes, part_i, part_j)
    before_mat = eccentricity_matrix(g)
    after_mat = eccentricity_matrix(delete_edge(g, u, v))
    lhs = energy(jacobi_eigen(before_mat))
    rhs = energy(jacobi_eigen(after_mat))
    checks = {
        "margin_positive": rhs - lhs > MARGIN_TOL,
        "closed_form_before": abs(lhs - cf.multipartite_eps_energy(sizes)) <= 1e-8,
    }
    flags = {
        "block_form_matches": bool(np.array_equal(cf.assemble_claimed_matrix(sizes, part_i, part_j), after_mat)),
    }
    params = {"sizes": ",".join(map(str, sizes)), "parts": f"{part_i},{part_j}"}
    return SweepResult(params, lhs, rhs, rhs - lhs, checks, flags)


def sweep_multipartite(n_total_max: int) -> list[SweepResult]:
    """Every size tuple (parts >= 2, sum <= bound) and every unordered part pair."""
    return [multipartite_point(sizes, i, j)
            for sizes in multipartite_size_tuples(n_total_max)
            for i, j in combinations(range(1, len(sizes) + 1), 2)]


# -- named verifications ------------------------------------------------------


def _pairs(lo_m: int, lo_n: int, hi: int, m_only: int | None = None):
    for m in range(lo_m, hi + 1):
        if m_only is not None and m != m_only:
            continue
        for n in range(max(m, lo_n), hi + 1):
            yield m, n


def verify_minus_two_vectors(limit: int) -> list[str]:
    bad = []
    for m in range(2, limit + 1):
        for n in range(2, limit + 1):
            mat = eccentricity_matrix(delete_edge(complete_multipartite((m, n)), 0, m))
            vecs = cf.minus_two_eigenvectors(m, n)
            if len(vecs) != m + n - 4:
                bad.append(f"({m},{n}): {len(vecs)} vectors")
            elif vecs and np.linalg.matrix_rank(np.array(vecs)) != len(vecs):
                bad.append(f"({m},{n}): vectors dependent")
            bad += [f"({m},{n}): vector {i} fails" for i, x in enumerate(vecs) if not np.array_equal(mat @ x, -2 * x)]
    return bad


def _verify_bipartite_range(pairs, definitional: bool) -> list[str]:
    bad = []
    for m, n in pairs:
        row = bipartite_point(m, n, definitional)
        bad += [f"({m},{n}): {k}" for k, ok in row.checks.items() if not ok]
    return bad


def verify_quotient_containment(limit: int) -> list[str]:
    bad = []
    for m in range(2, limit + 1):
        for n in range(2, limit + 1):
            mat = eccentricity_matrix(delete_edge(complete_multipartite((m, n)), 0, m))
            if not is_equitable(mat, cf.deleted_edge_partition(m, n)):
                bad.append(f"({m},{n}): partition not equitable")
            elif not spectrum_containment(mat, cf.deleted_edge_quotient(m, n), SPECTRUM_TOL):
                bad.append(f"({m},{n}): quotient spectrum not contained")
    return bad


def verify_multipartite(limit: int) -> list[str]:
    return [f"{r.parameters}: {k}" for r in sweep_multipartite(limit) for k, ok in r.checks.items() if not ok]


VERIFIERS: dict[str, tuple[Callable[[int], list[str]], int]] = {
    "lemma1": (verify_minus_two_vectors, 20),
    "lemma2": (lambda hi: _verify_bipartite_range(_pairs(2, 2, hi, m_only=2), True), 30),
    "lemma3": (lambda hi: _verify_bipartite_range(_pairs(3, 3, hi, m_only=3), True), 30),
    "lemma4": (lambda hi: _verify_bipartite_range(_pairs(4, 5, hi), False), 30),
    "mainthm": (lambda hi: _verify_bipartite_range(_pairs(2, 2, hi), True), 20),
    "main2": (lambda hi: _verify_bipartite_range(_pairs(2, 2, hi), False), 30),
    "main3": (verify_multipartite, 12),
    "quotient-containment": (verify_quotient_containment, 20),
}


# -- emission -----------------------------------------------------------------


def _fmt(val):
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, (float, np.floating)):
        return f"{float(val):.{DECIMALS}f}"
    return val


def _json_val(val):
    if isinstance(val, (bool, np.bool_)):
        return bool(val)
    if isinstance(val, (float, np.floating)):
        return round(float(val), DECIMALS)
    if isinstance(val, (np.integer,)):
        return int(val)
    if isinstance(val, dict):
        return {k: _json_val(v) for k, v in val.items()}
    if isinstance(val, (list, tuple)):
        return [_json_val(v) for v in val]
    return val


def _report_header() -> list[str]:
    return [f.name for f in fields(EnergyChangeReport)]


def emit(results: Sequence, fmt: str = "csv", header: Sequence[str] | None = None) -> str:
    """Serialise reports as CSV (fixed column order) or JSON (list of objects).

    Floats carry 6 decimals. An empty list renders as the header line alone
    (``EnergyChangeReport`` columns unless ``header`` is given) or ``[]``.
    """
    rows = [r.to_row() if hasattr(r, "to_row") else dict(r) for r in results]
    if fmt == "json":
        if results and isinstance(results[0], EnergyChangeReport):
            rows = [dict(row, edge=list(r.edge)) for row, r in zip(rows, results)]
        return json.dumps([_json_val(row) for row in rows], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    cols = list(header) if header is not None else (list(rows[0]) if rows else _report_header())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_fmt(row.get(c, "")) for c in cols])
    return buf.getvalue()
