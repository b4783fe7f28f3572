"""Graph matrices, a symmetric Jacobi eigensolver, energies and multiplicities.

The matrices built here are plain ``numpy`` integer arrays: adjacency
``A(G)``, distance ``D(G)`` and eccentricity ``eps(G)``. Spectra come from
:func:`jacobi_eigen` and are wrapped in :class:`Spectrum`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError
from .graph import Graph, bfs_all_pairs, eccentricities

DEFAULT_CLUSTER_TOL = 1e-6
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


def as_symmetric(a) -> np.ndarray:
    """Validate that ``a`` is square and exactly symmetric; return it as an array."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise DomainError("matrix is not symmetric")
    return a


# -- graph matrices -----------------------------------------------------------


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def distance_matrix(g: Graph) -> np.ndarray:
    return bfs_all_pairs(g)


def eccentricity_from_distances(d: np.ndarray) -> np.ndarray:
    """Keep ``d[u, v]`` where it equals ``min(e(u), e(v))``, zero elsewhere."""
    e = eccentricities(d)
    keep = d == np.minimum.outer(e, e)
    np.fill_diagonal(keep, False)
    return np.where(keep, d, 0)


def eccentricity_matrix(g: Graph) -> np.ndarray:
    return eccentricity_from_distances(bfs_all_pairs(g))


def support_is_irreducible(m) -> bool:
    """True iff the nonzero pattern of ``m`` is a connected graph."""
    m = np.asarray(m)
    n = m.shape[0]
    if n <= 1:
        return True
    nz = m != 0
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in np.flatnonzero(nz[x] & ~seen):
            seen[y] = True
            queue.append(int(y))
    return bool(seen.all())


# -- eigensolver --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalues sorted in descending order."""

    values: np.ndarray
    cluster_tol: float = DEFAULT_CLUSTER_TOL

    def __len__(self):
        return len(self.values)

    @property
    def spectral_radius(self) -> float:
        return float(self.values[0])

    @property
    def energy(self) -> float:
        return energy(self)

    def multiplicity(self, target: float, tol: float | None = None) -> int:
        return multiplicity(self, target, self.cluster_tol if tol is None else tol)

    def count_positive(self, tol: float | None = None) -> int:
        tol = self.cluster_tol if tol is None else tol
        return int(np.sum(self.values > tol))

    def count_negative(self, tol: float | None = None) -> int:
        tol = self.cluster_tol if tol is None else tol
        return int(np.sum(self.values < -tol))

    def clusters(self) -> list[tuple[float, int]]:
        """Group values closer than ``cluster_tol`` into ``(mean, multiplicity)`` pairs."""
        out: list[list[float]] = []
        for x in self.values:
            if out and out[-1][-1] - x <= self.cluster_tol:
                out[-1].append(float(x))
            else:
                out.append([float(x)])
        return [(sum(c) / len(c), len(c)) for c in out]


@lru_cache(maxsize=None)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Index pairs for a cyclic sweep, grouped into rounds of disjoint pairs.

    Circle-method tournament: every unordered pair appears in exactly one round.
    """
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for i in range(size // 2):
            a, b = players[i], players[size - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigen(m, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS,
                 cluster_tol: float = DEFAULT_CLUSTER_TOL) -> Spectrum:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Each round of a sweep annihilates ``n // 2`` disjoint off-diagonal pairs
    simultaneously. Iteration stops once the off-diagonal Frobenius norm drops
    below ``tol * ||m||_F``; exceeding ``max_sweeps`` raises
    :class:`ConvergenceError`.
    """
    a = as_symmetric(m).astype(np.float64, copy=True)
    n = a.shape[0]
    if n == 0:
        return Spectrum(np.zeros(0), cluster_tol)
    target = tol * float(np.linalg.norm(a))
    rounds = _round_robin(n)
    off = _off_norm(a)
    sweeps = 0
    while off > target:
        if sweeps == max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", off)
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            # t = sgn(theta) / (|theta| + sqrt(theta^2 + 1)), theta = d / 2apq, cleared of the division
            d = a[q, q] - a[p, p]
            sgn = np.where(d * apq >= 0.0, 1.0, -1.0)
            two = 2.0 * np.abs(apq)
            t = np.where(active, sgn * two / np.maximum(np.abs(d) + np.hypot(d, two), np.finfo(float).tiny), 0.0)
            c = 1.0 / np.hypot(t, 1.0)
            s = t * c
            rp, rq = a[p, :], a[q, :]
            a[p, :], a[q, :] = c[:, None] * rp - s[:, None] * rq, s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p], a[:, q]
            a[:, p], a[:, q] = cp * c - cq * s, cp * s + cq * c
            a[p[active], q[active]] = 0.0
            a[q[active], p[active]] = 0.0
        sweeps += 1
        off = _off_norm(a)
    values = np.sort(np.diag(a))[::-1].copy()
    return Spectrum(values, cluster_tol)


# -- spectral functionals -----------------------------------------------------


def energy(s: Spectrum | np.ndarray) -> float:
    """Sum of absolute eigenvalues."""
    values = s.values if isinstance(s, Spectrum) else np.asarray(s)
    return float(np.sum(np.abs(values)))


def multiplicity(s: Spectrum | np.ndarray, target: float, tol: float = DEFAULT_CLUSTER_TOL) -> int:
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    values = s.values if isinstance(s, Spectrum) else np.asarray(s)
    return int(np.sum(np.abs(values - target) <= tol))


def eps_spectrum(g: Graph) -> Spectrum:
    return jacobi_eigen(eccentricity_matrix(g))


def distance_spectrum(g: Graph) -> Spectrum:
    return jacobi_eigen(distance_matrix(g))


def adjacency_spectrum(g: Graph) -> Spectrum:
    return jacobi_eigen(adjacency_matrix(g))
