"""Closed-form eccentricity spectra for complete multipartite graphs and K_{m,n} - e.

Throughout, the deleted edge joins the first vertex of one part to the first
vertex of the other. For ``K_{m,n}`` under contiguous labelling that is the
edge ``(0, m)``. The vertex set of ``K_{m,n} - e`` splits into four classes:
``{0}``, ``{1..m-1}``, ``{m}``, ``{m+1..m+n-1}``; that split is equitable for
the eccentricity matrix, and its 4x4 quotient carries every eigenvalue of
the graph other than -2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .equitable import Partition, QuotientMatrix
from .errors import ConvergenceError, DomainError, VerificationError
from .graph import part_offsets
from .spectral import jacobi_eigen

ROOT_TOL = 1e-6


def _require_parts(sizes: Sequence[int]) -> list[int]:
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2:
        raise DomainError(f"need at least 2 parts, got {len(sizes)}")
    if any(s < 2 for s in sizes):
        raise DomainError(f"closed forms need every part of size >= 2, got {sizes}")
    return sizes


@dataclass(frozen=True)
class EpsSpectrumClosedForm:
    """Spectrum given as ``-2`` repeated plus a short list of other eigenvalues."""

    minus_two_multiplicity: int
    distinguished: tuple[float, ...]

    @property
    def order(self) -> int:
        return self.minus_two_multiplicity + len(self.distinguished)

    def values(self) -> np.ndarray:
        v = np.array([-2.0] * self.minus_two_multiplicity + list(self.distinguished))
        return np.sort(v)[::-1]

    @property
    def energy(self) -> float:
        return 2.0 * self.minus_two_multiplicity + float(np.sum(np.abs(self.distinguished)))


def multipartite_eps_spectrum(sizes: Sequence[int]) -> EpsSpectrumClosedForm:
    """``-2`` with multiplicity ``sum(n_i) - k`` and one eigenvalue ``2(n_i - 1)`` per part."""
    sizes = _require_parts(sizes)
    return EpsSpectrumClosedForm(sum(sizes) - len(sizes), tuple(2.0 * (s - 1) for s in sizes))


def multipartite_eps_energy(sizes: Sequence[int]) -> int:
    sizes = _require_parts(sizes)
    return 4 * (sum(sizes) - len(sizes))


def multipartite_eps_matrix(sizes: Sequence[int]) -> np.ndarray:
    """``eps(K_{n_1..n_k})`` = block diagonal ``2(J - I)`` for parts of size >= 2."""
    sizes = _require_parts(sizes)
    return _two_j_minus_i_blocks(sizes)


def _two_j_minus_i_blocks(sizes: Sequence[int]) -> np.ndarray:
    n = sum(sizes)
    out = np.zeros((n, n), dtype=np.int64)
    for off, s in zip(part_offsets(sizes), sizes):
        out[off:off + s, off:off + s] = 2
    np.fill_diagonal(out, 0)
    return out


def bipartite_minus_edge_eps_matrix(m: int, n: int) -> np.ndarray:
    """``eps(K_{m,n} - e)`` in closed form: ``2(J - I)`` per part plus 3 at the deleted edge."""
    _require_parts((m, n))
    out = _two_j_minus_i_blocks((m, n))
    out[0, m] = out[m, 0] = 3
    return out


def minus_two_eigenvectors(m: int, n: int) -> list[np.ndarray]:
    """Integer eigenvectors of ``eps(K_{m,n} - e)`` for eigenvalue -2.

    Differences ``e_1 - e_i`` inside the first part (skipping vertex 0) and
    ``e_{m+1} - e_j`` inside the second (skipping vertex m): ``m + n - 4``
    vectors in total.
    """
    _require_parts((m, n))
    size = m + n
    vecs = []
    for lead, rest in ((1, range(2, m)), (m + 1, range(m + 2, m + n))):
        for i in rest:
            x = np.zeros(size, dtype=np.int64)
            x[lead], x[i] = 1, -1
            vecs.append(x)
    return vecs


def deleted_edge_partition(m: int, n: int) -> Partition:
    _require_parts((m, n))
    return Partition((
        (0,),
        tuple(range(1, m)),
        (m,),
        tuple(range(m + 1, m + n)),
    ))


def deleted_edge_quotient(m: int, n: int) -> QuotientMatrix:
    """The 4x4 quotient of ``eps(K_{m,n} - e)`` over :func:`deleted_edge_partition`."""
    _require_parts((m, n))
    q = np.array([
        [0, 2 * (m - 1), 3, 0],
        [2, 2 * (m - 2), 0, 0],
        [3, 0, 0, 2 * (n - 1)],
        [0, 0, 2, 2 * (n - 2)],
    ], dtype=np.int64)
    return QuotientMatrix(q, (1, m - 1, 1, n - 1))


@dataclass(frozen=True)
class QuarticSpec:
    """Monic ``x^4 + c3 x^3 + c2 x^2 + c1 x + c0`` with integer coefficients."""

    m: int
    n: int
    coeffs: tuple[int, int, int, int]

    def __call__(self, x):
        c3, c2, c1, c0 = self.coeffs
        return (((x + c3) * x + c2) * x + c1) * x + c0

    def derivative(self, x):
        c3, c2, c1, _ = self.coeffs
        return ((4 * x + 3 * c3) * x + 2 * c2) * x + c1


def quartic_coeffs(m: int, n: int) -> QuarticSpec:
    """Characteristic polynomial of :func:`deleted_edge_quotient`."""
    _require_parts((m, n))
    s, p = m + n, m * n
    return QuarticSpec(m, n, (
        -2 * (s - 4),
        4 * p - 12 * s + 15,
        16 * p - 6 * s - 40,
        -4 * (5 * p - 14 * s + 32),
    ))


@dataclass(frozen=True)
class QuarticRoots:
    roots: tuple[float, float, float, float]

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]


def quartic_roots(spec: QuarticSpec) -> QuarticRoots:
    """Real roots of the quartic, largest first.

    Computed as eigenvalues of the symmetrised quotient, then polished with
    one Newton step on the integer polynomial.
    """
    q = deleted_edge_quotient(spec.m, spec.n)
    approx = jacobi_eigen(q.symmetrized()).values
    polished = []
    for x in approx:
        d = spec.derivative(x)
        if d != 0.0:
            step = spec(x) / d
            if abs(step) <= 1e-6 * (1.0 + abs(x)):
                x = x - step
        polished.append(float(x))
    limit = ROOT_TOL * (1.0 + abs(spec.coeffs[3]))
    worst = max(abs(spec(x)) for x in polished)
    if worst >= limit:
        raise ConvergenceError(f"quartic residual too large for (m, n) = ({spec.m}, {spec.n})", worst)
    return QuarticRoots(tuple(sorted(polished, reverse=True)))


def vieta_residuals(roots: QuarticRoots, spec: QuarticSpec) -> tuple[float, float, float, float]:
    """``|e_k(roots) - (-1)^k c_{4-k}|`` for the four elementary symmetric functions."""
    a = list(roots)
    e = [sum(np.prod(c) for c in combinations(a, k)) for k in (1, 2, 3, 4)]
    c3, c2, c1, c0 = spec.coeffs
    return (abs(e[0] + c3), abs(e[1] - c2), abs(e[2] + c1), abs(e[3] - c0))


def vieta_targets(spec: QuarticSpec) -> tuple[int, int, int, int]:
    c3, c2, c1, c0 = spec.coeffs
    return (-c3, c2, -c1, c0)


@dataclass(frozen=True)
class RootSignPattern:
    """Sign counts of the quartic roots and the localisation checks that apply.

    ``regime`` is ``"two-negative"`` for ``m = 2, n >= 4`` and ``m = 3,
    3 <= n < 10``; ``"one-negative"`` for ``m = 3, n > 10`` and
    ``m >= 4, n >= 5``; ``None`` for the remaining small cases, where no
    pattern is asserted.
    """

    m: int
    n: int
    positive: int
    negative: int
    zero: int
    regime: str | None
    smallest_in_window: bool
    second_smallest_in_window: bool
    brackets_certified: bool

    @property
    def ok(self) -> bool:
        if self.regime == "two-negative":
            return (self.positive == 2 and self.negative == 2 and self.smallest_in_window
                    and self.second_smallest_in_window and self.brackets_certified)
        if self.regime == "one-negative":
            return (self.positive == 3 and self.negative == 1 and self.smallest_in_window
                    and self.brackets_certified)
        return True


def sign_regime(m: int, n: int) -> str | None:
    m, n = sorted((m, n))
    if m == 2 and n >= 4:
        return "two-negative"
    if m == 3 and 3 <= n < 10:
        return "two-negative"
    if (m == 3 and n > 10) or (m >= 4 and n >= 5):
        return "one-negative"
    return None


def classify_root_signs(roots: QuarticRoots, m: int, n: int, tol: float = 1e-9) -> RootSignPattern:
    """Count root signs and check the root windows; raise if a proven pattern fails.

    Windows: smallest root in ``(-5, -4)``; in the two-negative regime also the
    second smallest in ``(-1, 0)``. The certificate re-derives the brackets
    from exact integer signs of the polynomial at -5, -4, -1 and 0.
    """
    a = list(roots)
    spec = quartic_coeffs(m, n)
    regime = sign_regime(m, n)
    brackets = spec(-5) > 0 and spec(-4) < 0
    if regime == "two-negative":
        brackets = brackets and spec(-1) < 0 and spec(0) > 0
    pattern = RootSignPattern(
        m=m, n=n,
        positive=sum(x > tol for x in a),
        negative=sum(x < -tol for x in a),
        zero=sum(abs(x) <= tol for x in a),
        regime=regime,
        smallest_in_window=-5.0 < a[3] < -4.0,
        second_smallest_in_window=-1.0 < a[2] < 0.0,
        brackets_certified=bool(brackets),
    )
    if not pattern.ok:
        raise VerificationError(f"root sign pattern {pattern} contradicts the {regime} regime")
    return pattern


def bipartite_minus_edge_spectrum(m: int, n: int) -> EpsSpectrumClosedForm:
    """``-2`` with multiplicity ``m + n - 4`` plus the four quartic roots."""
    roots = quartic_roots(quartic_coeffs(m, n))
    return EpsSpectrumClosedForm(m + n - 4, tuple(roots))


def claimed_block_form(sizes: Sequence[int], part_i: int, part_j: int) -> tuple[np.ndarray, np.ndarray]:
    """Block decomposition ``eps(K_{n_i,n_j} - e) (+) B`` asserted for the k-partite case.

    Parts are 1-based. ``B`` is block diagonal ``2(J - I)`` over the remaining
    parts in their original order (``0 x 0`` when ``k = 2``). This is the
    asserted shape; :func:`assemble_claimed_matrix` lays it out in graph order
    for comparison with the definitional matrix.
    """
    sizes = _require_parts(sizes)
    k = len(sizes)
    if not (1 <= part_i <= k and 1 <= part_j <= k) or part_i == part_j:
        raise DomainError(f"need two distinct parts in 1..{k}, got ({part_i}, {part_j})")
    i, j = sorted((part_i, part_j))
    top = bipartite_minus_edge_eps_matrix(sizes[i - 1], sizes[j - 1])
    rest = [s for t, s in enumerate(sizes, start=1) if t not in (i, j)]
    b = _two_j_minus_i_blocks(rest) if rest else np.zeros((0, 0), dtype=np.int64)
    return top, b


def assemble_claimed_matrix(sizes: Sequence[int], part_i: int, part_j: int) -> np.ndarray:
    """Place :func:`claimed_block_form` onto the vertex labels of ``K_{sizes}``."""
    top, b = claimed_block_form(sizes, part_i, part_j)
    i, j = sorted((part_i, part_j))
    offs = part_offsets(sizes)
    order = list(range(offs[i - 1], offs[i - 1] + sizes[i - 1]))
    order += list(range(offs[j - 1], offs[j - 1] + sizes[j - 1]))
    for t, (off, s) in enumerate(zip(offs, sizes), start=1):
        if t not in (i, j):
            order += list(range(off, off + s))
    n = sum(sizes)
    small = np.zeros((n, n), dtype=np.int64)
    r = top.shape[0]
    small[:r, :r] = top
    small[r:, r:] = b
    out = np.zeros_like(small)
    idx = np.asarray(order)
    out[np.ix_(idx, idx)] = small
    return out


def canonical_cross_edge(sizes: Sequence[int], part_i: int, part_j: int) -> tuple[int, int]:
    """First vertex of part ``i`` to first vertex of part ``j`` (1-based parts)."""
    offs = part_offsets(sizes)
    return offs[part_i - 1], offs[part_j - 1]
