"""Equitable partitions of symmetric matrices and their quotient matrices.

A partition of the index set is equitable for ``A`` when every block
``A[X_i, X_j]`` has constant row sums. The matrix of those sums is the
quotient; its eigenvalues are eigenvalues of ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError
from .spectral import Spectrum, as_symmetric, jacobi_eigen

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering ``0..n-1``."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> Partition:
        bl = tuple(tuple(sorted(int(x) for x in b)) for b in blocks)
        flat = [x for b in bl for x in b]
        if any(len(b) == 0 for b in bl):
            raise DomainError("partition blocks must be nonempty")
        if len(set(flat)) != len(flat):
            raise DomainError("partition blocks overlap")
        size = len(flat) if n is None else n
        if sorted(flat) != list(range(size)):
            raise DomainError(f"blocks do not cover 0..{size - 1} exactly")
        return cls(bl)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Partition:
        """Group indices by label; blocks ordered by smallest member."""
        groups: dict[int, list[int]] = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls(tuple((i,) for i in range(n)))

    @classmethod
    def whole(cls, n: int) -> Partition:
        return cls((tuple(range(n)),))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def labels(self) -> np.ndarray:
        lab = np.empty(self.n, dtype=np.intp)
        for i, b in enumerate(self.blocks):
            lab[list(b)] = i
        return lab

    def characteristic(self) -> np.ndarray:
        """``n x k`` 0/1 matrix whose columns indicate the blocks."""
        c = np.zeros((self.n, len(self.blocks)), dtype=np.int64)
        c[np.arange(self.n), self.labels()] = 1
        return c

    def refines(self, other: Partition) -> bool:
        """True iff every block of ``self`` lies inside a block of ``other``."""
        lab = other.labels()
        return all(len({lab[x] for x in b}) == 1 for b in self.blocks)


@dataclass(frozen=True, eq=False)
class QuotientMatrix:
    """Block row sums ``q[i, j]`` plus the block sizes they came from."""

    q: np.ndarray
    sizes: tuple[int, ...]

    def symmetrized(self) -> np.ndarray:
        """``S^{1/2} Q S^{-1/2}`` with ``S = diag(sizes)``, symmetric for symmetric sources."""
        r = np.sqrt(np.asarray(self.sizes, dtype=np.float64))
        s = self.q * r[:, None] / r[None, :]
        scale = max(1.0, float(np.abs(s).max(initial=0.0)))
        if np.abs(s - s.T).max(initial=0.0) > FLOAT_TOL * scale:
            raise DomainError("quotient is not diagonally similar to a symmetric matrix")
        return (s + s.T) / 2

    def eigenvalues(self) -> Spectrum:
        return jacobi_eigen(self.symmetrized())


def _check_partition(mat: np.ndarray, p: Partition) -> None:
    if p.n != mat.shape[0]:
        raise DomainError(f"partition covers {p.n} indices, matrix has {mat.shape[0]}")
    Partition.from_blocks(p.blocks, mat.shape[0])


def _block_row_sums(mat: np.ndarray, p: Partition) -> np.ndarray:
    return mat @ p.characteristic()


def _constant(values: np.ndarray, exact: bool) -> bool:
    if exact:
        return bool(np.all(values == values[0]))
    return bool(np.all(np.abs(values - values[0]) <= FLOAT_TOL))


def is_equitable(mat, p: Partition) -> bool:
    mat = as_symmetric(mat)
    _check_partition(mat, p)
    exact = np.issubdtype(mat.dtype, np.integer)
    r = _block_row_sums(mat, p)
    return all(_constant(r[list(b)], exact) for b in p.blocks)


def quotient(mat, p: Partition) -> QuotientMatrix:
    mat = as_symmetric(mat)
    if not is_equitable(mat, p):
        raise DomainError("partition is not equitable for this matrix")
    r = _block_row_sums(mat, p)
    q = r[[b[0] for b in p.blocks]]
    return QuotientMatrix(q, p.sizes)


def refine(mat, p: Partition) -> Partition:
    """Split blocks by their row sums into the current blocks until stable."""
    mat = as_symmetric(mat)
    _check_partition(mat, p)
    exact = np.issubdtype(mat.dtype, np.integer)
    current = p
    while True:
        r = _block_row_sums(mat, current)
        if not exact:
            r = np.round(r / FLOAT_TOL).astype(np.int64)
        lab = current.labels()
        keys = [(int(lab[i]),) + tuple(r[i].tolist()) for i in range(mat.shape[0])]
        ids = {k: j for j, k in enumerate(dict.fromkeys(keys))}
        nxt = Partition.from_labels([ids[k] for k in keys])
        if len(nxt) == len(current):
            return nxt
        current = nxt


def coarsest_equitable(mat) -> Partition:
    """Coarsest equitable partition, blocks ordered by smallest index."""
    mat = as_symmetric(mat)
    return refine(mat, Partition.whole(mat.shape[0]))


def match_within(sub: Sequence[float], full: Sequence[float], tol: float) -> bool:
    """Multiset containment: each value of ``sub`` consumes a distinct value of ``full``.

    Two-pointer matching over sorted lists; optimal for interval tolerances.
    """
    a = sorted(float(x) for x in sub)
    b = sorted(float(x) for x in full)
    j = 0
    for x in a:
        while j < len(b) and b[j] < x - tol:
            j += 1
        if j == len(b) or b[j] > x + tol:
            return False
        j += 1
    return True


def spectrum_containment(mat, q: QuotientMatrix, tol: float = 1e-7) -> bool:
    return match_within(q.eigenvalues().values, jacobi_eigen(mat).values, tol)
