import numpy as np
import pytest
from hypothesis import given

from conftest import connected_graphs
from eccenergy import closed_form as cf
from eccenergy.equitable import (
    Partition,
    QuotientMatrix,
    coarsest_equitable,
    is_equitable,
    match_within,
    quotient,
    refine,
    spectrum_containment,
)
from eccenergy.errors import DomainError
from eccenergy.graph import complete_graph, complete_multipartite, delete_edge, path_graph
from eccenergy.spectral import adjacency_matrix, eccentricity_matrix, jacobi_eigen


def eps_minus_edge(m, n):
    return eccentricity_matrix(delete_edge(complete_multipartite((m, n)), 0, m))


def test_partition_validation():
    with pytest.raises(DomainError):
        Partition.from_blocks([[0, 1], [1, 2]])
    with pytest.raises(DomainError):
        Partition.from_blocks([[0], [2]], n=3)
    with pytest.raises(DomainError):
        Partition.from_blocks([[0], []])
    p = Partition.from_blocks([[2, 0], [1]])
    assert p.blocks == ((0, 2), (1,)) and p.sizes == (2, 1)


def test_partition_refines():
    fine = Partition.from_blocks([[0], [1, 2], [3]])
    coarse = Partition.from_blocks([[0, 3], [1, 2]])
    assert fine.refines(coarse) and not coarse.refines(fine)


def test_is_equitable_bipartite_minus_edge():
    for m, n in [(2, 2), (3, 5), (4, 4)]:
        assert is_equitable(eps_minus_edge(m, n), cf.deleted_edge_partition(m, n))


def test_is_equitable_singletons():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(6, 6))
    assert is_equitable(a + a.T, Partition.singletons(6))


def test_is_equitable_p4_counterexample():
    assert not is_equitable(eccentricity_matrix(path_graph(4)), Partition.from_blocks([[0, 1], [2, 3]]))


def test_is_equitable_rejects_bad_partition():
    with pytest.raises(DomainError):
        is_equitable(np.eye(3, dtype=int), Partition.from_blocks([[0, 1]]))


def test_quotient_k34_minus_edge():
    q = quotient(eps_minus_edge(3, 4), cf.deleted_edge_partition(3, 4))
    assert q.q.tolist() == [[0, 4, 3, 0], [2, 2, 0, 0], [3, 0, 0, 6], [0, 0, 2, 4]]
    assert q.sizes == (1, 2, 1, 3)


@pytest.mark.parametrize("m, n", [(2, 2), (2, 9), (5, 3), (7, 7)])
def test_quotient_reproduces_closed_form(m, n):
    q = quotient(eps_minus_edge(m, n), cf.deleted_edge_partition(m, n))
    ref = cf.deleted_edge_quotient(m, n)
    assert np.array_equal(q.q, ref.q) and q.sizes == ref.sizes


def test_quotient_singletons_is_matrix():
    a = eccentricity_matrix(path_graph(5))
    assert np.array_equal(quotient(a, Partition.singletons(5)).q, a)


def test_quotient_octahedron_parts():
    a = eccentricity_matrix(complete_multipartite((2, 2, 2)))
    q = quotient(a, Partition.from_blocks([[0, 1], [2, 3], [4, 5]]))
    assert q.q.tolist() == [[2, 0, 0], [0, 2, 0], [0, 0, 2]]


def test_quotient_requires_equitable():
    with pytest.raises(DomainError):
        quotient(eccentricity_matrix(path_graph(4)), Partition.from_blocks([[0, 1], [2, 3]]))


def test_coarsest_examples():
    assert coarsest_equitable(eccentricity_matrix(complete_graph(6))).blocks == (tuple(range(6)),)
    assert coarsest_equitable(np.diag([1, 2, 3])).blocks == ((0,), (1,), (2,))


@pytest.mark.parametrize("m, n", [(2, 3), (3, 4), (3, 7), (5, 8), (6, 2)])
def test_coarsest_unequal_parts_is_four_block_split(m, n):
    assert coarsest_equitable(eps_minus_edge(m, n)) == cf.deleted_edge_partition(m, n)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_coarsest_equal_parts_merges_the_halves(m):
    # with m = n the swap of the two sides is a symmetry, so the four classes pair up
    p = coarsest_equitable(eps_minus_edge(m, m))
    assert p.blocks == ((0, m), tuple(v for v in range(2 * m) if v not in (0, m)))
    assert cf.deleted_edge_partition(m, m).refines(p)


def test_coarsest_float_matrix():
    a = np.array([[0.0, 0.5, 0.5], [0.5, 0.0, 0.5], [0.5, 0.5, 0.0]])
    assert len(coarsest_equitable(a)) == 1
    a[0, 1] = a[1, 0] = 0.5 + 1e-6
    assert len(coarsest_equitable(a)) == 2


def _check_coarsest(mat):
    p = coarsest_equitable(mat)
    assert is_equitable(mat, p)
    assert refine(mat, p) == p
    q = quotient(mat, p)
    full = mat.sum(axis=1)
    for i, block in enumerate(p.blocks):
        assert (full[list(block)] == q.q[i].sum()).all()
    assert spectrum_containment(mat, q, 1e-7)
    assert [min(b) for b in p.blocks] == sorted(min(b) for b in p.blocks)


def test_coarsest_corpus_properties(small_corpus):
    for g in small_corpus:
        _check_coarsest(eccentricity_matrix(g))


@given(connected_graphs(max_n=9))
def test_coarsest_random_properties(g):
    _check_coarsest(eccentricity_matrix(g))
    _check_coarsest(adjacency_matrix(g))


def test_any_equitable_refines_coarsest():
    a = eps_minus_edge(4, 4)
    assert cf.deleted_edge_partition(4, 4).refines(coarsest_equitable(a))


def test_containment_bipartite_minus_edge():
    assert spectrum_containment(eps_minus_edge(5, 6), cf.deleted_edge_quotient(5, 6), 1e-7)


def test_containment_singletons():
    a = eccentricity_matrix(path_graph(6))
    assert spectrum_containment(a, quotient(a, Partition.singletons(6)), 1e-7)


def test_containment_k23_coarsest():
    a = eccentricity_matrix(complete_multipartite((2, 3)))
    assert spectrum_containment(a, quotient(a, coarsest_equitable(a)), 1e-7)


def test_containment_detects_mismatch():
    a = eccentricity_matrix(path_graph(4))
    fake = QuotientMatrix(np.array([[5]]), (1,))
    assert not spectrum_containment(a, fake, 1e-7)


def test_match_within_is_multiset_aware():
    assert match_within([1.0, 1.0], [1.0, 1.0, 2.0], 1e-9)
    assert not match_within([1.0, 1.0], [1.0, 2.0], 1e-9)
    assert match_within([], [3.0], 1e-9)


def test_symmetrized_quotient_real_spectrum():
    for m in range(2, 13):
        for n in range(2, 13):
            q = cf.deleted_edge_quotient(m, n)
            s = q.symmetrized()
            assert np.array_equal(s, s.T)
            ev = np.linalg.eigvals(q.q.astype(float))
            assert np.abs(ev.imag).max() < 1e-9
            assert np.allclose(np.sort(ev.real)[::-1], q.eigenvalues().values, atol=1e-8)


def test_symmetrized_rejects_non_symmetric_source():
    with pytest.raises(DomainError):
        QuotientMatrix(np.array([[0, 1], [5, 0]]), (1, 1)).symmetrized()
