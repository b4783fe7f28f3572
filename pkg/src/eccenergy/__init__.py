"""Eccentricity, distance and adjacency spectra of graphs, and how their
energies move when an edge is deleted."""

from .closed_form import (
    bipartite_minus_edge_spectrum,
    multipartite_eps_spectrum,
    quartic_coeffs,
    quartic_roots,
)
from .errors import (
    ConvergenceError,
    DisconnectedGraphError,
    DomainError,
    EccError,
    Graph6Error,
    GraphValidationError,
    VerificationError,
)
from .graph import (
    Graph,
    complete_multipartite,
    delete_edge,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .spectral import (
    Spectrum,
    adjacency_matrix,
    distance_matrix,
    eccentricity_matrix,
    energy,
    jacobi_eigen,
)

__version__ = "0.1.0"
