"""Nonzero spectra of generalized power hypergraphs.

A generalized power ``H^k_s`` of an r-uniform hypergraph ``H`` replaces every
vertex by ``s`` twins and then pads every edge with ``k - rs`` fresh vertices.
Its nonzero eigenvalues are the ``lam`` with ``lam**k == beta**(r*s)`` for
eigenvalues ``beta`` of subgraphs of ``H``.  The description can fail for
non-bipartite graphs when ``k == r*s`` and ``s >= 2``.  This package computes
the predicted classes, certifies them with explicit eigenvectors and checks
the underlying identities on random instances.
"""

from .errors import *  # noqa: F401,F403
from .hypergraph import (
    UniformHypergraph,
    canonical_relabel,
    connected_components,
    edge_subgraph,
    enumerate_induced_subgraphs,
    enumerate_subgraphs,
    expand,
    extend,
    generalized_power,
    hypergraph,
    induced_subgraph,
    is_connected,
    remove_edges,
    remove_vertices,
)
from .canonical import canonical_form
from .tensor import (
    Eigenpair,
    apply_adjacency,
    check_copy_relations,
    degree_one_lift,
    duplicate_vertex_lift,
    eigen_residual,
    is_strictly_nonzero,
    verify_eigenpair,
    zero_support_restrict,
)
from .spectral import (
    RootClass,
    Spectrum,
    charpoly,
    enumerate_roots,
    graph_eigenvector,
    graph_spectrum,
    hopm_radius,
    kth_root_class,
    nonzero_graph_spectrum,
    spectrum_dedup,
)
from .power import (
    PowerSpectrumResult,
    certify_spectrum,
    descend_eigenpair,
    is_power_eigenvalue,
    lift_eigenpair,
    power_spectrum,
)
from .io import parse_hypergraph_file

__version__ = "0.1.0"
