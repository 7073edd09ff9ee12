"""
Eigenpairs of uniform hypergraphs
=================================

The adjacency tensor is applied edge by edge.  Here we verify an eigenpair,
strip its zero entries, and pad it back with zeros.
"""

import numpy as np

import powerspec as ps

# the path on 4 vertices; its largest eigenvalue is the golden ratio
p4 = ps.hypergraph(2, 4, [(0, 1), (1, 2), (2, 3)])
phi = (1 + 5 ** 0.5) / 2
x = np.array([1, phi, phi, 1])
pair = ps.verify_eigenpair(p4, phi, x)
print(pair)

# the same check on a 3-uniform hypergraph: a single edge has eigenvalue 1
# on the all-ones vector
edge = ps.hypergraph(3, 3, [(0, 1, 2)])
print(ps.verify_eigenpair(edge, 1.0, np.ones(3)))

# two 3-edges sharing vertex 0; vertices 1 and 2 lie in exactly the same edges,
# so an eigenpair of the hypergraph without vertex 2 pads by a zero
bowtie = ps.hypergraph(3, 5, [(0, 1, 2), (0, 3, 4)])
sub = ps.remove_vertices(bowtie, [2])
print(sub.edges, sub.labels)
pair = ps.verify_eigenpair(sub, 1.0, np.ones(sub.n))
lifted = ps.duplicate_vertex_lift(bowtie, 2, 1, pair)
print(lifted.vector.real)

# zero_support_restrict undoes the padding
small, restricted = ps.zero_support_restrict(bowtie, lifted)
print(small.edges, restricted.vector.real)
