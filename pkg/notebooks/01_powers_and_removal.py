"""
Building generalized powers and removing vertices
=================================================

A walk through the structural side: make a graph, grow its generalized
power, look at where every vertex came from, and check that removing a
vertex of the base commutes with taking the power.
"""

import powerspec as ps
from powerspec.hypergraph import power_layout

# the 4-cycle as a 2-uniform hypergraph
c4 = ps.hypergraph(2, 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
print(c4)

# s = 2 twins per vertex, then pad each edge up to k = 5 vertices
h = ps.generalized_power(c4, 2, 5)
print(h.r, h.n, h.m)

# provenance tags say which base vertex or edge each new vertex stems from
for v, tag in enumerate(h.provenance.tags):
    print(v, tag)

layout = power_layout(h)
print("twins of vertex 0:", layout.vertex_groups[0])
print("padding of edge (0, 1):", layout.edge_groups[(0, 1)])

# removing a base vertex and then taking the power gives the same hypergraph
# (up to relabelling) as removing the vertex and its twins from the power
left = ps.generalized_power(ps.remove_vertices(c4, [0]), 2, 5)
right = ps.remove_vertices(h, [0, *layout.vertex_groups[0][1:]])
print(ps.canonical_form(left) == ps.canonical_form(right))

# the subgraphs that feed the spectrum: all edge subsets without isolated vertices,
# collapsed up to isomorphism
for g in ps.enumerate_subgraphs(c4, dedup=True):
    print(g.n, g.edges)
