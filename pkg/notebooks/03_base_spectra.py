"""
Spectra of the base graphs
==========================

For graphs the spectrum comes from the characteristic polynomial, computed
exactly in integers, split into square-free factors and solved numerically.
Powers of the spectrum are grouped into root classes.
"""

import numpy as np

import powerspec as ps

c4 = ps.hypergraph(2, 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
print(ps.charpoly(c4))
print(ps.graph_spectrum(c4))
print(ps.nonzero_graph_spectrum(c4).items)

# the numerical roots agree with a dense eigensolver
from powerspec.spectral import adjacency_matrix

p5 = ps.hypergraph(2, 5, [(0, 1), (1, 2), (2, 3), (3, 4)])
print(np.sort(ps.graph_spectrum(p5).real))
print(np.sort(np.linalg.eigvalsh(adjacency_matrix(p5))))

# beta = 2 seen from a 4-uniform power of the 2-extension: lam^4 = beta^4
rc = ps.kth_root_class(2.0, 2, 2, 4)
print(rc, np.round(ps.enumerate_roots(rc), 12))

# power iteration gives the spectral radius of a uniform hypergraph directly
h = ps.generalized_power(p5, 2, 5)
# the largest class lam^5 = beta^4 with beta = sqrt(3)
print(ps.hopm_radius(h), (3 ** 0.5) ** (4 / 5))
