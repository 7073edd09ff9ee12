"""
Nonzero spectrum of a generalized power, with certificates
==========================================================

Every nonzero eigenvalue class of ``H^k_s`` is named by a subgraph of ``H``
and one of its eigenvalues.  Certification builds an explicit eigenvector
of the power for each root of each class and checks its residual.
"""

import numpy as np

import powerspec as ps

c4 = ps.hypergraph(2, 4, [(0, 1), (1, 2), (2, 3), (0, 3)])

for k in (4, 5, 6):
    result = ps.power_spectrum(c4, 2, k)
    print(k, result.mode, [(complex(np.round(pc.root_class.c, 6)), pc.witness.canonical.decode()) for pc in result.classes])

# membership: 2^(1/5) is not in the spectrum of (C4)^5_2, while 16^(1/5) is
result = ps.power_spectrum(c4, 2, 5)
print(ps.is_power_eigenvalue(c4, 2, 5, 2 ** 0.2, result=result).found)
print(ps.is_power_eigenvalue(c4, 2, 5, 16 ** 0.2, result=result).found)

# lift an eigenpair of the base to the power, then bring it back down
beta, y = 2.0, np.ones(4)
lam = 16 ** 0.2
pair = ps.lift_eigenpair(c4, 2, 5, beta, y, lam)
hks = ps.generalized_power(c4, 2, 5)
print(pair.residual, ps.eigen_residual(hks, lam, pair.vector))
down = ps.descend_eigenpair(hks, pair)
print(down.lam, down.vector.real)

# the twins and padding vertices obey the root-of-unity relations
print(len(ps.check_copy_relations(hks, pair)), "relations checked")

# certificates for every class
report = ps.certify_spectrum(c4, 2, 5, result=result)
for cert in report.classes:
    print(complex(np.round(cert.root_class.c, 6)), cert.certified, f"{cert.max_residual:.1e}")

# a known gap: for the triangle with s = 2 and k = 4 the class lam^4 = 16 is
# predicted, and its roots 2 and -2 are eigenvalues, but its root 2j is not
k3 = ps.hypergraph(2, 3, [(0, 1), (1, 2), (0, 2)])
try:
    ps.lift_eigenpair(k3, 2, 4, 2.0, np.ones(3), 2j)
except ps.LiftSearchExhausted as exc:
    print("no lift:", exc)
