import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import cycle, dense_tensor_apply, hypergraphs, path
from powerspec.errors import (
    DimensionMismatch,
    PreconditionViolated,
    RelationViolated,
    ResidualTooLarge,
    ZeroEigenvalue,
    ZeroVector,
)
from powerspec.hypergraph import Additional, Copy, expand, generalized_power, hypergraph, remove_vertices, translate_tag
from powerspec.tensor import (
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


def test_cycle_example(c4):
    assert np.allclose(apply_adjacency(c4, [1, 0, 1, 0]), [0, 2, 0, 2])


def test_single_3_edge():
    h = hypergraph(3, 3, [(0, 1, 2)])
    assert np.allclose(apply_adjacency(h, [2, 3, 5]), [15, 10, 6])


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=6), st.data())
def test_matches_dense_tensor(h, data):
    re = data.draw(arrays(float, h.n, elements=st.floats(-2, 2)))
    im = data.draw(arrays(float, h.n, elements=st.floats(-2, 2)))
    x = re + 1j * im
    assert np.allclose(apply_adjacency(h, x), dense_tensor_apply(h, x), atol=1e-12)


def test_dimension_mismatch(c4):
    with pytest.raises(DimensionMismatch):
        apply_adjacency(c4, [1, 2, 3])


class TestVerify:
    def test_accepts_all_ones_on_cycle(self, c4):
        p = verify_eigenpair(c4, 2, [3, 3, 3, 3])
        assert np.allclose(p.vector, 1) and p.residual == 0

    def test_rejects_wrong_value(self, c4):
        with pytest.raises(ResidualTooLarge) as info:
            verify_eigenpair(c4, 1.5, np.ones(4))
        assert info.value.residual == pytest.approx(0.5)

    def test_zero_vector(self, c4):
        with pytest.raises(ZeroVector):
            verify_eigenpair(c4, 2, np.zeros(4))

    def test_single_edge_expansion(self):
        h = expand(hypergraph(2, 2, [(0, 1)]), 3)
        p = verify_eigenpair(h, 1, np.ones(3))
        assert eigen_residual(h, 1, p.vector) == 0

    def test_strictly_nonzero(self, c4):
        p = verify_eigenpair(c4, 0, [1, 0, -1, 0])
        assert not is_strictly_nonzero(p)
        assert is_strictly_nonzero(verify_eigenpair(c4, 2, np.ones(4)))


class TestSurgery:
    def test_support_restriction(self):
        # P3 eigenvector for sqrt(2) padded by a disjoint edge carrying zeros
        h = hypergraph(2, 5, [(0, 1), (1, 2), (3, 4)])
        x = [1, np.sqrt(2), 1, 0, 0]
        sub, p = zero_support_restrict(h, verify_eigenpair(h, np.sqrt(2), x))
        assert sub.labels == (0, 1, 2)
        assert is_strictly_nonzero(p)

    def test_restriction_needs_nonzero_eigenvalue(self, c4):
        with pytest.raises(ZeroEigenvalue):
            zero_support_restrict(c4, verify_eigenpair(c4, 0, [1, 0, -1, 0]))

    def test_twin_lift(self):
        # (C4)_2 with main vertex 0 removed is (P3)_2; its eigenpair extends by a zero
        from powerspec.power import lift_eigenpair

        h = generalized_power(cycle(4), 2, 4)
        twin = h.provenance.tags.index(Copy(0, 1))
        sub = remove_vertices(h, [0])
        base_small = hypergraph(2, 3, [(0, 1), (1, 2)])
        r2 = np.sqrt(2)
        lifted = lift_eigenpair(base_small, 2, 4, r2, [1, r2, 1], r2)
        p = verify_eigenpair(sub, r2, _transfer(lifted, base_small, (1, 2, 3), sub))
        full = duplicate_vertex_lift(h, 0, twin, p)
        assert full.vector[0] == 0 and full.vector[twin] == 0
        assert full.residual < 1e-9
        with pytest.raises(PreconditionViolated):
            duplicate_vertex_lift(h, 0, 1, p)

    def test_degree_one_lift_on_expansion(self):
        # C4^4 minus one additional vertex is (C4 minus an edge)^4, the expanded path 1-2-3-0
        from powerspec.power import lift_eigenpair

        h = expand(cycle(4), 4)
        v = h.provenance.tags.index(Additional((0, 1), 1))
        sub = remove_vertices(h, [v])
        nu = (1 + np.sqrt(5)) / 2
        path_base = hypergraph(2, 4, [(0, 1), (1, 2), (2, 3)])  # 0-1-2-3 stands for 1-2-3-0
        lam = nu ** (2 / 4)
        lifted = lift_eigenpair(path_base, 1, 4, nu, [1, nu, nu, 1], lam)
        p = verify_eigenpair(sub, lam, _transfer(lifted, path_base, (1, 2, 3, 0), sub))
        full = degree_one_lift(h, v, p)
        assert full.vector[v] == 0
        assert full.residual < 1e-9

    def test_degree_one_lift_precondition(self, c4):
        with pytest.raises(PreconditionViolated):
            degree_one_lift(c4, 0, Eigenpair(2, np.ones(3), 0.0))
        with pytest.raises(PreconditionViolated):
            degree_one_lift(expand(c4, 3), 4, Eigenpair(2, np.ones(6), 0.0))


def _transfer(pair, base, labels, target):
    """Move an eigenvector of ``base``'s power onto ``target`` by matching provenance tags."""
    power = generalized_power(base, target.provenance.s, target.provenance.k)
    values = {translate_tag(tag, labels): pair.vector[w] for w, tag in enumerate(power.provenance.tags)}
    return [values[tag] for tag in target.provenance.tags]


class TestCopyRelations:
    def _pair(self):
        from powerspec.power import lift_eigenpair

        g = cycle(4)
        lam = 16 ** (1 / 5) * np.exp(2j * np.pi / 5)
        return generalized_power(g, 2, 5), lift_eigenpair(g, 2, 5, 2, np.ones(4), lam)

    def test_lifted_pair_passes(self):
        hks, p = self._pair()
        witnesses = check_copy_relations(hks, p)
        assert witnesses and all(w.order == 5 and w.deviation < 1e-9 for w in witnesses)

    def test_perturbed_pair_fails(self):
        hks, p = self._pair()
        x = p.vector.copy()
        x[5] *= 1.01
        with pytest.raises(RelationViolated):
            check_copy_relations(hks, Eigenpair(p.lam, x, p.residual))

    def test_zero_eigenvalue(self):
        hks, p = self._pair()
        with pytest.raises(ZeroEigenvalue):
            check_copy_relations(hks, Eigenpair(0j, p.vector, 0.0))


def test_zero_additional_entries_are_allowed_when_expansion_exceeds_rs_plus_one():
    # an eigenvector of (P4)^4 padded by zeros on the additional vertices of edge (0, 3)
    from powerspec.power import certify_spectrum

    report = certify_spectrum(cycle(4), 1, 4)
    zeros = [p for c in report.classes for p in c.eigenpairs if np.any(np.abs(p.vector) < 1e-12)]
    assert zeros
    for p in zeros:
        check_copy_relations(report.hks, p)


def test_zero_additional_entry_is_flagged_when_expansion_is_rs_plus_one():
    hks = expand(cycle(4), 3)
    from powerspec.power import lift_eigenpair

    p = lift_eigenpair(cycle(4), 1, 3, 2, np.ones(4), 4 ** (1 / 3))
    x = p.vector.copy()
    x[4] = 0
    with pytest.raises(RelationViolated):
        check_copy_relations(hks, Eigenpair(p.lam, x, p.residual))
