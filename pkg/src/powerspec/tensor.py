"""Adjacency-tensor application, eigenpair verification and eigenvector surgery.

The adjacency tensor is never materialised.  Its action on a vector reduces
to a sum over edges: ``(A x)_i`` adds, for every edge containing ``i``, the
product of the entries of the other vertices of that edge.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyResult,
    PreconditionViolated,
    RelationViolated,
    ResidualTooLarge,
    ZeroEigenvalue,
    ZeroVector,
)
from .hypergraph import UniformHypergraph, power_layout, remove_vertices

TOL_EIG = 1e-9
TOL_ZERO = 1e-10
TOL_RELATION = 1e-7


@dataclass(frozen=True, eq=False)
class Eigenpair:
    """An accepted eigenpair; ``vector`` is normalised to unit max-modulus."""

    lam: complex
    vector: np.ndarray
    residual: float

    def __repr__(self):
        return f"Eigenpair(lam={self.lam:.10g}, n={len(self.vector)}, residual={self.residual:.2e})"


@dataclass(frozen=True)
class RootOfUnityWitness:
    epsilon: complex
    order: int

    @property
    def deviation(self) -> float:
        return abs(self.epsilon**self.order - 1)


def _vector(h: UniformHypergraph, x) -> np.ndarray:
    x = np.asarray(x, dtype=complex).reshape(-1)
    if x.shape[0] != h.n:
        raise DimensionMismatch(f"vector has {x.shape[0]} entries, hypergraph has {h.n} vertices")
    return x


def apply_adjacency(h: UniformHypergraph, x) -> np.ndarray:
    """Return ``A_H x`` via one pass over the edges (product of the other entries per vertex)."""
    x = _vector(h, x)
    y = np.zeros(h.n, dtype=complex)
    if h.m == 0:
        return y
    E = np.asarray(h.edges, dtype=np.intp)
    X = x[E]
    m, r = X.shape
    prefix = np.ones((m, r + 1), dtype=complex)
    prefix[:, 1:] = np.cumprod(X, axis=1)
    suffix = np.ones((m, r + 1), dtype=complex)
    suffix[:, :-1] = np.cumprod(X[:, ::-1], axis=1)[:, ::-1]
    np.add.at(y, E.ravel(), (prefix[:, :r] * suffix[:, 1:]).ravel())
    return y


def eigen_residual(h: UniformHypergraph, lam, x) -> float:
    x = _vector(h, x)
    if h.n == 0:
        return 0.0
    return float(np.max(np.abs(apply_adjacency(h, x) - complex(lam) * x ** (h.r - 1))))


def verify_eigenpair(h: UniformHypergraph, lam, x, tol_eig: float = TOL_EIG) -> Eigenpair:
    """Normalise ``x`` to unit max-modulus and accept ``(lam, x)`` if its residual is small.

    Raises ``ZeroVector`` for the zero vector and ``ResidualTooLarge`` (carrying
    the residual) on rejection.
    """
    x = _vector(h, x)
    top = np.max(np.abs(x)) if h.n else 0.0
    if top == 0.0:
        raise ZeroVector("an eigenvector must be nonzero")
    x = x / top
    lam = complex(lam)
    residual = eigen_residual(h, lam, x)
    scale = max(1.0, float(np.max(np.abs(x))) ** (h.r - 1))
    if not residual < tol_eig * scale:
        raise ResidualTooLarge(residual)
    return Eigenpair(lam, x, residual)


def is_strictly_nonzero(p: Eigenpair, tol_zero: float = TOL_ZERO) -> bool:
    top = float(np.max(np.abs(p.vector)))
    return abs(p.lam) > tol_zero and float(np.min(np.abs(p.vector))) > tol_zero * top


def zero_support_restrict(
    h: UniformHypergraph, p: Eigenpair, tol_zero: float = TOL_ZERO, tol_eig: float = TOL_EIG
) -> tuple[UniformHypergraph, Eigenpair]:
    """Drop the vertices where the eigenvector vanishes.

    Returns ``(H ◁ I, pair)`` with ``I`` the (numerically) zero entries; the
    restricted pair keeps the eigenvalue and is strictly nonzero.  The returned
    hypergraph's ``labels`` locate its vertices in ``h``.
    """
    if abs(p.lam) <= tol_zero:
        raise ZeroEigenvalue("restriction to the support needs a nonzero eigenvalue")
    x = _vector(h, p.vector)
    top = float(np.max(np.abs(x)))
    I = [u for u in range(h.n) if abs(x[u]) <= tol_zero * top]
    if not I:
        return h, p
    try:
        sub = remove_vertices(h, I)
    except EmptyResult:
        raise ResidualTooLarge(p.residual, "support restriction removed every vertex") from None
    return sub, verify_eigenpair(sub, p.lam, x[list(sub.labels)], tol_eig)


def _pad(h: UniformHypergraph, sub: UniformHypergraph, p: Eigenpair) -> np.ndarray:
    vec = np.asarray(p.vector, dtype=complex)
    if vec.shape[0] != sub.n:
        raise DimensionMismatch(f"eigenvector has {vec.shape[0]} entries, H ◁ v has {sub.n} vertices")
    y = np.zeros(h.n, dtype=complex)
    y[list(sub.labels)] = vec
    return y


def duplicate_vertex_lift(h: UniformHypergraph, v: int, u: int, p: Eigenpair, tol_eig: float = TOL_EIG) -> Eigenpair:
    """Zero-pad an eigenpair of ``H ◁ v`` to ``H`` when ``u`` and ``v`` lie in the same edges."""
    if u == v or not (0 <= u < h.n and 0 <= v < h.n):
        raise PreconditionViolated("need two distinct vertices of the hypergraph")
    if h.incidence[u] != h.incidence[v]:
        raise PreconditionViolated(f"vertices {u} and {v} do not lie in the same edges")
    sub = remove_vertices(h, [v])
    return verify_eigenpair(h, p.lam, _pad(h, sub, p), tol_eig)


def degree_one_lift(h: UniformHypergraph, v: int, p: Eigenpair, tol_eig: float = TOL_EIG) -> Eigenpair:
    """Zero-pad an eigenpair of ``H ◁ v`` to ``H`` when every edge at ``v`` has another degree-one vertex."""
    if not 0 <= v < h.n:
        raise PreconditionViolated(f"vertex {v} not in the hypergraph")
    deg = h.degrees
    for j in h.incidence[v]:
        if not any(w != v and deg[w] == 1 for w in h.edges[j]):
            raise PreconditionViolated(f"edge {h.edges[j]} has no degree-one vertex other than {v}")
    sub = remove_vertices(h, [v])
    return verify_eigenpair(h, p.lam, _pad(h, sub, p), tol_eig)


def check_copy_relations(
    hks: UniformHypergraph, p: Eigenpair, tol: float = TOL_RELATION, tol_zero: float = TOL_ZERO
) -> list[RootOfUnityWitness]:
    """Check the root-of-unity relations an eigenvector of a power hypergraph must satisfy.

    Twins (copies of one vertex, additional vertices of one edge) differ by a
    root of unity whose order is the uniformity of ``hks``.  Every additional
    vertex ``u`` of the edge grown from ``e`` satisfies
    ``x_u^(rs) = eps * (x^e)^s / lam`` for such a root ``eps``, where ``x^e``
    multiplies the main-vertex entries; in particular ``x_u = 0`` whenever a
    main vertex of ``e`` carries a zero.  The relation comes from dividing the
    equation at ``u`` by ``x_u^(k-rs-1)``, so when ``k > rs + 1`` an edge whose
    additional entries all vanish is exempt.  Raises ``RelationViolated`` with
    the worst offender.
    """
    if abs(p.lam) <= tol_zero:
        raise ZeroEigenvalue("the relations only hold for nonzero eigenvalues")
    layout = power_layout(hks)
    k, rs = hks.r, layout.r * layout.s
    x = _vector(hks, p.vector)
    x = x / np.max(np.abs(x))
    small = np.abs(x) <= tol_zero
    witnesses = []
    worst = (None, 0.0, "copy")

    def note(pair, dev, relation):
        nonlocal worst
        if dev > worst[1]:
            worst = (pair, dev, relation)

    for group in list(layout.vertex_groups.values()) + list(layout.edge_groups.values()):
        ref = group[0]
        for w in group[1:]:
            if small[w] and small[ref]:
                continue
            if small[w] != small[ref]:
                note((w, ref), float(max(abs(x[w]), abs(x[ref]))), "copy")
                continue
            wit = RootOfUnityWitness(complex(x[w] / x[ref]), k)
            witnesses.append(wit)
            note((w, ref), wit.deviation, "copy")

    for e, group in layout.edge_groups.items():
        xe = np.prod([x[layout.vertex_groups[v][0]] for v in e])
        target = xe**layout.s / p.lam
        for u in group:
            if small[u] and k > rs + 1:
                # the equation at u reads 0 = 0 here, so x^e is unconstrained
                continue
            if abs(target) <= tol_zero:
                note((u, e), float(abs(x[u])), "additional")
                continue
            wit = RootOfUnityWitness(complex(x[u] ** rs / target), k)
            witnesses.append(wit)
            note((u, e), wit.deviation, "additional")

    if worst[1] > tol:
        raise RelationViolated(worst[0], worst[1], worst[2])
    return witnesses
