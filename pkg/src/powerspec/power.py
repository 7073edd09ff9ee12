"""Nonzero spectra of generalized power hypergraphs.

The nonzero eigenvalues of ``H^k_s`` are assembled from eigenvalues ``beta``
of subgraphs of the base ``H``: every ``lam`` with ``lam**k == beta**(r*s)``
qualifies.  Induced subgraphs suffice when ``k == rs + 1`` or ``k == rs`` with
``s >= 2``; arbitrary subgraphs are needed when ``k > rs + 1``.  When
``s == 1`` and ``k == r`` the power hypergraph is ``H`` itself.

Membership is certified constructively: an eigenvector of the witnessing
subgraph is restricted to its support, lifted to the subgraph's power
hypergraph and zero-padded into ``H^k_s`` one removed vertex at a time.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .canonical import canonical_form, canonical_labeling
from .errors import (
    DescentSearchExhausted,
    InvalidOrder,
    IsolatedVertexError,
    LiftSearchExhausted,
    PowerSpecError,
    PreconditionViolated,
    UnsupportedBaseRank,
    ZeroEigenvalueQuery,
)
from .hypergraph import (
    INDUCED_CAP,
    SUBGRAPH_CAP,
    Additional,
    UniformHypergraph,
    canonical_relabel,
    connected_components,
    enumerate_induced_subgraphs,
    enumerate_subgraphs,
    generalized_power,
    power_layout,
    remove_vertices,
    translate_tag,
    validate,
)
from .spectral import (
    TOL_DEDUP,
    RootClass,
    Spectrum,
    _spectral_key,
    enumerate_roots,
    graph_eigenvector,
    kth_root_class,
    nonzero_graph_spectrum,
    spectrum_dedup,
)
from .tensor import (
    TOL_EIG,
    TOL_ZERO,
    Eigenpair,
    degree_one_lift,
    duplicate_vertex_lift,
    is_strictly_nonzero,
    verify_eigenpair,
    zero_support_restrict,
)

ROOT_SEARCH_CAP = 10**6


def power_mode(r: int, s: int, k: int) -> str:
    if s < 1 or k < r * s:
        raise InvalidOrder(f"need s >= 1 and k >= r*s (got r={r}, s={s}, k={k})")
    if s == 1 and k == r:
        return "identity"
    if k <= r * s + 1:
        return "induced"
    return "general"


@dataclass(frozen=True)
class Witness:
    subgraph: UniformHypergraph  # labelled subgraph of the base
    canonical: bytes
    beta: complex


@dataclass
class PowerClass:
    root_class: RootClass
    witness: Witness
    others: list = field(default_factory=list)
    certified: bool | None = None


@dataclass
class PowerSpectrumResult:
    r: int
    s: int
    k: int
    mode: str
    classes: list

    @property
    def root_classes(self) -> Spectrum:
        return spectrum_dedup([pc.root_class for pc in self.classes])

    def find(self, lam, tol: float = TOL_DEDUP):
        for pc in self.classes:
            if pc.root_class.contains(lam, tol):
                return pc
        return None


# subgraph spectra

def _expansion_core(g: UniformHypergraph):
    """If ``g`` (r >= 3) is the r-expansion of a graph, return that graph, else None."""
    deg = g.degrees
    cores = []
    for e in g.edges:
        heavy = [v for v in e if deg[v] > 1]
        light = [v for v in e if deg[v] == 1]
        if len(heavy) > 2:
            return None
        cores.append(tuple(sorted(heavy + light[: 2 - len(heavy)])))
    if len(set(cores)) != len(cores):
        return None
    keep = sorted({v for e in cores for v in e})
    index = {v: i for i, v in enumerate(keep)}
    return UniformHypergraph(2, len(keep), tuple(tuple(index[v] for v in e) for e in cores))


def component_betas(g: UniformHypergraph, supplied=None, tol_eig: float = TOL_EIG) -> list[complex]:
    """Distinct nonzero eigenvalues of a connected hypergraph."""
    if g.m == 0:
        return []
    if g.r == 2:
        return list(nonzero_graph_spectrum(g).items)
    key = canonical_form(g).decode()
    if supplied and key in supplied:
        rep = canonical_relabel(g)
        betas = []
        for beta, vec in supplied[key]:
            verify_eigenpair(rep, beta, vec, tol_eig)
            betas.append(complex(beta))
        return list(spectrum_dedup(betas).items)
    core = _expansion_core(g)
    if core is not None:
        inner = power_spectrum(core, 1, g.r)
        return list(spectrum_dedup(inner.root_classes.values()).items)
    raise UnsupportedBaseRank(f"no eigenvalues supplied for the {g.r}-uniform component {key}")


def subgraph_betas(g: UniformHypergraph, supplied=None, cache=None) -> list[complex]:
    """Distinct nonzero eigenvalues of a (possibly disconnected) hypergraph: union over components."""
    values = []
    for comp in connected_components(g):
        key = canonical_form(comp)
        if cache is not None and key in cache:
            values.extend(cache[key])
            continue
        betas = component_betas(comp, supplied)
        if cache is not None:
            cache[key] = betas
        values.extend(betas)
    return list(spectrum_dedup(values).items)


def _betas_job(args):
    g, supplied = args
    return subgraph_betas(g, supplied)


def power_spectrum(
    h: UniformHypergraph,
    s: int,
    k: int,
    *,
    supplied: dict | None = None,
    jobs: int = 1,
    tol_dedup: float = TOL_DEDUP,
    max_vertices: int = INDUCED_CAP,
    max_edges: int = SUBGRAPH_CAP,
) -> PowerSpectrumResult:
    """All nonzero eigenvalues of ``H^k_s`` as root classes, each with a witness.

    ``supplied`` maps canonical forms (decoded) of connected r-uniform
    components to lists of ``(beta, vector)`` eigenpairs on the canonical
    relabelling of that component; it is needed for r >= 3 components that are
    not expansions of graphs.  In identity mode (``s == 1``, ``k == r``) the
    classes have order 1, i.e. they are the eigenvalues of ``h`` themselves.
    """
    validate(h)
    mode = power_mode(h.r, s, k)
    if h.has_isolated():
        raise IsolatedVertexError("spectrum operations need a hypergraph without isolated vertices")
    if mode == "identity":
        subgraphs = [UniformHypergraph(h.r, h.n, h.edges, labels=tuple(range(h.n)))]
    elif mode == "induced":
        subgraphs = list(enumerate_induced_subgraphs(h, max_vertices=max_vertices))
    else:
        subgraphs = list(enumerate_subgraphs(h, max_edges=max_edges))

    if jobs > 1 and len(subgraphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            spectra = list(pool.map(_betas_job, [(g, supplied) for g in subgraphs], chunksize=8))
    else:
        cache: dict = {}
        spectra = [subgraph_betas(g, supplied, cache) for g in subgraphs]

    classes: list[PowerClass] = []
    for g, betas in zip(subgraphs, spectra):
        cf = canonical_form(g)
        for beta in betas:
            rc = RootClass(beta, 1) if mode == "identity" else kth_root_class(beta, h.r, s, k)
            wit = Witness(g, cf, beta)
            for pc in classes:
                if pc.root_class.matches(rc, tol_dedup):
                    pc.others.append(wit)
                    break
            else:
                classes.append(PowerClass(rc, wit))
    classes.sort(key=lambda pc: _spectral_key(pc.root_class.c))
    return PowerSpectrumResult(h.r, s, k, mode, classes)


@dataclass(frozen=True)
class Membership:
    found: bool
    witness: Witness | None = None
    root_class: RootClass | None = None

    def __bool__(self):
        return self.found


def is_power_eigenvalue(
    h: UniformHypergraph, s: int, k: int, lam, *, tol: float = TOL_DEDUP, result: PowerSpectrumResult | None = None, **kwargs
) -> Membership:
    lam = complex(lam)
    if lam == 0:
        raise ZeroEigenvalueQuery("only nonzero eigenvalues are characterised")
    result = result or power_spectrum(h, s, k, **kwargs)
    pc = result.find(lam, tol)
    if pc is None:
        return Membership(False)
    return Membership(True, pc.witness, pc.root_class)


# lifting and descent

def _unit_root(k: int, j: int) -> complex:
    return cmath.rect(1.0, 2 * math.pi * (j % k) / k)


def _principal_root(z: complex, k: int) -> complex:
    return complex(z) ** (1.0 / k) if z != 0 else 0j


def _solve_labels(h: UniformHypergraph, target: int, k: int, cap: int, exhausted):
    """Labels ``a_v`` in Z_k with ``sum(a_v for v in e) == target (mod k)`` on every edge."""
    order = []
    seen = set()
    for start in range(h.n):
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for j in h.incidence[v]:
                for w in h.edges[j]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
    position = {v: i for i, v in enumerate(order)}
    ready = [[] for _ in order]
    for e in h.edges:
        ready[max(position[v] for v in e)].append(e)
    labels = {}
    visited = [0]

    def assign(i):
        if i == len(order):
            return True
        v = order[i]
        for a in range(k):
            visited[0] += 1
            if visited[0] > cap:
                raise exhausted(f"root search exceeded {cap} combinations")
            labels[v] = a
            if all(sum(labels[w] for w in e) % k == target for e in ready[i]):
                if assign(i + 1):
                    return True
        del labels[v]
        return False

    return labels if assign(0) else None


def lift_eigenpair(
    h: UniformHypergraph,
    s: int,
    k: int,
    beta,
    y,
    lam,
    *,
    tol_eig: float = TOL_EIG,
    root_search_cap: int = ROOT_SEARCH_CAP,
) -> Eigenpair:
    """Build an eigenvector of ``H^k_s`` for ``lam`` from a strictly nonzero eigenpair ``(beta, y)`` of ``h``.

    Every vertex of ``S_v`` receives the principal k-th root of ``y_v^r``.  When
    ``k > rs`` the additional vertices of an edge ``e`` receive a k-th root ``t``
    of ``y^e / beta``; the remaining k-th root of unity needed to balance the
    edge is placed on its first additional vertex.  When ``k == rs`` there are
    no additional vertices and the balancing roots are spread over the copy
    sets by a bounded search.
    """
    r, rs = h.r, h.r * s
    power_mode(r, s, k)
    base = verify_eigenpair(h, beta, y, tol_eig)
    if not is_strictly_nonzero(base):
        raise PreconditionViolated("lifting needs a strictly nonzero eigenpair")
    beta, y, lam = complex(beta), base.vector, complex(lam)
    c = beta**rs
    if abs(lam**k - c) >= 1e-9 * max(1.0, abs(c)):
        raise PreconditionViolated(f"lam**k = {lam**k} differs from beta**(rs) = {c}")

    hks = generalized_power(h, s, k)
    layout = power_layout(hks)
    x = np.zeros(hks.n, dtype=complex)
    rho = [_principal_root(y[v] ** r, k) for v in range(h.n)]
    a = k - rs

    if a >= 1:
        for v, group in layout.vertex_groups.items():
            x[group] = rho[v]
        for e, group in layout.edge_groups.items():
            M = np.prod([rho[v] ** s for v in e])
            t0 = _principal_root(np.prod(y[list(e)]) / beta, k)
            scale = max(abs(M), 1e-300)
            for j in range(k):
                t = t0 * _unit_root(k, j)
                if abs(M - lam * t**rs) < 1e-9 * scale:
                    omega = 1.0
                    break
            else:
                t = t0
                raw = lam * t**rs / M
                omega = _unit_root(k, round(cmath.phase(raw) * k / (2 * math.pi)))
                if abs(raw - omega) > 1e-6:
                    raise LiftSearchExhausted(f"edge {e}: balancing factor {raw} is not a root of unity")
            x[group] = t
            x[group[0]] = omega * t
    else:
        ratio = lam / beta
        target = round(cmath.phase(ratio) * k / (2 * math.pi)) % k
        labels = _solve_labels(h, target, k, root_search_cap, LiftSearchExhausted)
        if labels is None:
            raise LiftSearchExhausted(
                f"no assignment of k-th roots realises lam = {lam} from beta = {beta} on this eigenvector"
            )
        for v, group in layout.vertex_groups.items():
            P = y[v] * _unit_root(k, labels[v])
            x[group] = rho[v]
            x[group[-1]] = rho[v] * P / rho[v] ** s
    return verify_eigenpair(hks, lam, x, tol_eig)


def descend_eigenpair(
    hks: UniformHypergraph,
    p: Eigenpair,
    *,
    tol_eig: float = TOL_EIG,
    search_cap: int = ROOT_SEARCH_CAP,
) -> Eigenpair:
    """Recover an eigenpair ``(beta, y)`` of the base from a strictly nonzero eigenpair of ``H^k_s``.

    ``beta`` is an rs-th root of ``lam^k`` and each ``y_v`` an r-th root of
    ``x_v^k``; the roots are chosen by a search (principal roots first) that
    checks the base eigen-equations as soon as their vertices are fixed.
    """
    prov = hks.provenance
    if prov is None:
        raise PreconditionViolated("descent needs a hypergraph built by generalized_power")
    h, s, k = prov.base, prov.s, prov.k
    r, rs = h.r, h.r * s
    if hks.n != h.n * s + (k - rs) * h.m:
        raise PreconditionViolated("descent needs the full generalized power hypergraph")
    if not is_strictly_nonzero(p):
        raise PreconditionViolated("descent needs a strictly nonzero eigenpair")
    layout = power_layout(hks)
    xv = np.array([p.vector[layout.vertex_groups[v][0]] for v in range(h.n)])
    Y = xv**k
    y0 = [_principal_root(Y[v], r) for v in range(h.n)]
    lamk = complex(p.lam) ** k

    order = sorted(range(h.n), key=lambda v: (-h.degrees[v], v))
    # breadth-first from the highest-degree vertex keeps equations checkable early
    bfs, seen = [], set()
    for start in order:
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop(0)
            bfs.append(v)
            for j in h.incidence[v]:
                for w in h.edges[j]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
    position = {v: i for i, v in enumerate(bfs)}
    checks = [[] for _ in bfs]
    for v in range(h.n):
        closed = {v} | {w for j in h.incidence[v] for w in h.edges[j]}
        checks[max(position[w] for w in closed)].append(v)

    visited = [0]
    for jb in range(rs):
        beta = _principal_root(lamk, rs) * _unit_root(rs, jb)
        y = np.zeros(h.n, dtype=complex)

        def ok(v):
            lhs = sum(np.prod(y[list(h.edges[j])]) for j in h.incidence[v])
            rhs = beta * Y[v]
            scale = sum(abs(np.prod(y[list(h.edges[j])])) for j in h.incidence[v]) + abs(rhs)
            return abs(lhs - rhs) <= 1e-6 * max(scale, 1e-300)

        def assign(i):
            if i == len(bfs):
                return True
            v = bfs[i]
            for j in range(r):
                visited[0] += 1
                if visited[0] > search_cap:
                    raise DescentSearchExhausted(f"root search exceeded {search_cap} combinations")
                y[v] = y0[v] * _unit_root(r, j)
                if all(ok(w) for w in checks[i]) and assign(i + 1):
                    return True
            y[v] = 0
            return False

        if assign(0):
            return verify_eigenpair(h, beta, y, tol_eig)
    raise DescentSearchExhausted("no choice of roots satisfies the base eigen-equations")


# certification

def embed_into_power(
    h: UniformHypergraph,
    s: int,
    k: int,
    sub: UniformHypergraph,
    sub_labels,
    pair: Eigenpair,
    *,
    hks: UniformHypergraph | None = None,
    tol_eig: float = TOL_EIG,
) -> tuple[UniformHypergraph, Eigenpair]:
    """Zero-pad an eigenpair of ``sub^k_s`` into ``h^k_s``.

    ``sub`` is a subgraph of ``h`` without isolated vertices whose vertex ``i``
    is ``sub_labels[i]`` in ``h``.  The vertices of ``h`` outside ``sub`` are
    removed from ``h^k_s`` one at a time, then one additional vertex from each
    edge of ``h`` missing in ``sub``; the pair is carried back up that chain
    with the twin-vertex or degree-one lift, whichever applies at each step.
    """
    hks = hks if hks is not None else generalized_power(h, s, k)
    keep = set(sub_labels)
    sub_edges = {tuple(sorted(sub_labels[v] for v in e)) for e in sub.edges}

    steps = []
    cur, to_top = hks, list(range(hks.n))

    def drop(idx):
        nonlocal cur, to_top
        nxt = remove_vertices(cur, [idx])
        steps.append((cur, idx))
        to_top = [to_top[i] for i in nxt.labels]
        cur = nxt

    for v in range(h.n):
        if v not in keep and v in to_top:
            drop(to_top.index(v))
    while True:
        tags = cur.provenance.tags
        extra = None
        for e in cur.edges:
            base_e = tuple(sorted({tags[w].vertex for w in e if not isinstance(tags[w], Additional)}))
            if base_e not in sub_edges:
                extra = [w for w in e if isinstance(tags[w], Additional)]
                if not extra:
                    raise PreconditionViolated(f"edge {base_e} has no additional vertex to remove")
                break
        if extra is None:
            break
        drop(extra[0])

    values = {}
    sub_power = generalized_power(sub, s, k)
    for w, tag in enumerate(sub_power.provenance.tags):
        values[translate_tag(tag, sub_labels)] = pair.vector[w]
    tags = cur.provenance.tags
    if set(tags) != set(values):
        raise PreconditionViolated("the removal chain does not reproduce the subgraph's power hypergraph")
    p = verify_eigenpair(cur, pair.lam, [values[t] for t in tags], tol_eig)

    for graph, idx in reversed(steps):
        twin = next((u for u in range(graph.n) if u != idx and graph.incidence[u] == graph.incidence[idx]), None)
        if twin is not None:
            p = duplicate_vertex_lift(graph, idx, twin, p, tol_eig)
        else:
            p = degree_one_lift(graph, idx, p, tol_eig)
    return hks, p


@dataclass
class ClassCertificate:
    root_class: RootClass
    witness: Witness
    certified: bool
    max_residual: float = float("nan")
    eigenpairs: list = field(default_factory=list)
    error: str | None = None


@dataclass
class CertificationReport:
    result: PowerSpectrumResult
    classes: list
    hks: UniformHypergraph | None = None

    @property
    def passed(self) -> int:
        return sum(c.certified for c in self.classes)

    @property
    def all_certified(self) -> bool:
        return all(c.certified for c in self.classes)


def _witness_eigenpair(w: Witness, supplied, seed: int, tol_eig: float) -> Eigenpair:
    g = w.subgraph
    if g.r == 2:
        return verify_eigenpair(g, w.beta, graph_eigenvector(g, w.beta, seed=seed), tol_eig)
    for comp in connected_components(g):
        key = canonical_form(comp).decode()
        for beta, vec in (supplied or {}).get(key, []):
            if abs(complex(beta) - w.beta) < TOL_DEDUP:
                _, perm = canonical_labeling(comp)
                x = np.zeros(g.n, dtype=complex)
                vec = np.asarray(vec, dtype=complex)
                for i in range(comp.n):
                    x[comp.labels[i]] = vec[perm[i]]
                return verify_eigenpair(g, w.beta, x, tol_eig)
    raise UnsupportedBaseRank("no eigenvector available for this witness")


def certify_spectrum(
    h: UniformHypergraph,
    s: int,
    k: int,
    *,
    result: PowerSpectrumResult | None = None,
    supplied: dict | None = None,
    seed: int = 0,
    tol_eig: float = TOL_EIG,
    tol_zero: float = TOL_ZERO,
    **kwargs,
) -> CertificationReport:
    """Rebuild and verify an eigenvector of ``H^k_s`` for every root of every class.

    A class passes when each of its roots yields a verified eigenpair of the
    full power hypergraph.
    """
    result = result or power_spectrum(h, s, k, supplied=supplied, **kwargs)
    hks = generalized_power(h, s, k)
    certs = []
    for pc in result.classes:
        w = pc.witness
        cert = ClassCertificate(pc.root_class, w, False)
        try:
            pair = _witness_eigenpair(w, supplied, seed, tol_eig)
            if result.mode == "identity":
                full = verify_eigenpair(h, w.beta, pair.vector, tol_eig)
                cert.eigenpairs.append(full)
            else:
                sub, strict = zero_support_restrict(w.subgraph, pair, tol_zero, tol_eig)
                labels = [w.subgraph.labels[i] for i in sub.labels] if sub is not w.subgraph else list(w.subgraph.labels)
                for lam in enumerate_roots(pc.root_class):
                    lifted = lift_eigenpair(sub, s, k, w.beta, strict.vector, lam, tol_eig=tol_eig)
                    _, full = embed_into_power(h, s, k, sub, labels, lifted, hks=hks, tol_eig=tol_eig)
                    cert.eigenpairs.append(full)
            cert.max_residual = max(p.residual for p in cert.eigenpairs)
            cert.certified = cert.max_residual < 1e-8
        except PowerSpecError as exc:
            cert.error = f"{type(exc).__name__}: {exc}"
        pc.certified = cert.certified
        certs.append(cert)
    return CertificationReport(result, certs, hks)
