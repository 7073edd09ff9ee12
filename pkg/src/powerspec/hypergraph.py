"""Uniform hypergraphs and the structural operations on them.

A :class:`UniformHypergraph` is immutable.  Operations that drop vertices
return a new hypergraph whose vertices are relabelled densely (survivors keep
their relative order) and whose ``labels`` attribute maps each new id back to
the id it had in the parent.  Hypergraphs built by :func:`generalized_power`
carry a :class:`Provenance` that tags every vertex as a main vertex, a copy of
one, or an additional vertex of some base edge; removals restrict it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Union

from .canonical import canonical_form, canonical_labeling
from .errors import (
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeNotPresent,
    EmptyResult,
    InvalidOrder,
    NonUniformEdge,
    TooLarge,
    ValidationError,
    VertexIdOutOfRange,
)

INDUCED_CAP = 16
SUBGRAPH_CAP = 20

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Main:
    vertex: int


@dataclass(frozen=True)
class Copy:
    vertex: int
    index: int


@dataclass(frozen=True)
class Additional:
    edge: Edge
    index: int


Tag = Union[Main, Copy, Additional]


@dataclass(frozen=True)
class Provenance:
    """Vertex tags of a generalized power hypergraph, relative to ``base``."""

    base: "UniformHypergraph"
    s: int
    k: int
    tags: tuple[Tag, ...]

    def restrict(self, keep: Iterable[int]) -> "Provenance":
        return Provenance(self.base, self.s, self.k, tuple(self.tags[v] for v in keep))


@dataclass(frozen=True)
class UniformHypergraph:
    r: int
    n: int
    edges: tuple[Edge, ...]
    provenance: Provenance | None = field(default=None, compare=False, repr=False)
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(int(v) for v in e)) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "n", int(self.n))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """``incidence[v]`` lists the indices of the edges containing ``v``."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def has_isolated(self) -> bool:
        return any(d == 0 for d in self.degrees)

    def validate(self) -> "UniformHypergraph":
        validate(self)
        return self

    def __str__(self):
        return f"UniformHypergraph(r={self.r}, n={self.n}, edges={list(self.edges)})"


def validate(h: UniformHypergraph) -> None:
    """Raise the first violated structural invariant of ``h``."""
    if h.r < 2:
        raise InvalidOrder(f"uniformity must be at least 2 (got {h.r})")
    if h.n < 0:
        raise ValidationError("negative vertex count")
    seen = set()
    for e in h.edges:
        if len(e) != h.r:
            raise NonUniformEdge(f"edge {e} has {len(e)} vertices, expected {h.r}")
        if len(set(e)) != len(e):
            raise DuplicateVertexInEdge(f"edge {e} repeats a vertex")
        for v in e:
            if not 0 <= v < h.n:
                raise VertexIdOutOfRange(f"vertex {v} of edge {e} not in [0, {h.n})")
        if e in seen:
            raise DuplicateEdge(f"edge {e} appears twice")
        seen.add(e)


def hypergraph(r: int, n: int, edges: Iterable[Iterable[int]]) -> UniformHypergraph:
    """Build and validate a hypergraph."""
    h = UniformHypergraph(r, n, tuple(tuple(e) for e in edges))
    validate(h)
    return h


def degree(h: UniformHypergraph, v: int) -> int:
    if not 0 <= v < h.n:
        raise VertexIdOutOfRange(f"vertex {v} not in [0, {h.n})")
    return h.degrees[v]


def _sub(h: UniformHypergraph, keep: list[int], edges: Iterable[Edge]) -> UniformHypergraph:
    index = {v: i for i, v in enumerate(keep)}
    new_edges = tuple(tuple(index[v] for v in e) for e in edges)
    prov = h.provenance.restrict(keep) if h.provenance is not None else None
    return UniformHypergraph(h.r, len(keep), new_edges, provenance=prov, labels=tuple(keep))


def _drop_edges(h: UniformHypergraph, dead_vertices: set[int], dead_edges: set[int], cleanup: bool):
    alive_edges = [e for j, e in enumerate(h.edges) if j not in dead_edges]
    covered = {v for e in alive_edges for v in e}
    keep = []
    for v in range(h.n):
        if v in dead_vertices:
            continue
        # only vertices that lost their edges are cleaned up; pre-existing isolated ones stay
        if cleanup and h.degrees[v] > 0 and v not in covered:
            continue
        keep.append(v)
    if not keep:
        raise EmptyResult("no vertices remain")
    return _sub(h, keep, alive_edges)


def remove_vertices(h: UniformHypergraph, I: Iterable[int], *, cleanup: bool = True) -> UniformHypergraph:
    """Return ``H ◁ I``: drop ``I``, every edge meeting ``I`` and the vertices left isolated.

    ``cleanup=False`` skips the last step; it exists only for fault injection
    in the property harness.
    """
    I = set(I)
    for v in I:
        if not 0 <= v < h.n:
            raise VertexIdOutOfRange(f"vertex {v} not in [0, {h.n})")
    dead_edges = {j for j, e in enumerate(h.edges) if I.intersection(e)}
    return _drop_edges(h, I, dead_edges, cleanup)


def remove_edges(h: UniformHypergraph, A: Iterable[Iterable[int]], *, cleanup: bool = True) -> UniformHypergraph:
    """Return ``H − A``: drop the edges of ``A`` and the vertices left isolated."""
    position = {e: j for j, e in enumerate(h.edges)}
    dead = set()
    for e in A:
        e = tuple(sorted(e))
        if e not in position:
            raise EdgeNotPresent(f"edge {e} is not an edge of the hypergraph")
        dead.add(position[e])
    return _drop_edges(h, set(), dead, cleanup)


def generalized_power(h: UniformHypergraph, s: int, k: int) -> UniformHypergraph:
    """Return ``H^k_s``, the k-expansion of the s-extension of ``h``.

    Layout: main vertex ``v`` keeps id ``v``; copy ``j`` of ``v`` (``1 <= j < s``)
    is ``n + v(s-1) + j - 1``; additional vertex ``i`` of the ``t``-th edge is
    ``ns + t(k-rs) + i - 1``.
    """
    if s < 1:
        raise InvalidOrder(f"extension order must be at least 1 (got {s})")
    if k < h.r * s:
        raise InvalidOrder(f"expansion order {k} is below r*s = {h.r * s}")
    n, a = h.n, k - h.r * s
    tags: list[Tag] = [Main(v) for v in range(n)]
    tags += [Copy(v, j) for v in range(n) for j in range(1, s)]
    tags += [Additional(e, i) for e in h.edges for i in range(1, a + 1)]

    def copies(v):
        return [v] + [n + v * (s - 1) + j - 1 for j in range(1, s)]

    edges = []
    for t, e in enumerate(h.edges):
        verts = [w for v in e for w in copies(v)]
        verts += [n * s + t * a + i for i in range(a)]
        edges.append(tuple(verts))
    prov = Provenance(h, s, k, tuple(tags))
    return UniformHypergraph(k, n * s + a * h.m, tuple(edges), provenance=prov)


def expand(h: UniformHypergraph, k: int) -> UniformHypergraph:
    """Return the k-expansion ``H^k`` (``k - r`` degree-one vertices added per edge)."""
    if k < h.r:
        raise InvalidOrder(f"expansion order {k} is below the uniformity {h.r}")
    return generalized_power(h, 1, k)


def extend(h: UniformHypergraph, s: int) -> UniformHypergraph:
    """Return the s-extension ``H_s`` (every vertex replaced by ``s`` twins)."""
    if s < 1:
        raise InvalidOrder(f"extension order must be at least 1 (got {s})")
    return generalized_power(h, s, h.r * s)


def induced_subgraph(h: UniformHypergraph, S: Iterable[int]) -> UniformHypergraph:
    """``H[S]``; isolated vertices are kept."""
    keep = sorted(set(S))
    for v in keep:
        if not 0 <= v < h.n:
            raise VertexIdOutOfRange(f"vertex {v} not in [0, {h.n})")
    inside = set(keep)
    return _sub(h, keep, [e for e in h.edges if inside.issuperset(e)])


def edge_subgraph(h: UniformHypergraph, A: Iterable[Edge]) -> UniformHypergraph:
    """The subgraph formed by the edges ``A`` and the vertices they cover."""
    A = [tuple(sorted(e)) for e in A]
    keep = sorted({v for e in A for v in e})
    return _sub(h, keep, A)


def _sorted_stream(candidates, dedup: bool) -> Iterator[UniformHypergraph]:
    keyed = [(canonical_form(g), g.labels, g) for g in candidates]
    keyed.sort(key=lambda t: (t[0], t[1]))
    seen = set()
    for cf, _, g in keyed:
        if dedup:
            if cf in seen:
                continue
            seen.add(cf)
        yield g


def enumerate_induced_subgraphs(
    h: UniformHypergraph, *, dedup: bool = True, max_vertices: int = INDUCED_CAP
) -> Iterator[UniformHypergraph]:
    """Induced subgraphs without isolated vertices, one per isomorphism class.

    The stream is sorted by canonical form.  With ``dedup=False`` every labelled
    subgraph is produced (sorted by canonical form, then by vertex set).
    """
    if h.n > max_vertices:
        raise TooLarge(f"induced-subgraph enumeration limited to {max_vertices} vertices (got {h.n})")
    emasks = [sum(1 << v for v in e) for e in h.edges]
    found = []
    for mask in range(1, 1 << h.n):
        inside = [em for em in emasks if em & ~mask == 0]
        cover = 0
        for em in inside:
            cover |= em
        if cover != mask:
            continue
        found.append(induced_subgraph(h, [v for v in range(h.n) if mask >> v & 1]))
    return _sorted_stream(found, dedup)


def enumerate_subgraphs(
    h: UniformHypergraph, *, dedup: bool = True, max_edges: int = SUBGRAPH_CAP
) -> Iterator[UniformHypergraph]:
    """Subgraphs spanned by nonempty edge subsets, one per isomorphism class."""
    if h.m > max_edges:
        raise TooLarge(f"subgraph enumeration limited to {max_edges} edges (got {h.m})")
    found = []
    for mask in range(1, 1 << h.m):
        found.append(edge_subgraph(h, [e for j, e in enumerate(h.edges) if mask >> j & 1]))
    return _sorted_stream(found, dedup)


def relabel(h: UniformHypergraph, perm) -> UniformHypergraph:
    """Rename vertex ``v`` to ``perm[v]``."""
    return UniformHypergraph(h.r, h.n, tuple(tuple(perm[v] for v in e) for e in h.edges))


def canonical_relabel(h: UniformHypergraph) -> UniformHypergraph:
    """The representative of ``h``'s isomorphism class used for supplied eigenpairs."""
    _, perm = canonical_labeling(h)
    return relabel(h, perm)


def connected_components(h: UniformHypergraph) -> list[UniformHypergraph]:
    """Components as labelled subgraphs; isolated vertices form their own components."""
    parent = list(range(h.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in h.edges:
        for v in e[1:]:
            ra, rb = find(e[0]), find(v)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), []).append(v)
    return [induced_subgraph(h, vs) for vs in groups.values()]


def is_connected(h: UniformHypergraph) -> bool:
    return h.n > 0 and len(connected_components(h)) == 1


@dataclass(frozen=True)
class PowerLayout:
    """Groups of twin vertices of a generalized power hypergraph.

    ``vertex_groups[v]`` lists the ids of ``S_v`` (main vertex first) and
    ``edge_groups[e]`` the additional vertices ``S_e``, both in tag order.
    ``edge_of[j]`` is the base edge behind the ``j``-th edge.
    """

    r: int
    s: int
    k: int
    vertex_groups: dict
    edge_groups: dict
    edge_of: tuple


def power_layout(hks: UniformHypergraph) -> PowerLayout:
    prov = hks.provenance
    if prov is None:
        raise ValidationError("hypergraph carries no power provenance")
    vgroups: dict[int, list] = {}
    egroups: dict[Edge, list] = {}
    for w, tag in enumerate(prov.tags):
        if isinstance(tag, Main):
            vgroups.setdefault(tag.vertex, []).append((0, w))
        elif isinstance(tag, Copy):
            vgroups.setdefault(tag.vertex, []).append((tag.index, w))
        else:
            egroups.setdefault(tag.edge, []).append((tag.index, w))
    vgroups = {v: [w for _, w in sorted(ws)] for v, ws in vgroups.items()}
    egroups = {e: [w for _, w in sorted(ws)] for e, ws in egroups.items()}
    edge_of = tuple(base_edge_of(hks, e) for e in hks.edges)
    return PowerLayout(prov.base.r, prov.s, prov.k, vgroups, egroups, edge_of)


def base_edge_of(hks: UniformHypergraph, kedge: Edge) -> Edge:
    tags = hks.provenance.tags
    return tuple(sorted({tags[w].vertex for w in kedge if not isinstance(tags[w], Additional)}))


def power_edge_image(hks: UniformHypergraph, A: Iterable[Iterable[int]]) -> list[Edge]:
    """``A^k_s``: the k-edges of ``hks`` that come from the base edges in ``A``."""
    wanted = {tuple(sorted(e)) for e in A}
    return [e for e in hks.edges if base_edge_of(hks, e) in wanted]


def translate_tag(tag: Tag, labels) -> Tag:
    """Rewrite a tag relative to a base whose vertex ``v`` is ``labels[v]`` in its parent."""
    if isinstance(tag, Main):
        return Main(labels[tag.vertex])
    if isinstance(tag, Copy):
        return Copy(labels[tag.vertex], tag.index)
    return Additional(tuple(sorted(labels[v] for v in tag.edge)), tag.index)


def tagged_structure(h: UniformHypergraph, base_labels=None) -> tuple[frozenset, frozenset]:
    """Label-level description of a power hypergraph via its provenance.

    Returns (edges as frozensets of tags, set of all vertex tags).  With
    ``base_labels`` the tags are first translated into the base's parent.
    """
    tags = h.provenance.tags
    if base_labels is not None:
        tags = tuple(translate_tag(t, base_labels) for t in tags)
    edges = frozenset(frozenset(tags[w] for w in e) for e in h.edges)
    return edges, frozenset(tags)
