"""Isomorphism-invariant encodings of small uniform hypergraphs.

Vertices lying in exactly the same edges ("twins") are interchangeable, so
the hypergraph is first collapsed to its twin classes (each class remembers
its size).  The quotient is searched with colour refinement plus
individualisation, pruning branches with automorphisms discovered at the
leaves.  Generalized power hypergraphs consist almost entirely of twin
classes, which keeps the search tiny even when they have dozens of vertices.
"""

from __future__ import annotations

from .errors import TooLarge

CANONICAL_CAP = 64
LEAF_BUDGET = 200_000


def _rank(values):
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def _refine(colors, adj):
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[i], tuple(sorted(colors[j] for j in adj[i]))) for i in range(len(colors))]
        new = _rank(sigs)
        count = len(set(new))
        if count == ncolors:
            return new
        colors, ncolors = new, count


def _individualize(colors, x):
    return _rank([2 * c + (0 if i == x else 1) for i, c in enumerate(colors)])


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_labeling(h, max_vertices: int | None = CANONICAL_CAP):
    """Return ``(certificate, perm)`` where ``perm[v]`` is the canonical position of vertex ``v``.

    Two hypergraphs have equal certificates iff they are isomorphic, and
    relabelling by ``perm`` maps isomorphic inputs to identical edge lists.
    """
    n, r, edges = h.n, h.r, h.edges
    if max_vertices is not None and n > max_vertices:
        raise TooLarge(f"canonical form limited to {max_vertices} vertices (got {n})")

    membership = [[] for _ in range(n)]
    for j, e in enumerate(edges):
        for v in e:
            membership[v].append(j)
    groups: dict[tuple, list[int]] = {}
    for v in range(n):
        groups.setdefault(tuple(membership[v]), []).append(v)
    keys = list(groups)
    nclass, m = len(keys), len(edges)

    adj = [[] for _ in range(nclass + m)]
    for c, key in enumerate(keys):
        for j in key:
            adj[c].append(nclass + j)
            adj[nclass + j].append(c)
    sizes = [len(groups[key]) for key in keys]
    colors = _refine(_rank([(0, sz) for sz in sizes] + [(1, 0)] * m), adj)

    best = {"cert": None, "lab": None}
    automorphisms: list[list[int]] = []
    leaves = [0]

    def leaf(colors):
        leaves[0] += 1
        if leaves[0] > LEAF_BUDGET:
            raise TooLarge("canonical search exceeded its leaf budget")
        lab = colors[:nclass]
        size_seq = [0] * nclass
        for c in range(nclass):
            size_seq[lab[c]] = sizes[c]
        edge_seq = sorted(tuple(sorted(lab[c] for c in adj[nclass + j])) for j in range(m))
        cert = (tuple(size_seq), tuple(edge_seq))
        if best["cert"] is None or cert < best["cert"]:
            best["cert"], best["lab"] = cert, lab
        elif cert == best["cert"]:
            inverse = {p: c for c, p in enumerate(best["lab"])}
            automorphisms.append([inverse[lab[c]] for c in range(nclass)])

    def search(colors, path):
        counts: dict[int, int] = {}
        for c in range(nclass):
            counts[colors[c]] = counts.get(colors[c], 0) + 1
        split = [col for col, cnt in counts.items() if cnt > 1]
        if not split:
            leaf(colors)
            return
        target = min(split)
        members = [c for c in range(nclass) if colors[c] == target]
        explored: list[int] = []
        for x in members:
            if explored:
                uf = _UnionFind()
                for g in automorphisms:
                    if all(g[p] == p for p in path):
                        for a in members:
                            uf.union(a, g[a])
                if any(uf.find(x) == uf.find(y) for y in explored):
                    continue
            explored.append(x)
            search(_refine(_individualize(colors, x), adj), path + [x])

    search(colors, [])

    order = sorted(range(n), key=lambda v: (best["lab"][keys.index(tuple(membership[v]))], v))
    perm = [0] * n
    for pos, v in enumerate(order):
        perm[v] = pos
    cert = (r, n) + best["cert"]
    return cert, perm


def canonical_form(h, max_vertices: int | None = CANONICAL_CAP) -> bytes:
    cert, _ = canonical_labeling(h, max_vertices=max_vertices)
    r, n, sizes, edges = cert
    body = ";".join(",".join(map(str, e)) for e in edges)
    return f"r{r}n{n}|{','.join(map(str, sizes))}|{body}".encode()
