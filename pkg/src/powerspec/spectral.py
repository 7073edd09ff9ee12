"""Spectra of base graphs, root classes and spectral-radius iteration.

Graph spectra are computed from the characteristic polynomial.  The adjacency
matrix has integer entries, so the Faddeev-LeVerrier recurrence is run in
exact integer arithmetic.  The polynomial is then split into squarefree
factors (Yun's algorithm over the rationals) so that every factor has simple
roots, which Durand-Kerner iteration plus Newton polishing resolves to full
double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    IterationDiverged,
    NotConnected,
    TooLarge,
    UnsupportedBaseRank,
    ZeroBase,
)
from .hypergraph import UniformHypergraph, is_connected
from .tensor import TOL_ZERO, apply_adjacency

TOL_DEDUP = 1e-7
GRAPH_CAP = 32
MAX_SWEEPS = 10_000


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with coefficients listed from the highest degree down."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[0] == 0:
            coeffs.pop(0)
        if not coeffs or coeffs[0] == 0:
            raise ValueError("the zero polynomial has no leading coefficient")
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z):
        acc = 0
        for c in self.coefficients:
            acc = acc * z + c
        return acc


def adjacency_matrix(g: UniformHypergraph) -> np.ndarray:
    if g.r != 2:
        raise UnsupportedBaseRank(f"adjacency matrices exist only for graphs (r = 2), got r = {g.r}")
    A = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1
    return A


def charpoly(g: UniformHypergraph) -> Polynomial:
    """``det(tI - A)`` with exact integer coefficients (Faddeev-LeVerrier)."""
    n = g.n
    if n > GRAPH_CAP:
        raise TooLarge(f"graph spectra limited to {GRAPH_CAP} vertices (got {n})")
    A = adjacency_matrix(g).astype(object)
    coeffs = [1]
    M = np.zeros((n, n), dtype=object)
    eye = np.identity(n, dtype=np.int64).astype(object)
    for k in range(1, n + 1):
        M = A.dot(M) + coeffs[-1] * eye
        trace = int(np.trace(A.dot(M)))
        assert trace % k == 0
        coeffs.append(-trace // k)
    return Polynomial(tuple(int(c) for c in coeffs))


# exact polynomial arithmetic over Q, highest degree first

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[0] == 0:
        p.pop(0)
    return p


def _deriv(p):
    d = len(p) - 1
    return _trim([c * (d - i) for i, c in enumerate(p[:-1])]) if d > 0 else [Fraction(0)]


def _divmod(a, b):
    a = [Fraction(c) for c in a]
    b = _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = []
    for i in range(len(a) - len(b) + 1):
        coef = a[i] / b[0]
        q.append(coef)
        for j, bc in enumerate(b):
            a[i + j] -= coef * bc
    rem = _trim(a[len(a) - len(b) + 1 :] or [Fraction(0)])
    return _trim(q), rem


def _is_zero(p):
    return len(p) == 1 and p[0] == 0


def _monic(p):
    return [c / p[0] for c in p]


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while not _is_zero(b):
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: ``p = lead * prod(a_i ** i)`` with squarefree, pairwise coprime ``a_i``."""
    f = [Fraction(c) for c in p.coefficients]
    if len(f) == 1:
        return []
    out = []
    df = _deriv(f)
    a0 = _gcd(f, df)
    b = _divmod(f, a0)[0]
    c = _divmod(df, a0)[0]
    d = [x - y for x, y in zip(*_pad_pair(c, _deriv(b)))]
    i = 1
    while len(_trim(b)) > 1:
        a = _gcd(b, d)
        b = _divmod(b, a)[0]
        c = _divmod(d, a)[0]
        d = [x - y for x, y in zip(*_pad_pair(c, _deriv(b)))]
        if len(a) > 1:
            out.append((Polynomial(tuple(_monic(a))), i))
        i += 1
    return out


def _pad_pair(a, b):
    size = max(len(a), len(b))
    return [Fraction(0)] * (size - len(a)) + list(a), [Fraction(0)] * (size - len(b)) + list(b)


def durand_kerner(coeffs: Sequence[complex], max_sweeps: int = MAX_SWEEPS, newton_steps: int = 3) -> np.ndarray:
    """All roots of a polynomial with simple roots (coefficients highest degree first)."""
    c = np.asarray(coeffs, dtype=complex)
    c = c / c[0]
    d = len(c) - 1
    if d <= 0:
        return np.zeros(0, dtype=complex)
    if d == 1:
        return np.array([-c[1]])
    radius = 1.0 + float(np.max(np.abs(c[1:])))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(d) / d + 0.4))
    for _ in range(max_sweeps):
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        step = np.polyval(c, z) / np.prod(diff, axis=1)
        z = z - step
        if np.max(np.abs(step)) <= 1e-14 * max(1.0, float(np.max(np.abs(z)))):
            break
    else:
        raise IterationDiverged(f"Durand-Kerner did not converge in {max_sweeps} sweeps")
    dc = np.polyder(c)
    for _ in range(newton_steps):
        slope = np.polyval(dc, z)
        ok = slope != 0
        z[ok] = z[ok] - np.polyval(c, z[ok]) / slope[ok]
    return z


def _spectral_key(z: complex):
    z = complex(z)
    return (round(abs(z), 12), math.atan2(z.imag + 0.0, z.real))


def graph_spectrum(g: UniformHypergraph) -> np.ndarray:
    """All ``n`` adjacency eigenvalues of a graph, with multiplicity."""
    p = charpoly(g)
    coeffs = list(p.coefficients)
    zeros = 0
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
        zeros += 1
    values = [0j] * zeros
    for factor, mult in squarefree_decomposition(Polynomial(tuple(coeffs))):
        roots = durand_kerner([complex(float(c)) for c in factor.coefficients])
        # symmetric matrix: the spectrum is real
        values.extend(complex(z.real, 0.0) for z in roots for _ in range(mult))
    return np.array(sorted(values, key=_spectral_key), dtype=complex)


def graph_eigenvector(g: UniformHypergraph, beta, seed: int = 0, steps: int = 2) -> np.ndarray:
    """Eigenvector for ``beta`` by shifted inverse iteration from a random start.

    The random start makes the result a generic member of the eigenspace.
    """
    A = adjacency_matrix(g).astype(float)
    beta = complex(beta)
    shift = beta + 1e-13 * max(1.0, abs(beta))
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(g.n) + 0j
    M = A - shift * np.identity(g.n)
    for _ in range(steps):
        z = np.linalg.solve(M, z)
        z = z / np.max(np.abs(z))
    return z


@dataclass(frozen=True)
class RootClass:
    """The set ``{lam : lam**order == c}``."""

    c: complex
    order: int

    def contains(self, lam, tol: float = TOL_DEDUP) -> bool:
        return abs(complex(lam) ** self.order - self.c) < tol * max(abs(self.c), 1.0)

    def matches(self, other: "RootClass", tol: float = TOL_DEDUP) -> bool:
        return self.order == other.order and abs(self.c - other.c) < tol * max(abs(self.c), 1.0)

    def roots(self) -> list[complex]:
        return enumerate_roots(self)


def kth_root_class(beta, r: int, s: int, k: int) -> RootClass:
    beta = complex(beta)
    if beta == 0:
        raise ZeroBase("root classes need a nonzero base eigenvalue")
    return RootClass(beta ** (r * s), k)


def enumerate_roots(rc: RootClass) -> list[complex]:
    """The ``order`` roots of ``c``, sorted by argument."""
    k, c = rc.order, complex(rc.c)
    modulus, phase = abs(c) ** (1.0 / k), cmath.phase(c)
    roots = [cmath.rect(modulus, (phase + 2 * math.pi * j) / k) for j in range(k)]
    return sorted(roots, key=lambda z: math.atan2(z.imag + 0.0, z.real))


@dataclass(frozen=True)
class Spectrum:
    kind: str
    items: tuple
    tol: float = TOL_DEDUP
    k: int | None = None

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def values(self) -> list[complex]:
        """Every eigenvalue represented (root classes are expanded)."""
        if self.kind == "values":
            return list(self.items)
        return [z for rc in self.items for z in enumerate_roots(rc)]

    def contains(self, lam, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        if self.kind == "values":
            return any(abs(complex(lam) - z) < tol for z in self.items)
        return any(rc.contains(lam, tol) for rc in self.items)


def spectrum_dedup(values: Iterable, tol: float = TOL_DEDUP) -> Spectrum:
    """Greedy clustering: a value is kept unless it lies within ``tol`` of one already kept."""
    kept = []
    for v in values:
        if isinstance(v, RootClass):
            if not any(v.matches(w, tol) for w in kept):
                kept.append(v)
        else:
            v = complex(v)
            if not any(abs(v - w) < tol for w in kept):
                kept.append(v)
    if kept and isinstance(kept[0], RootClass):
        orders = {rc.order for rc in kept}
        kept.sort(key=lambda rc: (rc.order, _spectral_key(rc.c)))
        return Spectrum("root_classes", tuple(kept), tol, orders.pop() if len(orders) == 1 else None)
    kept.sort(key=_spectral_key)
    return Spectrum("values", tuple(kept), tol)


def nonzero_graph_spectrum(g: UniformHypergraph, tol_zero: float = TOL_ZERO, tol: float = TOL_DEDUP) -> Spectrum:
    return spectrum_dedup([z for z in graph_spectrum(g) if abs(z) > tol_zero], tol)


def hopm_radius(
    h: UniformHypergraph, alpha: float = 1.0, tol: float = 1e-8, max_steps: int = 100_000
) -> float:
    """Spectral radius of a connected hypergraph by shifted power iteration on the positive orthant.

    Each step maps ``x`` to ``(A x + alpha x^(r-1))^(1/(r-1))``; the min and max of
    ``(A x)_i / x_i^(r-1)`` bracket the radius, and their midpoint is returned
    once they agree to ``tol``.
    """
    if not is_connected(h) or h.m == 0:
        raise NotConnected("power iteration needs a connected hypergraph with at least one edge")
    p = h.r - 1
    x = np.ones(h.n)
    for _ in range(max_steps):
        y = apply_adjacency(h, x).real
        ratios = y / x**p
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo < tol:
            return 0.5 * (lo + hi)
        x = (y + alpha * x**p) ** (1.0 / p)
        x = x / x.max()
    raise IterationDiverged(f"power iteration did not settle within {max_steps} steps")
