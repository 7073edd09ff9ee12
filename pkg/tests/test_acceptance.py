"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

The lines are also collected and repeated in pytest's terminal summary.
"""

import math
import statistics
import time

import numpy as np
import pytest

from conftest import cycle, path, star
from powerspec.check import (
    check_edge_removal_commutes,
    check_pendant_removal,
    check_vertex_removal_commutes,
    random_instance,
    random_orders,
    round_trip,
)
from powerspec.errors import RelationViolated
from powerspec.hypergraph import Copy, expand
from powerspec.power import certify_spectrum, is_power_eigenvalue, power_spectrum
from powerspec.spectral import RootClass, enumerate_roots, graph_spectrum, hopm_radius
from powerspec.tensor import Eigenpair, check_copy_relations, eigen_residual

NU = (1 + math.sqrt(5)) / 2
RESULTS: dict[int, str] = {}


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[number] = line
    print(line)
    assert ok, line


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def class_bases(result):
    """Real parts of the class bases, sorted; every base here must be real."""
    assert all(abs(pc.root_class.c.imag) < 1e-9 for pc in result.classes)
    return sorted(pc.root_class.c.real for pc in result.classes)


def test_criterion_1_cycle_spectrum():
    graph_spectrum(cycle(4))  # warm-up
    times, values = [], None
    for _ in range(5):
        values, dt = timed(graph_spectrum, cycle(4))
        times.append(dt)
    nonzero = sorted(z.real for z in values if abs(z) > 1e-8)
    ok = len(nonzero) == 2 and abs(nonzero[0] + 2) < 1e-8 and abs(nonzero[1] - 2) < 1e-8
    runtime = statistics.median(times)
    report(1, ok and runtime < 0.010, f"nonzero eigenvalues {nonzero}, median runtime {runtime * 1e3:.2f} ms")


def test_criterion_2_cube_of_cycle():
    start = time.perf_counter()
    res = power_spectrum(cycle(4), 1, 3)
    bases = class_bases(res)
    classes_ok = (
        len(bases) == 3
        and all(abs(b - t) < 1e-7 for b, t in zip(bases, [1, 2, 4]))
        and all(pc.root_class.order == 3 for pc in res.classes)
    )
    cube_root_of_2 = bool(is_power_eigenvalue(cycle(4), 1, 3, 2 ** (1 / 3), result=res))
    golden = [bool(is_power_eigenvalue(cycle(4), 1, 3, z, result=res)) for z in enumerate_roots(RootClass(NU**2, 3))]
    runtime = time.perf_counter() - start
    ok = classes_ok and cube_root_of_2 and not any(golden) and runtime < 1.0
    report(2, ok, f"classes {[round(b, 9) for b in bases]}, 2^(1/3) member {cube_root_of_2}, "
                  f"cube roots of nu^2 members {golden}, runtime {runtime:.3f} s")


def test_criterion_3_golden_class():
    found = {}
    for k in (4, 5, 6):
        res = power_spectrum(cycle(4), 1, k)
        found[k] = any(abs(pc.root_class.c - NU**2) < 1e-7 and pc.root_class.order == k for pc in res.classes)
    report(3, all(found.values()), f"class nu^2 present for k = {found}")


def test_criterion_4_stars():
    start = time.perf_counter()
    bad = []
    for n in (3, 4, 5, 6):
        for k in (3, 4, 5):
            res = power_spectrum(star(n), 1, k)
            bases = class_bases(res)
            expected = list(range(1, n))
            if len(bases) != len(expected) or any(abs(b - p) >= 1e-7 for b, p in zip(bases, expected)) or any(
                pc.root_class.order != k for pc in res.classes
            ):
                bad.append((n, k))
    runtime = time.perf_counter() - start
    report(4, not bad and runtime < 5.0, f"12 (n, k) cases, mismatches {bad}, runtime {runtime:.3f} s")


CERTIFY_CASES = (
    [("C4", cycle(4), 1, k) for k in (3, 4, 5)]
    + [("S4", star(4), s, k) for s in (1, 2) for k in (2 * s, 2 * s + 1, 2 * s + 2)]
    + [("P4", path(4), 1, k) for k in (3, 4)]
)
_certified = {}


def certified_reports():
    if not _certified:
        for name, h, s, k in CERTIFY_CASES:
            _certified[(name, s, k)] = certify_spectrum(h, s, k)
    return _certified


def test_criterion_5_certification():
    start = time.perf_counter()
    reports = certified_reports()
    runtime = time.perf_counter() - start
    total = sum(len(r.classes) for r in reports.values())
    passed = sum(r.passed for r in reports.values())
    worst = max(eigen_residual(r.hks, p.lam, p.vector) for r in reports.values() for c in r.classes for p in c.eigenpairs)
    pairs = sum(len(c.eigenpairs) for r in reports.values() for c in r.classes)
    failures = [(key, c.root_class.c, c.error) for key, r in reports.items() for c in r.classes if not c.certified]
    ok = passed == total and worst < 1e-8 and runtime < 30.0
    report(5, ok, f"{passed}/{total} classes over {len(reports)} cases, {pairs} eigenpairs, "
                  f"max residual {worst:.2e}, runtime {runtime:.2f} s, failures {failures}")


def test_criterion_6_round_trip():
    rng = np.random.default_rng(20240601)
    gaps = []
    for _ in range(100):
        g = random_instance(rng, rs=(2,), max_n=6)
        s, k = random_orders(rng, g)
        gaps.append(round_trip(g, s, k, rng))
    worst = max(gaps)
    report(6, worst < 1e-8 and len(gaps) == 100, f"100 instances, max |beta'^rs - beta^rs| = {worst:.2e}")


def test_criterion_7_structural_identities():
    rng = np.random.default_rng(7)
    failures, pendant = 0, 0
    for trial in range(500):
        h = random_instance(rng, rs=(2, 3), max_n=8)
        s, k = random_orders(rng, h)
        try:
            pendant += check_pendant_removal(h)
            size = int(rng.integers(1, h.m + 1))
            A = [h.edges[j] for j in sorted(rng.choice(h.m, size=size, replace=False))]
            check_edge_removal_commutes(h, A, s, k)
            size = int(rng.integers(1, h.n + 1))
            I = sorted(int(v) for v in rng.choice(h.n, size=size, replace=False))
            check_vertex_removal_commutes(h, I, s, k)
        except AssertionError:
            failures += 1
    report(7, failures == 0, f"500 instances, {pendant} pendant comparisons, {failures} failures")


def test_criterion_8_spectral_radius():
    star_power = expand(star(4), 4)
    rho_star, t_star = timed(hopm_radius, star_power)
    rho_cycle, t_cycle = timed(hopm_radius, cycle(4))
    ok = abs(rho_star - 3**0.25) < 1e-6 and abs(rho_cycle - 2) < 1e-6 and t_star < 1 and t_cycle < 1
    report(8, ok, f"(S4)^4: {rho_star:.10f} vs {3 ** 0.25:.10f} in {t_star:.3f} s; C4: {rho_cycle:.10f} in {t_cycle:.3f} s")


def test_criterion_9_copy_relations():
    reports = certified_reports()
    checked, failures = 0, []
    for key, r in reports.items():
        for c in r.classes:
            for p in c.eigenpairs:
                try:
                    check_copy_relations(r.hks, p)
                    checked += 1
                except RelationViolated as exc:
                    failures.append((key, str(exc)))
    # mutation: nudge one copy of a certified eigenvector of (S4)^5_2
    r = reports[("S4", 2, 5)]
    p = r.classes[-1].eigenpairs[0]
    x = p.vector.copy()
    copy_vertex = next(w for w, t in enumerate(r.hks.provenance.tags) if isinstance(t, Copy))
    x[copy_vertex] *= 1 + 1e-4
    try:
        check_copy_relations(r.hks, Eigenpair(p.lam, x, p.residual))
        mutation_caught = False
    except RelationViolated:
        mutation_caught = True
    ok = not failures and checked > 0 and mutation_caught
    report(9, ok, f"{checked} certified eigenpairs pass, failures {failures}, perturbed vector rejected {mutation_caught}")
