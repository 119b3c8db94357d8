"""Acceptance suite: one test per criterion, exact tolerances, one
printed pass/fail line each (see conftest terminal summary).

The exhaustive bound sweep covers n <= 12 by default (about a minute of
generation); set MATCHBOUNDS_SWEEP_MAX_N=10 for quicker iteration.
"""

from __future__ import annotations

import time
from fractions import Fraction

from matchbounds.bounds import (
    BoundSpec,
    valid_constant,
    counterexample,
    counterexample_slacks,
    evaluate_bound,
    sharp_bounds,
)
from matchbounds.cli import main as cli_main
from matchbounds.enumeration import random_subcubic
from matchbounds.families import (
    FAMILY_IDS,
    FamilySpec,
    admissible_t,
    closed_nu,
    closed_profile,
    family_for_halfspace,
    family_order,
    generate,
)
from matchbounds.graphs import Graph, degree_profile
from matchbounds.matching import brute_force_nu, max_matching, nu
from matchbounds.polytope import (
    CoefficientTriple,
    contains,
    polyhedron_P,
    polyhedron_P_plus,
    triple,
    vertices,
)
from matchbounds.structure import gallai_edmonds, verify_ge_properties

from .conftest import connected_upto, record_criterion

F = Fraction

TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
K13 = Graph(4, [(0, 1), (0, 2), (0, 3)])

THIRTEEN_EXTREME_POINTS = frozenset({
    triple("0", "1/2", "1/2"), triple("0", "1/3", "2/3"),
    triple("1/4", "1/2", "1/4"), triple("7/16", "3/8", "3/16"),
    triple("4/9", "1/3", "2/9"), triple("1/4", "1/2", "0"),
    triple("7/16", "3/8", "0"), triple("0", "1/2", "0"),
    triple("4/9", "0", "0"), triple("0", "0", "0"),
    triple("4/9", "1/3", "0"), triple("0", "0", "2/3"),
    triple("4/9", "0", "2/9"),
})


def test_criterion_01_extreme_point_recovery(capsys):
    started = time.time()
    got = vertices(polyhedron_P_plus())
    code = cli_main(["polytope", "vertices"])
    elapsed = time.time() - started
    lines = capsys.readouterr().out.strip().splitlines()
    printed = {tuple(F(p) for p in line.split(",")) for line in lines}
    expected = {v.as_tuple() for v in THIRTEEN_EXTREME_POINTS}
    ok = (
        got == THIRTEEN_EXTREME_POINTS
        and code == 0
        and len(lines) == 13
        and printed == expected
        and elapsed < 1.0
    )
    record_criterion(1, ok, f"13 extreme points recovered exactly in {elapsed:.3f}s")
    assert ok


def test_criterion_02_bound_sweep(sweep_corpus_by_n):
    specs = sharp_bounds()
    max_n = max(sweep_corpus_by_n)
    graphs_checked = 0
    violations = 0
    for g in connected_upto(sweep_corpus_by_n, max_n):
        graphs_checked += 1
        for spec in specs:
            if evaluate_bound(g, spec).slack < 0:
                violations += 1
    ok = violations == 0
    record_criterion(
        2, ok,
        f"all five bounds hold on {graphs_checked} connected subcubic "
        f"graphs (n<={max_n}), {violations} violations",
    )
    assert violations == 0


def test_criterion_03_sharpness_fixtures():
    by_name = {s.name: s for s in sharp_bounds()}
    fixed_graphs = [
        (TRIANGLE, "b4"), (C5, "b1"), (C5, "b3"),
        (K13, "b1"), (K13, "b2"), (K13, "b5"),
    ]
    family_pairs = [
        ("G1", "b2"), ("G1", "b5"), ("G2", "b5"), ("G6", "b1"), ("G6", "b3"),
    ]
    failures = []
    for g, name in fixed_graphs:
        if not evaluate_bound(g, by_name[name]).tight:
            failures.append((name, "fixed"))
    for fid, name in family_pairs:
        t0 = next(iter(admissible_t(fid)))
        g = generate(FamilySpec(fid, t0))
        if not evaluate_bound(g, by_name[name]).tight:
            failures.append((name, fid))
    ok = not failures
    record_criterion(3, ok, f"11 sharpness fixtures tight exactly ({failures or 'none failed'})")
    assert not failures


def test_criterion_04_family_closed_forms():
    checked = 0
    failures = []
    for fid in FAMILY_IDS:
        for t in admissible_t(fid):
            spec = FamilySpec(fid, t)
            if family_order(spec) > 60:
                break
            g = generate(spec)
            if degree_profile(g) != closed_profile(spec):
                failures.append((spec, "profile"))
            if len(max_matching(g)) != closed_nu(spec):
                failures.append((spec, "nu"))
            checked += 1
    record_criterion(
        4, not failures,
        f"closed forms certified on {checked} family members (<=60 vertices)"
        + (f"; failures: {failures}" if failures else ""),
    )
    assert not failures


def _facet_probe(index: int) -> CoefficientTriple:
    """A triple just outside facet ``index``: the centroid of the facet's
    nonnegative-part vertices, nudged 1/100 along the facet normal, then
    pulled back onto any other constraint it crosses."""
    p = polyhedron_P()
    h = p.halfspaces[index]
    on_facet = [v for v in THIRTEEN_EXTREME_POINTS if h.value(v) == h.b]
    k = len(on_facet)
    centroid = CoefficientTriple(
        sum(v.x3 for v in on_facet) / k,
        sum(v.x2 for v in on_facet) / k,
        sum(v.x1 for v in on_facet) / k,
    )
    step = F(1, 100)
    x = CoefficientTriple(
        centroid.x3 + step * h.a3,
        centroid.x2 + step * h.a2,
        centroid.x1 + step * h.a1,
    )
    for _ in range(6):
        moved = False
        for j, other in enumerate(p.halfspaces):
            if j == index:
                continue
            excess = other.value(x) - other.b
            if excess > 0:
                norm = other.a3 ** 2 + other.a2 ** 2 + other.a1 ** 2
                x = CoefficientTriple(
                    x.x3 - other.a3 * excess / norm,
                    x.x2 - other.a2 * excess / norm,
                    x.x1 - other.a1 * excess / norm,
                )
                moved = True
        if not moved:
            break
    return x


def test_criterion_05_counterexamples_for_every_constraint():
    p = polyhedron_P()
    lines = []
    ok = True
    for index in range(6):
        probe = _facet_probe(index)
        verdict = contains(p, probe)
        expected_family = family_for_halfspace(index + 1)
        if verdict.inside or index not in verdict.violated:
            ok = False
            continue
        spec, _, rep = counterexample(probe, F(0))
        slacks = [s for _, s in counterexample_slacks(
            spec.family_id, spec.t, 5, probe, F(0)
        )]
        decreasing = all(b < a for a, b in zip(slacks, slacks[1:]))
        negative = all(s < 0 for s in slacks)
        if not (spec.family_id == expected_family and rep.slack < 0
                and decreasing and negative):
            ok = False
        lines.append(f"{p.halfspaces[index].label}->{spec.family_id}(t={spec.t})")
    record_criterion(5, ok, "boundary+1/100 probes refuted: " + ", ".join(lines))
    assert ok


def test_criterion_06_rejected_sum_triple_refuted(capsys):
    probe = triple("1/3", "4/9", "1/3")
    verdict = contains(polyhedron_P(), probe)
    rejected = not verdict.inside and verdict.violated == (4,)  # x3+x2+x1 <= 1
    cli_code = cli_main(["counterexample", "--triple", "1/3", "4/9", "1/3",
                         "--k", "0/1"])
    cli_out = capsys.readouterr().out
    spec, g, rep = counterexample(probe, F(0))
    certified = (
        spec.family_id == "G3" and rep.lhs < rep.rhs
        and cli_code == 1 and "family=G3" in cli_out
    )
    slope_ok = True
    for t in range(2, 10):
        fam = FamilySpec("G3", t)
        observed = brute_force_nu(generate(fam))
        prof = closed_profile(fam)
        rhs = probe.x3 * prof.n3 + probe.x2 * prof.n2 + probe.x1 * prof.n1
        if observed - rhs != F(-t, 9):
            slope_ok = False
    ok = rejected and certified and slope_ok
    record_criterion(
        6, ok,
        f"(1/3,4/9,1/3) rejected; {spec.family_id}(t={spec.t}) certifies "
        f"slack {rep.slack}; slack equals -t/9 for t=2..9 (oracle-checked)",
    )
    assert ok


def test_criterion_07_decomposition_suite(corpus_by_n):
    started = time.time()
    checked = 0
    failures = 0
    for g in connected_upto(corpus_by_n, 9):
        d = gallai_edmonds(g)
        rep = verify_ge_properties(g, d)
        prof = degree_profile(g)
        if not rep.all_true() or prof.n3 < prof.n1 - 2:
            failures += 1
        checked += 1
    elapsed = time.time() - started
    ok = failures == 0 and elapsed < 300
    record_criterion(
        7, ok,
        f"decomposition properties and the degree-surplus inequality hold "
        f"on {checked} graphs (n<=9), {failures} failures, in {elapsed:.1f}s",
    )
    assert ok


def test_criterion_08_unit_constant_for_nonnegative_extremes(sweep_corpus_by_n):
    points = sorted(THIRTEEN_EXTREME_POINTS, key=lambda v: v.as_tuple())
    max_n = max(sweep_corpus_by_n)
    checked = 0
    failures = 0
    for g in connected_upto(sweep_corpus_by_n, max_n):
        prof = degree_profile(g)
        value = nu(g)
        for pt in points:
            if value < pt.x3 * prof.n3 + pt.x2 * prof.n2 + pt.x1 * prof.n1 - 1:
                failures += 1
        checked += 1
    negative_pt = triple(-1, 0, "5/3")
    constant = valid_constant(negative_pt)
    rep = evaluate_bound(
        K13, BoundSpec(triple=negative_pt, k_const=constant, per_component=False)
    )
    ok = failures == 0 and constant == 3 and rep.slack == 0
    record_criterion(
        8, ok,
        f"nu >= coefficients - 1 for all 13 extreme points on {checked} "
        f"graphs (n<={max_n}); the negative-coefficient constant 3 is sharp on the claw",
    )
    assert ok


def test_criterion_09_matcher_oracle_agreement(corpus_by_n):
    mismatches = 0
    corpus_size = 0
    for g in connected_upto(corpus_by_n, 10):
        corpus_size += 1
        if len(max_matching(g)) != brute_force_nu(g):
            mismatches += 1
    random_checked = 0
    for i in range(1000):
        n = 4 + (i % 13)  # orders 4..16
        g = random_subcubic(n, seed=i)
        random_checked += 1
        if len(max_matching(g)) != brute_force_nu(g):
            mismatches += 1
    ok = mismatches == 0
    record_criterion(
        9, ok,
        f"blossom equals brute force on {corpus_size} exhaustive + "
        f"{random_checked} random graphs, {mismatches} discrepancies",
    )
    assert mismatches == 0
