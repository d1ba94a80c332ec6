"""Acceptance run: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines; they are
also written to the terminal when output is captured.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache

import pytest

import corpus
from ricbound.cli import main as cli_main
from ricbound.curvature import curvature_all_edges, curvature_oracle, ollivier_curvature
from ricbound.families import (
    gen_cocktail_party,
    gen_complete,
    gen_cycle,
    gen_erdos_renyi_connected,
    gen_gosset,
    gen_halved_cube,
    gen_hypercube,
    gen_johnson,
    gen_path,
    gen_schlafli,
)
from ricbound.graph import cartesian_product
from ricbound.isomorphism import find_isomorphism
from ricbound.metrics import all_pairs, average_distance, edge_betweenness, edge_betweenness_naive
from ricbound.report import analyze, fuzz_inequality
from ricbound.rigidity import (
    cross_check_reflection_constructions,
    is_reflective,
    matching_census,
    parallel_neighbors,
    separation_sets,
)


@pytest.fixture
def verdict(capsys):
    def _emit(number: int, title: str, failures: list[str]) -> None:
        status = "PASS" if not failures else "FAIL"
        detail = "" if not failures else f" ({len(failures)} failures; first: {failures[0]})"
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title}{detail}")
        assert not failures, failures

    return _emit


@lru_cache(maxsize=None)
def report(name: str):
    return analyze(corpus.get(name), reflective=False)


def test_01_inequality(verdict):
    failures = []
    fuzz = fuzz_inequality(200, n_range=(4, 24), seed=42)
    if len(fuzz.slacks) != 200:
        failures.append(f"fuzz analysed {len(fuzz.slacks)} graphs")
    failures += [f"fuzz graph {v}" for v in fuzz.violations]
    failures += [f"{name}: slack {report(name).slack}" for name in corpus.all_names() if report(name).slack < 0]
    verdict(1, f"slack >= 0 on 200 seeded random graphs and {len(corpus.all_names())} corpus graphs", failures)


def test_02_equality_family(verdict):
    failures = [f"{name}: slack {report(name).slack}" for name in corpus.EQUALITY_NAMES if report(name).slack != 0]
    verdict(2, f"slack == 0 on all {len(corpus.EQUALITY_NAMES)} equality graphs", failures)


def test_03_strictness(verdict):
    failures = []
    expected = {"C5": Fraction(4, 5), "P3": Fraction(4, 9)}
    for name, value in expected.items():
        if report(name).slack != value:
            failures.append(f"{name}: slack {report(name).slack} != {value}")
    if not report("C6").slack > 0:
        failures.append(f"C6: slack {report('C6').slack}")
    trees = corpus.trees_up_to(8)
    for name, tree in trees.items():
        slack = analyze(tree, reflective=False, sharpness=False).slack
        if not slack > 0:
            failures.append(f"{name}: slack {slack}")
    verdict(3, f"slack > 0 on C5 (4/5), C6, P3 (4/9) and {len(trees)} trees with 3..8 vertices", failures)


def _naive_targets():
    graphs = {name: corpus.get(name) for name in corpus.small_names(10)}
    for n, p, seed in itertools.product(range(4, 11), (0.3, 0.6), range(3)):
        graphs[f"G({n},{p},{seed})"] = gen_erdos_renyi_connected(n, p, seed)
    return graphs


def test_04_betweenness(verdict):
    failures = []
    for name in corpus.all_names():
        g = corpus.get(name)
        data = all_pairs(g)
        total = edge_betweenness(g, data).total()
        if total != average_distance(g, data):
            failures.append(f"{name}: sum g = {total}")
    targets = _naive_targets()
    for name, g in targets.items():
        if dict(edge_betweenness(g)) != dict(edge_betweenness_naive(g)):
            failures.append(f"{name}: differs from geodesic enumeration")
    verdict(4, f"sum g == E d on the corpus; naive oracle agrees on {len(targets)} graphs with <= 10 vertices", failures)


def test_05_curvature_oracle(verdict):
    failures = []
    names = corpus.small_names(12)
    edges = 0
    for name in names:
        g = corpus.get(name)
        data = all_pairs(g)
        for e in g.edges:
            edges += 1
            ref = curvature_oracle(g, e, data)
            for support in ("core", "ball", "full"):
                got = ollivier_curvature(g, e, data, support=support)
                if got != ref:
                    failures.append(f"{name} {e} {support}: {got} != oracle {ref}")
    for g, value, label in (
        (gen_complete(4), 4, "K4"),
        (gen_cycle(5), 1, "C5"),
        (gen_cycle(6), 0, "C6"),
        (gen_hypercube(3), 2, "Q3"),
        (gen_path(3), 1, "P3"),
    ):
        for e in g.edges:
            if curvature_oracle(g, e) != value or ollivier_curvature(g, e) != value:
                failures.append(f"{label} {e}: expected {value}")
    verdict(5, f"LP == oracle and supports agree on {edges} edges of {len(names)} graphs; K4, C5, C6, Q3, P3 values", failures)


def test_06_sharpness(verdict):
    failures = []
    names = corpus.all_names()
    for name in names:
        rep = report(name)
        if rep.sharp != rep.equality:
            failures.append(f"{name}: sharp {rep.sharp}, slack {rep.slack}")
    verdict(6, f"sharpness <=> slack == 0 on {len(names)} corpus graphs", failures)


def test_07_rigidity(verdict):
    failures = []
    for name in corpus.EQUALITY_NAMES:
        g = corpus.get(name)
        data = all_pairs(g)
        if not is_reflective(g, data).reflective:
            failures.append(f"{name}: not reflective")
        ric = curvature_all_edges(g, data)
        for x, y in g.edges:
            c = matching_census(g, x, y, data, ric=ric[(x, y)])
            if not (c.degrees_equal and c.ric_equals_common_ball):
                failures.append(f"{name} {(x, y)}: local identity fails")
            for a, b in ((x, y), (y, x)):
                for xp in separation_sets(g, a, b, data).side_x:
                    if len(parallel_neighbors(g, (a, b), xp, data)) != 1:
                        failures.append(f"{name} {(a, b)} at {xp}: parallel partner not unique")
    for name in ("C5", "P3", "C6"):
        if is_reflective(corpus.get(name)).reflective:
            failures.append(f"{name}: reported reflective")
    for label, g in (
        ("Q4", gen_hypercube(4)),
        ("J(5,2)", gen_johnson(5, 2)),
        ("CP3", gen_cocktail_party(3)),
        ("HC4", gen_halved_cube(4)),
    ):
        res = cross_check_reflection_constructions(g)
        if not res.agree:
            failures.append(f"{label}: {res.detail}")
    verdict(7, "reflectivity, local identities, unique parallel partners and construction cross-check", failures)


def test_08_product_curvature(verdict):
    failures = []
    for label, g1, g2 in (
        ("K3 x K2", gen_complete(3), gen_complete(2)),
        ("J(4,2) x Q2", gen_johnson(4, 2), gen_hypercube(2)),
    ):
        prod = cartesian_product(g1, g2)
        r1, r2, rp = curvature_all_edges(g1), curvature_all_edges(g2), curvature_all_edges(prod)
        for u, v in prod.edges:
            (a, b), (c, d) = divmod(u, g2.n), divmod(v, g2.n)
            factor = r2[(b, d)] if a == c else r1[(a, c)]
            if rp[(u, v)] != factor:
                failures.append(f"{label} {(u, v)}: {rp[(u, v)]} != factor {factor}")
    verdict(8, "product edge curvature equals factor edge curvature on K3 x K2 and J(4,2) x Q2", failures)


def test_09_constructions(verdict):
    failures = []
    s = gen_schlafli()
    for u, v in itertools.combinations(range(s.n), 2):
        common = len(set(s.neighbors(u)) & set(s.neighbors(v)))
        want = 10 if s.has_edge(u, v) else 8
        if common != want:
            failures.append(f"Schlafli {(u, v)}: {common} common neighbours")
    if s.n != 27 or set(s.degrees()) != {16}:
        failures.append("Schlafli is not 16-regular on 27 vertices")
    g = gen_gosset()
    data = all_pairs(g)
    if g.n != 56 or set(g.degrees()) != {27}:
        failures.append("Gosset is not 27-regular on 56 vertices")
    if data.diameter() != 3:
        failures.append(f"Gosset diameter {data.diameter()}")
    if any(data.dist[v].count(3) != 1 for v in range(g.n)):
        failures.append("Gosset is not antipodal")
    for n in range(2, 9):
        if find_isomorphism(gen_johnson(n, 1), gen_complete(n)) is None:
            failures.append(f"J({n},1) not isomorphic to K{n}")
    if find_isomorphism(gen_halved_cube(4), gen_cocktail_party(4)) is None:
        failures.append("half-cube of Q4 not isomorphic to K(4x2)")
    verdict(9, "Schlafli counts, Gosset 27-regular antipodal diameter 3, J(n,1) = Kn, half Q4 = K(4x2)", failures)


def _cli_json(argv):
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main(argv)
    return code, buf.getvalue()


def test_10_determinism(verdict):
    failures = []
    for family in (["--family", "johnson", "--n", "6", "--k", "3"], ["--family", "erdos-renyi", "--n", "14", "--p", "0.4", "--seed", "9"]):
        _, one = _cli_json(["analyze", *family, "--json", "--workers", "1"])
        _, two = _cli_json(["analyze", *family, "--json", "--workers", "2"])
        if one != two:
            failures.append(f"{' '.join(family)}: JSON differs between 1 and 2 workers")
        json.loads(one)
    g = gen_halved_cube(5)
    if analyze(g, workers=1).to_json() != analyze(g, workers=3).to_json():
        failures.append("HC5: JSON differs between 1 and 3 workers")
    verdict(10, "JSON reports byte-identical across worker counts", failures)
