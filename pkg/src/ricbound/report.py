"""Full analysis of ``E_g Ric · E d <= E Deg`` for a graph, and fuzz campaigns."""

from __future__ import annotations

import json
import random
import statistics
from dataclasses import dataclass, field
from fractions import Fraction

from .curvature import average_curvature_weighted, curvature_all_edges
from .families import gen_erdos_renyi_connected
from .graph import Graph, GraphError
from .metrics import DistanceData, EdgeMeasure, all_pairs, average_degree, average_distance, edge_betweenness, format_rational
from .rigidity import check_sharpness, is_reflective

REFLECTIVE_CAP = 500


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    m: int
    regular: bool
    diameter: int
    avg_degree: Fraction
    avg_distance: Fraction
    avg_curvature_weighted: Fraction
    betweenness: EdgeMeasure = field(repr=False)
    curvature: EdgeMeasure = field(repr=False)
    sharp: bool | None = None
    reflective: bool | None = None

    @property
    def product(self) -> Fraction:
        return self.avg_curvature_weighted * self.avg_distance

    @property
    def slack(self) -> Fraction:
        return self.avg_degree - self.product

    @property
    def equality(self) -> bool:
        return self.slack == 0

    def to_dict(self, floats: bool = False) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "avg_degree": format_rational(self.avg_degree),
            "avg_distance": format_rational(self.avg_distance),
            "avg_curvature_weighted": format_rational(self.avg_curvature_weighted),
            "product": format_rational(self.product),
            "slack": format_rational(self.slack),
            "equality": self.equality,
            "sharp": self.sharp,
            "reflective": self.reflective,
            "edges": [
                {
                    "u": u,
                    "v": v,
                    "g": format_rational(self.betweenness[(u, v)]),
                    "ric": format_rational(self.curvature[(u, v)]),
                }
                for u, v in self.betweenness
            ],
        }
        if floats:
            out["approx"] = {
                key: float(getattr(self, key))
                for key in ("avg_degree", "avg_distance", "avg_curvature_weighted", "product", "slack")
            }
        return out

    def to_json(self, floats: bool = False) -> str:
        return json.dumps(self.to_dict(floats), indent=2) + "\n"

    def edge_csv(self) -> str:
        lines = ["u,v,g_num,g_den,ric_num,ric_den"]
        for u, v in self.betweenness:
            g = Fraction(self.betweenness[(u, v)])
            r = Fraction(self.curvature[(u, v)])
            lines.append(f"{u},{v},{g.numerator},{g.denominator},{r.numerator},{r.denominator}")
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        flag = lambda b: "n/a" if b is None else ("yes" if b else "no")  # noqa: E731
        return "\n".join(
            [
                f"vertices {self.n}, edges {self.m}, diameter {self.diameter}, regular {flag(self.regular)}",
                f"E Deg        = {self.avg_degree}",
                f"E d          = {self.avg_distance}",
                f"E_g Ric      = {self.avg_curvature_weighted}",
                f"E_g Ric * Ed = {self.product}",
                f"slack        = {self.slack}",
                f"equality {flag(self.equality)}, sharp {flag(self.sharp)}, reflective {flag(self.reflective)}",
            ]
        ) + "\n"


def analyze(
    graph: Graph,
    reflective: bool | None = None,
    reflective_cap: int = REFLECTIVE_CAP,
    sharpness: bool = True,
    workers: int = 1,
    data: DistanceData | None = None,
) -> AnalysisReport:
    """Exact averages, slack and equality diagnostics for a connected graph.

    Reflectivity is computed when ``reflective`` is True, or when it is None
    and the graph has at most ``reflective_cap`` vertices.
    """
    graph.require_connected()
    if graph.m == 0:
        raise GraphError("weighted average curvature is undefined on a graph without edges")
    data = data or all_pairs(graph)
    g = edge_betweenness(graph, data, exact=True)
    ric = curvature_all_edges(graph, data, workers=workers)
    sharp = check_sharpness(graph, data, ric).sharp if sharpness else None
    if reflective is None:
        reflective = graph.n <= reflective_cap
    refl = is_reflective(graph, data, stop_early=True).reflective if reflective else None
    return AnalysisReport(
        n=graph.n,
        m=graph.m,
        regular=graph.is_regular(),
        diameter=data.diameter(),
        avg_degree=average_degree(graph),
        avg_distance=average_distance(graph, data),
        avg_curvature_weighted=average_curvature_weighted(graph, g, ric),
        betweenness=g,
        curvature=ric,
        sharp=sharp,
        reflective=refl,
    )


@dataclass
class FuzzReport:
    count: int
    seed: int
    slacks: list[Fraction] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    equality_hits: list[dict] = field(default_factory=list)
    budget_failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and all(h["reflective"] for h in self.equality_hits)

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "seed": self.seed,
            "analyzed": len(self.slacks),
            "violations": self.violations,
            "min_slack": format_rational(min(self.slacks)) if self.slacks else None,
            "median_slack": format_rational(statistics.median_low(self.slacks)) if self.slacks else None,
            "equality_hits": self.equality_hits,
            "budget_failures": self.budget_failures,
        }


def fuzz_inequality(
    count: int,
    n_range: tuple[int, int] = (4, 24),
    p_range: tuple[float, float] = (0.2, 0.8),
    seed: int = 0,
    workers: int = 1,
) -> FuzzReport:
    """Analyse ``count`` random connected graphs and record every negative slack.

    Instance ``i`` draws ``n``, ``p`` and its own generator seed from one
    ``random.Random(seed)`` stream, so a campaign is reproducible.  Equality
    hits are re-checked for reflectivity.
    """
    rng = random.Random(seed)
    report = FuzzReport(count=count, seed=seed)
    for i in range(count):
        n = rng.randint(*n_range)
        p = rng.uniform(*p_range)
        inst_seed = rng.randrange(2**32)
        params = {"index": i, "n": n, "p": p, "seed": inst_seed}
        try:
            graph = gen_erdos_renyi_connected(n, p, inst_seed)
        except RuntimeError as exc:
            report.budget_failures.append({**params, "error": str(exc)})
            continue
        res = analyze(graph, reflective=False, sharpness=False, workers=workers)
        report.slacks.append(res.slack)
        if res.slack < 0:
            report.violations.append({**params, "slack": format_rational(res.slack)})
        elif res.slack == 0:
            refl = is_reflective(graph).reflective
            report.equality_hits.append({**params, "m": graph.m, "reflective": refl})
    return report
