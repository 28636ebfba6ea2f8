"""One analysis pipeline per group: components, optional census and diameter,
and every closed-form prediction the group's family metadata supports."""

from __future__ import annotations

import time

from sympy.ntheory import factorint

from . import engine, literals
from . import predictors as pr
from .census import census, is_p_group
from .groups import CyclicGroup, Group, make_group
from .groupspec import GroupSpec, parse
from .report import Cache, ReportRecord, RunConfig, attach


def family_predictions(G: Group, c) -> list[pr.Prediction]:
    """Component-count predictions that apply to ``G`` by construction."""
    out = []
    fam = G.family
    if fam == "symmetric":
        out.append(pr.pred_symmetric(G.n))
    elif fam == "alternating":
        out.append(pr.pred_alternating(G.n))
    elif fam == "PSL2":
        out.append(pr.pred_psl2(G.p, 1))
    elif fam == "PGL2":
        out.append(pr.pred_pgl2(G.p, 1))
    elif fam == "frobenius":
        k = G.kernel_order
        kernel_p = len(factorint(k)) == 1
        ck = engine.components(CyclicGroup(k)).count if kernel_p else None
        out.append(pr.pred_frobenius(k, kernel_p, ck))
    if is_p_group(c) is not None:
        out.append(pr.pred_pgroup(c))
    return out


def analyze(spec: str | GroupSpec, config: RunConfig = RunConfig(), *, diameter: bool = False,
            with_census: bool = False, cache: Cache | None = None) -> ReportRecord:
    """Components always; census and diameter on request; predictions attached."""
    if isinstance(spec, str):
        spec = parse(spec)
    name = str(spec)
    op = "analyze" + ("+diameter" if diameter else "") + ("+census" if with_census else "")
    cache = cache or Cache(config.cache_dir)
    hit = cache.get(name, op, config)
    if hit is not None:
        return hit

    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    G = make_group(spec, config.max_order)
    pg = engine.graph(G, config.threads)
    summary = pg.components()
    timings["components"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    c = census(G)
    timings["census"] = time.perf_counter() - t0

    rec = ReportRecord(
        spec=name,
        order=G.order,
        components=summary.count,
        sizes_histogram=summary.sizes_histogram,
        representatives=[literals.to_json(G, r) for r in summary.representatives[:20]],
        census=c.to_json() if with_census else None,
    )
    for p in family_predictions(G, c):
        attach(rec, p, summary.count)

    if diameter:
        t0 = time.perf_counter()
        d = pg.diameter(config.diameter_cap, config.samples, config.seed)
        timings["diameter"] = time.perf_counter() - t0
        rec.diameter = d.value
        rec.lower_bound = d.lower_bound
        exact = None if d.lower_bound else d.value
        attach(rec, pr.pred_diameter_class(G, c), exact)

    cache.put(name, op, config, rec)
    if config.timings:
        rec.timings = {k: round(v, 4) for k, v in timings.items()}
    return rec

