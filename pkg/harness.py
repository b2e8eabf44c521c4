"""
Sweep driver: streams family instances, runs the property checks on each over
every requested field, and merges the reports by instance id.
"""
from __future__ import annotations

import random
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from complex import independence_complex
from errors import FamilyError, PartitionError, UnknownCheckError
from families import get_family
from hypergraph import Hypergraph, is_graph
from memo import MemoCache
from models import Clause, PropertyReport, Status
from utils import get_logger
from verify import (
    check_collage_bounds,
    check_dichotomy,
    check_edge_split,
    check_km_subadditivity,
    check_method_agreement,
    check_separation_example,
    check_single_collage,
    check_union_additivity,
    check_vd_formula,
    check_zeta_bound,
    describe,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class Instance:
    instance_id: str
    family: str
    hypergraph: Hypergraph
    params: dict[str, Any] = field(default_factory=dict, hash=False, compare=False)
    seed: int | None = None


@dataclass
class SweepResult:
    reports: list[PropertyReport]
    summary: dict[str, Any]

    @property
    def failed(self) -> bool:
        return self.summary["totals"][Status.FAIL.value] > 0

    def to_dict(self) -> dict[str, Any]:
        return {"reports": [r.to_dict() for r in self.reports], "summary": self.summary}


def random_partition(edge_count: int, parts: int, rng: random.Random) -> list[list[int]]:
    """Split the edge indices into nonempty classes.

    There are min(parts, edge_count) classes (one empty class for an edgeless
    hypergraph). Each class is seeded with one edge and the rest land uniformly.
    """
    if parts < 1:
        raise PartitionError(f"need at least one part, got {parts}")
    if edge_count == 0:
        return [[]]
    k = min(parts, edge_count)
    order = list(range(edge_count))
    rng.shuffle(order)
    out: list[list[int]] = [[i] for i in order[:k]]
    for i in order[k:]:
        out[rng.randrange(k)].append(i)
    return sorted(sorted(part) for part in out)


def instances(
    family: str, n: int, trials: int = 1, seed: int = 0, params: dict[str, Any] | None = None
) -> Iterator[Instance]:
    """Deterministic families sweep their size up to n, random ones give `trials`
    seeded instances of size n, exhaustive ones enumerate everything up to n."""
    fam = get_family(family)
    base = fam.params(params)
    if fam.kind == "exhaustive":
        for i, h in enumerate(fam.enumerate(n)):
            yield Instance(f"{fam.name}-{i:07d}", fam.name, h, {"n": h.n})
    elif fam.kind == "random":
        master = random.Random(seed)
        for t in range(trials):
            s = master.randrange(2**31)
            p = dict(base, n=n)
            yield Instance(f"{fam.name}-{t:05d}", fam.name, fam.generate(p, random.Random(s)), p, s)
    else:
        if n < fam.min_size:
            raise FamilyError(f"family {fam.name} starts at {fam.size_param}={fam.min_size}")
        for size in range(fam.min_size, n + 1):
            p = dict(base, **{fam.size_param: size})
            yield Instance(f"{fam.name}-{size:03d}", fam.name, fam.generate(p, random.Random(seed)), p)


# -----------------------------------------------------------------------------
# Check registry
# -----------------------------------------------------------------------------

def _not_applicable(check: str, instance: Instance, q: int, reason: str) -> PropertyReport:
    report = PropertyReport(check, describe(instance.hypergraph), q)
    report.clauses.append(Clause(reason, "eq", None, None, False, hypothesis=False))
    return report


def _run_collage(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    h = inst.hypergraph
    if not h.edges:
        return _not_applicable("collage_bounds", inst, q, "edgeless")
    return check_collage_bounds(h, q, cache)


def _run_km(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    h = inst.hypergraph
    return check_km_subadditivity(h, random_partition(len(h.edges), rng.choice((2, 3)), rng), q, cache)


def _run_edge_split(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    h = inst.hypergraph
    if len(h.edges) < 2:
        return _not_applicable("edge_split", inst, q, "fewer than two edges")
    return check_edge_split(h, rng.choice(h.edges), q, cache)


def _run_dichotomy(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    return check_dichotomy(independence_complex(inst.hypergraph), q, cache, locality)


def _run_vd(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    return check_vd_formula(independence_complex(inst.hypergraph), q, cache, locality)


def _run_zeta(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    if not is_graph(inst.hypergraph):
        return _not_applicable("zeta_bound", inst, q, "not a graph")
    return check_zeta_bound(inst.hypergraph, q, cache)


def _run_agreement(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    return check_method_agreement(independence_complex(inst.hypergraph), q)


def _run_single(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    return check_single_collage(inst.hypergraph, q, cache)


def _run_union(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    h = inst.hypergraph
    return check_union_additivity(h, h, q, cache)


def _run_separation(inst: Instance, q: int, rng: random.Random, cache: MemoCache, locality: int) -> PropertyReport:
    if inst.family != "hs":
        return _not_applicable("separation_example", inst, q, "only defined for H_s")
    return check_separation_example(int(inst.params["s"]), q, cache)


Runner = Callable[[Instance, int, random.Random, MemoCache, int], PropertyReport]

CHECKS: dict[str, Runner] = {
    "collage": _run_collage,
    "km": _run_km,
    "edge-split": _run_edge_split,
    "single-collage": _run_single,
    "dichotomy": _run_dichotomy,
    "vd": _run_vd,
    "zeta": _run_zeta,
    "agreement": _run_agreement,
    "union": _run_union,
    "separation": _run_separation,
}

DEFAULT_CHECKS = ("collage", "km", "edge-split", "single-collage", "dichotomy", "vd", "zeta", "agreement")


def resolve_checks(names: Sequence[str] | None) -> tuple[str, ...]:
    if not names:
        return DEFAULT_CHECKS
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise UnknownCheckError(f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    return tuple(names)


def evaluate_instance(
    inst: Instance, chars: Sequence[int], checks: Sequence[str], seed: int, locality: int
) -> list[PropertyReport]:
    """Run every check over every field on one instance; one memo cache per instance."""
    cache = MemoCache(inst.instance_id)
    out: list[PropertyReport] = []
    for check in checks:
        for q in chars:
            rng = random.Random(f"{seed}:{inst.instance_id}:{check}:{q}")
            report = CHECKS[check](inst, q, rng, cache, locality)
            report.instance_id = inst.instance_id
            report.seed = inst.seed if inst.seed is not None else seed
            if report.status is Status.FAIL:
                logger.warning("%s failed on %s over GF(%d): %s", report.property_id, inst.instance_id, q,
                               report.headline().label if report.headline() else "")
            out.append(report)
    cache.log_stats()
    logger.info("instance %s: %d reports", inst.instance_id, len(out))
    return out


def _evaluate_task(task: tuple[Instance, tuple[int, ...], tuple[str, ...], int, int]) -> list[PropertyReport]:
    return evaluate_instance(*task)


def summarize(reports: Sequence[PropertyReport]) -> dict[str, Any]:
    per: dict[str, dict[str, int]] = {}
    totals = {s.value: 0 for s in Status}
    for r in reports:
        bucket = per.setdefault(r.property_id, {s.value: 0 for s in Status})
        bucket[r.status.value] += 1
        totals[r.status.value] += 1
    return {
        "instances": len({r.instance_id for r in reports}),
        "properties": dict(sorted(per.items())),
        "totals": totals,
    }


def default_workers() -> int:
    import psutil

    return psutil.cpu_count(logical=False) or 1


def run_sweep(
    family: str,
    n: int,
    trials: int = 1,
    seed: int = 0,
    chars: Sequence[int] = (2, 3),
    checks: Sequence[str] | None = None,
    workers: int = 1,
    params: dict[str, Any] | None = None,
    locality_max_face: int | None = None,
) -> SweepResult:
    """Evaluate a family sweep; reports are ordered by instance id whatever the scheduling."""
    if locality_max_face is None:
        from config import get

        locality_max_face = int(get("verify.locality_max_face", 2))
    names = resolve_checks(checks)
    if workers == 0:
        workers = default_workers()
    tasks = [(inst, tuple(chars), names, seed, locality_max_face) for inst in instances(family, n, trials, seed, params)]
    logger.info("sweep %s: %d instances, checks %s, fields %s, %d worker(s)", family, len(tasks), names, chars, workers)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_evaluate_task, tasks, chunksize=max(1, len(tasks) // (workers * 4))))
    else:
        batches = [_evaluate_task(t) for t in tasks]
    reports = sorted((r for batch in batches for r in batch), key=lambda r: r.instance_id)
    return SweepResult(reports, summarize(reports))

