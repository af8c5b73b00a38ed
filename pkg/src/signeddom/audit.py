"""Corpus-level verification: exact values vs. every bound, plus invariant checks.

``audit_graph`` produces one BoundReport: exact parameters with certificates,
every bound with satisfaction status and parity-tightened gap, and the named
invariant checks run against the optimal witness. ``audit_corpus`` sweeps a
generated corpus deterministically (per-graph seeds are a pure function of the
master seed and the graph index) and writes CSV/JSON reports; any bound
violation or failed invariant check aborts loudly with a diagnostic dump,
because a genuine violation would contradict a proved statement and therefore
signals an implementation bug. ``hunt`` collects sharpness witnesses for one
bound.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import (
    BOUND_ORDER,
    LOWER,
    lb_degree_leaves,
    lb_degree_parity,
    lb_max_degree_domination,
    not_applicable,
    tree_lower_bounds,
    ub_packing_min_degree,
)
from .codecs import serialize_graph
from .generate import derive_seed, enumerate_labeled_trees, generate
from .graphs import Graph, StructuralProfile, structural_profile
from .solvers import (
    ROLE_LIMITED_PACKING,
    ROLE_TUPLE_DOMINATING,
    SignedFunction,
    SizeCapError,
    VertexSet,
    domination_number,
    limited_packing_number,
    packing_number,
    partition_stats,
    signed_domination,
    tuple_domination_number,
    vertex_set_violations,
)

CHECK_ORDER = (
    "lemma_3_1_i",
    "lemma_3_1_ii",
    "claim1_limited_packing",
    "claim2_tuple_dom",
    "eq1",
    "eq2",
    "chain_Lk",
    "chain_tuple",
)

CHAIN_CHECK_MAX_N = 10

CORPUS_KINDS = (
    "complete",
    "path",
    "cycle",
    "star",
    "random_tree",
    "random_connected",
    "trees_exhaustive",
)


class BoundViolation(RuntimeError):
    """A bound or invariant check failed; carries the offending graph and report."""

    def __init__(self, message: str, graph6: str, report: "BoundReport"):
        super().__init__(message)
        self.graph6 = graph6
        self.report = report

    def dump(self) -> str:
        return (
            f"VIOLATION: {self}\n"
            f"graph6: {self.graph6}\n"
            f"report: {json.dumps(self.report.to_json_dict(), indent=2)}"
        )


@dataclass(frozen=True)
class CorpusSpec:
    """Deterministic description of a generated graph corpus."""

    kind: str
    n_min: int
    n_max: int
    count: int = 1
    p: float = 0.5
    seed: int = 0
    oracle_cap: int = 20
    bnb_cap: int = 40
    subset_cap: int = 40

    def __post_init__(self):
        if self.kind not in CORPUS_KINDS:
            raise ValueError(f"unknown corpus kind {self.kind!r}; expected one of {CORPUS_KINDS}")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.n_min > self.n_max:
            raise ValueError("n_min must not exceed n_max")
        if self.n_max > self.bnb_cap or self.n_max > self.subset_cap:
            raise ValueError(f"n_max {self.n_max} exceeds solver caps")


@dataclass
class BoundReport:
    """Everything the audit learned about one graph."""

    graph_id: str
    graph6: str
    n: int
    m: int
    profile: StructuralProfile
    gamma_s: int
    witness: SignedFunction
    gamma: int
    rho: int
    limited_packing_k: int | None
    limited_packing_value: int | None
    tuple_k: int
    tuple_value: int
    bounds: list = field(default_factory=list)  # (Bound, satisfied, gap) triples
    checks: dict = field(default_factory=dict)  # name -> True/False/None
    sharp: list = field(default_factory=list)

    def bound(self, name: str):
        for b, satisfied, gap in self.bounds:
            if b.name == name:
                return b, satisfied, gap
        raise KeyError(name)

    def violations(self) -> list:
        """Messages for unsatisfied applicable bounds and failed checks."""
        out = []
        for b, satisfied, _ in self.bounds:
            if b.applicable and satisfied is False:
                out.append(f"bound {b.name} violated (raw={b.raw}, gamma_s={self.gamma_s})")
        for name, status in self.checks.items():
            if status is False:
                out.append(f"invariant check {name} failed")
        return out

    def to_json_dict(self) -> dict:
        p = self.profile
        return {
            "graph_id": self.graph_id,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "profile": {
                "delta": p.delta,
                "Delta": p.Delta,
                "delta_star": p.delta_star,
                "leaves": p.leaf_count,
                "supports": p.support_count,
                "odd_vertices": p.odd_count,
                "connected": p.is_connected,
                "tree": p.is_tree,
            },
            "exact": {
                "gamma_s": self.gamma_s,
                "gamma": self.gamma,
                "rho": self.rho,
                "limited_packing_k": self.limited_packing_k,
                "limited_packing": self.limited_packing_value,
                "tuple_k": self.tuple_k,
                "tuple_domination": self.tuple_value,
            },
            "witness": str(self.witness),
            "bounds": [
                {
                    "name": b.name,
                    "kind": b.kind,
                    "applicable": b.applicable,
                    "reason": b.reason,
                    "raw": None if b.raw is None else [b.raw.numerator, b.raw.denominator],
                    "tightened": b.tightened,
                    "satisfied": satisfied,
                    "gap": gap,
                }
                for b, satisfied, gap in self.bounds
            ],
            "checks": {name: _status_str(v) for name, v in self.checks.items()},
            "sharp": list(self.sharp),
        }

    def csv_row(self) -> str:
        p = self.profile
        cells = [
            self.graph_id,
            str(self.n),
            str(self.m),
            str(p.delta),
            str(p.Delta),
            "NA" if p.delta_star is None else str(p.delta_star),
            str(p.leaf_count),
            str(p.support_count),
            str(self.gamma_s),
            str(self.gamma),
            str(self.rho),
        ]
        by_name = {b.name: (b, satisfied, gap) for b, satisfied, gap in self.bounds}
        for name in BOUND_ORDER:
            b, _, gap = by_name[name]
            if b.applicable:
                cells.append(str(b.tightened))
                cells.append(str(gap))
            else:
                cells.extend(["NA", "NA"])
        for name in CHECK_ORDER:
            status = self.checks.get(name)
            cells.append("NA" if status is None else ("pass" if status else "fail"))
        return ",".join(cells)


def _status_str(v) -> str:
    if v is None:
        return "na"
    return "pass" if v else "fail"


CSV_HEADER = ",".join(
    [
        "graph_id",
        "n",
        "m",
        "delta",
        "Delta",
        "delta_star",
        "leaves",
        "supports",
        "gamma_s",
        "gamma",
        "rho",
    ]
    + [f"{name}_{suffix}" for name in BOUND_ORDER for suffix in ("value", "gap")]
    + list(CHECK_ORDER)
)


def audit_graph(
    g: Graph,
    graph_id: str | None = None,
    bnb_cap: int = 40,
    subset_cap: int = 40,
) -> BoundReport:
    """Compute exact values, evaluate all bounds, and run the invariant checks.

    Disconnected graphs get a report with every bound marked not applicable
    and the invariant checks skipped. Output is deterministic per graph.
    """
    if g.n > bnb_cap or g.n > subset_cap:
        raise SizeCapError(f"graph has n={g.n}, beyond solver caps ({bnb_cap}/{subset_cap})")
    profile = structural_profile(g)
    g6 = serialize_graph(g, "graph6") if g.n <= 62 else ""
    if graph_id is None:
        graph_id = g6

    gamma_s, witness = signed_domination(g, "branch_and_bound", bnb_cap=bnb_cap)
    gamma, _ = domination_number(g, cap=subset_cap)
    rho, _ = packing_number(g, cap=subset_cap)
    lp_k = profile.delta // 2 if profile.delta >= 2 else None
    lp_value = None if lp_k is None else limited_packing_number(g, lp_k, cap=subset_cap)[0]
    tuple_k = (profile.delta + 1) // 2 + 1
    tuple_value, _ = tuple_domination_number(g, tuple_k, cap=subset_cap)

    report = BoundReport(
        graph_id=graph_id,
        graph6=g6,
        n=g.n,
        m=g.m,
        profile=profile,
        gamma_s=gamma_s,
        witness=witness,
        gamma=gamma,
        rho=rho,
        limited_packing_k=lp_k,
        limited_packing_value=lp_value,
        tuple_k=tuple_k,
        tuple_value=tuple_value,
    )

    if not profile.is_connected:
        bound_list = [not_applicable(name, "disconnected") for name in BOUND_ORDER]
        report.bounds = [(b, None, None) for b in bound_list]
        report.checks = {name: None for name in CHECK_ORDER}
        return report

    bound_list = [
        ub_packing_min_degree(profile, rho),
        lb_degree_leaves(profile),
        lb_degree_parity(profile),
        lb_max_degree_domination(profile, gamma),
    ]
    if profile.is_tree and g.n >= 2:
        bound_list.extend(tree_lower_bounds(profile))
    else:
        reason = "not a tree" if not profile.is_tree else "n < 2"
        bound_list.extend(not_applicable(name, reason) for name in BOUND_ORDER[4:])

    for b in bound_list:
        if not b.applicable:
            report.bounds.append((b, None, None))
            continue
        satisfied = b.tightened <= gamma_s if b.kind == LOWER else gamma_s <= b.tightened
        gap = abs(gamma_s - b.tightened)
        report.bounds.append((b, satisfied, gap))
        if satisfied and gap == 0:
            report.sharp.append(b.name)

    report.checks = _invariant_checks(g, profile, report)
    return report


def _invariant_checks(g: Graph, profile: StructuralProfile, report: BoundReport) -> dict:
    witness = report.witness
    minus = witness.minus_set
    stats = partition_stats(g, witness)
    checks = {}

    # Cut-size sandwich on the optimal witness; vacuous without -1 vertices.
    if not minus:
        checks["lemma_3_1_i"] = True
    else:
        assert profile.delta_star is not None, "-1 vertices imply a nonempty core"
        lo = ((profile.delta_star + 1) // 2 + 1) * len(minus)
        plus_not_leaf = len(witness.plus_set - profile.leaves)
        hi = (profile.Delta // 2) * plus_not_leaf
        checks["lemma_3_1_i"] = lo <= stats.cut <= hi

    checks["lemma_3_1_ii"] = (
        profile.odd_count + 2 * len(minus) <= 2 * stats.e_plus - 2 * stats.e_minus
    )

    claim1 = VertexSet(minus, ROLE_LIMITED_PACKING, profile.Delta // 2)
    checks["claim1_limited_packing"] = not vertex_set_violations(g, claim1)

    claim2_k = (profile.delta + 1) // 2 + 1
    claim2 = VertexSet(witness.plus_set, ROLE_TUPLE_DOMINATING, claim2_k)
    checks["claim2_tuple_dom"] = not vertex_set_violations(g, claim2)

    if report.limited_packing_k:
        checks["eq1"] = report.gamma_s <= g.n - 2 * report.limited_packing_value
        checks["eq2"] = report.limited_packing_value >= report.rho + report.limited_packing_k - 1
    else:
        checks["eq1"] = None
        checks["eq2"] = None

    if g.n <= CHAIN_CHECK_MAX_N:
        checks["chain_Lk"] = _check_limited_packing_chain(g, profile)
        checks["chain_tuple"] = _check_tuple_chain(g, profile)
    else:
        checks["chain_Lk"] = None
        checks["chain_tuple"] = None
    return checks


def _check_limited_packing_chain(g: Graph, profile: StructuralProfile) -> bool:
    prev = None
    for k in range(1, profile.Delta // 2 + 2):
        value, _ = limited_packing_number(g, k)
        if prev is not None and prev < g.n and value < prev + 1:
            return False
        if value == g.n:
            break
        prev = value
    return True


def _check_tuple_chain(g: Graph, profile: StructuralProfile) -> bool:
    prev = None
    for k in range(1, profile.delta + 2):
        value, _ = tuple_domination_number(g, k)
        if prev is not None and value < prev + 1:
            return False
        prev = value
    return True


# -- corpus sweeps -------------------------------------------------------------


def iter_corpus(spec: CorpusSpec):
    """Yield (graph_id, Graph) deterministically in graph-index order."""
    index = 0
    if spec.kind == "trees_exhaustive":
        for n in range(max(2, spec.n_min), spec.n_max + 1):
            for i, g in enumerate(enumerate_labeled_trees(n)):
                yield f"tree-n{n}-{i:07d}", g
                index += 1
        return
    for n in range(spec.n_min, spec.n_max + 1):
        if spec.kind in ("complete", "path", "cycle", "star"):
            yield f"{spec.kind}-n{n}", generate(spec.kind, {"n": n})
            index += 1
            continue
        for i in range(spec.count):
            seed = derive_seed(spec.seed, index)
            params = {"n": n}
            if spec.kind == "random_connected":
                params["p"] = spec.p
            yield f"{spec.kind}-n{n}-{i:04d}", generate(spec.kind, params, seed)
            index += 1


def _audit_item(item, bnb_cap: int, subset_cap: int):
    graph_id, g = item
    try:
        return audit_graph(g, graph_id, bnb_cap=bnb_cap, subset_cap=subset_cap), None
    except SizeCapError as exc:
        return None, (graph_id, str(exc))


def audit_corpus(
    spec: CorpusSpec,
    csv_path=None,
    json_path=None,
    jobs: int = 1,
) -> dict:
    """Audit every corpus graph; write reports; return the summary.

    Aborts with BoundViolation (including a diagnostic dump) on the first
    unsatisfied applicable bound or failed invariant check. Graphs beyond the
    solver caps are recorded as skips. Identical (spec, seed) inputs produce
    byte-identical CSV and JSON outputs.
    """
    csv_lines = [CSV_HEADER]
    json_reports = []
    skips = []
    total = 0
    sharp_hist = {name: 0 for name in BOUND_ORDER}
    gap_sum = {name: 0 for name in BOUND_ORDER}
    gap_max = {name: 0 for name in BOUND_ORDER}
    gap_count = {name: 0 for name in BOUND_ORDER}

    def consume(report, skip):
        nonlocal total
        if skip is not None:
            skips.append(skip)
            return
        problems = report.violations()
        if problems:
            raise BoundViolation("; ".join(problems), report.graph6, report)
        total += 1
        for b, _, gap in report.bounds:
            if b.applicable:
                gap_count[b.name] += 1
                gap_sum[b.name] += gap
                gap_max[b.name] = max(gap_max[b.name], gap)
                if gap == 0:
                    sharp_hist[b.name] += 1
        if csv_path is not None:
            csv_lines.append(report.csv_row())
        if json_path is not None:
            json_reports.append(report.to_json_dict())

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for report, skip in pool.map(
                _audit_item_star,
                ((item, spec.bnb_cap, spec.subset_cap) for item in iter_corpus(spec)),
                chunksize=64,
            ):
                consume(report, skip)
    else:
        for item in iter_corpus(spec):
            consume(*_audit_item(item, spec.bnb_cap, spec.subset_cap))

    summary = {
        "graphs": total,
        "violations": 0,
        "skips": [list(s) for s in skips],
        "sharp_histogram": sharp_hist,
        "max_gap": gap_max,
        "mean_gap": {
            name: (round(gap_sum[name] / gap_count[name], 6) if gap_count[name] else None)
            for name in BOUND_ORDER
        },
    }
    if csv_path is not None:
        with open(csv_path, "w", newline="") as fh:
            fh.write("\n".join(csv_lines) + "\n")
    if json_path is not None:
        with open(json_path, "w") as fh:
            json.dump({"summary": summary, "reports": json_reports}, fh, indent=2)
            fh.write("\n")
    return summary


def _audit_item_star(args):
    return _audit_item(*args)


def hunt(spec: CorpusSpec, target: str) -> list:
    """graph6 strings of corpus graphs where ``target`` meets the exact value.

    Sorted by (n, graph6). Any violation along the way aborts with a dump.
    """
    if target not in BOUND_ORDER:
        raise ValueError(f"unknown bound name {target!r}; expected one of {BOUND_ORDER}")
    witnesses = []
    for item in iter_corpus(spec):
        report, skip = _audit_item(item, spec.bnb_cap, spec.subset_cap)
        if skip is not None:
            continue
        problems = report.violations()
        if problems:
            raise BoundViolation("; ".join(problems), report.graph6, report)
        b, _, gap = report.bound(target)
        if b.applicable and gap == 0:
            witnesses.append((report.n, report.graph6))
    witnesses.sort()
    return [g6 for _, g6 in witnesses]
