"""Executable checkers for the structural edge-coloring lemmas, the main
degree-gap theorem, and the overfull conjecture scan.

Every checker returns a VerificationReport with three counts: instances
examined, instances where the statement's hypotheses actually held, and
violations.  Vacuous outcomes (no applicable instance) are first-class
and never suppressed; at small orders most hypothesis-gated statements
are expected to be vacuous, and the reports must say so.

Fractional degree hypotheses are evaluated in exact integer arithmetic
(multiplied through by the denominator); no floating point is involved
anywhere, so boundary cases like 3*Delta == n are decided exactly.

A violation records enough serialized state (graph6, edge, coloring dump,
structure dump) to be re-checked in isolation; replay_violation does
exactly that and reports whether the violation reproduces.  One violation
is recorded per instance: the first failing condition.
"""

import time
from dataclasses import dataclass, field

from .coloring import PartialColoring, chain_at, is_elementary
from .graph import (Graph, SubgraphSearchCapExceeded, encode_graph6,
                    find_overfull_subgraphs, is_overfull, iter_graph6, parse_graph6)
from .solver import (ColoringBatch, GraphClass, chromatic_index, classify,
                     enumerate_colorings, is_delta_critical)
from .structures import (find_branches, find_forks, find_kierstead_paths,
                         maximal_multifan, parse_structure)


@dataclass(frozen=True)
class SamplingConfig:
    """Coloring sampling policy: exhaustive when at most exhaustive_limit
    colorings exist, otherwise a seeded sample of sample_size."""

    exhaustive_limit: int = 5000
    sample_size: int = 200
    seed: int = 0


DEFAULT_SAMPLING = SamplingConfig()


@dataclass
class Violation:
    check: str
    graph6: str
    condition: str
    detail: str = ""
    edge: tuple = None
    data: dict = field(default_factory=dict)
    coloring: str = None
    structure: str = None

    def to_record(self):
        return {
            "check": self.check,
            "graph": self.graph6,
            "condition": self.condition,
            "detail": self.detail,
            "edge": list(self.edge) if self.edge else None,
            "data": {k: self.data[k] for k in sorted(self.data)},
            "coloring": self.coloring,
            "structure": self.structure,
        }


@dataclass
class VerificationReport:
    check: str
    graph6: str
    instances_checked: int = 0
    applicable: int = 0
    violations: list = field(default_factory=list)
    counters: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def vacuous(self):
        return self.applicable == 0

    def to_record(self):
        # elapsed is process-local diagnostics and stays out of the stable
        # record format, which must be byte-identical across identical runs
        return {
            "check": self.check,
            "graph": self.graph6,
            "instances_checked": self.instances_checked,
            "applicable": self.applicable,
            "vacuous": self.vacuous,
            "violations": [v.to_record() for v in self.violations],
            "counters": {k: self.counters[k] for k in sorted(self.counters)},
        }

    def summary_line(self):
        return (f"{self.check} {self.graph6}: instances={self.instances_checked} "
                f"applicable={self.applicable} vacuous={str(self.vacuous).lower()} "
                f"violations={len(self.violations)}")


# ---------------------------------------------------------------------------
# Shared gating and coloring supply.


def _class2_with_edges(g, report):
    if g.m == 0:
        report.counters["edgeless"] = 1
        return False
    if classify(g) is not GraphClass.CLASS2:
        report.counters["class1"] = 1
        return False
    return True


def _delta_critical_gate(g, report):
    if g.m == 0:
        report.counters["edgeless"] = 1
        return False
    if not g.is_connected():
        report.counters["disconnected"] = 1
        return False
    if not is_delta_critical(g):
        report.counters["not_delta_critical"] = 1
        return False
    return True


def _critical_edges(g):
    delta = g.max_degree
    return [e for e in g.edges if chromatic_index(g.without_edge(*e)) <= delta]


_COLORING_CACHE = {}
_COLORING_CACHE_LIMIT = 64


def _decode_coloring(g, k, e, blob):
    colors = list(blob)
    present = [0] * g.n
    for (u, v), c in zip(g.edges, colors):
        if c:
            bit = 1 << (c - 1)
            present[u] |= bit
            present[v] |= bit
    return PartialColoring._trusted(g, k, colors, e, present)


def _colorings(g, e, k, sampling):
    """enumerate_colorings with a small byte-packed cache; the verifiers
    revisit the same (graph, edge) pairs once per lemma."""
    key = (g, e, k, sampling.exhaustive_limit, sampling.sample_size, sampling.seed)
    hit = _COLORING_CACHE.get(key)
    if hit is not None:
        blobs, exhaustive = hit
        return ColoringBatch(tuple(_decode_coloring(g, k, e, blob) for blob in blobs), exhaustive)
    batch = enumerate_colorings(g, e, k, sampling.exhaustive_limit, sampling.seed,
                                sampling.sample_size)
    if k <= 255:
        if len(_COLORING_CACHE) >= _COLORING_CACHE_LIMIT:
            _COLORING_CACHE.pop(next(iter(_COLORING_CACHE)))
        _COLORING_CACHE[key] = (tuple(bytes(c._colors) for c in batch), batch.exhaustive)
    return batch


# ---------------------------------------------------------------------------
# Adjacency lemma: each endpoint of a critical edge has enough max-degree
# neighbors besides the other endpoint.


def _val_violation(g, x, y):
    delta = g.max_degree
    need = delta - g.degree(y) + 1
    have = sum(1 for w in g.neighbors(x) if w != y and g.degree(w) == delta)
    if have < need:
        return f"{x} has {have} max-degree neighbors besides {y}, needs {need}"
    return None


def verify_val(g: Graph, sampling=None) -> VerificationReport:
    t0 = time.perf_counter()
    report = VerificationReport("val", encode_graph6(g))
    if _class2_with_edges(g, report):
        crits = set(_critical_edges(g))
        report.counters["critical_edges"] = len(crits)
        for e in g.edges:
            for x, y in (e, e[::-1]):
                report.instances_checked += 1
                if e not in crits:
                    continue
                report.applicable += 1
                detail = _val_violation(g, x, y)
                if detail:
                    report.violations.append(Violation("val", report.graph6,
                                                       "val.neighbor_count", detail, edge=(x, y)))
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Multi-fan lemma: fan vertex sets are elementary and every missing pair
# (at the center, at a fan vertex) is joined by a chain between them.


def _check_multifan_instance(c, fan):
    failures = []
    x = fan.center
    if not is_elementary(c, (x,) + fan.vertices):
        failures.append(("multifan.elementary", f"fan vertex set at {x} is not elementary"))
    k = c.k
    miss_x = c.missing_mask(x)
    for y in fan.vertices:
        miss_y = c.missing_mask(y)
        for alpha in range(1, k + 1):
            if not miss_x >> (alpha - 1) & 1:
                continue
            for beta in range(1, k + 1):
                if beta == alpha or not miss_y >> (beta - 1) & 1:
                    continue
                ch = chain_at(c, x, alpha, beta)
                if not ch.is_path or set(ch.endpoints) != {x, y}:
                    failures.append(("multifan.chain_endpoints",
                                     f"({alpha},{beta})-chain at {x} does not end at {{{x},{y}}}"))
    return failures


def verify_multifan_lemma(g: Graph, sampling=None) -> VerificationReport:
    sampling = sampling or DEFAULT_SAMPLING
    t0 = time.perf_counter()
    report = VerificationReport("multifan", encode_graph6(g))
    if _class2_with_edges(g, report):
        delta = g.max_degree
        crits = _critical_edges(g)
        report.counters["critical_edges"] = len(crits)
        for e in crits:
            batch = _colorings(g, e, delta, sampling)
            report.counters["colorings"] = report.counters.get("colorings", 0) + len(batch)
            for coloring in batch:
                for x in e:
                    report.instances_checked += 1
                    report.applicable += 1
                    fan = maximal_multifan(coloring, x)
                    failures = _check_multifan_instance(coloring, fan)
                    if failures:
                        cond, detail = failures[0]
                        report.violations.append(Violation(
                            "multifan", report.graph6, cond, detail, edge=e,
                            coloring=coloring.dump(), structure=fan.dump()))
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Kierstead path lemma for paths with three edges.


def _check_kierstead_instance(g, c, path):
    failures = []
    y0, y1, y2, y3 = path.vertices
    if min(g.degree(y1), g.degree(y2)) < g.max_degree and not is_elementary(c, path.vertices):
        failures.append(("kierstead.elementary",
                         f"path {path.vertices} is not elementary despite an inner low-degree vertex"))
    inter = c.missing_mask(y3) & (c.missing_mask(y0) | c.missing_mask(y1))
    if inter.bit_count() > 1:
        failures.append(("kierstead.shared_missing_cap",
                         f"{inter.bit_count()} colors missing at {y3} and at {{{y0},{y1}}}"))
    return failures


def verify_kierstead_lemma(g: Graph, sampling=None) -> VerificationReport:
    sampling = sampling or DEFAULT_SAMPLING
    t0 = time.perf_counter()
    report = VerificationReport("kierstead", encode_graph6(g))
    if _class2_with_edges(g, report):
        delta = g.max_degree
        crits = _critical_edges(g)
        report.counters["critical_edges"] = len(crits)
        for e in crits:
            batch = _colorings(g, e, delta, sampling)
            report.counters["colorings"] = report.counters.get("colorings", 0) + len(batch)
            for coloring in batch:
                for root in e:
                    report.counters["scans"] = report.counters.get("scans", 0) + 1
                    for path in find_kierstead_paths(coloring, 3, root=root):
                        if path.p != 3:
                            continue
                        report.instances_checked += 1
                        report.applicable += 1
                        failures = _check_kierstead_instance(g, coloring, path)
                        if failures:
                            cond, detail = failures[0]
                            report.violations.append(Violation(
                                "kierstead", report.graph6, cond, detail, edge=e,
                                coloring=coloring.dump(), structure=path.dump()))
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Degree dichotomy around a low-degree vertex.


def _dichotomy_split_violation(g, a, v):
    n, delta = g.n, g.max_degree
    dv, da = g.degree(v), g.degree(a)
    if dv <= n - delta + 2 * da - 6 or dv >= delta - da + 1:
        return None
    return f"deg({v})={dv} in the forbidden gap for a={a} (deg {da})"


def _dichotomy_cap_violation(c, a, b, v):
    inter = c.missing_mask(v) & (c.missing_mask(a) | c.missing_mask(b))
    if inter.bit_count() <= 1:
        return None
    return f"{inter.bit_count()} colors missing at {v} and at {{{a},{b}}}"


def verify_degree_dichotomy(g: Graph, sampling=None) -> VerificationReport:
    sampling = sampling or DEFAULT_SAMPLING
    t0 = time.perf_counter()
    report = VerificationReport("degree-dichotomy", encode_graph6(g))
    if _delta_critical_gate(g, report):
        n, delta = g.n, g.max_degree
        qualifying = [a for a in range(n) if 3 * g.degree(a) <= 2 * delta - n + 2]
        report.counters["qualifying_vertices"] = len(qualifying)
        for a in qualifying:
            highs = []
            for v in range(n):
                if v == a:
                    continue
                report.instances_checked += 1
                report.applicable += 1
                detail = _dichotomy_split_violation(g, a, v)
                if detail:
                    report.violations.append(Violation(
                        "degree-dichotomy", report.graph6, "dichotomy.split", detail,
                        data={"a": a, "v": v}))
                if g.degree(v) >= delta - g.degree(a) + 1:
                    highs.append(v)
            for b in g.neighbors(a):
                if g.degree(b) != delta:
                    continue
                e = (a, b) if a < b else (b, a)
                for coloring in _colorings(g, e, delta, sampling):
                    for v in highs:
                        if v == b:
                            continue
                        report.instances_checked += 1
                        report.applicable += 1
                        detail = _dichotomy_cap_violation(coloring, a, b, v)
                        if detail:
                            report.violations.append(Violation(
                                "degree-dichotomy", report.graph6, "dichotomy.missing_cap",
                                detail, edge=(a, b), data={"a": a, "b": b, "v": v},
                                coloring=coloring.dump()))
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Existence of two medium-degree vertices sharing missing colors with the
# root edge, for non-overfull graphs.


def _xy_candidates(g, c, a, b, t):
    delta, dmin = g.max_degree, g.min_degree
    union = c.missing_mask(a) | c.missing_mask(b)
    out = []
    for v in range(g.n):
        if v in (a, b) or v == t:
            continue
        if delta - dmin + 1 <= g.degree(v) < delta and c.missing_mask(v) & union:
            out.append(v)
    return out


def verify_xy_existence(g: Graph, sampling=None) -> VerificationReport:
    sampling = sampling or DEFAULT_SAMPLING
    t0 = time.perf_counter()
    report = VerificationReport("xy-existence", encode_graph6(g))
    if _delta_critical_gate(g, report):
        n, delta, dmin = g.n, g.max_degree, g.min_degree
        if is_overfull(g):
            report.counters["overfull"] = 1
        elif 3 * dmin > 2 * delta - n + 2:
            report.counters["min_degree_too_large"] = 1
        else:
            for a in range(n):
                if g.degree(a) != dmin:
                    continue
                smalls = [t for t in range(n)
                          if t != a and g.degree(t) <= n - delta + 2 * dmin - 6]
                if len(smalls) > 1:
                    report.counters["too_many_low_degree"] = report.counters.get(
                        "too_many_low_degree", 0) + 1
                    continue
                t = smalls[0] if smalls else None
                for b in g.neighbors(a):
                    if g.degree(b) != delta:
                        continue
                    e = (a, b) if a < b else (b, a)
                    for coloring in _colorings(g, e, delta, sampling):
                        report.instances_checked += 1
                        report.applicable += 1
                        found = _xy_candidates(g, coloring, a, b, t)
                        if len(found) < 2:
                            report.violations.append(Violation(
                                "xy-existence", report.graph6, "xy.not_found",
                                f"only {len(found)} qualifying vertices", edge=(a, b),
                                data={"a": a, "b": b, "t": t}, coloring=coloring.dump()))
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Fork exclusion under the degree-sum hypothesis.


def _fork_violation(g, fork):
    delta = g.max_degree
    bound = g.degree(fork.a) + g.degree(fork.t1) + g.degree(fork.t2) + 1
    if delta >= bound:
        return f"fork present although max degree {delta} >= {bound}"
    return None


def verify_fork_lemma(g: Graph, sampling=None) -> VerificationReport:
    sampling = sampling or DEFAULT_SAMPLING
    t0 = time.perf_counter()
    report = VerificationReport("fork", encode_graph6(g))
    if _delta_critical_gate(g, report):
        delta = g.max_degree
        for e in g.edges:
            batch = _colorings(g, e, delta, sampling)
            for coloring in batch:
                for a, b in (e, e[::-1]):
                    report.instances_checked += 1
                    others = sorted(g.degree(v) for v in range(g.n) if v not in (a, b))
                    if len(others) >= 2 and delta >= g.degree(a) + others[0] + others[1] + 1:
                        report.applicable += 1
                    for fork in find_forks(coloring, a, b):
                        report.counters["forks_found"] = report.counters.get("forks_found", 0) + 1
                        detail = _fork_violation(g, fork)
                        if detail:
                            report.violations.append(Violation(
                                "fork", report.graph6, "fork.forbidden", detail, edge=(a, b),
                                coloring=coloring.dump(), structure=fork.dump()))
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Branch lemma: equal arm-end colors cap the shared missing colors at the
# arm tips.


def _branch_violation(c, branch):
    gamma = (c.missing_mask(branch.t1) & c.missing_mask(branch.t2)
             & (c.missing_mask(branch.a) | c.missing_mask(branch.b)))
    if gamma.bit_count() > 4:
        return f"shared missing set has {gamma.bit_count()} colors, cap is 4"
    return None


def verify_branch_lemma(g: Graph, sampling=None) -> VerificationReport:
    sampling = sampling or DEFAULT_SAMPLING
    t0 = time.perf_counter()
    report = VerificationReport("branch", encode_graph6(g))
    if _class2_with_edges(g, report):
        delta = g.max_degree
        for e in _critical_edges(g):
            batch = _colorings(g, e, delta, sampling)
            for coloring in batch:
                for a, b in (e, e[::-1]):
                    report.instances_checked += 1
                    for branch in find_branches(coloring, short=False, a=a, b=b):
                        report.applicable += 1
                        detail = _branch_violation(coloring, branch)
                        if detail:
                            report.violations.append(Violation(
                                "branch", report.graph6, "branch.shared_missing_cap", detail,
                                edge=(a, b), coloring=coloring.dump(), structure=branch.dump()))
    report.elapsed = time.perf_counter() - t0
    return report


def _short_branch_violation(g, sb):
    delta = g.max_degree
    if max(g.degree(sb.x), g.degree(sb.y)) != delta:
        return f"max degree of arms {sb.x},{sb.y} is below {delta}"
    return None


def verify_short_branch_lemma(g: Graph, sampling=None) -> VerificationReport:
    sampling = sampling or DEFAULT_SAMPLING
    t0 = time.perf_counter()
    report = VerificationReport("short-branch", encode_graph6(g))
    if _class2_with_edges(g, report):
        delta = g.max_degree
        for e in _critical_edges(g):
            batch = _colorings(g, e, delta, sampling)
            for coloring in batch:
                for a, b in (e, e[::-1]):
                    report.instances_checked += 1
                    for sb in find_branches(coloring, short=True, a=a, b=b):
                        report.applicable += 1
                        detail = _short_branch_violation(g, sb)
                        if detail:
                            report.violations.append(Violation(
                                "short-branch", report.graph6, "shortbranch.max_degree", detail,
                                edge=(a, b), coloring=coloring.dump(), structure=sb.dump()))
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Main theorem hypothesis/conclusion: a large degree gap forces overfull.


def _theorem1_applicable(g):
    return 3 * g.max_degree - 5 * g.min_degree >= 2 * g.n - 7


def verify_theorem1(g: Graph, sampling=None) -> VerificationReport:
    t0 = time.perf_counter()
    report = VerificationReport("theorem1", encode_graph6(g))
    if _delta_critical_gate(g, report):
        report.instances_checked = 1
        if _theorem1_applicable(g):
            report.applicable = 1
            if not is_overfull(g):
                report.violations.append(Violation(
                    "theorem1", report.graph6, "theorem1.not_overfull",
                    f"degree gap hypothesis holds but |E|={g.m} <= {g.max_degree}*{g.n // 2}"))
        else:
            report.counters["hypothesis_failed"] = 1
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Conjecture scan over a graph6 corpus.


def _conjecture_worker(item):
    """Per-record work for the conjecture scan; top-level for pickling."""
    lineno, record, cap = item
    try:
        g = parse_graph6(record)
    except Exception as exc:
        return {"line": lineno, "graph": record, "error": str(exc)}, [], {"parse_failures": 1}
    deltas = {"graphs": 1}
    entry = {"line": lineno, "graph": record, "n": g.n, "m": g.m,
             "delta": g.max_degree, "connected": g.is_connected()}
    if not entry["connected"]:
        deltas["disconnected"] = 1
        return entry, [], deltas
    violations = []
    n, delta = g.n, g.max_degree
    if 3 * delta > n:
        try:
            count = len(find_overfull_subgraphs(g, cap))
        except SubgraphSearchCapExceeded:
            deltas["subgraph_cap_skips"] = 1
            count = None
        if count is not None:
            deltas["niessen_checked"] = 1
            entry["overfull_subgraphs"] = count
            if count > 3:
                violations.append(Violation(
                    "conjecture", record, "niessen.at_most_three",
                    f"{count} induced overfull subgraphs with 3*delta > n"))
            if 2 * delta >= n and count > 1:
                violations.append(Violation(
                    "conjecture", record, "niessen.at_most_one",
                    f"{count} induced overfull subgraphs with 2*delta >= n"))
    if g.m == 0:
        deltas["edgeless"] = 1
        critical = False
    else:
        critical = is_delta_critical(g)
    entry["delta_critical"] = critical
    deltas["instances"] = 1
    if critical:
        deltas["delta_critical"] = 1
        if 3 * delta > n:
            deltas["applicable"] = 1
            overfull = is_overfull(g)
            entry["hypothesis"] = True
            entry["overfull"] = overfull
            if overfull:
                deltas["confirmed_overfull"] = 1
            else:
                violations.append(Violation(
                    "conjecture", record, "conjecture.not_overfull",
                    f"delta-critical with 3*{delta} > {n} but not overfull"))
        else:
            entry["hypothesis"] = False
    return entry, violations, deltas


def scan_conjecture(lines, cap=20, on_graph=None, mapper=None) -> VerificationReport:
    """Check every connected corpus graph that is delta-critical with
    3*Delta > n for overfullness, and audit the induced-overfull-subgraph
    count bounds (at most 3 when 3*Delta > n, at most 1 when 2*Delta >= n).

    Parse failures are counted, not fatal.  on_graph, when given, receives
    one record dict per input line, in input order.  mapper may replace the
    builtin map (e.g. with a process pool's imap); results are folded in
    input order either way, so the aggregate is deterministic.
    """
    t0 = time.perf_counter()
    report = VerificationReport("conjecture", "*")
    c = report.counters
    for key in ("graphs", "parse_failures", "disconnected", "edgeless", "delta_critical",
                "confirmed_overfull", "niessen_checked", "subgraph_cap_skips"):
        c[key] = 0
    items = [(lineno, record, cap) for lineno, record in iter_graph6(lines)]
    for entry, violations, deltas in (mapper or map)(_conjecture_worker, items):
        for key, value in deltas.items():
            if key == "instances":
                report.instances_checked += value
            elif key == "applicable":
                report.applicable += value
            else:
                c[key] = c.get(key, 0) + value
        report.violations.extend(violations)
        if on_graph is not None:
            on_graph(entry)
    report.elapsed = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# Witness replay: re-run the per-instance check from serialized state.


def replay_violation(v: Violation) -> bool:
    """True iff the recorded violation reproduces from its witness data."""
    g = parse_graph6(v.graph6)
    delta = g.max_degree

    def coloring():
        return PartialColoring.from_dump(g, delta, v.coloring)

    if v.check == "val":
        return _val_violation(g, *v.edge) is not None
    if v.check == "multifan":
        failures = _check_multifan_instance(coloring(), parse_structure(v.structure))
        return any(cond == v.condition for cond, _ in failures)
    if v.check == "kierstead":
        failures = _check_kierstead_instance(g, coloring(), parse_structure(v.structure))
        return any(cond == v.condition for cond, _ in failures)
    if v.check == "degree-dichotomy":
        if v.condition == "dichotomy.split":
            return _dichotomy_split_violation(g, v.data["a"], v.data["v"]) is not None
        return _dichotomy_cap_violation(coloring(), v.data["a"], v.data["b"], v.data["v"]) is not None
    if v.check == "xy-existence":
        return len(_xy_candidates(g, coloring(), v.data["a"], v.data["b"], v.data["t"])) < 2
    if v.check == "fork":
        fork = parse_structure(v.structure)
        c = coloring()
        return fork in find_forks(c, fork.a, fork.b) and _fork_violation(g, fork) is not None
    if v.check == "branch":
        branch = parse_structure(v.structure)
        c = coloring()
        return (branch in find_branches(c, short=False, a=branch.a, b=branch.b)
                and _branch_violation(c, branch) is not None)
    if v.check == "short-branch":
        sb = parse_structure(v.structure)
        c = coloring()
        return (sb in find_branches(c, short=True, a=sb.a, b=sb.b)
                and _short_branch_violation(g, sb) is not None)
    if v.check == "theorem1":
        return (is_delta_critical(g) and _theorem1_applicable(g) and not is_overfull(g))
    if v.check == "conjecture":
        if v.condition.startswith("niessen"):
            count = len(find_overfull_subgraphs(g))
            return count > (3 if v.condition.endswith("three") else 1)
        return is_delta_critical(g) and 3 * delta > g.n and not is_overfull(g)
    raise ValueError(f"unknown check {v.check!r}")


CHECKS = {
    "val": verify_val,
    "multifan": verify_multifan_lemma,
    "kierstead": verify_kierstead_lemma,
    "degree-dichotomy": verify_degree_dichotomy,
    "xy-existence": verify_xy_existence,
    "fork": verify_fork_lemma,
    "branch": verify_branch_lemma,
    "short-branch": verify_short_branch_lemma,
    "theorem1": verify_theorem1,
}
