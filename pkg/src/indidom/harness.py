"""Verification harness: structural checks, bound formulas, and graph6
stream scanning.

Each check turns one graph into one row with a verdict: pass, fail,
skipped (precondition not met), or budget (solver gave up within its
limits).  Rows carry the computed value, the expected value, a witness
string, and wall-clock millis; everything except the timing is a pure
function of the graph6 line, the check list, and the limits, so scans
are reproducible and safely parallel.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from . import families
from .engine import SolveBudgetError, SolveLimits, solve_gi
from .graphs import Graph, VertexSet, bipartition, split_partition
from .graphio import Graph6Error, encode_graph6, parse_graph6
from .invariants import ExactBudgetError, chain_report, independence_number

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
BUDGET = "budget"
PARSE_ERROR = "parse_error"

CHECK_KINDS = (
    "chain",
    "bipartite_alpha",
    "cubic_bipartite_half",
    "extremal",
    "pathpower_bounds",
    "tree_alpha",
    "split_alpha",
    "grid_formula",
)

CSV_HEADER = "graph6,n,check,verdict,value,expected,witness,millis"


@dataclass(frozen=True)
class CheckSpec:
    """One predicate to evaluate per graph.

    pathpower_bounds and grid_formula compare against a labeled family
    member and need its parameters: {"n": ..., "k": ...} respectively
    {"m": ..., "n": ...}.  Graphs that are not that exact labeled graph
    are skipped, since recognizing relabelings is out of scope.
    """

    kind: str
    limits: SolveLimits = field(default_factory=SolveLimits)
    params: Optional[dict] = None

    def __post_init__(self):
        if self.kind not in CHECK_KINDS:
            raise ValueError(f"unknown check kind {self.kind!r}")


@dataclass(frozen=True)
class CheckRow:
    graph6: str
    n: int
    check: str
    verdict: str
    value: Optional[int]
    expected: str
    witness: str
    millis: int

    def to_csv(self) -> str:
        cells = [self.graph6, str(self.n), self.check, self.verdict,
                 "" if self.value is None else str(self.value),
                 self.expected, self.witness, str(self.millis)]
        return ",".join(_csv_escape(c) for c in cells)

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6, "n": self.n, "check": self.check,
            "verdict": self.verdict, "value": self.value,
            "expected": self.expected, "witness": self.witness,
            "millis": self.millis,
        }


def _csv_escape(cell: str) -> str:
    if any(ch in cell for ch in ',"\n'):
        return '"' + cell.replace('"', '""') + '"'
    return cell


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[CheckRow, ...]

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0, BUDGET: 0, PARSE_ERROR: 0}
        for row in self.rows:
            counts[row.verdict] += 1
        counts["rows"] = len(self.rows)
        return counts

    @property
    def clean(self) -> bool:
        s = self.summary
        return s[FAIL] == 0 and s[BUDGET] == 0 and s[PARSE_ERROR] == 0

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        lines.extend(row.to_csv() for row in self.rows)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"rows": [r.to_dict() for r in self.rows],
                           "summary": self.summary}, indent=2)


def extremal_structure_check(g: Graph) -> tuple[bool, Optional[VertexSet]]:
    """Detect the join structure behind maximal game length.

    True iff some set S of exactly min-degree size has every outside
    vertex adjacent to all of S and nothing else, which makes the
    outside independent.  When it exists, S is the open neighborhood of
    a minimum-degree vertex, so only those candidates are tried.
    """
    if g.n == 0:
        return False, None
    delta = g.min_degree()
    seen = set()
    for v in range(g.n):
        if g.degree(v) != delta:
            continue
        s_mask = g.adj[v]
        if s_mask in seen:
            continue
        seen.add(s_mask)
        if all(g.adj[w] == s_mask for w in range(g.n) if not s_mask >> w & 1):
            return True, VertexSet(g.n, s_mask)
    return False, None


def pathpower_bounds(n: int, k: int) -> tuple[int, int]:
    """Closed-form sandwich for the game length on the k-th power of P_n.

    lower = (ceil(log2(k+1)) + 1) * (n // 4k); upper floors
    c*n/(2k+2) + c with c = ceil(log2(k+1)) + 2.  Both are exact integer
    arithmetic; flooring the upper bound keeps it valid for an integer
    quantity.
    """
    if k < 2 or n < k:
        raise ValueError("needs n >= k >= 2")
    ceil_log = k.bit_length()
    lower = (ceil_log + 1) * (n // (4 * k))
    c = ceil_log + 2
    upper = (c * n) // (2 * k + 2) + c
    return lower, upper


def _row(g6: str, g: Graph, kind: str, verdict: str, value: Optional[int],
         expected: str, witness: str, started: float) -> CheckRow:
    millis = int((time.perf_counter() - started) * 1000)
    return CheckRow(g6, g.n, kind, verdict, value, expected, witness, millis)


def _solve_value(g: Graph, limits: SolveLimits) -> int:
    return solve_gi(g, limits).value


def check_conjecture(g: Graph, spec: CheckSpec) -> CheckRow:
    """Evaluate one check on one graph; never raises for graph-level
    outcomes (skips and budget overruns become verdicts)."""
    g6 = encode_graph6(g)
    started = time.perf_counter()
    kind = spec.kind
    limits = spec.limits
    try:
        if kind == "chain":
            return _check_chain(g6, g, limits, started)
        if kind == "bipartite_alpha":
            if bipartition(g) is None:
                return _row(g6, g, kind, SKIPPED, None, "", "not bipartite", started)
            alpha, _ = independence_number(g, node_budget=limits.node_budget)
            value = _solve_value(g, limits)
            verdict = PASS if value == alpha else FAIL
            return _row(g6, g, kind, verdict, value, str(alpha), "", started)
        if kind == "cubic_bipartite_half":
            if not g.is_regular(3):
                return _row(g6, g, kind, SKIPPED, None, "", "not 3-regular", started)
            if bipartition(g) is None:
                return _row(g6, g, kind, SKIPPED, None, "", "not bipartite", started)
            if not g.is_connected():
                return _row(g6, g, kind, SKIPPED, None, "", "not connected", started)
            value = _solve_value(g, limits)
            verdict = PASS if 2 * value == g.n else FAIL
            return _row(g6, g, kind, verdict, value, str(g.n // 2), "", started)
        if kind == "extremal":
            return verify_extremal(g, limits)
        if kind == "pathpower_bounds":
            params = spec.params or {}
            if "n" not in params or "k" not in params:
                return _row(g6, g, kind, SKIPPED, None, "", "missing n,k params", started)
            n, k = int(params["n"]), int(params["k"])
            if g != families.path_power(n, k):
                return _row(g6, g, kind, SKIPPED, None, "",
                            f"not the labeled path power ({n},{k})", started)
            lower, upper = pathpower_bounds(n, k)
            value = _solve_value(g, limits)
            verdict = PASS if lower <= value <= upper else FAIL
            return _row(g6, g, kind, verdict, value, f"{lower}..{upper}", "", started)
        if kind == "tree_alpha":
            if not g.is_tree():
                return _row(g6, g, kind, SKIPPED, None, "", "not a tree", started)
            alpha, _ = independence_number(g, node_budget=limits.node_budget)
            value = _solve_value(g, limits)
            verdict = PASS if value == alpha else FAIL
            return _row(g6, g, kind, verdict, value, str(alpha), "", started)
        if kind == "split_alpha":
            if split_partition(g) is None:
                return _row(g6, g, kind, SKIPPED, None, "", "not a split graph", started)
            alpha, _ = independence_number(g, node_budget=limits.node_budget)
            value = _solve_value(g, limits)
            verdict = PASS if value == alpha else FAIL
            return _row(g6, g, kind, verdict, value, str(alpha), "", started)
        if kind == "grid_formula":
            params = spec.params or {}
            if "m" not in params or "n" not in params:
                return _row(g6, g, kind, SKIPPED, None, "", "missing m,n params", started)
            m, n = int(params["m"]), int(params["n"])
            if g != families.grid(m, n):
                return _row(g6, g, kind, SKIPPED, None, "",
                            f"not the labeled {m}x{n} grid", started)
            value = _solve_value(g, limits)
            expected = (m * n + 1) // 2
            verdict = PASS if value == expected else FAIL
            return _row(g6, g, kind, verdict, value, str(expected), "", started)
        raise AssertionError(kind)
    except (SolveBudgetError, ExactBudgetError) as exc:
        return _row(g6, g, kind, BUDGET, None, "", str(exc), started)


def _check_chain(g6: str, g: Graph, limits: SolveLimits, started: float) -> CheckRow:
    report = chain_report(g, node_budget=limits.node_budget,
                          memo_capacity=limits.memo_capacity)
    value = _solve_value(g, limits)
    entries = report.as_dict()
    if any(entries[k] is None for k in ("ir", "gamma", "i", "alpha", "Gamma", "IR", "gamma_gr")):
        return _row(g6, g, "chain", BUDGET, value, "", "chain entry over budget", started)
    delta = g.min_degree()
    ok = (entries["Gamma"] <= value <= entries["gamma_gr"]
          and entries["gamma_gr"] <= g.n - delta)
    witness = ";".join(f"{k}={entries[k]}" for k in
                       ("ir", "gamma", "i", "alpha", "Gamma", "IR", "gamma_gr")) + f";gi={value}"
    expected = f"Gamma<=gi<=gamma_gr<={g.n - delta}"
    return _row(g6, g, "chain", PASS if ok else FAIL, value, expected, witness, started)


def verify_extremal(g: Graph, limits: Optional[SolveLimits] = None) -> CheckRow:
    """Check that maximal game length and the join structure coincide.

    Skipped unless n >= 2*delta + 2, the regime where the equivalence is
    established; below it the converse direction is an open question.
    """
    limits = limits or SolveLimits()
    g6 = encode_graph6(g)
    started = time.perf_counter()
    delta = g.min_degree()
    if g.n < 2 * delta + 2:
        return _row(g6, g, "extremal", SKIPPED, None, "",
                    f"n={g.n} < 2*delta+2={2 * delta + 2}", started)
    structural, s_set = extremal_structure_check(g)
    try:
        value = _solve_value(g, limits)
    except (SolveBudgetError, ExactBudgetError) as exc:
        return _row(g6, g, "extremal", BUDGET, None, "", str(exc), started)
    expected = g.n - delta
    agrees = (value == expected) == structural
    witness = (f"structure=yes;S={{{','.join(map(str, s_set))}}}" if structural
               else "structure=no")
    return _row(g6, g, "extremal", PASS if agrees else FAIL, value,
                str(expected), witness, started)


def _scan_line(line: str, specs: tuple[CheckSpec, ...]) -> list[CheckRow]:
    text = line.strip()
    if not text:
        return []
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return [CheckRow(text, 0, "parse", PARSE_ERROR, None, "", str(exc), 0)]
    return [check_conjecture(g, spec) for spec in specs]


def scan_stream(lines: Iterable[str], specs: Sequence[CheckSpec],
                jobs: int = 1,
                on_row: Optional[Callable[[CheckRow], None]] = None) -> ScanReport:
    """Run every spec against every graph6 line, in input order.

    Blank lines are ignored; malformed lines become parse_error rows and
    the scan continues.  With jobs > 1 the per-line work fans out to a
    process pool, but rows still come back in input order; on_row sees
    each row as soon as its line is finished, so long scans can stream
    counterexamples before the report is complete.
    """
    spec_tuple = tuple(specs)
    rows: list[CheckRow] = []

    def _emit(batch: list[CheckRow]) -> None:
        for row in batch:
            rows.append(row)
            if on_row is not None:
                on_row(row)

    if jobs <= 1:
        for line in lines:
            _emit(_scan_line(line, spec_tuple))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(_scan_line, lines, itertools.repeat(spec_tuple),
                                  chunksize=4):
                _emit(batch)
    return ScanReport(rows=tuple(rows))
