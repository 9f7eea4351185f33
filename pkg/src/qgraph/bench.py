"""Benchmark harness: single runs, scaling sweeps, and exponent fits.

A sweep is described by a flat ``key = value`` keyfile: an algorithm, an
access model, a size grid, a density rule tying edge count to n, capacities,
seeds per grid point, and an amplification mode.  Each grid point runs with
its own ledger, every row lands in a fixed-column CSV, and the per-point
median charged-query counts are fitted on log-log axes against the slope the
cost bound predicts for that density rule.  Identical specs reproduce
byte-identical CSVs.
"""

from __future__ import annotations

import hashlib
import math
import re
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .baselines import (
    BRUTE_FORCE_VERTEX_LIMIT,
    brute_force_max_matching,
    classical_bfs_layers,
    classical_hopcroft_karp,
    edmonds_karp,
)
from .bipartite import bipartition, max_bipartite_matching
from .blossom import max_general_matching
from .flow import max_flow_integer, residual_flow_bound
from .generators import (
    bipartite_half_graph,
    complete_bipartite,
    cycle_graph,
    gen_gnm_digraph,
    gen_majority_hard_instance,
    gen_random_bipartite,
    gen_random_graph,
    gen_random_network,
    path_graph,
    petersen_graph,
)
from .graphs import (
    BlackBoxGraph,
    ContractViolationError,
    GraphError,
    IntegerNetwork,
    Model,
)
from .grover import Amplification, OracleConfig, make_run_ledger
from .io import GraphParseError
from .layers import assign_layers

ALGORITHMS = ("layers", "bipartite", "general", "flow")

#: Fixed column order of every report CSV.
CSV_COLUMNS = (
    "sweep_id",
    "algo",
    "model",
    "n",
    "m",
    "U",
    "seed",
    "answer",
    "oracle",
    "charged_queries",
    "raw_probes",
    "phases",
    "max_depth",
    "verdicts",
)


class SweepVerificationError(GraphError):
    """A sweep row failed verification; the sweep is aborted."""


# -- density rules -----------------------------------------------------------


@dataclass(frozen=True)
class DensityRule:
    """Edge count as a function of n: either Bernoulli p or m = coeff * n**exp."""

    kind: str  # "p" or "m"
    p: float = 0.0
    coeff: float = 1.0
    exponent: float = 1.0

    def key(self) -> str:
        if self.kind == "p":
            return f"p:{self.p:g}"
        return f"m:{self.coeff:g}n^{self.exponent:g}"

    def edge_exponent(self) -> float:
        """Exponent a in m = Theta(n**a) under this rule."""
        return 2.0 if self.kind == "p" else self.exponent

    def target_m(self, n: int, pair_count: int) -> int:
        """Intended edge count at size n, clamped to [1, pair_count]."""
        if self.kind == "p":
            raw = self.p * pair_count
        else:
            raw = self.coeff * float(n) ** self.exponent
        return max(1, min(pair_count, round(raw)))


_DENSITY_M = re.compile(r"^m:(\d+(?:\.\d+)?)?n(?:\^(\d+(?:\.\d+)?))?$")


def parse_density(text: str) -> DensityRule:
    """Parse a density rule: ``p:0.5``, ``m:4n``, or ``m:n^1.5``."""
    text = text.strip().replace(" ", "")
    if text.startswith("p:"):
        try:
            p = float(text[2:])
        except ValueError:
            raise GraphParseError(0, f"bad density probability in {text!r}")
        if not 0.0 < p <= 1.0:
            raise GraphParseError(0, f"density probability {p} outside (0, 1]")
        return DensityRule(kind="p", p=p)
    match = _DENSITY_M.match(text)
    if match is None:
        raise GraphParseError(
            0, f"bad density rule {text!r}; want p:<prob> or m:<c>n^<a>"
        )
    coeff = float(match.group(1)) if match.group(1) else 1.0
    exponent = float(match.group(2)) if match.group(2) else 1.0
    if coeff <= 0 or exponent < 1.0 or exponent > 2.0:
        raise GraphParseError(
            0, f"density m-rule needs coeff > 0 and exponent in [1, 2]: {text!r}"
        )
    return DensityRule(kind="m", coeff=coeff, exponent=exponent)


# -- sweep specification -----------------------------------------------------


@dataclass(frozen=True)
class SweepSpec:
    algorithm: str
    model: Model
    sizes: tuple[int, ...]
    density: DensityRule
    U: int = 1
    seeds: int = 1
    amplification: Amplification = Amplification.NONE
    verify: bool = True
    family: str = "random"  # "half" forces worst-case-phase bipartite instances

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ContractViolationError(f"unknown algorithm {self.algorithm!r}")
        if len(set(self.sizes)) < 3:
            raise ContractViolationError("exponent fits need >= 3 distinct sizes")
        if sorted(self.sizes) != list(self.sizes):
            raise ContractViolationError("sizes must be strictly increasing")
        if min(self.sizes) < 2:
            raise ContractViolationError("sizes must be >= 2")
        if self.seeds < 1:
            raise ContractViolationError("seeds must be >= 1")
        if self.U < 1:
            raise ContractViolationError("U must be >= 1")
        if self.family not in ("random", "half"):
            raise ContractViolationError(f"unknown instance family {self.family!r}")
        if self.family == "half" and self.algorithm != "bipartite":
            raise ContractViolationError("the half family is bipartite-only")
        if self.family == "half" and any(n % 2 for n in self.sizes):
            raise ContractViolationError("the half family needs even sizes")

    def config_hash(self) -> str:
        canon = ";".join(
            (
                f"algorithm={self.algorithm}",
                f"model={self.model.value}",
                "sizes=" + ",".join(str(n) for n in self.sizes),
                f"density={self.density.key()}",
                f"U={self.U}",
                f"seeds={self.seeds}",
                f"amp={self.amplification.value}",
                f"verify={int(self.verify)}",
                f"family={self.family}",
            )
        )
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()[:12]


_BOOLEANS = {"on": True, "true": True, "1": True, "off": False, "false": False, "0": False}


def parse_sweep_keyfile(text: str) -> SweepSpec:
    """Parse a flat ``key = value`` sweep spec.

    Recognized keys: algorithm, model, sizes (comma list), density, U,
    seeds, amp, verify.  Blank lines and ``#`` comments are skipped.
    """
    values: dict[str, str] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise GraphParseError(line_no, f"expected key = value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if not key or not value:
            raise GraphParseError(line_no, f"empty key or value in {line!r}")
        if key in values:
            raise GraphParseError(line_no, f"duplicate key {key!r}")
        values[key] = value

    known = {
        "algorithm",
        "model",
        "sizes",
        "density",
        "u",
        "seeds",
        "amp",
        "verify",
        "family",
    }
    unknown = set(values) - known
    if unknown:
        raise GraphParseError(0, f"unknown keys: {sorted(unknown)}")
    for required in ("algorithm", "model", "sizes", "density"):
        if required not in values:
            raise GraphParseError(0, f"missing required key {required!r}")

    algorithm = values["algorithm"].lower()
    if algorithm not in ALGORITHMS:
        raise GraphParseError(0, f"unknown algorithm {algorithm!r}")
    model_text = values["model"].lower()
    if model_text not in ("adjacency", "list"):
        raise GraphParseError(0, f"unknown model {model_text!r}")
    try:
        sizes = tuple(int(tok) for tok in values["sizes"].split(",") if tok.strip())
    except ValueError:
        raise GraphParseError(0, f"bad sizes list {values['sizes']!r}")
    density = parse_density(values["density"])
    try:
        u_cap = int(values.get("u", "1"))
        seeds = int(values.get("seeds", "1"))
    except ValueError:
        raise GraphParseError(0, "U and seeds must be integers")
    amp_text = values.get("amp", "none").lower()
    if amp_text not in ("none", "logn"):
        raise GraphParseError(0, f"unknown amp mode {amp_text!r}")
    verify_text = values.get("verify", "on").lower()
    if verify_text not in _BOOLEANS:
        raise GraphParseError(0, f"bad verify flag {verify_text!r}")
    family = values.get("family", "random").lower()
    try:
        return SweepSpec(
            algorithm=algorithm,
            model=Model(model_text),
            sizes=sizes,
            density=density,
            U=u_cap,
            seeds=seeds,
            amplification=Amplification(amp_text),
            verify=_BOOLEANS[verify_text],
            family=family,
        )
    except ContractViolationError as exc:
        raise GraphParseError(0, str(exc))


def predicted_slope(spec: SweepSpec) -> float:
    """Exponent of the cost bound for this algorithm, model, and density.

    Log factors are dropped; the comparison band absorbs them.  The edge
    exponent a means m = Theta(n**a) (a = 2 under a probability rule, and in
    the adjacency model where the whole relation is the domain).
    """
    a = spec.density.edge_exponent()
    if spec.model is Model.ADJACENCY:
        a = 2.0
    if spec.algorithm == "layers":
        # sqrt(n*m)
        return (1.0 + a) / 2.0
    if spec.algorithm == "bipartite":
        # n * sqrt(m + n)
        return 1.0 + max(a, 1.0) / 2.0
    if spec.algorithm == "general":
        # n**1.5 * sqrt(m) + n**2
        return max(1.5 + a / 2.0, 2.0)
    # flow: min(n**(7/6) * sqrt(m), sqrt(n) * m) with U fixed
    return min(7.0 / 6.0 + a / 2.0, 0.5 + a)


# -- log-log fitting ---------------------------------------------------------


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    residual: float
    predicted: float

    def within(self, band: float) -> bool:
        return abs(self.slope - self.predicted) <= band


def fit_loglog(points: list[tuple[float, float]], predicted: float) -> FitResult:
    """Least-squares slope of log(cost) against log(n) over >= 3 points."""
    if len(points) < 3:
        raise ContractViolationError("exponent fits need >= 3 points")
    xs = [math.log(x) for x, _ in points]
    ys = [math.log(y) for _, y in points]
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    var = sum((x - mean_x) ** 2 for x in xs)
    if var == 0:
        raise ContractViolationError("degenerate fit: all sizes equal")
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    slope = cov / var
    intercept = mean_y - slope * mean_x
    rss = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    return FitResult(
        slope=slope,
        intercept=intercept,
        residual=math.sqrt(rss / n),
        predicted=predicted,
    )


# -- single runs -------------------------------------------------------------

Instance = Union[BlackBoxGraph, IntegerNetwork]


@dataclass
class RunRecord:
    """One report row plus the full algorithm report for callers that dig."""

    sweep_id: str
    algo: str
    model: str
    n: int
    m: int
    U: int
    seed: int
    answer: int
    oracle: Optional[int]
    charged_queries: Fraction
    raw_probes: int
    phases: int
    max_depth: int
    verdicts: str
    report: object = None

    @property
    def ok(self) -> bool:
        return "fail" not in self.verdicts and "mismatch" not in self.verdicts

    def row(self) -> list[str]:
        return [
            self.sweep_id,
            self.algo,
            self.model,
            str(self.n),
            str(self.m),
            str(self.U),
            str(self.seed),
            str(self.answer),
            "" if self.oracle is None else str(self.oracle),
            format_charge(self.charged_queries),
            str(self.raw_probes),
            str(self.phases),
            str(self.max_depth),
            self.verdicts,
        ]


def format_charge(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _general_oracle_size(g: BlackBoxGraph) -> Optional[int]:
    if g.n <= BRUTE_FORCE_VERTEX_LIMIT:
        return brute_force_max_matching(g).size()
    try:
        import networkx as nx
    except ImportError:
        return None
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_pairs())
    return len(nx.max_weight_matching(h, maxcardinality=True))


def run_once(
    algorithm: str,
    instance: Instance,
    config: OracleConfig,
    *,
    verify: bool = False,
    seed: int = 0,
    sweep_id: str = "single",
) -> RunRecord:
    """Run one algorithm on one instance and build its report row.

    ``verify`` adds an independent classical oracle answer plus a match
    verdict; bound verdicts are always checked.  The record's ``ok`` flag
    goes false on any failed verdict instead of raising, so callers decide
    whether a mismatch is fatal.
    """
    if algorithm not in ALGORITHMS:
        raise ContractViolationError(f"unknown algorithm {algorithm!r}")
    verdicts: list[str] = []
    oracle: Optional[int] = None

    if algorithm == "flow":
        if not isinstance(instance, IntegerNetwork):
            raise ContractViolationError("flow needs a capacitated network")
        net = instance
        flow, report = max_flow_integer(net, config)
        flow.validate(net)
        answer = flow.value
        phases = len(report.phases)
        max_depth = max((p.depth for p in report.phases), default=0)
        blocking = report.blocking_phase_count()
        verdicts.append(
            "phase_bound=ok" if blocking <= report.threshold else "phase_bound=fail"
        )
        if report.switch_index is not None:
            gap = residual_flow_bound(net.n, net.m, net.U, report.switch_depth)
            post = report.single_phase_count()
            verdicts.append("tail_bound=ok" if post <= gap else "tail_bound=fail")
        if verify:
            oracle = edmonds_karp(net).value
            verdicts.append("value=ok" if oracle == answer else "value=mismatch")
        n, m, u_cap = net.n, net.m, net.U
    else:
        if not isinstance(instance, BlackBoxGraph):
            raise ContractViolationError(f"{algorithm} needs a graph instance")
        g = instance
        n, m, u_cap = g.n, g.m, 1
        if algorithm == "layers":
            ledger = make_run_ledger(config, g.n)
            la = assign_layers(g, 0, config, ledger)
            answer = sum(1 for x in la.layer if x is not None)
            phases = 1
            max_depth = max((x for x in la.layer if x is not None), default=0)
            if verify:
                reference = classical_bfs_layers(g, 0)
                oracle = sum(1 for x in reference if x is not None)
                verdicts.append(
                    "layers=ok" if reference == la.layer else "layers=mismatch"
                )
            snapshot_source = ledger
            report = la
        elif algorithm == "bipartite":
            matching, report = max_bipartite_matching(g, config)
            matching.validate(g)
            answer = matching.size()
            phases = report.iterations
            max_depth = max(report.path_lengths(), default=0)
            verdicts.append(
                "iters=ok"
                if report.iterations <= report.iteration_bound()
                else "iters=fail"
            )
            if verify:
                if g.n <= BRUTE_FORCE_VERTEX_LIMIT:
                    oracle = brute_force_max_matching(g).size()
                else:
                    oracle = classical_hopcroft_karp(g, bipartition(g)).size()
                verdicts.append("size=ok" if oracle == answer else "size=mismatch")
        else:
            matching, report = max_general_matching(g, config)
            matching.validate(g)
            answer = matching.size()
            phases = len(report.phases)
            max_depth = max(
                (p.path_length for p in report.phases if p.path_length), default=0
            )
            if verify:
                oracle = _general_oracle_size(g)
                if oracle is not None:
                    verdicts.append(
                        "size=ok" if oracle == answer else "size=mismatch"
                    )

    if algorithm == "layers":
        charged = Fraction(snapshot_source.charged_queries)
        raw = snapshot_source.raw_probes
    else:
        snap = report.ledger_snapshot
        charged = _charge_from_snapshot(snap)
        raw = snap["raw_probes"]

    return RunRecord(
        sweep_id=sweep_id,
        algo=algorithm,
        model=instance.graph.model.value
        if isinstance(instance, IntegerNetwork)
        else instance.model.value,
        n=n,
        m=m,
        U=u_cap,
        seed=seed,
        answer=answer,
        oracle=oracle,
        charged_queries=charged,
        raw_probes=raw,
        phases=phases,
        max_depth=max_depth,
        verdicts=";".join(verdicts) if verdicts else "unverified",
        report=report,
    )


def _charge_from_snapshot(snap: dict) -> Fraction:
    text = snap["charged_queries"]
    return Fraction(text)


# -- instance construction for sweep grids -----------------------------------


def build_sweep_instance(spec: SweepSpec, n: int, seed: int) -> Instance:
    """Deterministic instance for one grid point of a sweep."""
    if spec.family == "half":
        return bipartite_half_graph(n, seed, model=spec.model)
    if spec.algorithm == "flow":
        pair_count = n * (n - 1) // 2
        m = max(n - 1, spec.density.target_m(n, pair_count))
        return gen_random_network(n, m, spec.U, seed, model=spec.model)
    if spec.algorithm == "layers":
        pair_count = n * (n - 1)
        m = max(n - 1, spec.density.target_m(n, pair_count))
        return gen_gnm_digraph(n, m, seed, model=spec.model, connected=True)
    if spec.algorithm == "bipartite":
        n1 = n // 2
        n2 = n - n1
        if spec.density.kind == "p":
            p = spec.density.p
        else:
            p = min(1.0, spec.density.target_m(n, n1 * n2) / (n1 * n2))
        return gen_random_bipartite(n1, n2, p, seed, model=spec.model)
    pair_count = n * (n - 1) // 2
    if spec.density.kind == "p":
        p = spec.density.p
    else:
        p = min(1.0, spec.density.target_m(n, pair_count) / pair_count)
    return gen_random_graph(n, p, seed, model=spec.model)


@dataclass
class SweepResult:
    spec: SweepSpec
    sweep_id: str
    records: list[RunRecord]
    medians: list[tuple[int, Fraction]]
    fit: FitResult


def run_sweep(spec: SweepSpec, jobs: int = 1) -> SweepResult:
    """Run every grid point, verify, and fit the median cost exponent.

    Rows are produced per (size, seed) pair, each with its own ledger, then
    order-normalized by (n, seed).  The first failed verification aborts the
    whole sweep.  ``jobs`` > 1 runs grid points concurrently; results do not
    depend on the schedule.
    """
    sweep_id = spec.config_hash()
    points = [(n, s) for n in spec.sizes for s in range(spec.seeds)]
    config = OracleConfig(seed=0, amplification_mode=spec.amplification)

    def one(point: tuple[int, int]) -> RunRecord:
        n, s = point
        instance = build_sweep_instance(spec, n, s)
        run_config = OracleConfig(
            seed=s, amplification_mode=config.amplification_mode
        )
        return run_once(
            spec.algorithm,
            instance,
            run_config,
            verify=spec.verify,
            seed=s,
            sweep_id=sweep_id,
        )

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(one, points))
    else:
        records = [one(p) for p in points]
    records.sort(key=lambda r: (r.n, r.seed))

    for rec in records:
        if not rec.ok:
            raise SweepVerificationError(
                f"verification failed at n={rec.n} seed={rec.seed}: "
                f"answer={rec.answer} oracle={rec.oracle} verdicts={rec.verdicts}"
            )

    medians: list[tuple[int, Fraction]] = []
    for n in spec.sizes:
        charges = [r.charged_queries for r in records if r.n == n]
        medians.append((n, Fraction(statistics.median(charges))))
    fit = fit_loglog(
        [(float(n), float(c)) for n, c in medians], predicted_slope(spec)
    )
    return SweepResult(
        spec=spec, sweep_id=sweep_id, records=records, medians=medians, fit=fit
    )


# -- CSV ---------------------------------------------------------------------


def render_csv(records: list[RunRecord]) -> str:
    """Fixed-column CSV text with LF line endings, byte-stable per input."""
    lines = [",".join(CSV_COLUMNS)]
    for rec in records:
        row = rec.row()
        for cell in row:
            if "," in cell or '"' in cell or "\n" in cell:
                raise ContractViolationError(f"cell needs quoting: {cell!r}")
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def write_csv(path, records: list[RunRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_csv(records))


# -- generator mini-language for the CLI -------------------------------------

_K_COMPACT = re.compile(r"^k(\d)(\d)$")
_K_EXPLICIT = re.compile(r"^k(\d+)x(\d+)$")


def _parse_kv_params(body: str, line_hint: str) -> dict[str, str]:
    params: dict[str, str] = {}
    if not body:
        return params
    for part in body.split(","):
        if "=" not in part:
            raise GraphParseError(0, f"expected key=value in {line_hint!r}")
        key, _, value = part.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise GraphParseError(0, f"empty key or value in {line_hint!r}")
        if key in params:
            raise GraphParseError(0, f"duplicate parameter {key!r}")
        params[key] = value
    return params


def _want_int(params: dict[str, str], key: str, spec: str, default=None) -> int:
    if key not in params:
        if default is None:
            raise GraphParseError(0, f"generator {spec!r} needs {key}=")
        return default
    try:
        return int(params[key])
    except ValueError:
        raise GraphParseError(0, f"parameter {key} must be an integer in {spec!r}")


def _want_float(params: dict[str, str], key: str, spec: str, default=None) -> float:
    if key not in params:
        if default is None:
            raise GraphParseError(0, f"generator {spec!r} needs {key}=")
        return default
    try:
        return float(params[key])
    except ValueError:
        raise GraphParseError(0, f"parameter {key} must be a number in {spec!r}")


def parse_gen_spec(text: str, model: Model, seed: int) -> Instance:
    """Build an instance from a generator spec string.

    Named forms: ``k33`` / ``k3x4`` (complete bipartite), ``petersen``,
    ``path:<n>``, ``cycle:<n>``, ``half:<n>``.  Parameterized forms take
    ``key=value`` lists: ``bipartite:n1=4,n2=5,p=0.5``, ``graph:n=10,p=0.3``,
    ``digraph:n=20,m=60``, ``network:n=10,m=25,U=4``, and
    ``majority:p=6,extra=1``.
    """
    text = text.strip()
    match = _K_COMPACT.match(text) or _K_EXPLICIT.match(text)
    if match:
        n1, n2 = int(match.group(1)), int(match.group(2))
        if n1 < 1 or n2 < 1:
            raise GraphParseError(0, f"bad complete bipartite sizes in {text!r}")
        return complete_bipartite(n1, n2, model=model)
    if text == "petersen":
        return petersen_graph(model=model)
    kind, sep, body = text.partition(":")
    if not sep:
        raise GraphParseError(0, f"unknown generator {text!r}")
    if kind == "path":
        try:
            return path_graph(int(body), model=model)
        except ValueError:
            raise GraphParseError(0, f"path needs an integer size, got {body!r}")
    if kind == "cycle":
        try:
            return cycle_graph(int(body), model=model)
        except ValueError:
            raise GraphParseError(0, f"cycle needs an integer size, got {body!r}")
    if kind == "half":
        try:
            return bipartite_half_graph(int(body), seed, model=model)
        except ValueError:
            raise GraphParseError(0, f"half needs an integer size, got {body!r}")
    params = _parse_kv_params(body, text)
    if kind == "bipartite":
        n1 = _want_int(params, "n1", text)
        n2 = _want_int(params, "n2", text)
        p = _want_float(params, "p", text, default=0.5)
        return gen_random_bipartite(n1, n2, p, seed, model=model)
    if kind == "graph":
        n = _want_int(params, "n", text)
        p = _want_float(params, "p", text, default=0.5)
        return gen_random_graph(n, p, seed, model=model)
    if kind == "digraph":
        n = _want_int(params, "n", text)
        m = _want_int(params, "m", text, default=max(1, 2 * n))
        return gen_gnm_digraph(n, m, seed, model=model)
    if kind == "network":
        n = _want_int(params, "n", text)
        m = _want_int(params, "m", text, default=max(1, 2 * n))
        u_cap = _want_int(params, "U", text, default=1)
        return gen_random_network(n, m, u_cap, seed, model=model)
    if kind == "majority":
        p = _want_int(params, "p", text)
        extra = _want_int(params, "extra", text, default=0)
        if extra not in (0, 1):
            raise GraphParseError(0, "majority extra must be 0 or 1")
        return gen_majority_hard_instance(p, extra, seed, model=model)
    raise GraphParseError(0, f"unknown generator kind {kind!r}")
