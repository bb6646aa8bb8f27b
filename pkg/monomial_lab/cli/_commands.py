"""Handlers of the ``monomial-lab`` subcommands.

Every handler returns a :class:`CommandResult`: the JSON document, optional
rows for ``jsonl``/``csv`` output and, for checks, the failed report.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from monomial_lab._constants import BlockClosure, CheckStatus, Family, Inequality
from monomial_lab._exponents import parse_r
from monomial_lab.bounds import bohr_trend, build_report, kq_envelope, sweep
from monomial_lab.cli._parser import default_base
from monomial_lab.index import (
    MultiIndex,
    WeightedFamilySpec,
    census,
    enumerate_family,
    enumerate_jmn,
    index_to_json,
    kq_decompose,
    multiplicity,
    reduced_inclusion_violations,
    verify_kq_partition,
)
from monomial_lab.io import load_polynomial
from monomial_lab.poly import (
    BallSpec,
    CheckReport,
    SupNormBudget,
    block_partial_sums,
    cauchy_bound_check,
    kq_sum_report,
    mixed_norm_check,
    one_variable_powers,
    parse_point,
    sidon_estimate,
    thm_monomial_check,
)
from monomial_lab.weights import weight_sequence


@dataclass
class CommandResult:
    result: Any
    rows: Optional[List[Dict[str, Any]]] = None
    failed: Optional[Dict[str, Any]] = None


@dataclass
class RunConfig:
    """Everything that determines the output bytes of a run.

    ``threads`` and the output destination are excluded from :meth:`to_dict`
    since they do not change results.
    """

    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    threads: Optional[int] = None
    max_elements: Optional[int] = None
    out: Optional[str] = None
    format: str = "json"

    @classmethod
    def from_namespace(cls, args) -> "RunConfig":
        values = dict(vars(args))
        command = " ".join(
            part for part in (values.pop("command"), values.pop("check", None), values.pop("probe", None)) if part
        )
        values.pop("verbose", None)
        values.pop("handler", None)
        return cls(
            command=command,
            seed=values.pop("seed"),
            threads=values.pop("threads"),
            max_elements=values.pop("max_elements"),
            out=values.pop("out"),
            format=values.pop("format"),
            params=values,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"params": self.params, "seed": self.seed, "max_elements": self.max_elements, "format": self.format}


def _parse_index(text: str) -> MultiIndex:
    entries = [int(item) for item in text.replace(" ", "").split(",") if item]
    return MultiIndex(sorted(entries))


def _parse_index_set(text: str) -> List[MultiIndex]:
    kind, _, rest = text.partition(":")
    if kind == "powers":
        return one_variable_powers(int(rest))
    if kind == "jmn":
        m, n = (int(item) for item in rest.split(","))
        return list(enumerate_jmn(m, n))
    return [_parse_index(part) for part in text.split(";") if part.strip()]


def _family_spec(params: Dict[str, Any]) -> WeightedFamilySpec:
    if params.get("x") is None:
        raise ValueError("The family needs --x")
    return WeightedFamilySpec(
        weight_sequence(params["weights"]),
        params["x"],
        Family(params["family"]),
        y=params.get("y"),
        m=params.get("m"),
        margin=params.get("margin") or 0.0,
    )


def _failure(report: CheckReport) -> Optional[Dict[str, Any]]:
    if report.status is not CheckStatus.FAILED:
        return None
    return {
        "status": report.status.value,
        "inequality": report.inequality.value,
        "failures": [record.to_dict() for record in report.failures],
    }


def run_enum(config: RunConfig) -> CommandResult:
    params = config.params
    if params["family"] == "jmn":
        if params.get("m") is None or params.get("n") is None:
            raise ValueError("--family jmn needs --m and --n")
        indices = list(enumerate_jmn(params["m"], params["n"], cap=config.max_elements))
    else:
        indices = list(enumerate_family(_family_spec(params), cap=config.max_elements))
    rows = [{"index": index_to_json(j), "degree": len(j)} for j in indices]
    return CommandResult({"count": len(indices), "indices": [index_to_json(j) for j in indices]}, rows)


def run_census(config: RunConfig) -> CommandResult:
    params = config.params
    result = census(
        _family_spec(params),
        c=params.get("c"),
        landau_c=params.get("landau_c"),
        threads=config.threads,
        cap=config.max_elements,
    ).to_dict()
    rows = [{"m": int(m), "count": count} for m, count in result["by_degree"].items()]
    return CommandResult(result, rows)


def run_decompose(config: RunConfig) -> CommandResult:
    params = config.params
    rows = []
    for text in params["index"]:
        k = _parse_index(text)
        i, m, j = kq_decompose(params["weights"], params["x"], params["y"], k)
        rows.append({"k": index_to_json(k), "i": index_to_json(i), "m": m, "j": index_to_json(j)})
    return CommandResult({"decompositions": rows}, rows)


def _sweep_grid(items: List[str]) -> Dict[str, List[Any]]:
    grid = {}
    for item in items:
        key, sep, values = item.partition("=")
        if not sep:
            raise ValueError(f"--sweep expects PARAM=v1,v2,..., got {item!r}")
        key = key.strip().replace("-", "_")
        parsed = []
        for value in values.split(","):
            value = value.strip()
            if key in ("m", "n", "j_star_size", "m_max"):
                parsed.append(int(float(value)))
            elif key in ("r", "weights", "variant", "constant"):
                parsed.append(value)
            else:
                parsed.append(float(value))
        grid[key] = parsed
    return grid


def run_bound(config: RunConfig) -> CommandResult:
    params = dict(config.params)
    name = params.pop("name")
    table = params.pop("table")
    params.pop("json")
    grid = _sweep_grid(params.pop("sweep"))
    if table or grid:
        reports = list(sweep(name, params, grid))
        rows = []
        for report in reports:
            row = dict(report.inputs)
            row["value"] = report.value
            rows.append(row)
        if table:
            config.format = "csv"
        return CommandResult({"name": name, "reports": [report.to_dict() for report in reports]}, rows)
    report = build_report(name, params)
    return CommandResult(report.to_dict(), [{**report.inputs, "value": report.value}])


def _poly_check(config: RunConfig) -> CommandResult:
    params = config.params
    P = load_polynomial(params["poly"])
    spec = BallSpec(parse_r(params["r"]), params.get("n") or max(P.n_vars, 1))
    budget = SupNormBudget(params["restarts"], params["iterations"], config.seed, params["torus_grid"])
    kind = config.command.split()[-1]
    if kind == "cauchy":
        report = cauchy_bound_check(P, spec, budget, threads=config.threads)
    elif kind == "mixed":
        report = mixed_norm_check(P, spec, budget, threads=config.threads)
    else:
        J = P.indices if not params.get("indices") else _parse_index_set(params["indices"])
        report = thm_monomial_check(P, spec, J, parse_point(params["u"]), budget, threads=config.threads)
    rows = [record.to_dict() for record in report.records]
    return CommandResult(report.to_dict(), rows, _failure(report))


def _reduced_inclusion(config: RunConfig) -> CommandResult:
    params = config.params
    violations = reduced_inclusion_violations(
        params["weights"], params["x"], params["m"], y=params.get("y"), cap=config.max_elements
    )
    result = {
        "inequality": Inequality.REDUCED_INCLUSION.value,
        "status": (CheckStatus.FAILED if violations else CheckStatus.PASSED).value,
        "violations": [index_to_json(j) for j in violations],
    }
    failed = None
    if violations:
        failed = {"status": "failed", "inequality": result["inequality"], "failures": result["violations"]}
    return CommandResult(result, [{"index": index_to_json(j)} for j in violations], failed)


def _kq_partition(config: RunConfig) -> CommandResult:
    params = config.params
    seq = weight_sequence(params["weights"])
    x, y = params["x"], params["y"]
    partition = verify_kq_partition(seq, x, y, cap=config.max_elements)
    family = list(enumerate_family(WeightedFamilySpec(seq, x), cap=config.max_elements))
    n = max((j.max_entry for j in family), default=1)
    sums = []
    for k in range(params["fields"]):
        rng = np.random.default_rng([config.seed, k])
        coeffs = dict(zip(family, rng.standard_normal(len(family))))
        u = rng.uniform(0.0, 1.0, n)
        sums.append(kq_sum_report(coeffs, u, seq, x, y, cap=config.max_elements))
    passed = partition.passed and all(report.passed for report in sums)
    result = {
        "inequality": Inequality.KQ_PARTITION.value,
        "status": (CheckStatus.PASSED if passed else CheckStatus.FAILED).value,
        "partition": partition.to_dict(),
        "sums": [report.to_dict() for report in sums],
    }
    rows = [{"field": k, **report.inputs, "status": report.status.value} for k, report in enumerate(sums)]
    failed = None
    if not passed:
        failed = {
            "status": "failed",
            "inequality": result["inequality"],
            "failures": {"partition": partition.to_dict(), "sums": [_failure(report) for report in sums]},
        }
    return CommandResult(result, rows, failed)


def run_check(config: RunConfig) -> CommandResult:
    kind = config.command.split()[-1]
    if kind == "reduced-inclusion":
        return _reduced_inclusion(config)
    if kind == "kq-partition":
        return _kq_partition(config)
    return _poly_check(config)


def run_sidon(config: RunConfig) -> CommandResult:
    params = config.params
    J = _parse_index_set(params["index_set"])
    n = max((j.max_entry for j in J), default=1)
    spec = BallSpec(parse_r(params["r"]), max(n, 1))
    estimate = sidon_estimate(J, spec, params["seeds"], config.seed, config.threads)
    return CommandResult(estimate.to_dict(), [{"size": len(J), "value": estimate.value}])


def _block_coefficients(kind: str, seed: int):
    if kind == "ones":
        return lambda j: 1.0
    if kind == "multiplicity":
        return multiplicity

    def sign(j):
        rng = np.random.default_rng([seed, *j])
        return float(rng.choice([-1.0, 1.0]))

    return sign


def run_probe(config: RunConfig) -> CommandResult:
    params = config.params
    kind = config.command.split()[-1]
    if kind == "blocks":
        base = params.get("base") or default_base(params["weights"])
        N_max = params.get("N_max")
        if N_max is None:
            if params.get("x") is None:
                raise ValueError("probe blocks needs --x or --N-max")
            N_max = max(int(math.ceil(math.log(params["x"]) / math.log(base) - 1e-12)) - 1, 0)
        sums = block_partial_sums(
            _block_coefficients(params["coeffs"], config.seed),
            parse_point(params["u"]),
            params["weights"],
            base,
            N_max,
            closure=BlockClosure(params["closure"]),
            degree=params.get("degree"),
            cap=config.max_elements,
        )
        return CommandResult(sums.to_dict(), sums.rows())
    if kind == "bohr-trend":
        probe = bohr_trend(params["ns"], params["r"], m_max=params.get("m_max"))
    else:
        probe = kq_envelope(
            params["weights"],
            params["xs"],
            params["r"],
            y=params.get("y"),
            c=params.get("c"),
            variant=params["variant"],
        )
    return CommandResult(probe.to_dict(), probe.rows)


HANDLERS = {
    "enum": run_enum,
    "census": run_census,
    "decompose": run_decompose,
    "bound": run_bound,
    "check": run_check,
    "sidon": run_sidon,
    "probe": run_probe,
}
