"""Registry of Nordhaus-Gaddum style vertex-cover claims and their evaluator.

Each :class:`Claim` carries closed-form expectations for some subset of the
quantities in :data:`QUANTITIES`.  :func:`evaluate_claim` builds the family
instance, computes the exact values with :mod:`ngverify.invariants` and
compares; :func:`sweep` does this over a parameter grid and returns a
:class:`VerificationReport` whose ordering never depends on evaluation order.

Statement and proof variants of the same result are separate claims (C3a/C3b,
C7a/C7b) so that disagreements between them show up in reports instead of
being resolved silently.
"""

from __future__ import annotations

import csv
import io
import json
import os
from collections.abc import Callable, Iterable, Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from pathlib import Path
from typing import Any

from .families import PARAM_MINIMA, PARAM_NAMES, Family, FamilySpec
from .graph import complement
from .invariants import alpha_exact

__all__ = [
    "QUANTITIES",
    "PASS",
    "FAIL",
    "SKIPPED",
    "Claim",
    "QuantityResult",
    "ClaimOutcome",
    "VerificationReport",
    "UnknownClaimError",
    "REGISTRY",
    "get_claim",
    "list_claims",
    "nordhaus_gaddum",
    "evaluate_claim",
    "sweep",
    "default_ranges",
    "sweep_threads",
    "load_goldens",
    "compare_with_goldens",
    "write_goldens",
    "golden_report",
    "GOLDEN_N_MAX",
    "GOLDEN_M_MAX",
    "MAX_INSTANCE_VERTICES",
]

QUANTITIES = (
    "alpha",
    "alpha_complement",
    "beta",
    "beta_complement",
    "ng_sum",
    "ng_product",
)
PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"
THEOREM, PROOF = "theorem-statement", "proof-derived"

# Sweep points whose instance exceeds this vertex count are SKIPPED.
MAX_INSTANCE_VERTICES = 120
THREADS_ENV = "NG_VERIFY_THREADS"


class UnknownClaimError(KeyError):
    pass


def _div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def _parity(even: Callable[[int], int], odd: Callable[[int], int]):
    return lambda n: even(n) if n % 2 == 0 else odd(n)


@dataclass(frozen=True)
class Formula:
    text: str
    fn: Callable[..., int]

    def __call__(self, *params: int) -> int:
        return self.fn(*params)


@dataclass(frozen=True)
class Claim:
    id: str
    family: Family
    provenance: str
    domain_text: str
    domain: Callable[..., bool]
    formulas: Mapping[str, Formula]
    anchor: str
    canonicalize: Callable[[tuple[int, ...]], tuple[int, ...]] | None = None

    @property
    def param_names(self) -> tuple[str, ...]:
        return PARAM_NAMES[self.family]

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "family": self.family.value,
            "params": list(self.param_names),
            "domain": self.domain_text,
            "provenance": self.provenance,
            "formulas": {q: f.text for q, f in self.formulas.items()},
            "anchor": self.anchor,
        }


def _f(text: str, fn: Callable[..., int]) -> Formula:
    return Formula(text, fn)


def _sorted_pair(params: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(params))


REGISTRY: tuple[Claim, ...] = (
    Claim(
        "C1", Family.COMPLETE, THEOREM, "n >= 3", lambda n: n >= 3,
        {
            "ng_sum": _f("n-1", lambda n: n - 1),
            "ng_product": _f("0", lambda n: 0),
        },
        "beta(K_n)+beta(~K_n) = n-1 and beta(K_n).beta(~K_n) = 0",
    ),
    Claim(
        "C2", Family.COMPLETE_BIPARTITE, THEOREM, "1 <= m <= n (canonicalized)",
        lambda m, n: 1 <= m <= n,
        {
            "beta": _f("m", lambda m, n: m),
            "beta_complement": _f("m+n-2", lambda m, n: m + n - 2),
            "ng_sum": _f("2(m-1)+n", lambda m, n: 2 * (m - 1) + n),
            "ng_product": _f("m(m+n-2)", lambda m, n: m * (m + n - 2)),
        },
        "beta(K_{m,n}).beta(~K_{m,n}) = m(m+n-2)",
        canonicalize=_sorted_pair,
    ),
    Claim(
        "C3a", Family.WHEEL, THEOREM, "n >= 3", lambda n: n >= 3,
        {
            "ng_sum": _f(
                "2n+1 if n even, 2(n+1) if n odd",
                _parity(lambda n: 2 * n + 1, lambda n: 2 * (n + 1)),
            ),
            "ng_product": _f(
                "3n(n+2)/4 if n even, (n+3)(3n+1)/4 if n odd",
                _parity(
                    lambda n: _div(3 * n * (n + 2), 4),
                    lambda n: _div((n + 3) * (3 * n + 1), 4),
                ),
            ),
        },
        "2n+1 if n is even, 2(n+1) if n is odd",
    ),
    Claim(
        "C3b", Family.WHEEL, PROOF, "n >= 3", lambda n: n >= 3,
        {
            "alpha": _f("floor(n/2)", lambda n: n // 2),
            "beta": _f(
                "(n+2)/2 if n even, (n+3)/2 if n odd",
                _parity(lambda n: _div(n + 2, 2), lambda n: _div(n + 3, 2)),
            ),
            "alpha_complement": _f("3", lambda n: 3),
            "beta_complement": _f("n-2", lambda n: n - 2),
            "ng_sum": _f(
                "(3n-2)/2 if n even, (3n-1)/2 if n odd",
                _parity(lambda n: _div(3 * n - 2, 2), lambda n: _div(3 * n - 1, 2)),
            ),
            "ng_product": _f(
                "(n+2)(n-2)/2 if n even, (n+3)(n-2)/2 if n odd",
                _parity(
                    lambda n: _div((n + 2) * (n - 2), 2),
                    lambda n: _div((n + 3) * (n - 2), 2),
                ),
            ),
        },
        "independence number of ~W_{n+1} is 3; beta(~W_{n+1}) = n+1-3 = n-2",
    ),
    Claim(
        "C4", Family.HELM, THEOREM, "n >= 3", lambda n: n >= 3,
        {
            "alpha": _f("n+1", lambda n: n + 1),
            "alpha_complement": _f("3", lambda n: 3),
            "ng_sum": _f("3n-2", lambda n: 3 * n - 2),
            "ng_product": _f("2n(n-1)", lambda n: 2 * n * (n - 1)),
        },
        "beta(H_n)+beta(~H_n) = 3n-2; alpha(~H_n) = 3",
    ),
    Claim(
        "C5", Family.FAN, THEOREM, "n >= 2", lambda n: n >= 2,
        {
            "alpha": _f(
                "n/2 if n even, (n+1)/2 if n odd",
                _parity(lambda n: _div(n, 2), lambda n: _div(n + 1, 2)),
            ),
            "alpha_complement": _f("3", lambda n: 3),
            "ng_sum": _f(
                "(3n-2)/2 if n even, (3n-3)/2 if n odd",
                _parity(lambda n: _div(3 * n - 2, 2), lambda n: _div(3 * n - 3, 2)),
            ),
            "ng_product": _f(
                "(n^2-4)/2 if n even, (n+1)(n-2)/2 if n odd",
                _parity(
                    lambda n: _div(n * n - 4, 2),
                    lambda n: _div((n + 1) * (n - 2), 2),
                ),
            ),
        },
        "(3n-2)/2 if n is even; independence number of ~F_{1,n} is 3",
    ),
    Claim(
        "C6", Family.COMPLETE_SUN, THEOREM, "n >= 3", lambda n: n >= 3,
        {
            "alpha": _f("n", lambda n: n),
            "alpha_complement": _f("n", lambda n: n),
            "ng_sum": _f("2n", lambda n: 2 * n),
            "ng_product": _f("n^2", lambda n: n * n),
        },
        "beta(S_n).beta(~S_n) = n^2",
    ),
    Claim(
        "C7a", Family.SUNLET, THEOREM, "n >= 3", lambda n: n >= 3,
        {
            "ng_sum": _f("n", lambda n: n),
            "ng_product": _f("2(n-1)", lambda n: 2 * (n - 1)),
        },
        "beta(L_n)+beta(~L_n) = n",
    ),
    Claim(
        "C7b", Family.SUNLET, PROOF, "n >= 3", lambda n: n >= 3,
        {
            "alpha": _f("n", lambda n: n),
            "beta": _f("n", lambda n: n),
            "alpha_complement": _f("2", lambda n: 2),
            "beta_complement": _f("2(n-1)", lambda n: 2 * (n - 1)),
            "ng_sum": _f("3n-2", lambda n: 3 * n - 2),
            "ng_product": _f("2n(n-1)", lambda n: 2 * n * (n - 1)),
        },
        "beta(~L_n) = 2n-2 = 2(n-1)",
    ),
    Claim(
        "C8", Family.ARMED_CROWN, THEOREM, "not (m odd and n odd)",
        lambda m, n: not (m % 2 == 1 and n % 2 == 1),
        {
            "alpha": _f("mn/2", lambda m, n: _div(m * n, 2)),
            "alpha_complement": _f("2", lambda m, n: 2),
            "ng_sum": _f("(3mn-4)/2", lambda m, n: _div(3 * m * n - 4, 2)),
            "ng_product": _f("mn(mn-2)/2", lambda m, n: _div(m * n * (m * n - 2), 2)),
        },
        "beta(G)+beta(~G) = (3mn-4)/2; alpha(G) = mn/2 except for m and n odd",
    ),
)

_BY_ID = {c.id: c for c in REGISTRY}


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaimError(
            f"unknown claim {claim_id!r}; known: {', '.join(_BY_ID)}"
        ) from None


def list_claims(
    family: Family | str | None = None, provenance: str | None = None
) -> list[Claim]:
    out = list(REGISTRY)
    if family is not None:
        out = [c for c in out if c.family == Family(family)]
    if provenance is not None:
        out = [c for c in out if c.provenance == provenance]
    return out


def nordhaus_gaddum(g) -> tuple[int, int]:
    """``(beta(g) + beta(~g), beta(g) * beta(~g))``."""
    b = g.n - alpha_exact(g)[0]
    bc = g.n - alpha_exact(complement(g))[0]
    return b + bc, b * bc


# -- outcomes and reports -----------------------------------------------------


@dataclass(frozen=True)
class QuantityResult:
    quantity: str
    expected: int | None
    oracle: int | None
    verdict: str


@dataclass(frozen=True)
class ClaimOutcome:
    claim_id: str
    params: tuple[tuple[str, int], ...]
    verdict: str
    quantities: tuple[QuantityResult, ...]
    oracle: Mapping[str, Any] = field(default_factory=dict)
    note: str = ""

    @property
    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)

    @property
    def sort_key(self) -> tuple:
        return (self.claim_id, tuple(v for _, v in self.params))

    def result(self, quantity: str) -> QuantityResult | None:
        for q in self.quantities:
            if q.quantity == quantity:
                return q
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "params": dict(self.params),
            "verdict": self.verdict,
            "quantities": [
                {
                    "quantity": q.quantity,
                    "expected": q.expected,
                    "oracle": q.oracle,
                    "verdict": q.verdict,
                }
                for q in self.quantities
            ],
            "oracle": dict(self.oracle),
            "note": self.note,
        }


def _oracle_values(graph) -> dict[str, Any]:
    gc = complement(graph)
    a, a_w = alpha_exact(graph)
    ac, ac_w = alpha_exact(gc)
    b, bc = graph.n - a, gc.n - ac
    return {
        "n": graph.n,
        "alpha": a,
        "alpha_complement": ac,
        "beta": b,
        "beta_complement": bc,
        "ng_sum": b + bc,
        "ng_product": b * bc,
        "alpha_witness": a_w,
        "alpha_witness_complement": ac_w,
    }


def _normalize_params(claim: Claim, params) -> tuple[int, ...]:
    names = claim.param_names
    if isinstance(params, Mapping):
        missing = [k for k in names if k not in params]
        extra = [k for k in params if k not in names]
        if missing or extra:
            raise ValueError(
                f"{claim.id} takes parameters {names}, got {sorted(params)}"
            )
        values = tuple(int(params[k]) for k in names)
    elif isinstance(params, int):
        values = (params,)
    else:
        values = tuple(int(p) for p in params)
    if len(values) != len(names):
        raise ValueError(f"{claim.id} takes parameters {names}, got {values}")
    if claim.canonicalize is not None:
        values = claim.canonicalize(values)
    return values


def evaluate_claim(claim_id: str, params) -> ClaimOutcome:
    """Evaluate one claim at one parameter point.

    ``params`` is a mapping (``{"n": 4}``), a sequence in parameter order, or
    a bare int for one-parameter families.  Points outside the claim's
    domain, or too large for the solvers, come back SKIPPED with the oracle
    values still attached when they could be computed.  Points outside the
    family generator's range raise ``ValueError``.
    """
    claim = get_claim(claim_id)
    values = _normalize_params(claim, params)
    spec = FamilySpec(claim.family, values)
    named = tuple(zip(claim.param_names, values))
    graph = spec.build()

    if graph.n > MAX_INSTANCE_VERTICES:
        results = tuple(
            QuantityResult(q, None, None, SKIPPED) for q in claim.formulas
        )
        note = f"instance has {graph.n} vertices, guard is {MAX_INSTANCE_VERTICES}"
        return ClaimOutcome(claim.id, named, SKIPPED, results, {}, note)

    oracle = _oracle_values(graph)
    if not claim.domain(*values):
        results = tuple(
            QuantityResult(q, None, oracle[q], SKIPPED) for q in claim.formulas
        )
        note = f"outside claim domain ({claim.domain_text})"
        return ClaimOutcome(claim.id, named, SKIPPED, results, oracle, note)

    results = []
    for q, formula in claim.formulas.items():
        expected = formula(*values)
        verdict = PASS if expected == oracle[q] else FAIL
        results.append(QuantityResult(q, expected, oracle[q], verdict))
    overall = PASS if all(r.verdict == PASS for r in results) else FAIL
    return ClaimOutcome(claim.id, named, overall, tuple(results), oracle)


def sweep_threads() -> int:
    """Worker count from ``NG_VERIFY_THREADS`` (default 1)."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def _sweep_points(claim: Claim, ranges: Mapping[str, Iterable[int]]) -> list[tuple[int, ...]]:
    names = claim.param_names
    if set(ranges) != set(names):
        raise ValueError(f"{claim.id} sweeps over {names}, got {sorted(ranges)}")
    minima = PARAM_MINIMA[claim.family]
    axes = [sorted({int(v) for v in ranges[k] if int(v) >= low}) for k, low in zip(names, minima)]
    points = set()
    for values in product(*axes):
        if claim.canonicalize is not None:
            values = claim.canonicalize(values)
        points.add(tuple(values))
    return sorted(points)


@dataclass(frozen=True)
class VerificationReport:
    outcomes: tuple[ClaimOutcome, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "outcomes", tuple(sorted(self.outcomes, key=lambda o: o.sort_key))
        )

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.outcomes + other.outcomes)

    def for_claim(self, claim_id: str) -> list[ClaimOutcome]:
        return [o for o in self.outcomes if o.claim_id == claim_id]

    def summary(self) -> dict[str, dict[str, Any]]:
        out: dict[str, dict[str, Any]] = {}
        for o in self.outcomes:
            s = out.setdefault(
                o.claim_id,
                {
                    PASS: 0,
                    FAIL: 0,
                    SKIPPED: 0,
                    "first_failure": None,
                    "smallest_point": o.params_text,
                    "smallest_point_verdict": o.verdict,
                },
            )
            s[o.verdict] += 1
            if o.verdict == FAIL and s["first_failure"] is None:
                s["first_failure"] = o.params_text
        return out

    def verdict_counts(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for o in self.outcomes:
            counts[o.verdict] += 1
        return counts

    # -- serialization

    def to_dict(self) -> dict[str, Any]:
        return {
            "outcomes": [o.to_dict() for o in self.outcomes],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def csv_rows(self) -> list[list[str]]:
        rows = []
        for o in self.outcomes:
            for q in o.quantities:
                rows.append([
                    o.claim_id,
                    o.params_text,
                    q.quantity,
                    "" if q.expected is None else str(q.expected),
                    "" if q.oracle is None else str(q.oracle),
                    q.verdict,
                ])
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(self.csv_rows())
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = [
            "# Verification report",
            "",
            "| claim | PASS | FAIL | SKIPPED | first failure | smallest point |",
            "|---|---|---|---|---|---|",
        ]
        for cid, s in self.summary().items():
            lines.append(
                f"| {cid} | {s[PASS]} | {s[FAIL]} | {s[SKIPPED]} "
                f"| {s['first_failure'] or '-'} "
                f"| {s['smallest_point']} ({s['smallest_point_verdict']}) |"
            )
        lines += [
            "",
            "| claim | params | verdict | quantities (expected / oracle) |",
            "|---|---|---|---|",
        ]
        for o in self.outcomes:
            cells = []
            for q in o.quantities:
                exp = "-" if q.expected is None else q.expected
                orc = "-" if q.oracle is None else q.oracle
                mark = "" if q.verdict == PASS else f" {q.verdict}"
                cells.append(f"{q.quantity} {exp}/{orc}{mark}")
            detail = "; ".join(cells)
            if o.note:
                detail += f" ({o.note})"
            lines.append(f"| {o.claim_id} | {o.params_text} | {o.verdict} | {detail} |")
        return "\n".join(lines) + "\n"


CSV_HEADER = ("claim_id", "params", "quantity", "expected", "oracle", "verdict")


def sweep(
    claim_id: str,
    ranges: Mapping[str, Iterable[int]],
    threads: int | None = None,
) -> VerificationReport:
    """Evaluate ``claim_id`` at every point of the parameter grid ``ranges``.

    Values below the family generator's minimum are dropped; for claims that
    canonicalize their parameters, duplicate points collapse.  Per-point
    failures become SKIPPED outcomes rather than aborting the sweep.
    """
    claim = get_claim(claim_id)
    points = _sweep_points(claim, ranges)
    workers = sweep_threads() if threads is None else threads

    def run(values: tuple[int, ...]) -> ClaimOutcome:
        try:
            return evaluate_claim(claim.id, values)
        except (ValueError, ArithmeticError) as exc:
            named = tuple(zip(claim.param_names, values))
            results = tuple(QuantityResult(q, None, None, SKIPPED) for q in claim.formulas)
            return ClaimOutcome(claim.id, named, SKIPPED, results, {}, str(exc))

    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run, points))
    else:
        outcomes = [run(p) for p in points]
    return VerificationReport(tuple(outcomes))


def default_ranges(claim_id: str, n_max: int, m_max: int) -> dict[str, range]:
    """Sweep grid used by the CLI: ``n`` up to ``n_max``, ``m`` up to ``m_max``."""
    claim = get_claim(claim_id)
    minima = PARAM_MINIMA[claim.family]
    if len(minima) == 1:
        return {"n": range(minima[0], n_max + 1)}
    return {
        "m": range(minima[0], m_max + 1),
        "n": range(minima[1], n_max + 1),
    }


# -- goldens ------------------------------------------------------------------

GOLDEN_N_MAX = 12
GOLDEN_M_MAX = 8
_GOLDEN_M_MAX_BY_CLAIM = {"C8": 5}


def golden_report(claim_id: str, threads: int | None = None) -> VerificationReport:
    ranges = default_ranges(
        claim_id, GOLDEN_N_MAX, _GOLDEN_M_MAX_BY_CLAIM.get(claim_id, GOLDEN_M_MAX)
    )
    return sweep(claim_id, ranges, threads=threads)


def write_goldens(directory: str | Path, threads: int | None = None) -> list[Path]:
    """Regenerate the oracle golden CSV for every claim into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for claim in REGISTRY:
        path = directory / f"{claim.id}.csv"
        path.write_text(golden_report(claim.id, threads).to_csv())
        written.append(path)
    return written


def load_goldens(directory: str | Path | None = None) -> dict[tuple[str, str, str], tuple[str, str, str]]:
    """Map ``(claim_id, params, quantity)`` to ``(expected, oracle, verdict)``."""
    if directory is None:
        files = [
            f for f in resources.files("ngverify").joinpath("goldens").iterdir()
            if f.name.endswith(".csv")
        ]
    else:
        files = sorted(Path(directory).glob("*.csv"))
    table = {}
    for f in files:
        reader = csv.reader(io.StringIO(f.read_text()))
        header = next(reader, None)
        if tuple(header or ()) != CSV_HEADER:
            raise ValueError(f"golden file {f.name} has an unexpected header")
        for claim_id, params, quantity, expected, oracle, verdict in reader:
            table[(claim_id, params, quantity)] = (expected, oracle, verdict)
    return table


def compare_with_goldens(
    report: VerificationReport, goldens: Mapping | None = None
) -> tuple[list[str], list[str]]:
    """Return ``(mismatches, uncovered)`` row descriptions for ``report``."""
    if goldens is None:
        goldens = load_goldens()
    mismatches, uncovered = [], []
    for claim_id, params, quantity, expected, oracle, verdict in report.csv_rows():
        key = (claim_id, params, quantity)
        if key not in goldens:
            uncovered.append(f"{claim_id} {params} {quantity}")
            continue
        got = (expected, oracle, verdict)
        if goldens[key] != got:
            mismatches.append(
                f"{claim_id} {params} {quantity}: golden {goldens[key]} != run {got}"
            )
    return mismatches, uncovered
