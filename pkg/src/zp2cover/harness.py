"""Claim audit suite.

Each audit builds the object a claim is about, computes exact values by brute
force, compares against the claimed value or bounds, and returns a structured
TheoremReport.  Verdicts:

  confirmed        computed equals the claimed value exactly
  within_bounds    claimed (lower, upper) pair contains the computed value
  contradicted     the claim fails; the report carries a replayable
                   counterexample that verify_counterexample() validates
  unsatisfiable    a claimed bound admits no value at all (reported, never
                   guessed around)
  skipped_resource parameters exceed the enumeration caps

Report bodies are deterministic for a given config; wall-clock runtimes live
in a separate envelope section so identical configs yield byte-identical
bodies.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .codes import (
    GeneratorMatrix,
    LinearCode,
    generator_matrix,
    min_distance,
    span,
    weight_distribution,
    word_weight,
)
from .constructions import (
    ConstructionSpec,
    block_repetition_drop_last,
    block_repetition_full,
    block_repetition_mixed,
    cartesian_product,
    stacked_construction,
    unit_repetition,
    zero_divisor_repetition,
)
from .covering import (
    COSET_LEADER,
    EXHAUSTIVE,
    covering_radius_cosets,
    covering_radius_exhaustive,
    covering_radius_gray,
    external_distance_bound,
    min_distance_to,
    sphere_covering_bound,
)
from .errors import ConfigError, InvalidParameterError, ResourceLimitError
from .ring import HAMMING, LEE, RingContext, Word, make_ring

SUITE_VERSION = "1"

THEOREM_IDS = (
    "thm_i",
    "thm_j",
    "thm_k",
    "thm_l",
    "thm_m",
    "thm_wdist",
    "prop_c",
    "prop_d",
    "prop_e",
    "thm_f",
    "thm_g",
    "thm_cb",
)

CONFIRMED = "confirmed"
WITHIN_BOUNDS = "within_bounds"
CONTRADICTED = "contradicted"
UNSATISFIABLE = "unsatisfiable"
SKIPPED = "skipped_resource"


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    parameters: dict
    claimed: object
    computed: object
    verdict: str
    counterexample: dict | None = None
    detail: str | None = None
    runtime_s: float = field(default=0.0, compare=False)

    def body(self) -> dict:
        """Deterministic report body; runtime stays in the suite envelope."""
        return {
            "theorem_id": self.theorem_id,
            "parameters": self.parameters,
            "claimed": self.claimed,
            "computed": self.computed,
            "verdict": self.verdict,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }


def _radius(code: LinearCode, metric: str, method: str, threads: int) -> tuple[int, Word]:
    if method in (EXHAUSTIVE, "exhaustive"):
        res = covering_radius_exhaustive(code, metric, threads=threads)
    elif method in (COSET_LEADER, "cosets"):
        res = covering_radius_cosets(code, metric, threads=threads)
    elif method in ("gray_image", "gray"):
        if metric != LEE:
            raise InvalidParameterError("gray method computes the Lee radius only")
        res = covering_radius_gray(code, threads=threads)
    else:
        raise InvalidParameterError(f"unknown method {method!r}")
    return res.radius, res.witness


def _bounds_verdict(radius: int, lo: int, hi: int, witness: Word) -> tuple[str, dict | None]:
    if lo <= radius <= hi:
        return WITHIN_BOUNDS, None
    ce = {
        "exact_radius": radius,
        "claimed_bounds": [lo, hi],
        "witness": list(witness.entries),
    }
    return CONTRADICTED, ce


def _repetition_audit(kind: str, parameters: dict, threads: int) -> TheoremReport:
    p = int(parameters["p"])
    n = int(parameters["n"])
    method = parameters.get("method", "exhaustive")
    ctx = make_ring(p)
    if kind == "thm_i":
        code = zero_divisor_repetition(ctx, n, int(parameters.get("z", p)))
    else:
        code = unit_repetition(ctx, n, int(parameters.get("u", 1)))
    claimed = (p - 1) * n
    radius, witness = _radius(code, LEE, method, threads)
    if radius == claimed:
        verdict, ce = CONFIRMED, None
    else:
        verdict = CONTRADICTED
        ce = {
            "exact_radius": radius,
            "claimed_radius": claimed,
            "witness": list(witness.entries),
        }
    return TheoremReport(kind, parameters, claimed, radius, verdict, ce)


def _audit_thm_i(parameters: dict, threads: int) -> TheoremReport:
    return _repetition_audit("thm_i", parameters, threads)


def _audit_thm_j(parameters: dict, threads: int) -> TheoremReport:
    return _repetition_audit("thm_j", parameters, threads)


def _audit_thm_k(parameters: dict, threads: int) -> TheoremReport:
    p, n = int(parameters["p"]), int(parameters["n"])
    method = parameters.get("method", "exhaustive")
    ctx = make_ring(p)
    code = block_repetition_full(ctx, n)
    lo, hi = (p**3 - p**2 - 1) * n, (p**3 - p**2) * n
    radius, witness = _radius(code, LEE, method, threads)
    verdict, ce = _bounds_verdict(radius, lo, hi, witness)
    return TheoremReport("thm_k", parameters, [lo, hi], radius, verdict, ce)


def _audit_thm_l(parameters: dict, threads: int) -> TheoremReport:
    p, n = int(parameters["p"]), int(parameters["n"])
    claim = parameters.get("claim", "radius_bounds")
    ctx = make_ring(p)
    code = block_repetition_drop_last(ctx, n)
    if claim == "radius_bounds":
        method = parameters.get("method", "exhaustive")
        lo, hi = (p**3 - p**2 - 2) * n, (p**3 - p**2 - 1) * n
        radius, witness = _radius(code, LEE, method, threads)
        verdict, ce = _bounds_verdict(radius, lo, hi, witness)
        return TheoremReport("thm_l", parameters, [lo, hi], radius, verdict, ce)
    if claim == "code_params":
        q = ctx.q
        claimed = {
            "length": (q - 2) * n,
            "cardinality": q,
            "d_hamming": p * n,
            "d_lee": q * n,
        }
        computed = {
            "length": code.n,
            "cardinality": code.M,
            "d_hamming": min_distance(code, HAMMING),
            "d_lee": min_distance(code, LEE),
        }
        if computed == claimed:
            return TheoremReport("thm_l", parameters, claimed, computed, CONFIRMED)
        ce = None
        for metric, key in ((HAMMING, "d_hamming"), (LEE, "d_lee")):
            if computed[key] != claimed[key]:
                best = min(
                    (w for w in code.codewords if any(w.entries)),
                    key=lambda w: word_weight(w, metric, ctx),
                )
                ce = {
                    "claim": key,
                    "claimed": claimed[key],
                    "computed": computed[key],
                    "codeword": list(best.entries),
                }
                break
        return TheoremReport("thm_l", parameters, claimed, computed, CONTRADICTED, ce)
    raise InvalidParameterError(f"thm_l: unknown claim {claim!r}")


def _audit_thm_m(parameters: dict, threads: int) -> TheoremReport:
    p, m, n = int(parameters["p"]), int(parameters["m"]), int(parameters["n"])
    method = parameters.get("method", "exhaustive")
    ctx = make_ring(p)
    code = block_repetition_mixed(ctx, m, n)
    lo = m + (p**2 - p - 1) * n
    hi = m + (p**2 - p) * n
    radius, witness = _radius(code, LEE, method, threads)
    verdict, ce = _bounds_verdict(radius, lo, hi, witness)
    return TheoremReport("thm_m", parameters, [lo, hi], radius, verdict, ce)


def _audit_thm_wdist(parameters: dict, threads: int) -> TheoremReport:
    p, n = int(parameters["p"]), int(parameters["n"])
    ctx = make_ring(p)
    q = ctx.q
    code = block_repetition_full(ctx, n)
    claimed = {
        "hamming": {0: 1, (q - p) * n: p - 1, (q - 1) * n: q - p},
        "lee": {0: 1, q * (p - 1) * n: q - 1},
    }
    computed = {
        "hamming": weight_distribution(code, HAMMING).counts,
        "lee": weight_distribution(code, LEE).counts,
    }
    if computed == claimed:
        return TheoremReport("thm_wdist", parameters, claimed, computed, CONFIRMED)
    ce = {"claimed": claimed, "computed": computed}
    return TheoremReport("thm_wdist", parameters, claimed, computed, CONTRADICTED, ce)


def _random_matrix(ctx: RingContext, rng: random.Random, n_max: int, k_max: int) -> GeneratorMatrix:
    n = rng.randint(1, n_max)
    k = rng.randint(1, k_max)
    rows = [[rng.randrange(ctx.q) for _ in range(n)] for _ in range(k)]
    return generator_matrix(ctx, rows)


def _audit_prop_c(parameters: dict, threads: int) -> TheoremReport:
    p = int(parameters["p"])
    trials = int(parameters.get("trials", 25))
    seed = int(parameters.get("seed", 0))
    n_max = int(parameters.get("n_max", 4))
    k_max = int(parameters.get("k_max", 2))
    ctx = make_ring(p)
    rng = random.Random(seed)
    agreed = 0
    for _ in range(trials):
        G = _random_matrix(ctx, rng, n_max, k_max)
        code = span(G)
        for metric in (HAMMING, LEE):
            r_ex, _ = _radius(code, metric, "exhaustive", threads)
            r_cl, _ = _radius(code, metric, "cosets", threads)
            if r_ex != r_cl:
                ce = {
                    "rows": [list(r.entries) for r in G.rows],
                    "metric": metric,
                    "exhaustive": r_ex,
                    "coset_leader": r_cl,
                }
                return TheoremReport(
                    "prop_c", parameters, "exhaustive == coset_leader",
                    {"trials": trials, "agreed": agreed}, CONTRADICTED, ce,
                )
        agreed += 1
    return TheoremReport(
        "prop_c", parameters, "exhaustive == coset_leader",
        {"trials": trials, "agreed": agreed}, CONFIRMED,
    )


def _build_code(parameters: dict) -> tuple[LinearCode, ConstructionSpec]:
    spec = ConstructionSpec.from_dict(parameters["code"])
    return spec.build(), spec


def _audit_prop_d(parameters: dict, threads: int) -> TheoremReport:
    code, _ = _build_code(parameters)
    lee = covering_radius_exhaustive(code, LEE, threads=threads)
    gray = covering_radius_gray(code, threads=threads)
    computed = {"lee_radius": lee.radius, "gray_hamming_radius": gray.radius}
    if lee.radius == gray.radius:
        return TheoremReport("prop_d", parameters, "r_L == r_H(gray image)", computed, CONFIRMED)
    ce = {
        "lee_radius": lee.radius,
        "gray_hamming_radius": gray.radius,
        "gray_witness": list(gray.witness.entries),
    }
    return TheoremReport("prop_d", parameters, "r_L == r_H(gray image)", computed, CONTRADICTED, ce)


def _audit_prop_e(parameters: dict, threads: int) -> TheoremReport:
    code, _ = _build_code(parameters)
    ctx = code.ctx
    radius = covering_radius_exhaustive(code, LEE, threads=threads).radius
    paper = sphere_covering_bound(ctx, code.n, code.M, "paper")
    ball = sphere_covering_bound(ctx, code.n, code.M, "exact_ball")
    computed = {
        "exact_radius": radius,
        "paper_bound": paper.value,
        "exact_ball_bound": ball.value,
    }
    claimed = "p^{pn}/M <= sum binom(pn, i) for i <= r_L"
    if not paper.satisfiable:
        return TheoremReport(
            "prop_e", parameters, claimed, computed, UNSATISFIABLE,
            detail="paper-variant sum never reaches p^{pn}/M for any radius",
        )
    ok_paper = paper.value <= radius
    ok_ball = ball.value <= radius
    if ok_paper and ok_ball:
        return TheoremReport("prop_e", parameters, claimed, computed, CONFIRMED)
    ce = {
        "exact_radius": radius,
        "paper_bound": paper.value,
        "exact_ball_bound": ball.value,
        "failing_side": "paper" if not ok_paper else "exact_ball",
    }
    return TheoremReport("prop_e", parameters, claimed, computed, CONTRADICTED, ce)


def _audit_thm_f(parameters: dict, threads: int) -> TheoremReport:
    code, _ = _build_code(parameters)
    radius = covering_radius_exhaustive(code, LEE, threads=threads).radius
    s = external_distance_bound(code).value
    computed = {"exact_radius": radius, "external_distance": s}
    if radius <= s:
        return TheoremReport("thm_f", parameters, "r_L <= s(dual)", computed, CONFIRMED)
    ce = dict(computed)
    return TheoremReport("thm_f", parameters, "r_L <= s(dual)", computed, CONTRADICTED, ce)


def _audit_thm_g(parameters: dict, threads: int) -> TheoremReport:
    trials = int(parameters.get("trials", 10))
    seed = int(parameters.get("seed", 0))
    rng = random.Random(seed)
    held = 0
    for _ in range(trials):
        ctx = make_ring(rng.choice([2, 3]))
        G0 = _random_matrix(ctx, rng, 2, 1)
        G1 = _random_matrix(ctx, rng, 2, 1)
        A = generator_matrix(ctx, [[rng.randrange(ctx.q) for _ in range(G1.n)] for _ in range(G0.k)])
        combined = stacked_construction(G0, G1, A)
        for metric in (HAMMING, LEE):
            r0, _ = _radius(span(G0), metric, "exhaustive", threads)
            r1, _ = _radius(span(G1), metric, "exhaustive", threads)
            rc, _ = _radius(combined, metric, "exhaustive", threads)
            if rc > r0 + r1:
                ce = {
                    "g0": [list(r.entries) for r in G0.rows],
                    "g1": [list(r.entries) for r in G1.rows],
                    "a": [list(r.entries) for r in A.rows],
                    "p": ctx.p,
                    "metric": metric,
                    "combined_radius": rc,
                    "component_radii": [r0, r1],
                }
                return TheoremReport(
                    "thm_g", parameters, "r(C) <= r(C0) + r(C1)",
                    {"trials": trials, "held": held}, CONTRADICTED, ce,
                )
        held += 1
    return TheoremReport(
        "thm_g", parameters, "r(C) <= r(C0) + r(C1)",
        {"trials": trials, "held": held}, CONFIRMED,
    )


def _audit_thm_cb(parameters: dict, threads: int) -> TheoremReport:
    trials = int(parameters.get("trials", 10))
    seed = int(parameters.get("seed", 0))
    rng = random.Random(seed)
    held = 0
    for _ in range(trials):
        ctx = make_ring(rng.choice([2, 3]))
        G1 = _random_matrix(ctx, rng, 2, 2)
        G2 = _random_matrix(ctx, rng, 2, 2)
        C1, C2 = span(G1), span(G2)
        product = cartesian_product(C1, C2)
        for metric in (HAMMING, LEE):
            r1, _ = _radius(C1, metric, "exhaustive", threads)
            r2, _ = _radius(C2, metric, "exhaustive", threads)
            rp, _ = _radius(product, metric, "exhaustive", threads)
            if rp != r1 + r2:
                ce = {
                    "g1": [list(r.entries) for r in G1.rows],
                    "g2": [list(r.entries) for r in G2.rows],
                    "p": ctx.p,
                    "metric": metric,
                    "product_radius": rp,
                    "component_radii": [r1, r2],
                }
                return TheoremReport(
                    "thm_cb", parameters, "r(C1 x C2) == r(C1) + r(C2)",
                    {"trials": trials, "held": held}, CONTRADICTED, ce,
                )
        held += 1
    return TheoremReport(
        "thm_cb", parameters, "r(C1 x C2) == r(C1) + r(C2)",
        {"trials": trials, "held": held}, CONFIRMED,
    )


_AUDITS: dict[str, Callable[[dict, int], TheoremReport]] = {
    "thm_i": _audit_thm_i,
    "thm_j": _audit_thm_j,
    "thm_k": _audit_thm_k,
    "thm_l": _audit_thm_l,
    "thm_m": _audit_thm_m,
    "thm_wdist": _audit_thm_wdist,
    "prop_c": _audit_prop_c,
    "prop_d": _audit_prop_d,
    "prop_e": _audit_prop_e,
    "thm_f": _audit_thm_f,
    "thm_g": _audit_thm_g,
    "thm_cb": _audit_thm_cb,
}


def audit(theorem_id: str, parameters: dict, *, threads: int = 1) -> TheoremReport:
    """Run one audit; resource-cap overruns become skipped_resource verdicts."""
    if theorem_id not in _AUDITS:
        raise InvalidParameterError(
            f"unknown theorem id {theorem_id!r}; expected one of {THEOREM_IDS}"
        )
    start = time.perf_counter()
    try:
        report = _AUDITS[theorem_id](parameters, threads)
    except ResourceLimitError as exc:
        report = TheoremReport(
            theorem_id, parameters, None, None, SKIPPED, detail=str(exc)
        )
    elapsed = time.perf_counter() - start
    return TheoremReport(
        report.theorem_id,
        report.parameters,
        report.claimed,
        report.computed,
        report.verdict,
        report.counterexample,
        report.detail,
        runtime_s=elapsed,
    )


def verify_counterexample(report: TheoremReport, *, threads: int = 1) -> bool:
    """Replay a contradicted report's evidence from its stored parameters."""
    if report.verdict != CONTRADICTED or report.counterexample is None:
        raise InvalidParameterError("report carries no counterexample to verify")
    ce = report.counterexample
    params = report.parameters
    tid = report.theorem_id
    if tid in ("thm_i", "thm_j"):
        ctx = make_ring(int(params["p"]))
        n = int(params["n"])
        code = (
            zero_divisor_repetition(ctx, n, int(params.get("z", ctx.p)))
            if tid == "thm_i"
            else unit_repetition(ctx, n, int(params.get("u", 1)))
        )
        w = Word(ctx.q, tuple(ce["witness"]))
        if min_distance_to(code, w, LEE) > ce["exact_radius"]:
            return False
        fresh = covering_radius_exhaustive(code, LEE, threads=threads).radius
        return fresh == ce["exact_radius"] and fresh != ce["claimed_radius"]
    if tid in ("thm_k", "thm_m") or (tid == "thm_l" and "claimed_bounds" in ce):
        ctx = make_ring(int(params["p"]))
        n = int(params["n"])
        if tid == "thm_k":
            code = block_repetition_full(ctx, n)
        elif tid == "thm_l":
            code = block_repetition_drop_last(ctx, n)
        else:
            code = block_repetition_mixed(ctx, int(params["m"]), n)
        lo, hi = ce["claimed_bounds"]
        fresh = covering_radius_exhaustive(code, LEE, threads=threads).radius
        return fresh == ce["exact_radius"] and not (lo <= fresh <= hi)
    if tid == "thm_l":
        ctx = make_ring(int(params["p"]))
        code = block_repetition_drop_last(ctx, int(params["n"]))
        w = Word(ctx.q, tuple(ce["codeword"]))
        metric = HAMMING if ce["claim"] == "d_hamming" else LEE
        weight = word_weight(w, metric, ctx)
        return code.contains(w) and weight == ce["computed"] and weight != ce["claimed"]
    if tid == "thm_wdist":
        ctx = make_ring(int(params["p"]))
        code = block_repetition_full(ctx, int(params["n"]))
        fresh = {
            "hamming": weight_distribution(code, HAMMING).counts,
            "lee": weight_distribution(code, LEE).counts,
        }
        return fresh == ce["computed"] and fresh != ce["claimed"]
    if tid == "prop_c":
        ctx = make_ring(int(params["p"]))
        G = generator_matrix(ctx, ce["rows"])
        code = span(G)
        r_ex = covering_radius_exhaustive(code, ce["metric"], threads=threads).radius
        r_cl = covering_radius_cosets(code, ce["metric"], threads=threads).radius
        return (r_ex, r_cl) == (ce["exhaustive"], ce["coset_leader"]) and r_ex != r_cl
    if tid == "prop_d":
        code, _ = _build_code(params)
        lee = covering_radius_exhaustive(code, LEE, threads=threads).radius
        if lee != ce["lee_radius"]:
            return False
        from .ring import gray_word

        images = [gray_word(w, code.ctx) for w in code.codewords]
        witness = Word(code.ctx.p, tuple(ce["gray_witness"]))
        attained = min_distance_to(images, witness, HAMMING)
        return attained == ce["gray_hamming_radius"] and attained != lee
    if tid == "prop_e":
        code, _ = _build_code(params)
        radius = covering_radius_exhaustive(code, LEE, threads=threads).radius
        paper = sphere_covering_bound(code.ctx, code.n, code.M, "paper")
        ball = sphere_covering_bound(code.ctx, code.n, code.M, "exact_ball")
        if radius != ce["exact_radius"]:
            return False
        if ce["failing_side"] == "paper":
            return paper.satisfiable and paper.value > radius
        return ball.value > radius
    if tid == "thm_f":
        code, _ = _build_code(params)
        radius = covering_radius_exhaustive(code, LEE, threads=threads).radius
        s = external_distance_bound(code).value
        return radius == ce["exact_radius"] and s == ce["external_distance"] and radius > s
    if tid == "thm_g":
        ctx = make_ring(int(ce["p"]))
        G0 = generator_matrix(ctx, ce["g0"])
        G1 = generator_matrix(ctx, ce["g1"])
        A = generator_matrix(ctx, ce["a"])
        combined = stacked_construction(G0, G1, A)
        metric = ce["metric"]
        r0 = covering_radius_exhaustive(span(G0), metric, threads=threads).radius
        r1 = covering_radius_exhaustive(span(G1), metric, threads=threads).radius
        rc = covering_radius_exhaustive(combined, metric, threads=threads).radius
        return rc == ce["combined_radius"] and rc > r0 + r1
    if tid == "thm_cb":
        ctx = make_ring(int(ce["p"]))
        C1 = span(generator_matrix(ctx, ce["g1"]))
        C2 = span(generator_matrix(ctx, ce["g2"]))
        metric = ce["metric"]
        r1 = covering_radius_exhaustive(C1, metric, threads=threads).radius
        r2 = covering_radius_exhaustive(C2, metric, threads=threads).radius
        rp = covering_radius_exhaustive(cartesian_product(C1, C2), metric, threads=threads).radius
        return rp == ce["product_radius"] and rp != r1 + r2
    raise InvalidParameterError(f"no re-checker for theorem id {tid!r}")


# Fixture codes shared by the code-based audits and the acceptance suite.


def default_fixture_specs() -> list[ConstructionSpec]:
    specs: list[ConstructionSpec] = []
    for n in (1, 2, 3, 4):
        specs.append(ConstructionSpec("zero_div_rep", {"p": 2, "n": n, "z": 2}))
        specs.append(ConstructionSpec("unit_rep", {"p": 2, "n": n, "u": 1}))
    specs.append(ConstructionSpec("unit_rep", {"p": 2, "n": 2, "u": 3}))
    for n in (1, 2):
        specs.append(ConstructionSpec("zero_div_rep", {"p": 3, "n": n, "z": 3}))
        specs.append(ConstructionSpec("unit_rep", {"p": 3, "n": n, "u": 1}))
    specs.append(ConstructionSpec("zero_div_rep", {"p": 3, "n": 1, "z": 6}))
    for n in (1, 2):
        specs.append(ConstructionSpec("br_full", {"p": 2, "n": n}))
        specs.append(ConstructionSpec("br_drop_last", {"p": 2, "n": n}))
    specs.append(ConstructionSpec("br_mixed", {"p": 2, "m": 1, "n": 1}))
    specs.append(ConstructionSpec("br_mixed", {"p": 2, "m": 2, "n": 1}))
    specs.append(
        ConstructionSpec(
            "cartesian",
            {
                "components": [
                    {"family": "zero_div_rep", "parameters": {"p": 2, "n": 1, "z": 2}},
                    {"family": "zero_div_rep", "parameters": {"p": 2, "n": 1, "z": 2}},
                ]
            },
        )
    )
    specs.append(
        ConstructionSpec("stacked", {"p": 2, "g0": [[3]], "g1": [[2]], "a": [[1]]})
    )
    return specs


def gray_fixture_specs(ambient_limit: int = 1 << 20) -> list[ConstructionSpec]:
    """Fixture codes whose Gray-image search space p^(p*n) stays under the limit."""
    keep = []
    for spec in default_fixture_specs():
        code = spec.build()
        p = code.ctx.p
        if p ** (p * code.n) <= ambient_limit:
            keep.append(spec)
    return keep


def default_config() -> dict:
    """The stock audit grid; completes in minutes on commodity hardware."""
    audits: list[dict] = []
    for p, n_top in ((2, 5), (3, 3)):
        for n in range(1, n_top + 1):
            audits.append({"id": "thm_i", "params": {"p": p, "n": n}})
    for p, n_top in ((2, 5), (3, 3)):
        for n in range(1, n_top + 1):
            audits.append({"id": "thm_j", "params": {"p": p, "n": n}})
    for n in (1, 2):
        audits.append({"id": "thm_k", "params": {"p": 2, "n": n, "method": "exhaustive"}})
    audits.append({"id": "thm_k", "params": {"p": 3, "n": 1, "method": "cosets"}})
    for n in (1, 2, 3):
        audits.append({"id": "thm_l", "params": {"p": 2, "n": n}})
    audits.append({"id": "thm_l", "params": {"p": 3, "n": 1}})
    audits.append({"id": "thm_l", "params": {"p": 2, "n": 1, "claim": "code_params"}})
    audits.append({"id": "thm_l", "params": {"p": 3, "n": 1, "claim": "code_params"}})
    for m in (1, 2):
        for n in (1, 2):
            audits.append({"id": "thm_m", "params": {"p": 2, "m": m, "n": n}})
    for p in (2, 3):
        for n in (1, 2):
            audits.append({"id": "thm_wdist", "params": {"p": p, "n": n}})
    audits.append({"id": "prop_c", "params": {"p": 2, "trials": 25, "seed": 101}})
    audits.append({"id": "prop_c", "params": {"p": 3, "trials": 25, "seed": 102}})
    for spec in gray_fixture_specs():
        audits.append({"id": "prop_d", "params": {"code": spec.to_dict()}})
    for spec in default_fixture_specs():
        audits.append({"id": "prop_e", "params": {"code": spec.to_dict()}})
        audits.append({"id": "thm_f", "params": {"code": spec.to_dict()}})
    audits.append({"id": "thm_g", "params": {"trials": 10, "seed": 103}})
    audits.append({"id": "thm_cb", "params": {"trials": 10, "seed": 104}})
    return {"version": 1, "audits": audits}


def validate_config(config: dict) -> dict:
    if not isinstance(config, dict):
        raise ConfigError("config must be a JSON object")
    if config.get("version") != 1:
        raise ConfigError(f"config.version must be 1, got {config.get('version')!r}")
    audits = config.get("audits")
    if not isinstance(audits, list):
        raise ConfigError("config.audits must be a list")
    for i, entry in enumerate(audits):
        if not isinstance(entry, dict):
            raise ConfigError(f"audits[{i}] must be an object")
        tid = entry.get("id")
        if tid not in THEOREM_IDS:
            raise ConfigError(f"audits[{i}].id: unknown theorem id {tid!r}")
        params = entry.get("params", {})
        if not isinstance(params, dict):
            raise ConfigError(f"audits[{i}].params must be an object")
    return config


def load_config(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    return validate_config(data)


def config_hash(config: dict) -> str:
    canon = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


@dataclass
class SuiteResult:
    config: dict
    reports: list[TheoremReport]

    @property
    def totals(self) -> dict:
        counts = {v: 0 for v in (CONFIRMED, WITHIN_BOUNDS, CONTRADICTED, UNSATISFIABLE, SKIPPED)}
        for r in self.reports:
            counts[r.verdict] += 1
        return counts

    @property
    def any_contradicted(self) -> bool:
        return any(r.verdict == CONTRADICTED for r in self.reports)


def run_suite(config: dict, *, threads: int = 1) -> SuiteResult:
    """Run all configured audits in declared order."""
    validate_config(config)
    reports = [audit(entry["id"], dict(entry.get("params", {})), threads=threads)
               for entry in config["audits"]]
    return SuiteResult(config=config, reports=reports)


def suite_json_doc(result: SuiteResult, *, generated_at: str | None = None) -> dict:
    """Envelope (version, hash, totals, runtimes) plus deterministic bodies."""
    if generated_at is None:
        generated_at = time.strftime("%Y-%m-%dT%H:%M:%S%z")
    return {
        "suite": {
            "version": SUITE_VERSION,
            "config_hash": config_hash(result.config),
            "totals": result.totals,
            "generated_at": generated_at,
            "runtimes": [
                {"index": i, "theorem_id": r.theorem_id, "seconds": round(r.runtime_s, 3)}
                for i, r in enumerate(result.reports)
            ],
        },
        "reports": [r.body() for r in result.reports],
    }
