"""Numeric verification of the decomposition norm identities and bounds.

Every claim checked here compares two concretely computed numbers, a
lhs and a rhs, and reports slack against a relative tolerance.  For an
identity the slack is |lhs - rhs| and must stay below tol * scale; for
an inequality the slack is rhs - lhs and may not dip below
-tol * scale.  The scale is max(|lhs|, |rhs|, 1).

The claims:

  prop_reflect        per-step norm drop identity along a chain
  single_root         the one-root identity with the zero-free part
  lemma10_chain       telescoped norm drop across chain prefixes
  theorem1            convex-weight lower bound on the zero-free part
  corollary1          constant-step weights turn theorem1 into equality
  corollary2          first-order Hardy-Sobolev form of theorem1
  theorem2            concave-weight upper-bound counterpart
  theorem3_truncated  concave bounded summable weights, root families
                      accumulating at the boundary, finite sections
  qian_tail_identity  tail energy drop accounted exactly (indicator
                      weights in the chain identity)
  qian_tail_inequality  tail energy of the zero-free part never exceeds
                      the input's
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .decomposition import (
    DecompositionChain,
    RootOptions,
    RootSet,
    blaschke_eval_many,
    decompose,
    find_roots_in_disk,
)
from .errors import (
    BlaschkeConditionViolated,
    DomainError,
    InvalidSpec,
    WeightClassMismatch,
)
from .series import (
    CoefficientSeries,
    as_series,
    deflate,
    divide_conjugate_linear,
    geometric_extension_cap,
    h2_norm_sq,
)
from .signals import boundary_samples, project_coefficients
from .weights import (
    WeightSequence,
    classify,
    dirichlet_norm_sq,
    hardy_sobolev_norm_sq,
    x_norm_sq,
    y_seminorm_sq,
)

CLAIMS = (
    "prop_reflect",
    "single_root",
    "lemma10_chain",
    "theorem1",
    "corollary1",
    "corollary2",
    "theorem2",
    "theorem3_truncated",
    "qian_tail_identity",
    "qian_tail_inequality",
)

DEFAULT_TOLS = {
    "prop_reflect": 1e-10,
    "single_root": 1e-10,
    "lemma10_chain": 1e-9,
    "theorem1": 1e-9,
    "corollary1": 1e-9,
    "corollary2": 1e-9,
    "theorem2": 1e-9,
    "theorem3_truncated": 1e-9,
    "qian_tail_identity": 1e-9,
    "qian_tail_inequality": 1e-9,
}


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one numeric check."""

    claim: str
    kind: str  # "identity" or "inequality"
    lhs: float
    rhs: float
    slack: float
    tol: float
    scale: float
    passed: bool
    context: dict

    def to_json_dict(self) -> dict:
        return {
            "claim": self.claim,
            "kind": self.kind,
            "passed": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tol": self.tol,
            "scale": self.scale,
            "context": self.context,
        }


def _identity_report(claim, lhs, rhs, tol, context) -> VerificationReport:
    scale = max(abs(lhs), abs(rhs), 1.0)
    slack = abs(lhs - rhs)
    return VerificationReport(
        claim, "identity", float(lhs), float(rhs), float(slack), float(tol),
        float(scale), bool(slack <= tol * scale), context,
    )


def _inequality_report(claim, lhs, rhs, tol, context) -> VerificationReport:
    scale = max(abs(lhs), abs(rhs), 1.0)
    slack = rhs - lhs
    return VerificationReport(
        claim, "inequality", float(lhs), float(rhs), float(slack), float(tol),
        float(scale), bool(slack >= -tol * scale), context,
    )


def _tol(claim: str, tol: float | None) -> float:
    return DEFAULT_TOLS[claim] if tol is None else float(tol)


def _base_context(f, w: WeightSequence | None, chain: DecompositionChain) -> dict:
    ctx = {
        "degree": as_series(f).degree_cap,
        "n_roots": len(chain.roots),
        "n_near_boundary": len(chain.roots.near_boundary),
    }
    if w is not None:
        ctx["weight"] = w.describe()
    return ctx


def _reject_near_boundary(chain: DecompositionChain) -> None:
    if chain.roots.near_boundary:
        raise DomainError(
            "input has roots within the boundary margin; the bound needs "
            "every root strictly inside the disk"
        )


def verify_prop_reflect(f, w, opts=None, tol=None) -> VerificationReport:
    """One-step identity x(F_{k+1}) = x(F_k) - (1 - |a|^2) y(H_k),
    checked at every step of the chain; reports the worst step."""
    tol = _tol("prop_reflect", tol)
    f = as_series(f)
    chain = decompose(f, opts)
    worst = None
    for k, (alpha, h) in enumerate(zip(chain.roots, chain.h_list)):
        lhs = x_norm_sq(chain.stages[k + 1], w)
        rhs = x_norm_sq(chain.stages[k], w) - (1.0 - abs(alpha) ** 2) * y_seminorm_sq(h, w)
        gap = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)
        if worst is None or gap > worst[0]:
            worst = (gap, lhs, rhs, k, alpha)
    ctx = _base_context(f, w, chain)
    if worst is None:
        lhs = rhs = x_norm_sq(f, w)
        ctx["note"] = "no interior roots, identity trivial"
    else:
        _, lhs, rhs, k, alpha = worst
        ctx["worst_step"] = k
        ctx["worst_root"] = [alpha.real, alpha.imag]
    return _identity_report("prop_reflect", lhs, rhs, tol, ctx)


def verify_lemma10_chain(f, w, opts=None, tol=None) -> VerificationReport:
    """Telescoped identity x(F_n) = x(F) - sum_{k<=n} (1 - |a_k|^2) y(H_k)
    for every prefix of the chain; reports the worst prefix."""
    tol = _tol("lemma10_chain", tol)
    f = as_series(f)
    chain = decompose(f, opts)
    x0 = x_norm_sq(f, w)
    corrections = chain.correction_terms(w)
    worst = None
    running = 0.0
    for n in range(len(corrections)):
        running += corrections[n]
        lhs = x_norm_sq(chain.stages[n + 1], w)
        rhs = x0 - running
        gap = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)
        if worst is None or gap > worst[0]:
            worst = (gap, lhs, rhs, n)
    ctx = _base_context(f, w, chain)
    if worst is None:
        lhs = rhs = x0
        ctx["note"] = "no interior roots, identity trivial"
    else:
        _, lhs, rhs, n = worst
        ctx["worst_prefix"] = n + 1
    return _identity_report("lemma10_chain", lhs, rhs, tol, ctx)


def verify_single_root(f, w, opts=None, tol=None) -> VerificationReport:
    """Exact identity for a one-root input:
    x(g) = x(f) - (1 - |a|^2) y(g / (1 - conj(a) z))."""
    tol = _tol("single_root", tol)
    f = as_series(f)
    chain = decompose(f, opts)
    if len(chain.roots) != 1:
        raise InvalidSpec(
            f"single-root identity needs exactly one interior root, "
            f"found {len(chain.roots)}"
        )
    alpha = chain.roots.roots[0]
    ext = geometric_extension_cap(len(chain.g), [alpha])
    divided = divide_conjugate_linear(chain.g, alpha, ext)
    lhs = x_norm_sq(chain.g, w)
    rhs = x_norm_sq(f, w) - (1.0 - abs(alpha) ** 2) * y_seminorm_sq(divided, w)
    ctx = _base_context(f, w, chain)
    ctx["root"] = [alpha.real, alpha.imag]
    ctx["extension_cap"] = ext
    return _identity_report("single_root", lhs, rhs, tol, ctx)


def _zero_free_correction(chain: DecompositionChain, w) -> tuple[float, int]:
    """sum_j (1 - |a_j|^2) y(g / (1 - conj(a_j) z)) and the extension cap."""
    ext = geometric_extension_cap(len(chain.g), chain.roots.roots)
    total = 0.0
    for alpha in chain.roots:
        divided = divide_conjugate_linear(chain.g, alpha, ext)
        total += (1.0 - abs(alpha) ** 2) * y_seminorm_sq(divided, w)
    return total, ext


def verify_theorem1(f, w, opts=None, tol=None) -> VerificationReport:
    """Convex-weight bound
    x(g) <= x(f) - sum_j (1 - |a_j|^2) y(g / (1 - conj(a_j) z))."""
    tol = _tol("theorem1", tol)
    f = as_series(f)
    gc = classify(w, horizon=max(64, len(f) + 2))
    if not gc.convex:
        raise WeightClassMismatch("the lower bound needs a convex weight")
    chain = decompose(f, opts)
    _reject_near_boundary(chain)
    correction, ext = _zero_free_correction(chain, w)
    lhs = x_norm_sq(chain.g, w)
    rhs = x_norm_sq(f, w) - correction
    ctx = _base_context(f, w, chain)
    ctx["extension_cap"] = ext
    return _inequality_report("theorem1", lhs, rhs, tol, ctx)


def verify_corollary1(f, w, opts=None, tol=None) -> VerificationReport:
    """Constant-step weights make the theorem1 comparison an identity."""
    tol = _tol("corollary1", tol)
    f = as_series(f)
    gc = classify(w, horizon=max(64, len(f) + 2))
    if not gc.constant_step:
        raise WeightClassMismatch("the equality needs a constant-step weight")
    chain = decompose(f, opts)
    _reject_near_boundary(chain)
    correction, ext = _zero_free_correction(chain, w)
    lhs = x_norm_sq(chain.g, w)
    rhs = x_norm_sq(f, w) - correction
    ctx = _base_context(f, w, chain)
    ctx["extension_cap"] = ext
    return _identity_report("corollary1", lhs, rhs, tol, ctx)


def verify_corollary2(f, opts=None, tol=None) -> VerificationReport:
    """First-order Hardy-Sobolev form of the convex bound:
    ||g||_{1,2}^2 <= ||f||_{1,2}^2 - sum_j (1 - |a_j|^2) *
    (2 ||d_j||_D^2 - ||d_j||_{H2}^2), d_j = g / (1 - conj(a_j) z)."""
    tol = _tol("corollary2", tol)
    f = as_series(f)
    chain = decompose(f, opts)
    _reject_near_boundary(chain)
    ext = geometric_extension_cap(len(chain.g), chain.roots.roots)
    correction = 0.0
    for alpha in chain.roots:
        divided = divide_conjugate_linear(chain.g, alpha, ext)
        term = 2.0 * dirichlet_norm_sq(divided) - h2_norm_sq(divided)
        correction += (1.0 - abs(alpha) ** 2) * term
    lhs = hardy_sobolev_norm_sq(chain.g)
    rhs = hardy_sobolev_norm_sq(f) - correction
    ctx = _base_context(f, None, chain)
    ctx["extension_cap"] = ext
    return _inequality_report("corollary2", lhs, rhs, tol, ctx)


def verify_theorem2(f, w, opts=None, tol=None) -> VerificationReport:
    """Concave-weight counterpart with corrections from plain deflation:
    x(g) <= x(f) - sum_j (1 - |a_j|^2) y(f / (z - a_j)).

    For concave steps the deflation quotient f / (z - a_j) carries no
    more y-energy than the chain quotient H_j, so the right side
    overestimates the exact telescoped value of x(g)."""
    tol = _tol("theorem2", tol)
    f = as_series(f)
    gc = classify(w, horizon=max(64, len(f) + 2))
    if not gc.concave:
        raise WeightClassMismatch("the concave bound needs a concave weight")
    chain = decompose(f, opts)
    _reject_near_boundary(chain)
    correction = 0.0
    for alpha in chain.roots:
        quotient, _ = deflate(f, alpha)
        correction += (1.0 - abs(alpha) ** 2) * y_seminorm_sq(quotient, w)
    lhs = x_norm_sq(chain.g, w)
    rhs = x_norm_sq(f, w) - correction
    ctx = _base_context(f, w, chain)
    return _inequality_report("theorem2", lhs, rhs, tol, ctx)


def verify_qian_tail(f, k: int, opts=None, tol=None):
    """Tail energy comparison at cutoff k.

    Returns a pair of reports: the exact accounting of the tail drop
    (indicator weights pushed through the chain identity) and the plain
    inequality tail(g) <= tail(f).
    """
    if k < 1:
        raise InvalidSpec("tail cutoff k must be at least 1")
    f = as_series(f)
    chain = decompose(f, opts)
    w = WeightSequence.indicator(k)
    tail_f = x_norm_sq(f, w)
    tail_g = x_norm_sq(chain.g, w)
    correction = sum(chain.correction_terms(w))
    ctx = _base_context(f, w, chain)
    ctx["k"] = int(k)
    identity = _identity_report(
        "qian_tail_identity", tail_g, tail_f - correction,
        _tol("qian_tail_identity", tol), ctx,
    )
    inequality = _inequality_report(
        "qian_tail_inequality", tail_g, tail_f,
        _tol("qian_tail_inequality", tol), ctx,
    )
    return identity, inequality


def boundary_accumulating_roots(count: int, exponent: float = 2.0) -> RootSet:
    """Root family a_j = (1 - 1/(j+1)^exponent) e^{ij}, j = 1..count.

    Radii increase to 1 fast enough that sum (1 - |a_j|) converges
    whenever exponent > 1.
    """
    if count < 1:
        raise InvalidSpec("need at least one root")
    roots = [
        (1.0 - 1.0 / (j + 1) ** exponent) * np.exp(1j * j)
        for j in range(1, count + 1)
    ]
    return RootSet.ordered(roots)


def _blaschke_condition_check(roots: RootSet) -> None:
    """Numeric stand-in for sum (1 - |a_j|) < infinity on a finite
    prefix: the log-log decay slope of the increments over the later
    half must fall below -1."""
    gaps = np.array([1.0 - abs(a) for a in roots.roots])
    if np.any(gaps <= 0):
        raise BlaschkeConditionViolated("roots must lie strictly inside the disk")
    n = len(gaps)
    if n < 4:
        return
    start = n // 2
    j = np.arange(1, n + 1, dtype=float)[start:]
    tail = gaps[start:]
    slope = np.polyfit(np.log(j), np.log(tail), 1)[0]
    if slope >= -1.05:
        raise BlaschkeConditionViolated(
            f"increment decay exponent {slope:.3f} is too slow for "
            "sum (1 - |a_j|) to converge"
        )


def verify_theorem3_truncated(
    roots,
    g,
    w,
    caps,
    opts=None,
    tol=None,
    roundtrip_target: float = 1e-10,
) -> list[VerificationReport]:
    """Concave bounded tail-summable weights against root families
    accumulating at the boundary, evaluated on finite sections.

    For each cap K the truncated product F_K = prod_{j<=K} Blaschke
    factor times g is synthesized on a boundary grid, projected back to
    coefficients (refining the projection cap until the round trip is
    faithful), and the concave bound is checked on the section:

        x(g) <= x(f_K) - sum_{j<=K} (1 - |a_j|^2) y(f_K / (z - a_j))

    The per-root corrections are reported as partial sums, which are
    nondecreasing and bounded, witnessing summability as K grows.
    """
    tol = _tol("theorem3_truncated", tol)
    g = as_series(g)
    if g.is_zero():
        raise InvalidSpec("g must be nonzero")
    if not isinstance(roots, RootSet):
        roots = RootSet.ordered(roots)
    caps = [int(k) for k in caps]
    if not caps:
        raise InvalidSpec("need at least one cap")
    if min(caps) < 1 or max(caps) > len(roots.roots):
        raise InvalidSpec(
            f"caps must lie in [1, {len(roots.roots)}], got {caps}"
        )
    gc = classify(w)
    if not (gc.concave and gc.tail_summable):
        raise WeightClassMismatch(
            "the truncated bound needs a concave, bounded, tail-summable weight"
        )
    if find_roots_in_disk(g, opts).roots:
        raise InvalidSpec("g must be zero free inside the disk")
    _blaschke_condition_check(roots)
    x_g = x_norm_sq(g, w)
    reports = []
    for cap_k in caps:
        sub = roots.roots[:cap_k]
        # chain convention: B = prod (z - a)/(1 - conj(a) z); realized
        # through the display form with phase pi * K absorbing (-1)^K
        phase = np.pi * (cap_k % 2)
        proj_cap = max(256, 2 * len(g))
        while True:
            n_samples = 8 * proj_cap * len(g)
            theta = 2.0 * np.pi * np.arange(n_samples) / n_samples
            grid = np.exp(1j * theta)
            b_vals = blaschke_eval_many(sub, phase, 0, grid)
            g_vals = boundary_samples(g, n_samples)
            samples = b_vals * g_vals
            truncated = project_coefficients(samples, proj_cap)
            back = boundary_samples(truncated, n_samples)
            num = float(np.mean(np.abs(back - samples) ** 2))
            den = float(np.mean(np.abs(samples) ** 2))
            roundtrip = (num / den) ** 0.5 if den > 0 else 0.0
            if roundtrip <= roundtrip_target or proj_cap >= 1 << 16:
                break
            proj_cap *= 2
        terms = []
        max_remainder = 0.0
        for alpha in sub:
            quotient, remainder = deflate(truncated, alpha)
            max_remainder = max(max_remainder, abs(remainder))
            terms.append((1.0 - abs(alpha) ** 2) * y_seminorm_sq(quotient, w))
        partial = np.cumsum(terms)
        x_f = x_norm_sq(truncated, w)
        lhs = x_g
        rhs = x_f - float(partial[-1])
        ctx = {
            "cap": cap_k,
            "weight": w.describe(),
            "projection_cap": proj_cap,
            "sample_count": n_samples,
            "roundtrip_error": roundtrip,
            "max_deflation_remainder": max_remainder,
            "x_truncated": x_f,
            "correction_partial_sums": [float(p) for p in partial],
            "corrections_bounded_by_x": bool(partial[-1] <= x_f + tol * max(x_f, 1.0)),
        }
        reports.append(_inequality_report("theorem3_truncated", lhs, rhs, tol, ctx))
    return reports


# ---------------------------------------------------------------------------
# instance generation and sweeps


@dataclass(frozen=True)
class InstanceSpec:
    """Recipe for one reproducible test polynomial.

    root_count roots are planted area-uniformly in the annulus given by
    root_radius; the degree is filled up to degree_cap with factors
    (1 - conj(b) z) whose reciprocal roots lie outside the disk, so the
    planted roots are exactly the interior ones.
    """

    root_count: int
    root_radius: tuple
    degree_cap: int
    weight: WeightSequence | None = None
    seed: int = 0


def _instance_parts(spec: InstanceSpec):
    lo, hi = spec.root_radius
    if not (0.0 <= lo <= hi < 1.0):
        raise InvalidSpec(f"root radius range [{lo}, {hi}] must sit inside [0, 1)")
    if spec.root_count < 0 or spec.degree_cap < spec.root_count:
        raise InvalidSpec("need 0 <= root_count <= degree_cap")
    rng = np.random.default_rng(spec.seed)
    radii = np.sqrt(rng.uniform(lo * lo, hi * hi, size=spec.root_count))
    angles = rng.uniform(0.0, 2.0 * np.pi, size=spec.root_count)
    alphas = radii * np.exp(1j * angles)
    n_outer = spec.degree_cap - spec.root_count
    out_radii = np.sqrt(rng.uniform(0.0, 0.81, size=n_outer))
    out_angles = rng.uniform(0.0, 2.0 * np.pi, size=n_outer)
    betas = out_radii * np.exp(1j * out_angles)
    amp = rng.uniform(0.5, 2.0)
    phase = rng.uniform(0.0, 2.0 * np.pi)
    return alphas, betas, amp * np.exp(1j * phase)


def instance_roots(spec: InstanceSpec) -> tuple:
    """The interior roots generate_instance plants, in generated order."""
    alphas, _, _ = _instance_parts(spec)
    return tuple(complex(a) for a in alphas)


def generate_instance(spec: InstanceSpec) -> CoefficientSeries:
    """Deterministic polynomial with prescribed interior root geometry."""
    alphas, betas, scale_factor = _instance_parts(spec)
    poly = np.array([1.0 + 0j])
    for alpha in alphas:
        poly = np.convolve(poly, [-alpha, 1.0])
    for beta in betas:
        poly = np.convolve(poly, [1.0, -np.conj(beta)])
    return CoefficientSeries(poly * scale_factor)


_DEGREE_CYCLE = (4, 6, 8, 12, 16, 24, 32)

_ALL_FAMILY_PALETTE = (
    {"family": "dirichlet", "params": {}},
    {"family": "sobolev_square", "params": {}},
    {"family": "constant_step", "params": {"c": 2.0}},
    {"family": "constant_step", "params": {"c": 0.5}},
    {"family": "indicator", "params": {"k": 1}},
    {"family": "indicator", "params": {"k": 2}},
    {"family": "indicator", "params": {"k": 3}},
    {"family": "concave_power_sum", "params": {"beta": 2.0}},
    {"family": "concave_power_sum", "params": {"beta": 3.0}},
)
_CONVEX_PALETTE = (
    {"family": "dirichlet", "params": {}},
    {"family": "sobolev_square", "params": {}},
    {"family": "constant_step", "params": {"c": 2.0}},
    {"family": "constant_step", "params": {"c": 0.5}},
)
_CONSTANT_STEP_PALETTE = (
    {"family": "dirichlet", "params": {}},
    {"family": "constant_step", "params": {"c": 2.0}},
    {"family": "constant_step", "params": {"c": 0.5}},
    {"family": "constant_step", "params": {"c": 1.5}},
)
_CONCAVE_PALETTE = (
    {"family": "dirichlet", "params": {}},
    {"family": "constant_step", "params": {"c": 2.0}},
    {"family": "indicator", "params": {"k": 1}},
    {"family": "concave_power_sum", "params": {"beta": 2.0}},
    {"family": "concave_power_sum", "params": {"beta": 3.0}},
)


def default_instance_schedule(
    count: int,
    seed: int,
    degree_cap: int = 32,
    root_radius: tuple = (0.1, 0.9),
) -> list[InstanceSpec]:
    """Deterministic mix of degrees, root counts, and weights."""
    if count < 1:
        raise InvalidSpec("count must be positive")
    master = np.random.default_rng(seed)
    child_seeds = master.integers(0, 2**62, size=count)
    degrees = [d for d in _DEGREE_CYCLE if d <= degree_cap] or [degree_cap]
    specs = []
    for i in range(count):
        degree = degrees[i % len(degrees)]
        roots = 1 + i % min(6, degree - 1)
        weight = _palette_weight(_ALL_FAMILY_PALETTE, i)
        specs.append(
            InstanceSpec(
                root_count=roots,
                root_radius=root_radius,
                degree_cap=degree,
                weight=weight,
                seed=int(child_seeds[i]),
            )
        )
    return specs


def _palette_weight(palette, i: int) -> WeightSequence:
    return WeightSequence.from_descriptor(palette[i % len(palette)])


def run_sweep(
    claims,
    count: int,
    seed: int,
    degree_cap: int = 32,
    tol: float | None = None,
    sink=None,
) -> tuple[bool, list[VerificationReport]]:
    """Run the requested claims over a deterministic instance schedule.

    claims may be "all", a single claim name, or an iterable of names.
    The theorem3_truncated claim is excluded from "all" because it
    consumes an explicit root family rather than a random instance.
    Each report is handed to sink (if given) as it is produced.
    """
    if isinstance(claims, str):
        claim_list = [c for c in CLAIMS if c != "theorem3_truncated"] \
            if claims == "all" else [claims]
    else:
        claim_list = list(claims)
    for claim in claim_list:
        if claim not in CLAIMS:
            raise InvalidSpec(f"unknown claim {claim!r}")
        if claim == "theorem3_truncated":
            raise InvalidSpec(
                "theorem3_truncated takes an explicit root family; use "
                "verify_theorem3_truncated directly"
            )
    schedule = default_instance_schedule(count, seed, degree_cap)
    reports: list[VerificationReport] = []

    instance_index = 0

    def emit(report):
        spec = schedule[instance_index]
        report.context.setdefault("seed", spec.seed)
        report.context.setdefault("instance_index", instance_index)
        reports.append(report)
        if sink is not None:
            sink(report)

    for i, spec in enumerate(schedule):
        instance_index = i
        f = generate_instance(spec)
        qian_done = False
        for claim in claim_list:
            if claim == "prop_reflect":
                emit(verify_prop_reflect(f, _palette_weight(_ALL_FAMILY_PALETTE, i), tol=tol))
            elif claim == "lemma10_chain":
                emit(verify_lemma10_chain(f, _palette_weight(_ALL_FAMILY_PALETTE, i + 1), tol=tol))
            elif claim == "single_root":
                single = generate_instance(dataclasses.replace(spec, root_count=1))
                emit(verify_single_root(single, _palette_weight(_ALL_FAMILY_PALETTE, i + 2), tol=tol))
            elif claim == "theorem1":
                emit(verify_theorem1(f, _palette_weight(_CONVEX_PALETTE, i), tol=tol))
            elif claim == "corollary1":
                emit(verify_corollary1(f, _palette_weight(_CONSTANT_STEP_PALETTE, i), tol=tol))
            elif claim == "corollary2":
                emit(verify_corollary2(f, tol=tol))
            elif claim == "theorem2":
                emit(verify_theorem2(f, _palette_weight(_CONCAVE_PALETTE, i), tol=tol))
            elif claim in ("qian_tail_identity", "qian_tail_inequality"):
                if qian_done:
                    continue
                qian_done = True
                cutoff = 1 + i % max(1, spec.degree_cap)
                identity, inequality = verify_qian_tail(f, cutoff, tol=tol)
                if "qian_tail_identity" in claim_list:
                    emit(identity)
                if "qian_tail_inequality" in claim_list:
                    emit(inequality)
    all_passed = all(r.passed for r in reports)
    return all_passed, reports
