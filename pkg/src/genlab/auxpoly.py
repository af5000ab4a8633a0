"""Auxiliary-polynomial pipeline at desk scale.

Four layers, bottom to top:

  * proof-rate schedules: given a height D and shape parameters (k, mu, nu),
    the derived degree L, exponent range R, monomial count M, height budget
    Delta and the Siegel quality target U, with the feasibility inequality
    checked in exact integers;
  * monomial pullbacks m_r^* and certified evaluation of exponential sums
    at a (theta, kappa) pair, by analytic factorization or by expansion;
  * a Siegel-style coefficient search: integer coefficients making an
    exponential polynomial small on a disc, found by lattice reduction on
    scaled Taylor columns and certified a posteriori on a grid with a
    Lipschitz slack plus an independent Taylor-tail bound;
  * two audits: the pigeonhole distance audit (count check, zero estimate,
    coset collision, contradiction bound) and the hypothesis checklist for
    the effective-distance proposition, which checks hypotheses only and
    never asserts the conclusion.

Everything reported as certified here is backed by interval arithmetic or
exact integer/rational computation; the single exception is the optimizer
leg of the hypothesis checklist, which is labelled empirical in its output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .chars import ZeroEstimateResult, zero_estimate_search
from .cyclo import (
    CycloNum,
    char_value,
    make_point,
    min_vanishing_degree,
    monomials_up_to,
    normalize_point_set,
    point_mul,
)
from .dioph import NEG_PAIR, log_expm1_abs
from .errors import BudgetExceeded, HypothesisNotMet, InvalidConfig
from .expr import eval_interval, exact_rational, parse_expression, to_string
from .numeric import (
    ComplexIV,
    NeedsBits,
    complex_exp,
    iv_from_fraction,
    log_abs_interval,
    make_ctx,
    run_escalating,
    straddles_zero,
    to_float_pair,
)
from .reduction import lll_reduce
from .tuples import RealTuple

DESK_OMEGA_POINTS = 200
DESK_OMEGA_DEGREE = 4


# ---------------------------------------------------------------------------
# schedules


def nth_root_floor(x: int, n: int) -> int:
    """Exact floor of x**(1/n) for nonnegative integer x."""
    if n < 1:
        raise InvalidConfig("root order must be >= 1")
    if x < 0:
        raise InvalidConfig("radicand must be nonnegative")
    if n == 1 or x < 2:
        return x
    r = 1 << -(-x.bit_length() // n)
    while True:
        nr = ((n - 1) * r + x // r ** (n - 1)) // n
        if nr >= r:
            break
        r = nr
    while r**n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def _root_lower_float(value: int, n: int, bits: int = 128) -> float:
    # lower endpoint of an interval enclosure of value**(1/n)
    if value == 0:
        return 0.0
    ctx = make_ctx(bits)
    iv = ctx.exp(ctx.log(ctx.mpf(value)) / n)
    return to_float_pair(iv)[0]


@dataclass(frozen=True)
class AuxSchedule:
    """Derived parameters of one auxiliary construction at height D.

    U is stored as a certified lower rounding of (M*Delta)^(1/(k+1))/8, so
    (8*U)**(k+1) <= M*Delta holds in float arithmetic.  `feasible` is the
    exact integer test 8^(k+1) * Delta^k <= M, equivalent to Delta <= U.
    """

    D: int
    k: int
    mu: int
    nu: int
    L: int
    R: int
    M: int
    M_low: int
    delta: int
    U: float
    feasible: bool
    L_overridden: bool

    def siegel_inequality_holds(self) -> bool:
        return (8.0 * self.U) ** (self.k + 1) <= float(self.M * self.delta)


def make_schedule(
    D: int, k: int, mu: int, nu: int, *, L_override: int | None = None
) -> AuxSchedule:
    """Schedule at height D: L = floor(D^(nu/(mu+nu))),
    R = floor((2*mu+1) * D^(mu/(mu+nu))), M = C(L + mu*k, mu*k), Delta = D,
    U = (M*Delta)^(1/(k+1)) / 8.

    M counts all monomials of total degree <= L in mu*k variables; the
    coarser count C(L + mu*k - 1, mu*k) is reported alongside as M_low.
    """
    if D < 1:
        raise InvalidConfig("height D must be >= 1")
    if k < 1 or mu < 1 or nu < 1:
        raise InvalidConfig("shape parameters k, mu, nu must be >= 1")
    L = nth_root_floor(D**nu, mu + nu)
    overridden = False
    if L_override is not None:
        if L_override < 1:
            raise InvalidConfig("L_override must be >= 1")
        overridden = L_override != L
        L = L_override
    R = nth_root_floor((2 * mu + 1) ** (mu + nu) * D**mu, mu + nu)
    nvars = mu * k
    M = math.comb(L + nvars, nvars)
    M_low = math.comb(L + nvars - 1, nvars)
    delta = D
    U = _root_lower_float(M * delta, k + 1) / 8.0
    feasible = 8 ** (k + 1) * delta**k <= M
    return AuxSchedule(D, k, mu, nu, L, R, M, M_low, delta, U, feasible, overridden)


def monomial_set(mu: int, k: int, L: int) -> tuple[tuple[int, ...], ...]:
    """All multidegrees of total degree <= L in mu*k variables, lex sorted.

    Variable layout is lambda-major: index lambda*k + a.
    """
    if mu < 1 or k < 1 or L < 0:
        raise InvalidConfig("mu, k must be >= 1 and L >= 0")
    return tuple(sorted(monomials_up_to(mu * k, L)))


# ---------------------------------------------------------------------------
# pullbacks and evaluation

Poly = Mapping[Sequence[int], int]


def _as_poly(poly: Poly, nvars: int) -> dict[tuple[int, ...], int]:
    if not poly:
        raise InvalidConfig("empty polynomial")
    out: dict[tuple[int, ...], int] = {}
    for mono, coeff in poly.items():
        mono = tuple(int(e) for e in mono)
        if len(mono) != nvars:
            raise InvalidConfig(f"monomial {mono} has wrong arity (expected {nvars})")
        if coeff:
            out[mono] = out.get(mono, 0) + int(coeff)
    return out


def _normalize_r(r: Sequence, k: int) -> tuple[tuple[int, ...], ...]:
    rows = []
    for row in r:
        if isinstance(row, (int,)):
            row = (row,)
        row = tuple(int(v) for v in row)
        if len(row) != k:
            raise InvalidConfig(f"exponent row {row} has wrong arity (expected {k})")
        if any(v < 0 for v in row):
            raise InvalidConfig("exponent rows must be nonnegative")
        rows.append(row)
    if not rows:
        raise InvalidConfig("empty exponent matrix")
    return tuple(rows)


@dataclass(frozen=True)
class PullbackResult:
    """Image of a polynomial under the monomial substitution m_r.

    Variables of the image are (lambda, rho) pairs, lambda-major.  The degree
    bound max_a(sum_rho r[rho][a]) * deg(f) and the pre-collision height
    equality are checked during construction; `collisions` counts distinct
    source monomials that landed on an already-occupied image exponent.
    """

    poly: dict[tuple[int, ...], int]
    mu: int
    nu: int
    degree: int
    degree_bound: int
    height: int
    source_height: int
    collisions: int


def pullback_mr(f: Poly, r: Sequence, mu: int, k: int, nu: int) -> PullbackResult:
    """Substitute x_{lambda,a} <- prod_rho z_{lambda,rho}^{r[rho][a]}.

    The image exponent of z_{lambda,rho} in the image of multidegree d is
    sum_a d[lambda*k+a] * r[rho][a].
    """
    src = _as_poly(f, mu * k)
    rows = _normalize_r(r, k)
    if len(rows) != nu:
        raise InvalidConfig(f"expected {nu} exponent rows, got {len(rows)}")
    col_sums = [sum(rows[rho][a] for rho in range(nu)) for a in range(k)]
    stretch = max(col_sums) if col_sums else 0
    src_deg = max(sum(d) for d in src) if src else 0
    out: dict[tuple[int, ...], int] = {}
    collisions = 0
    for d, coeff in src.items():
        image = []
        for lam in range(mu):
            for rho in range(nu):
                image.append(
                    sum(d[lam * k + a] * rows[rho][a] for a in range(k))
                )
        key = tuple(image)
        if sum(key) > stretch * sum(d):
            raise AssertionError("pullback degree bound violated")
        if key in out:
            collisions += 1
            out[key] = out[key] + coeff
            if out[key] == 0:
                del out[key]
        else:
            out[key] = coeff
    src_height = max(abs(c) for c in src.values()) if src else 0
    height = max((abs(c) for c in out.values()), default=0)
    degree = max((sum(e) for e in out), default=0)
    bound = stretch * src_deg
    if degree > bound:
        raise AssertionError("pullback degree bound violated")
    if collisions == 0 and height != src_height:
        raise AssertionError("collision-free pullback must preserve the height")
    return PullbackResult(out, mu, nu, degree, bound, height, src_height, collisions)


@dataclass(frozen=True)
class ExpEvalResult:
    """Certified log|value| of an exponential sum, with the route taken."""

    log_value: tuple[float, float]
    route: str
    precision_bits: int
    pullback_terms: int


def _subset_nodes(tup: RealTuple, subset: Sequence[int] | None, size: int):
    if subset is None:
        subset = tuple(range(size))
    subset = tuple(int(i) for i in subset)
    if len(subset) != size:
        raise InvalidConfig(f"index subset must have {size} entries")
    if any(i < 0 or i >= len(tup) for i in subset):
        raise InvalidConfig("index subset out of range")
    return [parse_expression(tup.expressions[i]) for i in subset]


def evaluate_at_theta_kappa(
    f: Poly,
    r: Sequence,
    theta: RealTuple,
    kappa: RealTuple,
    *,
    mu: int,
    k: int,
    nu: int,
    I: Sequence[int] | None = None,
    J: Sequence[int] | None = None,
    route: str = "auto",
    precision_bits: int = 128,
) -> ExpEvalResult:
    """log|sum_d h_d exp(sum_{lambda,a} d_{lambda,a} theta_I[lambda] w_a)|
    with w_a = sum_rho r[rho][a] kappa_J[rho].

    Routes: "factorized" evaluates through the w_a directly; "expanded"
    first pushes f through the pullback so exact integer cancellation of
    colliding exponents is visible; "auto" uses the pullback to detect an
    identically-zero image and otherwise evaluates by factorization.
    Returns the (-inf, -inf) sentinel for an exact zero.
    """
    if route not in ("auto", "factorized", "expanded"):
        raise InvalidConfig(f"unknown route {route!r}")
    if theta.is_complex or kappa.is_complex:
        raise InvalidConfig("evaluation expects real tuples")
    theta_nodes = _subset_nodes(theta, I, mu)
    kappa_nodes = _subset_nodes(kappa, J, nu)
    src = _as_poly(f, mu * k)
    rows = _normalize_r(r, k)
    if len(rows) != nu:
        raise InvalidConfig(f"expected {nu} exponent rows, got {len(rows)}")
    pb = pullback_mr(src, rows, mu, k, nu)
    if not pb.poly:
        return ExpEvalResult(NEG_PAIR, "expanded", precision_bits, 0)

    def eval_expanded(bits: int) -> tuple[float, float]:
        ctx = make_ctx(bits)
        th = [eval_interval(ctx, n) for n in theta_nodes]
        ka = [eval_interval(ctx, n) for n in kappa_nodes]
        total = ctx.mpf(0)
        for e, coeff in sorted(pb.poly.items()):
            s = ctx.mpf(0)
            for lam in range(mu):
                for rho in range(nu):
                    exp_int = e[lam * nu + rho]
                    if exp_int:
                        s += exp_int * th[lam] * ka[rho]
            total += coeff * ctx.exp(s)
        out = log_abs_interval(ctx, total)
        if out is None:
            return NEG_PAIR
        pair = to_float_pair(out)
        if pair[1] - pair[0] > 2.0**-20:
            raise NeedsBits(bits * 2)
        return pair

    def eval_factorized(bits: int) -> tuple[float, float]:
        ctx = make_ctx(bits)
        th = [eval_interval(ctx, n) for n in theta_nodes]
        ka = [eval_interval(ctx, n) for n in kappa_nodes]
        w = []
        for a in range(k):
            coeffs = [rows[rho][a] for rho in range(nu)]
            if not any(coeffs):
                w.append(ctx.mpf(0))
            else:
                w.append(sum(c * ka[rho] for rho, c in enumerate(coeffs) if c))
        total = ctx.mpf(0)
        for d, coeff in sorted(src.items()):
            s = ctx.mpf(0)
            for lam in range(mu):
                for a in range(k):
                    if d[lam * k + a]:
                        s += d[lam * k + a] * th[lam] * w[a]
            total += coeff * ctx.exp(s)
        out = log_abs_interval(ctx, total)
        if out is None:
            return NEG_PAIR
        pair = to_float_pair(out)
        if pair[1] - pair[0] > 2.0**-20:
            raise NeedsBits(bits * 2)
        return pair

    if route == "expanded":
        pair = run_escalating(eval_expanded, precision_bits)
        return ExpEvalResult(pair, "expanded", precision_bits, len(pb.poly))
    pair = run_escalating(eval_factorized, precision_bits)
    return ExpEvalResult(pair, "factorized", precision_bits, len(pb.poly))


# ---------------------------------------------------------------------------
# Siegel-style construction


@dataclass(frozen=True)
class GridSpec:
    """Verification grid: rings * angles points on the closed disc."""

    rings: int = 10
    angles: int = 100

    def __post_init__(self):
        if self.rings < 1 or self.angles < 8:
            raise InvalidConfig("grid needs rings >= 1 and angles >= 8")


@dataclass(frozen=True)
class AuxPolynomial:
    """Outcome of one coefficient search.

    achieved_log_sup = log(grid_sup + lipschitz_slack) certifies
    sup_{|w|<=radius} |phi(w)| <= exp(achieved_log_sup); taylor_log_sup is
    the independent series bound on the same sup.  u_achieved is
    -achieved_log_sup.  norm_hypothesis_ok records whether
    sum_d sup_{|w|<=e*radius} |phi_d(w)| <= exp(u_target).
    """

    alphas: tuple[str, ...]
    coefficients: tuple[int, ...]
    monomials: tuple[tuple[int, ...], ...] | None
    u_target: float
    delta: float
    radius: Fraction
    log_height: float
    grid_sup: float
    lipschitz_slack: float
    taylor_log_sup: float
    achieved_log_sup: float
    u_achieved: float
    height_ok: bool
    norm_hypothesis_ok: bool
    best_effort: bool
    identically_zero: bool
    precision_bits: int


def alphas_from_monomials(
    theta: RealTuple, subset: Sequence[int], L: int
) -> tuple[tuple[str, ...], tuple[tuple[int, ...], ...]]:
    """Exponent expressions alpha_d = sum_lambda d_lambda * theta[subset[lambda]]
    for every multidegree of total degree <= L (univariate construction, k = 1)."""
    mu = len(subset)
    if mu < 1:
        raise InvalidConfig("subset must be nonempty")
    if any(i < 0 or i >= len(theta) for i in subset):
        raise InvalidConfig("index subset out of range")
    mons = monomial_set(mu, 1, L)
    exprs = []
    for d in mons:
        parts = [
            f"({d[lam]})*({theta.expressions[subset[lam]]})"
            for lam in range(mu)
            if d[lam]
        ]
        exprs.append(" + ".join(parts) if parts else "0")
    return tuple(exprs), mons


def _alpha_data(alphas: Sequence[str], bits: int):
    nodes = [parse_expression(a) for a in alphas]
    ctx = make_ctx(bits)
    encl = [eval_interval(ctx, n) for n in nodes]
    exact = [exact_rational(n) for n in nodes]
    keys = [
        ("q", q) if q is not None else ("s", to_string(n))
        for q, n in zip(exact, nodes)
    ]
    return ctx, encl, exact, keys


def _symbolically_zero(keys, coeffs) -> bool:
    # phi == 0 iff the coefficients sum to zero within every group of
    # provably-equal exponents; distinct keys may still hide equal values,
    # in which case we simply fail to notice the zero and stay conservative.
    groups: dict = {}
    for key, c in zip(keys, coeffs):
        groups[key] = groups.get(key, 0) + c
    return all(v == 0 for v in groups.values())


def _taylor_bounds(ctx, encl, exact, coeffs, radius: Fraction, terms: int):
    """Certified (sup, derivative-sup) bounds on |w| <= radius via the series.

    sup  <= sum_{t<T} |c_t| rad^t + sum_d |h_d| (|a_d| rad)^T / T! e^{|a_d| rad}
    sup' <= sum_{1<=t<T} t |c_t| rad^(t-1)
            + sum_d |h_d| |a_d| (|a_d| rad)^(T-1) / (T-1)! e^{|a_d| rad}
    """
    rad = iv_from_fraction(ctx, radius)
    all_exact = all(q is not None for q in exact)
    sup = ctx.mpf(0)
    dsup = ctx.mpf(0)
    for t in range(terms):
        if all_exact:
            c_t = sum(
                Fraction(c) * q**t / math.factorial(t)
                for c, q in zip(coeffs, exact)
            )
            c_abs = iv_from_fraction(ctx, abs(c_t))
        else:
            acc = ctx.mpf(0)
            for c, q, iv in zip(coeffs, exact, encl):
                base = iv_from_fraction(ctx, q) if q is not None else iv
                acc += c * base**t
            acc = acc / math.factorial(t)
            c_abs = abs(acc)
        sup += c_abs * rad**t
        if t >= 1:
            dsup += t * c_abs * rad ** (t - 1)
    fact_t = math.factorial(terms)
    for c, q, iv in zip(coeffs, exact, encl):
        base = iv_from_fraction(ctx, q) if q is not None else iv
        a_abs = abs(base)
        growth = ctx.exp(a_abs * rad)
        tail = abs(c) * (a_abs * rad) ** terms / fact_t * growth
        sup += tail
        if terms >= 1:
            dtail = (
                abs(c)
                * a_abs
                * (a_abs * rad) ** (terms - 1)
                / math.factorial(terms - 1)
                * growth
            )
            dsup += dtail
    return sup, dsup


def _grid_sup(ctx, encl, coeffs, radius: Fraction, grid: GridSpec) -> float:
    # max over rings x angles of a certified |phi(w)| upper bound
    worst = 0.0
    for g in range(grid.angles):
        ang = 2 * ctx.pi * g / grid.angles
        cos_a, sin_a = ctx.cos(ang), ctx.sin(ang)
        for j in range(grid.rings):
            rho = iv_from_fraction(ctx, radius * Fraction(j + 1, grid.rings))
            acc = ComplexIV(ctx.mpf(0), ctx.mpf(0))
            for c, alpha in zip(coeffs, encl):
                if not c:
                    continue
                x = alpha * rho
                term = complex_exp(ctx, ComplexIV(x * cos_a, x * sin_a))
                acc = acc + term.scale(c)
            abs2_hi = to_float_pair(acc.abs2())[1]
            hi = math.nextafter(math.sqrt(max(0.0, abs2_hi)), math.inf)
            worst = max(worst, hi)
    return worst


def siegel_construct(
    alphas: Sequence[str] | RealTuple,
    u_target: float,
    delta: float,
    *,
    radius: Fraction | str = Fraction(1, 4),
    grid: GridSpec = GridSpec(),
    taylor_terms: int | None = None,
    monomials: tuple[tuple[int, ...], ...] | None = None,
    strict: bool = False,
    precision_bits: int = 256,
) -> AuxPolynomial:
    """Search for integer coefficients h with log max|h| <= delta making
    phi(w) = sum_d h_d exp(alpha_d w) small on |w| <= radius.

    Candidates come from lattice reduction on rows [W*e_d | S*taylorcols],
    S = 2^(ceil(u_target/log 2) + 16), with the identity block weighted by
    the Taylor-tail rate so the lattice norm models the sup bound.  The
    reported sup is certified twice: a series bound, and a grid maximum plus
    a Lipschitz slack covering the whole disc.  With strict=True a result
    that misses the height budget or certifies no decay raises instead of
    being returned with best_effort set.
    """
    if isinstance(alphas, RealTuple):
        alphas = alphas.expressions
    alphas = tuple(str(a) for a in alphas)
    if not alphas:
        raise InvalidConfig("empty exponent family")
    if isinstance(radius, str):
        radius = Fraction(radius)
    radius = Fraction(radius)
    if radius <= 0:
        raise InvalidConfig("radius must be positive")
    u_target = float(u_target)
    delta = float(delta)
    if u_target <= 0 or delta <= 0:
        raise InvalidConfig("u_target and delta must be positive")
    bits = max(128, precision_bits)
    m = len(alphas)
    terms = taylor_terms if taylor_terms is not None else min(m, 10)
    if terms < 1:
        raise InvalidConfig("taylor_terms must be >= 1")
    ctx, encl, exact, keys = _alpha_data(alphas, bits)

    scale = 1 << (math.ceil(u_target / math.log(2)) + 16)
    alpha_mid = [sum(to_float_pair(iv)) / 2 for iv in encl]
    rad_f = float(radius)
    max_ar = max((abs(a) * rad_f for a in alpha_mid), default=0.0)
    tail_rate = max_ar**terms / math.factorial(terms) * math.exp(max_ar)
    weight = max(1, round(scale * tail_rate))

    rows = []
    for d in range(m):
        row = [weight if i == d else 0 for i in range(m)]
        a = alpha_mid[d]
        for t in range(terms):
            row.append(round(scale * a**t * rad_f**t / math.factorial(t)))
        rows.append(row)
    reduced = lll_reduce(rows)

    candidates = []
    for row in reduced:
        h = [v // weight for v in row[:m]]
        if all(v * weight == row[i] for i, v in enumerate(h)) and any(h):
            first = next(v for v in h if v)
            if first < 0:
                h = [-v for v in h]
            candidates.append(tuple(h))
    if not candidates:
        candidates = [tuple(1 if i == 0 else 0 for i in range(m))]

    scored = []
    for h in candidates:
        height = math.log(max(abs(v) for v in h))
        sup_iv, _ = _taylor_bounds(ctx, encl, exact, h, radius, terms)
        sup_hi = to_float_pair(sup_iv)[1]
        scored.append((height > delta + 1e-12, sup_hi, height, h))
    scored.sort(key=lambda rec: (rec[0], rec[1], rec[3]))
    _, _, log_height, best = scored[0]
    height_ok = log_height <= delta + 1e-12

    zero = _symbolically_zero(keys, best)
    if zero:
        grid_max, slack_hi, taylor_hi = 0.0, 0.0, 0.0
        achieved = float("-inf")
    else:
        sup_iv, dsup_iv = _taylor_bounds(ctx, encl, exact, best, radius, terms)
        taylor_hi = to_float_pair(sup_iv)[1]
        grid_max = _grid_sup(ctx, encl, best, radius, grid)
        mesh = rad_f / grid.rings + math.pi * rad_f / grid.angles
        slack_hi = mesh * to_float_pair(dsup_iv)[1]
        total = min(grid_max + slack_hi, taylor_hi)
        achieved = math.log(total) if total > 0 else float("-inf")
    taylor_log = math.log(taylor_hi) if taylor_hi > 0 else float("-inf")
    u_achieved = -achieved

    e_rad = iv_from_fraction(ctx, radius) * ctx.exp(1)
    norm_sum = ctx.mpf(0)
    for c, q, iv in zip(best, exact, encl):
        base = iv_from_fraction(ctx, q) if q is not None else iv
        norm_sum += ctx.exp(abs(base) * e_rad)
    norm_ok = to_float_pair(norm_sum)[1] <= math.exp(u_target)

    best_effort = (not height_ok) or (u_achieved <= 0 and not zero)
    if strict and best_effort:
        raise HypothesisNotMet(
            "no coefficient vector met the height budget with certified decay "
            f"(log_height={log_height:.3f}, delta={delta:.3f}, "
            f"u_achieved={u_achieved:.3f})"
        )
    return AuxPolynomial(
        alphas=alphas,
        coefficients=best,
        monomials=monomials,
        u_target=u_target,
        delta=delta,
        radius=radius,
        log_height=log_height,
        grid_sup=grid_max,
        lipschitz_slack=slack_hi,
        taylor_log_sup=taylor_log,
        achieved_log_sup=achieved,
        u_achieved=u_achieved,
        height_ok=height_ok,
        norm_hypothesis_ok=norm_ok,
        best_effort=best_effort,
        identically_zero=zero,
        precision_bits=bits,
    )


# ---------------------------------------------------------------------------
# vanishing order at desk scale


def omega(points: Sequence[Sequence], max_degree: int = DESK_OMEGA_DEGREE) -> int:
    """Least degree of a nonzero polynomial vanishing on the set.

    Desk-scale guard rails: at most 200 distinct points and degree cap 4.
    Raises HypothesisNotMet when no degree within the cap works.
    """
    pts = normalize_point_set(points)
    if not pts:
        raise InvalidConfig("empty point set")
    if len(pts) > DESK_OMEGA_POINTS:
        raise BudgetExceeded(f"point count {len(pts)} exceeds desk scale")
    if max_degree < 1 or max_degree > DESK_OMEGA_DEGREE:
        raise BudgetExceeded(f"degree cap must lie in [1, {DESK_OMEGA_DEGREE}]")
    try:
        return min_vanishing_degree(pts, max_degree=max_degree)
    except ValueError as exc:
        raise HypothesisNotMet(
            f"no nonzero polynomial of degree <= {max_degree} vanishes on the set"
        ) from exc


# ---------------------------------------------------------------------------
# distance audit


@dataclass(frozen=True)
class DistanceAuditReport:
    """Stage-by-stage trace of the pigeonhole distance argument.

    `binding` names the first stage that stopped the pipeline (or
    "contradiction_bound" when the full argument closed); `verdict` is one of
    "contradiction", "pass_trivial", "at_theta_flagged", "inconclusive".
    """

    mode: str
    schedule: AuxSchedule
    S: int
    count_ok: bool
    sigma_count: int
    l_power: int
    sigma_points: int | None
    omega_degree: int | None
    zero_estimate: ZeroEstimateResult | None
    collision: tuple[tuple[int, ...], tuple[int, ...]] | None
    relation_exact: bool | None
    contradiction_log: tuple[float, float] | None
    distance_log: tuple[float, float] | None
    threshold: float
    binding: str
    verdict: str


def _is_exact_coord(v) -> bool:
    return isinstance(v, (int, Fraction, CycloNum))


def distance_audit(
    z,
    theta: RealTuple,
    kappa: RealTuple,
    I: Sequence[int],
    J: Sequence[int],
    D: int,
    *,
    k: int = 1,
    eta: float = 2.0,
    c: float = 1.0,
    precision_bits: int = 128,
    budget: int = 10_000_000,
) -> DistanceAuditReport:
    """Audit the distance lemma at one candidate point z.

    z is either the marker string "theta" (the audited point is the image
    point itself, distance exactly zero), a flat sequence of mu*nu exact
    coordinates (lambda-major) for the full pipeline, or a flat sequence of
    expression strings for a numeric distance check only.

    Exact pipeline: count check floor(R/(2 mu))^nu > L^mu, materialization of
    the product slice, vanishing degree <= L, zero-estimate character, coset
    collision by pigeonhole, exact relation check, and the contradiction
    bound log|exp((l . theta_I)((r - rbar) . kappa_J)) - 1| < -c D^eta.
    """
    I = tuple(int(i) for i in I)
    J = tuple(int(j) for j in J)
    mu, nu = len(I), len(J)
    if mu < 1 or nu < 1:
        raise InvalidConfig("index subsets must be nonempty")
    if any(i < 0 or i >= len(theta) for i in I) or any(
        j < 0 or j >= len(kappa) for j in J
    ):
        raise InvalidConfig("index subset out of range")
    if k != 1:
        raise InvalidConfig("the audit runs at k = 1 only")
    sched = make_schedule(D, k, mu, nu)
    S = sched.R // (2 * mu)
    sigma_count = S**nu
    l_power = sched.L**mu
    count_ok = sigma_count > l_power
    threshold = -c * float(D) ** eta

    def report(**kw) -> DistanceAuditReport:
        base = dict(
            mode="exact",
            schedule=sched,
            S=S,
            count_ok=count_ok,
            sigma_count=sigma_count,
            l_power=l_power,
            sigma_points=None,
            omega_degree=None,
            zero_estimate=None,
            collision=None,
            relation_exact=None,
            contradiction_log=None,
            distance_log=None,
            threshold=threshold,
        )
        base.update(kw)
        return DistanceAuditReport(**base)

    if isinstance(z, str):
        if z != "theta":
            raise InvalidConfig(f"unknown audit point marker {z!r}")
        return report(
            mode="at_theta",
            binding="distance_zero",
            verdict="at_theta_flagged",
        )

    z = list(z)
    if len(z) != mu * nu:
        raise InvalidConfig(f"audit point must have {mu * nu} coordinates")

    if not all(_is_exact_coord(v) for v in z):
        # numeric mode: certified coordinate distance to the image point only
        exprs = [str(v) for v in z]

        def attempt(bits: int) -> tuple[float, float]:
            ctx = make_ctx(bits)
            th = [eval_interval(ctx, parse_expression(theta.expressions[i])) for i in I]
            ka = [eval_interval(ctx, parse_expression(kappa.expressions[j])) for j in J]
            # elementwise max of the per-coordinate log enclosures encloses
            # the log of the max distance
            lo, hi = float("-inf"), float("-inf")
            for lam in range(mu):
                for rho in range(nu):
                    node = parse_expression(exprs[lam * nu + rho])
                    zv = eval_interval(ctx, node)
                    diff = zv - ctx.exp(th[lam] * ka[rho])
                    out = log_abs_interval(ctx, diff)
                    if out is None:
                        continue
                    p = to_float_pair(out)
                    lo, hi = max(lo, p[0]), max(hi, p[1])
            if hi == float("-inf"):
                return NEG_PAIR
            return lo, hi

        dist = run_escalating(attempt, precision_bits)
        if dist[0] >= -1.0:
            return report(
                mode="numeric",
                distance_log=dist,
                binding="distance_far",
                verdict="pass_trivial",
            )
        return report(
            mode="numeric",
            distance_log=dist,
            binding="numeric_point_near_image",
            verdict="inconclusive",
        )

    if not count_ok:
        return report(binding="count_check", verdict="inconclusive")

    if (S + 1) ** nu > 4096:
        raise BudgetExceeded("pigeonhole box exceeds desk scale")
    coords = [v if isinstance(v, CycloNum) else CycloNum.from_rational(v) for v in z]
    slices = [tuple(coords[lam * nu + rho] for lam in range(mu)) for rho in range(nu)]
    powers: dict[tuple[int, ...], tuple] = {}
    for r_vec in product(range(S + 1), repeat=nu):
        pt = make_point([CycloNum.from_rational(1)] * mu)
        for rho, e in enumerate(r_vec):
            if e:
                pe = make_point([v**e for v in slices[rho]])
                pt = point_mul(pt, pe)
        powers[r_vec] = pt
    sigma = normalize_point_set(powers.values())

    try:
        omega_deg = min_vanishing_degree(sigma, max_degree=sched.L)
    except ValueError:
        return report(
            sigma_points=len(sigma),
            binding="no_low_degree_vanishing",
            verdict="inconclusive",
        )

    # the search builds products of exactly `depth` factors, so the identity
    # is added as a generator to realize every partial product in the box
    identity = make_point([CycloNum.from_rational(1)] * mu)
    try:
        zres = zero_estimate_search(
            [identity, *slices], S * nu, sched.L, budget=budget
        )
    except HypothesisNotMet:
        return report(
            sigma_points=len(sigma),
            omega_degree=omega_deg,
            binding="zero_estimate_hypothesis",
            verdict="inconclusive",
        )
    if not zres.found:
        return report(
            sigma_points=len(sigma),
            omega_degree=omega_deg,
            zero_estimate=zres,
            binding="no_obstruction_character",
            verdict="inconclusive",
        )

    seen: dict = {}
    pair = None
    for r_vec in sorted(powers):
        val = char_value(zres.character, powers[r_vec])
        if val in seen:
            pair = (seen[val], r_vec)
            break
        seen[val] = r_vec
    if pair is None:
        return report(
            sigma_points=len(sigma),
            omega_degree=omega_deg,
            zero_estimate=zres,
            binding="no_coset_collision",
            verdict="inconclusive",
        )
    rbar, r_vec = pair
    diff_pt = make_point(
        [a / b for a, b in zip(powers[r_vec], powers[rbar])]
    )
    relation_exact = char_value(zres.character, diff_pt) == CycloNum.from_rational(1)

    u_expr = " + ".join(
        f"({l})*({theta.expressions[I[lam]]})"
        for lam, l in enumerate(zres.character)
        if l
    )
    dr = [r_vec[rho] - rbar[rho] for rho in range(nu)]
    v_expr = " + ".join(
        f"({d})*({kappa.expressions[J[rho]]})" for rho, d in enumerate(dr) if d
    )
    if not u_expr or not v_expr:
        contr = NEG_PAIR
    else:
        contr = log_expm1_abs(f"({u_expr})*({v_expr})", precision_bits)
    binds = contr[1] < threshold
    return report(
        sigma_points=len(sigma),
        omega_degree=omega_deg,
        zero_estimate=zres,
        collision=pair,
        relation_exact=relation_exact,
        contradiction_log=contr,
        binding="contradiction_bound" if binds else "genericity_margin",
        verdict="contradiction" if binds else "inconclusive",
    )


# ---------------------------------------------------------------------------
# hypothesis checklist


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    status: str
    details: tuple


@dataclass(frozen=True)
class PhilipponReport:
    """Hypothesis checklist only; the downstream conclusion is never asserted."""

    degree_check: HypothesisCheck
    height_check: HypothesisCheck
    smallness_check: HypothesisCheck
    distance_check: HypothesisCheck
    case: str
    D: int
    note: str = "hypothesis audit only; the conclusion is not asserted"

    def all_certified_pass(self) -> bool:
        return all(
            chk.status == "pass"
            for chk in (self.degree_check, self.height_check, self.smallness_check)
        )


def _laurent_degree(mono: Sequence[int]) -> int:
    return sum(abs(e) for e in mono)


def _binomial_characters(family) -> list[tuple[int, ...]] | None:
    chars = []
    for poly in family:
        items = sorted(poly.items(), key=lambda kv: kv[1])
        if len(items) != 2:
            return None
        (e_neg, c_neg), (e_pos, c_pos) = items
        if (c_neg, c_pos) != (-1, 1):
            return None
        chars.append(tuple(p - q for p, q in zip(e_pos, e_neg)))
    return chars


def _poly_eval_iv(ctx, poly, coords):
    total = ctx.mpf(0)
    for mono, coeff in sorted(poly.items()):
        term = ctx.mpf(1)
        for e, x in zip(mono, coords):
            if e == 0:
                continue
            if e < 0 and straddles_zero(x):
                raise NeedsBits(0)
            term *= x**e
        total += coeff * term
    return total


def philippon_audit(
    family: Sequence[Poly],
    theta_point: RealTuple,
    D: int,
    *,
    c1: float = 1.0,
    c2: float = 1.0,
    C: float = 1.0,
    eta: float = 2.0,
    case: str = "all_large_D",
    zero_distance_log: float | None = None,
    seed: int = 0,
    starts: int = 100,
    precision_bits: int = 128,
) -> PhilipponReport:
    """Check the four hypotheses of the effective-distance criterion at one
    height D and report each verdict separately.

    H1: every Laurent degree <= c1*D (exact).  H2: every coefficient height
    satisfies log|f| <= c2*D (exact).  H3: log|f(Theta)| <= -C*D^eta for
    every member (certified intervals, exact when the point is rational).
    H4: distance from Theta to the common zero set stays above -3*C*D^eta in
    log scale; checked against a supplied bound when given, otherwise
    explored for binomial families by seeded simplex descent over the
    positive-real component of the zero subgroup.  A violating witness is
    re-certified with intervals before "fail" is reported; a surviving
    search is only ever "empirical_pass".  Conclusions are never asserted.
    """
    if not family:
        raise InvalidConfig("empty polynomial family")
    if case not in ("all_large_D", "infinitely_many_D"):
        raise InvalidConfig(f"unknown case {case!r}")
    if D < 1:
        raise InvalidConfig("height D must be >= 1")
    n = len(theta_point)
    polys = [_as_poly(f, n) for f in family]
    if theta_point.is_complex:
        raise InvalidConfig("the checklist expects a real image point")

    deg_bound = c1 * D
    deg_details = []
    for idx, poly in enumerate(polys):
        deg = max(_laurent_degree(m) for m in poly)
        deg_details.append((idx, deg, deg <= deg_bound))
    h1 = HypothesisCheck(
        "degree",
        "pass" if all(ok for _, _, ok in deg_details) else "fail",
        tuple(deg_details),
    )

    ht_bound = c2 * D
    ht_details = []
    for idx, poly in enumerate(polys):
        log_h = math.log(max(abs(c) for c in poly.values()))
        ht_details.append((idx, log_h, log_h <= ht_bound + 1e-12))
    h2 = HypothesisCheck(
        "height",
        "pass" if all(ok for _, _, ok in ht_details) else "fail",
        tuple(ht_details),
    )

    small_bound = -C * float(D) ** eta
    exact_coords = theta_point.exact_values()
    small_details = []
    for idx, poly in enumerate(polys):
        if exact_coords is not None:
            val = Fraction(0)
            defined = True
            for mono, coeff in poly.items():
                term = Fraction(1)
                for e, q in zip(mono, exact_coords):
                    if e < 0 and q == 0:
                        defined = False
                        break
                    term *= Fraction(q) ** e
                if not defined:
                    break
                val += coeff * term
            if not defined:
                raise InvalidConfig("image point has a zero coordinate under a pole")
            if val == 0:
                pair = NEG_PAIR
            else:

                def attempt(bits: int, q=val) -> tuple[float, float]:
                    ctx = make_ctx(bits)
                    out = log_abs_interval(ctx, iv_from_fraction(ctx, q))
                    return to_float_pair(out)

                pair = run_escalating(attempt, precision_bits)
        else:

            def attempt(bits: int, p=poly) -> tuple[float, float]:
                ctx, coords = theta_point.real_enclosures(bits)
                out = log_abs_interval(ctx, _poly_eval_iv(ctx, p, coords))
                if out is None:
                    return NEG_PAIR
                pair = to_float_pair(out)
                if pair[1] - pair[0] > 2.0**-20:
                    raise NeedsBits(bits * 2)
                return pair

            pair = run_escalating(attempt, precision_bits)
        small_details.append((idx, pair, pair[1] <= small_bound))
    h3 = HypothesisCheck(
        "evaluation_smallness",
        "pass" if all(ok for _, _, ok in small_details) else "fail",
        tuple(small_details),
    )

    dist_bound = -3.0 * C * float(D) ** eta
    h4 = _distance_hypothesis(
        polys,
        theta_point,
        dist_bound,
        zero_distance_log,
        seed=seed,
        starts=starts,
        precision_bits=precision_bits,
    )
    return PhilipponReport(h1, h2, h3, h4, case, D)


def _distance_hypothesis(
    polys,
    theta_point: RealTuple,
    dist_bound: float,
    supplied: float | None,
    *,
    seed: int,
    starts: int,
    precision_bits: int,
) -> HypothesisCheck:
    if supplied is not None:
        ok = supplied >= dist_bound
        return HypothesisCheck(
            "zero_distance",
            "pass" if ok else "fail",
            (("supplied_log_distance", supplied, dist_bound),),
        )
    chars = _binomial_characters(polys)
    if chars is None:
        return HypothesisCheck(
            "zero_distance",
            "not_checked",
            (("reason", "needs a supplied bound or a binomial family"),),
        )

    import numpy as np
    from scipy.optimize import minimize

    from .intmat import rank_int, smith_normal_form

    n = len(theta_point)
    e_rows = [list(ch) for ch in chars]
    rank = rank_int(e_rows)
    _, _, v = smith_normal_form(e_rows)
    kernel = [[v[i][j] for i in range(n)] for j in range(rank, n)]
    dim = len(kernel)

    ctx, coords = theta_point.real_enclosures(max(128, precision_bits))
    target = np.array([sum(to_float_pair(x)) / 2 for x in coords])

    def objective(s: np.ndarray) -> float:
        try:
            u = np.array(kernel, dtype=float).T @ s if dim else np.zeros(n)
            pt = np.exp(u)
        except (OverflowError, FloatingPointError):
            return 1e300
        if not np.all(np.isfinite(pt)):
            return 1e300
        return float(np.max(np.abs(pt - target)))

    rng = np.random.default_rng(seed)
    best_val = objective(np.zeros(dim)) if dim else objective(np.zeros(0))
    best_s = np.zeros(dim)
    if dim:
        for i in range(starts):
            spread = (0.1, 1.0, 3.0)[i % 3]
            s0 = rng.standard_normal(dim) * spread
            res = minimize(objective, s0, method="Nelder-Mead")
            if res.fun < best_val:
                best_val, best_s = float(res.fun), np.asarray(res.x)

    found_log = math.log(best_val) if best_val > 0 else float("-inf")
    details = [
        ("component", "positive_real_only"),
        ("min_log_distance_found", found_log),
        ("bound", dist_bound),
    ]
    if found_log < dist_bound:
        # certify the witness: any kernel point is a true common zero
        def attempt(bits: int) -> tuple[float, float]:
            ctx2, coords2 = theta_point.real_enclosures(bits)
            lo, hi = float("-inf"), float("-inf")
            for j in range(n):
                u_j = sum(
                    (Fraction(float(best_s[i])).limit_denominator(10**12) * kernel[i][j]
                     for i in range(dim)),
                    Fraction(0),
                )
                zv = ctx2.exp(iv_from_fraction(ctx2, u_j))
                out = log_abs_interval(ctx2, zv - coords2[j])
                if out is None:
                    continue
                p = to_float_pair(out)
                lo, hi = max(lo, p[0]), max(hi, p[1])
            if hi == float("-inf"):
                return NEG_PAIR
            return lo, hi

        pair = run_escalating(attempt, precision_bits)
        if pair[1] < dist_bound:
            return HypothesisCheck(
                "zero_distance",
                "fail",
                tuple(details + [("certified_witness_log", pair)]),
            )
        details.append(("witness_certification", pair))
        return HypothesisCheck("zero_distance", "empirical_fail", tuple(details))
    return HypothesisCheck("zero_distance", "empirical_pass", tuple(details))
