"""Diophantine probes: minimal linear forms, genericity, and regularity.

The central primitive is linear_form_min: over nonzero integer vectors l
with max-norm at most D, minimize |l_1 θ_{i_1} + ... + l_mu θ_{i_mu}|.
Exhaustive mode enumerates the whole box (float screening first, then
interval certification of the survivors); above the enumeration budget a
lattice-reduction mode returns a certified upper-bound record flagged
approximate.  The probes aggregate these records over heights and
subsets with the existential subset quantifier (max over subsets of the
min over forms) and compare against thresholds -c*D^eta.

Index subsets are 0-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
import numpy as np

from .errors import BudgetExceeded, InvalidConfig
from .expr import BinOp, Num, exact_rational, eval_interval, to_string
from .numeric import (
    ComplexIV,
    NeedsBits,
    complex_log_abs,
    complex_log_expm1_abs,
    iv_from_fraction,
    log_abs_interval,
    log_expm1_abs_interval,
    make_ctx,
    run_escalating,
    straddles_zero,
    to_float_pair,
)
from .reduction import lll_reduce
from .tuples import RealTuple

ENUM_BUDGET = 10**7
NEG_PAIR = (float("-inf"), float("-inf"))
_CHUNK = 1 << 18
_MAX_LOG_WIDTH = 2.0**-32


@dataclass(frozen=True)
class LinearFormRecord:
    """The minimizing form over one index subset at one height."""

    subset: tuple[int, ...]
    l: tuple[int, ...]
    D: int
    log_value: tuple[float, float]  # enclosure of log|sum l_i theta_i|
    log_exp_value: tuple[float, float]  # enclosure of log|e^(sum) - 1|
    exact_value: Optional[Fraction] = None  # set when the value is proven rational
    approximate: bool = False  # lattice mode: upper bound, not certified min


def canonical_form(l: Sequence[int]) -> tuple[int, ...]:
    """Flip sign so the first nonzero coordinate is positive."""
    for x in l:
        if x != 0:
            return tuple(l) if x > 0 else tuple(-v for v in l)
    return tuple(l)


def _pair_of(interval) -> tuple[float, float]:
    return to_float_pair(interval)


def _width_ok(interval) -> bool:
    return float(interval.delta) <= _MAX_LOG_WIDTH


# ---------------------------------------------------------------------------
# candidate generation


def _decode(flat: int, mu: int, base: int, D: int) -> tuple[int, ...]:
    l = [0] * mu
    k = flat
    for pos in range(mu - 1, -1, -1):
        k, d = divmod(k, base)
        l[pos] = d - D
    return tuple(l)


def _screen_box(theta_float: list[complex], D: int) -> list[tuple[int, ...]]:
    """Float screening of the full box: returns canonical candidate vectors
    guaranteed to contain every true minimizer."""
    mu = len(theta_float)
    base = 2 * D + 1
    total = base**mu
    re = np.array([z.real for z in theta_float])
    im = np.array([z.imag for z in theta_float])
    is_complex = bool(np.any(im != 0.0))
    scale = mu * D * max(1.0, float(np.max(np.abs(re)) + np.max(np.abs(im))))
    slack = scale * 2.0**-46 + 1e-10
    zero_flat = sum(D * base**j for j in range(mu))

    def chunk_values(lo: int, hi: int):
        idx = np.arange(lo, hi, dtype=np.int64)
        vre = np.zeros(hi - lo)
        vim = np.zeros(hi - lo) if is_complex else None
        rem = idx
        for pos in range(mu - 1, -1, -1):
            rem, dig = np.divmod(rem, base)
            coeff = dig - D
            vre += coeff * re[pos]
            if is_complex:
                vim += coeff * im[pos]
        vals = np.hypot(vre, vim) if is_complex else np.abs(vre)
        if lo <= zero_flat < hi:
            vals[zero_flat - lo] = np.inf
        return idx, vals

    minv = np.inf
    for lo in range(0, total, _CHUNK):
        _, vals = chunk_values(lo, min(lo + _CHUNK, total))
        minv = min(minv, float(vals.min()))
    keep: set[tuple[int, ...]] = set()
    threshold = minv + slack
    for lo in range(0, total, _CHUNK):
        idx, vals = chunk_values(lo, min(lo + _CHUNK, total))
        for flat in idx[vals <= threshold]:
            keep.add(canonical_form(_decode(int(flat), mu, base, D)))
    return sorted(keep)


def _float_entries(theta: RealTuple, subset: Sequence[int]) -> list[complex]:
    ctx, encl = theta.complex_enclosures(128)
    out = []
    for i in subset:
        z = encl[i]
        out.append(complex(float(mpmath.mpf(z.re.mid)), float(mpmath.mpf(z.im.mid))))
    return out


def _lattice_candidates(
    theta: RealTuple, subset: Sequence[int], D: int, bits: int
) -> list[tuple[int, ...]]:
    """Reduced relation-lattice rows that fit the height box, plus the unit
    vectors (which always fit and guarantee a nonempty candidate set)."""
    mu = len(subset)
    scale = mpmath.mpf(2) ** (bits // 2)
    ctx, encl = theta.complex_enclosures(bits)
    rows = []
    for i in subset:
        z = encl[i]
        rows.append(
            [
                int(mpmath.nint(mpmath.mpf(z.re.mid) * scale)),
                int(mpmath.nint(mpmath.mpf(z.im.mid) * scale)),
            ]
        )
    basis = []
    for j in range(mu):
        row = [0] * mu + [rows[j][0], rows[j][1]]
        row[j] = 1
        basis.append(row)
    reduced = lll_reduce(basis)
    cands: set[tuple[int, ...]] = set()
    for row in reduced:
        l = canonical_form(row[:mu])
        if any(l) and max(abs(x) for x in l) <= D:
            cands.add(l)
    for j in range(mu):
        unit = [0] * mu
        unit[j] = 1
        cands.add(tuple(unit))
    return sorted(cands)


# ---------------------------------------------------------------------------
# certified selection


def _signed_sum(ctx, entries, l: Sequence[int]):
    total = None
    for coeff, z in zip(l, entries):
        if coeff == 0:
            continue
        term = z.scale(coeff) if isinstance(z, ComplexIV) else z * coeff
        total = term if total is None else total + term
    return total


def _abs_low_high(value):
    if isinstance(value, ComplexIV):
        a2 = value.abs2()
        return a2.a, a2.b
    a = abs(value)
    return a.a, a.b


def _log_parts(ctx, value, bits: int):
    """(log_value pair, log_exp pair) for a signed enclosure; NeedsBits on
    straddles or over-wide results."""
    if isinstance(value, ComplexIV):
        lv = complex_log_abs(ctx, value)
        le = complex_log_expm1_abs(ctx, value, bits)
    else:
        lv = log_abs_interval(ctx, value)
        le = log_expm1_abs_interval(ctx, value, bits)
    if lv is None or le is None:
        return NEG_PAIR, NEG_PAIR
    if not (_width_ok(lv) and _width_ok(le)):
        raise NeedsBits
    return _pair_of(lv), _pair_of(le)


def _min_record(
    theta: RealTuple,
    subset: tuple[int, ...],
    D: int,
    *,
    bits_floor: int,
    budget: int,
) -> LinearFormRecord:
    mu = len(subset)
    exact_entries = theta.exact_values()
    exhaustive = (2 * D + 1) ** mu <= budget
    if exhaustive:
        candidates = _screen_box(_float_entries(theta, subset), D)
    else:
        candidates = _lattice_candidates(theta, subset, D, max(128, bits_floor))

    if exact_entries is not None:
        vals = [
            (abs(sum(c * exact_entries[i] for c, i in zip(l, subset))), l)
            for l in candidates
        ]
        best_val = min(v for v, _ in vals)
        best_l = min(l for v, l in vals if v == best_val)
        q = best_val

        def assemble(bits: int) -> LinearFormRecord:
            if q == 0:
                return LinearFormRecord(subset, best_l, D, NEG_PAIR, NEG_PAIR, Fraction(0), not exhaustive)
            ctx = make_ctx(bits)
            signed = sum(
                iv_from_fraction(ctx, Fraction(c) * exact_entries[i])
                for c, i in zip(best_l, subset)
                if c != 0
            )
            log_value, log_exp = _log_parts(ctx, signed, bits)
            return LinearFormRecord(subset, best_l, D, log_value, log_exp, q, not exhaustive)

        return run_escalating(assemble, bits_floor)

    tie_cap = 4 * max(128, bits_floor)

    def compute(bits: int) -> LinearFormRecord:
        ctx, encl = theta.complex_enclosures(bits)
        if not theta.is_complex:
            encl = [z.re for z in encl]
        entries = [encl[i] for i in subset]
        sums = [( _signed_sum(ctx, entries, l), l) for l in candidates]
        bounds = [(_abs_low_high(s), l, s) for s, l in sums]
        min_upper = min(hi for (lo, hi), _, _ in bounds)
        contenders = [(l, s) for (lo, hi), l, s in bounds if lo <= min_upper]
        if len(contenders) > 1 and bits < tie_cap:
            raise NeedsBits
        best_l, signed = min(contenders, key=lambda t: t[0])
        log_value, log_exp = _log_parts(ctx, signed, bits)
        return LinearFormRecord(subset, best_l, D, log_value, log_exp, None, not exhaustive)

    return run_escalating(compute, bits_floor)


def linear_form_min(
    theta: RealTuple,
    subset: Sequence[int],
    D: int,
    *,
    budget: int = ENUM_BUDGET,
    precision_bits: Optional[int] = None,
) -> LinearFormRecord:
    """Minimize |sum_i l_i theta_{subset[i]}| over nonzero l, max-norm <= D.

    Ties after sign canonicalization (first nonzero coordinate positive)
    resolve to the lexicographically smallest vector.  Above the
    enumeration budget the result is a lattice-reduction upper bound,
    flagged approximate.
    """
    subset = tuple(subset)
    if not subset or len(set(subset)) != len(subset) or list(subset) != sorted(subset):
        raise InvalidConfig("subset must be a nonempty strictly increasing index list")
    if any(i < 0 or i >= len(theta) for i in subset):
        raise InvalidConfig("subset index out of range")
    if D < 1:
        raise InvalidConfig("height bound D must be >= 1")
    bits = precision_bits if precision_bits is not None else theta.precision_bits
    return _min_record(theta, subset, D, bits_floor=bits, budget=budget)


def log_expm1_abs(x, precision_bits: int = 128) -> tuple[float, float]:
    """Certified enclosure of log|e^x - 1| as a float pair.

    x may be an expression string, an int, or a Fraction.  Returns the
    (-inf, -inf) sentinel for x = 0.
    """
    from .expr import parse_expression

    if isinstance(x, str):
        node = parse_expression(x)
        exact = exact_rational(node)
    elif isinstance(x, (int, Fraction)):
        node, exact = None, Fraction(x)
    else:
        raise InvalidConfig(f"unsupported input for log_expm1_abs: {x!r}")

    def attempt(bits: int) -> tuple[float, float]:
        ctx = make_ctx(bits)
        if exact is not None:
            xi = iv_from_fraction(ctx, exact)
        else:
            xi = eval_interval(ctx, node)
        r = log_expm1_abs_interval(ctx, xi, bits)
        if r is None:
            return NEG_PAIR
        if not _width_ok(r):
            raise NeedsBits
        return _pair_of(r)

    return run_escalating(attempt, precision_bits)


# ---------------------------------------------------------------------------
# genericity over subsets and heights


@dataclass(frozen=True)
class HeightVerdict:
    D: int
    record: LinearFormRecord
    threshold: float
    passed: bool
    c_required: float


@dataclass(frozen=True)
class GenericityReport:
    eta: float
    mu: int
    c: float
    verdicts: tuple[HeightVerdict, ...]
    overall: str  # "generic-up-to-budget" | "special-witnesses"
    c_required_max: float
    approximate: bool

    @property
    def all_passed(self) -> bool:
        return self.overall == "generic-up-to-budget"


def _better(a: LinearFormRecord, b: LinearFormRecord) -> bool:
    """Certainly a's minimal value exceeds b's (compares log enclosures)."""
    return a.log_value[0] > b.log_value[1]


def _best_subset_record(
    theta: RealTuple, mu: int, D: int, *, bits_floor: int, budget: int
) -> LinearFormRecord:
    best = None
    for subset in itertools.combinations(range(len(theta)), mu):
        rec = _min_record(theta, subset, D, bits_floor=bits_floor, budget=budget)
        if best is None or _better(rec, best):
            best = rec  # overlap keeps the earlier (lex smaller) subset
    return best


def _check_rational_matrix(A, m: int) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in A]
    if len(rows) != m or any(len(r) != m for r in rows):
        raise InvalidConfig(f"matrix must be {m}x{m}")
    # nonsingularity via Gaussian elimination
    work = [row[:] for row in rows]
    for col in range(m):
        piv = next((r for r in range(col, m) if work[r][col] != 0), None)
        if piv is None:
            raise InvalidConfig("matrix must be nonsingular")
        work[col], work[piv] = work[piv], work[col]
        for r in range(col + 1, m):
            f = work[r][col] / work[col][col]
            work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return rows


def apply_matrix(theta: RealTuple, A) -> RealTuple:
    """The tuple A*theta, entries rebuilt as exact expression trees."""
    m = len(theta)
    rows = _check_rational_matrix(A, m)

    def combine(nodes):
        out = []
        for row in rows:
            node = None
            for a, base in zip(row, nodes):
                if a == 0:
                    continue
                term = BinOp("*", Num(a), base)
                node = term if node is None else BinOp("+", node, term)
            out.append(to_string(node if node is not None else Num(Fraction(0))))
        return tuple(out)

    re_exprs = combine(theta._nodes)
    im_exprs = combine(theta._imag_nodes) if theta.is_complex else None
    return RealTuple(
        re_exprs,
        precision_bits=theta.precision_bits,
        label=f"{theta.label}*A" if theta.label else "A*theta",
        imag_expressions=im_exprs,
    )


def _validate_probe_args(theta, mu, eta, c, D_set):
    if not 1 <= mu <= len(theta):
        raise InvalidConfig(f"mu must be in [1, {len(theta)}]")
    if eta < 1:
        raise InvalidConfig("eta must be >= 1")
    if c <= 0:
        raise InvalidConfig("c must be positive")
    ds = sorted(set(int(d) for d in D_set))
    if not ds:
        raise InvalidConfig("empty height set")
    if ds[0] < 1:
        raise InvalidConfig("heights must be >= 1")
    return ds


def genericity_probe(
    theta: RealTuple,
    mu: int,
    eta: float,
    c: float,
    D_set: Sequence[int],
    A=None,
    *,
    budget: int = ENUM_BUDGET,
) -> GenericityReport:
    """For each height D, find the subset of size mu maximizing the minimal
    form value, and test log|e^(form) - 1| >= -c*D^eta."""
    ds = _validate_probe_args(theta, mu, eta, c, D_set)
    if A is not None:
        theta = apply_matrix(theta, A)
    verdicts = []
    for D in ds:
        thr = -c * float(D) ** eta

        def per_height(bits: int, D=D, thr=thr) -> HeightVerdict:
            rec = _best_subset_record(theta, mu, D, bits_floor=bits, budget=budget)
            lo, hi = rec.log_exp_value
            if lo >= thr:
                passed = True
            elif hi < thr:
                passed = False
            else:
                raise NeedsBits
            c_req = max(0.0, -lo) / float(D) ** eta
            return HeightVerdict(D, rec, thr, passed, c_req)

        verdicts.append(run_escalating(per_height, theta.precision_bits))
    overall = (
        "generic-up-to-budget" if all(v.passed for v in verdicts) else "special-witnesses"
    )
    return GenericityReport(
        eta=eta,
        mu=mu,
        c=c,
        verdicts=tuple(verdicts),
        overall=overall,
        c_required_max=max(v.c_required for v in verdicts),
        approximate=any(v.record.approximate for v in verdicts),
    )


@dataclass(frozen=True)
class GenEstimate:
    estimate: int
    eta: float
    c: float
    passed_at_estimate: bool
    budget_relative: bool
    report: GenericityReport
    witness: Optional[LinearFormRecord]  # failing record one level up, if any


def gen_estimate(
    theta: RealTuple,
    eta: float,
    c: float,
    D_set: Sequence[int],
    *,
    budget: int = ENUM_BUDGET,
) -> GenEstimate:
    """Largest mu whose genericity probe passes every height in D_set.

    Budget-relative: a pass only means no witness was found at these
    heights.  Clamped below at 1 (the estimate is always in [1, m])."""
    m = len(theta)
    witness = None
    for mu in range(m, 0, -1):
        rep = genericity_probe(theta, mu, eta, c, D_set, budget=budget)
        if rep.all_passed:
            return GenEstimate(mu, eta, c, True, True, rep, witness)
        witness = next(v.record for v in rep.verdicts if not v.passed)
    rep = genericity_probe(theta, 1, eta, c, D_set, budget=budget)
    return GenEstimate(1, eta, c, rep.all_passed, True, rep, witness)


# ---------------------------------------------------------------------------
# bituples


@dataclass(frozen=True)
class BitupleVerdict:
    L: int
    R: int
    subset_theta: tuple[int, ...]
    subset_kappa: tuple[int, ...]
    l: tuple[int, ...]
    r: tuple[int, ...]
    log_value: tuple[float, float]
    log_exp_value: tuple[float, float]
    threshold: float
    passed: bool
    c_required: float


@dataclass(frozen=True)
class BitupleReport:
    eta: float
    mu: int
    nu: int
    c: float
    verdicts: tuple[BitupleVerdict, ...]
    overall: str
    c_required_max: float
    approximate: bool

    @property
    def all_passed(self) -> bool:
        return self.overall == "generic-up-to-budget"


def _abs_product_interval(ctx, theta, rec_l, kappa, rec_r, bits):
    _, encl_t = theta.complex_enclosures(bits)
    _, encl_k = kappa.complex_enclosures(bits)
    st = _signed_sum(ctx, [encl_t[i].re for i in rec_l.subset], rec_l.l)
    sk = _signed_sum(ctx, [encl_k[i].re for i in rec_r.subset], rec_r.l)
    return abs(st) * abs(sk)


def bituple_probe(
    theta: RealTuple,
    kappa: RealTuple,
    mu: int,
    nu: int,
    eta: float,
    c: float,
    L_set: Sequence[int],
    R_set: Sequence[int],
    *,
    budget: int = ENUM_BUDGET,
) -> BitupleReport:
    """Product forms (sum l theta)(sum r kappa) against -c(L^eta + R^eta).

    For real tuples the minimum of |product| over pairs factors exactly
    into (min over l)(min over r), so the sides are searched separately.
    The verdict evaluates log|e^s - 1| at the least favourable sign of
    the product (s = -|product|), so a pass covers every signed pair.
    Complex inputs are evaluated directly over all pairs (no shortcut).
    """
    ls = _validate_probe_args(theta, mu, eta, c, L_set)
    rs = _validate_probe_args(kappa, nu, eta, c, R_set)
    if theta.is_complex or kappa.is_complex:
        return _bituple_complex(theta, kappa, mu, nu, eta, c, ls, rs, budget)

    theta_best = {}
    kappa_best = {}
    for L in ls:
        theta_best[L] = run_escalating(
            lambda bits, L=L: _best_subset_record(theta, mu, L, bits_floor=bits, budget=budget),
            theta.precision_bits,
        )
    for R in rs:
        kappa_best[R] = run_escalating(
            lambda bits, R=R: _best_subset_record(kappa, nu, R, bits_floor=bits, budget=budget),
            kappa.precision_bits,
        )

    verdicts = []
    base_bits = max(theta.precision_bits, kappa.precision_bits)
    for L in ls:
        for R in rs:
            rec_l, rec_r = theta_best[L], kappa_best[R]
            thr = -c * (float(L) ** eta + float(R) ** eta)

            def per_pair(bits: int, rec_l=rec_l, rec_r=rec_r, thr=thr, L=L, R=R):
                log_value = (
                    rec_l.log_value[0] + rec_r.log_value[0],
                    rec_l.log_value[1] + rec_r.log_value[1],
                )
                if rec_l.log_value == NEG_PAIR or rec_r.log_value == NEG_PAIR:
                    log_value = NEG_PAIR
                    log_exp = NEG_PAIR
                else:
                    ctx = make_ctx(bits)
                    t = _abs_product_interval(ctx, theta, rec_l, kappa, rec_r, bits)
                    le = log_expm1_abs_interval(ctx, -t, bits)
                    if le is None:
                        log_exp = NEG_PAIR
                    else:
                        if not _width_ok(le):
                            raise NeedsBits
                        log_exp = _pair_of(le)
                lo, hi = log_exp
                if lo >= thr:
                    passed = True
                elif hi < thr:
                    passed = False
                else:
                    raise NeedsBits
                c_req = max(0.0, -lo) / (float(L) ** eta + float(R) ** eta)
                return BitupleVerdict(
                    L, R, rec_l.subset, rec_r.subset, rec_l.l, rec_r.l,
                    log_value, log_exp, thr, passed, c_req,
                )

            verdicts.append(run_escalating(per_pair, base_bits))
    overall = (
        "generic-up-to-budget" if all(v.passed for v in verdicts) else "special-witnesses"
    )
    return BitupleReport(
        eta=eta, mu=mu, nu=nu, c=c, verdicts=tuple(verdicts), overall=overall,
        c_required_max=max(v.c_required for v in verdicts),
        approximate=any(
            theta_best[L].approximate or kappa_best[R].approximate
            for L in ls for R in rs
        ),
    )


def _nonzero_box(dim: int, H: int):
    for l in itertools.product(range(-H, H + 1), repeat=dim):
        if any(l):
            yield l


def _bituple_complex(theta, kappa, mu, nu, eta, c, ls, rs, budget) -> BitupleReport:
    verdicts = []
    base_bits = max(theta.precision_bits, kappa.precision_bits)
    for L in ls:
        for R in rs:
            pair_count = ((2 * L + 1) ** mu) * ((2 * R + 1) ** nu)
            if pair_count > min(budget, 50_000):
                raise BudgetExceeded(
                    f"complex bituple enumeration of {pair_count} pairs exceeds the budget"
                )
            thr = -c * (float(L) ** eta + float(R) ** eta)

            def per_pair(bits: int, L=L, R=R, thr=thr):
                ctx, encl_t = theta.complex_enclosures(bits)
                _, encl_k = kappa.complex_enclosures(bits)
                best = None  # (log_exp pair, key, payload)
                for sub_t in itertools.combinations(range(len(theta)), mu):
                    for sub_k in itertools.combinations(range(len(kappa)), nu):
                        worst = None
                        for l in _nonzero_box(mu, L):
                            sl = _signed_sum(ctx, [encl_t[i] for i in sub_t], l)
                            for r in _nonzero_box(nu, R):
                                sk = _signed_sum(ctx, [encl_k[i] for i in sub_k], r)
                                w = sl * sk
                                le = complex_log_expm1_abs(ctx, w, bits)
                                key = (l, r)
                                if le is None:
                                    cand = (NEG_PAIR, key, w)
                                else:
                                    if not _width_ok(le):
                                        raise NeedsBits
                                    cand = (_pair_of(le), key, w)
                                if worst is None or cand[0][1] < worst[0][0] or (
                                    not (cand[0][0] > worst[0][1]) and cand[1] < worst[1]
                                ):
                                    worst = cand
                        entry = (worst, (sub_t, sub_k))
                        if best is None or entry[0][0][0] > best[0][0][1]:
                            best = entry
                (log_exp, (l, r), w), (sub_t, sub_k) = best
                la = complex_log_abs(ctx, w)
                log_value = NEG_PAIR if la is None else _pair_of(la)
                lo, hi = log_exp
                if lo >= thr:
                    passed = True
                elif hi < thr:
                    passed = False
                else:
                    raise NeedsBits
                c_req = max(0.0, -lo) / (float(L) ** eta + float(R) ** eta)
                return BitupleVerdict(
                    L, R, sub_t, sub_k, l, r, log_value, log_exp, thr, passed, c_req
                )

            verdicts.append(run_escalating(per_pair, base_bits))
    overall = (
        "generic-up-to-budget" if all(v.passed for v in verdicts) else "special-witnesses"
    )
    return BitupleReport(
        eta=eta, mu=mu, nu=nu, c=c, verdicts=tuple(verdicts), overall=overall,
        c_required_max=max(v.c_required for v in verdicts), approximate=False,
    )


# ---------------------------------------------------------------------------
# integer-relation detection


@dataclass(frozen=True)
class RegularityResult:
    status: str  # "relation_found" | "no_relation_found"
    relation: Optional[tuple[int, ...]]
    includes_pi: bool  # last coordinate multiplies pi*i when set
    height_bound: int
    precision_bits: int
    verified_exact: bool  # relation proven by exact rational arithmetic
    minimal: Optional[bool]  # smallest max-norm confirmed by enumeration


def _relation_holds(ctx, entries, l, exact_entries) -> tuple[bool, bool]:
    """(plausible, exact): enclosure of the combination straddles zero /
    the combination is exactly zero in rational arithmetic."""
    if exact_entries is not None:
        total = sum(Fraction(c) * q for c, q in zip(l, exact_entries))
        return total == 0, total == 0
    s = _signed_sum(ctx, entries, l)
    if isinstance(s, ComplexIV):
        return s.straddles_zero(), False
    return straddles_zero(s), False


def regularity_probe(
    theta: RealTuple,
    include_pi_i: bool = False,
    height_bound: int = 10**6,
    precision_bits: Optional[int] = None,
    *,
    budget: int = ENUM_BUDGET,
) -> RegularityResult:
    """Hunt for an integer relation among the entries (pi*i appended for
    complex tuples, and for real ones when the flag is set).

    A found relation is verified: its enclosure straddles zero at full
    precision, and exactly when all entries are rational.  Absence of a
    relation is only a no-witness-up-to-budget verdict, never a
    regularity claim.
    """
    if height_bound < 1:
        raise InvalidConfig("height_bound must be >= 1")
    bits = max(128, precision_bits if precision_bits is not None else theta.precision_bits)
    append_pi = include_pi_i or theta.is_complex

    ctx, encl = theta.complex_enclosures(bits)
    entries = list(encl)
    if append_pi:
        entries.append(ComplexIV(ctx.pi * 0, +ctx.pi))
    n = len(entries)

    exact_entries = None
    if not append_pi:
        exact_entries = theta.exact_values()

    scale = mpmath.mpf(2) ** (bits // 2)
    scaled = []
    for z in entries:
        scaled.append(
            (
                int(mpmath.nint(mpmath.mpf(z.re.mid) * scale)),
                int(mpmath.nint(mpmath.mpf(z.im.mid) * scale)),
            )
        )
    basis = []
    for j in range(n):
        row = [0] * n + [scaled[j][0], scaled[j][1]]
        row[j] = 1
        basis.append(row)
    reduced = lll_reduce(basis)

    candidates = []
    for row in reduced:
        l = canonical_form(row[:n])
        if any(l) and max(abs(x) for x in l) <= height_bound:
            candidates.append(l)
    candidates.sort(key=lambda l: (max(abs(x) for x in l), l))

    found = None
    for l in candidates:
        plausible, exact = _relation_holds(ctx, entries, l, exact_entries)
        if plausible:
            found = (l, exact)
            break
    if found is None:
        return RegularityResult(
            "no_relation_found", None, append_pi, height_bound, bits, False, None
        )

    l0, exact0 = found
    h0 = max(abs(x) for x in l0)
    minimal = None
    if (2 * h0 + 1) ** n <= budget:
        best = None
        for l in _nonzero_box(n, h0):
            l = canonical_form(l)
            plausible, exact = _relation_holds(ctx, entries, l, exact_entries)
            if plausible:
                key = (max(abs(x) for x in l), l)
                if best is None or key < best[0]:
                    best = (key, l, exact)
        _, l0, exact0 = best
        minimal = True
    return RegularityResult(
        "relation_found", tuple(l0), append_pi, height_bound, bits, exact0, minimal
    )
