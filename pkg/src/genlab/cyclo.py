"""Exact arithmetic in cyclotomic fields and finite point sets built from it.

Point coordinates are elements of Q(zeta_n) represented as polynomial
residues modulo the n-th cyclotomic polynomial with Fraction coefficients.
That covers exact rationals (n = 1), Gaussian rationals (n = 4), and the
root-of-unity constructions used throughout the workbench, while keeping
every equality test exact.

The head-line operation is min_vanishing_degree: the smallest total degree
of a nonzero polynomial vanishing on a finite set, computed as a rank
deficiency of the exact evaluation matrix.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

IntPoly = list[int]
FracPoly = list[Fraction]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("order must be >= 1")
    # x^n - 1 divided by the product of all proper cyclotomic divisors
    poly: IntPoly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _int_poly_div_exact(num: IntPoly, den: IntPoly) -> IntPoly:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % den[-1] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[-1]
        out[k] = q
        if q:
            for i, dc in enumerate(den):
                num[k + i] -= q * dc
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _frac_poly_mod(poly: FracPoly, mod: Sequence[int]) -> FracPoly:
    deg = len(mod) - 1
    work = list(poly)
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            # mod is monic, so this stays exact
            for i in range(deg + 1):
                work[k - deg + i] -= c * mod[i]
    work = work[:deg]
    while len(work) < deg:
        work.append(Fraction(0))
    return work


def _frac_poly_divmod(a: FracPoly, b: FracPoly) -> tuple[FracPoly, FracPoly]:
    a = list(a)
    db = _poly_deg(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    da = _poly_deg(a)
    if da < db:
        return [Fraction(0)], a
    out = [Fraction(0)] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[k + db] / b[db]
        out[k] = c
        if c:
            for i in range(db + 1):
                a[k + i] -= c * b[i]
    return out, a


def _poly_deg(p: Sequence[Fraction]) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_mul_frac(a: FracPoly, b: FracPoly) -> FracPoly:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _zip_pad(a: FracPoly, b: FracPoly):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return zip(a, b)


class CycloNum:
    """An element of Q(zeta_order), immutable and hashable.

    Binary operations promote both sides into the compositum
    Q(zeta_lcm(orders)), so values of different orders mix freely.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable[Fraction | int]):
        mod = cyclotomic_polynomial(order)
        deg = len(mod) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _frac_poly_mod(cs, mod)
        while len(cs) < deg:
            cs.append(Fraction(0))
        self.order = order
        self.coeffs = tuple(cs)
        self._hash = None

    @staticmethod
    def from_rational(q: Fraction | int) -> "CycloNum":
        return CycloNum(1, [Fraction(q)])

    @staticmethod
    def root_of_unity(order: int, power: int = 1) -> "CycloNum":
        power %= order
        coeffs = [Fraction(0)] * (power + 1)
        coeffs[power] = Fraction(1)
        return CycloNum(order, coeffs)

    def promote(self, order: int) -> "CycloNum":
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError("can only promote to a multiple of the order")
        step = order // self.order
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1 or 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] += c
        return CycloNum(order, out)

    def _align(self, other: "CycloNum") -> tuple["CycloNum", "CycloNum"]:
        if self.order == other.order:
            return self, other
        m = lcm(self.order, other.order)
        return self.promote(m), other.promote(m)

    def _coerce(self, other) -> "CycloNum | None":
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        return CycloNum(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloNum(a.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        # extended Euclid in Q[x]: s*self + t*mod = 1
        r0, r1 = mod, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _poly_deg(r1) > 0:
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            qs1 = _poly_mul_frac(q, s1)
            s0, s1 = s1, [x - y for x, y in _zip_pad(s0, qs1)]
        c = r1[_poly_deg(r1)]
        inv = [x / c for x in s1]
        return CycloNum(self.order, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = CycloNum(base.order, [Fraction(1)])
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self._hash is None:
            # hash in a canonical order so equal values collide across orders
            if self.is_rational():
                h = hash(("cyclo", 1, (self.coeffs[0] if self.coeffs else Fraction(0),)))
            else:
                h = hash(("cyclo", self.order, self.coeffs))
            self._hash = h
        return self._hash

    def complex_value(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __repr__(self):
        if self.is_rational():
            return f"CycloNum({self.coeffs[0] if self.coeffs else 0})"
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"CycloNum(zeta{self.order}; [{terms}])"


ZERO = CycloNum.from_rational(0)
ONE = CycloNum.from_rational(1)

Point = tuple[CycloNum, ...]


def make_point(coords: Iterable) -> Point:
    out = []
    for c in coords:
        if isinstance(c, CycloNum):
            out.append(c)
        else:
            out.append(CycloNum.from_rational(c))
    return tuple(out)


def normalize_point_set(points: Iterable[Sequence]) -> list[Point]:
    """Points as CycloNum tuples over one common order, deduplicated.

    Order of first appearance is kept, so the result is deterministic.
    """
    pts = [make_point(p) for p in points]
    if not pts:
        return []
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("points have mixed dimensions")
    common = 1
    for p in pts:
        for c in p:
            common = lcm(common, c.order)
    promoted = [tuple(c.promote(common) for c in p) for p in pts]
    seen = set()
    out = []
    for p in promoted:
        key = tuple(c.coeffs for c in p)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def point_mul(p: Point, q: Point) -> Point:
    if len(p) != len(q):
        raise ValueError("dimension mismatch")
    return tuple(a * b for a, b in zip(p, q))


def char_value(exponents: Sequence[int], p: Point) -> CycloNum:
    """Value of the monomial character x -> prod x_i^{l_i} at a torus point."""
    if len(exponents) != len(p):
        raise ValueError("dimension mismatch")
    acc = ONE
    for e, c in zip(exponents, p):
        if e:
            acc = acc * (c ** e)
    return acc


def product_point_set(points: Sequence[Sequence], depth: int) -> list[Point]:
    """All products of `depth` factors drawn (with repetition) from the set."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    base = normalize_point_set(points)
    for p in base:
        if any(c.is_zero() for c in p):
            raise ValueError("points must lie in the torus (no zero coordinate)")
    current = {tuple(c.coeffs for c in p): p for p in base}
    for _ in range(depth - 1):
        nxt: dict = {}
        for p in current.values():
            for q in base:
                r = point_mul(p, q)
                nxt.setdefault(tuple(c.coeffs for c in r), r)
        current = nxt
    # deterministic order: sort by coefficient key
    return [current[k] for k in sorted(current.keys())]


def external_product_set(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[Point]:
    """Concatenation product {(p, q)} of two point sets."""
    pa = normalize_point_set(a)
    pb = normalize_point_set(b)
    return normalize_point_set([tuple(p) + tuple(q) for p in pa for q in pb])


def monomials_up_to(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples with entrywise >= 0 and total degree <= degree, lex order."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, nvars)
    out.sort()
    return out


def rank_field(rows: list[list]) -> int:
    """Rank by Gaussian elimination over any exact field (Fraction, CycloNum)."""
    if not rows:
        return 0
    w = [list(r) for r in rows]
    m, n = len(w), len(w[0])
    rank = 0
    for col in range(n):
        pivot = None
        for i in range(rank, m):
            v = w[i][col]
            if not (v.is_zero() if isinstance(v, CycloNum) else v == 0):
                pivot = i
                break
        if pivot is None:
            continue
        w[rank], w[pivot] = w[pivot], w[rank]
        pv = w[rank][col]
        w[rank] = [x / pv for x in w[rank]]
        for i in range(m):
            if i != rank:
                f = w[i][col]
                if not (f.is_zero() if isinstance(f, CycloNum) else f == 0):
                    w[i] = [x - f * y for x, y in zip(w[i], w[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def evaluation_matrix(points: Sequence[Point], degree: int) -> tuple[list[list], list[tuple[int, ...]]]:
    if not points:
        raise ValueError("empty point set")
    nvars = len(points[0])
    mons = monomials_up_to(nvars, degree)
    rows = []
    for p in points:
        # incremental powers per coordinate keep this from re-multiplying
        pows = []
        for c in p:
            cs = [ONE]
            for _ in range(degree):
                cs.append(cs[-1] * c)
            pows.append(cs)
        row = []
        for mon in mons:
            acc = ONE
            for i, e in enumerate(mon):
                if e:
                    acc = acc * pows[i][e]
            row.append(acc)
        rows.append(row)
    return rows, mons


def min_vanishing_degree(points: Sequence[Sequence], max_degree: int | None = None) -> int:
    """Smallest degree of a nonzero polynomial vanishing on the whole set.

    A degree L works iff the evaluation matrix (points x monomials of degree
    <= L) has a nontrivial kernel.  The search is exact and always terminates
    at or before L = number of distinct points.
    """
    pts = normalize_point_set(points)
    if not pts:
        raise ValueError("empty point set")
    cap = len(pts) if max_degree is None else max_degree
    for L in range(1, cap + 1):
        rows, mons = evaluation_matrix(pts, L)
        if rank_field(rows) < len(mons):
            return L
    if max_degree is None:
        # interpolation guarantees a kernel by L = len(pts); unreachable
        raise AssertionError("no vanishing degree found")
    raise ValueError(f"no vanishing polynomial of degree <= {max_degree}")


def kernel_polynomial(points: Sequence[Sequence], degree: int) -> dict[tuple[int, ...], Fraction] | None:
    """One nonzero polynomial of total degree <= degree vanishing on the set.

    Returns a dict monomial -> coefficient over the base field projected to
    Fractions when possible, or CycloNum coefficients otherwise; None when
    only the zero polynomial vanishes.
    """
    pts = normalize_point_set(points)
    rows, mons = evaluation_matrix(pts, degree)
    # find a kernel vector of the column space by eliminating and
    # back-substituting a free column
    m, n = len(rows), len(mons)
    w = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot = None
        for i in range(rank, m):
            if not w[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        w[rank], w[pivot] = w[pivot], w[rank]
        pv = w[rank][col]
        w[rank] = [x / pv for x in w[rank]]
        for i in range(m):
            if i != rank and not w[i][col].is_zero():
                f = w[i][col]
                w[i] = [x - f * y for x, y in zip(w[i], w[rank])]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    if rank == n:
        return None
    free = next(c for c in range(n) if c not in pivots)
    vec: list[CycloNum] = [ZERO] * n
    vec[free] = ONE
    for r, pc in enumerate(pivots):
        vec[pc] = -w[r][free]
    out = {}
    for mon, c in zip(mons, vec):
        if not c.is_zero():
            out[mon] = c.as_rational() if c.is_rational() else c
    return out
