"""Homogeneous polynomial algebra over Q(phi).

Forms are sparse maps from exponent tuples to FieldElement coefficients, in
graded lexicographic order (first variable largest).  The module provides
exact evaluation, products, interpolation through point sets by fraction-free
nullspace computation, divisibility, gcd by primitive pseudo-remainder
sequences, and a certifying smoothness test for plane curves built from
chart-wise resultants with randomized coordinate retries.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .field import FieldElement, ONE, ZERO

Exponents = Tuple[int, ...]
Coeffs = Dict[Exponents, FieldElement]


def monomials(degree: int, nvars: int) -> List[Exponents]:
    """All exponent tuples of the given total degree, graded-lex order."""
    out = [e for e in itertools.product(range(degree + 1), repeat=nvars)
           if sum(e) == degree]
    out.sort(reverse=True)
    return out


class HomForm:
    """A homogeneous form; zero coefficients are never stored."""

    __slots__ = ("nvars", "degree", "coeffs")

    def __init__(self, nvars: int, degree: int, coeffs: Coeffs):
        clean = {}
        for e, c in coeffs.items():
            if not isinstance(c, FieldElement):
                c = FieldElement(c)
            if c.is_zero():
                continue
            if len(e) != nvars or sum(e) != degree or min(e) < 0:
                raise ValueError(f"bad exponent tuple {e} for degree {degree}")
            clean[tuple(e)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HomForm is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "HomForm":
        return cls(nvars, degree, {})

    @classmethod
    def linear(cls, coeffs: Sequence[FieldElement]) -> "HomForm":
        n = len(coeffs)
        return cls(n, 1, {tuple(1 if j == i else 0 for j in range(n)): c
                          for i, c in enumerate(coeffs)})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "HomForm":
        return cls(nvars, 1, {tuple(1 if j == i else 0 for j in range(nvars)): ONE})

    # -- basic algebra ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomForm) and self.nvars == other.nvars
                and self.coeffs == other.coeffs
                and (self.degree == other.degree or self.is_zero() and other.is_zero()))

    def __hash__(self) -> int:
        return hash((self.nvars, self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other: "HomForm") -> "HomForm":
        self._check_compatible(other, same_degree=True)
        c = dict(self.coeffs)
        for e, v in other.coeffs.items():
            c[e] = c.get(e, ZERO) + v
        return HomForm(self.nvars, self.degree, c)

    def __sub__(self, other: "HomForm") -> "HomForm":
        return self + (-other)

    def __neg__(self) -> "HomForm":
        return HomForm(self.nvars, self.degree,
                       {e: -v for e, v in self.coeffs.items()})

    def scale(self, k: FieldElement) -> "HomForm":
        return HomForm(self.nvars, self.degree,
                       {e: v * k for e, v in self.coeffs.items()})

    def __mul__(self, other: "HomForm") -> "HomForm":
        self._check_compatible(other, same_degree=False)
        c: Coeffs = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c[e] = c.get(e, ZERO) + v1 * v2
        return HomForm(self.nvars, self.degree + other.degree, c)

    def _check_compatible(self, other: "HomForm", same_degree: bool) -> None:
        if self.nvars != other.nvars:
            raise ValueError("forms have different numbers of variables")
        if same_degree and self.degree != other.degree \
                and not (self.is_zero() or other.is_zero()):
            raise ValueError("forms have different degrees")

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        if len(point) != self.nvars:
            raise ValueError("point dimension does not match variable count")
        total = ZERO
        for e, c in self.coeffs.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def vanishes_at(self, point: Sequence[FieldElement]) -> bool:
        return self.evaluate(point).is_zero()

    def partial(self, var: int) -> "HomForm":
        c: Coeffs = {}
        for e, v in self.coeffs.items():
            if e[var] == 0:
                continue
            e2 = list(e)
            e2[var] -= 1
            c[tuple(e2)] = v * e[var]
        return HomForm(self.nvars, max(self.degree - 1, 0), c)

    def compose_linear(self, matrix: Sequence[Sequence[FieldElement]]) -> "HomForm":
        """Substitute x_i -> sum_j matrix[i][j] * x_j (pullback along the map)."""
        n = self.nvars
        lin = [HomForm.linear(list(matrix[i])) for i in range(n)]
        result = HomForm.zero(n, self.degree)
        for e, c in self.coeffs.items():
            term = HomForm(n, 0, {(0,) * n: c})
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * lin[i]
            result = result + term
        return result

    def monic(self) -> "HomForm":
        """Scale so the graded-lex leading coefficient equals 1."""
        if self.is_zero():
            return self
        lead = max(self.coeffs)
        return self.scale(self.coeffs[lead].inverse())

    def integral(self) -> "HomForm":
        """Scale to coprime Z[phi] coefficients (fast exact elimination)."""
        if self.is_zero():
            return self
        denoms = [f.denominator for c in self.coeffs.values() for f in (c.a, c.b)]
        scale = lcm(*denoms)
        ints = [int(f * scale) for c in self.coeffs.values() for f in (c.a, c.b)]
        content = gcd(*ints)
        return self.scale(FieldElement(Fraction(scale, content)))

    def leading(self) -> Tuple[Exponents, FieldElement]:
        e = max(self.coeffs)
        return e, self.coeffs[e]

    def __repr__(self) -> str:
        if self.is_zero():
            return "HomForm(0)"
        names = "xyzw"[: self.nvars] if self.nvars <= 4 else None
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i]
                            for i, k in enumerate(e) if k) or "1"
            parts.append(f"({self.coeffs[e]})*{mono}")
        return " + ".join(parts)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "degree": self.degree,
            "terms": [{"exponents": list(e), "coeff": c.to_json()}
                      for e, c in sorted(self.coeffs.items(), reverse=True)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HomForm":
        return cls(obj["nvars"], obj["degree"],
                   {tuple(t["exponents"]): FieldElement.from_json(t["coeff"])
                    for t in obj["terms"]})


# ---------------------------------------------------------------------------
# Interpolation
# ---------------------------------------------------------------------------

def vanishing_space(points: Iterable[Sequence[FieldElement]], degree: int,
                    nvars: int) -> List[HomForm]:
    """Basis of the degree-d forms vanishing at every given point.

    Rows are point evaluations, columns the graded-lex monomials; the exact
    nullspace comes from fraction-free elimination.  Basis forms are
    normalized so the first nonzero coefficient (in column order) is 1.
    """
    cols = monomials(degree, nvars)
    rows = []
    for p in points:
        if len(p) != nvars:
            raise ValueError("point dimension does not match variable count")
        row = []
        for e in cols:
            term = ONE
            for x, k in zip(p, e):
                if k:
                    term = term * x ** k
            row.append(term)
        rows.append(row)
    if not rows:
        return [HomForm(nvars, degree, {cols[j]: ONE}) for j in range(len(cols))]
    basis = []
    for vec in linalg.nullspace(rows):
        lead = next(i for i, c in enumerate(vec) if not c.is_zero())
        inv = vec[lead].inverse()
        basis.append(HomForm(nvars, degree,
                             {cols[j]: vec[j] * inv for j in range(len(cols))}))
    return basis


# ---------------------------------------------------------------------------
# Divisibility
# ---------------------------------------------------------------------------

def try_quotient(f: HomForm, g: HomForm) -> Optional[HomForm]:
    """The exact quotient q with g = f*q, or None if f does not divide g."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if g.is_zero():
        return HomForm.zero(f.nvars, 0)
    if f.nvars != g.nvars:
        raise ValueError("forms have different numbers of variables")
    if g.degree < f.degree:
        return None
    q = _poly_try_quotient(dict(g.coeffs), dict(f.coeffs))
    if q is None:
        return None
    return HomForm(f.nvars, g.degree - f.degree, q)


def divides(f: HomForm, g: HomForm) -> bool:
    return try_quotient(f, g) is not None


def gcd_forms(f: HomForm, g: HomForm) -> HomForm:
    """A gcd of two homogeneous forms, normalized to leading coefficient 1.

    Common powers of the last variable split off first; the remaining parts
    dehomogenize in the last variable, so the work happens one variable down
    via a primitive pseudo-remainder sequence.
    """
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero forms")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.nvars != g.nvars:
        raise ValueError("forms have different numbers of variables")
    n = f.nvars
    if n == 1:
        return HomForm(1, min(f.degree, g.degree),
                       {(min(f.degree, g.degree),): ONE})
    kf = min(e[-1] for e in f.coeffs)
    kg = min(e[-1] for e in g.coeffs)
    pf = _dehomogenize_last(f)
    pg = _dehomogenize_last(g)
    h = _poly_gcd(pf, pg, n - 1)
    hdeg = _poly_total_degree(h)
    k = min(kf, kg)
    coeffs: Coeffs = {}
    for e, c in h.items():
        coeffs[tuple(e) + (hdeg - sum(e) + k,)] = c
    return HomForm(n, hdeg + k, coeffs).monic()


def _dehomogenize_last(form: HomForm) -> "Poly":
    """Set the last variable to 1; for homogeneous input this is lossless."""
    return {tuple(e[:-1]): c for e, c in form.coeffs.items()}


# ---------------------------------------------------------------------------
# Internal sparse polynomial helpers (not necessarily homogeneous)
# ---------------------------------------------------------------------------

Poly = Dict[Exponents, FieldElement]


def _poly_total_degree(p: Poly) -> int:
    return max((sum(e) for e in p), default=0)


def _poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(e, ZERO) + c1 * c2
            if v.is_zero():
                out.pop(e, None)
            else:
                out[e] = v
    return out


def _poly_sub(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, ZERO) - c
        if v.is_zero():
            out.pop(e, None)
        else:
            out[e] = v
    return out


def _poly_scale(p: Poly, k: FieldElement) -> Poly:
    if k.is_zero():
        return {}
    return {e: c * k for e, c in p.items()}


def _poly_try_quotient(g: Poly, f: Poly) -> Optional[Poly]:
    """Quotient by a single divisor under graded-lex; None when not exact."""
    lead_f = max(f, key=_grlex_key)
    lf = f[lead_f]
    q: Poly = {}
    r = dict(g)
    while r:
        lead_r = max(r, key=_grlex_key)
        e = tuple(a - b for a, b in zip(lead_r, lead_f))
        if min(e) < 0:
            return None
        c = r[lead_r] / lf
        q[e] = c
        r = _poly_sub(r, _poly_mul({e: c}, f))
    return q


def _grlex_key(e: Exponents) -> Tuple[int, Exponents]:
    return (sum(e), e)


def _deg_in(p: Poly, var: int) -> int:
    return max((e[var] for e in p), default=0)


def _coeffs_in(p: Poly, var: int) -> Dict[int, Poly]:
    """Split p by powers of one variable; coefficient polys drop that power."""
    out: Dict[int, Poly] = {}
    for e, c in p.items():
        k = e[var]
        e2 = list(e)
        e2[var] = 0
        out.setdefault(k, {})[tuple(e2)] = c
    return out


def _poly_gcd(p: Poly, q: Poly, n: int) -> Poly:
    """Gcd over Q(phi)[x_1..x_n] via primitive PRS; result is normalized."""
    if not p:
        return _poly_normalize(q)
    if not q:
        return _poly_normalize(p)
    var = n - 1
    while var >= 0 and _deg_in(p, var) == 0 and _deg_in(q, var) == 0:
        var -= 1
    if var < 0:
        return {tuple([0] * len(next(iter(p)))): ONE}
    dp, dq = _deg_in(p, var), _deg_in(q, var)
    if dp == 0 or dq == 0:
        # One input misses the principal variable: it can only share the
        # other's content.
        flat, layered = (p, q) if dp == 0 else (q, p)
        cont = _content(layered, var)
        return _poly_gcd(flat, cont, n)
    cont_p = _content(p, var)
    cont_q = _content(q, var)
    c = _poly_gcd(cont_p, cont_q, n)
    a = _poly_exact_div(p, cont_p)
    b = _poly_exact_div(q, cont_q)
    if _deg_in(a, var) < _deg_in(b, var):
        a, b = b, a
    while True:
        r = _prem(a, b, var)
        if not r:
            g = b
            break
        if _deg_in(r, var) == 0:
            g = {tuple([0] * len(next(iter(p)))): ONE}
            break
        a, b = b, _poly_exact_div(r, _content(r, var))
    g = _poly_exact_div(g, _content(g, var))
    return _poly_normalize(_poly_mul(c, g))


def _content(p: Poly, var: int) -> Poly:
    n = len(next(iter(p)))
    cont: Poly = {}
    for coeff in _coeffs_in(p, var).values():
        cont = _poly_gcd(cont, coeff, n) if cont else _poly_normalize(coeff)
        if cont == {tuple([0] * n): ONE}:
            break
    return cont


def _poly_exact_div(p: Poly, d: Poly) -> Poly:
    q = _poly_try_quotient(p, d)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


def _poly_normalize(p: Poly) -> Poly:
    if not p:
        return p
    lead = max(p, key=_grlex_key)
    return _poly_scale(p, p[lead].inverse())


def _prem(a: Poly, b: Poly, var: int) -> Poly:
    """Pseudo-remainder of a by b with respect to one variable."""
    db = _deg_in(b, var)
    lb = _coeffs_in(b, var)[db]
    r = dict(a)
    while r and _deg_in(r, var) >= db:
        dr = _deg_in(r, var)
        lr = _coeffs_in(r, var)[dr]
        # r <- lb*r - lr*x^(dr-db)*b
        mono = {tuple((dr - db) if i == var else 0
                      for i in range(len(next(iter(r))))): ONE}
        r = _poly_sub(_poly_mul(lb, r), _poly_mul(_poly_mul(lr, mono), b))
    return r


# ---------------------------------------------------------------------------
# Univariate helpers over the field
# ---------------------------------------------------------------------------

def _upoly_trim(p: List[FieldElement]) -> List[FieldElement]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _upoly_clear(p: List[FieldElement]) -> List[FieldElement]:
    """Scale to coprime Z[phi] coefficients; keeps elimination fraction-free."""
    denoms = [f.denominator for c in p for f in (c.a, c.b)]
    scale = lcm(*denoms)
    ints = [int(f * scale) for c in p for f in (c.a, c.b)]
    content = gcd(*ints)
    k = FieldElement(Fraction(scale, content))
    return [c * k for c in p]


def _upoly_gcd(a: List[FieldElement], b: List[FieldElement]) -> List[FieldElement]:
    """Monic gcd via the subresultant pseudo-remainder sequence.

    Plain Euclid over Q(phi) suffers exponential coefficient growth on the
    large eliminants this module produces; the subresultant scheme divides
    each pseudo-remainder by a predicted factor, keeping growth linear.
    """
    a, b = _upoly_trim(list(a)), _upoly_trim(list(b))
    if not a or not b:
        g = a or b
        if not g:
            return []
    else:
        a, b = _upoly_clear(a), _upoly_clear(b)
        if len(a) < len(b):
            a, b = b, a
        lead = ONE
        h = ONE
        while True:
            d = len(a) - len(b)
            r = _upoly_trim(_upoly_prem(a, b))
            if not r:
                g = b
                break
            if len(r) == 1:
                g = [ONE]
                break
            denom = lead * h ** d
            a, b = b, [c / denom for c in r]
            lead = a[-1]
            if d == 1:
                h = lead
            elif d > 1:
                h = lead ** d / h ** (d - 1)
    inv = g[-1].inverse()
    return [c * inv for c in g]


def _upoly_prem(a: List[FieldElement], b: List[FieldElement]) -> List[FieldElement]:
    """Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        lr = r[-1]
        r = [c * lb for c in r]
        for i in range(db + 1):
            r[dr - db + i] = r[dr - db + i] - lr * b[i]
        _upoly_trim(r)
        e -= 1
    if e > 0:
        k = lb ** e
        r = [c * k for c in r]
    return r


def _upoly_eval(p: List[FieldElement], x: FieldElement) -> FieldElement:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _lagrange(samples: List[Tuple[FieldElement, FieldElement]]) -> List[FieldElement]:
    """Interpolating polynomial through (x, y) samples, as a coefficient list."""
    result = [ZERO] * len(samples)
    for i, (xi, yi) in enumerate(samples):
        if yi.is_zero():
            continue
        num = [ONE]
        denom = ONE
        for j, (xj, _) in enumerate(samples):
            if j == i:
                continue
            # num *= (x - xj)
            num = [ZERO] + num
            for k in range(len(num) - 1):
                num[k] = num[k] - xj * num[k + 1]
            denom = denom * (xi - xj)
        scale = yi / denom
        for k, c in enumerate(num):
            result[k] = result[k] + c * scale
    return _upoly_trim(result)


def _resultant_eliminating(u: Poly, v: Poly, elim: int, keep: int) -> List[FieldElement]:
    """Res_elim(u, v) as a univariate coefficient list in the kept variable.

    Computed by evaluation at sample values of the kept variable followed by
    exact Lagrange interpolation; evaluation commutes with the Sylvester
    determinant, so leading-coefficient degeneration needs no special case.
    """
    m, n = _deg_in(u, elim), _deg_in(v, elim)
    cu = {k: _as_univariate(c, keep) for k, c in _coeffs_in(u, elim).items()}
    cv = {k: _as_univariate(c, keep) for k, c in _coeffs_in(v, elim).items()}
    if m == 0 and n == 0:
        return [ONE]  # both constant in the eliminated variable; by convention
    if m == 0:
        base = cu[0]
        out = [ONE]
        for _ in range(n):
            out = _upoly_trim([
                sum((base[j] * out[k - j] for j in range(len(base))
                     if 0 <= k - j < len(out)), ZERO)
                for k in range(len(base) + len(out) - 1)])
        return out
    if n == 0:
        return _resultant_eliminating(v, u, elim, keep)
    du = max((len(p) - 1 for p in cu.values()), default=0)
    dv = max((len(p) - 1 for p in cv.values()), default=0)
    bound = m * dv + n * du
    samples = []
    x0 = 0
    while len(samples) < bound + 1:
        x = FieldElement(x0)
        x0 = -x0 + (0 if x0 > 0 else 1)  # 0, 1, -1, 2, -2, ...
        row_u = [_upoly_eval(cu.get(k, [ZERO]), x) for k in range(m + 1)]
        row_v = [_upoly_eval(cv.get(k, [ZERO]), x) for k in range(n + 1)]
        size = m + n
        syl = [[ZERO] * size for _ in range(size)]
        for i in range(n):
            for k in range(m + 1):
                syl[i][i + m - k] = row_u[k]
        for i in range(m):
            for k in range(n + 1):
                syl[n + i][i + n - k] = row_v[k]
        samples.append((x, linalg.determinant(syl)))
    return _lagrange(samples)


def _as_univariate(p: Poly, var: int) -> List[FieldElement]:
    out = [ZERO] * (_deg_in(p, var) + 1)
    for e, c in p.items():
        if any(k and i != var for i, k in enumerate(e)):
            raise ValueError("polynomial is not univariate in the kept variable")
        out[e[var]] = c
    return _upoly_trim(out) or [ZERO]


# ---------------------------------------------------------------------------
# Smoothness certificate for plane curves
# ---------------------------------------------------------------------------

class SmoothnessIndeterminate(RuntimeError):
    """Raised when the retry budget ends without a certificate either way."""


@dataclass(frozen=True)
class SmoothnessReport:
    smooth: bool
    reason: str
    witness: Optional[str] = None
    chart_trail: Tuple[str, ...] = ()


def plane_curve_is_smooth(f: HomForm, max_retries: int = 8,
                          seed: int = 0) -> SmoothnessReport:
    """Certify that a plane curve has no singular point over the closure.

    Per chart, a singular point is a common zero of two partials and the
    curve itself (the Euler relation supplies the third partial).  Two
    resultants eliminate one chart variable; a constant gcd of the two
    eliminants certifies the chart clean.  Degenerate or suspicious charts
    trigger a random coordinate change and retry.  Never returns a false
    certificate; exhausting retries raises SmoothnessIndeterminate.
    """
    if f.nvars != 3 or f.is_zero():
        raise ValueError("expected a nonzero form in 3 variables")
    if f.degree == 1:
        return SmoothnessReport(True, "a line is smooth")
    f = f.integral()
    partials = [f.partial(i) for i in range(3)]
    for i, p in enumerate(partials):
        if p.is_zero():
            pt = ["[1:0:0]", "[0:1:0]", "[0:0:1]"][i]
            return SmoothnessReport(False, "form misses a variable",
                                    witness=f"singular at {pt}")
    rng = random.Random(seed)
    for attempt in range(max_retries):
        if attempt == 0:
            fa = f
        else:
            fa = f.compose_linear(_random_invertible(rng, 3)).integral()
        if attempt == 1:
            # A clean first pass never reaches this; before retrying, rule
            # out the one obstruction no coordinate change can fix.
            g = gcd_forms(gcd_forms(partials[0], partials[1]), partials[2])
            if g.degree > 0:
                return SmoothnessReport(False, "partials share a component",
                                        witness=repr(g))
        trail = []
        clean = True
        for chart in range(3):
            keep, elim = [(1, 2), (0, 2), (0, 1)][chart]
            u = _chart_poly(fa.partial(keep), chart)
            v = _chart_poly(fa.partial(elim), chart)
            w = _chart_poly(fa, chart)
            r1 = _resultant_eliminating(u, v, elim=_chart_var(elim, chart),
                                        keep=_chart_var(keep, chart))
            r2 = _resultant_eliminating(u, w, elim=_chart_var(elim, chart),
                                        keep=_chart_var(keep, chart))
            if r1 == [] or r2 == []:
                clean = False
                trail.append(f"chart {chart}: degenerate eliminant")
                break
            s = _upoly_gcd(r1, r2)
            if len(s) - 1 > 0:
                clean = False
                trail.append(f"chart {chart}: eliminants share roots (deg {len(s)-1})")
                break
            trail.append(f"chart {chart}: clean")
        if clean:
            return SmoothnessReport(True, f"certified on attempt {attempt}",
                                    chart_trail=tuple(trail))
    raise SmoothnessIndeterminate(
        f"no certificate after {max_retries} coordinate changes: {trail}")


def _chart_poly(f: HomForm, chart: int) -> Poly:
    """Dehomogenize by setting the chart variable to 1 (two variables remain)."""
    out: Poly = {}
    for e, c in f.coeffs.items():
        e2 = tuple(k for i, k in enumerate(e) if i != chart)
        out[e2] = out.get(e2, ZERO) + c
    return {e: c for e, c in out.items() if not c.is_zero()}


def _chart_var(var: int, chart: int) -> int:
    """Index of a projective variable inside the chart's 2-variable tuple."""
    return var if var < chart else var - 1


def _random_invertible(rng: random.Random, n: int) -> List[List[FieldElement]]:
    while True:
        m = [[FieldElement(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        if not linalg.determinant(m).is_zero():
            return m
