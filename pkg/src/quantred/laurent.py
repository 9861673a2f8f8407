"""One-variable formal Laurent series with cohomology-class coefficients,
in one of three expansion charts on the Riemann sphere:

* ``t -> 0``    series in t itself, on the punctured disk inside the circle;
* ``t -> inf``  series in w = 1/t, outside the circle;
* ``t = zeta*e^u``  series in u around a root of unity zeta (zeta = 1 allowed).

The chart at a root of unity uses t = zeta*e^u so that dt/t = du: the
residue of f(t) dt/t at t = zeta is literally the u^{-1} coefficient, with
no stray factors of i.  At infinity, t = 1/w gives dt/t = -dw/w, so that
residue is minus the w^0 coefficient.  At zero it is the t^0 coefficient.

Coefficients are :class:`~quantred.cohomology.CohomologyClass` values whose
scalars are rational in the 0/inf charts and cyclotomic at nontrivial roots
of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cohomology import CohomologyClass, RingPresentation, todd_coefficients
from .exactnum import Cyclotomic, root_of_unity


class TruncationError(ArithmeticError):
    """A coefficient beyond the series' truncation order was requested."""


class ChartMismatch(ValueError):
    """Series from different charts (or presentations) were combined."""


@dataclass(frozen=True)
class Chart:
    """Where, and in which local coordinate, a series is expanded.

    ``kind`` is one of ``"zero"``, ``"inf"``, ``"root"``.  For ``"root"``,
    the expansion point is zeta_conductor**exponent (exponent 0 means t = 1,
    where all scalars stay rational).
    """

    kind: str
    conductor: int = 1
    exponent: int = 0

    @classmethod
    def at_zero(cls) -> "Chart":
        return cls("zero")

    @classmethod
    def at_infinity(cls) -> "Chart":
        return cls("inf")

    @classmethod
    def at_root(cls, conductor: int, exponent: int) -> "Chart":
        if conductor < 1:
            raise ValueError("conductor must be positive")
        return cls("root", conductor, exponent % conductor)

    @classmethod
    def at_one(cls) -> "Chart":
        return cls("root", 1, 0)

    def zeta_power(self, r: int):
        """zeta**r as an exact scalar (Fraction fast path at zeta = 1)."""
        if self.kind != "root":
            raise ValueError("zeta_power only makes sense at a root chart")
        k = (self.exponent * r) % self.conductor
        if k == 0:
            return Fraction(1)
        return root_of_unity(self.conductor, k)

    def is_wall_for(self, beta: int) -> bool:
        """Whether zeta**beta == 1, i.e. the factor with weight beta has a
        pole at this chart's base point."""
        if self.kind != "root":
            return False
        return (self.exponent * beta) % self.conductor == 0

    @property
    def variable(self) -> str:
        return {"zero": "t", "inf": "w", "root": "u"}[self.kind]


class RingSeries:
    """Finite window of a Laurent expansion: coefficients for exponents
    ``low .. order`` inclusive; anything above ``order`` is unknown, anything
    below ``low`` is exactly zero."""

    __slots__ = ("chart", "presentation", "low", "coeffs")

    def __init__(self, chart: Chart, presentation: RingPresentation, low: int, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("series window must be nonempty")
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "presentation", presentation)
        object.__setattr__(self, "low", int(low))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *args):
        raise AttributeError("series are immutable")

    @property
    def order(self) -> int:
        """Highest exponent whose coefficient is defined."""
        return self.low + len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> CohomologyClass:
        if exponent > self.order:
            raise TruncationError(
                f"coefficient of {self.chart.variable}^{exponent} lies beyond "
                f"the truncation order {self.order}"
            )
        if exponent < self.low:
            return self.presentation.zero()
        return self.coeffs[exponent - self.low]

    def _check(self, other: "RingSeries"):
        if self.chart != other.chart:
            raise ChartMismatch("series expanded in different charts")
        if self.presentation != other.presentation:
            raise ChartMismatch("series over different ring presentations")

    def __add__(self, other: "RingSeries") -> "RingSeries":
        self._check(other)
        low = min(self.low, other.low)
        order = min(self.order, other.order)
        if order < low:
            raise TruncationError("sum has an empty window of validity")
        return RingSeries(
            self.chart,
            self.presentation,
            low,
            [self.coefficient(n) + other.coefficient(n) for n in range(low, order + 1)],
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, CohomologyClass)):
            return RingSeries(
                self.chart, self.presentation, self.low,
                [c * other for c in self.coeffs],
            )
        self._check(other)
        low = self.low + other.low
        order = min(self.order + other.low, other.order + self.low)
        if order < low:
            raise TruncationError("product has an empty window of validity")
        out = [self.presentation.zero() for _ in range(order - low + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            e1 = self.low + i
            for j, b in enumerate(other.coeffs):
                e = e1 + other.low + j
                if e > order:
                    break
                if b.is_zero():
                    continue
                out[e - low] = out[e - low] + a * b
        return RingSeries(self.chart, self.presentation, low, out)

    __rmul__ = __mul__

    def shifted(self, n: int) -> "RingSeries":
        """Multiply by variable**n (exact reindexing)."""
        return RingSeries(self.chart, self.presentation, self.low + n, self.coeffs)

    def truncated(self, order: int) -> "RingSeries":
        if order < self.low:
            raise TruncationError("cannot truncate below the lowest exponent")
        if order >= self.order:
            return self
        return RingSeries(
            self.chart, self.presentation, self.low,
            self.coeffs[: order - self.low + 1],
        )

    def reciprocal(self) -> "RingSeries":
        """Inverse series, defined when the leading (lowest) coefficient has
        an invertible constant term.  The window length is preserved."""
        lead = self.coeffs[0]
        lead_inv = lead.inverse()  # raises if the scalar part vanishes
        n_terms = len(self.coeffs)
        inv = [lead_inv]
        for n in range(1, n_terms):
            acc = self.presentation.zero()
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * inv[n - k]
            inv.append(-(lead_inv * acc))
        return RingSeries(self.chart, self.presentation, -self.low, inv)

    def map_coefficients(self, fn) -> "RingSeries":
        return RingSeries(self.chart, self.presentation, self.low, [fn(c) for c in self.coeffs])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __repr__(self):
        var = self.chart.variable
        parts = [
            f"({c!r})*{var}^{self.low + i}"
            for i, c in enumerate(self.coeffs)
            if not c.is_zero()
        ]
        body = " + ".join(parts) if parts else "0"
        return f"<series {body} + O({var}^{self.order + 1})>"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def series_constant(chart, presentation, value: CohomologyClass, order: int) -> RingSeries:
    coeffs = [value] + [presentation.zero()] * order
    return RingSeries(chart, presentation, 0, coeffs)


def series_one(chart, presentation, order: int) -> RingSeries:
    return series_constant(chart, presentation, presentation.one(), order)


def scalar_exp_series(chart, presentation, rate, order: int) -> RingSeries:
    """exp(rate * var) as a power series with constant ring coefficients."""
    coeffs = []
    term = Fraction(1)
    for n in range(order + 1):
        coeffs.append(presentation.constant(term))
        term = term * rate / (n + 1)
    return RingSeries(chart, presentation, 0, coeffs)


def laurent_polynomial_series(poly, chart, presentation, order: int) -> RingSeries:
    """A finite Laurent polynomial sum a_r t**r rewritten in the chart.

    * at 0:        t**r is the monomial t**r;
    * at infinity: t**r is w**(-r);
    * at a root:   t**r = zeta**r * exp(r*u), a power series in u.
    """
    poly = {int(r): v for r, v in dict(poly).items() if v}
    if not poly:
        return series_constant(chart, presentation, presentation.zero(), order)
    if chart.kind in ("zero", "inf"):
        sign = 1 if chart.kind == "zero" else -1
        exps = [sign * r for r in poly]
        low = min(exps)
        # a finite polynomial is exactly zero above its top exponent, so the
        # window can extend to any requested order
        top = max(max(exps), order)
        coeffs = [presentation.zero() for _ in range(top - low + 1)]
        for r, v in poly.items():
            coeffs[sign * r - low] = presentation.constant(v)
        return RingSeries(chart, presentation, low, coeffs)
    out = None
    for r, v in poly.items():
        piece = scalar_exp_series(chart, presentation, Fraction(r), order)
        piece = piece * (presentation.constant(chart.zeta_power(r) * v))
        out = piece if out is None else out + piece
    return out


def t_power_series(mu: int, chart, presentation, order: int) -> RingSeries:
    """The function t**mu written in the chart."""
    return laurent_polynomial_series({mu: Fraction(1)}, chart, presentation, order)


# ---------------------------------------------------------------------------
# the Lefschetz denominator factor 1 / (1 - t**(-beta) * exp(-c))
# ---------------------------------------------------------------------------

def _geometric_factor(beta, c, chart, order):
    """Expansion of 1/(1 - t**(-beta) e^{-c}) in the 0 or inf chart.

    Writing var for the chart variable, t**(-beta) is var**e with e = -beta
    at zero and e = +beta at infinity.  For e > 0 the factor tends to 1 at
    the center and the plain geometric series applies; for e < 0 we flip
    first:  1/(1 - var**(-m) X) = -var**m X^{-1} / (1 - var**m X^{-1}).
    """
    pres = c.presentation
    e = -beta if chart.kind == "zero" else beta
    if e > 0:
        exp_neg_c = (-c).exp()
        coeffs = [pres.zero() for _ in range(order + 1)]
        power = pres.one()
        n = 0
        while n * e <= order:
            coeffs[n * e] = power
            power = power * exp_neg_c
            n += 1
        return RingSeries(chart, pres, 0, coeffs)
    m = -e
    if order < m:
        raise TruncationError("truncation order too small for a flipped factor")
    exp_c = c.exp()
    coeffs = [pres.zero() for _ in range(order - m + 1)]
    power = pres.one()
    n = 1
    while n * m <= order:
        power = power * exp_c
        coeffs[n * m - m] = -power
        n += 1
    return RingSeries(chart, pres, m, coeffs)


def _root_factor(beta, c, chart, order):
    pres = c.presentation
    if chart.is_wall_for(beta):
        # zeta**beta = 1: the factor is 1/(1 - e^{-(beta*u + c)}).  Write
        # v = beta*u + c; then the factor is Td(v)/v with Td(x) = x/(1-e^{-x}).
        # 1/v = sum_k (-1)^k c^k beta^{-k-1} u^{-k-1}, finite by nilpotency.
        inv_coeffs = []
        c_power = pres.one()
        b = Fraction(1, beta)
        b_power = b
        while True:
            sign = -1 if len(inv_coeffs) % 2 else 1
            inv_coeffs.append(c_power * b_power * sign)
            c_power = c_power * c
            b_power = b_power * b
            if c_power.is_zero():
                break
        depth = len(inv_coeffs)  # pole order of 1/v
        inv_coeffs.reverse()  # now ascending exponents -depth .. -1
        inv_v = RingSeries(
            chart, pres, -depth,
            inv_coeffs + [pres.zero()] * (order + depth + 1),
        )
        # Td(beta*u + c) as a power series in u, to order + depth so the
        # product with 1/v stays valid through the requested order
        td_order = order + depth
        max_j = td_order + pres.nilpotency_bound + 1
        td = todd_coefficients(max_j)
        acc = [pres.zero() for _ in range(td_order + 1)]
        # power = (beta*u + c)^j maintained as a list of u-coefficients
        power = [pres.one()]
        for j in range(max_j + 1):
            if td[j]:
                for i, cls in enumerate(power):
                    if i <= td_order and not cls.is_zero():
                        acc[i] = acc[i] + cls * td[j]
            new_len = min(len(power) + 1, td_order + 1)
            new_power = [pres.zero() for _ in range(new_len)]
            for i, cls in enumerate(power):
                if cls.is_zero():
                    continue
                up = cls * c
                if i < new_len and not up.is_zero():
                    new_power[i] = new_power[i] + up
                if i + 1 < new_len:
                    new_power[i + 1] = new_power[i + 1] + cls * beta
            power = new_power
            if all(p.is_zero() for p in power):
                break
        td_series = RingSeries(chart, pres, 0, acc)
        return (inv_v * td_series).truncated(order)
    # regular point: invert the power series 1 - zeta**(-beta) e^{-beta u} e^{-c}
    z = chart.zeta_power(-beta)
    exp_neg_c = (-c).exp()
    coeffs = []
    rate = Fraction(1)
    for n in range(order + 1):
        scalar_term = z * rate  # zeta^{-beta} * (-beta)^n / n!
        cls = exp_neg_c * scalar_term
        if n == 0:
            cls = pres.one() - cls
        else:
            cls = -cls
        coeffs.append(cls)
        rate = rate * (-beta) / (n + 1)
    return RingSeries(chart, pres, 0, coeffs).reciprocal()


def expand_lefschetz_factor(beta: int, c: CohomologyClass, chart: Chart, order: int) -> RingSeries:
    """Series of 1/(1 - t**(-beta) * exp(-c)) in the given chart.

    ``c`` is the first Chern class of one normal line direction (nilpotent);
    ``beta`` the integer weight of the circle action on it.  At a root chart
    where zeta**beta = 1 the result has a pole: the scalar part is a simple
    pole in u and nilpotent corrections deepen it by at most the ring's
    nilpotency bound.
    """
    if beta == 0:
        raise ValueError("zero weight")
    if not c.is_nilpotent():
        raise ValueError("Chern class must have zero constant term")
    if chart.kind == "root":
        return _root_factor(beta, c, chart, order)
    return _geometric_factor(beta, c, chart, order)


def lefschetz_denominator(beta: int, c: CohomologyClass, chart: Chart, order: int) -> RingSeries:
    """The finite expression 1 - t**(-beta) exp(-c) itself, written in the
    chart.  Mostly useful for checking factor * denominator == 1."""
    if beta == 0:
        raise ValueError("zero weight")
    pres = c.presentation
    exp_neg_c = (-c).exp()
    if chart.kind in ("zero", "inf"):
        s = 1 if chart.kind == "zero" else -1
        m = -s * beta
        low = min(0, m)
        coeffs = [pres.zero() for _ in range(max(0, m) - low + 1)]
        coeffs[0 - low] = coeffs[0 - low] + pres.one()
        coeffs[m - low] = coeffs[m - low] - exp_neg_c
        coeffs += [pres.zero()] * order
        return RingSeries(chart, pres, low, coeffs)
    z = chart.zeta_power(-beta)
    coeffs = []
    rate = Fraction(1)
    for n in range(order + 1):
        cls = exp_neg_c * (z * rate)
        coeffs.append((pres.one() - cls) if n == 0 else -cls)
        rate = rate * (-beta) / (n + 1)
    return RingSeries(chart, pres, 0, coeffs)


# ---------------------------------------------------------------------------
# residues
# ---------------------------------------------------------------------------

def residue(series: RingSeries) -> CohomologyClass:
    """Residue of (series) * dt/t at the chart's base point.

    * root chart:  dt/t = du, so this is the u^{-1} coefficient;
    * zero chart:  the t^0 coefficient;
    * infinity:    dt/t = -dw/w, so minus the w^0 coefficient.
    """
    kind = series.chart.kind
    if kind == "root":
        return series.coefficient(-1)
    if kind == "zero":
        return series.coefficient(0)
    return -series.coefficient(0)


def series_product(a: RingSeries, b: RingSeries) -> RingSeries:
    """Cauchy product; windows combine to the weakest common validity."""
    return a * b
