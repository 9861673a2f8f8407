"""Truncated nilpotent rings standing in for the even cohomology of a
fixed component, with an integration functional.

A :class:`RingPresentation` is Q[x_1..x_r]/(x_g^{m_g}) together with the
real dimension of the component (``top_degree``) and a table assigning a
rational number to each top-degree monomial: the pushforward to a point.
Every generator sits in degree 2, so a monomial with exponent vector ``e``
has degree ``2*sum(e)``.

A point is the empty presentation: no generators, top degree 0, and the
empty monomial integrating to 1.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian

from .exactnum import Cyclotomic


class PresentationMismatch(ValueError):
    """Two classes from different presentations were combined."""


def _as_scalar(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, Cyclotomic)):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


class RingPresentation:
    """Shared, immutable description of one component's cohomology ring."""

    __slots__ = ("generators", "orders", "top_degree", "_integrals")

    def __init__(self, generators, orders, top_degree, integrals):
        generators = tuple(generators)
        orders = tuple(int(m) for m in orders)
        if len(generators) != len(orders):
            raise ValueError("one nilpotency order per generator")
        if any(m < 1 for m in orders):
            raise ValueError("nilpotency orders must be >= 1")
        if top_degree < 0 or top_degree % 2:
            raise ValueError("top_degree must be a nonnegative even integer")
        table = {}
        for expo, value in dict(integrals).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != len(generators):
                raise ValueError(f"exponent vector {expo} has wrong length")
            if any(e < 0 or e >= m for e, m in zip(expo, orders)):
                raise ValueError(f"exponent vector {expo} exceeds nilpotency")
            if 2 * sum(expo) != top_degree:
                raise ValueError(
                    f"integral entry {expo} is not of top degree {top_degree}"
                )
            table[expo] = Fraction(value)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "top_degree", int(top_degree))
        object.__setattr__(
            self, "_integrals", tuple(sorted(table.items()))
        )

    def __setattr__(self, *args):
        raise AttributeError("presentations are immutable")

    @classmethod
    def point(cls) -> "RingPresentation":
        return cls((), (), 0, {(): 1})

    @classmethod
    def projective_line(cls, name: str = "x") -> "RingPresentation":
        """Q[x]/x^2 with integral of x equal to 1: the ring of P^1."""
        return cls((name,), (2,), 2, {(1,): 1})

    @property
    def integrals(self):
        return dict(self._integrals)

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def nilpotency_bound(self) -> int:
        """Largest total exponent of a possibly-nonzero monomial."""
        return sum(m - 1 for m in self.orders)

    def monomials(self):
        return _cartesian(*(range(m) for m in self.orders))

    def zero(self) -> "CohomologyClass":
        return CohomologyClass(self, {})

    def one(self) -> "CohomologyClass":
        return self.constant(1)

    def constant(self, scalar) -> "CohomologyClass":
        return CohomologyClass(self, {(0,) * self.rank: _as_scalar(scalar)})

    def gen(self, name: str) -> "CohomologyClass":
        i = self.generators.index(name)
        expo = tuple(1 if j == i else 0 for j in range(self.rank))
        return CohomologyClass(self, {expo: Fraction(1)})

    def __eq__(self, other):
        return (
            isinstance(other, RingPresentation)
            and self.generators == other.generators
            and self.orders == other.orders
            and self.top_degree == other.top_degree
            and self._integrals == other._integrals
        )

    def __hash__(self):
        return hash((self.generators, self.orders, self.top_degree, self._integrals))

    def __repr__(self):
        if not self.generators:
            return "RingPresentation(point)"
        gens = ", ".join(
            f"{g}^{m}" for g, m in zip(self.generators, self.orders)
        )
        return f"RingPresentation(Q[{', '.join(self.generators)}]/({gens}), top={self.top_degree})"


class CohomologyClass:
    """An element of a presentation's ring: sparse map monomial -> scalar."""

    __slots__ = ("presentation", "coeffs")

    def __init__(self, presentation, coeffs):
        clean = {}
        for expo, value in coeffs.items():
            value = _as_scalar(value)
            if value:
                clean[tuple(expo)] = value
        object.__setattr__(self, "presentation", presentation)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *args):
        raise AttributeError("cohomology classes are immutable")

    def _check(self, other):
        if self.presentation != other.presentation:
            raise PresentationMismatch(
                "classes live in different ring presentations"
            )

    # -- additive structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = self.presentation.constant(other)
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        self._check(other)
        out = dict(self.coeffs)
        for expo, value in other.coeffs.items():
            out[expo] = out.get(expo, 0) + value
        return CohomologyClass(self.presentation, out)

    __radd__ = __add__

    def __neg__(self):
        return CohomologyClass(
            self.presentation, {e: -v for e, v in self.coeffs.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = self.presentation.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    # -- multiplicative structure ----------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return CohomologyClass(
                self.presentation,
                {e: v * other for e, v in self.coeffs.items()},
            )
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        self._check(other)
        orders = self.presentation.orders
        out = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x >= m for x, m in zip(e, orders)):
                    continue  # nilpotent truncation
                out[e] = out.get(e, 0) + v1 * v2
        return CohomologyClass(self.presentation, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        if isinstance(scalar, Fraction):
            return self * (1 / scalar)
        if isinstance(scalar, Cyclotomic):
            return self * scalar.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        out = self.presentation.one()
        for _ in range(n):
            out = out * self
        return out

    # -- structure -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * self.presentation.rank, Fraction(0))

    def is_nilpotent(self) -> bool:
        return not self.constant_term()

    def nilpotent_part(self) -> "CohomologyClass":
        zero = (0,) * self.presentation.rank
        return CohomologyClass(
            self.presentation,
            {e: v for e, v in self.coeffs.items() if e != zero},
        )

    def exp(self) -> "CohomologyClass":
        """exp(a) = sum a^n / n!, finite by nilpotency; needs a nilpotent."""
        if not self.is_nilpotent():
            raise ValueError("exp needs a class with zero constant term")
        out = self.presentation.one()
        term = self.presentation.one()
        bound = self.presentation.nilpotency_bound
        for n in range(1, bound + 1):
            term = term * self / n
            if term.is_zero():
                break
            out = out + term
        return out

    def todd_factor(self, order: int | None = None) -> "CohomologyClass":
        """a / (1 - exp(-a)) = 1 + a/2 + a^2/12 - a^4/720 + ..., truncated
        by nilpotency.  ``order`` caps how many series terms are used."""
        if not self.is_nilpotent():
            raise ValueError("Todd factor needs a class with zero constant term")
        bound = self.presentation.nilpotency_bound
        if order is not None:
            bound = min(bound, order)
        coeffs = todd_coefficients(bound)
        out = self.presentation.zero()
        term = self.presentation.one()
        for n in range(bound + 1):
            if coeffs[n]:
                out = out + term * coeffs[n]
            term = term * self
            if term.is_zero():
                break
        return out

    def todd_inverse_factor(self, order: int | None = None) -> "CohomologyClass":
        """(1 - exp(-a)) / a, the reciprocal series of the Todd factor."""
        if not self.is_nilpotent():
            raise ValueError("needs a class with zero constant term")
        bound = self.presentation.nilpotency_bound
        if order is not None:
            bound = min(bound, order)
        out = self.presentation.zero()
        term = self.presentation.one()
        for n in range(bound + 1):
            sign = -1 if n % 2 else 1
            out = out + term * Fraction(sign, _factorial(n + 1))
            term = term * self
            if term.is_zero():
                break
        return out

    def inverse(self) -> "CohomologyClass":
        """Inverse of a class with invertible (nonzero) constant term:
        (s + n)^(-1) = s^(-1) * sum (-n/s)^k, a finite sum."""
        s = self.constant_term()
        if isinstance(s, Cyclotomic):
            if s.is_zero():
                raise ZeroDivisionError("class has nilpotent constant term")
            s_inv = s.inverse()
        else:
            if not s:
                raise ZeroDivisionError("class has nilpotent constant term")
            s_inv = 1 / s
        n = self.nilpotent_part()
        out = self.presentation.one()
        term = self.presentation.one()
        for _ in range(self.presentation.nilpotency_bound):
            term = term * n * s_inv * (-1)
            if term.is_zero():
                break
            out = out + term
        return out * s_inv

    def integrate(self):
        """Pair against the fundamental class: top-degree coefficients hit the
        integration table, everything else integrates to zero."""
        total = Fraction(0)
        for expo, weight in self.presentation._integrals:
            v = self.coeffs.get(expo)
            if v:
                total = total + v * weight
        return total

    def map_scalars(self, fn) -> "CohomologyClass":
        return CohomologyClass(
            self.presentation, {e: fn(v) for e, v in self.coeffs.items()}
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = self.presentation.constant(other)
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return (
            self.presentation == other.presentation
            and (self - other).is_zero()
        )

    def __hash__(self):
        return hash((self.presentation, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = self.presentation.generators
        parts = []
        for expo, value in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = "*".join(
                (g if e == 1 else f"{g}^{e}") for g, e in zip(names, expo) if e
            )
            if not mono:
                parts.append(str(value))
            elif value == 1:
                parts.append(mono)
            else:
                parts.append(f"{value}*{mono}" if not isinstance(value, Cyclotomic) else f"({value})*{mono}")
        return " + ".join(parts)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


_TODD: list[Fraction] = [Fraction(1)]


def todd_coefficients(order: int) -> list[Fraction]:
    """Rational coefficients of x/(1 - exp(-x)) up to x**order.

    Computed once by exact long division of power series: the reciprocal of
    (1 - exp(-x))/x = sum (-1)^n x^n/(n+1)!.  Results are cached and extended
    on demand.
    """
    while len(_TODD) <= order:
        n = len(_TODD)
        # g[k] = (-1)^k / (k+1)!; recurrence t[n] = -sum_{k>=1} g[k] t[n-k]
        acc = Fraction(0)
        for k in range(1, n + 1):
            g_k = Fraction((-1) ** k, _factorial(k + 1))
            acc += g_k * _TODD[n - k]
        _TODD.append(-acc)
    return _TODD[: order + 1]


# -- spec-facing aliases ------------------------------------------------------

def ring_mul(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    """Cup product (commutative, truncated by nilpotency)."""
    return a * b


def exp_class(a: CohomologyClass) -> CohomologyClass:
    return a.exp()


def todd_series(a: CohomologyClass, order: int | None = None) -> CohomologyClass:
    return a.todd_factor(order)


def integrate(a: CohomologyClass):
    return a.integrate()
