"""Exact scalar arithmetic: rationals and cyclotomic fields Q(zeta_N).

Every number that flows through the residue engine is either a
``fractions.Fraction`` or a :class:`Cyclotomic`.  A ``Cyclotomic`` with
conductor ``N`` is an element of Q[z]/Phi_N(z), where ``Phi_N`` is the N-th
cyclotomic polynomial, so ``z`` stands for a primitive N-th root of unity.
Working modulo ``Phi_N`` (rather than modulo ``z^N - 1``) keeps the ring a
field, which is what lets us divide by factors like ``1 - zeta**(-b)``.

Floating point never appears here; Python integers give us arbitrary
precision for free.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = Fraction


class NotRationalError(ArithmeticError):
    """A cyclotomic value was expected to be rational and is not."""


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers (little-endian coefficient lists)
# ---------------------------------------------------------------------------

def _int_poly_div_exact(num, den):
    # exact division of integer polynomials; raises if the division leaves
    # a remainder (it never does for cyclotomic factors of z^n - 1)
    num = list(num)
    dd = len(den) - 1
    lead = den[dd]
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        q, r = divmod(num[i], lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i - dd] = q
        for j in range(dd + 1):
            num[i - dd + j] -= q * den[j]
    if any(num[:dd]):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _poly_mod(coeffs, modulus):
    # remainder of a Fraction polynomial modulo a monic integer polynomial
    deg_m = len(modulus) - 1
    rem = [Fraction(c) for c in coeffs]
    for i in range(len(rem) - 1, deg_m - 1, -1):
        q = rem[i]
        if q:
            for j in range(deg_m + 1):
                rem[i - deg_m + j] -= q * modulus[j]
    rem = rem[:deg_m]
    rem += [Fraction(0)] * (deg_m - len(rem))
    return rem


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = _poly_trim([Fraction(c) for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    Computed by exact division of z^n - 1 by Phi_d over all proper
    divisors d of n.

    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def phi_degree(n: int) -> int:
    """Degree of Phi_n, i.e. Euler's totient of n."""
    return len(cyclotomic_polynomial(n)) - 1


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        v = abs(v)
        if v:
            out = out * v // gcd(out, v)
    return out


# ---------------------------------------------------------------------------
# cyclotomic numbers
# ---------------------------------------------------------------------------

class Cyclotomic:
    """An element of Q(zeta_N), stored as a vector modulo Phi_N.

    Instances are immutable.  Arithmetic with ``int`` and ``Fraction``
    coerces those into the field; arithmetic between different conductors
    promotes both operands into Q(zeta_lcm).
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs) -> None:
        modulus = cyclotomic_polynomial(conductor)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(
            self, "coeffs", tuple(_poly_mod(list(coeffs), modulus))
        )

    def __setattr__(self, *args):
        raise AttributeError("Cyclotomic values are immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_rational(cls, conductor: int, value) -> "Cyclotomic":
        return cls(conductor, [Fraction(value)])

    def promoted(self, conductor: int) -> "Cyclotomic":
        """The image of self under the canonical embedding into Q(zeta_M).

        Requires ``self.conductor`` to divide ``conductor``; the embedding
        sends z to z**(M/N).
        """
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(
                f"no embedding of Q(zeta_{self.conductor}) into "
                f"Q(zeta_{conductor})"
            )
        step = conductor // self.conductor
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            poly[k * step] += c
        return Cyclotomic(conductor, poly)

    def _pair(self, other):
        if isinstance(other, Cyclotomic):
            n = lcm(self.conductor, other.conductor)
            return self.promoted(n), other.promoted(n)
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.from_rational(self.conductor, other)
        return None, None

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.conductor, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse, by the extended Euclidean algorithm
        against Phi_N.  Division by zero here signals a pole factor that
        the series machinery should have expanded instead.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = modulus, _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s_next = _poly_trim(
                [
                    (s0[i] if i < len(s0) else Fraction(0))
                    - sum(
                        q[j] * s1[i - j]
                        for j in range(len(q))
                        if 0 <= i - j < len(s1)
                    )
                    for i in range(max(len(s0), len(q) + len(s1) - 1))
                ]
            )
            r0, r1, s0, s1 = r1, r, s1, s_next
        unit = r1[0]
        return Cyclotomic(self.conductor, [c / unit for c in s1])

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic.from_rational(self.conductor, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self) -> Fraction:
        if not self.is_rational():
            raise NotRationalError(f"{self!r} does not lie in Q")
        return self.coeffs[0]

    def galois(self, a: int) -> "Cyclotomic":
        """Apply the Galois automorphism z -> z**a (a coprime to N)."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise ValueError(f"{a} is not coprime to the conductor {n}")
        out = [Fraction(0)] * (n + 1)
        for k, c in enumerate(self.coeffs):
            out[(k * a) % n] += c
        return Cyclotomic(n, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, Cyclotomic):
            a, b = self._pair(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        # numeric shadow, used only by tests as an independent cross-check
        import cmath

        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(complex(c) * z**k for k, c in enumerate(self.coeffs))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {str(self)!r})"


# ---------------------------------------------------------------------------
# module-level operations mirroring the scalar API
# ---------------------------------------------------------------------------

def root_of_unity(n: int, k: int) -> Cyclotomic:
    """zeta_n**k as an element of Q(zeta_n).

    >>> root_of_unity(2, 1) == -1
    True
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    k %= n
    return Cyclotomic(n, [Fraction(0)] * k + [Fraction(1)])


def invert(x):
    """Exact multiplicative inverse of a Fraction or Cyclotomic."""
    if isinstance(x, Cyclotomic):
        return x.inverse()
    x = Fraction(x)
    if not x:
        raise ZeroDivisionError("inverse of zero")
    return 1 / x


def rational_part(x) -> Fraction:
    """The value of x as a Fraction, if x lies in Q; NotRationalError if not.

    Galois-orbit sums of residues land in Q; failing this check signals an
    incomplete orbit sum or corrupted input data.
    """
    if isinstance(x, Cyclotomic):
        return x.rational_part()
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Cyclotomic))


def root_order(n: int, k: int) -> int:
    """Multiplicative order of zeta_n**k."""
    return n // gcd(n, k % n or n)


Scalar = Fraction | Cyclotomic

