"""Exact univariate polynomials and rational functions over the rationals.

Coefficients are stored lowest degree first as ``fractions.Fraction``. Both
types are immutable and hashable so they can key caches.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from backend.app.core.errors import SingularEvaluationError
from backend.app.core.numeric import fraction_to_string, from_exact, parse_fraction

Scalar = Union[int, Fraction]


def _normalize(coeffs: Iterable) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class ExactPoly:
    """Polynomial with exact rational coefficients, lowest degree first.

    The zero polynomial has no coefficients and degree -1.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    # ---------------------- constructors ---------------------- #
    @classmethod
    def constant(cls, value: Scalar) -> "ExactPoly":
        return cls((value,))

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar]) -> "ExactPoly":
        result = cls.constant(1)
        for root in roots:
            result = result * cls((-Fraction(root), 1))
        return result

    @classmethod
    def from_json(cls, values: Sequence[str]) -> "ExactPoly":
        return cls(tuple(parse_fraction(v) for v in values))

    # ----------------------- properties ----------------------- #
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    @property
    def parity(self) -> int:
        """0 for even, 1 for odd, -1 for mixed powers (zero polynomial is even)."""
        powers = {i % 2 for i, c in enumerate(self.coeffs) if c != 0}
        if not powers:
            return 0
        return powers.pop() if len(powers) == 1 else -1

    # ----------------------- arithmetic ----------------------- #
    def _coerce(self, other) -> "ExactPoly":
        if isinstance(other, ExactPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> "ExactPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "ExactPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "ExactPoly":
        return (-self) + other

    def __mul__(self, other) -> "ExactPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return ExactPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ExactPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = ExactPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, divisor: "ExactPoly") -> Tuple["ExactPoly", "ExactPoly"]:
        """Euclidean division: ``self = q*divisor + r`` with ``deg r < deg divisor``."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - divisor.degree, 1)
        lead = divisor.leading_coefficient
        while len(remainder) - 1 >= divisor.degree and any(remainder):
            shift = len(remainder) - 1 - divisor.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(divisor.coeffs):
                remainder[shift + i] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return ExactPoly(tuple(quotient)), ExactPoly(tuple(remainder))

    def exact_divide(self, divisor: "ExactPoly") -> "ExactPoly":
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            raise ArithmeticError("polynomial division is not exact")
        return quotient

    def monic(self) -> "ExactPoly":
        if self.is_zero:
            return self
        lead = self.leading_coefficient
        return ExactPoly(tuple(c / lead for c in self.coeffs))

    def scale(self, factor: Scalar) -> "ExactPoly":
        return ExactPoly(tuple(c * factor for c in self.coeffs))

    def differentiate(self, order: int = 1) -> "ExactPoly":
        if order < 1:
            raise ValueError(f"derivative order must be positive, got {order}")
        coeffs = list(self.coeffs)
        for _ in range(order):
            coeffs = [i * c for i, c in enumerate(coeffs)][1:]
        return ExactPoly(tuple(coeffs))

    # ----------------------- evaluation ----------------------- #
    def __call__(self, point: Scalar) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def evaluate(self, ctx, point):
        """Horner evaluation in an mpmath context; coefficients rounded once."""
        acc = ctx.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * point + from_exact(ctx, c)
        return acc

    def numeric_coefficients(self, ctx) -> List:
        return [from_exact(ctx, c) for c in self.coeffs]

    # ---------------------- serialization --------------------- #
    def to_json(self) -> List[str]:
        return [fraction_to_string(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            text = fraction_to_string(c)
            if power == 0:
                terms.append(text)
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{text}*"
                terms.append(f"{head}x" + (f"^{power}" if power > 1 else ""))
        return " + ".join(terms).replace("+ -", "- ")


def differentiate(p: ExactPoly, order: int = 1) -> ExactPoly:
    """Exact derivative of the given order."""
    return p.differentiate(order)


def exact_gcd(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Monic greatest common divisor by the Euclidean algorithm.

    ``gcd(0, 0)`` is the zero polynomial.
    """
    while not b.is_zero:
        _, remainder = a.divmod(b)
        a, b = b, remainder
    return a.monic()


@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient of exact polynomials with a monic denominator."""

    numerator: ExactPoly
    denominator: ExactPoly = ExactPoly((1,))

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = ExactPoly(), ExactPoly.constant(1)
        elif den.degree > 0:
            common = exact_gcd(num, den)
            if common.degree > 0:
                num, den = num.exact_divide(common), den.exact_divide(common)
        lead = den.leading_coefficient
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def of(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, ExactPoly):
            return cls(value)
        return cls(ExactPoly.constant(value))

    @property
    def degree(self) -> int:
        """deg(numerator) - deg(denominator); the zero function has degree -inf, reported as None."""
        if self.numerator.is_zero:
            return None
        return self.numerator.degree - self.denominator.degree

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.denominator.degree == 0

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction.of(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction.of(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.of(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.of(other) / self

    def differentiate(self, order: int = 1) -> "RationalFunction":
        result = self
        for _ in range(order):
            num, den = result.numerator, result.denominator
            if den.degree == 0:
                result = RationalFunction(num.differentiate() if num.degree > 0 else ExactPoly(), den)
                continue
            num_d = num.differentiate() if num.degree > 0 else ExactPoly()
            result = RationalFunction(num_d * den - num * den.differentiate(), den * den)
        return result

    def __call__(self, point: Scalar) -> Fraction:
        den = self.denominator(point)
        if den == 0:
            raise SingularEvaluationError(f"pole of {self} at {point}")
        return self.numerator(point) / den

    def evaluate(self, ctx, point):
        den = self.denominator.evaluate(ctx, point)
        if den == 0:
            raise SingularEvaluationError(f"pole of {self} at {point}")
        return self.numerator.evaluate(ctx, point) / den

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()}

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"
