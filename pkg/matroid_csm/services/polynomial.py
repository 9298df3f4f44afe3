"""Integer polynomials in one variable, backed by ``sympy.Poly`` over ZZ.

``IntPolynomial`` is the value type used for characteristic polynomials,
degree polynomials and g-polynomials. Coefficients are stored in
increasing order of exponent with trailing zeros stripped, so equality is
plain tuple equality.
"""

from dataclasses import dataclass
from typing import Tuple, Union

from sympy import Poly, Symbol, ZZ

_VAR = Symbol("x")


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = tuple(int(c) for c in self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients = coefficients[:-1]
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        return cls(tuple(reversed(poly.all_coeffs())))

    def to_poly(self) -> Poly:
        return Poly(list(reversed(self.coefficients)) or [0], _VAR, domain=ZZ)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coefficients):
            return self.coefficients[exponent]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.to_poly() + other.to_poly())

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.to_poly() - other.to_poly())

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coefficients))
        return IntPolynomial.from_poly(self.to_poly() * other.to_poly())

    __rmul__ = __mul__

    def __call__(self, value: int) -> int:
        return int(self.to_poly().eval(value))

    def shift(self, offset: int) -> "IntPolynomial":
        """The polynomial p(x + offset)."""
        return IntPolynomial.from_poly(
            self.to_poly().compose(Poly(_VAR + offset, _VAR, domain=ZZ))
        )

    def divmod_linear(self, root: int) -> Tuple["IntPolynomial", int]:
        """Divide by (x - root); returns quotient and integer remainder."""
        quotient, remainder = self.to_poly().div(Poly(_VAR - root, _VAR, domain=ZZ))
        return IntPolynomial.from_poly(quotient), int(remainder.as_expr())

    def format(self, variable: str = "t") -> str:
        if self.is_zero:
            return "0"
        terms = []
        for exponent in range(self.degree, -1, -1):
            c = self.coefficients[exponent]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = variable if exponent == 1 else f"{variable}^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.format()
