"""Exact arithmetic for integer polynomials in one variable.

A polynomial is held as a tuple of int coefficients, constant term first,
with trailing zeros stripped; the zero polynomial is the empty tuple.
Coefficients are Python ints, so every operation is exact at any size and
nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class PolyParseError(ValueError):
    """Text that does not match the `1 + 2*x + 2*x^2` polynomial form."""

    def __init__(self, message: str, position: int):
        self.message = message
        self.position = position
        super().__init__(f"{message} at position {position}")


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly((value,))
    return NotImplemented


@dataclass(frozen=True)
class Poly:
    """An integer polynomial in canonical form.

    >>> Poly((1, 2, 1))
    Poly('1 + 2*x + x^2')
    >>> (1 + X) ** 2
    Poly('1 + 2*x + x^2')
    >>> Poly((0, 1, 0))
    Poly('x')
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        longer, shorter = self.coeffs, other.coeffs
        if len(longer) < len(shorter):
            longer, shorter = shorter, longer
        total = list(longer)
        for i, c in enumerate(shorter):
            total[i] += c
        return Poly(tuple(total))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return Poly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("polynomial exponent must be nonnegative")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, value):
        """Evaluate at `value`, an int or another Poly (composition)."""
        result = value * 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def reflected(self) -> Poly:
        """The polynomial at -x: odd-degree coefficients flip sign."""
        return Poly(tuple(-c if j & 1 else c for j, c in enumerate(self.coeffs)))

    def to_text(self, var: str = "x") -> str:
        """Sparse text form, lowest degree first, e.g. `1 + 2*x + 2*x^2`."""
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if j == 0:
                body = str(magnitude)
            else:
                power = var if j == 1 else f"{var}^{j}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Poly({self.to_text()!r})"


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def constant(value: int) -> Poly:
    return Poly((value,))


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention that out-of-range k gives 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def homogeneous_substitution(p: Poly, numerator: Poly, denominator: Poly,
                             degree: int) -> Poly:
    """Substitute numerator/denominator for the variable, cleared by
    denominator**degree: sum of p[j] * numerator^j * denominator^(degree-j).

    Requires degree >= p.degree so the result stays a polynomial.
    """
    if degree < p.degree:
        raise ValueError("clearing degree must be at least the polynomial degree")
    denominator_powers = [ONE]
    for _ in range(degree):
        denominator_powers.append(denominator_powers[-1] * denominator)
    total = ZERO
    numerator_power = ONE
    for j, c in enumerate(p.coeffs):
        if c:
            total = total + c * numerator_power * denominator_powers[degree - j]
        numerator_power = numerator_power * numerator
    return total


def parse_poly(text: str) -> Poly:
    """Parse the sparse text form; accepts `^`, `*`, unary minus, and
    arbitrary whitespace, with any single letter as the variable."""
    coeffs: dict[int, int] = {}
    var: str | None = None
    i = 0
    n = len(text)

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int() -> int:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if start == i:
            raise PolyParseError("expected a number", start)
        return int(text[start:i])

    skip_ws()
    first = True
    while i < n:
        sign = 1
        saw_sign = False
        while i < n and text[i] in "+-":
            if text[i] == "-":
                sign = -sign
            saw_sign = True
            i += 1
            skip_ws()
        if not first and not saw_sign:
            raise PolyParseError(f"expected '+' or '-', found {text[i]!r}", i)
        if i >= n:
            raise PolyParseError("dangling sign", i)
        coeff: int | None = None
        if text[i].isdigit():
            coeff = read_int()
            skip_ws()
            if i < n and text[i] == "*":
                i += 1
                skip_ws()
                if i >= n or not text[i].isalpha():
                    raise PolyParseError("expected a variable after '*'", i)
        exponent = 0
        if i < n and text[i].isalpha():
            name = text[i]
            if var is None:
                var = name
            elif name != var:
                raise PolyParseError(f"mixed variables {var!r} and {name!r}", i)
            i += 1
            skip_ws()
            exponent = 1
            if i < n and text[i] == "^":
                i += 1
                skip_ws()
                exponent = read_int()
        elif coeff is None:
            raise PolyParseError(f"unexpected character {text[i]!r}", i)
        if coeff is None:
            coeff = 1
        coeffs[exponent] = coeffs.get(exponent, 0) + sign * coeff
        skip_ws()
        first = False
    if first:
        raise PolyParseError("empty polynomial text", 0)
    out = [0] * (max(coeffs) + 1)
    for exponent, c in coeffs.items():
        out[exponent] = c
    return Poly(tuple(out))
