"""Sparse univariate polynomials with arbitrary-precision integer
coefficients, plus exact Lagrange interpolation over the rationals.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegerPolynomialError, WitnessMismatchError


class IntPolynomial:
    """Exponent -> coefficient map in canonical form (no zero entries).

    Immutable; equality is structural; degree of the zero polynomial is None.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        items = dict(coeffs)
        clean = {}
        for e, c in items.items():
            e = int(e)
            c = int(c)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c != 0:
                clean[e] = c
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, *args):
        raise AttributeError("IntPolynomial is immutable")

    # --- constructors ---

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1):
        return cls({exponent: coefficient})

    # --- structure ---

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    @property
    def degree(self):
        return max(self._coeffs) if self._coeffs else None

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    # --- arithmetic ---

    def __add__(self, other):
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(out)

    def __neg__(self):
        return IntPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor: int):
        return IntPolynomial({e: factor * c for e, c in self._coeffs.items()})

    def mul_monomial(self, exponent: int, coefficient: int = 1):
        return IntPolynomial(
            {e + exponent: coefficient * c for e, c in self._coeffs.items()}
        )

    def __mul__(self, other):
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return IntPolynomial(out)

    def __call__(self, k: int) -> int:
        return sum(c * k**e for e, c in self._coeffs.items())

    # --- rendering ---

    def to_text(self) -> str:
        """Canonical form: descending exponents, `x^e` with x^1 -> x and
        x^0 omitted, e.g. `x^10-2x^6+x^3-x^2+2x-1`.
        """
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"IntPolynomial({self.to_text()!r})"

    def to_json_dict(self) -> dict:
        """JSON form with string coefficients so consumers never overflow."""
        return {"coeffs": {str(e): str(c) for e, c in sorted(self._coeffs.items())}}

    @classmethod
    def from_json_dict(cls, data: dict):
        return cls({int(e): int(c) for e, c in data["coeffs"].items()})


class RationalPolynomial:
    """Polynomial with exact Fraction coefficients; shows up as the result
    of Ehrhart-style count interpolation, where the counts are integers at
    every integer argument but the coefficients need not be.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        clean = {}
        for e, c in dict(coeffs).items():
            c = Fraction(c)
            if c != 0:
                clean[int(e)] = c
        object.__setattr__(self, "_coeffs", clean)

    @property
    def coeffs(self):
        return dict(self._coeffs)

    @property
    def degree(self):
        return max(self._coeffs) if self._coeffs else None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def to_int_polynomial(self) -> IntPolynomial:
        if not self.is_integral():
            raise NonIntegerPolynomialError(f"non-integral coefficients in {self}")
        return IntPolynomial({e: int(c) for e, c in self._coeffs.items()})

    def __call__(self, k):
        val = sum(c * Fraction(k) ** e for e, c in self._coeffs.items())
        return int(val) if val.denominator == 1 else val

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            other = RationalPolynomial(other.coeffs)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def to_text(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RationalPolynomial({self.to_text()!r})"

    def to_json_dict(self) -> dict:
        return {"coeffs": {str(e): str(c) for e, c in sorted(self._coeffs.items())}}


def _lagrange_coeffs(base):
    need = len(base)
    coeffs = [Fraction(0)] * need
    for i, (xi, yi) in enumerate(base):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(base):
            if j == i:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for e, c in enumerate(basis):
                nxt[e + 1] += c
                nxt[e] -= c * xj
            basis = nxt
        for e, c in enumerate(basis):
            coeffs[e] += yi * c / denom
    return coeffs


def interpolate_rational(points, degree_bound: int) -> RationalPolynomial:
    """Unique rational polynomial of degree <= degree_bound through the
    first degree_bound+1 points; remaining points are held-out witnesses.
    """
    points = [(int(k), int(v)) for k, v in points]
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    need = degree_bound + 1
    if len(points) < need:
        raise ValueError(f"need at least {need} points, got {len(points)}")
    if len({k for k, _ in points}) != len(points):
        raise ValueError("interpolation points must have distinct abscissae")
    coeffs = _lagrange_coeffs(points[:need])
    poly = RationalPolynomial(dict(enumerate(coeffs)))
    for k, v in points[need:]:
        got = poly(k)
        if got != v:
            raise WitnessMismatchError(
                f"held-out point k={k}: interpolant gives {got}, expected {v}"
            )
    return poly


def interpolate_exact(points, degree_bound: int) -> IntPolynomial:
    """Unique integer polynomial of degree <= degree_bound through the
    first degree_bound+1 points; any remaining points are checked as
    held-out witnesses.

    Raises NonIntegerPolynomialError if a coefficient comes out
    non-integral and WitnessMismatchError if a witness disagrees.
    """
    points = [(int(k), int(v)) for k, v in points]
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    need = degree_bound + 1
    if len(points) < need:
        raise ValueError(f"need at least {need} points, got {len(points)}")
    if len({k for k, _ in points}) != len(points):
        raise ValueError("interpolation points must have distinct abscissae")

    coeffs = _lagrange_coeffs(points[:need])
    out = {}
    for e, c in enumerate(coeffs):
        if c.denominator != 1:
            raise NonIntegerPolynomialError(
                f"not an integer polynomial: coefficient of x^{e} is {c}"
            )
        out[e] = int(c)
    poly = IntPolynomial(out)

    for k, v in points[need:]:
        got = poly(k)
        if got != v:
            raise WitnessMismatchError(
                f"held-out point k={k}: interpolant gives {got}, expected {v}"
            )
    return poly
