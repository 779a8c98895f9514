"""Exact coefficient arithmetic: rational functions in q, h, lam over the integers.

Every quantity in the package is a Scalar, i.e. a quotient of integer
polynomials in the formal parameters q, h and lam.  Representations are
canonical (numerator and denominator coprime, denominator with positive
leading coefficient under deglex with q < h < lam), so equality of Scalars
is equality of representations.
"""

from __future__ import annotations

from fractions import Fraction

import sympy
from sympy import ZZ
from sympy.polys.fields import field

PARAMETERS = ("q", "h", "lam")

_FIELD, _Q, _H, _LAM = field(",".join(PARAMETERS), ZZ)
_GENS = {"q": _Q, "h": _H, "lam": _LAM}
_FRAC_ELEMENT = type(_Q)

#: default generic specialization used by fast mode
DEFAULT_ASSIGNMENT = {"q": Fraction(7, 3), "h": Fraction(2, 5), "lam": Fraction(1)}


class ScalarError(Exception):
    pass


class DivisionByZero(ScalarError):
    pass


class PoleError(ScalarError):
    """A specialization made a denominator vanish."""


def _coercible(value) -> bool:
    return isinstance(value, (Scalar, int, Fraction, _FRAC_ELEMENT))


def _coerce_frac_element(value):
    if isinstance(value, Scalar):
        return value._f
    if isinstance(value, int):
        return _FIELD(value)
    if isinstance(value, Fraction):
        return _FIELD(value.numerator) / _FIELD(value.denominator)
    if isinstance(value, _FRAC_ELEMENT):
        return value
    raise TypeError(f"cannot build a Scalar from {type(value).__name__}")


class Scalar:
    """An exact rational function in the parameters q, h, lam."""

    __slots__ = ("_f",)

    def __init__(self, value=0):
        object.__setattr__(self, "_f", _coerce_frac_element(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def parameter(name: str) -> "Scalar":
        if name not in _GENS:
            raise ScalarError(f"unknown parameter {name!r}; expected one of {PARAMETERS}")
        return Scalar(_GENS[name])

    @staticmethod
    def parse(text: str) -> "Scalar":
        """Parse a Scalar from its canonical string form."""
        local = {n: sympy.Symbol(n) for n in PARAMETERS}
        try:
            expr = sympy.parse_expr(text, local_dict=local, evaluate=True)
            f = _FIELD.from_expr(expr)
        except Exception as exc:
            raise ScalarError(f"cannot parse scalar {text!r}: {exc}") from None
        return Scalar(f)

    @staticmethod
    def parse_canonical(text: str) -> "Scalar":
        """Parse, rejecting any non-canonical spelling (e.g. '2/4')."""
        s = Scalar.parse(text)
        if str(s) != text:
            raise ScalarError(
                f"non-canonical scalar string {text!r} (canonical form is {str(s)!r})"
            )
        return s

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not _coercible(other):
            return NotImplemented
        return Scalar(self._f + _coerce_frac_element(other))

    __radd__ = __add__

    def __sub__(self, other):
        if not _coercible(other):
            return NotImplemented
        return Scalar(self._f - _coerce_frac_element(other))

    def __rsub__(self, other):
        if not _coercible(other):
            return NotImplemented
        return Scalar(_coerce_frac_element(other) - self._f)

    def __mul__(self, other):
        if not _coercible(other):
            return NotImplemented
        return Scalar(self._f * _coerce_frac_element(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        g = _coerce_frac_element(other)
        if not g:
            raise DivisionByZero("division by zero Scalar")
        return Scalar(self._f / g)

    def __rtruediv__(self, other):
        if not self._f:
            raise DivisionByZero("division by zero Scalar")
        return Scalar(_coerce_frac_element(other) / self._f)

    def __neg__(self):
        return Scalar(-self._f)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("Scalar powers must be integers")
        if n < 0 and not self._f:
            raise DivisionByZero("negative power of zero Scalar")
        return Scalar(self._f**n)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._f

    def __bool__(self) -> bool:
        return bool(self._f)

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self._f == _coerce_frac_element(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._f)

    # -- structure ---------------------------------------------------------

    def specialize(self, assignment: dict) -> "Scalar":
        """Substitute parameters by exact rationals (or other Scalars).

        Unassigned parameters survive.  Raises PoleError if the denominator
        vanishes at the assignment.
        """
        images = []
        for name in PARAMETERS:
            if name in assignment:
                images.append(_coerce_frac_element(_as_scalar(assignment[name])))
            else:
                images.append(_GENS[name])
        num = _eval_poly(self._f.numer, images)
        den = _eval_poly(self._f.denom, images)
        if not den:
            named = ", ".join(f"{k}={assignment[k]}" for k in PARAMETERS if k in assignment)
            raise PoleError(f"denominator of {self} vanishes at {named}")
        return Scalar(num / den)

    def coefficient_of(self, name: str, power: int) -> "Scalar":
        """Coefficient of name**power, valid when the denominator is free of name."""
        idx = PARAMETERS.index(name)
        for monom, _ in self._f.denom.terms():
            if monom[idx]:
                raise ScalarError(f"denominator of {self} involves {name}")
        ring = self._f.numer.ring
        num = ring.zero
        for monom, coeff in self._f.numer.terms():
            if monom[idx] == power:
                reduced = list(monom)
                reduced[idx] = 0
                num += ring.from_terms([(tuple(reduced), coeff)])
        return Scalar(_FIELD.new(num, self._f.denom))

    def depends_on(self, name: str) -> bool:
        idx = PARAMETERS.index(name)
        return any(
            monom[idx]
            for poly in (self._f.numer, self._f.denom)
            for monom, _ in poly.terms()
        )

    def as_fraction(self) -> Fraction:
        """Value as an exact rational; requires a constant Scalar."""
        for name in PARAMETERS:
            if self.depends_on(name):
                raise ScalarError(f"{self} is not constant")
        num = self._f.numer.coeff(1)
        den = self._f.denom.coeff(1)
        return Fraction(int(num), int(den))

    def __str__(self):
        return str(self._f)

    def __repr__(self):
        return f"Scalar({self._f})"


def _as_scalar(value) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar(value)


def _eval_poly(poly, images):
    out = _FIELD.zero
    for monom, coeff in poly.terms():
        term = _FIELD(coeff)
        for img, exp in zip(images, monom):
            if exp:
                term *= img**exp
        out += term
    return out


ZERO = Scalar(0)
ONE = Scalar(1)
Q = Scalar.parameter("q")
H = Scalar.parameter("h")
LAM = Scalar.parameter("lam")


def scalar(value) -> Scalar:
    """Coerce ints, Fractions and Scalars into Scalar."""
    return _as_scalar(value)
