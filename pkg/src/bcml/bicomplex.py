"""Double-precision bicomplex arithmetic.

A bicomplex number is stored canonically as a pair of ordinary complex
numbers (z1, z2) meaning z1 + i2*z2, where the imaginary unit of z1 and
z2 is i1.  Equivalently it has four real components

    x0 + i1*x1 + i2*x2 + j*x3,      j = i1*i2,

with z1 = x0 + i1*x1 and z2 = x2 + i1*x3.

All transcendental operations go through the idempotent coordinates

    xi1 = z1 - i1*z2,   xi2 = z1 + i1*z2,

in which multiplication, division and powers act componentwise.  Values
are immutable; every operation returns a new Bicomplex.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

#: Relative tolerance below which an idempotent component counts as zero
#: (the number is then a zero divisor and has no inverse).
EPS_NULL = 1e-12


class NullConeError(ZeroDivisionError):
    """Raised when an operation needs the inverse of a zero divisor."""


class DomainError(ValueError):
    """Raised for arguments outside an operation's domain (e.g. 0**-1)."""


class IdempotentPair(NamedTuple):
    """The (xi1, xi2) complex coordinates of a bicomplex number."""

    first: complex
    second: complex


def _as_complex_pair(value) -> tuple[complex, complex]:
    """Coerce a scalar to canonical (z1, z2) form."""
    if isinstance(value, Bicomplex):
        return value.z1, value.z2
    if isinstance(value, (int, float)):
        return complex(value), 0j
    if isinstance(value, complex):
        # A bare complex lives in the i1 plane: z1 = value, z2 = 0.
        return value, 0j
    raise TypeError(f"cannot interpret {type(value).__name__} as Bicomplex")


@dataclass(frozen=True)
class Bicomplex:
    """Immutable bicomplex number z1 + i2*z2."""

    z1: complex = 0j
    z2: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "z1", complex(self.z1))
        object.__setattr__(self, "z2", complex(self.z2))

    # -- construction -------------------------------------------------

    @staticmethod
    def from_components(x0: float, x1: float = 0.0, x2: float = 0.0,
                        x3: float = 0.0) -> "Bicomplex":
        """Build from the four real components x0 + i1*x1 + i2*x2 + j*x3."""
        for name, v in (("x0", x0), ("x1", x1), ("x2", x2), ("x3", x3)):
            if not math.isfinite(v):
                raise ValueError(f"component {name} is not finite: {v!r}")
        return Bicomplex(complex(x0, x1), complex(x2, x3))

    @staticmethod
    def from_idempotent(first: complex, second: complex) -> "Bicomplex":
        """Recompose from idempotent coordinates: xi1*e1 + xi2*e2."""
        first = complex(first)
        second = complex(second)
        z1 = (first + second) / 2
        z2 = -1j * (second - first) / 2
        return Bicomplex(z1, z2)

    @staticmethod
    def coerce(value) -> "Bicomplex":
        if isinstance(value, Bicomplex):
            return value
        return Bicomplex(*_as_complex_pair(value))

    # -- component access ---------------------------------------------

    @property
    def x0(self) -> float:
        return self.z1.real

    @property
    def x1(self) -> float:
        return self.z1.imag

    @property
    def x2(self) -> float:
        return self.z2.real

    @property
    def x3(self) -> float:
        return self.z2.imag

    def components(self) -> tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    def to_idempotent(self) -> IdempotentPair:
        """Return (xi1, xi2) with xi1 = z1 - i1*z2, xi2 = z1 + i1*z2."""
        return IdempotentPair(self.z1 - 1j * self.z2, self.z1 + 1j * self.z2)

    def norm(self) -> float:
        """Euclidean norm of the four real components (diagnostic only)."""
        return math.sqrt(self.x0 ** 2 + self.x1 ** 2
                         + self.x2 ** 2 + self.x3 ** 2)

    # -- predicates ---------------------------------------------------

    def is_null_cone(self, tol: float = EPS_NULL) -> bool:
        """True if the number is (numerically) a zero divisor.

        A bicomplex number is a zero divisor exactly when one of its
        idempotent components vanishes, equivalently z1**2 + z2**2 = 0.
        The test is relative: a component counts as zero when it is
        below tol * max(1, |xi1|, |xi2|).
        """
        if tol < 0:
            raise ValueError("tol must be >= 0")
        xi1, xi2 = self.to_idempotent()
        scale = max(1.0, abs(xi1), abs(xi2))
        return min(abs(xi1), abs(xi2)) <= tol * scale

    def isclose(self, other, rel_tol: float = 1e-12,
                abs_tol: float = 0.0) -> bool:
        other = Bicomplex.coerce(other)
        return (cmath.isclose(self.z1, other.z1, rel_tol=rel_tol, abs_tol=abs_tol)
                and cmath.isclose(self.z2, other.z2, rel_tol=rel_tol,
                                  abs_tol=abs_tol))

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "Bicomplex":
        w1, w2 = _as_complex_pair(other)
        return Bicomplex(self.z1 + w1, self.z2 + w2)

    __radd__ = __add__

    def __sub__(self, other) -> "Bicomplex":
        w1, w2 = _as_complex_pair(other)
        return Bicomplex(self.z1 - w1, self.z2 - w2)

    def __rsub__(self, other) -> "Bicomplex":
        w1, w2 = _as_complex_pair(other)
        return Bicomplex(w1 - self.z1, w2 - self.z2)

    def __neg__(self) -> "Bicomplex":
        return Bicomplex(-self.z1, -self.z2)

    def __mul__(self, other) -> "Bicomplex":
        # (z1 + i2 z2)(w1 + i2 w2) with i2**2 = -1.
        w1, w2 = _as_complex_pair(other)
        return Bicomplex(self.z1 * w1 - self.z2 * w2,
                         self.z1 * w2 + self.z2 * w1)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Bicomplex":
        other = Bicomplex.coerce(other)
        d1, d2 = other.to_idempotent()
        scale = max(1.0, abs(d1), abs(d2))
        dead = [name for name, d in (("xi1", d1), ("xi2", d2))
                if abs(d) <= EPS_NULL * scale]
        if dead:
            raise NullConeError(
                f"division by zero divisor: component(s) {', '.join(dead)} vanish")
        n1, n2 = self.to_idempotent()
        return Bicomplex.from_idempotent(n1 / d1, n2 / d2)

    def __rtruediv__(self, other) -> "Bicomplex":
        return Bicomplex.coerce(other) / self

    def __pow__(self, exponent) -> "Bicomplex":
        """Principal power, componentwise in idempotent coordinates.

        Uses exp(a * Log xi) per component with the principal log
        (argument in (-pi, pi]).  A zero base component is allowed only
        when the matching exponent component has positive real part.
        """
        exponent = Bicomplex.coerce(exponent)
        b1, b2 = self.to_idempotent()
        a1, a2 = exponent.to_idempotent()
        return Bicomplex.from_idempotent(_cpow(b1, a1), _cpow(b2, a2))

    def exp(self) -> "Bicomplex":
        """Componentwise exponential: exp(xi1)*e1 + exp(xi2)*e2."""
        xi1, xi2 = self.to_idempotent()
        return Bicomplex.from_idempotent(cmath.exp(xi1), cmath.exp(xi2))

    # -- serialization ------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"x0": self.x0, "x1": self.x1, "x2": self.x2, "x3": self.x3}

    @staticmethod
    def from_json_dict(d: dict) -> "Bicomplex":
        return Bicomplex.from_components(
            float(d.get("x0", 0.0)), float(d.get("x1", 0.0)),
            float(d.get("x2", 0.0)), float(d.get("x3", 0.0)))

    def __repr__(self) -> str:
        return (f"Bicomplex(x0={self.x0!r}, x1={self.x1!r}, "
                f"x2={self.x2!r}, x3={self.x3!r})")


def _cpow(base: complex, exponent: complex) -> complex:
    if base == 0:
        if exponent.real > 0:
            return 0j
        raise DomainError(
            "zero idempotent base with non-positive exponent real part")
    if exponent == 1:
        return base
    return cmath.exp(exponent * cmath.log(base))


ZERO = Bicomplex(0j, 0j)
ONE = Bicomplex(1 + 0j, 0j)
#: The idempotents e1 = (1+j)/2 and e2 = (1-j)/2.
E1 = Bicomplex(0.5 + 0j, 0.5j)
E2 = Bicomplex(0.5 + 0j, -0.5j)
