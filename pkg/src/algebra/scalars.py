"""
Pluggable scalar fields.

Three modes share one interface:

- ``rational``: exact rationals (sympy ``QQ``)
- ``qhalf``: rational functions over QQ in one positive indeterminate ``u``,
  read as q^{1/2} (sympy ``QQ.frac_field(u)``)
- ``complex``: complex doubles (sympy ``CC``), compared with a relative
  tolerance ``eps``

Scalars are plain sympy domain elements; the ``ScalarField`` carries the
domain and the mode-specific rules (parsing, printing, tolerant equality,
exact square roots).
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, List, Optional, Tuple

from sympy import Basic, Rational, Symbol, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.domains import CC, QQ
from sympy.polys.polyerrors import CoercionFailed

from src.config import Config
from src.errors import HalfIntegralPower, NotASquare, ParseError, ScalarModeMismatch

logger = logging.getLogger(__name__)

U = Symbol("u", positive=True)
QHALF_DOMAIN = QQ.frac_field(U)


class ScalarMode(str, Enum):
    RATIONAL = "rational"
    QHALF = "qhalf"
    COMPLEX = "complex"


@dataclass(frozen=True)
class ScalarField:
    """A scalar field in one of the three modes."""

    mode: ScalarMode = ScalarMode.RATIONAL
    eps: float = 1e-9

    @classmethod
    def from_mode(cls, mode: Optional[str] = None, eps: Optional[float] = None) -> "ScalarField":
        return cls(ScalarMode(mode or Config.SCALAR_MODE), Config.EPS_NUM if eps is None else eps)

    @cached_property
    def domain(self):
        if self.mode is ScalarMode.RATIONAL:
            return QQ
        if self.mode is ScalarMode.QHALF:
            return QHALF_DOMAIN
        return CC

    @property
    def exact(self) -> bool:
        return self.mode is not ScalarMode.COMPLEX

    @cached_property
    def zero(self):
        return self.domain.zero

    @cached_property
    def one(self):
        return self.domain.one

    @cached_property
    def u(self):
        """The generator q^{1/2} (qhalf mode only)."""
        if self.mode is not ScalarMode.QHALF:
            raise ScalarModeMismatch("the generator u exists only in qhalf mode")
        return self.domain.from_sympy(U)

    def require_same(self, other: "ScalarField"):
        if other.mode is not self.mode:
            raise ScalarModeMismatch(f"cannot combine {self.mode.value} and {other.mode.value} scalars")

    # Construction

    def rational(self, numerator: int, denominator: int = 1):
        return self.domain.convert_from(QQ(numerator, denominator), QQ)

    def convert(self, value: Any):
        """Bring ints, Fractions, sympy numbers, strings, complex and [re, im] into the field."""
        if isinstance(value, bool):
            raise ParseError("", f"not a scalar: {value!r}")
        if isinstance(value, int):
            return self.rational(value)
        if isinstance(value, Fraction):
            return self.rational(value.numerator, value.denominator)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (list, tuple)):
            return self.parse(value)
        if isinstance(value, complex) or isinstance(value, float):
            if self.exact:
                raise ParseError("", f"floats are not exact scalars: {value!r}")
            return self.domain.dtype(complex(value).real, complex(value).imag)
        if isinstance(value, Basic):
            return self._from_sympy(value)
        if QQ.of_type(value):
            return self.domain.convert_from(value, QQ)
        if self.domain.of_type(value):
            return value
        raise ParseError("", f"cannot convert {value!r} to a {self.mode.value} scalar")

    def _from_sympy(self, expr):
        try:
            return self.domain.from_sympy(expr)
        except (CoercionFailed, ValueError, TypeError) as e:
            raise ParseError("", f"{expr} is not a {self.mode.value} scalar ({e})")

    def parse(self, token: Any):
        """Parse one serialized scalar."""
        if self.mode is ScalarMode.COMPLEX:
            if isinstance(token, (list, tuple)):
                if len(token) != 2:
                    raise ParseError("", "complex scalars are [re, im]")
                try:
                    return self.domain.dtype(float(token[0]), float(token[1]))
                except (TypeError, ValueError):
                    raise ParseError("", f"bad complex scalar {token!r}")
            try:
                z = complex(str(token).replace(" ", "").replace("i", "j"))
            except ValueError:
                raise ParseError("", f"bad complex scalar {token!r}")
            return self.domain.dtype(z.real, z.imag)

        if not isinstance(token, str):
            if isinstance(token, int) and not isinstance(token, bool):
                return self.rational(token)
            raise ParseError("", f"exact scalars are strings, got {token!r}")

        if self.mode is ScalarMode.RATIONAL:
            try:
                value = Rational(token.strip())
            except (TypeError, ValueError, SympifyError):
                raise ParseError("", f"bad rational {token!r}")
            return self.rational(int(value.p), int(value.q))

        try:
            expr = sympify(token, locals={"u": U, "q": U**2}, rational=True)
        except (SympifyError, SyntaxError, TypeError):
            raise ParseError("", f"bad rational function {token!r}")
        if not expr.free_symbols <= {U}:
            raise ParseError("", f"only the indeterminate u may appear in {token!r}")
        return self._from_sympy(expr)

    def to_json(self, x) -> Any:
        """Serialize a scalar: a string in exact modes, [re, im] otherwise."""
        if self.mode is ScalarMode.COMPLEX:
            z = complex(x)
            return [z.real, z.imag]
        return str(self.domain.to_sympy(x))

    def to_complex(self, x, q_value: Optional[float] = None) -> complex:
        """Numeric value; in qhalf mode u is replaced by sqrt(q_value)."""
        if self.mode is ScalarMode.RATIONAL:
            return complex(float(x.numerator) / float(x.denominator))
        if self.mode is ScalarMode.COMPLEX:
            return complex(x)
        if q_value is None:
            raise ScalarModeMismatch("a numeric value of q is needed to evaluate qhalf scalars")
        return complex(self.domain.to_sympy(x).subs(U, Rational(q_value) ** Rational(1, 2)).evalf())

    # Comparison

    def is_zero(self, x) -> bool:
        if self.exact:
            return not x
        return abs(complex(x)) <= self.eps

    def eq(self, a, b) -> bool:
        if self.exact:
            return not (a - b)
        za, zb = complex(a), complex(b)
        return abs(za - zb) <= self.eps * max(1.0, abs(za), abs(zb))

    def canonical(self, x):
        """Representative with a stable hash (exact modes)."""
        if self.mode is ScalarMode.QHALF:
            return x * self.one
        return x

    def sort_key(self, x) -> Tuple:
        if self.mode is ScalarMode.RATIONAL:
            return (Fraction(int(x.numerator), int(x.denominator)),)
        if self.mode is ScalarMode.QHALF:
            expr = self.domain.to_sympy(x)
            return (len(str(expr)), str(expr))
        z = complex(x)
        digits = max(0, int(-math.log10(self.eps)))
        return (round(z.real, digits), round(z.imag, digits))

    def is_positive(self, x) -> bool:
        """Sign used for canonical choices: real sign, leading coefficient, or lexicographic."""
        if self.mode is ScalarMode.RATIONAL:
            return x > 0
        if self.mode is ScalarMode.QHALF:
            return self.domain.is_positive(x)
        z = complex(x)
        if abs(z.real) > self.eps:
            return z.real > 0
        return z.imag > 0

    # Arithmetic helpers

    def power(self, x, k: int):
        if k >= 0:
            return x**k
        return self.one / (x ** (-k))

    def product(self, values: Iterable):
        result = self.one
        for v in values:
            result = result * v
        return result

    def sqrt(self, x):
        """Square root inside the field, or NotASquare.

        Rationals return the non-negative root; rational functions the root
        with positive leading coefficient; complex the principal root.
        """
        if self.mode is ScalarMode.QHALF:
            root = self._sqrt_rational_function(x)
        else:
            root = self.domain.exsqrt(x)
        if root is None:
            raise NotASquare(f"{self.to_json(x)} is not a square in {self.mode.value} mode")
        return root

    def _sqrt_rational_function(self, x):
        if not x:
            return self.zero
        numer = self._sqrt_polynomial(self.domain.numer(x))
        denom = self._sqrt_polynomial(self.domain.denom(x))
        if numer is None or denom is None:
            return None
        return self.domain.from_sympy(numer.as_expr() / denom.as_expr())

    @staticmethod
    def _sqrt_polynomial(f):
        coeff, factors = f.factor_list()
        if any(exp % 2 for _, exp in factors):
            return None
        coeff_root = f.ring.domain.exsqrt(coeff)
        if coeff_root is None:
            return None
        root = f.ring.ground_new(coeff_root)
        for g, exp in factors:
            root = root * g ** (exp // 2)
        if f.ring.domain.is_negative(root.LC):
            root = -root
        return root

    def half_power(self, q, k: int):
        """q^{k/2}; odd k needs a square root of q."""
        if k % 2 == 0:
            return self.power(q, k // 2)
        try:
            root = self.sqrt(q)
        except NotASquare:
            raise HalfIntegralPower(
                f"q^({k}/2) needs sqrt(q) for q={self.to_json(q)}; use qhalf mode with q = u**2"
            )
        return self.power(root, k)

    def default_q(self, prime: int):
        """The value of q at a prime: u**2 in qhalf mode, the prime otherwise."""
        if self.mode is ScalarMode.QHALF:
            return self.u**2
        return self.rational(prime)

    def values(self, items: Iterable[Any]) -> List:
        return [self.convert(v) for v in items]


RATIONAL = ScalarField(ScalarMode.RATIONAL)
QHALF = ScalarField(ScalarMode.QHALF)
