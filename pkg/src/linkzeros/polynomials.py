"""Exact sparse polynomial arithmetic for link invariants.

Three closely related representations, all with arbitrary-precision integer
coefficients stored in dicts keyed by exponent:

``BivarPoly``
    Ordinary polynomials in two variables ``x, y`` (exponents >= 0), the
    output type of Tutte computations.

``BivarLaurent``
    Bivariate Laurent polynomials (exponents of either sign), needed for the
    sign-weighted Tutte sum of signed graphs, where negative powers of ``y``
    appear.

``QuarterLaurent``
    Laurent polynomials in ``t^(1/4)``.  A term ``c * t^(e4/4)`` is stored as
    ``{e4: c}``; quarter-integer exponents are what the writhe prefactor of
    the Jones polynomial produces before cancellation.  For an actual link
    polynomial the exponents always collapse to the integer (``e4 % 4 == 0``)
    or half-integer (``e4 % 4 == 2``) sublattice, depending on the parity of
    the number of link components.

Coefficient arithmetic is exact throughout; nothing here ever rounds.
Numeric evaluation is the only place floating point enters, and it is kept
out of the ring operations.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "BivarPoly",
    "BivarLaurent",
    "QuarterLaurent",
    "InexactDivision",
    "exact_divide",
    "jones_substitute",
]

Scalar = Union[int]


class InexactDivision(ArithmeticError):
    """Raised when a Laurent division has a nonzero remainder."""


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c != 0}


class _BivarBase:
    """Shared arithmetic for the two bivariate classes.

    Mixed operations promote to ``BivarLaurent``; operations between two
    ``BivarPoly`` stay ``BivarPoly``.
    """

    __slots__ = ("_terms",)

    _allow_negative = True

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        tt = {}
        for key, c in (terms or {}).items():
            i, j = key
            if not (isinstance(i, int) and isinstance(j, int)):
                raise TypeError("exponents must be ints")
            if not isinstance(c, int):
                raise TypeError("coefficients must be ints")
            if not self._allow_negative and (i < 0 or j < 0):
                raise ValueError("negative exponent in a plain polynomial")
            if c != 0:
                tt[(i, j)] = c
        self._terms = tt

    # -- constructors ----------------------------------------------------

    @classmethod
    def const(cls, c: int):
        return cls({(0, 0): c})

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def var_x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def var_y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1):
        return cls({(i, j): c})

    # -- inspection -------------------------------------------------------

    def terms(self) -> tuple:
        """Sorted ``((i, j), c)`` pairs."""
        return tuple(sorted(self._terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def max_xdeg(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(i for i, _ in self._terms)

    def max_ydeg(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(j for _, j in self._terms)

    # -- ring operations ---------------------------------------------------

    def _promote(self, other):
        if isinstance(other, int):
            other = BivarPoly.const(other)
        if not isinstance(other, _BivarBase):
            return None, None
        cls = type(self)
        if type(other) is not cls:
            cls = BivarLaurent
        return cls, other

    def __add__(self, other):
        cls, other = self._promote(other)
        if cls is None:
            return NotImplemented
        tt = dict(self._terms)
        for k, c in other._terms.items():
            tt[k] = tt.get(k, 0) + c
        return cls(_clean(tt))

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        cls, other = self._promote(other)
        if cls is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)({k: c * other for k, c in self._terms.items()})
        cls, other = self._promote(other)
        if cls is None:
            return NotImplemented
        tt: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                tt[k] = tt.get(k, 0) + c1 * c2
        return cls(_clean(tt))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = type(self).const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == _clean({(0, 0): other})
        if not isinstance(other, _BivarBase):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- evaluation ---------------------------------------------------------

    def eval(self, x, y):
        """Evaluate at (x, y).

        Integer or Fraction arguments give exact results (ints are promoted
        to Fraction when negative exponents are present); complex arguments
        evaluate in floating point.
        """
        if any(i < 0 or j < 0 for i, j in self._terms):
            if isinstance(x, int):
                x = Fraction(x)
            if isinstance(y, int):
                y = Fraction(y)
        total = 0
        for (i, j), c in self._terms.items():
            total += c * x**i * y**j
        return total

    # -- serialization --------------------------------------------------------

    def to_json(self) -> str:
        items = [
            {"xe": i, "ye": j, "c": str(c)} for (i, j), c in sorted(self._terms.items())
        ]
        return json.dumps({"terms": items})

    @classmethod
    def from_json(cls, text: str):
        data = json.loads(text)
        tt = {}
        for item in data["terms"]:
            key = (int(item["xe"]), int(item["ye"]))
            tt[key] = tt.get(key, 0) + int(item["c"])
        return cls(tt)

    def __repr__(self):
        return f"{type(self).__name__}({self._terms!r})"

    def pretty(self) -> str:
        """Human-readable form, terms ordered by (x, y) exponent."""
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.terms():
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


class BivarLaurent(_BivarBase):
    """Bivariate Laurent polynomial, integer exponents of either sign."""

    __slots__ = ()
    _allow_negative = True


class BivarPoly(_BivarBase):
    """Bivariate polynomial, nonnegative exponents only."""

    __slots__ = ()
    _allow_negative = False


class QuarterLaurent:
    """Laurent polynomial in ``t^(1/4)``: term ``c * t^(e4/4)`` keyed by e4."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        tt = {}
        for e4, c in (terms or {}).items():
            if not isinstance(e4, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            if c != 0:
                tt[e4] = c
        self._terms = tt

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "QuarterLaurent":
        return cls({0: c})

    @classmethod
    def t_power(cls, e4: int, c: int = 1) -> "QuarterLaurent":
        """The monomial ``c * t^(e4/4)``; e4 = 4 is plain ``t``."""
        return cls({e4: c})

    @classmethod
    def zero(cls) -> "QuarterLaurent":
        return cls({})

    # -- inspection ----------------------------------------------------------

    def terms(self) -> tuple:
        return tuple(sorted(self._terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, e4: int) -> int:
        return self._terms.get(e4, 0)

    def min_e4(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_e4(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def span(self) -> Fraction:
        """Degree spread in units of t: (max - min) / 4."""
        return Fraction(self.max_e4() - self.min_e4(), 4)

    def exponent_residues(self) -> set:
        return {e4 % 4 for e4 in self._terms}

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = QuarterLaurent.const(other)
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        tt = dict(self._terms)
        for e4, c in other._terms.items():
            tt[e4] = tt.get(e4, 0) + c
        return QuarterLaurent(_clean(tt))

    __radd__ = __add__

    def __neg__(self):
        return QuarterLaurent({e4: -c for e4, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QuarterLaurent.const(other)
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QuarterLaurent({e4: c * other for e4, c in self._terms.items()})
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        tt: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                tt[e] = tt.get(e, 0) + c1 * c2
        return QuarterLaurent(_clean(tt))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = QuarterLaurent.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == _clean({0: other})
        if not isinstance(other, QuarterLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- transforms --------------------------------------------------------

    def shift(self, e4: int, sign: int = 1) -> "QuarterLaurent":
        """Multiply by ``sign * t^(e4/4)``."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return QuarterLaurent({e + e4: sign * c for e, c in self._terms.items()})

    def invert_t(self) -> "QuarterLaurent":
        """Substitute t -> 1/t."""
        return QuarterLaurent({-e4: c for e4, c in self._terms.items()})

    def strip_monomial(self) -> tuple[int, list]:
        """Factor out the lowest monomial.

        Returns ``(e4_min, coeffs)`` with ``self = t^(e4_min/4) * p(t)`` and
        ``coeffs`` the dense integer coefficient list of ``p`` (ascending,
        ``coeffs[0] != 0``).  Raises ValueError when the exponents do not
        lie on a common integer lattice over the lowest term.
        """
        if not self._terms:
            raise ValueError("cannot strip the zero polynomial")
        e4_min = self.min_e4()
        degrees = {}
        for e4, c in self._terms.items():
            d4 = e4 - e4_min
            if d4 % 4 != 0:
                raise ValueError("exponents are not t-integral over the lowest term")
            degrees[d4 // 4] = c
        coeffs = [0] * (max(degrees) + 1)
        for d, c in degrees.items():
            coeffs[d] = c
        return e4_min, coeffs

    # -- evaluation ----------------------------------------------------------

    def eval(self, t) -> complex:
        """Evaluate at complex t (principal branch for fractional powers)."""
        t = complex(t)
        total = 0j
        for e4, c in self._terms.items():
            if e4 % 4 == 0:
                total += c * t ** (e4 // 4)
            else:
                total += c * t ** (e4 / 4)
        return total

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> str:
        items = [{"e4": e4, "c": str(c)} for e4, c in sorted(self._terms.items())]
        return json.dumps({"terms": items})

    @classmethod
    def from_json(cls, text: str) -> "QuarterLaurent":
        data = json.loads(text)
        tt: dict = {}
        for item in data["terms"]:
            e4 = int(item["e4"])
            tt[e4] = tt.get(e4, 0) + int(item["c"])
        return cls(tt)

    def __repr__(self):
        return f"QuarterLaurent({self._terms!r})"

    def pretty(self) -> str:
        """Render as ``t^{e_min}*(c0 + c1*t + ...)``, lowest exponent first.

        The prefactor exponent prints as an integer when possible, otherwise
        as a reduced fraction (halves or quarters).
        """
        if not self._terms:
            return "0"
        e4_min, coeffs = self.strip_monomial()
        body_terms = []
        for p, c in enumerate(coeffs):
            if c == 0:
                continue
            if p == 0:
                base = str(abs(c))
            else:
                tpow = "t" if p == 1 else f"t^{p}"
                base = tpow if abs(c) == 1 else f"{abs(c)}*{tpow}"
            if not body_terms:
                body_terms.append(base if c > 0 else f"-{base}")
            else:
                body_terms.append(f"+ {base}" if c > 0 else f"- {base}")
        body = " ".join(body_terms)
        if e4_min == 0:
            return body
        frac = Fraction(e4_min, 4)
        expo = str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"
        prefix = f"t^{{{expo}}}"
        if body == "1":
            return prefix
        if body == "-1":
            return f"-{prefix}"
        return f"{prefix}*({body})"


def jones_substitute(p: _BivarBase, swapped: bool = False) -> QuarterLaurent:
    """Substitute (x, y) = (-t, -1/t), mapping a Tutte-style polynomial into
    the quarter-exponent Laurent ring.

    A term ``c x^i y^j`` becomes ``c (-1)^(i+j) t^(i-j)``.  With
    ``swapped=True`` the substitution is (x, y) = (-1/t, -t) instead, used by
    the second form of the signed-graph Jones evaluation.
    """
    tt: dict = {}
    for (i, j), c in p._terms.items():
        e4 = 4 * (j - i) if swapped else 4 * (i - j)
        sgn = -1 if (i + j) % 2 else 1
        tt[e4] = tt.get(e4, 0) + sgn * c
    return QuarterLaurent(_clean(tt))


def exact_divide(num: QuarterLaurent, den: QuarterLaurent) -> QuarterLaurent:
    """Exact Laurent division: the Q with ``num == den * Q``.

    Division proceeds from the lowest exponent upward.  Raises
    ``InexactDivision`` when no exact integer-coefficient quotient exists;
    nothing is ever rounded or truncated.
    """
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return QuarterLaurent.zero()
    den_terms = dict(den._terms)
    e4_d = min(den_terms)
    c_d = den_terms[e4_d]
    # exact quotient degree bound: top exponent of Q is at most this
    q_top = num.max_e4() - den.max_e4()
    rem = dict(num._terms)
    quot: dict = {}
    while rem:
        e4_n = min(rem)
        c_n = rem[e4_n]
        if c_n % c_d != 0:
            raise InexactDivision("leading coefficient does not divide")
        e4_q = e4_n - e4_d
        if e4_q > q_top:
            raise InexactDivision("nonzero remainder")
        c_q = c_n // c_d
        quot[e4_q] = c_q
        for e4, c in den_terms.items():
            k = e4 + e4_q
            v = rem.get(k, 0) - c_q * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return QuarterLaurent(quot)
