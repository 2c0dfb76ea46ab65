"""Exact Laurent polynomials in the bracket variable A.

The Jones side of the library lives in the ring Z[A, A^-1] with the
substitutions q = -A^-2 and t = A^-4.  Values at q = i are Gaussian
integers, computed exactly in Z[x]/(x^4 + 1) with x = A a primitive
8th root of unity satisfying x^2 = i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, Mapping


class NotInQSubring(ValueError):
    """Raised when a polynomial expected to be in Z[q, q^-1] is not."""


@dataclass(frozen=True)
class GaussianInt:
    """Gaussian integer ``re + im*i``."""

    re: int
    im: int = 0

    def __add__(self, other: GaussianInt | int) -> GaussianInt:
        o = _gauss(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other: GaussianInt | int) -> GaussianInt:
        return self + (-_gauss(other))

    def __rsub__(self, other: GaussianInt | int) -> GaussianInt:
        return _gauss(other) - self

    def __mul__(self, other: GaussianInt | int) -> GaussianInt:
        o = _gauss(other)
        return GaussianInt(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GaussianInt:
        if n < 0:
            raise ValueError("negative power of a Gaussian integer")
        out, base = GaussianInt(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        return format_gaussian(self.re, self.im)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"


I = GaussianInt(0, 1)


def _gauss(x: GaussianInt | int) -> GaussianInt:
    return x if isinstance(x, GaussianInt) else GaussianInt(int(x), 0)


def i_power(n: int) -> GaussianInt:
    """Return i**n for any integer n."""
    return (GaussianInt(1), I, GaussianInt(-1), GaussianInt(0, -1))[n % 4]


def format_gaussian(re_: object, im: object) -> str:
    if im == 0:
        return str(re_)
    if im == 1:
        tail = "i"
    elif im == -1:
        tail = "-i"
    else:
        tail = f"{im}i"
    if re_ == 0:
        return tail
    sign = "" if tail.startswith("-") else "+"
    return f"{re_}{sign}{tail}"


_GAUSS_RE = re.compile(
    r"^\s*(?:(?P<re>[+-]?\d+)(?=$|[+-]))?"
    r"(?:(?P<im>[+-]?\d*)i)?\s*$")


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``-23``, ``2i``, ``-i`` or ``3-4i``."""
    m = _GAUSS_RE.match(text)
    if not m or not text.strip() or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"not a Gaussian integer: {text!r}")
    re_ = int(m.group("re")) if m.group("re") else 0
    im_txt = m.group("im")
    if im_txt is None:
        im = 0
    elif im_txt in ("", "+"):
        im = 1
    elif im_txt == "-":
        im = -1
    else:
        im = int(im_txt)
    return GaussianInt(re_, im)


class LaurentA:
    """Immutable Laurent polynomial in A with integer coefficients.

    Terms are kept as a mapping exponent -> nonzero coefficient, so the
    zero polynomial has no terms and equal polynomials compare equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentA:
        # trusted constructor: caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentA:
        return cls({exponent: coeff})

    @classmethod
    def from_q(cls, q_terms: Mapping[int, int]) -> LaurentA:
        """Build the A-form of sum c_m q^m using q = -A^-2."""
        return cls({-2 * m: (-c if m % 2 else c) for m, c in q_terms.items()})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterable[tuple[int, int]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentA({0: other})
        if not isinstance(other, LaurentA):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: LaurentA | int) -> LaurentA:
        o = _lift(other)
        out = dict(self._terms)
        for e, c in o._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentA._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentA:
        return LaurentA._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentA | int) -> LaurentA:
        return self + (-_lift(other))

    def __rsub__(self, other: LaurentA | int) -> LaurentA:
        return _lift(other) - self

    def __mul__(self, other: LaurentA | int) -> LaurentA:
        return multiply(self, _lift(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentA:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have negative powers")
            return LaurentA({e * n: c ** (-n)})
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentA:
        """Multiply by A^k."""
        return LaurentA._raw({e + k: c for e, c in self._terms.items()})

    def substitute_inverse(self) -> LaurentA:
        """Apply A -> A^-1 (the mirror-image involution)."""
        return LaurentA._raw({-e: c for e, c in self._terms.items()})

    def in_q_subring(self) -> bool:
        return all(e % 2 == 0 for e in self._terms)

    def q_terms(self) -> dict[int, int]:
        """Coefficients c_m with self = sum c_m q^m."""
        if not self.in_q_subring():
            raise NotInQSubring("polynomial not in the q-subring")
        out = {}
        for e, c in self._terms.items():
            m = -e // 2
            out[m] = -c if m % 2 else c
        return out

    def exact_div(self, other: LaurentA) -> LaurentA:
        """Quotient self / other; raises ValueError if not exact."""
        q, r = divmod_laurent(self, other)
        if r:
            raise ValueError("division is not exact")
        return q

    def __repr__(self) -> str:
        return f"LaurentA({render_a(self)!r})"

    def __str__(self) -> str:
        return render_a(self)


def _lift(x: LaurentA | int) -> LaurentA:
    if isinstance(x, LaurentA):
        return x
    return LaurentA({0: int(x)})


ONE = LaurentA({0: 1})
ZERO = LaurentA()
LOOP = LaurentA({2: -1, -2: -1})          # -A^2 - A^-2
QPLUS = LaurentA({-2: -1, 2: -1})         # q + q^-1 in A-form


def multiply(a: LaurentA, b: LaurentA) -> LaurentA:
    """Exact product of two Laurent polynomials."""
    at, bt = a._terms, b._terms
    if len(at) < len(bt):
        at, bt = bt, at
    out: dict[int, int] = {}
    get = out.get
    for e1, c1 in bt.items():
        for e2, c2 in at.items():
            e = e1 + e2
            out[e] = get(e, 0) + c1 * c2
    return LaurentA._raw({e: c for e, c in out.items() if c})


def divmod_laurent(a: LaurentA, b: LaurentA) -> tuple[LaurentA, LaurentA]:
    """Long division treating both sides as polynomials after shifting.

    Returns (quotient, remainder) with a = quotient*b + remainder.  The
    remainder is zero exactly when b divides a in Z[A, A^-1] with an
    integral quotient.  Non-monic divisors may leave fractional steps;
    those are reported as a nonzero remainder.
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ZERO, ZERO
    lo_b, hi_b = b.min_degree(), b.max_degree()
    lead = b._terms[hi_b]
    rem = dict(a._terms)
    quot: dict[int, int] = {}
    while rem:
        hi = max(rem)
        if hi - hi_b < min(rem) - lo_b:
            break
        c = rem[hi]
        if c % lead:
            break
        k = c // lead
        shift = hi - hi_b
        quot[shift] = k
        for e, cb in b._terms.items():
            v = rem.get(e + shift, 0) - k * cb
            if v:
                rem[e + shift] = v
            else:
                rem.pop(e + shift, None)
    return LaurentA(quot), LaurentA(rem)


def factor_multiplicity_qplus(p: LaurentA) -> tuple[int, LaurentA]:
    """Split p = u^m * r with u the A-form of q + q^-1 and m maximal.

    Since u = -A^-2 (A^4 + 1) differs from A^4 + 1 by a unit, dividing
    by u is exact precisely when A^4 + 1 divides.
    """
    if not p:
        raise ValueError("undefined multiplicity: zero polynomial")
    m = 0
    cur = p
    while True:
        q, r = divmod_laurent(cur, QPLUS)
        if r:
            return m, cur
        cur = q
        m += 1


def eval_q_i(p: LaurentA) -> GaussianInt:
    """Evaluate at q = i, i.e. at A = zeta with zeta^2 = i.

    The value is computed in Z[x]/(x^4 + 1); a nonzero coefficient on
    x or x^3 means p was not a polynomial in q.
    """
    c = [0, 0, 0, 0]
    for e, coeff in p._terms.items():
        r = e % 8
        if r >= 4:
            c[r - 4] -= coeff
        else:
            c[r] += coeff
    if c[1] or c[3]:
        raise NotInQSubring("polynomial not in the q-subring")
    return GaussianInt(c[0], c[2])


def eval_q_1(p: LaurentA) -> int:
    """Evaluate at q = 1, where A^2 = -1."""
    total = 0
    for e, coeff in p._terms.items():
        if e % 2:
            raise NotInQSubring("polynomial not in the q-subring")
        total += -coeff if (e // 2) % 2 else coeff
    return total


@dataclass(frozen=True)
class GaussianRational:
    """``(re + im*i) / den`` in lowest terms with den > 0."""

    re: int
    im: int
    den: int = 1

    @classmethod
    def make(cls, re_: Fraction, im: Fraction) -> GaussianRational:
        re_, im = Fraction(re_), Fraction(im)
        den = re_.denominator * im.denominator // gcd(re_.denominator, im.denominator)
        a, b = int(re_ * den), int(im * den)
        g = gcd(gcd(a, b), den)
        return cls(a // g, b // g, den // g)

    @property
    def real(self) -> Fraction:
        return Fraction(self.re, self.den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.im, self.den)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def as_gaussian(self) -> GaussianInt:
        if self.den != 1:
            raise ValueError(f"{self} is not a Gaussian integer")
        return GaussianInt(self.re, self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, GaussianInt)):
            g = _gauss(other)
            return self.den == 1 and self.re == g.re and self.im == g.im
        if isinstance(other, GaussianRational):
            return (self.re, self.im, self.den) == (other.re, other.im, other.den)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im, self.den))

    def __str__(self) -> str:
        num = format_gaussian(self.re, self.im)
        if self.den == 1:
            return num
        if self.re and self.im:
            num = f"({num})"
        return f"{num}/{self.den}"


@dataclass(frozen=True)
class SeriesAtI:
    """Truncated expansion sum_{k<=order} coeffs[k] h^k."""

    order: int
    coeffs: tuple[GaussianRational, ...]

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k]

    def first_nonzero(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return None


def expand_series(p: LaurentA, center: str = "at_i", order: int = 4) -> SeriesAtI:
    """Expand p(q) at q = i*exp(h/2) (``at_i``) or q = exp(h/2) (``at_1``).

    With p = sum c_m q^m the k-th coefficient is
    sum c_m w^m m^k / (2^k k!), where w = i or 1.
    """
    if center not in ("at_i", "at_1"):
        raise ValueError(f"unknown expansion center {center!r}")
    if order < 0:
        raise ValueError("order must be non-negative")
    qt = p.q_terms()
    coeffs = []
    for k in range(order + 1):
        re_, im = 0, 0
        for m, c in qt.items():
            w = i_power(m) if center == "at_i" else GaussianInt(1)
            v = c * m ** k
            re_ += w.re * v
            im += w.im * v
        d = 2 ** k * factorial(k)
        coeffs.append(GaussianRational.make(Fraction(re_, d), Fraction(im, d)))
    return SeriesAtI(order, tuple(coeffs))


def _format_terms(items: list[tuple[int, int]], var: str) -> str:
    if not items:
        return "0"
    parts = []
    for e, c in items:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_a(p: LaurentA) -> str:
    """Render as a sum of ``c*A^e`` terms in decreasing degree."""
    return _format_terms(sorted(p._terms.items(), reverse=True), "A")


def render_q(p: LaurentA) -> str:
    """Render in the variable q (requires even A-exponents)."""
    return _format_terms(sorted(p.q_terms().items(), reverse=True), "q")


_TERM_RE = re.compile(
    r"([+-])?\s*(\d+)?\s*(?:\*?\s*([Aq])(?:\^\s*\(?\s*([+-]?\d+)\s*\)?)?)?")


def parse_laurent(text: str) -> LaurentA:
    """Parse a sum of terms in A or in q (not mixed); ``0`` is zero."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    terms: dict[int, int] = {}
    var = None
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos >= len(s):
            break
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial at offset {pos}: {text!r}")
        if not first and m.group(1) is None:
            raise ValueError(f"missing operator at offset {pos}: {text!r}")
        first = False
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        e = 0
        if m.group(3):
            if var is not None and var != m.group(3):
                raise ValueError("mixed variables A and q")
            var = m.group(3)
            e = int(m.group(4)) if m.group(4) is not None else 1
        terms[e] = terms.get(e, 0) + sign * coeff
        pos = m.end()
    if var == "q":
        return LaurentA.from_q(terms)
    return LaurentA(terms)
