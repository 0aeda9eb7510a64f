"""Exact arithmetic over Q and the rational function field Q(q).

Rationals are :class:`fractions.Fraction`; integral values are kept as plain
``int`` inside polynomials because that is several times faster and the two
types interoperate transparently.

:class:`QPoly` is a univariate polynomial in ``q`` with rational coefficients,
:class:`QRat` a reduced quotient of two of them with monic denominator.  The
q-special combinatorics (q-numbers, q-factorials, Gaussian binomials) live at
the bottom of the module.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, Union

from .errors import ConsistencyError, EvaluationError

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "QPoly",
    "QRat",
    "poly_gcd",
    "q_number",
    "q_factorial",
    "q_binomial",
    "q_binomial_quotient",
    "binom2",
]


def _norm(c) -> Scalar:
    if type(c) is int:
        return c
    if type(c) is Fraction:
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return int(c)
    if isinstance(c, Fraction):
        return _norm(Fraction(c))
    raise TypeError(f"not a rational scalar: {c!r}")


def _div_scalar(a: Scalar, b: Scalar) -> Scalar:
    if type(a) is int and type(b) is int:
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    r = Fraction(a) / b
    return r.numerator if r.denominator == 1 else r


def _lcm(a: int, b: int) -> int:
    return a // igcd(a, b) * b


class QPoly:
    """Polynomial in ``q`` over Q; ``coeffs[i]`` is the coefficient of ``q**i``.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``.
    Instances are immutable.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._hash = None

    @classmethod
    def _make(cls, coeffs: list) -> "QPoly":
        # trusted constructor: entries already normalized
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c=1) -> "QPoly":
        if exponent < 0:
            raise ValueError("negative exponent in a polynomial")
        return cls._make([0] * exponent + [_norm(c)])

    # -- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def valuation(self) -> int:
        """Exponent of the lowest nonzero term (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    def terms(self):
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == QPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if len(self.coeffs) <= 1:
                self._hash = hash(self.coeffs[0] if self.coeffs else 0)
            else:
                self._hash = hash(("QPoly", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    # -- ring operations ---------------------------------------------
    def __add__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            if isinstance(other, (int, Fraction)):
                other = QPoly.constant(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        if any(type(c) is not int for c in out):
            out = [_norm(c) for c in out]
        return QPoly._make(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._make([-c for c in self.coeffs])

    def __sub__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            if isinstance(other, (int, Fraction)):
                other = QPoly.constant(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            if isinstance(other, (int, Fraction)):
                c = _norm(other)
                if c == 0:
                    return QPoly._make([])
                return QPoly._make([_norm(x * c) for x in self.coeffs])
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly._make([])
        if len(a) == 1:
            return other * a[0]
        if len(b) == 1:
            return self * b[0]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        if any(type(c) is not int for c in out):
            out = [_norm(c) for c in out]
        return QPoly._make(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k`` (k >= 0)."""
        if not self.coeffs or k == 0:
            return self
        return QPoly._make([0] * k + list(self.coeffs))

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lc = other.leading
        bc = other.coeffs
        if len(r) <= db:
            return QPoly._make([]), self
        quot = [0] * (len(r) - db)
        unit = lc == 1
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db]
            if not c:
                continue
            t = c if unit else _div_scalar(c, lc)
            quot[k] = t
            for j in range(db + 1):
                if bc[j]:
                    r[k + j] -= t * bc[j]
        if any(type(c) is not int for c in r):
            r = [_norm(c) for c in r]
        return QPoly._make(quot), QPoly._make(r[:db])

    def exact_div(self, other: "QPoly") -> "QPoly":
        quo, rem = self.divmod(other)
        if rem:
            raise ConsistencyError(f"{self} is not divisible by {other}")
        return quo

    def monic(self) -> "QPoly":
        if not self.coeffs or self.leading == 1:
            return self
        lc = self.leading
        return QPoly._make([_div_scalar(c, lc) for c in self.coeffs])

    def compose_power(self, k: int) -> "QPoly":
        """Substitute ``q -> q**k`` (k >= 1)."""
        if k == 1 or len(self.coeffs) <= 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return QPoly._make(out)

    def evaluate(self, value) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- integer structure -------------------------------------------
    def denominator_lcm(self) -> int:
        d = 1
        for c in self.coeffs:
            if type(c) is Fraction:
                d = _lcm(d, c.denominator)
        return d

    def content(self) -> int:
        """gcd of the coefficients; only meaningful for integer polynomials."""
        g = 0
        for c in self.coeffs:
            g = igcd(g, c)
            if g == 1:
                break
        return g

    def integer_primitive(self) -> "QPoly":
        """Scale to a primitive integer polynomial with positive leading coefficient."""
        if not self.coeffs:
            return self
        d = self.denominator_lcm()
        cs = [int(c * d) for c in self.coeffs] if d != 1 else list(self.coeffs)
        g = 0
        for c in cs:
            g = igcd(g, c)
            if g == 1:
                break
        if cs[-1] < 0:
            g = -g
        if g != 1:
            cs = [c // g for c in cs]
        return QPoly._make(cs)

    # -- text ---------------------------------------------------------
    def format(self, compact: bool = False) -> str:
        """Ascending text form, e.g. ``1 + q - 2*q^3``."""
        if not self.coeffs:
            return "0"
        plus, minus = ("+", "-") if compact else (" + ", " - ")
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            neg = c < 0
            a = -c if neg else c
            if i == 0:
                body = str(a)
            else:
                power = "q" if i == 1 else f"q^{i}"
                body = power if a == 1 else f"{a}*{power}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((minus if neg else plus) + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.format()


_ZERO = QPoly._make([])
_ONE = QPoly._make([1])


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer coefficient lists (deg a >= deg b)."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        if lc != 1:
            r = [x * lc for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _primitive_list(cs: list) -> list:
    g = 0
    for c in cs:
        g = igcd(g, c)
        if g == 1:
            return cs
    if cs[-1] < 0:
        g = -g
    return [c // g for c in cs] if g not in (0, 1) else cs


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q[q] via the primitive polynomial remainder sequence."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    va, vb = a.valuation(), b.valuation()
    v = min(va, vb)
    if a.degree == va or b.degree == vb:
        # one side is a monomial: only powers of q can be shared
        return QPoly.monomial(v)
    x = list(a.integer_primitive().coeffs[va:])
    y = list(b.integer_primitive().coeffs[vb:])
    if len(x) < len(y):
        x, y = y, x
    while len(y) > 1:
        r = _prem(x, y)
        if not r:
            break
        x, y = y, _primitive_list(r)
    else:
        # y became a nonzero constant: coprime apart from q^v
        return QPoly.monomial(v)
    g = QPoly._make(y).monic()
    return g.shift(v)


def _coerce_poly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly.constant(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial in q")


class QRat:
    """Element of Q(q) in canonical form.

    ``num/den`` with gcd 1 and ``den`` monic, so structural equality is
    mathematical equality.  Zero is ``0/1``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, QRat):
            if den == 1 or (isinstance(den, QPoly) and den.is_one()):
                self.num, self.den, self._hash = num.num, num.den, None
                return
            val = num / den
            self.num, self.den, self._hash = val.num, val.den, None
            return
        n = _coerce_poly(num)
        d = _coerce_poly(den)
        if d.is_zero():
            raise ZeroDivisionError("QRat with zero denominator")
        if n.is_zero():
            self.num, self.den, self._hash = _ZERO, _ONE, None
            return
        if d.degree > 0:
            g = poly_gcd(n, d)
            if not g.is_one():
                n = n.exact_div(g)
                d = d.exact_div(g)
        lc = d.leading
        if lc != 1:
            n = n * _div_scalar(1, lc)
            d = d.monic()
        self.num, self.den, self._hash = n, d, None

    @classmethod
    def _make(cls, num: QPoly, den: QPoly) -> "QRat":
        r = object.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def coerce(cls, x) -> "QRat":
        if isinstance(x, QRat):
            return x
        if type(x) is int:
            return _small_int(x)
        if isinstance(x, (int, Fraction, QPoly)):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")

    @classmethod
    def q(cls, power: int = 1) -> "QRat":
        """``q**power``; negative powers allowed."""
        if power >= 0:
            return cls._make(QPoly.monomial(power), _ONE)
        return cls._make(_ONE, QPoly.monomial(-power))

    # -- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_one(self) -> bool:
        return self.num.coeffs == (1,) and self.den.coeffs == (1,)

    def is_polynomial(self) -> bool:
        return self.den.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.num.coeffs)

    def total_degree(self) -> int:
        """deg(num) + deg(den); the pivoting weight used by exact elimination."""
        return max(self.num.degree, 0) + self.den.degree

    def __eq__(self, other) -> bool:
        if isinstance(other, QRat):
            return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs
        if isinstance(other, (int, Fraction, QPoly)):
            return self == QRat.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.den.coeffs == (1,) and len(self.num.coeffs) <= 1:
                self._hash = hash(self.num.coeffs[0] if self.num.coeffs else 0)
            else:
                self._hash = hash(("QRat", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"QRat({self})"

    # -- field operations ---------------------------------------------
    def __add__(self, other) -> "QRat":
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.num.coeffs:
            return other
        if not other.num.coeffs:
            return self
        na, da, nb, db = self.num, self.den, other.num, other.den
        if da.coeffs == (1,) and db.coeffs == (1,):
            return QRat._make(na + nb, _ONE)
        if da.coeffs == db.coeffs:
            n = na + nb
            if n.is_zero():
                return _small_int(0)
            g = poly_gcd(n, da)
            if g.is_one():
                return QRat._make(n, da)
            return QRat._make(n.exact_div(g), da.exact_div(g))
        g = poly_gcd(da, db)
        if g.is_one():
            return QRat._make(na * db + nb * da, da * db)
        da1 = da.exact_div(g)
        db1 = db.exact_div(g)
        t = na * db1 + nb * da1
        if t.is_zero():
            return _small_int(0)
        g2 = poly_gcd(t, g)
        if not g2.is_one():
            t = t.exact_div(g2)
            db = db.exact_div(g2)
        return QRat._make(t, da1 * db)

    __radd__ = __add__

    def __neg__(self) -> "QRat":
        return QRat._make(-self.num, self.den)

    def __sub__(self, other) -> "QRat":
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QRat":
        return (-self) + other

    def __mul__(self, other) -> "QRat":
        if not isinstance(other, QRat):
            if type(other) is int or isinstance(other, Fraction):
                c = _norm(other)
                if c == 0:
                    return _small_int(0)
                return QRat._make(self.num * c, self.den)
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        na, da, nb, db = self.num, self.den, other.num, other.den
        if not na.coeffs or not nb.coeffs:
            return _small_int(0)
        if da.coeffs == (1,) and db.coeffs == (1,):
            return QRat._make(na * nb, _ONE)
        g1 = poly_gcd(na, db) if db.coeffs != (1,) else _ONE
        g2 = poly_gcd(nb, da) if da.coeffs != (1,) else _ONE
        if not g1.is_one():
            na = na.exact_div(g1)
            db = db.exact_div(g1)
        if not g2.is_one():
            nb = nb.exact_div(g2)
            da = da.exact_div(g2)
        return QRat._make(na * nb, da * db)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        n, d = self.den, self.num
        lc = d.leading
        if lc != 1:
            inv = _div_scalar(1, lc)
            n, d = n * inv, d.monic()
        return QRat._make(n, d)

    def __truediv__(self, other) -> "QRat":
        if not isinstance(other, QRat):
            try:
                other = QRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QRat":
        return QRat.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "QRat":
        if n < 0:
            return self.inverse() ** (-n)
        # gcd(num^n, den^n) = 1 already
        return QRat._make(self.num ** n, self.den ** n)

    def evaluate(self, value) -> Fraction:
        """Specialize ``q`` to a rational value."""
        d = self.den.evaluate(value)
        if d == 0:
            raise EvaluationError(f"denominator of {self} vanishes at q = {value}")
        return self.num.evaluate(value) / d

    # -- text ---------------------------------------------------------
    def _display_pair(self) -> tuple[QPoly, QPoly]:
        n, d = self.num, self.den
        if d.coeffs == (1,):
            return n, d
        scale = _lcm(n.denominator_lcm(), d.denominator_lcm())
        ncs = [int(c * scale) for c in n.coeffs]
        dcs = [int(c * scale) for c in d.coeffs]
        g = 0
        for c in ncs + dcs:
            g = igcd(g, c)
        low = next(c for c in dcs if c)
        if low < 0:
            g = -g
        return QPoly._make([c // g for c in ncs]), QPoly._make([c // g for c in dcs])

    def format(self, compact: bool = False) -> str:
        """Text form: ``(1 + q - 2*q^3)/(1 - q)``; ``compact`` drops spaces."""
        n, d = self._display_pair()
        ns = n.format(compact)
        if d.coeffs == (1,):
            return ns
        if len(n.terms()) > 1:
            ns = f"({ns})"
        ds = d.format(compact)
        dterms = d.terms()
        if len(dterms) > 1 or (dterms[0][0] > 0 and dterms[0][1] != 1):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def is_negative_display(self) -> bool:
        """True when the printed form starts with a minus sign."""
        n, _ = self._display_pair()
        for c in n.coeffs:
            if c:
                return c < 0
        return False

    def is_simple_display(self) -> bool:
        """True when the printed form is a single unsigned factor (no parentheses needed)."""
        return self.den.coeffs == (1,) and self.num.is_monomial()

    def __str__(self) -> str:
        return self.format()


_INT_CACHE: dict[int, QRat] = {}


def _small_int(k: int) -> QRat:
    r = _INT_CACHE.get(k)
    if r is None:
        r = QRat._make(QPoly._make([k] if k else []), _ONE)
        if -64 <= k <= 64:
            _INT_CACHE[k] = r
    return r


# ---------------------------------------------------------------------------
# q-special combinatorics
# ---------------------------------------------------------------------------


def binom2(n: int) -> int:
    """n choose 2 for any integer n >= 0 (0 for n < 2)."""
    return n * (n - 1) // 2 if n >= 2 else 0


def q_number(n: int, power: int = 1) -> QPoly:
    """{n} in base ``q**power``: sum of q^(power*l) for 0 <= l < n, zero if n <= 0."""
    if n <= 0:
        return _ZERO
    out = [0] * ((n - 1) * power + 1)
    for l in range(n):
        out[l * power] = 1
    return QPoly._make(out)


def q_factorial(n: int) -> QPoly:
    """Product of q_number(l) for 1 <= l <= n; 1 if n <= 0."""
    acc = _ONE
    for l in range(2, n + 1):
        acc = acc * q_number(l)
    return acc


_pascal_rows: list[list[QPoly]] = [[_ONE]]
_pascal_lock = threading.Lock()


def _pascal_row(n: int) -> list[QPoly]:
    rows = _pascal_rows
    if n < len(rows):
        return rows[n]
    with _pascal_lock:
        while len(rows) <= n:
            prev = rows[-1]
            m = len(rows)  # building row m from row m-1
            row = [_ONE]
            for p in range(1, m):
                # [m, p] = [m-1, p-1] + q^p [m-1, p]
                row.append(prev[p - 1] + prev[p].shift(p))
            row.append(_ONE)
            rows.append(row)
    return rows[n]


def q_binomial(n: int, p: int) -> QPoly:
    """Gaussian binomial [n choose p]_q via the memoized Pascal recurrence."""
    if p < 0 or p > n or n < 0:
        return _ZERO
    if p == 0 or p == n:
        return _ONE
    return _pascal_row(n)[p]


def q_binomial_quotient(n: int, p: int) -> QPoly:
    """Gaussian binomial computed from factorials; raises ConsistencyError if inexact."""
    if p < 0 or p > n or n < 0:
        return _ZERO
    if p == 0 or p == n:
        return _ONE
    return q_factorial(n).exact_div(q_factorial(p) * q_factorial(n - p))
