"""
Exact coefficient tower Q -> Q(q) -> Q(q)(t).

Rationals are ``fractions.Fraction``. Polynomials in ``q`` are stored as
tuples of coefficients, lowest exponent first. A ``RationalFunctionQ`` keeps
its numerator and denominator as integer polynomials with joint content 1,
coprime, and a positive leading denominator coefficient, so two equal
rational functions always have identical representations.

``TPoly`` and ``RationalFunctionQT`` add the variable ``t`` on top of any
exact field (``RationalFunctionQ`` in symbolic mode, ``Fraction`` when ``q``
has been given a numeric value).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Iterable, Sequence

__all__ = [
    "PoleError", "EvaluationPoleError",
    "PolynomialQ", "RationalFunctionQ", "TPoly", "RationalFunctionQT",
    "ratq_normalize", "polyq_gcd", "ratqt_limit_t0", "ratq_eval",
    "parse_poly", "format_poly", "Q", "ONE", "ZERO",
]


class PoleError(ArithmeticError):
    """A rational function was evaluated where its denominator vanishes."""


class EvaluationPoleError(PoleError):
    """The denominator vanishes at the requested numeric value of q."""


def _as_rational(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# dense integer polynomials (tuples of ints, lowest degree first)

def _trim(c: list) -> tuple:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _zadd(a: Sequence[int], b: Sequence[int]) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, v in enumerate(b):
        out[k] += v
    return _trim(out)


def _zneg(a: Sequence[int]) -> tuple:
    return tuple(-v for v in a)


def _zsub(a: Sequence[int], b: Sequence[int]) -> tuple:
    return _zadd(a, _zneg(b))


def _zmul(a: Sequence[int], b: Sequence[int]) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        c = a[0]
        return tuple(c * v for v in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * v for v in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _zshift(a: Sequence[int], k: int) -> tuple:
    if not a:
        return ()
    if k >= 0:
        return (0,) * k + tuple(a)
    return tuple(a[-k:])


def _zord(a: Sequence[int]) -> int:
    for k, v in enumerate(a):
        if v:
            return k
    raise ValueError("order of the zero polynomial")


def _zcontent(a: Iterable[int]) -> int:
    return reduce(gcd, a, 0)


def _zdivexact_scalar(a: Sequence[int], c: int) -> tuple:
    return tuple(v // c for v in a)


def _zprimitive(a: Sequence[int]) -> tuple:
    if not a:
        return ()
    c = _zcontent(a)
    if a[-1] < 0:
        c = -c
    return _zdivexact_scalar(a, c) if c != 1 else tuple(a)


def _zprem(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Pseudo-remainder of a by b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [v * lb for v in r]
        for k, v in enumerate(b):
            r[k + shift] -= lr * v
        r = list(_trim(r))
    return tuple(r)


def _zdivexact(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Quotient of a by b, assuming b divides a exactly over the integers."""
    if len(b) == 1:
        return _zdivexact_scalar(a, b[0])
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db) if len(a) > db else []
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = c
        for k, v in enumerate(b):
            r[k + shift] -= c * v
        r = list(_trim(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


_GCD_PRIMES = (2147483629, 2147483587)


def _modp_gcd_degree(a: Sequence[int], b: Sequence[int], p: int) -> int:
    a = list(_trim([v % p for v in a]))
    b = list(_trim([v % p for v in b]))
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = a[-1] * inv % p
            shift = len(a) - 1 - db
            for k, v in enumerate(b):
                a[k + shift] = (a[k + shift] - c * v) % p
            a = list(_trim(a))
        a, b = b, a
    return len(a) - 1


def _zgcd(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    if not a:
        return _zprimitive(b)
    if not b:
        return _zprimitive(a)
    v = min(_zord(a), _zord(b))
    a = _zshift(a, -_zord(a))
    b = _zshift(b, -_zord(b))
    if len(a) == 1 or len(b) == 1:
        return _zshift((1,), v)
    # one modular image decides coprimality (the common case) cheaply
    p = _GCD_PRIMES[0]
    if a[-1] % p and _modp_gcd_degree(a, b, p) == 0:
        return _zshift((1,), v)
    a, b = _zprimitive(a), _zprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _zprem(a, b)
        a, b = b, _zprimitive(r) if r else ()
    return _zshift(_zprimitive(a), v)


def _zeval(a: Sequence[int], x):
    acc = 0
    for v in reversed(a):
        acc = acc * x + v
    return acc


# ---------------------------------------------------------------------------
# polynomial string format: "-1 + q^2", "3/2*q - q^4"

def _format_terms(coeffs: Sequence, var: str) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        c = Fraction(c)
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def format_poly(coeffs: Sequence, var: str = "q") -> str:
    return _format_terms(coeffs, var)


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(?:([a-z])(?:\^(\d+))?)?\s*"
)


def parse_poly(text: str, var: str = "q") -> PolynomialQ:
    """Parse the sparse ascending term format back into a polynomial."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign, num, sym, exp = m.groups()
        if num is None and sym is None:
            raise ValueError(f"cannot parse polynomial {text!r}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        if sym is not None and sym != var:
            raise ValueError(f"unexpected variable {sym!r} in {text!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if sym is None else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
        first = False
    deg = max(coeffs)
    return PolynomialQ([coeffs.get(k, 0) for k in range(deg + 1)])


# ---------------------------------------------------------------------------

class PolynomialQ:
    """Polynomial in q with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([_as_rational(Fraction(c) if not isinstance(c, int) else c)
                             for c in coeffs])

    @classmethod
    def monomial(cls, k: int, c=1) -> PolynomialQ:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PolynomialQ):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: PolynomialQ) -> PolynomialQ:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return PolynomialQ(out)

    def __neg__(self) -> PolynomialQ:
        return PolynomialQ([-c for c in self.coeffs])

    def __sub__(self, other: PolynomialQ) -> PolynomialQ:
        return self + (-other)

    def __mul__(self, other) -> PolynomialQ:
        if not isinstance(other, PolynomialQ):
            return PolynomialQ([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolynomialQ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return PolynomialQ(out)

    __rmul__ = __mul__

    def __divmod__(self, other: PolynomialQ) -> tuple[PolynomialQ, PolynomialQ]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = Fraction(other.leading())
        quot = [Fraction(0)] * max(len(r) - d, 0)
        while len(r) - 1 >= d and r:
            c = r[-1] / lead
            shift = len(r) - 1 - d
            quot[shift] = c
            for k, v in enumerate(other.coeffs):
                r[k + shift] -= c * v
            r = list(_trim(r))
        return PolynomialQ(quot), PolynomialQ(r)

    def monic(self) -> PolynomialQ:
        lead = Fraction(self.leading())
        return PolynomialQ([Fraction(c) / lead for c in self.coeffs])

    def __call__(self, x):
        return _zeval(self.coeffs, x)

    def cleared(self) -> tuple[tuple, Fraction]:
        """Return (integer primitive-ish coefficients, scale) with self = scale * ints."""
        if not self.coeffs:
            return (), Fraction(1)
        den = reduce(lambda acc, c: acc * Fraction(c).denominator // gcd(acc, Fraction(c).denominator),
                     self.coeffs, 1)
        ints = tuple(int(c * den) for c in self.coeffs)
        cont = _zcontent(ints)
        return tuple(v // cont for v in ints), Fraction(cont, den)

    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"PolynomialQ({format_poly(self.coeffs)!r})"


def polyq_gcd(a: PolynomialQ, b: PolynomialQ) -> PolynomialQ:
    """Monic gcd over Q, by Euclidean remainders with content clearing."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    za, _ = a.cleared()
    zb, _ = b.cleared()
    if not za:
        return PolynomialQ(zb).monic()
    if not zb:
        return PolynomialQ(za).monic()
    za, zb = _zprimitive(za), _zprimitive(zb)
    if len(za) < len(zb):
        za, zb = zb, za
    while zb:
        r = _zprem(za, zb)
        za, zb = zb, (_zprimitive(r) if r else ())
    return PolynomialQ(za).monic()


# ---------------------------------------------------------------------------

class RationalFunctionQ:
    """Element of Q(q) in canonical form; equality is representational."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=1):
        # convenience constructor; accepts ints, Fractions, PolynomialQ
        n = _to_zpoly_scaled(num)
        d = _to_zpoly_scaled(den)
        (nz, ns), (dz, ds) = n, d
        if not dz:
            raise ZeroDivisionError("division by zero polynomial")
        s = ns / ds
        nz = tuple(v * s.numerator for v in nz)
        dz = tuple(v * s.denominator for v in dz)
        self._set(*_normalize(nz, dz))

    def _set(self, num: tuple, den: tuple):
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> RationalFunctionQ:
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    @classmethod
    def from_zpolys(cls, num: Sequence[int], den: Sequence[int]) -> RationalFunctionQ:
        return cls._raw(*_normalize(_trim([int(c) for c in num]), _trim([int(c) for c in den])))

    @classmethod
    def q_power(cls, k: int) -> RationalFunctionQ:
        if k >= 0:
            return cls._raw((0,) * k + (1,), (1,))
        return cls._raw((1,), (0,) * (-k) + (1,))

    @property
    def num(self) -> PolynomialQ:
        return PolynomialQ(self._num)

    @property
    def den(self) -> PolynomialQ:
        return PolynomialQ(self._den)

    @property
    def znum(self) -> tuple:
        return self._num

    @property
    def zden(self) -> tuple:
        return self._den

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def is_constant(self) -> bool:
        return len(self._num) <= 1 and len(self._den) == 1

    def __eq__(self, other):
        if isinstance(other, RationalFunctionQ):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == RationalFunctionQ(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def _coerce(self, other) -> RationalFunctionQ:
        if isinstance(other, RationalFunctionQ):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunctionQ(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        a, b, c, d = self._num, self._den, other._num, other._den
        if b == d:
            return RationalFunctionQ._raw(*_normalize(_zadd(a, c), b))
        if len(b) == 1 and len(d) == 1 or _is_monomial(b) and _is_monomial(d):
            # monomial denominators: combine without a polynomial gcd
            kb, kd = len(b) - 1, len(d) - 1
            k = max(kb, kd)
            cb, cd = b[-1], d[-1]
            l = cb * cd // gcd(cb, cd)
            num = _zadd(_zshift(tuple(v * (l // cb) for v in a), k - kb),
                        _zshift(tuple(v * (l // cd) for v in c), k - kd))
            den = _zshift((l,), k)
            return RationalFunctionQ._raw(*_normalize(num, den, monomial_den=True))
        g = _zgcd(b, d)
        if len(g) == 1:
            num = _zadd(_zmul(a, d), _zmul(c, b))
            return RationalFunctionQ._raw(*_normalize(num, _zmul(b, d)))
        bg, dg = _zdivexact(b, g), _zdivexact(d, g)
        num = _zadd(_zmul(a, dg), _zmul(c, bg))
        return RationalFunctionQ._raw(*_normalize(num, _zmul(bg, d)))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionQ._raw(_zneg(self._num), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        a, b, c, d = self._num, self._den, other._num, other._den
        if len(b) == 1 and len(d) == 1 and len(a) == 1 and len(c) == 1:
            return RationalFunctionQ(Fraction(a[0], b[0]) * Fraction(c[0], d[0]))
        g1 = _zgcd(a, d)
        g2 = _zgcd(c, b)
        if len(g1) > 1:
            a, d = _zdivexact(a, g1), _zdivexact(d, g1)
        if len(g2) > 1:
            c, b = _zdivexact(c, g2), _zdivexact(b, g2)
        num, den = _zmul(a, c), _zmul(b, d)
        return RationalFunctionQ._raw(*_fix_content(num, den))

    __rmul__ = __mul__

    def inverse(self) -> RationalFunctionQ:
        if not self._num:
            raise ZeroDivisionError("division by zero polynomial")
        return RationalFunctionQ._raw(*_fix_content(self._den, self._num))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self._num[0] if self._num else 0, self._den[0])

    def __str__(self):
        if len(self._den) == 1 and self._den[0] == 1:
            return format_poly(self._num)
        return f"{format_poly(self._num)} / {format_poly(self._den)}"

    def __repr__(self):
        return f"RationalFunctionQ({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> RationalFunctionQ:
        if "/" in text and " / " in text:
            n, d = text.split(" / ", 1)
            return cls(parse_poly(n), parse_poly(d))
        return cls(parse_poly(text))


def _is_monomial(p: tuple) -> bool:
    return len(p) >= 1 and not any(p[:-1])


def _to_zpoly_scaled(x) -> tuple[tuple, Fraction]:
    if isinstance(x, RationalFunctionQ):
        raise TypeError("pass polynomials, not rational functions")
    if isinstance(x, PolynomialQ):
        return x.cleared()
    if isinstance(x, (int, Fraction)):
        f = Fraction(x)
        if not f:
            return (), Fraction(1)
        return (1,), f
    if isinstance(x, (tuple, list)):
        return PolynomialQ(x).cleared()
    raise TypeError(f"cannot build a polynomial from {type(x).__name__}")


def _fix_content(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    if not num:
        return (), (1,)
    c = gcd(_zcontent(num), _zcontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = _zdivexact_scalar(num, c)
        den = _zdivexact_scalar(den, c)
    return num, den


def _normalize(num: tuple, den: tuple, monomial_den: bool = False) -> tuple[tuple, tuple]:
    """Canonical (num, den): coprime, joint content 1, positive leading den."""
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return (), (1,)
    v = min(_zord(num), _zord(den))
    if v:
        num, den = num[v:], den[v:]
    if not (monomial_den or len(den) == 1 or len(num) == 1
            or _is_monomial(den) or _is_monomial(num)):
        g = _zgcd(num, den)
        if len(g) > 1:
            num, den = _zdivexact(num, g), _zdivexact(den, g)
    return _fix_content(num, den)


def ratq_normalize(num: PolynomialQ, den: PolynomialQ) -> RationalFunctionQ:
    """Canonical representative of num/den."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    return RationalFunctionQ(num, den)


def ratq_eval(f: RationalFunctionQ, q0) -> Fraction:
    """Exact value of f at the rational point q0."""
    q0 = Fraction(q0)
    d = _zeval(f.zden, q0)
    if d == 0:
        raise EvaluationPoleError(f"evaluation pole: {f} at q = {q0}")
    return Fraction(_zeval(f.znum, q0)) / d


ZERO = RationalFunctionQ._raw((), (1,))
ONE = RationalFunctionQ._raw((1,), (1,))
Q = RationalFunctionQ._raw((0, 1), (1,))


# ---------------------------------------------------------------------------
# polynomials in t over an exact field

def _is_zero(c) -> bool:
    return not c


class TPoly:
    """Polynomial in t with coefficients in an exact field, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = list(coeffs)
        while c and _is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def order(self) -> int:
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return k
        raise ValueError("order of the zero polynomial")

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: TPoly) -> TPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] = out[k] + v
        return TPoly(out)

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other: TPoly) -> TPoly:
        return self + (-other)

    def __mul__(self, other) -> TPoly:
        if not isinstance(other, TPoly):
            return TPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return TPoly()
        out: list[Any] = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero(x):
                continue
            for j, y in enumerate(b):
                p = x * y
                out[i + j] = p if out[i + j] is None else out[i + j] + p
        zero = a[0] - a[0]
        return TPoly([zero if v is None else v for v in out])

    def scale(self, c) -> TPoly:
        return TPoly([v * c for v in self.coeffs])

    def shift_down(self, k: int) -> TPoly:
        return TPoly(self.coeffs[k:])

    def divmod(self, other: TPoly) -> tuple[TPoly, TPoly]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        quot: list[Any] = [lead - lead] * max(len(r) - d, 0)
        while r and len(r) - 1 >= d:
            c = r[-1] / lead
            shift = len(r) - 1 - d
            quot[shift] = c
            for k, v in enumerate(other.coeffs):
                r[k + shift] = r[k + shift] - c * v
            while r and _is_zero(r[-1]):
                r.pop()
        return TPoly(quot), TPoly(r)

    def monic(self) -> TPoly:
        lead = self.coeffs[-1]
        return TPoly([c / lead for c in self.coeffs])

    def at_zero(self):
        return self.coeffs[0] if self.coeffs else None

    def __repr__(self):
        return f"TPoly({[str(c) for c in self.coeffs]})"


def _tgcd(a: TPoly, b: TPoly) -> TPoly:
    while b:
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


class RationalFunctionQT:
    """Element of K(t) for an exact field K, in canonical form.

    The numerator and denominator are coprime and the denominator is monic
    in t, so equality is representational. With K = Q(q) this is the field
    in which the fusion products live.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: TPoly, den: TPoly | None = None, *, one=None):
        if den is None:
            if one is None:
                one = ONE
            den = TPoly([one])
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        self._hash = None
        if num.is_zero():
            self.num = num
            self.den = TPoly([den.coeffs[-1] / den.coeffs[-1]])
            return
        v = min(num.order(), den.order())
        if v:
            num, den = num.shift_down(v), den.shift_down(v)
        if den.degree > 0 and num.degree > 0:
            g = _tgcd(num, den)
            if g.degree > 0:
                num, _ = num.divmod(g)
                den, _ = den.divmod(g)
        lead = den.coeffs[-1]
        self.num = TPoly([c / lead for c in num.coeffs])
        self.den = TPoly([c / lead for c in den.coeffs])

    @classmethod
    def constant(cls, c) -> RationalFunctionQT:
        return cls(TPoly([c]), TPoly([c / c if c else c + 1]))

    def _one(self):
        return self.den.coeffs[-1]

    def _coerce(self, other):
        if isinstance(other, RationalFunctionQT):
            return other
        one = self._one()
        try:
            return RationalFunctionQT(TPoly([one * other]), TPoly([one]))
        except TypeError:
            return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RationalFunctionQT):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunctionQT(self.num + other.num, self.den)
        return RationalFunctionQT(self.num * other.den + other.num * self.den,
                                  self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionQT(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunctionQT(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunctionQT:
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return RationalFunctionQT(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __repr__(self):
        return f"RationalFunctionQT({self.num!r}, {self.den!r})"


def ratqt_limit_t0(f: RationalFunctionQT):
    """Value of f at t = 0; raises PoleError if f has a pole there."""
    d0 = f.den.at_zero()
    if d0 is None or _is_zero(d0):
        raise PoleError("pole at t=0")
    n0 = f.num.at_zero()
    if n0 is None:
        return d0 - d0
    return n0 / d0
