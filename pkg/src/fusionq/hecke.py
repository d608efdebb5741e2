"""
The finite Hecke algebra H_n in the basis T_sigma.

Products are computed by right (or left) multiplication by one generator at
a time, using the quadratic relation

    T_i^2 = 1 + (q - q^{-1}) T_i

so that T_sigma T_i = T_{sigma sigma_i} when the length goes up and
T_{sigma sigma_i} + (q - q^{-1}) T_sigma when it goes down. Coefficients live
in whatever exact ring ``ScalarRing`` describes: Q(q), Q(q)(t), or Q after
fixing a numeric value of q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator

from .exact_arith import ONE, Q, ZERO, RationalFunctionQ, RationalFunctionQT, TPoly
from .symmetric_group import Permutation, longest_element, perm_length_and_word

__all__ = [
    "ScalarRing", "RATQ", "RATQT", "numeric_ring", "HeckeElement",
    "t_sigma", "t_gen", "hecke_mul_gen_right", "hecke_mul", "t_inverse_gen",
    "t_sigma_inverse", "phi_apply", "coeff_of", "t_zero",
]


@dataclass(frozen=True)
class ScalarRing:
    """Constants of a coefficient ring: 0, 1, q and q^{-1}."""
    name: str
    zero: Any
    one: Any
    q: Any
    q_inv: Any

    @property
    def qdiff(self):
        return self.q - self.q_inv

    def coerce(self, c):
        if isinstance(c, (int, Fraction)):
            return self.one * c
        return c


RATQ = ScalarRing("Q(q)", ZERO, ONE, Q, RationalFunctionQ.q_power(-1))


def _ratqt_const(c: RationalFunctionQ) -> RationalFunctionQT:
    return RationalFunctionQT(TPoly([c]), TPoly([ONE]))


RATQT = ScalarRing("Q(q)(t)", _ratqt_const(ZERO), _ratqt_const(ONE),
                   _ratqt_const(Q), _ratqt_const(RationalFunctionQ.q_power(-1)))


def numeric_ring(q0) -> ScalarRing:
    """Q with q specialized to the rational number q0."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("q0 must be nonzero")
    return ScalarRing(f"Q[q={q0}]", Fraction(0), Fraction(1), q0, 1 / q0)


def _swap_pos(s: tuple, i: int) -> tuple:
    # s * sigma_i
    return s[:i - 1] + (s[i], s[i - 1]) + s[i + 1:]


def _swap_val(s: tuple, i: int) -> tuple:
    # sigma_i * s
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in s)


class HeckeElement:
    """An element of H_n: a sparse map from permutations to scalars.

    Treated as immutable; all operations return new elements.
    """

    __slots__ = ("n", "ring", "_terms")

    def __init__(self, n: int, terms: dict | Iterable = (), ring: ScalarRing = RATQ):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.ring = ring
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for s, c in items:
            s = tuple(s)
            if len(s) != n:
                raise ValueError(f"permutation {s} does not belong to S_{n}")
            c = ring.coerce(c)
            if c:
                clean[s] = c
        self._terms = clean

    @classmethod
    def _wrap(cls, n: int, terms: dict, ring: ScalarRing) -> HeckeElement:
        obj = cls.__new__(cls)
        obj.n = n
        obj.ring = ring
        obj._terms = terms
        return obj

    @classmethod
    def one(cls, n: int, ring: ScalarRing = RATQ) -> HeckeElement:
        return cls._wrap(n, {tuple(range(1, n + 1)): ring.one}, ring)

    @classmethod
    def zero(cls, n: int, ring: ScalarRing = RATQ) -> HeckeElement:
        return cls._wrap(n, {}, ring)

    # -- access ------------------------------------------------------------

    def coeff(self, s) -> Any:
        return self._terms.get(tuple(s), self.ring.zero)

    def terms(self) -> list[tuple[Permutation, Any]]:
        """Terms in canonical (lexicographic) permutation order."""
        return [(Permutation._trusted(s), self._terms[s]) for s in sorted(self._terms)]

    def support(self) -> list[tuple]:
        return sorted(self._terms)

    def __iter__(self) -> Iterator[tuple[tuple, Any]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for s, c in self.terms():
            word = perm_length_and_word(s)[1]
            basis = "T[" + ",".join(map(str, word)) + "]" if word else "1"
            parts.append(f"({c})*{basis}")
        return " + ".join(parts)

    # -- linear structure --------------------------------------------------

    def _check(self, other: HeckeElement):
        if self.n != other.n:
            raise ValueError(f"elements of H_{self.n} and H_{other.n} cannot be combined")

    def __add__(self, other: HeckeElement) -> HeckeElement:
        self._check(other)
        out = dict(self._terms)
        for s, c in other._terms.items():
            v = out.get(s)
            v = c if v is None else v + c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        return HeckeElement._wrap(self.n, out, self.ring)

    def __neg__(self) -> HeckeElement:
        return HeckeElement._wrap(self.n, {s: -c for s, c in self._terms.items()}, self.ring)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def scale(self, c) -> HeckeElement:
        c = self.ring.coerce(c)
        if not c:
            return HeckeElement.zero(self.n, self.ring)
        return HeckeElement._wrap(self.n, {s: v * c for s, v in self._terms.items()}, self.ring)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map_coeffs(self, f: Callable[[Any], Any], ring: ScalarRing) -> HeckeElement:
        """Apply f to every coefficient, landing in a new coefficient ring."""
        out = {}
        for s, c in self._terms.items():
            v = f(c)
            if v:
                out[s] = v
        return HeckeElement._wrap(self.n, out, ring)

    # -- generator actions -------------------------------------------------

    def mul_gen_right(self, i: int) -> HeckeElement:
        """self * T_i."""
        if not 1 <= i < self.n:
            raise ValueError(f"generator index {i} out of range for H_{self.n}")
        qd = self.ring.qdiff
        out: dict = {}
        for s, c in self._terms.items():
            t = _swap_pos(s, i)
            v = out.get(t)
            out[t] = c if v is None else v + c
            if s[i - 1] > s[i]:
                v = out.get(s)
                out[s] = c * qd if v is None else v + c * qd
        return HeckeElement._wrap(self.n, {s: c for s, c in out.items() if c}, self.ring)

    def mul_gen_left(self, i: int) -> HeckeElement:
        """T_i * self."""
        if not 1 <= i < self.n:
            raise ValueError(f"generator index {i} out of range for H_{self.n}")
        qd = self.ring.qdiff
        out: dict = {}
        for s, c in self._terms.items():
            t = _swap_val(s, i)
            v = out.get(t)
            out[t] = c if v is None else v + c
            # left descent: i+1 appears before i
            if s.index(i) > s.index(i + 1):
                v = out.get(s)
                out[s] = c * qd if v is None else v + c * qd
        return HeckeElement._wrap(self.n, {s: c for s, c in out.items() if c}, self.ring)

    def mul_word_right(self, word: Iterable[int]) -> HeckeElement:
        x = self
        for i in word:
            x = x.mul_gen_right(i)
        return x

    def mul_word_left(self, word: Iterable[int]) -> HeckeElement:
        """T_{w_1} ... T_{w_k} * self."""
        x = self
        for i in reversed(list(word)):
            x = x.mul_gen_left(i)
        return x

    def phi(self) -> HeckeElement:
        return phi_apply(self)


def t_sigma(s, ring: ScalarRing = RATQ) -> HeckeElement:
    s = Permutation(s)
    return HeckeElement._wrap(len(s), {tuple(s): ring.one}, ring)


def t_gen(i: int, n: int, ring: ScalarRing = RATQ) -> HeckeElement:
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for H_{n}")
    return HeckeElement.one(n, ring).mul_gen_right(i)


def t_zero(n: int, ring: ScalarRing = RATQ) -> HeckeElement:
    """T_0, the basis element of the longest permutation."""
    return t_sigma(longest_element(n), ring)


def hecke_mul_gen_right(x: HeckeElement, i: int) -> HeckeElement:
    return x.mul_gen_right(i)


def hecke_mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Product x*y, expanding each T_sigma of y along its reduced word.

    Partial products x*T_w are shared between basis terms of y whose
    reduced words have a common prefix.
    """
    x._check(y)
    if x.ring is not y.ring and x.ring != y.ring:
        raise ValueError("elements over different coefficient rings")
    ring = x.ring
    cache: dict[tuple, HeckeElement] = {(): x}

    def times_word(word: tuple) -> HeckeElement:
        hit = cache.get(word)
        if hit is None:
            hit = times_word(word[:-1]).mul_gen_right(word[-1])
            cache[word] = hit
        return hit

    out: dict = {}
    for s, c in y._terms.items():
        word = tuple(perm_length_and_word(s)[1])
        for u, v in times_word(word)._terms.items():
            p = v * c
            w = out.get(u)
            out[u] = p if w is None else w + p
    return HeckeElement._wrap(x.n, {s: c for s, c in out.items() if c}, ring)


def t_inverse_gen(i: int, n: int, ring: ScalarRing = RATQ) -> HeckeElement:
    """T_i^{-1} = T_i - q + q^{-1}."""
    return t_gen(i, n, ring) + HeckeElement.one(n, ring).scale(ring.q_inv - ring.q)


def _mul_inverse_gen_right(x: HeckeElement, i: int) -> HeckeElement:
    ring = x.ring
    return x.mul_gen_right(i) + x.scale(ring.q_inv - ring.q)


def t_sigma_inverse(s, ring: ScalarRing = RATQ) -> HeckeElement:
    """T_s^{-1} = T_{i_l}^{-1} ... T_{i_1}^{-1} for the reduced word of s."""
    s = Permutation(s)
    x = HeckeElement.one(len(s), ring)
    for i in reversed(perm_length_and_word(s)[1]):
        x = _mul_inverse_gen_right(x, i)
    return x


def mul_t_sigma_inverse_right(x: HeckeElement, s) -> HeckeElement:
    """x * T_s^{-1}, one inverse generator at a time."""
    for i in reversed(perm_length_and_word(s)[1]):
        x = _mul_inverse_gen_right(x, i)
    return x


def phi_apply(x: HeckeElement) -> HeckeElement:
    """The antiautomorphism fixing every T_i: T_sigma -> T_{sigma^{-1}}."""
    out = {}
    for s, c in x._terms.items():
        inv = [0] * len(s)
        for pos, v in enumerate(s, 1):
            inv[v - 1] = pos
        out[tuple(inv)] = c
    return HeckeElement._wrap(x.n, out, x.ring)


def coeff_of(x: HeckeElement, s) -> Any:
    return x.coeff(s)
