"""
Fusion products over Q(q)(t) and their values on the diagonal.

Each tableau entry a gets the parameter w_a = q^{2 c_a} z_a where c_a is its
content, and the factors F_i(a, b) = T_i + (q - q^{-1}) / (b/a - 1) are
multiplied in the reverse-lexicographic order of pairs. To restrict to the
hook (row, column) subspace we set z_a = 1 + t * m_g, where g is the group
of a and the m_g are distinct integers, then let t -> 0.

The engine clears denominators factor by factor: it multiplies the
polynomial elements (b - a) T_i + (q - q^{-1}) a and keeps the product of
the (b - a) as a separate scalar D(t). D has t-order exactly s, the number
of equal-content pairs, so the value at t = 0 only needs everything modulo
t^{s+1}: it is [t^s]P / [t^s]D, and regularity means every coefficient of P
vanishes to order at least s.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .exact_arith import (
    PoleError, RationalFunctionQ, RationalFunctionQT, TPoly, ratqt_limit_t0,
)
from .hecke import RATQ, RATQT, HeckeElement, ScalarRing, numeric_ring, t_gen
from .numeric import DEFAULT_SEED, with_numeric_q
from .symmetric_group import longest_element
from .tableaux import (
    GROUP_MODES, StandardTableau, adjacent_swap, contents, entry_groups, hook_tableau,
)

__all__ = [
    "FusionSpec", "FusionResult", "RegularityError", "SingularFactorError",
    "fusion_factor", "pair_order", "fusion_product", "evaluate_F", "evaluate_G",
    "check_intertwining", "check_triple_regularity", "tableau_rho",
    "b_sequences", "a_sequences", "a_complement_holds", "fusion_factors",
    "g_factors", "a_factors", "cleared_product", "Factor", "Slot",
    "single_factor_regular", "limit_t0", "singular_count",
]


class RegularityError(PoleError):
    """The restricted fusion product has a pole on the diagonal."""


class SingularFactorError(ZeroDivisionError):
    """A factor F_i(a, b) with b/a = 1 identically."""


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FusionSpec:
    tableau: StandardTableau
    variant: str = "hook"
    direction: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.variant not in GROUP_MODES:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.direction is not None:
            d = tuple(int(v) for v in self.direction)
            if len(set(d)) != len(d) or any(v < 0 for v in d):
                raise ValueError("direction values must be distinct non-negative integers")
            if len(d) < self.num_groups:
                raise ValueError(f"direction needs {self.num_groups} values, got {len(d)}")
            object.__setattr__(self, "direction", d)

    @property
    def groups(self) -> tuple[int, ...]:
        return entry_groups(self.tableau, self.variant)

    @property
    def num_groups(self) -> int:
        return max(self.groups) + 1

    def direction_map(self) -> tuple[int, ...]:
        if self.direction is None:
            return tuple(range(self.num_groups))
        return self.direction

    def slots(self) -> list[Slot]:
        """(content, direction) for entries 1..n."""
        m = self.direction_map()
        return [Slot(c, m[g]) for c, g in zip(contents(self.tableau), self.groups)]


@dataclass(frozen=True)
class FusionResult:
    element: HeckeElement
    spec: FusionSpec
    kind: str = "F"
    mode: str = "symbolic"
    q0: Fraction | None = None
    # [t^s]P and [t^s]D before division; element = raw / raw_den
    raw: HeckeElement | None = field(default=None, compare=False, repr=False)
    raw_den: Any = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Slot:
    """The parameter q^{2c} (1 + m t) attached to one tableau entry."""
    content: int
    m: int


# a factor F_index(w_a, w_b)
Factor = tuple[int, Slot, Slot]


def pair_order(n: int) -> list[tuple[int, int]]:
    """Pairs i < j ordered by j, then by i."""
    if n < 1:
        raise ValueError("n must be positive")
    return [(i, j) for j in range(2, n + 1) for i in range(1, j)]


def fusion_factors(slots: Sequence[Slot]) -> list[Factor]:
    n = len(slots)
    return [(j - i, slots[i - 1], slots[j - 1]) for i, j in pair_order(n)]


# ---------------------------------------------------------------------------
# F_i(a, b) as an element over a field

def fusion_factor(i: int, a, b, n: int, ring: ScalarRing = RATQT) -> HeckeElement:
    """F_i(a, b) = T_i + (q - q^{-1}) / (a^{-1} b - 1)."""
    if not a:
        raise ZeroDivisionError("F_i(a, b) needs a != 0")
    ratio = b / a - ring.one
    if not ratio:
        raise SingularFactorError("identically singular factor")
    return t_gen(i, n, ring) + HeckeElement.one(n, ring).scale(ring.qdiff / ratio)


# ---------------------------------------------------------------------------
# cleared-denominator engine over B[t] / (t^{prec+1})

def _tmul(a: tuple, b: tuple, prec: int | None) -> tuple:
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    size = la + lb - 1
    if prec is not None and size > prec + 1:
        size = prec + 1
    out = [None] * size
    for i in range(min(la, size)):
        x = a[i]
        if not x:
            continue
        for j in range(min(lb, size - i)):
            y = b[j]
            if not y:
                continue
            p = x * y
            k = i + j
            out[k] = p if out[k] is None else out[k] + p
    zero = a[0] - a[0]
    res = [zero if v is None else v for v in out]
    while res and not res[-1]:
        res.pop()
    return tuple(res)


def _tadd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, v in enumerate(b):
        out[k] = out[k] + v
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def _slot_value(s: Slot, base: ScalarRing, powers: dict) -> tuple:
    qp = powers.get(s.content)
    if qp is None:
        qp = _qpow(base, 2 * s.content)
        powers[s.content] = qp
    return (qp, qp * s.m) if s.m else (qp,)


def _qpow(base: ScalarRing, k: int):
    if base is RATQ:
        return RationalFunctionQ.q_power(k)
    x = base.q if k >= 0 else base.q_inv
    out = base.one
    for _ in range(abs(k)):
        out = out * x
    return out


def singular_count(factors: Sequence[Factor]) -> int:
    return sum(1 for _, a, b in factors if a.content == b.content)


def cleared_product(n: int, factors: Sequence[Factor], base: ScalarRing = RATQ,
                    prec: int | None = None) -> tuple[dict, tuple]:
    """Product of the cleared factors (b - a) T_i + (q - q^{-1}) a.

    Returns ``(P, D)``: P maps permutations to polynomials in t (tuples of
    base-ring coefficients), D is the product of the (b - a). Both are
    truncated after t^prec when prec is given.
    """
    powers: dict = {}
    qd = base.qdiff
    acc: dict = {tuple(range(1, n + 1)): (base.one,)}
    den: tuple = (base.one,)
    for i, sa, sb in factors:
        if not 1 <= i < n:
            raise ValueError(f"factor index {i} out of range for n={n}")
        wa = _slot_value(sa, base, powers)
        wb = _slot_value(sb, base, powers)
        d = _tadd(wb, tuple(-v for v in wa))
        if not d:
            raise SingularFactorError("identically singular factor")
        e = tuple(qd * v for v in wa)
        f = _tadd(e, tuple(qd * v for v in d))
        den = _tmul(den, d, prec)
        out: dict = {}
        for s, c in acc.items():
            t = s[:i - 1] + (s[i], s[i - 1]) + s[i + 1:]
            v = _tmul(c, d, prec)
            prev = out.get(t)
            out[t] = v if prev is None else _tadd(prev, v)
            v = _tmul(c, f if s[i - 1] > s[i] else e, prec)
            prev = out.get(s)
            out[s] = v if prev is None else _tadd(prev, v)
        acc = {s: c for s, c in out.items() if c}
    return acc, den


def _order(p: tuple) -> int:
    for k, c in enumerate(p):
        if c:
            return k
    return len(p) + 10 ** 9


def _limit(n: int, factors: Sequence[Factor], base: ScalarRing) -> tuple[HeckeElement, HeckeElement, Any]:
    s = singular_count(factors)
    P, D = cleared_product(n, factors, base, prec=s)
    if _order(D) != s:
        raise RegularityError("pole at t=0: unexpected denominator order")
    dlead = D[s]
    raw = {}
    for perm, c in P.items():
        if _order(c) < s:
            raise RegularityError("pole at t=0: regularity violated")
        if len(c) > s and c[s]:
            raw[perm] = c[s]
    value = {perm: c / dlead for perm, c in raw.items()}
    return (HeckeElement._wrap(n, value, base), HeckeElement._wrap(n, raw, base), dlead)


def _evaluate(n: int, factors: Sequence[Factor], mode: str, q0, seed: int):
    if n == 1:
        ring = RATQ if mode == "symbolic" else numeric_ring(q0 if q0 is not None else 2)
        one = HeckeElement.one(1, ring)
        return one, one, ring.one, (None if mode == "symbolic" else Fraction(ring.q))
    if mode == "symbolic":
        el, raw, den = _limit(n, factors, RATQ)
        return el, raw, den, None
    if mode != "numeric":
        raise ValueError(f"unknown mode {mode!r}")
    if q0 is not None:
        el, raw, den = _limit(n, factors, numeric_ring(q0))
        return el, raw, den, Fraction(q0)
    q0, (el, raw, den) = with_numeric_q(lambda x: _limit(n, factors, numeric_ring(x)), seed)
    return el, raw, den, q0


def evaluate_F(spec: FusionSpec, mode: str = "symbolic", q0=None,
               seed: int = DEFAULT_SEED) -> FusionResult:
    """F_Lambda: the fusion product restricted to the spec's subspace, at t = 0."""
    n = spec.tableau.n
    factors = fusion_factors(spec.slots())
    el, raw, den, used = _evaluate(n, factors, mode, q0, seed)
    return FusionResult(el, spec, "F", mode, used, raw, den)


def fusion_product(spec: FusionSpec) -> HeckeElement:
    """The fusion product itself, as an element over Q(q)(t)."""
    n = spec.tableau.n
    P, D = cleared_product(n, fusion_factors(spec.slots()), RATQ)
    return _to_ratqt(n, P, D)


def _to_ratqt(n: int, P: dict, D: tuple) -> HeckeElement:
    den = TPoly(D)
    return HeckeElement._wrap(
        n, {s: RationalFunctionQT(TPoly(c), den) for s, c in P.items()}, RATQT)


def limit_t0(x: HeckeElement) -> HeckeElement:
    """Coefficient-wise t -> 0 of an element over Q(q)(t)."""
    return x.map_coeffs(ratqt_limit_t0, RATQ)


# ---------------------------------------------------------------------------
# G_Lambda

def tableau_rho(T: StandardTableau) -> tuple[int, ...]:
    """rho with T(a, b) = rho(T°(a, b)), in one-line notation."""
    base = hook_tableau(T.shape)
    pos = base.positions
    return tuple(T[pos[x]] for x in range(1, T.n + 1))


def b_sequences(T: StandardTableau) -> list[list[int]]:
    """B_j: entries i < j occurring before j in rho(1), ..., rho(n)."""
    rho = tableau_rho(T)
    where = {v: k for k, v in enumerate(rho)}
    return [[i for i in rho if i < j and where[i] < where[j]] for j in range(1, T.n + 1)]


def a_sequences(T: StandardTableau) -> list[list[int]]:
    """A_j: entries i < j occurring after j in rho(1), ..., rho(n), reversed."""
    rho = tableau_rho(T)
    where = {v: k for k, v in enumerate(rho)}
    return [[i for i in rho if i < j and where[i] > where[j]][::-1]
            for j in range(1, T.n + 1)]


def g_factors(T: StandardTableau, slots: Sequence[Slot]) -> list[Factor]:
    out = []
    for j, bj in enumerate(b_sequences(T), 1):
        for k, i in enumerate(bj, 1):
            out.append((j - k, slots[i - 1], slots[j - 1]))
    return out


def a_factors(T: StandardTableau, slots: Sequence[Slot]) -> list[Factor]:
    n = T.n
    out = []
    seqs = a_sequences(T)
    for j in range(n, 0, -1):
        aj = seqs[j - 1]
        for k in range(len(aj), 0, -1):
            i = aj[k - 1]
            out.append((n - j + k, slots[i - 1], slots[j - 1]))
    return out


def evaluate_G(T: StandardTableau, mode: str = "symbolic", q0=None,
               variant: str = "hook", seed: int = DEFAULT_SEED) -> FusionResult:
    spec = FusionSpec(T, variant)
    factors = g_factors(T, spec.slots())
    el, raw, den, used = _evaluate(T.n, factors, mode, q0, seed)
    return FusionResult(el, spec, "G", mode, used, raw, den)


def _same_rational(n: int, left: tuple[dict, tuple], right: tuple[dict, tuple]) -> bool:
    """P1/D1 == P2/D2 coefficient-wise, by cross multiplication."""
    (P1, D1), (P2, D2) = left, right
    for s in set(P1) | set(P2):
        a = _tmul(P1.get(s, ()), D2, None)
        b = _tmul(P2.get(s, ()), D1, None)
        if a != b:
            return False
    return True


def a_complement_holds(T: StandardTableau, variant: str = "hook") -> bool:
    """F_Lambda(z) = G_Lambda(z) * (A-product), as rational functions in t."""
    slots = FusionSpec(T, variant).slots()
    n = T.n
    if n == 1:
        return True
    lhs = cleared_product(n, fusion_factors(slots), RATQ)
    rhs = cleared_product(n, g_factors(T, slots) + a_factors(T, slots), RATQ)
    return _same_rational(n, lhs, rhs)


# ---------------------------------------------------------------------------
# identities used in the regularity argument

def check_intertwining(T: StandardTableau, k: int, variant: str = "hook") -> bool:
    """F_T(z) F_{n-k}(w_{k+1}, w_k) == F_k(w_k, w_{k+1}) F_{T'}(z') in Q(q)(t).

    T' swaps k and k+1 in T, and z' swaps the slots k and k+1 of z.
    """
    T2 = adjacent_swap(T, k)
    n = T.n
    slots = FusionSpec(T, variant).slots()
    swapped = list(slots)
    swapped[k - 1], swapped[k] = slots[k], slots[k - 1]
    # w'_a = q^{2 c_a(T')} z'_a equals w_{sigma_k(a)}
    c2 = contents(T2)
    assert all(c2[a] == swapped[a].content for a in range(n))
    lhs = fusion_factors(slots) + [(n - k, slots[k], slots[k - 1])]
    rhs = [(k, slots[k - 1], slots[k])] + fusion_factors(swapped)
    return _same_rational(n, cleared_product(n, lhs, RATQ), cleared_product(n, rhs, RATQ))


def check_triple_regularity(sign: int) -> bool:
    """F_1(a, b) F_2(a, c) F_1(b, c) at b = q^{-2 sign} a, c = a (1 + t) is regular at t = 0.

    Every factor depends only on ratios of its arguments, so a = 1.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    a = Slot(0, 0)
    b = Slot(-sign, 0)
    c = Slot(0, 1)
    product = _to_ratqt(3, *cleared_product(3, [(1, a, b), (2, a, c), (1, b, c)], RATQ))
    return _is_regular(product)


def single_factor_regular() -> bool:
    """Control for the triple check: F_1(a, a(1 + t)) alone."""
    a, c = Slot(0, 0), Slot(0, 1)
    return _is_regular(_to_ratqt(2, *cleared_product(2, [(1, a, c)], RATQ)))


def _is_regular(x: HeckeElement) -> bool:
    try:
        limit_t0(x)
    except PoleError:
        return False
    return True


def sigma0(n: int):
    return longest_element(n)
