"""
Exact linear algebra on H_n-modules: ideal dimensions, divisibility,
action matrices in the G-basis, and the specialization q = 1.

Vectors are coordinate dicts in the T_sigma basis. Row reduction is done
over whatever exact field the coefficients live in; by default elements are
first evaluated at a rational q0, since symbolic reduction over Q(q) gets
expensive quickly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .exact_arith import EvaluationPoleError, PoleError, RationalFunctionQ, ratq_eval
from .fusion import evaluate_G, fusion_factor
from .hecke import RATQ, HeckeElement, numeric_ring
from .numeric import DEFAULT_SEED, q0_pool
from .symmetric_group import all_permutations, perm_length_and_word
from .tableaux import (
    Partition, StandardTableau, contents, hook_tableau, partition_analyze,
    standard_tableaux,
)

__all__ = [
    "ExactMatrix", "Echelon", "GROUP_RING", "evaluate_at", "ideal_dimension",
    "eigen_divisibility", "left_divisibility_solve", "right_divisibility_solve",
    "action_matrices", "burnside_irreducibility", "specialize_q1", "shift_embed",
    "column_pair_divisor", "row_pair_divisor", "adjacent_pairs", "g_basis",
    "check_hecke_relations", "strip_hooks_shift", "right_ideal_dimension",
    "ideal_dimension_modular",
]

# q = 1: T_sigma -> sigma, the group ring of S_n
GROUP_RING = numeric_ring(1)


class Echelon:
    """Incrementally built row-echelon basis of a span of sparse vectors.

    Every stored row has a pivot entry equal to 1 and is zero at the pivots
    of earlier rows, so reducing in insertion order is exact. Each row also
    remembers which combination of the inserted vectors produced it.
    """

    def __init__(self):
        self.rows: list[tuple[Any, dict, dict]] = []   # (pivot, vec, combo)
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        vec = dict(vec)
        for pivot, row, rcombo in self.rows:
            a = vec.get(pivot)
            if not a:
                continue
            for key, val in row.items():
                nv = vec.get(key, 0) - a * val if key in vec else -a * val
                if nv:
                    vec[key] = nv
                else:
                    vec.pop(key, None)
            for key, val in rcombo.items():
                nv = combo.get(key, 0) - a * val if key in combo else -a * val
                if nv:
                    combo[key] = nv
                else:
                    combo.pop(key, None)
        return vec, combo

    def add(self, vec: dict) -> bool:
        """Insert vec; True if it enlarged the span."""
        idx = self._count
        self._count += 1
        vec, combo = self._reduce({k: v for k, v in vec.items() if v}, {idx: 1})
        if not vec:
            return False
        pivot = min(vec)
        inv = 1 / vec[pivot]
        self.rows.append((pivot, {k: v * inv for k, v in vec.items()},
                          {k: v * inv for k, v in combo.items()}))
        return True

    def express(self, vec: dict) -> dict | None:
        """Coefficients x with vec = sum x_k (k-th inserted vector), or None."""
        rest, combo = self._reduce({k: v for k, v in vec.items() if v}, {})
        if rest:
            return None
        return {k: -v for k, v in combo.items() if v}


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> ExactMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, f: int, one=Fraction(1), zero=Fraction(0)) -> ExactMatrix:
        return cls(tuple(tuple(one if i == j else zero for j in range(f)) for i in range(f)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        cols = list(zip(*other.rows))
        return ExactMatrix(tuple(
            tuple(sum((a * b for a, b in zip(r, c)), start=r[0] * 0) for c in cols)
            for r in self.rows))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                                 for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + other.scale(-1)

    def scale(self, c) -> ExactMatrix:
        return ExactMatrix(tuple(tuple(a * c for a in r) for r in self.rows))

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def flat(self) -> dict:
        return {(i, j): a for i, r in enumerate(self.rows) for j, a in enumerate(r) if a}


# ---------------------------------------------------------------------------

def evaluate_at(x: HeckeElement, q0) -> HeckeElement:
    """Substitute q = q0 into an element over Q(q)."""
    if x.ring is not RATQ:
        if x.ring.q == Fraction(q0):
            return x
        raise ValueError(f"element is over {x.ring.name}, not Q(q)")
    return x.map_coeffs(lambda c: ratq_eval(c, q0), numeric_ring(q0))


def _numeric_retry(fn: Callable[[Fraction], Any], seed: int, q0) -> Any:
    if q0 is not None:
        return fn(Fraction(q0))
    last = None
    for cand in q0_pool(seed, 6):
        try:
            return fn(cand)
        except EvaluationPoleError as exc:
            last = exc
    raise PoleError("no pole-free q0 in the pool") from last


def _prepare(elements: Sequence[HeckeElement], mode: str, q0, seed: int,
             body: Callable[..., Any]):
    if mode == "symbolic" or all(e.ring is not RATQ for e in elements):
        return body(*elements)
    if mode != "numeric":
        raise ValueError(f"unknown mode {mode!r}")
    return _numeric_retry(lambda x: body(*(evaluate_at(e, x) for e in elements)), seed, q0)


def ideal_dimension(F: HeckeElement, mode: str = "numeric", q0=None,
                    seed: int = DEFAULT_SEED) -> int:
    """dim H_n F, the span of all T_sigma F.

    Computed as the smallest subspace containing F that is stable under
    left multiplication by every generator.
    """
    if F.is_zero():
        raise ValueError("the zero element generates the zero ideal")

    def run(x: HeckeElement) -> int:
        basis = Echelon()
        queue = [x]
        while queue:
            v = queue.pop()
            if basis.add(dict(v)):
                queue.extend(v.mul_gen_left(i) for i in range(1, v.n))
        return basis.rank

    return _prepare([F], mode, q0, seed, run)


def eigen_divisibility(F: HeckeElement, k: int, kind: str) -> bool:
    """Column: T_k F == -q^{-1} F. Row: T_k F == q F.

    These are forced by F = (T_k - q) X and F = (T_k + q^{-1}) X.
    """
    lhs = F.mul_gen_left(k)
    if kind == "column":
        return lhs == F.scale(-F.ring.q_inv)
    if kind == "row":
        return lhs == F.scale(F.ring.q)
    raise ValueError(f"kind must be 'column' or 'row', not {kind!r}")


def _times_all_right(P: HeckeElement) -> list[tuple[tuple, HeckeElement]]:
    """(sigma, P T_sigma) for every sigma, sharing word prefixes."""
    cache: dict[tuple, HeckeElement] = {(): P}

    def times(word: tuple) -> HeckeElement:
        hit = cache.get(word)
        if hit is None:
            hit = times(word[:-1]).mul_gen_right(word[-1])
            cache[word] = hit
        return hit

    return [(tuple(s), times(tuple(perm_length_and_word(s)[1])))
            for s in all_permutations(P.n)]


def _times_all_left(Y: HeckeElement) -> list[tuple[tuple, HeckeElement]]:
    """(sigma, T_sigma Y) for every sigma."""
    cache: dict[tuple, HeckeElement] = {(): Y}

    def times(word: tuple) -> HeckeElement:
        # T_{w_1} ... T_{w_k} Y, extended on the left
        hit = cache.get(word)
        if hit is None:
            hit = times(word[1:]).mul_gen_left(word[0])
            cache[word] = hit
        return hit

    return [(tuple(s), times(tuple(perm_length_and_word(s)[1])))
            for s in all_permutations(Y.n)]


def _solve(columns: list[tuple[tuple, HeckeElement]], target: HeckeElement) -> HeckeElement | None:
    ech = Echelon()
    for _, col in columns:
        ech.add(dict(col))
    x = ech.express(dict(target))
    if x is None:
        return None
    return HeckeElement(target.n, {columns[k][0]: v for k, v in x.items()}, target.ring)


def left_divisibility_solve(P: HeckeElement, F: HeckeElement, mode: str = "numeric",
                            q0=None, seed: int = DEFAULT_SEED) -> HeckeElement | None:
    """Some X with F = P X, or None if F is not left-divisible by P."""
    if P.is_zero():
        raise ValueError("cannot divide by zero")
    return _prepare([P, F], mode, q0, seed, lambda p, f: _solve(_times_all_right(p), f))


def right_divisibility_solve(Y: HeckeElement, F: HeckeElement, mode: str = "numeric",
                             q0=None, seed: int = DEFAULT_SEED) -> HeckeElement | None:
    """Some P with F = P Y, or None."""
    if Y.is_zero():
        raise ValueError("cannot divide by zero")
    return _prepare([Y, F], mode, q0, seed, lambda y, f: _solve(_times_all_left(y), f))


def shift_embed(x: HeckeElement, n: int) -> HeckeElement:
    """Image of x in H_n under T_i -> T_{i+n-m}, where x lies in H_m."""
    shift = n - x.n
    if shift < 0:
        raise ValueError("target algebra is smaller than the source")
    head = tuple(range(1, shift + 1))
    return HeckeElement._wrap(n, {head + tuple(v + shift for v in s): c for s, c in x}, x.ring)


def strip_hooks_shift(p: Sequence[int], k: int) -> tuple[Partition, int]:
    """Shape left after removing the first k principal hooks, and its entry offset."""
    p = Partition(p)
    data = partition_analyze(p)
    if not 1 <= k < data.durfee:
        raise ValueError(f"can strip 1..{data.durfee - 1} hooks from {list(p)}")
    rest = [part - k for part in p[k:] if part > k]
    return Partition(rest), sum(data.hooks[:k])


# ---------------------------------------------------------------------------
# divisors attached to adjacent entries of the hook tableau

def _factor_at(i: int, ci: int, cj: int, n: int) -> HeckeElement:
    return fusion_factor(i, RationalFunctionQ.q_power(2 * ci),
                         RationalFunctionQ.q_power(2 * cj), n, RATQ)


def _product(elements: list[HeckeElement], n: int) -> HeckeElement:
    out = HeckeElement.one(n)
    for e in elements:
        out = out * e
    return out


def adjacent_pairs(T: StandardTableau, kind: str) -> list[tuple[int, int]]:
    """(u, v) with v directly below u (column) or directly right of u (row)."""
    out = []
    for (i, j), u in ((pos, e) for e, pos in T.positions.items()):
        nb = (i + 1, j) if kind == "column" else (i, j + 1)
        rows = T.rows
        if nb[0] <= len(rows) and nb[1] <= len(rows[nb[0] - 1]):
            out.append((u, T[nb]))
    return sorted(out)


def column_pair_divisor(p: Sequence[int], u: int, v: int) -> HeckeElement:
    """Left divisor of F for u above v in the hook tableau.

    T_u - q when v lies below the diagonal steps; otherwise the product over
    i = s, ..., u (leftmost first) of the products over j = s+1, ..., v of
    F_{i+j-s-1}(q^{2c_i}, q^{2c_j}), with s the last entry of u's row.
    """
    T = hook_tableau(p)
    n = T.n
    c = contents(T)
    if c[v - 1] < 0:
        return _factor_at(u, c[u - 1], c[v - 1], n)
    row = T.rows[T.positions[u][0] - 1]
    s = row[-1]
    factors = [_factor_at(i + j - s - 1, c[i - 1], c[j - 1], n)
               for i in range(s, u - 1, -1) for j in range(s + 1, v + 1)]
    return _product(factors, n)


def row_pair_divisor(p: Sequence[int], u: int, v: int) -> HeckeElement:
    """Left divisor of F for u left of v in the hook tableau.

    T_u + q^{-1} when u has positive content; otherwise the product over
    i = r, ..., u of the products over j = r+1, ..., v of
    F_{i+j-r-1}(q^{2c_i}, q^{2c_j}), with r the last entry of u's column.
    """
    T = hook_tableau(p)
    n = T.n
    c = contents(T)
    if c[u - 1] > 0:
        return _factor_at(u, c[u - 1], c[v - 1], n)
    col = T.positions[u][1]
    r = max(e for e, (_, j) in T.positions.items() if j == col)
    factors = [_factor_at(i + j - r - 1, c[i - 1], c[j - 1], n)
               for i in range(r, u - 1, -1) for j in range(r + 1, v + 1)]
    return _product(factors, n)


# ---------------------------------------------------------------------------
# the module V_lambda in the basis G_Lambda

def g_basis(p: Sequence[int], mode: str = "numeric", q0=None,
            seed: int = DEFAULT_SEED) -> list[HeckeElement]:
    """G_Lambda for every standard tableau of shape p, in enumeration order."""
    return [evaluate_G(T, mode=mode, q0=q0, seed=seed).element for T in standard_tableaux(p)]


def action_matrices(p: Sequence[int], q0=None, seed: int = DEFAULT_SEED) -> list[ExactMatrix]:
    """Matrices of left multiplication by T_1, ..., T_{n-1} in the basis G_Lambda.

    Column b holds the coordinates of T_i G_b.
    """
    p = Partition(p)
    if q0 is None:
        q0 = q0_pool(seed, 1)[0]
    basis = g_basis(p, "numeric", q0)
    f = len(basis)
    ech = Echelon()
    for g in basis:
        if not ech.add(dict(g)):
            raise ArithmeticError(f"G-vectors of shape {list(p)} are linearly dependent")
    zero = Fraction(0)
    mats = []
    for i in range(1, p.n):
        cols = []
        for g in basis:
            x = ech.express(dict(g.mul_gen_left(i)))
            if x is None:
                raise ArithmeticError("T_i G lies outside the span of the G-vectors")
            cols.append([x.get(a, zero) for a in range(f)])
        mats.append(ExactMatrix(tuple(zip(*cols))))
    return mats


def check_hecke_relations(mats: Sequence[ExactMatrix], q0) -> bool:
    """(M_i - q)(M_i + q^{-1}) = 0, braid and far commutation relations."""
    q0 = Fraction(q0)
    if not mats:
        return True
    f = mats[0].shape[0]
    one = ExactMatrix.identity(f)
    for M in mats:
        if not ((M - one.scale(q0)) @ (M + one.scale(1 / q0))).is_zero():
            return False
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            A, B = mats[a], mats[b]
            if b == a + 1:
                if A @ B @ A != B @ A @ B:
                    return False
            elif A @ B != B @ A:
                return False
    return True


def burnside_irreducibility(mats: Sequence[ExactMatrix]) -> bool:
    """True iff the matrices generate the full matrix algebra M_f."""
    if not mats:
        return True
    f = mats[0].shape[0]
    if f == 1:
        return True
    one = ExactMatrix.identity(f, one=mats[0].rows[0][0] ** 0)
    ech = Echelon()
    queue = [one]
    while queue and ech.rank < f * f:
        M = queue.pop()
        if ech.add(M.flat()):
            queue.extend(M @ A for A in mats)
    return ech.rank == f * f


def specialize_q1(F: HeckeElement) -> HeckeElement:
    """Coefficient-wise q = 1; the result lives in the group ring of S_n."""
    def at_one(c: RationalFunctionQ) -> Fraction:
        try:
            return ratq_eval(c, 1)
        except EvaluationPoleError as exc:
            raise PoleError(f"specialization pole: {c}") from exc

    if F.ring is not RATQ:
        raise ValueError("specialization needs an element over Q(q)")
    return F.map_coeffs(at_one, GROUP_RING)


def right_ideal_dimension(P: HeckeElement, mode: str = "numeric", q0=None,
                          seed: int = DEFAULT_SEED) -> int:
    """dim P H_n. Equals n! exactly when P is invertible."""
    if P.is_zero():
        raise ValueError("the zero element generates the zero ideal")

    def run(x: HeckeElement) -> int:
        ech = Echelon()
        for _, col in _times_all_right(x):
            ech.add(dict(col))
        return ech.rank

    return _prepare([P], mode, q0, seed, run)


# large prime below 2^31 so that products of residues fit in int64
DEFAULT_PRIME = 2_147_483_629


def _mod_p(c: Fraction, p: int) -> int:
    c = Fraction(c)
    den = c.denominator % p
    if den == 0:
        raise ArithmeticError(f"denominator divisible by the prime {p}")
    return c.numerator % p * pow(den, -1, p) % p


def ideal_dimension_modular(F: HeckeElement, prime: int = DEFAULT_PRIME, q0=None,
                            seed: int = DEFAULT_SEED) -> int:
    """dim H_n F over Z/p, after fixing q = q0.

    Same closure as ``ideal_dimension`` but with dense residue vectors, which
    makes n = 8 practical. Reduction mod p cannot raise a rank, so the
    result is a lower bound for the rational dimension, and equal to it for
    all but finitely many primes.
    """
    import numpy as np

    if F.is_zero():
        raise ValueError("the zero element generates the zero ideal")
    if F.ring is RATQ:
        if q0 is None:
            q0 = q0_pool(seed, 1)[0]
        F = evaluate_at(F, q0)
    p = prime
    n = F.n
    perms = [tuple(s) for s in all_permutations(n)]
    index = {s: k for k, s in enumerate(perms)}
    qd = _mod_p(F.ring.qdiff, p)
    moves = []
    for i in range(1, n):
        target = np.empty(len(perms), dtype=np.int64)
        descent = np.zeros(len(perms), dtype=bool)
        for k, s in enumerate(perms):
            target[k] = index[tuple(i + 1 if v == i else i if v == i + 1 else v for v in s)]
            descent[k] = s.index(i) > s.index(i + 1)
        moves.append((target, descent))

    def act(v, i):
        target, descent = moves[i - 1]
        out = np.zeros_like(v)
        out[target] = v
        out[descent] = (out[descent] + qd * v[descent]) % p
        return out

    start = np.zeros(len(perms), dtype=np.int64)
    for s, c in F:
        start[index[s]] = _mod_p(c, p)
    rows: list[tuple[int, np.ndarray]] = []
    queue = [start]
    while queue:
        v = queue.pop()
        w = v.copy()
        for pivot, row in rows:
            a = int(w[pivot])
            if a:
                w = (w - a * row) % p
        nz = np.flatnonzero(w)
        if nz.size == 0:
            continue
        pivot = int(nz[0])
        w = w * pow(int(w[pivot]), -1, p) % p
        rows.append((pivot, w))
        queue.extend(act(v, i) for i in range(1, n))
    return len(rows)
