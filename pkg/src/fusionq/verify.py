"""
Property suites over all partitions up to a size bound.

Each suite yields ``CheckRecord`` rows; the CLI writes them as a JSON report
and the test-suite asserts on them.
"""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from .exact_arith import ONE, PoleError, RationalFunctionQ, RationalFunctionQT, TPoly
from .fusion import (
    FusionResult, FusionSpec, a_complement_holds, check_intertwining,
    check_triple_regularity, evaluate_F, evaluate_G, fusion_factor,
    single_factor_regular,
)
from .hecke import (
    RATQ, RATQT, HeckeElement, mul_t_sigma_inverse_right, numeric_ring,
    phi_apply, t_gen, t_inverse_gen, t_sigma, t_sigma_inverse,
)
from .numeric import DEFAULT_SEED, q0_pool
from .repr_tools import (
    Echelon, action_matrices, adjacent_pairs, burnside_irreducibility,
    check_hecke_relations, column_pair_divisor, eigen_divisibility, ideal_dimension,
    left_divisibility_solve, right_divisibility_solve, right_ideal_dimension,
    row_pair_divisor, shift_embed, specialize_q1, strip_hooks_shift,
)
from .symmetric_group import all_permutations, longest_element
from .tableaux import (
    GROUP_MODES, Partition, StandardTableau, adjacent_swap, hook_tableau,
    num_standard_tableaux, partition_analyze, partitions, standard_tableaux,
)

__all__ = ["CheckRecord", "Verifier", "SUITES", "run_suites"]

log = logging.getLogger(__name__)


@dataclass
class CheckRecord:
    check: str
    shape: list | None
    tableau: list | None
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def _rec(check: str, passed: bool, detail: str = "", shape=None,
         tableau: StandardTableau | None = None) -> CheckRecord:
    return CheckRecord(check, None if shape is None else list(shape),
                       None if tableau is None else tableau.to_lists(), bool(passed), detail)


def _all_tableaux(max_n: int, min_n: int = 1) -> Iterator[tuple[Partition, StandardTableau]]:
    for n in range(min_n, max_n + 1):
        for p in partitions(n):
            for T in standard_tableaux(p):
                yield p, T


def _random_poly(rng: random.Random, deg: int = 2) -> tuple[int, ...]:
    return tuple(rng.randint(-3, 3) for _ in range(rng.randint(0, deg) + 1))


def random_ratq(rng: random.Random) -> RationalFunctionQ:
    num = _random_poly(rng)
    den = _random_poly(rng)
    while not any(den):
        den = _random_poly(rng)
    return RationalFunctionQ.from_zpolys(num, den)


def random_element(rng: random.Random, n: int, terms: int = 4) -> HeckeElement:
    perms = list(all_permutations(n))
    return HeckeElement(n, {tuple(rng.choice(perms)): random_ratq(rng) for _ in range(terms)}, RATQ)


def _rand_nonzero(rng: random.Random) -> Fraction:
    while True:
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        if x:
            return x


class Verifier:
    """Runs named suites, memoizing fusion values within one run."""

    def __init__(self, max_n: int = 5, mode: str = "symbolic", seed: int = DEFAULT_SEED,
                 q0=None):
        if mode not in ("symbolic", "numeric"):
            raise ValueError(f"unknown mode {mode!r}")
        self.max_n = max_n
        self.mode = mode
        self.seed = seed
        self.q0 = Fraction(q0) if q0 is not None else (
            q0_pool(seed, 1)[0] if mode == "numeric" else None)
        self._memo: dict = {}

    # -- cached evaluations ------------------------------------------------

    def F(self, T: StandardTableau, variant: str = "hook") -> FusionResult:
        key = ("F", T, variant)
        if key not in self._memo:
            self._memo[key] = evaluate_F(FusionSpec(T, variant), self.mode, self.q0, self.seed)
        return self._memo[key]

    def F_symbolic(self, T: StandardTableau) -> HeckeElement:
        key = ("Fs", T)
        if key not in self._memo:
            self._memo[key] = evaluate_F(FusionSpec(T)).element
        return self._memo[key]

    def G(self, T: StandardTableau) -> FusionResult:
        key = ("G", T)
        if key not in self._memo:
            self._memo[key] = evaluate_G(T, self.mode, self.q0, seed=self.seed)
        return self._memo[key]

    # -- suites ------------------------------------------------------------

    def suite_relations(self) -> Iterator[CheckRecord]:
        for n in range(2, self.max_n + 1):
            one = HeckeElement.one(n)
            ok_quad = ok_braid = ok_comm = ok_inv = ok_idem = True
            q, qi = RATQ.q, RATQ.q_inv
            for i in range(1, n):
                Ti = t_gen(i, n)
                ok_quad &= ((Ti - one.scale(q)) * (Ti + one.scale(qi))).is_zero()
                ok_inv &= (Ti * t_inverse_gen(i, n)) == one and (t_inverse_gen(i, n) * Ti) == one
                minus = (Ti - one.scale(q)).scale(-ONE / (q + qi))
                plus = (Ti + one.scale(qi)).scale(ONE / (q + qi))
                ok_idem &= minus * minus == minus and plus * plus == plus
                for j in range(i + 1, n):
                    Tj = t_gen(j, n)
                    if j == i + 1:
                        ok_braid &= Ti * Tj * Ti == Tj * Ti * Tj
                    else:
                        ok_comm &= Ti * Tj == Tj * Ti
            yield _rec("quadratic relation", ok_quad, f"n={n}")
            yield _rec("braid relation", ok_braid, f"n={n}")
            yield _rec("far commutation", ok_comm, f"n={n}")
            yield _rec("generator inverse", ok_inv, f"n={n}")
            yield _rec("idempotents", ok_idem, f"n={n}")
            w0 = longest_element(n)
            yield _rec("longest element inverse",
                       t_sigma(w0) * t_sigma_inverse(w0) == one, f"n={n}")
        if self.max_n >= 4:
            rng = random.Random(self.seed)
            ok_phi = ok_assoc = True
            for _ in range(50):
                x, y, z = (random_element(rng, 4) for _ in range(3))
                ok_phi &= phi_apply(x * y) == phi_apply(y) * phi_apply(x)
                ok_phi &= phi_apply(phi_apply(x)) == x
                ok_assoc &= (x * y) * z == x * (y * z)
            yield _rec("phi involutive antiautomorphism", ok_phi, "50 random pairs in H_4")
            yield _rec("associativity", ok_assoc, "50 random triples in H_4")

    def suite_factor_identities(self, samples: int = 100) -> Iterator[CheckRecord]:
        rng = random.Random(self.seed + 1)
        n = 4
        counts = {"yang-baxter": 0, "factor commutation": 0, "factor inversion": 0}
        fails = dict.fromkeys(counts, 0)
        pool = q0_pool(self.seed + 1, 64)
        while min(counts.values()) < samples:
            ring = numeric_ring(rng.choice(pool))
            a, b, c, d = (_rand_nonzero(rng) for _ in range(4))
            try:
                F = lambda i, x, y: fusion_factor(i, x, y, n, ring)
                lhs = F(1, a, b) * F(2, a, c) * F(1, b, c)
                rhs = F(2, b, c) * F(1, a, c) * F(2, a, b)
                yb = lhs == rhs
                cm = F(1, a, b) * F(3, c, d) == F(3, c, d) * F(1, a, b)
                scalar = 1 - ring.qdiff ** 2 * a * b / (a - b) ** 2
                inv = F(1, a, b) * F(1, b, a) == HeckeElement.one(n, ring).scale(scalar)
            except ZeroDivisionError:
                continue
            for name, ok in (("yang-baxter", yb), ("factor commutation", cm),
                             ("factor inversion", inv)):
                counts[name] += 1
                fails[name] += not ok
        for name in counts:
            yield _rec(name, fails[name] == 0, f"{counts[name]} random exact samples, "
                       f"{fails[name]} failures")
        # symbolic in t: (a, b, c) = (1 + t, 1 + 2t, 1 + 3t)
        a, b, c = (RationalFunctionQT(TPoly([ONE, ONE * k]), TPoly([ONE])) for k in (1, 2, 3))
        F = lambda i, x, y: fusion_factor(i, x, y, 3, RATQT)
        yield _rec("yang-baxter symbolic in t",
                   F(1, a, b) * F(2, a, c) * F(1, b, c) == F(2, b, c) * F(1, a, c) * F(2, a, b),
                   "(a, b, c) = (1+t, 1+2t, 1+3t)")

    def suite_regularity(self) -> Iterator[CheckRecord]:
        for p, T in _all_tableaux(self.max_n):
            for v in GROUP_MODES:
                try:
                    self.F(T, v)
                    yield _rec("regularity", True, f"variant={v}", p, T)
                except PoleError as exc:
                    yield _rec("regularity", False, f"variant={v}: {exc}", p, T)

    def suite_variant_agreement(self) -> Iterator[CheckRecord]:
        for p, T in _all_tableaux(self.max_n):
            vals = [self.F(T, v).element for v in GROUP_MODES]
            yield _rec("variant-agreement", vals[0] == vals[1] == vals[2],
                       "hook = row = column", p, T)

    def suite_direction_independence(self) -> Iterator[CheckRecord]:
        for p, T in _all_tableaux(min(self.max_n, 4)):
            base = self.F(T).element
            spec = FusionSpec(T, "hook")
            alt = FusionSpec(T, "hook", tuple((g + 1) ** 2 for g in range(spec.num_groups)))
            other = evaluate_F(alt, self.mode, self.q0, self.seed).element
            yield _rec("direction-independence", base == other, "g -> (g+1)^2", p, T)

    def suite_t0coeff(self) -> Iterator[CheckRecord]:
        for p, T in _all_tableaux(self.max_n):
            F = self.F(T).element
            c = F.coeff(longest_element(T.n))
            yield _rec("t0coeff", c == F.ring.one, f"coefficient {c}", p, T)

    def suite_phi_invariance(self) -> Iterator[CheckRecord]:
        for p, T in _all_tableaux(self.max_n):
            x = mul_t_sigma_inverse_right(self.F(T).element, longest_element(T.n))
            yield _rec("phi-invariance", phi_apply(x) == x, "F T_0^{-1}", p, T)

    def suite_eigen_divisibility(self) -> Iterator[CheckRecord]:
        for p, T in _all_tableaux(self.max_n, 2):
            F = self.F(T).element
            for k in range(1, T.n):
                (i1, j1), (i2, j2) = T.positions[k], T.positions[k + 1]
                kind = "column" if j1 == j2 else "row" if i1 == i2 else None
                if kind:
                    yield _rec("eigen-divisibility", eigen_divisibility(F, k, kind),
                               f"k={k} {kind}", p, T)

    def suite_triple_regularity(self) -> Iterator[CheckRecord]:
        for sign in (1, -1):
            yield _rec("triple-regularity", check_triple_regularity(sign), f"sign={sign:+d}")
        yield _rec("single-factor control", not single_factor_regular(),
                   "bare factor with equal contents has a pole")

    def suite_intertwining(self) -> Iterator[CheckRecord]:
        for p, T in _all_tableaux(min(self.max_n, 4), 2):
            for k in range(1, T.n):
                try:
                    adjacent_swap(T, k)
                except ValueError:
                    continue
                yield _rec("intertwining", check_intertwining(T, k), f"k={k}", p, T)

    def suite_divisibility(self) -> Iterator[CheckRecord]:
        q0 = self.q0 or q0_pool(self.seed, 1)[0]
        for n in range(2, self.max_n + 1):
            for p in partitions(n):
                T = hook_tableau(p)
                F = self.F(T).element
                for kind, build in (("column", column_pair_divisor), ("row", row_pair_divisor)):
                    for u, v in adjacent_pairs(T, kind):
                        P = build(p, u, v)
                        X = left_divisibility_solve(P, F, q0=q0)
                        proper = right_ideal_dimension(P, q0=q0) < factorial(n)
                        yield _rec("pair-product divisibility", X is not None and proper,
                                   f"{kind} u={u} v={v}, divisor non-invertible={proper}", p, T)
                if partition_analyze(p).durfee >= 2:
                    M, _ = strip_hooks_shift(p, 1)
                    FM = self.F(hook_tableau(M)).element
                    Y = shift_embed(FM, n)
                    X = right_divisibility_solve(Y, F, q0=q0)
                    yield _rec("hook stripping", X is not None,
                               f"F = P * shift(F of {list(M)})", p, T)

    def suite_g_basis(self) -> Iterator[CheckRecord]:
        for n in range(1, self.max_n + 1):
            for p in partitions(n):
                T0 = hook_tableau(p)
                f = num_standard_tableaux(p)
                yield _rec("G equals F on hook tableau", self.G(T0).element == self.F(T0).element,
                           "", p, T0)
                ech = Echelon()
                for T in standard_tableaux(p):
                    ech.add(dict(self.G(T).element))
                yield _rec("G basis rank", ech.rank == f, f"rank {ech.rank}, f={f}", p)
                dim = ideal_dimension(self.F(T0).element, q0=self.q0)
                yield _rec("ideal dimension", dim == f, f"dim {dim}, f={f}", p)
                if n <= 4:
                    for T in standard_tableaux(p):
                        yield _rec("A-complement", a_complement_holds(T), "", p, T)
                    q0 = self.q0 or q0_pool(self.seed, 1)[0]
                    mats = action_matrices(p, q0)
                    yield _rec("action matrix relations", check_hecke_relations(mats, q0), "", p)
                    yield _rec("burnside irreducibility", burnside_irreducibility(mats),
                               f"f={f}", p)
            total = sum(num_standard_tableaux(p) ** 2 for p in partitions(n))
            yield _rec("dimension sum", total == factorial(n), f"n={n}: {total}")

    def suite_q1_specialization(self) -> Iterator[CheckRecord]:
        for p, T in _all_tableaux(self.max_n):
            try:
                F1 = specialize_q1(self.F_symbolic(T))
            except PoleError as exc:
                yield _rec("q1-specialization", False, str(exc), p, T)
                continue
            ok = F1.coeff(longest_element(T.n)) == 1
            for k in range(1, T.n):
                (i1, j1), (i2, j2) = T.positions[k], T.positions[k + 1]
                if j1 == j2:
                    ok &= F1.mul_gen_left(k) == -F1
                elif i1 == i2:
                    ok &= F1.mul_gen_left(k) == F1
            yield _rec("q1-specialization", ok, "sigma_0 coefficient and +-1 eigenvalues", p, T)


SUITES: dict[str, Callable[[Verifier], Iterator[CheckRecord]]] = {
    "relations": Verifier.suite_relations,
    "factor-identities": Verifier.suite_factor_identities,
    "regularity": Verifier.suite_regularity,
    "variant-agreement": Verifier.suite_variant_agreement,
    "direction-independence": Verifier.suite_direction_independence,
    "t0coeff": Verifier.suite_t0coeff,
    "phi-invariance": Verifier.suite_phi_invariance,
    "eigen-divisibility": Verifier.suite_eigen_divisibility,
    "triple-regularity": Verifier.suite_triple_regularity,
    "intertwining": Verifier.suite_intertwining,
    "divisibility": Verifier.suite_divisibility,
    "g-basis": Verifier.suite_g_basis,
    "q1-specialization": Verifier.suite_q1_specialization,
}


def run_suites(names: list[str], verifier: Verifier) -> list[CheckRecord]:
    out = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        log.info("suite %s", name)
        out.extend(SUITES[name](verifier))
    return out
