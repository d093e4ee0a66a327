"""Property suites over bounded, exhaustive ranges of weights.

Each suite is a list of named checks. A check walks its cases and records the
pass/fail counts plus the first counterexample it meets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from . import characters as ch
from . import fock
from . import tensor
from .laurent import ONE, Q
from .weights import (
    DominantWeight,
    FTuple,
    WeightVector,
    atypicality,
    bruhat_less,
    dual_ftuple,
    dual_weight,
    from_ftuple,
    iter_ftuples,
    l_chain,
    l_step,
    l_step_oracle,
    rho,
    rho0,
    same_block,
    to_ftuple,
    wt_map,
)

SUITES = ("weights", "fock", "characters", "tensor")


@dataclass(frozen=True)
class Config:
    """``n`` is the largest rank exercised; suites run every rank from 1 to n."""

    n: int = 2
    depth: int = 6
    bound: int = 8
    format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if self.bound < 1:
            raise ValueError("bound must be >= 1")
        if self.format not in ("json", "text"):
            raise ValueError("format must be json or text")

    @property
    def ranks(self) -> range:
        return range(1, self.n + 1)


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: Any = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "failed": self.failed,
                "counterexample": self.counterexample}


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return sum(c.failed for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "passed": self.passed,
                "failed": self.failed, "checks": [c.to_json() for c in self.checks]}

    def render(self) -> str:
        lines = [f"[{self.suite}] {'PASS' if self.ok else 'FAIL'} "
                 f"({self.passed} passed, {self.failed} failed)"]
        for c in self.checks:
            mark = "ok  " if c.ok else "FAIL"
            line = f"  {mark} {c.name}: {c.passed}/{c.passed + c.failed}"
            if not c.ok:
                line += f"  first counterexample: {c.counterexample}"
            lines.append(line)
        return "\n".join(lines)


def run_check(name: str, cases: Iterable, test: Callable[[Any], Any]) -> CheckResult:
    """``test(case)`` returns True on success, anything else describes the failure."""
    res = CheckResult(name)
    for case in cases:
        try:
            outcome = test(case)
        except Exception as exc:  # a crash is a failed case, not a crashed suite
            outcome = f"{type(exc).__name__}: {exc}"
        if outcome is True:
            res.passed += 1
        else:
            res.failed += 1
            if res.counterexample is None:
                res.counterexample = {"case": _show(case), "detail": _show(outcome)}
    return res


def _show(x) -> Any:
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_show(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _show(v) for k, v in x.items()}
    return str(x)


def _atypical(cfg: Config, bound: int | None = None, max_rank: int | None = None):
    b = cfg.bound if bound is None else bound
    top = cfg.n if max_rank is None else min(cfg.n, max_rank)
    return [f for n in range(1, top + 1) for f in iter_ftuples(n, b, True)]


def _all(cfg: Config, bound: int | None = None, max_rank: int | None = None):
    b = cfg.bound if bound is None else bound
    top = cfg.n if max_rank is None else min(cfg.n, max_rank)
    return [f for n in range(1, top + 1) for f in iter_ftuples(n, b)]


def _expect(actual, expected):
    return True if actual == expected else {"got": actual, "expected": expected}


# ---------------------------------------------------------------------------
# weights


def weights_suite(cfg: Config) -> SuiteReport:
    atyp = _atypical(cfg)
    allf = _all(cfg)
    rep = SuiteReport("weights")
    rep.checks.append(run_check(
        "l_step agrees with brute-force oracle", atyp,
        lambda f: _expect(l_step(f), l_step_oracle(f))))
    rep.checks.append(run_check(
        "named instance eps -> -eps+delta1+delta2 (n=2)", [DominantWeight(2, 1, (0, 0))],
        lambda lam: _expect(str(lam.L), "-1|1,1")))
    rep.checks.append(run_check(
        "f-tuple round trip", allf,
        lambda f: _expect(to_ftuple(from_ftuple(f)), f)))
    rep.checks.append(run_check(
        "L-steps stay in the block", atyp,
        lambda f: _expect(wt_map(l_step(f)), wt_map(f))))
    rep.checks.append(run_check(
        "chain f_-1 strictly decreasing over 20 steps", atyp,
        lambda f: all(a.fm1 > b.fm1 for a, b in zip([f] + l_chain(f, 20), l_chain(f, 20)))
        or [x.fm1 for x in l_chain(f, 20)]))
    rep.checks.append(run_check(
        "bruhat_less contains the chain and is irreflexive", atyp,
        lambda f: (bruhat_less(l_step(f), f) and not bruhat_less(f, f)
                   and not bruhat_less(f, l_step(f))) or "order violated"))
    small = _atypical(cfg, bound=min(cfg.bound, 5), max_rank=2)
    rep.checks.append(run_check(
        "bruhat_less transitive and antisymmetric", small,
        lambda f: _bruhat_order_case(f, small)))
    rep.checks.append(run_check(
        "dual weight is the f_-1 sign flip and an involution", allf,
        lambda f: (to_ftuple(dual_weight(from_ftuple(f))) == dual_ftuple(f)
                   and dual_weight(dual_weight(from_ftuple(f))) == from_ftuple(f))
        or "mismatch"))
    rep.checks.append(run_check(
        "dual of lambda equals (dual of lambda^L)^L", atyp,
        lambda f: _expect(dual_weight(from_ftuple(l_step(f))).L, dual_weight(from_ftuple(f)))))
    return rep


def _bruhat_order_case(f: FTuple, pool: list[FTuple]):
    same = [g for g in pool if g.n == f.n and same_block(f, g)]
    for g in same:
        if bruhat_less(g, f) and bruhat_less(f, g):
            return ("not antisymmetric", g)
        if bruhat_less(g, f):
            for h in same:
                if bruhat_less(h, g) and not bruhat_less(h, f):
                    return ("not transitive", g, h)
    return True


# ---------------------------------------------------------------------------
# fock


def _procedure_case(f: FTuple):
    g, seq = fock.procedure_sequence(f)
    if atypicality(g) is not None:
        return ("start weight is atypical", g)
    return _expect(fock.apply_sequence(seq, g), fock.canonical(f))


def _ef_case(case):
    gen, g = case
    return _expect(fock.apply_generator(gen, g), fock.ef_closed_form(gen, g))


def _triangular_dual(f: FTuple, depth: int):
    for g, c in fock.dual_canonical(f, depth).items():
        if g != f and not c.in_negative_part():
            return ("coefficient outside q^-1 Z[q^-1]", g, c)
        if g != f and not bruhat_less(g, f):
            return ("support not below f", g)
    return True


def _triangular_canonical(f: FTuple):
    for g, c in fock.canonical(f).items():
        if g != f and not c.in_positive_part():
            return ("coefficient outside q Z[q]", g, c)
    return True


def _canonical_exact(f: FTuple, depth: int):
    """The untruncated identity: bar(U_f) - U_f is only the truncation tail."""
    u = fock.canonical(f)
    diff = fock.bar(u, depth) - u
    tail = l_chain(f, depth + 1)[-1]
    if diff.support() != [tail]:
        return ("unexpected residue", diff)
    return fock.verify_bar_invariance(u, depth) or "not bar-invariant on exact region"


def fock_suite(cfg: Config) -> SuiteReport:
    atyp = _atypical(cfg)
    allf = _all(cfg)
    rep = SuiteReport("fock")
    rep.checks.append(run_check(
        "straightening constant is pinned by module stability", [fock.EXCHANGE_POWER],
        lambda s: _expect(fock.pin_exchange_power(), s)))
    rep.checks.append(run_check(
        "generator sequence builds K_f + q K_{f^L}", atyp, _procedure_case))
    ef_cases = [(gen, f) for f in allf for gen in (fock.E(-1), fock.F(-1))]
    rep.checks.append(run_check(
        "E_-1 and F_-1 closed forms", ef_cases, _ef_case))
    rep.checks.append(run_check(
        "canonical basis is bar-invariant", atyp,
        lambda f: _canonical_exact(f, max(cfg.depth, 1))))
    dual_cases = [(f, d) for f in _atypical(cfg, bound=min(cfg.bound, 6))
                  for d in range(cfg.depth + 1)]
    rep.checks.append(run_check(
        "dual canonical basis is bar-invariant on its exact region", dual_cases,
        lambda c: fock.verify_bar_invariance(fock.dual_canonical(*c), c[1]) or "not invariant"))
    rep.checks.append(run_check(
        "canonical basis is unitriangular over q Z[q]", atyp, _triangular_canonical))
    rep.checks.append(run_check(
        "dual canonical basis is unitriangular over q^-1 Z[q^-1]", dual_cases,
        lambda c: _triangular_dual(*c)))
    rep.checks.append(run_check(
        "bar is an involution on the exact region", dual_cases,
        lambda c: _bar_involution(*c)))
    rng = random.Random(cfg.seed)
    sample = rng.sample(allf, min(len(allf), 60))
    far = [(a, b) for a in range(-6, -1) for b in range(a + 2, -1)]
    comm = [(f, kind, a, b) for f in sample for kind in ("E", "F") for a, b in far]
    rep.checks.append(run_check(
        "distant generators commute", comm, _commute_case))
    return rep


def _commute_case(case):
    f, kind, a, b = case
    x, y = fock.GeneratorName(kind, a), fock.GeneratorName(kind, b)
    return _expect(fock.apply_sequence([x, y], f), fock.apply_sequence([y, x], f))


def _bar_involution(f: FTuple, depth: int):
    v = fock.FockVector.basis(f, Q + ONE)
    region = fock.exact_region(v, depth)
    back = fock.bar(fock.bar(v, depth), depth).restrict(region)
    return _expect(back, v.restrict(region))


# ---------------------------------------------------------------------------
# characters


def _translation_case(case):
    f, direction, a = case
    gen = fock.E(-a) if direction == "E" else fock.F(-a)
    at_one = fock.apply_generator(gen, f).at_one()
    fock_side = {from_ftuple(g): c for g, c in at_one.items() if c}
    return _expect(ch.translate(direction, a, from_ftuple(f)), fock_side)


def _betadual_case(lam: DominantWeight):
    candidates = {lam, lam.L, lam.L.L}
    for mu in candidates:
        left = ch.tilting_flag_multiplicity(lam, mu)
        right = ch.kac_composition_multiplicity(dual_weight(mu), dual_weight(lam))
        if left != right:
            return {"mu": str(mu), "flag": left, "composition": right}
    return True


def _symmetric_char(n: int, rng: random.Random) -> ch.Character:
    out = ch.Character(n, {})
    for _ in range(rng.randint(1, 3)):
        w = (rng.randint(-3, 3), *[rng.randint(-2, 2) for _ in range(n)])
        coeff = rng.choice([-2, -1, 1, 2, 3])
        orbit = {(w[0],) + g.act(w[1:]) for g in ch.weyl_group(n)}
        out = out + ch.Character(n, {o: coeff for o in orbit})
    return out


def characters_suite(cfg: Config) -> SuiteReport:
    rep = SuiteReport("characters")
    atyp6 = [from_ftuple(f) for f in _atypical(cfg, bound=min(cfg.bound, 6), max_rank=3)]
    rep.checks.append(run_check(
        "ch K(lam) = ch L(lam) + ch L(lam^L)", atyp6,
        lambda lam: _expect(ch.kac_char(lam), ch.irr_char(lam) + ch.irr_char(lam.L))))
    rep.checks.append(run_check(
        "alternating-sum and Kac-sum formulas for ch L agree", atyp6,
        lambda lam: _expect(ch.irr_char_by_kac_sum(lam), ch.irr_char(lam))))
    small = [from_ftuple(f) for f in _all(cfg, bound=min(cfg.bound, 4), max_rank=3)]
    rep.checks.append(run_check(
        "dim K(lam) = 2^2n dim L0(lam)", small,
        lambda lam: _expect(ch.dim_char(ch.kac_char(lam)),
                            4 ** lam.n * ch.dim_char(ch.sp_irr_char(lam.parts)))))
    trans = [(f, d, a) for f in _all(cfg, bound=min(cfg.bound, 6), max_rank=2)
             for d in ("E", "F") for a in range(1, 7)]
    rep.checks.append(run_check(
        "translation functors match the Fock action at q=1", trans, _translation_case))
    ranks3 = [n for n in cfg.ranks if n <= 3]
    mixed = [p for n in ranks3 for p in _patterns(n)
             if any(p[i] == 0 and p[j] == 1 for i in range(n) for j in range(i + 1, n))]
    rep.checks.append(run_check(
        "alternating sum vanishes for mixed 0/1 patterns", mixed,
        lambda p: _expect(ch.aux_alt_sum(p), ch.Character(len(p), {}, True))))
    prefix = [(n, l) for n in ranks3 for l in range(n + 1)]
    rep.checks.append(run_check(
        "alternating sum of a prefix pattern is sum x^(l-j) chi_j", prefix,
        lambda c: _expect(ch.aux_alt_sum(c[1], c[0]), ch.aux_alt_sum_expected(*c))))
    chi_pairs = [(n, k) for n in ranks3 for k in range(n + 1, 2 * n + 1)]
    rep.checks.append(run_check(
        "chi-expansion of ch L(-eps + delta_1 + ... + delta_(2n-k+1))", chi_pairs,
        lambda c: _expect(ch.irr_char(ch.chi_expansion_weight(*c)), ch.chi_expansion(*c))))
    fund = [(n, l) for n in ranks3 for l in range(n + 1)]
    rep.checks.append(run_check(
        "fundamental sp(2n) dimensions", fund,
        lambda c: _expect(ch.dim_char(ch.chi(*c)), ch.weyl_dimension_fundamental(*c))))
    rep.checks.append(run_check(
        "rho0 - rho is Weyl-invariant", ranks3,
        lambda n: all(_wact(w, rho0(n) - rho(n)) == rho0(n) - rho(n) for w in ch.weyl_group(n))
        or "not invariant"))
    rep.checks.append(run_check(
        "duality of Kac characters", small,
        lambda lam: _expect(ch.dual_char(ch.kac_char(lam)), ch.kac_char(dual_weight(lam)))))
    atyp4 = [from_ftuple(f) for f in _atypical(cfg, bound=min(cfg.bound, 5), max_rank=2)]
    rep.checks.append(run_check(
        "tilting flag and Kac composition multiplicities are dual", atyp4, _betadual_case))
    rng = random.Random(cfg.seed)
    sym = [_symmetric_char(n, rng) for n in ranks3 for _ in range(5)]
    rep.checks.append(run_check(
        "division by the Weyl denominator inverts multiplication", sym,
        lambda p: _expect(ch.divide_by_d0(p * ch.weyl_denominator(p.n)), p)))
    return rep


def _wact(w, v: WeightVector) -> WeightVector:
    return WeightVector(v.eps, w.act(v.deltas))


def _patterns(n: int):
    from itertools import product
    return [p for p in product((0, 1), repeat=n)]


# ---------------------------------------------------------------------------
# tensor


def expected_factors(k: int, n: int) -> list[tuple[DominantWeight, int]]:
    """Composition factors of the harmonic part of ``S^k`` in each regime."""
    zero = (0,) * n
    if k <= n:
        return [(DominantWeight(n, k, zero), 1)]
    if k <= 2 * n:
        return [(DominantWeight(n, k, zero), 1), (DominantWeight(n, 2 * n - k, zero), 1),
                (ch.chi_expansion_weight(n, k), 1)]
    return [(DominantWeight(n, k, zero), 1), (DominantWeight(n, 2 * n - k, zero), 1)]


def _gamma_case(c):
    k, n = c
    g = tensor.gamma(k, n)
    if not g:
        return "gamma vanishes"
    if tensor.laplacian(g):
        return "not harmonic"
    for i in range(n + 1):
        if tensor.act(("e", i), g):
            return f"e{i} does not kill gamma"
    return _expect(g.weight(), (2 * n - k,) + (0,) * n)


def _hwv_low(c):
    k, n = c
    hw = tensor.highest_weight_vectors(tensor.kernel_laplacian(k, n))
    expected = tensor.SuperPoly.monomial(n, tensor.SuperMonomial(k, 0))
    if len(hw) != 1:
        return {"count": len(hw)}
    return _expect(hw[0], ((k,) + (0,) * n, expected))


def _ge2n1_case(c):
    k, n = c
    dim = tensor.kernel_laplacian(k, n).dim
    if dim != 2 ** (2 * n + 1):
        return {"dim": dim}
    for lam, _ in expected_factors(k, n):
        if atypicality(to_ftuple(lam)) is not None:
            return ("factor is atypical", str(lam))
        if ch.dim_char(ch.irr_char(lam)) != 4 ** n:
            return ("factor dimension", str(lam))
    return _expect(tensor.decompose_kernel(k, n), expected_factors(k, n))


def tensor_suite(cfg: Config, kmax: int = 8) -> SuiteReport:
    rep = SuiteReport("tensor")
    pairs = [(k, n) for n in cfg.ranks if n <= 3 for k in range(kmax + 1)]
    rep.checks.append(run_check(
        "symmetric power character matches the generating function", pairs,
        lambda c: _expect(tensor.char_of(tensor.full_space(*c)), tensor.symmetric_power_char(*c))))
    rep.checks.append(run_check(
        "dim ker = dim S^k - dim S^(k-2)", pairs,
        lambda c: _expect(tensor.kernel_laplacian(*c).dim,
                          tensor.dim_Sk(*c) - tensor.dim_Sk(c[0] - 2, c[1]))))
    rep.checks.append(run_check(
        "Laplacian commutes with the generators", pairs,
        lambda c: tensor.equivariance_counterexample(*c) or True))
    rep.checks.append(run_check(
        "harmonic decomposition in every regime", pairs,
        lambda c: _expect(tensor.decompose_kernel(*c), expected_factors(*c))))
    low = [(k, n) for k, n in pairs if k <= n]
    rep.checks.append(run_check(
        "x^k is the only highest weight vector for k <= n", low, _hwv_low))
    high = [(k, n) for k, n in pairs if k >= 2 * n + 1]
    rep.checks.append(run_check(
        "k >= 2n+1: dimension 2^(2n+1), two typical factors", high, _ge2n1_case))
    gam = [(k, n) for k, n in pairs if k >= 2 * n]
    rep.checks.append(run_check("gamma is a harmonic highest weight vector", gam, _gamma_case))
    return rep


RUNNERS = {"weights": weights_suite, "fock": fock_suite,
           "characters": characters_suite, "tensor": tensor_suite}


def run_suites(names: Iterable[str], cfg: Config) -> list[SuiteReport]:
    return [RUNNERS[name](cfg) for name in names]
