"""Symmetric tensors of the natural osp(2|2n)-module as superpolynomials.

``S(C^{2|2n})`` is modelled by ``C[x, xb, xi_1..xi_n, xib_1..xib_n]`` with
``x, xb`` even and the ``xi, xib`` odd. Weights: ``x -> eps``, ``xb -> -eps``,
``xi_i -> delta_i``, ``xib_i -> -delta_i``.

Odd derivatives act from the left: ``d/d xi`` first moves ``xi`` to the front
of the odd string, picking up ``(-1)`` per odd factor crossed. Monomials keep
the odd string in the order ``xi`` ascending, then ``xib`` ascending.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping

from .characters import Character, composition_factors
from .errors import DecompositionFailed, DegreeTooSmall
from .linalg import nullspace
from .weights import DominantWeight

XI, XIB = 0, 1


@dataclass(frozen=True, order=True)
class SuperMonomial:
    a: int
    b: int
    S: tuple[int, ...] = ()
    T: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(sorted(self.S)))
        object.__setattr__(self, "T", tuple(sorted(self.T)))
        if self.a < 0 or self.b < 0:
            raise ValueError("even exponents must be non-negative")
        if len(set(self.S)) != len(self.S) or len(set(self.T)) != len(self.T):
            raise ValueError("odd variables square to zero")

    @property
    def degree(self) -> int:
        return self.a + self.b + len(self.S) + len(self.T)

    def odd_string(self) -> tuple[tuple[int, int], ...]:
        return tuple((XI, i) for i in self.S) + tuple((XIB, i) for i in self.T)

    @classmethod
    def from_odd(cls, a: int, b: int, odd: Iterable[tuple[int, int]]) -> SuperMonomial:
        odd = list(odd)
        return cls(a, b, tuple(i for k, i in odd if k == XI), tuple(i for k, i in odd if k == XIB))

    def weight(self, n: int) -> tuple[int, ...]:
        d = [0] * n
        for i in self.S:
            d[i - 1] += 1
        for i in self.T:
            d[i - 1] -= 1
        return (self.a - self.b, *d)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "xi": list(self.S), "xibar": list(self.T)}


class SuperPoly:
    """Exact-rational linear combination of :class:`SuperMonomial`."""

    __slots__ = ("n", "_c")

    def __init__(self, n: int, terms: Mapping[SuperMonomial, Fraction] | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        c: dict[SuperMonomial, Fraction] = {}
        for m, v in items:
            c[m] = c.get(m, 0) + Fraction(v)
        self._c = {m: v for m, v in c.items() if v}

    @classmethod
    def monomial(cls, n: int, m: SuperMonomial, coeff=1) -> SuperPoly:
        return cls(n, {m: coeff})

    def items(self) -> list[tuple[SuperMonomial, Fraction]]:
        return sorted(self._c.items())

    def coeff(self, m: SuperMonomial) -> Fraction:
        return self._c.get(m, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperPoly):
            return NotImplemented
        return self.n == other.n and self._c == other._c

    def __add__(self, other: SuperPoly) -> SuperPoly:
        out = dict(self._c)
        for m, v in other._c.items():
            out[m] = out.get(m, 0) + v
        return SuperPoly(self.n, out)

    def __neg__(self) -> SuperPoly:
        return SuperPoly(self.n, {m: -v for m, v in self._c.items()})

    def __sub__(self, other: SuperPoly) -> SuperPoly:
        return self + (-other)

    def scale(self, c) -> SuperPoly:
        return SuperPoly(self.n, {m: v * c for m, v in self._c.items()})

    def __mul__(self, other: SuperPoly) -> SuperPoly:
        out: dict[SuperMonomial, Fraction] = {}
        for m1, v1 in self._c.items():
            for m2, v2 in other._c.items():
                r = _mul_monomials(m1, m2)
                if r is None:
                    continue
                sign, m = r
                out[m] = out.get(m, 0) + sign * v1 * v2
        return SuperPoly(self.n, out)

    def __pow__(self, k: int) -> SuperPoly:
        out = SuperPoly.monomial(self.n, SuperMonomial(0, 0))
        for _ in range(k):
            out = out * self
        return out

    def weights(self) -> set[tuple[int, ...]]:
        return {m.weight(self.n) for m in self._c}

    def weight(self) -> tuple[int, ...]:
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("polynomial is not weight-homogeneous")
        return next(iter(ws))

    def to_json(self) -> list[dict]:
        out = []
        for m, v in self.items():
            d = m.to_json()
            d["coeff"] = f"{v.numerator}/{v.denominator}"
            out.append(d)
        return out

    @classmethod
    def from_json(cls, data: list[dict], n: int) -> SuperPoly:
        return cls(n, {SuperMonomial(d["a"], d["b"], tuple(d["xi"]), tuple(d["xibar"])):
                       Fraction(d["coeff"]) for d in data})

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for m, v in self.items():
            mono = "".join(
                [f"x^{m.a}" if m.a else "", f"xb^{m.b}" if m.b else ""]
                + [f"xi{i}" for i in m.S] + [f"xib{i}" for i in m.T]) or "1"
            parts.append(f"{v}*{mono}")
        return " + ".join(parts)


def _sort_odd(odd: list[tuple[int, int]]) -> tuple[int, list[tuple[int, int]]] | None:
    if len(set(odd)) != len(odd):
        return None
    inv = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])
    return (-1) ** inv, sorted(odd)


def _mul_monomials(m1: SuperMonomial, m2: SuperMonomial):
    r = _sort_odd(list(m1.odd_string()) + list(m2.odd_string()))
    if r is None:
        return None
    sign, odd = r
    return sign, SuperMonomial.from_odd(m1.a + m2.a, m1.b + m2.b, odd)


# ---------------------------------------------------------------------------
# primitive operators on monomials; each returns (coefficient, monomial) or None

def _d_even(var: str, m: SuperMonomial):
    if var == "x":
        return (m.a, SuperMonomial(m.a - 1, m.b, m.S, m.T)) if m.a else None
    return (m.b, SuperMonomial(m.a, m.b - 1, m.S, m.T)) if m.b else None


def _mul_even(var: str, m: SuperMonomial):
    if var == "x":
        return 1, SuperMonomial(m.a + 1, m.b, m.S, m.T)
    return 1, SuperMonomial(m.a, m.b + 1, m.S, m.T)


def _d_odd(label: tuple[int, int], m: SuperMonomial):
    odd = m.odd_string()
    if label not in odd:
        return None
    p = odd.index(label)
    rest = odd[:p] + odd[p + 1:]
    return (-1) ** p, SuperMonomial.from_odd(m.a, m.b, rest)


def _mul_odd(label: tuple[int, int], m: SuperMonomial):
    odd = m.odd_string()
    if label in odd:
        return None
    p = sum(1 for o in odd if o < label)
    new = odd[:p] + (label,) + odd[p:]
    return (-1) ** p, SuperMonomial.from_odd(m.a, m.b, new)


def _prim(kind: str, var) -> Callable:
    if kind == "d":
        return (lambda m: _d_even(var, m)) if isinstance(var, str) else (lambda m: _d_odd(var, m))
    return (lambda m: _mul_even(var, m)) if isinstance(var, str) else (lambda m: _mul_odd(var, m))


class DiffOp:
    """Sum of ``coeff * P_1 P_2 ... P_r`` with primitive factors applied right to left."""

    def __init__(self, terms: list[tuple[int, list[Callable]]], odd: bool):
        self.terms = terms
        self.odd = odd

    def on_monomial(self, m: SuperMonomial) -> dict[SuperMonomial, int]:
        out: dict[SuperMonomial, int] = defaultdict(int)
        for coeff, factors in self.terms:
            c, cur = coeff, m
            for prim in reversed(factors):
                r = prim(cur)
                if r is None:
                    break
                s, cur = r
                c *= s
            else:
                out[cur] += c
        return {k: v for k, v in out.items() if v}

    def __call__(self, p: SuperPoly) -> SuperPoly:
        out: dict[SuperMonomial, Fraction] = defaultdict(Fraction)
        for m, v in p.items():
            for m2, c in self.on_monomial(m).items():
                out[m2] += c * v
        return SuperPoly(p.n, out)


def _xi(i):
    return (XI, i)


def _xib(i):
    return (XIB, i)


def generator(kind: str, i: int, n: int) -> DiffOp:
    """Chevalley generator ``e_i`` / ``f_i`` (``0 <= i <= n``) as a differential operator."""
    if not 0 <= i <= n:
        raise ValueError(f"generator index must be in 0..{n}")
    d, mul = (lambda v: _prim("d", v)), (lambda v: _prim("m", v))
    if kind == "e":
        if i == 0:
            terms = [(1, [mul("x"), d(_xi(1))]), (1, [mul(_xib(1)), d("xb")])]
        elif i < n:
            terms = [(1, [mul(_xi(i)), d(_xi(i + 1))]), (-1, [mul(_xib(i + 1)), d(_xib(i))])]
        else:
            terms = [(1, [mul(_xi(n)), d(_xib(n))])]
    elif kind == "f":
        if i == 0:
            terms = [(1, [mul(_xi(1)), d("x")]), (-1, [mul("xb"), d(_xib(1))])]
        elif i < n:
            terms = [(1, [mul(_xi(i + 1)), d(_xi(i))]), (-1, [mul(_xib(i)), d(_xib(i + 1))])]
        else:
            terms = [(1, [mul(_xib(n)), d(_xi(n))])]
    else:
        raise ValueError("kind must be 'e' or 'f'")
    return DiffOp(terms, odd=(i == 0))


def generators(n: int) -> list[tuple[str, DiffOp]]:
    return [(f"{k}{i}", generator(k, i, n)) for k in ("e", "f") for i in range(n + 1)]


def laplacian_op(n: int) -> DiffOp:
    d = lambda v: _prim("d", v)  # noqa: E731
    terms = [(1, [d("x"), d("xb")])]
    terms += [(-1, [d(_xi(i)), d(_xib(i))]) for i in range(1, n + 1)]
    return DiffOp(terms, odd=False)


def act(gen: str | tuple[str, int], p: SuperPoly) -> SuperPoly:
    """Apply ``e_i`` or ``f_i``; ``gen`` is ``"e0"`` .. ``"fn"`` or ``("e", i)``."""
    if isinstance(gen, str):
        gen = (gen[0], int(gen[1:]))
    return generator(gen[0], gen[1], p.n)(p)


def laplacian(p: SuperPoly) -> SuperPoly:
    """``d/dx d/dxb - sum_i d/dxi_i d/dxib_i``."""
    return laplacian_op(p.n)(p)


# ---------------------------------------------------------------------------
# graded pieces


def basis_Sk(k: int, n: int) -> list[SuperMonomial]:
    out = []
    labels = list(range(1, n + 1))
    for j in range(0, min(k, 2 * n) + 1):
        for s in range(0, min(j, n) + 1):
            t = j - s
            if t > n:
                continue
            for S in combinations(labels, s):
                for T in combinations(labels, t):
                    for a in range(k - j + 1):
                        out.append(SuperMonomial(a, k - j - a, S, T))
    return sorted(out)


def dim_Sk(k: int, n: int) -> int:
    """``sum_j C(2n, j) (k - j + 1)``; zero for negative k."""
    if k < 0:
        return 0
    return sum(comb(2 * n, j) * (k - j + 1) for j in range(0, min(k, 2 * n) + 1))


def symmetric_power_char(k: int, n: int) -> Character:
    """Coefficient of ``t^k`` in ``prod (1 - t e^{+-eps})^-1 prod_i (1 + t e^{+-delta_i})``.

    Computed by truncated series multiplication, independently of monomial
    enumeration.
    """
    # series: dict t-degree -> Character
    zero = tuple([0] * (n + 1))
    series = {0: Character(n, {zero: 1})}

    def times(series, factor):
        out: dict[int, Character] = {}
        for d1, c1 in series.items():
            for d2, c2 in factor.items():
                if d1 + d2 > k:
                    continue
                prod_ = c1 * c2
                out[d1 + d2] = out[d1 + d2] + prod_ if d1 + d2 in out else prod_
        return out

    for sign in (1, -1):
        geo = {m: Character(n, {(sign * m,) + (0,) * n: 1}) for m in range(k + 1)}
        series = times(series, geo)
    for i in range(n):
        for sign in (1, -1):
            d = [0] * n
            d[i] = sign
            series = times(series, {0: Character(n, {zero: 1}), 1: Character(n, {(0, *d): 1})})
    return series.get(k, Character(n, {}))


@dataclass
class Subspace:
    basis: list[SuperPoly]
    k: int
    n: int
    weights: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        if not self.weights:
            self.weights = [p.weight() for p in self.basis]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def by_weight(self) -> dict[tuple[int, ...], list[SuperPoly]]:
        out: dict[tuple, list[SuperPoly]] = defaultdict(list)
        for w, p in zip(self.weights, self.basis):
            out[w].append(p)
        return dict(out)

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "dim": self.dim,
                "basis": [p.to_json() for p in self.basis]}

    @classmethod
    def from_json(cls, data: dict) -> Subspace:
        n = int(data["n"])
        return cls([SuperPoly.from_json(b, n) for b in data["basis"]], int(data["k"]), n)


def full_space(k: int, n: int) -> Subspace:
    mons = basis_Sk(k, n)
    return Subspace([SuperPoly.monomial(n, m) for m in mons], k, n, [m.weight(n) for m in mons])


def _group_by_weight(mons: list[SuperMonomial], n: int) -> dict[tuple, list[SuperMonomial]]:
    out: dict[tuple, list[SuperMonomial]] = defaultdict(list)
    for m in mons:
        out[m.weight(n)].append(m)
    return dict(out)


def _solve_kernel(cols: list, images: list[dict]) -> list[list[int]]:
    """Integer nullspace of the matrix whose j-th column is ``images[j]``."""
    row_keys = sorted({key for img in images for key in img})
    index = {key: r for r, key in enumerate(row_keys)}
    rows = [[0] * len(cols) for _ in row_keys]
    for j, img in enumerate(images):
        for key, v in img.items():
            rows[index[key]][j] = v
    return nullspace(rows, len(cols))


def kernel_laplacian(k: int, n: int) -> Subspace:
    """Exact kernel of the Laplacian on ``S^k``, one weight space at a time."""
    if k < 0:
        raise ValueError("k must be non-negative")
    lap = laplacian_op(n)
    basis, weights = [], []
    for w, mons in sorted(_group_by_weight(basis_Sk(k, n), n).items(), reverse=True):
        images = [lap.on_monomial(m) for m in mons]
        for vec in _solve_kernel(mons, images):
            basis.append(SuperPoly(n, {m: c for m, c in zip(mons, vec) if c}))
            weights.append(w)
    return Subspace(basis, k, n, weights)


def char_of(sub: Subspace) -> Character:
    counts: dict[tuple, int] = defaultdict(int)
    for w in sub.weights:
        counts[w] += 1
    return Character(sub.n, counts)


def highest_weight_vectors(sub: Subspace) -> list[tuple[tuple[int, ...], SuperPoly]]:
    """Basis of the joint kernel of ``e_0, ..., e_n`` inside ``sub``, by weight."""
    es = [generator("e", i, sub.n) for i in range(sub.n + 1)]
    out = []
    for w, vecs in sorted(sub.by_weight().items(), reverse=True):
        images = []
        for p in vecs:
            img: dict = {}
            for gi, e in enumerate(es):
                for m, c in e(p).items():
                    img[(gi, m)] = c
            images.append(img)
        # the basis vectors have integer coefficients, so do the images
        images = [{key: int(v) for key, v in img.items()} for img in images]
        for vec in _solve_kernel(vecs, images):
            p = SuperPoly(sub.n, {})
            for c, b in zip(vec, vecs):
                if c:
                    p = p + b.scale(c)
            out.append((w, p))
    return out


def gamma(k: int, n: int) -> SuperPoly:
    """``sum_{i=0}^n (-1)^i C(k-n, i) xb^(k-n-i) x^(n-i) Phi^i``, ``Phi = sum xi_j xib_j``."""
    if k < 2 * n:
        raise DegreeTooSmall(f"need k >= 2n, got k={k}, n={n}")
    phi = SuperPoly(n, {SuperMonomial(0, 0, (j,), (j,)): 1 for j in range(1, n + 1)})
    out = SuperPoly(n, {})
    for i in range(n + 1):
        even = SuperPoly.monomial(n, SuperMonomial(n - i, k - n - i))
        out = out + (even * phi ** i).scale((-1) ** i * comb(k - n, i))
    return out


def decompose_kernel(k: int, n: int) -> list[tuple[DominantWeight, int]]:
    """Composition factors of ``ker(Laplacian) in S^k`` with multiplicities."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    ch = char_of(kernel_laplacian(k, n))
    try:
        factors = composition_factors(ch)
    except DecompositionFailed:
        raise
    except ValueError as exc:  # pragma: no cover
        raise DecompositionFailed(str(exc)) from exc
    return sorted(factors.items(), key=lambda kv: (kv[0].lm1, kv[0].parts), reverse=True)


def decomposition_to_json(dec: list[tuple[DominantWeight, int]]) -> list[dict]:
    return [{"weight": str(w), "mult": m} for w, m in dec]


def _super_bracket(X: DiffOp, Y: DiffOp, m: SuperMonomial) -> dict[SuperMonomial, int]:
    sign = -1 if (X.odd and Y.odd) else 1
    out: dict[SuperMonomial, int] = defaultdict(int)
    for m2, c in Y.on_monomial(m).items():
        for m3, c2 in X.on_monomial(m2).items():
            out[m3] += c * c2
    for m2, c in X.on_monomial(m).items():
        for m3, c2 in Y.on_monomial(m2).items():
            out[m3] -= sign * c * c2
    return {key: v for key, v in out.items() if v}


def equivariance_counterexample(k: int, n: int):
    """First ``(check, generator, monomial)`` violating equivariance, else None.

    Checks ``Lap g = g Lap`` for every generator on every monomial of ``S^k``,
    plus the super-brackets ``[e_i, f_j] = 0`` (``i != j``) and ``[e_i, f_i]``
    acting diagonally.
    """
    lap = laplacian_op(n)
    gens = generators(n)

    def compose(A: DiffOp, B: DiffOp, m):
        out: dict = defaultdict(int)
        for m2, c in B.on_monomial(m).items():
            for m3, c2 in A.on_monomial(m2).items():
                out[m3] += c * c2
        return {key: v for key, v in out.items() if v}

    for m in basis_Sk(k, n):
        for name, g in gens:
            if compose(lap, g, m) != compose(g, lap, m):
                return ("laplacian", name, m)
        for i in range(n + 1):
            for j in range(n + 1):
                br = _super_bracket(generator("e", i, n), generator("f", j, n), m)
                if i != j and br:
                    return ("bracket", f"[e{i},f{j}]", m)
                if i == j and set(br) - {m}:
                    return ("bracket", f"[e{i},f{i}]", m)
    return None


def check_equivariance(k: int, n: int) -> bool:
    return equivariance_counterexample(k, n) is None
