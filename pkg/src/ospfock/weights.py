"""Integral dominant weights of osp(2|2n) and the L-operator.

Two coordinate systems are used throughout:

* :class:`DominantWeight` ``(lm1 | l1, ..., ln)`` holds the coefficients of
  ``eps`` and ``delta_1 .. delta_n`` with ``l1 >= ... >= ln >= 0``.
* :class:`FTuple` ``(fm1 | f1, ..., fn)`` holds the pairings of
  ``lambda + rho`` with ``eps`` and the ``delta_i``; ``f1 < ... < fn < 0``.

The bilinear form is ``(eps, eps) = 1``, ``(delta_i, delta_j) = -[i == j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import TypicalWeight


@dataclass(frozen=True)
class WeightVector:
    """Element ``eps*eps + sum(deltas[i] * delta_{i+1})`` of the weight lattice."""

    eps: int
    deltas: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.deltas)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.eps, *self.deltas)

    def __add__(self, other: WeightVector) -> WeightVector:
        return WeightVector(self.eps + other.eps,
                            tuple(a + b for a, b in zip(self.deltas, other.deltas)))

    def __sub__(self, other: WeightVector) -> WeightVector:
        return WeightVector(self.eps - other.eps,
                            tuple(a - b for a, b in zip(self.deltas, other.deltas)))

    def scale(self, k: int) -> WeightVector:
        return WeightVector(k * self.eps, tuple(k * d for d in self.deltas))

    def pair(self, other: WeightVector) -> int:
        """The invariant form: ``(eps,eps)=1``, ``(delta_i,delta_i)=-1``."""
        return self.eps * other.eps - sum(a * b for a, b in zip(self.deltas, other.deltas))

    @classmethod
    def epsilon(cls, n: int) -> WeightVector:
        return cls(1, (0,) * n)

    @classmethod
    def delta(cls, i: int, n: int) -> WeightVector:
        """``delta_i`` for ``1 <= i <= n``."""
        return cls(0, tuple(int(j == i - 1) for j in range(n)))


def rho(n: int) -> WeightVector:
    """Graded half-sum of positive roots, ``-n eps + sum (n-i+1) delta_i``."""
    if n < 1:
        raise ValueError("rank must be positive")
    return WeightVector(-n, tuple(n - i for i in range(n)))


def rho0(n: int) -> WeightVector:
    """Half-sum of the positive roots of sp(2n)."""
    if n < 1:
        raise ValueError("rank must be positive")
    return WeightVector(0, tuple(n - i for i in range(n)))


# ---------------------------------------------------------------------------
# the two coordinate systems


def _fmt(head: int, tail: tuple[int, ...]) -> str:
    return f"{head}|" + ",".join(str(x) for x in tail)


def _parse(text: str) -> tuple[int, tuple[int, ...]]:
    try:
        head, tail = text.strip().split("|")
        parts = tuple(int(x) for x in tail.split(",")) if tail.strip() else ()
        return int(head), parts
    except ValueError as exc:
        raise ValueError(f"expected 'a|b1,...,bn', got {text!r}") from exc


@dataclass(frozen=True)
class DominantWeight:
    n: int
    lm1: int
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.n < 1 or len(parts) != self.n:
            raise ValueError(f"need exactly n={self.n} parts, got {parts}")
        if parts[-1] < 0 or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing and >= 0: {parts}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> DominantWeight:
        lm1, parts = _parse(text)
        if n is not None and len(parts) != n:
            raise ValueError(f"expected {n} parts in {text!r}")
        return cls(len(parts), lm1, parts)

    @classmethod
    def from_vector(cls, v: WeightVector) -> DominantWeight:
        return cls(v.n, v.eps, v.deltas)

    def vector(self) -> WeightVector:
        return WeightVector(self.lm1, self.parts)

    def __str__(self) -> str:
        return _fmt(self.lm1, self.parts)

    def to_json(self) -> dict:
        return {"n": self.n, "lm1": self.lm1, "parts": list(self.parts)}

    @classmethod
    def from_json(cls, data: dict) -> DominantWeight:
        return cls(int(data["n"]), int(data["lm1"]), tuple(data["parts"]))

    # conveniences that delegate to the f-coordinates
    def ftuple(self) -> FTuple:
        return to_ftuple(self)

    def is_atypical(self) -> bool:
        return atypicality(to_ftuple(self)) is not None

    @property
    def L(self) -> DominantWeight:
        return from_ftuple(l_step(to_ftuple(self)))


@dataclass(frozen=True)
class FTuple:
    fm1: int
    fs: tuple[int, ...]

    def __post_init__(self):
        fs = tuple(int(x) for x in self.fs)
        object.__setattr__(self, "fs", fs)
        if not fs:
            raise ValueError("rank must be positive")
        if fs[-1] >= 0 or any(a >= b for a, b in zip(fs, fs[1:])):
            raise ValueError(f"need f1 < f2 < ... < fn < 0, got {fs}")

    @property
    def n(self) -> int:
        return len(self.fs)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> FTuple:
        fm1, fs = _parse(text)
        if n is not None and len(fs) != n:
            raise ValueError(f"expected {n} entries in {text!r}")
        return cls(fm1, fs)

    def __str__(self) -> str:
        return _fmt(self.fm1, self.fs)

    def to_json(self) -> dict:
        return {"n": self.n, "fm1": self.fm1, "fs": list(self.fs)}

    @classmethod
    def from_json(cls, data: dict) -> FTuple:
        return cls(int(data["fm1"]), tuple(data["fs"]))

    def sort_key(self) -> tuple[int, ...]:
        return (self.fm1, *self.fs)

    def __lt__(self, other: FTuple) -> bool:
        return self.sort_key() < other.sort_key()


def to_ftuple(lam: DominantWeight) -> FTuple:
    n = lam.n
    return FTuple(lam.lm1 - n, tuple(-lam.parts[i] - (n - i) for i in range(n)))


def from_ftuple(f: FTuple) -> DominantWeight:
    n = f.n
    return DominantWeight(n, f.fm1 + n, tuple(-f.fs[i] - (n - i) for i in range(n)))


def iter_ftuples(n: int, bound: int, atypical_only: bool = False) -> Iterator[FTuple]:
    """All f with every entry in ``[-bound, -1]`` and ``|fm1| <= bound``."""
    for fs in combinations(range(-bound, 0), n):
        for fm1 in range(-bound, bound + 1):
            f = FTuple(fm1, fs)
            if atypical_only and atypicality(f) is None:
                continue
            yield f


# ---------------------------------------------------------------------------
# atypicality and the L-operator


def atypicality(f: FTuple) -> tuple[int, WeightVector] | None:
    """Return ``(i, gamma)`` if ``|fm1| = -f_i``, else ``None``.

    ``gamma`` is ``eps - delta_i`` when ``fm1 < 0`` and ``eps + delta_i`` when
    ``fm1 > 0``. ``fm1 == 0`` is always typical.
    """
    if f.fm1 == 0:
        return None
    target = -abs(f.fm1)
    for i, fi in enumerate(f.fs, start=1):
        if fi == target:
            sign = -1 if f.fm1 < 0 else 1
            gamma = WeightVector.epsilon(f.n) + WeightVector.delta(i, f.n).scale(sign)
            return i, gamma
    return None


def is_atypical(f: FTuple) -> bool:
    return atypicality(f) is not None


def l_case(f: FTuple) -> str:
    """Which of the three combinatorial cases ('I', 'II', 'III') applies to f."""
    at = atypicality(f)
    if at is None:
        raise TypicalWeight(f"{f} is typical")
    if f.fm1 < 0:
        return "I"
    fi = f.fs[at[0] - 1]
    present = set(f.fs)
    if all(v in present for v in range(fi, 0)):
        return "III"
    return "II"


def l_step(f: FTuple) -> FTuple:
    """The L-operator ``f -> f^L`` by the case analysis on f-tuples."""
    case = l_case(f)
    i, _ = atypicality(f)
    fi = f.fs[i - 1]
    rest = [x for x in f.fs if x != fi]
    present = set(f.fs)
    if case == "I":
        d = fi - 1
        while d in present:
            d -= 1
        return FTuple(d, tuple(sorted(rest + [d])))
    if case == "II":
        # smallest c >= 1 with -c > f_i free, scanning upward from f_i
        c = -fi - 1
        while -c in present:
            c -= 1
        return FTuple(c, tuple(sorted(rest + [-c])))
    return FTuple(-f.fm1, f.fs)


def l_operator_shift(f: FTuple) -> tuple[FTuple, int]:
    """Brute-force ``w(lambda + rho - k gamma) - rho``; returns ``(f^L, k)``.

    ``k`` is the least positive integer making ``lambda + rho - k gamma``
    regular for sp(2n): all delta-coordinates nonzero with distinct absolute
    values. ``w`` sorts absolute values into strictly decreasing order.
    """
    at = atypicality(f)
    if at is None:
        raise TypicalWeight(f"{f} is typical")
    _, gamma = at
    lam = from_ftuple(f)
    shifted = lam.vector() + rho(f.n)
    limit = 2 * (abs(f.fm1) + abs(f.fs[0]) + f.n) + 2
    for k in range(1, limit):
        mu = shifted - gamma.scale(k)
        absd = [abs(d) for d in mu.deltas]
        if 0 in absd or len(set(absd)) != len(absd):
            continue
        dominant = WeightVector(mu.eps, tuple(sorted(absd, reverse=True)))
        return to_ftuple(DominantWeight.from_vector(dominant - rho(f.n))), k
    raise AssertionError(f"no regular shift found for {f}")  # pragma: no cover


def l_step_oracle(f: FTuple) -> FTuple:
    return l_operator_shift(f)[0]


def l_chain(f: FTuple, depth: int) -> list[FTuple]:
    """``[f^(1), ..., f^(depth)]``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if atypicality(f) is None:
        raise TypicalWeight(f"{f} is typical")
    out = []
    cur = f
    for _ in range(depth):
        cur = l_step(cur)
        out.append(cur)
    return out


def chain_distance(g: FTuple, f: FTuple) -> int | None:
    """The ``l >= 1`` with ``g = f^(l)``, or ``None``.

    The chain's fm1 coordinate strictly decreases, so the walk stops once it
    passes below ``min(g.fm1, g.fs[0]) - 1``.
    """
    if g.n != f.n:
        raise ValueError("rank mismatch")
    if g == f or atypicality(f) is None:
        return None
    floor = min(g.fm1, g.fs[0]) - 1
    cur, steps = f, 0
    while cur.fm1 >= floor:
        cur = l_step(cur)
        steps += 1
        if cur == g:
            return steps
    return None


def bruhat_less(g: FTuple, f: FTuple) -> bool:
    """``g < f`` in the Bruhat order, i.e. g lies on the L-chain of f."""
    return chain_distance(g, f) is not None


# ---------------------------------------------------------------------------
# blocks and duality


@dataclass(frozen=True)
class InfWeight:
    """Finitely supported element of ``sum_{i <= 0} Z eps_i``."""

    terms: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> InfWeight:
        return cls(tuple(sorted((i, c) for i, c in d.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: InfWeight) -> InfWeight:
        d = self.as_dict()
        for i, c in other.terms:
            d[i] = d.get(i, 0) + c
        return InfWeight.from_dict(d)

    @classmethod
    def unit(cls, i: int, coeff: int = 1) -> InfWeight:
        return cls.from_dict({i: coeff})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*eps_{i}" for i, c in self.terms)


def wt_map(f: FTuple) -> InfWeight:
    """``eps_{-|fm1|} - eps_{f1} - ... - eps_{fn}``."""
    d: dict[int, int] = {-abs(f.fm1): 1}
    for x in f.fs:
        d[x] = d.get(x, 0) - 1
    return InfWeight.from_dict(d)


def same_block(f: FTuple, g: FTuple) -> bool:
    """Equal wt on atypical f-tuples; a typical f-tuple is alone in its block."""
    if f == g:
        return True
    return is_atypical(f) and is_atypical(g) and wt_map(f) == wt_map(g)


def dual_ftuple(f: FTuple) -> FTuple:
    return FTuple(-f.fm1, f.fs)


def dual_weight(lam: DominantWeight) -> DominantWeight:
    """``beta - w0 lambda`` with ``beta = 2n eps``."""
    return DominantWeight(lam.n, 2 * lam.n - lam.lm1, lam.parts)
