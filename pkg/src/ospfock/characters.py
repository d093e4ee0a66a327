"""Exact characters of sp(2n) and osp(2|2n) modules.

A :class:`Character` is a finitely supported integer function on the lattice
``Z eps + Z delta_1 + ... + Z delta_n`` (optionally ``+ Z eta``). Weights are
tuples ``(eps, d1, ..., dn)`` or ``(eps, d1, ..., dn, eta)``.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NotDivisible, NotInKacSpan, RankTooLarge
from .weights import (
    DominantWeight,
    InfWeight,
    atypicality,
    from_ftuple,
    l_chain,
    rho0,
    to_ftuple,
    wt_map,
)

MAX_WEYL_RANK = 6


class Character:
    """Sparse integer combination of formal exponentials ``e^mu``."""

    __slots__ = ("n", "eta", "_c")

    def __init__(self, n: int, terms: Mapping[tuple, int] | Iterable[tuple[tuple, int]] = (),
                 eta: bool = False):
        self.n = n
        self.eta = eta
        width = n + 1 + int(eta)
        items = terms.items() if isinstance(terms, Mapping) else terms
        c: dict[tuple, int] = {}
        for w, v in items:
            w = tuple(w)
            if len(w) != width:
                raise ValueError(f"weight {w} has wrong length for n={n}, eta={eta}")
            c[w] = c.get(w, 0) + v
        self._c = {w: v for w, v in c.items() if v}

    # constructors
    @classmethod
    def one(cls, n: int, eta: bool = False) -> Character:
        return cls(n, {(0,) * (n + 1 + int(eta)): 1}, eta)

    @classmethod
    def exp(cls, weight: Sequence[int], n: int, eta: bool = False) -> Character:
        return cls(n, {tuple(weight): 1}, eta)

    # container protocol
    def __getitem__(self, w) -> int:
        return self._c.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __iter__(self) -> Iterator[tuple]:
        return iter(sorted(self._c))

    def items(self) -> list[tuple[tuple, int]]:
        return sorted(self._c.items())

    def raw(self) -> dict[tuple, int]:
        return dict(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return (self.n, self.eta, self._c) == (other.n, other.eta, other._c)

    def _check(self, other: Character):
        if (self.n, self.eta) != (other.n, other.eta):
            raise ValueError("characters live on different lattices")

    # arithmetic
    def __add__(self, other: Character) -> Character:
        self._check(other)
        out = dict(self._c)
        for w, v in other._c.items():
            out[w] = out.get(w, 0) + v
        return Character(self.n, out, self.eta)

    def __neg__(self) -> Character:
        return Character(self.n, {w: -v for w, v in self._c.items()}, self.eta)

    def __sub__(self, other: Character) -> Character:
        return self + (-other)

    def scale(self, k: int) -> Character:
        return Character(self.n, {w: k * v for w, v in self._c.items()}, self.eta)

    def __mul__(self, other) -> Character:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[tuple, int] = {}
        for w1, v1 in self._c.items():
            for w2, v2 in other._c.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                out[w] = out.get(w, 0) + v1 * v2
        return Character(self.n, out, self.eta)

    __rmul__ = __mul__

    def shift(self, weight: Sequence[int]) -> Character:
        """Multiply by ``e^weight``."""
        return Character(self.n, {tuple(a + b for a, b in zip(w, weight)): v
                                  for w, v in self._c.items()}, self.eta)

    def with_eta(self) -> Character:
        if self.eta:
            return self
        return Character(self.n, {w + (0,): v for w, v in self._c.items()}, True)

    def eps_degrees(self) -> list[int]:
        return sorted({w[0] for w in self._c})

    # I/O
    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "coeff": str(v)} for w, v in self.items()]

    @classmethod
    def from_json(cls, data: list[dict], n: int, eta: bool = False) -> Character:
        return cls(n, {tuple(d["weight"]): int(d["coeff"]) for d in data}, eta)

    def __repr__(self) -> str:
        return f"Character(n={self.n}, {dict(self.items())})"


def dim_char(c: Character) -> int:
    return sum(v for _, v in c.items())


# ---------------------------------------------------------------------------
# the Weyl group of type C_n


@dataclass(frozen=True)
class SignedPermutation:
    """``delta_i -> signs[i] * delta_{perm[i]}`` (0-based)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    def act(self, deltas: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(self.perm)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * deltas[i]
        return tuple(out)

    @property
    def length(self) -> int:
        """Number of positive roots of C_n sent to negative roots."""
        return _length(self)

    @property
    def parity(self) -> int:
        """``(-1)^length``, computed as ``sgn(perm) * prod(signs)``."""
        inv = sum(1 for i in range(self.n) for j in range(i + 1, self.n)
                  if self.perm[i] > self.perm[j])
        sign = -1 if inv % 2 else 1
        for s in self.signs:
            sign *= s
        return sign


def _is_positive(v: Sequence[int]) -> bool:
    for x in v:
        if x:
            return x > 0
    return False


def _positive_roots_c(n: int) -> list[tuple[int, ...]]:
    roots = []
    for i in range(n):
        roots.append(tuple(2 if k == i else 0 for k in range(n)))
        for j in range(i + 1, n):
            roots.append(tuple(1 if k == i else (-1 if k == j else 0) for k in range(n)))
            roots.append(tuple(1 if k in (i, j) else 0 for k in range(n)))
    return roots


@lru_cache(maxsize=None)
def _length(w: SignedPermutation) -> int:
    return sum(1 for r in _positive_roots_c(w.n) if not _is_positive(w.act(r)))


@lru_cache(maxsize=None)
def _weyl_group(n: int) -> tuple[SignedPermutation, ...]:
    return tuple(SignedPermutation(p, s)
                 for p in permutations(range(n))
                 for s in product((1, -1), repeat=n))


def weyl_group(n: int) -> Iterator[SignedPermutation]:
    """All ``2^n n!`` elements of the Weyl group of sp(2n)."""
    if n > MAX_WEYL_RANK:
        raise RankTooLarge(f"n={n} exceeds {MAX_WEYL_RANK}")
    if n < 1:
        raise ValueError("rank must be positive")
    return iter(_weyl_group(n))


def act_on(w: SignedPermutation, c: Character) -> Character:
    """``w(c)``; W moves only the delta coordinates."""
    n = c.n
    return Character(n, {(wt[0],) + w.act(wt[1:n + 1]) + wt[n + 1:]: v
                         for wt, v in c.raw().items()}, c.eta)


def alt_sum(p: Character) -> Character:
    """``sum_w (-1)^l(w) w(p)``."""
    n = p.n
    out: dict[tuple, int] = {}
    raw = p.raw()
    for w in weyl_group(n):
        sgn = w.parity
        for wt, v in raw.items():
            key = (wt[0],) + w.act(wt[1:n + 1]) + wt[n + 1:]
            out[key] = out.get(key, 0) + sgn * v
    return Character(n, out, p.eta)


def _vec(n: int, eps: int = 0, deltas: Sequence[int] | None = None, eta: bool = False,
         eta_val: int = 0) -> tuple:
    d = tuple(deltas) if deltas is not None else (0,) * n
    return (eps, *d) + ((eta_val,) if eta else ())


@lru_cache(maxsize=None)
def weyl_denominator(n: int, eta: bool = False) -> Character:
    """``D0 = sum_w (-1)^l(w) w(e^rho0)``."""
    return alt_sum(Character.exp(_vec(n, 0, rho0(n).deltas, eta), n, eta))


def _lex_key(n: int):
    # delta_1 most significant, then delta_2 ... delta_n, then eps, then eta
    return lambda w: (*w[1:n + 1], w[0], *w[n + 1:])


def divide_by_d0(num: Character) -> Character:
    """Exact quotient ``num / D0`` by leading-term elimination.

    Raises :class:`NotDivisible` if a remainder is left.
    """
    n = num.n
    if not num:
        return Character(n, {}, num.eta)
    d0 = weyl_denominator(n, num.eta)
    key = _lex_key(n)
    d_terms = d0.items()
    d_lead = max(d0.raw(), key=key)
    d_lead_coeff = d0[d_lead]
    d_min = min(d0.raw(), key=key)
    # every quotient term t satisfies t >= lexmin(num) - lexmin(D0)
    floor = key(tuple(a - b for a, b in zip(min(num.raw(), key=key), d_min)))

    rem = num.raw()
    heap = [tuple(-x for x in key(w)) + (w,) for w in rem]
    heapq.heapify(heap)
    quot: dict[tuple, int] = {}
    while rem:
        entry = heapq.heappop(heap)
        w = entry[-1]
        c = rem.get(w, 0)
        if not c:
            continue
        t = tuple(a - b for a, b in zip(w, d_lead))
        if key(t) < floor or c % d_lead_coeff:
            raise NotDivisible("numerator is not divisible by the Weyl denominator")
        qc = c // d_lead_coeff
        quot[t] = quot.get(t, 0) + qc
        for dw, dv in d_terms:
            tw = tuple(a + b for a, b in zip(t, dw))
            new = rem.get(tw, 0) - qc * dv
            if new:
                if tw not in rem:
                    heapq.heappush(heap, tuple(-x for x in key(tw)) + (tw,))
                rem[tw] = new
            else:
                rem.pop(tw, None)
        if w in rem:  # leading term must cancel exactly
            raise NotDivisible("leading term did not cancel")  # pragma: no cover
    return Character(n, quot, num.eta)


@lru_cache(maxsize=None)
def _sp_irr_char(parts: tuple[int, ...], eta: bool) -> Character:
    n = len(parts)
    top = tuple(p + r for p, r in zip(parts, rho0(n).deltas))
    return divide_by_d0(alt_sum(Character.exp(_vec(n, 0, top, eta), n, eta)))


def sp_irr_char(mu: Sequence[int], eta: bool = False) -> Character:
    """Weyl character of the irreducible sp(2n)-module with highest weight mu."""
    mu = tuple(int(x) for x in mu)
    if mu[-1] < 0 or any(a < b for a, b in zip(mu, mu[1:])):
        raise ValueError(f"{mu} is not dominant for sp(2n)")
    return _sp_irr_char(mu, eta)


def chi(n: int, l: int, eta: bool = False) -> Character:
    """Character of the sp(2n)-module with highest weight ``delta_1 + ... + delta_l``."""
    if not 0 <= l <= n:
        raise ValueError("need 0 <= l <= n")
    return sp_irr_char((1,) * l + (0,) * (n - l), eta)


def natural_char(n: int) -> Character:
    """Character of ``C^{2|2n}``."""
    terms = {_vec(n, 1): 1, _vec(n, -1): 1}
    for i in range(n):
        for s in (1, -1):
            d = [0] * n
            d[i] = s
            terms[_vec(n, 0, d)] = 1
    return Character(n, terms)


def odd_root_weights(n: int) -> list[tuple[int, tuple[int, ...]]]:
    """Positive odd roots as ``(index, weight)``; index i for ``eps - delta_i``, -i for ``eps + delta_i``."""
    out = []
    for i in range(1, n + 1):
        for s in (-1, 1):
            d = [0] * n
            d[i - 1] = s
            out.append((-s * i, _vec(n, 1, d)))
    return out


@lru_cache(maxsize=None)
def _odd_product(n: int, omit: tuple | None) -> Character:
    out = Character.one(n)
    for _, alpha in odd_root_weights(n):
        if alpha == omit:
            continue
        out = out * Character(n, {_vec(n): 1, tuple(-a for a in alpha): 1})
    return out


def odd_product(n: int, omit: Sequence[int] | None = None) -> Character:
    """``prod (1 + e^{-alpha})`` over positive odd roots, optionally skipping one."""
    return _odd_product(n, tuple(omit) if omit is not None else None)


# ---------------------------------------------------------------------------
# osp(2|2n) characters


@lru_cache(maxsize=None)
def kac_char(lam: DominantWeight) -> Character:
    """``e^{lm1 eps} ch L0(parts) prod_{alpha odd} (1 + e^{-alpha})``."""
    n = lam.n
    return (sp_irr_char(lam.parts) * odd_product(n)).shift(_vec(n, lam.lm1))


@lru_cache(maxsize=None)
def irr_char(lam: DominantWeight) -> Character:
    """Character of ``L(lam)``: Kac character if typical, else the
    alternating-sum formula with the atypical odd root removed from the product."""
    at = atypicality(to_ftuple(lam))
    if at is None:
        return kac_char(lam)
    n = lam.n
    gamma = at[1].as_tuple()
    top = tuple(a + b for a, b in zip(lam.vector().as_tuple(), (0, *rho0(n).deltas)))
    num = alt_sum(odd_product(n, gamma).shift(top))
    return divide_by_d0(num)


def irr_char_by_kac_sum(lam: DominantWeight) -> Character:
    """``sum_i (-1)^i ch K(lam^(i))`` restricted to eps-degrees ``>= lm1 - 2n``.

    ``ch K(mu)`` occupies eps-degrees ``[mu_{-1} - 2n, mu_{-1}]`` and the chain's
    eps-coordinate strictly decreases, so once ``lam^(i)_{-1} < lm1 - 2n`` no
    further term reaches the window where ``ch L(lam)`` lives.
    """
    f = to_ftuple(lam)
    if atypicality(f) is None:
        return kac_char(lam)
    floor = lam.lm1 - 2 * lam.n
    total = kac_char(lam)
    sign = 1
    cur = f
    while True:
        cur = l_chain(cur, 1)[0]
        mu = from_ftuple(cur)
        if mu.lm1 < floor:
            break
        sign = -sign
        total = total + kac_char(mu).scale(sign)
    return Character(lam.n, {w: v for w, v in total.raw().items() if w[0] >= floor})


def tilting_char(lam: DominantWeight) -> Character:
    f = to_ftuple(lam)
    if atypicality(f) is None:
        return kac_char(lam)
    return kac_char(lam) + kac_char(lam.L)


def dual_char(c: Character) -> Character:
    """Character of the dual module: ``e^mu -> e^{-mu}``."""
    return Character(c.n, {tuple(-x for x in w): v for w, v in c.raw().items()}, c.eta)


def _is_dominant(w: tuple, n: int) -> bool:
    d = w[1:n + 1]
    return d[-1] >= 0 and all(a >= b for a, b in zip(d, d[1:]))


def kac_decompose(c: Character, virtual: bool = False,
                  min_eps: int | None = None) -> dict[DominantWeight, int]:
    """Write ``c`` as an integer combination of Kac characters.

    Peels the lexicographically largest weight (eps first) at each step.
    With ``min_eps`` set, peeling stops once the leading eps-degree drops
    below it and whatever remains is ignored (needed for virtual sums such as
    ``ch L`` of an atypical weight, whose Kac expansion is infinite).
    """
    if c.eta:
        raise ValueError("Kac decomposition is defined on the eps/delta lattice only")
    n = c.n
    if not c:
        return {}
    floor = min(c.eps_degrees()) if min_eps is None else min_eps
    rem = c
    out: Counter = Counter()
    while rem:
        lead = max(rem.raw())
        coeff = rem[lead]
        if lead[0] < floor:
            if min_eps is not None:
                break
            raise NotInKacSpan(f"leftover terms below eps-degree {floor}")
        if not _is_dominant(lead, n):
            raise NotInKacSpan(f"non-dominant leading weight {lead}")
        if coeff < 0 and not virtual:
            raise NotInKacSpan(f"negative multiplicity at {lead}")
        lam = DominantWeight(n, lead[0], lead[1:])
        out[lam] += coeff
        rem = rem - kac_char(lam).scale(coeff)
    return {lam: m for lam, m in out.items() if m}


def block_target(direction: str, a: int, lam: DominantWeight) -> InfWeight:
    """``wt(f_lam) + eps_{-a} - eps_{-a+1}`` (E) or the reverse (F)."""
    sign = 1 if direction.upper() == "E" else -1
    return wt_map(to_ftuple(lam)) + InfWeight.unit(-a, sign) + InfWeight.unit(-a + 1, -sign)


@lru_cache(maxsize=None)
def _tensor_natural(lam: DominantWeight) -> tuple[tuple[DominantWeight, int], ...]:
    return tuple(sorted(kac_decompose(kac_char(lam) * natural_char(lam.n)).items(),
                        key=lambda kv: (kv[0].lm1, kv[0].parts)))


def translate(direction: str, a: int, lam: DominantWeight) -> dict[DominantWeight, int]:
    """Kac multiplicities of ``pr_target(C^{2|2n} (x) K(lam))``."""
    if a < 1:
        raise ValueError("a must be positive")
    if direction.upper() not in ("E", "F"):
        raise ValueError("direction must be E or F")
    target = block_target(direction, a, lam)
    return {mu: m for mu, m in _tensor_natural(lam) if wt_map(to_ftuple(mu)) == target}


# ---------------------------------------------------------------------------
# the alternating sums with an extra formal variable


def aux_alt_sum(pattern: Sequence[int] | int, n: int | None = None,
                use_x: bool = True) -> Character:
    """``(1/D0) sum_w (-1)^l(w) w(e^{lam + rho0} prod_i (1 + x e^{-delta_i}))``.

    ``lam = sum k_i delta_i`` for a 0/1 ``pattern``; an integer ``l`` means
    ``delta_1 + ... + delta_l`` (``n`` required). ``x = e^{-eta}``, realised
    as an extra lattice coordinate, or ``x = 1`` when ``use_x`` is false.
    """
    if isinstance(pattern, int):
        if n is None:
            raise ValueError("n is required when pattern is an integer")
        kvec = (1,) * pattern + (0,) * (n - pattern)
    else:
        kvec = tuple(pattern)
    n = len(kvec)
    if any(k not in (0, 1) for k in kvec):
        raise ValueError("pattern entries must be 0 or 1")
    eta = use_x
    prod_ = Character.one(n, eta)
    for i in range(n):
        d = [0] * n
        d[i] = -1
        prod_ = prod_ * Character(n, {_vec(n, eta=eta): 1, _vec(n, 0, d, eta, 1): 1}, eta)
    top = tuple(k + r for k, r in zip(kvec, rho0(n).deltas))
    return divide_by_d0(alt_sum(prod_.shift(_vec(n, 0, top, eta))))


def aux_alt_sum_expected(n: int, l: int) -> Character:
    """``sum_{j=0}^{l} x^{l-j} chi_j`` in the eta-extended lattice."""
    out = Character(n, {}, True)
    for j in range(l + 1):
        out = out + chi(n, j, eta=True).shift(_vec(n, eta=True, eta_val=l - j))
    return out


def chi_expansion(n: int, k: int) -> Character:
    """Explicit chi-expansion of ``ch L(-eps + delta_1 + ... + delta_{2n-k+1})``.

    ``sum_{p=1}^{k-n} e^{-p eps} sum_{j=0}^{2n-k+p} e^{(j-2n+k-p) eps} chi_j``.
    """
    if not n + 1 <= k <= 2 * n:
        raise ValueError("need n+1 <= k <= 2n")
    out = Character(n, {})
    for p in range(1, k - n + 1):
        for j in range(0, 2 * n - k + p + 1):
            out = out + chi(n, j).shift(_vec(n, k - 2 * n - 2 * p + j))
    return out


def chi_expansion_weight(n: int, k: int) -> DominantWeight:
    m = 2 * n - k + 1
    return DominantWeight(n, -1, (1,) * m + (0,) * (n - m))


def weyl_dimension_fundamental(n: int, l: int) -> int:
    """``C(2n, l) - C(2n, l-2)``."""
    return comb(2 * n, l) - (comb(2 * n, l - 2) if l >= 2 else 0)


def composition_factors(c: Character) -> dict[DominantWeight, int]:
    """Irreducible multiplicities of an honest character, by greedy peeling.

    The lexicographically largest weight of a sum of irreducible characters
    is the highest weight of one of them, since every positive root is
    lexicographically positive.
    """
    from .errors import DecompositionFailed

    n = c.n
    rem = c
    out: Counter = Counter()
    while rem:
        lead = max(rem.raw())
        coeff = rem[lead]
        if coeff < 0 or not _is_dominant(lead, n):
            raise DecompositionFailed(f"cannot peel weight {lead} with coefficient {coeff}")
        lam = DominantWeight(n, lead[0], lead[1:])
        out[lam] += coeff
        rem = rem - irr_char(lam).scale(coeff)
    return dict(out)


def kac_composition_multiplicity(lam: DominantWeight, mu: DominantWeight) -> int:
    """``[K(lam) : L(mu)]`` read off from characters."""
    return composition_factors(kac_char(lam)).get(mu, 0)


def tilting_flag_multiplicity(lam: DominantWeight, mu: DominantWeight) -> int:
    """``(U(lam) : K(mu))`` read off from the Kac expansion of the tilting character."""
    return kac_decompose(tilting_char(lam)).get(mu, 0)
