"""The Fock space ``V (x) wedge^n W_-`` and its canonical bases.

A basis vector ``K_f = v_{fm1} (x) w_{f1} ^ ... ^ w_{fn}`` is keyed by its
:class:`~ospfock.weights.FTuple`. Coefficients live in ``Z[q, q^-1]``.

The quantum group acts on ``F_-`` (``fm1 < 0``) through the comultiplication
``D(E_a) = 1 (x) E_a + E_a (x) K_{a+1,a}``, ``D(F_a) = F_a (x) 1 + K_{a,a+1} (x) F_a``,
on ``F_+`` through the mirrored coproduct obtained by conjugating with
``E_i -> F_{-i-1}``, ``F_i -> E_{-i-1}``, ``K_i -> K_{-i}``, and on ``F_0`` through
the wedge factor only. Index ``-1`` carries the two extra operators
``E_{-1} = E_{-1,0} (x) K_{-1}^{-1} + E_{1,0} (x) 1`` and
``F_{-1} = E_{0,-1} (x) 1 + E_{0,1} (x) K_{-1}``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .errors import TypicalWeight
from .laurent import ONE, Q, ZERO, LaurentPoly, q_power
from .weights import (
    FTuple,
    atypicality,
    chain_distance,
    l_case,
    l_chain,
    l_step,
)

# Wedge exchange rule: w_b ^ w_a = -q**EXCHANGE_POWER * w_a ^ w_b for a < b.
# Pinned by pin_exchange_power(): only -1 makes the relation span of two
# tensor factors stable under every generator.
EXCHANGE_POWER = -1


# ---------------------------------------------------------------------------
# vectors


class FockVector:
    """Finite sum ``sum c_f K_f`` with Laurent-polynomial coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[FTuple, LaurentPoly] | Iterable[tuple[FTuple, LaurentPoly]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[FTuple, LaurentPoly] = {}
        for f, c in items:
            if isinstance(c, int):
                c = LaurentPoly.const(c)
            acc[f] = acc[f] + c if f in acc else c
        self._terms = {f: c for f, c in acc.items() if c}

    @classmethod
    def basis(cls, f: FTuple, coeff: LaurentPoly = ONE) -> FockVector:
        return cls({f: coeff})

    def __getitem__(self, f: FTuple) -> LaurentPoly:
        return self._terms.get(f, ZERO)

    def __iter__(self) -> Iterator[FTuple]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[FTuple, LaurentPoly]]:
        return [(f, self._terms[f]) for f in self.support()]

    def support(self) -> list[FTuple]:
        """Support in descending order (Bruhat-compatible: chains lower fm1)."""
        return sorted(self._terms, key=FTuple.sort_key, reverse=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: FockVector) -> FockVector:
        return FockVector(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> FockVector:
        return FockVector({f: -c for f, c in self._terms.items()})

    def __sub__(self, other: FockVector) -> FockVector:
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> FockVector:
        if isinstance(c, int):
            c = LaurentPoly.const(c)
        return FockVector({f: v * c for f, v in self._terms.items()})

    def restrict(self, keys: Iterable[FTuple]) -> FockVector:
        keys = set(keys)
        return FockVector({f: c for f, c in self._terms.items() if f in keys})

    def at_one(self) -> dict[FTuple, int]:
        """Specialise ``q = 1``; zero multiplicities are dropped."""
        out = {f: c.at_one() for f, c in self._terms.items()}
        return {f: v for f, v in out.items() if v}

    def to_json(self) -> list[dict]:
        return [{"f": str(f), "coeff": c.to_json()} for f, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> FockVector:
        return cls({FTuple.parse(d["f"]): LaurentPoly.from_json(d["coeff"]) for d in data})

    def __repr__(self) -> str:
        return f"FockVector({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*K[{f}]" for f, c in self.items())


ZERO_VECTOR = FockVector()


@dataclass(frozen=True)
class TensorWord:
    """``v_{v_index} (x) w_{c1} (x) ... (x) w_{cn}`` before passing to the wedge."""

    v_index: int
    w_indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "w_indices", tuple(self.w_indices))
        if any(c >= 0 for c in self.w_indices):
            raise ValueError(f"wedge indices must be negative: {self.w_indices}")


def straighten(word: TensorWord, coeff: LaurentPoly = ONE,
               exchange_power: int | None = None) -> FockVector:
    """Normal-order the wedge factor of ``word``.

    Each adjacent exchange of ``w_b ^ w_a`` (``a < b``) costs ``-q**s``; a
    repeated index kills the word.
    """
    s = EXCHANGE_POWER if exchange_power is None else exchange_power
    w = list(word.w_indices)
    if len(set(w)) != len(w):
        return ZERO_VECTOR
    swaps = 0
    # bubble sort: the number of adjacent exchanges is the inversion count
    for end in range(len(w) - 1, 0, -1):
        for j in range(end):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                swaps += 1
    factor = q_power(s * swaps, (-1) ** swaps)
    return FockVector.basis(FTuple(word.v_index, tuple(w)), coeff * factor)


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class GeneratorName:
    kind: str  # "E", "F" or "K"
    index: int

    def __post_init__(self):
        if self.kind not in ("E", "F", "K"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        limit = 0 if self.kind == "K" else -1
        if self.index > limit:
            raise ValueError(f"{self.kind} index must be <= {limit}, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, text: str) -> GeneratorName:
        text = text.strip().replace("_", "")
        return cls(text[0].upper(), int(text[1:]))


def E(a: int) -> GeneratorName:
    return GeneratorName("E", a)


def F(a: int) -> GeneratorName:
    return GeneratorName("F", a)


def K(a: int) -> GeneratorName:
    return GeneratorName("K", a)


def _count(word: tuple[int, ...], a: int) -> int:
    return sum(1 for c in word if c == a)


def _k_on_w(a: int, word: Iterable[int]) -> int:
    """Exponent of q for ``K_a`` on ``w_{c1} (x) ... `` (``K_a w_c = q^{-[c=a]}``)."""
    return -sum(1 for c in word if c == a)


def _e_on_wedge(a: int, word: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
    """Iterated coproduct of ``E_a`` on the wedge factor.

    Position j takes ``E_a`` and every later position takes ``K_{a+1,a}``.
    Returns ``(q-exponent, new word)`` pairs.
    """
    out = []
    for j, c in enumerate(word):
        if c != a:
            continue
        later = word[j + 1:]
        e = _k_on_w(a + 1, later) - _k_on_w(a, later)
        out.append((e, word[:j] + (a + 1,) + later))
    return out


def _f_on_wedge(a: int, word: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
    """``F_a`` on the wedge: earlier positions take ``K_{a,a+1}``."""
    out = []
    for j, c in enumerate(word):
        if c != a + 1:
            continue
        earlier = word[:j]
        e = _k_on_w(a, earlier) - _k_on_w(a + 1, earlier)
        out.append((e, earlier + (a,) + word[j + 1:]))
    return out


def _basis_action(gen: GeneratorName, f: FTuple) -> list[tuple[int, TensorWord]]:
    """Terms ``q^e * word`` of ``gen`` applied to ``K_f`` (before straightening)."""
    b, y = f.fm1, f.fs
    a = gen.index
    terms: list[tuple[int, TensorWord]] = []

    if gen.kind == "K":
        if b < 0:
            e = int(b == a)
        elif b > 0:
            e = int(b == -a)
        else:
            e = int(a == 0)
        return [(e + _k_on_w(a, y), TensorWord(b, y))]

    if a == -1:
        n_minus_one = _count(y, -1)
        if gen.kind == "E":
            if b == 0:
                terms.append((n_minus_one, TensorWord(-1, y)))  # K_{-1}^{-1} on wedge
                terms.append((0, TensorWord(1, y)))
        else:
            if b == -1:
                terms.append((0, TensorWord(0, y)))
            elif b == 1:
                terms.append((-n_minus_one, TensorWord(0, y)))
        return terms

    wedge_part = _e_on_wedge(a, y) if gen.kind == "E" else _f_on_wedge(a, y)

    if b == 0:
        return [(e, TensorWord(0, w)) for e, w in wedge_part]

    if b < 0:
        if gen.kind == "E":
            # 1 (x) E_a  +  E_a (x) K_{a+1,a}
            terms += [(e, TensorWord(b, w)) for e, w in wedge_part]
            if b == a + 1:
                terms.append((_k_on_w(a + 1, y) - _k_on_w(a, y), TensorWord(a, y)))
        else:
            # F_a (x) 1  +  K_{a,a+1} (x) F_a
            if b == a:
                terms.append((0, TensorWord(a + 1, y)))
            kv = int(b == a) - int(b == a + 1)
            terms += [(kv + e, TensorWord(b, w)) for e, w in wedge_part]
        return terms

    i = -a - 1  # mirror index on V_+
    if gen.kind == "E":
        # F_i (x) 1  +  K_{i,i+1} (x) E_a
        if b == i:
            terms.append((0, TensorWord(i + 1, y)))
        kv = int(b == i) - int(b == i + 1)
        terms += [(kv + e, TensorWord(b, w)) for e, w in wedge_part]
    else:
        # 1 (x) F_a  +  E_i (x) K_{a,a+1}
        terms += [(e, TensorWord(b, w)) for e, w in wedge_part]
        if b == i + 1:
            terms.append((_k_on_w(a, y) - _k_on_w(a + 1, y), TensorWord(i, y)))
    return terms


@lru_cache(maxsize=200_000)
def _apply_basis(gen: GeneratorName, f: FTuple, exchange_power: int) -> FockVector:
    out = ZERO_VECTOR
    for e, word in _basis_action(gen, f):
        out = out + straighten(word, q_power(e), exchange_power)
    return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("OSPFOCK_THREADS", "1")))
    except ValueError:
        return 1


def apply_generator(gen: GeneratorName, v: FockVector | FTuple,
                    exchange_power: int | None = None) -> FockVector:
    """Apply a generator to a Fock vector (or to a single ``K_f``)."""
    if isinstance(v, FTuple):
        v = FockVector.basis(v)
    s = EXCHANGE_POWER if exchange_power is None else exchange_power
    items = v.items()

    def one(item):
        f, c = item
        return _apply_basis(gen, f, s).scale(c)

    workers = _threads()
    if workers > 1 and len(items) > 64:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(one, items))
    else:
        parts = [one(it) for it in items]
    out: dict[FTuple, LaurentPoly] = {}
    for part in parts:  # items are sorted, so the merge is deterministic
        for f, c in part.items():
            out[f] = out[f] + c if f in out else c
    return FockVector(out)


def apply_sequence(seq: list[GeneratorName], v: FockVector | FTuple,
                   exchange_power: int | None = None) -> FockVector:
    """``X_1 ... X_r (v)``: the last generator in ``seq`` acts first."""
    if isinstance(v, FTuple):
        v = FockVector.basis(v)
    for gen in reversed(seq):
        v = apply_generator(gen, v, exchange_power)
    return v


# ---------------------------------------------------------------------------
# the straightening constant


def _two_factor(gen: GeneratorName, elem: Mapping[tuple[int, int], LaurentPoly]
                ) -> dict[tuple[int, int], LaurentPoly]:
    """Coproduct action of a regular generator on ``W (x) W``."""
    out: dict[tuple[int, int], LaurentPoly] = {}

    def add(key, c):
        out[key] = out[key] + c if key in out else c

    a = gen.index
    for (c1, c2), coeff in elem.items():
        word = (c1, c2)
        if gen.kind == "E":
            parts = _e_on_wedge(a, word)
        elif gen.kind == "F":
            parts = _f_on_wedge(a, word)
        else:
            parts = [(_k_on_w(a, word), word)]
        for e, w in parts:
            add(w, coeff.shift(e))
    return {k: v for k, v in out.items() if v}


def in_relation_span(elem: Mapping[tuple[int, int], LaurentPoly], s: int) -> bool:
    """Membership in ``span{w_a(x)w_a, w_b(x)w_a + q^s w_a(x)w_b : a < b}``."""
    for (c1, c2), coeff in elem.items():
        if c1 < c2 and coeff != elem.get((c2, c1), ZERO).shift(s):
            return False
        if c1 > c2 and (c2, c1) not in elem:
            return False
    return True


def relation_span_generators(indices: Iterable[int], s: int) -> list[dict]:
    idx = sorted(indices)
    rels = [{(a, a): ONE} for a in idx]
    for i, a in enumerate(idx):
        for b in idx[i + 1:]:
            rels.append({(b, a): ONE, (a, b): q_power(s)})
    return rels


def relation_span_is_stable(s: int, low: int = -6) -> tuple[bool, tuple | None]:
    """Check every regular generator maps the two-factor relation span into itself.

    Returns ``(ok, counterexample)`` where the counterexample is
    ``(generator, relation element)``.
    """
    indices = range(low, 0)
    gens = [GeneratorName(k, a) for a in range(low, -1) for k in ("E", "F")]
    gens += [K(a) for a in range(low, 0)]
    for rel in relation_span_generators(indices, s):
        for g in gens:
            if not in_relation_span(_two_factor(g, rel), s):
                return False, (str(g), {k: str(v) for k, v in rel.items()})
    return True, None


def pin_exchange_power(low: int = -6) -> int:
    """The unique ``s in {+1, -1}`` for which the wedge quotient is a module."""
    good = [s for s in (1, -1) if relation_span_is_stable(s, low)[0]]
    if len(good) != 1:
        raise AssertionError(f"exchange power not determined: {good}")
    return good[0]


# ---------------------------------------------------------------------------
# Closed formulas and the construction of canonical basis elements


def procedure_sequence(f: FTuple) -> tuple[FTuple, list[GeneratorName]]:
    """Typical ``g`` and generators with ``X_1 ... X_r K_g = K_f + q K_{f^L}``."""
    case = l_case(f)
    fs = list(f.fs)
    present = set(fs)
    if case == "I":
        k = -f.fm1
        l = 0
        while -k - l - 1 in present:
            l += 1
        run = set(range(-k - l, -k + 1))
        g_fs = sorted([x for x in fs if x not in run] + list(range(-k - l - 1, -k)))
        g = FTuple(-k, tuple(g_fs))
        seq = [E(a) for a in range(-k - l - 1, -k)]
        return g, seq
    if case == "II":
        k = l_step(f).fm1
        l = f.fm1 - k - 1
        run = set(range(-k - l - 1, -k))
        g_fs = sorted([x for x in fs if x not in run] + list(range(-k - l, -k + 1)))
        g = FTuple(k + l + 1, tuple(g_fs))
        seq = [F(a) for a in range(-k - 1, -k - l - 2, -1)]
        return g, seq
    k = f.fm1
    g = FTuple(0, f.fs)
    seq = [E(a) for a in range(-k, 0)]
    return g, seq


def _chain_with_depth(f: FTuple, depth: int) -> list[FTuple]:
    if depth == 0 or atypicality(f) is None:
        return []
    return l_chain(f, depth)


def bar_basis(f: FTuple, depth: int) -> FockVector:
    """``bar(K_f)`` truncated after ``depth`` L-steps.

    ``bar(K_f) = K_f + (q - q^-1) sum_{i>=1} (-q)^(1-i) K_{f^(i)}``.
    """
    terms = {f: ONE}
    qq = Q - Q.bar()
    for i, g in enumerate(_chain_with_depth(f, depth), start=1):
        terms[g] = qq * q_power(1 - i, (-1) ** (i - 1))
    return FockVector(terms)


def bar(v: FockVector, depth: int) -> FockVector:
    """Anti-linear bar involution, each L-chain truncated after ``depth`` steps."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    out = ZERO_VECTOR
    for f, c in v.items():
        out = out + bar_basis(f, depth).scale(c.bar())
    return out


def exact_region(v: FockVector, depth: int) -> list[FTuple]:
    """Keys of ``bar(v, depth)`` (and of ``v``) whose coefficient is untruncated.

    ``g`` qualifies when every support element of ``v`` lying Bruhat-above
    ``g`` reaches it within ``depth`` steps.
    """
    candidates = set(v.support())
    for f in v.support():
        candidates.update(_chain_with_depth(f, depth))
    region = []
    for g in candidates:
        ok = True
        for f in v.support():
            d = chain_distance(g, f)
            if d is not None and d > depth:
                ok = False
                break
        if ok:
            region.append(g)
    return sorted(region, key=FTuple.sort_key, reverse=True)


def verify_bar_invariance(v: FockVector, depth: int) -> bool:
    """``bar(v, depth) == v`` on the exact region."""
    region = exact_region(v, depth)
    return bar(v, depth).restrict(region) == v.restrict(region)


def canonical(f: FTuple) -> FockVector:
    """``U_f``: ``K_f`` for typical f, ``K_f + q K_{f^L}`` otherwise."""
    if atypicality(f) is None:
        return FockVector.basis(f)
    return FockVector({f: ONE, l_step(f): Q})


def dual_canonical(f: FTuple, depth: int) -> FockVector:
    """``L_f = K_f + sum_{l=1}^{depth} (-q^-1)^l K_{f^(l)}``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    terms = {f: ONE}
    for l, g in enumerate(_chain_with_depth(f, depth), start=1):
        terms[g] = q_power(-l, (-1) ** l)
    return FockVector(terms)


def kl_poly(g: FTuple, f: FTuple) -> LaurentPoly:
    """Coefficient ``l_{gf}(q)`` of ``K_g`` in ``L_f``."""
    if g.n != f.n:
        raise ValueError("rank mismatch")
    if g == f:
        return ONE
    d = chain_distance(g, f)
    if d is None:
        return ZERO
    return q_power(-d, (-1) ** d)


def ef_closed_form(gen: GeneratorName, g: FTuple) -> FockVector:
    """Closed-form action of ``E_{-1}`` / ``F_{-1}`` on ``K_g``."""
    if gen.index != -1 or gen.kind == "K":
        raise ValueError("only E_{-1} and F_{-1} have a closed form here")
    plus = FTuple(g.fm1 + 1, g.fs)
    minus = FTuple(g.fm1 - 1, g.fs)
    last = g.fs[-1] == -1
    if gen.kind == "E":
        if g.fm1 == 0:
            return FockVector({plus: ONE, minus: Q if last else ONE})
        return ZERO_VECTOR
    if g.fm1 == 1:
        return FockVector({minus: Q.bar() if last else ONE})
    if g.fm1 == -1:
        return FockVector({plus: ONE})
    return ZERO_VECTOR


__all__ = [
    "EXCHANGE_POWER", "FockVector", "TensorWord", "GeneratorName", "E", "F", "K",
    "straighten", "apply_generator", "apply_sequence", "procedure_sequence",
    "bar", "bar_basis", "exact_region", "verify_bar_invariance", "canonical",
    "dual_canonical", "kl_poly", "ef_closed_form", "pin_exchange_power",
    "relation_span_is_stable", "in_relation_span", "TypicalWeight",
]
