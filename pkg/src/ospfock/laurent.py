"""Integer Laurent polynomials in one variable ``q``."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Sparse element of Z[q, q^-1].

    Stored as ``{exponent: coefficient}`` with no zero coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if not isinstance(v, int):
                raise TypeError(f"coefficients must be integers, got {v!r}")
            c[int(e)] = c.get(int(e), 0) + v
        self._c = {e: v for e, v in c.items() if v}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def const(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    # -- container protocol -------------------------------------------------
    def items(self):
        return sorted(self._c.items())

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            # only monomials are units in Z[q, q^-1]
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("negative power of a non-unit")
            (e, v), = self._c.items()
            return LaurentPoly({e * k: v ** (-k)})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def bar(self) -> LaurentPoly:
        """The ring involution ``q -> q^-1``."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def at_one(self) -> int:
        return sum(self._c.values())

    def min_degree(self) -> int:
        return min(self._c) if self._c else 0

    def max_degree(self) -> int:
        return max(self._c) if self._c else 0

    def in_positive_part(self) -> bool:
        """True iff every exponent is >= 1, i.e. the value lies in qZ[q]."""
        return all(e >= 1 for e in self._c)

    def in_negative_part(self) -> bool:
        """True iff every exponent is <= -1, i.e. the value lies in q^-1 Z[q^-1]."""
        return all(e <= -1 for e in self._c)

    # -- I/O ----------------------------------------------------------------
    def to_json(self) -> dict[str, int]:
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): int(v) for e, v in data.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(v))
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                mono = qpart if abs(v) == 1 else f"{abs(v)}*{qpart}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)
Q_INV = LaurentPoly.monomial(-1)


def q_power(k: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(k, coeff)
