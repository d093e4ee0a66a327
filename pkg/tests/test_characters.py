import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ospfock import characters as ch
from ospfock.characters import Character
from ospfock.errors import NotDivisible, NotInKacSpan, RankTooLarge
from ospfock.weights import DominantWeight, from_ftuple, iter_ftuples


def W(text):
    return DominantWeight.parse(text)


def C(n, *terms):
    return Character(n, {tuple(w): c for w, c in terms})


def test_weyl_group():
    g1 = list(ch.weyl_group(1))
    assert sorted(w.parity for w in g1) == [-1, 1]
    assert len(list(ch.weyl_group(2))) == 8
    assert sum(w.parity for w in ch.weyl_group(3)) == 0
    with pytest.raises(RankTooLarge):
        ch.weyl_group(7)


def test_alt_sum_and_division():
    assert ch.weyl_denominator(1) == C(1, ((0, 1), 1), ((0, -1), -1))
    assert not ch.alt_sum(Character.one(2))
    assert ch.divide_by_d0(ch.weyl_denominator(2)) == Character.one(2)
    assert ch.divide_by_d0(ch.alt_sum(Character.exp((0, 2), 1))) == ch.chi(1, 1)
    with pytest.raises(NotDivisible):
        ch.divide_by_d0(Character.exp((0, 1), 1))


def test_sp_characters():
    assert ch.chi(1, 1) == C(1, ((0, 1), 1), ((0, -1), 1))
    assert ch.chi(3, 0) == Character.one(3)
    assert ch.dim_char(ch.chi(2, 1)) == 4


def test_kac_characters():
    assert ch.kac_char(W("0|0")) == C(1, ((0, 0), 1), ((-1, 1), 1), ((-1, -1), 1), ((-2, 0), 1))
    assert ch.dim_char(ch.kac_char(W("0|0,0"))) == 16
    assert ch.kac_char(W("2|0")) == C(1, ((2, 0), 1), ((1, 1), 1), ((1, -1), 1), ((0, 0), 1))


def test_irreducible_characters():
    assert ch.irr_char(W("0|0,0,0")) == Character.one(3)
    assert ch.irr_char(W("2|0")) == C(1, ((2, 0), 1), ((1, 1), 1), ((1, -1), 1))
    assert ch.irr_char(W("-1|1")) == C(1, ((-1, 1), 1), ((-1, -1), 1), ((-2, 0), 1))
    assert ch.irr_char(W("-1|1")) == ch.dual_char(ch.irr_char(W("2|0")))
    assert ch.dim_char(ch.irr_char(W("2|0"))) == 3
    for text in ("2|0", "1|0,0", "3|0"):
        assert ch.irr_char_by_kac_sum(W(text)) == ch.irr_char(W(text))


def test_tilting_characters():
    assert ch.tilting_char(W("2|0")) == ch.kac_char(W("2|0")) + ch.kac_char(W("0|0"))
    assert ch.tilting_char(W("1|0")) == ch.kac_char(W("1|0"))
    for f in iter_ftuples(2, 4, True):
        lam = from_ftuple(f)
        expect = 16 * (ch.dim_char(ch.sp_irr_char(lam.parts)) + ch.dim_char(ch.sp_irr_char(lam.L.parts)))
        assert ch.dim_char(ch.tilting_char(lam)) == expect


def test_kac_decompose():
    lam = W("1|1,0")
    assert ch.kac_decompose(ch.kac_char(lam)) == {lam: 1}
    with pytest.raises(NotInKacSpan):
        ch.kac_decompose(ch.irr_char(W("2|0")))
    virtual = ch.kac_decompose(ch.irr_char(W("2|0")), virtual=True, min_eps=-3)
    chain = [W("2|0"), W("0|0"), W("-1|1"), W("-2|2")]
    assert {mu: virtual[mu] for mu in chain} == {mu: (-1) ** i for i, mu in enumerate(chain)}


def test_translate():
    assert ch.translate("F", 1, W("2|0")) == {W("1|0"): 1}
    assert ch.translate("E", 1, W("2|0")) == {}
    with pytest.raises(ValueError):
        ch.translate("E", 0, W("2|0"))


def test_alternating_sums():
    assert not ch.aux_alt_sum((0, 1))
    eta1 = Character(2, {(0, 0, 0, 1): 1}, True)
    assert ch.aux_alt_sum(1, 2) == eta1 + ch.chi(2, 1, eta=True)
    assert ch.aux_alt_sum(0, 2) == Character.one(2, True)
    assert ch.chi_expansion_weight(2, 3) == W("-1|1,1")


def test_fundamental_dimensions():
    for n in (1, 2, 3):
        for l in range(n + 1):
            assert ch.dim_char(ch.chi(n, l)) == ch.weyl_dimension_fundamental(n, l)


def test_json_round_trip():
    c = ch.kac_char(W("1|1,0"))
    assert Character.from_json(c.to_json(), 2) == c
    assert all(isinstance(item["coeff"], str) for item in c.to_json())


def test_duality_basics():
    one = Character.one(2)
    assert ch.dual_char(one) == one
    c = ch.irr_char(W("3|1,0"))
    assert ch.dual_char(ch.dual_char(c)) == c


dominant = st.integers(1, 2).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(-4, 4),
    st.lists(st.integers(0, 3), min_size=n, max_size=n).map(lambda p: tuple(sorted(p, reverse=True)))))


@settings(max_examples=60, deadline=None)
@given(dominant)
def test_character_identities(data):
    lam = DominantWeight(*data)
    assert ch.dim_char(ch.kac_char(lam)) == 4 ** lam.n * ch.dim_char(ch.sp_irr_char(lam.parts))
    if lam.is_atypical():
        assert ch.kac_char(lam) == ch.irr_char(lam) + ch.irr_char(lam.L)
    for w in ch.weyl_group(lam.n):
        assert ch.act_on(w, ch.irr_char(lam)) == ch.irr_char(lam)

