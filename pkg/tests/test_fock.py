from hypothesis import given
from hypothesis import strategies as st

from ospfock import fock
from ospfock.fock import E, F, FockVector, GeneratorName, K, TensorWord
from ospfock.laurent import ONE, Q, Q_INV, ZERO, q_power
from ospfock.weights import FTuple, iter_ftuples, l_step


def kv(*pairs):
    return FockVector({FTuple.parse(f): c for f, c in pairs})


def test_straighten():
    assert fock.straighten(TensorWord(0, (-3, -1))) == kv(("0|-3,-1", ONE))
    assert fock.straighten(TensorWord(0, (-1, -1))) == fock.ZERO_VECTOR
    s = fock.EXCHANGE_POWER
    assert fock.straighten(TensorWord(0, (-1, -3))) == kv(("0|-3,-1", -q_power(s)))


def test_exchange_power_is_pinned():
    assert fock.pin_exchange_power() == fock.EXCHANGE_POWER == -1
    ok, counterexample = fock.relation_span_is_stable(1)
    assert not ok and counterexample is not None


def test_generator_names():
    assert str(E(-3)) == "E-3"
    assert GeneratorName.parse("F_-2") == F(-2)
    assert K(0).kind == "K"


def test_ef_closed_form_examples():
    assert fock.apply_generator(E(-1), FTuple(0, (-1,))) == kv(("1|-1", ONE), ("-1|-1", Q))
    assert fock.apply_generator(F(-1), FTuple(1, (-2,))) == kv(("0|-2", ONE))


def test_procedure_examples():
    g, seq = fock.procedure_sequence(FTuple(1, (-1,)))
    assert (g, seq) == (FTuple(0, (-1,)), [E(-1)])
    g, seq = fock.procedure_sequence(FTuple(-1, (-2, -1)))
    assert (g, seq) == (FTuple(-1, (-3, -2)), [E(-3), E(-2)])
    g, seq = fock.procedure_sequence(FTuple(2, (-3, -2)))
    assert (g, seq) == (FTuple(2, (-3, -1)), [F(-2)])
    out = fock.apply_sequence([E(-3), E(-2)], FTuple(-1, (-3, -2)))
    assert out == kv(("-1|-2,-1", ONE), ("-3|-3,-2", Q))


def test_bar_examples():
    typical = FockVector.basis(FTuple(0, (-1,)))
    assert fock.bar(typical, 5) == typical
    qq = Q - Q_INV
    want = kv(("1|-1", ONE), ("-1|-1", qq), ("-2|-2", qq * -Q_INV))
    assert fock.bar(FockVector.basis(FTuple(1, (-1,))), 2) == want
    assert not fock.verify_bar_invariance(FockVector.basis(FTuple(1, (-1,))), 3)
    assert fock.verify_bar_invariance(fock.ZERO_VECTOR, 3)


def test_canonical_examples():
    assert fock.canonical(FTuple(0, (-1,))) == kv(("0|-1", ONE))
    assert fock.canonical(FTuple(1, (-1,))) == kv(("1|-1", ONE), ("-1|-1", Q))
    assert fock.canonical(FTuple(-1, (-2, -1))) == kv(("-1|-2,-1", ONE), ("-3|-3,-2", Q))


def test_dual_canonical_and_kl():
    f = FTuple(1, (-1,))
    assert fock.dual_canonical(f, 2) == kv(("1|-1", ONE), ("-1|-1", -Q_INV), ("-2|-2", q_power(-2)))
    assert fock.dual_canonical(f, 0) == FockVector.basis(f)
    assert fock.dual_canonical(FTuple(0, (-1,)), 4) == kv(("0|-1", ONE))
    assert fock.kl_poly(f, f) == ONE
    assert fock.kl_poly(FTuple(-1, (-1,)), f) == -Q_INV
    assert fock.kl_poly(FTuple(0, (-1,)), f) == ZERO


def test_json_round_trip():
    v = fock.dual_canonical(FTuple(2, (-3, -2)), 3)
    assert FockVector.from_json(v.to_json()) == v


def test_thread_pool_gives_same_result(monkeypatch):
    v = FockVector({f: ONE for f in iter_ftuples(2, 6)})
    serial = fock.apply_generator(E(-2), v)
    monkeypatch.setenv("OSPFOCK_THREADS", "4")
    assert fock.apply_generator(E(-2), v) == serial


atypical = st.sampled_from([f for n in (1, 2, 3) for f in iter_ftuples(n, 7, True)])


@given(atypical)
def test_procedure_identity_sample(f):
    g, seq = fock.procedure_sequence(f)
    assert fock.apply_sequence(seq, g) == fock.FockVector({f: ONE, l_step(f): Q})


@given(atypical, st.integers(1, 6))
def test_bar_of_canonical_only_leaves_truncation_tail(f, depth):
    u = fock.canonical(f)
    assert (fock.bar(u, depth) - u).support() == [fock.l_chain(f, depth + 1)[-1]]
