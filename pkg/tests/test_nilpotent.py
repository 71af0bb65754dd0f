import pytest
from hypothesis import given, settings, strategies as st

from surfchar import nilpotent as nil
from surfchar.oracle import collect
from surfchar.words import SurfaceContext, concat, parse_word

from conftest import genera, nil2_elements, words


def ev(text, g):
    return nil.evaluate(parse_word(text, SurfaceContext(g)), g)


def coords(g, n, m=None):
    return nil.Nil2Element.from_coordinates(g, n, m or {})


@pytest.mark.parametrize("g", range(2, 7))
def test_pair_index_set(g):
    pairs = nil.pair_index_set(g)
    assert len(pairs) == (2 * g) * (2 * g - 1) // 2 - 1
    assert (2 * g - 1, 2 * g) not in pairs.pairs
    assert list(pairs.pairs) == sorted(pairs.pairs)
    assert [pairs.pairs[k] for k in pairs.related_indices] == [(2 * h - 1, 2 * h) for h in range(1, g)]
    assert len(pairs.nonrelated_indices) == 2 * g * g - 2 * g


def test_is_related():
    assert nil.is_related(1, 2, 3) and nil.is_related(3, 4, 3)
    assert not nil.is_related(5, 6, 3)  # the excluded pair
    assert not nil.is_related(2, 3, 3) and not nil.is_related(1, 4, 3)


def test_identity():
    e = nil.identity(2)
    assert e.n == (0, 0, 0, 0)
    assert e.m == (0,) * 5
    assert e.to_json() == {"genus": 2, "n": [0, 0, 0, 0], "m": []}
    assert nil.inverse(e) == e


def test_multiply_examples():
    a = ev("x1 x2", 2)
    assert nil.multiply(a, a) == coords(2, (2, 2, 0, 0), {(1, 2): -1})
    # x3 x4 * X3 ... evaluated through the product of classes
    x3, x4 = nil.generator(2, 3), nil.generator(2, 4)
    c = nil.multiply(nil.multiply(nil.inverse(x3), nil.inverse(x4)), nil.multiply(x3, x4))
    assert c == coords(2, (0, 0, 0, 0), {(1, 2): -1})
    b = ev("x3 x1 X4", 3)
    assert nil.multiply(nil.identity(3), b) == b


def test_multiply_context_mismatch():
    with pytest.raises(nil.ContextMismatch):
        nil.multiply(nil.identity(2), nil.identity(3))


def test_inverse_examples():
    assert nil.inverse(nil.generator(3, 1)) == coords(3, (-1, 0, 0, 0, 0, 0))
    # frozen from the collection oracle on "X2 X1"
    assert nil.inverse(ev("x1 x2", 2)) == coords(2, (-1, -1, 0, 0), {(1, 2): -1})


def test_power_examples():
    a = ev("x1 x2", 2)
    assert nil.power(a, 0) == nil.identity(2)
    assert nil.power(a, 1) == a
    assert nil.power(a, 4) == coords(2, (4, 4, 0, 0), {(1, 2): -6})


def test_evaluate_examples():
    assert ev("[x1,x2]", 2) == coords(2, (0,) * 4, {(1, 2): 1})
    assert ev("[x3,x4]", 2) == coords(2, (0,) * 4, {(1, 2): -1})
    # [x1,x2] = x1^-2 (x1x2)^2 x2^-2 comes out as the inverse basis commutator
    assert ev("X1 X1 (x1 x2)^2 X2 X2", 2) == coords(2, (0,) * 4, {(1, 2): -1})
    assert ev("x1 x2 x3 x4 x1", 2) == coords(2, (2, 1, 1, 1), {(1, 2): -1, (1, 3): -1, (1, 4): -1})


def test_commutator_class_examples():
    assert nil.commutator_class(nil.generator(2, 1), nil.identity(2)).is_identity()
    assert nil.commutator_class(nil.generator(2, 1), nil.generator(2, 2)) == coords(2, (0,) * 4, {(1, 2): 1})
    assert nil.commutator_class(nil.generator(3, 1), nil.generator(3, 3)) == coords(3, (0,) * 6, {(1, 3): 1})


@pytest.mark.parametrize("g", range(2, 7))
def test_relator_evaluates_to_identity(g):
    assert nil.evaluate(SurfaceContext(g).relator, g).is_identity()


def test_json_round_trip():
    a = ev("x1 x2 x3 [x2,x4]^3", 3)
    assert nil.Nil2Element.from_json(a.to_json()) == a
    assert a.to_json()["m"] == sorted(a.to_json()["m"], key=lambda e: (e["i"], e["j"]))


@settings(max_examples=200)
@given(st.data())
def test_group_axioms(data):
    g = data.draw(genera)
    a, b, c = (data.draw(nil2_elements(g)) for _ in range(3))
    assert nil.multiply(nil.multiply(a, b), c) == nil.multiply(a, nil.multiply(b, c))
    assert nil.multiply(a, nil.identity(g)) == a == nil.multiply(nil.identity(g), a)
    assert nil.multiply(a, nil.inverse(a)).is_identity()
    assert nil.multiply(nil.inverse(a), a).is_identity()


@given(st.data())
def test_power_matches_repeated_multiplication(data):
    g = data.draw(genera)
    a = data.draw(nil2_elements(g))
    p = data.draw(st.integers(-8, 8))
    step = a if p >= 0 else nil.inverse(a)
    acc = nil.identity(g)
    for _ in range(abs(p)):
        acc = nil.multiply(acc, step)
    assert nil.power(a, p) == acc


@given(st.data())
def test_evaluate_is_homomorphism(data):
    g = data.draw(genera)
    u, v = data.draw(words(g)), data.draw(words(g))
    assert nil.evaluate(concat(u, v), g) == nil.multiply(nil.evaluate(u, g), nil.evaluate(v, g))


@given(st.data())
def test_evaluate_matches_collection_oracle(data):
    g = data.draw(st.sampled_from((2, 3)))
    u = data.draw(words(g, 16))
    assert nil.evaluate(u, g) == collect(u, g)


@given(st.data())
def test_commutators_are_central(data):
    g = data.draw(genera)
    c = data.draw(nil2_elements(g))
    c = nil.Nil2Element(g, (0,) * (2 * g), c.m)
    d = data.draw(nil2_elements(g))
    assert nil.multiply(c, d) == nil.multiply(d, c)


@given(st.data())
def test_commutator_power_identity(data):
    g = data.draw(genera)
    i, j = data.draw(st.integers(1, 2 * g)), data.draw(st.integers(1, 2 * g))
    p, q = data.draw(st.integers(-5, 5)), data.draw(st.integers(-5, 5))
    a, b = nil.generator(g, i), nil.generator(g, j)
    lhs = nil.commutator_class(nil.power(a, p), nil.power(b, q))
    assert lhs == nil.power(nil.commutator_class(a, b), p * q)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_power_of_commutator_congruence(g):
    ctx = SurfaceContext(g)
    for i in range(1, g + 1):
        for k in range(1, 9):
            lhs = nil.evaluate(parse_word(f"[x{2 * i - 1}^{k},x{2 * i}]", ctx), g)
            assert lhs == nil.evaluate(parse_word(f"[x{2 * i - 1},x{2 * i}]^{k}", ctx), g)


def test_flipped_correction_breaks_relator(monkeypatch):
    good = nil.pair_index_set

    def flipped(genus):
        p = good(genus)
        return nil.PairIndexSet(p.genus, p.pairs, tuple(-d for d in p.delta))

    monkeypatch.setattr(nil, "pair_index_set", flipped)
    assert not nil.evaluate(SurfaceContext(3).relator, 3).is_identity()
