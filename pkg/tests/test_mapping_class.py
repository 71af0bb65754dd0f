import random

import pytest
from hypothesis import given, settings, strategies as st

from surfchar import mapping_class as mc
from surfchar import nilpotent as nil
from surfchar import quotients as qt
from surfchar.verifier import random_word
from surfchar.words import EndomorphismTable, SurfaceContext, concat, free_reduce, parse_word, render, substitute

from conftest import words

G2, G3 = SurfaceContext(2), SurfaceContext(3)


def table(name, ctx):
    return mc.twist_table(mc.TwistName.parse(name, ctx), ctx)


def ev(text, g):
    return nil.evaluate(parse_word(text, SurfaceContext(g)), g)


def test_twist_name_parse():
    assert mc.TwistName.parse("t5", G2) == mc.TwistName("tau", 5)
    assert mc.TwistName.parse("s2", G2) == mc.TwistName("sigma", 2)
    assert str(mc.TwistName("sigma", 1)) == "s1"
    for bad in ("t6", "s3", "t0", "q1", "t"):
        with pytest.raises(mc.TwistNameError):
            mc.TwistName.parse(bad, G2)
    assert len(mc.all_twists(G3)) == 10


def test_twist_table_examples():
    assert {i: render(w) for i, w in table("t1", G2).images.items()} == {2: "X1 x2"}
    assert {i: render(w) for i, w in table("t5", G2).images.items()} == {4: "X3 x4"}
    assert {i: render(w) for i, w in table("s2", G2).images.items()} == {4: "X3 x4"}
    assert {i: render(w) for i, w in table("t4", G2).images.items()} == {3: "x4 x3"}


def test_tau_odd_table_uses_gamma():
    t3 = table("t3", G3)
    gamma = mc.gamma_word(3, G3)
    assert set(t3.images) == {2, 3, 4}
    assert t3.images[2] == concat(parse_word("x2", G3), gamma)
    assert free_reduce(t3.images[4]) == free_reduce(parse_word("x1 [x1,x2] X3 x4", G3))


def test_gamma_words():
    assert mc.gamma_word(1, G2) == parse_word("x1", G2)
    assert mc.gamma_word(2, G2) == parse_word("x2", G2)
    assert mc.gamma_word(3, G3) == parse_word("x3 [x1,x2]^-1 X1", G3)
    assert mc.gamma_word(5, G2) == parse_word("[x3,x4]^-1 X3", G2)
    assert mc.gamma_word(7, G3) == parse_word("[x5,x6]^-1 X5", G3)
    with pytest.raises(ValueError):
        mc.gamma_word(6, G2)


@pytest.mark.parametrize("g", range(2, 7))
def test_every_twist_is_well_defined(g):
    ctx = SurfaceContext(g)
    for name in mc.all_twists(ctx):
        assert mc.is_well_defined(mc.twist_table(name, ctx))


def test_is_well_defined_rejects():
    assert not mc.is_well_defined(EndomorphismTable(G2, {1: parse_word("x2", G2)}))
    assert mc.is_well_defined(EndomorphismTable(G2, {}))
    with pytest.raises(mc.NotWellDefined):
        mc.induced_map(EndomorphismTable(G2, {1: parse_word("x1 x1", G2)}))


def test_induced_nil2_examples():
    a = ev("x3 [x1,x4]^2", 3)
    assert mc.induced_nil2(EndomorphismTable(G3, {}), a) == a
    for g in (2, 3):
        for h in range(1, g + 1):
            img = mc.induced_nil2(table(f"t{2 * h}", SurfaceContext(g)), nil.generator(g, 2 * h - 1))
            assert img == ev(f"x{2 * h} x{2 * h - 1}", g)
            assert img == ev(f"x{2 * h - 1} x{2 * h} [x{2 * h - 1},x{2 * h}]^-1", g)
    for g in (2, 3, 4):
        t3 = table("t3", SurfaceContext(g))
        assert mc.induced_nil2(t3, ev("[x1,x2]^5", g)) == ev("[x1,x2]^5 [x1,x3]^5", g)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_induced_nil2_matches_substitution(data):
    g = data.draw(st.sampled_from((2, 3, 4, 5)))
    ctx = SurfaceContext(g)
    name = data.draw(st.sampled_from(mc.all_twists(ctx)))
    t = mc.twist_table(name, ctx)
    u, v = data.draw(words(g)), data.draw(words(g))
    assert mc.induced_nil2(t, nil.evaluate(u, g)) == nil.evaluate(substitute(u, t), g)
    uv = nil.evaluate(substitute(concat(u, v), t), g)
    assert uv == nil.multiply(nil.evaluate(substitute(u, t), g), nil.evaluate(substitute(v, t), g))


def test_twist_difference_examples():
    for name in ("t1", "t2", "s1"):
        assert mc.twist_difference(table(name, G3), (0,) * 14) == (0,) * 14
    pairs = nil.pair_index_set(3)
    z = [0] * len(pairs)
    z[pairs.index(1, 6)] = 4
    diff = mc.twist_difference(table("s3", G3), z)
    expected = [0] * len(pairs)
    expected[pairs.index(1, 5)] = -4
    assert diff == tuple(expected)


def test_twist_difference_five_term():
    # tau_3([x2, x4]) - [x2, x4] at g = 3, h = 2
    pairs = nil.pair_index_set(3)
    z = [0] * len(pairs)
    z[pairs.index(2, 4)] = 1
    diff = mc.twist_difference(table("t3", G3), z)
    image = ev("[x1,x4]^-1 [x2,x3]^-1 [x2,x4] [x1,x2]^-1 [x3,x4]", 3)
    assert diff == tuple(a - b for a, b in zip(image.m, z))


def test_twist_difference_row_shape():
    # tau_2 sends x1 to x2 x1, so only the row-1 unknowns survive, landing on [x2, x_j]
    pairs = nil.pair_index_set(3)
    for j in range(3, 7):
        z = [0] * len(pairs)
        z[pairs.index(1, j)] = 1
        diff = mc.twist_difference(table("t2", G3), z)
        expected = [0] * len(pairs)
        expected[pairs.index(2, j)] = 1
        assert diff == tuple(expected)
    for i, j in [(2, 3), (3, 5), (4, 6), (2, 6)]:
        z = [0] * len(pairs)
        z[pairs.index(i, j)] = 1
        assert not any(mc.twist_difference(table("t2", G3), z))


def test_twist_matrix_is_linear_action():
    t = table("t5", G3)
    mat = mc.twist_matrix(t)
    z = tuple(range(-7, 7))
    via_matrix = tuple(sum(r * x for r, x in zip(row, z)) for row in mat)
    assert tuple(a + b for a, b in zip(mc.twist_difference(t, z), z)) == via_matrix


@pytest.mark.parametrize("g, e", [(2, 2), (2, 4), (3, 3)])
def test_induced_permutations_are_automorphisms(g, e):
    ctx = SurfaceContext(g)
    spec = qt.QuotientSpec(g, e)
    elements = qt.enumerate_quotient(spec)
    for name in mc.all_twists(ctx):
        perm = mc.induced_quotient_permutation(mc.twist_table(name, ctx), spec, elements)
        assert perm.is_bijection and perm.is_homomorphism
        inv = perm.inverse()
        assert all(inv[perm.images[k]] == k for k in range(len(elements)))


def test_identity_table_permutation():
    spec = qt.QuotientSpec(2, 4)
    perm = mc.induced_quotient_permutation(EndomorphismTable(G2, {}), spec)
    assert perm.images == list(range(512))


def test_quotient_action_matches_nil2(rng):
    spec = qt.QuotientSpec(3, 3)
    elements = qt.enumerate_quotient(spec)
    for name in mc.all_twists(G3):
        t = mc.twist_table(name, G3)
        act = mc.QuotientAction(t, spec)
        for q in rng.sample(elements, 100):
            assert act(q) == qt.project_to_quotient(mc.induced_nil2(t, qt.lift(q)), spec)


def test_simple_loop_catalog():
    cat = mc.simple_loop_catalog(SurfaceContext(4))
    assert cat.flagged == ("s2",)
    assert set(cat.separating) == {"s1", "s2", "s3"}
    assert "gamma9" in cat.nonseparating
    assert mc.simple_loop_catalog(G3).flagged == ()


@pytest.mark.parametrize("g", [2, 3])
def test_elimination_certificate(g):
    cert = mc.elimination_certificate(SurfaceContext(g))
    assert cert.complete
    assert cert.rank == 2 * g * g - 2 * g
    pairs = nil.pair_index_set(g)
    assert {s.target for s in cert.steps} == {pairs.pairs[k] for k in pairs.nonrelated_indices}
    for step in cert.steps:
        assert abs(step.multiple) == 1
        assert not pairs.is_related(*step.basis_pair)
        assert 1 <= len(step.operators) <= 4 * g


def test_elimination_schedule_replays():
    """Re-run every recorded operator sequence on a symbolic vector."""
    g = 3
    ctx = SurfaceContext(g)
    pairs = nil.pair_index_set(g)
    cert = mc.elimination_certificate(ctx)
    eliminated = set()
    for step in cert.steps:
        # try unit vectors for each unknown still alive
        alive = [k for k in pairs.nonrelated_indices if pairs.pairs[k] not in eliminated]
        outputs = {}
        for k in alive:
            z = [0] * len(pairs)
            z[k] = 1
            for op in step.operators:
                z = mc.twist_difference(mc.twist_table(mc.TwistName.parse(op, ctx), ctx), z)
            if any(z):
                outputs[pairs.pairs[k]] = z
        assert list(outputs) == [step.target]
        vec = outputs[step.target]
        assert [i for i, v in enumerate(vec) if v] == [pairs.index(*step.basis_pair)]
        assert vec[pairs.index(*step.basis_pair)] == step.multiple
        eliminated.add(step.target)


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_induced_nil2_on_500_words(g):
    ctx = SurfaceContext(g)
    rng = random.Random(f"induced:{g}")
    tables = [mc.twist_table(name, ctx) for name in mc.all_twists(ctx)]
    for _ in range(500):
        w = random_word(rng, g, rng.randint(0, 10))
        a = nil.evaluate(w, g)
        for t in tables:
            assert mc.induced_nil2(t, a) == nil.evaluate(substitute(w, t), g)
