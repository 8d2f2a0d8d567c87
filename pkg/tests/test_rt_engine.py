"""Quantum-trace pipeline: strip operators, closures, framing, cabling."""

import random

import pytest

from braidrt.braid import ColoredBraidWord, ColorMismatch, closure_components
from braidrt.laurent import ONE, LaurentScalar, q_power
from braidrt.rt_engine import (
    braid_operator,
    evaluate_rt,
    framed_invariant,
    framing_correction,
    split_union,
    strip_operator,
    two_cabling,
)
from braidrt.skein_oracle import skein_triple
from braidrt.uqsl2 import (
    SPIN_HALF,
    SPIN_ONE,
    SPIN_ZERO,
    Spin,
    TensorOperator,
    braiding,
    qdim,
    quantum_trace,
    ribbon_scalar,
)

H = SPIN_HALF
B = ColoredBraidWord
HH = (H, H)

#: brute-force 4x4 trace values, frozen from the explicit fundamental braiding
KINK_PLUS = q_power(5, 2) + q_power(1, 2)                     # v^-1 [2]
TREFOIL = q_power(7, 2) + q_power(3, 2) + q_power(-1, 2) - q_power(-9, 2)
HOPF = q_power(3) + q_power(1) + q_power(-1) + q_power(-3)


def rand_fundamental(rng, max_strands=3, max_length=6):
    n = rng.randint(1, max_strands)
    gens = [i for i in range(1, n)] + [-i for i in range(1, n)]
    length = rng.randint(0, max_length) if n > 1 else 0
    return B(n, (H,) * n, tuple(rng.choice(gens) for _ in range(length)))


def test_strip_operator_placement():
    b = B(3, (H, H, H), (2,))
    op = strip_operator(b, 0)
    expected = TensorOperator.identity((H,)).tensor(braiding(H, H, 1))
    assert op == expected
    single = B(2, HH, (1,))
    assert strip_operator(single, 0) == braiding(H, H, 1)
    with pytest.raises(ValueError):
        strip_operator(single, 1)
    with pytest.raises(ValueError):
        strip_operator(B(1, (H,), ()), 0)


def test_strip_operator_tracks_colors():
    b = B(2, (H, SPIN_ONE), (1, 1))
    first = strip_operator(b, 0)
    assert first.col_spins == (H, SPIN_ONE)
    assert first.row_spins == (SPIN_ONE, H)
    second = strip_operator(b, 1)
    assert second.col_spins == (SPIN_ONE, H)
    assert second.row_spins == (H, SPIN_ONE)
    assert braid_operator(b).is_square()


def test_evaluate_rt_empty_word_is_qdim_product():
    assert evaluate_rt(B(1, (H,), ())) == qdim(H)
    assert evaluate_rt(B(2, (H, SPIN_ONE), ())) == qdim(H) * qdim(SPIN_ONE)
    assert evaluate_rt(B(1, (Spin(8),), ())) == qdim(Spin(8))


def test_evaluate_rt_kink_values():
    # A positive kink closes to the unknot with one positive self-crossing:
    # brute-force 4x4 trace gives ribbon_scalar^-1 * [2].
    assert evaluate_rt(B(2, HH, (1,))) == KINK_PLUS
    assert evaluate_rt(B(2, HH, (1,))) == ribbon_scalar(H) ** -1 * qdim(H)
    assert evaluate_rt(B(2, HH, (-1,))) == ribbon_scalar(H) * qdim(H)
    assert quantum_trace(braiding(H, H, 1)) == KINK_PLUS


def test_evaluate_rt_trefoil_and_hopf():
    assert evaluate_rt(B(2, HH, (1, 1, 1))) == TREFOIL
    assert evaluate_rt(B(2, HH, (-1, -1, -1))) == TREFOIL.mirror()
    assert evaluate_rt(B(2, HH, (1, 1))) == HOPF


def test_evaluate_rt_color_mismatch():
    with pytest.raises(ColorMismatch):
        evaluate_rt(B(2, (H, SPIN_ONE), (1,)))


def test_framed_invariant_removes_kinks():
    assert framed_invariant(B(2, HH, (1,))) == qdim(H)
    assert framed_invariant(B(2, HH, (-1,))) == qdim(H)
    assert framing_correction(B(2, HH, (1,))) == ribbon_scalar(H)


def test_evaluate_rt_invariant_under_braid_relations():
    rng = random.Random(67)
    for _ in range(20):
        b = rand_fundamental(rng, max_strands=3, max_length=3)
        n = b.strands
        if n < 3:
            continue
        i = rng.randint(1, n - 2)
        s = rng.choice((1, -1))
        k = rng.randint(0, len(b.word))
        w1 = b.word[:k] + (s * i, s * (i + 1), s * i) + b.word[k:]
        w2 = b.word[:k] + (s * (i + 1), s * i, s * (i + 1)) + b.word[k:]
        assert evaluate_rt(B(n, b.colors, w1)) == evaluate_rt(B(n, b.colors, w2))


def test_framed_invariant_conjugation_invariance():
    rng = random.Random(23)
    for _ in range(25):
        b = rand_fundamental(rng)
        if b.strands < 2:
            continue
        g = rng.choice([i for i in range(1, b.strands)] + [-i for i in range(1, b.strands)])
        conj = B(b.strands, b.colors, (-g,) + b.word + (g,))
        assert framed_invariant(conj) == framed_invariant(b)
        assert evaluate_rt(conj) == evaluate_rt(b)


def test_stabilisation_factor():
    rng = random.Random(31)
    for _ in range(25):
        b = rand_fundamental(rng)
        w = evaluate_rt(b)
        stab_colors = b.colors + (H,)
        for s in (1, -1):
            stab = B(b.strands + 1, stab_colors, b.word + (s * b.strands,))
            assert evaluate_rt(stab) == ribbon_scalar(H) ** (-s) * w
            assert framed_invariant(stab) == framed_invariant(b)


def test_color_zero_strand_is_transparent():
    rng = random.Random(5)
    for _ in range(15):
        b = rand_fundamental(rng, max_strands=2, max_length=5)
        # append a 0-colored strand and braid it through the last slot twice
        # (keeping it a separate closure component)
        n = b.strands + 1
        for extra in ((n - 1, -(n - 1)), (n - 1, n - 1)):
            padded = B(n, b.colors + (SPIN_ZERO,), b.word + extra)
            assert evaluate_rt(padded) == evaluate_rt(b)


def test_split_union_multiplicativity():
    rng = random.Random(11)
    for _ in range(15):
        b1, b2 = rand_fundamental(rng), rand_fundamental(rng)
        u = split_union(b1, b2)
        assert evaluate_rt(u) == evaluate_rt(b1) * evaluate_rt(b2)


def test_skein_relation_for_rt():
    rng = random.Random(43)
    q_half, q_mhalf = q_power(1, 2), q_power(-1, 2)
    rhs_factor = q_power(1) - q_power(-1)
    for _ in range(30):
        b = rand_fundamental(rng)
        if not b.word:
            continue
        pos = rng.randrange(len(b.word))
        lp, lm, l0 = skein_triple(b, pos)
        lhs = q_half * evaluate_rt(lp) - q_mhalf * evaluate_rt(lm)
        assert lhs == rhs_factor * evaluate_rt(l0)


def test_two_strand_torus_closed_form():
    # closing sigma_1^m on two j-colored strands diagonalises over the fusion
    # channels: w = sum_c (channel eigenvalue)^m [2c+1], with eigenvalue
    # (-1)^(2j - c) (v_j v_j / v_c)^(1/2)
    for j in (H, SPIN_ONE, Spin(3)):
        channels = []
        for c in [Spin(t) for t in range(0, 2 * j.twice_j + 1, 2)]:
            n = (2 * j.twice_j - c.twice_j) // 2
            texp = -2 * j.twice_j * (j.twice_j + 2) + c.twice_j * (c.twice_j + 2)
            eigen = LaurentScalar.monomial(-1 if n % 2 else 1, texp)
            channels.append((eigen, qdim(c)))
        for m in range(0, 7):
            closed_form = LaurentScalar.zero()
            for eigen, dim in channels:
                closed_form = closed_form + eigen ** m * dim
            assert evaluate_rt(B(2, (j, j), (1,) * m)) == closed_form, (j, m)


def test_pipeline_equality_spin_three_halves():
    from braidrt.shadow_engine import evaluate_shadow
    j = Spin(3)
    for word in ((), (1,), (1, 1), (1, -1), (1, 1, 1)):
        b = B(2, (j, j), word)
        assert evaluate_rt(b) == evaluate_shadow(b), word


def test_two_cabling_unknot():
    cab = two_cabling(B(1, (H,), ()), None, H, H)
    assert cab.strands == 2 and cab.word == () and cab.colors == HH
    value = evaluate_rt(cab)
    assert value == qdim(H) * qdim(H)
    assert value == ONE + qdim(SPIN_ONE)  # (q+q^-1)^2 = 1 + [3]


def test_two_cabling_fusion_for_trefoil():
    trefoil = B(2, HH, (1, 1, 1))
    cable = two_cabling(trefoil, None, H, H)
    lhs = evaluate_rt(cable)
    rhs = evaluate_rt(B(2, (SPIN_ZERO, SPIN_ZERO), (1, 1, 1))) + \
        evaluate_rt(B(2, (SPIN_ONE, SPIN_ONE), (1, 1, 1)))
    assert lhs == rhs


def test_two_cabling_single_component_of_link():
    hopf = B(2, HH, (1, 1))
    cable = two_cabling(hopf, component=0, color_a=H, color_b=H)
    assert cable.strands == 3
    lhs = evaluate_rt(cable)
    rhs = evaluate_rt(B(2, (SPIN_ZERO, H), (1, 1))) + \
        evaluate_rt(B(2, (SPIN_ONE, H), (1, 1)))
    assert lhs == rhs


def test_two_cabling_rejects_bad_selection():
    hopf = B(2, HH, (1, 1))
    with pytest.raises(ValueError):
        two_cabling(hopf, None, H, H)  # two components, no selection
    with pytest.raises(ValueError):
        two_cabling(hopf, 5, H, H)
    with pytest.raises(ValueError):
        two_cabling(B(1, (H,), ()), None, H, None)
