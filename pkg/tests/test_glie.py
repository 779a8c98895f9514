from math import comb

import pytest

from rpencil.freealg import FreeElement
from rpencil.glie import (
    GeneralizedLieBracket,
    SplittingError,
    adjoint,
    bracket_table,
    check_axiom7,
    check_axiom8,
    classical_glie,
    enveloping,
    overlap_space,
    random_bracket,
    slie_jacobi_check,
    type2_bracket,
)
from rpencil.linalg import Mat, SubspaceBasis
from rpencil.quadratic import certify_flat_filtered, a0q, jhq, same_ideal
from rpencil.rmatrix import flip_operator
from rpencil.scalars import H, ONE, Q, Scalar


def test_splitting_validation():
    g = type2_bracket(2)
    with pytest.raises(SplittingError):
        GeneralizedLieBracket(g.generators, g.i_minus, g.i_minus, g.matrix)
    bad = g.matrix.copy()
    bad.set(0, 0, ONE)  # a (x) a lies in I_plus, so this breaks axiom 1
    with pytest.raises(SplittingError):
        GeneralizedLieBracket(g.generators, g.i_plus, g.i_minus, bad)


def test_overlap_dimensions():
    for n in (2, 3):
        N = n * n
        assert overlap_space(type2_bracket(n).i_minus).dim == comb(N, 3)


def test_overlap_classical_and_trivial():
    skew = classical_glie(2).i_minus
    assert overlap_space(skew).dim == comb(4, 3)
    assert overlap_space(SubspaceBasis(16, [])).dim == 0


def test_type2_bracket_values_n2():
    g = type2_bracket(2)
    gens = g.generators
    # the defining relation quadratic parts map to their lower-order terms
    ab = (FreeElement.generator(gens, "a") * FreeElement.generator(gens, "b")
          - Q * (FreeElement.generator(gens, "b") * FreeElement.generator(gens, "a")))
    value = g.value_element(ab.to_vector(2))
    assert value == H * FreeElement.generator(gens, "b")
    ad = (FreeElement.generator(gens, "a") * FreeElement.generator(gens, "d")
          - FreeElement.generator(gens, "d") * FreeElement.generator(gens, "a")
          - (Q - 1 / Q) * (FreeElement.generator(gens, "c") * FreeElement.generator(gens, "b")))
    assert g.value_element(ad.to_vector(2)).is_zero()


def test_vanishes_on_i_plus():
    g = type2_bracket(2)
    for row in g.i_plus.rows:
        assert not g.bracket(row)


def test_axioms():
    for n in (2, 3):
        g = type2_bracket(n)
        ok, witness = check_axiom7(g)
        assert ok, witness
        ok, witness = check_axiom8(g)
        assert ok, witness


def test_axioms_detect_doubled_value():
    # double one defining value ([ab - q ba] becomes 2hb) and rebuild
    g = type2_bracket(2)
    pres = jhq(2)
    pairs = []
    for k, rel in enumerate(pres.relations):
        quad = rel.homogeneous_part(2)
        value = quad - rel
        if k == 0:
            value = value * 2
        vec = {}
        for word, c in value.terms.items():
            vec[word[0] if word else 4] = c
        pairs.append((quad.to_vector(2), vec))
    broken = GeneralizedLieBracket.from_relation_values(g.generators, g.i_plus, pairs)
    ok7, w7 = check_axiom7(broken)
    ok8, w8 = check_axiom8(broken)
    assert not (ok7 and ok8)
    assert (w7 or w8) is not None


def test_bracket_table_n2():
    table = bracket_table(type2_bracket(2))
    m = H / (1 + Q * Q)
    gens = type2_bracket(2).generators
    b = FreeElement.generator(gens, "b")
    c = FreeElement.generator(gens, "c")
    assert table[("a", "a")].is_zero()
    assert table[("b", "c")].is_zero()
    assert table[("a", "d")].is_zero()
    assert table[("a", "b")] == m * b
    assert table[("b", "d")] == m * b
    assert table[("b", "a")] == -(m * Q) * b
    assert table[("d", "b")] == -(m * Q) * b
    assert table[("a", "c")] == m * c
    assert table[("c", "a")] == -(m * Q) * c


def test_bracket_table_vanishes_at_classical_point():
    table = bracket_table(type2_bracket(2))
    for value in table.values():
        assert value.specialize({"q": 1, "h": 0}).is_zero()


def test_adjoint_matches_table():
    g = type2_bracket(2)
    table = bracket_table(g)
    ad_a = adjoint(g, "a")
    for name in g.generators:
        assert ad_a[name] == table[("a", name)]


def test_enveloping_equals_filtered_algebra():
    for n in (2, 3):
        env = enveloping(type2_bracket(n))
        assert env.flag == "filtered"
        assert same_ideal(env, jhq(n), 3)


def test_enveloping_is_flat():
    env = enveloping(type2_bracket(2))
    assert certify_flat_filtered(env, a0q(2), 3)["flat"]


def test_enveloping_zero_bracket_is_symmetric_algebra():
    c = classical_glie(2)
    zero = GeneralizedLieBracket(c.generators, c.i_plus, c.i_minus, Mat(5, 16))
    env = enveloping(zero)
    assert env.flag == "graded"


def test_classical_enveloping_relations():
    env = enveloping(classical_glie(2, half_scaled=True))
    gens = env.generators
    e11, e12, e21, e22 = (FreeElement.generator(gens, g) for g in gens)
    expected = {
        e11 * e12 - e12 * e11 - e12,
        e12 * e21 - e21 * e12 - (e11 - e22),
        e11 * e21 - e21 * e11 + e21,
    }
    relations = set(env.relations)
    assert expected <= relations


def test_classical_axioms():
    c = classical_glie(2)
    assert check_axiom7(c)[0]
    assert check_axiom8(c)[0]


def test_slie_jacobi():
    flip = flip_operator(4)
    assert slie_jacobi_check(classical_glie(2), flip)
    c = classical_glie(2)
    zero = GeneralizedLieBracket(c.generators, c.i_plus, c.i_minus, Mat(5, 16))
    assert slie_jacobi_check(zero, flip)


def test_slie_jacobi_rejects_random():
    c = classical_glie(2)
    rejected = False
    for seed in range(6):
        candidate = random_bracket(c.i_plus, c.i_minus, c.generators, seed)
        if not slie_jacobi_check(candidate, flip_operator(4)):
            rejected = True
            break
    assert rejected


def test_slie_requires_involutive():
    from rpencil.rmatrix import hecke_s, s_w

    g = type2_bracket(2)
    with pytest.raises(ValueError):
        slie_jacobi_check(g, s_w(hecke_s(2)))
