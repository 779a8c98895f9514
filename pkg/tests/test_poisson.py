import pytest

from rpencil.commpoly import Poly
from rpencil.poisson import (
    MatrixRep,
    PoissonStructure,
    are_compatible,
    constant_symplectic,
    coordinate_generators,
    double_lie_check,
    gl_bracket,
    lambda_linear_term,
    linearized,
    matrix_generators,
    mixed_jacobiator,
    pencil,
    rmatrix_bracket,
    sd_quadratic,
)
from rpencil.rmatrix import canonical_r_sp, sp_fundamental
from rpencil.scalars import scalar


def P(gens, name):
    return Poly.generator(gens, name)


def test_generator_names():
    assert matrix_generators(2) == ("a", "b", "c", "d")
    assert matrix_generators(3)[0] == "a_1^1"
    assert matrix_generators(3)[5] == "a_2^3"


def test_quadratic_table_n2():
    sd = sd_quadratic(2)
    gens = sd.generators
    a, b, c, d = (P(gens, x) for x in "abcd")
    assert sd.bracket(a, b) == a * b
    assert sd.bracket(a, d) == 2 * b * c
    assert sd.bracket(b, c).is_zero()
    assert sd.bracket(b, a) == -(a * b)


def test_leibniz_extension():
    sd = sd_quadratic(2)
    gens = sd.generators
    a, d = P(gens, "a"), P(gens, "d")
    b, c = P(gens, "b"), P(gens, "c")
    # {a^2, d} = 2a{a,d} by the Leibniz rule
    assert sd.bracket(a * a, d) == 4 * a * b * c
    assert sd.bracket(a, a).is_zero()


def test_linear_table_n2():
    lin = linearized(2)
    gens = lin.generators
    a, b, c, d = (P(gens, x) for x in "abcd")
    assert lin.bracket(a, b) == b
    assert lin.bracket(a, d).is_zero()
    assert lin.bracket(b, d) == b
    assert lin.bracket(c, d) == c


def test_kind():
    assert sd_quadratic(2).kind == "quadratic"
    assert linearized(2).kind == "linear"
    assert gl_bracket(2).kind == "linear"
    assert constant_symplectic(2).kind == "constant"


def test_jacobi():
    for n in (2, 3):
        ok, witness = sd_quadratic(n).is_poisson()
        assert ok, witness
        ok, witness = linearized(n).is_poisson()
        assert ok, witness


def test_broken_jacobi_witness():
    sd = sd_quadratic(2)
    gens = sd.generators
    table = dict(sd.table)
    table[(0, 1)] = table[(0, 1)] * scalar(5)  # corrupt {a,b}
    ok, witness = PoissonStructure(gens, table).is_poisson()
    assert not ok
    assert witness == ("a", "b", "d")


def test_compatibility():
    for n in (2, 3):
        ok, witness = are_compatible(linearized(n), sd_quadratic(n))
        assert ok, witness


def test_pencils_are_poisson():
    lin, sd = linearized(2), sd_quadratic(2)
    for a, b in ((1, 1), (2, -3), (0, 1), (5, 7)):
        ok, _ = pencil(lin, sd, a, b).is_poisson()
        assert ok


def test_gl_not_compatible():
    gl, sd = gl_bracket(2), sd_quadratic(2)
    ok, witness = are_compatible(gl, sd)
    assert not ok
    gens = gl.generators
    a, b, d = (P(gens, x) for x in ("a", "b", "d"))
    assert not mixed_jacobiator(gl, sd, a, b, d).is_zero()


def test_linearization():
    for n in (2, 3):
        assert lambda_linear_term(sd_quadratic(n), n) == linearized(n)


def test_double_lie_identity():
    for n in (2, 3):
        ok, mismatches = double_lie_check(n)
        assert ok, mismatches


def test_n3_sample_entries():
    lin = linearized(3)
    gens = lin.generators
    x, y = P(gens, "a_1^2"), P(gens, "a_2^3")
    assert lin.bracket(x, y) == 2 * P(gens, "a_1^3")


def test_sp_representation_closes():
    for dim in (2, 4):
        assert sp_fundamental(dim).closes_under_commutator()


def test_rmatrix_bracket_sp():
    for dim in (2, 4):
        br = rmatrix_bracket(sp_fundamental(dim), canonical_r_sp(dim))
        ok, witness = br.is_poisson()
        assert ok, witness
        ok, witness = are_compatible(br, constant_symplectic(dim))
        assert ok, witness


def test_constant_symplectic_requires_even():
    with pytest.raises(ValueError):
        constant_symplectic(3)
