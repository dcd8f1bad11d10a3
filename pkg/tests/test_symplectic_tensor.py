"""Tensor-algebra side: cyclic words, contractions, symplectic expansions."""

import random
from fractions import Fraction

import pytest

from foxtwist.errors import DomainError, SolverError
from foxtwist.series import TruncatedSeries
from foxtwist.surfaces import SurfaceSpec
from foxtwist.symplectic_tensor import (
    S_COEFFICIENTS,
    SymplecticExpansion,
    basis_names,
    basis_vector,
    build_symplectic_expansion,
    contraction,
    cyclicize,
    derivation_pairing,
    intersection_number,
    is_tensor_group_like,
    is_tensor_primitive,
    lie_bracket_of_word,
    omega,
    s_of_omega,
    tensor_coproduct,
    tensorial_rho,
    verify_section9,
)
from foxtwist.truncated_completion import tensor_outer
from foxtwist.words import GroupWord


def mono(letters, cap=5, rank=2, coeff=1):
    return TruncatedSeries(rank, cap, {tuple(letters): Fraction(coeff)})


def random_tensor(rng, rank=2, cap=5, terms=3, min_degree=1):
    out = TruncatedSeries.zero(rank, cap)
    for _ in range(terms):
        m = tuple(rng.randint(1, rank) for _ in range(rng.randint(min_degree, cap - 1)))
        out = out + mono(m, cap, rank, Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
    return out


def test_basis_names_and_intersection_numbers():
    assert basis_names(2) == ["a1", "b1", "a2", "b2"]
    assert intersection_number(1, 1, 2) == -1
    assert intersection_number(1, 2, 1) == 1
    assert intersection_number(2, 1, 3) == 0
    assert intersection_number(2, 3, 4) == -1


def test_omega_frozen():
    w = omega(1, 4)
    assert w == TruncatedSeries(2, 4, {(2, 1): 1, (1, 2): -1})
    with pytest.raises(ValueError):
        omega(1, 2)


def test_tensor_coproduct_letters_are_primitive():
    h = basis_vector(1, 1, 4)
    one = TruncatedSeries.one(2, 4)
    assert tensor_coproduct(h) == tensor_outer(h, one) + tensor_outer(one, h)
    assert is_tensor_primitive(h)
    assert not is_tensor_primitive(h * h)


def test_tensor_coproduct_is_an_algebra_map():
    rng = random.Random(101)
    for _ in range(8):
        u = random_tensor(rng, cap=4)
        v = random_tensor(rng, cap=4)
        assert tensor_coproduct(u * v) == tensor_coproduct(u) * tensor_coproduct(v)


def test_exponentials_of_primitives_are_group_like():
    rng = random.Random(102)
    for _ in range(5):
        p = basis_vector(1, 1, 5).scale(rng.randint(-2, 2)) + lie_bracket_of_word(
            2, 5, (2, 1)).scale(Fraction(rng.randint(-2, 2), 2))
        assert is_tensor_primitive(p)
        assert is_tensor_group_like(p.exp())


def test_cyclicize_frozen():
    assert cyclicize(mono((1, 2))) == mono((1, 2)) + mono((2, 1))
    assert cyclicize(omega(1, 5)).is_zero()
    with pytest.raises(ValueError):
        cyclicize(mono((1,)) + mono((1, 2)))


def test_contraction_frozen_examples():
    # a ~> b = a.b = -1;  ab ~> aa keeps the spectator letters
    assert contraction(mono((1,)), mono((2,))) == TruncatedSeries.scalar(2, 5, -1)
    assert contraction(mono((1, 2)), mono((1, 1))) == mono((1, 1))
    assert contraction(mono((1,)), omega(1, 5)) == -mono((1,))
    with pytest.raises(DomainError):
        contraction(1 + mono((1,)), mono((2,)))


def test_derivation_pairing_degree_one_acts_as_derivation():
    h = mono((1,))
    assert derivation_pairing(h, mono((2, 1))) == -mono((1,))
    assert derivation_pairing(h, mono((1, 1))).is_zero()


def test_derivation_pairing_frozen_higher_degree():
    assert derivation_pairing(mono((1, 2)), mono((1,))) == mono((1,))
    assert derivation_pairing(TruncatedSeries.one(2, 5), mono((1,))).is_zero()


def test_derivation_pairing_matches_the_double_sum():
    # independent oracle: <h_1..h_m, k_1..k_n> =
    #   sum_{i,j} (h_i . k_j) k_1..k_{j-1} (h_{i+1}..h_m h_1..h_{i-1}) k_{j+1}..k_n
    rng = random.Random(103)
    for genus in (1, 2):
        rank = 2 * genus
        for _ in range(30):
            m = rng.randint(1, 3)
            n = rng.randint(1, 3)
            cap = m + n
            h = tuple(rng.randint(1, rank) for _ in range(m))
            k = tuple(rng.randint(1, rank) for _ in range(n))
            want = TruncatedSeries.zero(rank, cap)
            for i in range(m):
                for j in range(n):
                    scalar = intersection_number(genus, h[i], k[j])
                    if not scalar:
                        continue
                    block = k[:j] + h[i + 1:] + h[:i] + k[j + 1:]
                    want = want + TruncatedSeries(rank, cap, {block: scalar})
            got = derivation_pairing(mono(h, cap, rank), mono(k, cap, rank))
            assert got == want, (h, k)


def test_derivation_pairing_sees_only_the_cyclic_class():
    rng = random.Random(104)
    for _ in range(10):
        m = tuple(rng.randint(1, 2) for _ in range(rng.randint(2, 4)))
        rotated = m[1:] + m[:1]
        v = random_tensor(rng)
        assert derivation_pairing(mono(m), v) == derivation_pairing(mono(rotated), v)


def test_omega_pairs_to_zero():
    rng = random.Random(105)
    w = omega(1, 5)
    for _ in range(5):
        assert derivation_pairing(w, random_tensor(rng)).is_zero()


def test_s_coefficients_solve_the_defining_equation():
    # z s(z) (e^{-z} - 1) = z + e^{-z} - 1, checked through degree 7
    z = TruncatedSeries.variable(1, 8, 1)
    s = sum((z ** j * S_COEFFICIENTS[j] for j in range(6)), TruncatedSeries.zero(1, 8))
    expm1 = (-z).exp() - 1
    assert z * s * expm1 == z + expm1


def test_s_of_omega_frozen_low_degrees():
    got = s_of_omega(1, 5)
    want = TruncatedSeries.scalar(2, 5, Fraction(-1, 2)) - omega(1, 5).scale(Fraction(1, 12))
    assert got == want


def test_tensorial_rho_boundary_unit():
    for genus in (1, 2):
        boundary = (-omega(genus, 5)).exp()
        for index in range(1, 2 * genus + 1):
            h = basis_vector(genus, index, 5)
            assert tensorial_rho(h, boundary) == h


def test_expansion_build_is_deterministic_and_symplectic():
    e1 = build_symplectic_expansion(1, 5)
    e2 = build_symplectic_expansion(1, 5)
    assert e1.images == e2.images
    assert e1.is_group_like()
    assert e1.is_symplectic()
    assert e1.boundary_image() == (-omega(1, 5)).exp()


def test_expansion_exponents_are_primitive():
    e = build_symplectic_expansion(1, 4)
    for exponent in e.exponents:
        assert is_tensor_primitive(exponent)
        assert exponent.exp() in e.images


def test_expansion_validation():
    with pytest.raises(ValueError):
        build_symplectic_expansion(0, 4)
    with pytest.raises(ValueError):
        build_symplectic_expansion(1, 2)
    images = [TruncatedSeries.one(2, 4), TruncatedSeries.one(2, 4)]
    with pytest.raises(ValueError):
        SymplecticExpansion(1, 4, images)


def test_apply_word_respects_inverses():
    e = build_symplectic_expansion(1, 4)
    w = GroupWord(2, (1, -2, 1))
    direct = e.images[0] * e.images[1].inverse() * e.images[0]
    assert e.apply_word(w) == direct
    assert e.apply_word(GroupWord(2, ())) == 1


def test_apply_hat_extends_multiplicatively():
    e = build_symplectic_expansion(1, 4)
    x1 = TruncatedSeries.variable(2, 4, 1)
    x2 = TruncatedSeries.variable(2, 4, 2)
    assert e.apply_hat(1 + x1) == e.images[0]
    assert e.apply_hat((1 + x1) * (1 + x2)) == e.images[0] * e.images[1]


def test_lie_bracket_of_word_is_right_nested():
    got = lie_bracket_of_word(2, 4, (1, 2))
    a = TruncatedSeries.variable(2, 4, 1)
    b = TruncatedSeries.variable(2, 4, 2)
    assert got == a * b - b * a
    assert lie_bracket_of_word(2, 4, (1, 2, 1)) == a * (b * a - a * b) - (b * a - a * b) * a


def test_section9_diagrams_commute():
    spec = SurfaceSpec(1, 3)
    expansion = build_symplectic_expansion(1, 5)
    rng = random.Random(106)
    words = [GroupWord(2, tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(1, 3))))
             for _ in range(3)]
    report = verify_section9(spec, expansion, 3, extra_words=words)
    assert report["ok"]
    assert report["genus"] == 1 and report["cap"] == 3
    names = {c["name"] for c in report["checks"]}
    assert "derived-diagram-x1-x2" in names
    assert "pairing-diagram-word1-word1" in names


def test_section9_requires_enough_expansion_cap():
    expansion = build_symplectic_expansion(1, 4)
    with pytest.raises(ValueError):
        verify_section9(SurfaceSpec(1, 3), expansion, 3)
