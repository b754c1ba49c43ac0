import json
from fractions import Fraction

import pytest

from parkstat.parking import block_structure, enumerate_pf, enumerate_upf, upf_act
from parkstat.qalgebra import Poly, QRat, q_multinomial, q_pochhammer
from parkstat.symfunc import (NotInvariantError, SymF, e_in_h, frobenius_of_word_set, h_of, multiply,
                              partitions, pf_frobenius, pf_sym_forests, pf_sym_recursive, pf_symfunc,
                              pf_symfunc_graded, ps, upf_frobenius, upf_symfunc, upf_symfunc_graded,
                              verify_h_e, verify_pf_sym_gf, verify_pf_sym_recursion, verify_ps_inversion,
                              verify_specialization, verify_upf_graded_gf, verify_upf_sym_gf)
from parkstat.words import enumerate_cayley, orbit

t = Poly([Fraction(0), Fraction(1)])


def H(*pairs):
    return SymF(None, {lam: c for lam, c in pairs})


def test_partitions():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [()]


def test_h_of():
    assert h_of((2, 1)) == H(((2, 1), 1))
    assert h_of((1, 0, 2)) == H(((2, 1), 1))
    assert h_of(()) == SymF.unit()


def test_e_in_h():
    assert e_in_h(1) == H(((1,), 1))
    assert e_in_h(2) == H(((1, 1), 1), ((2,), -1))
    n = 5
    total = SymF(n)
    for i in range(n + 1):
        total = total + (-1) ** i * multiply(e_in_h(i), h_of((n - i,)))
    assert total == SymF(n)


def test_multiply():
    assert multiply(h_of((2,)), h_of((1,))) == h_of((2, 1))
    f = h_of((1, 1)) - h_of((2,))
    assert multiply(f, SymF.unit()) == f
    assert multiply(e_in_h(2), e_in_h(1)) == e_in_h(2) * e_in_h(1)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        h_of((2,)) + h_of((1,))


def test_format_and_json():
    f = h_of((2,)) + 2 * h_of((1, 1))
    assert f.format() == "h[2] + 2*h[1,1]"
    assert json.loads(f.to_json()) == {"n": 2, "terms": [{"partition": [2], "coeff": "1"},
                                                          {"partition": [1, 1], "coeff": "2"}]}
    assert upf_symfunc_graded(2).format(unicode=True) == "h[1,1] + t·h[2]"


def test_frobenius_examples():
    assert frobenius_of_word_set(enumerate_pf(2), 2) == h_of((2,)) + h_of((1, 1))
    assert frobenius_of_word_set(orbit((1, 1, 2)), 3) == h_of((2, 1))
    assert upf_frobenius(3) == h_of((3,)) + 2 * h_of((2, 1)) + h_of((1, 1, 1))
    with pytest.raises(NotInvariantError):
        frobenius_of_word_set({(1, 2)}, 2)


@pytest.mark.parametrize("n", range(0, 6))
def test_pf_constructions_agree(n):
    assert pf_frobenius(n) == pf_sym_forests(n) == pf_sym_recursive(n) == pf_symfunc(n)
    assert verify_pf_sym_recursion(n).ok


def test_pf_symfunc_examples():
    assert pf_symfunc(1) == h_of((1,))
    assert pf_symfunc(2) == h_of((2,)) + h_of((1, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_upf_constructions_agree(n):
    assert upf_frobenius(n) == upf_symfunc(n)
    assert upf_symfunc_graded(n).at_t(1) == upf_symfunc(n)
    assert pf_symfunc_graded(n).at_t(1) == pf_symfunc(n)


def test_graded_examples():
    assert pf_symfunc_graded(1) == h_of((1,))
    assert pf_symfunc_graded(2) == t * h_of((2,)) + h_of((1, 1))
    assert upf_symfunc_graded(2) == h_of((1, 1)) + t * h_of((2,))


def test_generating_function_checks():
    assert verify_h_e(8).ok
    assert verify_pf_sym_gf(5).ok
    assert verify_upf_sym_gf(6).ok
    assert verify_upf_graded_gf(5).ok
    assert verify_specialization(5).ok


def test_negative_controls():
    bad = verify_pf_sym_gf(5, {2: h_of((2,))})
    assert not bad.ok
    assert bad.first_mismatch == {"z_exponent": 3, "n": 2, "partition": [1, 1]}
    bad = verify_upf_sym_gf(4, {2: h_of((2,)) + 2 * h_of((1, 1))})
    assert not bad.ok and bad.first_mismatch["z_exponent"] == 2
    bad = verify_upf_graded_gf(4, {2: h_of((1, 1)) + 2 * t * h_of((2,))})
    assert not bad.ok and bad.first_mismatch["z_exponent"] == 2


def test_ps():
    assert ps(h_of((1, 1))) * q_pochhammer(2) == QRat(Poly([1, 1]))
    assert ps(SymF.unit()) == QRat(1)
    for c in [(2, 1), (1, 2, 1), (3, 1)]:
        n = sum(c)
        assert ps(h_of(c)) * q_pochhammer(n) == QRat(q_multinomial(n, c))
    with pytest.raises(TypeError):
        ps(t * h_of((1,)))


@pytest.mark.parametrize("n", range(1, 6))
def test_ps_inversion(n):
    assert verify_ps_inversion(enumerate_pf(n), n, name="pf").ok
    assert verify_ps_inversion(enumerate_cayley(n), n, name="cayley").ok
    assert verify_ps_inversion(enumerate_upf(n), n, upf_act, lambda a: block_structure(a).sizes, "upf").ok
