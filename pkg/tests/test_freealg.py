import random
from fractions import Fraction
from math import factorial

import pytest

from hweyl.params import ParamPoly
from hweyl.freealg import (GEN_AM, GEN_AP, GEN_M, GENERATORS, FreeElement,
                           RewriteSystem, commutator, exp_element, exp_matrix2,
                           nc_mul, normal_form)
from hweyl.bialgebra import BialgebraClass, TYPE_I_PLUS, TYPE_II
from hweyl.quantization import family_rewrite

K = 6


def gen(name, order=K):
    return FreeElement.generator(name, order)


def sym(name, order=K):
    return ParamPoly.symbol(name, order)


def series_exp(x, order):
    """Independent exponential oracle: explicit sum x^n / n!."""
    out = FreeElement.one(order)
    for n in range(1, order + 1):
        out = out + x ** n * Fraction(1, factorial(n))
    return out


# -- nc_mul -------------------------------------------------------------------

def test_nc_mul_concatenates():
    prod = nc_mul(gen(GEN_AM), gen(GEN_AP))
    assert prod == FreeElement.from_word((GEN_AM, GEN_AP), K)


def test_nc_mul_unit():
    x = gen(GEN_M) + gen(GEN_AP)
    assert nc_mul(x, FreeElement.one(K)) == x
    assert nc_mul(FreeElement.one(K), x) == x


def test_nc_mul_scalar_bilinear():
    a1, a3 = sym("a1"), sym("a3")
    prod = nc_mul(gen(GEN_AP) * a1, gen(GEN_M) * a3)
    assert prod == FreeElement.from_word((GEN_AP, GEN_M), K, coeff=a1 * a3)


# -- normal_form ----------------------------------------------------------------

def test_normal_form_undeformed():
    rs = RewriteSystem.undeformed(K)
    x = nc_mul(gen(GEN_AM), gen(GEN_AP))
    assert normal_form(x, rs) == FreeElement.from_word((GEN_AP, GEN_AM), K) \
        + gen(GEN_M)


def test_normal_form_type_i_plus_am_m():
    rs = family_rewrite(BialgebraClass.symbolic(TYPE_I_PLUS, K), K)
    x = nc_mul(gen(GEN_AM), gen(GEN_M))
    expected = FreeElement.from_word((GEN_M, GEN_AM), K) \
        + FreeElement.from_word((GEN_M, GEN_M), K, coeff=sym("a1") * Fraction(1, 2))
    assert normal_form(x, rs) == expected


def test_normal_form_type_ii_m_central():
    rs = family_rewrite(BialgebraClass.symbolic(TYPE_II, K), K)
    x = nc_mul(gen(GEN_AP), gen(GEN_M))
    assert normal_form(x, rs) == FreeElement.from_word((GEN_M, GEN_AP), K)


def test_normal_form_linear_and_idempotent():
    rs = RewriteSystem.undeformed(K)
    x = nc_mul(gen(GEN_AM), gen(GEN_AP)) * 3 - gen(GEN_M)
    nf = normal_form(x, rs)
    assert normal_form(nf, rs) == nf
    assert normal_form(x + x, rs) == nf + nf


# -- commutator ---------------------------------------------------------------------

def test_commutator_undeformed():
    rs = RewriteSystem.undeformed(K)
    assert commutator(gen(GEN_AM), gen(GEN_AP), rs) == gen(GEN_M)
    assert commutator(gen(GEN_M), gen(GEN_AP), rs).is_zero


def test_commutator_type_i_plus():
    rs = family_rewrite(BialgebraClass.symbolic(TYPE_I_PLUS, K), K)
    c = commutator(gen(GEN_AM), gen(GEN_M), rs)
    assert c == FreeElement.from_word((GEN_M, GEN_M), K,
                                      coeff=sym("a1") * Fraction(1, 2))


# -- exp ------------------------------------------------------------------------------

def test_exp_zero():
    assert exp_element(FreeElement.zero(K)) == FreeElement.one(K)


def test_exp_single_generator_against_series_oracle():
    x = gen(GEN_AP, 2) * sym("a1", 2)
    expected = FreeElement.one(2) + x \
        + FreeElement.from_word((GEN_AP, GEN_AP), 2,
                                coeff=sym("a1", 2) ** 2 * Fraction(1, 2))
    assert exp_element(x) == expected
    assert exp_element(x) == series_exp(x, 2)


def test_exp_sum_scale():
    s = sym("a2", 2) + sym("b3", 2)
    x = gen(GEN_M, 2) * s
    expected = FreeElement.one(2) + x \
        + FreeElement.from_word((GEN_M, GEN_M), 2, coeff=s ** 2 * Fraction(1, 2))
    assert exp_element(x) == expected


def test_exp_inverse_property():
    rs = RewriteSystem.undeformed(K)
    for name, pname in ((GEN_AP, "a1"), (GEN_M, "b3"), (GEN_AM, "xi")):
        x = gen(name) * sym(pname)
        prod = normal_form(nc_mul(exp_element(x), exp_element(-x)), rs)
        assert prod == FreeElement.one(K)


def test_exp_rejects_degree_zero():
    with pytest.raises(ValueError):
        exp_element(gen(GEN_AP))
    with pytest.raises(ValueError):
        exp_element(gen(GEN_AP) * (1 + sym("a1")))


# -- exp_matrix2 ----------------------------------------------------------------------

def test_exp_matrix_jordan_block():
    a1, a3 = sym("a1"), sym("a3")
    ap = gen(GEN_AP)
    zero = FreeElement.zero(K)
    e = exp_matrix2([[ap * a1, ap * -a3], [zero, ap * a1]])
    expo = exp_element(ap * a1)
    assert e[0][0] == expo
    assert e[1][1] == expo
    assert e[1][0].is_zero
    assert e[0][1] == nc_mul(ap * -a3, expo)


def test_exp_matrix_diagonal():
    a2, b3 = sym("a2"), sym("b3")
    m = gen(GEN_M)
    zero = FreeElement.zero(K)
    e = exp_matrix2([[m * a2, zero], [zero, m * b3]])
    assert e[0][0] == exp_element(m * a2)
    assert e[1][1] == exp_element(m * b3)
    assert e[0][1].is_zero and e[1][0].is_zero


def test_exp_matrix_determinant_identity():
    a2, a3, b2, b3 = (sym(n) for n in ("a2", "a3", "b2", "b3"))
    m = gen(GEN_M)
    e = exp_matrix2([[m * a2, m * a3], [m * b2, m * b3]])
    rs = RewriteSystem.undeformed(K)
    det = normal_form(nc_mul(e[0][0], e[1][1]) - nc_mul(e[0][1], e[1][0]), rs)
    assert det == exp_element(m * (a2 + b3))


def test_exp_matrix_rejects_mixed_generators():
    with pytest.raises(ValueError):
        exp_matrix2([[gen(GEN_AP) * sym("a1"), gen(GEN_M) * sym("a2")],
                     [FreeElement.zero(K), gen(GEN_AP) * sym("a1")]])


# -- rewrite systems -------------------------------------------------------------------

def test_termination_witness_enforced():
    one = ParamPoly.one(K)
    bad = {
        (GEN_AP, GEN_M): FreeElement({(GEN_M, GEN_AP): one}, K),
        (GEN_AM, GEN_M): FreeElement({(GEN_M, GEN_AM): one}, K),
        # constant-coefficient same-length garbage term breaks the witness
        (GEN_AM, GEN_AP): FreeElement({(GEN_AP, GEN_AM): one,
                                       (GEN_M, GEN_M): one}, K),
    }
    with pytest.raises(ValueError):
        RewriteSystem("bad", bad, K)


def test_rules_must_cover_redexes():
    one = ParamPoly.one(K)
    with pytest.raises(ValueError):
        RewriteSystem("partial", {
            (GEN_AP, GEN_M): FreeElement({(GEN_M, GEN_AP): one}, K)}, K)


@pytest.mark.parametrize("tag", [None, TYPE_I_PLUS, TYPE_II])
def test_confluence_all_families(tag):
    if tag is None:
        rs = RewriteSystem.undeformed(4)
    else:
        rs = family_rewrite(BialgebraClass.symbolic(tag, 4), 4)
    assert rs.check_confluence() == []


@pytest.mark.parametrize("tag", [None, TYPE_I_PLUS, TYPE_II])
def test_associativity_short_words(tag):
    order = 4
    if tag is None:
        rs = RewriteSystem.undeformed(order)
    else:
        rs = family_rewrite(BialgebraClass.symbolic(tag, order), order)
    words = [()] + [(g,) for g in GENERATORS] \
        + [(g, h) for g in GENERATORS for h in GENERATORS]
    rng = random.Random(7)
    sample = rng.sample([(x, y, z) for x in words for y in words for z in words], 300)
    for wx, wy, wz in sample:
        x = FreeElement.from_word(wx, order)
        y = FreeElement.from_word(wy, order)
        z = FreeElement.from_word(wz, order)
        left = normal_form(nc_mul(normal_form(nc_mul(x, y), rs), z), rs)
        right = normal_form(nc_mul(x, normal_form(nc_mul(y, z), rs)), rs)
        assert left == right


def test_associativity_length_four_words():
    order = 4
    rs = family_rewrite(BialgebraClass.symbolic(TYPE_I_PLUS, order), order)
    rng = random.Random(11)
    for _ in range(60):
        w = tuple(rng.choice(GENERATORS) for _ in range(4))
        for cut1 in range(1, 4):
            for cut2 in range(cut1, 4):
                x = FreeElement.from_word(w[:cut1], order)
                y = FreeElement.from_word(w[cut1:cut2], order)
                z = FreeElement.from_word(w[cut2:], order)
                left = normal_form(nc_mul(normal_form(nc_mul(x, y), rs), z), rs)
                right = normal_form(nc_mul(x, normal_form(nc_mul(y, z), rs)), rs)
                assert left == right


# -- truncation consistency --------------------------------------------------------------

def _random_element(rng, order, max_len=3):
    out = FreeElement.zero(order)
    for _ in range(4):
        word = tuple(rng.choice(GENERATORS) for _ in range(rng.randint(0, max_len)))
        coeff = ParamPoly.const(rng.randint(-3, 3), order)
        for _ in range(rng.randint(0, 2)):
            coeff = coeff * ParamPoly.symbol(rng.choice(("a1", "a3", "b2")), order)
        out = out + FreeElement.from_word(word, order, coeff=coeff)
    return out


def test_truncation_consistency_mul_and_normal_form():
    rng = random.Random(99)
    rs6 = family_rewrite(BialgebraClass.symbolic(TYPE_I_PLUS, 6), 6)
    rs3 = family_rewrite(BialgebraClass.symbolic(TYPE_I_PLUS, 3), 3)
    for _ in range(25):
        x6, y6 = _random_element(rng, 6), _random_element(rng, 6)
        x3, y3 = x6.truncate(3), y6.truncate(3)
        assert nc_mul(x6, y6).truncate(3) == nc_mul(x3, y3)
        assert normal_form(nc_mul(x6, y6), rs6).truncate(3) \
            == normal_form(nc_mul(x3, y3), rs3)
        assert commutator(x6, y6, rs6).truncate(3) == commutator(x3, y3, rs3)


def test_truncation_consistency_exp():
    x6 = gen(GEN_AP, 6) * sym("a1", 6)
    assert exp_element(x6).truncate(3) == exp_element(x6.truncate(3))
    zero6 = FreeElement.zero(6)
    mat6 = [[x6, gen(GEN_AP, 6) * sym("a3", 6)], [zero6, x6]]
    e6 = exp_matrix2(mat6)
    e3 = exp_matrix2([[m.truncate(3) for m in row] for row in mat6])
    for i in range(2):
        for j in range(2):
            assert e6[i][j].truncate(3) == e3[i][j]


# -- rendering ------------------------------------------------------------------------------

def test_canonical_rendering():
    x = FreeElement.from_word((GEN_M, GEN_M, GEN_AM), K,
                              coeff=sym("a1") * Fraction(1, 2))
    assert str(x) == "(1/2)*a1*M^2*A-"
    assert str(FreeElement.one(K)) == "1"
    assert str(FreeElement.zero(K)) == "0"
    assert str(gen(GEN_AP) - gen(GEN_M)) == "-M + A+"
