from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from picard.exceptions import NonIntegralD, NotRealQuadratic, ZeroDenominator, ZeroInput
from picard.field import FieldElement, conj_over_Qi
from picard.group import apply, generator, matrix_of
from picard.quadratic import (
    AmbiguityClass,
    RealQuadratic,
    act_A2_image,
    act_A_image,
    act_B,
    act_C,
    act_C2,
    act_D,
    canonicalize,
    classify,
    conj,
    d_value,
    embed,
    extract,
    render,
    same_value,
)

Q = canonicalize
AMB = AmbiguityClass.Ambiguous
TP = AmbiguityClass.TotallyPositive
TN = AmbiguityClass.TotallyNegative


@st.composite
def integral_d_triples(draw, bmax=30):
    a = draw(st.integers(-80, 80))
    b = draw(st.integers(1, bmax))
    n = a * a - 3 * b * b
    divs = [x for x in range(1, abs(n) + 1) if n % x == 0]
    c = draw(st.sampled_from(divs)) * draw(st.sampled_from((1, -1)))
    return Q(a, b, c)


def float_sign_class(q):
    """Floating-point oracle, fine for small entries."""
    x = (q.a + q.b * 3 ** 0.5) / q.c
    y = (q.a - q.b * 3 ** 0.5) / q.c
    if x > 0 and y > 0:
        return TP
    if x < 0 and y < 0:
        return TN
    return AMB


def test_canonicalize_examples():
    assert Q(0, -1, 1).triple == (0, 1, -1)
    assert Q(3, 2, 1).triple == (3, 2, 1)
    assert Q(0, -2, -6).triple == (0, 2, 6)
    assert Q(4, 0, -2).triple == (-4, 0, 2)
    with pytest.raises(ZeroDenominator):
        Q(1, 1, 0)


def test_no_gcd_reduction():
    assert Q(0, 2, 4) != Q(0, 1, 2)
    assert same_value(Q(0, 2, 4), Q(0, 1, 2))
    assert not same_value(Q(0, 2, 4), Q(0, 2, 3))


def test_embed_examples():
    assert embed(Q(0, 1, 1)) == FieldElement(0, 0, 1, 0)
    assert embed(Q(3, 2, 3)) == FieldElement(1, 0, Fraction(2, 3), 0)
    assert embed(Q(1, 0, 2)) == FieldElement(Fraction(1, 2))


def test_extract_examples():
    assert extract(FieldElement(0, 0, 1, 0)).triple == (0, 1, 1)
    with pytest.raises(NotRealQuadratic):
        extract(FieldElement(0, Fraction(1, 4), Fraction(1, 4), 0))
    assert extract(FieldElement(Fraction(1, 2))).triple == (1, 0, 2)
    assert extract(embed(Q(0, 2, 4))).triple == (0, 1, 2)
    assert extract(FieldElement(Fraction(-1, 6), 0, Fraction(3, 4), 0)).triple == (-2, 9, 12)


def test_d_value_examples():
    assert d_value(Q(0, 2, 1)) == -12
    assert d_value(Q(1, 1, 2)) == -1
    assert d_value(Q(3, 2, 3)) == -1
    assert d_value(Q(1, 1, 3)) == Fraction(-2, 3)


def test_classify_examples():
    assert classify(Q(0, 1, 1)) is AMB
    assert classify(Q(5, 1, 1)) is TP
    assert classify(Q(3, 2, 1)) is AMB
    assert classify(Q(-5, 1, 1)) is TN
    assert classify(Q(5, 1, -1)) is TN
    assert classify(Q(1, 0, 2)) is AmbiguityClass.RationalDegenerate


@given(st.integers(-200, 200), st.integers(1, 100), st.integers(-300, 300).filter(bool))
def test_classify_matches_float_oracle(a, b, c):
    q = Q(a, b, c)
    # keep away from ties where floats could misjudge
    assume(abs(a * a - 3 * b * b) > 2)
    assert classify(q) is float_sign_class(q)
    assert (classify(q) is AMB) == (a * a < 3 * b * b)


def test_act_B_examples():
    assert act_B(Q(-3, 2, 1)) == Q(3, 2, 3)
    assert act_B(Q(0, 1, 1)) == Q(0, 1, 3)
    with pytest.raises(NonIntegralD):
        act_B(Q(1, 1, 3))
    with pytest.raises(ZeroInput):
        act_B(RealQuadratic(0, 0, 1))


def test_act_D_examples():
    assert act_D(Q(0, 1, 1)) == Q(0, 1, -3)
    assert act_D(Q(-1, 1, -2)) == Q(1, 1, 1)


def test_act_C_examples():
    assert act_C(Q(0, 1, 1)) == Q(3, 1, -3)
    assert act_C(Q(1, 1, 1)) == Q(1, 1, -2)
    img = act_C(Q(5, 1, 1))
    assert img == Q(-27, 1, 22)
    # (27^2 - 3)/22 = 33 = 2*5 + 1 + 22
    assert d_value(img) == 33


def test_act_C2_examples():
    assert act_C2(Q(0, 1, 1)) == Q(-1, 1, -2)
    assert act_C2(Q(-1, 1, 1)) == Q(0, 1, -3)
    assert d_value(act_C2(Q(0, 1, 1))) == 1


def test_act_A_images():
    assert act_A_image(Q(0, 1, 1)) == FieldElement(0, Fraction(1, 4), Fraction(1, 4), 0)
    assert act_A2_image(Q(0, 1, 1)) == FieldElement(0, 1, Fraction(1, 3), 0)
    with pytest.raises(NotRealQuadratic):
        extract(act_A_image(Q(0, 1, 1)))


def test_conj_examples():
    assert conj(Q(0, 1, 1)) == Q(0, 1, -1)
    assert conj(Q(1, 1, 2)) == Q(-1, 1, -2)
    q = Q(3, 2, 7)
    assert conj(conj(q)) == q


def test_render():
    assert render(Q(-3, 2, 3)) == "(-3+2√3)/3"
    assert render(Q(0, 1, 1)) == "√3"
    assert render(Q(0, 1, -3)) == "-√3/3"
    assert render(Q(-3, 2, 1)) == "-3+2√3"
    assert render(Q(3, 2, 3)) == "(3+2√3)/3"
    assert render(Q(1, 1, -2)) == "(-1-√3)/2"
    assert render(Q(1, 0, 2)) == "1/2"


@given(integral_d_triples())
def test_involutions(q):
    assert act_B(act_B(q)) == q
    assert act_D(act_D(q)) == q
    assert conj(conj(q)) == q


@given(integral_d_triples())
def test_C_has_order_three_on_triples(q):
    assert act_C(act_C(act_C(q))) == q
    assert act_C2(act_C(q)) == q
    assert act_C(act_C2(q)) == q


@given(integral_d_triples())
def test_closed_forms_agree_with_mobius_action(q):
    x = embed(q)
    assert embed(act_B(q)) == apply(generator("B"), x)
    assert embed(act_D(q)) == apply(generator("D"), x)
    assert embed(act_C(q)) == apply(generator("C"), x)
    assert embed(act_C2(q)) == apply(matrix_of("CC"), x)
    assert act_A_image(q) == apply(generator("A"), x)
    assert act_A2_image(q) == apply(matrix_of("AA"), x)


@given(integral_d_triples())
def test_conj_matches_field_conjugation(q):
    assert same_value(conj(q), extract(conj_over_Qi(embed(q))))


@given(integral_d_triples())
def test_b_is_invariant(q):
    for act in (act_B, act_C, act_C2, act_D):
        assert act(q).b == q.b


@given(integral_d_triples())
def test_d_stays_integral(q):
    d = d_value(q)
    assert d_value(act_C(q)) == 2 * q.a + q.c + d
    assert d_value(act_C2(q)) == q.c
    # canonical orientation negates the B and D images
    assert d_value(act_B(q)) == -q.c
    assert d_value(act_D(q)) == q.c


@given(integral_d_triples())
def test_ambiguity_preserved_by_B_and_D(q):
    amb = classify(q) is AMB
    assert (classify(act_B(q)) is AMB) == amb
    assert (classify(act_D(q)) is AMB) == amb


@given(integral_d_triples())
def test_c_triangle(q):
    pair = {classify(act_C(q)), classify(act_C2(q))}
    if classify(q) is AMB:
        assert pair == {AMB, TN}
    elif classify(q) is TP:
        assert pair == {TN}


@given(integral_d_triples())
def test_A_images_leave_the_reals(q):
    assert act_A_image(q).has_imaginary_part()
    assert act_A2_image(q).has_imaginary_part()


@given(integral_d_triples())
def test_dc_sign(q):
    assert (classify(q) is AMB) == (d_value(q) * q.c < 0)
