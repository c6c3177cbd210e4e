"""Exact arithmetic layer: polynomials, Sturm isolation, number fields."""

import random
from fractions import Fraction as F

import pytest

from bssvm.errors import BssError, PoleError
from bssvm.exact import (
    AlgebraicNumber,
    MultiPoly,
    NumberField,
    QQ,
    RatInterval,
    RationalFunction,
    UniPoly,
    algebraic_equal,
    count_roots_open,
    degree_over_q,
    eval_unipoly_interval,
    format_rational,
    interval_eval,
    minimal_polynomial,
    mp_gcd,
    nth_root_field,
    parse_rational,
    poly_ext_gcd,
    rf_eval,
    sign_at,
    sign_variations,
    sturm_chain,
    sturm_isolate,
    unipoly_from_roots,
)


@pytest.fixture(scope="module")
def sqrt2_field():
    field, root = nth_root_field(2, 2)
    return field, root


@pytest.fixture(scope="module")
def fifth_root_field():
    field, root = nth_root_field(2, 5)
    return field, root


# -- rationals ---------------------------------------------------------------

def test_rational_parse_format_round_trip():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-6/8") == F(-3, 4)
    assert parse_rational("7") == F(7)
    assert format_rational(F(3, 4)) == "3/4"
    assert format_rational(F(5)) == "5"
    assert format_rational(F(-1, 2)) == "-1/2"


def test_rational_parse_rejects_garbage():
    with pytest.raises(BssError):
        parse_rational("1/0")
    with pytest.raises(BssError):
        parse_rational("two")


# -- univariate polynomials --------------------------------------------------

def test_unipoly_str_is_dense_ascending():
    assert str(UniPoly([-2, 0, 1])) == "-2 + 0*X + 1*X^2"
    assert str(UniPoly([F(1, 2), -1])) == "1/2 - 1*X"
    assert str(UniPoly.zero()) == "0"


def test_unipoly_pretty_is_sparse_descending():
    assert UniPoly([-2, 0, 1]).pretty() == "X^2 - 2"
    assert UniPoly([F(1, 2), -1]).pretty() == "-X + 1/2"
    assert UniPoly.zero().pretty() == "0"


def test_unipoly_parse_round_trips_both_forms():
    rng = random.Random(11)
    for _ in range(200):
        coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9))
                  for _ in range(rng.randint(0, 6))]
        p = UniPoly(coeffs)
        assert UniPoly.parse(str(p)) == p
        assert UniPoly.parse(p.pretty()) == p


def test_unipoly_parse_rejects_malformed():
    for bad in ["", "X^-1", "X**2", "2X"]:
        with pytest.raises(BssError):
            UniPoly.parse(bad)


def test_unipoly_divmod_and_gcd():
    p = UniPoly([-2, 0, 1]) * UniPoly([1, 1])
    q, r = p.divmod(UniPoly([1, 1]))
    assert r.is_zero() and q == UniPoly([-2, 0, 1])
    g = p.gcd(UniPoly([1, 1]))
    assert g == UniPoly([1, 1]).monic()


def test_poly_ext_gcd_bezout_identity():
    a = UniPoly([-2, 0, 1])
    b = UniPoly([1, 1])
    g, s, t = poly_ext_gcd(a, b)
    assert s * a + t * b == g
    assert g.is_monic()


def test_unipoly_from_roots():
    p = unipoly_from_roots([F(1, 2), F(1)])
    assert p.eval_fraction(F(1, 2)) == 0 and p.eval_fraction(F(1)) == 0
    assert p.degree == 2 and p.is_monic()


# -- Sturm isolation ---------------------------------------------------------

def test_sturm_chain_of_x_squared_minus_2():
    chain = sturm_chain(UniPoly([-2, 0, 1]))
    assert chain == [UniPoly([-2, 0, 1]), UniPoly([0, 2]), UniPoly([2])]
    assert sign_variations(chain, F(-2)) == 2
    assert sign_variations(chain, F(0)) == 1
    assert sign_variations(chain, F(2)) == 0


def test_sturm_isolate_no_real_roots():
    assert sturm_isolate(UniPoly([1, 0, 1])) == []


def test_sturm_isolate_single_root_at_zero():
    intervals = sturm_isolate(UniPoly([0, 1]))
    assert len(intervals) == 1
    lo, hi = intervals[0]
    assert lo <= 0 <= hi


def test_sturm_isolate_x_squared_minus_2():
    p = UniPoly([-2, 0, 1])
    intervals = sturm_isolate(p)
    assert len(intervals) == 2
    for lo, hi in intervals:
        assert count_roots_open(p, lo, hi) == 1
    (l1, h1), (l2, h2) = sorted(intervals)
    assert h1 <= 0 <= l2  # one negative root, one positive


def test_sturm_isolate_interval_counts_are_one():
    # every returned interval holds exactly one root, checked by Sturm count
    rng = random.Random(5)
    for _ in range(40):
        roots = sorted({F(rng.randint(-8, 8), rng.randint(1, 4))
                        for _ in range(rng.randint(1, 4))})
        p = unipoly_from_roots(roots)
        intervals = sturm_isolate(p)
        assert len(intervals) == len(roots)
        for (lo, hi), r in zip(sorted(intervals), roots):
            assert count_roots_open(p, lo, hi) == 1
            assert lo < r < hi or lo == hi == r


# -- sign determination ------------------------------------------------------

def test_sign_at_zero_coords_is_zero(sqrt2_field):
    field, _ = sqrt2_field
    assert sign_at(AlgebraicNumber(field, (F(0), F(0)))) == 0


def test_sign_at_alpha_minus_7_5_is_positive(sqrt2_field):
    _, alpha = sqrt2_field
    assert sign_at(alpha - F(7, 5)) == 1


def test_sign_at_alpha_squared_minus_2_is_zero(sqrt2_field):
    _, alpha = sqrt2_field
    assert sign_at(alpha * alpha - 2) == 0


def test_sign_at_rational_inputs():
    assert sign_at(F(-3, 7)) == -1
    assert sign_at(F(0)) == 0
    assert sign_at(F(5)) == 1


# -- field arithmetic --------------------------------------------------------

def test_alpha_times_alpha_is_2(sqrt2_field):
    _, alpha = sqrt2_field
    assert algebraic_equal(alpha * alpha, F(2))


def test_rational_addition_in_field():
    assert F(2, 3) + F(1, 6) == F(5, 6)


def test_inverse_of_one_plus_alpha(sqrt2_field):
    _, alpha = sqrt2_field
    inv = (alpha + 1).inverse()
    assert algebraic_equal(inv, alpha - 1)
    assert algebraic_equal(F(1) / (alpha + 1), alpha - 1)


def test_division_by_zero_element_raises(sqrt2_field):
    field, alpha = sqrt2_field
    zero = field.from_rational(0)
    with pytest.raises(PoleError):
        alpha / zero
    with pytest.raises(PoleError):
        zero.inverse()


def test_field_axioms_on_random_triples(sqrt2_field):
    _, alpha = sqrt2_field
    rng = random.Random(23)

    def rand_elem():
        return alpha * F(rng.randint(-5, 5), rng.randint(1, 5)) + \
            F(rng.randint(-5, 5), rng.randint(1, 5))

    for _ in range(25):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert algebraic_equal((a + b) + c, a + (b + c))
        assert algebraic_equal((a * b) * c, a * (b * c))
        assert algebraic_equal(a * (b + c), a * b + a * c)
        if sign_at(a) != 0:
            assert algebraic_equal(a * a.inverse(), F(1))


def test_pow_matches_repeated_multiplication(sqrt2_field):
    _, alpha = sqrt2_field
    x = alpha + F(1, 2)
    assert algebraic_equal(x ** 3, x * x * x)
    assert algebraic_equal(x ** 0, F(1))


# -- minimal polynomials and degrees ----------------------------------------

def test_minimal_polynomial_of_rational():
    assert minimal_polynomial(QQ.from_rational(F(1, 2))) == UniPoly([F(-1, 2), 1])


def test_minimal_polynomial_of_alpha_plus_1(sqrt2_field):
    _, alpha = sqrt2_field
    assert minimal_polynomial(alpha + 1) == UniPoly([-1, -2, 1])


def test_minimal_polynomial_of_alpha_squared(sqrt2_field):
    _, alpha = sqrt2_field
    assert minimal_polynomial(alpha * alpha) == UniPoly([-2, 1])


def test_minimal_polynomial_vanishes_and_degree_divides(fifth_root_field):
    field, root = fifth_root_field
    rng = random.Random(31)
    for _ in range(10):
        coords = tuple(F(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(5))
        a = AlgebraicNumber(field, coords)
        mp = minimal_polynomial(a)
        assert algebraic_equal(mp.eval(a), F(0))
        assert field.degree % mp.degree == 0


def test_degree_over_q():
    assert degree_over_q(F(7, 3)) == 1
    _, sqrt2 = nth_root_field(2, 2)
    assert degree_over_q(sqrt2) == 2
    _, fifth = nth_root_field(2, 5)
    assert degree_over_q(fifth) == 5


# -- root fields -------------------------------------------------------------

def test_nth_root_field_perfect_square():
    field, e = nth_root_field(4, 2)
    assert field.degree == 1 and algebraic_equal(e, F(2))


def test_nth_root_field_perfect_cube():
    field, e = nth_root_field(F(8, 27), 3)
    assert field.degree == 1 and algebraic_equal(e, F(2, 3))


def test_nth_root_field_fifth_root_of_2():
    field, e = nth_root_field(2, 5)
    assert field.min_poly == UniPoly([-2, 0, 0, 0, 0, 1])
    assert F(1) <= field.interval.lo and field.interval.hi <= F(2)
    assert algebraic_equal(e ** 5, F(2))


def test_nth_root_field_rejects_composite_degree():
    with pytest.raises(BssError):
        nth_root_field(2, 6)


def test_nth_root_field_root_property():
    rng = random.Random(41)
    for _ in range(10):
        c = F(rng.randint(2, 30), rng.randint(1, 6))
        m = rng.choice([2, 3, 5, 7])
        field, e = nth_root_field(c, m)
        assert algebraic_equal(e ** m, c)
        if field.degree > 1:
            assert degree_over_q(e) == m


def test_nth_root_field_rejects_negative_radicand():
    with pytest.raises(BssError):
        nth_root_field(-2, 2)


# -- enclosures and the refinement loop --------------------------------------

def test_enclosure_narrows_to_requested_width(sqrt2_field):
    _, alpha = sqrt2_field
    box = (alpha + 1).enclosure(F(1, 10 ** 12))
    assert box.width() <= F(1, 10 ** 12)
    # 1 + sqrt2 = 2.41421356...
    assert box.lo < F(24143, 10000) and box.hi > F(24142, 10000)


def test_sign_agrees_with_narrow_enclosure():
    # 100-digit refinement never contradicts the exact sign
    hundred = F(1, 10 ** 100)
    rng = random.Random(47)
    for c, m in [(2, 2), (2, 5)]:
        field, _ = nth_root_field(c, m)
        for _ in range(50):
            coords = tuple(F(rng.randint(-6, 6), rng.randint(1, 6))
                           for _ in range(field.degree))
            a = AlgebraicNumber(field, coords)
            s = sign_at(a)
            box = a.enclosure(hundred)
            if s != 0:
                assert box.sign() == s
            else:
                assert box.contains_zero()


# -- interval arithmetic -----------------------------------------------------

def test_interval_eval_constant():
    box = interval_eval(MultiPoly.constant(3, 1), [RatInterval(0, 1)])
    assert box.lo == 3 and box.hi == 3


def test_interval_eval_sum_of_vars():
    p = MultiPoly.var(0, 2) + MultiPoly.var(1, 2)
    box = interval_eval(p, [RatInterval(0, 1), RatInterval(0, 1)])
    assert box.lo == 0 and box.hi == 2


def test_interval_eval_y_squared_minus_2():
    p = MultiPoly.var(0, 1) * MultiPoly.var(0, 1) - MultiPoly.constant(2, 1)
    box = interval_eval(p, [RatInterval(F(7, 5), F(3, 2))])
    assert box.lo <= F(-1, 25) and box.hi >= F(1, 4)


def test_interval_eval_soundness_on_samples():
    rng = random.Random(53)
    for _ in range(100):
        nvars = rng.choice([1, 2])
        p = MultiPoly.constant(0, nvars)
        for _ in range(rng.randint(1, 4)):
            term = MultiPoly.constant(F(rng.randint(-5, 5), rng.randint(1, 4)), nvars)
            for v in range(nvars):
                term = term * MultiPoly.var(v, nvars) ** rng.randint(0, 3)
            p = p + term
        boxes = []
        for _ in range(nvars):
            lo = F(rng.randint(-12, 12), rng.randint(1, 6))
            boxes.append(RatInterval(lo, lo + F(rng.randint(0, 8), rng.randint(1, 4))))
        enc = interval_eval(p, boxes)
        for _ in range(10):
            point = []
            for b in boxes:
                t = F(rng.randint(0, 16), 16)
                point.append(b.lo + (b.hi - b.lo) * t)
            v = p.eval(tuple(point))
            assert enc.lo <= v <= enc.hi


def test_eval_unipoly_interval_exact_power_handling():
    # [-1, 2]^2 must include 0, not [1, 4]
    box = eval_unipoly_interval([F(0), F(0), F(1)], RatInterval(-1, 2))
    assert box.lo <= 0 and box.hi >= 4


# -- rational functions ------------------------------------------------------

def test_rf_eval_projection():
    y = RationalFunction.var(0, 1)
    assert rf_eval(y, (F(5),)) == F(5)


def test_rf_eval_moebius_at_3():
    y = RationalFunction.var(0, 1)
    one = RationalFunction.constant(1, 1)
    f = (y - one) / (y + one)
    assert rf_eval(f, (F(3),)) == F(1, 2)


def test_rf_eval_product_on_sqrt2(sqrt2_field):
    _, alpha = sqrt2_field
    f = RationalFunction.var(0, 2) * RationalFunction.var(1, 2)
    v = rf_eval(f, (alpha, alpha + 1))
    assert algebraic_equal(v, alpha + 2)
    assert v.coords == (F(2), F(1))


def test_rf_eval_pole_raises():
    y = RationalFunction.var(0, 1)
    one = RationalFunction.constant(1, 1)
    f = one / (y - one)
    with pytest.raises(PoleError):
        rf_eval(f, (F(1),))


def test_rational_function_canonical_form():
    y = RationalFunction.var(0, 1)
    one = RationalFunction.constant(1, 1)
    f = (y * y - one) / (y - one)
    assert f.is_polynomial()
    assert f == y + one
    g = (y + one) / (y + y)  # denominator gets leading coefficient 1
    assert g.den.leading_term()[1] == 1


def test_rational_function_zero_denominator_rejected():
    y = RationalFunction.var(0, 1)
    with pytest.raises(PoleError):
        y / RationalFunction.constant(0, 1)


def test_mp_gcd_shared_factor():
    y1 = MultiPoly.var(0, 2)
    y2 = MultiPoly.var(1, 2)
    common = y1 + y2
    a = common * (y1 - y2)
    b = common * common
    g = mp_gcd(a, b)
    # gcd is exact up to a constant; normalize by checking divisibility both ways
    assert not g.is_constant()
    assert g.degree_in(0) == 1 and g.degree_in(1) == 1
