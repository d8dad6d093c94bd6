"""Expression/point parsing and the canonical printers."""

from fractions import Fraction
from random import Random

import pytest

from halfsphere.algebra import NCPoly, pi
from halfsphere.errors import DimensionError, MixedAlphabetError, ParseError
from halfsphere.parsing import (
    format_ncpoly,
    format_pexpr,
    format_point,
    format_scalar,
    format_zpoly,
    parse_expr,
    parse_point,
)
from halfsphere.projective import PExpr
from halfsphere.scalars import EC_ONE, ExactComplex


def ec(a, b=0):
    return ExactComplex(Fraction(a), Fraction(b))


# -- parsing -------------------------------------------------------------


def test_parse_v_expression():
    r = parse_expr("v1*v2*v3 - v3*v2*v1", 3)
    assert r.kind == "v"
    assert len(r.as_nc().terms) == 2
    assert pi(r.as_nc()).is_zero()


def test_parse_p_expression():
    r = parse_expr("p12 - p21", 2)
    assert r.kind == "p"
    assert r.as_p() == PExpr.generator(2, 1, 2) - PExpr.generator(2, 2, 1)


def test_parse_const_works_both_ways():
    r = parse_expr("3/5 - 1", 2)
    assert r.kind == "const"
    assert r.as_nc() == NCPoly.constant(2, ec(Fraction(-2, 5)))
    assert r.as_p() == PExpr.constant(2, ec(Fraction(-2, 5)))


def test_mixed_alphabet_rejected():
    with pytest.raises(MixedAlphabetError):
        parse_expr("v1 + p11", 2)


def test_scalar_literals():
    cases = {
        "2v1": ec(2),
        "-v1": ec(-1),
        "i*v1": ec(0, 1),
        "4/5i*v1": ec(0, Fraction(4, 5)),
        "3/5+4/5i v1": ExactComplex(Fraction(3, 5), Fraction(4, 5)),
    }
    for text, coeff in cases.items():
        poly = parse_expr(text, 2).as_nc()
        assert poly == coeff * NCPoly.generator(2, 1), text


def test_star_is_not_grammar():
    # '*' is optional between factors
    a = parse_expr("v1v2", 2).as_nc()
    b = parse_expr("v1 * v2", 2).as_nc()
    assert a == b


def test_power_and_parens():
    sq = parse_expr("(v1 + v2)^2", 2).as_nc()
    v1, v2 = NCPoly.generator(2, 1), NCPoly.generator(2, 2)
    assert sq == (v1 + v2) * (v1 + v2)


def test_long_projective_indices():
    r = parse_expr("p(10,3)", 12)
    assert r.as_p() == PExpr.generator(12, 10, 3)


def test_index_out_of_range():
    with pytest.raises(ParseError):
        parse_expr("v4", 3)
    with pytest.raises(ParseError):
        parse_expr("p13", 2)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_expr("v1 + ?", 2)
    assert err.value.position is not None


def test_empty_input_rejected():
    with pytest.raises(ParseError):
        parse_expr("", 2)
    with pytest.raises(ParseError):
        parse_expr("v1 +", 2)


# -- points --------------------------------------------------------------


def test_parse_point_exact():
    z = parse_point("3/5+0i,0+4/5i", 2)
    assert z.exact
    assert z.coords[0] == ec(Fraction(3, 5))
    assert z.coords[1] == ec(0, Fraction(4, 5))


def test_parse_point_shorthand():
    z = parse_point("1,0", 2)
    assert z.exact and z.coords[0] == EC_ONE


def test_parse_point_decimal_forces_float():
    z = parse_point("0.6,0.8", 2)
    assert not z.exact


def test_parse_point_mode_approx_forces_float():
    z = parse_point("3/5,4/5", 2, mode="approx")
    assert not z.exact


def test_parse_point_wrong_arity():
    with pytest.raises(DimensionError):
        parse_point("1,0", 3)


def test_parse_point_rejects_garbage():
    with pytest.raises(ParseError):
        parse_point("1,spam", 2)


# -- printers and round trips ---------------------------------------------


def test_format_scalar_canonical():
    assert format_scalar(ec(Fraction(3, 5))) == "3/5"
    assert format_scalar(ec(0, 1)) == "i"
    assert format_scalar(ec(0, Fraction(-4, 5))) == "-4/5i"
    assert format_scalar(ExactComplex(Fraction(3, 5), Fraction(4, 5))) == "3/5+4/5i"


def test_format_ncpoly_runs():
    n = 2
    v1, v2 = NCPoly.generator(n, 1), NCPoly.generator(n, 2)
    assert format_ncpoly(v1 * v1 * v2) == "v1^2*v2"
    assert format_ncpoly(NCPoly.zero(n)) == "0"


def test_format_zpoly_conjugates():
    x = pi(NCPoly.from_word(2, (1, 2)))
    assert format_zpoly(x.f0) == "z1*z2~"


def test_format_pexpr():
    x = PExpr.generator(2, 1, 2) - PExpr.generator(2, 2, 1)
    assert format_pexpr(x) in ("p12 - p21", "-p21 + p12")


def test_format_point_full_form():
    z = parse_point("3/5+0i,0+4/5i", 2)
    assert format_point(z) == "3/5+0i,0+4/5i"


def _random_ncpoly(rng, n):
    out = NCPoly.zero(n)
    for _ in range(rng.randint(1, 3)):
        w = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 4)))
        c = ExactComplex(
            Fraction(rng.randint(-3, 3), rng.randint(1, 4)),
            Fraction(rng.randint(-3, 3), rng.randint(1, 4)),
        )
        out = out + NCPoly.from_word(n, w, c)
    return out


def test_print_parse_round_trip_ncpoly():
    rng = Random(13)
    for _ in range(50):
        n = rng.choice([2, 3])
        poly = _random_ncpoly(rng, n)
        text = format_ncpoly(poly)
        back = parse_expr(text, n)
        assert back.as_nc() == poly, text


def test_print_parse_round_trip_pexpr():
    rng = Random(17)
    for _ in range(50):
        n = rng.choice([2, 3])
        expr = PExpr.zero(n)
        for _ in range(rng.randint(1, 3)):
            seq = tuple(
                sorted(
                    (rng.randint(1, n), rng.randint(1, n))
                    for _ in range(rng.randint(0, 3))
                )
            )
            c = ExactComplex(
                Fraction(rng.randint(-3, 3), rng.randint(1, 4)),
                Fraction(rng.randint(-3, 3), rng.randint(1, 4)),
            )
            expr = expr + PExpr(n, {seq: c})
        text = format_pexpr(expr)
        back = parse_expr(text, n)
        assert back.as_p() == expr, text


def test_point_print_parse_round_trip():
    rng = Random(19)
    from halfsphere.representations import sample_regular_point

    for _ in range(10):
        z = sample_regular_point(3, rng)
        assert parse_point(format_point(z), 3) == z
