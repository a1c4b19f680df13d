import math
import random

import pytest

from dualstokes import (Dual, DualBox, DualMap, DualVec, EPS, Expr, ExprMap,
                        ONE, ParseError, ZERO, compose, compose_maps, cos,
                        cr_check, eval_dual, eval_enclosure, exp, exprs_equal,
                        is_zero_expr, jacobian, parse_expr, partial_diff,
                        render_expr, sample_points, sin)
from helpers import (point_in_box, random_box, random_expr, random_map,
                     small_point)


# ---------------------------------------------------------------------------
# parsing


def test_parse_numbers_and_atoms():
    assert eval_dual(parse_expr("2", 0), ()) == Dual(2)
    assert eval_dual(parse_expr("2.5e1", 0), ()) == Dual(25)
    assert eval_dual(parse_expr(".5", 0), ()) == Dual(0.5)
    assert eval_dual(parse_expr("eps", 0), ()) == EPS
    assert eval_dual(parse_expr("x1", 1), [Dual(7, 1)]) == Dual(7, 1)


def test_parse_precedence():
    # power binds tighter than unary minus
    assert eval_dual(parse_expr("-x1^2", 1), [Dual(3)]) == Dual(-9)
    assert eval_dual(parse_expr("(-x1)^2", 1), [Dual(3)]) == Dual(9)
    # product binds tighter than sum, left association for minus
    assert eval_dual(parse_expr("1-2-3", 0), ()) == Dual(-4)
    assert eval_dual(parse_expr("2+3*4", 0), ()) == Dual(14)
    assert eval_dual(parse_expr("2*3^2", 0), ()) == Dual(18)
    assert eval_dual(parse_expr("--2", 0), ()) == Dual(2)
    assert eval_dual(parse_expr("2*-3", 0), ()) == Dual(-6)


def test_parse_functions():
    f = parse_expr("exp(x1)+sin(x2)*cos(x1)", 2)
    p = [Dual(0.3), Dual(-0.2)]
    want = math.exp(0.3) + math.sin(-0.2) * math.cos(0.3)
    assert abs(eval_dual(f, p).re - want) < 1e-15


def test_parse_whitespace():
    a = parse_expr(" x1 + 2 * exp( x2 ) ", 2)
    b = parse_expr("x1+2*exp(x2)", 2)
    assert a.node == b.node


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_expr("x1 + $", 1)
    assert err.value.position == 5
    with pytest.raises(ParseError):
        parse_expr("x3", 2)  # arity too small
    with pytest.raises(ParseError):
        parse_expr("y1", 1)
    with pytest.raises(ParseError):
        parse_expr("x1^-2", 1)  # exponents must be unsigned integers
    with pytest.raises(ParseError):
        parse_expr("x1^2.5", 1)
    with pytest.raises(ParseError):
        parse_expr("(x1+1", 1)
    with pytest.raises(ParseError):
        parse_expr("x1 x2", 2)
    with pytest.raises(ParseError):
        parse_expr("", 0)
    with pytest.raises(ParseError):
        parse_expr("sin x1", 1)
    with pytest.raises(ParseError):
        parse_expr("x0", 1)  # variables are 1-based


def test_parse_x_index_zero_padding():
    # UINT admits leading zeros, so "x01" is an alias for "x1"
    assert parse_expr("x01", 5).node == parse_expr("x1", 5).node
    assert eval_dual(parse_expr("x1^02", 1), [Dual(3)]) == Dual(9)


# ---------------------------------------------------------------------------
# evaluation semantics


def test_lifted_primitives():
    x = Dual(0.7, 2.5)
    f = parse_expr("exp(x1)", 1)
    got = eval_dual(f, [x])
    assert abs(got.re - math.exp(0.7)) < 1e-15
    assert abs(got.ze - 2.5 * math.exp(0.7)) < 1e-15
    g = parse_expr("sin(x1)", 1)
    got = eval_dual(g, [x])
    assert abs(got.re - math.sin(0.7)) < 1e-15
    assert abs(got.ze - 2.5 * math.cos(0.7)) < 1e-15
    h = parse_expr("cos(x1)", 1)
    got = eval_dual(h, [x])
    assert abs(got.re - math.cos(0.7)) < 1e-15
    assert abs(got.ze + 2.5 * math.sin(0.7)) < 1e-15


def test_polynomial_on_duals():
    f = parse_expr("x1^2*x2 - 3*x1 + eps", 2)
    x = Dual(2, 1)
    y = Dual(-1, 2)
    want = x * x * y - 3 * x + EPS
    assert eval_dual(f, [x, y]) == want


def test_eval_arity_mismatch():
    f = parse_expr("x1", 1)
    with pytest.raises(ValueError):
        eval_dual(f, [Dual(1), Dual(2)])
    with pytest.raises(ValueError):
        eval_dual(f, [])


def test_expr_operators_match_eval():
    rng = random.Random(11)
    x = Expr.variable(0, 2)
    y = Expr.variable(1, 2)
    f = (x + 2) * y - x ** 3 + sin(y) * 0.5
    for _ in range(20):
        p = small_point(rng, 2)
        a, b = p
        want = (a + 2) * b - a ** 3 + _sin_dual(b) * 0.5
        got = eval_dual(f, p)
        assert abs(got.re - want.re) < 1e-12
        assert abs(got.ze - want.ze) < 1e-12


def _sin_dual(x: Dual) -> Dual:
    return Dual(math.sin(x.re), x.ze * math.cos(x.re))


def test_constant_folding_and_identities():
    assert is_zero_expr(parse_expr("2-2", 0))
    assert is_zero_expr(parse_expr("0*x1", 1))
    assert parse_expr("1*x1", 1).node == parse_expr("x1", 1).node
    assert parse_expr("x1+0", 1).node == parse_expr("x1", 1).node
    assert parse_expr("x1^0", 1).node == parse_expr("1", 1).node
    assert render_expr(parse_expr("2*3", 0)) == "6.0"
    assert render_expr(parse_expr("exp(0)", 0)) == "1.0"
    # folding does not dig into non-constant structure
    f = parse_expr("x1-x1", 1)
    assert not is_zero_expr(f)
    assert exprs_equal(f, Expr.constant(0.0, 1))


def test_arity_validation():
    with pytest.raises(ValueError):
        Expr.variable(2, 2)
    with pytest.raises(ValueError):
        parse_expr("x1", 1) + parse_expr("x1", 2)
    assert (parse_expr("x1", 3) + 1).arity == 3


# ---------------------------------------------------------------------------
# rendering


def test_render_fixed_cases():
    cases = [
        ("-x1^2", "-x1^2"),
        ("-(x1*x2)", "-(x1*x2)"),
        ("(x1+x2)*x3", "(x1+x2)*x3"),
        ("x1-(x2-x3)", "x1-(x2-x3)"),
        ("x1-x2-x3", "x1-x2-x3"),
        ("(x1+x2)^2", "(x1+x2)^2"),
        ("sin(x1)*cos(x2)", "sin(x1)*cos(x2)"),
    ]
    for text, want in cases:
        assert render_expr(parse_expr(text, 3)) == want


def test_render_round_trip_random():
    rng = random.Random(77)
    for _ in range(300):
        arity = rng.randint(0, 3)
        f = random_expr(rng, arity, depth=4)
        back = parse_expr(render_expr(f), arity)
        assert back.node == f.node, render_expr(f)


def test_render_negative_constants_round_trip():
    # tricky constant placements: negative reals, eps multiples
    for text in ("x1*(0.0-2.0*eps)", "-2.0+x1", "x1^2*(-3.0)", "eps*x1",
                 "(2.0-1.0*eps)*x1", "-(2.0+1.0*eps)"):
        f = parse_expr(text, 1)
        assert parse_expr(render_expr(f), 1).node == f.node


# ---------------------------------------------------------------------------
# differentiation


def test_partial_diff_fixed():
    f = parse_expr("x1^3*x2", 2)
    fx = partial_diff(f, 0)
    fy = partial_diff(f, 1)
    p = [Dual(2, 1), Dual(3, -1)]
    assert eval_dual(fx, p) == Dual(3) * (p[0] ** 2) * p[1]
    assert eval_dual(fy, p) == p[0] ** 3
    assert is_zero_expr(partial_diff(parse_expr("x2", 2), 0))
    with pytest.raises(ValueError):
        partial_diff(f, 2)


def test_partial_diff_primitives():
    f = parse_expr("exp(x1^2)", 1)
    df = partial_diff(f, 0)
    x = Dual(0.4, 0.3)
    want = Dual(2) * x * _exp_dual(x * x)
    got = eval_dual(df, [x])
    assert abs(got.re - want.re) < 1e-14
    assert abs(got.ze - want.ze) < 1e-14


def _exp_dual(x: Dual) -> Dual:
    e = math.exp(x.re)
    return Dual(e, x.ze * e)


def test_derivative_matches_finite_differences():
    rng = random.Random(42)
    h = 1e-6
    for _ in range(60):
        arity = rng.randint(1, 3)
        f = random_expr(rng, arity, depth=2)
        p = small_point(rng, arity, scale=0.6)
        for i in range(arity):
            d = eval_dual(partial_diff(f, i), p)
            hi = list(p)
            lo = list(p)
            hi[i] = Dual(p[i].re + h, p[i].ze)
            lo[i] = Dual(p[i].re - h, p[i].ze)
            fd_re = (eval_dual(f, hi).re - eval_dual(f, lo).re) / (2 * h)
            fd_ze = (eval_dual(f, hi).ze - eval_dual(f, lo).ze) / (2 * h)
            assert abs(fd_re - d.re) < 1e-5
            assert abs(fd_ze - d.ze) < 1e-5


# ---------------------------------------------------------------------------
# composition


def test_compose_fixed():
    f = parse_expr("x1^2+x2", 2)
    g1 = parse_expr("x1*x2", 2)
    g2 = parse_expr("x1-x2", 2)
    h = compose(f, [g1, g2])
    p = [Dual(2, 1), Dual(3, 0)]
    assert eval_dual(h, p) == eval_dual(g1, p) ** 2 + eval_dual(g2, p)


def test_compose_random():
    rng = random.Random(5)
    for _ in range(50):
        outer_arity = rng.randint(1, 3)
        inner_arity = rng.randint(1, 3)
        f = random_expr(rng, outer_arity, depth=2)
        gs = [random_expr(rng, inner_arity, depth=2)
              for _ in range(outer_arity)]
        p = small_point(rng, inner_arity, scale=0.5)
        direct = eval_dual(f, [eval_dual(g, p) for g in gs])
        composed = eval_dual(compose(f, gs), p)
        assert abs(direct.re - composed.re) < 1e-9
        assert abs(direct.ze - composed.ze) < 1e-9


def test_compose_validation():
    f = parse_expr("x1+x2", 2)
    with pytest.raises(ValueError):
        compose(f, [parse_expr("x1", 1)])
    with pytest.raises(ValueError):
        compose(f, [parse_expr("x1", 1), parse_expr("x1", 2)])


# ---------------------------------------------------------------------------
# enclosures


def test_enclosure_fixed():
    f = parse_expr("x1^2", 1)
    box = eval_enclosure(f, [DualBox(-1.0, 2.0, 0.0, 1.0)])
    # even power over a zero-crossing interval
    assert box.re_lo == 0.0
    assert box.re_hi == 4.0
    g = parse_expr("sin(x1)", 1)
    wide = eval_enclosure(g, [DualBox(0.0, 10.0, 0.0, 0.0)])
    assert wide.re_lo == -1.0 and wide.re_hi == 1.0
    narrow = eval_enclosure(g, [DualBox(0.1, 0.2, 0.0, 0.0)])
    assert abs(narrow.re_lo - math.sin(0.1)) < 1e-15
    assert abs(narrow.re_hi - math.sin(0.2)) < 1e-15
    # maximum of sine sits inside this window
    peak = eval_enclosure(g, [DualBox(1.0, 2.0, 0.0, 0.0)])
    assert peak.re_hi == 1.0


def test_enclosure_contains_samples():
    rng = random.Random(99)
    for _ in range(150):
        arity = rng.randint(1, 2)
        f = random_expr(rng, arity, depth=3)
        boxes = [random_box(rng) for _ in range(arity)]
        enc = eval_enclosure(f, boxes)
        for _ in range(12):
            p = [point_in_box(rng, b) for b in boxes]
            v = eval_dual(f, p)
            assert enc.contains(v, tol=1e-9 * (1 + abs(v.re) + abs(v.ze)))


def test_enclosure_point_box_is_tight_for_polynomials():
    rng = random.Random(7)
    for _ in range(40):
        f = random_expr(rng, 2, depth=2, prims=False)
        p = small_point(rng, 2)
        boxes = [DualBox.point(c) for c in p]
        enc = eval_enclosure(f, boxes)
        v = eval_dual(f, p)
        assert abs(enc.re_lo - v.re) < 1e-9 and abs(enc.re_hi - v.re) < 1e-9
        assert abs(enc.ze_lo - v.ze) < 1e-9 and abs(enc.ze_hi - v.ze) < 1e-9


def test_box_validation():
    with pytest.raises(ValueError):
        DualBox(1.0, 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        DualBox(0.0, 1.0, 1.0, 0.0)
    b = DualBox(0.0, 1.0, -1.0, 1.0)
    assert b.width_re == 1.0 and b.width_ze == 2.0
    assert b.contains(Dual(0.5, 0.0))
    assert not b.contains(Dual(1.5, 0.0))


# ---------------------------------------------------------------------------
# equality on the sample grid


def test_sample_points_fixed():
    assert sample_points(2) == sample_points(2)
    assert len(sample_points(3)) == 16
    assert all(len(p) == 3 for p in sample_points(3))
    assert sample_points(0) == ((),) * 16


def test_exprs_equal():
    a = parse_expr("(x1+x2)^2", 2)
    b = parse_expr("x1^2+2*x1*x2+x2^2", 2)
    assert exprs_equal(a, b)
    assert not exprs_equal(a, parse_expr("x1^2+x2^2", 2))
    assert not exprs_equal(parse_expr("x1", 1), parse_expr("x1", 2))


# ---------------------------------------------------------------------------
# maps, jacobians, block structure


def test_expr_map_basics():
    m = ExprMap((parse_expr("x1*x2", 2), parse_expr("x1+x2", 2)))
    assert m.arity == 2 and m.dim_out == 2
    got = m.eval([Dual(2, 1), Dual(3, 0)])
    assert got == DualVec([Dual(6, 3), Dual(5, 1)])
    ident = ExprMap.identity(3)
    p = [Dual(1, 2), Dual(3), Dual(0, 1)]
    assert ident.eval(p) == DualVec(p)
    with pytest.raises(ValueError):
        ExprMap((parse_expr("x1", 1), parse_expr("x1", 2)))
    with pytest.raises(ValueError):
        ExprMap(())


def test_expr_map_compose():
    f = ExprMap((parse_expr("x1^2", 1),))
    g = ExprMap((parse_expr("x1+x2", 2),))
    h = f.compose(g)
    assert h.arity == 2
    assert h.eval([Dual(1), Dual(2)]) == DualVec([Dual(9)])
    with pytest.raises(ValueError):
        g.compose(f)  # 1 output feeding a 2-input map


def test_jacobian_fixed():
    m = ExprMap((parse_expr("x1*x2", 2), parse_expr("x1^2", 2)))
    p = [Dual(2, 1), Dual(5, -1)]
    jac = jacobian(m, p)
    assert jac.rows == 2 and jac.cols == 2
    assert jac.entries[0][0] == p[1]
    assert jac.entries[0][1] == p[0]
    assert jac.entries[1][0] == Dual(2) * p[0]
    assert jac.entries[1][1] == ZERO


def test_dual_map_operations():
    m = DualMap(((Dual(1, 1), Dual(2)), (ZERO, Dual(0, 1))))
    v = DualVec([Dual(1, 0), Dual(0, 1)])
    assert m.apply(v) == DualVec([Dual(1, 3), ZERO])
    ident = DualMap.identity(2)
    assert ident.apply(v) == v
    assert (m + m).entries[0][0] == Dual(2, 2)
    assert m.scale(2).entries[0][1] == Dual(4)
    with pytest.raises(ValueError):
        m.apply(DualVec([ONE]))
    with pytest.raises(ValueError):
        DualMap(((ONE,), (ONE, ZERO)))


def test_compose_maps_is_chain_rule():
    rng = random.Random(13)
    for _ in range(40):
        a = rng.randint(1, 3)
        b = rng.randint(1, 3)
        c = rng.randint(1, 3)
        inner = random_map(rng, a, b, depth=2)
        outer = random_map(rng, b, c, depth=2)
        p = small_point(rng, a, scale=0.5)
        whole = jacobian(outer.compose(inner), p)
        pieces = compose_maps(jacobian(outer, inner.eval(p)),
                              jacobian(inner, p))
        for i in range(c):
            for j in range(a):
                d1 = whole.entries[i][j]
                d2 = pieces.entries[i][j]
                assert abs(d1.re - d2.re) < 1e-9
                assert abs(d1.ze - d2.ze) < 1e-9


def test_compose_maps_validation():
    with pytest.raises(ValueError):
        compose_maps(DualMap.identity(2), DualMap(((ONE, ONE, ONE),)))


def test_cr_check_accepts_smooth_maps():
    rng = random.Random(21)
    for _ in range(25):
        arity = rng.randint(1, 2)
        m = random_map(rng, arity, rng.randint(1, 2), depth=2)
        p = small_point(rng, arity, scale=0.5)
        assert cr_check(m, p) < 1e-5


def test_cr_check_validation():
    m = ExprMap((parse_expr("x1", 1),))
    with pytest.raises(ValueError):
        cr_check(m, [Dual(0)], h=0.0)
    with pytest.raises(ValueError):
        cr_check(m, [Dual(0), Dual(1)])


def test_module_functions_wrap_nodes():
    f = Expr.variable(0, 1)
    assert exprs_equal(exp(f), parse_expr("exp(x1)", 1))
    assert exprs_equal(sin(f), parse_expr("sin(x1)", 1))
    assert exprs_equal(cos(f), parse_expr("cos(x1)", 1))
