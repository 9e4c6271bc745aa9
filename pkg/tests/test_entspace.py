"""Coordinate conventions, expression arithmetic, and text formats."""

from fractions import Fraction

import pytest

from ingletonlp.entspace import (
    EntropyVector,
    GroundSetError,
    IngletonQuad,
    LinExpr,
    MAX_N,
    MIN_N,
    check_mask,
    check_n,
    cond_entropy_expr,
    cond_mutinfo_expr,
    elements_of,
    evaluate,
    format_expr,
    format_quad,
    format_subset,
    format_vector_pairs,
    full_mask,
    ingleton_expr,
    mask_from_elements,
    parse_expr,
    parse_quad,
    parse_subset,
    project_away,
    project_onto,
    vector_from_text,
    vector_to_text,
    witness_fulldim,
    witness_modular,
)


def popcount(m):
    return bin(m).count("1")


# ---------------------------------------------------------------------------
# ground set and subset coding


def test_ground_set_bounds():
    assert (MIN_N, MAX_N) == (2, 20)
    check_n(2)
    check_n(20)
    for bad in (0, 1, 21, -3):
        with pytest.raises(GroundSetError):
            check_n(bad)


def test_full_mask():
    assert full_mask(2) == 0b11
    assert full_mask(4) == 0b1111


def test_check_mask_rejects_out_of_range():
    check_mask(0, 3)
    check_mask(0b111, 3)
    with pytest.raises(ValueError):
        check_mask(0b1000, 3)
    with pytest.raises(ValueError):
        check_mask(-1, 3)


def test_mask_elements_roundtrip():
    # element k occupies bit k-1
    assert mask_from_elements([1, 3], n=4) == 0b101
    assert elements_of(0b101) == (1, 3)
    assert elements_of(0) == ()
    for m in range(16):
        assert mask_from_elements(elements_of(m), n=4) == m


def test_subset_text_roundtrip():
    assert format_subset(0b101) == "{1,3}"
    assert format_subset(0) == "{}"
    assert parse_subset("{1,3}") == 0b101
    assert parse_subset("{}") == 0
    assert parse_subset("{ 2 , 4 }") == 0b1010
    for m in range(32):
        assert parse_subset(format_subset(m)) == m


def test_parse_subset_rejects_garbage():
    for bad in ("1,3", "{1;3}", "{0}", "{a}"):
        with pytest.raises(ValueError):
            parse_subset(bad)


# ---------------------------------------------------------------------------
# linear expressions


def test_zero_expression():
    z = LinExpr.zero(3)
    assert z.is_zero()
    assert z.terms() == []
    assert format_expr(z) == "0"


def test_single_and_arithmetic():
    a = LinExpr.single(3, 0b1)
    b = LinExpr.single(3, 0b10, Fraction(2))
    s = a + b
    assert dict(s.terms()) == {0b1: 1, 0b10: 2}
    assert (s - s).is_zero()
    assert dict((-a).terms()) == {0b1: -1}
    assert dict((a * Fraction(3, 2)).terms()) == {0b1: Fraction(3, 2)}
    assert dict((Fraction(3, 2) * a).terms()) == {0b1: Fraction(3, 2)}


def test_cancellation_drops_terms():
    a = LinExpr.single(3, 0b11)
    e = a + (-a)
    assert e.is_zero()
    assert e == LinExpr.zero(3)


def test_expressions_hash_by_content():
    e1 = parse_expr("+1*h{1} -2*h{2,3}", 3)
    e2 = LinExpr.single(3, 0b1) - LinExpr.single(3, 0b110, Fraction(2))
    assert e1 == e2
    assert hash(e1) == hash(e2)
    assert len({e1, e2}) == 1


def test_mixed_ground_sets_rejected():
    with pytest.raises(ValueError):
        LinExpr.single(3, 0b1) + LinExpr.single(4, 0b1)


def test_expr_text_roundtrip():
    text = "+3/2*h{1,2} -1*h{3}"
    e = parse_expr(text, 3)
    assert dict(e.terms()) == {0b11: Fraction(3, 2), 0b100: -1}
    assert format_expr(e) == text
    assert parse_expr(format_expr(e), 3) == e


def test_parse_expr_zero_literal():
    assert parse_expr("0", 4).is_zero()


def test_parse_expr_requires_explicit_coefficient():
    # bare h{1} without a coefficient is not part of the grammar
    for bad in ("h{1}", "+h{1}", "-h{2,3}", "1*g{1}", "+1h{1}"):
        with pytest.raises(ValueError):
            parse_expr(bad, 4)


def test_parse_expr_rejects_out_of_range_elements():
    with pytest.raises(ValueError):
        parse_expr("+1*h{4}", 3)


def test_parse_expr_merges_repeated_subsets():
    e = parse_expr("+1*h{1} +2*h{1} -3*h{1}", 3)
    assert e.is_zero()


# ---------------------------------------------------------------------------
# entropy vectors


def test_vector_from_function():
    v = EntropyVector.from_function(3, lambda m: Fraction(popcount(m)))
    assert v[0b1] == 1
    assert v[0b111] == 3
    assert len(list(v.items())) == 7


def test_vector_empty_set_and_range_checks():
    v = witness_modular(3)
    assert v[0] == 0  # h of the empty set
    with pytest.raises(ValueError):
        v[0b1000]


def test_vector_text_roundtrip():
    v = witness_modular(3)
    text = vector_to_text(v)
    assert text == ("n=3\n"
                    "{1}=1 {2}=1 {1,2}=2 {3}=1 {1,3}=2 {2,3}=2 {1,2,3}=3\n")
    w = vector_from_text(text)
    assert w.n == 3
    assert all(w[m] == v[m] for m in range(1, 8))
    assert format_vector_pairs(v) in text


def test_vector_text_fractional_values():
    v = EntropyVector.from_function(2, lambda m: Fraction(popcount(m), 4))
    w = vector_from_text(vector_to_text(v))
    assert w[0b11] == Fraction(1, 2)


def test_vector_from_text_rejects_missing_header():
    with pytest.raises(ValueError):
        vector_from_text("{1}=1 {2}=1 {1,2}=2\n")


# ---------------------------------------------------------------------------
# quads and the ten-term form


def test_quad_accepts_empty_parts():
    q = IngletonQuad(4, 0b1, 0, 0b10, 0b100)
    assert q.masks() == (0b1, 0, 0b10, 0b100)


def test_quad_rejects_out_of_range_mask():
    with pytest.raises(ValueError):
        IngletonQuad(3, 0b1000, 0, 0, 0)


def test_quad_text_roundtrip():
    q = IngletonQuad(4, 0b1, 0b10, 0b100, 0b1000)
    assert format_quad(q) == "{1},{2},{3},{4}"
    assert parse_quad("{1},{2},{3},{4}", 4) == q
    assert parse_quad("{1,2} , {} , {3} , {4}", 4).masks() == (3, 0, 4, 8)
    with pytest.raises(ValueError):
        parse_quad("{1},{2},{3}", 4)


def test_ingleton_expr_singleton_quad():
    q = IngletonQuad(4, 0b1, 0b10, 0b100, 0b1000)
    assert format_expr(ingleton_expr(q)) == (
        "-1*h{1} -1*h{2} +1*h{1,2} +1*h{1,3} +1*h{2,3} -1*h{1,2,3}"
        " +1*h{1,4} +1*h{2,4} -1*h{1,2,4} -1*h{3,4}")


def test_ingleton_expr_drops_empty_set_terms():
    # with a3 empty the h(a3-union) terms collapse onto smaller subsets
    q = IngletonQuad(3, 0b1, 0b10, 0, 0b100)
    e = ingleton_expr(q)
    assert all(mask != 0 for mask, _ in e.terms())
    assert e == cond_mutinfo_expr(3, 0b1, 0b10, 0b100)


def test_ingleton_expr_swap_symmetry():
    q = IngletonQuad(4, 0b11, 0b100, 0b1010, 0b1)
    a1, a2, a3, a4 = q.masks()
    assert ingleton_expr(q) == ingleton_expr(IngletonQuad(4, a2, a1, a3, a4))
    assert ingleton_expr(q) == ingleton_expr(IngletonQuad(4, a1, a2, a4, a3))


# ---------------------------------------------------------------------------
# information-measure building blocks


def test_cond_entropy_on_modular_point():
    # on the size function h(a)=|a| conditional entropy counts new elements
    v = witness_modular(4)
    for alpha in range(1, 16):
        for beta in range(16):
            e = cond_entropy_expr(4, alpha, beta)
            assert evaluate(e, v) == popcount(alpha & ~beta)


def test_cond_mutinfo_on_modular_point():
    v = witness_modular(4)
    for alpha in range(1, 16):
        for beta in range(1, 16):
            for delta in (0, 0b1, 0b1010):
                e = cond_mutinfo_expr(4, alpha, beta, delta)
                assert evaluate(e, v) == popcount(alpha & beta & ~delta)


def test_evaluate_is_linear():
    v = witness_fulldim(3)
    e1 = parse_expr("+1*h{1} -1*h{2,3}", 3)
    e2 = parse_expr("+2*h{1,2} +1*h{3}", 3)
    assert (evaluate(e1 + e2, v)
            == evaluate(e1, v) + evaluate(e2, v))
    assert evaluate(e1 * Fraction(5, 3), v) == Fraction(5, 3) * evaluate(e1, v)


def test_projection_helpers():
    e = parse_expr("+1*h{1,2} -2*h{2,3}", 3)
    onto = project_onto(e, 0b10)  # keep element 2 only
    assert dict(onto.terms()) == {0b10: -1}
    away = project_away(e, 0b10)  # delete element 2
    assert dict(away.terms()) == {0b1: 1, 0b100: -2}


# ---------------------------------------------------------------------------
# named vectors


def test_modular_vector_values():
    v = witness_modular(5)
    for m in range(1, 32):
        assert v[m] == popcount(m)


def test_fulldim_vector_values():
    v = witness_fulldim(4)
    for m in range(1, 16):
        assert v[m] == 2 ** 4 - 2 ** (4 - popcount(m))


def test_fulldim_vector_is_strictly_submodular():
    v = witness_fulldim(3)
    for a in range(1, 8):
        for b in range(1, 8):
            if a & ~b and b & ~a:
                assert v[a] + v[b] > v[a | b] + (v[a & b] if a & b else 0)
