import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_array_equal

from rotmorse.critical import (
    critical_value,
    default_costs,
    enumerate_critical_points,
    hessian_diagonal,
    index_by_formula,
    index_by_hessian,
    morse_polynomial,
    sign_patterns,
    validate_costs,
    validate_pattern,
)
from rotmorse.intpoly import IntPolynomial


def brute_force_records(n, c):
    """Independent reference: exhaust the sign cube with scalar loops."""
    out = []
    for eps in itertools.product((1, -1), repeat=n):
        if math.prod(eps) != 1:
            continue
        index = sum(i - 1 for i in range(1, n + 1) if eps[i - 1] == 1)
        value = sum(ci * ei for ci, ei in zip(c, eps))
        out.append((eps, index, value))
    return out


def test_n2_records_frozen():
    recs = enumerate_critical_points(2, [1.0, 2.0])
    assert [(r.pattern, r.index, r.value) for r in recs] == [
        ((1, 1), 1, 3.0),
        ((-1, -1), 0, -3.0),
    ]


def test_n3_records_frozen():
    recs = enumerate_critical_points(3, [1.0, 2.0, 3.0])
    assert [(r.pattern, r.index, r.value) for r in recs] == [
        ((1, 1, 1), 3, 6.0),
        ((1, -1, -1), 0, -4.0),
        ((-1, 1, -1), 1, -2.0),
        ((-1, -1, 1), 2, 0.0),
    ]


def test_n1_single_record():
    (rec,) = enumerate_critical_points(1, [2.5])
    assert rec.pattern == (1,) and rec.index == 0 and rec.value == 2.5
    assert rec.hessian_diagonal.size == 0


def test_matches_brute_force():
    rng = np.random.default_rng(1)
    for n in range(1, 7):
        c = np.sort(rng.uniform(0.0, 10.0, n))
        expected = brute_force_records(n, c)
        recs = enumerate_critical_points(n, c)
        assert [(r.pattern, r.index) for r in recs] == [(e, i) for e, i, _ in expected]
        for rec, (_, _, value) in zip(recs, expected):
            assert rec.value == pytest.approx(value, abs=1e-12)


def test_cardinality_up_to_12():
    for n in range(1, 13):
        assert len(sign_patterns(n)) == 2 ** (n - 1)


def test_enumeration_order_plus_first():
    assert sign_patterns(3) == [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]


def test_index_formula_examples():
    assert index_by_formula((-1,) * 4) == 0
    assert index_by_formula((1, 1, 1)) == 3
    assert index_by_formula((-1, 1, -1)) == 1


def test_index_zero_pattern_parity():
    # even n: all-minus; odd n: plus only in the cheapest slot
    assert index_by_formula((-1, -1, -1, -1)) == 0
    assert index_by_formula((1, -1, -1)) == 0


def test_hessian_diagonal_example():
    assert_array_equal(hessian_diagonal((-1, 1, -1), [1, 2, 3]), [-1.0, 4.0, 1.0])


def test_hessian_all_minus_positive_definite():
    hd = hessian_diagonal((-1,) * 4, [1, 2, 3, 4])
    assert np.all(hd > 0)
    assert index_by_hessian((-1,) * 4, [1, 2, 3, 4]) == 0


def test_hessian_all_plus_top_index():
    hd = hessian_diagonal((1,) * 4, [1, 2, 3, 4])
    assert np.all(hd < 0)
    assert index_by_hessian((1,) * 4, [1, 2, 3, 4]) == 6


def test_index_equivalence_exhaustive_small():
    rng = np.random.default_rng(5)
    for n in range(1, 7):
        for _ in range(10):
            c = np.sort(rng.uniform(0.0, 10.0, n))
            for eps in sign_patterns(n):
                assert index_by_formula(eps) == index_by_hessian(eps, c)


@given(st.integers(1, 8), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_index_equivalence_property(n, seed):
    c = np.sort(np.random.default_rng(seed).uniform(0.0, 10.0, n))
    for eps in sign_patterns(n):
        assert index_by_formula(eps) == index_by_hessian(eps, c)


def test_critical_value_two_forms_agree():
    for n in range(1, 9):
        c = default_costs(n)
        total = float(np.sum(c))
        for eps in sign_patterns(n):
            plus = sum(c[i] for i in range(n) if eps[i] == 1)
            assert critical_value(eps, c) == pytest.approx(2 * plus - total, abs=1e-9)


def test_critical_value_examples():
    assert critical_value((1, 1, 1), [1, 2, 3]) == 6.0
    assert critical_value((1, -1, -1), [1, 2, 3]) == -4.0


def test_morse_polynomial_small():
    assert morse_polynomial(1) == IntPolynomial([1])
    assert morse_polynomial(2) == IntPolynomial([1, 1])
    assert morse_polynomial(4).to_list() == [1, 1, 1, 2, 1, 1, 1]


def test_morse_polynomial_count_and_degree():
    for n in range(1, 13):
        p = morse_polynomial(n)
        assert p(1) == 2 ** (n - 1)
        assert p.degree == n * (n - 1) // 2


def test_unique_extremes():
    rng = np.random.default_rng(9)
    for n in range(2, 9):
        c = np.sort(rng.uniform(0.0, 5.0, n))
        recs = enumerate_critical_points(n, c)
        d = n * (n - 1) // 2
        zeros = [r for r in recs if r.index == 0]
        tops = [r for r in recs if r.index == d]
        assert len(zeros) == 1 and len(tops) == 1
        assert tops[0].pattern == (1,) * n
        assert min(recs, key=lambda r: r.value) is zeros[0]


def test_c1_zero_keeps_hessian_nondegenerate():
    c = [0.0, 1.0, 2.0]
    for eps in sign_patterns(3):
        assert np.all(hessian_diagonal(eps, c) != 0)


def test_cost_validation():
    with pytest.raises(ValueError):
        validate_costs([1.0, 1.0, 2.0])
    with pytest.raises(ValueError):
        validate_costs([-1.0, 1.0])
    with pytest.raises(ValueError):
        validate_costs([2.0, 1.0])
    with pytest.raises(ValueError):
        enumerate_critical_points(3, [1, 1, 2])


def test_pattern_validation():
    with pytest.raises(ValueError):
        validate_pattern((1, -1))  # product -1
    with pytest.raises(ValueError):
        validate_pattern((1, 0, -1))
    with pytest.raises(ValueError):
        validate_pattern(())


def test_record_json_shape():
    rec = enumerate_critical_points(2, [1.0, 2.0])[0]
    assert rec.to_json_dict() == {
        "eps": [1, 1],
        "index": 1,
        "value": 3.0,
        "hessian_diagonal": {"(1,2)": -3.0},
    }
