"""Defining sets, exhaustive enumeration, symbol counts, and derived statistics."""

import random
from fractions import Fraction

import pytest

from cwecodes.codebuild import (
    CodeSpec,
    CompleteWeightEnumerator,
    defining_set,
    enumerate_bar_direct,
    enumerate_cwe,
    lift_bar,
    power_moments_check,
    set_size_closed,
    symbol_count,
    symbol_count_direct,
    weight_distribution,
    wmin_wmax,
)
from cwecodes.gfield import get_field, linearized_solve


def test_code_spec_validation():
    CodeSpec(3, 2, 1, 0)
    with pytest.raises(ValueError):
        CodeSpec(4, 2, 1, 0)
    with pytest.raises(ValueError):
        CodeSpec(3, 1, 1, 0)
    with pytest.raises(ValueError):
        CodeSpec(3, 2, -1, 0)
    with pytest.raises(ValueError):
        CodeSpec(3, 2, 1, 3)
    with pytest.raises(ValueError):
        CodeSpec(3, 2, 1, 0, variant="other")
    assert CodeSpec(3, 2, 2, 0).d == 2
    assert CodeSpec(5, 3, 1, 0).e == 6


def test_defining_set_sizes(f33, f34):
    assert len(defining_set(f33, 1, 0)) == 224
    assert len(defining_set(f33, 1, 1)) == 252
    assert len(defining_set(f33, 1, 2)) == 252
    assert len(defining_set(f34, 1, 0)) == 2024
    assert len(defining_set(f34, 1, 1)) == 2268
    assert len(defining_set(f34, 1, 2)) == 2268


def test_defining_set_membership(f32):
    for a in range(3):
        ds = defining_set(f32, 1, a)
        assert 0 not in ds.elements
        assert all(f32.trace_of(f32.power_map(1, x)) == a for x in ds.elements)


def test_set_size_closed_matches_enumeration():
    for p, m, alpha in [(3, 2, 1), (3, 2, 2), (3, 3, 1), (3, 4, 1), (5, 2, 1)]:
        ctx = get_field(p, 2 * m)
        for a in range(p):
            spec = CodeSpec(p, m, alpha, a)
            assert set_size_closed(spec) == len(defining_set(ctx, alpha, a))


def test_symbol_count_piecewise_agrees_with_direct(f32, f52):
    for ctx in (f32, f52):
        p = ctx.p
        rng = random.Random(ctx.q)
        bs = rng.sample(range(1, ctx.q), 10)
        for b in bs:
            for a in range(p):
                for c in range(p):
                    symbol_count(ctx, 1, a, b, c, verify=True)


def test_symbol_count_covers_both_solvability_branches(f34):
    solvable_b = next(b for b in range(1, f34.q) if linearized_solve(f34, 1, b).solvable)
    unsolvable_b = next(
        b for b in range(1, f34.q) if not linearized_solve(f34, 1, b).solvable
    )
    for b in (solvable_b, unsolvable_b):
        for a in range(3):
            for c in range(3):
                symbol_count(f34, 1, a, b, c, verify=True)


def test_symbol_counts_sum_to_field_size(f32):
    for b in (1, 2, 5, 17):
        total = sum(symbol_count_direct(f32, 1, a, b, c) for a in range(3) for c in range(3))
        assert total == f32.q


def test_enumeration_small_code(f33, enum_cache):
    cwe = enum_cache(CodeSpec(3, 3, 1, 0))
    assert cwe.n == 224
    assert cwe.total() == 3**6
    assert cwe.dimension() == 6
    assert dict(cwe.terms) == {
        (224, 0, 0): 1,
        (62, 81, 81): 224,
        (80, 72, 72): 504,
    }


def test_enumeration_nonzero_trace_value(enum_cache):
    cwe = enum_cache(CodeSpec(3, 3, 1, 1))
    assert dict(cwe.terms) == {
        (252, 0, 0): 1,
        (90, 81, 81): 476,
        (72, 90, 90): 252,
    }


def test_compositions_sum_to_length(enum_cache):
    for spec in [CodeSpec(3, 2, 1, 0), CodeSpec(5, 2, 1, 2), CodeSpec(3, 2, 2, 1, "bar")]:
        cwe = enum_cache(spec)
        assert all(sum(comp) == cwe.n for comp in cwe.terms)


def test_shift_lift_equals_direct_lifted_enumeration(f32, f33):
    for ctx, m in ((f32, 2), (f33, 3)):
        for a in range(3):
            spec = CodeSpec(3, m, 1, a, "bar")
            lifted = enumerate_cwe(ctx, spec)
            direct = enumerate_bar_direct(ctx, CodeSpec(3, m, 1, a))
            assert dict(lifted.terms) == dict(direct.terms)
            assert lifted.total() == 3 ** (2 * m + 1)
            # degenerate small parameters can collapse the code, so compare
            # dimensions between the two constructions instead of pinning them
            assert lifted.dimension() == direct.dimension()


def test_threaded_enumeration_is_identical(f33):
    spec = CodeSpec(3, 3, 1, 1)
    assert dict(enumerate_cwe(f33, spec, threads=1).terms) == dict(
        enumerate_cwe(f33, spec, threads=3).terms
    )


def test_weight_distribution_and_moments(enum_cache):
    wd = weight_distribution(enum_cache(CodeSpec(3, 3, 1, 0)))
    assert (wd.n, wd.k) == (224, 6)
    assert wd.minimum_distance() == 144
    assert sum(wd.entries.values()) == 3**6
    assert power_moments_check(wd, 3)

    wd = weight_distribution(enum_cache(CodeSpec(3, 3, 1, 0, "bar")))
    assert (wd.n, wd.k) == (224, 7)
    assert wd.minimum_distance() == 143
    assert power_moments_check(wd, 3)


def test_minimum_distances_of_worked_examples(enum_cache):
    cases = {
        (3, 3, 1, 0, "plain"): 144,
        (3, 3, 1, 1, "plain"): 162,
        (3, 3, 1, 1, "bar"): 162,
        (3, 4, 1, 0, "plain"): 1296,
        (3, 4, 1, 0, "bar"): 1295,
        (3, 4, 1, 1, "plain"): 1458,
    }
    for (p, m, alpha, a, variant), dmin in cases.items():
        wd = weight_distribution(enum_cache(CodeSpec(p, m, alpha, a, variant)))
        assert wd.minimum_distance() == dmin


def test_weight_ratio_criterion(enum_cache):
    for spec in [CodeSpec(3, 3, 1, 0), CodeSpec(3, 3, 1, 1), CodeSpec(3, 4, 1, 0)]:
        wd = weight_distribution(enum_cache(spec))
        ratio, passes = wmin_wmax(wd, 3)
        assert passes and ratio > Fraction(2, 3)
    assert wmin_wmax(weight_distribution(enum_cache(CodeSpec(3, 3, 1, 0))), 3)[0] == Fraction(8, 9)


def test_weight_ratio_fails_for_lifted_codes(enum_cache):
    # lifting adds p-1 constant words of full weight n, which caps the ratio
    # strictly below (p-1)/p; the exact failing values are pinned here
    wd = weight_distribution(enum_cache(CodeSpec(3, 3, 1, 0, "bar")))
    ratio, passes = wmin_wmax(wd, 3)
    assert not passes and ratio == Fraction(143, 224)
    wd = weight_distribution(enum_cache(CodeSpec(3, 4, 1, 0, "bar")))
    ratio, passes = wmin_wmax(wd, 3)
    assert not passes and ratio == Fraction(1295, 2024)


def test_dimension_requires_zero_codeword():
    bad = CompleteWeightEnumerator(4, {(1, 2, 1): 9})
    with pytest.raises(ValueError):
        bad.dimension()


def test_lift_preserves_totals(enum_cache):
    plain = enum_cache(CodeSpec(5, 2, 1, 1))
    lifted = lift_bar(plain, 5)
    assert lifted.total() == 5 * plain.total()
    assert lifted.n == plain.n
