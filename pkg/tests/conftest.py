"""Shared fixtures: cached field contexts and memoized code enumerations."""

import pytest

from cwecodes import codebuild, gfield

GRID = [(3, 2, 1), (3, 2, 2), (3, 3, 1), (3, 4, 1), (5, 2, 1)]


@pytest.fixture(scope="session")
def f32():
    return gfield.get_field(3, 4)


@pytest.fixture(scope="session")
def f33():
    return gfield.get_field(3, 6)


@pytest.fixture(scope="session")
def f34():
    return gfield.get_field(3, 8)


@pytest.fixture(scope="session")
def f52():
    return gfield.get_field(5, 4)


@pytest.fixture(scope="session")
def enum_cache():
    """Memoized exhaustive enumeration keyed by the code parameters."""
    cache: dict = {}

    def get(spec: codebuild.CodeSpec) -> codebuild.CompleteWeightEnumerator:
        key = (spec.p, spec.m, spec.alpha, spec.a, spec.variant)
        if key not in cache:
            ctx = gfield.get_field(spec.p, spec.e)
            cache[key] = codebuild.enumerate_cwe(ctx, spec)
        return cache[key]

    return get


def grid_specs():
    for p, m, alpha in GRID:
        for a in range(p):
            for variant in ("plain", "bar"):
                yield codebuild.CodeSpec(p, m, alpha, a, variant)
