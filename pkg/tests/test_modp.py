import pytest
from hypothesis import given, settings, strategies as st

from cyclores.modp import InvalidInput, build_context, chi_exponent, least_primitive_root


def brute_order(g, p):
    k, x = 1, g % p
    while x != 1:
        x = x * g % p
        k += 1
    return k


@pytest.mark.parametrize("p, g", [(3, 2), (7, 3), (31, 3)])
def test_least_primitive_root_examples(p, g):
    assert least_primitive_root(p) == g


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 31, 41, 191, 409, 2999])
def test_least_primitive_root_against_brute_force(p):
    expected = next(g for g in range(2, p) if brute_order(g, p) == p - 1)
    assert least_primitive_root(p) == expected


@pytest.mark.parametrize("p", [1, 2, 9, 15, 91])
def test_least_primitive_root_rejects(p):
    with pytest.raises(InvalidInput):
        least_primitive_root(p)


def test_build_context_examples():
    ctx = build_context(3, 7)
    assert (ctx.gamma, ctx.alpha) == (3, 2)
    ctx = build_context(5, 31)
    assert (ctx.gamma, ctx.alpha) == (3, 16)


@pytest.mark.parametrize("l, p", [(3, 5), (4, 13), (9, 19), (3, 21), (2, 7)])
def test_build_context_rejects(l, p):
    with pytest.raises(InvalidInput):
        build_context(l, p)


@pytest.mark.parametrize("l, p", [(3, 7), (5, 31), (7, 29), (11, 23), (13, 53)])
def test_context_invariants(l, p):
    ctx = build_context(l, p)
    assert brute_order(ctx.gamma, p) == p - 1
    assert pow(ctx.alpha, l, p) == 1 and ctx.alpha != 1
    assert sorted(ctx.ind) == list(range(p - 1))
    assert ctx.index(1) == 0 and ctx.index(ctx.gamma) == 1
    for v in range(1, p):
        assert pow(ctx.gamma, ctx.index(v), p) == v
    assert build_context(l, p) == ctx
    assert build_context(l, p).ind == ctx.ind


def test_context_with_other_primitive_root():
    ctx = build_context(3, 7, gamma=5)
    assert ctx.gamma == 5 and ctx.alpha == 4
    with pytest.raises(InvalidInput):
        build_context(3, 7, gamma=2)


def test_chi_examples():
    ctx = build_context(3, 7)
    assert chi_exponent(ctx, 3) == 1
    assert chi_exponent(ctx, 1) == 0
    assert chi_exponent(ctx, 2) == 2
    with pytest.raises(InvalidInput):
        chi_exponent(ctx, 14)


CONTEXTS = [build_context(l, p) for l, p in [(3, 7), (3, 97), (5, 101), (7, 197), (11, 199)]]


@settings(max_examples=300)
@given(st.sampled_from(CONTEXTS), st.integers(1, 10**6), st.integers(1, 10**6))
def test_chi_is_multiplicative(ctx, v, w):
    if v % ctx.p == 0 or w % ctx.p == 0:
        return
    assert chi_exponent(ctx, v * w) == (chi_exponent(ctx, v) + chi_exponent(ctx, w)) % ctx.l


@pytest.mark.parametrize("ctx", CONTEXTS)
def test_chi_of_minus_one_is_trivial(ctx):
    assert chi_exponent(ctx, -1) == 0
