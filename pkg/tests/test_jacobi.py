import math

import pytest
from sympy import primefactors, primerange

from cyclores.cyclotomic import CycInt, Unsupported, galois, one_jet
from cyclores.jacobi import (
    a_coeffs,
    cubic_partition,
    euler_cubic_table,
    jacobi_sum,
    normalized_jacobi,
    verify_lemma4,
)
from cyclores.modp import InvalidInput, build_context


def char_by_power(ctx, v):
    # chi exponent from v^((p-1)/l) = alpha^e, no index table involved
    r = pow(v, (ctx.p - 1) // ctx.l, ctx.p)
    return next(e for e in range(ctx.l) if pow(ctx.alpha, e, ctx.p) == r)


def jacobi_brute(ctx, i, j):
    terms = {}
    for v in range(1, ctx.p - 1):
        e = (i * char_by_power(ctx, v) + j * char_by_power(ctx, v + 1)) % ctx.l
        terms[e] = terms.get(e, 0) + 1
    return terms


def exhaustive_partitions(p):
    out = set()
    for M in range(0, math.isqrt(4 * p // 27) + 1):
        r = 4 * p - 27 * M * M
        L = math.isqrt(r)
        if L * L == r:
            for sL in {L, -L}:
                if sL % 3 == 1:
                    out.add((sL, M))
    return out


def test_jacobi_example():
    ctx = build_context(3, 7)
    J = jacobi_sum(ctx, 1, 1)
    assert J.coeffs == (-2, 1)
    assert J == CycInt.from_int(3, -1) - 3 * CycInt.zeta(3)


@pytest.mark.parametrize("l, p", [(3, 7), (3, 13), (5, 11), (5, 31), (7, 29), (11, 23), (13, 53)])
def test_trivial_characters(l, p):
    ctx = build_context(l, p)
    assert jacobi_sum(ctx, 0, 0) == CycInt.from_int(l, p - 2)
    assert jacobi_sum(ctx, 1, 0) == CycInt.from_int(l, -1)
    assert jacobi_sum(ctx, 0, 1) == CycInt.from_int(l, -1)


@pytest.mark.parametrize("l, p", [(3, 13), (5, 41), (7, 43), (11, 67), (13, 79)])
def test_jacobi_matches_direct_summation(l, p):
    ctx = build_context(l, p)
    for i in range(l):
        for j in range(l):
            assert jacobi_sum(ctx, i, j) == CycInt.from_powers(l, jacobi_brute(ctx, i, j))


@pytest.mark.parametrize("l", [3, 5, 7, 11])
def test_count_and_abs_invariants(l):
    for p in primerange(3, 400):
        if p % l != 1:
            continue
        ctx = build_context(l, p)
        assert sum(jacobi_brute(ctx, 1, 1).values()) == p - 2
        for n in range(1, l - 1):
            J = jacobi_sum(ctx, 1, n)
            assert J * galois(J, l - 1) == CycInt.from_int(l, p)
            assert sum(a_coeffs(ctx, n)) % l == l - 1


def test_a_coeffs():
    assert a_coeffs(build_context(3, 7), 1) == (-2, 1)
    with pytest.raises(InvalidInput):
        a_coeffs(build_context(5, 11), 4)
    with pytest.raises(InvalidInput):
        a_coeffs(build_context(5, 11), 0)


def test_normalized_jacobi():
    assert normalized_jacobi(build_context(3, 7)) == CycInt(3, (-2, 1))
    for l in (3, 5, 7, 11):
        for p in primerange(3, 1000):
            if p % l == 1:
                J = normalized_jacobi(build_context(l, p))
                assert (one_jet(J).b, one_jet(J).c) == (l - 1, 0)


def test_lemma4_examples():
    rep = verify_lemma4(build_context(3, 7))
    assert rep.holds and rep.sign == 1 and rep.K == CycInt(3, (-2, 1))
    assert verify_lemma4(build_context(5, 11)).holds
    with pytest.raises(Unsupported):
        verify_lemma4(build_context(13, 53))


@pytest.mark.parametrize("p, L, M_abs", [(7, 1, 1), (13, -5, 1), (31, 4, 2)])
def test_cubic_partition_examples(p, L, M_abs):
    part = cubic_partition(p)
    assert part.L == L and abs(part.M) == M_abs
    assert {(part.L, abs(part.M))} == exhaustive_partitions(p)


def test_cubic_partition_p7_sign():
    assert cubic_partition(7).M == -1


def test_cubic_partition_rejects():
    with pytest.raises(InvalidInput):
        cubic_partition(11)


@pytest.mark.parametrize("p", [7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103, 109, 127, 139])
def test_cubic_partition_is_root_independent(p):
    ctx = build_context(3, p)
    g2 = next(g for g in range(ctx.gamma + 1, p)
              if all(pow(g, (p - 1) // q, p) != 1 for q in primefactors(p - 1)))
    other = cubic_partition(p, build_context(3, p, gamma=g2))
    base = cubic_partition(p, ctx)
    assert (other.L, abs(other.M)) == (base.L, abs(base.M))


def test_euler_cubic_examples():
    ctx = build_context(3, 7)
    assert euler_cubic_table(ctx, 6).branch == "1"
    row = euler_cubic_table(ctx, 2)
    assert row.power == 4 and row.branch in "+-" and row.branch != "1"
    assert euler_cubic_table(ctx, 1).branch == "1"
    with pytest.raises(InvalidInput):
        euler_cubic_table(ctx, 14)
    with pytest.raises(InvalidInput):
        euler_cubic_table(build_context(5, 11), 2)
