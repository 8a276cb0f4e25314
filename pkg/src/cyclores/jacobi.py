"""Jacobi sums of order l over F_p and what is read off them."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycInt, galois, one_jet, prime_generator
from .modp import InvalidInput, PrimeContext, build_context


def jacobi_sum(ctx: PrimeContext, i: int = 1, j: int = 1) -> CycInt:
    """J(i, j) = sum over v != 0, -1 of chi^i(v) chi^j(v + 1).

    Counts how often each power of zeta occurs, then canonicalizes once.
    """
    l, p = ctx.l, ctx.p
    i %= l
    j %= l
    counts = [0] * l
    ind = ctx.ind
    # ind[v - 1] is Ind(v); v runs over 1..p-2 so v + 1 stays nonzero
    prev = ind[0] * i
    for v in range(1, p - 1):
        nxt = ind[v] * j
        counts[(prev + nxt) % l] += 1
        prev = ind[v] * i
    return CycInt.from_powers(l, counts)


def a_coeffs(ctx: PrimeContext, n: int) -> tuple[int, ...]:
    """(a_1(n), ..., a_{l-1}(n)): coordinates of J(1, n) in the basis zeta..zeta^(l-1)."""
    if not 1 <= n <= ctx.l - 2:
        raise InvalidInput(f"n={n} must lie in 1..{ctx.l - 2}")
    return jacobi_sum(ctx, 1, n).coeffs


def normalized_jacobi(ctx: PrimeContext) -> CycInt:
    """J(1, 1), checked to be -1 mod (1 - zeta)^2 and of absolute value sqrt(p)."""
    J = jacobi_sum(ctx, 1, 1)
    jet = one_jet(J)
    if (jet.b, jet.c) != (ctx.l - 1, 0):
        raise AssertionError(f"J(1,1) for {ctx} has jet {jet}, expected ({ctx.l - 1}, 0)")
    if J * galois(J, ctx.l - 1) != CycInt.from_int(ctx.l, ctx.p):
        raise AssertionError(f"|J(1,1)|^2 != p for {ctx}")
    return J


@dataclass(frozen=True)
class Lemma4Report:
    l: int
    p: int
    K: CycInt
    sign: int
    product: CycInt
    jacobi: CycInt

    @property
    def holds(self) -> bool:
        return self.product == self.jacobi


def verify_lemma4(ctx: PrimeContext) -> Lemma4Report:
    """Compare J(1,1) with sign * prod_{i=1}^{(l-1)/2} sigma_{1/i}(K)."""
    l = ctx.l
    K = prime_generator(ctx)
    sign = (-1) ** ((l + 1) // 2)
    phi = CycInt.from_int(l, sign)
    for i in range(1, (l - 1) // 2 + 1):
        phi = phi * galois(K, pow(i, -1, l))
    return Lemma4Report(l, ctx.p, K, sign, phi, normalized_jacobi(ctx))


@dataclass(frozen=True)
class CubicPartition:
    """4p = L^2 + 27 M^2 with L = 1 (mod 3)."""

    L: int
    M: int


def partition_from_jacobi(J: CycInt, p: int) -> CubicPartition:
    if J.l != 3:
        raise InvalidInput("cubic partition needs l = 3")
    A, B = J.coeffs
    # A w + B w^2 = -B + (A - B) w = (L + 3M)/2 + 3M w
    x, y = -B, A - B
    if y % 3:
        raise AssertionError(f"J={J} has omega-coefficient not divisible by 3")
    M = y // 3
    L = 2 * x - 3 * M
    if 4 * p != L * L + 27 * M * M or L % 3 != 1:
        raise AssertionError(f"bad partition L={L}, M={M} for p={p}")
    return CubicPartition(L, M)


def cubic_partition(p: int, ctx: PrimeContext | None = None) -> CubicPartition:
    """(L, M) read off J(1,1); the sign of M follows the context's gamma."""
    if p % 3 != 1:
        raise InvalidInput(f"p={p} must be 1 mod 3")
    if ctx is None:
        ctx = build_context(3, p)
    return partition_from_jacobi(normalized_jacobi(ctx), p)


@dataclass(frozen=True)
class EulerCubicRow:
    D: int
    power: int           # D^((p-1)/3) mod p
    plus: int            # (L + 9M)/(L - 9M) mod p
    minus: int           # (L - 9M)/(L + 9M) mod p
    branch: str          # "1", "+", "-" or "none"


def euler_cubic_table(ctx: PrimeContext, D: int) -> EulerCubicRow:
    if ctx.l != 3:
        raise InvalidInput("euler_cubic_table needs l = 3")
    p = ctx.p
    if D % p == 0:
        raise InvalidInput(f"D={D} must be coprime to p={p}")
    part = partition_from_jacobi(normalized_jacobi(ctx), p)
    num, den = (part.L + 9 * part.M) % p, (part.L - 9 * part.M) % p
    # (L - 9M)(L + 9M) = -108 M^2 mod p, and 0 < |M| < sqrt(p)
    assert num and den, "L +- 9M vanished mod p"
    plus = num * pow(den, -1, p) % p
    minus = den * pow(num, -1, p) % p
    power = pow(D, (p - 1) // 3, p)
    if power == 1:
        branch = "1"
    elif power == plus:
        branch = "+"
    elif power == minus:
        branch = "-"
    else:
        branch = "none"
    return EulerCubicRow(D, power, plus, minus, branch)


__all__ = [
    "jacobi_sum", "a_coeffs", "normalized_jacobi", "verify_lemma4", "Lemma4Report",
    "CubicPartition", "cubic_partition", "partition_from_jacobi",
    "euler_cubic_table", "EulerCubicRow",
]
