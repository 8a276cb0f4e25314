"""Decision procedures for the index class of D mod l, computed without
arithmetic modulo p once J(1,1) is known."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import primerange

from .jacobi import a_coeffs, normalized_jacobi
from .modp import InvalidInput, PrimeContext, check_odd_prime
from .oracle import ind_class_oracle
from .symbol import symbol_rational_base


def sum_inverse_halves(l: int) -> int:
    """S = sum of the inverses of 1..(l-1)/2, mod l."""
    check_odd_prime(l)
    return sum(pow(i, -1, l) for i in range(1, (l - 1) // 2 + 1)) % l


def conjecture_scan(l_max: int, verbose: bool = False, out=None) -> list[int]:
    """Odd primes l <= l_max whose S vanishes mod l."""
    if l_max < 3:
        raise InvalidInput("l_max must be at least 3")
    hits = []
    for l in primerange(3, l_max + 1):
        s = sum_inverse_halves(l)
        if verbose and out is not None:
            print(f"{l},{s}", file=out)
        if s == 0:
            hits.append(l)
    return hits


@dataclass(frozen=True)
class Classification:
    """Index class of D read off the symbol (J(1,1) / D)_l = zeta^t.

    ``ind_class`` is None when S = 0 mod l, where t no longer determines it.
    """

    D: int
    S: int
    t: int
    ind_class: int | None

    @property
    def is_residue(self) -> bool:
        return self.t == 0


@lru_cache(maxsize=256)
def _jacobi(ctx: PrimeContext):
    return normalized_jacobi(ctx)


def classify(ctx: PrimeContext, D: int, seed: int = 0) -> Classification:
    l, p = ctx.l, ctx.p
    if D % p == 0 or math.gcd(D, l) != 1:
        raise InvalidInput(f"D={D} must be coprime to p={p} and l={l}")
    S = sum_inverse_halves(l)
    t = symbol_rational_base(_jacobi(ctx), D, seed).exponent
    ind_class = t * pow(S, -1, l) % l if S else None
    return Classification(D, S, t, ind_class)


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of a congruence criterion next to the mod-p truth."""

    D: int
    residue: bool          # criterion (i)
    index_one: bool        # criterion (ii)
    oracle_class: int

    @property
    def agrees(self) -> bool:
        if self.residue != (self.oracle_class == 0):
            return False
        # (ii) is only asserted when D is not an l-th power
        return self.oracle_class == 0 or self.index_one == (self.oracle_class == 1)


def criterion_for_l(ctx: PrimeContext) -> CriterionReport:
    """Congruences mod l^2 in the coefficients of J(1, n), n = 1..l-2."""
    l, p = ctx.l, ctx.p
    total = 0
    for n in range(1, l - 1):
        total += sum(a * (2 * h - l + 1) for h, a in enumerate(a_coeffs(ctx, n), 1))
    first = ((l - 1) * (p - l + 1) + total) % (l * l) == 0
    second = ((l - 1) * (p - 3 * l + 1) + total) % (l * l) == 0
    return CriterionReport(l, first, second, ind_class_oracle(ctx, l))


def criterion_for_2(ctx: PrimeContext) -> CriterionReport:
    """Parities of the coefficients of J(1, 1)."""
    l = ctx.l
    a = a_coeffs(ctx, 1)
    return CriterionReport(2, sum(a) % 2 == 0, a[l - 3] % 2 == 1, ind_class_oracle(ctx, 2))
