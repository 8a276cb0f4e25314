"""l-th power residue symbols in Z[zeta_l] and the Eisenstein reciprocity check."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint, isprime

from . import gfpoly
from .cyclotomic import CycInt, norm
from .jacobi import normalized_jacobi
from .modp import InvalidInput, PrimeContext


@dataclass(frozen=True)
class SymbolValue:
    """Either zero (``exponent is None``) or zeta**exponent."""

    l: int
    exponent: int | None

    @classmethod
    def zero(cls, l: int) -> SymbolValue:
        return cls(l, None)

    @classmethod
    def root(cls, l: int, j: int) -> SymbolValue:
        return cls(l, j % l)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __mul__(self, other: SymbolValue) -> SymbolValue:
        if self.is_zero or other.is_zero:
            return SymbolValue.zero(self.l)
        return SymbolValue.root(self.l, self.exponent + other.exponent)

    def __pow__(self, e: int) -> SymbolValue:
        if self.is_zero:
            return self if e else SymbolValue.root(self.l, 0)
        return SymbolValue.root(self.l, self.exponent * e)

    def __str__(self):
        return "0" if self.is_zero else f"zeta^{self.exponent}"


def symbol_mod_degree1(ctx: PrimeContext, a: CycInt | int, k: int) -> SymbolValue:
    """(a / P_k)_l where P_k = (p, zeta - alpha^k), so zeta -> alpha^k mod P_k."""
    l, p = ctx.l, ctx.p
    if k % l == 0:
        raise InvalidInput(f"k={k} must be nonzero mod l")
    if isinstance(a, int):
        a = CycInt.from_int(l, a)
    root = ctx.alpha_powers[k % l]
    image = 0
    for h, c in enumerate(a.coeffs, 1):
        image += c * pow(root, h, p)
    image %= p
    if image == 0:
        return SymbolValue.zero(l)
    s = ctx.root_exponent(pow(image, (p - 1) // l, p))
    return SymbolValue.root(l, s * pow(k, -1, l))


@dataclass(frozen=True)
class ResidueFieldFactor:
    """A prime of Z[zeta_l] above q, given by a monic irreducible factor of Phi_l mod q.

    The residue field is GF(q)[x]/poly with zeta mapped to x;
    ``zeta_powers[j]`` is x**j reduced mod poly.
    """

    q: int
    f: int
    poly: tuple[int, ...]
    zeta_image: tuple[int, ...]
    zeta_powers: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def factor_cyclotomic_mod_q(l: int, q: int, seed: int = 0) -> tuple[ResidueFieldFactor, ...]:
    """Irreducible factors of Phi_l over GF(q), sorted by coefficient tuple."""
    if q == l:
        raise InvalidInput(f"q={q} is ramified in Z[zeta_{l}]")
    if not isprime(q):
        raise InvalidInput(f"q={q} must be prime")
    f = gfpoly.multiplicative_order(q, l)
    phi = (1,) * l
    polys = sorted(gfpoly.equal_degree_factors(phi, f, q, random.Random(seed)))
    out = []
    for poly in polys:
        x = gfpoly.mod((0, 1), poly, q)
        powers = tuple(gfpoly.powmod((0, 1), j, poly, q) for j in range(l))
        out.append(ResidueFieldFactor(q, f, poly, x, powers))
    return tuple(out)


def _residue_image(a: CycInt, fac: ResidueFieldFactor):
    q = fac.q
    image = ()
    for h, c in enumerate(a.coeffs, 1):
        if c % q:
            image = gfpoly.add(image, tuple(c * t % q for t in fac.zeta_powers[h]), q)
    return image


def symbol_mod_factor(a: CycInt, fac: ResidueFieldFactor) -> SymbolValue:
    l = a.l
    image = _residue_image(a, fac)
    if not image:
        return SymbolValue.zero(l)
    r = gfpoly.powmod(image, (fac.q**fac.f - 1) // l, fac.poly, fac.q)
    try:
        return SymbolValue.root(l, fac.zeta_powers.index(r))
    except ValueError:
        raise AssertionError(f"{r} is not an l-th root of unity mod {fac.poly}") from None


@lru_cache(maxsize=65536)
def _symbol_mod_rational_prime(l: int, coeffs: tuple[int, ...], q: int, seed: int) -> SymbolValue:
    a = CycInt(l, coeffs)
    value = SymbolValue.root(l, 0)
    for fac in factor_cyclotomic_mod_q(l, q, seed):
        value = value * symbol_mod_factor(a, fac)
    return value


def symbol_mod_rational_prime(a: CycInt, q: int, seed: int = 0) -> SymbolValue:
    """(a / q)_l as the product of the symbols at the primes above q."""
    if q == a.l:
        raise InvalidInput(f"symbol undefined at the ramified prime q={q}")
    return _symbol_mod_rational_prime(a.l, a.coeffs, q, seed)


def symbol_rational_base(a: CycInt, D: int, seed: int = 0) -> SymbolValue:
    """(a / D)_l for a rational integer D coprime to l and to norm(a).

    The sign of D is ignored: -1 is an l-th power for odd l.
    """
    l = a.l
    if D == 0:
        raise InvalidInput("D must be nonzero")
    if math.gcd(D, l) != 1:
        raise InvalidInput(f"D={D} must be coprime to l={l}")
    if math.gcd(norm(a), D) != 1:
        raise InvalidInput(f"shared factor: gcd(norm(a), D={D}) != 1")
    value = SymbolValue.root(l, 0)
    for q, e in factorint(abs(D)).items():
        value = value * symbol_mod_rational_prime(a, q, seed) ** e
    return value


@dataclass(frozen=True)
class EisensteinReport:
    l: int
    p: int
    D: int
    left: SymbolValue       # (J / D), computed mod D
    right: SymbolValue      # (D / J), computed mod p

    @property
    def holds(self) -> bool:
        return self.left == self.right


def check_eisenstein(ctx: PrimeContext, D: int, seed: int = 0) -> EisensteinReport:
    """Compare (theta/D)_l with (D/theta)_l for theta = J(1,1).

    (theta) is the product of P_i for i = 1..(l-1)/2, so the right side is
    the sum of the degree-one symbols at those primes.
    """
    l, p = ctx.l, ctx.p
    if math.gcd(D, l * p) != 1:
        raise InvalidInput(f"D={D} must be coprime to l*p={l * p}")
    theta = normalized_jacobi(ctx)
    left = symbol_rational_base(theta, D, seed)
    right = SymbolValue.root(l, 0)
    for i in range(1, (l - 1) // 2 + 1):
        right = right * symbol_mod_degree1(ctx, D, i)
    return EisensteinReport(l, p, D, left, right)
