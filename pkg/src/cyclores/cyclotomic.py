"""Exact arithmetic in Z[zeta_l].

Elements are stored in the integral basis zeta, zeta^2, ..., zeta^(l-1).  A
rational integer n is therefore stored with every coefficient equal to -n,
using 1 = -(zeta + ... + zeta^(l-1)).  The representation is unique, so
equality is tuple equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .modp import InvalidInput, PrimeContext, check_odd_prime, least_primitive_root

EUCLIDEAN_PRIMES = (3, 5, 7, 11)


class NotDivisible(ArithmeticError):
    """Exact division in Z[zeta_l] failed."""


class Unsupported(InvalidInput):
    pass


def _canonical(l: int, buckets: list[int]) -> tuple[int, ...]:
    # buckets[h] is the coefficient of zeta^h for h in 0..l-1
    c0 = buckets[0]
    return tuple(b - c0 for b in buckets[1:])


@dataclass(frozen=True, slots=True)
class CycInt:
    l: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.l - 1:
            raise InvalidInput(f"need {self.l - 1} coefficients, got {len(self.coeffs)}")

    # constructors
    @classmethod
    def from_int(cls, l: int, n: int) -> CycInt:
        return cls(l, (-n,) * (l - 1))

    @classmethod
    def zeta(cls, l: int, k: int = 1) -> CycInt:
        k %= l
        if k == 0:
            return cls.from_int(l, 1)
        c = [0] * (l - 1)
        c[k - 1] = 1
        return cls(l, tuple(c))

    @classmethod
    def from_powers(cls, l: int, terms: dict[int, int] | list[int]) -> CycInt:
        """Build sum c_k zeta^k from a mapping k -> c_k (k any integer) or a
        list indexed by k."""
        items = terms.items() if isinstance(terms, dict) else enumerate(terms)
        buckets = [0] * l
        for k, c in items:
            buckets[k % l] += c
        return cls(l, _canonical(l, buckets))

    # ring structure
    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.l != self.l:
                raise InvalidInput(f"mismatched l: {self.l} vs {other.l}")
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.l, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.l, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.l, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.l, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.l, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        l = self.l
        buckets = [0] * l
        ys = [(j, b) for j, b in enumerate(other.coeffs, 1) if b]
        for i, a in enumerate(self.coeffs, 1):
            if not a:
                continue
            for j, b in ys:
                buckets[(i + j) % l] += a * b
        return CycInt(l, _canonical(l, buckets))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CycInt:
        if n < 0:
            raise InvalidInput("negative powers are not defined in Z[zeta]")
        result = CycInt.from_int(self.l, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return all(a == self.coeffs[0] for a in self.coeffs)

    def as_int(self) -> int:
        if not self.is_rational():
            raise InvalidInput(f"{self} is not a rational integer")
        return -self.coeffs[0]

    def __repr__(self):
        return f"CycInt(l={self.l}, coeffs={self.coeffs})"


def galois(x: CycInt, i: int) -> CycInt:
    """Apply sigma_i: zeta -> zeta^i."""
    l = x.l
    if i % l == 0:
        raise InvalidInput(f"sigma_{i} is not an automorphism for l={l}")
    c = [0] * (l - 1)
    for h, a in enumerate(x.coeffs, 1):
        c[h * i % l - 1] = a
    return CycInt(l, tuple(c))


def _conjugate_product(y: CycInt) -> CycInt:
    # prod_{i=2}^{l-1} sigma_i(y); y times this is norm(y)
    result = CycInt.from_int(y.l, 1)
    for i in range(2, y.l):
        result = result * galois(y, i)
    return result


def norm(x: CycInt) -> int:
    n = x * _conjugate_product(x)
    if not n.is_rational():
        raise AssertionError(f"norm of {x} is not rational: {n}")
    return n.as_int()


@dataclass(frozen=True)
class Jet:
    """x = b - c(1 - zeta) mod (1 - zeta)^2, with b and c taken mod l."""

    b: int
    c: int


def one_jet(x: CycInt) -> Jet:
    l = x.l
    return Jet(sum(x.coeffs) % l, sum(h * a for h, a in enumerate(x.coeffs, 1)) % l)


def divide_exact(x: CycInt, y: CycInt) -> CycInt:
    """q with x = q*y; raises NotDivisible when y does not divide x."""
    if not y:
        raise ZeroDivisionError("division by zero in Z[zeta]")
    conj = _conjugate_product(y)
    n = y * conj
    if not n.is_rational():
        raise AssertionError("norm is not rational")
    n = n.as_int()
    num = x * conj
    q = []
    for a in num.coeffs:
        quo, rem = divmod(a, n)
        if rem:
            raise NotDivisible(f"{y} does not divide {x}")
        q.append(quo)
    return CycInt(x.l, tuple(q))


def lambda_valuation(x: CycInt) -> float | int:
    """Exponent of the prime (1 - zeta) in x; math.inf for zero."""
    if not x:
        return math.inf
    lam = 1 - CycInt.zeta(x.l)
    k = 0
    while one_jet(x).b == 0:
        x = divide_exact(x, lam)
        k += 1
    return k


def cyclotomic_unit(l: int, a: int) -> CycInt:
    """u_a = zeta^((1-a)/2) (1 - zeta^a) / (1 - zeta), exponent taken mod l."""
    check_odd_prime(l)
    if a % l in (0, 1):
        raise InvalidInput(f"a={a} must not be 0 or 1 mod l={l}")
    a %= l
    shift = (1 - a) * pow(2, -1, l) % l
    return CycInt.from_powers(l, {shift + k: 1 for k in range(a)})


@dataclass(frozen=True)
class UnitTrail:
    """Record of the unit applied by normalize_associate.

    The output equals sign * zeta^zeta_exp * prod(u_a ** d) * x.
    """

    zeta_exp: int = 0
    unit_powers: tuple[tuple[int, int], ...] = ()
    sign: int = 1

    def replay(self, x: CycInt) -> CycInt:
        y = x * self.sign * CycInt.zeta(x.l, self.zeta_exp)
        for a, d in self.unit_powers:
            y = y * cyclotomic_unit(x.l, a) ** d
        return y


def normalize_associate(x: CycInt) -> tuple[CycInt, UnitTrail]:
    """Return the associate of x congruent to -1 mod (1 - zeta)^2.

    The sign of x is first fixed so that its jet's b lies in the upper half
    (l+1)/2 .. l-1, which makes the output depend only on x up to +-zeta^k.
    """
    l = x.l
    jet = one_jet(x)
    if jet.b == 0:
        raise InvalidInput("(1 - zeta) divides x; no associate is -1 mod (1 - zeta)^2")
    sign = 1
    b, c = jet.b, jet.c
    if b <= (l - 1) // 2:
        sign = -1
        b, c = l - b, (l - c) % l
    a = least_primitive_root(l)
    d = next(d for d in range(l - 1) if pow(a, d, l) * b % l == l - 1)
    m = c * pow(a, d, l) % l
    trail = UnitTrail(m, ((a, d),) if d else (), sign)
    beta = trail.replay(x)
    return beta, trail


# Norm-Euclidean gcd

def _rational_quotient(x: CycInt, y: CycInt) -> list[Fraction]:
    conj = _conjugate_product(y)
    n = (y * conj).as_int()
    return [Fraction(a, n) for a in (x * conj).coeffs]


def _round_half_to_zero(r: Fraction) -> int:
    fl = math.floor(r)
    frac = r - fl
    if frac > Fraction(1, 2):
        return fl + 1
    if frac < Fraction(1, 2):
        return fl
    return fl + 1 if r < 0 else fl


def _quotient_candidates(l: int, coords: list[Fraction]):
    # Nearest rounding in the basis that omits zeta^k, for each k; the
    # k = 0 case is the stored basis.  Shifting all coordinates of
    # sum_{h=0}^{l-1} c_h zeta^h by a constant leaves the element unchanged.
    full = [Fraction(0)] + coords
    for k in range(l):
        shifted = [c - full[k] for c in full]
        yield CycInt.from_powers(l, [_round_half_to_zero(c) for c in shifted])


def _box_candidates(l: int, coords: list[Fraction]):
    for choice in itertools.product((0, 1), repeat=l - 1):
        yield CycInt(l, tuple(math.floor(c) + e for c, e in zip(coords, choice)))


def euclid_divmod(x: CycInt, y: CycInt) -> tuple[CycInt, CycInt]:
    """q, r with x = q*y + r and norm(r) < norm(y)."""
    if x.l not in EUCLIDEAN_PRIMES:
        raise Unsupported(f"unsupported: l={x.l} is not norm-Euclidean")
    ny = norm(y)
    coords = _rational_quotient(x, y)
    for source in (_quotient_candidates, _box_candidates):
        for q in source(x.l, coords):
            r = x - q * y
            if norm(r) < ny:
                return q, r
    raise AssertionError(f"no Euclidean quotient found for {x} / {y}")


def euclid_gcd(x: CycInt, y: CycInt) -> CycInt:
    if x.l != y.l:
        raise InvalidInput(f"mismatched l: {x.l} vs {y.l}")
    if x.l not in EUCLIDEAN_PRIMES:
        raise Unsupported(f"unsupported: l={x.l} is not norm-Euclidean")
    if not x and not y:
        raise InvalidInput("gcd(0, 0) is undefined")
    while y:
        _, r = euclid_divmod(x, y)
        x, y = y, r
    return x


def prime_generator(ctx: PrimeContext) -> CycInt:
    """Generator K of P_1 = (p, zeta - alpha), normalized to K = -1 mod (1-zeta)^2."""
    l, p = ctx.l, ctx.p
    if l not in EUCLIDEAN_PRIMES:
        raise Unsupported(
            f"unsupported: generator search not implemented for non-Euclidean PID (l={l})"
        )
    zeta_minus_alpha = CycInt.zeta(l) - ctx.alpha
    g = euclid_gcd(CycInt.from_int(l, p), zeta_minus_alpha)
    K, _ = normalize_associate(g)
    if norm(K) != p:
        raise AssertionError(f"generator norm {norm(K)} != p={p}")
    # both generators of P_1 must be multiples of K
    divide_exact(CycInt.from_int(l, p), K)
    divide_exact(zeta_minus_alpha, K)
    return K
