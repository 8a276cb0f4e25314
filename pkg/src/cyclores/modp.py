"""Prime-field context: primitive roots, index tables and the order-l character."""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import factorint, isprime


class InvalidInput(ValueError):
    """Raised when an argument violates an operation's precondition."""


def prime_factors(n: int) -> list[int]:
    return sorted(factorint(n))


def least_primitive_root(p: int) -> int:
    """Smallest g >= 2 generating the multiplicative group mod p."""
    if p < 3 or not isprime(p):
        raise InvalidInput(f"p={p} must be an odd prime")
    cofactors = [(p - 1) // q for q in prime_factors(p - 1)]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in cofactors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


@dataclass(frozen=True)
class PrimeContext:
    """The data (l, p, gamma, alpha) plus the discrete-log table of F_p*.

    ``ind[v - 1]`` is the index of v to base ``gamma``. ``alpha_powers[j]`` is
    alpha**j mod p, used to read off l-th roots of unity mod p.
    """

    l: int
    p: int
    gamma: int
    alpha: int
    ind: tuple[int, ...] = field(repr=False, compare=False)
    alpha_powers: tuple[int, ...] = field(repr=False, compare=False)

    def index(self, v: int) -> int:
        v %= self.p
        if v == 0:
            raise InvalidInput("index undefined at 0 mod p")
        return self.ind[v - 1]

    def root_exponent(self, r: int) -> int:
        """The j with alpha**j == r (mod p); r must be an l-th root of unity."""
        r %= self.p
        try:
            return self.alpha_powers.index(r)
        except ValueError:
            raise AssertionError(f"{r} is not an l-th root of unity mod {self.p}") from None


def check_odd_prime(l: int) -> None:
    if l < 3 or not isprime(l):
        raise InvalidInput(f"l={l} must be an odd prime")


def build_context(l: int, p: int, gamma: int | None = None) -> PrimeContext:
    """Build the context for (l, p).

    ``gamma`` defaults to the least primitive root; passing another primitive
    root gives a context variant (used to test root-independence claims).
    """
    check_odd_prime(l)
    if not isprime(p):
        raise InvalidInput(f"p={p} must be prime")
    if p % l != 1:
        raise InvalidInput(f"p={p} must be 1 mod l={l}")
    if gamma is None:
        gamma = least_primitive_root(p)
    else:
        gamma %= p
        if any(pow(gamma, (p - 1) // q, p) == 1 for q in prime_factors(p - 1)):
            raise InvalidInput(f"{gamma} is not a primitive root mod {p}")

    ind = [0] * (p - 1)
    x = 1
    for k in range(p - 1):
        ind[x - 1] = k
        x = x * gamma % p
    alpha = pow(gamma, (p - 1) // l, p)
    alpha_powers = tuple(pow(alpha, j, p) for j in range(l))
    return PrimeContext(l, p, gamma, alpha, tuple(ind), alpha_powers)


def chi_exponent(ctx: PrimeContext, v: int) -> int:
    """e such that chi_l(v) = zeta**e, where chi_l(gamma) = zeta."""
    if v % ctx.p == 0:
        raise InvalidInput("character undefined at 0 mod p")
    return ctx.index(v) % ctx.l
