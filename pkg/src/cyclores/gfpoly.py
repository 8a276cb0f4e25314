"""Dense polynomials over GF(q), q prime.

A polynomial a_0 + a_1 x + ... + a_n x^n is a tuple (a_0, ..., a_n) with
entries in range(q) and a_n != 0; the zero polynomial is ().
"""

from __future__ import annotations

import random


def trim(a) -> tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def reduce(a, q: int) -> tuple[int, ...]:
    return trim(c % q for c in a)


def add(a, b, q: int):
    n = max(len(a), len(b))
    return trim(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % q for i in range(n))


def sub(a, b, q: int):
    n = max(len(a), len(b))
    return trim(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % q for i in range(n))


def mul(a, b, q: int):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(c % q for c in out)


def divmod_(a, b, q: int):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, q)
    db = len(b) - 1
    quo = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv % q
        if c:
            quo[k - db] = c
            for j in range(db + 1):
                a[k - db + j] = (a[k - db + j] - c * b[j]) % q
    return trim(quo), trim(a[:db])


def mod(a, b, q: int):
    return divmod_(a, b, q)[1]


def monic(a, q: int):
    if not a:
        return a
    inv = pow(a[-1], -1, q)
    return tuple(c * inv % q for c in a)


def gcd(a, b, q: int):
    while b:
        a, b = b, mod(a, b, q)
    return monic(a, q)


def powmod(a, e: int, m, q: int):
    """a**e mod m by square-and-multiply; e may be arbitrarily large."""
    result = mod((1,), m, q)
    base = mod(a, m, q)
    while e:
        if e & 1:
            result = mod(mul(result, base, q), m, q)
        e >>= 1
        if e:
            base = mod(mul(base, base, q), m, q)
    return result


def multiplicative_order(q: int, l: int) -> int:
    f, x = 1, q % l
    while x != 1:
        x = x * q % l
        f += 1
    return f


def equal_degree_factors(h, f: int, q: int, rng: random.Random) -> list[tuple[int, ...]]:
    """Split monic squarefree h, all of whose irreducible factors have degree f."""
    h = monic(h, q)
    n = len(h) - 1
    if n == f:
        return [h]
    while True:
        r = trim(rng.randrange(q) for _ in range(n))
        if len(r) < 2:
            continue
        if q == 2:
            # trace map to GF(2) on each GF(2^f) factor
            t, s = r, r
            for _ in range(f - 1):
                s = mod(mul(s, s, q), h, q)
                t = add(t, s, q)
            g = gcd(h, t, q)
        else:
            g = gcd(h, sub(powmod(r, (q**f - 1) // 2, h, q), (1,), q), q)
        if 0 < len(g) - 1 < n:
            other = divmod_(h, g, q)[0]
            return equal_degree_factors(g, f, q, rng) + equal_degree_factors(other, f, q, rng)
