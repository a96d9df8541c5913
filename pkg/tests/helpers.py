"""Reference implementations and grid generators shared across the tests.

Everything here is deliberately written a different way than the package
code: recursion instead of slicing, brute force instead of closed forms,
so agreement between the two is meaningful.
"""

from __future__ import annotations

import itertools
import random


def all_words(n: int):
    """Every binary word of length n in lexicographic order."""
    for bits in itertools.product("01", repeat=n):
        yield "".join(bits)


def deinterleave_recursive(y: str) -> str:
    """Peel the first symbol to the front and the second to the back."""
    if len(y) < 2:
        return y
    return y[0] + deinterleave_recursive(y[2:]) + y[1]


def interleave_recursive(x: str) -> str:
    """Inverse of the peel: first symbol, last symbol, then the middle."""
    if len(x) < 2:
        return x
    return x[0] + x[-1] + interleave_recursive(x[1:-1])


def unit_k(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def triangular_k(n: int) -> tuple[int, ...]:
    """1, 3, 6, 10, ...: the gaps themselves grow by one each step."""
    return tuple(i * (i + 1) // 2 for i in range(1, n + 1))


def random_k(n: int, seed: int) -> tuple[int, ...]:
    """Strictly increasing positive weights with seeded random gaps."""
    rng = random.Random(seed)
    value = 0
    out = []
    for _ in range(n):
        value += rng.randint(1, 4)
        out.append(value)
    return tuple(out)


def monotone_k_families(n: int) -> list[tuple[int, ...]]:
    return [unit_k(n), triangular_k(n)] + [random_k(n, seed) for seed in range(5)]


def random_word(rng: random.Random, n: int) -> str:
    return format(rng.getrandbits(n), f"0{n}b") if n else ""
