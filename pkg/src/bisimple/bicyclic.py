"""The bicyclic monoid on N x N and its congruences zeta_k."""

from typing import NamedTuple


class BicyclicElement(NamedTuple):
    m: int
    n: int

    def __str__(self):
        return f"({self.m},{self.n})"


IDENTITY = BicyclicElement(0, 0)


def b_mul(x, y):
    r = min(x.n, y.m)
    return BicyclicElement(x.m + y.m - r, x.n + y.n - r)


def b_div(x, y, side):
    """Divisibility: right means y in xB, left means y in Bx."""
    if side == "right":
        return x.m <= y.m
    if side == "left":
        return x.n <= y.n
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def zeta_contains(k, x, y):
    d = (x.n - x.m) - (y.n - y.m)
    if k == 0:
        return d == 0
    return d % k == 0


def window(w):
    return [BicyclicElement(m, n) for m in range(w + 1) for n in range(w + 1)]
