"""Bruck-Reilly extensions BR(G, alpha) on N x G x N."""

from dataclasses import dataclass
from typing import Any, NamedTuple

from .bicyclic import BicyclicElement
from .groups import FiniteGroup, identity_endo, trivial_group


class BrElement(NamedTuple):
    m: int
    g: Any
    n: int


@dataclass(frozen=True, eq=False)
class BrContext:
    group: Any
    alpha: Any

    def __post_init__(self):
        if self.alpha.group is not self.group:
            raise ValueError("endomorphism belongs to a different group")

    @property
    def e(self):
        return self.group.identity

    def element(self, m, g, n):
        if m < 0 or n < 0:
            raise ValueError("indices must be nonnegative")
        return BrElement(int(m), self.group.check(g), int(n))

    def mul(self, x, y):
        m, g, n = x
        p, h, q = y
        # with r = min(n, p) one of the exponents p - r, n - r is zero
        if n < p:
            return BrElement(m + p - n, self.group.mul(self.alpha.apply_power(p - n, g), h), q)
        return BrElement(m, self.group.mul(g, self.alpha.apply_power(n - p, h)), n + q - p)

    def inv(self, x):
        return BrElement(x.n, self.group.inv(x.g), x.m)

    def idempotent(self, n):
        if n < 0:
            raise ValueError("index must be nonnegative")
        return BrElement(n, self.e, n)

    @property
    def identity(self):
        return self.idempotent(0)

    def format(self, x):
        return f"({x.m},{self.group.format(x.g)},{x.n})"

    def key(self, x):
        return (x.m, x.n, self.group.key(x.g))

    def elements(self, window, norm_bound=None):
        """Elements with both indices <= window, ordered by (m, n, g)."""
        gs = list(self.group.elements(norm_bound))
        return [BrElement(m, g, n) for m in range(window + 1) for n in range(window + 1) for g in gs]


def br_mul(S, x, y):
    return S.mul(x, y)


def br_inv(S, x):
    return S.inv(x)


def br_idempotent(S, n):
    return S.idempotent(n)


def forgetful(x):
    return BicyclicElement(x.m, x.n)


def bicyclic_context():
    """BR({e}, id), a copy of the bicyclic monoid."""
    G = trivial_group()
    return BrContext(G, identity_endo(G))


def is_finite(S):
    return isinstance(S.group, FiniteGroup)
