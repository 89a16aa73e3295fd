"""Deciding which congruences on BR(G, alpha) are perfect."""

from dataclasses import dataclass
from typing import Any, Optional

from . import groups, lattice
from .bruck_reilly import BrElement
from .groups import FiniteGroup

THM_IS = "thm-3.2"
K_ZERO = "prop-4.8"
COVER_POS = "thm-4.10-pos"
COVER_NEG = "thm-4.10-neg"

DEFAULT_NMAX = 8


class InternalInconsistency(RuntimeError):
    pass


class NotPerfect(ValueError):
    pass


@dataclass(frozen=True)
class PerfectVerdict:
    status: str  # "perfect" or "not-perfect"
    reason: str
    evidence: Optional[tuple] = None  # (n, x) with G alpha^n disjoint from Nx

    def __post_init__(self):
        if (self.evidence is not None) != (self.reason == COVER_NEG):
            raise ValueError("evidence is required exactly for the covering failure")

    @property
    def perfect(self):
        return self.status == "perfect"

    def summary(self, G=None):
        s = f"{self.status} ({self.reason})"
        if self.evidence:
            n, x = self.evidence
            xs = G.format(x) if G is not None else str(x)
            s += f": G alpha^{n} misses coset N{xs}"
        return s

    def to_json(self, G=None):
        out = {"status": self.status, "reason": self.reason}
        if self.evidence is not None:
            n, x = self.evidence
            out["evidence"] = [n, list(x) if isinstance(x, tuple) else x]
        return out

    @classmethod
    def from_json(cls, data):
        ev = data.get("evidence")
        if ev is not None:
            n, x = ev
            ev = (n, tuple(x) if isinstance(x, list) else x)
        return cls(data["status"], data["reason"], ev)


def _uncovered_coset(S, N, n):
    """A coset Nx missed by G alpha^n, as a representative x, or None."""
    G, alpha = S.group, S.alpha
    if isinstance(G, FiniteGroup):
        hit = {G.mul(a, y) for a in N.members for y in set(alpha.table_power(n))}
        for x in range(G.order):
            if x not in hit:
                return x
        return None
    total = lattice.join(N.basis, lattice.image(alpha.matrix_power(n), G.rank), G.rank)
    for e in lattice.identity_basis(G.rank):
        if not lattice.contains(total, e):
            return e
    return None


def condition15(S, N, n_max=DEFAULT_NMAX):
    """Does G alpha^n meet every coset of N for all n >= 1?

    Returns ``(holds, evidence)``.  The n = 1 case decides it, because
    N G alpha = G gives N G alpha^(n+1) = G once N alpha is inside N; the
    cases n <= n_max are still checked directly as a guard.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    first = _uncovered_coset(S, N, 1)
    for n in range(2, n_max + 1):
        direct = _uncovered_coset(S, N, n)
        if first is None and direct is not None:
            raise InternalInconsistency(
                f"covering holds for n=1 but fails for n={n} at x={S.group.format(direct)}"
            )
    if first is None:
        return True, None
    return False, (1, first)


def classify(spec, n_max=DEFAULT_NMAX):
    if spec.variant == "is":
        return PerfectVerdict("perfect", THM_IS)
    if spec.k == 0:
        return PerfectVerdict("not-perfect", K_ZERO)
    holds, evidence = condition15(spec.context, spec.N, n_max)
    if holds:
        return PerfectVerdict("perfect", COVER_POS)
    return PerfectVerdict("not-perfect", COVER_NEG, evidence)


def _solve_coset(S, N, j, target):
    """Some h with h alpha^j in N*target, reduced to a canonical choice."""
    G, alpha = S.group, S.alpha
    if isinstance(G, FiniteGroup):
        ti = G.inv(target)
        for h in range(G.order):
            if G.mul(alpha.apply_power(j, h), ti) in N:
                return h
        return None
    # A^j h - b = target with b in N
    Aj = alpha.matrix_power(j)
    M = [list(row) + [-b[i] for b in N.basis] for i, row in enumerate(Aj)]
    sol = lattice.solve(M, target)
    if sol is None:
        return None
    h = sol[: G.rank]
    fibre = lattice.preimage(Aj, N.basis, G.rank)
    return lattice.reduce_mod(fibre, h)


def _left_witness(spec, x):
    S = spec.context
    G, alpha = S.group, S.alpha
    i, f, j = x
    k = spec.k
    l = 1
    while j - i + k * l < 0:
        l += 1
    q = j - i + k * l
    # h alpha^j in N z^l (f alpha^q)
    target = G.mul(G.power(spec.z, l), alpha.apply_power(q, f))
    h = _solve_coset(S, spec.N, j, target)
    if h is None:
        raise InternalInconsistency(f"no h solves the coset equation for {S.format(x)}")
    return BrElement(0, h, q)


def class_witnesses(spec, x, n_max=DEFAULT_NMAX):
    """Members (0,h,q) and (m',g',0) of the class of x, for perfect k >= 1 specs."""
    if spec.variant != "gc" or spec.k == 0:
        raise NotPerfect(f"{spec.label} is not a group congruence with k >= 1")
    if not classify(spec, n_max).perfect:
        raise NotPerfect(f"{spec.label} is not perfect")
    S = spec.context
    left = _left_witness(spec, x)
    right = S.inv(_left_witness(spec, S.inv(x)))
    for w in (left, right):
        if not spec.contains(x, w):
            raise InternalInconsistency(f"witness {S.format(w)} is not in the class of {S.format(x)}")
    return left, right


def alpha_is_surjective(S):
    return groups.image_subgroup(S.alpha) == S.group.whole()
