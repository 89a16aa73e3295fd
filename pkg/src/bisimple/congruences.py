"""Congruences on BR(G, alpha): validation, membership, classes, catalog.

Every congruence is carried symbolically.  Idempotent-separating ones are
determined by an alpha-admissible normal subgroup N; group congruences by a
triple (N, z, k) with N normal and alpha-invariant.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Optional

from . import groups, lattice
from .bruck_reilly import BrElement
from .groups import FiniteGroup, UnsupportedBackend


class ValidationError(ValueError):
    """A congruence parameter fails one of the defining conditions."""

    def __init__(self, condition, message, witness=None):
        super().__init__(f"{condition}: {message}")
        self.condition = condition
        self.witness = witness


@dataclass(frozen=True, eq=False)
class CongruenceSpec:
    context: Any
    variant: str  # "is" or "gc"
    N: Any
    z: Any = None
    k: Optional[int] = None
    certificate: dict = field(default_factory=dict)
    name: Optional[str] = None

    def _identity(self):
        G = self.context.group
        if self.variant == "is":
            return ("is", self.N)
        if self.k == 0:
            return ("gc", self.N, 0)
        return ("gc", self.N, self.k, coset_key(G, self.N, self.z))

    def __eq__(self, other):
        return isinstance(other, CongruenceSpec) and self._identity() == other._identity()

    def __hash__(self):
        return hash(self._identity())

    def contains(self, x, y):
        if self.variant == "is":
            return is_contains(self, x, y)
        return gc_contains(self, x, y)

    @property
    def label(self):
        name = self.name or repr(self.N)
        if self.variant == "is":
            return f"is:{name}"
        return f"gc:{name},z={self.context.group.format(self.z)},k={self.k}"

    def __repr__(self):
        return f"CongruenceSpec({self.label})"


def coset_key(G, N, z):
    """Canonical label of the coset Nz."""
    if isinstance(G, FiniteGroup):
        return min(G.mul(a, z) for a in N.members)
    return N.reduce(z)


def validate_is(S, N, name=None):
    G = S.group
    if not groups.is_normal(G, N):
        raise ValidationError("not-normal", f"{N!r} is not a normal subgroup")
    if not groups.is_admissible(S.alpha, N):
        raise ValidationError("not-admissible", f"{N!r} is not mapped into itself by alpha")
    return CongruenceSpec(S, "is", N, certificate={"normal": True, "admissible": True}, name=name)


def _cond10_violation(S, N, z, k):
    G, alpha = S.group, S.alpha
    zi = G.inv(z)
    if isinstance(G, FiniteGroup):
        candidates = range(G.order)
    else:
        candidates = lattice.identity_basis(G.rank)
    for g in candidates:
        t = G.mul(G.mul(G.mul(G.inv(g), z), alpha.apply_power(k, g)), zi)
        if t not in N:
            return g
    return None


def validate_gc(S, N, z, k, name=None):
    G, alpha = S.group, S.alpha
    z = G.check(z)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not groups.is_normal(G, N):
        raise ValidationError("not-normal", f"{N!r} is not a normal subgroup")
    if not groups.is_invariant(alpha, N):
        raise ValidationError("not-invariant", f"preimage of {N!r} under alpha differs from it")
    if G.mul(alpha.apply(z), G.inv(z)) not in N:
        raise ValidationError("cond9-failed", f"N(z alpha) != Nz for z={G.format(z)}")
    g = _cond10_violation(S, N, z, k)
    if g is not None:
        raise ValidationError(
            "cond10-failed",
            f"g^-1 (Nz) (g alpha^{k}) != Nz at g={G.format(g)}",
            witness=g,
        )
    cert = {"normal": True, "invariant": True, "cond9": True, "cond10": True}
    return CongruenceSpec(S, "gc", N, z, int(k), cert, name)


def is_contains(spec, x, y):
    G = spec.context.group
    (m, g, n), (p, h, q) = x, y
    return m == p and n == q and G.mul(g, G.inv(h)) in spec.N


def gc_contains(spec, x, y):
    S = spec.context
    G, alpha = S.group, S.alpha
    (m, g, n), (p, h, q) = x, y
    d = (q - p) - (n - m)
    t = G.mul(alpha.apply_power(n, h), G.inv(alpha.apply_power(q, g)))
    if spec.k == 0:
        return d == 0 and t in spec.N
    if d % spec.k:
        return False
    l = d // spec.k
    return G.mul(t, G.power(spec.z, -l)) in spec.N


def class_members(spec, x, window, norm_bound=None):
    """Members of the class of x with both indices <= window.

    On the free abelian backend group coordinates are limited to
    ``[-norm_bound, norm_bound]``.
    """
    if window < max(x.m, x.n):
        raise ValueError(f"window {window} is smaller than the indices of {x}")
    S = spec.context
    G = S.group
    if spec.variant == "is":
        if isinstance(G, FiniteGroup):
            hs = {G.mul(a, x.g) for a in spec.N.members}
        else:
            hs = [h for h in G.elements(norm_bound) if G.mul(h, G.inv(x.g)) in spec.N]
        return sorted((BrElement(x.m, h, x.n) for h in hs), key=S.key)
    return [y for y in S.elements(window, norm_bound) if gc_contains(spec, x, y)]


def recover_kernel(spec, norm_bound=None):
    """{a : (0,a,0) is related to (0,e,0)}, computed by membership."""
    S = spec.context
    one = S.identity
    return [a for a in S.group.elements(norm_bound) if spec.contains(BrElement(0, a, 0), one)]


def sigma_spec(S, name=None):
    """The minimum group congruence."""
    return validate_gc(S, groups.stable_kernel(S.alpha), S.e, 0, name)


class Catalog(list):
    """Congruence specs, truncated at k <= kmax."""

    def __init__(self, specs, kmax, notes=()):
        super().__init__(specs)
        self.kmax = kmax
        self.notes = list(notes)


def _coset_reps(G, N, norm_bound):
    """Representatives of G/N; second value is False if the list is truncated."""
    if isinstance(G, FiniteGroup):
        reps, seen = [], set()
        for z in range(G.order):
            c = coset_key(G, N, z)
            if c not in seen:
                seen.add(c)
                reps.append(z)
        return reps, True
    if len(N.basis) == G.rank:
        # full rank: the reduced representatives fill a box of pivot sizes
        ranges = [range(b[lattice._pivot(b)]) for b in N.basis]
        reps = sorted(set(product(*ranges)), key=G.key)
        return reps, True
    reps = sorted({N.reduce(v) for v in G.elements(norm_bound)}, key=G.key)
    return reps, False


def catalog(S, kmax, subgroup_pool=None, names=None, norm_bound=2):
    G = S.group
    if subgroup_pool is None:
        if not isinstance(G, FiniteGroup):
            raise UnsupportedBackend("catalog over a free abelian group needs a subgroup pool")
        pool = groups.enumerate_normal_subgroups(G)
    else:
        pool = sorted(set(subgroup_pool), key=lambda H: H.key())
    names = dict(names or {})
    for i, N in enumerate(pool):
        names.setdefault(N, f"N{i}")

    pool = [N for N in pool if groups.is_normal(G, N)]
    specs, notes = [], []
    for N in pool:
        if groups.is_admissible(S.alpha, N):
            specs.append(validate_is(S, N, names[N]))
    for N in pool:
        if not groups.is_invariant(S.alpha, N):
            continue
        reps, complete = _coset_reps(G, N, norm_bound)
        if not complete:
            notes.append(f"{names[N]}: cosets of infinite index listed up to norm {norm_bound}")
        for k in range(kmax + 1):
            # for k = 0 the class structure does not depend on z
            for z in reps if k else [G.identity]:
                try:
                    specs.append(validate_gc(S, N, z, k, names[N]))
                except ValidationError as err:
                    if err.condition not in ("cond9-failed", "cond10-failed"):
                        raise
    return Catalog(specs, kmax, notes)


def spec_to_json(spec):
    G = spec.context.group
    out = {
        "variant": spec.variant,
        "name": spec.name,
        "N": spec.N.to_json(),
        "z": None,
        "k": None,
        "certificate": dict(spec.certificate),
    }
    if spec.variant == "gc":
        out["z"] = spec.z if isinstance(G, FiniteGroup) else list(spec.z)
        out["k"] = spec.k
    return out


def spec_from_json(S, data):
    """Rebuild and re-validate a spec from its JSON form."""
    G = S.group
    N = G.subgroup(data["N"])
    if data["variant"] == "is":
        return validate_is(S, N, data.get("name"))
    if data["variant"] == "gc":
        return validate_gc(S, N, data["z"], data["k"], data.get("name"))
    raise ValueError(f"unknown variant {data['variant']!r}")
