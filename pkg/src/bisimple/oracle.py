"""Brute-force perfectness checks on finite slices of BR(G, alpha).

Nothing here consults the classification rules.  Class products are
enumerated directly, so a reported gap is a concrete element of (xy)e that
no product x'y' reached within the search bounds.
"""

from dataclasses import dataclass, field

from .bicyclic import BicyclicElement, b_mul
from .bruck_reilly import BrElement
from .congruences import class_members


class InclusionViolation(RuntimeError):
    """A product of class members escaped the class of the product."""


@dataclass
class VerificationReport:
    pair: tuple
    window: int
    bound: int
    covered: int
    uncovered: list = field(default_factory=list)
    exact: bool = False

    @property
    def status(self):
        return "uncovered-within-bound" if self.uncovered else "covered"

    def to_json(self, S):
        def enc(x):
            g = list(x.g) if isinstance(x.g, tuple) else x.g
            return [x.m, g, x.n]

        return {
            "pair": [enc(x) for x in self.pair],
            "window": self.window,
            "bound": self.bound,
            "status": self.status,
            "exact": self.exact,
            "covered": self.covered,
            "uncovered": [enc(w) for w in self.uncovered],
        }

    @classmethod
    def from_json(cls, data):
        def dec(v):
            m, g, n = v
            return BrElement(m, tuple(g) if isinstance(g, list) else g, n)

        return cls(
            pair=tuple(dec(v) for v in data["pair"]),
            window=data["window"],
            bound=data["bound"],
            covered=data["covered"],
            uncovered=[dec(v) for v in data["uncovered"]],
            exact=data.get("exact", False),
        )


def _indices(x):
    return max(x.m, x.n)


class _Classes:
    """Memoized class enumeration within a fixed bound."""

    def __init__(self, spec, bound, norm_bound):
        self.spec = spec
        self.bound = bound
        self.norm_bound = norm_bound
        self.block_of = {}
        self.blocks = []

    def block(self, x):
        b = self.block_of.get(x)
        if b is not None:
            return b
        members = class_members(self.spec, x, max(self.bound, _indices(x)), self.norm_bound)
        members = [w for w in members if _indices(w) <= self.bound]
        b = self.block_of.get(members[0]) if members else None
        if b is None:
            b = len(self.blocks)
            self.blocks.append(members)
            for w in members:
                self.block_of[w] = b
        self.block_of[x] = b
        return b

    def members(self, x):
        return self.blocks[self.block(x)]


def _buckets(members, keep):
    out = {}
    for u in members:
        if keep(u):
            out.setdefault((u.m, u.n), []).append(u.g)
    return out


def _products(spec, classes, x, y, window):
    """Products u*v of class members landing in the window.

    Every such product is checked to lie in the class of xy.
    """
    S = spec.context
    G, alpha = S.group, S.alpha
    xy = S.mul(x, y)
    # u*v = w forces u.m <= w.m and v.n <= w.n
    left = _buckets(classes.members(x), lambda u: u.m <= window)
    right = _buckets(classes.members(y), lambda v: v.n <= window)
    products = set()
    for (a, b), gs in left.items():
        for (c, d), hs in right.items():
            r = min(b, c)
            m, n = a + c - r, b + d - r
            if m > window or n > window:
                continue
            # same formula as BrContext.mul, grouped by index pair
            gs_ = [alpha.apply_power(c - r, g) for g in gs]
            hs_ = [alpha.apply_power(b - r, h) for h in hs]
            for g in gs_:
                for h in hs_:
                    # plain tuples hash and compare like BrElement
                    w = (m, G.mul(g, h), n)
                    if w in products:
                        continue
                    if not spec.contains(xy, w):
                        raise InclusionViolation(
                            f"a product of class members, {S.format(BrElement(*w))}, "
                            f"is not in the class of {S.format(xy)}"
                        )
                    products.add(w)
    return products


def _cover(spec, classes, x, y, window, products=None):
    S = spec.context
    if products is None:
        products = _products(spec, classes, x, y, window)
    target = [w for w in classes.members(S.mul(x, y)) if _indices(w) <= window]
    uncovered = [w for w in target if w not in products]
    return len(target) - len(uncovered), uncovered


def _check_bounds(window, bound, *elements):
    need = max((_indices(x) for x in elements), default=0)
    if not bound >= window >= need:
        raise ValueError(f"bounds must satisfy bound >= window >= {need}; got window={window}, bound={bound}")


def set_product_window(spec, x, y, window, bound, norm_bound=None, _classes=None):
    S = spec.context
    if norm_bound is None:
        norm_bound = bound
    _check_bounds(window, bound, x, y, S.mul(x, y))
    classes = _classes or _Classes(spec, bound, norm_bound)
    covered, uncovered = _cover(spec, classes, x, y, window)
    return VerificationReport((x, y), window, bound, covered, uncovered, spec.variant == "is")


def falsify_perfectness(spec, window, bound, norm_bound=None, pair_norm=None):
    """First pair (x, y) with indices <= window whose class product misses
    part of (xy)e, as a VerificationReport; None if every pair is covered.

    Group coordinates of the pairs range over the whole group (finite) or
    ``[-pair_norm, pair_norm]`` (free abelian, default ``norm_bound``).
    """
    S = spec.context
    if norm_bound is None:
        norm_bound = bound
    if pair_norm is None:
        pair_norm = norm_bound
    _check_bounds(window, bound)
    classes = _Classes(spec, bound, norm_bound)
    elements = S.elements(window, pair_norm)
    # product windows never exceed twice the pair window
    top = min(2 * window, bound)
    products, seen = {}, {}
    for x in elements:
        for y in elements:
            xy = S.mul(x, y)
            w = max(window, _indices(xy))
            _check_bounds(w, bound)
            bx, by = classes.block(x), classes.block(y)
            if (bx, by) not in products:
                products[bx, by] = _products(spec, classes, x, y, top)
            key = (bx, by, w)
            if key not in seen:
                seen[key] = _cover(spec, classes, x, y, w, products[bx, by])
            covered, uncovered = seen[key]
            if uncovered:
                return VerificationReport((x, y), w, bound, covered, list(uncovered), spec.variant == "is")
    return None


def right_divides(S, w, v, bound):
    """Some t with w*t == v and indices <= bound, or None."""
    b = BicyclicElement(w.m, w.n)
    target = BicyclicElement(v.m, v.n)
    G, alpha = S.group, S.alpha
    # factors with s < w.n can be rewritten with s >= w.n, so only those are tried
    for s in range(w.n, bound + 1):
        for t2 in range(bound + 1):
            if b_mul(b, BicyclicElement(s, t2)) != target:
                continue
            g = G.mul(G.inv(alpha.apply_power(s - w.n, w.g)), v.g)
            t = BrElement(s, g, t2)
            if S.mul(w, t) == v:
                return t
    return None


def composition_witness(spec, u, v, bound, norm_bound=None, _classes=None):
    """Some w with (u, w) in e and v in wS, searched within bound."""
    S = spec.context
    if norm_bound is None:
        norm_bound = bound
    classes = _classes or _Classes(spec, bound, norm_bound)
    for w in classes.members(u):
        if w.m <= v.m and right_divides(S, w, v, bound) is not None:
            return w
    return None


def divisibility_gap(spec, window, bound, norm_bound=None, pair_norm=None):
    """First pair (u, v) not in e o delta_r within the bounds, or None."""
    if spec.variant != "gc":
        raise ValueError("divisibility closure applies to group congruences")
    S = spec.context
    if norm_bound is None:
        norm_bound = bound
    if pair_norm is None:
        pair_norm = norm_bound
    _check_bounds(window, bound)
    classes = _Classes(spec, bound, norm_bound)
    elements = S.elements(window, pair_norm)
    for u in elements:
        for v in elements:
            if composition_witness(spec, u, v, bound, norm_bound, classes) is None:
                return u, v
    return None


def divisibility_closure_check(spec, window, bound, norm_bound=None, pair_norm=None):
    return divisibility_gap(spec, window, bound, norm_bound, pair_norm) is None
