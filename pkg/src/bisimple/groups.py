"""Coefficient groups, their endomorphisms and subgroups.

Two backends: finite groups given by a Cayley table (elements are ints
``0..order-1``) and free abelian groups Z^r (elements are int tuples).
"""

from itertools import permutations
from operator import add, neg

import numpy as np

from . import lattice

MAX_TABLE_ORDER = 256


class GroupError(ValueError):
    pass


class UnsupportedBackend(GroupError):
    pass


class FiniteGroup:
    backend = "finite-cayley"

    def __init__(self, table, identity=0):
        n = len(table)
        if n == 0:
            raise GroupError("empty Cayley table")
        if n > MAX_TABLE_ORDER:
            raise GroupError(
                f"order {n} exceeds {MAX_TABLE_ORDER}; associativity cannot be fully checked"
            )
        T = np.asarray(table, dtype=np.int64)
        if T.shape != (n, n):
            raise GroupError("Cayley table must be square")
        if T.min() < 0 or T.max() >= n:
            raise GroupError("Cayley table entry out of range")
        if not 0 <= identity < n:
            raise GroupError("identity index out of range")
        ar = np.arange(n)
        if not (np.array_equal(T[identity], ar) and np.array_equal(T[:, identity], ar)):
            raise GroupError(f"element {identity} is not a two-sided identity")
        # T[T[a,b], c] == T[a, T[b,c]] for all a, b, c
        if not np.array_equal(T[T, :], T[:, T]):
            raise GroupError("Cayley table is not associative")
        inverses = []
        for a in range(n):
            (hits,) = np.nonzero(T[a] == identity)
            if len(hits) != 1 or T[hits[0], a] != identity:
                raise GroupError(f"element {a} has no inverse")
            inverses.append(int(hits[0]))
        self.order = n
        self.identity = identity
        self.table = tuple(tuple(int(x) for x in row) for row in T)
        self._inverses = tuple(inverses)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def check(self, a):
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.order:
            raise GroupError(f"element {a!r} out of range for group of order {self.order}")
        return int(a)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inverses[a]

    def power(self, a, l):
        if l < 0:
            a, l = self.inv(a), -l
        r = self.identity
        for _ in range(l):
            r = self.table[r][a]
        return r

    def elements(self, norm_bound=None):
        return range(self.order)

    def key(self, a):
        return a

    def format(self, a):
        return str(a)

    # subgroups

    def subgroup(self, members):
        members = frozenset(self.check(a) for a in members)
        if self.identity not in members:
            raise GroupError("subgroup must contain the identity")
        for a in members:
            if self.inv(a) not in members:
                raise GroupError(f"subset not closed under inverse at {a}")
            for b in members:
                if self.table[a][b] not in members:
                    raise GroupError(f"subset not closed under product at ({a}, {b})")
        return FiniteSubgroup(members)

    def generated(self, gens):
        members = {self.identity}
        frontier = [self.check(g) for g in gens]
        while frontier:
            g = frontier.pop()
            if g in members:
                continue
            members.add(g)
            frontier.extend(self.table[g][h] for h in list(members))
            frontier.extend(self.table[h][g] for h in list(members))
        return FiniteSubgroup(frozenset(members))

    def whole(self):
        return FiniteSubgroup(frozenset(range(self.order)))

    def trivial(self):
        return FiniteSubgroup(frozenset([self.identity]))


class FreeAbelianGroup:
    backend = "free-abelian"

    def __init__(self, rank):
        if rank < 1:
            raise GroupError("rank must be positive")
        self.rank = rank
        self.identity = (0,) * rank

    def __repr__(self):
        return f"FreeAbelianGroup(rank={self.rank})"

    def check(self, a):
        a = tuple(int(x) for x in a)
        if len(a) != self.rank:
            raise GroupError(f"vector {a} does not have length {self.rank}")
        return a

    def mul(self, a, b):
        return tuple(map(add, a, b))

    def inv(self, a):
        return tuple(map(neg, a))

    def power(self, a, l):
        return tuple(l * x for x in a)

    def elements(self, norm_bound=None):
        if norm_bound is None:
            raise UnsupportedBackend("free abelian group is infinite; a norm bound is required")
        return lattice.box(self.rank, norm_bound)

    def key(self, a):
        return (max(map(abs, a)), a)

    def format(self, a):
        return "[" + " ".join(map(str, a)) + "]"

    def subgroup(self, vectors):
        return Lattice(lattice.canonical_basis([self.check(v) for v in vectors], self.rank))

    def whole(self):
        return Lattice(lattice.identity_basis(self.rank))

    def trivial(self):
        return Lattice(())


class FiniteSubgroup:
    __slots__ = ("members",)

    def __init__(self, members):
        self.members = frozenset(members)

    def __contains__(self, a):
        return a in self.members

    def __eq__(self, other):
        return isinstance(other, FiniteSubgroup) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return "{" + ",".join(map(str, sorted(self.members))) + "}"

    def key(self):
        return (len(self.members), tuple(sorted(self.members)))

    def generators(self):
        return sorted(self.members)

    def to_json(self):
        return sorted(self.members)


class Lattice:
    """Subgroup of Z^r held as a canonical HNF basis."""

    __slots__ = ("basis",)

    def __init__(self, basis):
        self.basis = tuple(tuple(b) for b in basis)

    def __contains__(self, a):
        return lattice.contains(self.basis, a)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return "<" + ", ".join("[" + " ".join(map(str, b)) + "]" for b in self.basis) + ">"

    def key(self):
        # smaller subgroups first, as for finite ones
        size = 1
        for b in self.basis:
            size *= abs(b[lattice._pivot(b)])
        return (len(self.basis), -size, self.basis)

    def generators(self):
        return list(self.basis)

    def reduce(self, a):
        return lattice.reduce_mod(self.basis, a)

    def to_json(self):
        return [list(b) for b in self.basis]


class FiniteEndo:
    def __init__(self, group, images):
        images = tuple(group.check(i) for i in images)
        if len(images) != group.order:
            raise GroupError(f"endomorphism needs {group.order} images, got {len(images)}")
        T = np.asarray(group.table)
        im = np.asarray(images)
        if not np.array_equal(im[T], T[np.ix_(im, im)]):
            raise GroupError("map is not a homomorphism")
        self.group = group
        self.images = images
        self._powers = {0: tuple(range(group.order)), 1: images}

    def __repr__(self):
        return f"FiniteEndo({list(self.images)})"

    def table_power(self, n):
        if n not in self._powers:
            prev = self.table_power(n - 1)
            self._powers[n] = tuple(self.images[prev[a]] for a in range(len(prev)))
        return self._powers[n]

    def apply(self, a):
        return self.images[a]

    def apply_power(self, n, a):
        powers = self._powers.get(n)
        if powers is None:
            if n < 0:
                raise ValueError("negative exponent")
            powers = self.table_power(n)
        return powers[a]

    def to_json(self):
        return list(self.images)


class MatrixEndo:
    """Endomorphism of Z^r acting on column vectors, ``a -> A a``."""

    def __init__(self, group, matrix):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        r = group.rank
        if len(matrix) != r or any(len(row) != r for row in matrix):
            raise GroupError(f"endomorphism matrix must be {r}x{r}")
        self.group = group
        self.matrix = matrix
        self._powers = {0: lattice.identity_basis(r), 1: matrix}

    def __repr__(self):
        return f"MatrixEndo({[list(r) for r in self.matrix]})"

    def matrix_power(self, n):
        if n not in self._powers:
            half = self.matrix_power(n // 2)
            sq = lattice.matmul(half, half)
            self._powers[n] = lattice.matmul(sq, self.matrix) if n % 2 else sq
        return self._powers[n]

    def apply(self, a):
        return lattice.matvec(self.matrix, a)

    def apply_power(self, n, a):
        if n < 0:
            raise ValueError("negative exponent")
        if n == 0:
            return a
        return lattice.matvec(self.matrix_power(n), a)

    def to_json(self):
        return [list(r) for r in self.matrix]


def make_endo(group, data):
    if isinstance(group, FiniteGroup):
        return FiniteEndo(group, data)
    return MatrixEndo(group, data)


def identity_endo(group):
    if isinstance(group, FiniteGroup):
        return FiniteEndo(group, range(group.order))
    return MatrixEndo(group, lattice.identity_basis(group.rank))


# spec-level operations on (group, endomorphism, subgroup)


def endo_apply_power(alpha, n, a):
    return alpha.apply_power(n, a)


def subgroup_contains(H, a):
    return a in H


def is_normal(G, H):
    if isinstance(G, FreeAbelianGroup):
        return True
    for g in range(G.order):
        gi = G.inv(g)
        for h in H.members:
            if G.mul(G.mul(gi, h), g) not in H:
                return False
    return True


def is_admissible(alpha, H):
    return all(alpha.apply(h) in H for h in H.generators())


def preimage_subgroup(alpha, H):
    G = alpha.group
    if isinstance(G, FiniteGroup):
        return FiniteSubgroup(g for g in range(G.order) if alpha.images[g] in H)
    return Lattice(lattice.preimage(alpha.matrix, H.basis, G.rank))


def is_invariant(alpha, H):
    return preimage_subgroup(alpha, H) == H


def image_subgroup(alpha, n=1):
    """The subgroup G alpha^n."""
    G = alpha.group
    if isinstance(G, FiniteGroup):
        return FiniteSubgroup(alpha.table_power(n))
    return Lattice(lattice.image(alpha.matrix_power(n), G.rank))


def product_subgroup(G, H, K):
    """HK for normal H (so that HK is a subgroup)."""
    if isinstance(G, FiniteGroup):
        return FiniteSubgroup(G.mul(h, k) for h in H.members for k in K.members)
    return Lattice(lattice.join(H.basis, K.basis, G.rank))


def kernel_power(alpha, n):
    G = alpha.group
    if isinstance(G, FiniteGroup):
        powered = alpha.table_power(n)
        return FiniteSubgroup(g for g in range(G.order) if powered[g] == G.identity)
    return Lattice(lattice.kernel(alpha.matrix_power(n), G.rank))


def stable_kernel(alpha):
    """Elements killed by some positive power of alpha."""
    n = 1
    K = kernel_power(alpha, 1)
    while True:
        nxt = kernel_power(alpha, n + 1)
        if nxt == K:
            return K
        K, n = nxt, n + 1


def hnf(matrix):
    return lattice.hnf(matrix)


def normal_closure(G, gens):
    gens = set(gens)
    conj = {G.mul(G.mul(G.inv(g), h), g) for h in gens for g in range(G.order)}
    H = G.generated(conj)
    while True:
        conj = {G.mul(G.mul(G.inv(g), h), g) for h in H.members for g in range(G.order)}
        if conj <= H.members:
            return H
        H = G.generated(H.members | conj)


def enumerate_normal_subgroups(G):
    if not isinstance(G, FiniteGroup):
        raise UnsupportedBackend("normal subgroup enumeration needs a finite group")
    found = {G.trivial()}
    found.update(normal_closure(G, [g]) for g in range(G.order))
    # every normal subgroup is a product of normal closures of single elements
    frontier = list(found)
    while frontier:
        new = []
        for A in frontier:
            for B in list(found):
                C = product_subgroup(G, A, B)
                if C not in found:
                    found.add(C)
                    new.append(C)
        frontier = new
    return sorted(found, key=lambda H: H.key())


def enumerate_subgroups(G):
    """All subgroups of a small finite group (used by brute-force checks)."""
    found = {G.trivial()}
    frontier = list(found)
    while frontier:
        new = []
        for H in frontier:
            for g in range(G.order):
                if g not in H:
                    K = G.generated(set(H.members) | {g})
                    if K not in found:
                        found.add(K)
                        new.append(K)
        frontier = new
    return sorted(found, key=lambda H: H.key())


# stock groups


def cyclic_group(n):
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)])


def trivial_group():
    return cyclic_group(1)


def multiplication_endo(G, c):
    """a -> c*a on a cyclic group Z/n."""
    return FiniteEndo(G, [(c * a) % G.order for a in range(G.order)])


def symmetric_group(n):
    """S_n on points 0..n-1; element i is the i-th permutation in lex order.

    Product is composition ``(p*q)(x) = p(q(x))``.
    """
    perms = list(permutations(range(n)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table), perms


def free_abelian(rank):
    return FreeAbelianGroup(rank)
