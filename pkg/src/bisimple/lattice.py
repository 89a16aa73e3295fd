"""Exact integer linear algebra for subgroups of Z^r.

Lattices are stored as tuples of basis vectors in row-echelon Hermite
normal form.  Everything works on plain Python ints, so there is no
overflow when matrix powers grow.
"""

from itertools import product


def _echelon(rows, ncols, track=False):
    """Row-reduce ``rows`` to Hermite normal form.

    Returns ``(H, U, rank)`` with ``U * rows == H`` (``U`` unimodular, or
    ``None`` when ``track`` is false).  The first ``rank`` rows of ``H`` are
    the nonzero ones; pivots are positive and entries above a pivot lie in
    ``[0, pivot)``.
    """
    A = [list(r) for r in rows]
    n = len(A)
    U = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def addmul(dst, src, q):
        # row[dst] -= q * row[src]
        if q:
            A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
            if track:
                U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    p = 0
    for col in range(ncols):
        if p == n:
            break
        while True:
            nz = [i for i in range(p, n) if A[i][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(A[i][col]))
            swap(p, best)
            clean = True
            for i in range(p + 1, n):
                if A[i][col]:
                    addmul(i, p, A[i][col] // A[p][col])
                    if A[i][col]:
                        clean = False
            if clean:
                break
        if A[p][col] == 0:
            continue
        if A[p][col] < 0:
            A[p] = [-a for a in A[p]]
            if track:
                U[p] = [-a for a in U[p]]
        for i in range(p):
            addmul(i, p, A[i][col] // A[p][col])
        p += 1
    return A, U, p


def _pivot(v):
    for i, a in enumerate(v):
        if a:
            return i
    raise ValueError("zero vector has no pivot")


def canonical_basis(vectors, rank):
    """HNF basis (tuple of row tuples) of the lattice spanned by ``vectors``."""
    H, _, k = _echelon(vectors, rank)
    return tuple(tuple(row) for row in H[:k])


def hnf(matrix):
    """Column-style Hermite normal form of an integer matrix.

    ``matrix`` is a list of rows; its columns generate a lattice.  The result
    has the same number of rows and one column per basis vector, with zero
    columns dropped.
    """
    nrows = len(matrix)
    if nrows == 0:
        return []
    cols = [list(c) for c in zip(*matrix)]
    basis = canonical_basis(cols, nrows)
    return [[b[i] for b in basis] for i in range(nrows)]


def reduce_mod(basis, v):
    """Canonical representative of the coset ``v + L``.

    Two vectors lie in the same coset iff their reductions are equal.
    """
    v = list(v)
    for b in basis:
        c = _pivot(b)
        q = v[c] // b[c]
        if q:
            v = [x - q * y for x, y in zip(v, b)]
    return tuple(v)


def contains(basis, v):
    return not any(reduce_mod(basis, v))


def coefficients(basis, v):
    """Integer coefficients expressing ``v`` in ``basis``, or None."""
    v = list(v)
    coeffs = []
    for b in basis:
        c = _pivot(b)
        if v[c] % b[c]:
            return None
        q = v[c] // b[c]
        coeffs.append(q)
        v = [x - q * y for x, y in zip(v, b)]
    if any(v):
        return None
    return coeffs


def solve(matrix, rhs):
    """One integer solution ``x`` of ``matrix @ x == rhs``, or None."""
    ncols = len(matrix[0]) if matrix else 0
    cols = [list(c) for c in zip(*matrix)] if ncols else []
    H, U, k = _echelon(cols, len(matrix), track=True)
    w = coefficients([tuple(r) for r in H[:k]], rhs)
    if w is None:
        return None
    x = [0] * ncols
    for wi, ui in zip(w, U):
        x = [a + wi * b for a, b in zip(x, ui)]
    return tuple(x)


def kernel(matrix, ncols):
    """HNF basis of ``{x in Z^ncols : matrix @ x == 0}``."""
    if not matrix:
        return identity_basis(ncols)
    cols = [list(c) for c in zip(*matrix)]
    _, U, k = _echelon(cols, len(matrix), track=True)
    return canonical_basis(U[k:], ncols)


def identity_basis(rank):
    return tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))


def join(a, b, rank):
    return canonical_basis(list(a) + list(b), rank)


def preimage(matrix, basis, rank):
    """HNF basis of ``{x : matrix @ x in L}`` for the lattice ``L``."""
    # kernel of [A | -B]; keep the x-part
    aug = [list(row) + [-b[i] for b in basis] for i, row in enumerate(matrix)]
    ker = kernel(aug, rank + len(basis))
    return canonical_basis([v[:rank] for v in ker], rank)


def matvec(matrix, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in matrix)


def matmul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matpow(matrix, n):
    result = identity_basis(len(matrix))
    base = tuple(tuple(r) for r in matrix)
    while n:
        if n & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        n >>= 1
    return result


def image(matrix, rank):
    """HNF basis of the column span of a square matrix."""
    return canonical_basis([list(c) for c in zip(*matrix)], rank)


def index(sub, sup, rank):
    """``[sup : sub]`` for lattices of equal rank, None if infinite.

    ``sub`` must be contained in ``sup``.
    """
    if len(sub) != len(sup):
        return None
    coords = []
    for b in sub:
        c = coefficients(sup, b)
        if c is None:
            raise ValueError("sub is not contained in sup")
        coords.append(c)
    det = 1
    for b in canonical_basis(coords, len(sup)):
        det *= b[_pivot(b)]
    return det


def box(rank, bound):
    """All vectors with coordinates in ``[-bound, bound]``, by max-norm then lex."""
    vs = product(range(-bound, bound + 1), repeat=rank)
    return sorted(vs, key=lambda v: (max(map(abs, v), default=0), v))
