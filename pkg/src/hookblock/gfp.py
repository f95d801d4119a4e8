"""Exact linear algebra over the prime field F_p.

Matrices are plain numpy ``int64`` arrays whose entries are kept reduced
to ``[0, p)``.  Every routine takes the prime explicitly; nothing here
ever touches floating point.
"""

import numpy as np


class DimensionError(ValueError):
    pass


class ContainmentError(ValueError):
    pass


def as_fp(M, p):
    """Copy ``M`` into a reduced int64 array."""
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else A.reshape(0, 0)
    return A % p


def inv(a, p):
    return pow(int(a) % p, -1, p)


def rref(M, p):
    """Reduced row echelon form with first-nonzero pivoting.

    Returns ``(R, rank, pivots)`` where ``R`` has the shape of ``M``, its
    first ``rank`` rows are the nonzero reduced rows and ``pivots`` lists
    the pivot column of each of them.
    """
    A = as_fp(M, p)
    nrows, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        a = int(A[r, c])
        if a != 1:
            A[r, c:] = A[r, c:] * inv(a, p) % p
        col = A[:, c].copy()
        col[r] = 0
        targets = np.flatnonzero(col)
        if targets.size:
            A[np.ix_(targets, np.arange(c, ncols))] = (
                A[targets, c:] - np.outer(col[targets], A[r, c:])) % p
        pivots.append(c)
        r += 1
    return A, r, tuple(pivots)


def rank(M, p):
    A = as_fp(M, p)
    if A.size == 0:
        return 0
    # Eliminate along the shorter side.
    if A.shape[0] > A.shape[1]:
        A = A.T
    return rref(A, p)[1]


def kernel_basis(M, p):
    """Rows spanning ``{x : M x = 0}``, in reduced echelon form."""
    A = as_fp(M, p)
    ncols = A.shape[1]
    R, r, pivots = rref(A, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    K = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        K[k, f] = 1
        for i, c in enumerate(pivots):
            K[k, c] = -R[i, f] % p
    return rref(K, p)[0] if len(free) else K


def image_basis(M, p):
    """Canonical rows spanning the column space of ``M``."""
    A = as_fp(M, p)
    R, r, _ = rref(A.T, p)
    return R[:r]


def row_space(M, p):
    R, r, _ = rref(M, p)
    return R[:r]


def solve(M, b, p):
    """Some ``x`` with ``M x = b``, or ``None`` when the system is inconsistent."""
    A = as_fp(M, p)
    b = as_fp(b, p).reshape(-1)
    if b.shape[0] != A.shape[0]:
        raise DimensionError(f"right-hand side has length {b.shape[0]}, expected {A.shape[0]}")
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, r, pivots = rref(aug, p)
    if pivots and pivots[-1] == A.shape[1]:
        return None
    x = np.zeros(A.shape[1], dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = R[i, -1]
    return x


def solve_left(B, Y, p):
    """Coefficients ``C`` with ``C @ B == Y`` (rows of ``Y`` in the row space of ``B``).

    Raises ``ContainmentError`` if some row of ``Y`` is not in that span.
    """
    B = as_fp(B, p)
    Y = as_fp(Y, p)
    k = B.shape[0]
    if Y.shape[0] == 0:
        return np.zeros((0, k), dtype=np.int64)
    aug = np.concatenate([B.T, Y.T], axis=1)
    R, r, pivots = rref(aug, p)
    if pivots and pivots[-1] >= k:
        raise ContainmentError("vector outside the span")
    C = np.zeros((Y.shape[0], k), dtype=np.int64)
    for i, c in enumerate(pivots):
        C[:, c] = R[i, k:]
    return C


_EXACT = 2 ** 52


def matmul(A, B, p):
    """Product mod p.

    Inputs are reduced first; when every dot product of reduced entries stays
    below 2^52 the product runs through float64 BLAS, where it is exact.
    """
    A = np.asarray(A, dtype=np.int64) % p
    B = np.asarray(B, dtype=np.int64) % p
    inner = A.shape[-1] if A.ndim else 1
    if inner * (p - 1) ** 2 < _EXACT and A.size and B.size:
        C = A.astype(np.float64) @ B.astype(np.float64)
        return np.rint(C).astype(np.int64) % p
    return (A @ B) % p


def identity(n):
    return np.eye(n, dtype=np.int64)


def zeros(r, c):
    return np.zeros((r, c), dtype=np.int64)


class Subspace:
    """A subspace of F_p^ambient stored by its canonical echelon basis."""

    def __init__(self, vectors, ambient, p):
        self.p = p
        self.ambient = ambient
        V = as_fp(vectors, p).reshape(-1, ambient) if np.size(vectors) else zeros(0, ambient)
        self.basis = row_space(V, p) if V.shape[0] else V

    @property
    def dim(self):
        return self.basis.shape[0]

    def __eq__(self, other):
        return (self.ambient == other.ambient and self.p == other.p
                and np.array_equal(self.basis, other.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"

    def _check(self, other):
        if self.ambient != other.ambient or self.p != other.p:
            raise DimensionError("subspaces live in different ambient spaces")

    def contains(self, other):
        self._check(other)
        return self.sum(other).dim == self.dim

    def sum(self, other):
        self._check(other)
        return Subspace(np.concatenate([self.basis, other.basis]), self.ambient, self.p)

    def intersect(self, other):
        self._check(other)
        p = self.p
        if self.dim == 0 or other.dim == 0:
            return Subspace(zeros(0, self.ambient), self.ambient, p)
        # a U = b V  <=>  (a, -b) in the left kernel of [U; V]
        stacked = np.concatenate([self.basis, (-other.basis) % p])
        K = kernel_basis(stacked.T, p)
        vecs = matmul(K[:, :self.dim], self.basis, p)
        return Subspace(vecs, self.ambient, p)

    def complement_pivots(self):
        _, _, pivots = rref(self.basis, self.p)
        return [c for c in range(self.ambient) if c not in set(pivots)]

    def quotient_map(self, sub):
        """Matrix of the projection ``self -> self / sub`` in coordinates.

        Source coordinates are those of ``self.basis``; the target basis is
        the image of the ``self.basis`` rows not absorbed by ``sub``.
        """
        if not self.contains(sub):
            raise ContainmentError("quotient by a subspace that is not contained")
        p = self.p
        sub_coords = solve_left(self.basis, sub.basis, p)
        # choose complement coordinates greedily
        S = Subspace(sub_coords, self.dim, p)
        keep = S.complement_pivots()
        # coordinates w.r.t. (sub basis, kept unit vectors)
        full = np.concatenate([S.basis, identity(self.dim)[keep]]) if S.dim else identity(self.dim)[keep]
        C = solve_left(full, identity(self.dim), p)
        return C[:, S.dim:].T % p
