"""Strict polynomial functors evaluated on k^n as explicit Schur-algebra modules.

A :class:`PFModule` is a finite-dimensional F_p-space with a basis of weight
vectors and the matrices of the divided-power generators ``E_j^(r)`` and
``F_j^(r)`` (``r`` a power of ``p`` up to the degree).  Together with the
weight idempotents these generate the Schur algebra S(n, e), so a linear
map is a morphism of functors exactly when it preserves weights and
commutes with every stored generator (for ``n >= e``).
"""

from collections import deque
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb

import numpy as np

from . import gfp
from .partitions import Partition, conjugate, hook_partition

KINDS = ("Sym", "Ext", "Div", "Tens")
DEGREE_BOUND = 12


class FunctorError(ValueError):
    pass


def generator_powers(e, p):
    rs, r = [], 1
    while r <= e:
        rs.append(r)
        r *= p
    return tuple(rs)


def content(word, n):
    w = [0] * n
    for a in word:
        w[a] += 1
    return tuple(w)


class PFModule:
    """An evaluated strict polynomial functor of degree ``degree`` at k^n."""

    def __init__(self, name, p, n, degree, labels, weights, actions):
        self.name = name
        self.p = p
        self.n = n
        self.degree = degree
        self.labels = list(labels)
        self.weights = [tuple(w) for w in weights]
        self.actions = actions
        blocks = {}
        for k, w in enumerate(self.weights):
            blocks.setdefault(w, []).append(k)
        self.blocks = {w: np.array(ix, dtype=np.int64) for w, ix in blocks.items()}
        self._gen_blocks = None

    @property
    def dim(self):
        return len(self.labels)

    def __repr__(self):
        return f"PFModule({self.name!r}, dim={self.dim}, p={self.p}, n={self.n})"

    def generators(self):
        return sorted(self.actions)

    def weight_dims(self):
        return {w: len(ix) for w, ix in self.blocks.items()}

    def generator_blocks(self):
        """``{gen: {w: (w', block)}}`` with ``block`` mapping weight ``w`` into ``w'``."""
        if self._gen_blocks is None:
            out = {}
            for g, A in self.actions.items():
                per = {}
                for w, ix in self.blocks.items():
                    w2 = shift(w, g)
                    if w2 in self.blocks:
                        per[w] = (w2, A[np.ix_(self.blocks[w2], ix)])
                out[g] = per
            self._gen_blocks = out
        return self._gen_blocks

    def check_weights(self):
        """Generators move weight vectors by the right root."""
        for g, A in self.actions.items():
            rows, cols = np.nonzero(A)
            for a, b in zip(rows, cols):
                if self.weights[a] != shift(self.weights[b], g):
                    return False
        return True

    def to_json(self):
        return {
            "name": self.name, "p": self.p, "n": self.n, "degree": self.degree,
            "basis": [repr(b) for b in self.labels],
            "actions": {"%s%d^(%d)" % g: self.actions[g].tolist() for g in self.generators()},
        }


def shift(w, g):
    kind, j, r = g
    w = list(w)
    if kind == "E":
        w[j] += r
        w[j + 1] -= r
    else:
        w[j] -= r
        w[j + 1] += r
    return tuple(w)


class LinMap:
    """A matrix between two modules; ``matrix`` acts on column vectors."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = np.asarray(matrix, dtype=np.int64) % source.p
        if self.matrix.shape != (target.dim, source.dim):
            raise FunctorError(f"matrix shape {self.matrix.shape} does not fit "
                               f"{source.name} -> {target.name}")

    def __repr__(self):
        return f"LinMap({self.source.name} -> {self.target.name})"

    def __matmul__(self, other):
        return LinMap(other.source, self.target, gfp.matmul(self.matrix, other.matrix, self.source.p))

    def is_equivariant(self):
        p = self.source.p
        M = self.matrix
        for w, ix in self.source.blocks.items():
            rows = np.nonzero(M[:, ix])[0]
            if any(self.target.weights[r] != w for r in rows):
                return False
        for g, A in self.source.actions.items():
            B = self.target.actions[g]
            if not np.array_equal(gfp.matmul(B, M, p), gfp.matmul(M, A, p)):
                return False
        return True

    def is_zero(self):
        return not self.matrix.any()

    def rank(self):
        return sum(gfp.rank(self.matrix[np.ix_(self.target.blocks[w], ix)], self.source.p)
                   for w, ix in self.source.blocks.items() if w in self.target.blocks)

    def to_json(self):
        return {"source": self.source.name, "target": self.target.name,
                "matrix": self.matrix.tolist()}


# --- building blocks ---------------------------------------------------------

def factor_basis(kind, a, n):
    if kind in ("Sym", "Div"):
        return list(combinations_with_replacement(range(n), a))
    if kind == "Ext":
        return list(combinations(range(n), a))
    if kind == "Tens":
        return list(product(range(n), repeat=a))
    raise FunctorError(f"unknown tensor symbol {kind!r}")


def _factor_action(kind, a, n, p, raise_, j, r):
    basis = factor_basis(kind, a, n)
    index = {b: k for k, b in enumerate(basis)}
    A = np.zeros((len(basis), len(basis)), dtype=np.int64)
    src, dst = (j + 1, j) if raise_ else (j, j + 1)
    for k, b in enumerate(basis):
        if r == 0:
            A[k, k] = 1
            continue
        if kind in ("Sym", "Div"):
            c = content(b, n)
            if c[src] < r:
                continue
            c2 = list(c)
            c2[src] -= r
            c2[dst] += r
            coef = comb(c[src], r) if kind == "Sym" else comb(c[dst] + r, r)
            target = tuple(sorted(sum(([i] * m for i, m in enumerate(c2)), [])))
            A[index[target], k] += coef
        elif kind == "Ext":
            if r == 1 and src in b and dst not in b:
                A[index[tuple(dst if x == src else x for x in b)], k] += 1
        else:
            spots = [pos for pos, x in enumerate(b) if x == src]
            for chosen in combinations(spots, r):
                t = list(b)
                for pos in chosen:
                    t[pos] = dst
                A[index[tuple(t)], k] += 1
    return A % p


@lru_cache(maxsize=None)
def _factor_actions(kind, a, n, p, raise_, j):
    return tuple(_factor_action(kind, a, n, p, raise_, j, r) for r in range(a + 1))


@lru_cache(maxsize=None)
def eval_space(desc, n, p):
    """Evaluate a tensor word such as ``(("Sym", 2), ("Ext", 1))`` at k^n."""
    desc = tuple((k, int(a)) for k, a in desc)
    e = sum(a for _, a in desc)
    if n < 1:
        raise FunctorError("evaluation dimension must be positive")
    if e > DEGREE_BOUND:
        raise FunctorError(f"degree {e} exceeds the bound {DEGREE_BOUND}")
    for k, a in desc:
        if k not in KINDS or a < 0:
            raise FunctorError(f"bad factor {k}({a})")
    labels = [()]
    for k, a in desc:
        labels = [lab + (b,) for lab in labels for b in factor_basis(k, a, n)]
    weights = [content([x for part in lab for x in part], n) for lab in labels]
    actions = {}
    for kind_g, raise_ in (("E", True), ("F", False)):
        for j in range(n - 1):
            full = None
            for k, a in desc:
                fac = _factor_actions(k, a, n, p, raise_, j)
                if full is None:
                    full = [fac[r] if r <= a else None for r in range(e + 1)]
                    continue
                new = []
                for r in range(e + 1):
                    acc = None
                    for s in range(r + 1):
                        if full[s] is None or r - s > a:
                            continue
                        term = np.kron(full[s], fac[r - s])
                        acc = term if acc is None else acc + term
                    new.append(None if acc is None else acc % p)
                full = new
            if full is None:
                full = [np.eye(1, dtype=np.int64)] + [None] * e
            for r in generator_powers(e, p):
                M = full[r] if r < len(full) and full[r] is not None else None
                actions[(kind_g, j, r)] = M if M is not None else np.zeros((len(labels),) * 2, dtype=np.int64)
    name = "⊗".join(f"{k}{a}" for k, a in desc) or "k"
    return PFModule(name, p, n, e, labels, weights, actions)


def expected_dimension(desc, n):
    d = 1
    for k, a in desc:
        d *= {"Sym": comb(n + a - 1, a), "Div": comb(n + a - 1, a),
              "Ext": comb(n, a), "Tens": n ** a}[k]
    return d


def omega(e, i, n, p):
    """Omega^i_e = Sym^(e-i) ⊗ Ext^i."""
    if not 0 <= i <= e:
        raise FunctorError(f"Omega index {i} outside [0, {e}]")
    return eval_space((("Sym", e - i), ("Ext", i)), n, p)


def koszul_map(e, i, n, p):
    """kappa_i : Omega^i -> Omega^(i-1)."""
    if not 0 <= i <= e:
        raise FunctorError(f"Koszul index {i} outside [0, {e}]")
    src = omega(e, i, n, p)
    if i == 0:
        return None
    tgt = omega(e, i - 1, n, p)
    index = {b: k for k, b in enumerate(tgt.labels)}
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for k, (s, L) in enumerate(src.labels):
        for pos, l in enumerate(L):
            t = (tuple(sorted(s + (l,))), L[:pos] + L[pos + 1:])
            M[index[t], k] += (-1) ** pos
    return LinMap(src, tgt, M)


def derham_map(e, i, n, p):
    """d_i : Omega^i -> Omega^(i+1)."""
    if not 0 <= i <= e:
        raise FunctorError(f"de Rham index {i} outside [0, {e}]")
    src = omega(e, i, n, p)
    if i == e:
        return None
    tgt = omega(e, i + 1, n, p)
    index = {b: k for k, b in enumerate(tgt.labels)}
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for k, (s, L) in enumerate(src.labels):
        for j in sorted(set(s)):
            if j in L:
                continue
            pos = s.index(j)
            sign = (-1) ** sum(1 for l in L if l < j)
            t = (s[:pos] + s[pos + 1:], tuple(sorted(L + (j,))))
            M[index[t], k] += sign * s.count(j)
    return LinMap(src, tgt, M)


# --- sub, quotient, dual -----------------------------------------------------

def submodule(ambient, vectors_by_weight, name):
    """Submodule spanned by weight vectors ``{w: rows in M_w coordinates}``.

    The spanned subspace must be stable under the generators.  Returns the
    module and its inclusion ``LinMap``.
    """
    p = ambient.p
    bases = {w: gfp.row_space(V, p) for w, V in vectors_by_weight.items() if np.size(V)}
    bases = {w: B for w, B in bases.items() if B.shape[0]}
    order = sorted(bases)
    labels, weights, cols = [], [], []
    offset = {}
    for w in order:
        offset[w] = len(labels)
        for k in range(bases[w].shape[0]):
            labels.append((name, w, k))
            weights.append(w)
            v = np.zeros(ambient.dim, dtype=np.int64)
            v[ambient.blocks[w]] = bases[w][k]
            cols.append(v)
    dim = len(labels)
    incl = np.array(cols, dtype=np.int64).T.reshape(ambient.dim, dim)
    actions = {}
    for g, per in ambient.generator_blocks().items():
        A = np.zeros((dim, dim), dtype=np.int64)
        for w in order:
            if w not in per:
                continue
            w2, blk = per[w]
            img = gfp.matmul(bases[w], blk.T, p)
            if not img.any():
                continue
            if w2 not in bases:
                raise FunctorError(f"{name}: subspace is not stable under {g}")
            C = gfp.solve_left(bases[w2], img, p)
            A[offset[w2]:offset[w2] + bases[w2].shape[0], offset[w]:offset[w] + bases[w].shape[0]] = C.T
        actions[g] = A % p
    sub = PFModule(name, p, ambient.n, ambient.degree, labels, weights, actions)
    sub.ambient = ambient
    return sub, LinMap(sub, ambient, incl)


def kernel_module(f, name):
    p = f.source.p
    vecs = {}
    for w, ix in f.source.blocks.items():
        if w in f.target.blocks:
            blk = f.matrix[np.ix_(f.target.blocks[w], ix)]
            vecs[w] = gfp.kernel_basis(blk, p)
        else:
            vecs[w] = gfp.identity(len(ix))
    return submodule(f.source, vecs, name)


def image_module(f, name):
    p = f.source.p
    vecs = {}
    for w, ix in f.target.blocks.items():
        if w in f.source.blocks:
            blk = f.matrix[np.ix_(ix, f.source.blocks[w])]
            vecs[w] = gfp.image_basis(blk, p)
    return submodule(f.target, vecs, name)


def corestrict(f, sub_incl):
    """Factor ``f`` through the inclusion ``sub -> target``."""
    p = f.source.p
    sub = sub_incl.source
    I = sub_incl.matrix
    M = np.zeros((sub.dim, f.source.dim), dtype=np.int64)
    for w, ix in f.source.blocks.items():
        if w not in sub.blocks:
            continue
        jx = sub.blocks[w]
        rows = f.target.blocks[w]
        Bw = I[np.ix_(rows, jx)].T  # rows = basis of sub_w in target_w coordinates
        img = f.matrix[np.ix_(rows, ix)].T
        C = gfp.solve_left(Bw, img, p)
        M[np.ix_(jx, ix)] = C.T
    return LinMap(f.source, sub, M)


def kuhn_dual(M):
    """G^#(V) = G(V*)*: dual basis, E and F swapped and transposed."""
    if isinstance(M, LinMap):
        return LinMap(kuhn_dual(M.target), kuhn_dual(M.source), M.matrix.T)
    cached = getattr(M, "_dual", None)
    if cached is not None:
        return cached
    actions = {}
    for (kind, j, r), A in M.actions.items():
        other = ("F" if kind == "E" else "E", j, r)
        actions[other] = M.actions[(kind, j, r)].T.copy()
    name = M.name[:-1] if M.name.endswith("#") else M.name + "#"
    D = PFModule(name, M.p, M.n, M.degree, [("dual", b) for b in M.labels], M.weights, actions)
    D._dual = M
    M._dual = D
    return D


def direct_sum(mods, name=None):
    p = mods[0].p
    labels, weights = [], []
    for k, M in enumerate(mods):
        labels += [(k, b) for b in M.labels]
        weights += M.weights
    actions = {}
    for g in mods[0].actions:
        dims = [M.dim for M in mods]
        A = np.zeros((sum(dims), sum(dims)), dtype=np.int64)
        o = 0
        for M in mods:
            A[o:o + M.dim, o:o + M.dim] = M.actions[g]
            o += M.dim
        actions[g] = A
    return PFModule(name or "⊕".join(M.name for M in mods), p, mods[0].n,
                    mods[0].degree, labels, weights, actions)


# --- Hom spaces --------------------------------------------------------------

class HomSpace:
    """Basis of Hom(M, N) together with a coordinate map.

    A morphism is determined by its values on ``gens`` (indices of basis
    vectors of ``M`` generating it as a module); ``coords`` reads those
    values off and solves against the basis.
    """

    def __init__(self, source, target, basis, gens, evaluation):
        self.source = source
        self.target = target
        self.basis = basis
        self.gens = gens
        self._eval = evaluation

    @property
    def dim(self):
        return len(self.basis)

    @property
    def gen_cols(self):
        return [b for _, b in self.gens]

    def coords_from_cols(self, Xc):
        """Coordinates from the generator columns ``X[:, gen_cols]`` of a morphism.

        ``Xc`` may also be a stack of such column blocks (leading axis), in
        which case a coordinate row is returned for each.
        """
        p = self.source.p
        Xc = np.asarray(Xc)
        stack = Xc.ndim == 3
        if not stack:
            Xc = Xc[None]
        rows = []
        for X in Xc:
            parts = [X[self.target.blocks[w], k] for k, (w, _) in enumerate(self.gens)
                     if w in self.target.blocks]
            rows.append(np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64))
        V = np.array(rows, dtype=np.int64).reshape(len(rows), -1) % p
        if self.dim == 0:
            if V.any():
                raise gfp.ContainmentError("map is not a morphism (Hom is zero)")
            out = np.zeros((len(rows), 0), dtype=np.int64)
        else:
            out = gfp.solve_left(self._eval, V, p)
        return out if stack else out[0]

    def maps(self):
        return [LinMap(self.source, self.target, B) for B in self.basis]

    def coords(self, X):
        """Coordinates of the morphism ``X`` (a matrix or LinMap) in ``basis``."""
        if isinstance(X, LinMap):
            X = X.matrix
        return self.coords_from_cols(np.asarray(X)[:, self.gen_cols])

    def combine(self, c):
        p = self.source.p
        X = np.zeros((self.target.dim, self.source.dim), dtype=np.int64)
        for a, B in zip(c, self.basis):
            if a % p:
                X = X + int(a) * B
        return X % p


def _weight_order(M):
    return sorted(M.blocks, key=lambda w: (-sum(1 for x in w if x), max(w), w))


def hom_space(M, N):
    """All weight-preserving linear maps M -> N commuting with the generators."""
    if (M.p, M.n, M.degree) != (N.p, N.n, N.degree):
        raise FunctorError("Hom between modules with different p, n or degree")
    key = (id(M), id(N))
    cache = _HOM_CACHE.get(key)
    if cache is not None and cache[0] is M and cache[1] is N:
        return cache[2]
    H = _spin_hom(M, N)
    _HOM_CACHE[key] = (M, N, H)
    return H


_HOM_CACHE = {}


def _spin_hom(M, N):
    p = M.p
    Mg = M.generator_blocks()
    Ng = N.generator_blocks()
    ndim = {w: len(ix) for w, ix in N.blocks.items()}
    rows = {w: [] for w in M.blocks}     # reduced rows in M_w coordinates
    pivs = {w: [] for w in M.blocks}
    imgs = {w: [] for w in M.blocks}     # images: arrays (dim N_w, U)
    state = {"U": 0}
    constraints = []
    gens = []
    queue = deque()

    def pad(Y):
        U = state["U"]
        if Y.shape[1] < U:
            Y = np.concatenate([Y, np.zeros((Y.shape[0], U - Y.shape[1]), dtype=np.int64)], axis=1)
        return Y

    def add(w, v, Y):
        Y = pad(Y)
        for k, c in enumerate(pivs[w]):
            a = int(v[c])
            if a:
                v = (v - a * rows[w][k]) % p
                Y = (Y - a * pad(imgs[w][k])) % p
        nz = np.flatnonzero(v)
        if nz.size == 0:
            if Y.any():
                constraints.append(Y)
            return
        c = int(nz[0])
        s = gfp.inv(v[c], p)
        v = v * s % p
        Y = Y * s % p
        for k in range(len(rows[w])):
            a = int(rows[w][k][c])
            if a:
                rows[w][k] = (rows[w][k] - a * v) % p
                imgs[w][k] = (pad(imgs[w][k]) - a * Y) % p
        rows[w].append(v)
        pivs[w].append(c)
        imgs[w].append(Y)
        queue.append((w, v.copy(), Y.copy()))

    def drain():
        while queue:
            w, v, Y = queue.popleft()
            for g in Mg:
                if w in Mg[g]:
                    w2, blk = Mg[g][w]
                    v2 = gfp.matmul(blk, v, p)
                else:
                    w2, v2 = shift(w, g), None
                if w in Ng[g]:
                    Y2 = gfp.matmul(Ng[g][w][1], pad(Y), p)
                else:
                    Y2 = np.zeros((ndim.get(w2, 0), state["U"]), dtype=np.int64)
                if v2 is None or not v2.any():
                    if Y2.any():
                        constraints.append(Y2)
                    continue
                add(w2, v2, Y2)

    for w in _weight_order(M):
        dimw = len(M.blocks[w])
        while len(rows[w]) < dimw:
            b = next(c for c in range(dimw) if c not in pivs[w])
            v = np.zeros(dimw, dtype=np.int64)
            v[b] = 1
            d = ndim.get(w, 0)
            U0 = state["U"]
            state["U"] += d
            Y = np.zeros((d, state["U"]), dtype=np.int64)
            Y[:, U0:] = np.eye(d, dtype=np.int64)
            gens.append((w, int(M.blocks[w][b])))
            add(w, v, Y)
            drain()

    U = state["U"]
    if constraints:
        C = np.concatenate([pad(Y) for Y in constraints])
        K = gfp.kernel_basis(C, p)
    else:
        K = gfp.identity(U)
    basis = []
    for c in K:
        X = np.zeros((N.dim, M.dim), dtype=np.int64)
        for w, ix in M.blocks.items():
            if w not in N.blocks:
                continue
            for k, piv in enumerate(pivs[w]):
                X[N.blocks[w], ix[piv]] = gfp.matmul(pad(imgs[w][k]), c, p)
        basis.append(X)
    gens_w = [(M.weights[b], b) for _, b in gens]
    return HomSpace(M, N, basis, gens_w, K.reshape(len(basis), U))


def hom_basis(M, N):
    return hom_space(M, N).maps()


def is_isomorphic(M, N):
    """Decide M ≅ N by looking for an invertible element of a Hom basis.

    Exact when Hom(M, N) is one-dimensional (the only case the block needs);
    otherwise a generic element is tried, which can only err towards False.
    """
    if M.dim != N.dim:
        return False
    H = hom_space(M, N)
    if H.dim == 0:
        return False
    cands = list(H.basis)
    if H.dim > 1:
        cands.append(H.combine([k + 1 for k in range(H.dim)]))
    return any(gfp.rank(X, M.p) == M.dim for X in cands)


# --- Schur, Weyl and simple functors ----------------------------------------

def _boxes(lam):
    return [(r, c) for r, row in enumerate(lam) for c in range(row)]


def _perm_sign(perm):
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def _schur_matrix(lam, n, p):
    """Matrix of m_{lam~} ∘ c_lam : Lambda^lam -> S^{lam~}."""
    lam = tuple(lam)
    conj = conjugate(Partition(lam)).parts
    src = eval_space(tuple(("Ext", a) for a in lam), n, p)
    tgt = eval_space(tuple(("Sym", a) for a in conj), n, p)
    index = {b: k for k, b in enumerate(tgt.labels)}
    row_perms = [list(permutations(range(a))) for a in lam]
    signs = [[_perm_sign(s) for s in perms] for perms in row_perms]
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for k, rows in enumerate(src.labels):
        for choice in product(*[range(len(ps)) for ps in row_perms]):
            sign = 1
            cols = [[] for _ in conj]
            for r, ci in enumerate(choice):
                perm = row_perms[r][ci]
                sign *= signs[r][ci]
                for c in range(lam[r]):
                    cols[c].append(rows[r][perm[c]])
            t = tuple(tuple(sorted(col)) for col in cols)
            M[index[t], k] += sign
    return LinMap(src, tgt, M)


def _weyl_matrix(lam, n, p):
    """Matrix of Gamma^{lam~} -> tensor -> Lambda^lam."""
    lam = tuple(lam)
    conj = conjugate(Partition(lam)).parts
    src = eval_space(tuple(("Div", a) for a in conj), n, p)
    tgt = eval_space(tuple(("Ext", a) for a in lam), n, p)
    index = {b: k for k, b in enumerate(tgt.labels)}
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for k, cols in enumerate(src.labels):
        arrangements = [sorted(set(permutations(col))) for col in cols]
        for choice in product(*arrangements):
            rows = [[None] * a for a in lam]
            for c, col in enumerate(choice):
                for r, x in enumerate(col):
                    rows[r][c] = x
            sign = 1
            out = []
            for row in rows:
                if len(set(row)) < len(row):
                    sign = 0
                    break
                order = sorted(range(len(row)), key=lambda t: row[t])
                sign *= _perm_sign(order)
                out.append(tuple(sorted(row)))
            if sign:
                M[index[tuple(out)], k] += sign
    return LinMap(src, tgt, M)


def _require_n(lam, n):
    lam = Partition(lam)
    if n < lam.weight:
        raise FunctorError(f"n={n} is smaller than the degree {lam.weight}")
    return lam


def schur_module(lam, n, p):
    """S_lam = im(m_{lam~} ∘ c_lam) inside S^{lam~}; returns (module, inclusion)."""
    lam = _require_n(lam, n)
    return _schur_cached(lam.parts, n, p)


@lru_cache(maxsize=None)
def _schur_cached(parts, n, p):
    return image_module(_schur_matrix(parts, n, p), f"S{parts}")


def weyl_module(lam, n, p):
    """W_lam = (S_lam)^#."""
    S, _ = schur_module(lam, n, p)
    return kuhn_dual(S)


def weyl_module_direct(lam, n, p):
    """W_lam as the image of Gamma^{lam~} -> Lambda^lam; returns (module, inclusion)."""
    lam = _require_n(lam, n)
    return image_module(_weyl_matrix(lam.parts, n, p), f"W{lam.parts}")


def simple_module(lam, n, p):
    """F_lam = image of W_lam -> Lambda^lam -> S_lam; returns (module, inclusion into S_lam)."""
    lam = _require_n(lam, n)
    return _simple_cached(lam.parts, n, p)


@lru_cache(maxsize=None)
def _simple_cached(parts, n, p):
    c = _schur_matrix(parts, n, p)
    w = _weyl_matrix(parts, n, p)
    F, incl = image_module(c @ w, f"F{parts}")
    S, s_incl = _schur_cached(parts, n, p)
    return F, LinMap(F, S, corestrict(incl, s_incl).matrix)


def schur_dimension(lam, n):
    """dim S_lam(k^n) by the hook-content formula for the conjugate shape."""
    shape = conjugate(Partition(lam)).parts
    cols = conjugate(Partition(shape)).parts
    num, den = 1, 1
    for r, row in enumerate(shape):
        for c in range(row):
            num *= n + c - r
            den *= (row - c - 1) + (cols[c] - r - 1) + 1
    return num // den


# --- the hook block ----------------------------------------------------------

class HookBlock:
    """The functors of the block of hooks in degree p, evaluated at k^n."""

    def __init__(self, p, n=None):
        self.p = p
        self.n = p if n is None else n
        if self.n < p:
            raise FunctorError("the hook block needs n >= p")
        self._cache = {}

    def _memo(self, key, make):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    def omega(self, i):
        return omega(self.p, i, self.n, self.p)

    def kappa(self, i):
        return koszul_map(self.p, i, self.n, self.p)

    def d(self, i):
        return derham_map(self.p, i, self.n, self.p)

    def schur(self, i):
        """(S_i, S_i -> Omega^i) with S_i = ker kappa_i."""
        def make():
            if i == 0:
                O = self.omega(0)
                return O, LinMap(O, O, gfp.identity(O.dim))
            return kernel_module(self.kappa(i), f"S_{i}")
        return self._memo(("S", i), make)

    def simple(self, i):
        """(F_i, F_i -> S_i) with F_i = ker(d_i restricted to S_i)."""
        def make():
            S, incl = self.schur(i)
            if i == self.p - 1:
                return S, LinMap(S, S, gfp.identity(S.dim))
            d_on_S = self.d(i) @ incl
            S2, incl2 = self.schur(i + 1)
            F, f_incl = kernel_module(corestrict(d_on_S, incl2), f"F_{i}")
            return F, f_incl
        return self._memo(("F", i), make)

    def weyl(self, i):
        return kuhn_dual(self.schur(i)[0])

    def object(self, kind, i):
        if kind == "S":
            return self.schur(i)[0]
        if kind == "F":
            return self.simple(i)[0]
        if kind == "W":
            return self.weyl(i)
        raise FunctorError(f"unknown object kind {kind!r}")

    def hook(self, i):
        return hook_partition(self.p, i)


def multiplicity(H, mu, n, p):
    """(H : S_mu) = dim Hom(W_mu, H) for a Schur-filtered H."""
    return hom_space(weyl_module(mu, n, p), H).dim
