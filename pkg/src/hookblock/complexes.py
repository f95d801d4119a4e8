"""Complexes of Omega-type modules, the block's resolutions, Ext and chain maps.

Conventions
-----------
* Cochain complexes; a term is a list of ``(label, PFModule)`` summands and a
  differential is a dict of blocks ``{(b, a): matrix}`` from summand ``a`` in
  degree ``q`` to summand ``b`` in degree ``q+1``.
* The double complex R_i has Koszul rows and plain de Rham columns.  Because
  ``d kappa + kappa d = 0`` in degree p its squares anticommute, and the
  total differential is simply ``kappa + d``.
* A chain map of degree ``t`` satisfies ``f d = d f``; a null-homotopy is an
  ``h`` of degree ``t-1`` with ``f = d h + h d``.  :meth:`ChainMap.signed`
  converts to the ``f d = (-1)^t d f`` convention.
"""

import numpy as np

from . import gfp
from .functors import (FunctorError, HookBlock, LinMap, corestrict, hom_space,
                       kuhn_dual)


class ComplexError(ValueError):
    pass


def _zeros(b, a):
    return np.zeros((b.dim, a.dim), dtype=np.int64)


class Complex:
    """A bounded cochain complex of direct sums of modules."""

    def __init__(self, name, terms, diffs=None):
        self.name = name
        self.terms = {q: list(v) for q, v in terms.items() if v}
        self.diffs = {q: dict(v) for q, v in (diffs or {}).items()}
        for q, blocks in self.diffs.items():
            for (b, a), M in blocks.items():
                src = self.summands(q)[a][1]
                tgt = self.summands(q + 1)[b][1]
                if M.shape != (tgt.dim, src.dim):
                    raise ComplexError(f"{name}: block {(b, a)} in degree {q} has shape "
                                       f"{M.shape}, expected {(tgt.dim, src.dim)}")

    def __repr__(self):
        return f"Complex({self.name!r}, degrees {self.degrees()})"

    @property
    def p(self):
        for v in self.terms.values():
            return v[0][1].p
        raise ComplexError("empty complex has no characteristic")

    def degrees(self):
        return sorted(self.terms)

    def summands(self, q):
        return self.terms.get(q, [])

    def dim(self, q):
        return sum(M.dim for _, M in self.summands(q))

    def block(self, q, b, a):
        blk = self.diffs.get(q, {}).get((b, a))
        if blk is None:
            return _zeros(self.summands(q + 1)[b][1], self.summands(q)[a][1])
        return blk

    def matrix(self, q):
        """The whole differential ``C^q -> C^(q+1)`` as one matrix."""
        src, tgt = self.summands(q), self.summands(q + 1)
        rows = [np.concatenate([self.block(q, b, a) for a in range(len(src))], axis=1)
                if src else np.zeros((B.dim, 0), dtype=np.int64) for b, (_, B) in enumerate(tgt)]
        if not rows:
            return np.zeros((0, self.dim(q)), dtype=np.int64)
        return np.concatenate(rows, axis=0)

    def weights(self, q):
        ws = set()
        for _, M in self.summands(q):
            ws.update(M.blocks)
        return ws

    def weight_matrix(self, q, w):
        """Differential restricted to the weight-``w`` subspaces."""
        src, tgt = self.summands(q), self.summands(q + 1)
        rows = []
        for b, (_, B) in enumerate(tgt):
            if w not in B.blocks:
                continue
            row = []
            for a, (_, A) in enumerate(src):
                if w not in A.blocks:
                    continue
                row.append(self.block(q, b, a)[np.ix_(B.blocks[w], A.blocks[w])])
            rows.append(row)
        ncols = sum(len(A.blocks[w]) for _, A in src if w in A.blocks)
        if not rows or ncols == 0:
            nrows = sum(len(B.blocks[w]) for _, B in tgt if w in B.blocks)
            return np.zeros((nrows, ncols), dtype=np.int64)
        return np.concatenate([np.concatenate(r, axis=1) for r in rows], axis=0)

    def d_squared_zero(self):
        p = self.p
        for q in self.degrees():
            if q + 1 not in self.terms or q + 2 not in self.terms:
                continue
            if gfp.matmul(self.matrix(q + 1), self.matrix(q), p).any():
                return False
        return True

    def differential_rank(self, q):
        p = self.p
        return sum(gfp.rank(self.weight_matrix(q, w), p)
                   for w in self.weights(q) & self.weights(q + 1))

    def homology_dims(self):
        ranks = {q: self.differential_rank(q) for q in self.degrees()}
        out = {}
        for q in self.degrees():
            h = self.dim(q) - ranks[q] - ranks.get(q - 1, 0)
            if h:
                out[q] = h
        return out

    def is_equivariant(self):
        for q, blocks in self.diffs.items():
            for (b, a), M in blocks.items():
                f = LinMap(self.summands(q)[a][1], self.summands(q + 1)[b][1], M)
                if not f.is_equivariant():
                    return False
        return True

    def dual(self):
        """The Kuhn dual complex: (C^#)^q = (C^(-q))^#."""
        terms = {-q: [(("#", lab), kuhn_dual(M)) for lab, M in v] for q, v in self.terms.items()}
        diffs = {}
        for q, blocks in self.diffs.items():
            diffs[-q - 1] = {(a, b): M.T.copy() for (b, a), M in blocks.items()}
        return Complex(self.name + "#", terms, diffs)


def homology(C, q, basis=False):
    """dim H^q(C); with ``basis=True`` also representative cycles (as rows)."""
    ranks_q = C.differential_rank(q) if q in C.terms else 0
    dim = C.dim(q) - ranks_q - (C.differential_rank(q - 1) if q - 1 in C.terms else 0)
    if not basis:
        return dim
    p = C.p
    Z = gfp.kernel_basis(C.matrix(q), p) if C.dim(q) else np.zeros((0, 0), dtype=np.int64)
    B = gfp.image_basis(C.matrix(q - 1), p) if (q - 1 in C.terms and C.dim(q)) else \
        np.zeros((0, C.dim(q)), dtype=np.int64)
    reps = []
    span = gfp.Subspace(B, C.dim(q), p) if C.dim(q) else None
    for z in Z:
        bigger = span.sum(gfp.Subspace(z, C.dim(q), p))
        if bigger.dim > span.dim:
            reps.append(z)
            span = bigger
    return dim, np.array(reps, dtype=np.int64).reshape(len(reps), C.dim(q))


class VectorComplex:
    """A complex of bare vector spaces (used for Hom complexes)."""

    def __init__(self, dims, mats, p):
        self.dims = dict(dims)
        self.mats = dict(mats)
        self.p = p

    def cohomology(self):
        ranks = {q: gfp.rank(M, self.p) if M.size else 0 for q, M in self.mats.items()}
        out = {}
        for q, d in self.dims.items():
            h = d - ranks.get(q, 0) - ranks.get(q - 1, 0)
            if h:
                out[q] = h
        return out


# --- double complexes ---------------------------------------------------------

class DoubleComplex:
    """Bigraded terms with horizontal maps (r, s) -> (r+1, s) and vertical (r, s) -> (r, s+1)."""

    def __init__(self, name, terms, horizontal, vertical):
        self.name = name
        self.terms = dict(terms)
        self.horizontal = dict(horizontal)
        self.vertical = dict(vertical)

    def shape(self):
        """Row lengths, indexed by s."""
        rows = {}
        for r, s in self.terms:
            rows[s] = rows.get(s, 0) + 1
        return [rows[s] for s in sorted(rows)]

    def _h(self, r, s):
        return self.horizontal.get((r, s))

    def _v(self, r, s):
        return self.vertical.get((r, s))

    def check(self):
        """Rows and columns square to zero and the squares anticommute."""
        p = next(iter(self.terms.values())).p
        for (r, s) in self.terms:
            h1, v1 = self._h(r, s), self._v(r, s)
            h2, v2 = self._h(r + 1, s), self._v(r, s + 1)
            if h1 is not None and h2 is not None and gfp.matmul(h2, h1, p).any():
                return False
            if v1 is not None and v2 is not None and gfp.matmul(v2, v1, p).any():
                return False
            if (r + 1, s + 1) in self.terms:
                a = gfp.matmul(self._v(r + 1, s), h1, p) if h1 is not None and self._v(r + 1, s) is not None else 0
                b = gfp.matmul(self._h(r, s + 1), v1, p) if v1 is not None and self._h(r, s + 1) is not None else 0
                if np.any((a + b) % p):
                    return False
        return True

    def total(self):
        degs = {}
        for (r, s) in sorted(self.terms):
            degs.setdefault(r + s, []).append((r, s))
        terms = {m: [((r, s), self.terms[(r, s)]) for r, s in v] for m, v in degs.items()}
        pos = {rs: k for v in degs.values() for k, rs in enumerate(v)}
        diffs = {}
        for (r, s) in self.terms:
            m = r + s
            for tgt, M in (((r + 1, s), self._h(r, s)), ((r, s + 1), self._v(r, s))):
                if M is not None and tgt in self.terms:
                    diffs.setdefault(m, {})[(pos[tgt], pos[(r, s)])] = M
        return Complex("Tot " + self.name, terms, diffs)


# --- chain maps ---------------------------------------------------------------

class ChainMap:
    """Degree-``t`` map of complexes given by blocks ``comps[q][(b, a)]``."""

    def __init__(self, name, source, target, t, comps):
        self.name = name
        self.source = source
        self.target = target
        self.t = t
        self.comps = {q: {k: M % source.p for k, M in v.items() if M.any()} for q, v in comps.items()}
        self.comps = {q: v for q, v in self.comps.items() if v}

    def __repr__(self):
        return f"ChainMap({self.name}, degree {self.t})"

    def block(self, q, b, a):
        blk = self.comps.get(q, {}).get((b, a))
        if blk is None:
            return _zeros(self.target.summands(q + self.t)[b][1], self.source.summands(q)[a][1])
        return blk

    def is_zero(self):
        return not self.comps

    def matrix(self, q):
        src, tgt = self.source.summands(q), self.target.summands(q + self.t)
        if not src or not tgt:
            return np.zeros((self.target.dim(q + self.t), self.source.dim(q)), dtype=np.int64)
        return np.concatenate([np.concatenate([self.block(q, b, a) for a in range(len(src))], axis=1)
                               for b in range(len(tgt))], axis=0)

    def _commutator_blocks(self, sign):
        """Blocks of f d - sign * d f, degree by degree."""
        p = self.source.p
        S, T = self.source, self.target
        for q in set(S.degrees()) | {q - 1 for q in S.degrees()}:
            acc = {}
            for (a1, a0), D in S.diffs.get(q, {}).items():
                for (b, a), F in self.comps.get(q + 1, {}).items():
                    if a == a1:
                        acc[(b, a0)] = acc.get((b, a0), 0) + gfp.matmul(F, D, p)
            for (b, a), F in self.comps.get(q, {}).items():
                for (b2, b1), D in T.diffs.get(q + self.t, {}).items():
                    if b1 == b:
                        acc[(b2, a)] = acc.get((b2, a), 0) - sign * gfp.matmul(D, F, p)
            yield from acc.values()

    def is_chain_map(self):
        """f d = d f in every degree (exact matrix identity)."""
        p = self.source.p
        return not any(np.any(np.asarray(M) % p) for M in self._commutator_blocks(1))

    def signed(self):
        """The same map in the ``f d = (-1)^t d f`` convention: blocks times (-1)^(t q)."""
        comps = {q: {k: (-1) ** (self.t * q) * M for k, M in v.items()} for q, v in self.comps.items()}
        return ChainMap(self.name + "±", self.source, self.target, self.t, comps)

    def is_signed_chain_map(self):
        p = self.source.p
        return not any(np.any(np.asarray(M) % p) for M in self._commutator_blocks((-1) ** self.t))

    def equals(self, other):
        if (self.source is not other.source or self.target is not other.target
                or self.t != other.t):
            return False
        for q in set(self.comps) | set(other.comps):
            keys = set(self.comps.get(q, {})) | set(other.comps.get(q, {}))
            for b, a in keys:
                if not np.array_equal(self.block(q, b, a), other.block(q, b, a)):
                    return False
        return True

    def scale(self, c):
        return ChainMap(f"{c}·{self.name}", self.source, self.target, self.t,
                        {q: {k: c * M for k, M in v.items()} for q, v in self.comps.items()})

    def add(self, other):
        comps = {}
        for f in (self, other):
            for q, v in f.comps.items():
                for k, M in v.items():
                    comps.setdefault(q, {})
                    comps[q][k] = comps[q].get(k, 0) + M
        return ChainMap(f"{self.name}+{other.name}", self.source, self.target, self.t, comps)


def zero_map(C, D, t):
    return ChainMap("0", C, D, t, {})


def compose_chain_maps(g, f):
    """g ∘ f."""
    if f.target is not g.source:
        raise ComplexError(f"cannot compose {g.name} after {f.name}: complexes differ")
    p = f.source.p
    comps = {}
    for q, blocks in f.comps.items():
        mid = q + f.t
        for (b, a), F in blocks.items():
            for (c, b2), G in g.comps.get(mid, {}).items():
                if b2 != b:
                    continue
                acc = comps.setdefault(q, {})
                acc[(c, a)] = (acc.get((c, a), 0) + gfp.matmul(G, F, p)) % p
    return ChainMap(f"{g.name}·{f.name}", f.source, g.target, f.t + g.t, comps)


# --- Hom complexes and homotopies --------------------------------------------

def _hom_blocks(C, D, t):
    out = []
    for q in C.degrees():
        for a, (_, A) in enumerate(C.summands(q)):
            for b, (_, B) in enumerate(D.summands(q + t)):
                H = hom_space(A, B)
                if H.dim:
                    out.append((q, a, b, H))
    return out


class HomGraded:
    """Coordinates on the degree-``t`` equivariant maps C -> D."""

    def __init__(self, C, D, t):
        self.C, self.D, self.t = C, D, t
        self.blocks = _hom_blocks(C, D, t)
        self.offset = {}
        o = 0
        for q, a, b, H in self.blocks:
            self.offset[(q, a, b)] = o
            o += H.dim
        self.dim = o

    def coords(self, f):
        v = np.zeros(self.dim, dtype=np.int64)
        for q, a, b, H in self.blocks:
            o = self.offset[(q, a, b)]
            v[o:o + H.dim] = H.coords(f.block(q, b, a))
        for q, blocks in f.comps.items():
            for (b, a) in blocks:
                if (q, a, b) not in self.offset:
                    raise ComplexError(f"{f.name}: block {(q, b, a)} is not a morphism")
        return v

    def element(self, x, name="h"):
        comps = {}
        for q, a, b, H in self.blocks:
            o = self.offset[(q, a, b)]
            c = x[o:o + H.dim]
            if np.any(c):
                comps.setdefault(q, {})[(b, a)] = H.combine(c)
        return ChainMap(name, self.C, self.D, self.t, comps)


def _boundary(C, D, t):
    """Matrix of h -> d h + h d from degree t-1 maps to degree t maps (coordinates)."""
    src = HomGraded(C, D, t - 1)
    tgt = HomGraded(C, D, t)
    p = C.p
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for q, a, b, H in src.blocks:
        o = src.offset[(q, a, b)]
        A = C.summands(q)[a][1]
        gensA = H.gen_cols
        # d_D ∘ h : lands in degree q + t, same source summand a
        for (b2, b1), Dm in D.diffs.get(q + t - 1, {}).items():
            if b1 != b or (q, a, b2) not in tgt.offset:
                continue
            Ht = hom_space(A, D.summands(q + t)[b2][1])
            cols = np.array([gfp.matmul(Dm, Bk[:, Ht.gen_cols], p) for Bk in H.basis])
            c = Ht.coords_from_cols(cols)
            ot = tgt.offset[(q, a, b2)]
            M[ot:ot + Ht.dim, o:o + H.dim] += c.T
        # h ∘ d_C : from summands a0 of C^(q-1) mapping into a
        for (a1, a0), Cm in C.diffs.get(q - 1, {}).items():
            if a1 != a or (q - 1, a0, b) not in tgt.offset:
                continue
            A0 = C.summands(q - 1)[a0][1]
            Ht = hom_space(A0, D.summands(q + t - 1)[b][1])
            Cg = Cm[:, Ht.gen_cols]
            cols = np.array([gfp.matmul(Bk, Cg, p) for Bk in H.basis])
            c = Ht.coords_from_cols(cols)
            ot = tgt.offset[(q - 1, a0, b)]
            M[ot:ot + Ht.dim, o:o + H.dim] += c.T
    return M % p, src, tgt


def _cycle_matrix(C, D, t):
    """Matrix of f -> d f - f d from degree t maps to degree t+1 maps."""
    src = HomGraded(C, D, t)
    tgt = HomGraded(C, D, t + 1)
    p = C.p
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    for q, a, b, H in src.blocks:
        o = src.offset[(q, a, b)]
        A = C.summands(q)[a][1]
        for (b2, b1), Dm in D.diffs.get(q + t, {}).items():
            if b1 != b or (q, a, b2) not in tgt.offset:
                continue
            Ht = hom_space(A, D.summands(q + t + 1)[b2][1])
            cols = np.array([gfp.matmul(Dm, Bk[:, Ht.gen_cols], p) for Bk in H.basis])
            ot = tgt.offset[(q, a, b2)]
            M[ot:ot + Ht.dim, o:o + H.dim] += Ht.coords_from_cols(cols).T
        for (a1, a0), Cm in C.diffs.get(q - 1, {}).items():
            if a1 != a or (q - 1, a0, b) not in tgt.offset:
                continue
            A0 = C.summands(q - 1)[a0][1]
            Ht = hom_space(A0, D.summands(q + t)[b][1])
            cols = np.array([gfp.matmul(Bk, Cm[:, Ht.gen_cols], p) for Bk in H.basis])
            ot = tgt.offset[(q - 1, a0, b)]
            M[ot:ot + Ht.dim, o:o + H.dim] -= Ht.coords_from_cols(cols).T
    return M % p, src, tgt


def null_homotopy(f):
    """A homotopy h with f = d h + h d, or None when f is not null-homotopic."""
    if not f.is_chain_map():
        raise ComplexError(f"{f.name} is not a chain map")
    B, src, tgt = _boundary(f.source, f.target, f.t)
    if f.is_zero():
        return zero_map(f.source, f.target, f.t - 1)
    rhs = tgt.coords(f)
    if src.dim == 0:
        return None
    x = gfp.solve(B, rhs, f.source.p)
    if x is None:
        return None
    h = src.element(x, name=f"h({f.name})")
    return h


def check_homotopy(f, h):
    p = f.source.p
    dh = compose_chain_maps(ChainMap("d", f.target, f.target, 1, f.target.diffs), h)
    hd = compose_chain_maps(h, ChainMap("d", f.source, f.source, 1, f.source.diffs))
    return dh.add(hd).equals(f) if not f.is_zero() else dh.add(hd).is_zero()


def classes_independent(maps):
    """The cohomology classes of chain maps (same source, target, degree) are independent."""
    if not maps:
        return True
    f0 = maps[0]
    B, src, tgt = _boundary(f0.source, f0.target, f0.t)
    p = f0.source.p
    F = np.array([tgt.coords(f) for f in maps], dtype=np.int64).T.reshape(tgt.dim, len(maps))
    rb = gfp.rank(B, p) if B.size else 0
    both = np.concatenate([B, F], axis=1) if B.size else F
    return gfp.rank(both, p) - rb == len(maps)


def hom_cohomology(C, D, t):
    """dim H^t of the Hom complex between C and D (chain maps modulo homotopy)."""
    p = C.p
    Z, src, _ = _cycle_matrix(C, D, t)
    B, _, _ = _boundary(C, D, t)
    zdim = src.dim - (gfp.rank(Z, p) if Z.size else 0)
    return zdim - (gfp.rank(B, p) if B.size else 0)


# --- the block's complexes ----------------------------------------------------

_BLOCKS = {}


def hook_block(p, n=None):
    key = (p, p if n is None else n)
    if key not in _BLOCKS:
        _BLOCKS[key] = HookBlock(*key)
    return _BLOCKS[key]


def koszul_complex(p, n=None):
    """(Omega^•, kappa) in degree p, indexed so that Omega^i sits in degree -i."""
    B = hook_block(p, n)
    terms = {-i: [(f"Ω{i}", B.omega(i))] for i in range(p + 1)}
    diffs = {-i: {(0, 0): B.kappa(i).matrix} for i in range(1, p + 1)}
    return Complex("Koszul", terms, diffs)


def derham_complex(p, n=None):
    B = hook_block(p, n)
    terms = {i: [(f"Ω{i}", B.omega(i))] for i in range(p + 1)}
    diffs = {i: {(0, 0): B.d(i).matrix} for i in range(p)}
    return Complex("de Rham", terms, diffs)


def koszul_kernel_complex(p, n=None):
    """K^i = ker kappa_i = S_i with the restricted de Rham differential."""
    B = hook_block(p, n)
    terms, diffs = {}, {}
    for i in range(p):
        terms[i] = [(f"S{i}", B.schur(i)[0])]
    for i in range(p - 1):
        S, incl = B.schur(i)
        S2, incl2 = B.schur(i + 1)
        diffs[i] = {(0, 0): corestrict(B.d(i) @ incl, incl2).matrix}
    return Complex("K", terms, diffs)


def cartier_kernel_check(p, n=None):
    K = koszul_kernel_complex(p, n)
    nn = p if n is None else n
    h = K.homology_dims()
    B = hook_block(p, n)
    f_dims_ok = all(
        B.simple(i)[0].dim == K.dim(i) - K.differential_rank(i) for i in range(p))
    ok = h == {0: nn} and K.d_squared_zero() and f_dims_ok
    return report("cartier_kernel", p, nn, {}, ok, {"H": h})


def schur_injective_resolution(i, p, n=None):
    """T_i: Omega^i -> Omega^(i-1) -> ... -> Omega^0, in degrees 0..i.

    The coaugmentation S_i -> Omega^i is ``coaugmentation``.
    """
    B = hook_block(p, n)
    key = ("T", i)
    if key in B._cache:
        return B._cache[key]
    _check_index(i, p)
    terms = {q: [(f"Ω{i - q}", B.omega(i - q))] for q in range(i + 1)}
    diffs = {q: {(0, 0): B.kappa(i - q).matrix} for q in range(i)}
    T = Complex(f"T{i}", terms, diffs)
    S, incl = B.schur(i)
    T.resolved = S
    T.index = i
    T.coaugmentation = {0: incl.matrix}
    B._cache[key] = T
    return T


def _check_index(i, p):
    if not 0 <= i <= p - 1:
        raise ComplexError(f"index {i} outside [0, {p - 1}]")


def _lambda_iso(B):
    """An isomorphism (Omega^p)^# -> Omega^p (both are Lambda^p)."""
    O = B.omega(B.p)
    H = hom_space(kuhn_dual(O), O)
    if H.dim != 1:
        raise ComplexError("Lambda^p is not self-dual as expected")
    return H.basis[0]


def schur_projective_resolution(i, p, n=None):
    """The glued resolution of S_i by Omega^j and (Omega^j)^#, in degrees <= 0.

    Degree -k holds Omega^(i+1+k) for k <= p-2-i and then (Omega^(p-1-m))^#.
    ``augmentation`` maps degree 0 onto S_i.
    """
    B = hook_block(p, n)
    key = ("P", i)
    if key in B._cache:
        return B._cache[key]
    _check_index(i, p)
    pp = B.p
    seq = [("Ω", j) for j in range(i + 1, pp)] + [("Ω#", j) for j in range(pp - 1, -1, -1)]
    mods = []
    for kind, j in seq:
        O = B.omega(j)
        mods.append((f"{kind}{j}", O if kind == "Ω" else kuhn_dual(O)))
    iota = _lambda_iso(B)
    kp = B.kappa(pp).matrix

    def down(k):
        """Matrix of degree -k term -> degree -(k-1) term (k >= 1), or into Omega^i for k = 0."""
        kind, j = seq[k]
        if kind == "Ω":
            return B.kappa(j).matrix
        if j == pp - 1:
            return gfp.matmul(kp, gfp.matmul(iota, B.kappa(pp).matrix.T, B.p), B.p)
        return B.kappa(j + 1).matrix.T

    terms = {-k: [mods[k]] for k in range(len(seq))}
    diffs = {-k: {(0, 0): down(k)} for k in range(1, len(seq))}
    P = Complex(f"P{i}", terms, diffs)
    S, incl = B.schur(i)
    aug = LinMap(mods[0][1], B.omega(i), down(0))
    P.resolved = S
    P.augmentation = {0: corestrict(aug, incl).matrix}
    B._cache[key] = P
    return P


def simple_double_complex(i, p, n=None):
    """R_i with R^{r,s} = Omega^(i+s-r), rows T_(i+s), columns de Rham."""
    B = hook_block(p, n)
    key = ("R", i)
    if key in B._cache:
        return B._cache[key]
    _check_index(i, p)
    pp = B.p
    terms, hor, ver = {}, {}, {}
    for s in range(pp - i):
        for r in range(i + s + 1):
            terms[(r, s)] = B.omega(i + s - r)
    for (r, s) in terms:
        k = i + s - r
        if (r + 1, s) in terms:
            hor[(r, s)] = B.kappa(k).matrix
        if (r, s + 1) in terms:
            ver[(r, s)] = B.d(k).matrix
    R = DoubleComplex(f"R{i}", terms, hor, ver)
    B._cache[key] = R
    return R


def simple_injective_resolution(i, p, n=None):
    """Tot R_i, with coaugmentation F_i -> S_i -> Omega^i = R^{0,0}."""
    B = hook_block(p, n)
    key = ("TotR", i)
    if key in B._cache:
        return B._cache[key]
    C = simple_double_complex(i, p, n).total()
    C.name = f"TotR{i}"
    F, f_incl = B.simple(i)
    S, s_incl = B.schur(i)
    C.resolved = F
    C.index = i
    C.coaugmentation = {0: gfp.matmul(s_incl.matrix, f_incl.matrix, B.p)}
    B._cache[key] = C
    return C


def weyl_injective_resolution(i, p, n=None):
    """The Kuhn dual of the projective resolution of S_i resolves W_i."""
    B = hook_block(p, n)
    key = ("IW", i)
    if key in B._cache:
        return B._cache[key]
    P = schur_projective_resolution(i, p, n)
    C = P.dual()
    C.name = f"IW{i}"
    C.resolved = B.weyl(i)
    C.coaugmentation = {0: P.augmentation[0].T.copy()}
    B._cache[key] = C
    return C


def injective_resolution(kind, i, p, n=None):
    return {"S": schur_injective_resolution, "F": simple_injective_resolution,
            "W": weyl_injective_resolution}[kind](i, p, n)


def projective_resolution(kind, i, p, n=None):
    """Projective resolutions in degrees <= 0 with ``augmentation`` onto the object."""
    B = hook_block(p, n)
    key = ("proj", kind, i)
    if key in B._cache:
        return B._cache[key]
    if kind == "S":
        P = schur_projective_resolution(i, p, n)
    else:
        I = injective_resolution("S" if kind == "W" else "F", i, p, n)
        P = I.dual()
        P.name = f"P{kind}{i}"
        P.augmentation = {0: I.coaugmentation[0].T.copy()}
        P.resolved = kuhn_dual(I.resolved)
    B._cache[key] = P
    return P


def augmented_homology(C):
    """Homology of the complex with its resolved object attached (zero iff exact)."""
    X = C.resolved
    terms = {q: list(v) for q, v in C.terms.items()}
    diffs = {q: dict(v) for q, v in C.diffs.items()}
    if hasattr(C, "coaugmentation"):
        terms[-1] = [("X", X)]
        diffs[-1] = {(0, 0): C.coaugmentation[0]}
    else:
        terms[1] = [("X", X)]
        diffs[0] = {(0, 0): C.augmentation[0]}
    return Complex(C.name + "+", terms, diffs).homology_dims()


# --- Ext -----------------------------------------------------------------------

def hom_into(X, C):
    """The complex Hom(X, C^•) of vector spaces."""
    p = C.p
    dims, mats = {}, {}
    spaces = {q: [hom_space(X, M) for _, M in C.summands(q)] for q in C.degrees()}
    for q in C.degrees():
        dims[q] = sum(H.dim for H in spaces[q])
    for q in C.degrees():
        if q + 1 not in spaces:
            continue
        src, tgt = spaces[q], spaces[q + 1]
        M = np.zeros((dims[q + 1], dims[q]), dtype=np.int64)
        ot = np.cumsum([0] + [H.dim for H in tgt])
        os_ = np.cumsum([0] + [H.dim for H in src])
        for (b, a), D in C.diffs.get(q, {}).items():
            Hs, Ht = src[a], tgt[b]
            if not Hs.dim or not Ht.dim:
                continue
            cols = np.array([gfp.matmul(D, Bk[:, Ht.gen_cols], p) for Bk in Hs.basis])
            M[ot[b]:ot[b + 1], os_[a]:os_[a + 1]] += Ht.coords_from_cols(cols).T
        mats[q] = M % p
    return VectorComplex(dims, mats, p)


def hom_from(P, Y):
    """The complex Hom(P_•, Y) for P in degrees <= 0; degree -q of P sits in degree q."""
    p = P.p
    dims, mats = {}, {}
    spaces = {-q: [hom_space(M, Y) for _, M in P.summands(q)] for q in P.degrees()}
    for q in spaces:
        dims[q] = sum(H.dim for H in spaces[q])
    for q in spaces:
        if q + 1 not in spaces:
            continue
        src, tgt = spaces[q], spaces[q + 1]
        M = np.zeros((dims[q + 1], dims[q]), dtype=np.int64)
        ot = np.cumsum([0] + [H.dim for H in tgt])
        os_ = np.cumsum([0] + [H.dim for H in src])
        # f in Hom(P^{-q}, Y) goes to f ∘ d, d: P^{-q-1} -> P^{-q}
        for (a, b), D in P.diffs.get(-q - 1, {}).items():
            Hs, Ht = src[a], tgt[b]
            if not Hs.dim or not Ht.dim:
                continue
            Dg = D[:, Ht.gen_cols]
            cols = np.array([gfp.matmul(Bk, Dg, p) for Bk in Hs.basis])
            M[ot[b]:ot[b + 1], os_[a]:os_[a + 1]] += Ht.coords_from_cols(cols).T
        mats[q] = M % p
    return VectorComplex(dims, mats, p)


class ExtTable(dict):
    """``{q: dim Ext^q}`` with only nonzero entries; remembers its labels."""

    def __init__(self, dims, source, target, p):
        super().__init__({int(q): int(d) for q, d in dims.items() if d})
        self.source = source
        self.target = target
        self.p = p

    def as_dict(self):
        return dict(sorted(self.items()))


def parse_object(spec):
    if isinstance(spec, tuple):
        return spec
    kind, _, idx = spec.partition(":")
    if kind not in ("S", "F", "W") or not idx.isdigit():
        raise ComplexError(f"object spec {spec!r} is not of the form S:i, F:i or W:i")
    return kind, int(idx)


def ext_oracle(X, Y, p, n=None, qmax=None, route="injective"):
    """Ext^*(X, Y) for X, Y among S_i, F_i, W_i from the block's resolutions."""
    kx, m = parse_object(X)
    ky, k = parse_object(Y)
    _check_index(m, p)
    _check_index(k, p)
    B = hook_block(p, n)
    if route == "injective":
        C = injective_resolution(ky, k, p, n)
        h = hom_into(B.object(kx, m), C).cohomology()
    elif route == "projective":
        P = projective_resolution(kx, m, p, n)
        h = hom_from(P, B.object(ky, k)).cohomology()
    else:
        raise ComplexError(f"unknown route {route!r}")
    if qmax is not None:
        h = {q: d for q, d in h.items() if q <= qmax}
    return ExtTable(h, (kx, m), (ky, k), p)


# --- the designated chain maps ------------------------------------------------

def chain_map_gamma(j, i, p, n=None):
    """gamma_ji : T_i -> T_j of degree j - i, identity on every term."""
    if not 0 <= i <= j <= p - 1:
        raise ComplexError(f"gamma needs 0 <= i <= j <= p-1, got i={i}, j={j}")
    Ti = schur_injective_resolution(i, p, n)
    Tj = schur_injective_resolution(j, p, n)
    comps = {q: {(0, 0): gfp.identity(Ti.summands(q)[0][1].dim)} for q in Ti.degrees()}
    return ChainMap(f"γ{j}{i}", Ti, Tj, j - i, comps)


def chain_map_dtilde(i, p, n=None):
    """d~_i : T_i -> T_(i+1) with components (-1)^(i-m) d_(i-m)."""
    if not 0 <= i <= p - 2:
        raise ComplexError(f"d~ needs 0 <= i <= p-2, got {i}")
    B = hook_block(p, n)
    Ti = schur_injective_resolution(i, p, n)
    Ti1 = schur_injective_resolution(i + 1, p, n)
    comps = {m: {(0, 0): (-1) ** (i - m) * B.d(i - m).matrix} for m in range(i + 1)}
    return ChainMap(f"d~{i}", Ti, Ti1, 0, comps)


def chain_map_gamma_bar(j, i, p, n=None):
    """gammabar_ji = gamma_(j,i+1) ∘ d~_i, of degree j - i - 1."""
    if not 0 <= i < j <= p - 1:
        raise ComplexError(f"gammabar needs 0 <= i < j <= p-1, got i={i}, j={j}")
    f = compose_chain_maps(chain_map_gamma(j, i + 1, p, n), chain_map_dtilde(i, p, n))
    f.name = f"γ̄{j}{i}"
    return f


def alpha_degrees(j, i, p):
    lo, hi = abs(i - j), 2 * p - i - j - 2
    return [t for t in range(lo, hi + 1) if (t - lo) % 2 == 0]


def chain_map_alpha(j, i, t, p, n=None):
    """alpha^t_ji : Tot R_i -> Tot R_j, identity from R_i^{r,s} to R_j^{r+a, s+b}."""
    _check_index(i, p)
    _check_index(j, p)
    if (t + i + j) % 2:
        raise ComplexError(f"alpha needs t + i + j even, got t={t}, i={i}, j={j}")
    if t not in alpha_degrees(j, i, p):
        raise ComplexError(f"alpha^{t}_{j}{i} is outside the admissible range")
    Ri = simple_injective_resolution(i, p, n)
    Rj = simple_injective_resolution(j, p, n)
    a, b = (t + j - i) // 2, (t + i - j) // 2
    cut = p - 1 - (t + i + j) // 2
    pos_j = {lab: (m, k) for m, v in Rj.terms.items() for k, (lab, _) in enumerate(v)}
    comps = {}
    for m, v in Ri.terms.items():
        for k, ((r, s), M) in enumerate(v):
            if s > cut:
                continue
            tgt = (r + a, s + b)
            m2, k2 = pos_j[tgt]
            assert m2 == m + t and Rj.summands(m2)[k2][1] is M
            comps.setdefault(m, {})[(k2, k)] = gfp.identity(M.dim)
    return ChainMap(f"α{t}_{j}{i}", Ri, Rj, t, comps)


def verify_product_tables(p, n=None):
    """Exact checks of the gamma/gammabar and alpha multiplication rules."""
    failures = []
    checked = 0
    g = {(j, i): chain_map_gamma(j, i, p, n) for i in range(p) for j in range(i, p)}
    gb = {(j, i): chain_map_gamma_bar(j, i, p, n) for i in range(p) for j in range(i + 1, p)}

    def expect(name, prod, target):
        nonlocal checked
        checked += 1
        ok = prod.is_zero() if target is None else prod.equals(target)
        if not ok:
            failures.append(name)

    for (m, l), x in list(g.items()) + list(gb.items()):
        xbar = (m, l) in gb and gb[(m, l)] is x
        for (j, i), y in list(g.items()) + list(gb.items()):
            ybar = (j, i) in gb and gb[(j, i)] is y
            if j != l:
                continue  # different complexes, the product is zero by definition
            prod = compose_chain_maps(x, y)
            if xbar and ybar:
                target = None
            elif xbar or ybar:
                target = gb.get((m, i))
            else:
                target = g[(m, i)]
            expect(f"{x.name}·{y.name}", prod, target)
    al = {(j, i, t): chain_map_alpha(j, i, t, p, n)
          for i in range(p) for j in range(p) for t in alpha_degrees(j, i, p)}
    for (m, l, t), x in al.items():
        for (j, i, u), y in al.items():
            if j != l:
                continue
            prod = compose_chain_maps(x, y)
            target = al.get((m, i, t + u)) if t + u <= 2 * p - i - m - 2 else None
            expect(f"{x.name}·{y.name}", prod, target)
    nn = p if n is None else n
    return report("product_tables", p, nn, {}, not failures,
                  {"products_checked": checked, "failures": failures[:10]})


def schur_family(p, n=None):
    maps = [chain_map_gamma(j, i, p, n) for i in range(p) for j in range(i, p)]
    maps += [chain_map_gamma_bar(j, i, p, n) for i in range(p) for j in range(i + 1, p)]
    return maps


def simple_family(p, n=None):
    return [chain_map_alpha(j, i, t, p, n)
            for i in range(p) for j in range(p) for t in alpha_degrees(j, i, p)]


def formality_certificate(family, p, n=None, ext_dims=None):
    """Cycles, closure under composition, and a per-degree basis of Ext.

    ``ext_dims(i, j)`` returns the table of Ext^*(X_i, X_j); by default the
    closed forms are used.
    """
    from .closed_forms import ext_table
    if family not in ("schur", "simple"):
        raise ComplexError(f"unknown family {family!r}")
    kind = "S" if family == "schur" else "F"
    maps = schur_family(p, n) if family == "schur" else simple_family(p, n)
    if ext_dims is None:
        def ext_dims(i, j):
            return ext_table((kind, i), (kind, j), p)
    problems = []
    cycles = all(f.is_chain_map() for f in maps)
    if not cycles:
        problems.append("not all maps are cycles")
    # closure: every product is zero or a member of the family
    closed = True
    index = {}
    for f in maps:
        index.setdefault((id(f.source), id(f.target), f.t), []).append(f)
    for x in maps:
        for y in maps:
            if y.target is not x.source:
                continue
            prod = compose_chain_maps(x, y)
            if prod.is_zero():
                continue
            if not any(prod.equals(z) for z in index.get((id(prod.source), id(prod.target), prod.t), [])):
                closed = False
                problems.append(f"{x.name}·{y.name} leaves the span")
    # per-degree basis: counts match Ext dims, classes independent within each Hom^t
    by_pair = {}
    for f in maps:
        i, j = f.source.index, f.target.index
        by_pair.setdefault((i, j, f.t), []).append(f)
    witness = {}
    basis_ok = True
    for i in range(p):
        for j in range(p):
            dims = ext_dims(i, j)
            for t in set(dims) | {t for (a, b, t) in by_pair if (a, b) == (i, j)}:
                fs = by_pair.get((i, j, t), [])
                if len(fs) != dims.get(t, 0) or not classes_independent(fs):
                    basis_ok = False
                    problems.append(f"({i},{j}) degree {t}: {len(fs)} maps vs Ext dim {dims.get(t, 0)}")
                witness[t] = witness.get(t, 0) + len(fs)
    nn = p if n is None else n
    ok = cycles and closed and basis_ok
    return report("formality_" + family, p, nn, {"maps": len(maps)}, ok,
                  {"per_degree": dict(sorted(witness.items())), "problems": problems[:10]})


def report(check, p, n, params, ok, witness):
    return {"check": check, "p": p, "n": n, "params": params,
            "status": "pass" if ok else "fail", "witness-dims": witness}
