"""Cell modules over the colored partition algebra.

The cell module W(lam_bar) at rank i = |lam_bar| has basis S(k,i) x (basis
of the wreath irreducible S(lam_bar)).  S(k,i) is the cross-section of
normally ordered rank-i (k,k)-diagrams; a rank-preserving product d*d1
factors uniquely as d2*g with d2 in S(k,i) and g in G(r,i), which drives
the action, the symbolic Gram matrices, and the semisimplicity certificate.
Wreath irreducibles are built as induced modules from Specht matrices
(polytabloid basis with a linear-solve straightening, small n only).

Cartan entries are computed character-theoretically: the downward (m,l)
diagram basis carries a G(r,m) x G(r,l) bi-action by place permutation, and
dim eps_mu * M * eps_lam is the trace of the corresponding projection.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from .characters import (
    g_elements,
    g_identity,
    ginv,
    gmul,
    multipartitions,
    pinv,
    weight,
)
from .diagrams import ColoredDiagram, compose, count_bell, enumerate_diagrams, flip_invert, set_partitions
from .scalars import CycNumber, MPoly, zeta_pow


# -- Specht matrices -----------------------------------------------------------


@lru_cache(maxsize=None)
def standard_tableaux(lam):
    """All standard Young tableaux of shape lam (tuples of row tuples)."""
    n = sum(lam)
    if n == 0:
        return (((),) * len(lam) if lam else (),)
    out = []

    def rec(rows, v):
        if v > n:
            out.append(tuple(tuple(row) for row in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i]) < len(rows[i - 1])):
                rows[i].append(v)
                rec(rows, v + 1)
                rows[i].pop()

    rec([[] for _ in lam], 1)
    return tuple(out)


def _tabloid(t):
    return tuple(frozenset(row) for row in t)


def _columns(t):
    width = max((len(row) for row in t), default=0)
    return [
        [row[j] for row in t if len(row) > j] for j in range(width)
    ]


def _polytabloid(t):
    """e_t as a dict tabloid -> Fraction (column antisymmetrization)."""
    cols = _columns(t)
    vec = {}
    for perms in product(*[permutations(col) for col in cols]):
        sign = 1
        sub = {}
        for col, img in zip(cols, perms):
            inv = 0
            img = list(img)
            for a in range(len(img)):
                for b in range(a + 1, len(img)):
                    if col.index(img[a]) > col.index(img[b]):
                        inv += 1
            sign *= (-1) ** inv
            for src, dst in zip(col, img):
                sub[src] = dst
        rows = tuple(frozenset(sub.get(v, v) for v in row) for row in t)
        vec[rows] = vec.get(rows, Fraction(0)) + sign
    return {k: v for k, v in vec.items() if v}


def _solve(matrix, rhs):
    """Solve matrix @ x = rhs exactly (matrix has full column rank)."""
    rows, cols = len(matrix), len(matrix[0]) if matrix else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(rows)]
    piv = []
    rank = 0
    for c in range(cols):
        p = next((i for i in range(rank, rows) if aug[i][c]), None)
        assert p is not None, "column rank deficiency"
        aug[rank], aug[p] = aug[p], aug[rank]
        inv = Fraction(1) / aug[rank][c]
        aug[rank] = [x * inv for x in aug[rank]]
        for i in range(rows):
            if i != rank and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rank])]
        piv.append(c)
        rank += 1
    for i in range(rank, rows):
        assert not aug[i][cols], "inconsistent system"
    x = [Fraction(0)] * cols
    for row_i, c in enumerate(piv):
        x[c] = aug[row_i][cols]
    return x


@lru_cache(maxsize=None)
def _specht_data(lam):
    std = standard_tableaux(lam)
    vecs = [_polytabloid(t) for t in std]
    tabloids = sorted({tb for v in vecs for tb in v}, key=repr)
    index = {tb: i for i, tb in enumerate(tabloids)}
    matrix = [
        [vecs[j].get(tb, Fraction(0)) for j in range(len(std))] for tb in tabloids
    ]
    return std, index, matrix


def _apply_perm(t, perm):
    return tuple(tuple(perm[v - 1] for v in row) for row in t)


@lru_cache(maxsize=None)
def specht_matrix(lam, perm):
    """Matrix of perm on the Specht module of shape lam, standard basis."""
    std, index, matrix = _specht_data(lam)
    d = len(std)
    out = []
    for t in std:
        vec = _polytabloid(_apply_perm(t, perm))
        rhs = [Fraction(0)] * len(index)
        for tb, c in vec.items():
            rhs[index[tb]] = c
        out.append(_solve(matrix, rhs))
    # out[j] = coordinates of perm . e_{std[j]}; columns of the matrix
    return tuple(tuple(out[j][i] for j in range(d)) for i in range(d))


def specht_dim(lam):
    return len(standard_tableaux(lam))


# -- wreath product matrix representations -------------------------------------


def _kron(a, b):
    if not a:
        return b
    if not b:
        return a
    return tuple(
        tuple(a[i][j] * b[p][q] for j in range(len(a)) for q in range(len(b)))
        for i in range(len(a))
        for p in range(len(b))
    )


class MatrixRep:
    """Matrix model of the G(r,n)-irreducible labeled by a multipartition.

    Induced from the block subgroup G(r,k_0) x ... x G(r,k_{r-1}) acting by
    color characters times Specht matrices.
    """

    def __init__(self, r, lam_bar):
        self.r = r
        self.lam_bar = tuple(tuple(lam) for lam in lam_bar)
        self.n = weight(lam_bar)
        ks = [sum(lam) for lam in lam_bar]
        blocks = []
        start = 1
        for k in ks:
            blocks.append(tuple(range(start, start + k)))
            start += k
        self.blocks = blocks
        elements = g_elements(r, self.n)
        in_h = lambda g: all(
            all(g[1][v - 1] in blk for v in blk) for blk in blocks
        )
        self.h_elements = tuple(g for g in elements if in_h(g))
        # coset decomposition G = union t_c H
        self.coset_reps = []
        self.elem_coset = {}
        for g in elements:
            if g in self.elem_coset:
                continue
            c = len(self.coset_reps)
            self.coset_reps.append(g)
            for h in self.h_elements:
                self.elem_coset[gmul(r, g, h)] = c
        self.base_dim = 1
        for lam in self.lam_bar:
            self.base_dim *= specht_dim(lam)
        self.dim = len(self.coset_reps) * self.base_dim
        self._cache = {}

    def _base_matrix(self, h):
        """The block-subgroup representation: color scalar x Specht kron."""
        f, tau = h
        phase = 0
        mat = ()
        for j, blk in enumerate(self.blocks):
            phase += j * sum(f[v - 1] for v in blk)
            off = blk[0] - 1 if blk else 0
            local = tuple(tau[off + v - 1] - off for v in range(1, len(blk) + 1))
            mat = _kron(mat, specht_matrix(self.lam_bar[j], local))
        if not mat:
            mat = ((Fraction(1),),)
        scal = zeta_pow(self.r, phase % self.r)
        return tuple(
            tuple(scal * Fraction(x) if x else CycNumber.zero(self.r) for x in row)
            for row in mat
        )

    def matrix(self, g):
        if g in self._cache:
            return self._cache[g]
        r, d = self.r, self.dim
        m = [[CycNumber.zero(r) for _ in range(d)] for _ in range(d)]
        for c, t in enumerate(self.coset_reps):
            gt = gmul(r, g, t)
            c2 = self.elem_coset[gt]
            h = gmul(r, ginv(r, self.coset_reps[c2]), gt)
            sig = self._base_matrix(h)
            for v in range(self.base_dim):
                for w in range(self.base_dim):
                    if sig[v][w]:
                        m[c2 * self.base_dim + v][c * self.base_dim + w] = sig[v][w]
        out = tuple(tuple(row) for row in m)
        self._cache[g] = out
        return out

    def trace(self, g):
        m = self.matrix(g)
        t = CycNumber.zero(self.r)
        for i in range(self.dim):
            t = t + m[i][i]
        return t


@lru_cache(maxsize=None)
def build_matrix_rep(r, lam_bar):
    return MatrixRep(r, lam_bar)


@lru_cache(maxsize=None)
def primitive_idempotent(r, lam_bar):
    """eps = (dim/|G|) sum_g rho(g^{-1})_{11} g, as dict g -> CycNumber."""
    rep = build_matrix_rep(r, lam_bar)
    n = rep.n
    elements = g_elements(r, n)
    scale = Fraction(rep.dim, len(elements))
    eps = {}
    for g in elements:
        c = rep.matrix(ginv(r, g))[0][0] * scale
        if c:
            eps[g] = c
    return eps


def algebra_mul(r, a, b):
    """Group algebra convolution of dicts g -> CycNumber."""
    out = {}
    for g, cg in a.items():
        for h, ch in b.items():
            gh = gmul(r, g, h)
            c = cg * ch
            out[gh] = out.get(gh, CycNumber.zero(r)) + c
    return {g: c for g, c in out.items() if c}


@lru_cache(maxsize=None)
def _phi_table(r, lam_bar):
    """phi(z) with eps z eps = phi(z) eps, via identity-coefficient ratio."""
    eps = primitive_idempotent(r, lam_bar)
    n = weight(lam_bar)
    e = g_identity(n)
    denom = eps[e]
    table = {}
    for z in g_elements(r, n):
        prod = algebra_mul(r, algebra_mul(r, eps, {z: CycNumber.one(r)}), eps)
        table[z] = prod.get(e, CycNumber.zero(r)) / denom
    return table


# -- cross-sections and factorization ------------------------------------------


def enumerate_cross_section(r, k, i):
    """All elements of S(k,i): normally ordered rank-i (k,k)-diagrams with
    trivially colored propagating parts anchored at 1'..i', arbitrarily
    colored nonpropagating top parts, trivial bottom singletons."""
    if not 0 <= i <= k:
        raise ValueError("need 0 <= i <= k")
    out = []
    for part in set_partitions(range(1, k + 1)):
        if len(part) < i:
            continue
        part = [tuple(b) for b in part]
        for chosen in combinations(range(len(part)), i):
            props = sorted((part[c] for c in chosen), key=min)
            others = [part[c] for c in range(len(part)) if c not in chosen]
            base = [(props[j], (j + 1,), 0) for j in range(i)]
            base += [((), (j,), 0) for j in range(i + 1, k + 1)]
            for colors in product(range(r), repeat=len(others)):
                blocks = base + [
                    (b, (), c) for b, c in zip(others, colors)
                ]
                out.append(ColoredDiagram(r, k, k, blocks))
    return out


def group_diagram(r, k, i, g):
    """The (k,k)-diagram of g in G(r,i) padded with trivial strands absent:
    propagating blocks {v, (tau^{-1}v)'} colored f(v), plus trivial top and
    bottom singletons at i+1..k."""
    f, tau = g
    ti = pinv(tau)
    blocks = [((v,), (ti[v - 1],), f[v - 1]) for v in range(1, i + 1)]
    blocks += [((v,), (), 0) for v in range(i + 1, k + 1)]
    blocks += [((), (v,), 0) for v in range(i + 1, k + 1)]
    return ColoredDiagram(r, k, k, blocks)


class NotInLForm(RuntimeError):
    pass


def factor_cross_section(d, i):
    """Factor a rank-i (k,k)-diagram with cross-section bottom structure as
    (d2, g): d2 in S(k,i), g in G(r,i); raises NotInLForm otherwise."""
    r, k = d.r, d.k
    if d.rank() != i:
        raise NotInLForm("rank is not %d" % i)
    props = []
    for top, bot, c in d.blocks:
        if top and bot:
            if len(bot) != 1 or bot[0] > i:
                raise NotInLForm("propagating bottom is not a singleton in 1..i")
            props.append((top, bot[0], c))
        elif bot:
            if len(bot) != 1 or bot[0] <= i or c:
                raise NotInLForm("nonpropagating bottom not a trivial singleton")
    props.sort(key=lambda x: min(x[0]))
    tau = [0] * i
    f = [0] * i
    blocks = []
    for p, (top, m, c) in enumerate(props, start=1):
        blocks.append((top, (p,), 0))
        tau[m - 1] = p
        f[p - 1] = c
    blocks += [((), (j,), 0) for j in range(i + 1, k + 1)]
    blocks += [(top, (), c) for top, bot, c in d.blocks if top and not bot]
    d2 = ColoredDiagram(r, k, k, blocks)
    g = (tuple(f), tuple(tau))
    return d2, g


def recompose_cross_section(d2, g, i):
    """Inverse of factor_cross_section: rebuild the rank-i diagram."""
    r, k = d2.r, d2.k
    f, tau = g
    ti = pinv(tau) if i else ()
    blocks = []
    for top, bot, c in d2.blocks:
        if top and bot:
            p = bot[0]
            blocks.append((top, (ti[p - 1],), f[p - 1]))
        else:
            blocks.append((top, bot, c))
    return ColoredDiagram(r, k, k, blocks)


def act(d, d1, i):
    """Action of d in CPar_k on the cross-section index d1 of a rank-i cell
    module: returns (d2, g, exponents) or None when the rank drops."""
    prod, exps = compose(d, d1)
    if prod.rank() != i:
        return None
    d2, g = factor_cross_section(prod, i)
    return d2, g, exps


# -- Gram matrices and semisimplicity -------------------------------------------


def _module_basis(r, lam_bar):
    """Group elements g_a whose first rep columns are independent; coset
    representatives first (for induced reps with one-dimensional base this
    makes the weight-n Gram block the identity)."""
    rep = build_matrix_rep(r, lam_bar)
    n = rep.n
    candidates = list(rep.coset_reps) + [
        g for g in g_elements(r, n) if g not in set(rep.coset_reps)
    ]
    chosen = []
    rows = []  # reduced echelon rows of first columns

    def reduce(vec):
        vec = list(vec)
        for lead, row in rows:
            if vec[lead]:
                c = vec[lead]
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    for g in candidates:
        col = [rep.matrix(g)[v][0] for v in range(rep.dim)]
        red = reduce(col)
        lead = next((j for j, a in enumerate(red) if a), None)
        if lead is None:
            continue
        inv = red[lead].inverse()
        rows.append((lead, [a * inv for a in red]))
        chosen.append(g)
        if len(chosen) == rep.dim:
            return chosen
    raise AssertionError("first columns do not span the representation")


def _monomial(r, exps):
    return MPoly.monomial(r, exps, CycNumber.one(r))


def gram_matrix(r, k, lam_bar):
    """Symbolic Gram matrix of the cell module W(lam_bar) at rank i = |lam_bar|
    inside CPar_k; entries are MPoly in y_0..y_{r-1}."""
    lam_bar = tuple(tuple(lam) for lam in lam_bar)
    i = weight(lam_bar)
    if i > k:
        raise ValueError("weight exceeds k")
    cs = enumerate_cross_section(r, k, i)
    gs = _module_basis(r, lam_bar)
    phi = _phi_table(r, lam_bar)
    dim = len(cs) * len(gs)
    rows = []
    for d in cs:
        di = flip_invert(d)
        for a in gs:
            row = []
            ai = ginv(r, a)
            for dp in cs:
                prod, exps = compose(di, dp)
                if prod.rank() != i:
                    row.extend([MPoly.zero(r)] * len(gs))
                    continue
                d2, g = factor_cross_section(prod, i)
                # the product must be e_i-padded: d2 is the identity element
                assert all(
                    top == bot
                    or (not top and len(bot) == 1 and c == 0)
                    or (not bot and len(top) == 1 and c == 0)
                    for top, bot, c in d2.blocks
                ), "rank-i product not in e_i form: %r" % (prod,)
                mono = _monomial(r, exps)
                for b in gs:
                    val = phi[gmul(r, gmul(r, ai, g), b)]
                    row.append(mono * val if val else MPoly.zero(r))
            rows.append(row)
    assert len(rows) == dim
    return rows


def det_bareiss(M, r):
    """Fraction-free determinant of a square MPoly matrix."""
    n = len(M)
    if n == 0:
        return MPoly.one(r)
    M = [list(row) for row in M]
    prev = MPoly.one(r)
    sign = 1
    for t in range(n - 1):
        if not M[t][t]:
            p = next((s for s in range(t + 1, n) if M[s][t]), None)
            if p is None:
                return MPoly.zero(r)
            M[t], M[p] = M[p], M[t]
            sign = -sign
        for s in range(t + 1, n):
            for j in range(t + 1, n):
                M[s][j] = (M[t][t] * M[s][j] - M[s][t] * M[t][j]).divexact(prev)
            M[s][t] = MPoly.zero(r)
        prev = M[t][t]
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


@lru_cache(maxsize=None)
def gram_det(r, k, lam_bar):
    return det_bareiss(gram_matrix(r, k, lam_bar), r)


def cell_dimension(r, k, lam_bar):
    i = weight(lam_bar)
    return len(enumerate_cross_section(r, k, i)) * build_matrix_rep(r, lam_bar).dim


def semisimplicity_certificate(r, k, x):
    """Evaluate every Gram determinant at the parameter point x; semisimple
    iff all are nonzero.  Also checks sum over cells of (dim W)^2 = B_{2k,r}."""
    x = tuple(Fraction(v) for v in x)
    if len(x) != r:
        raise ValueError("parameter point needs %d coordinates" % r)
    if not any(x):
        raise ValueError("some parameter must be nonzero")
    dets = {}
    dim_sq = 0
    semisimple = True
    for i in range(k + 1):
        for lam_bar in multipartitions(r, i):
            det = gram_det(r, k, lam_bar)
            val = det.eval(x)
            dets[lam_bar] = (det, val)
            if not val:
                semisimple = False
            dim_sq += cell_dimension(r, k, lam_bar) ** 2
    bell = count_bell(2 * k, r)
    return {
        "r": r,
        "k": k,
        "x": x,
        "semisimple": semisimple,
        "dets": dets,
        "dimension_identity": dim_sq == bell,
        "sum_dim_sq": dim_sq,
        "bell": bell,
    }


# -- Cartan matrix ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _downward_basis(r, m, l):
    return tuple(d for d in enumerate_diagrams(r, m, l) if d.is_downward())


def _perm_diagram(r, n, g):
    f, tau = g
    ti = pinv(tau)
    return ColoredDiagram(
        r, n, n, [((v,), (ti[v - 1],), f[v - 1]) for v in range(1, n + 1)]
    )


@lru_cache(maxsize=None)
def cartan_entry(r, lam_bar, mu_bar):
    """Multiplicity dim eps_mu * (downward (m,l) span) * eps_lam, as the trace
    of the idempotent bi-projection on the diagram basis."""
    lam_bar = tuple(tuple(x) for x in lam_bar)
    mu_bar = tuple(tuple(x) for x in mu_bar)
    l, m = weight(lam_bar), weight(mu_bar)
    basis = _downward_basis(r, m, l)
    if not basis:
        return 0
    eps_mu = primitive_idempotent(r, mu_bar)
    eps_lam = primitive_idempotent(r, lam_bar)
    total = CycNumber.zero(r)
    index = {d: j for j, d in enumerate(basis)}
    for g, cg in eps_mu.items():
        dg = _perm_diagram(r, m, g)
        for h, ch in eps_lam.items():
            dh = _perm_diagram(r, l, h)
            fixed = 0
            for d in basis:
                p1, e1 = compose(dg, d)
                p2, e2 = compose(p1, dh)
                assert not any(e1) and not any(e2)
                if p2 == d:
                    fixed += 1
            if fixed:
                total = total + cg * ch * fixed
    val = total.as_rational()
    assert val.denominator == 1 and val >= 0, val
    return int(val)


def cartan_matrix(r, maxweight):
    """All entries for multipartition pairs of weight <= maxweight."""
    labels = [
        lam for w in range(maxweight + 1) for lam in multipartitions(r, w)
    ]
    return labels, {
        (lam, mu): cartan_entry(r, lam, mu) for lam in labels for mu in labels
    }


def cartan_tensor_check(maxweight, r):
    """Entrywise B_r = B_1 tensor ... tensor B_1 on total weight <= maxweight."""
    labels, big = cartan_matrix(r, maxweight)
    for lam in labels:
        for mu in labels:
            prod = 1
            for li, mi in zip(lam, mu):
                prod *= cartan_entry(1, (li,), (mi,))
                if not prod:
                    break
            if big[(lam, mu)] != prod:
                return False
    return True
