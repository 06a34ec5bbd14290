"""Character engine for symmetric groups and wreath products G(r,n).

Symmetric group characters come from the Murnaghan-Nakayama rule;
Littlewood-Richardson coefficients from lattice-word backtracking.  The
irreducible characters of G(r,n) = C_r wr S_n are computed by brute-force
induction from the block subgroup G(r,k_1) x ... x G(r,k_r) with base
character prod_i phi_i(cycle colors) chi^{lambda_i}, cached per (r, n).
On top of these: Kronecker and reduced Kronecker coefficients, the
K-coefficients over H(r,t) = (C_r x C_r) wr S_t, admissible sets,
R-coefficients, and the X^t permutation-module oracle.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product, combinations

from .scalars import CycNumber, zeta_pow


# -- partitions ---------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions(n, maxpart=None):
    """All partitions of n as weakly decreasing tuples."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def multipartitions(r, n):
    """All r-tuples of partitions of total size n."""
    if r == 1:
        return tuple((lam,) for lam in partitions(n))
    out = []
    for k in range(n + 1):
        for lam in partitions(k):
            for rest in multipartitions(r - 1, n - k):
                out.append((lam,) + rest)
    return tuple(out)


def weight(lam_bar):
    return sum(sum(lam) for lam in lam_bar)


# -- Murnaghan-Nakayama -------------------------------------------------------


@lru_cache(maxsize=None)
def chi_sn(lam, mu):
    """Symmetric group character chi^lam evaluated on cycle type mu."""
    if not mu:
        return 1 if not lam else 0
    k = mu[0]
    rest = mu[1:]
    total = 0
    # enumerate removable border strips of size k via beta-numbers
    n = len(lam) + 1
    betas = [lam[i] + n - 1 - i for i in range(len(lam))]
    betas += list(range(n - len(lam) - 1, -1, -1))
    bset = set(betas)
    for b in betas:
        if b - k < 0 or b - k in bset:
            continue
        newset = (bset - {b}) | {b - k}
        newbetas = sorted(newset, reverse=True)
        newlam = tuple(x - (n - i) for i, x in enumerate(newbetas, start=1))
        newlam = tuple(x for x in newlam if x)
        ht = sum(1 for x in bset if b - k < x < b)
        total += (-1) ** ht * chi_sn(newlam, rest)
    return total


def z_order(mu):
    """Centralizer order of the class with cycle type mu in S_n."""
    z = 1
    mult = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m
        for j in range(1, m + 1):
            z *= j
    return z


# -- Littlewood-Richardson ----------------------------------------------------


def _contains(lam, mu):
    return len(mu) <= len(lam) and all(mu[i] <= lam[i] for i in range(len(mu)))


@lru_cache(maxsize=None)
def lr_coeff(lam, mu, nu):
    """Count LR skew tableaux of shape lam/mu and content nu."""
    if sum(lam) != sum(mu) + sum(nu) or not _contains(lam, mu):
        return 0
    if not nu:
        return 1
    rows = len(lam)
    mu_pad = tuple(mu) + (0,) * (rows - len(mu))
    nu = tuple(nu)
    count = 0
    fill = {}
    # reverse reading order: top row first, right to left; the lattice
    # condition then reads "every prefix has content_v <= content_{v-1}"
    cells = []
    for i in range(rows):
        for j in range(lam[i] - 1, mu_pad[i] - 1, -1):
            cells.append((i, j))

    def ok2(i, j, v):
        # right neighbor was filled before (reverse reading order)
        right = fill.get((i, j + 1))
        if right is not None and right < v:
            return False
        up = fill.get((i - 1, j))
        if i > 0 and mu_pad[i - 1] <= j < lam[i - 1]:
            if up is None or up >= v:
                return False
        return True

    def rec2(idx, content):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        i, j = cells[idx]
        for v in range(1, len(nu) + 1):
            if content[v - 1] >= nu[v - 1]:
                continue
            if v > 1 and content[v - 1] >= content[v - 2]:
                continue
            if not ok2(i, j, v):
                continue
            fill[(i, j)] = v
            content[v - 1] += 1
            rec2(idx + 1, content)
            content[v - 1] -= 1
            del fill[(i, j)]

    rec2(0, [0] * len(nu))
    return count


@lru_cache(maxsize=None)
def lr3_coeff(lam, m1, m2, m3):
    """Triple LR coefficient: multiplicity of s_lam in s_m1 s_m2 s_m3."""
    total = 0
    for kappa in partitions(sum(m1) + sum(m2)):
        c = lr_coeff(kappa, m1, m2)
        if c:
            total += c * lr_coeff(lam, kappa, m3)
    return total


def lr_bar3(lam_bar, a_bar, b_bar, c_bar):
    """Componentwise product of triple LR coefficients."""
    out = 1
    for lam, a, b, c in zip(lam_bar, a_bar, b_bar, c_bar):
        out *= lr3_coeff(lam, a, b, c)
        if not out:
            return 0
    return out


# -- wreath products G(r, n) --------------------------------------------------


def pmul(a, b):
    """(a b)(i) = a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def pinv(a):
    out = [0] * len(a)
    for i, v in enumerate(a, start=1):
        out[v - 1] = i
    return tuple(out)


def gmul(r, g, h):
    """(f, tau)(h, sigma) = (f * h_tau, tau sigma), h_tau(i) = h(tau^{-1}(i))."""
    (f, tau), (hc, sigma) = g, h
    tinv = pinv(tau)
    colors = tuple((f[i] + hc[tinv[i] - 1]) % r for i in range(len(f)))
    return colors, pmul(tau, sigma)


def ginv(r, g):
    f, tau = g
    tinv = pinv(tau)
    colors = tuple((-f[tau[i] - 1]) % r for i in range(len(f)))
    return colors, tinv


def g_identity(n):
    return (0,) * n, tuple(range(1, n + 1))


@lru_cache(maxsize=None)
def g_elements(r, n):
    perms = list(permutations(range(1, n + 1)))
    return tuple(
        (colors, tuple(p)) for p in perms for colors in product(range(r), repeat=n)
    )


def class_type(r, g):
    """Conjugacy class invariant: per color, the partition of cycle lengths
    whose cycle color product is zeta^color."""
    f, tau = g
    n = len(f)
    seen = [False] * n
    buckets = [[] for _ in range(r)]
    for i in range(1, n + 1):
        if seen[i - 1]:
            continue
        j = i
        length = 0
        color = 0
        while not seen[j - 1]:
            seen[j - 1] = True
            color = (color + f[j - 1]) % r
            j = tau[j - 1]
            length += 1
        buckets[color].append(length)
    return tuple(tuple(sorted(b, reverse=True)) for b in buckets)


def _restricted_cycle_type(perm, block):
    """Cycle type of a block-preserving permutation restricted to block."""
    block = list(block)
    idx = {v: i for i, v in enumerate(block)}
    seen = [False] * len(block)
    cycles = []
    for s in range(len(block)):
        if seen[s]:
            continue
        j = s
        length = 0
        while not seen[j]:
            seen[j] = True
            j = idx[perm[block[j] - 1]]
            length += 1
        cycles.append(length)
    return tuple(sorted(cycles, reverse=True))


@lru_cache(maxsize=None)
def wreath_char_table(r, n):
    """Character table of G(r,n): (class_reps, class_sizes, table) where
    table[lam_bar][class_type] is a CycNumber."""
    elements = g_elements(r, n)
    reps, sizes = {}, {}
    for g in elements:
        t = class_type(r, g)
        reps.setdefault(t, g)
        sizes[t] = sizes.get(t, 0) + 1
    table = {}
    for lam_bar in multipartitions(r, n):
        ks = [sum(lam) for lam in lam_bar]
        blocks = []
        start = 1
        for k in ks:
            blocks.append(tuple(range(start, start + k)))
            start += k
        h_order = 1
        for k in ks:
            h_order *= r**k
            for j in range(1, k + 1):
                h_order *= j

        def in_h(g):
            _, perm = g
            return all(all(perm[v - 1] in blk for v in blk) for blk in blocks)

        def theta(g):
            f, perm = g
            val = CycNumber.one(r)
            for i, blk in enumerate(blocks):
                a = sum(f[v - 1] for v in blk) % r
                val = val * zeta_pow(r, (a * i) % r)
                c = chi_sn(lam_bar[i], _restricted_cycle_type(perm, blk))
                if c != 1:
                    val = val * CycNumber.from_rational(r, Fraction(c))
                if not val:
                    return val
            return val

        row = {}
        for t, g in reps.items():
            acc = CycNumber.zero(r)
            for x in elements:
                y = gmul(r, gmul(r, ginv(r, x), g), x)
                if in_h(y):
                    acc = acc + theta(y)
            row[t] = acc * CycNumber.from_rational(r, Fraction(1, h_order))
        table[lam_bar] = row
    return reps, sizes, table


def wreath_char(r, n, lam_bar, g):
    _, _, table = wreath_char_table(r, n)
    return table[lam_bar][class_type(r, g)]


def wreath_dim(r, n, lam_bar):
    return wreath_char(r, n, lam_bar, g_identity(n)).as_integer()


# -- Kronecker coefficients ---------------------------------------------------


def kronecker(lam, mu, nu, n):
    """Symmetric group Kronecker coefficient at size n (padded sizes must
    already match n)."""
    assert sum(lam) == sum(mu) == sum(nu) == n
    total = Fraction(0)
    for rho in partitions(n):
        total += (
            Fraction(chi_sn(lam, rho) * chi_sn(mu, rho) * chi_sn(nu, rho), z_order(rho))
        )
    assert total.denominator == 1
    return int(total)


class StabilizationError(RuntimeError):
    pass


def _pad(lam, n):
    if not lam:
        return (n,) if n else ()
    assert n - sum(lam) >= lam[0], "padding below the first part"
    return (n - sum(lam),) + tuple(lam)


def reduced_kronecker(lam, mu, nu):
    """Stable limit of kronecker(lam[n], mu[n], nu[n]) for large n."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    n0 = sum(lam) + sum(mu) + sum(nu)
    n0 = max(
        n0,
        sum(lam) + (lam[0] if lam else 0),
        sum(mu) + (mu[0] if mu else 0),
        sum(nu) + (nu[0] if nu else 0),
    )
    prev = None
    for n in range(n0, n0 + 5):
        val = kronecker(_pad(lam, n), _pad(mu, n), _pad(nu, n), n)
        if prev is not None and val == prev:
            return val
        prev = val
    raise StabilizationError("no stabilization within window for %r %r %r" % (lam, mu, nu))


# -- K-coefficients over H(r,t) -----------------------------------------------


def k_coefficient(r, delta, delta1, delta2):
    """Multiplicity of the psi_3-pullback of S(delta2) in the tensor product
    of the psi_1-pullback of S(delta) and the psi_2-pullback of S(delta1),
    over H(r,t) = (C_r x C_r) wr S_t."""
    t = weight(delta)
    assert weight(delta1) == t == weight(delta2)
    wreath_char_table(r, t)
    total = CycNumber.zero(r)
    for xi in permutations(range(1, t + 1)):
        for w in product(range(r), repeat=t):
            c1 = wreath_char(r, t, delta, (w, xi))
            if not c1:
                continue
            for u in product(range(r), repeat=t):
                c2 = wreath_char(r, t, delta1, (u, xi))
                if not c2:
                    continue
                wu = tuple((w[i] + u[i]) % r for i in range(t))
                c3 = wreath_char(r, t, delta2, (wu, xi))
                total = total + c1 * c2 * c3.conjugate()
    order = r ** (2 * t)
    for j in range(1, t + 1):
        order *= j
    val = (total * CycNumber.from_rational(r, Fraction(1, order))).as_rational()
    assert val.denominator == 1 and val >= 0
    return int(val)


# -- admissible data and R-coefficients ---------------------------------------


def admissible_set(l, m, n):
    out = []
    top = min(l + m - n, l + n - m, m + n - l)
    for t in range(0, top + 1):
        if (t - (l + m + n)) % 2:
            continue
        out.append(
            {
                "t": t,
                "a": (m + n - l - t) // 2,
                "b": (l + n - m - t) // 2,
                "c": (l + m - n - t) // 2,
            }
        )
    return out


def xt_formula(r, lam_bar, mu_bar, nu_bar, t):
    """The LR/K sum: multiplicity of S(lam)xS(mu)*xS(nu)* in k X^t."""
    l, m, n = weight(lam_bar), weight(mu_bar), weight(nu_bar)
    data = [d for d in admissible_set(l, m, n) if d["t"] == t]
    assert data, "t is not admissible"
    a, b, c = data[0]["a"], data[0]["b"], data[0]["c"]
    total = 0
    for alpha in multipartitions(r, a):
        for beta in multipartitions(r, b):
            for gamma in multipartitions(r, c):
                for delta in multipartitions(r, t):
                    x1 = lr_bar3(lam_bar, beta, delta, gamma)
                    if not x1:
                        continue
                    for delta1 in multipartitions(r, t):
                        x2 = lr_bar3(mu_bar, gamma, delta1, alpha)
                        if not x2:
                            continue
                        for delta2 in multipartitions(r, t):
                            x3 = lr_bar3(nu_bar, alpha, delta2, beta)
                            if not x3:
                                continue
                            k = k_coefficient(r, delta, delta1, delta2)
                            total += x1 * x2 * x3 * k
    return total


def r_coefficient(r, lam_bar, mu_bar, nu_bar):
    """Structure constant in the simple-module basis: sum of the X^t
    multiplicities over all admissible t."""
    l, m, n = weight(lam_bar), weight(mu_bar), weight(nu_bar)
    return sum(
        xt_formula(r, lam_bar, mu_bar, nu_bar, d["t"]) for d in admissible_set(l, m, n)
    )


def theorem_formula_check(r, lam_bar, mu_bar, nu_bar):
    """Product of per-color reduced Kronecker coefficients vs R."""
    lhs = 1
    for lam, mu, nu in zip(lam_bar, mu_bar, nu_bar):
        lhs *= reduced_kronecker(lam, mu, nu)
        if not lhs:
            break
    rhs = r_coefficient(r, lam_bar, mu_bar, nu_bar)
    return {"lhs": lhs, "rhs": rhs, "ok": lhs == rhs}


# -- the X^t permutation module oracle -----------------------------------------


def xt_elements(r, l, m, n, t):
    """All colored tripartite matchings with a parts {j',k''}, b parts
    {i,k''}, c parts {i,j'} and t parts {i,j',k''}."""
    data = [d for d in admissible_set(l, m, n) if d["t"] == t]
    assert data, "t is not admissible"
    a, b, c = data[0]["a"], data[0]["b"], data[0]["c"]
    L = list(range(1, l + 1))
    M = list(range(1, m + 1))
    N = list(range(1, n + 1))
    out = []
    for bl in combinations(L, b):
        restl = [x for x in L if x not in bl]
        for tl in combinations(restl, t):
            cl = tuple(x for x in restl if x not in tl)
            for cm in combinations(M, c):
                restm = [x for x in M if x not in cm]
                for tm in combinations(restm, t):
                    am = tuple(x for x in restm if x not in tm)
                    for an in combinations(N, a):
                        restn = [x for x in N if x not in an]
                        for tn in combinations(restn, t):
                            bn = tuple(x for x in restn if x not in tn)
                            for pa in permutations(an):
                                for pb in permutations(bn):
                                    for pcm in permutations(cm):
                                        for ptm in permutations(tm):
                                            for ptn in permutations(tn):
                                                parts = []
                                                parts += [
                                                    (("m", am[i]), ("n", pa[i]))
                                                    for i in range(a)
                                                ]
                                                parts += [
                                                    (("l", bl[i]), ("n", pb[i]))
                                                    for i in range(b)
                                                ]
                                                parts += [
                                                    (("l", cl[i]), ("m", pcm[i]))
                                                    for i in range(c)
                                                ]
                                                parts += [
                                                    (
                                                        ("l", tl[i]),
                                                        ("m", ptm[i]),
                                                        ("n", ptn[i]),
                                                    )
                                                    for i in range(t)
                                                ]
                                                for colors in product(
                                                    range(r), repeat=len(parts)
                                                ):
                                                    out.append(
                                                        frozenset(
                                                            (frozenset(p), s)
                                                            for p, s in zip(
                                                                parts, colors
                                                            )
                                                        )
                                                    )
    return out


def xt_act(r, g1, g2, g3, x):
    """Action of (g1, g2, g3) in G(r,l) x (G(r,m) x G(r,n))^op on x."""
    (h1, s1), (h2, s2), (h3, s3) = g1, g2, g3
    s2i, s3i = pinv(s2), pinv(s3)
    new = []
    for part, color in x:
        d = {tag: idx for tag, idx in part}
        c = color
        np = []
        if "l" in d:
            i2 = s1[d["l"] - 1]
            np.append(("l", i2))
            c = (c + h1[i2 - 1]) % r
        if "m" in d:
            j = d["m"]
            np.append(("m", s2i[j - 1]))
            c = (c + h2[j - 1]) % r
        if "n" in d:
            k = d["n"]
            np.append(("n", s3i[k - 1]))
            c = (c + h3[k - 1]) % r
        new.append((frozenset(np), c))
    return frozenset(new)


def xt_multiplicity_oracle(r, lam_bar, mu_bar, nu_bar, t):
    """Multiplicity of S(lam) x S(mu)* x S(nu)* in k X^t, computed from the
    explicit permutation character of the action on X^t."""
    l, m, n = weight(lam_bar), weight(mu_bar), weight(nu_bar)
    X = xt_elements(r, l, m, n, t)
    total = CycNumber.zero(r)
    for g1 in g_elements(r, l):
        c1 = wreath_char(r, l, lam_bar, g1)
        if not c1:
            continue
        for g2 in g_elements(r, m):
            # dual slots: the character of S(mu)* on the opposite group is
            # chi_mu itself, so no conjugation here
            c2 = wreath_char(r, m, mu_bar, g2)
            if not c2:
                continue
            c12 = c1 * c2
            for g3 in g_elements(r, n):
                c3 = wreath_char(r, n, nu_bar, g3)
                if not c3:
                    continue
                fixed = sum(1 for x in X if xt_act(r, g1, g2, g3, x) == x)
                if fixed:
                    total = total + c12 * c3 * CycNumber.from_rational(
                        r, Fraction(fixed)
                    )
    order = len(g_elements(r, l)) * len(g_elements(r, m)) * len(g_elements(r, n))
    val = (total * CycNumber.from_rational(r, Fraction(1, order))).as_rational()
    assert val.denominator == 1 and val >= 0, val
    return int(val)
