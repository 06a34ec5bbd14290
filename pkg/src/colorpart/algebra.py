"""The colored partition algebra CPar_k(x) and the monoid CPar_k.

LinComb elements carry MPoly coefficients in the parameter variables
y_0..y_{r-1}; the monoid arises by evaluating every parameter at 1.
"""

from .diagrams import (
    ArityMismatch,
    ColoredDiagram,
    compose,
    count_bell,
    enumerate_diagrams,
)
from .scalars import MPoly


class CapExceeded(RuntimeError):
    pass


class LinComb:
    """Finite formal sum of same-arity diagrams with MPoly coefficients."""

    __slots__ = ("r", "k", "l", "terms")

    def __init__(self, r, k, l, terms=()):
        self.r = r
        self.k = k
        self.l = l
        clean = {}
        for d, c in dict(terms).items():
            if not isinstance(c, MPoly):
                c = MPoly.constant(r, c)
            if (d.r, d.k, d.l) != (r, k, l):
                raise ArityMismatch("diagram arity does not match LinComb arity")
            if c:
                clean[d] = c
        self.terms = clean

    @staticmethod
    def of(d, coeff=1):
        return LinComb(d.r, d.k, d.l, {d: coeff})

    @staticmethod
    def unit(r, k):
        return LinComb.of(ColoredDiagram.identity(r, k))

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return (self.r, self.k, self.l, self.terms) == (
            other.r,
            other.k,
            other.l,
            other.terms,
        )

    def __hash__(self):
        return hash((self.r, self.k, self.l, frozenset(self.terms.items())))

    def __add__(self, other):
        if (self.r, self.k, self.l) != (other.r, other.k, other.l):
            raise ArityMismatch("LinComb arity mismatch in addition")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, MPoly.zero(self.r)) + c
        return LinComb(self.r, self.k, self.l, terms)

    def __neg__(self):
        return LinComb(self.r, self.k, self.l, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, MPoly):
            c = MPoly.constant(self.r, c)
        return LinComb(self.r, self.k, self.l, {d: c * v for d, v in self.terms.items()})

    def __repr__(self):
        return "LinComb(%s)" % (
            " + ".join("(%r)*%r" % (c, d) for d, c in self.terms.items()) or "0"
        )


def multiply(a, b):
    """Bilinear extension of diagram composition, scalars as y-monomials."""
    if a.l != b.k or a.r != b.r:
        raise ArityMismatch("cannot multiply (%d,%d) by (%d,%d)" % (a.k, a.l, b.k, b.l))
    out = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            d, exps = compose(d1, d2)
            c = c1 * c2 * MPoly.monomial(a.r, exps)
            out[d] = out.get(d, MPoly.zero(a.r)) + c
    return LinComb(a.r, a.k, b.l, out)


def multiply_many(factors):
    out = factors[0]
    if isinstance(out, ColoredDiagram):
        out = LinComb.of(out)
    for f in factors[1:]:
        if isinstance(f, ColoredDiagram):
            f = LinComb.of(f)
        out = multiply(out, f)
    return out


# -- generators ---------------------------------------------------------------


def gen_s0(k, r):
    """Identity with the first strand colored zeta."""
    if k < 1:
        raise ValueError("s0 needs k >= 1")
    blocks = [((1,), (1,), 1)] + [((i,), (i,), 0) for i in range(2, k + 1)]
    return ColoredDiagram(r, k, k, blocks)


def gen_s(i, k, r):
    """Adjacent transposition of strands i, i+1."""
    if not 1 <= i <= k - 1:
        raise ValueError("s(i) needs 1 <= i <= k-1")
    blocks = [((i,), (i + 1,), 0), ((i + 1,), (i,), 0)]
    blocks += [((j,), (j,), 0) for j in range(1, k + 1) if j not in (i, i + 1)]
    return ColoredDiagram(r, k, k, blocks)


def gen_p(i, k, r):
    """Strand i cut into two singletons."""
    if not 1 <= i <= k:
        raise ValueError("p(i) needs 1 <= i <= k")
    blocks = [((i,), (), 0), ((), (i,), 0)]
    blocks += [((j,), (j,), 0) for j in range(1, k + 1) if j != i]
    return ColoredDiagram(r, k, k, blocks)


def gen_q(i, k, r):
    """Strands i, i+1 merged on top and on bottom."""
    if not 1 <= i <= k - 1:
        raise ValueError("q(i) needs 1 <= i <= k-1")
    blocks = [((i, i + 1), (i, i + 1), 0)]
    blocks += [((j,), (j,), 0) for j in range(1, k + 1) if j not in (i, i + 1)]
    return ColoredDiagram(r, k, k, blocks)


def gen_e(i, k, r):
    """First i strands kept, the rest cut into singletons."""
    if not 0 <= i <= k:
        raise ValueError("e(i) needs 0 <= i <= k")
    blocks = [((j,), (j,), 0) for j in range(1, i + 1)]
    for j in range(i + 1, k + 1):
        blocks.append(((j,), (), 0))
        blocks.append(((), (j,), 0))
    return ColoredDiagram(r, k, k, blocks)


def generator(name, k, r):
    if name == "s0":
        return gen_s0(k, r)
    kind, idx = name[0], int(name[1:] or 0)
    if kind == "s":
        return gen_s(idx, k, r)
    if kind == "p":
        return gen_p(idx, k, r)
    if kind == "q":
        return gen_q(idx, k, r)
    if kind == "e":
        return gen_e(idx, k, r)
    raise ValueError("unknown generator %r" % name)


# -- monoid product and presentation ------------------------------------------


def mcompose(d1, d2):
    """Monoid composition: scalars discarded (parameters at 1)."""
    return compose(d1, d2)[0]


def mword(factors):
    out = factors[0]
    for f in factors[1:]:
        out = mcompose(out, f)
    return out


def _w(l, k, r):
    """w_l = s_l ... s_1 s_0 s_1 ... s_l."""
    word = [gen_s(j, k, r) for j in range(l, 0, -1)]
    word.append(gen_s0(k, r))
    word += [gen_s(j, k, r) for j in range(1, l + 1)]
    return mword(word)


def presentation_relations(k, r):
    """Yield (relation id, instance description, lhs diagram, rhs diagram)."""
    s0 = gen_s0(k, r)
    ident = ColoredDiagram.identity(r, k)
    s = {i: gen_s(i, k, r) for i in range(1, k)}
    p = {i: gen_p(i, k, r) for i in range(1, k + 1)}
    q = {i: gen_q(i, k, r) for i in range(1, k)}

    def M(*fs):
        return mword(list(fs))

    # (1) s0^r = 1
    yield 1, "s0^r", M(*([s0] * r)), ident
    # (2) s0 s1 s0 s1 = s1 s0 s1 s0
    if 1 in s:
        yield 2, "s0s1s0s1=s1s0s1s0", M(s0, s[1], s0, s[1]), M(s[1], s0, s[1], s0)
    # (3) s0 si = si s0, i != 1
    for i in s:
        if i != 1:
            yield 3, "s0 s%d" % i, M(s0, s[i]), M(s[i], s0)
    # (4) si^2 = 1
    for i in s:
        yield 4, "s%d^2" % i, M(s[i], s[i]), ident
    # (5) braid
    for i in s:
        if i + 1 in s:
            yield (
                5,
                "braid s%d s%d" % (i, i + 1),
                M(s[i], s[i + 1], s[i]),
                M(s[i + 1], s[i], s[i + 1]),
            )
    # (6) si sj = sj si, |i-j| > 1
    for i in s:
        for j in s:
            if j - i > 1:
                yield 6, "s%d s%d" % (i, j), M(s[i], s[j]), M(s[j], s[i])
    # (7) pi^2 = pi
    for i in p:
        yield 7, "p%d^2" % i, M(p[i], p[i]), p[i]
    # (8) pi pj = pj pi
    for i in p:
        for j in p:
            if i < j:
                yield 8, "p%d p%d" % (i, j), M(p[i], p[j]), M(p[j], p[i])
    # (9) s0 pi = pi s0, i != 1
    for i in p:
        if i != 1:
            yield 9, "s0 p%d" % i, M(s0, p[i]), M(p[i], s0)
    # (10) si pj = pj si, |i-j| > 1 (strand j away from strands i,i+1)
    for i in s:
        for j in p:
            if abs(i - j) > 1:
                yield 10, "s%d p%d" % (i, j), M(s[i], p[j]), M(p[j], s[i])
    # (11) si pi = p(i+1) si
    for i in s:
        yield 11, "s%d p%d" % (i, i), M(s[i], p[i]), M(p[i + 1], s[i])
    # (12) pi s(i-1)...s1 s0 s1...s(i-1) pi = pi
    for i in p:
        if i - 1 <= k - 1:
            mid = _w(i - 1, k, r)
            yield 12, "p%d w%d p%d" % (i, i - 1, i), M(p[i], mid, p[i]), p[i]
    # (13) pi p(i+1) = pi p(i+1) si
    for i in p:
        if i + 1 in p and i in s:
            yield (
                13,
                "p%d p%d s%d" % (i, i + 1, i),
                M(p[i], p[i + 1]),
                M(p[i], p[i + 1], s[i]),
            )
    # (14) qi^2 = qi
    for i in q:
        yield 14, "q%d^2" % i, M(q[i], q[i]), q[i]
    # (15) qi qj = qj qi (all pairs; adjacent merges coincide)
    for i in q:
        for j in q:
            if j > i:
                yield 15, "q%d q%d" % (i, j), M(q[i], q[j]), M(q[j], q[i])
    # (16) s0 qi = qi s0, i != 1 (strand 1 must avoid the merged pair)
    for i in q:
        if i != 1:
            yield 16, "s0 q%d" % i, M(s0, q[i]), M(q[i], s0)
    # (17) si qj = qj si, |i-j| > 1
    for i in s:
        for j in q:
            if abs(i - j) > 1:
                yield 17, "s%d q%d" % (i, j), M(s[i], q[j]), M(q[j], s[i])
    # (18) si sj qi = qj si sj, |i-j| = 1
    for i in q:
        for j in q:
            if abs(i - j) == 1:
                yield (
                    18,
                    "s%d s%d q%d" % (i, j, i),
                    M(s[i], s[j], q[i]),
                    M(q[j], s[i], s[j]),
                )
    # (19) si qi = qi si = qi
    for i in q:
        yield 19, "s%d q%d" % (i, i), M(s[i], q[i]), q[i]
        yield 19, "q%d s%d" % (i, i), M(q[i], s[i]), q[i]
    # (20) qi pj = pj qi, |i-j| > 1 (j not in {i, i+1} suffices; stated |i-j|>1)
    for i in q:
        for j in p:
            if abs(i - j) > 1:
                yield 20, "q%d p%d" % (i, j), M(q[i], p[j]), M(p[j], q[i])
    # (21) qi pj qi = qi, j = i, i+1
    for i in q:
        for j in (i, i + 1):
            yield 21, "q%d p%d q%d" % (i, j, i), M(q[i], p[j], q[i]), q[i]
    # (22) pj qi pj = pj, j = i, i+1
    for i in q:
        for j in (i, i + 1):
            yield 22, "p%d q%d p%d" % (j, i, j), M(p[j], q[i], p[j]), p[j]
    # derived relations (23)-(28), with w_l = s_l...s_1 s_0 s_1...s_l
    w = {l: _w(l, k, r) for l in range(0, k)}
    # (23) w_l^r = 1
    for l in w:
        yield 23, "w%d^r" % l, mword([w[l]] * r) if r > 1 else w[l], ident
    # (24) si w_l = w_l si for l not in {i-1, i}
    for i in s:
        for l in w:
            if l not in (i - 1, i):
                yield 24, "s%d w%d" % (i, l), M(s[i], w[l]), M(w[l], s[i])
    # (25) w_(i-1) si = si w_i
    for i in s:
        if i - 1 in w and i in w:
            yield 25, "w%d s%d" % (i - 1, i), M(w[i - 1], s[i]), M(s[i], w[i])
    # (26) pm w_l = w_l pm for l != m-1
    for mm in p:
        for l in w:
            if l != mm - 1:
                yield 26, "p%d w%d" % (mm, l), M(p[mm], w[l]), M(w[l], p[mm])
    # (27) qn w_l = w_l qn
    for nn in q:
        for l in w:
            yield 27, "q%d w%d" % (nn, l), M(q[nn], w[l]), M(w[l], q[nn])
    # (28) pi w_(i-1) qi pi = pi w_i, 1 <= i <= k-1
    for i in range(1, k):
        yield (
            28,
            "p%d w%d q%d p%d" % (i, i - 1, i, i),
            M(p[i], w[i - 1], q[i], p[i]),
            M(p[i], w[i]),
        )


def check_presentation(k, r):
    """Evaluate every relation instance; return a report dict."""
    failures = []
    total = 0
    for rel_id, desc, lhs, rhs in presentation_relations(k, r):
        total += 1
        if lhs != rhs:
            failures.append({"relation": rel_id, "instance": desc})
    return {"k": k, "r": r, "checked": total, "failures": failures,
            "ok": not failures}


# -- enumeration, closure, Green's relations -----------------------------------


def enumerate_monoid(k, r, cap=10**5):
    n = count_bell(2 * k, r)
    if n > cap:
        raise CapExceeded("monoid size %d exceeds cap %d" % (n, cap))
    elems = set(enumerate_diagrams(r, k, k))
    assert len(elems) == n
    return elems


def monoid_generators(k, r):
    gens = [gen_s0(k, r)]
    gens += [gen_s(i, k, r) for i in range(1, k)]
    gens += [gen_p(i, k, r) for i in range(1, k + 1)]
    gens += [gen_q(i, k, r) for i in range(1, k)]
    return gens


def generated_closure(k, r, frontier_cap=10**6):
    gens = monoid_generators(k, r)
    seen = {ColoredDiagram.identity(r, k)}
    seen.update(gens)
    frontier = list(seen)
    products = 0
    while frontier:
        new = []
        for d in frontier:
            for g in gens:
                products += 1
                if products > frontier_cap:
                    raise CapExceeded("closure frontier exceeded %d" % frontier_cap)
                x = mcompose(d, g)
                if x not in seen:
                    seen.add(x)
                    new.append(x)
        frontier = new
    return seen


def green_classes(k, r, relation, cap=10**5):
    """Partition the monoid into L, R or J classes via principal ideals."""
    elems = sorted(enumerate_monoid(k, r, cap), key=repr)
    n = len(elems)
    if relation == "L":
        key = {m: frozenset(mcompose(a, m) for a in elems) for m in elems}
    elif relation == "R":
        key = {m: frozenset(mcompose(m, a) for a in elems) for m in elems}
    elif relation == "J":
        key = {}
        for m in elems:
            ideal = set()
            for a in elems:
                am = mcompose(a, m)
                for b in elems:
                    ideal.add(mcompose(am, b))
            key[m] = frozenset(ideal)
    else:
        raise ValueError("relation must be L, R or J")
    classes = {}
    for m in elems:
        classes.setdefault(key[m], []).append(m)
    return list(classes.values())
