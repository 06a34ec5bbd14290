"""Colored partition diagrams.

A colored (k,l)-partition diagram over Z/r is a set partition of the
k top vertices 1..k and l bottom vertices 1'..l' whose blocks each carry a
color exponent in 0..r-1.  Composition concatenates diagrams; every removed
middle-only component of color i contributes one factor x_i, reported as a
scalar monomial exponent vector.
"""

import json
from functools import lru_cache
from math import comb


class MalformedDiagram(ValueError):
    pass


class ArityMismatch(ValueError):
    pass


def _block_key(block):
    top, bot, _ = block
    # min vertex, tops ranked before bottoms at equal index
    cands = [(v, 0) for v in top] + [(v, 1) for v in bot]
    return min(cands)


class ColoredDiagram:
    """Immutable canonical colored (k,l)-partition diagram."""

    __slots__ = ("r", "k", "l", "blocks", "_hash")

    def __init__(self, r, k, l, blocks):
        if r < 1:
            raise MalformedDiagram("color modulus must be positive")
        seen_top, seen_bot = set(), set()
        canon = []
        for top, bot, c in blocks:
            top = tuple(sorted(top))
            bot = tuple(sorted(bot))
            if not top and not bot:
                raise MalformedDiagram("empty block")
            for v in top:
                if v in seen_top or not (1 <= v <= k):
                    raise MalformedDiagram("bad top vertex %d" % v)
                seen_top.add(v)
            for v in bot:
                if v in seen_bot or not (1 <= v <= l):
                    raise MalformedDiagram("bad bottom vertex %d" % v)
                seen_bot.add(v)
            canon.append((top, bot, c % r))
        if len(seen_top) != k or len(seen_bot) != l:
            raise MalformedDiagram("blocks do not cover all vertices")
        canon.sort(key=_block_key)
        self.r = r
        self.k = k
        self.l = l
        self.blocks = tuple(canon)
        self._hash = None

    # -- constructors -------------------------------------------------
    @staticmethod
    def identity(r, k):
        return ColoredDiagram(r, k, k, [((i,), (i,), 0) for i in range(1, k + 1)])

    # -- protocol -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, ColoredDiagram):
            return NotImplemented
        return (self.r, self.k, self.l, self.blocks) == (
            other.r,
            other.k,
            other.l,
            other.blocks,
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, self.k, self.l, self.blocks))
        return self._hash

    def __repr__(self):
        parts = []
        for top, bot, c in self.blocks:
            s = ",".join(str(v) for v in top)
            s += "|" + ",".join(str(v) for v in bot)
            parts.append("{%s:%d}" % (s, c))
        return "D(r=%d,%d->%d; %s)" % (self.r, self.k, self.l, " ".join(parts))

    # -- queries ----------------------------------------------------------
    def rank(self):
        return sum(1 for top, bot, _ in self.blocks if top and bot)

    def propagating_blocks(self):
        return [b for b in self.blocks if b[0] and b[1]]

    def is_downward(self):
        """Exactly min(k,l)=k propagating parts: k <= l, every top propagates
        in its own part."""
        return self.k <= self.l and self.rank() == self.k

    def is_upward(self):
        return self.l <= self.k and self.rank() == self.l

    def is_normally_ordered_down(self):
        """Downward, propagating parts {j} + B_j^l trivially colored and
        ordered by min of the bottom constituents."""
        if not self.is_downward():
            return False
        props = sorted(self.propagating_blocks(), key=lambda b: b[0][0])
        for j, (top, bot, c) in enumerate(props, start=1):
            if top != (j,) or c != 0:
                return False
        mins = [b[1][0] for b in props]
        return mins == sorted(mins)

    def is_normally_ordered_up(self):
        if not self.is_upward():
            return False
        props = sorted(self.propagating_blocks(), key=lambda b: b[1][0])
        for j, (top, bot, c) in enumerate(props, start=1):
            if bot != (j,) or c != 0:
                return False
        mins = [b[0][0] for b in props]
        return mins == sorted(mins)

    # -- serialization -----------------------------------------------------
    def to_json(self):
        return {
            "r": self.r,
            "k": self.k,
            "l": self.l,
            "blocks": [
                {"top": list(t), "bot": list(b), "c": c} for t, b, c in self.blocks
            ],
        }

    @staticmethod
    def from_json(data):
        if isinstance(data, str):
            data = json.loads(data)
        return ColoredDiagram(
            data["r"],
            data["k"],
            data["l"],
            [(b["top"], b["bot"], b["c"]) for b in data["blocks"]],
        )


def compose(d1, d2):
    """Concatenate d1 (k,l) over d2 (l,m).

    Returns (diagram, exponents) where exponents[i] counts the removed
    middle-only components of color i.
    """
    if d1.r != d2.r:
        raise ArityMismatch("color modulus mismatch")
    if d1.l != d2.k:
        raise ArityMismatch("inner arity mismatch: %d vs %d" % (d1.l, d2.k))
    r, k, m = d1.r, d1.k, d2.l
    # vertices: ("t", i) tops of d1, ("m", j) shared middle, ("b", j) bottoms of d2
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for i in range(1, k + 1):
        parent[("t", i)] = ("t", i)
    for j in range(1, d1.l + 1):
        parent[("m", j)] = ("m", j)
    for j in range(1, m + 1):
        parent[("b", j)] = ("b", j)

    colors = []  # (representative vertex list, color) contributions
    for top, bot, c in d1.blocks:
        verts = [("t", v) for v in top] + [("m", v) for v in bot]
        for v in verts[1:]:
            union(verts[0], v)
        colors.append((verts[0], c))
    for top, bot, c in d2.blocks:
        verts = [("m", v) for v in top] + [("b", v) for v in bot]
        for v in verts[1:]:
            union(verts[0], v)
        colors.append((verts[0], c))

    comp_color = {}
    for v, c in colors:
        root = find(v)
        comp_color[root] = (comp_color.get(root, 0) + c) % r

    comp_members = {}
    for v in parent:
        comp_members.setdefault(find(v), []).append(v)

    blocks = []
    exponents = [0] * r
    for root, members in comp_members.items():
        top = sorted(v for tag, v in members if tag == "t")
        bot = sorted(v for tag, v in members if tag == "b")
        c = comp_color[root]
        if not top and not bot:
            exponents[c] += 1
        else:
            blocks.append((top, bot, c))
    return ColoredDiagram(r, k, m, blocks), tuple(exponents)


def tensor(d1, d2):
    """Horizontal juxtaposition: d2 drawn to the right, indices shifted."""
    if d1.r != d2.r:
        raise ArityMismatch("color modulus mismatch")
    blocks = list(d1.blocks)
    for top, bot, c in d2.blocks:
        blocks.append(
            (tuple(v + d1.k for v in top), tuple(v + d1.l for v in bot), c)
        )
    return ColoredDiagram(d1.r, d1.k + d2.k, d1.l + d2.l, blocks)


def flip_invert(d):
    """Anti-involution: horizontal flip and color inversion."""
    return ColoredDiagram(
        d.r, d.l, d.k, [(bot, top, (-c) % d.r) for top, bot, c in d.blocks]
    )


def flip_keep(d):
    """Anti-involution: horizontal flip, colors kept."""
    return ColoredDiagram(d.r, d.l, d.k, [(bot, top, c) for top, bot, c in d.blocks])


def factor_triangular(d):
    """Factor d = d1 * d0 * d2 (zero scalar exponents on recomposition).

    d1 is normally ordered upward (k,m), d0 is a colored permutation diagram
    of size m = rank(d) carrying the propagating colors, d2 is normally
    ordered downward (m,l).
    """
    props = d.propagating_blocks()
    m = len(props)
    by_top = sorted(range(m), key=lambda a: props[a][0][0])
    by_bot = sorted(range(m), key=lambda a: props[a][1][0])
    pos_in_bot = {a: j + 1 for j, a in enumerate(by_bot)}

    d1_blocks = []
    d0_blocks = []
    d2_blocks = []
    for j, a in enumerate(by_top, start=1):
        top, bot, c = props[a]
        d1_blocks.append((top, (j,), 0))
        d0_blocks.append(((j,), (pos_in_bot[a],), c))
    for j, a in enumerate(by_bot, start=1):
        _, bot, _ = props[a]
        d2_blocks.append(((j,), bot, 0))
    for top, bot, c in d.blocks:
        if top and not bot:
            d1_blocks.append((top, (), c))
        elif bot and not top:
            d2_blocks.append(((), bot, c))

    d1 = ColoredDiagram(d.r, d.k, m, d1_blocks)
    d0 = ColoredDiagram(d.r, m, m, d0_blocks)
    d2 = ColoredDiagram(d.r, m, d.l, d2_blocks)
    return d1, d0, d2


# -- enumeration and counting ------------------------------------------------


def set_partitions(items):
    """All set partitions of a list, as lists of tuples."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + (first,)] + part[i + 1 :]
        yield part + [(first,)]


def enumerate_diagrams(r, k, l):
    """All colored (k,l)-partition diagrams."""
    verts = [("t", i) for i in range(1, k + 1)] + [("b", j) for j in range(1, l + 1)]
    for part in set_partitions(verts):
        n = len(part)
        for colors in _color_tuples(r, n):
            blocks = []
            for block, c in zip(part, colors):
                top = [v for tag, v in block if tag == "t"]
                bot = [v for tag, v in block if tag == "b"]
                blocks.append((top, bot, c))
            yield ColoredDiagram(r, k, l, blocks)


def _color_tuples(r, n):
    if n == 0:
        yield ()
        return
    for rest in _color_tuples(r, n - 1):
        for c in range(r):
            yield rest + (c,)


@lru_cache(maxsize=None)
def count_bell(k, r):
    """Number of colored set partitions of k points (colored Bell number)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    return r * sum(comb(k - 1, l - 1) * count_bell(k - l, r) for l in range(1, k + 1))


def egf_coefficients(r, N):
    """k! * [t^k] exp(r(e^t - 1)) for k = 0..N, as exact integers."""
    from fractions import Fraction

    # B(t) = r(e^t - 1); A = exp(B) satisfies A' = B' A.
    b = [Fraction(0)] * (N + 1)
    fact = 1
    for k in range(1, N + 1):
        fact *= k
        b[k] = Fraction(r, fact)
    a = [Fraction(0)] * (N + 1)
    a[0] = Fraction(1)
    # a'_n: (n+1) a_{n+1} = sum_{j=0..n} (j+1) b_{j+1} a_{n-j}
    for n in range(N):
        s = sum((j + 1) * b[j + 1] * a[n - j] for j in range(n + 1))
        a[n + 1] = s / (n + 1)
    out = []
    fact = 1
    for k in range(N + 1):
        if k:
            fact *= k
        v = a[k] * fact
        assert v.denominator == 1
        out.append(v.numerator)
    return out


def stirling2(n, j):
    from functools import lru_cache as _lc

    @_lc(maxsize=None)
    def s(n, j):
        if n == 0:
            return 1 if j == 0 else 0
        if j == 0:
            return 0
        return j * s(n - 1, j) + s(n - 1, j - 1)

    return s(n, j)
