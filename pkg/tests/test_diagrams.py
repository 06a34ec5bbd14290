"""Colored diagram arithmetic: composition, counting, factorization."""

import random

from hypothesis import given, settings, strategies as st

from colorpart.diagrams import (
    ColoredDiagram,
    compose,
    count_bell,
    egf_coefficients,
    enumerate_diagrams,
    factor_triangular,
    flip_invert,
    flip_keep,
    stirling2,
    tensor,
)
from colorpart.verify import (
    COMPOSE_D1,
    COMPOSE_D2,
    COMPOSE_EXPONENTS,
    COMPOSE_PRODUCT,
)


def random_diagram(rng, r, k, l):
    verts = [("t", i) for i in range(1, k + 1)] + [("b", j) for j in range(1, l + 1)]
    rng.shuffle(verts)
    n_blocks = rng.randint(1, len(verts)) if verts else 0
    blocks = [[] for _ in range(n_blocks)]
    for i, v in enumerate(verts):
        blocks[i % n_blocks].append(v) if n_blocks else None
    out = []
    for block in blocks:
        top = tuple(sorted(v for tag, v in block if tag == "t"))
        bot = tuple(sorted(v for tag, v in block if tag == "b"))
        out.append((top, bot, rng.randrange(r)))
    return ColoredDiagram(r, k, l, out)


def test_worked_composition_example():
    # frozen worked example, exponent monomial x2 * x3^2
    prod, exps = compose(COMPOSE_D1, COMPOSE_D2)
    assert prod == COMPOSE_PRODUCT
    assert exps == COMPOSE_EXPONENTS


def test_identity_is_neutral():
    rng = random.Random(1)
    for _ in range(40):
        r = rng.randint(1, 4)
        k, l = rng.randint(0, 4), rng.randint(0, 4)
        d = random_diagram(rng, r, k, l)
        left, e1 = compose(ColoredDiagram.identity(r, k), d)
        right, e2 = compose(d, ColoredDiagram.identity(r, l))
        assert left == right == d
        assert not any(e1) and not any(e2)


def test_composition_is_associative_with_scalars():
    rng = random.Random(2)
    for _ in range(150):
        r = rng.randint(1, 3)
        k, l, m, n = (rng.randint(0, 3) for _ in range(4))
        a = random_diagram(rng, r, k, l)
        b = random_diagram(rng, r, l, m)
        c = random_diagram(rng, r, m, n)
        ab, e_ab = compose(a, b)
        ab_c, e1 = compose(ab, c)
        bc, e_bc = compose(b, c)
        a_bc, e2 = compose(a, bc)
        assert ab_c == a_bc
        lhs = tuple(x + y for x, y in zip(e_ab, e1))
        rhs = tuple(x + y for x, y in zip(e_bc, e2))
        assert lhs == rhs


def test_rank_cannot_grow():
    rng = random.Random(3)
    for _ in range(80):
        r = rng.randint(1, 3)
        k, l, m = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
        a = random_diagram(rng, r, k, l)
        b = random_diagram(rng, r, l, m)
        prod, _ = compose(a, b)
        assert prod.rank() <= min(a.rank(), b.rank())


def test_flip_invert_is_an_anti_involution():
    rng = random.Random(4)
    for _ in range(60):
        r = rng.randint(1, 3)
        a = random_diagram(rng, r, rng.randint(0, 3), rng.randint(0, 3))
        b = random_diagram(rng, r, a.l, rng.randint(0, 3))
        assert flip_invert(flip_invert(a)) == a
        assert flip_keep(flip_keep(a)) == a
        ab, e = compose(a, b)
        ba, e2 = compose(flip_invert(b), flip_invert(a))
        assert ba == flip_invert(ab)
        # color inversion also inverts the colors of removed components
        assert e2 == tuple(e[(-c) % r] for c in range(r))


def test_tensor_sizes_and_colors():
    a = ColoredDiagram(3, 1, 1, [((1,), (1,), 2)])
    b = ColoredDiagram(3, 1, 0, [((1,), (), 1)])
    t = tensor(a, b)
    assert (t.k, t.l) == (2, 1)
    assert set(t.blocks) == {((1,), (1,), 2), ((2,), (), 1)}


def test_enumeration_matches_bell_numbers():
    for r in (1, 2, 3):
        for k in range(3):
            for l in range(3):
                n = sum(1 for _ in enumerate_diagrams(r, k, l))
                assert n == count_bell(k + l, r)


def test_bell_against_stirling_sum():
    # independent oracle: B_{k,r} = sum_j S(k,j) r^j
    for r in range(1, 5):
        for k in range(9):
            assert count_bell(k, r) == sum(
                stirling2(k, j) * r**j for j in range(k + 1)
            )
    assert count_bell(2, 2) == 6
    assert count_bell(4, 2) == 94
    assert count_bell(4, 3) == 309
    assert count_bell(6, 2) == 2430


def test_egf_matches_recurrence():
    for r in range(1, 5):
        assert egf_coefficients(r, 10) == [count_bell(k, r) for k in range(11)]


def test_triangular_factorization_roundtrip():
    for r, k in [(2, 2), (3, 1)]:
        for d in enumerate_diagrams(r, k, k):
            d1, d0, d2 = factor_triangular(d)
            m = d.rank()
            assert d1.is_normally_ordered_up() and d1.l == m
            assert d2.is_normally_ordered_down() and d2.k == m
            assert d0.k == d0.l == d0.rank() == m
            p, e1 = compose(d1, d0)
            back, e2 = compose(p, d2)
            assert back == d and not any(e1) and not any(e2)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 3), st.integers(0, 3), st.integers(0, 3), st.integers())
def test_json_roundtrip(r, k, l, seed):
    d = random_diagram(random.Random(seed), r, k, l)
    assert ColoredDiagram.from_json(d.to_json()) == d
