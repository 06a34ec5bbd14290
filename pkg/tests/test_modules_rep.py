"""Cell modules, Gram matrices, semisimplicity and the Cartan matrix."""

import random
from fractions import Fraction

import pytest

from colorpart.characters import g_elements, gmul, multipartitions, weight
from colorpart.diagrams import compose, count_bell, enumerate_diagrams
from colorpart.modules_rep import (
    act,
    algebra_mul,
    build_matrix_rep,
    cartan_entry,
    cartan_matrix,
    cartan_tensor_check,
    cell_dimension,
    det_bareiss,
    enumerate_cross_section,
    factor_cross_section,
    gram_det,
    gram_matrix,
    group_diagram,
    primitive_idempotent,
    recompose_cross_section,
    semisimplicity_certificate,
    specht_dim,
    specht_matrix,
)
from colorpart.scalars import CycNumber, MPoly
from colorpart.verify import GRAM_K1_R2


def test_specht_dimensions():
    assert specht_dim((3,)) == 1
    assert specht_dim((2, 1)) == 2
    assert specht_dim((1, 1, 1)) == 1
    assert specht_dim((3, 2)) == 5
    assert specht_dim((2, 2, 1)) == 5


def test_specht_matrices_multiply():
    from itertools import permutations

    for lam in [(2, 1), (3, 1), (2, 2)]:
        n = sum(lam)
        perms = list(permutations(range(1, n + 1)))
        rng = random.Random(0)
        for _ in range(15):
            a, b = rng.choice(perms), rng.choice(perms)
            ab = tuple(a[b[i] - 1] for i in range(n))
            Ma, Mb = specht_matrix(lam, a), specht_matrix(lam, b)
            prod = [
                [
                    sum(Ma[i][t] * Mb[t][j] for t in range(len(Ma)))
                    for j in range(len(Ma))
                ]
                for i in range(len(Ma))
            ]
            assert [list(row) for row in specht_matrix(lam, ab)] == prod


def test_wreath_rep_is_multiplicative_and_traces_match():
    from colorpart.characters import wreath_char

    for r, n, lam_bar in [(2, 2, ((1,), (1,))), (3, 1, ((), (1,), ()))]:
        rep = build_matrix_rep(r, lam_bar)
        elems = g_elements(r, n)
        rng = random.Random(1)
        for _ in range(10):
            a, b = rng.choice(elems), rng.choice(elems)
            Mab = rep.matrix(gmul(r, a, b))
            Ma, Mb = rep.matrix(a), rep.matrix(b)
            prod = [
                [
                    sum(
                        (Ma[i][t] * Mb[t][j] for t in range(rep.dim)),
                        CycNumber.zero(r),
                    )
                    for j in range(rep.dim)
                ]
                for i in range(rep.dim)
            ]
            assert [list(row) for row in Mab] == prod
            assert rep.trace(a) == wreath_char(r, n, lam_bar, a)


def test_primitive_idempotent_is_idempotent():
    r, lam_bar = 2, ((1,), ())
    eps = primitive_idempotent(r, lam_bar)
    assert algebra_mul(r, eps, eps) == eps


def test_cross_section_counts():
    assert len(enumerate_cross_section(2, 1, 0)) == 2
    assert len(enumerate_cross_section(2, 1, 1)) == 1
    assert len(enumerate_cross_section(2, 2, 0)) == 6
    assert len(enumerate_cross_section(2, 2, 1)) == 5
    assert len(enumerate_cross_section(2, 2, 2)) == 1
    assert len(enumerate_cross_section(3, 2, 0)) == 12
    assert len(enumerate_cross_section(3, 2, 1)) == 7


def test_cross_section_factorization_roundtrip():
    for r, k in [(2, 1), (2, 2), (3, 1)]:
        for i in range(k + 1):
            for d2 in enumerate_cross_section(r, k, i):
                for g in g_elements(r, i):
                    d = recompose_cross_section(d2, g, i)
                    e2, h = factor_cross_section(d, i)
                    assert (e2, h) == (d2, g)


def test_group_diagram_is_a_homomorphism():
    r, k, i = 2, 2, 2
    elems = g_elements(r, i)
    for g in elems:
        for h in elems:
            dg, dh = group_diagram(r, k, i, g), group_diagram(r, k, i, h)
            prod, exps = compose(dg, dh)
            assert not any(exps)
            assert prod == group_diagram(r, k, i, gmul(r, g, h))


def test_action_factors_through_cross_section():
    # acting by a diagram either kills a basis label or produces d2, g, exps
    r, k, i = 2, 2, 1
    cs = enumerate_cross_section(r, k, i)
    diagrams = list(enumerate_diagrams(r, k, k))
    rng = random.Random(2)
    for _ in range(60):
        d = rng.choice(diagrams)
        d1 = rng.choice(cs)
        res = act(d, d1, i)
        if res is None:
            prod, _ = compose(d, d1)
            assert prod.rank() < i
        else:
            d2, g, exps = res
            assert d2 in cs
            back = recompose_cross_section(d2, g, i)
            prod, e = compose(d, d1)
            assert prod == back and exps == e


def test_gram_data_k1_r2():
    for lam_bar, expected in GRAM_K1_R2.items():
        M = gram_matrix(2, 1, lam_bar)
        assert tuple(tuple(row) for row in M) == expected
    y0, y1 = MPoly.variable(2, 0), MPoly.variable(2, 1)
    assert gram_det(2, 1, ((), ())) == y0 * y0 - y1 * y1


def test_gram_matrices_are_symmetric():
    for r, k in [(2, 1), (2, 2)]:
        for i in range(k + 1):
            for lam_bar in multipartitions(r, i):
                M = gram_matrix(r, k, lam_bar)
                n = len(M)
                for a in range(n):
                    for b in range(n):
                        assert M[a][b] == M[b][a]


def test_bareiss_determinant_against_cofactors():
    y0, y1 = MPoly.variable(2, 0), MPoly.variable(2, 1)
    M = [
        [y0, y1, MPoly.one(2)],
        [y1, y0, MPoly.zero(2)],
        [MPoly.one(2), MPoly.zero(2), y0],
    ]
    expected = y0 * (y0 * y0 - y1 * y1) - y0  # expand along the last row
    assert det_bareiss(M, 2) == expected


def test_dimension_identity():
    for r in (1, 2, 3):
        for k in (0, 1, 2):
            total = sum(
                cell_dimension(r, k, lam_bar) ** 2
                for i in range(k + 1)
                for lam_bar in multipartitions(r, i)
            )
            assert total == count_bell(2 * k, r)


def test_semisimplicity_points():
    ss = semisimplicity_certificate(2, 1, (2, 1))
    assert ss["semisimple"] and ss["dimension_identity"]
    dets = {lam: val for lam, (_, val) in ss["dets"].items()}
    assert dets[((), ())] == Fraction(3)
    ns = semisimplicity_certificate(2, 1, (1, 1))
    assert not ns["semisimple"]


def test_semisimplicity_rejects_bad_points():
    with pytest.raises(ValueError):
        semisimplicity_certificate(2, 1, (1,))
    with pytest.raises(ValueError):
        semisimplicity_certificate(2, 1, (0, 0))


def test_cartan_r1_values():
    # one-color case: diagonal 1, unitriangular with respect to weight
    labels, B = cartan_matrix(1, 2)
    for lam in labels:
        assert B[(lam, lam)] == 1
        for mu in labels:
            if weight(mu) > weight(lam):
                assert B[(lam, mu)] == 0


def test_cartan_tensor_factorization():
    assert cartan_tensor_check(2, 2)


def test_cartan_specific_entries():
    assert cartan_entry(2, ((1,), ()), ((), ())) == 1
    assert cartan_entry(2, ((1,), ()), ((1,), ())) == 1
    assert cartan_entry(2, ((), ()), ((1,), ())) == 0  # weight increases
