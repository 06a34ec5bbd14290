"""Color-preserving groupoid expansion of downward diagrams."""

import random

import pytest

from colorpart.diagrams import ColoredDiagram, compose, enumerate_diagrams
from colorpart.groupoid import (
    ColorPreservingDiagram,
    gcompose,
    gsum_compose,
    gsum_equal,
    hom_dimension_check,
    psi,
    psi_hom_check,
    random_downward,
)
from colorpart.scalars import CycNumber
from colorpart.verify import PSI_INPUT, psi_expected_terms


def test_source_and_target_read_off_colors():
    d = ColoredDiagram(3, 1, 2, [((1,), (1,), 2), ((), (2,), 1)])
    cpd = ColorPreservingDiagram(d)
    assert cpd.target == (2,)
    assert cpd.source == (2, 1)


def test_gcompose_interface_mismatch_is_zero():
    a = ColorPreservingDiagram(ColoredDiagram(2, 1, 1, [((1,), (1,), 1)]))
    b = ColorPreservingDiagram(ColoredDiagram(2, 1, 1, [((1,), (1,), 0)]))
    assert gcompose(a, b) is None
    assert gcompose(a, a) is not None


def test_expansion_term_count_and_coefficients():
    terms = psi(PSI_INPUT)
    assert len(terms) == 2 ** len(PSI_INPUT.blocks)
    # trivially colored diagrams always get coefficient 1
    for cpd, coeff in terms.items():
        if all(c == 0 for _, _, c in cpd.d.blocks):
            assert coeff == CycNumber.one(2)


def test_worked_eight_term_figure():
    # frozen worked example: coefficient zeta^(j2) on coloring (j1, j2, j3)
    assert gsum_equal(psi(PSI_INPUT), psi_expected_terms())


def test_expansion_is_multiplicative_on_random_pairs():
    rep = psi_hom_check(samples=120, k_max=3, r_max=3, seed=0)
    assert rep["ok"], rep


def test_expansion_multiplicative_single_case():
    rng = random.Random(5)
    d1 = random_downward(rng, 2, 1, 2)
    d2 = random_downward(rng, 2, 2, 3)
    prod, exps = compose(d1, d2)
    assert not any(exps)
    assert gsum_equal(psi(prod), gsum_compose(psi(d1), psi(d2)))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_hom_dimensions_match(r):
    for k in range(3):
        for l in range(k + 1):
            rep = hom_dimension_check(l, k, r)
            assert rep["ok"], rep


def test_hom_dimension_total_is_downward_count():
    rep = hom_dimension_check(1, 2, 2)
    n = sum(1 for d in enumerate_diagrams(2, 1, 2) if d.is_downward())
    assert rep["path"] == rep["groupoid"] == n
