"""Row-insertion bijection for colored diagrams and its Green invariants."""

import pytest

from colorpart.diagrams import enumerate_diagrams
from colorpart.rs import (
    colored_array,
    content,
    green_invariants,
    rs_forward,
    rs_inverse,
    rs_pair,
)
from colorpart.verify import (
    BIJECTION_ARRAY,
    BIJECTION_DIAGRAM,
    RS_P,
    RS_Q,
    RS_S,
    RS_T,
)


def test_colored_array_of_worked_example():
    assert tuple(colored_array(BIJECTION_DIAGRAM)) == BIJECTION_ARRAY


def test_worked_example_tableaux():
    (P, S), (Q, T) = rs_forward(BIJECTION_DIAGRAM)
    assert P == RS_P
    assert Q == RS_Q
    assert S == RS_S
    assert T == RS_T


def test_worked_example_roundtrip():
    data = rs_forward(BIJECTION_DIAGRAM)
    assert rs_inverse(data, 5, 11, 11) == BIJECTION_DIAGRAM


def test_classical_insertion_shapes():
    # single-color sanity check: first row length = longest increasing
    # subsequence of the inserted values
    values = [3, 1, 4, 2, 5, 9, 6]
    cols = [((i,), (v,)) for i, v in enumerate(values, start=1)]
    P, Q = rs_pair(cols)
    assert sum(len(row) for row in P) == len(values)
    assert [len(r) for r in P] == [len(r) for r in Q]
    assert len(P[0]) == 4  # e.g. 1, 2, 5, 6


@pytest.mark.parametrize("r,k", [(1, 3), (2, 2), (3, 1)])
def test_full_roundtrip(r, k):
    for d in enumerate_diagrams(r, k, k):
        assert rs_inverse(rs_forward(d), r, k, k) == d


def test_roundtrip_rectangular():
    for d in enumerate_diagrams(2, 1, 2):
        assert rs_inverse(rs_forward(d), 2, 1, 2) == d


def test_images_are_distinct():
    seen = set()
    for d in enumerate_diagrams(2, 2, 2):
        (P, S), (Q, T) = rs_forward(d)
        key = (P, S, Q, T)
        assert key not in seen
        seen.add(key)


def test_content_merges_colors():
    (P, _), _ = rs_forward(BIJECTION_DIAGRAM)
    assert content(P) == frozenset(
        {(5,), (3,), (1,), (4,), (2,), (6, 8)}
    )


def test_green_invariants_shape():
    inv = green_invariants(BIJECTION_DIAGRAM)
    assert inv["J"] == 6  # six propagating parts
    assert inv["L"] == (content(RS_P), RS_S)
    assert inv["R"] == (content(RS_Q), RS_T)
