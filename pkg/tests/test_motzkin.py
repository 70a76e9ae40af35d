# tests/test_motzkin.py

import pytest

from analyzers.motzkin import (
    branch_leaf_colors,
    decode_branch,
    encode_branch,
    first_passage,
    series_B,
    series_D_bullet,
    series_D_circ,
    series_W,
    typed_series_W,
    typed_walks,
    walk_weight,
    walks,
)
from models.errors import DomainError, HeightMismatch, ResourceLimit
from models.motzkin_walk import MotzkinWalk, Step

U, H, D = Step.UP, Step.FLAT, Step.DOWN


def test_walk_statistics():
    w = MotzkinWalk(0, (U, H, D, D))
    assert w.heights == [0, 1, 1, 0]
    assert w.end_height == -1
    assert w.is_primitive()
    assert (w.n_flat, w.n_even, w.n_odd) == (1, 2, 1)
    assert not MotzkinWalk(0, (D, U, D)).is_primitive()


def test_walk_types_must_match_steps():
    with pytest.raises(ValueError):
        MotzkinWalk(0, (U, H), (None,))


def test_walk_counts():
    assert sum(1 for _ in walks(0, 3)) == 27
    # typed walks weigh each horizontal step four times
    assert sum(1 for _ in typed_walks(0, 2)) == sum(4 ** w.n_flat for w in walks(0, 2))


def test_long_walks_are_refused():
    with pytest.raises(ResourceLimit):
        list(walks(0, 13))


def test_univariate_primitive_and_bridge_series():
    assert series_D_bullet(3, univariate=True).univariate_coefficients() == [0, 1, 4, 17]
    assert series_B(2, univariate=True).univariate_coefficients() == [1, 4, 18]


def test_bivariate_low_order_terms():
    db = series_D_bullet(2)
    assert db.coefficient(1, 0) == 1
    assert db.coefficient(2, 0) == 2 and db.coefficient(1, 1) == 2
    assert db.coefficient(0, 1) == 0
    b = series_B(2)
    assert [b.coefficient(0, 0), b.coefficient(1, 0), b.coefficient(0, 1)] == [1, 2, 2]
    assert [b.coefficient(2, 0), b.coefficient(1, 1), b.coefficient(0, 2)] == [4, 10, 4]


def test_primitive_series_swap_into_each_other():
    assert series_D_circ(6) == series_D_bullet(6).swap()


def test_first_passage_depends_on_parity_only():
    assert first_passage(2, 5) == series_D_bullet(5)
    assert first_passage(3, 5) == series_D_circ(5)


def test_typed_enumeration_matches_transfer_matrix():
    for start, end in ((0, -1), (0, 0), (1, 3)):
        assert typed_series_W(start, end, 4) == series_W(start, end, 4)


def test_walk_weight_of_a_bridge():
    w = MotzkinWalk(0, (U, D))
    weight = walk_weight(w, 3)
    assert weight.coefficient(1, 1) == 1 and len(weight.coefficients) == 1


def test_branch_encoding_is_a_bijection(rng):
    pool = list(typed_walks(0, 4))
    for w in rng.sample(pool, 50):
        branch = decode_branch(w, w.start_height, w.end_height)
        assert encode_branch(branch) == w
        assert branch.end_label == w.end_height
        black, white = branch_leaf_colors(branch)
        assert black + white == len(w)


def test_decode_checks_heights_and_types():
    w = next(typed_walks(0, 2))
    with pytest.raises(HeightMismatch):
        decode_branch(w, 1, w.end_height + 1)
    with pytest.raises(DomainError):
        decode_branch(MotzkinWalk(0, (U, D)), 0, 0)
