# tests/test_rationality.py

from itertools import permutations

import pytest

from analyzers.core_scheme import consistent_naming, labeled_schemes, verify_mirror_statistics
from analyzers.rationality import (
    DECORATED_MAX_ORDER,
    R_binary,
    R_labeled_scheme,
    R_scheme_rational,
    R_uni_closed,
    binary_bijections,
    direct_r_binary,
    direct_r_uni,
    direct_scheme_series,
    edge_delta,
    expand_in_t,
    verify_criterion,
    verify_decomposition,
    verify_diagonal,
    verify_mirror,
    verify_s_mirror,
    verify_uni_mirror,
)
from analyzers.series_engine import rational_t_and_B
from models.errors import DomainError, InconsistentNaming, ResourceLimit
from models.rational_function import D_BLACK, D_WHITE, RationalFunction

ORDER = 4


@pytest.fixture(scope="module")
def scheme(genus1_schemes):
    return genus1_schemes[0]


def test_edge_delta_counts_levels_by_direction():
    # up from 0 to 2 crosses an even then an odd level
    assert edge_delta(0, 2, 2, 3) == 6
    # down from 0 to -1 crosses level -1, read with the colors exchanged
    assert edge_delta(0, -1, 2, 3) == 2
    assert edge_delta(1, 1, 2, 3) == 1


def test_three_modes_agree(genus1_schemes):
    report = verify_decomposition(genus1_schemes[:3], ORDER, 1)
    assert report.passed, report.failures
    assert report.details["modes"] == ["closed", "direct", "decorated"]
    assert report.checked == sum(3 ** (s.n_vertices - 1) for s in genus1_schemes[:3])


def test_unknown_mode(scheme):
    l = next(iter(labeled_schemes(scheme, 0)))
    with pytest.raises(DomainError):
        R_labeled_scheme(l, "guess", ORDER)


def test_decorated_mode_is_capped(scheme):
    l = next(iter(labeled_schemes(scheme, 0)))
    with pytest.raises(ResourceLimit):
        R_labeled_scheme(l, "decorated", DECORATED_MAX_ORDER + 1)


def test_labeled_series_start_with_the_stems(scheme):
    l = next(iter(labeled_schemes(scheme, 0)))
    r = R_labeled_scheme(l, "closed", 8)
    assert r.valuation() >= len(scheme.rootable_stems)


def test_closed_form_matches_the_sum_over_binary_bijections(scheme):
    naming = consistent_naming(scheme)
    for bb in binary_bijections(scheme.n_vertices):
        assert expand_in_t(R_binary(scheme, naming, bb), ORDER) == direct_r_binary(scheme, naming, bb, ORDER)


def test_scheme_series_agrees_with_labeled_sum(scheme):
    assert expand_in_t(R_scheme_rational(scheme), ORDER) == direct_scheme_series(scheme, ORDER)


def test_univariate_closed_form(scheme):
    naming = consistent_naming(scheme)
    for pi in permutations(range(scheme.n_vertices)):
        expected = direct_r_uni(scheme, naming, pi, ORDER)
        assert expand_in_t(R_uni_closed(scheme, naming, pi), ORDER) == expected


def test_inconsistent_naming_is_refused(genus1_schemes):
    s = next((s for s in genus1_schemes if any(u != v for u, v in s.offset_arcs)), None)
    if s is None:
        pytest.skip("no genus-1 scheme with an offset edge between distinct vertices")
    u, v = next((u, v) for u, v in s.offset_arcs if u != v)
    naming = list(consistent_naming(s))
    naming[u], naming[v] = naming[v], naming[u]
    with pytest.raises(InconsistentNaming):
        R_uni_closed(s, tuple(naming), tuple(range(s.n_vertices)))


def test_mirror_symmetries(genus1_schemes):
    for s in genus1_schemes[:4]:
        assert verify_uni_mirror(s).passed
        assert verify_s_mirror(s).passed
        assert verify_mirror(s).passed
        assert verify_diagonal(s).passed


def test_genus_two_decomposition(genus2_schemes):
    report = verify_decomposition(genus2_schemes, ORDER, 1)
    assert report.passed, report.failures
    assert report.details["modes"] == ["closed", "direct", "decorated"]
    assert report.checked == 3 * 3 ** 3


@pytest.mark.slow
def test_genus_two_decomposition_to_order_eight(genus2_schemes):
    report = verify_decomposition(genus2_schemes, 8, 2)
    assert report.passed, report.failures
    assert report.checked == 3 * 5 ** 3


def test_mirror_symmetries_in_genus_two(genus2_schemes):
    s = genus2_schemes[0]
    for check in (verify_mirror_statistics, verify_uni_mirror, verify_s_mirror, verify_mirror, verify_diagonal):
        assert check(s).passed, check.__name__


@pytest.mark.slow
def test_mirror_symmetries_on_three_genus_two_schemes(genus2_schemes):
    for s in genus2_schemes:
        for check in (verify_mirror_statistics, verify_uni_mirror, verify_s_mirror, verify_mirror, verify_diagonal):
            report = check(s)
            assert report.passed, (check.__name__, report.failures)


@pytest.mark.slow
def test_mirror_symmetries_on_every_genus_one_scheme(genus1_schemes):
    for s in genus1_schemes:
        for check in (verify_uni_mirror, verify_s_mirror, verify_mirror, verify_diagonal):
            assert check(s).passed, check.__name__


def test_criterion_in_t():
    tb_plus_tw = RationalFunction.bivariate(D_BLACK + D_WHITE)
    report = verify_criterion(tb_plus_tw, "t")
    assert report.passed
    assert report.details == {"symmetric": True, "par_symmetric": True}


def test_criterion_in_d():
    _, _, b = rational_t_and_B()
    report = verify_criterion(b, "D")
    # B is algebraic but not rational in t: the reflection sends it to -B
    assert report.passed
    assert report.details["rational_in_t"] is False
    assert b.par_bar() == -b


def test_criterion_preconditions():
    report = verify_criterion(RationalFunction.bivariate(D_BLACK), "t")
    assert not report.passed
    with pytest.raises(DomainError):
        verify_criterion(RationalFunction.bivariate(D_BLACK * D_WHITE), "x")
