"""Exact covers of the point set and (5,5)-grid enumeration."""

import pytest

from h4geproci import tables
from h4geproci.config import GRID1_L, GRID1_M, GRID2_L, GRID2_M
from h4geproci.coverings import (CoverCertificate, enumerate_coverings,
                                 enumerate_grids, verify_covering)

# Count confirmed by scripts/grid_oracle.py (disjoint-family bucketing, an
# independent search); frozen here as a regression constant.
GRID_COUNT = 72


@pytest.fixture(scope="module")
def coverings(cfg):
    return enumerate_coverings(cfg)


def test_exactly_84_coverings(coverings):
    assert len(coverings) == 84


def test_coverings_match_fixture_table(coverings):
    assert {c.lines for c in coverings} == set(tables.LINE_COVERS)
    assert [c.lines for c in coverings] == sorted(tables.LINE_COVERS)


def test_first_and_known_coverings_present(coverings):
    found = {c.lines for c in coverings}
    assert (1, 7, 17, 24, 25, 32, 37, 44, 51, 60, 65, 70) in found
    assert (6, 10, 15, 20, 25, 33, 41, 46, 53, 57, 61, 70) in found


def test_every_covering_verifies(cfg, coverings):
    for c in coverings:
        assert verify_covering(cfg, c.lines)


def test_enumeration_is_deterministic(cfg, coverings):
    assert [c.lines for c in enumerate_coverings(cfg)] == \
        [c.lines for c in coverings]


def test_verify_covering_rejects_bad_inputs(cfg, coverings):
    good = list(coverings[0].lines)
    assert not verify_covering(cfg, good[:11])
    assert not verify_covering(cfg, good[:11] + [good[0]])
    assert not verify_covering(cfg, good[:11] + [73])
    swapped = good[:11] + [next(i for i in cfg.lines if i not in good)]
    assert not verify_covering(cfg, swapped)


def test_cover_certificate_sorts_and_validates():
    cert = CoverCertificate((12, 1, 7, 24, 17, 25, 32, 37, 44, 51, 60, 65))
    assert cert.lines[0] == 1
    with pytest.raises(ValueError):
        CoverCertificate((1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11))


@pytest.fixture(scope="module")
def grids(cfg):
    return enumerate_grids(cfg)


def test_grid_count_regression(grids):
    assert len(grids) == GRID_COUNT


def test_both_printed_grids_are_found(grids):
    pairs = {(g.l_lines, g.m_lines) for g in grids}
    assert (tuple(GRID1_L), tuple(GRID1_M)) in pairs
    assert (tuple(GRID2_L), tuple(GRID2_M)) in pairs


def test_grids_have_unique_quadrics_and_25_points(grids):
    for g in grids:
        assert len(g.grid_points) == 25
        assert g.quadric.degree == 2


def test_grid_pairs_are_unordered_and_distinct(grids):
    keys = {frozenset((g.l_lines, g.m_lines)) for g in grids}
    assert len(keys) == len(grids)
    for g in grids:
        assert min(g.l_lines) < min(g.m_lines)


def test_grid_enumeration_rejects_other_sizes(cfg):
    with pytest.raises(ValueError):
        enumerate_grids(cfg, 4, 5)
