# tests/conftest.py
# shared fixtures; puts the project root on sys.path the same way main.py does

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from analyzers.closure import canonical_orientation
from analyzers.scheme_enumerator import all_rooted_schemes, enumerate_schemes
from models.blossoming_map import StemKind, blossoming_canonical_form, build_blossoming_map
from models.rooted_map import build_map
from models.scheme import UnlabeledScheme
from parsers.map_parser import parse_scheme

BUD, LEAF = StemKind.BUD, StemKind.LEAF

# rooted genus-2 schemes on four vertices: two of interior degree 4, a root
# bud and one leaf
GENUS2_RECORDS = (
    "darts 16 / sigma (1 2 7 5)(9 10 15 13)(3 12 16 6)(4 8 14 11) / "
    "alpha (2 6)(4 7)(5 16)(10 14)(12 15)(8 13)(3 11) / stems (1,b)(9,l) / rootbud 1 / "
    "heads 2 3 4 5 8 10 12",
    "darts 16 / sigma (1 2 15 7)(9 10 4 12)(16 8 13 6)(14 3 11 5) / "
    "alpha (2 14)(15 6)(7 16)(10 3)(4 11)(12 8)(13 5) / stems (1,b)(9,l) / rootbud 1 / "
    "heads 2 3 4 5 6 7 8",
    "darts 16 / sigma (1 2 13 4)(6 7 15 10)(16 5 11 9)(12 3 14 8) / "
    "alpha (2 12)(13 3)(4 16)(7 14)(15 9)(10 5)(11 8) / stems (1,b)(6,l) / rootbud 1 / "
    "heads 2 3 4 5 7 8 9",
)


@pytest.fixture
def edge_map():
    """one edge between two vertices"""
    return build_map(2, [(1,), (2,)], [(1, 2)], 1)


@pytest.fixture
def loop_map():
    """one loop on a single vertex"""
    return build_map(2, [(1, 2)], [(1, 2)], 1)


@pytest.fixture
def torus_map():
    """one vertex, two loops, one face"""
    return build_map(4, [(1, 2, 3, 4)], [(1, 3), (2, 4)], 1)


@pytest.fixture
def star_bbll():
    """single vertex with stems bud, bud, leaf, leaf"""
    return build_blossoming_map(4, [(1, 2, 3, 4)], [], {1: BUD, 2: BUD, 3: LEAF, 4: LEAF}, 1)


@pytest.fixture
def star_blbl():
    return build_blossoming_map(4, [(1, 2, 3, 4)], [], {1: BUD, 2: LEAF, 3: BUD, 4: LEAF}, 1)


@pytest.fixture
def star_bllb():
    """not well rooted: the label dips below zero"""
    return build_blossoming_map(4, [(1, 2, 3, 4)], [], {1: BUD, 2: LEAF, 3: LEAF, 4: BUD}, 1)


@pytest.fixture(scope="session")
def genus1_classes():
    return enumerate_schemes(1)


@pytest.fixture(scope="session")
def genus1_schemes():
    return all_rooted_schemes(1)


@pytest.fixture
def rng():
    return random.Random(config.seed)


@pytest.fixture(scope="session")
def genus2_schemes():
    """the GENUS2_RECORDS schemes, relabelled in canonical order"""
    schemes = []
    for record in GENUS2_RECORDS:
        u = blossoming_canonical_form(parse_scheme(record).map)
        schemes.append(UnlabeledScheme(u, canonical_orientation(u)))
    return schemes


@pytest.fixture(scope="session")
def genus2_records():
    return GENUS2_RECORDS
