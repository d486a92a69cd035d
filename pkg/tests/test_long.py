"""Heavier cross-checks, enabled with THICKLAT_LONG_TESTS=1."""
import os

import pytest

from thicklat.linalg import GF
from thicklat.quiver_rep import default_orientation, indecomposable_dims, tree_module
from thicklat.root_system import (
    DynkinType,
    NcLattice,
    build_root_system,
    catalan_number,
    coxeter_element,
)
from thicklat.thick_enum import enumerate_thick, verify_bijection

long_tests = pytest.mark.skipif(
    os.environ.get("THICKLAT_LONG_TESTS") != "1",
    reason="set THICKLAT_LONG_TESTS=1 to run",
)


@long_tests
def test_e7_enumeration_count():
    dynkin = DynkinType.parse("E7")
    rs = build_root_system(dynkin)
    c = coxeter_element(rs, default_orientation(dynkin))
    lattice = NcLattice(rs, c)
    assert len(lattice) == catalan_number(dynkin) == 4160


@long_tests
@pytest.mark.parametrize("name,count", [("D5", 182), ("E6", 833)])
def test_large_thick_counts(name, count):
    quiver = default_orientation(DynkinType.parse(name))
    assert len(enumerate_thick(quiver, GF(2))) == count


@long_tests
def test_e6_bijection():
    report = verify_bijection(default_orientation(DynkinType.parse("E6")), GF(2))
    assert report.ok
    assert report.thick_count == report.nc_count == 833


@long_tests
@pytest.mark.parametrize("name", ["E7", "E8"])
def test_exceptional_tree_modules(name):
    quiver = default_orientation(DynkinType.parse(name))
    roots = indecomposable_dims(quiver)
    assert len(roots) == {"E7": 63, "E8": 120}[name]
    for d in roots:
        module = tree_module(quiver, d)
        assert module.dim == d
        for mat in module.maps:
            assert all(x in (0, 1) for row in mat for x in row)
