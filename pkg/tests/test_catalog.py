import numpy as np
import pytest

from mink1.algebra import is_subalgebra, kernel_of_l, linear_part
from mink1.catalog import (
    CATALOG_IDS,
    NONPROPER_IDS,
    PROPER_IDS,
    CatalogError,
    build,
    expected_orbit,
    list_catalog,
)
from mink1.minkowski import (
    BOOST,
    E1,
    E2,
    E3,
    ELLIPTIC,
    NULL_PLUS,
    NULL_ROTATION,
    ROTATION,
    ZERO,
    generator_class,
)
from mink1.orbits import orbit_dimension, stabilizer_algebra
from mink1.sampling import rng_from_seed
from mink1.verify import _generic_points, _stratum_points, entry_variants


def test_counts():
    rows = list_catalog()
    assert len(rows) == 16
    assert sum(r["proper"] for r in rows) == 4
    assert len(PROPER_IDS) == 4 and len(NONPROPER_IDS) == 12


def test_orbit_space_descriptors():
    assert build("P-c").orbit_space == "real-line"
    assert build("P-b").orbit_space == "half-line-closed"
    assert build("N-iii").orbit_space == "three-points-non-Hausdorff"
    # proper entries never carry a non-Hausdorff descriptor
    for id_ in PROPER_IDS:
        assert build(id_).orbit_space in ("real-line", "half-line-closed")


def test_documented_bases():
    pb = build("P-b").basis.basis
    assert np.allclose(pb[0].X, ROTATION) and np.allclose(pb[1].v, E1)
    pc = build("P-c").basis.basis
    assert np.allclose(pc[0].X, ROTATION)
    assert np.allclose(pc[1].v, E2) and np.allclose(pc[2].v, E3)
    pd = build("P-d", sign=1.0, beta=2.5).basis.basis
    assert np.allclose(pd[0].X, BOOST) and np.allclose(pd[0].v, 2.5 * E3)
    assert np.allclose(pd[1].v, NULL_PLUS)
    nviii = build("N-viii").basis.basis
    assert np.allclose(nviii[0].X, NULL_ROTATION)
    assert np.allclose(nviii[1].v, NULL_PLUS) and np.allclose(nviii[2].v, E3)
    nix = build("N-ix").basis.basis
    assert np.allclose(nix[0].X, BOOST) and np.allclose(nix[1].X, NULL_ROTATION)
    nii = build("N-ii").basis.basis
    assert np.allclose(nii[0].X, BOOST)
    nxii = build("N-xii").basis.basis
    assert len(nxii) == 3 and linear_part(build("N-xii").basis)[0] == 3


def test_parameter_domains():
    with pytest.raises(CatalogError):
        build("P-d", beta=0.0)
    with pytest.raises(CatalogError):
        build("P-a", plane="bogus")
    with pytest.raises(CatalogError):
        build("N-x", alpha=0.0)
    with pytest.raises(CatalogError):
        build("unknown-id")
    with pytest.raises(CatalogError):
        build("P-b", beta=1.0)  # P-b takes no parameters


def test_every_basis_is_subalgebra_with_expected_dims():
    expected_dims = {
        "P-a": (2, 0), "P-b": (2, 1), "P-c": (3, 1), "P-d": (2, 1),
        "N-i": (2, 1), "N-ii": (3, 1), "N-iii": (3, 1), "N-iv": (3, 1),
        "N-v": (2, 1), "N-vi": (2, 1), "N-vii": (2, 1), "N-viii": (3, 1),
        "N-ix": (2, 2), "N-x": (3, 2), "N-xi": (4, 2), "N-xii": (3, 3),
    }
    for id_ in CATALOG_IDS:
        for entry in entry_variants(id_):
            assert is_subalgebra(entry.basis), (id_, entry.params)
            dim_g, dim_l = expected_dims[id_]
            assert entry.basis.dim == dim_g
            assert linear_part(entry.basis)[0] == dim_l
            assert kernel_of_l(entry.basis)[0] == dim_g - dim_l


def test_cohomogeneity_one_dimensions():
    rng = rng_from_seed(11)
    for id_ in CATALOG_IDS:
        entry = build(id_)
        pts = _generic_points(entry, rng, 70) + _stratum_points(entry, rng, 2)
        dims = [orbit_dimension(entry.basis, p) for p in pts[:100]]
        assert max(dims) <= 3, id_
        assert 2 in dims, id_


def test_proper_entries_have_elliptic_or_zero_stabilizers():
    rng = rng_from_seed(12)
    for id_ in PROPER_IDS:
        entry = build(id_)
        pts = _generic_points(entry, rng, 30) + _stratum_points(entry, rng, 5)
        for p in pts:
            stab = stabilizer_algebra(entry.basis, p)
            for el in stab.basis:
                assert generator_class(el.X) in (ELLIPTIC, ZERO), (id_, p)


def test_strata_cover_and_are_disjoint():
    rng = rng_from_seed(13)
    for id_ in CATALOG_IDS:
        for entry in entry_variants(id_):
            pts = [rng.uniform(-3, 3, 3) for _ in range(50)]
            pts += _stratum_points(entry, rng, 3)
            for p in pts:
                hits = [s.name for s in entry.strata if s.predicate(p)]
                assert len(hits) == 1, (id_, entry.params, p, hits)


def test_expected_orbit_examples():
    ni = build("N-i")
    s = expected_orbit(ni, [0.0, 0.0, 5.0])
    assert (s.dim, s.causal, s.orbit_class) == (1, "spacelike", "singular")
    nxii = build("N-xii")
    s = expected_orbit(nxii, [1.0, 1.0, 0.0])
    assert (s.dim, s.causal, s.orbit_class) == (2, "degenerate", "exceptional")
    pc = build("P-c")
    s = expected_orbit(pc, [0.3, -1.2, 2.0])
    assert (s.dim, s.causal, s.orbit_class) == (2, "riemannian", "principal")
    # the sign twins mirror their strata across x2 -> -x2
    niii = build("N-iii")
    niv = build("N-iv")
    assert expected_orbit(niii, [1.0, 1.0, 0.0]).orbit_class == "exceptional"
    assert expected_orbit(niv, [1.0, 1.0, 0.0]).orbit_class == "open-orbit"
    assert expected_orbit(niv, [1.0, -1.0, 0.0]).orbit_class == "exceptional"


def test_expected_orbit_rejects_nonfinite():
    with pytest.raises(ValueError):
        expected_orbit(build("N-i"), [np.nan, 0.0, 0.0])


def test_nvii_shifted_singular_stratum():
    # the line of 1-dimensional orbits sits at x2 = x1 + beta
    entry = build("N-vii", beta=2.0)
    assert expected_orbit(entry, [1.0, 3.0, 0.7]).dim == 1
    assert expected_orbit(entry, [1.0, 1.0, 0.7]).dim == 2
    assert orbit_dimension(entry.basis, [1.0, 3.0, 0.7]) == 1
    assert orbit_dimension(entry.basis, [1.0, 1.0, 0.7]) == 2


def test_nx_beta_switches_geometry():
    plane = build("N-x", alpha=1.0, beta=1.0)
    assert expected_orbit(plane, [1.0, 1.0, 0.0]).dim == 2
    assert orbit_dimension(plane.basis, [1.0, 1.0, 0.0]) == 2
    lines = build("N-x", alpha=1.0, beta=0.0)
    assert expected_orbit(lines, [1.0, 1.0, 0.0]).dim == 1
    assert orbit_dimension(lines.basis, [1.0, 1.0, 0.0]) == 1
    assert plane.orbit_space == "three-points-non-Hausdorff"
    assert lines.orbit_space == "other-non-Hausdorff"
