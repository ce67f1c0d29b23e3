import numpy as np
import pytest

from mink1.algebra import AlgebraElement
from mink1.catalog import build
from mink1.minkowski import (
    BOOST,
    E1,
    E2,
    NULL_PLUS,
    NULL_ROTATION,
    inner,
)
from mink1.orbits import (
    eq1_norm,
    finite_tangent,
    orbit_causal,
    orbit_class,
    orbit_dimension,
    orbit_normal,
    orbit_report,
    sample_orbit,
    shape_operator,
    stabilizer_algebra,
    tangent_basis,
)
from mink1.sampling import random_causal_point, rng_from_seed

Z3 = np.zeros(3)
Z33 = np.zeros((3, 3))


def test_tangent_basis_examples():
    pd = build("P-d", beta=0.5)
    T = tangent_basis(pd.basis, [1.0, 2.0, 3.0])
    # boost field at (x, y, z) is (y, x, beta); translation field is constant
    assert np.allclose(T[0], [2.0, 1.0, 0.5])
    assert np.allclose(T[1], NULL_PLUS)
    nxii = build("N-xii")
    assert np.allclose(tangent_basis(nxii.basis, Z3), 0.0)


def test_orbit_dimension_and_stabilizer():
    nviii = build("N-viii")
    for p in ([0, 0, 0], [1.0, -2.0, 0.3], [5.0, 5.0, 1.0]):
        assert orbit_dimension(nviii.basis, p) == 2
        stab = stabilizer_algebra(nviii.basis, p)
        assert stab.dim == 1
    nxii = build("N-xii")
    assert orbit_dimension(nxii.basis, Z3) == 0
    assert stabilizer_algebra(nxii.basis, Z3).dim == 3
    niii = build("N-iii")
    assert orbit_dimension(niii.basis, [2.0, 2.0, 1.0]) == 2
    assert stabilizer_algebra(niii.basis, [2.0, 2.0, 1.0]).dim == 1


def test_stabilizer_is_a_subalgebra_and_kills_the_point():
    from mink1.algebra import is_subalgebra

    rng = rng_from_seed(0)
    for id_ in ("P-b", "N-viii", "N-ix", "N-xii"):
        entry = build(id_)
        for _ in range(10):
            p = rng.uniform(-3, 3, 3)
            stab = stabilizer_algebra(entry.basis, p)
            assert is_subalgebra(stab)
            for el in stab.basis:
                assert np.max(np.abs(el.X @ p + el.v)) < 1e-9


def test_dimension_accounting():
    rng = rng_from_seed(1)
    from mink1.catalog import CATALOG_IDS

    for id_ in CATALOG_IDS:
        entry = build(id_)
        for _ in range(15):
            p = rng.uniform(-3, 3, 3)
            od = orbit_dimension(entry.basis, p)
            sd = stabilizer_algebra(entry.basis, p).dim
            assert od + sd == entry.basis.dim


def test_orbit_causal_examples():
    pc = build("P-c")
    assert orbit_causal(pc.basis, [0.4, 1.0, -2.0]) == "riemannian"
    pd = build("P-d", beta=1.0)
    assert orbit_causal(pd.basis, [1.0, 1.0, 0.0]) == "degenerate"
    assert orbit_causal(pd.basis, [1.0, 0.0, 0.0]) == "lorentzian"
    ni = build("N-i")
    assert orbit_causal(ni.basis, [0.0, 0.0, 1.0]) == "spacelike"
    nxii = build("N-xii")
    assert orbit_causal(nxii.basis, Z3) == "zero-vector"


def test_tangent_flow_consistency():
    rng = rng_from_seed(2)
    from mink1.catalog import CATALOG_IDS

    for id_ in CATALOG_IDS:
        entry = build(id_)
        p = rng.uniform(-2, 2, 3)
        T = tangent_basis(entry.basis, p)
        for el, xi in zip(entry.basis.basis, T):
            fd = finite_tangent(el, p)
            assert np.max(np.abs(fd - xi)) < 1e-7


def test_sample_orbit_empty_grid_and_invariants():
    ni = build("N-i")
    p = np.array([2.0, 1.0, 0.0])
    assert np.allclose(sample_orbit(ni, p, []), p.reshape(1, 3))
    grid = [(t, u) for t in np.linspace(-2, 2, 7) for u in np.linspace(-2, 2, 7)]
    qs = sample_orbit(ni, p, grid)
    ref = ni.invariant(p)
    assert ref == pytest.approx(3.0)
    assert max(abs(ni.invariant(q) - ref) for q in qs) < 1e-8

    nxii = build("N-xii")
    p = np.array([2.0, 0.0, 0.0])
    grid3 = [(a, b, c) for a in (-1, 0.5, 1) for b in (-1, 0, 1) for c in (-0.5, 0.7, 1)]
    qs = sample_orbit(nxii, p, grid3)
    assert nxii.invariant(p) == pytest.approx(-4.0)
    assert max(abs(inner(q, q) + 4.0) for q in qs) < 1e-8

    pc = build("P-c")
    p = np.array([1.5, 0.2, -0.3])
    qs = sample_orbit(pc, p, grid3)
    assert max(abs(q[0] - 1.5) for q in qs) < 1e-12


def test_sample_orbit_grid_shape_mismatch():
    ni = build("N-i")
    with pytest.raises(ValueError):
        sample_orbit(ni, Z3, [(1.0, 2.0, 3.0)])


def test_shape_operator_reference_point():
    entry = build("P-d", sign=1.0, beta=1.0)
    S, diag = shape_operator(entry, [1.0, 0.0, 0.0])
    # in the null tangent basis the operator is the elementary nilpotent
    assert diag == "non-diagonalizable"
    assert np.max(np.abs(S - np.array([[0.0, 0.0], [1.0, 0.0]]))) < 1e-4
    lam = np.linalg.eigvals(S)
    assert np.max(np.abs(lam)) < 1e-5
    S2, diag2 = shape_operator(entry, [0.0, 1.0, 0.0])
    assert diag2 == "non-diagonalizable"


def test_shape_operator_rejects_degenerate_stratum():
    entry = build("P-d", sign=1.0, beta=1.0)
    with pytest.raises(ValueError):
        shape_operator(entry, [1.0, 1.0, 0.0])
    with pytest.raises(ValueError):
        shape_operator(build("P-b"), [1.0, 0.0, 0.0])


def test_degenerate_stratum_normal_is_the_null_direction():
    for sign in (1.0, -1.0):
        entry = build("P-d", sign=sign, beta=0.8)
        nu = (E1 + sign * E2) / np.sqrt(2.0)
        for a, c in ((1.0, 0.0), (-0.4, 2.0)):
            p = np.array([a, sign * a, c])
            n = orbit_normal(entry.basis, p)
            assert np.max(np.abs(n - nu)) < 1e-8


def test_orbit_normal_requires_surface():
    nxii = build("N-xii")
    with pytest.raises(ValueError):
        orbit_normal(nxii.basis, Z3)


def test_orbit_class_examples():
    niii = build("N-iii")
    cls, ev = orbit_class(niii, [1.0, 1.0, 0.0])
    assert cls == "exceptional"
    assert ev["exceptional_evidence"] and not ev["principal_evidence"]
    pb = build("P-b")
    cls, ev = orbit_class(pb, [5.0, 0.0, 0.0])
    assert cls == "singular"
    nix = build("N-ix")
    cls, _ = orbit_class(nix, [1.0, 1.0, 0.0])
    assert cls == "singular"
    assert orbit_dimension(nix.basis, [1.0, 1.0, 0.0]) == 1
    ni = build("N-i")
    cls, ev = orbit_class(ni, [1.0, 1.0, 0.5])
    assert cls == "principal"  # free orbits all share one type
    assert ev["principal_evidence"]


def test_orbit_report_round_trip():
    entry = build("N-i")
    rep = orbit_report(entry, [2.0, 1.0, 0.0])
    assert rep.matched_expectation
    assert rep.orbit_dim == 2
    assert rep.causal == "riemannian"
    assert rep.invariant_value == pytest.approx(3.0)
    rep0 = orbit_report(entry, [0.0, 0.0, 5.0])
    assert rep0.orbit_dim == 1 and rep0.causal == "spacelike"
    assert rep0.stabilizer_class == "noncompact"


def test_eq1_norm_examples():
    assert eq1_norm(1.0, [1.0, 0.0, 0.0]) == pytest.approx(2.0)
    # every term carries a factor of (x1 - x2)
    for alpha in (-3.0, 0.0, 1.7):
        assert eq1_norm(alpha, [2.0, 2.0, -1.0]) == 0.0


def test_eq1_norm_matches_flow_derivative():
    rng = rng_from_seed(3)
    for _ in range(50):
        alpha = rng.uniform(-3, 3)
        p = rng.uniform(-3, 3, 3)
        el = AlgebraElement(alpha * BOOST + NULL_ROTATION, Z3)
        w = finite_tangent(el, p)
        assert abs(inner(w, w) - eq1_norm(alpha, p)) < 1e-7


def test_eq1_discriminant_dichotomy():
    rng = rng_from_seed(4)
    for _ in range(100):
        p = random_causal_point(rng, "spacelike", avoid_boost_stratum=True)
        x, y, z = p
        disc = (2 * z * (x - y)) ** 2 - 4 * (x * x - y * y) * (x - y) ** 2
        assert disc > 0
    for _ in range(100):
        p = random_causal_point(rng, "timelike", avoid_boost_stratum=True)
        x, y, z = p
        disc = (2 * z * (x - y)) ** 2 - 4 * (x * x - y * y) * (x - y) ** 2
        assert disc < 0


def test_timelike_points_give_positive_eq1_everywhere():
    rng = rng_from_seed(5)
    alphas = np.linspace(-10, 10, 81)
    for _ in range(25):
        p = random_causal_point(rng, "timelike", avoid_boost_stratum=True)
        vals = [eq1_norm(a, p) for a in alphas]
        assert min(vals) > 0.0
