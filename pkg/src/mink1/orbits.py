"""Numerical orbit geometry at a point.

Everything reduces to the fundamental-field evaluation map
``(X, v) -> X p + v`` restricted to the acting algebra: its rank is the
orbit dimension, its nullspace is the stabilizer algebra, and the
induced scalar product on its image fixes the causal character.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import AlgebraElement, SubalgebraSpec
from .catalog import CatalogEntry, Stratum, expected_orbit
from .minkowski import (
    ETA,
    ZERO_VECTOR,
    apply,
    causal_of_span,
    compose,
    exp_element,
    inner,
)

RANK_RTOL = 1e-9


def tangent_basis(spec: SubalgebraSpec, p) -> np.ndarray:
    """Fundamental vectors X p + v of the basis elements, as rows."""
    p = np.asarray(p, dtype=float)
    if spec.dim == 0:
        return np.zeros((0, 3))
    return np.stack([el.X @ p + el.v for el in spec.basis])


def orbit_dimension(spec: SubalgebraSpec, p) -> int:
    T = tangent_basis(spec, p)
    if T.shape[0] == 0:
        return 0
    s = np.linalg.svd(T, compute_uv=False)
    if s[0] <= RANK_RTOL:
        return 0
    return int(np.sum(s > RANK_RTOL * s[0]))


def stabilizer_algebra(spec: SubalgebraSpec, p) -> SubalgebraSpec:
    """Nullspace of the evaluation map, as a subalgebra of `spec`."""
    T = tangent_basis(spec, p)
    if T.shape[0] == 0:
        return SubalgebraSpec(())
    u, s, _ = np.linalg.svd(T, full_matrices=True)
    rank = 0 if s[0] <= RANK_RTOL else int(np.sum(s > RANK_RTOL * s[0]))
    coeffs = u[:, rank:].T
    els = []
    for c in coeffs:
        acc = spec.basis[0] * c[0]
        for ci, el in zip(c[1:], spec.basis[1:]):
            acc = acc + el * ci
        els.append(acc)
    return SubalgebraSpec(tuple(els))


def orbit_causal(spec: SubalgebraSpec, p, tol: float = 1e-9) -> str:
    """Causal character of the tangent space T_p G(p)."""
    T = tangent_basis(spec, p)
    if orbit_dimension(spec, p) == 0:
        return ZERO_VECTOR
    return causal_of_span(T, tol)


def orbit_normal(spec: SubalgebraSpec, p) -> np.ndarray:
    """Metric normal direction of a 2-dimensional orbit.

    Solves <n, xi> = 0 over the tangent vectors; returns a Euclidean
    unit vector with its first nonzero component positive.  For a
    degenerate orbit the direction is null and tangent.
    """
    T = tangent_basis(spec, p)
    rows = T @ ETA
    _, s, vh = np.linalg.svd(rows)
    rank = int(np.sum(s > RANK_RTOL * s[0]))
    if rank != 2:
        raise ValueError("orbit is not 2-dimensional at this point")
    n = vh[2]
    for c in n:
        if abs(c) > 1e-12:
            if c < 0:
                n = -n
            break
    return n / np.linalg.norm(n)


def finite_tangent(el: AlgebraElement, p, h: float = 1e-5) -> np.ndarray:
    """Central-difference velocity of the flow of (X, v) at p."""
    plus = apply(exp_element(el, h), p)
    minus = apply(exp_element(el, -h), p)
    return (plus - minus) / (2.0 * h)


def sample_orbit(entry: CatalogEntry, p, grid) -> np.ndarray:
    """Orbit points exp(t1 xi1) exp(t2 xi2) ... p over a parameter grid.

    ``grid`` is a sequence of tuples, one coordinate per basis element.
    The empty grid yields the base point itself.
    """
    p = np.asarray(p, dtype=float)
    grid = list(grid)
    if not grid:
        return p.reshape(1, 3)
    pts = []
    for tup in grid:
        if len(tup) != entry.basis.dim:
            raise ValueError("grid tuples must match the basis dimension")
        m = exp_element(entry.basis.basis[0], float(tup[0]))
        for el, t in zip(entry.basis.basis[1:], tup[1:]):
            m = compose(m, exp_element(el, float(t)))
        pts.append(apply(m, p))
    return np.stack(pts)


def eq1_norm(alpha: float, p) -> float:
    """Squared norm of the mixed boost/null-rotation tangent vector at p.

    Equals alpha^2 (x1^2 - x2^2) + 2 alpha x3 (x1 - x2) + (x1 - x2)^2,
    which is the scalar square of (alpha*BOOST + NULL_ROTATION) p.  Its
    discriminant in alpha has the sign of <p, p>, which drives the
    Lorentzian / spacelike dichotomy of the solvable linear family.
    """
    p = np.asarray(p, dtype=float)
    x, y, z = p
    return float(alpha * alpha * (x * x - y * y) + 2.0 * alpha * z * (x - y) + (x - y) ** 2)


def _unit_spacelike_normal(spec: SubalgebraSpec, q, ref: Optional[np.ndarray]):
    """Minkowski-unit spacelike normal at an orbit point, oriented to `ref`."""
    n = orbit_normal(spec, q)
    nn = inner(n, n)
    if nn <= 1e-12:
        raise ValueError("orbit normal is not spacelike here")
    n = n / np.sqrt(nn)
    if ref is not None and inner(n, ref) < 0.0:
        n = -n
    return n


def shape_operator(entry: CatalogEntry, p, h: float = 1e-2):
    """Finite-difference shape operator of a boost-screw family orbit.

    Valid on the Lorentzian stratum (x1 != sign*x2).  The unit spacelike
    normal field is differentiated along the two tangent flows by
    central differences and expressed in the null tangent basis
    v1 (transverse null direction) and v2 (the null translation
    direction), normalized to <v1, v2> = -1.  Returns the 2x2 matrix and
    the diagnosis "non-diagonalizable" or "diagonalizable": the former
    when the eigenvalues coincide to 1e-6 and the eigenspace of the
    common eigenvalue is one-dimensional at rank tolerance 1e-6.

    The default step is deliberately coarse.  The operator is defective,
    so noise eps in its near-zero entries splits the double eigenvalue
    by sqrt(eps); a coarse step keeps the roundoff noise floor near
    1e-14, while the truncation error lies along the operator's image
    direction and cannot split the eigenvalues.
    """
    if entry.id != "P-d":
        raise ValueError("shape_operator is defined for the P-d family")
    p = np.asarray(p, dtype=float)
    s = entry.params["sign"]
    if abs(p[0] - s * p[1]) < 1e-6:
        raise ValueError("degenerate-plane stratum: no unit spacelike normal")
    spec = entry.basis
    xi = tangent_basis(spec, p)  # rows: boost field, null translation
    n0 = _unit_spacelike_normal(spec, p, None)

    derivs = []
    for el in spec.basis:
        qp = apply(exp_element(el, h), p)
        qm = apply(exp_element(el, -h), p)
        np_ = _unit_spacelike_normal(spec, qp, n0)
        nm = _unit_spacelike_normal(spec, qm, n0)
        dn = (np_ - nm) / (2.0 * h)
        dn = dn - inner(dn, n0) * n0  # project out the normal component
        derivs.append(-dn)
    derivs = np.stack(derivs)  # row i = S(xi_i)

    # null basis of the tangent plane: v2 along the translation direction,
    # v1 the other null direction, scaled so <v1, v2> = -1, both future
    v2 = xi[1]
    g11 = inner(xi[0], xi[0])
    g12 = inner(xi[0], v2)
    v1 = xi[0] - (g11 / (2.0 * g12)) * v2
    if v1[0] < 0:
        v1 = -v1
    v1 = v1 / (-inner(v1, v2))
    # S(v1), S(v2) from linearity: v = a xi0 + b xi1
    B = np.stack([xi[0], v2]).T  # 3x2
    Smat = np.zeros((2, 2))
    for j, v in enumerate((v1, v2)):
        ab, *_ = np.linalg.lstsq(B, v, rcond=None)
        Sv = ab[0] * derivs[0] + ab[1] * derivs[1]
        cd, *_ = np.linalg.lstsq(np.stack([v1, v2]).T, Sv, rcond=None)
        Smat[:, j] = cd
    lam = np.linalg.eigvals(Smat)
    lam = np.real_if_close(lam, tol=1e3)
    common = np.mean(np.real(lam))
    coincide = abs(lam[0] - lam[1]) <= 1e-6 * max(1.0, np.max(np.abs(Smat)))
    sv = np.linalg.svd(Smat - common * np.eye(2), compute_uv=False)
    one_dim_eigenspace = sv[0] > 1e-6 >= sv[1]
    if coincide and one_dim_eigenspace:
        diagnosis = "non-diagonalizable"
    else:
        diagnosis = "diagonalizable"
    return Smat, diagnosis


_STENCIL = np.array(
    [d for d in itertools.product((-1, 0, 1), repeat=3) if d != (0, 0, 0)],
    dtype=float,
)
_STENCIL = _STENCIL / np.linalg.norm(_STENCIL, axis=1)[:, None]


def orbit_class(entry: CatalogEntry, p, radius: float = 1e-3):
    """Orbit class verdict (from the catalog) plus numeric evidence.

    The catalog table is authoritative: openness of an orbit type is not
    decidable from samples.  The evidence compares (orbit dimension,
    stabilizer dimension) at p against 26 perturbed points on a sphere
    of the given radius; constancy supports a principal verdict, and a
    codimension-one orbit on a non-open stratum supports an exceptional
    one.
    """
    p = np.asarray(p, dtype=float)
    stratum = expected_orbit(entry, p)
    spec = entry.basis
    center = (orbit_dimension(spec, p), spec.dim - orbit_dimension(spec, p))
    neighbors = []
    for d in _STENCIL:
        q = p + radius * d
        od = orbit_dimension(spec, q)
        neighbors.append((od, spec.dim - od))
    same = sum(1 for nb in neighbors if nb == center)
    evidence = {
        "center_dims": center,
        "neighbors_same": same,
        "neighbors_total": len(neighbors),
        "principal_evidence": same == len(neighbors),
        "exceptional_evidence": center[0] == 2 and same < len(neighbors),
    }
    return stratum.orbit_class, evidence


@dataclass(frozen=True)
class OrbitReport:
    point: np.ndarray
    orbit_dim: int
    causal: str
    stabilizer_dim: int
    stabilizer_class: str
    orbit_class: str
    matched_expectation: bool
    expected: Stratum
    invariant_value: Optional[float]
    evidence: Optional[dict]


def orbit_report(entry: CatalogEntry, p, with_evidence: bool = True) -> OrbitReport:
    """Full per-point analysis compared against the catalog expectation."""
    from .properness import stabilizer_compactness

    p = np.asarray(p, dtype=float)
    spec = entry.basis
    odim = orbit_dimension(spec, p)
    causal = orbit_causal(spec, p)
    sdim = spec.dim - odim
    sclass = stabilizer_compactness(spec, p)
    expected = expected_orbit(entry, p)
    matched = (
        odim == expected.dim
        and causal == expected.causal
        and sdim == expected.stabilizer_dim
        and sclass == expected.stabilizer_class
    )
    evidence = None
    if with_evidence:
        _, evidence = orbit_class(entry, p)
    inv = entry.invariant(p) if entry.invariant is not None else None
    return OrbitReport(
        point=p,
        orbit_dim=odim,
        causal=causal,
        stabilizer_dim=sdim,
        stabilizer_class=sclass,
        orbit_class=expected.orbit_class,
        matched_expectation=matched,
        expected=expected,
        invariant_value=inv,
        evidence=evidence,
    )
