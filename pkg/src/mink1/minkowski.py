"""Signature-(1,2) linear algebra on R^3 and its rigid motions.

The scalar product is ``<x, y> = -x1*y1 + x2*y2 + x3*y3``.  Points and
vectors are plain numpy arrays of shape ``(3,)``.  A motion is the pair
``(A, a)`` acting by ``x -> A @ x + a``, with ``A`` constrained to the
identity component of the linear isometry group (``A^T eta A = eta``,
``det A = 1``, ``A[0, 0] >= 1``, i.e. orientation and time-orientation
preserving).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# metric and distinguished directions
ETA = np.diag([-1.0, 1.0, 1.0])
E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])
NULL_PLUS = E1 + E2
NULL_MINUS = E1 - E2

# Generators of the linear isometry algebra (X^T eta + eta X = 0):
# BOOST mixes e1,e2, ROTATION turns the spacelike e2,e3 plane, and
# NULL_ROTATION is nilpotent (cube zero) and fixes the null line R(e1+e2).
BOOST = np.array([[0.0, 1.0, 0.0],
                  [1.0, 0.0, 0.0],
                  [0.0, 0.0, 0.0]])
ROTATION = np.array([[0.0, 0.0, 0.0],
                     [0.0, 0.0, 1.0],
                     [0.0, -1.0, 0.0]])
NULL_ROTATION = np.array([[0.0, 0.0, 1.0],
                          [0.0, 0.0, 1.0],
                          [1.0, -1.0, 0.0]])

# causal characters of vectors
TIMELIKE = "timelike"
NULL = "null"
SPACELIKE = "spacelike"
ZERO_VECTOR = "zero-vector"

# causal characters of the induced metric on a subspace
LORENTZIAN = "lorentzian"
DEGENERATE = "degenerate"
RIEMANNIAN = "riemannian"

# one-parameter subgroup types
ZERO = "zero"
ELLIPTIC = "elliptic"
HYPERBOLIC = "hyperbolic"
PARABOLIC = "parabolic"

MOTION_TOL = 1e-9
STRUCT_TOL = 1e-9


def inner(u, v) -> float:
    """Scalar product of signature (1,2): -u1*v1 + u2*v2 + u3*v3."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return float(-u[0] * v[0] + u[1] * v[1] + u[2] * v[2])


def causal_character(v, tol: float = STRUCT_TOL) -> str:
    """Classify a vector as timelike / null / spacelike / zero-vector.

    The zero vector is its own class, never "null".  Tolerances scale
    with the squared sup-norm of ``v`` so the trichotomy is stable under
    rescaling.
    """
    v = np.asarray(v, dtype=float)
    m = float(np.max(np.abs(v)))
    if m < tol:
        return ZERO_VECTOR
    q = inner(v, v)
    cut = tol * m * m
    if q < -cut:
        return TIMELIKE
    if q > cut:
        return SPACELIKE
    return NULL


def so12_check(X, tol: float = STRUCT_TOL) -> bool:
    """True iff X is an infinitesimal isometry: X^T eta + eta X = 0.

    Componentwise: zero diagonal, X12 = X21, X13 = X31, X23 = -X32.
    """
    X = np.asarray(X, dtype=float)
    if X.shape != (3, 3) or not np.all(np.isfinite(X)):
        return False
    return (
        abs(X[0, 0]) <= tol
        and abs(X[1, 1]) <= tol
        and abs(X[2, 2]) <= tol
        and abs(X[0, 1] - X[1, 0]) <= tol
        and abs(X[0, 2] - X[2, 0]) <= tol
        and abs(X[1, 2] + X[2, 1]) <= tol
    )


def generator_class(X, tol: float = STRUCT_TOL) -> str:
    """One-parameter subgroup type of X, decided by the sign of tr(X^2).

    tr(X^2) < 0 means a rotation conjugate (elliptic), > 0 a boost
    conjugate (hyperbolic); trace zero with X nonzero is the nilpotent
    class (parabolic).  tr(X^2) is conjugation invariant, so this is a
    well-defined classification of the generated subgroup.
    """
    X = np.asarray(X, dtype=float)
    if np.max(np.abs(X)) <= tol:
        return ZERO
    k = float(np.trace(X @ X))
    if k < -tol:
        return ELLIPTIC
    if k > tol:
        return HYPERBOLIC
    return PARABOLIC


@dataclass(frozen=True, eq=False)
class Motion:
    """An isometry x -> A x + a in the identity component."""

    A: np.ndarray
    a: np.ndarray

    def __post_init__(self):
        A = np.array(self.A, dtype=float)
        a = np.array(self.a, dtype=float)
        if A.shape != (3, 3) or a.shape != (3,):
            raise ValueError("Motion needs a 3x3 linear part and a 3-vector")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(a))):
            raise ValueError("Motion components must be finite")
        # tolerances scale with ||A||^2: the isometry residual grows like
        # that under roundoff, and witness boosts reach entries ~ e^20
        scale2 = max(1.0, float(np.max(np.abs(A))) ** 2)
        res = float(np.max(np.abs(A.T @ ETA @ A - ETA)))
        if res > MOTION_TOL * scale2:
            raise ValueError(f"linear part is not an isometry (residual {res:.3e})")
        # beyond ~1e6 the determinant of a near-isometry is lost to
        # cancellation; the residual check above still constrains A there
        if np.max(np.abs(A)) < 1e6:
            det = float(np.linalg.det(A))
            if det <= 0.0 or abs(det - 1.0) > 1e-8 * scale2:
                raise ValueError("linear part must have determinant 1")
        if A[0, 0] < 1.0 - MOTION_TOL:
            raise ValueError("linear part must preserve time orientation (A[0,0] >= 1)")
        A.setflags(write=False)
        a.setflags(write=False)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "a", a)

    @classmethod
    def identity(cls) -> "Motion":
        return cls(np.eye(3), np.zeros(3))

    def __repr__(self):
        return f"Motion(A={self.A.tolist()}, a={self.a.tolist()})"


def apply(m: Motion, p) -> np.ndarray:
    """Act on a point: A p + a."""
    return m.A @ np.asarray(p, dtype=float) + m.a


def compose(m1: Motion, m2: Motion) -> Motion:
    """Group law: (A1, a1)(A2, a2) = (A1 A2, A1 a2 + a1)."""
    return Motion(m1.A @ m2.A, m1.A @ m2.a + m1.a)


def invert(m: Motion) -> Motion:
    """Group inverse (A^-1, -A^-1 a); A^-1 = eta A^T eta for isometries."""
    Ai = ETA @ m.A.T @ ETA
    return Motion(Ai, -Ai @ m.a)


def motion_distance(m1: Motion, m2: Motion) -> float:
    """Sup-norm distance between two motions' components."""
    return max(
        float(np.max(np.abs(m1.A - m2.A))),
        float(np.max(np.abs(m1.a - m2.a))),
    )


def _exp_coeffs(kappa: float):
    """The analytic coefficients c_j(kappa) = sum_k kappa^k / (2k+j)!.

    With kappa = tr(M^2)/2 every M in the isometry algebra satisfies
    M^3 = kappa M, so exp(M) = I + c1 M + c2 M^2 and the translation
    factor V(M) = sum M^k/(k+1)! equals I + c2 M + c3 M^2.
    """
    if abs(kappa) < 1e-8:
        k = kappa
        c1 = 1.0 + k / 6.0 + k * k / 120.0 + k ** 3 / 5040.0
        c2 = 0.5 + k / 24.0 + k * k / 720.0 + k ** 3 / 40320.0
        c3 = 1.0 / 6.0 + k / 120.0 + k * k / 5040.0 + k ** 3 / 362880.0
        return c1, c2, c3
    if kappa < 0.0:
        w = math.sqrt(-kappa)
        return (
            math.sin(w) / w,
            (1.0 - math.cos(w)) / (w * w),
            (w - math.sin(w)) / (w ** 3),
        )
    w = math.sqrt(kappa)
    return (
        math.sinh(w) / w,
        (math.cosh(w) - 1.0) / (w * w),
        (math.sinh(w) - w) / (w ** 3),
    )


def _closed_exp_pair(M: np.ndarray):
    """(exp(M), V(M)) by the cubic-recursion closed form M^3 = kappa M."""
    M2 = M @ M
    kappa = 0.5 * float(np.trace(M2))
    c1, c2, c3 = _exp_coeffs(kappa)
    eye = np.eye(3)
    return eye + c1 * M + c2 * M2, eye + c2 * M + c3 * M2


def _series_exp_pair(M: np.ndarray, w: np.ndarray, terms: int = 20, theta: float = 0.5):
    """Scaling-and-squaring Taylor exponential of [[M, w], [0, 0]].

    The corner of the 4x4 exponential is V(M) w, so this returns the
    same (linear part, translation) pair as the closed form and serves
    as its independent cross-check.
    """
    H = np.zeros((4, 4))
    H[:3, :3] = M
    H[:3, 3] = w
    s = 0
    while np.linalg.norm(H, np.inf) > theta and s < 64:
        H = H / 2.0
        s += 1
    T = np.eye(4)
    term = np.eye(4)
    for k in range(1, terms + 1):
        term = term @ H / k
        T = T + term
    for _ in range(s):
        T = T @ T
    return T[:3, :3], T[:3, 3]


def exp_element(el, t: float = 1.0, method: str = "closed") -> Motion:
    """Time-t flow of the infinitesimal isometry (X, v).

    Returns (exp(tX), V(tX) (t v)).  ``method="closed"`` uses the cubic
    closed form (trig / hyperbolic / polynomial depending on the class
    of X); ``method="series"`` runs scaling-and-squaring on the 4x4
    homogeneous embedding.  Both paths agree to high accuracy and the
    test suite holds them against each other.
    """
    X = np.asarray(el.X, dtype=float)
    v = np.asarray(el.v, dtype=float)
    if not so12_check(X):
        raise ValueError("linear part is not an infinitesimal isometry")
    M = t * X
    w = t * v
    if method == "closed":
        E, V = _closed_exp_pair(M)
        return Motion(E, V @ w)
    if method == "series":
        A, a = _series_exp_pair(M, w)
        return Motion(A, a)
    raise ValueError(f"unknown exponential method: {method!r}")


def causal_of_span(vectors, tol: float = STRUCT_TOL) -> str:
    """Causal character of the subspace spanned by the given vectors.

    One-dimensional spans are classified as vectors; higher-dimensional
    spans by the signature of the induced Gram matrix on a Euclidean-
    orthonormalized basis (one negative eigenvalue -> lorentzian, a
    kernel -> degenerate, otherwise riemannian).
    """
    V = np.atleast_2d(np.asarray(vectors, dtype=float))
    s = np.linalg.svd(V, compute_uv=False)
    if s.size == 0 or s[0] <= tol:
        return ZERO_VECTOR
    rank = int(np.sum(s > tol * s[0]))
    _, _, vh = np.linalg.svd(V)
    Q = vh[:rank]
    if rank == 1:
        return causal_character(Q[0], tol)
    G = Q @ ETA @ Q.T
    eig = np.linalg.eigvalsh(G)
    if np.any(np.abs(eig) <= tol):
        return DEGENERATE
    if np.any(eig < -tol):
        return LORENTZIAN
    return RIEMANNIAN
