"""Seeded random generators for motions, algebra elements and points."""

from __future__ import annotations

import numpy as np

from .algebra import AlgebraElement
from .minkowski import (
    BOOST,
    NULL_ROTATION,
    ROTATION,
    Motion,
    _closed_exp_pair,
    inner,
)


def rng_from_seed(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(42 if seed is None else seed)


def random_so12_matrix(rng, scale: float = 1.0) -> np.ndarray:
    c = rng.uniform(-scale, scale, 3)
    X = c[0] * BOOST + c[1] * ROTATION + c[2] * NULL_ROTATION
    A, _ = _closed_exp_pair(X)
    return A


def random_motion(rng, lin_scale: float = 1.0, trans_scale: float = 2.0) -> Motion:
    return Motion(random_so12_matrix(rng, lin_scale), rng.uniform(-trans_scale, trans_scale, 3))


def random_algebra_element(rng, scale: float = 1.0) -> AlgebraElement:
    c = rng.uniform(-scale, scale, 3)
    X = c[0] * BOOST + c[1] * ROTATION + c[2] * NULL_ROTATION
    return AlgebraElement(X, rng.uniform(-scale, scale, 3))


def random_point(rng, scale: float = 3.0) -> np.ndarray:
    return rng.uniform(-scale, scale, 3)


def random_causal_point(rng, character: str, scale: float = 3.0, margin: float = 0.05,
                        avoid_boost_stratum: bool = False) -> np.ndarray:
    """A random point whose position vector has the requested character.

    With ``avoid_boost_stratum`` the point also keeps |x1 - x2| and
    |x1 + x2| above the margin, staying clear of the null-translation
    strata used by the boost families.
    """
    for _ in range(10000):
        p = rng.uniform(-scale, scale, 3)
        q = inner(p, p)
        if character == "spacelike" and q < margin:
            continue
        if character == "timelike" and q > -margin:
            continue
        if avoid_boost_stratum and (abs(p[0] - p[1]) < margin or abs(p[0] + p[1]) < margin):
            continue
        return p
    raise RuntimeError("rejection sampling failed")
