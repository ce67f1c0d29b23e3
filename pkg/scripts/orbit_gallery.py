#!/usr/bin/env python3
"""Sample an orbit of every catalog family and export the points as CSV.

Writes one file per family into the output directory and prints a
summary line with the conserved-invariant drift where a family carries
an invariant.

Usage: python3 scripts/orbit_gallery.py [outdir] [--seed N] [--n N]
"""

import argparse
import pathlib

import numpy as np

from mink1.catalog import CATALOG_IDS, build
from mink1.orbits import orbit_dimension, sample_orbit
from mink1.reportio import write_orbit_csv
from mink1.sampling import rng_from_seed


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="orbit_gallery")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--n", type=int, default=5, help="grid points per parameter axis")
    args = ap.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    rng = rng_from_seed(args.seed)

    for id_ in CATALOG_IDS:
        entry = build(id_)
        p = rng.uniform(-2.0, 2.0, 3)
        axes = [np.linspace(-1.5, 1.5, args.n)] * entry.basis.dim
        grid = [tuple(t) for t in
                np.stack(np.meshgrid(*axes), -1).reshape(-1, entry.basis.dim)]
        qs = sample_orbit(entry, p, grid)
        path = outdir / f"{id_}.csv"
        with open(path, "w", encoding="utf-8") as fh:
            write_orbit_csv(fh, [f"t{i+1}" for i in range(entry.basis.dim)], grid, qs)
        drift = ""
        if entry.invariant is not None:
            ref = entry.invariant(p)
            dev = max(abs(entry.invariant(q) - ref) for q in qs)
            drift = f", invariant {entry.invariant_name} drift {dev:.2e}"
        print(f"{id_}: dim {orbit_dimension(entry.basis, p)} orbit, "
              f"{len(qs)} samples -> {path}{drift}")


if __name__ == "__main__":
    main()
