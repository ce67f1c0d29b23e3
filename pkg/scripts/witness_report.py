#!/usr/bin/env python3
"""Print the nonproperness witness table for every nonproper family.

For each family (sweeping the parametrized ones) the witness point, the
stabilizing generator class, and the linear-part growth at n = 1, 5, 10,
20 are tabulated.
"""

import numpy as np

from mink1.catalog import NONPROPER_IDS, build
from mink1.minkowski import generator_class
from mink1.properness import make_witness

SWEEP = (-2.0, -1.0, 0.5, 1.0, 3.0)


def rows():
    for id_ in NONPROPER_IDS:
        if id_ == "N-vii":
            for b in SWEEP + (0.0,):
                yield build(id_, beta=b)
        elif id_ == "N-x":
            for b in SWEEP + (0.0,):
                yield build(id_, alpha=1.0, beta=b)
        else:
            yield build(id_)


def main():
    print(f"{'family':18} {'point':16} {'class':11} "
          f"{'n=1':>10} {'n=5':>12} {'n=10':>12} {'n=20':>14}")
    for entry in rows():
        w = make_witness(entry)
        norms = dict(w.certificate)
        name = entry.id + (str(entry.params) if entry.params else "")
        point = np.array2string(w.point, precision=2, suppress_small=True)
        kind = generator_class(w.generator.X)
        print(f"{name:18} {point:16} {kind:11} "
              f"{norms[1]:>10.3f} {norms[5]:>12.3f} {norms[10]:>12.1f} {norms[20]:>14.1f}")


if __name__ == "__main__":
    main()
