"""Pure-Python partition-function kernel.

Reference implementation of the box dynamic program; the compiled extension
in ``_kernels.pyx`` computes the same table. Arbitrary-precision integers,
never overflows.
"""

from __future__ import annotations

import itertools


def partition_table(roots, bounds):
    """q-graded vector partition counts over a box.

    `roots`: positive roots as non-negative integer tuples in simple-root
    coordinates. `bounds`: inclusive componentwise box bounds. Returns a dict
    mapping each reachable lattice point m in the box to the tuple of
    coefficients of its counting polynomial (index = number of parts).
    """
    rank = len(bounds)
    if any(b < 0 for b in bounds):
        raise ValueError("bounds must be non-negative")
    for r in roots:
        if len(r) != rank or any(v < 0 for v in r) or not any(r):
            raise ValueError(f"invalid root coordinates {r}")

    cells = list(itertools.product(*(range(b + 1) for b in bounds)))
    index = {m: i for i, m in enumerate(cells)}
    table: list[list[int] | None] = [None] * len(cells)
    table[0] = [1]

    for root in roots:
        for i, m in enumerate(cells):
            if any(m[k] < root[k] for k in range(rank)):
                continue
            src = table[index[tuple(m[k] - root[k] for k in range(rank))]]
            if src is None:
                continue
            dst = table[i]
            if dst is None:
                dst = []
                table[i] = dst
            need = len(src) + 1
            if len(dst) < need:
                dst.extend([0] * (need - len(dst)))
            for d, c in enumerate(src):
                if c:
                    dst[d + 1] += c

    out = {}
    for m, coeffs in zip(cells, table):
        if coeffs is None:
            continue
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if coeffs:
            out[m] = tuple(coeffs)
    return out
