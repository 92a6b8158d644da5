"""Graded character of the ring of functions on the nilpotent cone.

The degree-n layer assigns to each dominant root-lattice weight the q^n
coefficient of its q-analog multiplicity against the zero weight. Only
weights expressible as sums of at most n positive roots can contribute at
degree n, which bounds the enumeration domain by height.
"""

from __future__ import annotations

from .charring import GradedCharacter, IrrepSeries, expand_irrep_series
from .kostant import lusztig_mq, warm_partition_table
from .rootdata import RootDatum, dominant_weights_up_to_height


def contributor_polynomials(datum: RootDatum, truncation: int):
    """(lam, M_q(lam, 0) truncated) for every dominant root-lattice weight
    that can contribute a q-power <= truncation."""
    height_bound = truncation * datum.max_root_height
    if datum.nsimple:
        # One warm-up build sized for the whole scan beats per-query rebuilds.
        warm_partition_table(datum, (height_bound + 2,) * datum.nsimple)
    zero = (0,) * datum.rank
    out = []
    for lam in dominant_weights_up_to_height(datum, height_bound):
        mq = lusztig_mq(datum, lam, zero).truncate(truncation)
        if mq:
            out.append((lam, mq))
    return out


def nilcone_series(datum: RootDatum, truncation: int) -> IrrepSeries:
    """Highest-weight decomposition of the graded cone functions, by degree."""
    layers: list[dict] = [dict() for _ in range(truncation + 1)]
    for lam, mq in contributor_polynomials(datum, truncation):
        height = datum.height(lam)
        for deg, coeff in mq.items():
            assert height <= deg * max(datum.max_root_height, 1)
            layers[deg][lam] = coeff
    return IrrepSeries(datum.rank, truncation, layers)


def nilcone_character(datum: RootDatum, truncation: int) -> GradedCharacter:
    """Torus-character expansion of `nilcone_series`."""
    return expand_irrep_series(datum, nilcone_series(datum, truncation))
