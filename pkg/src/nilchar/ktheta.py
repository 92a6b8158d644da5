"""Graded character of the K-nilpotent cone via the signed exterior class.

For a real form split modulo center, the graded K-character of functions on
the theta-fixed part of the nilpotent cone equals the restriction of the full
cone character multiplied by the signed graded exterior algebra of k. This
module computes that product, together with the Koszul sanity identity and
the dimension bookkeeping that the hypothesis rests on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charring import (
    GradedCharacter,
    IrrepSeries,
    decompose_into_irreducibles,
    graded_mul,
    restrict_graded,
)
from .nilcone import nilcone_character
from .rootdata import InvolutionData, RootDatum, Weight, classify_roots, wneg


class SplitHypothesisError(ValueError):
    """Raised when a computation is only valid for forms split modulo center."""


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    lines: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.passed

    @property
    def details(self) -> str:
        return "\n".join(self.lines)


@dataclass(frozen=True)
class Dims:
    dim_g: int
    dim_k: int
    dim_p: int
    rank_split: int


@dataclass(frozen=True)
class RealFormConfig:
    """The (G, theta, K) package: ambient root datum, involution, torus-level
    restriction to K, the weights of k, and the dimension table."""

    label: str
    g_datum: RootDatum
    involution: InvolutionData
    k_torus_rank: int
    restriction: tuple[tuple[int, ...], ...]
    k_weights: tuple[Weight, ...]
    dims: Dims
    split_mod_center: bool
    k_datum: RootDatum | None = None

    def __post_init__(self):
        classify_roots(self.g_datum, self.involution)
        rows = tuple(tuple(int(v) for v in row) for row in self.restriction)
        object.__setattr__(self, "restriction", rows)
        if len(rows) != self.k_torus_rank or any(len(r) != self.g_datum.rank for r in rows):
            raise ValueError(
                f"restriction must be a {self.k_torus_rank} x {self.g_datum.rank} integer matrix"
            )
        kw = tuple(tuple(int(v) for v in w) for w in self.k_weights)
        object.__setattr__(self, "k_weights", kw)
        if any(len(w) != self.k_torus_rank for w in kw):
            raise ValueError("k weights must live on the K-torus lattice")
        if len(kw) != self.dims.dim_k:
            raise ValueError(f"|k_weights| = {len(kw)} but dim k = {self.dims.dim_k}")
        if self.dims.dim_g != self.dims.dim_k + self.dims.dim_p:
            raise ValueError("dimension table violates dim g = dim k + dim p")
        if _multiset(kw) != _multiset(map(wneg, kw)):
            raise ValueError("k weights must be symmetric under negation")
        if self.k_datum is not None:
            if self.k_datum.rank != self.k_torus_rank:
                raise ValueError("K root datum rank must equal the K-torus rank")
            _check_weyl_invariant_multiset(self.k_datum, kw)


def _multiset(items):
    out: dict = {}
    for x in items:
        out[x] = out.get(x, 0) + 1
    return out


def _check_weyl_invariant_multiset(datum: RootDatum, weights) -> None:
    counts = _multiset(weights)
    for i in range(datum.nsimple):
        reflected = _multiset(datum.reflect(i, w) for w in weights)
        if reflected != counts:
            raise ValueError("k weights are not Weyl(K)-invariant as a multiset")


def wedge_class(k_weights, truncation: int, rank: int | None = None) -> GradedCharacter:
    """Signed graded exterior algebra of a weight multiset: the expansion of
    the product over weights w of (1 - e^w q). Layer n carries sign (-1)^n."""
    weights = [tuple(w) for w in k_weights]
    if rank is None:
        if not weights:
            raise ValueError("rank is required for an empty weight multiset")
        rank = len(weights[0])
    out = GradedCharacter.trivial(rank, truncation)
    for w in weights:
        out = graded_mul(out, GradedCharacter(rank, truncation, [{(0,) * rank: 1}, {w: -1}]))
    return out


def symmetric_series(k_weights, truncation: int, rank: int | None = None) -> GradedCharacter:
    """Graded symmetric algebra of a weight multiset (weight w in degree 1)."""
    weights = [tuple(w) for w in k_weights]
    if rank is None:
        if not weights:
            raise ValueError("rank is required for an empty weight multiset")
        rank = len(weights[0])
    layers = [{(0,) * rank: 1}] + [dict() for _ in range(truncation)]
    for w in weights:
        for n in range(1, truncation + 1):
            layer = layers[n]
            for v, c in layers[n - 1].items():
                key = tuple(a + b for a, b in zip(v, w))
                layer[key] = layer.get(key, 0) + c
    return GradedCharacter(rank, truncation, layers)


def koszul_check(k_weights, truncation: int, rank: int | None = None) -> CheckResult:
    """Verify that functions on k* times the signed exterior class of k is the
    trivial class through the given degree."""
    product = graded_mul(
        symmetric_series(k_weights, truncation, rank),
        wedge_class(k_weights, truncation, rank),
    )
    trivial = GradedCharacter.trivial(product.rank, truncation)
    for n in range(truncation + 1):
        if product.layers[n] != trivial.layers[n]:
            return CheckResult(
                False,
                (
                    f"Koszul identity fails first at degree {n}: "
                    f"got {product.layer(n)!r}, expected {trivial.layer(n)!r}",
                ),
            )
    return CheckResult(True, (f"Koszul identity holds through degree {truncation}",))


def theta_cone_character(config: RealFormConfig, truncation: int, force: bool = False) -> GradedCharacter:
    """Graded K-torus character of functions on the K-nilpotent cone:
    restrict the full cone character and multiply by the signed exterior
    class of k."""
    if not config.split_mod_center and not force:
        raise SplitHypothesisError(
            f"config {config.label!r} is not split modulo center; the product formula is "
            "proved only under that hypothesis (pass force=True to compute it anyway)"
        )
    full = nilcone_character(config.g_datum, truncation)
    restricted = restrict_graded(full, config.restriction)
    wedge = wedge_class(config.k_weights, truncation, rank=config.k_torus_rank)
    return graded_mul(restricted, wedge)


def theta_cone_ktypes(config: RealFormConfig, truncation: int, force: bool = False) -> IrrepSeries:
    """Layerwise decomposition of `theta_cone_character` into K-irreducible
    labels; requires the K root datum."""
    if config.k_datum is None:
        raise ValueError(f"config {config.label!r} carries no K root datum")
    gc = theta_cone_character(config, truncation, force=force)
    layers = []
    for n in range(truncation + 1):
        layers.append(decompose_into_irreducibles(config.k_datum, gc.layer(n)))
    return IrrepSeries(config.k_datum.rank, truncation, layers)


def dimension_check(config: RealFormConfig) -> CheckResult:
    """Dimension bookkeeping: the cone-restriction identity, the Cartan
    decomposition, consistency with the root datum, and (when split) the
    Iwasawa count."""
    d = config.dims
    lines = []
    ok = True

    lhs = d.dim_p - d.rank_split
    rhs = (d.dim_g - d.rank_split) + d.dim_p - d.dim_g
    good = lhs == rhs
    ok &= good
    lines.append(
        f"{'ok' if good else 'FAIL'}: dim N_theta = dim N + dim p - dim g  ({lhs} vs {rhs})"
    )

    good = d.dim_g == d.dim_k + d.dim_p
    ok &= good
    lines.append(f"{'ok' if good else 'FAIL'}: dim g = dim k + dim p  ({d.dim_g} vs {d.dim_k + d.dim_p})")

    datum_dim = 2 * len(config.g_datum.positive_roots) + config.g_datum.rank
    good = d.dim_g == datum_dim
    ok &= good
    lines.append(f"{'ok' if good else 'FAIL'}: dim g matches the root datum  ({d.dim_g} vs {datum_dim})")

    if config.split_mod_center:
        good = (d.dim_g - d.rank_split) % 2 == 0
        nil = (d.dim_g - d.rank_split) // 2
        good = good and d.dim_g == d.dim_k + d.rank_split + nil
        ok &= good
        lines.append(
            f"{'ok' if good else 'FAIL'}: Iwasawa count dim g = dim k + rank + dim n  "
            f"({d.dim_g} vs {d.dim_k} + {d.rank_split} + {nil})"
        )
        good = d.rank_split == config.g_datum.rank
        ok &= good
        lines.append(
            f"{'ok' if good else 'FAIL'}: split rank equals the lattice rank  "
            f"({d.rank_split} vs {config.g_datum.rank})"
        )
    else:
        lines.append("skip: Iwasawa count (config is not split modulo center)")

    return CheckResult(bool(ok), tuple(lines))
