"""Exact arithmetic on virtual torus characters and truncated q-graded
character series, plus decomposition of Weyl-invariant characters into
irreducibles.

Negative multiplicities are first-class everywhere: alternating classes
(signed exterior algebras, character expansions of the trivial module) are
the typical inputs.
"""

from __future__ import annotations

from weakref import WeakKeyDictionary

from .kostant import freudenthal_table, weyl_multiplicity
from .rootdata import RootDatum, Weight, mat_apply, wadd

_irrep_cache: WeakKeyDictionary = WeakKeyDictionary()


class TorusCharacter:
    """Finite formal integer combination of torus weights (a virtual character)."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        cleaned: dict[Weight, int] = {}
        if terms:
            for w, c in dict(terms).items():
                if len(w) != rank:
                    raise ValueError(f"weight {w} does not have rank {rank}")
                if c:
                    cleaned[tuple(w)] = int(c)
        self.terms = cleaned

    @classmethod
    def trivial(cls, rank: int) -> TorusCharacter:
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def from_weight(cls, w: Weight, mult: int = 1) -> TorusCharacter:
        return cls(len(w), {tuple(w): mult})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TorusCharacter)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __add__(self, other: TorusCharacter) -> TorusCharacter:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return TorusCharacter(self.rank, out)

    def __sub__(self, other: TorusCharacter) -> TorusCharacter:
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) - c
        return TorusCharacter(self.rank, out)

    def __neg__(self) -> TorusCharacter:
        return TorusCharacter(self.rank, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return TorusCharacter(self.rank, {w: c * other for w, c in self.terms.items()})
        self._check(other)
        out: dict[Weight, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                key = wadd(w1, w2)
                out[key] = out.get(key, 0) + c1 * c2
        return TorusCharacter(self.rank, out)

    __rmul__ = __mul__

    def mass(self) -> int:
        """Sum of multiplicities (the virtual dimension)."""
        return sum(self.terms.values())

    def items(self):
        return sorted(self.terms.items())

    def _check(self, other: TorusCharacter) -> None:
        if self.rank != other.rank:
            raise ValueError(f"torus rank mismatch: {self.rank} vs {other.rank}")

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*e{list(w)}" for w, c in self.items())


class GradedCharacter:
    """Truncated q-series of virtual torus characters.

    `layers[n]` is the weight->multiplicity map in q-degree n; all layers
    above `truncation` are absent by construction and ring operations
    re-truncate to the smaller operand.
    """

    __slots__ = ("rank", "truncation", "layers")

    def __init__(self, rank: int, truncation: int, layers=None):
        if truncation < 0:
            raise ValueError("truncation must be non-negative")
        self.rank = rank
        self.truncation = truncation
        self.layers: list[dict[Weight, int]] = []
        for n in range(truncation + 1):
            layer = {}
            if layers is not None and n < len(layers):
                for w, c in dict(layers[n]).items():
                    if len(w) != rank:
                        raise ValueError(f"weight {w} does not have rank {rank}")
                    if c:
                        layer[tuple(w)] = int(c)
            self.layers.append(layer)

    @classmethod
    def trivial(cls, rank: int, truncation: int) -> GradedCharacter:
        return cls(rank, truncation, [{(0,) * rank: 1}])

    def layer(self, n: int) -> TorusCharacter:
        return TorusCharacter(self.rank, self.layers[n])

    def mass(self, n: int) -> int:
        return sum(self.layers[n].values())

    def masses(self) -> list[int]:
        return [self.mass(n) for n in range(self.truncation + 1)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedCharacter)
            and self.rank == other.rank
            and self.truncation == other.truncation
            and self.layers == other.layers
        )

    def __add__(self, other: GradedCharacter) -> GradedCharacter:
        self._check(other)
        n = min(self.truncation, other.truncation)
        out = []
        for d in range(n + 1):
            layer = dict(self.layers[d])
            for w, c in other.layers[d].items():
                layer[w] = layer.get(w, 0) + c
            out.append(layer)
        return GradedCharacter(self.rank, n, out)

    def __sub__(self, other: GradedCharacter) -> GradedCharacter:
        self._check(other)
        n = min(self.truncation, other.truncation)
        out = []
        for d in range(n + 1):
            layer = dict(self.layers[d])
            for w, c in other.layers[d].items():
                layer[w] = layer.get(w, 0) - c
            out.append(layer)
        return GradedCharacter(self.rank, n, out)

    def __mul__(self, other: GradedCharacter) -> GradedCharacter:
        return graded_mul(self, other)

    def _check(self, other: GradedCharacter) -> None:
        if self.rank != other.rank:
            raise ValueError(f"torus rank mismatch: {self.rank} vs {other.rank}")

    def to_records(self) -> list[dict]:
        """Stable machine-readable rows: one per (degree, weight) pair."""
        rows = []
        for n in range(self.truncation + 1):
            for w, c in sorted(self.layers[n].items()):
                rows.append({"degree": n, "weight": list(w), "multiplicity": c})
        return rows

    def __repr__(self) -> str:
        parts = [f"q^{n}:({self.layer(n)!r})" for n in range(self.truncation + 1) if self.layers[n]]
        return " + ".join(parts) if parts else "0"


def graded_mul(a: GradedCharacter, b: GradedCharacter) -> GradedCharacter:
    """Cauchy product of graded characters, truncated to the smaller operand."""
    if a.rank != b.rank:
        raise ValueError(f"torus rank mismatch: {a.rank} vs {b.rank}")
    n = min(a.truncation, b.truncation)
    out = [dict() for _ in range(n + 1)]
    for i in range(n + 1):
        ai = a.layers[i]
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b.layers[j]
            if not bj:
                continue
            layer = out[i + j]
            for w1, c1 in ai.items():
                for w2, c2 in bj.items():
                    key = wadd(w1, w2)
                    layer[key] = layer.get(key, 0) + c1 * c2
    return GradedCharacter(a.rank, n, out)


class IrrepSeries:
    """Truncated q-series whose layers are multiplicity maps on dominant
    highest-weight labels."""

    __slots__ = ("rank", "truncation", "layers")

    def __init__(self, rank: int, truncation: int, layers=None):
        self.rank = rank
        self.truncation = truncation
        self.layers: list[dict[Weight, int]] = []
        for n in range(truncation + 1):
            layer = {}
            if layers is not None and n < len(layers):
                layer = {tuple(w): int(c) for w, c in dict(layers[n]).items() if c}
            self.layers.append(layer)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IrrepSeries)
            and self.rank == other.rank
            and self.truncation == other.truncation
            and self.layers == other.layers
        )

    def to_records(self) -> list[dict]:
        rows = []
        for n in range(self.truncation + 1):
            for w, c in sorted(self.layers[n].items()):
                rows.append({"degree": n, "highest_weight": list(w), "multiplicity": c})
        return rows

    def __repr__(self) -> str:
        parts = []
        for n in range(self.truncation + 1):
            for w, c in sorted(self.layers[n].items()):
                parts.append(f"{c}*tau{list(w)}q^{n}")
        return " + ".join(parts) if parts else "0"


def irrep_dominant_weights(datum: RootDatum, lam: Weight) -> list[Weight]:
    """Dominant weights of the irreducible with highest weight `lam`."""
    return sorted(freudenthal_table(datum, lam))


def irreducible_character(datum: RootDatum, lam: Weight) -> TorusCharacter:
    """Full torus character of the irreducible with highest weight `lam`,
    assembled from Weyl-group-sum multiplicities spread over Weyl orbits."""
    if not datum.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    per_datum = _irrep_cache.setdefault(datum, {})
    cached = per_datum.get(lam)
    if cached is not None:
        return cached
    terms: dict[Weight, int] = {}
    for mu in irrep_dominant_weights(datum, lam):
        m = weyl_multiplicity(datum, lam, mu)
        if m:
            for nu in datum.weyl_orbit(mu):
                terms[nu] = m
    ch = TorusCharacter(datum.rank, terms)
    per_datum[lam] = ch
    return ch


def decompose_into_irreducibles(datum: RootDatum, ch: TorusCharacter) -> dict[Weight, int]:
    """Write a Weyl-invariant virtual character as an integer combination of
    irreducible characters by stripping maximal dominant support weights."""
    if ch.rank != datum.rank:
        raise ValueError(f"torus rank mismatch: {ch.rank} vs {datum.rank}")
    _validate_weyl_invariance(datum, ch)
    remaining = dict(ch.terms)
    out: dict[Weight, int] = {}
    while remaining:
        doms = [w for w in remaining if datum.is_dominant(w)]
        if not doms:
            raise AssertionError("invariant character with no dominant support weight")
        pick = _maximal_dominant(datum, doms)
        coeff = remaining[pick]
        for w, c in irreducible_character(datum, pick).terms.items():
            v = remaining.get(w, 0) - coeff * c
            if v:
                remaining[w] = v
            else:
                remaining.pop(w, None)
        out[pick] = out.get(pick, 0) + coeff
    return {w: c for w, c in out.items() if c}


def _maximal_dominant(datum: RootDatum, doms: list[Weight]) -> Weight:
    """Root-order-maximal dominant weight, lexicographically largest on ties."""
    maximal = []
    for d in doms:
        if not any(_root_order_above(datum, other, d) for other in doms if other != d):
            maximal.append(d)
    return max(maximal)


def _root_order_above(datum: RootDatum, a: Weight, b: Weight) -> bool:
    """True when a - b is a non-zero, non-negative root-lattice combination."""
    rc = datum.root_coords_int(tuple(x - y for x, y in zip(a, b)))
    return rc is not None and any(rc) and all(v >= 0 for v in rc)


def _validate_weyl_invariance(datum: RootDatum, ch: TorusCharacter) -> None:
    checked: set[Weight] = set()
    for w, c in ch.terms.items():
        if w in checked:
            continue
        orbit = datum.weyl_orbit(w)
        checked |= orbit
        vals = {ch.terms.get(v, 0) for v in orbit}
        if len(vals) != 1:
            raise ValueError(
                f"character is not Weyl-invariant on the orbit of {w}: multiplicities {sorted(vals)}"
            )


def restrict_character(ch: TorusCharacter, rmatrix) -> TorusCharacter:
    """Push a character forward along an integer lattice map (rows index the
    target coordinates); colliding weights add."""
    rows = tuple(tuple(int(v) for v in row) for row in rmatrix)
    target_rank = len(rows)
    for row in rows:
        if len(row) != ch.rank:
            raise ValueError(
                f"restriction matrix expects source rank {len(row)}, character has rank {ch.rank}"
            )
    out: dict[Weight, int] = {}
    for w, c in ch.terms.items():
        key = mat_apply(rows, w)
        out[key] = out.get(key, 0) + c
    return TorusCharacter(target_rank, out)


def restrict_graded(gc: GradedCharacter, rmatrix) -> GradedCharacter:
    rows = tuple(tuple(int(v) for v in row) for row in rmatrix)
    layers = [restrict_character(gc.layer(n), rows).terms for n in range(gc.truncation + 1)]
    return GradedCharacter(len(rows), gc.truncation, layers)


def expand_irrep_series(datum: RootDatum, series: IrrepSeries) -> GradedCharacter:
    """Expand highest-weight labels through their full torus characters."""
    layers = []
    for n in range(series.truncation + 1):
        acc: dict[Weight, int] = {}
        for lam, c in series.layers[n].items():
            for w, m in irreducible_character(datum, lam).terms.items():
                acc[w] = acc.get(w, 0) + c * m
        layers.append(acc)
    return GradedCharacter(datum.rank, series.truncation, layers)
