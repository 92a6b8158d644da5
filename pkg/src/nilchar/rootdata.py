"""Root data, Weyl groups, and Cartan-involution bookkeeping.

Weights are plain integer tuples. For a datum built from a Cartan matrix the
coordinates are taken in the basis of fundamental weights, so dominance and
coroot pairings are coordinate reads. A datum may also be constructed from
explicit simple (co)roots on an arbitrary lattice, which covers reductive
groups with central tori (e.g. GL2) and pure torus factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

WEYL_GROUP_CAP = 10_000_000


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wscale(k: int, a: Weight) -> Weight:
    return tuple(k * x for x in a)


def wdot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def mat_apply(m: Matrix, w: Weight) -> Weight:
    return tuple(wdot(row, w) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(wdot(row, col) for col in bt) for row in a)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word, action matrix, and length."""

    word: tuple[int, ...]
    matrix: Matrix
    length: int

    def act(self, w: Weight) -> Weight:
        return mat_apply(self.matrix, w)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1


def _validate_cartan_shape(cartan) -> list[list[int]]:
    rows = [list(r) for r in cartan]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("Cartan matrix must be square and non-empty")
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if v != int(v):
                raise ValueError(f"Cartan entry ({i},{j}) is not an integer")
            if i == j and v != 2:
                raise ValueError(f"Cartan diagonal entry ({i},{i}) = {v}, expected 2")
            if i != j:
                if v > 0:
                    raise ValueError(f"Cartan off-diagonal entry ({i},{j}) = {v} is positive")
                if (rows[i][j] == 0) != (rows[j][i] == 0):
                    raise ValueError(f"Cartan entries ({i},{j}) and ({j},{i}) disagree on zero")
    return [[int(v) for v in r] for r in rows]


def _symmetrizer(cartan: list[list[int]]) -> list[Fraction]:
    """Positive values d with d[i]*a[i][j] symmetric; short roots scaled to d=1
    per connected component."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    comps: list[list[int]] = []
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i == j or cartan[i][j] == 0:
                    continue
                dj = d[i] * Fraction(cartan[i][j], cartan[j][i])
                if d[j] is None:
                    d[j] = dj
                    comp.append(j)
                    queue.append(j)
                elif d[j] != dj:
                    raise ValueError("Cartan matrix is not symmetrizable")
        comps.append(comp)
    for comp in comps:
        m = min(d[i] for i in comp)
        if m <= 0:
            raise ValueError("Cartan symmetrizer is not positive")
        for i in comp:
            d[i] = d[i] / m
    return [x for x in d]  # type: ignore[misc]


def _check_positive_definite(g: list[list[Fraction]]) -> None:
    """Leading-principal-minor test, exact arithmetic."""
    n = len(g)
    a = [row[:] for row in g]
    for k in range(n):
        piv = a[k][k]
        if piv <= 0:
            raise ValueError(
                "Cartan matrix is not of finite type (symmetrized form not positive definite)"
            )
        for i in range(k + 1, n):
            f = a[i][k] / piv
            for j in range(k, n):
                a[i][j] -= f * a[k][j]


class RootDatum:
    """Immutable root datum: simple (co)roots on a fixed lattice plus every
    derived structure (positive roots, 2*rho, Weyl group, invariant form).

    Use :func:`build_root_datum` for the canonical fundamental-weight
    realization of a Cartan matrix, or :func:`reductive_root_datum` for
    explicit (co)roots on an arbitrary lattice.
    """

    def __init__(self, rank: int, simple_roots, simple_coroots):
        if rank <= 0:
            raise ValueError("rank must be positive")
        roots = tuple(tuple(int(x) for x in r) for r in simple_roots)
        coroots = tuple(tuple(int(x) for x in c) for c in simple_coroots)
        if len(roots) != len(coroots):
            raise ValueError("simple roots and coroots must come in equal numbers")
        for v in roots + coroots:
            if len(v) != rank:
                raise ValueError("simple (co)root length does not match rank")
        self.rank = rank
        self.simple_roots = roots
        self.simple_coroots = coroots
        self.nsimple = len(roots)

        # Cartan matrix a[i][j] = <alpha_j, alpha_i^vee>, then finite-type checks.
        cartan = [[wdot(roots[j], coroots[i]) for j in range(self.nsimple)] for i in range(self.nsimple)]
        if self.nsimple:
            cartan = _validate_cartan_shape(cartan)
            self._sym_d = _symmetrizer(cartan)
            _check_positive_definite(
                [[self._sym_d[i] * cartan[i][j] for j in range(self.nsimple)] for i in range(self.nsimple)]
            )
        else:
            self._sym_d = []
        self.cartan_matrix = tuple(tuple(r) for r in cartan)

        self._root_solver = _LatticeSolver(roots, rank)
        if any(self.root_coords(r) is None for r in roots):
            raise ValueError("simple roots must be linearly independent")

        self.positive_roots, self.positive_coroots = self._close_positive_roots()
        two_rho = (0,) * rank
        for r in self.positive_roots:
            two_rho = wadd(two_rho, r)
        self.two_rho = two_rho

        self._weyl: tuple[WeylElement, ...] | None = None

    # -- basic pairings ----------------------------------------------------

    def pairing(self, weight: Weight, coweight) -> int:
        """<weight, coweight> with the coweight in dual coordinates."""
        return wdot(weight, coweight)

    def is_dominant(self, weight: Weight) -> bool:
        return all(wdot(weight, c) >= 0 for c in self.simple_coroots)

    def root_coords(self, weight: Weight) -> tuple[Fraction, ...] | None:
        """Coordinates of `weight` in the simple-root basis, or None if the
        weight is outside the rational root span."""
        return self._root_solver.solve(weight)

    def root_coords_int(self, weight: Weight) -> tuple[int, ...] | None:
        """Integer simple-root coordinates, or None when not in the root lattice."""
        return self._root_solver.solve_int(weight)

    def height(self, weight: Weight) -> int:
        rc = self.root_coords_int(weight)
        if rc is None:
            raise ValueError(f"weight {weight} is not in the root lattice")
        return sum(rc)

    @property
    def max_root_height(self) -> int:
        if not self.positive_roots:
            return 0
        return max(self.height(r) for r in self.positive_roots)

    # -- reflections and the Weyl group ------------------------------------

    def reflect(self, i: int, weight: Weight) -> Weight:
        p = wdot(weight, self.simple_coroots[i])
        return wsub(weight, wscale(p, self.simple_roots[i]))

    def simple_reflection_matrix(self, i: int) -> Matrix:
        alpha, cov = self.simple_roots[i], self.simple_coroots[i]
        return tuple(
            tuple((1 if k == j else 0) - alpha[k] * cov[j] for j in range(self.rank))
            for k in range(self.rank)
        )

    def weyl_group(self, cap: int = WEYL_GROUP_CAP) -> tuple[WeylElement, ...]:
        """All Weyl group elements with reduced words, by breadth-first closure."""
        if self._weyl is not None:
            return self._weyl
        ident = WeylElement((), identity_matrix(self.rank), 0)
        seen: dict[Matrix, WeylElement] = {ident.matrix: ident}
        gens = [self.simple_reflection_matrix(i) for i in range(self.nsimple)]
        frontier = [ident]
        while frontier:
            new: list[WeylElement] = []
            for w in frontier:
                for i, g in enumerate(gens):
                    m = mat_mul(w.matrix, g)
                    if m not in seen:
                        el = WeylElement(w.word + (i,), m, w.length + 1)
                        seen[m] = el
                        new.append(el)
                        if len(seen) > cap:
                            raise ValueError(
                                f"Weyl group exceeds cap of {cap} elements; input is not finite type"
                            )
            frontier = new
        self._weyl = tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))
        return self._weyl

    def longest_element(self) -> WeylElement:
        return self.weyl_group()[-1]

    def inversions(self, w: WeylElement) -> int:
        """#{alpha > 0 : w(alpha) < 0}; equals w.length for finite type."""
        count = 0
        pos = set(self.positive_roots)
        for r in self.positive_roots:
            if wneg(w.act(r)) in pos:
                count += 1
        return count

    def dominant_rep(self, weight: Weight) -> Weight:
        """The dominant Weyl-orbit representative."""
        w = weight
        while True:
            for i in range(self.nsimple):
                if wdot(w, self.simple_coroots[i]) < 0:
                    w = self.reflect(i, w)
                    break
            else:
                return w

    def weyl_orbit(self, weight: Weight) -> set[Weight]:
        orbit = {weight}
        frontier = [weight]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.nsimple):
                    im = self.reflect(i, w)
                    if im not in orbit:
                        orbit.add(im)
                        nxt.append(im)
            frontier = nxt
        return orbit

    # -- invariant inner product -------------------------------------------

    def inner(self, x: Weight, y: Weight) -> Fraction:
        """W-invariant symmetric form: short simple roots have squared length 2
        on each simple factor; Euclidean on the coroot-kernel (toral) part."""
        gram, den = self._gram()
        num = 0
        for i, xi in enumerate(x):
            if xi:
                row = gram[i]
                num += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return Fraction(num, den)

    def _gram(self):
        cached = getattr(self, "_gram_cache", None)
        if cached is None:
            basis = [tuple(1 if k == i else 0 for k in range(self.rank)) for i in range(self.rank)]
            entries = [[self._inner_slow(basis[i], basis[j]) for j in range(self.rank)] for i in range(self.rank)]
            den = 1
            for row in entries:
                for v in row:
                    den = lcm(den, v.denominator)
            cached = ([[int(v * den) for v in row] for row in entries], den)
            self._gram_cache = cached
        return cached

    def _inner_slow(self, x: Weight, y: Weight) -> Fraction:
        mx = self._root_span_coords(x)
        my = self._root_span_coords(y)
        val = Fraction(0)
        for i in range(self.nsimple):
            val += mx[i] * self._sym_d[i] * wdot(y, self.simple_coroots[i])
        xf = wsub_frac(x, [sum(mx[j] * Fraction(self.simple_roots[j][k]) for j in range(self.nsimple)) for k in range(self.rank)])
        yf = wsub_frac(y, [sum(my[j] * Fraction(self.simple_roots[j][k]) for j in range(self.nsimple)) for k in range(self.rank)])
        val += sum(a * b for a, b in zip(xf, yf))
        return val

    def _root_span_coords(self, x: Weight) -> list[Fraction]:
        """Coefficients m with x - sum(m_j alpha_j) in the coroot kernel."""
        if not self.nsimple:
            return []
        p = [Fraction(wdot(x, c)) for c in self.simple_coroots]
        return self._cartan_solver().solve_list(p)

    def _cartan_solver(self) -> _SquareSolver:
        sol = getattr(self, "_cartan_solver_cache", None)
        if sol is None:
            sol = _SquareSolver([[Fraction(v) for v in row] for row in self.cartan_matrix])
            self._cartan_solver_cache = sol
        return sol

    def weyl_dimension(self, lam: Weight) -> int:
        """Dimension of the irreducible with highest weight `lam` (product formula)."""
        if not self.is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        num = Fraction(1)
        lam_rho2 = wadd(wscale(2, lam), self.two_rho)
        for cov in self.positive_coroots:
            num *= Fraction(wdot(lam_rho2, cov), wdot(self.two_rho, cov))
        assert num.denominator == 1
        return int(num)

    # -- internals ----------------------------------------------------------

    def _close_positive_roots(self):
        pos: dict[Weight, Weight] = {}
        for r, c in zip(self.simple_roots, self.simple_coroots):
            pos[r] = c
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for beta in frontier:
                cov = pos[beta]
                for i in range(self.nsimple):
                    if beta == self.simple_roots[i]:
                        continue
                    im = self.reflect(i, beta)
                    if im in pos:
                        continue
                    rc = self.root_coords_int(im)
                    if rc is None or any(v < 0 for v in rc):
                        raise ValueError("positive-root closure escaped the positive cone")
                    imcov = wsub(cov, wscale(wdot(self.simple_roots[i], cov), self.simple_coroots[i]))
                    pos[im] = imcov
                    nxt.append(im)
                    if len(pos) > 100_000:
                        raise ValueError("positive-root closure did not terminate; not finite type")
            frontier = nxt
        ordered = sorted(pos, key=lambda r: (self.height(r), r))
        return tuple(ordered), tuple(pos[r] for r in ordered)

    def __repr__(self) -> str:
        return f"RootDatum(rank={self.rank}, positive_roots={len(self.positive_roots)})"


def wsub_frac(x: Weight, y) -> list[Fraction]:
    return [Fraction(a) - b for a, b in zip(x, y)]


class _SquareSolver:
    """Exact solver for a fixed invertible square matrix."""

    def __init__(self, matrix: list[list[Fraction]]):
        n = len(matrix)
        aug = [row[:] + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(matrix)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [v / pv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        self.inverse = [row[len(matrix):] for row in aug]

    def solve_list(self, rhs: list[Fraction]) -> list[Fraction]:
        return [sum(a * b for a, b in zip(row, rhs)) for row in self.inverse]


class _LatticeSolver:
    """Solves sum_j m_j v_j = target exactly for independent vectors v_j."""

    def __init__(self, vectors, dim: int):
        self.vectors = vectors
        self.dim = dim
        self.n = len(vectors)
        self._rows: list[int] = []
        self._sub: _SquareSolver | None = None
        if self.n:
            # Greedily pick coordinate rows on which the vectors are invertible.
            work: list[list[Fraction]] = []
            for r in range(dim):
                cand = [Fraction(v[r]) for v in vectors]
                if _rank(work + [cand]) == len(work) + 1:
                    work.append(cand)
                    self._rows.append(r)
                    if len(self._rows) == self.n:
                        break
            if len(self._rows) != self.n:
                raise ValueError("vectors are not linearly independent")
            self._sub = _SquareSolver([[Fraction(vectors[j][r]) for j in range(self.n)] for r in self._rows])
            # Integerized inverse rows: m_i = dot(int_row_i, rhs) / den_i.
            self._int_rows = []
            self._int_dens = []
            for row in self._sub.inverse:
                den = 1
                for v in row:
                    den = lcm(den, v.denominator)
                self._int_rows.append([int(v * den) for v in row])
                self._int_dens.append(den)

    def solve(self, target: Weight) -> tuple[Fraction, ...] | None:
        if self.n == 0:
            return () if all(v == 0 for v in target) else None
        rhs = [Fraction(target[r]) for r in self._rows]
        m = self._sub.solve_list(rhs)
        for k in range(self.dim):
            if sum(m[j] * self.vectors[j][k] for j in range(self.n)) != target[k]:
                return None
        return tuple(m)

    def solve_int(self, target: Weight) -> tuple[int, ...] | None:
        """Integer solution, or None when none exists (pure int arithmetic)."""
        if self.n == 0:
            return () if all(v == 0 for v in target) else None
        rhs = [target[r] for r in self._rows]
        m = []
        for row, den in zip(self._int_rows, self._int_dens):
            num = sum(a * b for a, b in zip(row, rhs))
            if num % den:
                return None
            m.append(num // den)
        vectors = self.vectors
        for k in range(self.dim):
            if sum(m[j] * vectors[j][k] for j in range(self.n)) != target[k]:
                return None
        return tuple(m)


def _rank(rows: list[list[Fraction]]) -> int:
    m = [r[:] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [v / pv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def build_root_datum(cartan_matrix) -> RootDatum:
    """Canonical realization of a Cartan matrix on the fundamental-weight
    lattice: simple root j is column j of the matrix, coroot i is e_i."""
    rows = _validate_cartan_shape(cartan_matrix)
    n = len(rows)
    simple_roots = [tuple(rows[i][j] for i in range(n)) for j in range(n)]
    simple_coroots = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    return RootDatum(n, simple_roots, simple_coroots)


def reductive_root_datum(rank: int, simple_roots, simple_coroots) -> RootDatum:
    """Datum with explicit (co)roots on a rank-`rank` lattice; the root count
    may be smaller than the rank (central torus directions)."""
    return RootDatum(rank, simple_roots, simple_coroots)


def torus_datum(rank: int) -> RootDatum:
    """Pure torus: no roots at all."""
    return RootDatum(rank, (), ())


@dataclass(frozen=True)
class InvolutionData:
    """A lattice involution plus compact markings of imaginary roots.

    `compact` holds the imaginary roots marked compact (closed under negation;
    unmarked imaginary roots are noncompact).
    """

    matrix: Matrix
    compact: frozenset[Weight]

    def __init__(self, matrix, compact=()):
        m = tuple(tuple(int(v) for v in row) for row in matrix)
        n = len(m)
        if any(len(r) != n for r in m):
            raise ValueError("involution matrix must be square")
        if mat_mul(m, m) != identity_matrix(n):
            raise ValueError("involution matrix must square to the identity")
        marks = set()
        for w in compact:
            marks.add(tuple(int(v) for v in w))
        for w in list(marks):
            marks.add(wneg(w))
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "compact", frozenset(marks))

    def act(self, w: Weight) -> Weight:
        return mat_apply(self.matrix, w)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def fixed_rank(self) -> int:
        """Dimension of the +1 eigenspace (trace trick for involutions)."""
        tr = sum(self.matrix[i][i] for i in range(self.rank))
        return (self.rank + tr) // 2


@dataclass(frozen=True)
class RootClassification:
    imaginary_compact: tuple[Weight, ...]
    imaginary_noncompact: tuple[Weight, ...]
    real: tuple[Weight, ...]
    complex_: tuple[Weight, ...]

    @property
    def imaginary(self) -> tuple[Weight, ...]:
        return self.imaginary_compact + self.imaginary_noncompact


def classify_roots(datum: RootDatum, inv: InvolutionData) -> RootClassification:
    """Partition all roots into imaginary compact/noncompact, real, complex."""
    if inv.rank != datum.rank:
        raise ValueError("involution rank does not match the root datum")
    allroots = [r for r in datum.positive_roots] + [wneg(r) for r in datum.positive_roots]
    rootset = set(allroots)
    comp, noncomp, real, cplx = [], [], [], []
    for r in allroots:
        im = inv.act(r)
        if im not in rootset:
            raise ValueError(f"involution does not permute the roots (image of {r} is {im})")
        if im == r:
            (comp if r in inv.compact else noncomp).append(r)
        elif im == wneg(r):
            real.append(r)
        else:
            cplx.append(r)
    stray = inv.compact - set(comp)
    if stray:
        raise ValueError(f"compact marks are not imaginary roots: {sorted(stray)}")
    return RootClassification(tuple(comp), tuple(noncomp), tuple(real), tuple(cplx))


def dominant_weights_up_to_height(datum: RootDatum, bound: int) -> list[Weight]:
    """Dominant root-lattice weights of height <= bound, sorted by (height, lex)."""
    if bound < 0:
        return []
    out = []
    for total in range(bound + 1):
        for m in _compositions(total, datum.nsimple):
            w = (0,) * datum.rank
            for j, mj in enumerate(m):
                w = wadd(w, wscale(mj, datum.simple_roots[j]))
            if datum.is_dominant(w):
                out.append((total, w))
    seen = set()
    result = []
    for total, w in sorted(out):
        if w not in seen:
            seen.add(w)
            result.append(w)
    return result


def _compositions(total: int, parts: int):
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
