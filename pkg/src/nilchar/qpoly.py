"""Integer polynomials in the grading variable q, exact arithmetic only."""

from __future__ import annotations


class QPolynomial:
    """Sparse integer polynomial in q with non-negative exponents.

    Zero coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        cleaned: dict[int, int] = {}
        if coeffs:
            for deg, c in dict(coeffs).items():
                if deg < 0:
                    raise ValueError("negative q-degree")
                if c:
                    cleaned[int(deg)] = int(c)
        self.coeffs = cleaned

    @classmethod
    def from_list(cls, coeff_list) -> QPolynomial:
        return cls({d: c for d, c in enumerate(coeff_list) if c})

    @classmethod
    def zero(cls) -> QPolynomial:
        return cls()

    @classmethod
    def one(cls) -> QPolynomial:
        return cls({0: 1})

    @classmethod
    def q_power(cls, n: int, coeff: int = 1) -> QPolynomial:
        return cls({n: coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: QPolynomial) -> QPolynomial:
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return QPolynomial(out)

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) - c
        return QPolynomial(out)

    def __neg__(self) -> QPolynomial:
        return QPolynomial({d: -c for d, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({d: c * other for d, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def scale(self, k: int) -> QPolynomial:
        return self * k

    def shift(self, n: int) -> QPolynomial:
        """Multiply by q^n."""
        return QPolynomial({d + n: c for d, c in self.coeffs.items()})

    def coefficient(self, deg: int) -> int:
        return self.coeffs.get(deg, 0)

    def truncate(self, max_deg: int) -> QPolynomial:
        return QPolynomial({d: c for d, c in self.coeffs.items() if d <= max_deg})

    def eval_at_one(self) -> int:
        return sum(self.coeffs.values())

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    @property
    def min_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else -1

    def items(self):
        return sorted(self.coeffs.items())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in self.items():
            if d == 0:
                parts.append(str(c))
            else:
                q = "q" if d == 1 else f"q^{d}"
                if c == 1:
                    parts.append(q)
                elif c == -1:
                    parts.append(f"-{q}")
                else:
                    parts.append(f"{c}*{q}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out
