"""Graded matrices over a graded-commutative coefficient algebra.

A matrix carries a grading vector over its indices; entries are elements of
a coefficient word algebra (possibly trivial, i.e. plain scalars).  Products
use the Koszul rule for matrix units with odd entries,

    (E_pq (x) m)(E_rs (x) n) = delta_qr E_ps (x) (-1)^(|m| (g_r + g_s)) m n,

the supertrace is the sign-weighted diagonal sum, and two differentials are
available: the inner one  ad_s(N)  for an odd square-zero matrix N, and the
entrywise lift of a coefficient derivation (with the matrix-unit sign).
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .errors import AlgebraMismatch, DimensionMismatch, NonHomogeneous
from .ncalg import Algebra, GradedElement, apply_derivation
from .scalars import Scalar


def trivial_algebra() -> Algebra:
    """Coefficient algebra with no generators: plain exact scalars."""
    return Algebra([], {})


class GradedMatrix:
    """Square matrix over GradedElement entries with a fixed index grading."""

    __slots__ = ("coeff", "grading", "entries")

    def __init__(self, coeff: Algebra, grading: Sequence[int],
                 entries: Mapping[tuple[int, int], GradedElement] | None = None):
        self.coeff = coeff
        self.grading = tuple(g % 2 for g in grading)
        self.entries: dict[tuple[int, int], GradedElement] = {}
        if entries:
            for (i, j), v in entries.items():
                if not v.is_zero():
                    self.entries[(i, j)] = v

    @property
    def size(self) -> int:
        return len(self.grading)

    # -------- constructors --------

    @staticmethod
    def zeros(coeff: Algebra, grading: Sequence[int]) -> "GradedMatrix":
        return GradedMatrix(coeff, grading)

    @staticmethod
    def identity(coeff: Algebra, grading: Sequence[int]) -> "GradedMatrix":
        one = coeff.one()
        return GradedMatrix(coeff, grading,
                            {(i, i): one for i in range(len(grading))})

    @staticmethod
    def from_scalar_rows(coeff: Algebra, grading: Sequence[int],
                         rows: Sequence[Sequence[Scalar | int]]) -> "GradedMatrix":
        entries = {}
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                s = Scalar.integer(v) if isinstance(v, int) else v
                if not s.is_zero():
                    entries[(i, j)] = coeff.one().smul(s)
        return GradedMatrix(coeff, grading, entries)

    def _check(self, other: "GradedMatrix"):
        if self.coeff is not other.coeff or self.grading != other.grading:
            if self.grading != getattr(other, "grading", None):
                raise DimensionMismatch("matrix shapes or gradings differ")
            raise AlgebraMismatch("matrices over different coefficient algebras")

    # -------- linear structure --------

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        acc = dict(self.entries)
        for k, v in other.entries.items():
            w = acc.get(k)
            s = v if w is None else w + v
            if s.is_zero():
                acc.pop(k, None)
            else:
                acc[k] = s
        return GradedMatrix(self.coeff, self.grading, acc)

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix(self.coeff, self.grading,
                            {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        return self + (-other)

    def smul(self, s: Scalar) -> "GradedMatrix":
        return GradedMatrix(self.coeff, self.grading,
                            {k: v.smul(s) for k, v in self.entries.items()})

    def cmul(self, c: GradedElement) -> "GradedMatrix":
        """Multiply every entry by a central coefficient on the left."""
        return GradedMatrix(self.coeff, self.grading,
                            {k: c * v for k, v in self.entries.items()})

    # -------- multiplication --------

    def _twist(self, v: GradedElement, eps: int) -> GradedElement:
        """Negate the odd-parity part of v when eps is odd."""
        if eps % 2 == 0:
            return v
        alg = v.algebra
        return GradedElement(
            alg,
            {w: (-c if alg.word_parity(w) else c) for w, c in v.terms.items()},
            normalized=True)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.smul(other)
        if isinstance(other, int):
            return self.smul(Scalar.integer(other))
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check(other)
        acc: dict[tuple[int, int], GradedElement] = {}
        for (p, q), m in self.entries.items():
            for (r, s), n in other.entries.items():
                if q != r:
                    continue
                term = self._twist(m, self.grading[r] + self.grading[s]) * n
                if term.is_zero():
                    continue
                cur = acc.get((p, s))
                tot = term if cur is None else cur + term
                if tot.is_zero():
                    acc.pop((p, s), None)
                else:
                    acc[(p, s)] = tot
        return GradedMatrix(self.coeff, self.grading, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GradedMatrix":
        out = GradedMatrix.identity(self.coeff, self.grading)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.grading == other.grading and self.coeff is other.coeff
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.grading, frozenset(
            (k, frozenset(v.terms.items())) for k, v in self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries

    # -------- grading --------

    def total_parity(self) -> int | None:
        """Total parity (block plus coefficient) if homogeneous, else None."""
        ps = set()
        for (i, j), v in self.entries.items():
            for w in v.terms:
                ps.add((v.algebra.word_parity(w) + self.grading[i] + self.grading[j]) % 2)
        if not ps:
            return 0
        if len(ps) > 1:
            return None
        return ps.pop()

    def parity_part(self, parity: int) -> "GradedMatrix":
        out = {}
        for (i, j), v in self.entries.items():
            alg = v.algebra
            kept = {w: c for w, c in v.terms.items()
                    if (alg.word_parity(w) + self.grading[i] + self.grading[j]) % 2 == parity % 2}
            if kept:
                out[(i, j)] = GradedElement(alg, kept, normalized=True)
        return GradedMatrix(self.coeff, self.grading, out)

    def supertrace(self) -> GradedElement:
        acc = self.coeff.zero()
        for i in range(self.size):
            v = self.entries.get((i, i))
            if v is not None:
                acc = acc + (v if self.grading[i] == 0 else -v)
        return acc

    # -------- differentials --------

    def super_commutator_with(self, n: "GradedMatrix") -> "GradedMatrix":
        """[n, self] with n odd: n x - (-1)^{|x|} x n, per parity part."""
        even, odd = self.parity_part(0), self.parity_part(1)
        return n * even - even * n + n * odd + odd * n

    def coeff_d(self, rule, parity_of_derivation: int = 1,
                gauss_rule=None) -> "GradedMatrix":
        out = {}
        for (i, j), v in self.entries.items():
            dv = apply_derivation(rule, parity_of_derivation, v, gauss_rule)
            if (self.grading[i] + self.grading[j]) % 2:
                dv = -dv
            if not dv.is_zero():
                out[(i, j)] = dv
        return GradedMatrix(self.coeff, self.grading, out)

    def __str__(self) -> str:
        rows = []
        for i in range(self.size):
            row = []
            for j in range(self.size):
                v = self.entries.get((i, j))
                row.append("0" if v is None else str(v))
            rows.append("[" + ", ".join(row) + "]")
        return "[" + "; ".join(rows) + "]"

    __repr__ = __str__
