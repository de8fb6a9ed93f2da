"""Free graded (super)algebras over exact scalars.

Words in a graded alphabet are multiplied by concatenation and rewritten to a
sector-sorted normal form: the alphabet is partitioned into ordered sectors
(e.g. an endomorphism sector before a base-form sector), letters from distinct
sectors are transposed with Koszul signs, and within a sector a fixed rule
family applies:

  free        no relations (letters keep their order)
  symmetric   even letters, commute, sorted; optional degree cap
  grassmann   odd letters, anticommute, squares vanish
  clifford    odd letters, anticommute, squares equal 1
  car         wedge/contraction pairs w_i, c_i with  c_i w_i = 1 - w_i c_i,
              distinct letters anticommute, squares vanish

A designated central Gaussian atom G(q), standing for exp(-q*scale*|x|^2),
may be adjoined; adjacent atoms merge by adding their parameters.  Every rule
strictly decreases a well-founded word order, so rewriting terminates, and
the resulting normal forms make equality a term-map comparison.

Elements are immutable; algebra descriptors are frozen after construction,
so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    AlgebraMismatch,
    NonHomogeneous,
    NotNilpotentWithinBound,
    ParseError,
    UndefinedOnGenerator,
)
from .scalars import Scalar

# a letter is a generator name, or ("G", q) for the Gaussian atom
Letter = object
Word = tuple

KINDS = ("free", "symmetric", "grassmann", "clifford", "car", "gauss")


@dataclass(frozen=True)
class Generator:
    name: str
    zdegree: int
    sector: str

    @property
    def parity(self) -> int:
        return self.zdegree % 2


@dataclass(frozen=True)
class Sector:
    name: str
    kind: str
    generators: tuple[str, ...]
    degree_cap: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sector kind {self.kind!r}")


class Algebra:
    """Descriptor: ordered sectors of generators plus their rewrite family."""

    def __init__(self, sectors: Sequence[Sector], degrees: Mapping[str, int],
                 gauss_scale: Scalar | None = None):
        self.sectors = tuple(sectors)
        self.gauss_scale = gauss_scale
        self._info: dict[str, tuple[int, int, int, str]] = {}
        seen: set[str] = set()
        for si, sec in enumerate(self.sectors):
            for gi, name in enumerate(sec.generators):
                if name in seen:
                    raise ValueError(f"duplicate generator {name!r}")
                seen.add(name)
                deg = degrees[name]
                if sec.kind == "symmetric" and deg % 2 != 0:
                    raise ValueError(f"symmetric-sector generator {name!r} must be even")
                if sec.kind in ("grassmann", "clifford") and deg % 2 != 1:
                    raise ValueError(f"{sec.kind}-sector generator {name!r} must be odd")
                self._info[name] = (si, gi, deg, sec.kind)
        self._gauss_sector = None
        for si, sec in enumerate(self.sectors):
            if sec.kind == "gauss":
                self._gauss_sector = si
        self._norm_cache: dict[Word, dict[Word, int]] = {}

    # -------- letter metadata --------

    def is_gauss(self, letter) -> bool:
        return isinstance(letter, tuple) and len(letter) == 2 and letter[0] == "G"

    def sector_index(self, letter) -> int:
        if self.is_gauss(letter):
            if self._gauss_sector is None:
                raise UndefinedOnGenerator("algebra has no Gaussian sector")
            return self._gauss_sector
        try:
            return self._info[letter][0]
        except KeyError:
            raise UndefinedOnGenerator(f"unknown generator {letter!r}") from None

    def letter_index(self, letter) -> int:
        return 0 if self.is_gauss(letter) else self._info[letter][1]

    def zdegree(self, letter) -> int:
        return 0 if self.is_gauss(letter) else self._info[letter][2]

    def parity(self, letter) -> int:
        return self.zdegree(letter) % 2

    def kind(self, letter) -> str:
        return "gauss" if self.is_gauss(letter) else self._info[letter][3]

    def word_zdegree(self, word: Word) -> int:
        return sum(self.zdegree(l) for l in word)

    def word_parity(self, word: Word) -> int:
        return self.word_zdegree(word) % 2

    def sector_zdegree(self, word: Word, sector_index: int) -> int:
        return sum(self.zdegree(l) for l in word
                   if self.sector_index(l) == sector_index)

    # -------- normalization --------

    def _over_cap(self, word: Word) -> bool:
        for si, sec in enumerate(self.sectors):
            if sec.degree_cap is not None and self.sector_zdegree(word, si) > sec.degree_cap:
                return True
        return False

    def _reduce_step(self, word: Word, rightmost: bool = False):
        """First applicable rewrite: None if normal, else list of (word, sign)."""
        positions = range(len(word) - 1)
        if rightmost:
            positions = reversed(positions)
        for i in positions:
            a, b = word[i], word[i + 1]
            sa, sb = self.sector_index(a), self.sector_index(b)
            if sa > sb:
                sign = -1 if (self.parity(a) & self.parity(b)) else 1
                return [(word[:i] + (b, a) + word[i + 2:], sign)]
            if sa != sb:
                continue
            kind = self.kind(a)
            if kind == "free":
                continue
            if kind == "gauss":
                q = a[1] + b[1]
                mid = () if q == 0 else ((("G", q),))
                return [(word[:i] + mid + word[i + 2:], 1)]
            ia, ib = self.letter_index(a), self.letter_index(b)
            if kind == "symmetric":
                if ia > ib:
                    return [(word[:i] + (b, a) + word[i + 2:], 1)]
                continue
            if kind == "grassmann":
                if a == b:
                    return []  # zero
                if ia > ib:
                    return [(word[:i] + (b, a) + word[i + 2:], -1)]
                continue
            if kind == "clifford":
                if a == b:
                    return [(word[:i] + word[i + 2:], 1)]
                if ia > ib:
                    return [(word[:i] + (b, a) + word[i + 2:], -1)]
                continue
            if kind == "car":
                # letter order: all w's before all c's; letter_index encodes that
                if a == b:
                    return []  # w^2 = c^2 = 0
                ra, rb = self._car_role(a), self._car_role(b)
                if ra == "c" and rb == "w":
                    if self._car_pair(a) == self._car_pair(b):
                        # c w -> 1 - w c
                        return [(word[:i] + word[i + 2:], 1),
                                (word[:i] + (b, a) + word[i + 2:], -1)]
                    return [(word[:i] + (b, a) + word[i + 2:], -1)]
                if ra == rb and ia > ib:
                    return [(word[:i] + (b, a) + word[i + 2:], -1)]
                continue
        return None

    def _car_role(self, letter: str) -> str:
        return "w" if letter.startswith("w") else "c"

    def _car_pair(self, letter: str) -> str:
        return letter[1:]

    def normalize(self, word: Word, rightmost: bool = False) -> dict[Word, int]:
        """Normal form of a single word as a map word -> integer sign."""
        word = tuple(word)
        if not rightmost:
            cached = self._norm_cache.get(word)
            if cached is not None:
                return dict(cached)
        out: dict[Word, int] = {}
        stack: list[tuple[Word, int]] = [(word, 1)]
        while stack:
            w, s = stack.pop()
            if self._over_cap(w):
                continue
            step = self._reduce_step(w, rightmost)
            if step is None:
                out[w] = out.get(w, 0) + s
                if out[w] == 0:
                    del out[w]
                continue
            for w2, sign in step:
                stack.append((w2, s * sign))
        if not rightmost and len(self._norm_cache) < 200_000:
            self._norm_cache[word] = dict(out)
        return out

    # -------- element constructors --------

    def zero(self) -> "GradedElement":
        return GradedElement(self, {})

    def one(self) -> "GradedElement":
        return GradedElement(self, {(): Scalar.one()})

    def gen(self, name: str) -> "GradedElement":
        if name not in self._info:
            raise UndefinedOnGenerator(f"unknown generator {name!r}")
        return GradedElement(self, {(name,): Scalar.one()})

    def gauss(self, q) -> "GradedElement":
        q = Fraction(q)
        if self._gauss_sector is None:
            raise UndefinedOnGenerator("algebra has no Gaussian sector")
        if q == 0:
            return self.one()
        return GradedElement(self, {(("G", q),): Scalar.one()})

    def element(self, terms: Mapping[Word, Scalar]) -> "GradedElement":
        return GradedElement(self, terms)

    # -------- JSON --------

    def to_json(self) -> dict:
        return {
            "schema": "barcochains/algebra/1",
            "sectors": [
                {
                    "name": s.name,
                    "kind": s.kind,
                    "generators": [
                        {"name": g, "degree": self._info[g][2]} for g in s.generators
                    ],
                    "cap": s.degree_cap,
                }
                for s in self.sectors
            ],
            "gauss_scale": None if self.gauss_scale is None else self.gauss_scale.to_json(),
        }

    @staticmethod
    def from_json(data: dict) -> "Algebra":
        try:
            sectors = []
            degrees = {}
            for s in data["sectors"]:
                names = tuple(g["name"] for g in s["generators"])
                for g in s["generators"]:
                    degrees[g["name"]] = int(g["degree"])
                sectors.append(Sector(s["name"], s["kind"], names, s.get("cap")))
            scale = data.get("gauss_scale")
            return Algebra(sectors, degrees,
                           None if scale is None else Scalar.from_json(scale))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad algebra JSON: {exc}") from exc


class GradedElement:
    """Linear combination of normal-form words with Scalar coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: Algebra, terms: Mapping[Word, Scalar], *,
                 normalized: bool = False):
        self.algebra = algebra
        if normalized:
            self.terms = {w: c for w, c in terms.items() if not c.is_zero()}
            return
        acc: dict[Word, Scalar] = {}
        for word, coef in terms.items():
            if coef.is_zero():
                continue
            for nf, sign in algebra.normalize(tuple(word)).items():
                new = acc.get(nf, Scalar.zero()) + (coef if sign == 1 else coef * sign)
                if new.is_zero():
                    acc.pop(nf, None)
                else:
                    acc[nf] = new
        self.terms = acc

    # -------- basic queries --------

    def is_zero(self) -> bool:
        return not self.terms

    def zdegrees(self) -> set[int]:
        return {self.algebra.word_zdegree(w) for w in self.terms}

    def parity(self) -> int:
        """Parity of a homogeneous element; NonHomogeneous otherwise."""
        ps = {self.algebra.word_parity(w) for w in self.terms}
        if not ps:
            return 0
        if len(ps) > 1:
            raise NonHomogeneous(f"mixed parity element: {self}")
        return ps.pop()

    def is_homogeneous(self) -> bool:
        return len({self.algebra.word_parity(w) for w in self.terms}) <= 1

    def homogeneous_part(self, zdegree: int) -> "GradedElement":
        return GradedElement(
            self.algebra,
            {w: c for w, c in self.terms.items()
             if self.algebra.word_zdegree(w) == zdegree},
            normalized=True)

    def coefficient(self, word: Word) -> Scalar:
        return self.terms.get(tuple(word), Scalar.zero())

    # -------- arithmetic --------

    def _check(self, other: "GradedElement"):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("elements over different algebra descriptors")

    def __add__(self, other: "GradedElement") -> "GradedElement":
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            new = acc.get(w, Scalar.zero()) + c
            if new.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = new
        return GradedElement(self.algebra, acc, normalized=True)

    def __neg__(self) -> "GradedElement":
        return GradedElement(self.algebra, {w: -c for w, c in self.terms.items()},
                             normalized=True)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def smul(self, s: Scalar) -> "GradedElement":
        if s.is_zero():
            return self.algebra.zero()
        return GradedElement(self.algebra, {w: s * c for w, c in self.terms.items()},
                             normalized=True)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.smul(other)
        if isinstance(other, int):
            return self.smul(Scalar.integer(other))
        if not isinstance(other, GradedElement):
            return NotImplemented
        self._check(other)
        acc: dict[Word, Scalar] = {}
        alg = self.algebra
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for nf, sign in alg.normalize(w1 + w2).items():
                    new = acc.get(nf, Scalar.zero()) + (c if sign == 1 else c * sign)
                    if new.is_zero():
                        acc.pop(nf, None)
                    else:
                        acc[nf] = new
        return GradedElement(alg, acc, normalized=True)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int) -> "GradedElement":
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    # -------- rendering --------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), tuple(map(str, w)))):
            c = self.terms[w]
            label = "*".join(f"G({l[1]})" if self.algebra.is_gauss(l) else str(l)
                             for l in w) or "1"
            bits.append(f"({c})*{label}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self) -> dict:
        def enc_letter(l):
            if self.algebra.is_gauss(l):
                return {"gauss": [l[1].numerator, l[1].denominator]}
            return l

        return {
            "schema": "barcochains/element/1",
            "terms": [
                {"word": [enc_letter(l) for l in w], "coef": c.to_json()}
                for w, c in sorted(self.terms.items(),
                                   key=lambda it: (len(it[0]), tuple(map(str, it[0]))))
            ],
        }

    @staticmethod
    def from_json(algebra: Algebra, data: dict) -> "GradedElement":
        def dec_letter(l):
            if isinstance(l, dict) and "gauss" in l:
                return ("G", Fraction(l["gauss"][0], l["gauss"][1]))
            return l

        try:
            terms = {}
            for entry in data["terms"]:
                w = tuple(dec_letter(l) for l in entry["word"])
                terms[w] = terms.get(w, Scalar.zero()) + Scalar.from_json(entry["coef"])
            return GradedElement(algebra, terms)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad element JSON: {exc}") from exc


# ---------------- operations ----------------


def super_mul(x: GradedElement, y: GradedElement) -> GradedElement:
    return x * y


def super_commutator(x: GradedElement, y: GradedElement) -> GradedElement:
    """Graded commutator x y - (-1)^{|x||y|} y x of homogeneous elements."""
    px, py = x.parity(), y.parity()
    yx = y * x
    return x * y - (yx if (px & py) == 0 else -yx)


def exp_nilpotent(x: GradedElement, bound: int) -> GradedElement:
    """Finite exponential sum_{j<k} x^j / j! where x^k = 0 with k <= bound."""
    out = x.algebra.one()
    power = x.algebra.one()
    for j in range(1, bound + 1):
        power = power * x
        if power.is_zero():
            return out
        out = out + power.smul(Scalar.rational(1, factorial(j)))
    raise NotNilpotentWithinBound(f"x^{bound} != 0")


DerivationRule = Mapping[str, GradedElement]


def apply_derivation(rule: DerivationRule, parity_of_derivation: int,
                     x: GradedElement,
                     gauss_rule: Callable[[Fraction], GradedElement] | None = None,
                     ) -> GradedElement:
    """Extend a generator rule by the graded Leibniz rule.

    D(l_1 ... l_n) = sum_i (-1)^(p_D * |l_1...l_{i-1}|) l_1 .. D(l_i) .. l_n.
    The Gaussian atom is handled by gauss_rule (required if atoms occur).
    """
    alg = x.algebra
    out = alg.zero()
    for word, coef in x.terms.items():
        prefix_parity = 0
        for i, letter in enumerate(word):
            if alg.is_gauss(letter):
                if gauss_rule is None:
                    raise UndefinedOnGenerator("no derivation rule for the Gaussian atom")
                dimg = gauss_rule(letter[1])
            else:
                if letter not in rule:
                    raise UndefinedOnGenerator(f"derivation undefined on {letter!r}")
                dimg = rule[letter]
            if not dimg.is_zero():
                sign = -1 if (parity_of_derivation and prefix_parity) else 1
                left = GradedElement(alg, {word[:i]: coef * sign}, normalized=False)
                right = GradedElement(alg, {word[i + 1:]: Scalar.one()}, normalized=False)
                out = out + left * dimg * right
            prefix_parity ^= alg.parity(letter)
    return out


# ---------------- handy builders ----------------


def free_algebra(names: Iterable[str], zdegree: int = 0) -> Algebra:
    names = tuple(names)
    return Algebra([Sector("free", "free", names)], {n: zdegree for n in names})


def graded_commutative_algebra(even: Iterable[str] = (), odd: Iterable[str] = (),
                               even_degrees: Mapping[str, int] | None = None,
                               even_cap: int | None = None) -> Algebra:
    """Polynomial generators times a Grassmann algebra (one-sector pair)."""
    even = tuple(even)
    odd = tuple(odd)
    degrees = {n: 0 for n in even}
    if even_degrees:
        degrees.update(even_degrees)
    degrees.update({n: 1 for n in odd})
    sectors = []
    if even:
        sectors.append(Sector("even", "symmetric", even, even_cap))
    if odd:
        sectors.append(Sector("odd", "grassmann", odd))
    return Algebra(sectors, degrees)
