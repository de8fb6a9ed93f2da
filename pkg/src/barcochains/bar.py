"""The bar construction as a dg-coalgebra and its one-form bicomodule.

Chains are spanned by tuples of nonempty words of a free algebra; the empty
tuple is the basis element of the degree-0 part (the coalgebra counit range,
distinct from the algebra unit).  The coproduct deconcatenates, b' merges
adjacent entries with alternating signs, and the bicomodule carries the
induced differential b''.  The four structure maps of the 2-periodic
complex  bar <-> forms  are beta, the cotrace, the concatenation projection
from the bicomodule, and their composite dbar = proj . cotrace.

Unit middle entries of the bicomodule concatenate by deletion under the
projection, matching the identification of the cotrace's target with forms
whose head may be the adjoined unit.

Tensor operators act with Koszul signs, e.g. (id (x) b')(x (x) y) =
(-1)^{|x|} x (x) b'(y); the coderivation law for the coproduct holds in
exactly this convention.
"""

from __future__ import annotations

from typing import Mapping

from .errors import AlgebraMismatch, ParseError
from .ncforms import AWord, Form, FormAlgebra
from .scalars import Scalar

BarWord = tuple  # tuple[AWord, ...]
OmegaWord = tuple  # (BarWord, AWord, BarWord); middle () is the adjoined unit


class _ChainBase:
    __slots__ = ("space", "terms")

    def __init__(self, space: FormAlgebra, terms: Mapping):
        self.space = space
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def _check(self, other):
        if type(self) is not type(other) or self.space != other.space:
            raise AlgebraMismatch("incompatible chains")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            new = acc.get(w, Scalar.zero()) + c
            if new.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = new
        return type(self)(self.space, acc)

    def __neg__(self):
        return type(self)(self.space, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def smul(self, s: Scalar):
        return type(self)(self.space, {w: s * c for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.space, frozenset(self.terms.items())))


class BarChain(_ChainBase):
    """Combination of bar words; () is the coalgebra unit basis element."""

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w, c in sorted(self.terms.items()):
            label = "(" + ",".join("*".join(e) for e in w) + ")"
            bits.append(f"({c})*{label}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "schema": "barcochains/barchain/1",
            "generators": list(self.space.generators),
            "terms": [
                {"word": [list(e) for e in w], "coef": c.to_json()}
                for w, c in sorted(self.terms.items())
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "BarChain":
        try:
            space = FormAlgebra(tuple(data["generators"]))
            terms: dict[BarWord, Scalar] = {}
            for entry in data["terms"]:
                key = tuple(tuple(e) for e in entry["word"])
                terms[key] = terms.get(key, Scalar.zero()) + Scalar.from_json(entry["coef"])
            return BarChain(space, terms)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad bar-chain JSON: {exc}") from exc


class OmegaOneBarChain(_ChainBase):
    """Combination of (left, middle, right) with middle in the unitalization."""

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (l, m, r), c in sorted(self.terms.items()):
            mid = "*".join(m) if m else "1"
            label = ("(" + ",".join("*".join(e) for e in l) + "|" + mid + "|"
                     + ",".join("*".join(e) for e in r) + ")")
            bits.append(f"({c})*{label}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "schema": "barcochains/omega1bar/1",
            "generators": list(self.space.generators),
            "terms": [
                {"left": [list(e) for e in l], "mid": list(m),
                 "right": [list(e) for e in r], "coef": c.to_json()}
                for (l, m, r), c in sorted(self.terms.items())
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "OmegaOneBarChain":
        try:
            space = FormAlgebra(tuple(data["generators"]))
            terms: dict[OmegaWord, Scalar] = {}
            for entry in data["terms"]:
                key = (tuple(tuple(e) for e in entry["left"]), tuple(entry["mid"]),
                       tuple(tuple(e) for e in entry["right"]))
                terms[key] = terms.get(key, Scalar.zero()) + Scalar.from_json(entry["coef"])
            return OmegaOneBarChain(space, terms)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad bicomodule JSON: {exc}") from exc


class BarTensor(_ChainBase):
    """Element of bar (x) bar, the coproduct's target."""

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (x, y), c in sorted(self.terms.items()):
            lab = ("(" + ",".join("*".join(e) for e in x) + ")(x)("
                   + ",".join("*".join(e) for e in y) + ")")
            bits.append(f"({c})*{lab}")
        return " + ".join(bits)

    __repr__ = __str__


def bar_word(space: FormAlgebra, *entries) -> BarChain:
    word = tuple(tuple(e) for e in entries)
    if any(not e for e in word):
        raise ValueError("bar entries must be nonempty words")
    return BarChain(space, {word: Scalar.one()})


def omega_word(space: FormAlgebra, left, mid, right) -> OmegaOneBarChain:
    key = (tuple(tuple(e) for e in left), tuple(mid), tuple(tuple(e) for e in right))
    if any(not e for e in key[0]) or any(not e for e in key[2]):
        raise ValueError("outer entries must be nonempty words")
    return OmegaOneBarChain(space, {key: Scalar.one()})


# ---------------- coalgebra structure ----------------


def coproduct(x: BarChain) -> BarTensor:
    acc: dict[tuple, Scalar] = {}
    for w, c in x.terms.items():
        for i in range(len(w) + 1):
            key = (w[:i], w[i:])
            new = acc.get(key, Scalar.zero()) + c
            if new.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = new
    return BarTensor(x.space, acc)


def counit(x: BarChain) -> Scalar:
    return x.terms.get((), Scalar.zero())


def _bprime_word(w: BarWord) -> dict[BarWord, int]:
    out: dict[BarWord, int] = {}
    if len(w) < 2:
        return out
    for j in range(len(w) - 1):
        key = w[:j] + (w[j] + w[j + 1],) + w[j + 2:]
        sign = 1 if j % 2 == 0 else -1
        out[key] = out.get(key, 0) + sign
        if out[key] == 0:
            del out[key]
    return out


def bar_bprime(x: BarChain) -> BarChain:
    acc: dict[BarWord, Scalar] = {}
    for w, c in x.terms.items():
        for w2, s in _bprime_word(w).items():
            new = acc.get(w2, Scalar.zero()) + (c if s == 1 else c * s)
            if new.is_zero():
                acc.pop(w2, None)
            else:
                acc[w2] = new
    return BarChain(x.space, acc)


# ---------------- the four structure maps ----------------


def beta(x: BarChain) -> Form:
    """(a_1..a_n) -> (-1)^(n-1) a_n (x) (a_1..a_{n-1})  -  a_1 (x) (a_2..a_n)."""
    acc: dict = {}

    def put(key, c: Scalar):
        new = acc.get(key, Scalar.zero()) + c
        if new.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = new

    for w, c in x.terms.items():
        n = len(w)
        if n == 0:
            continue
        put((w[-1], w[:-1]), c if (n - 1) % 2 == 0 else -c)
        put((w[0], w[1:]), -c)
    return Form(x.space, acc)


def cotrace(x: Form) -> OmegaOneBarChain:
    """Sum of signed rotations placing the head in the middle slot."""
    acc: dict[OmegaWord, Scalar] = {}
    for (h, t), c in x.terms.items():
        n = len(t) + 1
        k = len(t)
        for i in range(1, n + 1):
            key = (t[i - 1:], h, t[:i - 1])
            sign = 1 if (i * k) % 2 == 0 else -1
            new = acc.get(key, Scalar.zero()) + (c if sign == 1 else -c)
            if new.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = new
    return OmegaOneBarChain(x.space, acc)


def partial_proj(x: OmegaOneBarChain) -> BarChain:
    """Concatenate; a unit middle drops out."""
    acc: dict[BarWord, Scalar] = {}
    for (l, m, r), c in x.terms.items():
        key = l + ((m,) if m else ()) + r
        new = acc.get(key, Scalar.zero()) + c
        if new.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = new
    return BarChain(x.space, acc)


def partial_bar(x: Form) -> BarChain:
    return partial_proj(cotrace(x))


def embed(x: BarChain) -> Form:
    """(c_1,...,c_m) -> dc_1 ... dc_m, the unit-headed form."""
    return Form(x.space, {((), w): c for w, c in x.terms.items()})


def bprime_bimodule(x: OmegaOneBarChain) -> OmegaOneBarChain:
    """The differential induced on the bicomodule by b'."""
    acc: dict[OmegaWord, Scalar] = {}

    def put(key: OmegaWord, c: Scalar):
        new = acc.get(key, Scalar.zero()) + c
        if new.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = new

    for (l, m, r), c in x.terms.items():
        p = len(l) + 1
        sp = 1 if p % 2 == 0 else -1  # (-1)^p = (-1)^(p-2)
        for l2, s in _bprime_word(l).items():
            put((l2, m, r), c * s)
        if l:
            put((l[:-1], l[-1] + m, r), c * sp)
        if r:
            put((l, m + r[0], r[1:]), c * (-sp))
        for r2, s in _bprime_word(r).items():
            put((l, m, r2), c * (s * sp))
    return OmegaOneBarChain(x.space, acc)
