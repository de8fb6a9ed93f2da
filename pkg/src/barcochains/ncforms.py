"""Noncommutative differential forms over a free algebra.

Forms are kept in tensor normal form: a term is (a0; a1, ..., ak) with a0 a
word of the free algebra or the adjoined unit, and nonempty words in the k
tail slots; the term stands for a0 da1 ... dak and k is its form degree.
Multiplication absorbs the head of the right factor into the last
differential slot of the left factor through the Leibniz rule, so products
stay in normal form.  The module provides the universal differential d, the
Hochschild boundary b, the cyclic-sum operator B, and the projection to the
graded-commutator quotient with its induced differential (the de Rham-type
complex of Karoubi).

For the quotient we use a second, equivalent picture: over a free algebra
the forms are the free graded algebra on even letters a and odd letters da,
so the commutator quotient has a canonical basis of signed cyclic words.
The chosen representative of a class is the lexicographically minimal signed
rotation; a rotation identifying a word with minus itself kills the class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import AlgebraMismatch, ParseError
from .scalars import Scalar

AWord = tuple[str, ...]          # word in the free algebra; () is the unit
FormWord = tuple[AWord, tuple[AWord, ...]]
Letter = tuple[str, str]         # ("a", gen) even or ("d", gen) odd
LetterWord = tuple[Letter, ...]


@dataclass(frozen=True)
class FormAlgebra:
    """The free algebra underlying a form calculus (generator names only)."""

    generators: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generators")

    def word(self, *letters: str) -> AWord:
        for l in letters:
            if l not in self.generators:
                raise ValueError(f"unknown generator {l!r}")
        return tuple(letters)

    def form(self, head: Sequence[str] | None, *tail: Sequence[str]) -> "Form":
        """The basis form head d(tail_1) ... d(tail_k); head None is the unit."""
        h: AWord = tuple(head) if head else ()
        t = tuple(tuple(w) for w in tail)
        if any(not w for w in t):
            raise ValueError("tail slots must be nonempty words")
        return Form(self, {(h, t): Scalar.one()})

    def zero(self) -> "Form":
        return Form(self, {})

    def one(self) -> "Form":
        return Form(self, {((), ()): Scalar.one()})


class Form:
    """Scalar combination of tensor-normal-form words of mixed degree."""

    __slots__ = ("space", "terms")

    def __init__(self, space: FormAlgebra, terms: Mapping[FormWord, Scalar]):
        self.space = space
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def _check(self, other: "Form"):
        if self.space != other.space:
            raise AlgebraMismatch("forms over different free algebras")

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {len(t) for _, t in self.terms}

    def homogeneous_part(self, k: int) -> "Form":
        return Form(self.space, {w: c for w, c in self.terms.items() if len(w[1]) == k})

    def __add__(self, other: "Form") -> "Form":
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            new = acc.get(w, Scalar.zero()) + c
            if new.is_zero():
                acc.pop(w, None)
            else:
                acc[w] = new
        return Form(self.space, acc)

    def __neg__(self) -> "Form":
        return Form(self.space, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def smul(self, s: Scalar) -> "Form":
        return Form(self.space, {w: s * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.smul(other)
        if isinstance(other, int):
            return self.smul(Scalar.integer(other))
        if isinstance(other, Form):
            return form_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.smul(other if isinstance(other, Scalar) else Scalar.integer(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (h, t), c in sorted(self.terms.items()):
            word = "*".join(h) if h else "1"
            for slot in t:
                word += " d " + "*".join(slot)
            bits.append(f"({c})*[{word}]")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "schema": "barcochains/form/1",
            "generators": list(self.space.generators),
            "terms": [
                {"head": list(h), "tail": [list(w) for w in t], "coef": c.to_json()}
                for (h, t), c in sorted(self.terms.items())
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Form":
        try:
            space = FormAlgebra(tuple(data["generators"]))
            terms: dict[FormWord, Scalar] = {}
            for entry in data["terms"]:
                key = (tuple(entry["head"]), tuple(tuple(w) for w in entry["tail"]))
                terms[key] = terms.get(key, Scalar.zero()) + Scalar.from_json(entry["coef"])
            return Form(space, terms)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad form JSON: {exc}") from exc


# ---------------- multiplication ----------------


def _rmul_word(fw: FormWord, v: AWord) -> dict[FormWord, int]:
    """(a0 da1 ... dak) * v for a degree-0 word v, via the Leibniz rule."""
    head, tail = fw
    if not tail:
        return {(head + v, ()): 1}
    out: dict[FormWord, int] = {(head, tail[:-1] + (tail[-1] + v,)): 1}
    for (h2, t2), s in _rmul_word((head, tail[:-1]), tail[-1]).items():
        key = (h2, t2 + (v,))
        out[key] = out.get(key, 0) - s
        if out[key] == 0:
            del out[key]
    return out


def form_mul(x: Form, y: Form) -> Form:
    x._check(y)
    acc: dict[FormWord, Scalar] = {}

    def put(key: FormWord, c: Scalar):
        new = acc.get(key, Scalar.zero()) + c
        if new.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = new

    for (h1, t1), c1 in x.terms.items():
        for (h2, t2), c2 in y.terms.items():
            c = c1 * c2
            if not t1:
                put((h1 + h2, t2), c)
            elif not h2:
                put((h1, t1 + t2), c)
            else:
                for (h3, t3), s in _rmul_word((h1, t1), h2).items():
                    put((h3, t3 + t2), c if s == 1 else c * s)
    return Form(x.space, acc)


# ---------------- differentials ----------------


def universal_d(x: Form) -> Form:
    acc: dict[FormWord, Scalar] = {}
    for (h, t), c in x.terms.items():
        if not h:
            continue
        key = ((), (h,) + t)
        new = acc.get(key, Scalar.zero()) + c
        if new.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = new
    return Form(x.space, acc)


def hochschild_b(x: Form) -> Form:
    """Three-part boundary: contract head, merge adjacent slots, wrap around."""
    acc: dict[FormWord, Scalar] = {}

    def put(key: FormWord, c: Scalar):
        new = acc.get(key, Scalar.zero()) + c
        if new.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = new

    for (h, t), c in x.terms.items():
        k = len(t)
        if k == 0:
            continue
        put((h + t[0], t[1:]), c)
        for i in range(1, k):
            key = (h, t[:i - 1] + (t[i - 1] + t[i],) + t[i + 1:])
            put(key, c if i % 2 == 0 else -c)
        put((t[k - 1] + h, t[:k - 1]), c if k % 2 == 0 else -c)
    return Form(x.space, acc)


def connes_B(x: Form) -> Form:
    """Cyclic sum of rotated differentials; vanishes on unit-headed terms."""
    acc: dict[FormWord, Scalar] = {}
    for (h, t), c in x.terms.items():
        if not h:
            continue
        k = len(t)
        for i in range(k + 1):
            key = ((), t[k - i:] + (h,) + t[:k - i])
            sign = 1 if (k * i) % 2 == 0 else -1
            new = acc.get(key, Scalar.zero()) + (c if sign == 1 else -c)
            if new.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = new
    return Form(x.space, acc)


# ---------------- letter expansion ----------------


def to_letters(x: Form) -> dict[LetterWord, Scalar]:
    """Expand tensor words into the free algebra on letters a, da."""
    out: dict[LetterWord, Scalar] = {}

    def expand_tail(t: tuple[AWord, ...]) -> list[LetterWord]:
        if not t:
            return [()]
        rest = expand_tail(t[1:])
        words = []
        u = t[0]
        for j in range(len(u)):
            prefix = tuple(("a", g) for g in u[:j])
            dletter = (("d", u[j]),)
            suffix = tuple(("a", g) for g in u[j + 1:])
            words.append(prefix + dletter + suffix)
        return [w + r for w in words for r in rest]

    for (h, t), c in x.terms.items():
        head = tuple(("a", g) for g in h)
        for w in expand_tail(t):
            key = head + w
            new = out.get(key, Scalar.zero()) + c
            if new.is_zero():
                out.pop(key, None)
            else:
                out[key] = new
    return out


def from_letters(space: FormAlgebra, terms: Mapping[LetterWord, Scalar]) -> Form:
    """Rewrite letter words back to tensor normal form via  du.v -> d(uv) - u.dv."""
    acc: dict[FormWord, Scalar] = {}

    def put(key: FormWord, c: Scalar):
        new = acc.get(key, Scalar.zero()) + c
        if new.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = new

    # generalized items: ("w", word) plain segment, ("d", word) differential slot
    def reduce(items: tuple, coef: Scalar):
        stack = [(items, coef)]
        while stack:
            it, c = stack.pop()
            for i in range(len(it) - 1):
                if it[i][0] == "d" and it[i + 1][0] == "w":
                    u, v = it[i][1], it[i + 1][1]
                    stack.append((it[:i] + (("d", u + v),) + it[i + 2:], c))
                    stack.append((it[:i] + (("w", u), ("d", v)) + it[i + 2:], -c))
                    break
            else:
                head: AWord = ()
                tail: list[AWord] = []
                for kind, word in it:
                    if kind == "w":
                        head += word
                    else:
                        tail.append(word)
                put((head, tuple(tail)), c)

    for word, c in terms.items():
        items: list = []
        for kind, g in word:
            if kind == "a":
                if items and items[-1][0] == "w":
                    items[-1] = ("w", items[-1][1] + (g,))
                else:
                    items.append(("w", (g,)))
            else:
                items.append(("d", (g,)))
        reduce(tuple(items), c)
    return Form(space, acc)


# ---------------- the commutator quotient ----------------


def _letter_parity(letter: Letter) -> int:
    return 1 if letter[0] == "d" else 0


def _min_signed_rotation(word: LetterWord) -> tuple[LetterWord | None, int]:
    """Minimal representative and relating sign; (None, 0) for a killed class."""
    if not word:
        return word, 1
    seen: dict[LetterWord, int] = {}
    current, sign = word, 1
    n = len(word)
    for _ in range(n):
        if current in seen:
            if seen[current] != sign:
                return None, 0
        else:
            seen[current] = sign
        lead = current[0]
        rest_parity = sum(_letter_parity(l) for l in current[1:]) % 2
        rot_sign = -1 if (_letter_parity(lead) and rest_parity) else 1
        current = current[1:] + (lead,)
        sign *= rot_sign
    if current in seen and seen[current] != sign:
        return None, 0
    best = min(seen)
    return best, seen[best]


class CyclicClass:
    """Element of the graded-commutator quotient, by minimal signed rotations."""

    __slots__ = ("space", "reps")

    def __init__(self, space: FormAlgebra, reps: Mapping[LetterWord, Scalar]):
        self.space = space
        acc: dict[LetterWord, Scalar] = {}
        for word, c in reps.items():
            if c.is_zero():
                continue
            best, sign = _min_signed_rotation(tuple(word))
            if best is None:
                continue
            new = acc.get(best, Scalar.zero()) + (c if sign == 1 else c * sign)
            if new.is_zero():
                acc.pop(best, None)
            else:
                acc[best] = new
        self.reps = acc

    def is_zero(self) -> bool:
        return not self.reps

    def __add__(self, other: "CyclicClass") -> "CyclicClass":
        merged = dict(self.reps)
        for w, c in other.reps.items():
            merged[w] = merged.get(w, Scalar.zero()) + c
        return CyclicClass(self.space, merged)

    def __sub__(self, other: "CyclicClass") -> "CyclicClass":
        return self + CyclicClass(other.space,
                                  {w: -c for w, c in other.reps.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicClass):
            return NotImplemented
        return self.space == other.space and self.reps == other.reps

    def __hash__(self):
        return hash((self.space, frozenset(self.reps.items())))

    def representative(self) -> Form:
        """The class rendered as a form (minimal rotations, normal form)."""
        return from_letters(self.space, self.reps)

    def __str__(self) -> str:
        if not self.reps:
            return "0"
        bits = []
        for w, c in sorted(self.reps.items()):
            label = "*".join(("d" + g if kind == "d" else g) for kind, g in w) or "1"
            bits.append(f"({c})*[{label}]")
        return " + ".join(bits)

    __repr__ = __str__


def natural_quotient(x: Form) -> CyclicClass:
    return CyclicClass(x.space, to_letters(x))


def _letter_d(word: LetterWord) -> dict[LetterWord, int]:
    out: dict[LetterWord, int] = {}
    dcount = 0
    for i, (kind, g) in enumerate(word):
        if kind == "a":
            key = word[:i] + (("d", g),) + word[i + 1:]
            sign = -1 if dcount % 2 else 1
            out[key] = out.get(key, 0) + sign
            if out[key] == 0:
                del out[key]
        else:
            dcount += 1
    return out


def karoubi_d(x: CyclicClass) -> CyclicClass:
    acc: dict[LetterWord, Scalar] = {}
    for word, c in x.reps.items():
        for w2, s in _letter_d(word).items():
            acc[w2] = acc.get(w2, Scalar.zero()) + (c if s == 1 else c * s)
    return CyclicClass(x.space, acc)
