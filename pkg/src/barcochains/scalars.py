"""Exact coefficient arithmetic: Gaussian rationals times Laurent monomials.

A Scalar is a finite sum  sum_m  c_m * i^(e_m) * prod_s s^(k_s/2)  with
rational c_m, e_m in {0,1} after reduction by i^2 = -1, and half-integer
exponents stored as integer counts of half-steps.  Only the designated
radical symbols (t and pi, used for sqrt(t) and Gaussian integrals) may
carry odd half-steps; every other symbol is constrained to integer powers.

All arithmetic is exact; there is no floating point anywhere.  Values are
immutable and hashable, hence freely shareable between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .errors import NotAMonomial, ParseError

#: symbols whose exponents may be genuine half-integers
RADICAL_SYMBOLS = frozenset({"t", "pi"})

# a monomial key: (ipow in {0,1}, ((symbol, halfsteps), ...) sorted by symbol)
Monomial = tuple[int, tuple[tuple[str, int], ...]]

_ONE_MONO: Monomial = (0, ())


def _check_exps(exps: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    out = []
    for sym, half in sorted(exps):
        if half == 0:
            continue
        if sym not in RADICAL_SYMBOLS and half % 2 != 0:
            raise ValueError(f"symbol {sym!r} cannot carry half-integer exponents")
        out.append((sym, half))
    return tuple(out)


def _reduce_ipow(ipow: int) -> tuple[int, int]:
    """Reduce an arbitrary integer power of i to (sign, ipow in {0,1})."""
    k = ipow % 4
    return (1 if k < 2 else -1), k % 2


class Scalar:
    """Immutable exact scalar in canonical form (no zero terms stored)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for (ipow, exps), coef in terms.items():
                coef = Fraction(coef)
                if coef == 0:
                    continue
                sign, ip = _reduce_ipow(ipow)
                key = (ip, _check_exps(exps))
                new = clean.get(key, Fraction(0)) + sign * coef
                if new == 0:
                    clean.pop(key, None)
                else:
                    clean[key] = new
        self._terms = clean
        self._hash: int | None = None

    # ---------------- constructors ----------------

    @staticmethod
    def zero() -> "Scalar":
        return Scalar()

    @staticmethod
    def one() -> "Scalar":
        return Scalar({_ONE_MONO: Fraction(1)})

    @staticmethod
    def i() -> "Scalar":
        return Scalar({(1, ()): Fraction(1)})

    @staticmethod
    def rational(p, q=1) -> "Scalar":
        return Scalar({_ONE_MONO: Fraction(p, q)})

    @staticmethod
    def integer(n: int) -> "Scalar":
        return Scalar.rational(n)

    @staticmethod
    def sym(name: str, halfsteps: int = 2) -> "Scalar":
        """The symbol name^(halfsteps/2); default is the plain symbol."""
        return Scalar({(0, ((name, halfsteps),)): Fraction(1)})

    @staticmethod
    def t() -> "Scalar":
        return Scalar.sym("t")

    @staticmethod
    def sqrt_t() -> "Scalar":
        return Scalar.sym("t", 1)

    @staticmethod
    def pi() -> "Scalar":
        return Scalar.sym("pi")

    # ---------------- queries ----------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {_ONE_MONO: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def as_fraction(self) -> Fraction | None:
        """The rational value if this scalar is a pure rational, else None."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {_ONE_MONO}:
            return self._terms[_ONE_MONO]
        return None

    # ---------------- ring operations ----------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        merged = dict(self._terms)
        for key, coef in other._terms.items():
            new = merged.get(key, Fraction(0)) + coef
            if new == 0:
                merged.pop(key, None)
            else:
                merged[key] = new
        out = Scalar()
        out._terms = merged
        return out

    def __neg__(self) -> "Scalar":
        out = Scalar()
        out._terms = {key: -coef for key, coef in self._terms.items()}
        return out

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for (ip1, ex1), c1 in self._terms.items():
            for (ip2, ex2), c2 in other._terms.items():
                sign, ip = _reduce_ipow(ip1 + ip2)
                exps = dict(ex1)
                for sym, half in ex2:
                    exps[sym] = exps.get(sym, 0) + half
                key = (ip, tuple(sorted((s, h) for s, h in exps.items() if h)))
                new = acc.get(key, Fraction(0)) + sign * c1 * c2
                if new == 0:
                    acc.pop(key, None)
                else:
                    acc[key] = new
        out = Scalar()
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inv() ** (-n)
        out = Scalar.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self) -> "Scalar":
        """Multiplicative inverse of a single-monomial scalar."""
        if len(self._terms) != 1:
            raise NotAMonomial(f"cannot invert {self!r}: not a nonzero monomial")
        (ipow, exps), coef = next(iter(self._terms.items()))
        # i^(-1) = -i
        sign = -1 if ipow == 1 else 1
        inv_exps = tuple((sym, -half) for sym, half in exps)
        return Scalar({(ipow, inv_exps): sign / coef})

    # ---------------- comparison ----------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Scalar.integer(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ---------------- rendering ----------------

    def _term_str(self, key: Monomial, coef: Fraction, latex: bool) -> str:
        ipow, exps = key
        parts = []
        if coef == -1 and (ipow or exps):
            head = "-"
        elif coef == 1 and (ipow or exps):
            head = ""
        else:
            head = str(coef) if coef.denominator == 1 else (
                f"{coef.numerator}/{coef.denominator}" if not latex
                else f"\\tfrac{{{coef.numerator}}}{{{coef.denominator}}}")
        if ipow:
            parts.append("i")
        for sym, half in exps:
            name = "\\pi" if (latex and sym == "pi") else sym
            if half == 2:
                parts.append(name)
            elif half % 2 == 0:
                parts.append(f"{name}^{{{half // 2}}}" if latex else f"{name}^{half // 2}")
            else:
                parts.append(f"{name}^{{{half}/2}}" if latex else f"{name}^({half}/2)")
        sep = "\\," if latex else "*"
        body = sep.join(parts) if parts else ""
        if not body:
            return str(coef) if not latex or coef.denominator == 1 else head
        if head in ("", "-"):
            return head + body
        return head + sep + body

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        bits = [self._term_str(k, c, False) for k, c in sorted(self._terms.items())]
        out = bits[0]
        for b in bits[1:]:
            out += f" + {b}" if not b.startswith("-") else f" - {b[1:]}"
        return out

    def latex(self) -> str:
        if not self._terms:
            return "0"
        bits = [self._term_str(k, c, True) for k, c in sorted(self._terms.items())]
        out = bits[0]
        for b in bits[1:]:
            out += f" + {b}" if not b.startswith("-") else f" - {b[1:]}"
        return out

    def __repr__(self) -> str:
        return f"Scalar({self})"

    # ---------------- JSON ----------------

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "coef": [coef.numerator, coef.denominator],
                    "ipow": ipow,
                    "exps": {sym: half for sym, half in exps},
                }
                for (ipow, exps), coef in sorted(self._terms.items())
            ]
        }

    @staticmethod
    def from_json(data: dict) -> "Scalar":
        try:
            terms: dict[Monomial, Fraction] = {}
            for entry in data["terms"]:
                num, den = entry["coef"]
                key = (int(entry["ipow"]),
                       tuple(sorted((str(s), int(h)) for s, h in entry.get("exps", {}).items())))
                terms[key] = terms.get(key, Fraction(0)) + Fraction(num, den)
            return Scalar(terms)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad scalar JSON: {exc}") from exc


ZERO = Scalar.zero()
ONE = Scalar.one()
I = Scalar.i()
MINUS_ONE = Scalar.integer(-1)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_inv(a: Scalar) -> Scalar:
    return a.inv()


def sqrt_fraction(q: Fraction) -> Fraction:
    """Exact square root of a perfect-square rational, else ValueError."""
    import math

    if q < 0:
        raise ValueError("negative radicand")
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise ValueError(f"{q} is not a perfect square")
    return Fraction(num, den)
