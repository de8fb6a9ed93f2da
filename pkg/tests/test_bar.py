"""Bar construction: coalgebra axioms, structure maps, cross identities."""

import itertools

from barcochains.bar import (
    BarChain,
    BarTensor,
    OmegaOneBarChain,
    bar_bprime,
    bar_word,
    beta,
    bprime_bimodule,
    coproduct,
    cotrace,
    counit,
    embed,
    omega_word,
    partial_bar,
    partial_proj,
)
from barcochains.ncforms import FormAlgebra, connes_B, hochschild_b
from barcochains.scalars import Scalar

A = FormAlgebra(("a1", "a2", "a3"))


def gens():
    return [(g,) for g in A.generators]


def bar_words(max_len, n_gens=3):
    gs = A.generators[:n_gens]
    for n in range(max_len + 1):
        for combo in itertools.product(gs, repeat=n):
            yield tuple((g,) for g in combo)


def form_basis(max_degree):
    gs = A.generators
    for k in range(max_degree + 1):
        for head in [None] + [[g] for g in gs]:
            for tail in itertools.product(gs, repeat=k):
                yield A.form(head, *([g] for g in tail))


# ---------------- coproduct ----------------


def test_coproduct_examples():
    w1 = bar_word(A, ["a1"])
    got = coproduct(w1)
    assert got.terms == {
        ((("a1",),), ()): Scalar.one(),
        ((), (("a1",),)): Scalar.one(),
    }
    empty = BarChain(A, {(): Scalar.one()})
    assert coproduct(empty).terms == {((), ()): Scalar.one()}
    w12 = bar_word(A, ["a1"], ["a2"])
    assert len(coproduct(w12).terms) == 3


def test_coassociativity():
    for w in bar_words(4):
        x = BarChain(A, {w: Scalar.one()})
        lhs: dict = {}
        rhs: dict = {}
        for (u, v), c in coproduct(x).terms.items():
            for (u1, u2), c2 in coproduct(BarChain(A, {u: c})).terms.items():
                key = (u1, u2, v)
                lhs[key] = lhs.get(key, Scalar.zero()) + c2
            for (v1, v2), c2 in coproduct(BarChain(A, {v: c})).terms.items():
                key = (u, v1, v2)
                rhs[key] = rhs.get(key, Scalar.zero()) + c2
        assert {k: v for k, v in lhs.items() if not v.is_zero()} == \
               {k: v for k, v in rhs.items() if not v.is_zero()}


def test_counit_law():
    for w in bar_words(4):
        x = BarChain(A, {w: Scalar.one()})
        recovered: dict = {}
        for (u, v), c in coproduct(x).terms.items():
            if u == ():
                recovered[v] = recovered.get(v, Scalar.zero()) + c
        assert {k: v for k, v in recovered.items() if not v.is_zero()} == x.terms
    assert counit(bar_word(A, ["a1"])).is_zero()
    assert counit(BarChain(A, {(): Scalar.one()})) == Scalar.one()


# ---------------- b' ----------------


def test_bprime_examples():
    assert bar_bprime(bar_word(A, ["a1"])).is_zero()
    assert bar_bprime(BarChain(A, {(): Scalar.one()})).is_zero()
    assert bar_bprime(bar_word(A, ["a1"], ["a2"])) == bar_word(A, ["a1", "a2"])
    got = bar_bprime(bar_word(A, ["a1"], ["a2"], ["a3"]))
    assert got == bar_word(A, ["a1", "a2"], ["a3"]) - bar_word(A, ["a1"], ["a2", "a3"])


def test_bprime_squares_to_zero():
    for w in bar_words(5, n_gens=2):
        assert bar_bprime(bar_bprime(BarChain(A, {w: Scalar.one()}))).is_zero()


def test_bprime_is_a_coderivation():
    # Delta b' = (b' (x) id + id (x) b') Delta with the Koszul sign on id (x) b'
    for w in bar_words(4):
        x = BarChain(A, {w: Scalar.one()})
        lhs = coproduct(bar_bprime(x))
        acc: dict = {}
        for (u, v), c in coproduct(x).terms.items():
            for u2, s in ((k, v2) for k, v2 in
                          bar_bprime(BarChain(A, {u: Scalar.one()})).terms.items()):
                key = (u2, v)
                acc[key] = acc.get(key, Scalar.zero()) + c * s
            sign = Scalar.integer(-1 if len(u) % 2 else 1)
            for v2, s in bar_bprime(BarChain(A, {v: Scalar.one()})).terms.items():
                key = (u, v2)
                acc[key] = acc.get(key, Scalar.zero()) + c * s * sign
        rhs = BarTensor(A, acc)
        assert lhs == rhs


# ---------------- beta ----------------


def test_beta_examples():
    assert beta(bar_word(A, ["a1"])).is_zero()
    assert beta(BarChain(A, {(): Scalar.one()})).is_zero()
    got = beta(bar_word(A, ["a1"], ["a2"]))
    assert got == -A.form(["a2"], ["a1"]) - A.form(["a1"], ["a2"])


def test_beta_is_a_chain_map():
    # the sign closing b . beta = beta . b' is +1, pinned exhaustively
    for w in bar_words(4):
        x = BarChain(A, {w: Scalar.one()})
        assert hochschild_b(beta(x)) == beta(bar_bprime(x))


# ---------------- cotrace ----------------


def test_cotrace_examples():
    got = cotrace(A.form(["a1"]))
    assert got == omega_word(A, [], ["a1"], [])
    got2 = cotrace(A.form(["a1"], ["a2"]))
    assert got2 == (omega_word(A, [], ["a1"], [["a2"]])
                    - omega_word(A, [["a2"]], ["a1"], []))
    assert cotrace(A.zero()).is_zero()


def test_bimodule_differential_examples():
    assert bprime_bimodule(omega_word(A, [], ["a1"], [])).is_zero()
    got = bprime_bimodule(omega_word(A, [], ["a1"], [["a2"]]))
    assert got == omega_word(A, [], ["a1", "a2"], [])
    got2 = bprime_bimodule(omega_word(A, [["a1"]], ["a2"], []))
    assert got2 == omega_word(A, [], ["a1", "a2"], [])


def test_bimodule_differential_squares_to_zero():
    cases = []
    for nl in range(3):
        for nr in range(3):
            for combo in itertools.product(A.generators[:2], repeat=nl + nr + 1):
                left = tuple((g,) for g in combo[:nl])
                right = tuple((g,) for g in combo[nl + 1:])
                cases.append((left, (combo[nl],), right))
                cases.append((left, (), right))
    for (l, m, r) in cases:
        x = OmegaOneBarChain(A, {(l, m, r): Scalar.one()})
        assert bprime_bimodule(bprime_bimodule(x)).is_zero()


def test_cotrace_intertwines_b():
    for x in form_basis(4):
        assert bprime_bimodule(cotrace(x)) == cotrace(hochschild_b(x))


# ---------------- projection and dbar ----------------


def test_partial_proj_examples():
    assert partial_proj(omega_word(A, [["a1"]], ["a2"], [["a3"]])) == \
        bar_word(A, ["a1"], ["a2"], ["a3"])
    assert partial_proj(omega_word(A, [], ["a1"], [])) == bar_word(A, ["a1"])
    assert partial_proj(omega_word(A, [], (), [["a1"]])) == bar_word(A, ["a1"])


def dbar_oracle(x):
    """Displayed cyclic-sum formula, built independently of the cotrace."""
    acc: dict = {}
    for (h, t), c in x.terms.items():
        n = len(t) + 1
        k = len(t)
        for i in range(1, n + 1):
            word = t[i - 1:] + ((h,) if h else ()) + t[:i - 1]
            sign = 1 if (i * k) % 2 == 0 else -1
            acc[word] = acc.get(word, Scalar.zero()) + (c if sign == 1 else -c)
    return BarChain(x.space, acc)


def test_partial_bar_matches_displayed_formula():
    for x in form_basis(3):
        assert partial_bar(x) == dbar_oracle(x)


def test_partial_bar_examples():
    assert partial_bar(A.form(["a1"])) == bar_word(A, ["a1"])
    got = partial_bar(A.form(["a1"], ["a2"]))
    assert got == bar_word(A, ["a1"], ["a2"]) - bar_word(A, ["a2"], ["a1"])


def test_partial_bar_factorizes():
    for x in form_basis(4):
        assert partial_bar(x) == partial_proj(cotrace(x))


# ---------------- cross-module identity with B ----------------


def test_connes_B_is_embed_dbar_on_algebra_headed_forms():
    for x in form_basis(4):
        (h, _t) = next(iter(x.terms))
        if not h:
            continue
        assert connes_B(x) == embed(partial_bar(x))


def test_unit_headed_forms_B_vanishes():
    for x in form_basis(3):
        (h, _t) = next(iter(x.terms))
        if h:
            continue
        assert connes_B(x).is_zero()


def test_json_round_trips():
    x = bar_word(A, ["a1"], ["a2", "a3"]) - bar_word(A, ["a2"]).smul(Scalar.i())
    assert BarChain.from_json(x.to_json()) == x
    y = omega_word(A, [["a1"]], (), [["a2"]])
    assert OmegaOneBarChain.from_json(y.to_json()) == y
