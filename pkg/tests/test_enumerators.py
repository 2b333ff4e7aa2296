import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zkmacwilliams.codes import CodeZk, dual_code, random_code
from zkmacwilliams.enumerators import (
    check_identity_hamming,
    check_identity_mtuple,
    effective_length_we,
    hamming_we,
    homogenize,
    mw_transform_hamming,
    mw_transform_homogeneous,
    mw_transform_mtuple,
)
from zkmacwilliams.errors import MixedModulus, NonIntegralResult
from zkmacwilliams.poly import Poly

from conftest import brute_dual, brute_span, effective_weight_counts, weight_counts

z = Poly.var(1, 0)
TERN = CodeZk(3, 2, ((1, 1),))


def P(*coeffs):
    return Poly.univariate(coeffs)


class TestPoly:
    def test_text_form(self):
        assert P(1, 0, 2).to_text() == "1 + 2*z^2"
        assert P(1, -1).to_text() == "1 - z"
        assert Poly(1).to_text() == "0"
        assert Poly(4, {(1, 0, 0, 0): 1, (0, 0, 1, 0): 1}).to_text() == "z0 + z2"

    def test_json_round_trip(self):
        W = P(1, 0, 2, 7)
        assert W.to_json() == [[[0], "1"], [[2], "2"], [[3], "7"]]
        assert Poly.from_json(W.to_json()) == W

    def test_arithmetic(self):
        assert (1 + z) ** 3 == P(1, 3, 3, 1)
        assert (1 + z) * (1 - z) == P(1, 0, -1)
        assert ((1 + z) ** 2)(2) == 9

    def test_substitute(self):
        x, y = Poly.var(2, 0), Poly.var(2, 1)
        W = Poly(2, {(2, 0): 1, (0, 1): 3})
        assert W.substitute([x + y, x]) == x * x + 2 * x * y + y * y + 3 * x


@pytest.mark.parametrize(
    "code, expected",
    [
        (TERN, P(1, 0, 2)),
        (CodeZk.zero(4, 3), P(1)),
        (CodeZk.full(2, 2), P(1, 2, 1)),
    ],
)
def test_hamming_we_examples(code, expected):
    assert hamming_we(code) == expected


def test_effective_length_examples():
    full = CodeZk.full(2, 1)
    assert effective_length_we([full, full]) == P(1, 3)
    assert effective_length_we([CodeZk.zero(2, 1)] * 2) == P(1)
    assert effective_length_we([TERN]) == P(1, 0, 2)


def test_effective_length_mixed():
    with pytest.raises(MixedModulus):
        effective_length_we([CodeZk.zero(2, 2), CodeZk.zero(3, 2)])
    with pytest.raises(MixedModulus):
        effective_length_we([CodeZk.zero(2, 2), CodeZk.zero(2, 3)])


def test_effective_length_matches_product_enumeration(rng):
    for _ in range(40):
        k, n, m = rng.randint(2, 4), rng.randint(1, 3), rng.randint(1, 3)
        codes = [random_code(k, n, rng, max_gens=2) for _ in range(m)]
        words = [brute_span(k, n, c.generators) for c in codes]
        if len(list(itertools.product(*words))) > 20000:
            continue
        expected = Poly(1, {(w,): c for w, c in effective_weight_counts(words).items()})
        assert effective_length_we(codes) == expected


def test_mw_hamming_examples():
    assert mw_transform_hamming(P(1, 0, 2), 3, 2, 3) == P(1, 0, 2)
    for k in range(2, 8):
        assert mw_transform_hamming(P(1), 1, 1, k) == P(1, k - 1)
    assert mw_transform_hamming(P(1, 1), 2, 2, 2) == P(1, 1)


def test_mw_hamming_rejects_inconsistent_input():
    with pytest.raises(NonIntegralResult):
        mw_transform_hamming(P(1, 1), 3, 2, 3)
    with pytest.raises(NonIntegralResult):
        mw_transform_hamming(P(1, 0, 0, 1), 1, 2, 2)


def test_mw_mtuple_examples():
    assert mw_transform_mtuple(P(1, 3), 4, 1, 2, 2) == P(1)
    for k, m, n in [(2, 2, 3), (3, 3, 2), (4, 2, 1)]:
        assert mw_transform_mtuple(P(1), 1, n, k, m) == P(1, k**m - 1) ** n
    assert mw_transform_mtuple(P(1, 0, 2), 3, 2, 3, 1) == mw_transform_hamming(P(1, 0, 2), 3, 2, 3)


@pytest.mark.parametrize(
    "code",
    [TERN, CodeZk.zero(5, 1), CodeZk(4, 3, ((1, 2, 3), (2, 2, 0)))],
)
def test_check_identity_examples(code):
    rep = check_identity_hamming(code)
    assert rep.equal, rep.summary()
    assert rep.diff == Poly(1)


def test_check_identity_zero_code_z5():
    rep = check_identity_hamming(CodeZk.zero(5, 1))
    assert rep.direct == P(1, 4)


def test_hamming_transform_against_brute_force(rng):
    for _ in range(120):
        k, n = rng.randint(2, 6), rng.randint(1, 4)
        code = random_code(k, n, rng, max_gens=3)
        words = brute_span(k, n, code.generators)
        dual_counts = weight_counts(brute_dual(k, n, words))
        expected = Poly(1, {(w,): c for w, c in dual_counts.items()})
        W = hamming_we(code)
        assert W(1) == len(words)
        assert W.coeff(0) >= 1 and W.degree() <= n
        assert mw_transform_hamming(W, len(words), n, k) == expected


def test_mtuple_transform_against_brute_force(rng):
    for _ in range(40):
        k, n, m = rng.randint(2, 4), rng.randint(1, 3), rng.randint(2, 3)
        codes = [random_code(k, n, rng, max_gens=2) for _ in range(m)]
        duals = [brute_dual(k, n, brute_span(k, n, c.generators)) for c in codes]
        if len(list(itertools.product(*duals))) > 30000:
            continue
        expected = Poly(1, {(w,): c for w, c in effective_weight_counts(duals).items()})
        size = 1
        for c in codes:
            size *= c.size()
        assert mw_transform_mtuple(effective_length_we(codes), size, n, k, m) == expected
        assert check_identity_mtuple(codes).equal


def test_homogeneous_form_matches(rng):
    for _ in range(40):
        k, n = rng.randint(2, 5), rng.randint(1, 4)
        code = random_code(k, n, rng, max_gens=2)
        W, size = hamming_we(code), code.size()
        via_dehomogenized = homogenize(mw_transform_hamming(W, size, n, k), n)
        assert mw_transform_homogeneous(homogenize(W, n), size, k) == via_dehomogenized


def test_homogeneous_argument_order():
    """z1 -> z2 - z1, z2 -> z2 + (k-1) z1 is right; the swapped order is not."""
    code = CodeZk(2, 2, ((1, 0),))
    Wh = homogenize(hamming_we(code), 2)
    expected = homogenize(hamming_we(dual_code(code)), 2)
    assert mw_transform_homogeneous(Wh, 2, 2) == expected
    z1, z2 = Poly.var(2, 0), Poly.var(2, 1)
    swapped = Wh.substitute([z2 + z1, z2 - z1])
    assert swapped != expected * 2


@settings(max_examples=40, deadline=None)
@given(k=st.integers(2, 6), n=st.integers(1, 4), data=st.data())
def test_double_transform_is_identity(k, n, data):
    gens = data.draw(st.lists(st.tuples(*[st.integers(0, k - 1)] * n), max_size=2))
    code = CodeZk(k, n, tuple(gens))
    W, size = hamming_we(code), code.size()
    dual_W = mw_transform_hamming(W, size, n, k)
    assert mw_transform_hamming(dual_W, k**n // size, n, k) == W
