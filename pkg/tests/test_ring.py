import itertools

import pytest

from zkmacwilliams.errors import IndexOutOfRange, ZkError
from zkmacwilliams.poly import Poly
from zkmacwilliams.ring import (
    CodeR,
    RingR,
    char_dual_r,
    check_identity_complete,
    complete_we,
    complete_we_of_words,
    load_ring_code,
    marginal_hamming,
    mw_transform_complete,
    r_mul,
    random_ring_code,
    tau,
    u_index,
)

F4 = RingR(2, (1, 1, 1))  # Z_2[x]/(x^2 + x + 1)
RINGS = [F4, RingR(3, (1, 0, 1)), RingR(2, (1, 1, 0, 1))]


def z(i, q=4):
    return Poly.var(q, i)


def test_r_mul_examples():
    assert r_mul(F4, (0, 1), (0, 1)) == (1, 1)
    assert r_mul(F4, (1, 1), (1, 1)) == (0, 1)
    for ring in RINGS:
        for a in ring.elements():
            assert r_mul(ring, ring.one(), a) == a


@pytest.mark.parametrize("ring", RINGS + [RingR(4, (3, 1)), RingR(6, (5, 0, 1))])
def test_r_mul_ring_laws(ring):
    elems = ring.elements()
    for a, b in itertools.product(elems, repeat=2):
        assert r_mul(ring, a, b) == r_mul(ring, b, a)
    sample = elems[:6]
    for a, b, c in itertools.product(sample, repeat=3):
        assert r_mul(ring, r_mul(ring, a, b), c) == r_mul(ring, a, r_mul(ring, b, c))


def test_u_and_tau():
    assert u_index(F4, (1, 1)) == 3 and tau(F4, 3) == (1, 1)
    assert u_index(F4, (0, 0)) == 0 and tau(F4, 0) == (0, 0)
    R = RingR(3, (1, 0, 1))
    assert u_index(R, (2, 1)) == 5 and tau(R, 5) == (2, 1)
    with pytest.raises(IndexOutOfRange):
        tau(F4, 4)


@pytest.mark.parametrize("k, t", [(2, 2), (3, 2), (2, 3), (3, 4), (9, 2), (2, 6)])
def test_tau_inverts_u(k, t):
    ring = RingR(k, (1,) + (0,) * (t - 1) + (1,))
    assert ring.order <= 81
    for digits in itertools.product(range(k), repeat=t):
        assert tau(ring, u_index(ring, digits)) == digits
    for l in range(ring.order):
        assert u_index(ring, tau(ring, l)) == l


def test_complete_we_examples():
    assert complete_we(CodeR(F4, 1, (((1, 0),),))) == z(0) + z(1) + z(2) + z(3)
    assert complete_we(CodeR(F4, 1, ())) == z(0)
    assert complete_we(CodeR(F4, 1, (((1, 0),),), linear=False)) == z(0) + z(1)


def test_char_dual_examples():
    assert char_dual_r(CodeR(F4, 1, (((1, 0),),))) == [((0, 0),)]
    assert len(char_dual_r(CodeR(F4, 2, ()))) == 16
    additive_one = CodeR(F4, 1, (((1, 0),),), linear=False)
    assert sorted(char_dual_r(additive_one)) == [((0, 0),), ((0, 1),)]


def test_mw_complete_examples():
    full = z(0) + z(1) + z(2) + z(3)
    assert mw_transform_complete(full, 4, F4) == z(0)
    assert mw_transform_complete(z(0) ** 2, 1, F4) == full**2
    assert mw_transform_complete(z(0) + z(1), 2, F4) == z(0) + z(2)


def test_linear_codes_are_closed_under_ring_multiplication(rng):
    for ring in RINGS:
        for _ in range(10):
            code = random_ring_code(ring, 2, rng, max_gens=1)
            words = set(code.codewords())
            for w in words:
                for a in ring.elements():
                    assert tuple(r_mul(ring, a, e) for e in w) in words


def test_char_dual_size_and_pairing(rng):
    for ring in RINGS:
        for _ in range(10):
            code = random_ring_code(ring, 2, rng, max_gens=2)
            words, dual = code.codewords(), char_dual_r(code)
            assert len(words) * len(dual) == ring.order**2
            for x in words[:10]:
                for y in dual[:10]:
                    s = sum(a * b for xe, ye in zip(x, y) for a, b in zip(xe, ye))
                    assert s % ring.k == 0


def test_transform_matches_char_dual(rng):
    for ring in RINGS:
        for n in (1, 2):
            for _ in range(6):
                code = random_ring_code(ring, n, rng)
                rep = check_identity_complete(code)
                assert rep.equal, rep.summary()


def test_additive_mode_also_satisfies_identity(rng):
    for ring in RINGS[:2]:
        for _ in range(8):
            code = random_ring_code(ring, 2, rng, linear=False)
            assert check_identity_complete(code).equal


def test_marginal_is_hamming_over_r(rng):
    for ring in RINGS:
        code = random_ring_code(ring, 2, rng)
        words = code.codewords()
        counts = {}
        for w in words:
            wt = sum(1 for e in w if any(e))
            counts[wt] = counts.get(wt, 0) + 1
        assert marginal_hamming(complete_we(code)) == Poly(1, {(w,): c for w, c in counts.items()})


def test_exponents_sum_to_n(rng):
    code = random_ring_code(RINGS[1], 3, rng)
    assert all(sum(e) == 3 for e in complete_we(code).terms)


def test_json_input():
    code = load_ring_code('{"k":2,"t":2,"modulus":[1,1,1],"n":1,"generators":[[[1,0]]]}')
    assert code.size() == 4
    with pytest.raises(ZkError):
        load_ring_code('{"k":2,"t":3,"modulus":[1,1,1],"n":1}')
    with pytest.raises(ZkError):
        RingR(2, (1, 1, 0))
