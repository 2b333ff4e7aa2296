"""Hamming and effective-length weight enumerators and their MacWilliams transforms.

Every transform works on exact integer polynomials and divides by the code
size only when the division is exact; a remainder means the input was not
the enumerator of a code of that size.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .codes import DEFAULT_CAP, CodeZk, dual_code, hamming_weight
from .errors import CapExceeded, MixedModulus, NonIntegralResult
from .poly import Poly


def hamming_we(code: CodeZk, cap: int = DEFAULT_CAP) -> Poly:
    """W_C(z) = sum over codewords of z^w(x)."""
    counts = Counter(hamming_weight(x) for x in code.codewords(cap))
    return Poly(1, {(w,): c for w, c in counts.items()})


def _support_distribution(code: CodeZk, cap: int) -> Counter:
    return Counter(
        sum(1 << i for i, v in enumerate(x) if v) for x in code.codewords(cap)
    )


def effective_length_we(codes: Sequence[CodeZk], cap: int = DEFAULT_CAP) -> Poly:
    """W^(m)(z) = sum over x in C_1 x ... x C_m of z^ew(x).

    ew(x) counts the nonzero columns of the m x n matrix x, i.e. the size of
    the union of the row supports.  The product is never materialized: the
    support distributions of the factors are combined under bitwise OR.
    """
    if not codes:
        raise MixedModulus("need at least one code")
    k, n = codes[0].k, codes[0].n
    for c in codes:
        if c.k != k or c.n != n:
            raise MixedModulus(f"codes mix (k, n) = ({c.k}, {c.n}) with ({k}, {n})")
    sizes = [c.size(cap) for c in codes]
    if prod(sizes) > cap:
        raise CapExceeded(f"product code has {prod(sizes)} words, cap is {cap}")
    dist = Counter({0: 1})
    for c in codes:
        nxt: Counter = Counter()
        for mask, count in _support_distribution(c, cap).items():
            for acc, total in dist.items():
                nxt[acc | mask] += total * count
        dist = nxt
    weights: Counter = Counter()
    for mask, count in dist.items():
        weights[mask.bit_count()] += count
    return Poly(1, {(w,): c for w, c in weights.items()})


def _macwilliams(W: Poly, size: int, n: int, q: int) -> Poly:
    if W.nvars != 1:
        raise NonIntegralResult("expected a univariate enumerator")
    if W.degree() > n:
        raise NonIntegralResult(f"enumerator degree {W.degree()} exceeds length {n}")
    one_minus = Poly.univariate([1, -1])
    one_plus = Poly.univariate([1, q - 1])
    lows = [Poly.const(1, 1)]
    highs = [Poly.const(1, 1)]
    for _ in range(n):
        lows.append(lows[-1] * one_minus)
        highs.append(highs[-1] * one_plus)
    total = Poly(1)
    for (j,), a in W.terms.items():
        total = total + lows[j] * highs[n - j] * a
    return _exact_divide(total, size)


def _exact_divide(P: Poly, size: int) -> Poly:
    out = {}
    for e, c in P.terms.items():
        q, r = divmod(c, size)
        if r or q < 0:
            raise NonIntegralResult(f"coefficient {c} of exponent {e} is not a nonnegative multiple of {size}")
        out[e] = q
    return Poly(P.nvars, out)


def mw_transform_hamming(W: Poly, sizeC: int, n: int, k: int) -> Poly:
    """(1/|C|) (1+(k-1)z)^n W((1-z)/(1+(k-1)z)), expanded exactly."""
    return _macwilliams(W, sizeC, n, k)


def mw_transform_mtuple(W: Poly, sizeCprod: int, n: int, k: int, m: int) -> Poly:
    """The m-tuple transform: the Hamming transform over an alphabet of size k^m."""
    return _macwilliams(W, sizeCprod, n, k**m)


def homogenize(W: Poly, n: int) -> Poly:
    """W(z) -> W(z1, z2) = sum A_j z1^j z2^(n-j); the first variable carries the weight."""
    return Poly(2, {(j, n - j): c for (j,), c in W.terms.items()})


def mw_transform_homogeneous(Wh: Poly, sizeC: int, k: int) -> Poly:
    """(1/|C|) W(z2 - z1, z2 + (k-1) z1) on a homogeneous two-variable enumerator."""
    z1, z2 = Poly.var(2, 0), Poly.var(2, 1)
    return _exact_divide(Wh.substitute([z2 - z1, z2 + z1 * (k - 1)]), sizeC)


@dataclass
class IdentityReport:
    """Outcome of comparing an enumerator of the dual against the transform."""

    equal: bool
    direct: Poly
    transformed: Poly

    @property
    def diff(self) -> Poly:
        return self.direct - self.transformed

    def summary(self, names=None) -> str:
        if self.equal:
            return f"EQUAL {self.direct.to_text(names)}"
        return (
            f"UNEQUAL direct={self.direct.to_text(names)} "
            f"transform={self.transformed.to_text(names)} diff={self.diff.to_text(names)}"
        )


def check_identity_hamming(code: CodeZk, cap: int = DEFAULT_CAP) -> IdentityReport:
    direct = hamming_we(dual_code(code, cap), cap)
    try:
        transformed = mw_transform_hamming(hamming_we(code, cap), code.size(cap), code.n, code.k)
    except NonIntegralResult:
        transformed = Poly(1)
    return IdentityReport(direct == transformed, direct, transformed)


def check_identity_mtuple(codes: Sequence[CodeZk], cap: int = DEFAULT_CAP) -> IdentityReport:
    duals = [dual_code(c, cap) for c in codes]
    direct = effective_length_we(duals, cap)
    size = prod(c.size(cap) for c in codes)
    k, n = codes[0].k, codes[0].n
    try:
        transformed = mw_transform_mtuple(effective_length_we(codes, cap), size, n, k, len(codes))
    except NonIntegralResult:
        transformed = Poly(1)
    return IdentityReport(direct == transformed, direct, transformed)
