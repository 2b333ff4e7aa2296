"""Construction A_k lattices and their nu-functions.

A_k(C) is the set of integer vectors whose reduction mod k lies in C.  The
nu-function counts lattice points by L1 norm,

    nu(z) = sum over x in the lattice of z^|x|_1.

It is computed three ways: as an exact truncated series built from the
one-dimensional residue-class series, by brute-force point enumeration, and
by floating evaluation of the rational closed form.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .codes import DEFAULT_CAP, CodeZk, dual_code
from .errors import CapExceeded, DomainError, ZkError

DEFAULT_TRUNC = 64


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series c_0 + c_1 z + ... + c_D z^D with exact integer coefficients."""

    coeffs: tuple[int, ...]

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, D: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * D)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        D = min(self.trunc, other.trunc)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[:D + 1], other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(c * other for c in self.coeffs))
        D = min(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        out = [0] * (D + 1)
        for i in range(D + 1):
            if a[i]:
                for j in range(D + 1 - i):
                    if b[j]:
                        out[i + j] += a[i] * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        result = TruncatedSeries.one(self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def substitute_power(self, c: int, D: int | None = None) -> "TruncatedSeries":
        """The series in z^c, truncated at ``D`` (defaults to c times the current cap)."""
        if D is None:
            D = self.trunc * c
        out = [0] * (D + 1)
        for j, v in enumerate(self.coeffs):
            if j * c > D:
                break
            out[j * c] = v
        return TruncatedSeries(tuple(out))

    def truncate(self, D: int) -> "TruncatedSeries":
        if D > self.trunc:
            raise ZkError(f"cannot extend a series known to degree {self.trunc} up to {D}")
        return TruncatedSeries(self.coeffs[:D + 1])

    def __call__(self, z: float) -> float:
        return float(sum(c * z**j for j, c in enumerate(self.coeffs)))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class LatticeAk:
    """scale * A_k(C).  ``scale = 1`` is the lattice itself, ``1/k`` the dual presentation.

    k = 1 gives Z^n regardless of the code.
    """

    k: int
    code: CodeZk
    scale: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        if self.code.k != self.k:
            raise ZkError(f"code is over Z_{self.code.k}, lattice needs Z_{self.k}")
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale <= 0:
            raise ZkError("scale must be positive")

    @classmethod
    def from_code(cls, code: CodeZk) -> "LatticeAk":
        return cls(code.k, code)

    @classmethod
    def integer_lattice(cls, n: int) -> "LatticeAk":
        return cls(1, CodeZk.zero(1, n))

    @property
    def n(self) -> int:
        return self.code.n

    def __contains__(self, x) -> bool:
        y = [Fraction(v) / self.scale for v in x]
        if any(v.denominator != 1 for v in y):
            return False
        return tuple(int(v) % self.k for v in y) in self.code


def _require_unit_scale(lat: LatticeAk) -> None:
    if lat.scale != 1:
        raise ZkError("operation is defined for scale = 1 lattices only")


def residue_series_1d(k: int, r: int, D: int) -> TruncatedSeries:
    """sum over y = r (mod k) of z^|y|, truncated at degree D.

    Closed forms: (1 + z^k)/(1 - z^k) for r = 0, (z^r + z^(k-r))/(1 - z^k) otherwise.
    """
    if k < 1 or not 0 <= r < k:
        raise DomainError(f"need 0 <= r < k, got r={r}, k={k}")
    out = [0] * (D + 1)
    if r == 0:
        out[0] = 1
        for d in range(k, D + 1, k):
            out[d] += 2
        return TruncatedSeries(tuple(out))
    for d in range(r, D + 1, k):
        out[d] += 1
    for d in range(k - r, D + 1, k):
        out[d] += 1
    return TruncatedSeries(tuple(out))


def residue_closed(k: int, r: int, z: float) -> float:
    zk = z**k
    if r == 0:
        return (1 + zk) / (1 - zk)
    return (z**r + z ** (k - r)) / (1 - zk)


@lru_cache(maxsize=128)
def _compositions(code: CodeZk, cap: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # codewords grouped by residue multiset: (counts per residue, multiplicity)
    k = code.k
    counts = Counter()
    for x in code.codewords(cap):
        comp = [0] * k
        for v in x:
            comp[v] += 1
        counts[tuple(comp)] += 1
    return tuple(sorted(counts.items()))


def _lattice_compositions(lat: LatticeAk, cap: int):
    if lat.k == 1:
        return (((lat.n,), 1),)
    return _compositions(lat.code, cap)


def nu_series(lat: LatticeAk, D: int = DEFAULT_TRUNC, cap: int = DEFAULT_CAP) -> TruncatedSeries:
    """Exact nu-series of A_k(C) to degree D, as a sum over codewords of residue-series products."""
    _require_unit_scale(lat)
    k = lat.k
    base = [residue_series_1d(k, r, D) for r in range(k)]
    powers: dict[tuple[int, int], TruncatedSeries] = {}
    total = TruncatedSeries((0,) * (D + 1))
    for comp, mult in _lattice_compositions(lat, cap):
        term = TruncatedSeries.one(D)
        for r, e in enumerate(comp):
            if e:
                if (r, e) not in powers:
                    powers[r, e] = base[r] ** e
                term = term * powers[r, e]
        total = total + term * mult
    return total


def brute_force_nu(lat: LatticeAk, D: int, cap: int = DEFAULT_CAP) -> TruncatedSeries:
    """Count points of A_k(C) in the L1 ball of radius D by scanning the cube [-D, D]^n."""
    _require_unit_scale(lat)
    n, k = lat.n, lat.k
    if (2 * D + 1) ** n > cap:
        raise CapExceeded(f"(2D+1)^n = {(2 * D + 1) ** n} exceeds cap {cap}")
    axis = np.arange(-D, D + 1)
    grid = np.stack(np.meshgrid(*([axis] * n), indexing="ij"), axis=-1).reshape(-1, n)
    norms = np.abs(grid).sum(axis=1)
    keep = norms <= D
    grid, norms = grid[keep], norms[keep]
    if k == 1:
        member = np.ones(len(grid), dtype=bool)
    else:
        in_code = np.zeros(k**n, dtype=bool)
        weights = k ** np.arange(n)
        for w in lat.code.codewords(cap):
            in_code[int(np.dot(w, weights))] = True
        member = in_code[(grid % k) @ weights]
    counts = np.bincount(norms[member], minlength=D + 1)
    return TruncatedSeries(tuple(int(c) for c in counts[:D + 1]))


def nu_eval_closed(lat: LatticeAk, z: float, cap: int = DEFAULT_CAP) -> float:
    """nu(z) from the closed forms of the residue series, in double precision.

    For ``scale = s`` the identity nu_{sL}(z) = nu_L(z^s) is applied first.
    """
    if not abs(z) < 1:
        raise DomainError(f"nu-series diverges at |z| = {abs(z)} >= 1")
    if lat.scale != 1:
        if z < 0:
            raise DomainError("fractional scaling needs z >= 0")
        z = z ** float(lat.scale)
    k = lat.k
    f = [residue_closed(k, r, z) for r in range(k)]
    return math.fsum(
        mult * math.prod(f[r] ** e for r, e in enumerate(comp) if e)
        for comp, mult in _lattice_compositions(lat, cap)
    )


def dual_lattice(lat: LatticeAk, cap: int = DEFAULT_CAP) -> LatticeAk:
    """A_k(C)* = (1/k) A_k(C-dual), as a scaled lattice."""
    _require_unit_scale(lat)
    if lat.k == 1:
        return lat
    return LatticeAk(lat.k, dual_code(lat.code, cap), Fraction(1, lat.k))


def dual_nu_eval(lat: LatticeAk, z: float, cap: int = DEFAULT_CAP) -> float:
    """nu of the dual lattice at z, i.e. nu_{A_k(C-dual)}(z^(1/k))."""
    if not 0 <= z < 1:
        raise DomainError(f"dual evaluation needs 0 <= z < 1, got {z}")
    return nu_eval_closed(dual_lattice(lat, cap), z, cap)


def lattice_det(lat: LatticeAk, cap: int = DEFAULT_CAP) -> Fraction:
    """scale^n k^n / |C|."""
    size = 1 if lat.k == 1 else lat.code.size(cap)
    return lat.scale**lat.n * Fraction(lat.k**lat.n, size)


def coset_count(code: CodeZk, cap: int = DEFAULT_CAP) -> int:
    """Number of cosets of C in Z_k^n, found by sweeping Z_k^n and marking whole cosets."""
    k, n = code.k, code.n
    if k**n > cap:
        raise CapExceeded(f"k^n = {k ** n} exceeds cap {cap}")
    words = code.codewords(cap)
    seen = set()
    count = 0
    for x in itertools.product(range(k), repeat=n):
        if x in seen:
            continue
        count += 1
        for c in words:
            seen.add(tuple((a + b) % k for a, b in zip(x, c)))
    return count


def scaled_lattice(lat: LatticeAk, c: int) -> LatticeAk:
    """c * A_k(C), written as A_{ck}(cC)."""
    _require_unit_scale(lat)
    if c < 1:
        raise DomainError("scale factor must be a positive integer")
    ck = c * lat.k
    if lat.k == 1:
        return LatticeAk(ck, CodeZk.zero(ck, lat.n))
    gens = tuple(tuple(c * v for v in g) for g in lat.code.generators)
    return LatticeAk(ck, CodeZk(ck, lat.n, gens))


def scale_law_check(lat: LatticeAk, c: int, D: int, cap: int = DEFAULT_CAP) -> bool:
    """Brute-force series of c * lattice equals the lattice's series in z^c, to degree D."""
    lhs = brute_force_nu(scaled_lattice(lat, c), D, cap)
    rhs = nu_series(lat, D // c, cap).substitute_power(c, D)
    return lhs == rhs
