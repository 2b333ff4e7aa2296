"""Exact arithmetic in Z[zeta_k] and the finite Fourier transform on Z_k^n.

Elements of Z[zeta_k] are stored as integer coefficient vectors of length
phi(k), the canonical remainder modulo the k-th cyclotomic polynomial.  Two
elements are equal iff their vectors are equal, so every identity involving
character values is checked without floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .codes import DEFAULT_CAP, CodeZk, Word
from .errors import CapExceeded, NotASubgroup, ZkError


def _poly_divmod(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    # den is monic, coefficients constant term first
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quot, num[:dd] if dd else [0]


@lru_cache(maxsize=None)
def cyclotomic_poly(k: int) -> tuple[int, ...]:
    """Coefficients of Phi_k, constant term first.

    Obtained by dividing x^k - 1 by Phi_d for every proper divisor d of k.
    """
    if k < 1:
        raise ZkError("cyclotomic order must be >= 1")
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_poly(d))
            assert not any(rem)
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(k: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vector of x^j for 0 <= j < 2*phi(k) and j < k."""
    phi = cyclotomic_poly(k)
    deg = len(phi) - 1
    rows = []
    for j in range(max(2 * deg - 1, k)):
        v = [0] * (j + 1)
        v[j] = 1
        _, rem = _poly_divmod(v, phi)
        rows.append(tuple(rem + [0] * (deg - len(rem))))
    return tuple(rows)


def _reduce(coeffs: Sequence[int], k: int) -> tuple[int, ...]:
    table = _power_table(k)
    deg = len(table[0])
    out = list(coeffs[:deg]) + [0] * max(0, deg - len(coeffs))
    for j in range(deg, len(coeffs)):
        c = coeffs[j]
        if c:
            row = table[j]
            for i in range(deg):
                out[i] += c * row[i]
    return tuple(out)


@dataclass(frozen=True, eq=False)
class CyclotomicInt:
    """An element of Z[zeta_k] in canonical form modulo Phi_k."""

    k: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_int(cls, k: int, m: int) -> "CyclotomicInt":
        deg = len(cyclotomic_poly(k)) - 1
        return cls(k, (int(m),) + (0,) * (deg - 1))

    @classmethod
    def from_poly(cls, k: int, coeffs: Sequence[int]) -> "CyclotomicInt":
        """Reduce an arbitrary integer polynomial in zeta modulo Phi_k."""
        deg = len(cyclotomic_poly(k)) - 1
        _, rem = _poly_divmod([int(c) for c in coeffs], cyclotomic_poly(k))
        return cls(k, tuple(rem) + (0,) * (deg - len(rem)))

    @classmethod
    def from_group_ring(cls, k: int, counts: Sequence[int]) -> "CyclotomicInt":
        """Value of sum_a counts[a] * zeta^a for a in Z_k."""
        table = _power_table(k)
        deg = len(table[0])
        out = [0] * deg
        for a, c in enumerate(counts):
            if c:
                row = table[a % k]
                for i in range(deg):
                    out[i] += int(c) * row[i]
        return cls(k, tuple(out))

    def _coerce(self, other) -> "CyclotomicInt | None":
        if isinstance(other, CyclotomicInt):
            if other.k != self.k:
                raise ZkError(f"mixing Z[zeta_{self.k}] and Z[zeta_{other.k}]")
            return other
        if isinstance(other, (int, np.integer)):
            return CyclotomicInt.from_int(self.k, int(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInt(self.k, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.k, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return CyclotomicInt(self.k, tuple(a * int(other) for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicInt(self.k, _reduce(prod, self.k))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ZkError("negative powers are not supported")
        result = CyclotomicInt.from_int(self.k, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (int, np.integer, CyclotomicInt)) else None
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.k, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ZkError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi / self.k)
        return complex(sum(c * z**i for i, c in enumerate(self.coeffs)))

    def __repr__(self):
        return f"CyclotomicInt(k={self.k}, coeffs={self.coeffs})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
                if not mono:
                    parts.append(str(c))
                elif c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"


def zeta_pow(k: int, e: int) -> CyclotomicInt:
    """zeta_k^e, the character value psi(e) = exp(2 pi i e / k)."""
    if k < 1:
        raise ZkError("k must be >= 1")
    return CyclotomicInt(k, _power_table(k)[e % k])


def is_subgroup(k: int, H: Iterable[int]) -> bool:
    H = {h % k for h in H}
    return 0 in H and all((a + b) % k in H for a in H for b in H)


def char_sum_subgroup(k: int, H: Iterable[int]) -> CyclotomicInt:
    """Sum of zeta_k^a over an additive subgroup H of Z_k.

    Equals |H| for H = {0} and 0 otherwise.
    """
    H = sorted({h % k for h in H})
    if not is_subgroup(k, H):
        raise NotASubgroup(f"{H} is not an additive subgroup of Z_{k}")
    counts = [0] * k
    for a in H:
        counts[a] += 1
    return CyclotomicInt.from_group_ring(k, counts)


@dataclass(frozen=True)
class FunctionTable:
    """A function Z_k^n -> Z (or Z[zeta_k]), stored densely."""

    k: int
    n: int
    values: Mapping[Word, object]

    def __post_init__(self):
        if len(self.values) != self.k**self.n:
            raise ZkError(f"table has {len(self.values)} entries, expected {self.k ** self.n}")

    @classmethod
    def from_function(cls, k: int, n: int, f, cap: int = DEFAULT_CAP) -> "FunctionTable":
        if k**n > cap:
            raise CapExceeded(f"k^n = {k ** n} exceeds cap {cap}")
        return cls(k, n, {x: f(x) for x in itertools.product(range(k), repeat=n)})

    @classmethod
    def indicator(cls, code: CodeZk, cap: int = DEFAULT_CAP) -> "FunctionTable":
        words = set(code.codewords(cap))
        return cls.from_function(code.k, code.n, lambda x: int(x in words), cap)

    def __getitem__(self, x):
        return self.values[tuple(x)]

    def points(self) -> list[Word]:
        return sorted(self.values)

    def to_json(self) -> dict:
        out = {}
        for x in self.points():
            v = self.values[x]
            key = ",".join(map(str, x))
            out[key] = list(v.coeffs) if isinstance(v, CyclotomicInt) else int(v)
        return out


def fourier_transform_table(f: FunctionTable, cap: int = DEFAULT_CAP, sign: int = 1) -> FunctionTable:
    """(FT f)(x) = sum over xi of f(xi) * zeta^(sign * <x, xi>), exactly.

    ``sign=-1`` gives the kernel of the inverse transform; applying it to
    FT f returns k^n * f.
    """
    k, n = f.k, f.n
    size = k**n
    if size > cap:
        raise CapExceeded(f"k^n = {size} exceeds cap {cap}")
    points = f.points()
    pts = np.array(points, dtype=np.int64).reshape(size, n)
    pairing = (sign * (pts @ pts.T)) % k
    vals = [f.values[p] for p in points]
    out = {}
    if all(isinstance(v, (int, np.integer)) for v in vals):
        fv = np.array(vals, dtype=object)
        for i, x in enumerate(points):
            row = pairing[i]
            counts = [fv[row == a].sum() for a in range(k)]
            out[x] = CyclotomicInt.from_group_ring(k, counts)
    else:
        vals = [v if isinstance(v, CyclotomicInt) else CyclotomicInt.from_int(k, int(v)) for v in vals]
        for i, x in enumerate(points):
            acc = CyclotomicInt.from_int(k, 0)
            for j, a in enumerate(pairing[i]):
                acc = acc + vals[j] * zeta_pow(k, int(a))
            out[x] = acc
    return FunctionTable(k, n, out)


def inverse_fourier_transform_table(F: FunctionTable, cap: int = DEFAULT_CAP) -> FunctionTable:
    """Returns k^n * f for F = FT f (no division, stays in Z[zeta_k])."""
    return fourier_transform_table(F, cap, sign=-1)


def poisson_sides(code: CodeZk, f: FunctionTable, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """Both sides of the Poisson summation formula for ``f`` and ``code``.

    Returns ``(sum of f over the dual, (1/|C|) * sum of FT f over C)``; the
    right side is computed in Z[zeta_k] and must reduce to a rational integer
    divisible by |C|.
    """
    from .codes import dual_code
    from .errors import NonIntegralResult, NonRationalResult

    words = code.codewords(cap)
    ft = fourier_transform_table(f, cap)
    total = CyclotomicInt.from_int(code.k, 0)
    for x in words:
        total = total + ft[x]
    if not total.is_rational():
        raise NonRationalResult(f"sum of FT over C is {total}")
    num = total.to_int()
    if num % len(words):
        raise NonIntegralResult(f"{num} not divisible by |C| = {len(words)}")
    lhs = sum(int(f[y]) for y in dual_code(code, cap).codewords(cap))
    return lhs, num // len(words)


def flatten_block(rows: Sequence[Sequence[int]]) -> Word:
    """Row-major flattening of an m x n matrix.

    Under it Tr(x^T y) becomes the ordinary dot product, so the matrix-ring
    transform is the Z_k^(mn) transform.
    """
    return tuple(v for row in rows for v in row)


def block_code(codes: Sequence[CodeZk]) -> CodeZk:
    """C_1 x ... x C_m as an additive code in Z_k^(m*n) (row-major)."""
    k, n = codes[0].k, codes[0].n
    m = len(codes)
    gens = []
    for i, c in enumerate(codes):
        if c.k != k or c.n != n:
            raise ZkError("block codes must share k and n")
        for g in c.generators:
            row = [0] * (m * n)
            row[i * n:(i + 1) * n] = g
            gens.append(tuple(row))
    return CodeZk(k, m * n, tuple(gens))


def trace_pairing(x: Sequence[Sequence[int]], y: Sequence[Sequence[int]], k: int) -> int:
    """Tr(x^T y) mod k, summing the diagonal of the n x n product."""
    m, n = len(x), len(x[0])
    return sum(x[r][i] * y[r][i] for i in range(n) for r in range(m)) % k
