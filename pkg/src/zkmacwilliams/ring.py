"""Codes over R = Z_k[xi] = Z_k[x]/(f) and their complete weight enumerators.

An element of R is its coefficient vector ``(a_0, ..., a_{t-1})`` in Z_k^t.
A word of R^n is a tuple of such vectors.  Duality is the character dual
under the coefficient pairing sum_j <tau(x_j), tau(y_j)> mod k, which is
the pairing the complete-enumerator identity is stated for.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .codes import DEFAULT_CAP, CodeZk, dual_code
from .cyclotomic import CyclotomicInt, zeta_pow
from .errors import CapExceeded, IndexOutOfRange, NonIntegralResult, NonRationalResult, ZkError
from .poly import Poly

RElement = tuple[int, ...]
RWord = tuple[RElement, ...]


@dataclass(frozen=True)
class RingR:
    """Z_k[x] modulo a monic polynomial of degree t.

    ``modulus`` lists coefficients constant term first.  Irreducibility is
    taken on trust; only monicity is checked.
    """

    k: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        mod = tuple(int(c) % self.k for c in self.modulus)
        if self.k < 2:
            raise ZkError("ring modulus k must be >= 2")
        if len(mod) < 2 or mod[-1] != 1:
            raise ZkError(f"modulus polynomial {self.modulus} must be monic of degree >= 1")
        object.__setattr__(self, "modulus", mod)

    @property
    def t(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.k**self.t

    def elements(self) -> list[RElement]:
        """All elements, ordered by their index u."""
        return [tau(self, l) for l in range(self.order)]

    def one(self) -> RElement:
        return (1,) + (0,) * (self.t - 1)

    def xi(self) -> RElement:
        if self.t == 1:
            return (-self.modulus[0] % self.k,)
        return (0, 1) + (0,) * (self.t - 2)


def r_add(ring: RingR, a: RElement, b: RElement) -> RElement:
    return tuple((x + y) % ring.k for x, y in zip(a, b))


def r_mul(ring: RingR, a: RElement, b: RElement) -> RElement:
    """Product in R: polynomial product reduced by the monic modulus, entries mod k."""
    k, t = ring.k, ring.t
    prod = [0] * (2 * t - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    f = ring.modulus
    for i in range(len(prod) - 1, t - 1, -1):
        c = prod[i] % k
        if c:
            for j in range(t + 1):
                prod[i - t + j] -= c * f[j]
    return tuple(v % k for v in prod[:t])


def u_index(ring: RingR, a: Sequence[int]) -> int:
    """u(a) = a_0 + a_1 k + ... + a_{t-1} k^(t-1)."""
    return sum((int(c) % ring.k) * ring.k**j for j, c in enumerate(a))


def tau(ring: RingR, l: int) -> RElement:
    """Base-k digit vector of l of length t; inverse of :func:`u_index`."""
    if not 0 <= l < ring.order:
        raise IndexOutOfRange(f"{l} not in [0, {ring.order - 1}]")
    digits = []
    for _ in range(ring.t):
        l, d = divmod(l, ring.k)
        digits.append(d)
    return tuple(digits)


def _flatten(word: RWord) -> tuple[int, ...]:
    return tuple(c for elem in word for c in elem)


def _unflatten(flat: Sequence[int], t: int) -> RWord:
    return tuple(tuple(flat[i:i + t]) for i in range(0, len(flat), t))


@dataclass(frozen=True)
class CodeR:
    """Code in R^n spanned by ``generators``.

    With ``linear=True`` (the default) the span is the R-span: generators are
    closed under addition and multiplication by xi.  With ``linear=False`` the
    span is only the additive one.
    """

    ring: RingR
    n: int
    generators: tuple[RWord, ...] = field(default=())
    linear: bool = True

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if len(g) != self.n:
                raise ZkError(f"generator has length {len(g)}, expected {self.n}")
            word = []
            for elem in g:
                elem = tuple(int(c) % self.ring.k for c in elem)
                if len(elem) != self.ring.t:
                    raise ZkError(f"ring element {elem} needs {self.ring.t} coefficients")
                word.append(elem)
            gens.append(tuple(word))
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_dict(cls, data: dict, linear: bool = True) -> "CodeR":
        try:
            ring = RingR(int(data["k"]), tuple(int(c) for c in data["modulus"]))
            if "t" in data and int(data["t"]) != ring.t:
                raise ZkError(f"t = {data['t']} disagrees with modulus degree {ring.t}")
            gens = tuple(tuple(tuple(e) for e in g) for g in data.get("generators", []))
            return cls(ring, int(data["n"]), gens, linear)
        except (KeyError, TypeError) as exc:
            raise ZkError(f"malformed ring code object: {exc}") from None

    def to_dict(self) -> dict:
        return {
            "k": self.ring.k,
            "t": self.ring.t,
            "modulus": list(self.ring.modulus),
            "n": self.n,
            "generators": [[list(e) for e in g] for g in self.generators],
        }

    def as_zk_code(self) -> CodeZk:
        """The same additive group seen as a code in Z_k^(n t)."""
        gens = []
        for g in self.generators:
            cur = g
            gens.append(_flatten(cur))
            if self.linear:
                # R-span of g is the Z_k-span of g, xi g, ..., xi^(t-1) g
                xi = self.ring.xi()
                for _ in range(self.ring.t - 1):
                    cur = tuple(r_mul(self.ring, xi, e) for e in cur)
                    gens.append(_flatten(cur))
        return CodeZk(self.ring.k, self.n * self.ring.t, tuple(gens))

    def codewords(self, cap: int = DEFAULT_CAP) -> list[RWord]:
        t = self.ring.t
        return [_unflatten(w, t) for w in self.as_zk_code().codewords(cap)]

    def size(self, cap: int = DEFAULT_CAP) -> int:
        return self.as_zk_code().size(cap)


def load_ring_code(source: str | Path, linear: bool = True) -> CodeR:
    text = str(source)
    if not text.lstrip().startswith("{"):
        text = Path(source).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ZkError(f"malformed JSON: {exc}") from None
    return CodeR.from_dict(data, linear)


def complete_composition(ring: RingR, word: RWord) -> tuple[int, ...]:
    counts = [0] * ring.order
    for elem in word:
        counts[u_index(ring, elem)] += 1
    return tuple(counts)


def complete_we_of_words(ring: RingR, words) -> Poly:
    counts = Counter(complete_composition(ring, w) for w in words)
    return Poly(ring.order, dict(counts))


def complete_we(code: CodeR, cap: int = DEFAULT_CAP) -> Poly:
    """Complete weight enumerator in |R| variables z_0..z_{|R|-1}."""
    return complete_we_of_words(code.ring, code.codewords(cap))


def char_dual_r(code: CodeR, cap: int = DEFAULT_CAP) -> list[RWord]:
    """Words y of R^n with sum_j <tau(x_j), tau(y_j)> = 0 mod k for every x in C."""
    ring = code.ring
    if ring.order**code.n > cap:
        raise CapExceeded(f"|R|^n = {ring.order ** code.n} exceeds cap {cap}")
    flat = CodeZk(ring.k, code.n * ring.t, tuple(code.as_zk_code().codewords(cap)))
    return [_unflatten(w, ring.t) for w in dual_code(flat, cap).codewords(cap)]


def character_matrix(ring: RingR) -> list[list[CyclotomicInt]]:
    """Entry (j, l) is zeta_k^<tau(j), tau(l)>."""
    elems = ring.elements()
    return [
        [zeta_pow(ring.k, sum(a * b for a, b in zip(ej, el))) for el in elems]
        for ej in elems
    ]


def mw_transform_complete(W: Poly, sizeC: int, ring: RingR) -> Poly:
    """Substitute z_j -> sum_l zeta^<tau(j), tau(l)> z_l, expand over Z[zeta_k], divide by |C|."""
    q = ring.order
    if W.nvars != q:
        raise ZkError(f"enumerator has {W.nvars} variables, ring has {q} elements")
    chi = character_matrix(ring)
    images = [Poly(q, {tuple(int(i == l) for i in range(q)): chi[j][l] for l in range(q)}) for j in range(q)]
    lifted = W.map_coeffs(lambda c: CyclotomicInt.from_int(ring.k, c))
    expanded = lifted.substitute(images)
    out = {}
    for e, c in expanded.terms.items():
        if not c.is_rational():
            raise NonRationalResult(f"coefficient {c} of {e} is not a rational integer")
        quo, rem = divmod(c.to_int(), sizeC)
        if rem or quo < 0:
            raise NonIntegralResult(f"coefficient {c.to_int()} of {e} is not a nonnegative multiple of {sizeC}")
        out[e] = quo
    return Poly(q, out)


def check_identity_complete(code: CodeR, cap: int = DEFAULT_CAP):
    from .enumerators import IdentityReport

    direct = complete_we_of_words(code.ring, char_dual_r(code, cap))
    try:
        transformed = mw_transform_complete(complete_we(code, cap), code.size(cap), code.ring)
    except (NonIntegralResult, NonRationalResult):
        transformed = Poly(code.ring.order)
    return IdentityReport(direct == transformed, direct, transformed)


def marginal_hamming(W: Poly) -> Poly:
    """z_0 -> 1, z_j -> z for j >= 1: the Hamming enumerator over the alphabet R."""
    z = Poly.var(1, 0)
    return W.substitute([Poly.const(1, 1)] + [z] * (W.nvars - 1))


def random_ring_code(ring: RingR, n: int, rng: random.Random, max_gens: int | None = None,
                     linear: bool = True) -> CodeR:
    if max_gens is None:
        max_gens = n
    count = rng.randint(0, max_gens)
    gens = tuple(
        tuple(tuple(rng.randrange(ring.k) for _ in range(ring.t)) for _ in range(n))
        for _ in range(count)
    )
    return CodeR(ring, n, gens, linear)
