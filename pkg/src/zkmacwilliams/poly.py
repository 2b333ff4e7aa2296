"""Sparse multivariate polynomials with exact coefficients.

Coefficients are Python ints or :class:`~zkmacwilliams.cyclotomic.CyclotomicInt`;
anything supporting ``+``, ``*`` and comparison with ``0`` works.  Zero
coefficients are never stored.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import ZkError

Exponent = tuple[int, ...]


class Poly:
    """Polynomial in ``nvars`` variables, ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, object] = {}
        for e, c in items:
            e = tuple(int(v) for v in e)
            if len(e) != nvars:
                raise ZkError(f"exponent {e} does not have {nvars} entries")
            acc[e] = acc[e] + c if e in acc else c
        self.terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def univariate(cls, coeffs: Sequence[int]) -> "Poly":
        """1-variable polynomial from a dense list, constant term first."""
        return cls(1, {(j,): c for j, c in enumerate(coeffs) if c})

    # arithmetic

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ZkError("polynomials have different numbers of variables")
            return other
        return Poly.const(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        out: dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ZkError("negative powers are not supported")
        result = Poly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, int):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # queries

    def coeff(self, e: Exponent | int):
        if isinstance(e, int):
            e = (e,)
        return self.terms.get(tuple(e), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficients(self) -> list:
        """Dense coefficient list of a univariate polynomial."""
        if self.nvars != 1:
            raise ZkError("dense coefficient list needs a univariate polynomial")
        return [self.coeff(j) for j in range(self.degree() + 1)]

    def __call__(self, *point):
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, p in zip(point, e):
                if p:
                    term = term * x**p
            total = total + term
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Replace variable i by ``images[i]`` (all images share one arity)."""
        if len(images) != self.nvars:
            raise ZkError("need one image per variable")
        nv = images[0].nvars
        cache: dict[tuple[int, int], Poly] = {}

        def power(i, p):
            if (i, p) not in cache:
                cache[i, p] = images[i] ** p
            return cache[i, p]

        total = Poly(nv)
        for e, c in self.terms.items():
            term = Poly.const(nv, c)
            for i, p in enumerate(e):
                if p:
                    term = term * power(i, p)
            total = total + term
        return total

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # presentation

    def sorted_terms(self) -> list[tuple[Exponent, object]]:
        """Terms by ascending total degree, then graded-lex (z0 before z1)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-v for v in t[0])))

    def var_names(self, names: Sequence[str] | None = None) -> list[str]:
        if names is not None:
            return list(names)
        if self.nvars == 1:
            return ["z"]
        return [f"z{i}" for i in range(self.nvars)]

    def to_text(self, names: Sequence[str] | None = None) -> str:
        """Canonical text form, e.g. ``1 + 2*z^2``."""
        names = self.var_names(names)
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if p == 1 else f"{names[i]}^{p}" for i, p in enumerate(e) if p
            )
            neg = isinstance(c, int) and c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append("-" + body if neg else body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def to_json(self) -> list:
        """``[[exponent, coefficient-string], ...]`` in canonical order."""
        return [[list(e), str(c)] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list, nvars: int | None = None) -> "Poly":
        if nvars is None:
            if not data:
                raise ZkError("cannot infer arity of an empty polynomial")
            nvars = len(data[0][0])
        return cls(nvars, [(tuple(e), int(c)) for e, c in data])

    def __repr__(self):
        return f"Poly({self.nvars}, {self.to_text()!r})"

    __str__ = to_text
