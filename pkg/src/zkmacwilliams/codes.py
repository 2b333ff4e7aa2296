"""Additive codes over Z_k.

A code is an additive subgroup of Z_k^n given by a list of generators.  Since
Z_k is not a field for composite k, codes are not assumed to be free; the
codeword set is obtained by closing the generators under addition.

Codewords are plain tuples of ints in ``[0, k-1]``.  Every set-valued output
is a lexicographically sorted tuple so results are diffable.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CapExceeded, ZkError

DEFAULT_CAP = 10**7

Word = tuple[int, ...]


@dataclass(frozen=True)
class CodeZk:
    """Additive code in Z_k^n spanned by ``generators``.

    ``k = 1`` is allowed and denotes the trivial ring; its only word is the
    zero vector.  Lattice code uses it to express Z^n as A_1.
    """

    k: int
    n: int
    generators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        if self.k < 1:
            raise ZkError(f"modulus must be >= 1, got {self.k}")
        if self.n < 1:
            raise ZkError(f"length must be >= 1, got {self.n}")
        gens = []
        for g in self.generators:
            g = tuple(int(v) % self.k for v in g)
            if len(g) != self.n:
                raise ZkError(f"generator {g} has length {len(g)}, expected {self.n}")
            gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def zero(cls, k: int, n: int) -> "CodeZk":
        return cls(k, n, ())

    @classmethod
    def full(cls, k: int, n: int) -> "CodeZk":
        return cls(k, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_words(cls, k: int, n: int, words: Iterable[Sequence[int]]) -> "CodeZk":
        """Code spanned by ``words`` (a full codeword list is its own generating set)."""
        return cls(k, n, tuple(tuple(w) for w in words))

    @classmethod
    def from_dict(cls, data: dict) -> "CodeZk":
        try:
            k, n = int(data["k"]), int(data["n"])
            gens = data.get("generators", [])
        except (KeyError, TypeError) as exc:
            raise ZkError(f"malformed code object: {exc}") from None
        return cls(k, n, tuple(tuple(int(v) for v in g) for g in gens))

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "generators": [list(g) for g in self.generators]}

    def codewords(self, cap: int = DEFAULT_CAP) -> tuple[Word, ...]:
        return enumerate_codewords(self, cap)

    def size(self, cap: int = DEFAULT_CAP) -> int:
        return len(enumerate_codewords(self, cap))

    def __contains__(self, word) -> bool:
        return tuple(int(v) % self.k for v in word) in _word_set(self)


def load_code(source: str | Path) -> CodeZk:
    """Read a code from a JSON file path or an inline JSON string."""
    text = str(source)
    if not text.lstrip().startswith("{"):
        text = Path(source).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ZkError(f"malformed JSON: {exc}") from None
    return CodeZk.from_dict(data)


def hamming_weight(x: Sequence[int]) -> int:
    return sum(1 for v in x if v)


def inner(x: Sequence[int], y: Sequence[int], k: int) -> int:
    return sum(a * b for a, b in zip(x, y)) % k


def _cyclic(g: Word, k: int) -> list[Word]:
    out = [tuple(0 for _ in g)]
    cur = g
    while any(cur):
        out.append(cur)
        cur = tuple((a + b) % k for a, b in zip(cur, g))
    return out


@lru_cache(maxsize=256)
def _closure(code: CodeZk, cap: int) -> tuple[Word, ...]:
    k = code.k
    words: set[Word] = {(0,) * code.n}
    # C = <g_1> + <g_2> + ... ; each step is a sumset with a cyclic subgroup
    for g in code.generators:
        if g in words:
            continue
        multiples = _cyclic(g, k)
        new = set()
        for w in words:
            for c in multiples:
                new.add(tuple((a + b) % k for a, b in zip(w, c)))
            if len(new) > cap:
                raise CapExceeded(f"code has more than {cap} codewords")
        words = new
    return tuple(sorted(words))


@lru_cache(maxsize=256)
def _word_set(code: CodeZk) -> frozenset:
    return frozenset(_closure(code, DEFAULT_CAP))


def enumerate_codewords(code: CodeZk, cap: int = DEFAULT_CAP) -> tuple[Word, ...]:
    """All codewords of ``code`` in lexicographic order.

    Raises :class:`CapExceeded` once the partial closure grows past ``cap``.
    """
    return _closure(code, cap)


def _all_words(k: int, n: int, cap: int):
    if k**n > cap:
        raise CapExceeded(f"k^n = {k}^{n} exceeds cap {cap}")
    return itertools.product(range(k), repeat=n)


def dual_code(code: CodeZk, cap: int = DEFAULT_CAP) -> CodeZk:
    """The dual code, found by scanning all of Z_k^n.

    The returned code has the full dual word list as its generators, so its
    enumeration is immediate.
    """
    k, n = code.k, code.n
    gens = code.generators
    words = [y for y in _all_words(k, n, cap) if all(inner(g, y, k) == 0 for g in gens)]
    return CodeZk.from_words(k, n, words)


def random_code(k: int, n: int, rng: random.Random, max_gens: int | None = None) -> CodeZk:
    """A code spanned by 0..max_gens uniform random vectors.

    Uses ``random.Random`` (MT19937), so a seed reproduces the same code on
    any platform running CPython.
    """
    if max_gens is None:
        max_gens = n
    count = rng.randint(0, max_gens)
    gens = tuple(tuple(rng.randrange(k) for _ in range(n)) for _ in range(count))
    return CodeZk(k, n, gens)
