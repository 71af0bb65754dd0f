"""Normal forms in the class-2 quotient pi / pi^[3] of the genus-g surface group.

An element is written  x_1^{n_1} ... x_{2g}^{n_{2g}} * prod_{(i,j) in P*} [x_i, x_j]^{m_ij}
where P* is every pair i < j except (2g-1, 2g).  The missing commutator is
eliminated with the surface relation, which is where the correction term on
related pairs (2h-1, 2h), h < g, comes from.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .words import Letter, SurfaceContext, Word


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True)
class PairIndexSet:
    genus: int
    pairs: tuple[tuple[int, int], ...]
    # 1 on related pairs (2h-1, 2h) with h < g, 0 elsewhere
    delta: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def index(self, i: int, j: int) -> int:
        return self._lookup()[(i, j)]

    def _lookup(self) -> dict[tuple[int, int], int]:
        return _pair_lookup(self.pairs)

    def is_related(self, i: int, j: int) -> bool:
        return is_related(i, j, self.genus)

    @property
    def related_indices(self) -> tuple[int, ...]:
        return tuple(k for k, (i, j) in enumerate(self.pairs) if self.is_related(i, j))

    @property
    def nonrelated_indices(self) -> tuple[int, ...]:
        return tuple(k for k, (i, j) in enumerate(self.pairs) if not self.is_related(i, j))


@lru_cache(maxsize=None)
def _pair_lookup(pairs):
    return {p: k for k, p in enumerate(pairs)}


def is_related(i: int, j: int, genus: int) -> bool:
    """(i, j) is related iff it equals (2h-1, 2h) for some 1 <= h <= g-1."""
    return j == i + 1 and j % 2 == 0 and j <= 2 * genus - 2


@lru_cache(maxsize=None)
def pair_index_set(genus: int) -> PairIndexSet:
    top = 2 * genus
    pairs = tuple(
        (i, j)
        for i in range(1, top + 1)
        for j in range(i + 1, top + 1)
        if (i, j) != (top - 1, top)
    )
    delta = tuple(int(is_related(i, j, genus)) for i, j in pairs)
    return PairIndexSet(genus, pairs, delta)


@dataclass(frozen=True)
class Nil2Element:
    genus: int
    n: tuple[int, ...]
    m: tuple[int, ...]

    @property
    def ctx(self) -> SurfaceContext:
        return SurfaceContext(self.genus)

    @property
    def pairs(self) -> PairIndexSet:
        return pair_index_set(self.genus)

    def m_at(self, i: int, j: int) -> int:
        return self.m[self.pairs.index(i, j)]

    def is_identity(self) -> bool:
        return not any(self.n) and not any(self.m)

    def __mul__(self, other: "Nil2Element") -> "Nil2Element":
        return multiply(self, other)

    def __pow__(self, p: int) -> "Nil2Element":
        return power(self, p)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "n": list(self.n),
            "m": [
                {"i": i, "j": j, "e": e}
                for (i, j), e in zip(self.pairs, self.m)
                if e
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Nil2Element":
        g = data["genus"]
        pairs = pair_index_set(g)
        m = [0] * len(pairs)
        for entry in data["m"]:
            m[pairs.index(entry["i"], entry["j"])] = entry["e"]
        return cls(g, tuple(data["n"]), tuple(m))

    @classmethod
    def from_coordinates(cls, genus: int, n, m: dict[tuple[int, int], int] | None = None):
        pairs = pair_index_set(genus)
        mm = [0] * len(pairs)
        for (i, j), e in (m or {}).items():
            mm[pairs.index(i, j)] = e
        return cls(genus, tuple(n), tuple(mm))


def _ctx_genus(ctx) -> int:
    return ctx.genus if isinstance(ctx, SurfaceContext) else int(ctx)


def identity(ctx) -> Nil2Element:
    g = _ctx_genus(ctx)
    return Nil2Element(g, (0,) * (2 * g), (0,) * len(pair_index_set(g)))


def generator(ctx, i: int, sign: int = 1) -> Nil2Element:
    """Class of x_i^sign (generator inverses have m = 0 as well)."""
    g = _ctx_genus(ctx)
    n = [0] * (2 * g)
    n[i - 1] = sign
    return Nil2Element(g, tuple(n), (0,) * len(pair_index_set(g)))


def cross_terms(n, k, pairs: PairIndexSet) -> list[int]:
    """Commutator correction from collecting x^n x^k into normal form.

    Entry (i, j) is -k_i n_j, plus k_{2g-1} n_{2g} on related pairs.
    """
    corr = k[-2] * n[-1]
    return [
        -k[i - 1] * n[j - 1] + d * corr
        for (i, j), d in zip(pairs.pairs, pairs.delta)
    ]


def multiply(a: Nil2Element, b: Nil2Element) -> Nil2Element:
    if a.genus != b.genus:
        raise ContextMismatch(f"genus {a.genus} vs {b.genus}")
    pairs = pair_index_set(a.genus)
    cross = cross_terms(a.n, b.n, pairs)
    return Nil2Element(
        a.genus,
        tuple(x + y for x, y in zip(a.n, b.n)),
        tuple(x + y + c for x, y, c in zip(a.m, b.m, cross)),
    )


def _quadratic(n, pairs: PairIndexSet) -> list[int]:
    # cross_terms(n, n): the per-step correction when squaring
    return cross_terms(n, n, pairs)


def inverse(a: Nil2Element) -> Nil2Element:
    pairs = pair_index_set(a.genus)
    q = _quadratic(a.n, pairs)
    return Nil2Element(
        a.genus,
        tuple(-x for x in a.n),
        tuple(-x + c for x, c in zip(a.m, q)),
    )


def power(a: Nil2Element, p: int) -> Nil2Element:
    """Closed form: m -> p*m + C(p,2) * (-n_i n_j + delta * n_{2g-1} n_{2g})."""
    pairs = pair_index_set(a.genus)
    q = _quadratic(a.n, pairs)
    binom = p * (p - 1) // 2
    return Nil2Element(
        a.genus,
        tuple(p * x for x in a.n),
        tuple(p * x + binom * c for x, c in zip(a.m, q)),
    )


def commutator_class(a: Nil2Element, b: Nil2Element) -> Nil2Element:
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b))


def _step(n: list[int], m: list[int], letter: Letter, pairs: PairIndexSet) -> None:
    # in-place right multiplication by x_i^sign; same law as multiply()
    i, s = letter.index, letter.sign
    top = len(n)
    for k, ((a, b), d) in enumerate(zip(pairs.pairs, pairs.delta)):
        if a == i:
            m[k] -= s * n[b - 1]
        if d and i == top - 1:
            m[k] += d * s * n[top - 1]
    n[i - 1] += s


def evaluate(w: Word, ctx) -> Nil2Element:
    """Left fold of multiply over the letters of w."""
    g = _ctx_genus(ctx)
    pairs = pair_index_set(g)
    n = [0] * (2 * g)
    m = [0] * len(pairs)
    for letter in w.letters:
        if not 1 <= letter.index <= 2 * g:
            raise ValueError(f"generator x{letter.index} out of range for genus {g}")
        _step(n, m, letter, pairs)
    return Nil2Element(g, tuple(n), tuple(m))


def commutator_basis(ctx, i: int, j: int) -> Nil2Element:
    """Class of [x_i, x_j] for any i < j, including the eliminated pair."""
    return commutator_class(generator(ctx, i), generator(ctx, j))
