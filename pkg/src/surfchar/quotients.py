"""The quotients pi/K and pi/pi^e K, where K is the kernel of the intersection
pairing pi^[2] -> Z/g.

In pi/K every related commutator [x_{2h-1}, x_{2h}] collapses onto [x_1, x_2],
the non-related ones die, and [x_1, x_2]^g = 1; so an element is a vector
n in Z^{2g} plus one residue mK mod g.  Passing to pi/pi^e K reduces n mod e
and mK mod d = gcd(g, e, e(e-1)/2).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from . import nilpotent as nil
from .nilpotent import ContextMismatch, Nil2Element
from .words import SurfaceContext, Word


class EnumerationGuardError(RuntimeError):
    pass


DEFAULT_GUARD = 2_000_000


def pairing_form(k: Sequence[int], n: Sequence[int], genus: int) -> int:
    """sum_{i<g} k_{2i-1} n_{2i} - (g-1) k_{2g-1} n_{2g}  (unreduced)."""
    total = sum(k[2 * i] * n[2 * i + 1] for i in range(genus - 1))
    return total - (genus - 1) * k[-2] * n[-1]


@dataclass(frozen=True)
class ModKElement:
    genus: int
    n: tuple[int, ...]
    mK: int

    def __post_init__(self):
        object.__setattr__(self, "mK", self.mK % self.genus)

    def __mul__(self, other):
        return multiply_modK(self, other)

    def is_identity(self) -> bool:
        return not any(self.n) and self.mK == 0


def modK_identity(genus: int) -> ModKElement:
    return ModKElement(genus, (0,) * (2 * genus), 0)


def project_to_modK(a: Nil2Element) -> ModKElement:
    pairs = nil.pair_index_set(a.genus)
    mk = sum(a.m[k] for k in pairs.related_indices)
    return ModKElement(a.genus, a.n, mk)


def multiply_modK(a: ModKElement, b: ModKElement) -> ModKElement:
    if a.genus != b.genus:
        raise ContextMismatch(f"genus {a.genus} vs {b.genus}")
    return ModKElement(
        a.genus,
        tuple(x + y for x, y in zip(a.n, b.n)),
        a.mK + b.mK - pairing_form(b.n, a.n, a.genus),
    )


def inverse_modK(a: ModKElement) -> ModKElement:
    return ModKElement(a.genus, tuple(-x for x in a.n), -a.mK - pairing_form(a.n, a.n, a.genus))


def power_modK(a: ModKElement, p: int) -> ModKElement:
    binom = p * (p - 1) // 2
    return ModKElement(
        a.genus,
        tuple(p * x for x in a.n),
        p * a.mK - binom * pairing_form(a.n, a.n, a.genus),
    )


def intersection_pairing(a: Nil2Element) -> int:
    """Image of a class in pi^[2]/pi^[3] under the intersection pairing, mod g."""
    if any(a.n):
        raise ValueError("intersection pairing needs an element of pi^[2] (n = 0)")
    return project_to_modK(a).mK


def m_modulus(genus: int, e: int) -> int:
    return gcd(genus, e, e * (e - 1) // 2)


_m_modulus_cached = lru_cache(maxsize=None)(m_modulus)


@dataclass(frozen=True)
class QuotientSpec:
    genus: int
    e: int

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("genus must be at least 2")
        if self.e < 1:
            raise ValueError("exponent must be positive")

    @property
    def n_modulus(self) -> int:
        return self.e

    @property
    def d(self) -> int:
        return _m_modulus_cached(self.genus, self.e)

    @property
    def order(self) -> int:
        return self.e ** (2 * self.genus) * self.d

    @property
    def is_standard_exponent(self) -> bool:
        return self.e in (self.genus, 2 * self.genus)

    def identity(self) -> "QuotientElement":
        return QuotientElement(self, (0,) * (2 * self.genus), 0)

    def element(self, n: Iterable[int], mK: int = 0) -> "QuotientElement":
        return QuotientElement(self, tuple(x % self.e for x in n), mK % self.d)

    def generator(self, i: int, sign: int = 1) -> "QuotientElement":
        n = [0] * (2 * self.genus)
        n[i - 1] = sign
        return self.element(n)


@dataclass(frozen=True)
class QuotientElement:
    spec: QuotientSpec
    n: tuple[int, ...]
    mK: int

    def __mul__(self, other):
        return multiply_quotient(self, other)

    def __pow__(self, p: int):
        return power_quotient(self, p)

    def is_identity(self) -> bool:
        return self.mK == 0 and not any(self.n)

    def key(self) -> tuple[int, ...]:
        return self.n + (self.mK,)

    def to_json(self) -> dict:
        return {"e": self.spec.e, "d": self.spec.d, "n": list(self.n), "mK": self.mK}


def multiply_quotient(a: QuotientElement, b: QuotientElement) -> QuotientElement:
    if a.spec != b.spec:
        raise ContextMismatch(f"{a.spec} vs {b.spec}")
    spec = a.spec
    e = spec.e
    an, bn = a.n, b.n
    cross = sum(bn[i] * an[i + 1] for i in range(0, len(an) - 2, 2)) - (spec.genus - 1) * bn[-2] * an[-1]
    return QuotientElement(
        spec,
        tuple([(x + y) % e for x, y in zip(an, bn)]),
        (a.mK + b.mK - cross) % spec.d,
    )


def inverse_quotient(a: QuotientElement) -> QuotientElement:
    spec = a.spec
    return QuotientElement(
        spec,
        tuple(-x % spec.e for x in a.n),
        (-a.mK - pairing_form(a.n, a.n, spec.genus)) % spec.d,
    )


def power_quotient(a: QuotientElement, p: int) -> QuotientElement:
    spec = a.spec
    binom = p * (p - 1) // 2
    return QuotientElement(
        spec,
        tuple(p * x % spec.e for x in a.n),
        (p * a.mK - binom * pairing_form(a.n, a.n, spec.genus)) % spec.d,
    )


def project_to_quotient(a: Nil2Element | ModKElement, spec: QuotientSpec) -> QuotientElement:
    if isinstance(a, Nil2Element):
        a = project_to_modK(a)
    if a.genus != spec.genus:
        raise ContextMismatch(f"genus {a.genus} vs {spec.genus}")
    return spec.element(a.n, a.mK)


def lift(q: QuotientElement) -> Nil2Element:
    """Normal-form representative prod x_i^{n_i} [x_1, x_2]^{mK}."""
    return nil.Nil2Element.from_coordinates(q.spec.genus, q.n, {(1, 2): q.mK})


def is_member(w: Word, spec: QuotientSpec) -> bool:
    """Is w in pi^e K?"""
    return project_to_quotient(nil.evaluate(w, spec.genus), spec).is_identity()


def enumerate_quotient(spec: QuotientSpec, guard: int = DEFAULT_GUARD) -> list[QuotientElement]:
    """BFS closure of the generator classes and their inverses, in BFS order."""
    if spec.order > guard:
        raise EnumerationGuardError(f"quotient of order {spec.order} exceeds guard {guard}")
    gens = [spec.generator(i, s) for i in range(1, 2 * spec.genus + 1) for s in (1, -1)]
    start = spec.identity()
    seen = {start.key(): start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for x in gens:
            b = multiply_quotient(a, x)
            if b.key() not in seen:
                if len(seen) >= guard:
                    raise EnumerationGuardError(f"closure exceeded guard {guard}")
                seen[b.key()] = b
                queue.append(b)
    return list(seen.values())


# -- e-th power spans in pi/K ---------------------------------------------------

@dataclass(frozen=True)
class LatticeSpan:
    """Subgroup of pi/K: Hermite basis of its n-lattice and the generator of
    its central part, a divisor of g standing for the subgroup mk_generator*Z/g."""

    genus: int
    n_basis: tuple[tuple[int, ...], ...]
    mk_generator: int

    @property
    def mk_subgroup(self) -> tuple[int, ...]:
        return tuple(range(0, self.genus, self.mk_generator))


def hermite_basis(rows: Iterable[Sequence[int]], width: int) -> tuple[tuple[int, ...], ...]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``."""
    basis = [list(r) for r in rows if any(r)]
    out = []
    col = 0
    while basis and col < width:
        live = [r for r in basis if r[col]]
        rest = [r for r in basis if not r[col]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            nxt = [pivot]
            for r in live[1:]:
                q = r[col] // pivot[col]
                r = [a - q * b for a, b in zip(r, pivot)]
                (nxt if r[col] else rest).append(r)
            live = nxt
        if live:
            pivot = live[0]
            if pivot[col] < 0:
                pivot = [-a for a in pivot]
            for prev in out:
                q = prev[col] // pivot[col]
                prev[:] = [a - q * b for a, b in zip(prev, pivot)]
            out.append(pivot)
        basis = [r for r in rest if any(r)]
        col += 1
    return tuple(tuple(r) for r in out)


def subgroup_span(elements: Sequence[ModKElement], genus: int) -> LatticeSpan:
    """The subgroup of pi/K generated by ``elements``.

    Row-reduces the n-parts with group operations, so the central residues
    of every relation are tracked exactly; the central part is then generated
    by those residues and all commutators between the reduced generators.
    """
    width = 2 * genus
    pool = [a for a in elements]
    echelon: list[ModKElement] = []
    central = [genus]
    for col in range(width):
        live = [a for a in pool if a.n[col]]
        pool = [a for a in pool if not a.n[col]]
        while len(live) > 1:
            live.sort(key=lambda a: abs(a.n[col]))
            pivot = live[0]
            nxt = [pivot]
            for a in live[1:]:
                q = a.n[col] // pivot.n[col]
                a = multiply_modK(a, power_modK(pivot, -q))
                (nxt if a.n[col] else pool).append(a)
            live = nxt
        echelon.extend(live)
    central.extend(a.mK for a in pool if not any(a.n))
    for i, a in enumerate(echelon):
        for b in echelon[i + 1:]:
            c = multiply_modK(multiply_modK(inverse_modK(a), inverse_modK(b)), multiply_modK(a, b))
            central.append(c.mK)
    return LatticeSpan(genus, hermite_basis((a.n for a in echelon), width), gcd(*central))


def gpower_span(ctx, e: int, catalog: Sequence[Word]) -> LatticeSpan:
    """Span in pi/K of the e-th powers of the catalog words."""
    g = ctx.genus if isinstance(ctx, SurfaceContext) else int(ctx)
    powers = [power_modK(project_to_modK(nil.evaluate(w, g)), e) for w in catalog]
    return subgroup_span(powers, g)


def general_power_span(genus: int, e: int) -> LatticeSpan:
    """Span of all e-th powers: e Z^{2g} and the residues generated by e and C(e,2)."""
    width = 2 * genus
    basis = tuple(tuple(e if j == i else 0 for j in range(width)) for i in range(width))
    return LatticeSpan(genus, basis, m_modulus(genus, e))
