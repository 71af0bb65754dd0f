"""Dehn twists on the surface group and their action on the class-2 quotients.

Twists are given as generator substitutions (tau_i around the simple loops
gamma_i, sigma_i around x_{2i-1}).  On pi/pi^[3] the commutator lattice is
central, so each twist acts on it linearly and ``twist_matrix`` records that
action; the elimination search composes the differences ``tau(z) - z``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import nilpotent as nil
from .nilpotent import Nil2Element
from .quotients import (
    QuotientElement,
    QuotientSpec,
    enumerate_quotient,
    inverse_quotient,
    multiply_quotient,
    power_quotient,
    project_to_quotient,
    DEFAULT_GUARD,
)
from .words import (
    EndomorphismTable,
    SurfaceContext,
    Word,
    commutator_word,
    concat,
    gen,
    invert_word,
    parse_word,
    substitute,
    word_power,
)


class TwistNameError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class TwistName:
    kind: str  # "tau" or "sigma"
    index: int

    def __str__(self) -> str:
        return f"{'t' if self.kind == 'tau' else 's'}{self.index}"

    @classmethod
    def parse(cls, text: str, ctx: SurfaceContext) -> "TwistName":
        match = re.fullmatch(r"\s*(t|s|tau|sigma)_?(\d+)\s*", text)
        if not match:
            raise TwistNameError(f"unknown twist name {text!r}")
        kind = "tau" if match.group(1) in ("t", "tau") else "sigma"
        name = cls(kind, int(match.group(2)))
        name.validate(ctx)
        return name

    def validate(self, ctx: SurfaceContext) -> None:
        top = 2 * ctx.genus + 1 if self.kind == "tau" else ctx.genus
        if not 1 <= self.index <= top:
            raise TwistNameError(f"{self} out of range for genus {ctx.genus}")


def all_twists(ctx: SurfaceContext) -> list[TwistName]:
    g = ctx.genus
    return [TwistName("tau", i) for i in range(1, 2 * g + 2)] + [
        TwistName("sigma", i) for i in range(1, g + 1)
    ]


def _x(i: int) -> Word:
    return gen(i)


def _X(i: int) -> Word:
    return gen(i, -1)


def gamma_word(i: int, ctx: SurfaceContext) -> Word:
    g = ctx.genus
    if not 1 <= i <= 2 * g + 1:
        raise ValueError(f"gamma_{i} out of range for genus {g}")
    if i == 1:
        return _x(1)
    if i == 2 * g + 1:
        return concat(invert_word(commutator_word(_x(2 * g - 1), _x(2 * g))), _X(2 * g - 1))
    if i % 2 == 0:
        return _x(i)
    # gamma_{2h-1} = x_{2h-1} [x_{2h-3}, x_{2h-2}]^-1 x_{2h-3}^-1
    return Word(
        _x(i).letters
        + invert_word(commutator_word(_x(i - 2), _x(i - 1))).letters
        + _X(i - 2).letters
    )


def twist_table(name: TwistName, ctx: SurfaceContext) -> EndomorphismTable:
    name.validate(ctx)
    g, i = ctx.genus, name.index
    images: dict[int, Word] = {}
    if name.kind == "sigma":
        images[2 * i] = concat(_X(2 * i - 1), _x(2 * i))
    elif i == 1:
        images[2] = concat(_X(1), _x(2))
    elif i == 2 * g + 1:
        images[2 * g] = concat(_X(2 * g - 1), _x(2 * g))
    elif i % 2 == 0:
        images[i - 1] = concat(_x(i), _x(i - 1))
    else:
        h2 = i + 1  # = 2h
        gam = gamma_word(i, ctx)
        gam_inv = invert_word(gam)
        images[h2 - 2] = concat(_x(h2 - 2), gam)
        images[h2 - 1] = Word(gam_inv.letters + _x(h2 - 1).letters + gam.letters)
        images[h2] = concat(gam_inv, _x(h2))
    return EndomorphismTable(ctx, images)


def separating_word(h: int, ctx: SurfaceContext) -> Word:
    """s_h = prod_{i=1}^h [x_{2i-1}, x_{2i}]."""
    w = Word()
    for i in range(1, h + 1):
        w = concat(w, commutator_word(_x(2 * i - 1), _x(2 * i)))
    return w


@dataclass(frozen=True)
class SimpleLoopCatalog:
    ctx: SurfaceContext
    nonseparating: dict[str, Word] = field(default_factory=dict)
    separating: dict[str, Word] = field(default_factory=dict)
    # for even g, s_{g/2} lies in pi^g K; listed here so probes can single it out
    flagged: tuple[str, ...] = ()

    def items(self):
        yield from self.nonseparating.items()
        yield from self.separating.items()


def simple_loop_catalog(ctx: SurfaceContext) -> SimpleLoopCatalog:
    g = ctx.genus
    nonsep = {f"x{i}": _x(i) for i in range(1, 2 * g + 1)}
    nonsep.update({f"gamma{i}": gamma_word(i, ctx) for i in range(1, 2 * g + 2)})
    nonsep["x1x2"] = concat(_x(1), _x(2))
    sep = {f"s{h}": separating_word(h, ctx) for h in range(1, g)}
    flagged = (f"s{g // 2}",) if g % 2 == 0 else ()
    return SimpleLoopCatalog(ctx, nonsep, sep, flagged)


# -- induced maps ------------------------------------------------------------

def is_well_defined(t: EndomorphismTable, ctx: SurfaceContext | None = None) -> bool:
    ctx = ctx or t.ctx
    return nil.evaluate(substitute(ctx.relator, t), ctx).is_identity()


class NotWellDefined(ValueError):
    pass


@dataclass(frozen=True)
class InducedNil2:
    """Precomputed images of generator and commutator classes under a table."""

    genus: int
    gen_images: tuple[Nil2Element, ...]
    pair_images: tuple[Nil2Element, ...]

    def __call__(self, a: Nil2Element) -> Nil2Element:
        out = nil.identity(self.genus)
        for img, k in zip(self.gen_images, a.n):
            if k:
                out = nil.multiply(out, nil.power(img, k))
        for img, k in zip(self.pair_images, a.m):
            if k:
                out = nil.multiply(out, nil.power(img, k))
        return out


@lru_cache(maxsize=512)
def induced_map(t: EndomorphismTable) -> InducedNil2:
    if not is_well_defined(t):
        raise NotWellDefined("table does not preserve the surface relation mod pi^[3]")
    g = t.ctx.genus
    gens = tuple(nil.evaluate(t.image(i), g) for i in range(1, 2 * g + 1))
    pairs = tuple(
        nil.commutator_class(gens[i - 1], gens[j - 1]) for i, j in nil.pair_index_set(g)
    )
    return InducedNil2(g, gens, pairs)


def induced_nil2(t: EndomorphismTable, a: Nil2Element) -> Nil2Element:
    return induced_map(t)(a)


def twist_matrix(t: EndomorphismTable) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of the twist on pi^[2]/pi^[3]; column k is the image of basis pair k."""
    f = induced_map(t)
    cols = [img.m for img in f.pair_images]
    size = len(cols)
    return tuple(tuple(cols[c][r] for c in range(size)) for r in range(size))


def twist_difference(t: EndomorphismTable, z: Sequence[int]) -> tuple[int, ...]:
    """Additive tau(z) - z on the commutator lattice."""
    g = t.ctx.genus
    a = Nil2Element(g, (0,) * (2 * g), tuple(z))
    image = induced_nil2(t, a)
    return tuple(x - y for x, y in zip(image.m, z))


@dataclass
class InducedPermutation:
    elements: list[QuotientElement]
    images: list[int]
    is_bijection: bool
    is_homomorphism: bool

    def __call__(self, q: QuotientElement) -> QuotientElement:
        return self.elements[self.images[self._index[q.key()]]]

    def __post_init__(self):
        self._index = {q.key(): k for k, q in enumerate(self.elements)}

    def inverse(self) -> list[int]:
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images):
            inv[v] = k
        return inv


class QuotientAction:
    """A table's induced map on pi/pi^e K, computed from generator images."""

    def __init__(self, t: EndomorphismTable, spec: QuotientSpec):
        f = induced_map(t)
        self.spec = spec
        self.gen_images = [project_to_quotient(img, spec) for img in f.gen_images]
        a, b = self.gen_images[0], self.gen_images[1]
        comm = multiply_quotient(
            multiply_quotient(inverse_quotient(a), inverse_quotient(b)), multiply_quotient(a, b)
        )
        self.comm_image = comm

    def __call__(self, q: QuotientElement) -> QuotientElement:
        out = self.spec.identity()
        for img, k in zip(self.gen_images, q.n):
            if k:
                out = multiply_quotient(out, power_quotient(img, k))
        if q.mK:
            out = multiply_quotient(out, power_quotient(self.comm_image, q.mK))
        return out


def induced_quotient_permutation(
    t: EndomorphismTable,
    spec: QuotientSpec,
    elements: list[QuotientElement] | None = None,
    guard: int = DEFAULT_GUARD,
) -> InducedPermutation:
    if elements is None:
        elements = enumerate_quotient(spec, guard)
    act = QuotientAction(t, spec)
    index = {q.key(): k for k, q in enumerate(elements)}
    images = []
    for q in elements:
        images.append(index[act(q).key()])
    bijective = len(set(images)) == len(elements)
    # f(a x) = f(a) f(x) for every a and generator x forces f to be a homomorphism;
    # the group is finite, so positive generators already span it as a monoid
    homomorphic = True
    gens = [spec.generator(i) for i in range(1, 2 * spec.genus + 1)]
    gen_imgs = [act(x) for x in gens]
    for k, a in enumerate(elements):
        fa = elements[images[k]]
        for x, fx in zip(gens, gen_imgs):
            if elements[images[index[multiply_quotient(a, x).key()]]] != multiply_quotient(fa, fx):
                homomorphic = False
                break
        if not homomorphic:
            break
    return InducedPermutation(elements, images, bijective, homomorphic)


# -- elimination certificate -------------------------------------------------

@dataclass(frozen=True)
class EliminationStep:
    target: tuple[int, int]
    operators: tuple[str, ...]
    basis_pair: tuple[int, int]
    multiple: int

    def to_json(self) -> dict:
        return {
            "target": list(self.target),
            "operators": list(self.operators),
            "basis_pair": list(self.basis_pair),
            "multiple": self.multiple,
        }


@dataclass
class EliminationCertificate:
    genus: int
    steps: list[EliminationStep]
    unresolved: list[tuple[int, int]]

    @property
    def complete(self) -> bool:
        return not self.unresolved

    @property
    def rank(self) -> int:
        return len(self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


def _matmul(a, b):
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in zip(*b)) for row in a
    )


def _isolated(state, unknowns, pairs):
    """(row, column, value) if exactly one entry of the state is nonzero."""
    hit = None
    for r, row in enumerate(state):
        for c, v in enumerate(row):
            if v:
                if hit is not None:
                    return None
                hit = (r, c, v)
    return hit


def elimination_certificate(ctx: SurfaceContext, max_depth: int | None = None) -> EliminationCertificate:
    """Search for compositions of twist differences isolating each unknown.

    The state is a symbolic vector z = sum over non-related pairs of
    n_ij [x_i, x_j], stored as a (pairs x unknowns) integer matrix.  A state
    whose only nonzero entry is +-1 at a non-related pair forces that unknown
    to vanish modulo any m; the unknown is then dropped and the search restarts.
    """
    g = ctx.genus
    pairs = nil.pair_index_set(g)
    depth_limit = max_depth if max_depth is not None else 4 * g
    nonrel = set(pairs.nonrelated_indices)
    names = all_twists(ctx)
    size = len(pairs)
    diffs = []
    for name in names:
        mat = twist_matrix(twist_table(name, ctx))
        diffs.append((str(name), tuple(
            tuple(mat[r][c] - (r == c) for c in range(size)) for r in range(size)
        )))
    remaining = sorted(nonrel)
    steps: list[EliminationStep] = []
    while remaining:
        start = tuple(tuple(int(r == u) for u in remaining) for r in range(size))
        found = None
        seen = {start}
        frontier = deque([(start, ())])
        while frontier and found is None:
            state, ops = frontier.popleft()
            if len(ops) >= depth_limit:
                continue
            for name, d in diffs:
                nxt = _matmul(d, state)
                if nxt in seen:
                    continue
                seen.add(nxt)
                hit = _isolated(nxt, remaining, pairs)
                if hit is not None and abs(hit[2]) == 1 and hit[0] in nonrel:
                    found = (hit, ops + (name,))
                    break
                if any(any(row) for row in nxt):
                    frontier.append((nxt, ops + (name,)))
        if found is None:
            break
        (row, col, value), ops = found
        unknown = remaining.pop(col)
        steps.append(EliminationStep(pairs.pairs[unknown], ops, pairs.pairs[row], value))
    return EliminationCertificate(g, steps, [pairs.pairs[u] for u in remaining])


def parse_table(spec: dict[int, str], ctx: SurfaceContext) -> EndomorphismTable:
    return EndomorphismTable(ctx, {i: parse_word(w, ctx) for i, w in spec.items()})


__all__ = [
    "TwistName",
    "all_twists",
    "gamma_word",
    "twist_table",
    "separating_word",
    "simple_loop_catalog",
    "is_well_defined",
    "induced_nil2",
    "induced_map",
    "twist_matrix",
    "twist_difference",
    "induced_quotient_permutation",
    "QuotientAction",
    "elimination_certificate",
]
