"""Brute-force collection in pi/pi^[3], independent of the closed-form law.

Letters are bubble-sorted into ascending generator order.  Swapping
x_a^s x_b^t (a > b) into x_b^t x_a^s leaves behind [x_a, x_b]^{st}, i.e.
[x_b, x_a]^{-st}; those commutators are central and are tallied over every
pair i < j.  Finally the tally on (2g-1, 2g) is traded for the inverse power
on each related pair using the surface relation.
"""
from __future__ import annotations

from .nilpotent import Nil2Element, pair_index_set
from .words import Word


def collect(w: Word, genus: int) -> Nil2Element:
    letters = [(l.index, l.sign) for l in w.letters]
    tally: dict[tuple[int, int], int] = {}
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            (a, s), (b, t) = letters[k], letters[k + 1]
            if a > b:
                letters[k], letters[k + 1] = (b, t), (a, s)
                tally[(b, a)] = tally.get((b, a), 0) - s * t
                changed = True
    top = 2 * genus
    n = [0] * top
    for a, s in letters:
        n[a - 1] += s
    last = tally.pop((top - 1, top), 0)
    for h in range(1, genus):
        tally[(2 * h - 1, 2 * h)] = tally.get((2 * h - 1, 2 * h), 0) - last
    pairs = pair_index_set(genus)
    m = tuple(tally.get(p, 0) for p in pairs)
    return Nil2Element(genus, tuple(n), m)
