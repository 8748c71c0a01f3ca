"""Random object generators shared across the test modules."""

from fractions import Fraction

from rsinf.core import FieldElem, Tableau, TableauFamily
from rsinf.rs_infinite import Axis, eventually_constant

ANCHORS = (Fraction(0), "a", "b")


def rand_tableau(rng, anchor, max_boxes):
    """A random valid tableau: strict rows, weak columns, partition shape."""
    lengths = []
    left = max_boxes
    prev = None
    while left > 0 and (prev is None or prev > 0) and rng.random() < 0.8:
        top = prev if prev is not None else min(5, left)
        if top == 0:
            break
        n = rng.randint(1, min(top, left))
        lengths.append(n)
        left -= n
        prev = n
        if len(lengths) >= 4:
            break
    if not lengths:
        lengths = [1]
    rows = []
    for r, n in enumerate(lengths):
        row = []
        for c in range(n):
            ubs = []
            if r > 0:
                ubs.append(rows[r - 1][c].offset)
            if c > 0:
                ubs.append(row[c - 1].offset - 1)
            ub = min(ubs) if ubs else rng.randint(-3, 6)
            row.append(FieldElem(anchor, ub - rng.randint(0, 1)))
        rows.append(tuple(row))
    return Tableau(anchor, tuple(rows))


def rand_family(rng, max_classes=3, max_boxes=12):
    k = rng.randint(1, max_classes)
    chosen = rng.sample(ANCHORS, k)
    budget = max_boxes
    tabs = []
    for i, anchor in enumerate(chosen):
        cap = budget - (k - 1 - i)
        boxes = rng.randint(1, max(1, min(cap, 8)))
        budget -= boxes
        tabs.append(rand_tableau(rng, anchor, boxes))
    return TableauFamily(tuple(tabs))


def rand_block(rng, axis, max_exc=5, lo=-6, hi=6):
    window = [rng.randint(lo, hi) for _ in range(rng.randint(0, max_exc))]
    if axis is Axis.NEG:
        return eventually_constant(axis, window, left_tail=rng.randint(lo, hi))
    if axis is Axis.POS:
        return eventually_constant(axis, window, right_tail=rng.randint(lo, hi))
    return eventually_constant(
        axis,
        window,
        edge=rng.randint(-3, 3),
        left_tail=rng.randint(lo, hi),
        right_tail=rng.randint(lo, hi),
    )
