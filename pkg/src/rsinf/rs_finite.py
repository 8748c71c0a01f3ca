"""Insertion of finite sequences, the shifted variant, and interchanges."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ._insertion_py import insert_one
from ._kernel import insert_sequence
from .core import FieldElem, Tableau, TableauFamily, elem, ge_z, gt_z, same_class


def _seq(values) -> tuple[FieldElem, ...]:
    return tuple(elem(v) for v in values)


def rho_shift(values) -> tuple[FieldElem, ...]:
    """Subtract each entry's position: (f(1) - 1, f(2) - 2, ...)."""
    return tuple(e.shift(-(i + 1)) for i, e in enumerate(_seq(values)))


def rs(values) -> TableauFamily:
    """Insert the sequence, one tableau per integrality class.

    Entries split by class in order of first appearance; within a class
    the pairs (value, position) are inserted in sequence order.
    """
    vals = _seq(values)
    order: list = []
    by_class: dict = {}
    for pos, e in enumerate(vals, start=1):
        if e.anchor not in by_class:
            by_class[e.anchor] = ([], [])
            order.append(e.anchor)
        offs, poss = by_class[e.anchor]
        offs.append(e.offset)
        poss.append(pos)
    tableaux = []
    for anchor in order:
        offs, poss = by_class[anchor]
        idx_rows = insert_sequence(offs, poss)
        rows = tuple(
            tuple(FieldElem(anchor, offs[i]) for i in row) for row in idx_rows
        )
        tableaux.append(Tableau(anchor, rows))
    return TableauFamily(tuple(tableaux))


@dataclass(frozen=True)
class InsertionStep:
    """State after inserting one more entry.

    ``positions`` mirrors the family shape and holds, for each box, the
    1-based input position of the pair currently occupying that box.
    """

    family: TableauFamily
    positions: tuple[tuple[tuple[int, ...], ...], ...]


def rs_trace(values) -> tuple[InsertionStep, ...]:
    """All intermediate states of rs, one per input entry."""
    vals = _seq(values)
    order: list = []
    state: dict = {}
    steps = []
    for pos, e in enumerate(vals, start=1):
        if e.anchor not in state:
            state[e.anchor] = ([], [])
            order.append(e.anchor)
        key_rows, idx_rows = state[e.anchor]
        insert_one(key_rows, idx_rows, (-e.offset, -pos), pos)
        pairs = []
        for anchor in order:
            kr, ir = state[anchor]
            rows = tuple(
                tuple(FieldElem(anchor, -k[0]) for k in row) for row in kr
            )
            pairs.append((Tableau(anchor, rows), tuple(tuple(row) for row in ir)))
        # keep positions aligned with the family's canonical class order
        pairs.sort(key=lambda p: str(FieldElem(p[0].anchor, 0)))
        family = TableauFamily(tuple(p[0] for p in pairs))
        steps.append(InsertionStep(family, tuple(p[1] for p in pairs)))
    return tuple(steps)


def j(values) -> TableauFamily:
    """Insert the position-shifted sequence."""
    return rs(rho_shift(values))


def seq_of(tableaux) -> tuple[FieldElem, ...]:
    """Read a family back into a sequence, row by row.

    Rows are taken shortest first, ties by smaller first entry, and
    tableaux are read one after another in family order.
    """
    if isinstance(tableaux, Tableau):
        tabs: tuple[Tableau, ...] = (tableaux,)
    elif isinstance(tableaux, TableauFamily):
        tabs = tableaux.tableaux
    else:
        tabs = tuple(tableaux)
    out: list[FieldElem] = []
    for t in tabs:
        # shorter rows first, then smaller first entry; rows that tie on
        # both are read bottom to top, which is what reinsertion undoes
        order = sorted(
            range(len(t.rows)),
            key=lambda ri: (len(t.rows[ri]), t.rows[ri][0].offset, -ri),
        )
        for ri in order:
            out.extend(t.rows[ri])
    return tuple(out)


def _admissible_plain(f: tuple[FieldElem, ...], i: int) -> bool:
    n = len(f)
    a, b = f[i - 1], f[i]
    if not same_class(a, b):
        return True
    if i + 1 < n:
        c = f[i + 1]
        if gt_z(b, c) and ge_z(c, a):
            return True
        if gt_z(a, c) and ge_z(c, b):
            return True
    if i - 2 >= 0:
        d = f[i - 2]
        if ge_z(b, d) and gt_z(d, a):
            return True
        if ge_z(a, d) and gt_z(d, b):
            return True
    return False


def admissible(values, i: int, shifted: bool = False) -> bool:
    """Whether positions i, i+1 (1-based) admit an interchange."""
    f = _seq(values)
    if not 1 <= i <= len(f) - 1:
        raise ValueError(f"interchange position {i} out of range for length {len(f)}")
    if shifted:
        f = rho_shift(f)
    return _admissible_plain(f, i)


def apply_interchange(values, i: int, shifted: bool = False) -> tuple[FieldElem, ...]:
    """Swap positions i, i+1; the shifted variant conjugates the swap
    through the position shift, so the two entries move by one as well."""
    f = _seq(values)
    if not admissible(f, i, shifted=shifted):
        raise ValueError(f"positions {i}, {i + 1} do not admit an interchange")
    out = list(f)
    if shifted:
        out[i - 1], out[i] = f[i].shift(-1), f[i - 1].shift(1)
    else:
        out[i - 1], out[i] = f[i], f[i - 1]
    return tuple(out)


@dataclass(frozen=True)
class InterchangePath:
    """Interchange positions to apply in order, each with its variant flag."""

    steps: tuple[tuple[int, bool], ...]

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.steps)

    def replay(self, values) -> tuple[FieldElem, ...]:
        cur = _seq(values)
        for i, sh in self.steps:
            cur = apply_interchange(cur, i, shifted=sh)
        return cur


def connected(f, g, shifted: bool = False) -> InterchangePath | None:
    """Breadth-first search for an interchange path from f to g."""
    start, goal = _seq(f), _seq(g)
    if len(start) != len(goal):
        return None
    if start == goal:
        return InterchangePath(())
    n = len(start)
    prev: dict = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i in range(1, n):
            if not _admissible_here(cur, i, shifted):
                continue
            nxt = apply_interchange(cur, i, shifted=shifted)
            if nxt in prev:
                continue
            prev[nxt] = (cur, i)
            if nxt == goal:
                steps = []
                node = nxt
                while prev[node] is not None:
                    node, pos = prev[node]
                    steps.append((pos, shifted))
                return InterchangePath(tuple(reversed(steps)))
            queue.append(nxt)
    return None


def _admissible_here(f: tuple[FieldElem, ...], i: int, shifted: bool) -> bool:
    if shifted:
        return _admissible_plain(rho_shift(f), i)
    return _admissible_plain(f, i)


def joseph_equal(f, fprime, k: int | None = None) -> bool:
    """Whether j(f) equals j(fprime + k), searching over k when omitted."""
    a, b = _seq(f), _seq(fprime)
    if k is not None:
        return j(a) == j(tuple(e.shift(k) for e in b))
    if len(a) != len(b):
        return False
    if not a:
        return True
    ja = j(a)
    ka, kb = rho_shift(a), rho_shift(b)
    candidates = sorted(
        {
            ea.offset - eb.offset
            for ea in ka
            for eb in kb
            if ea.anchor == eb.anchor
        }
    )
    return any(
        ja == j(tuple(e.shift(c) for e in b)) for c in candidates
    )
