"""Ground field elements, integral comparison, and decreasing tableaux.

Values live in a field extending the rationals with free symbols.  Every
value we handle is an anchor plus an integer offset, where the anchor is
either a rational in [0, 1) or a named symbol (possibly negated).  Two
values are comparable exactly when they share an anchor, i.e. when their
difference is an integer.  That partial order is all the combinatorics
downstream ever uses.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Anchor = Union[Fraction, str]


class Comparison(enum.Enum):
    INCOMPARABLE = "incomparable"
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class FieldElem:
    """An element anchor + offset with offset an integer.

    Rational anchors are kept in [0, 1) so that equal values always have
    equal representations.  Symbolic anchors are the symbol name, with a
    leading "-" marking the negated symbol; the name carries no numeric
    content.
    """

    anchor: Anchor
    offset: int

    def __post_init__(self):
        if isinstance(self.anchor, Fraction):
            if not 0 <= self.anchor < 1:
                raise ValueError(f"rational anchor {self.anchor} not reduced into [0,1)")
        elif isinstance(self.anchor, str):
            if not re.fullmatch(r"-?[A-Za-z_][A-Za-z_0-9]*", self.anchor):
                raise ValueError(f"bad symbol name {self.anchor!r}")
        else:
            raise TypeError(f"anchor must be Fraction or str, got {type(self.anchor)!r}")
        if not isinstance(self.offset, int):
            raise TypeError(f"offset must be int, got {self.offset!r}")

    @property
    def is_rational(self) -> bool:
        return isinstance(self.anchor, Fraction)

    def shift(self, k: int) -> "FieldElem":
        return FieldElem(self.anchor, self.offset + k)

    def negate(self) -> "FieldElem":
        if isinstance(self.anchor, Fraction):
            return from_rational(-(self.anchor + self.offset))
        flipped = self.anchor[1:] if self.anchor.startswith("-") else "-" + self.anchor
        return FieldElem(flipped, -self.offset)

    def __str__(self) -> str:
        if isinstance(self.anchor, Fraction):
            value = self.anchor + self.offset
            if value.denominator == 1:
                return str(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        if self.offset > 0:
            return f"{self.anchor}+{self.offset}"
        if self.offset < 0:
            return f"{self.anchor}{self.offset}"
        return str(self.anchor)

    __repr__ = __str__


def from_rational(q) -> FieldElem:
    q = Fraction(q)
    floor = q.numerator // q.denominator
    return FieldElem(q - floor, floor)


def elem(x) -> FieldElem:
    """Coerce an int, Fraction, literal string, or FieldElem to FieldElem."""
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a field element")
    if isinstance(x, (int, Fraction)):
        return from_rational(x)
    if isinstance(x, str):
        return parse_elem(x)
    raise TypeError(f"cannot coerce {x!r} to a field element")


_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(r"([+-]?\d+)/([+-]?\d+)")
_SYM_RE = re.compile(r"(-?[A-Za-z_][A-Za-z_0-9]*)([+-]\d+)?")


def parse_elem(text: str) -> FieldElem:
    """Parse a literal: INT, INT/INT, SYM, SYM+INT, or SYM-INT.

    Symbols may carry a leading minus ("-a+3"), matching what negate()
    prints.  Whitespace around the literal is ignored.
    """
    s = text.strip()
    if _INT_RE.fullmatch(s):
        return from_rational(int(s))
    m = _FRAC_RE.fullmatch(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in literal {text!r}")
        return from_rational(Fraction(int(m.group(1)), den))
    m = _SYM_RE.fullmatch(s)
    if m:
        return FieldElem(m.group(1), int(m.group(2) or 0))
    raise ValueError(f"malformed element literal {text!r}")


def compare_z(a: FieldElem, b: FieldElem) -> Comparison:
    """Compare two values in the integral partial order.

    Values with different anchors do not differ by an integer and are
    incomparable; otherwise the offsets decide.
    """
    if a.anchor != b.anchor:
        return Comparison.INCOMPARABLE
    if a.offset < b.offset:
        return Comparison.LESS
    if a.offset > b.offset:
        return Comparison.GREATER
    return Comparison.EQUAL


def same_class(a: FieldElem, b: FieldElem) -> bool:
    return a.anchor == b.anchor


def gt_z(a: FieldElem, b: FieldElem) -> bool:
    return a.anchor == b.anchor and a.offset > b.offset


def ge_z(a: FieldElem, b: FieldElem) -> bool:
    return a.anchor == b.anchor and a.offset >= b.offset


def shift_by_int(a: FieldElem, k: int) -> FieldElem:
    return a.shift(k)


def negate(a: FieldElem) -> FieldElem:
    return a.negate()


def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a partition: weakly decreasing nonnegative ints, no trailing zeros."""
    p = tuple(int(x) for x in parts)
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


@dataclass(frozen=True)
class Tableau:
    """Rows of values from one integrality class.

    Rows strictly decrease left to right, columns never increase top to
    bottom, and row lengths weakly decrease.  All entries share the
    tableau's anchor.
    """

    anchor: Anchor
    rows: tuple[tuple[FieldElem, ...], ...]

    def __post_init__(self):
        for row in self.rows:
            if not row:
                raise ValueError("empty tableau row")
            for e in row:
                if e.anchor != self.anchor:
                    raise ValueError(f"entry {e} not in class of anchor {self.anchor}")
        for r in range(len(self.rows) - 1):
            if len(self.rows[r]) < len(self.rows[r + 1]):
                raise ValueError("row lengths must weakly decrease")
        for row in self.rows:
            for c in range(len(row) - 1):
                if row[c].offset <= row[c + 1].offset:
                    raise ValueError(f"row not strictly decreasing at {row[c]}, {row[c+1]}")
        for r in range(len(self.rows) - 1):
            upper, lower = self.rows[r], self.rows[r + 1]
            for c in range(len(lower)):
                if upper[c].offset < lower[c].offset:
                    raise ValueError("column increases downward")

    @classmethod
    def from_offsets(cls, anchor, rows: Iterable[Iterable[int]]) -> "Tableau":
        if isinstance(anchor, (int, Fraction)):
            fe = from_rational(anchor)
            if fe.offset != 0:
                raise ValueError(f"anchor {anchor} is not reduced; put the integer part in the offsets")
            anchor = fe.anchor
        return cls(anchor, tuple(tuple(FieldElem(anchor, int(o)) for o in row) for row in rows))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def offsets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e.offset for e in row) for row in self.rows)

    def size(self) -> int:
        return sum(len(row) for row in self.rows)


@dataclass(frozen=True)
class TableauFamily:
    """Tableaux with pairwise distinct anchors, kept in a canonical order.

    Construction order does not matter: tableaux are sorted by the printed
    form of their anchor, so two families with the same per-class content
    compare equal.
    """

    tableaux: tuple[Tableau, ...]

    def __post_init__(self):
        anchors = [t.anchor for t in self.tableaux]
        if len(set(anchors)) != len(anchors):
            raise ValueError(f"duplicate anchors in family: {anchors}")
        ordered = tuple(
            sorted(self.tableaux, key=lambda t: str(FieldElem(t.anchor, 0)))
        )
        object.__setattr__(self, "tableaux", ordered)

    def __iter__(self):
        return iter(self.tableaux)

    def __len__(self):
        return len(self.tableaux)

    def __getitem__(self, i):
        return self.tableaux[i]

    def size(self) -> int:
        return sum(t.size() for t in self.tableaux)
