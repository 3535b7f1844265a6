"""Raising and lowering operators on tableaux via the signature rule.

The reading word scans columns right to left, each column top to
bottom.  For a letter i, every box holding i contributes '+' and every
box holding i+1 contributes '-'; adjacent "+-" pairs cancel until the
surviving signs are all '-' followed by all '+'.  The lowering operator
acts at the leftmost surviving '+', the raising operator at the
rightmost surviving '-'.
"""

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import Shape
from .tableaux import Tableau, content, make_tableau


def reading_positions(t: Tableau) -> tuple[tuple[int, int], ...]:
    """Box coordinates (row, col) in reading order."""
    if not t.rows:
        return ()
    width = len(t.rows[0])
    out = []
    for col in range(width, 0, -1):
        for row_idx, row in enumerate(t.rows, start=1):
            if len(row) >= col:
                out.append((row_idx, col))
    return tuple(out)


def reading_word(t: Tableau) -> tuple[int, ...]:
    return tuple(t.entry(i, j) for i, j in reading_positions(t))


@dataclass(frozen=True)
class Signature:
    """Signed slots of a word (or tensor factor list) for one letter i.

    raw holds (slot, sign) pairs in reading order before cancellation,
    surviving the ones left after it.  Slots are 0-indexed.
    """

    slots: int
    raw: tuple[tuple[int, str], ...]
    surviving: tuple[tuple[int, str], ...]

    @property
    def eps(self) -> int:
        return sum(1 for _, s in self.surviving if s == "-")

    @property
    def phi(self) -> int:
        return sum(1 for _, s in self.surviving if s == "+")

    def leftmost_plus(self) -> int | None:
        for slot, s in self.surviving:
            if s == "+":
                return slot
        return None

    def rightmost_minus(self) -> int | None:
        best = None
        for slot, s in self.surviving:
            if s == "-":
                best = slot
        return best

    def render_raw(self) -> str:
        return self._render(self.raw)

    def render_reduced(self) -> str:
        return self._render(self.surviving)

    def _render(self, pairs) -> str:
        symbols = ["·"] * self.slots
        for slot, s in pairs:
            symbols[slot] = s
        return "(" + ",".join(symbols) + ")"


def _cancel(raw):
    # Stack scan; a '-' consumes the nearest unmatched '+' to its left.
    surviving_minus = []
    plus_stack = []
    for slot, sign in raw:
        if sign == "+":
            plus_stack.append(slot)
        elif plus_stack:
            plus_stack.pop()
        else:
            surviving_minus.append(slot)
    return tuple((s, "-") for s in surviving_minus) + tuple((s, "+") for s in plus_stack)


def i_signature(element, i: int) -> Signature:
    """Signature of a reading word, an int sequence, or a TensorElement."""
    if isinstance(element, TensorElement):
        raw = []
        for idx, factor in enumerate(element.factors):
            raw.extend((idx, "-") for _ in range(epsilon(factor, i)))
            raw.extend((idx, "+") for _ in range(phi(factor, i)))
        slots = len(element.factors)
    else:
        word = tuple(element)
        raw = []
        for idx, x in enumerate(word):
            if x == i + 1:
                raw.append((idx, "-"))
            elif x == i:
                raw.append((idx, "+"))
        slots = len(word)
    raw = tuple(raw)
    return Signature(slots=slots, raw=raw, surviving=_cancel(raw))


def _replace_entry(t: Tableau, pos, new_value) -> Tableau:
    i, j = pos
    rows = [list(row) for row in t.rows]
    rows[i - 1][j - 1] = new_value
    return make_tableau(t.rank, rows)


def f_op(t: Tableau, i: int) -> Tableau | None:
    """Lowering operator: turn an i into i+1, or None when no '+' survives."""
    _check_letter(t.rank, i)
    sig = i_signature(reading_word(t), i)
    slot = sig.leftmost_plus()
    if slot is None:
        return None
    return _replace_entry(t, reading_positions(t)[slot], i + 1)


def e_op(t: Tableau, i: int) -> Tableau | None:
    """Raising operator: turn an i+1 into i, or None when no '-' survives."""
    _check_letter(t.rank, i)
    sig = i_signature(reading_word(t), i)
    slot = sig.rightmost_minus()
    if slot is None:
        return None
    return _replace_entry(t, reading_positions(t)[slot], i)


def epsilon(t: Tableau, i: int) -> int:
    """Largest k with e_op applicable k times (surviving '-' count)."""
    _check_letter(t.rank, i)
    return i_signature(reading_word(t), i).eps


def phi(t: Tableau, i: int) -> int:
    """Largest k with f_op applicable k times (surviving '+' count)."""
    _check_letter(t.rank, i)
    return i_signature(reading_word(t), i).phi


def _check_letter(rank, i):
    if not 1 <= i <= rank:
        raise ValueError(f"operator index {i} outside 1..{rank}")


def highest_weight_tableau(shape: Shape, rank: int) -> Tableau:
    """Row i filled with the letter i; killed by every raising operator."""
    if shape.rank != rank:
        raise ValueError(f"shape has rank {shape.rank}, expected {rank}")
    rows = [[i] * p for i, p in enumerate(shape.parts, start=1) if p > 0]
    return make_tableau(rank, rows)


@lru_cache(maxsize=None)
def enumerate_crystal(shape: Shape, rank: int) -> tuple[Tableau, ...]:
    """Every tableau reachable from the highest-weight element.

    Breadth-first closure under all lowering operators (letters in
    increasing order), then sorted by row tuples so the result is a
    canonical listing.  Coincides with the set of all semistandard
    tableaux of the shape.
    """
    start = highest_weight_tableau(shape, rank)
    seen = {start.rows: start}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(1, rank + 1):
                u = f_op(t, i)
                if u is not None and u.rows not in seen:
                    seen[u.rows] = u
                    nxt.append(u)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda t: t.rows))


@dataclass(frozen=True)
class TensorElement:
    """Ordered list of tableau factors; operators act on one factor."""

    factors: tuple[Tableau, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("tensor element needs at least one factor")
        ranks = {t.rank for t in self.factors}
        if len(ranks) != 1:
            raise ValueError("tensor factors must share one rank")

    @property
    def rank(self) -> int:
        return self.factors[0].rank

    def weight(self):
        total = content(self.factors[0])
        for factor in self.factors[1:]:
            total = total + content(factor)
        return total


def _tensor_apply(elem: TensorElement, i: int, factor_op, pick):
    sig = i_signature(elem, i)
    idx = pick(sig)
    if idx is None:
        return None
    moved = factor_op(elem.factors[idx], i)
    if moved is None:
        raise RuntimeError("signature promised a move the factor refused")
    factors = list(elem.factors)
    factors[idx] = moved
    return TensorElement(tuple(factors))


def tensor_f_op(elem: TensorElement, i: int) -> TensorElement | None:
    """Lower the factor owning the leftmost surviving '+'."""
    return _tensor_apply(elem, i, f_op, Signature.leftmost_plus)


def tensor_e_op(elem: TensorElement, i: int) -> TensorElement | None:
    """Raise the factor owning the rightmost surviving '-'."""
    return _tensor_apply(elem, i, e_op, Signature.rightmost_minus)
