"""Indexings of the standard basis of fermionic Fock space.

A basis state is a :class:`ChargedPartition`.  Maya diagrams and
normally ordered semi-infinite wedges are views onto it.  Positions in
Z+1/2 are stored doubled so that all arithmetic stays in the integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Iterator, NamedTuple

from . import kernels


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An element of Z+1/2, stored as ``twice = 2*m`` (always odd)."""

    twice: int

    def __post_init__(self):
        if self.twice % 2 != 1:
            raise ValueError(f"{self.twice}/2 is not a half-odd integer")

    @classmethod
    def of(cls, value) -> "HalfInt":
        return cls(to_twice(value))

    def __lt__(self, other):
        return self.twice < HalfInt.of(other).twice

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        try:
            return self.twice == to_twice(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(Fraction(self.twice, 2))

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __float__(self):
        return self.twice / 2

    def __str__(self):
        return f"{self.twice}/2"

    __repr__ = __str__


def to_twice(value) -> int:
    """Doubled integer for a position in Z+1/2.

    Accepts :class:`HalfInt`, :class:`~fractions.Fraction`, floats that
    are exact halves, and strings such as ``"7/2"``, ``"-1/2"`` or ``"3.5"``.
    """
    if isinstance(value, HalfInt):
        return value.twice
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/")
            if int(den) != 2:
                raise ValueError(f"half-integer literal must have denominator 2: {value!r}")
            value = Fraction(int(num), 2)
        else:
            value = Fraction(text)
    if isinstance(value, int):
        raise ValueError(f"{value} is an integer, not an element of Z+1/2")
    frac = Fraction(value)
    t = frac * 2
    if t.denominator != 1 or t.numerator % 2 != 1:
        raise ValueError(f"{value} is not in Z+1/2")
    return t.numerator


Partition = tuple  # weakly decreasing tuple of positive ints


class ChargedPartition(NamedTuple):
    lam: tuple
    charge: int = 0

    @property
    def size(self) -> int:
        return sum(self.lam)

    def __str__(self):
        return f"({','.join(map(str, self.lam))});{self.charge}"

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "charge": self.charge}

    @classmethod
    def from_json(cls, data: dict) -> "ChargedPartition":
        return cp(data["lambda"], data["charge"])


def cp(lam: Iterable[int] = (), charge: int = 0) -> ChargedPartition:
    """Validated constructor for a charged partition."""
    parts = tuple(int(p) for p in lam)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return ChargedPartition(parts, int(charge))


def parse_state(text: str) -> ChargedPartition:
    """Parse ``'(4,3,3,1,1);-1'``.  The empty partition is ``'();0'``."""
    body = text.strip()
    if ";" not in body:
        raise ValueError(f"state must look like '(4,3,1);-1', got {text!r}")
    left, right = body.rsplit(";", 1)
    left = left.strip()
    if not (left.startswith("(") and left.endswith(")")):
        raise ValueError(f"partition must be parenthesised: {text!r}")
    inner = left[1:-1].strip()
    parts = [int(x) for x in inner.split(",") if x.strip()] if inner else []
    return cp(parts, int(right))


@dataclass(frozen=True)
class MayaSpec:
    """A Maya diagram given by a finite window.

    Every position below ``window_lo`` is black, and of the positions
    ``>= window_lo`` exactly those in ``blacks`` are.  Both fields are
    doubled positions.
    """

    window_lo: int
    blacks: frozenset

    def to_json(self) -> dict:
        return {"window_lo": self.window_lo, "blacks": sorted(self.blacks, reverse=True)}

    @classmethod
    def from_json(cls, data: dict) -> "MayaSpec":
        return cls(int(data["window_lo"]), frozenset(int(b) for b in data["blacks"]))

    def render(self, lo: int | None = None, hi: int | None = None) -> str:
        """ASCII picture, highest position on the left (``*`` black, ``o`` white)."""
        top = max(self.blacks, default=self.window_lo)
        hi = hi if hi is not None else max(top, 1) + 2
        lo = lo if lo is not None else min(self.window_lo, -1) - 2
        out = []
        for p in range(hi, lo - 1, -2):
            if p == -1:
                out.append("|")
            black = p < self.window_lo or p in self.blacks
            out.append("*" if black else "o")
        return "..." + "".join(out) + "..."


def black_positions(state: ChargedPartition, n: int) -> list[HalfInt]:
    """First ``n`` bead positions m_i = h - i + lam_i + 1/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [HalfInt(t) for t in kernels.black_positions2(state.lam, state.charge, n)]


def partition_to_maya(state: ChargedPartition) -> MayaSpec:
    L = len(state.lam)
    beads = kernels.black_positions2(state.lam, state.charge, L + 1)
    # bead L+1 starts the consecutive tail; the window opens just above it
    return MayaSpec(beads[-1] + 2, frozenset(beads[:-1]))


def maya_to_partition(m: MayaSpec) -> ChargedPartition:
    """Inverse of :func:`black_positions`."""
    lo = m.window_lo
    if lo % 2 != 1:
        raise ValueError(f"window_lo must be odd (doubled half-integer), got {lo}")
    for b in m.blacks:
        if b % 2 != 1:
            raise ValueError(f"bead position {b} is not a doubled half-integer")
        if b < lo:
            raise ValueError(f"bead {b}/2 lies below the window start {lo}/2")
    top = max(m.blacks, default=lo - 2)
    # charge = (#black > 0) - (#white < 0)
    pos_black = sum(1 for p in range(1, max(top, 0) + 1, 2) if p < lo or p in m.blacks)
    neg_white = sum(1 for p in range(lo, 0, 2) if p not in m.blacks)
    h = pos_black - neg_white
    beads = sorted(m.blacks, reverse=True)
    beads.extend([lo - 2, lo - 4])
    parts = []
    for i, b in enumerate(beads, start=1):
        parts.append((b - 1) // 2 - h + i)
    if parts[-1] != 0 or any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise AssertionError(f"inconsistent Maya diagram {m}")
    while parts and parts[-1] == 0:
        parts.pop()
    return ChargedPartition(tuple(parts), h)


def to_wedge(state: ChargedPartition, n: int) -> list[HalfInt]:
    """Leading ``n`` indices of the normally ordered wedge; same as the bead list."""
    return black_positions(state, n)


def from_wedge(indices: Iterable) -> tuple[int, ChargedPartition | None]:
    """Read a finite wedge prefix, implicitly continued by consecutive indices.

    Returns ``(sign, state)``; ``(0, None)`` for a repeated index.
    """
    sign, ordered = normalize_wedge(indices)
    if sign == 0:
        return 0, None
    twice = [x.twice for x in ordered]
    return sign, maya_to_partition(MayaSpec(twice[-1], frozenset(twice)))


def normalize_wedge(indices: Iterable) -> tuple[int, list[HalfInt]]:
    """Sort wedge indices decreasingly; the sign is the permutation parity.

    A repeated index makes the wedge vanish; that is signalled by sign 0.
    """
    twice = [to_twice(x) for x in indices]
    if len(set(twice)) != len(twice):
        return 0, []
    inversions = 0
    for a in range(len(twice)):
        for b in range(a + 1, len(twice)):
            if twice[a] < twice[b]:
                inversions += 1
    return (-1 if inversions & 1 else 1), [HalfInt(t) for t in sorted(twice, reverse=True)]


def box_color(h: int, box: tuple[int, int], level: int) -> int:
    """Residue of the box at (row, col): (h + col - row) mod level."""
    if level < 2:
        raise ValueError("level must be >= 2")
    r, c = box
    return (h + c - r) % level


def content(box: tuple[int, int]) -> int:
    r, c = box
    return c - r


def addable_corners(lam: tuple) -> list[tuple[int, int]]:
    out = []
    L = len(lam)
    for r in range(1, L + 2):
        row = lam[r - 1] if r <= L else 0
        above = lam[r - 2] if r >= 2 else None
        if above is None or row < above:
            out.append((r, row + 1))
    return out


def removable_corners(lam: tuple) -> list[tuple[int, int]]:
    L = len(lam)
    return [(r, lam[r - 1]) for r in range(1, L + 1) if r == L or lam[r] < lam[r - 1]]


def addable_boxes(state: ChargedPartition, color: int, level: int) -> list[tuple[int, int]]:
    """Boxes of the given color that can be added; decreasing content."""
    boxes = [b for b in addable_corners(state.lam) if box_color(state.charge, b, level) == color]
    return sorted(boxes, key=content, reverse=True)


def removable_boxes(state: ChargedPartition, color: int, level: int) -> list[tuple[int, int]]:
    """Boxes of the given color that can be removed; decreasing content."""
    boxes = [b for b in removable_corners(state.lam) if box_color(state.charge, b, level) == color]
    return sorted(boxes, key=content, reverse=True)


def add_box(lam: tuple, box: tuple[int, int]) -> tuple:
    r, _ = box
    parts = list(lam)
    if r == len(parts) + 1:
        parts.append(1)
    else:
        parts[r - 1] += 1
    return tuple(parts)


def remove_box(lam: tuple, box: tuple[int, int]) -> tuple:
    r, _ = box
    parts = list(lam)
    parts[r - 1] -= 1
    if parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def conjugate(lam: tuple) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def ribbon_removals(lam: tuple, k: int) -> list[tuple[tuple, int]]:
    """Every ``(mu, rows)`` with lam/mu a rim hook of ``k`` boxes.

    Rim hooks of length k correspond to cells of hook length k: the hook
    of cell (r, c) runs from the end of row r down to the bottom of
    column c, so it spans ``lam'_c - r + 1`` rows.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    conj = conjugate(lam)
    out = []
    for r, row in enumerate(lam, start=1):
        for c in range(1, row + 1):
            leg = conj[c - 1] - r
            if row - c + leg + 1 != k:
                continue
            bottom = conj[c - 1]
            parts = list(lam)
            for i in range(r, bottom):
                parts[i - 1] = lam[i] - 1
            parts[bottom - 1] = c - 1
            while parts and parts[-1] == 0:
                parts.pop()
            out.append((tuple(parts), leg + 1))
    return out


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple, ...]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int) -> Iterator[tuple]:
    for k in range(n + 1):
        yield from partitions(k)


def states(max_size: int, charges: Iterable[int] = (0,)) -> list[ChargedPartition]:
    """Every |lam, h> with |lam| <= max_size and h in ``charges``."""
    charges = list(charges)
    return [ChargedPartition(lam, h) for lam in partitions_upto(max_size) for h in charges]
