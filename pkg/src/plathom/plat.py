"""Braid words, plat presentations and planar diagrams of their closures.

A plat on an even number of strands is closed by cups joining positions
(1,2), (3,4), ... at the bottom and matching caps at the top.  The braid
word is read bottom to top; the letter ``s<k>`` is the positive generator
exchanging strand positions k and k+1, ``S<k>`` its inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class BraidParseError(ValueError):
    """Raised on malformed plat input; ``position`` is the failing token index."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class MalformedTokenError(BraidParseError):
    pass


class GeneratorRangeError(BraidParseError):
    pass


class StrandCountError(BraidParseError):
    pass


@dataclass(frozen=True)
class BraidWord:
    num_strands: int
    letters: tuple  # of (generator_index, sign)

    def __post_init__(self):
        if self.num_strands < 2 or self.num_strands % 2:
            raise StrandCountError(f"strand count must be a positive even integer, got {self.num_strands}")
        for pos, (k, sign) in enumerate(self.letters):
            if not 1 <= k <= self.num_strands - 1:
                raise GeneratorRangeError(
                    f"generator index {k} out of range [1, {self.num_strands - 1}] at letter {pos}",
                    position=pos,
                )
            if sign not in (1, -1):
                raise MalformedTokenError(f"letter sign must be +-1 at letter {pos}", position=pos)

    def __len__(self):
        return len(self.letters)

    def to_text(self):
        body = " ".join(("s" if sign > 0 else "S") + str(k) for k, sign in self.letters)
        return f"{self.num_strands}:" + (" " + body if body else "")

    def to_json(self):
        return {
            "strands": self.num_strands,
            "word": [("s" if sign > 0 else "S") + str(k) for k, sign in self.letters],
        }


@dataclass(frozen=True)
class PlatPresentation:
    braid: BraidWord
    marked_pair: int = 1

    def __post_init__(self):
        if not 1 <= self.marked_pair <= self.braid.num_strands // 2:
            raise ValueError(
                f"marked_pair {self.marked_pair} does not address a bottom cup "
                f"(expected 1..{self.braid.num_strands // 2})"
            )


@dataclass(frozen=True)
class CrossingCounts:
    n_plus: int
    n_minus: int

    @property
    def writhe(self):
        return self.n_plus - self.n_minus


_HEADER = re.compile(r"^(\d+)\s*:\s*(.*)$", re.S)
_LETTER = re.compile(r"^([sS])(\d+)$")


def parse_braid_word(text):
    """Parse ``"<n>: s2 S1 ..."`` into a :class:`BraidWord`.

    Total on the grammar; anything else raises a parse error naming the
    offending token position (the header is token 0).
    """
    m = _HEADER.match(text.strip())
    if not m:
        raise MalformedTokenError(f"expected '<n_strands>: ...', got {text!r}", position=0)
    n = int(m.group(1))
    if n < 2 or n % 2:
        raise StrandCountError(f"strand count must be a positive even integer, got {n}", position=0)
    letters = []
    for pos, token in enumerate(m.group(2).split(), start=1):
        lm = _LETTER.match(token)
        if not lm:
            raise MalformedTokenError(f"malformed token {token!r} at position {pos}", position=pos)
        k = int(lm.group(2))
        if not 1 <= k <= n - 1:
            raise GeneratorRangeError(
                f"generator index {k} out of range [1, {n - 1}] at position {pos}", position=pos
            )
        letters.append((k, 1 if lm.group(1) == "s" else -1))
    return BraidWord(n, tuple(letters))


def crossing_counts(braid):
    """Letter counts by sign (n_plus, n_minus)."""
    plus = sum(1 for _, sign in braid.letters if sign > 0)
    return CrossingCounts(plus, len(braid.letters) - plus)


def mirror_word(braid):
    """Sign-negate every letter; realizes the mirror link of the plat closure."""
    return BraidWord(braid.num_strands, tuple((k, -sign) for k, sign in braid.letters))


def permutation(braid):
    """Bottom-to-top strand position map as a tuple indexed by 1..n (index 0 unused)."""
    n = braid.num_strands
    perm = list(range(n + 1))
    for k, _ in braid.letters:
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
    # perm[p] = bottom strand now sitting at top position p
    return tuple(perm)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def count(self):
        return len({self.find(x) for x in self.parent})


def component_count(braid):
    """Number of link components of the plat closure."""
    n = braid.num_strands
    perm = permutation(braid)
    uf = _UnionFind([("b", p) for p in range(1, n + 1)] + [("t", p) for p in range(1, n + 1)])
    for j in range(1, n // 2 + 1):
        uf.union(("b", 2 * j - 1), ("b", 2 * j))
        uf.union(("t", 2 * j - 1), ("t", 2 * j))
    for p in range(1, n + 1):
        uf.union(("b", perm[p]), ("t", p))
    return uf.count()


def letter_arc_classes(braid):
    """Classify each letter by the bottom cups its two strands belong to.

    Returns a list of frozensets of cup indices, one per letter: a singleton
    for a self-crossing of one cup's arc, a 2-set for an inter-arc crossing.
    """
    n = braid.num_strands
    cup_of = [0] * (n + 1)
    for p in range(1, n + 1):
        cup_of[p] = (p + 1) // 2
    classes = []
    for k, _ in braid.letters:
        classes.append(frozenset((cup_of[k], cup_of[k + 1])))
        cup_of[k], cup_of[k + 1] = cup_of[k + 1], cup_of[k]
    return classes


def arc_feature_counts(braid, marked_pair):
    """Signed letter sums used by the grading normalization.

    Returns ``(inter_counts, self_signed)`` where ``inter_counts`` is a
    :class:`CrossingCounts` over letters crossing the two different cup
    arcs and ``self_signed`` is the signed letter sum over self-crossings
    of the surviving (unmarked) arc.  Self-crossings of the marked arc do
    not enter the normalization.
    """
    if braid.num_strands != 4:
        raise ValueError("arc features are defined for the 4-strand homology pipeline")
    unmarked = 2 if marked_pair == 1 else 1
    classes = letter_arc_classes(braid)
    inter_plus = inter_minus = 0
    self_signed = 0
    for (k, sign), cls in zip(braid.letters, classes):
        if len(cls) == 2:
            if sign > 0:
                inter_plus += 1
            else:
                inter_minus += 1
        elif cls == frozenset((unmarked,)):
            self_signed += sign
    return CrossingCounts(inter_plus, inter_minus), self_signed


# --- planar diagrams of plat closures -------------------------------------
#
# A diagram is a list of crossings over arc identifiers.  Each crossing
# stores its four incident arcs as (bottom_left, bottom_right, top_left,
# top_right) plus the letter sign; the vertical smoothing joins bl~tl and
# br~tr (equivalently: deleting the letter), the horizontal one joins
# bl~br and tl~tr.  Bottom cups and top caps contribute extra arc fusions.


@dataclass(frozen=True)
class Crossing:
    bottom_left: int
    bottom_right: int
    top_left: int
    top_right: int
    letter_sign: int
    oriented_sign: int
    position: int  # generator index of the originating letter


@dataclass(frozen=True)
class LinkDiagram:
    num_strands: int
    crossings: tuple
    num_arcs: int
    closures: tuple  # of (arc, arc) pairs fused by cups/caps
    components: int
    oriented_counts: CrossingCounts = field(default=None)

    def __len__(self):
        return len(self.crossings)


def plat_to_diagram(braid):
    """Planar diagram of the plat closure, one crossing per letter.

    Crossing signs are the oriented signs obtained by tracing every
    component from its lowest bottom-cup position upward; the letter sign
    is kept alongside.
    """
    n = braid.num_strands
    arc = list(range(n + 1))  # arc[p] = current arc id at position p (index 0 unused)
    next_arc = n + 1
    crossings = []

    for k, sign in braid.letters:
        bl, br = arc[k], arc[k + 1]
        tl, tr = next_arc, next_arc + 1
        next_arc += 2
        crossings.append([bl, br, tl, tr, sign, k])
        arc[k], arc[k + 1] = tl, tr

    # Bottom cups join the initial arcs (ids 1..n); top caps join the final ones.
    closures = []
    for j in range(1, n // 2 + 1):
        closures.append((2 * j - 1, 2 * j))
        closures.append((arc[2 * j - 1], arc[2 * j]))

    directions, components = _trace_orientations(braid)
    oriented = []
    n_plus = n_minus = 0
    for letter_index, (_, sign) in enumerate(braid.letters):
        d_left, d_right = directions[letter_index]
        parallel = d_left == d_right
        osign = sign if parallel else -sign
        oriented.append(osign)
        if osign > 0:
            n_plus += 1
        else:
            n_minus += 1

    frozen = tuple(
        Crossing(bl, br, tl, tr, sign, osign, k)
        for (bl, br, tl, tr, sign, k), osign in zip(crossings, oriented)
    )
    return LinkDiagram(
        num_strands=n,
        crossings=frozen,
        num_arcs=next_arc - 1,
        closures=tuple(closures),
        components=components,
        oriented_counts=CrossingCounts(n_plus, n_minus),
    )


def _trace_orientations(braid):
    """Vertical direction (+1 up, -1 down) of both strands at every letter.

    Components are oriented upward at their smallest bottom-cup position.
    Returns ``(directions, component_count)`` with ``directions[i]`` the
    pair for letter i in (left, right) position order.
    """
    n = braid.num_strands
    length = len(braid.letters)

    # Build the closed curve as a graph on segment endpoints and trace it.
    # Each segment (level, pos) has a bottom end and a top end; letters glue
    # diagonally, cups/caps glue horizontally.
    def seg(level, pos):
        return (level, pos)

    succ = {}  # (segment, end) -> (segment, end) gluings, both directions

    def glue(a, b):
        succ.setdefault(a, []).append(b)
        succ.setdefault(b, []).append(a)

    for j in range(1, n // 2 + 1):
        glue((seg(0, 2 * j - 1), "bottom"), (seg(0, 2 * j), "bottom"))
        glue((seg(length, 2 * j - 1), "top"), (seg(length, 2 * j), "top"))
    for i, (k, _) in enumerate(braid.letters):
        # strand at pos k goes to pos k+1 and vice versa across letter i
        glue((seg(i, k), "top"), (seg(i + 1, k + 1), "bottom"))
        glue((seg(i, k + 1), "top"), (seg(i + 1, k), "bottom"))
        for pos in range(1, n + 1):
            if pos not in (k, k + 1):
                glue((seg(i, pos), "top"), (seg(i + 1, pos), "bottom"))

    direction = {}  # segment -> +1 (traversed upward) or -1
    components = 0
    visited = set()
    for start_pos in range(1, n + 1):
        start = seg(0, start_pos)
        if start in visited:
            continue
        components += 1
        # orient upward at the component's first-seen bottom position
        segment, end, d = start, "top", 1
        while segment not in visited:
            visited.add(segment)
            direction[segment] = d
            (nseg, nend) = succ[(segment, end)][0]
            # entering nseg at nend; we traverse away from that end
            d = 1 if nend == "bottom" else -1
            segment, end = nseg, ("top" if nend == "bottom" else "bottom")

    directions = []
    for i, (k, _) in enumerate(braid.letters):
        directions.append((direction[seg(i, k)], direction[seg(i, k + 1)]))
    return directions, components
