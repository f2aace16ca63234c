"""Curve branes on the punctured cylinder patch and the half-twist action.

Punctures 1..n sit left to right on a horizontal axis.  The axis is cut
by the punctures into gates 0..n (gate g between punctures g and g+1;
gates 0 and n are the outer regions, which meet around the back of the
cylinder).  A curve transverse to the axis is encoded by the cyclic
sequence of its axis crossings ("passes"); between consecutive passes it
makes an excursion entirely above or entirely below the axis, and the
excursions alternate sides.  Bigon reduction (cancelling adjacent passes
through the same gate) yields a canonical normal form for the isotopy
class, and the braid half-twists act by a local substitution on the
passes at one gate followed by reduction.

Every pass carries a Maslov weight M and an equivariant weight J; the
substitution rules update them so that compiled complexes come out
consistently graded.  Along the excursion from pass x to pass y the
increments satisfy  M(y) - M(x) = -v*h  (v = +1 above / -1 below,
h = +1 rightward / -1 leftward) and J - gate stays even.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class MarkedSurface:
    n_punctures: int

    def __post_init__(self):
        if self.n_punctures < 2 or self.n_punctures % 2:
            raise CurveError(f"need an even number >= 2 of punctures, got {self.n_punctures}")

    @property
    def n_gates(self):
        return self.n_punctures + 1

    def pair_gate(self, pair):
        """Gate spanned by the cup joining punctures (2*pair-1, 2*pair)."""
        if not 1 <= pair <= self.n_punctures // 2:
            raise CurveError(f"pair {pair} out of range [1, {self.n_punctures // 2}]")
        return 2 * pair - 1


@dataclass(frozen=True)
class Pass:
    gate: int
    upward: bool
    maslov: int
    weight: int

    def letter(self):
        return ("U" if self.upward else "D") + str(self.gate)


@dataclass(frozen=True)
class Curve:
    """A closed curve (pass word) or an interval brane (ends at punctures)."""

    surface: MarkedSurface
    passes: tuple = ()
    ends: tuple = None  # (puncture, puncture) for interval branes

    @property
    def closed(self):
        return self.ends is None

    def __len__(self):
        return len(self.passes)

    def to_word(self):
        if not self.closed:
            return " ".join(f"E{p}" for p in self.ends)
        return " ".join(p.letter() for p in self.passes)

    def gate_multiset(self):
        counts = {}
        for p in self.passes:
            counts[p.gate] = counts.get(p.gate, 0) + 1
        return counts


@dataclass(frozen=True)
class IntersectionSet:
    points: tuple  # of (position_on_curve1, position_on_curve2, sign)

    def __len__(self):
        return len(self.points)


def interval_brane(surface, pair):
    """The straight open brane joining punctures 2*pair-1 and 2*pair."""
    gate = surface.pair_gate(pair)
    return Curve(surface, passes=(), ends=(gate, gate + 1))


def figure_eight_brane(surface, pair):
    """The closed figure-eight around punctures 2*pair-1 and 2*pair.

    Crosses the gate left of the pair once, the gate between the pair
    twice (the self-crossing lobes), and the gate to its right once.
    """
    g = surface.pair_gate(pair)
    passes = (
        Pass(g - 1, True, 0, 0),
        Pass(g, False, -1, 1),
        Pass(g + 1, True, 0, 0),
        Pass(g, False, 1, -1),
    )
    return Curve(surface, passes=passes)


def _reduce(passes):
    """Cancel adjacent same-gate pairs, leftmost first, cyclically.

    Cyclic cancellations rotate an element to the tail so that the
    alternation phase of the surviving passes is preserved.
    """
    word = list(passes)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(word):
            if word[i].gate == word[i + 1].gate:
                del word[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
        if len(word) >= 2 and word[-1].gate == word[0].gate:
            # drop first and last, keep parity by rotating the new head to the tail
            word = word[2:-1] + [word[1]] if len(word) > 2 else []
            changed = True
    return word


def _validate_closed(word, n_gates):
    if not word:
        raise CurveError("curve reduced to nothing (not a valid brane)")
    if len(word) % 2:
        raise CurveError("closed pass word must have even length")
    if len(word) == 2:
        raise CurveError("length-2 pass words are not gradable branes")
    for i, p in enumerate(word):
        if not 0 <= p.gate < n_gates:
            raise CurveError(f"gate {p.gate} out of range")
        if p.upward != (word[0].upward if i % 2 == 0 else not word[0].upward):
            raise CurveError("pass directions must alternate along the curve")
        if (p.weight - p.gate) % 2:
            raise CurveError(f"weight parity broken at pass {i}")
    for i, p in enumerate(word):
        q = word[(i + 1) % len(word)]
        if p.gate == q.gate:
            raise CurveError("reduced word still has a same-gate adjacency")
        v = 1 if p.upward else -1
        h = 1 if q.gate > p.gate else -1
        if q.maslov - p.maslov != -v * h:
            raise CurveError(f"Maslov increment inconsistent between passes {i} and {(i + 1) % len(word)}")


def _canonical_rotation(word):
    if not word:
        return word
    best = None
    for offset in range(len(word)):
        rotated = word[offset:] + word[:offset]
        key = tuple((p.gate, p.upward, p.maslov, p.weight) for p in rotated)
        if best is None or key < best[0]:
            best = (key, rotated)
    return best[1]


def normal_form(curve):
    """Bigon-free canonical representative of the isotopy class; idempotent."""
    if not curve.closed:
        return curve
    word = _reduce(curve.passes)
    _validate_closed(word, curve.surface.n_gates)
    return replace(curve, passes=tuple(_canonical_rotation(word)))


def is_normal_form(curve):
    if not curve.closed:
        return True
    try:
        return normal_form(curve).passes == curve.passes
    except CurveError:
        return False


def apply_generator(curve, k, sign):
    """Image of the curve under the half-twist exchanging punctures k, k+1.

    The twist only rewrites passes through gate k (between the twisting
    punctures): each becomes a zigzag through gates k-1, k, k+1 with the
    weight updates below, after which the word is renormalized.
    """
    s = curve.surface
    if not 1 <= k <= s.n_punctures - 1:
        raise CurveError(f"generator index {k} out of range [1, {s.n_punctures - 1}]")
    if sign not in (1, -1):
        raise CurveError("twist sign must be +1 or -1")
    if not curve.closed:
        if curve.ends and not {k, k + 1} & set(curve.ends):
            return curve
        raise CurveError("half-twist transport is only implemented for closed curves")

    out = []
    for p in curve.passes:
        if p.gate != k:
            out.append(p)
            continue
        if sign > 0:
            wings = (p.maslov, p.weight - 1)
            center = Pass(k, not p.upward, p.maslov + 1, p.weight - 2)
        else:
            wings = (p.maslov, p.weight + 1)
            center = Pass(k, not p.upward, p.maslov - 1, p.weight + 2)
        left = Pass(k - 1, p.upward, *wings)
        right = Pass(k + 1, p.upward, *wings)
        if p.upward == (sign > 0):
            out.extend((right, center, left))
        else:
            out.extend((left, center, right))
    return normal_form(replace(curve, passes=tuple(out)))


def apply_word(curve, letters):
    """Transport under a braid word, first letter first (bottom to top)."""
    for k, sign in letters:
        curve = apply_generator(curve, k, sign)
    return curve


# --- intersection counting -------------------------------------------------
#
# Both curves are pulled taut against the axis.  Crossings then happen
# between excursion arcs on the same side, and a pair of same-side arcs
# crosses exactly once iff their feet interleave along the axis.  The
# x-order of feet within one gate is forced by tautness: compare the two
# strands by walking both curves in parallel until their itineraries
# diverge; each completed arc hop flips the relative order (nested arcs).


def _arcs(curve):
    """Excursion arcs as (index, foot_a, foot_b, above) with feet = pass indices."""
    arcs = []
    word = curve.passes
    for i, p in enumerate(word):
        j = (i + 1) % len(word)
        arcs.append((i, i, j, p.upward))
    return arcs


class _Walker:
    """Walks a curve arc by arc starting from a pass on a given side."""

    def __init__(self, curve, pass_index, side_up):
        self.curve = curve
        self.index = pass_index
        self.side_up = side_up

    def current_pass(self):
        return self.curve.passes[self.index]

    def step(self):
        """Cross the arc on the current side; returns (far_gate, direction)."""
        word = self.curve.passes
        p = word[self.index]
        if p.upward == self.side_up:
            far = (self.index + 1) % len(word)
        else:
            far = (self.index - 1) % len(word)
        q = word[far]
        direction = 1 if q.gate > p.gate else (-1 if q.gate < p.gate else 0)
        self.index = far
        self.side_up = not self.side_up
        return q.gate, direction


def _compare_feet(curve_a, ia, curve_b, ib):
    """x-order of two passes sharing a gate: -1 if a is left of b, +1 if right, 0 if parallel."""
    pa, pb = curve_a.passes[ia], curve_b.passes[ib]
    if pa.gate != pb.gate:
        raise CurveError("feet comparison requires a common gate")
    wa = _Walker(curve_a, ia, True)
    wb = _Walker(curve_b, ib, True)
    flip = 1
    seen = set()
    while True:
        state = (wa.index, wa.side_up, wb.index, wb.side_up)
        if state in seen:
            return 0  # periodic lockstep: the strands are parallel
        seen.add(state)
        ga, da = wa.step()
        gb, db = wb.step()
        if da != db:
            # the left-goer's foot lies left of the right-goer's
            return flip * (-1 if da < db else 1)
        if ga != gb:
            # same direction: outer rainbows reach further; nesting puts the
            # foot of the arc with the larger far gate on the left
            return flip * (-1 if ga > gb else 1)
        flip = -flip  # parallel hop completed: nested feet reverse order


class _ParallelCurves(Exception):
    """Two distinct curves run in lockstep: they are parallel and disjoint."""


def _foot_rank(curves_feet):
    """Total x-order of feet per gate; curves_feet: list of (curve, pass_index)."""
    by_gate = {}
    for item in curves_feet:
        curve, idx = item
        by_gate.setdefault(curve.passes[idx].gate, []).append(item)
    order = {}
    for gate, feet in by_gate.items():
        ranked = list(feet)
        for i in range(1, len(ranked)):
            j = i
            while j > 0:
                a, b = ranked[j - 1], ranked[j]
                c = _compare_feet(a[0], a[1], b[0], b[1])
                if c == 0 and a[0] is not b[0]:
                    raise _ParallelCurves
                if c > 0:
                    ranked[j - 1], ranked[j] = ranked[j], ranked[j - 1]
                    j -= 1
                else:
                    break
        for rank, item in enumerate(ranked):
            order[(id(item[0]), item[1])] = (gate, rank)
    return order


def intersections(curve1, curve2):
    """Minimal-position intersection points of two normal-form curves.

    Points are reported as (arc index on curve1, arc index on curve2,
    sign); the count is the geometric intersection number.
    """
    if curve1.surface != curve2.surface:
        raise CurveError("curves live on different surfaces")
    if not curve1.closed or not curve2.closed:
        return _interval_intersections(curve1, curve2)
    if not is_normal_form(curve1) or not is_normal_form(curve2):
        raise CurveError("intersections are defined on normal-form curves")

    feet = [(curve1, i) for i in range(len(curve1.passes))] + [
        (curve2, i) for i in range(len(curve2.passes))
    ]
    try:
        order = _foot_rank(feet)
    except _ParallelCurves:
        return IntersectionSet(())

    def coord(curve, idx):
        return order[(id(curve), idx)]

    points = []
    for a1, f1a, f1b, above1 in _arcs(curve1):
        c1 = sorted((coord(curve1, f1a), coord(curve1, f1b)))
        for a2, f2a, f2b, above2 in _arcs(curve2):
            if above1 != above2:
                continue
            c2 = sorted((coord(curve2, f2a), coord(curve2, f2b)))
            inside = (c1[0] < c2[0] < c1[1]) != (c1[0] < c2[1] < c1[1])
            if inside:
                sign = 1 if (above1 == (c2[0] < c1[0])) else -1
                points.append((a1, a2, sign))
    return IntersectionSet(tuple(sorted(points)))


def _interval_intersections(curve1, curve2):
    """Intersections when one of the curves is a straight interval brane."""
    if curve1.closed:
        flipped = _interval_intersections(curve2, curve1)
        return IntersectionSet(tuple(sorted((b, a, s) for a, b, s in flipped.points)))
    if not curve2.closed:
        # two disjoint straight intervals (plat cups never share punctures)
        return IntersectionSet(())
    gate = curve1.ends[0]  # interval covers the gate between its punctures
    points = []
    for i, p in enumerate(curve2.passes):
        if p.gate == gate:
            points.append((0, i, 1 if p.upward else -1))
    return IntersectionSet(tuple(points))


def tline_crossings(curve, gate):
    """Passes of the curve through one gate's vertical brane line.

    In the stretched position of the compiler this is the geometric
    intersection number with that line.
    """
    if not curve.closed:
        return [0] if curve.ends[0] == gate else []
    return [i for i, p in enumerate(curve.passes) if p.gate == gate]


def total_tline_crossings(curve):
    return len(curve.passes)
