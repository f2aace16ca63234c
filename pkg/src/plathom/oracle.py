"""Independent Jones oracle: the Kauffman bracket state sum.

The bracket of a diagram with c crossings is the sum over its 2^c
smoothing states of A^(a-b) * delta^(loops-1), delta = -A^2 - A^(-2),
where a and b count the two smoothing types.  At a positive letter the
A-smoothing is the vertical one (deleting the letter), at a negative
letter the horizontal one.  Writhe normalization by (-A^3)^(-w) with the
oriented writhe w yields the Jones polynomial, stored in quarter powers
of q via A = q^(-1/4).
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .plat import LinkDiagram, plat_to_diagram
from .conventions import ORACLE_BRIDGE

MAX_CROSSINGS = 24

DELTA = LaurentPoly({-2: -1, 2: -1})  # -A^2 - A^(-2) with A = q^(-1/4)


class CrossingBoundExceeded(ValueError):
    pass


def _loops(diagram, state):
    """Loop count of a smoothing state (bit i set = horizontal at crossing i)."""
    parent = list(range(diagram.num_arcs + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for i, crossing in enumerate(diagram.crossings):
        if state >> i & 1:
            union(crossing.bottom_left, crossing.bottom_right)
            union(crossing.top_left, crossing.top_right)
        else:
            union(crossing.bottom_left, crossing.top_left)
            union(crossing.bottom_right, crossing.top_right)
    for a, b in diagram.closures:
        union(a, b)
    return len({find(x) for x in range(1, diagram.num_arcs + 1)})


def kauffman_bracket(diagram, state_range=None):
    """State-sum bracket of a closed diagram; exact, exponents in quarter units.

    ``state_range`` restricts the sum to a slice of state indices so that
    partial sums can be evaluated independently and added.
    """
    c = len(diagram.crossings)
    if c > MAX_CROSSINGS:
        raise CrossingBoundExceeded(f"{c} crossings exceed the brute-force bound {MAX_CROSSINGS}")
    states = range(2**c) if state_range is None else state_range
    total = LaurentPoly.zero()
    for state in states:
        exponent = 0
        for i, crossing in enumerate(diagram.crossings):
            vertical = not (state >> i & 1)
            a_smoothing = vertical == (crossing.letter_sign > 0)
            exponent += 1 if a_smoothing else -1
        # A^exponent = q^(-exponent/4): quarter exponent -exponent
        term = LaurentPoly.monomial(-exponent) * DELTA ** (_loops(diagram, state) - 1)
        total = total + term
    return total


def jones_from_bracket(diagram, counts=None):
    """Writhe-normalized bracket: the Jones polynomial with unknot value 1.

    ``counts`` defaults to the diagram's oriented crossing counts; the
    writhe is their difference.
    """
    counts = counts or diagram.oriented_counts
    w = counts.n_plus - counts.n_minus
    bracket = kauffman_bracket(diagram)
    # (-A^3)^(-w): sign (-1)^w, exponent A^(-3w) = quarter exponent +3w
    normalizer = LaurentPoly.monomial(3 * w, (-1) ** (w % 2))
    return normalizer * bracket


def jones_oracle(braid):
    """Reduced-normalized Jones polynomial of the plat closure of a word."""
    return jones_from_bracket(plat_to_diagram(braid))


def bridge_to_homology(jones_poly, components):
    """Rescale an oracle value onto the homology Euler-characteristic grid."""
    scaled = jones_poly.scale_exponents(ORACLE_BRIDGE["exponent_scale"])
    if ORACLE_BRIDGE["sign_rule"] == "components_minus_one" and (components - 1) % 2:
        return -scaled
    return scaled


def skein_check(diagram_plus, diagram_minus, diagram_zero):
    """Verify the n = 2 skein identity on a local triple of diagrams.

    The diagrams must agree outside one site carrying a positive crossing,
    a negative crossing, and the oriented smoothing respectively.  Checks
    t^(-1) V(L+) - t V(L-) = (t^(1/2) - t^(-1/2)) V(L0) exactly, in the
    oracle units t = A^(-4) = q.  Returns None on success, a violation
    string otherwise.
    """
    if not (
        len(diagram_plus.crossings) == len(diagram_minus.crossings) == len(diagram_zero.crossings) + 1
    ):
        return "diagrams are not a one-site skein triple"
    v_plus = jones_from_bracket(diagram_plus)
    v_minus = jones_from_bracket(diagram_minus)
    v_zero = jones_from_bracket(diagram_zero)
    t_inv = LaurentPoly.monomial(-4)
    t = LaurentPoly.monomial(4)
    half_diff = LaurentPoly({2: 1, -2: -1})  # t^(1/2) - t^(-1/2)
    lhs = t_inv * v_plus - t * v_minus
    rhs = half_diff * v_zero
    if lhs != rhs:
        return f"skein identity violated: lhs {lhs!r} != rhs {rhs!r}"
    return None
