"""Compile a normal-form curve brane into a twisted complex of projectives.

Stretching the curve straight along the cylinder breaks it at the two
infinities into one vertical brane segment per axis pass.  Each pass
becomes a shifted projective; consecutive passes along the curve are
joined by a cone over their one-dimensional intersection point, whose
label is the monotone run their connecting excursion traces out: an
excursion toward one infinity gives an a-run, toward the other a b-run.
The gate-to-node map is node(g) = -g mod n, so runs entering from the
left compose with a-arrows of q-degree zero; the resulting differential
closes to Q^2 = 0 by the zigzag relations alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import PathAlgebra
from .complexes import ComplexError, LinComb, Projective, TwistedComplex, validate
from .curves import Curve, CurveError, is_normal_form


class CompileError(ValueError):
    pass


@dataclass(frozen=True)
class BreakingEvent:
    point: tuple  # (source pass index, target pass index)
    label: str  # run descriptor of the cone map
    objects: tuple  # object list accumulated so far, as (node, k, d)


@dataclass(frozen=True)
class BreakingTrace:
    gates: tuple  # gate of each pass, aligned with the complex's objects
    events: tuple  # of BreakingEvent

    def to_json(self):
        return {
            "gates": list(self.gates),
            "events": [
                {"point": list(e.point), "label": e.label, "objects": [list(o) for o in e.objects]}
                for e in self.events
            ],
        }


def node_of_gate(gate, n_nodes):
    """Algebra node carried by a gate's vertical brane line."""
    return (-gate) % n_nodes


def compile_curve(curve, algebra):
    """Twisted complex of a closed normal-form curve, with its breaking trace."""
    if not isinstance(curve, Curve) or not curve.closed:
        raise CompileError("only closed curve branes compile to complexes")
    if algebra.n_nodes != curve.surface.n_punctures:
        raise CompileError(
            f"algebra has {algebra.n_nodes} nodes but the surface has "
            f"{curve.surface.n_punctures} punctures"
        )
    if not is_normal_form(curve):
        raise CompileError("curve must be in normal form")

    word = curve.passes
    n = algebra.n_nodes
    objects = []
    for p in word:
        if (p.weight - p.gate) % 2:
            raise CompileError("pass weight parity violates the q-grading")
        objects.append(Projective(node_of_gate(p.gate, n), p.maslov, (p.weight - p.gate) // 2))

    differential = {}
    above_events = []
    below_events = []
    for i, p in enumerate(word):
        j = (i + 1) % len(word)
        q = word[j]
        if abs(q.maslov - p.maslov) != 1:
            raise CompileError(f"Maslov step between passes {i} and {j} is not +-1")
        src, tgt = (i, j) if q.maslov == p.maslov + 1 else (j, i)
        g_src, g_tgt = word[src].gate, word[tgt].gate
        length = abs(g_src - g_tgt)
        if g_tgt < g_src:
            run = algebra.a_run(objects[src].node, length)
            above_events.append((src, tgt, run))
        else:
            run = algebra.b_run(objects[src].node, length)
            below_events.append((src, tgt, run))
        if run.target != objects[tgt].node:
            raise CompileError("run endpoints disagree with the object nodes")
        differential[(tgt, src)] = LinComb.of(run)

    # break first at one infinity, then at the other; the direct-sum brane
    # is fixed and each cone only deforms the differential
    all_objects = tuple((o.node, o.k, o.d) for o in objects)
    events = [
        BreakingEvent((src, tgt), repr(run), all_objects)
        for src, tgt, run in above_events + below_events
    ]

    complex_ = TwistedComplex(algebra, tuple(objects), differential)
    problem = validate(complex_)
    if problem:
        raise CompileError(f"compiled complex is not closed: {problem}")
    trace = BreakingTrace(tuple(p.gate for p in word), tuple(events))
    return complex_, trace


def replay_trace(trace, algebra, objects):
    """Rebuild the differential from a breaking trace; used by golden tests."""
    differential = {}
    for event in trace.events:
        src, tgt = event.point
        g_src, g_tgt = trace.gates[src], trace.gates[tgt]
        length = abs(g_src - g_tgt)
        node = node_of_gate(g_src, algebra.n_nodes)
        run = algebra.a_run(node, length) if g_tgt < g_src else algebra.b_run(node, length)
        differential[(tgt, src)] = LinComb.of(run)
    return TwistedComplex(algebra, tuple(objects), differential)


def assign_gradings(complex_, trace, counts, *, hom_gate, self_signed):
    """Fix the absolute shifts of a compiled complex.

    The uniform offsets are chosen so that homming into the simple at
    ``hom_gate`` reports the calibrated bidegrees: the unknot pipeline
    lands at the origin after Khovanov conversion, and framing kinks move
    only the crossing counts the conversion consumes.  ``counts`` is kept
    in the signature for interface parity; the letter totals it carries
    are not used beyond sanity checks.
    """
    from .conventions import GRADING

    if hom_gate % 2 == 0:
        raise CompileError("the marked cup spans an odd gate")
    del counts, trace
    k_shift = GRADING["K_BASE"] + GRADING["K_SELF"] * self_signed
    # the object stores (J - gate)/2 and the hom flip must report
    # (-J - D_BASE - D_SELF*s)/2, so shift d by (gate + D_BASE + D_SELF*s)/2
    d_numerator = hom_gate + GRADING["D_BASE"] + GRADING["D_SELF"] * self_signed
    if d_numerator % 2:
        raise CompileError("grading normalization is not integral for this word")
    return complex_.shifted(dk=-k_shift, dd=d_numerator // 2)
