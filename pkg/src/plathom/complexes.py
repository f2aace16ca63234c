"""Twisted complexes of shifted projectives and their integral cohomology.

A twisted complex is a finite list of shifted projectives T_node[k]{d}
with a differential matrix over the path algebra; every nonzero entry
raises the cohomological shift k by exactly one and preserves the total
q-degree (path q-degree + target d - source d = 0), and the matrix
squares to zero.  Hom into a simple module kills every nontrivial path,
leaving an integer cochain complex whose cohomology (computed by Smith
normal form) is the homology output of the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import PathAlgebra, PathElement, compose
from .laurent import LaurentPoly


class ComplexError(ValueError):
    pass


class LinComb:
    """Integer combination of basis runs sharing source and target nodes."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    self.terms[key] = coeff

    @classmethod
    def of(cls, element):
        if element.is_zero:
            return cls(element.algebra)
        return cls(element.algebra, {element.key(): element.coeff})

    def elements(self):
        return [
            PathElement(self.algebra, coeff, src, kind, length)
            for (src, kind, length), coeff in sorted(self.terms.items())
        ]

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return LinComb(self.algebra, terms)

    def __neg__(self):
        return LinComb(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, factor):
        return LinComb(self.algebra, {k: c * factor for k, c in self.terms.items()})

    def then(self, first):
        """Composite self o first, bilinearly over the basis runs."""
        out = LinComb(self.algebra)
        for p in self.elements():
            for q in first.elements():
                out = out + LinComb.of(compose(p, q))
        return out

    def unit_coefficient(self, node):
        return self.terms.get((node, "e", 0), 0)

    def is_unit(self):
        """Exactly +-1 times a trivial path and nothing else."""
        if len(self.terms) != 1:
            return False
        ((src, kind, length), coeff), = self.terms.items()
        return kind == "e" and coeff in (1, -1)

    def __repr__(self):
        if self.is_zero:
            return "0"
        return " + ".join(repr(el) for el in self.elements())


@dataclass(frozen=True)
class Projective:
    node: int
    k: int
    d: int

    def shifted(self, dk=0, dd=0):
        return Projective(self.node, self.k + dk, self.d + dd)


@dataclass(frozen=True)
class TwistedComplex:
    algebra: PathAlgebra
    objects: tuple  # of Projective
    differential: dict = field(default_factory=dict)  # (row, col) -> LinComb

    def entry(self, row, col):
        return self.differential.get((row, col))

    def __len__(self):
        return len(self.objects)

    def shifted(self, dk=0, dd=0):
        return TwistedComplex(
            self.algebra,
            tuple(o.shifted(dk, dd) for o in self.objects),
            dict(self.differential),
        )

    def to_json(self):
        return {
            "objects": [[o.node, o.k, o.d] for o in self.objects],
            "differential": [
                [r, c, [[list(key), coeff] for key, coeff in sorted(entry.terms.items())]]
                for (r, c), entry in sorted(self.differential.items())
            ],
        }


def validate(complex_):
    """None when both invariants hold, else a report naming the first failure."""
    objs = complex_.objects
    for (r, c), entry in sorted(complex_.differential.items()):
        if entry.is_zero:
            continue
        src, tgt = objs[c], objs[r]
        if tgt.k != src.k + 1:
            return f"entry ({r},{c}): cohomological degree step is {tgt.k - src.k}, not 1"
        for el in entry.elements():
            if el.source != src.node or el.target != tgt.node:
                return f"entry ({r},{c}): run {el!r} does not map node {src.node} to {tgt.node}"
            if el.q_degree + tgt.d - src.d != 0:
                return f"entry ({r},{c}): run {el!r} breaks q-degree preservation"
    square = _matrix_square(complex_)
    for (r, c), entry in sorted(square.items()):
        if not entry.is_zero:
            return f"Q^2 entry ({r},{c}) is {entry!r}, not zero"
    return None


def _matrix_square(complex_):
    by_col = {}
    for (r, c), entry in complex_.differential.items():
        by_col.setdefault(c, []).append((r, entry))
    square = {}
    for (r, m), outer in complex_.differential.items():
        for r2, inner in by_col.get(r, []):
            prod = inner.then(outer)
            if not prod.is_zero:
                key = (r2, m)
                square[key] = square.get(key, LinComb(complex_.algebra)) + prod
    return {k: v for k, v in square.items() if not v.is_zero}


@dataclass(frozen=True)
class ChainMap:
    """A degree-(0,0) map between twisted complexes, rows target / cols source."""

    source: TwistedComplex
    target: TwistedComplex
    entries: dict  # (row_in_target, col_in_source) -> LinComb

    def validate(self):
        for (r, c), entry in self.entries.items():
            if entry.is_zero:
                continue
            src, tgt = self.source.objects[c], self.target.objects[r]
            if tgt.k != src.k or any(
                el.q_degree + tgt.d - src.d != 0 or el.source != src.node or el.target != tgt.node
                for el in entry.elements()
            ):
                return f"chain map entry ({r},{c}) is not degree (0,0)"
        # commute with the differentials
        lhs = {}
        for (r, c), f in self.entries.items():
            for (r2, c2), d in self.target.differential.items():
                if c2 == r:
                    key = (r2, c)
                    lhs[key] = lhs.get(key, LinComb(f.algebra)) + d.then(f)
        for (r, c), d in self.source.differential.items():
            for (r2, c2), f in self.entries.items():
                if c2 == r:
                    key = (r2, c)
                    lhs[key] = lhs.get(key, LinComb(f.algebra)) - f.then(d)
        for key, entry in lhs.items():
            if not entry.is_zero:
                return f"chain map does not commute with differentials at {key}"
        return None


def cone(f):
    """Mapping cone of a chain map, source shifted by [1].

    With the convention X[1]^k = X^(k+1), the shift lowers the stored k of
    the source objects by one, so the chain-map block raises degree.
    """
    problem = f.validate()
    if problem:
        raise ComplexError(problem)
    ns = len(f.source.objects)
    objects = tuple(o.shifted(dk=-1) for o in f.source.objects) + f.target.objects
    differential = {}
    for (r, c), entry in f.source.differential.items():
        differential[(r, c)] = -entry
    for (r, c), entry in f.target.differential.items():
        differential[(ns + r, ns + c)] = entry
    for (r, c), entry in f.entries.items():
        differential[(ns + r, c)] = entry
    result = TwistedComplex(f.source.algebra, objects, differential)
    problem = validate(result)
    if problem:
        raise ComplexError(f"cone failed validation: {problem}")
    return result


def gaussian_eliminate(complex_):
    """Cancel +-identity entries until none remain; quasi-isomorphism type kept."""
    objects = list(complex_.objects)
    diff = {k: v for k, v in complex_.differential.items() if not v.is_zero}
    while True:
        pivot = None
        for (r, c) in sorted(diff):
            if diff[(r, c)].is_unit():
                pivot = (r, c)
                break
        if pivot is None:
            break
        r, c = pivot
        epsilon = next(iter(diff[(r, c)].terms.values()))
        into_r = {cc: e for (rr, cc), e in diff.items() if rr == r and cc != c}
        from_c = {rr: e for (rr, cc), e in diff.items() if cc == c and rr != r}
        for j, alpha in into_r.items():
            for i, beta in from_c.items():
                key = (i, j)
                correction = beta.then(alpha).scaled(-epsilon)
                updated = diff.get(key, LinComb(complex_.algebra)) + correction
                if updated.is_zero:
                    diff.pop(key, None)
                else:
                    diff[key] = updated
        keep = [i for i in range(len(objects)) if i not in (r, c)]
        relabel = {old: new for new, old in enumerate(keep)}
        objects = [objects[i] for i in keep]
        diff = {
            (relabel[rr], relabel[cc]): e
            for (rr, cc), e in diff.items()
            if rr in relabel and cc in relabel and not e.is_zero
        }
    result = TwistedComplex(complex_.algebra, tuple(objects), diff)
    problem = validate(result)
    if problem:
        raise ComplexError(f"elimination broke the complex: {problem}")
    return result


# --- cochain complexes over Z and their cohomology -------------------------


@dataclass(frozen=True)
class CochainComplex:
    """Free abelian cochain complex with bigraded generators.

    Differentials preserve d and raise k by one; entries is a map
    (target_generator, source_generator) -> integer.
    """

    generators: tuple  # of (k, d)
    entries: dict

    def validate(self):
        for (r, c), coeff in self.entries.items():
            if not coeff:
                continue
            kt, dt = self.generators[r]
            ks, ds = self.generators[c]
            if kt != ks + 1 or dt != ds:
                return f"entry ({r},{c}) is not degree (1,0)"
        # d^2 = 0
        square = {}
        for (r, c), coeff in self.entries.items():
            for (r2, c2), coeff2 in self.entries.items():
                if c2 == r:
                    key = (r2, c)
                    square[key] = square.get(key, 0) + coeff2 * coeff
        for key, value in square.items():
            if value:
                return f"d^2 is nonzero at {key}"
        return None


def hom_to_simple(complex_, node):
    """The integer cochain complex hom(-, I_node) of a twisted complex.

    Only objects with the given node survive; dualizing flips both shifts,
    so the generator for T_node[k]{d} sits in bidegree (-k,-d), and the
    induced maps keep only the trivial-path coefficients of the entries.
    """
    picked = [i for i, o in enumerate(complex_.objects) if o.node == node]
    position = {obj_index: g for g, obj_index in enumerate(picked)}
    generators = tuple((-complex_.objects[i].k, -complex_.objects[i].d) for i in picked)
    entries = {}
    for (r, c), entry in complex_.differential.items():
        if r in position and c in position:
            coeff = entry.unit_coefficient(node)
            if coeff:
                # dual of obj_c -> obj_r is generator(r) -> generator(c)
                entries[(position[c], position[r])] = coeff
    cc = CochainComplex(generators, entries)
    problem = cc.validate()
    if problem:
        raise ComplexError(problem)
    return cc


@dataclass(frozen=True)
class BigradedGroups:
    """Free rank and torsion invariant factors per bidegree (k, d)."""

    groups: tuple  # of ((k, d), rank, (torsion, ...))

    @classmethod
    def from_dict(cls, data):
        cleaned = []
        for (k, d), (rank, torsion) in sorted(data.items()):
            torsion = tuple(t for t in torsion if t > 1)
            if rank or torsion:
                cleaned.append(((k, d), rank, torsion))
        return cls(tuple(cleaned))

    def as_dict(self):
        return {bidegree: (rank, torsion) for bidegree, rank, torsion in self.groups}

    def total_rank(self):
        return sum(rank for _, rank, _ in self.groups)

    def flipped(self):
        """Image under (k, d) -> (-k, -d), as for mirror links."""
        return BigradedGroups.from_dict(
            {(-k, -d): (rank, torsion) for (k, d), rank, torsion in self.groups}
        )

    def mapped(self, f):
        return BigradedGroups.from_dict(
            {f(k, d): (rank, torsion) for (k, d), rank, torsion in self.groups}
        )

    def to_json(self):
        return [[k, d, rank, list(torsion)] for (k, d), rank, torsion in self.groups]


def smith_invariant_factors(matrix):
    """Nonzero invariant factors of an integer matrix, exact arithmetic."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    factors = []
    top = 0
    while top < min(rows, cols):
        pivot = None
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        while True:
            reduced = False
            for i in range(top + 1, rows):
                if m[i][top]:
                    q = m[i][top] // m[top][top]
                    for j in range(top, cols):
                        m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        reduced = True
            for j in range(top + 1, cols):
                if m[top][j]:
                    q = m[top][j] // m[top][top]
                    for row in m:
                        row[j] -= q * row[top]
                    if m[top][j]:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
                        reduced = True
            if not reduced:
                break
        # enforce divisibility: fold any nondividing residue into the pivot block
        stubborn = None
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % m[top][top]:
                    stubborn = i
                    break
            if stubborn is not None:
                break
        if stubborn is not None:
            for j in range(top, cols):
                m[top][j] += m[stubborn][j]
            continue
        factors.append(abs(m[top][top]))
        top += 1
    return factors


def rank_mod_p(matrix, p):
    m = [[value % p for value in row] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col] % p), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for i in range(rows):
            if i != rank and m[i][col]:
                factor = m[i][col]
                m[i] = [(v - factor * w) % p for v, w in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def cohomology(cochain, prime=None):
    """Cohomology per bidegree: free rank plus torsion (over Z), or ranks mod a prime."""
    problem = cochain.validate()
    if problem:
        raise ComplexError(problem)
    by_d = {}
    for g, (k, d) in enumerate(cochain.generators):
        by_d.setdefault(d, {}).setdefault(k, []).append(g)
    result = {}
    for d, levels in by_d.items():
        ks = sorted(levels)
        matrices = {}
        for k in ks:
            sources = levels.get(k, [])
            targets = levels.get(k + 1, [])
            if not sources or not targets:
                continue
            index_s = {g: c for c, g in enumerate(sources)}
            index_t = {g: r for r, g in enumerate(targets)}
            matrix = [[0] * len(sources) for _ in targets]
            for (r, c), coeff in cochain.entries.items():
                if c in index_s and r in index_t:
                    matrix[index_t[r]][index_s[c]] = coeff
            matrices[k] = matrix
        for k in ks:
            dim = len(levels[k])
            out = matrices.get(k)
            inc = matrices.get(k - 1)
            if prime is None:
                out_factors = smith_invariant_factors(out) if out else []
                inc_factors = smith_invariant_factors(inc) if inc else []
                rank = dim - len(out_factors) - len(inc_factors)
                torsion = tuple(sorted(f for f in inc_factors if f > 1))
            else:
                rank = dim - (rank_mod_p(out, prime) if out else 0) - (
                    rank_mod_p(inc, prime) if inc else 0
                )
                torsion = ()
            if rank or torsion:
                result[(k, d)] = (rank, torsion)
    return BigradedGroups.from_dict(result)


def euler_characteristic(groups):
    """Sum of (-1)^k rank q^d over the support; torsion is ignored."""
    poly = LaurentPoly.zero()
    for (k, d), rank, _ in groups.groups:
        poly = poly + LaurentPoly.q_power(d, (-1) ** (k % 2) * rank)
    return poly
