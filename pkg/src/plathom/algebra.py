"""The graded path algebra of the affine cyclic quiver with zigzag relations.

Nodes 0..n-1 sit on a cycle, one per gate between consecutive punctures.
Arrows a_{i+1,i}: T_i -> T_{i+1} carry q-degree 0 and b_{i,i+1}:
T_{i+1} -> T_i carry q-degree 1, indices mod n, subject to
a_{i,i-1} b_{i-1,i} = 0 = b_{i,i+1} a_{i+1,i}.  Every nonzero product of
arrows is therefore a monotone run of a's or of b's; elements are integer
multiples of such runs (or of the trivial paths e_i).
"""

from __future__ import annotations

from dataclasses import dataclass


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class PathAlgebra:
    n_nodes: int

    def __post_init__(self):
        if self.n_nodes < 2:
            raise AlgebraError(f"need at least 2 nodes, got {self.n_nodes}")

    def node(self, i):
        return i % self.n_nodes

    def unit(self, i):
        return PathElement(self, 1, self.node(i), "e", 0)

    def a_run(self, source, length, coeff=1):
        """The a-run starting at ``source`` of the given length (target = source+length)."""
        return PathElement(self, coeff, self.node(source), "a", length)

    def b_run(self, source, length, coeff=1):
        """The b-run starting at ``source`` of the given length (target = source-length)."""
        return PathElement(self, coeff, self.node(source), "b", length)

    def zero(self):
        return PathElement(self, 0, 0, "e", 0)


@dataclass(frozen=True)
class PathElement:
    """An integer multiple of a monotone run, or zero.

    ``kind`` is "e" for a trivial path (length 0), "a" for a run of a-arrows
    (node index increasing) and "b" for b-arrows (decreasing).
    """

    algebra: PathAlgebra
    coeff: int
    source: int
    kind: str
    length: int

    def __post_init__(self):
        if self.kind not in ("e", "a", "b"):
            raise AlgebraError(f"unknown run kind {self.kind!r}")
        if self.length < 0 or (self.kind == "e" and self.length != 0):
            raise AlgebraError("invalid run length")
        if self.kind != "e" and self.length == 0:
            raise AlgebraError("arrow runs must have positive length; use kind 'e'")

    @property
    def is_zero(self):
        return self.coeff == 0

    @property
    def target(self):
        n = self.algebra.n_nodes
        if self.kind == "a":
            return (self.source + self.length) % n
        if self.kind == "b":
            return (self.source - self.length) % n
        return self.source

    @property
    def q_degree(self):
        return self.length if self.kind == "b" else 0

    @property
    def winding(self):
        """Full cycles traversed around the affine quiver."""
        return self.length // self.algebra.n_nodes

    def key(self):
        """Basis-run identity, ignoring the coefficient."""
        if self.is_zero:
            return None
        return (self.source, self.kind, self.length)

    def __repr__(self):
        if self.is_zero:
            return "0"
        if self.kind == "e":
            body = f"e_{self.source}"
        else:
            body = f"{self.kind}[{self.source}->{self.target};len={self.length}]"
        return body if self.coeff == 1 else f"{self.coeff}*{body}"


def compose(p, q):
    """The product p*q in the algebra: "q then p" (target(q) = source(p)).

    Mixed products and node mismatches are zero; q-degrees and windings add.
    """
    if p.algebra != q.algebra:
        raise AlgebraError("elements of different algebras")
    alg = p.algebra
    if p.is_zero or q.is_zero:
        return alg.zero()
    if q.target != p.source:
        return alg.zero()
    coeff = p.coeff * q.coeff
    if p.kind == "e":
        return PathElement(alg, coeff, q.source, q.kind, q.length)
    if q.kind == "e":
        return PathElement(alg, coeff, p.source, p.kind, p.length)
    if p.kind != q.kind:
        return alg.zero()
    return PathElement(alg, coeff, q.source, p.kind, p.length + q.length)


def hom_basis(algebra, i, j, max_winding=0):
    """All monotone runs T_i -> T_j with winding at most ``max_winding``.

    Returns a list of coefficient-1 :class:`PathElement` values sorted by
    (kind, length); includes e_i when i = j.
    """
    n = algebra.n_nodes
    i, j = algebra.node(i), algebra.node(j)
    runs = []
    if i == j:
        runs.append(algebra.unit(i))
    base_a = (j - i) % n
    base_b = (i - j) % n
    for m in range(max_winding + 1):
        la = base_a + n * m
        if la > 0 and la // n <= max_winding:
            runs.append(algebra.a_run(i, la))
        lb = base_b + n * m
        if lb > 0 and lb // n <= max_winding:
            runs.append(algebra.b_run(i, lb))
    runs.sort(key=lambda r: (r.kind, r.length))
    return runs


def hom_to_simple_basis(algebra, i, j):
    """Rank of Hom(T_i, I_j): 1 iff i = j (the duality pairing), else 0."""
    return 1 if algebra.node(i) == algebra.node(j) else 0
