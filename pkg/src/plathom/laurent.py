"""Sparse exact Laurent polynomials with exponents in (1/4)Z.

Exponents are stored as integer multiples of a quarter unit, so the
Kauffman bracket variable A, the Jones variable and the homological
q-variable all live in one ring without rational arithmetic.  With q
the integer-exponent variable of the homology gradings:

    q^j      <-> quarter exponent 4*j
    A        <-> q^(-1/4), quarter exponent -1
    t = q^2  <-> quarter exponent 8 per power of t
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Laurent polynomial over Z, exponents counted in quarter units."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in dict(terms).items():
                if coeff:
                    clean[int(exp)] = int(coeff)
        self._terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, quarters, coeff=1):
        return cls({quarters: coeff})

    @classmethod
    def q_power(cls, j, coeff=1):
        """coeff * q^j with j an integer exponent of the whole unit q."""
        return cls({4 * j: coeff})

    def terms(self):
        """Sorted (quarter_exponent, coefficient) pairs."""
        return sorted(self._terms.items())

    def is_zero(self):
        return not self._terms

    def coefficient(self, quarters):
        return self._terms.get(quarters, 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = LaurentPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale_exponents(self, factor):
        """Substitute the variable by its factor-th power (exponent rescale)."""
        return LaurentPoly({e * factor: c for e, c in self._terms.items()})

    def invert_variable(self):
        """The image under q -> q^(-1)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def to_pairs(self):
        """JSON-friendly sorted [[quarter_exponent, coefficient], ...]."""
        return [[e, c] for e, c in self.terms()]

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            frac = Fraction(e, 4)
            if frac == 0:
                parts.append(f"{c:+d}")
            else:
                exp = str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"
                if c == 1:
                    parts.append(f"+q^{exp}")
                elif c == -1:
                    parts.append(f"-q^{exp}")
                else:
                    parts.append(f"{c:+d}*q^{exp}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text
