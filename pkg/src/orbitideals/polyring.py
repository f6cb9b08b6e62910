"""Sparse polynomials with exact integer coefficients in the entries of a
generic square matrix.

Variables are the n*n coordinate functions of an n x n matrix, indexed by
(row, col) with 1-based indices.  Every polynomial constructed here is
homogeneous; addition enforces this.  Coefficients are plain Python ints,
so all arithmetic is exact.  Evaluation at a rational matrix produces an
exact Fraction (or int when the matrix has integer entries).

A monomial is stored as a tuple of ((row, col), exponent) pairs sorted by
(row, col) with all exponents positive.  The canonical term order is graded
lexicographic on the exponent vector read in (row, col) order; serialization
lists terms in descending canonical order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

Var = tuple[int, int]
Mon = tuple[tuple[Var, int], ...]


def mon_degree(mon: Mon) -> int:
    return sum(e for _, e in mon)


def mon_mul(a: Mon, b: Mon) -> Mon:
    """Product of two monomials (merge of sorted exponent lists)."""
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def term_key(n: int, mon: Mon):
    """Graded-lex sort key: (total degree, dense exponent vector)."""
    dense = [0] * (n * n)
    for (r, c), e in mon:
        dense[(r - 1) * n + (c - 1)] = e
    return (mon_degree(mon), tuple(dense))


def monomials_of_degree(n: int, d: int) -> list[Mon]:
    """All degree-d monomials in the n*n variables, descending canonical order."""
    if d < 0:
        return []
    if d == 0:
        return [()]
    variables = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    out = []
    for combo in itertools.combinations_with_replacement(variables, d):
        exps: dict[Var, int] = {}
        for v in combo:
            exps[v] = exps.get(v, 0) + 1
        out.append(tuple(sorted(exps.items())))
    out.sort(key=lambda m: term_key(n, m), reverse=True)
    return out


class Polynomial:
    """Immutable sparse homogeneous polynomial over the generic matrix ring.

    Instances should never be mutated after construction; all operations
    return new polynomials, so values are safe to share and cache.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("matrix size must be positive")
        cleaned: dict[Mon, int] = {}
        degree = None
        if terms:
            for mon, coeff in dict(terms).items():
                if coeff == 0:
                    continue
                if not isinstance(coeff, int):
                    raise TypeError("coefficients must be exact integers")
                d = mon_degree(mon)
                if degree is None:
                    degree = d
                elif d != degree:
                    raise ValueError("terms of different total degree")
                for (r, c), e in mon:
                    if not (1 <= r <= n and 1 <= c <= n and e >= 1):
                        raise ValueError(f"bad variable x[{r},{c}]^{e} for n={n}")
                cleaned[mon] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n, {})

    @classmethod
    def constant(cls, n: int, value: int) -> "Polynomial":
        return cls(n, {(): value})

    @classmethod
    def variable(cls, n: int, row: int, col: int) -> "Polynomial":
        return cls(n, {(((row, col), 1),): 1})

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Common total degree of the terms; -1 for the zero polynomial."""
        for mon in self.terms:
            return mon_degree(mon)
        return -1

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; identity hashing would be a trap

    def sorted_terms(self) -> list[tuple[Mon, int]]:
        """Terms in descending canonical order (leading term first)."""
        return sorted(self.terms.items(), key=lambda t: term_key(self.n, t[0]), reverse=True)

    def leading_monomial(self) -> Mon:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=lambda m: term_key(self.n, m))

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.n != other.n:
            raise ValueError("polynomials over different matrix sizes")

    def __add__(self, other):
        if other == 0:
            return self
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        if self.degree != other.degree:
            raise ValueError("sum of nonzero polynomials of different degrees")
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            nc = terms.get(mon, 0) + c
            if nc:
                terms[mon] = nc
            else:
                terms.pop(mon, None)
        return Polynomial(self.n, terms)

    __radd__ = __add__  # lets sum() start from 0

    def __neg__(self):
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if other == 0:
            return self
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.n)
            return Polynomial(self.n, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out: dict[Mon, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mon_mul(m1, m2)
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    out.pop(m, None)
        return Polynomial(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def times_monomial(self, mon: Mon) -> "Polynomial":
        """Fast product with a single monomial."""
        if not mon:
            return self
        return Polynomial(self.n, {mon_mul(m, mon): c for m, c in self.terms.items()})

    # -- evaluation --------------------------------------------------------

    def evaluate(self, matrix):
        """Substitute matrix entries for the variables; exact arithmetic.

        `matrix` may be a RationalMatrix-like object (with .entries) or any
        nested sequence of Fractions/ints indexed [row-1][col-1].
        """
        entries = getattr(matrix, "entries", matrix)
        total = 0
        for mon, coeff in self.terms.items():
            v = coeff
            for (r, c), e in mon:
                x = entries[r - 1][c - 1]
                v = v * (x if e == 1 else x**e)
            total = total + v
        return total

    # -- serialization -----------------------------------------------------

    def to_records(self) -> list[dict]:
        """JSON-friendly terms: coeff as decimal string, monomial as
        [row, col, exponent] triples sorted by (row, col); descending order."""
        return [
            {"coeff": str(c), "monomial": [[r, col, e] for (r, col), e in mon]}
            for mon, c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, n: int, records) -> "Polynomial":
        terms: dict[Mon, int] = {}
        for rec in records:
            mon = tuple(sorted(((r, c), e) for r, c, e in rec["monomial"]))
            terms[mon] = terms.get(mon, 0) + int(rec["coeff"])
        return cls(n, terms)

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"Polynomial(n={self.n}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mon, c in self.sorted_terms():
            factors = "*".join(
                f"x[{r},{col}]" + (f"^{e}" if e > 1 else "") for (r, col), e in mon
            )
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = factors
            else:
                body = f"{abs(c)}*{factors}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def as_fraction_matrix(entries) -> list[list[Fraction]]:
    """Coerce a nested sequence into a list-of-lists of Fractions."""
    return [[Fraction(x) for x in row] for row in entries]
