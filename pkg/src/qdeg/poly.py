"""Sparse multivariate polynomials with rational exponents.

A monomial maps variable indices to reduced nonzero Fraction exponents; a
polynomial maps monomials to nonzero field coefficients.  Representation is
canonical (zero exponents and zero coefficients are dropped eagerly), so
equality is structural.  Negative exponents are allowed in the Laurent
extension used by derivatives and cohomology bases; ring-level operations
that require nonnegative exponents check for themselves.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch


@dataclass(frozen=True)
class Monomial:
    """Product of variable powers; ``exps`` is a sorted tuple of
    (variable index, nonzero Fraction exponent) pairs."""

    exps: tuple

    @staticmethod
    def make(pairs):
        cleaned = tuple(sorted((i, Fraction(e)) for i, e in pairs if e != 0))
        return Monomial(cleaned)

    @staticmethod
    def one():
        return Monomial(())

    def degree(self):
        return sum((e for _, e in self.exps), Fraction(0))

    def exponent(self, i):
        for j, e in self.exps:
            if j == i:
                return e
        return Fraction(0)

    def variables(self):
        return tuple(i for i, _ in self.exps)

    def mul(self, other):
        acc = dict(self.exps)
        for i, e in other.exps:
            acc[i] = acc.get(i, Fraction(0)) + e
        return Monomial.make(acc.items())

    def scale_exponents(self, q):
        """Raise the monomial to the rational power q."""
        q = Fraction(q)
        return Monomial.make((i, e * q) for i, e in self.exps)

    def is_integral(self):
        return all(e.denominator == 1 for _, e in self.exps)

    def has_negative(self):
        return any(e < 0 for _, e in self.exps)

    def dense(self, nvars):
        out = [Fraction(0)] * nvars
        for i, e in self.exps:
            out[i] = e
        return tuple(out)


def grlex_key(mono, nvars):
    """Graded lexicographic sort key (degree first, then variable 0, 1, ...)."""
    return (mono.degree(), mono.dense(nvars))


class QPolynomial:
    """Element of k[T_1,...,T_n]_Q (or its Laurent extension)."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms):
        canon = {}
        for mono, coeff in terms.items() if isinstance(terms, dict) else terms:
            if coeff == field.zero:
                continue
            canon[mono] = coeff
        self.field = field
        self.nvars = nvars
        self.terms = canon

    # ---- constructors ----

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars, value):
        return cls(field, nvars, {Monomial.one(): field.coerce(value)})

    @classmethod
    def variable(cls, field, nvars, index, exponent=1):
        mono = Monomial.make([(index, Fraction(exponent))])
        return cls(field, nvars, {mono: field.one})

    @classmethod
    def from_terms(cls, field, nvars, pairs):
        acc = {}
        for mono, coeff in pairs:
            acc[mono] = field.add(acc.get(mono, field.zero), coeff)
        return cls(field, nvars, acc)

    # ---- predicates ----

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(m == Monomial.one() for m in self.terms)

    def constant_value(self):
        return self.terms.get(Monomial.one(), self.field.zero)

    def has_fractional_exponents(self):
        return any(not m.is_integral() for m in self.terms)

    def has_negative_exponents(self):
        return any(m.has_negative() for m in self.terms)

    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldMismatch("fields differ: %r vs %r" % (self.field, other.field))
        if self.nvars != other.nvars:
            raise FieldMismatch(
                "variable universes differ: %d vs %d" % (self.nvars, other.nvars))

    # ---- arithmetic ----

    def __add__(self, other):
        self._check_compatible(other)
        acc = dict(self.terms)
        f = self.field
        for mono, coeff in other.terms.items():
            acc[mono] = f.add(acc.get(mono, f.zero), coeff)
        return QPolynomial(f, self.nvars, acc)

    def __neg__(self):
        f = self.field
        return QPolynomial(f, self.nvars,
                           {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_compatible(other)
        f = self.field
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                acc[m] = f.add(acc.get(m, f.zero), f.mul(c1, c2))
        return QPolynomial(f, self.nvars, acc)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = QPolynomial.constant(self.field, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, coeff):
        f = self.field
        coeff = f.coerce(coeff)
        return QPolynomial(f, self.nvars,
                           {m: f.mul(c, coeff) for m, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, QPolynomial) and self.field == other.field
                and self.nvars == other.nvars and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    # ---- inspection ----

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical iteration)."""
        return sorted(self.terms.items(),
                      key=lambda mc: grlex_key(mc[0], self.nvars), reverse=True)

    def total_degree(self):
        """Max term degree as a Fraction, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(m.degree() for m in self.terms)

    def leading(self):
        """(monomial, coefficient) of the graded-lex leading term."""
        mono = max(self.terms, key=lambda m: grlex_key(m, self.nvars))
        return mono, self.terms[mono]

    def substitute(self, args):
        """Substitute args[i] for variable i.  Requires nonnegative integer
        exponents on self (general fractional substitution lives in charp)."""
        if len(args) != self.nvars:
            raise FieldMismatch("expected %d substitution arguments" % self.nvars)
        f = self.field
        target_nvars = args[0].nvars if args else 0
        out = QPolynomial.zero(f, target_nvars)
        for mono, coeff in self.terms.items():
            piece = QPolynomial.constant(f, target_nvars, coeff)
            for i, e in mono.exps:
                if e.denominator != 1 or e < 0:
                    raise ValueError("substitute needs nonnegative integer exponents")
                piece = piece * (args[i] ** int(e))
            out = out + piece
        return out

    def __repr__(self):
        if not self.terms:
            return "QPolynomial(0)"
        bits = []
        for mono, coeff in self.sorted_terms():
            factors = ["T%d^%s" % (i, e) for i, e in mono.exps]
            bits.append("%s*%s" % (self.field.format(coeff),
                                   "*".join(factors) if factors else "1"))
        return "QPolynomial(%s)" % " + ".join(bits)
