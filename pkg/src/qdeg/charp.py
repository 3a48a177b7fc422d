"""Characteristic-p features: Frobenius p-th roots, composition of
rational-degree polynomials, and pullbacks along polynomial maps.

Composition substitutes polynomials into fractional powers.  A fractional
power of a sum only exists in characteristic p with a denominator that is a
power of p, where the Frobenius inverse applies term by term; over Q (or for
denominators coprime to p) only single-monomial arguments with exact
coefficient roots compose.  Everything else raises
CompositionNotPolynomial, which is the genuine obstruction of the theory,
not a missing feature.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import CompositionNotPolynomial, FieldMismatch, NotPrimeField
from .poly import QPolynomial


def p_th_root(f):
    """The inverse Frobenius: g with g^p = f, over F_p.

    Exponents divide by p; coefficients are fixed (c^p = c in F_p)."""
    p = f.field.characteristic
    if not p:
        raise NotPrimeField("p-th root needs a prime field")
    return QPolynomial(f.field, f.nvars,
                       {m.scale_exponents(Fraction(1, p)): c
                        for m, c in f.terms.items()})


def _coefficient_root(field, c, b):
    """Exact b-th root of a coefficient, or None."""
    if field.characteristic == 0:

        def iroot(x):
            if x < 0:
                return None
            if x in (0, 1):
                return x
            r = max(1, int(round(x ** (1.0 / b))))
            while r ** b > x:
                r -= 1
            while (r + 1) ** b <= x:
                r += 1
            return r if r ** b == x else None

        if c < 0:
            if b % 2 == 0:
                return None
            num = iroot(-c.numerator)
            num = -num if num is not None else None
        else:
            num = iroot(c.numerator)
        den = iroot(c.denominator)
        if num is None or den is None:
            return None
        return Fraction(num, den)
    p = field.characteristic
    for r in range(p):
        if pow(r, b, p) == c % p:
            return r
    return None


def fractional_power(g, q):
    """g raised to the nonnegative rational power q, when it exists in the
    ring: integer powers always; monomials via exact coefficient roots;
    sums only through repeated p-th roots in characteristic p."""
    q = Fraction(q)
    if q < 0:
        raise CompositionNotPolynomial("negative power of a polynomial")
    if q.denominator == 1:
        return g ** int(q)
    field = g.field
    if g.is_zero():
        return g
    b = q.denominator
    if len(g.terms) == 1:
        (mono, coeff), = g.terms.items()
        root = _coefficient_root(field, coeff, b)
        if root is None:
            raise CompositionNotPolynomial(
                "coefficient has no exact %d-th root" % b)
        root_poly = QPolynomial(field, g.nvars,
                                {mono.scale_exponents(Fraction(1, b)): root})
        return root_poly ** q.numerator
    p = field.characteristic
    if not p:
        raise CompositionNotPolynomial(
            "fractional power of a sum in characteristic zero")
    k = 0
    b_left = b
    while b_left % p == 0:
        b_left //= p
        k += 1
    if b_left != 1:
        raise CompositionNotPolynomial(
            "denominator %d is not a power of the characteristic %d" % (b, p))
    for _ in range(k):
        g = p_th_root(g)
    return g ** q.numerator


def compose(f, args):
    """Substitute args[i] for variable i of f, expanding fractional powers
    only where they exist in the ring."""
    if len(args) != f.nvars:
        raise FieldMismatch("arity mismatch: %d variables, %d arguments"
                            % (f.nvars, len(args)))
    field = f.field
    for g in args:
        if g.field != field:
            raise FieldMismatch("argument field differs from f's field")
    target_nvars = args[0].nvars if args else f.nvars
    out = QPolynomial.zero(field, target_nvars)
    for mono, coeff in f.terms.items():
        piece = QPolynomial.constant(field, target_nvars, coeff)
        for i, e in mono.exps:
            piece = piece * fractional_power(args[i], e)
        out = out + piece
    return out


@dataclass(frozen=True)
class PolynomialMap:
    """A map A^n -> A^m given by m component polynomials in n variables."""

    components: tuple

    def __post_init__(self):
        comps = self.components
        if comps:
            field, nvars = comps[0].field, comps[0].nvars
            for c in comps:
                if c.field != field or c.nvars != nvars:
                    raise FieldMismatch("map components disagree on field/universe")

    @property
    def source_arity(self):
        return self.components[0].nvars

    @property
    def target_arity(self):
        return len(self.components)


def pullback(phi, g):
    """The induced algebra homomorphism g -> g o phi."""
    if g.nvars != phi.target_arity:
        raise FieldMismatch("polynomial lives in %d variables, map targets %d"
                            % (g.nvars, phi.target_arity))
    return compose(g, list(phi.components))


def compose_maps(outer, inner):
    """The map outer o inner (components of outer pulled back along inner)."""
    if inner.target_arity != outer.source_arity:
        raise FieldMismatch("maps are not composable")
    return PolynomialMap(tuple(pullback(inner, c) for c in outer.components))


def map_from_images(images):
    """The unique polynomial map whose pullback sends the i-th target
    variable to images[i]."""
    return PolynomialMap(tuple(images))
