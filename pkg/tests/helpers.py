"""Random object generators shared across the test modules."""

from fractions import Fraction

from qdeg.fields import QQ
from qdeg.poly import Monomial, QPolynomial


def random_coeff(rng, field):
    if field.characteristic == 0:
        num = rng.randint(-6, 6)
        return Fraction(num, rng.randint(1, 4))
    return rng.randrange(field.characteristic)


def random_monomial(rng, nvars, max_num=3, max_den=3):
    pairs = []
    for i in range(nvars):
        if rng.random() < 0.6:
            pairs.append((i, Fraction(rng.randint(0, max_num),
                                      rng.randint(1, max_den))))
    return Monomial.make(pairs)


def random_poly(rng, field, nvars, max_terms=4, max_num=3, max_den=3):
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        pairs.append((random_monomial(rng, nvars, max_num, max_den),
                      random_coeff(rng, field)))
    return QPolynomial.from_terms(field, nvars, pairs)


def random_nonzero_poly(rng, field, nvars, **kw):
    while True:
        f = random_poly(rng, field, nvars, **kw)
        if not f.is_zero():
            return f


def univariate(field, pairs):
    """Build a one-variable polynomial from (exponent, coefficient) pairs."""
    return QPolynomial.from_terms(
        field, 1,
        [(Monomial.make([(0, Fraction(e))]), field.coerce(c))
         for e, c in pairs])


def qq_poly(text, varnames):
    from qdeg.parser import parse
    return parse(text, QQ, varnames)
