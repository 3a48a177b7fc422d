"""Finitely generated ideal algorithms.

Everything runs in the flattened integer-exponent ring at the minimal joint
level of the inputs (see flatten); answers there are answers in the union
ring.  The engine is Buchberger's algorithm under degrevlex with the normal
selection strategy and the two lcm pair criteria, followed by full
inter-reduction.  Univariate Bezout GCDs come from the extended Euclidean
algorithm on the flattened pair.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import NotUnivariate
from .flatten import FlattenMap, exponent_lcm, flatten, flatten_one, unflatten
from .poly import Monomial, QPolynomial


@dataclass(frozen=True)
class IdealPresentation:
    """Generators of a finitely generated ideal (zero generators dropped)."""

    generators: tuple

    def __init__(self, generators):
        gens = tuple(g for g in generators if not g.is_zero())
        object.__setattr__(self, "generators", gens)

    @property
    def is_zero_ideal(self):
        return not self.generators


@dataclass(frozen=True)
class GroebnerBasis:
    level: FlattenMap
    basis: tuple          # integer-exponent QPolynomial, monic, reduced
    order: str = "grevlex"

    def contains_one(self):
        return any(g.is_constant() and not g.is_zero() for g in self.basis)


# ---------------------------------------------------------------------------
# flat representation: dict[exponent tuple] -> coefficient

def _to_flat(g):
    out = {}
    for mono, coeff in g.terms.items():
        out[tuple(int(e) for e in mono.dense(g.nvars))] = coeff
    return out


def _from_flat(field, nvars, fd):
    terms = {}
    for exps, coeff in fd.items():
        terms[Monomial.make(enumerate(exps))] = coeff
    return QPolynomial(field, nvars, terms)


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _lead(fd):
    return max(fd, key=_grevlex_key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub_scaled(fd, factor, shift, gd, field):
    """fd - factor * X^shift * gd, in place on a copy."""
    out = dict(fd)
    for m, c in gd.items():
        key = _mono_add(m, shift)
        val = field.sub(out.get(key, field.zero), field.mul(factor, c))
        if val == field.zero:
            out.pop(key, None)
        else:
            out[key] = val
    return out


def _make_primitive(fd, field):
    """Over Q: clear denominators, divide by content, normalize sign.
    Over F_p: make monic.  Controls coefficient growth between reductions."""
    if not fd:
        return fd
    if field.characteristic == 0:
        den = lcm(*(c.denominator for c in fd.values()))
        num = gcd(*(abs(c.numerator) for c in fd.values()))
        scale = Fraction(den, num)
        if fd[_lead(fd)] < 0:
            scale = -scale
        return {m: c * scale for m, c in fd.items()}
    inv = field.inv(fd[_lead(fd)])
    return {m: field.mul(c, inv) for m, c in fd.items()}


def _make_monic(fd, field):
    if not fd:
        return fd
    inv = field.inv(fd[_lead(fd)])
    return {m: field.mul(c, inv) for m, c in fd.items()}


def _normal_form(fd, basis, field):
    """Full reduction of every term of fd modulo the basis."""
    leads = [(_lead(g), g) for g in basis if g]
    work = dict(fd)
    remainder = {}
    while work:
        lm = max(work, key=_grevlex_key)
        lc = work[lm]
        for glm, g in leads:
            if _divides(glm, lm):
                factor = field.div(lc, g[glm])
                work = _sub_scaled(work, factor, _mono_sub(lm, glm), g, field)
                break
        else:
            remainder[lm] = lc
            del work[lm]
    return remainder


def _spoly(f, g, field):
    lf, lg = _lead(f), _lead(g)
    l = _mono_lcm(lf, lg)
    a = _sub_scaled({}, field.neg(field.inv(f[lf])), _mono_sub(l, lf), f, field)
    b = _sub_scaled({}, field.neg(field.inv(g[lg])), _mono_sub(l, lg), g, field)
    out = dict(a)
    for m, c in b.items():
        val = field.sub(out.get(m, field.zero), c)
        if val == field.zero:
            out.pop(m, None)
        else:
            out[m] = val
    return out


def _buchberger(flats, field):
    basis = [_make_primitive(f, field) for f in flats if f]
    if not basis:
        return []
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    done = set()
    while pairs:
        # normal strategy: smallest lcm in grevlex order first
        pair = min(pairs, key=lambda ij: _grevlex_key(
            _mono_lcm(_lead(basis[ij[0]]), _lead(basis[ij[1]]))))
        pairs.discard(pair)
        done.add(pair)
        i, j = pair
        li, lj = _lead(basis[i]), _lead(basis[j])
        l = _mono_lcm(li, lj)
        # criterion 1: coprime leading monomials
        if l == _mono_add(li, lj):
            continue
        # criterion 2 (chain): some k with lt_k | lcm and both pairs handled
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(_lead(basis[k]), l):
                pik = (max(i, k), min(i, k))
                pjk = (max(j, k), min(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        h = _normal_form(_spoly(basis[i], basis[j], field), basis, field)
        if h:
            h = _make_primitive(h, field)
            new_index = len(basis)
            basis.append(h)
            pairs.update((new_index, k) for k in range(new_index))
    return basis


def _reduce_basis(basis, field):
    # minimalize: drop elements whose lead is divisible by another kept lead
    order = sorted(range(len(basis)), key=lambda i: _grevlex_key(_lead(basis[i])))
    kept_leads = []
    keep = []
    for i in order:
        lg = _lead(basis[i])
        if any(_divides(l, lg) for l in kept_leads):
            continue
        kept_leads.append(lg)
        keep.append(basis[i])
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = _normal_form(g, others, field) if others else dict(g)
        if r:
            reduced.append(_make_monic(r, field))
    reduced.sort(key=lambda g: _grevlex_key(_lead(g)))
    return reduced


def groebner(gens, level=None):
    """Reduced monic Groebner basis of the flattened ideal (degrevlex)."""
    if gens.is_zero_ideal:
        fmap = level if level is not None else FlattenMap(())
        return GroebnerBasis(fmap, ())
    fmap, flats = flatten(gens.generators, level=level)
    field = gens.generators[0].field
    nvars = gens.generators[0].nvars
    basis = _buchberger([_to_flat(g) for g in flats], field)
    basis = _reduce_basis(basis, field)
    polys = tuple(_from_flat(field, nvars, g) for g in basis)
    return GroebnerBasis(fmap, polys)


def ideal_member(f, gens, level=None):
    """Is f in the ideal generated by gens inside k[T_1,...,T_n]_Q?"""
    if f.is_zero():
        return True
    if gens.is_zero_ideal:
        return False
    everything = list(gens.generators) + [f]
    fmap = level if level is not None else exponent_lcm(everything)
    gb = groebner(gens, level=fmap)
    field = f.field
    flat_f = _to_flat(flatten_one(f, fmap))
    basis = [_to_flat(g) for g in gb.basis]
    return not _normal_form(flat_f, basis, field)


def radical_member(f, gens, level=None):
    """Rabinowitsch: f is in the radical iff 1 lies in (gens, f*t - 1)."""
    if f.is_zero():
        return True
    if gens.is_zero_ideal:
        return False
    everything = list(gens.generators) + [f]
    fmap = level if level is not None else exponent_lcm(everything)
    field = f.field
    n = f.nvars
    _, flats = flatten(everything, level=fmap)
    flat_gens, flat_f = flats[:-1], flats[-1]

    def widen(g):
        return QPolynomial(field, n + 1, dict(g.terms))

    t = QPolynomial.variable(field, n + 1, n)
    one = QPolynomial.constant(field, n + 1, 1)
    trick = [widen(g) for g in flat_gens] + [widen(flat_f) * t - one]
    basis = _buchberger([_to_flat(g) for g in trick], field)
    return any(g and _lead(g) == (0,) * (n + 1) for g in basis)


def is_proper(gens, level=None):
    """True unless the ideal contains 1 (detected via the Groebner basis)."""
    if gens.is_zero_ideal:
        return True
    return not groebner(gens, level=level).contains_one()


# ---------------------------------------------------------------------------
# univariate Bezout GCD

def _dense_univariate(fd, field):
    if not fd:
        return []
    deg = max(m[0] for m in fd)
    out = [field.zero] * (deg + 1)
    for m, c in fd.items():
        out[m[0]] = c
    return out


def _trim(coeffs, field):
    while coeffs and coeffs[-1] == field.zero:
        coeffs.pop()
    return coeffs


def _poly_divmod(a, b, field):
    a = list(a)
    q = [field.zero] * max(len(a) - len(b) + 1, 0)
    inv_lead = field.inv(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = field.mul(a[-1], inv_lead)
        q[shift] = factor
        for i, bc in enumerate(b):
            a[shift + i] = field.sub(a[shift + i], field.mul(factor, bc))
        _trim(a, field)
    return q, a


def _poly_mul(a, b, field):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return _trim(out, field)


def _poly_sub(a, b, field):
    out = [field.zero] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = field.sub(out[i], y)
    return _trim(out, field)


def gcd_univariate(f, g):
    """Monic gcd with Bezout cofactors: u*f + v*g = gcd, at the joint level."""
    for h in (f, g):
        if h.nvars != 1:
            raise NotUnivariate("gcd_univariate needs one-variable polynomials")
    f._check_compatible(g)
    field = f.field
    zero = QPolynomial.zero(field, 1)
    if f.is_zero() and g.is_zero():
        return zero, zero, zero
    fmap, (ff, gg) = flatten([f, g])
    r0, r1 = (_dense_univariate(_to_flat(ff), field),
              _dense_univariate(_to_flat(gg), field))
    u0, u1 = [field.one], []
    v0, v1 = [], [field.one]
    while r1:
        q, r = _poly_divmod(r0, r1, field)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1, field), field)
        v0, v1 = v1, _poly_sub(v0, _poly_mul(q, v1, field), field)
    inv_lead = field.inv(r0[-1])
    scale = lambda cs: [field.mul(c, inv_lead) for c in cs]
    r0, u0, v0 = scale(r0), scale(u0), scale(v0)

    def lift(coeffs):
        fd = {(i,): c for i, c in enumerate(coeffs) if c != field.zero}
        return unflatten(fmap, _from_flat(field, 1, fd))

    return lift(r0), lift(u0), lift(v0)
