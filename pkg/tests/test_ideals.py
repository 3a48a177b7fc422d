import random
from fractions import Fraction

import pytest

from helpers import qq_poly, random_poly, univariate
from qdeg.errors import NotUnivariate
from qdeg.fields import QQ, PrimeField
from qdeg.flatten import exponent_lcm
from qdeg.ideals import (IdealPresentation, gcd_univariate, groebner,
                         ideal_member, is_proper, radical_member)
from qdeg.poly import QPolynomial

F5 = PrimeField(5)


def ideal(*texts, varnames=("x",)):
    return IdealPresentation(tuple(qq_poly(t, list(varnames)) for t in texts))


def random_univariate(rng, field, max_terms=3):
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        e = Fraction(rng.randint(0, 3), rng.choice([1, 1, 2, 3]))
        if field.characteristic == 0:
            c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        else:
            c = rng.randrange(field.characteristic)
        pairs.append((e, c))
    return univariate(field, pairs)


# ---- gcd ----

def test_gcd_root_factor():
    f = qq_poly("x - 1", ["x"])
    g = qq_poly("x^(1/2) - 1", ["x"])
    d, u, v = gcd_univariate(f, g)
    assert d == g
    assert u * f + v * g == d


def test_gcd_with_zero():
    f = qq_poly("2*x^2 + 2", ["x"])
    z = QPolynomial.zero(QQ, 1)
    d, u, v = gcd_univariate(f, z)
    assert d == qq_poly("x^2 + 1", ["x"])
    assert u == qq_poly("1/2", ["x"]) and v.is_zero()


def test_gcd_coprime_roots():
    d, u, v = gcd_univariate(qq_poly("x^(1/2) + 1", ["x"]),
                             qq_poly("x^(1/3) + 1", ["x"]))
    assert d == qq_poly("1", ["x"])


def test_gcd_rejects_multivariate():
    with pytest.raises(NotUnivariate):
        gcd_univariate(qq_poly("x*y", ["x", "y"]), qq_poly("x", ["x", "y"]))


def test_gcd_bezout_randomized():
    for field in (QQ, F5):
        rng = random.Random(4242)
        for _ in range(100):
            f = random_univariate(rng, field)
            g = random_univariate(rng, field)
            d, u, v = gcd_univariate(f, g)
            assert u * f + v * g == d
            if not d.is_zero():
                # gcd divides both inputs: remainder-free at the flatten level
                for h in (f, g):
                    _, uu, vv = gcd_univariate(h, d)
                    assert ideal_member(h, IdealPresentation((d,)))


# ---- groebner ----

def test_groebner_hand_example():
    gb = groebner(ideal("y - 1", "x - y^2", varnames=("x", "y")))
    assert set(gb.basis) == {qq_poly("y - 1", ["x", "y"]),
                             qq_poly("x - 1", ["x", "y"])}


def test_groebner_principal_flattens():
    gb = groebner(ideal("x^(1/2)"))
    assert gb.level.orders == (2,)
    assert gb.basis == (qq_poly("x", ["x"]),)


def test_groebner_unit_ideal():
    gb = groebner(ideal("x", "x - 1"))
    assert gb.basis == (qq_poly("1", ["x"]),)
    assert gb.contains_one()


def test_groebner_deterministic():
    gens = ideal("x^2 - y", "x*y - 1", varnames=("x", "y"))
    assert groebner(gens) == groebner(gens)


# ---- membership ----

def test_member_examples():
    assert ideal_member(qq_poly("x", ["x"]), ideal("x^(1/2)"))
    assert not ideal_member(qq_poly("x^(1/2)", ["x"]), ideal("x"))
    assert ideal_member(QPolynomial.zero(QQ, 1), ideal("x^2 + 1"))


def test_member_absorption_randomized():
    rng = random.Random(77)
    done = 0
    while done < 50:
        gens = IdealPresentation(
            tuple(random_poly(rng, QQ, 2, max_terms=2, max_num=2, max_den=2)
                  for _ in range(2)))
        if gens.is_zero_ideal:
            continue
        f = gens.generators[0]
        any_poly = random_poly(rng, QQ, 2, max_terms=2, max_num=2, max_den=2)
        assert ideal_member(f, gens)
        assert ideal_member(f * any_poly, gens)
        done += 1


def test_member_level_stability_randomized():
    rng = random.Random(88)
    done = 0
    while done < 30:
        gens = IdealPresentation(
            tuple(random_poly(rng, QQ, 2, max_terms=2, max_num=2, max_den=2)
                  for _ in range(2)))
        f = random_poly(rng, QQ, 2, max_terms=2, max_num=2, max_den=2)
        if gens.is_zero_ideal:
            continue
        base = exponent_lcm(list(gens.generators) + [f])
        assert ideal_member(f, gens, level=base) == \
            ideal_member(f, gens, level=base.refine(2))
        done += 1


# ---- radical membership ----

def test_radical_hand_examples():
    assert radical_member(qq_poly("t", ["t"]), ideal("t^2", varnames=("t",)))
    assert radical_member(qq_poly("t^(1/2)", ["t"]), ideal("t", varnames=("t",)))
    assert not radical_member(qq_poly("t - 1", ["t"]), ideal("t", varnames=("t",)))


def test_radical_oracle_equivalence():
    rng = random.Random(3141)
    done = 0
    while done < 50:
        base = random_poly(rng, QQ, 1, max_terms=2, max_num=2, max_den=2)
        if base.is_zero() or base.is_constant():
            continue
        gens = IdealPresentation((base ** rng.randint(1, 3),))
        f = random_poly(rng, QQ, 1, max_terms=2, max_num=2, max_den=2)
        brute = any(ideal_member(f ** n, gens) for n in range(1, 7))
        assert radical_member(f, gens) == brute
        done += 1


# ---- properness ----

def test_proper_examples():
    assert is_proper(ideal("x", "y", varnames=("x", "y")))
    assert not is_proper(ideal("x", "x - 1"))
    assert is_proper(ideal("x^(1/2) - 1", "x - 1"))


def test_proper_implies_common_zero_over_f5():
    from qdeg.geometry import variety_bruteforce
    from qdeg.parser import parse
    curated = [
        (["x^(1/2) - 1"], ["x"], 2),
        (["x - 1", "y - 2"], ["x", "y"], 1),
        (["x^2 - 4"], ["x"], 1),
        (["x", "y"], ["x", "y"], 1),
    ]
    for texts, varnames, level in curated:
        gens = IdealPresentation(tuple(parse(t, F5, varnames) for t in texts))
        assert is_proper(gens)
        assert variety_bruteforce(gens, level)
