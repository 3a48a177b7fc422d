"""Exact computer algebra for multivariate polynomials with rational
exponents: ring arithmetic, flattening, Bezout GCDs and Groebner ideal
membership, Q-graded structure, Cech cohomology of twisting sheaves on
projective space, characteristic-p Frobenius tools, and a text grammar."""

from .errors import QdegError
from .fields import QQ, PrimeField, field_from_name
from .poly import Monomial, QPolynomial
from .flatten import FlattenMap, exponent_lcm, flatten, unflatten
from .ideals import GroebnerBasis, IdealPresentation, gcd_univariate, groebner, \
    ideal_member, is_proper, radical_member
from .geometry import PointWithRoots, evaluate, jacobian, partial_derivative, \
    roots_univariate, tangent_space, variety_bruteforce
from .grading import dehomogenize, homogeneous_components, homogenize, \
    is_homogeneous, veronese_rational
from .cohomology import CohomologyDims, MultiDegree, h0_basis, hn_basis, \
    kunneth_dims, multidegree_complex, twist_dims
from .charp import PolynomialMap, compose, fractional_power, p_th_root, pullback
from .parser import parse, print_poly

__all__ = [name for name in dir() if not name.startswith("_")]
