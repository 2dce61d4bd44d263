"""Polynomials transcribed verbatim from print, kept as claims to check.

Each string is parsed with :func:`cyclicquad.poly.parse`.  None of these is
used as ground truth: the identity registry compares every one against a form
derived independently from the definitions.
"""

from __future__ import annotations

from functools import lru_cache

from .poly import MultiPoly, parse

# the 22-term planarity polynomial in the six lengths
QUAD_EQUATION = """
a^4*c^2 + a^2*c^4 + b^4*d^2 + b^2*d^4 + p^4*q^2 + p^2*q^4
+ (a*b*p)^2 + (b*c*q)^2 + (c*d*p)^2 + (d*a*q)^2
- (a*b*c)^2 - (a*b*d)^2 - (a*c*d)^2 - (a*c*p)^2 - (a*c*q)^2 - (a*p*q)^2
- (b*c*d)^2 - (b*d*p)^2 - (b*d*q)^2 - (b*p*q)^2 - (c*p*q)^2 - (d*p*q)^2
"""

# the rationalized Ptolemy product, monomial by monomial as printed
P10 = """
-4*u^4*x^2*z^2 + 4*x^4*u^2*z^2*t^2 + 32*x^2*y^2*u^2*z^2 + 4*y^4*u^2*z^2*t^2 + 4*x^2*y^2*t^2*u^4 + 4*x^2*y^2*t^2*z^4
-4*x^2*y^2*z^4 - 4*y^4*u^2*z^2 - 4*x^2*y^2*u^4 - 4*x^4*u^2*z^2 - 4*y^4*x^2*z^2 - 4*u^2*y^2*z^4 - 4*u^2*y^2*x^4
-32*x^2*y^2*u^2*z^2*t^2 + 16*x^3*y*t^2*u^3*z - 8*x^3*y*t^2*z^3*u - 8*y^3*x*t^2*u^3*z + 16*y^3*x*t^2*z^3*u
+4*u^4*x^2*z^2*t^2 + 4*y^4*x^2*z^2*t^2 + 4*u^2*y^2*t^2*x^4 + 4*u^2*y^2*t^2*z^4 + 8*x^3*u*y^3*z + 16*x^3*u*y^2*z^2
+8*x^3*u*y*z^3 + 16*x^2*u^2*y^3*z + 16*x^2*u^2*y*z^3 + 8*x*u^3*y^3*z + 16*x*u^3*y^2*z^2 + 8*x*u^3*y*z^3
+8*x^3*u^3*z^2*t^2 + 8*y^3*u^2*z^3*t^2 + 8*x^3*y^2*t^2*u^3 + 8*x^2*y^3*t^2*z^3 - 8*x^2*u^4*y*z - 8*x^4*u^2*y*z
-16*x^3*u^3*y*z - 8*y^4*z^2*x*u - 16*y^3*z^3*x*u - 8*y^2*z^4*x*u - 8*u^3*y*t^2*z^3*x - 8*y^3*u*t^2*x^3*z
-8*x^3*u^3*y^2 - 8*x^3*u^3*z^2 - 8*x^2*z^3*y^3 - 8*y^3*z^3*u^2 - 16*y^2*u^3*z^2*t^2*x + 8*y^4*u*z^2*t^2*x
-16*y^3*u^2*z*t^2*x^2 + 8*x^2*y*t^2*u^4*z - 16*x^3*u*z^2*t^2*y^2 + 8*x^4*u^2*z*t^2*y - 16*x^2*u^2*z^3*t^2*y
+8*x*y^2*t^2*z^4*u
"""

# T = 4*T2*t^2 + 4*T1*t + T0
T0 = """
2*y^3*z^3 + 3*y*z*x^4 + 2*y^3*z*x^2 + 2*y*z^3*x^2 - 2*x^3*u*y^2 - 2*x*u^3*y^2 - 3*x*u*y^4
- 2*x*u^3*z^2 + 2*x^2*y*z*u^2 - z*y^5 - y*z^5 + u*x^5 - 2*x*u*y^2*z^2 - 3*x*u*z^4 - 2*x^3*u*z^2
+ x*u^5 + 3*y*z*u^4 + 2*y^3*z*u^2 + 2*y*z^3*u^2 - 2*x^3*u^3
"""

T1 = """
z^2*y^3*x - y^2*x^3*z + y^4*x*z - y^2*z^3*x + y*z^2*x^3 - z^4*x*y - x^3*y*u^2 + x^2*y^3*u
- x^4*u*y + x^2*u^3*y - x*u^2*y^3 + z^4*u*y + y^2*z^3*u - y*z^2*u^3 - y^3*u*z^2 - y^4*u*z
+ u^3*y^2*z - u^4*x*z + x*u^2*z^3 - x^2*u^3*z - x^2*u*z^3 + x^4*u*z + u^2*x^3*z + u^4*x*y
"""

T2 = """
-y^3*z*x^2 - 2*y^2*z^2*x^2 - y*z^3*x^2 + x^3*u*y^2 + 2*y^2*x^2*u^2 - y*z^3*u^2
- 2*u^2*y^2*z^2 - y^3*z*u^2 + x*u^3*z^2 + 2*u^2*x^2*z^2 + x^3*u*z^2 + x*u^3*y^2 - 4*x^2*y*u*z^2
- 2*x^3*u*y*z + 4*x*u*y^2*z^2 + 2*x*y^3*z*u - 2*x*y*u^3*z + 2*x*y*z^3*u
"""

# wall quantities at z = 0, u = 1 - x
WALL_A = "3*y^2 + 4*(1 - 2*x)*t*y + (1 - 2*x)^2"

P5 = "x + x^2 + y^2 + y^4 + x^2*y^2 - x*y^4 - 4*x*y^3*t"
P6 = "1 + x + y^2 - x*y^4 + x^2*y^2 + x^2*y^4 - 4*x*y^3*t"

P4_1_PLUS_P4_2_FACTOR = "3*x^2 - 2*x + 3 + y^2 + 10*y*z + z^2"

# the folding-case cubic; the print has the garbled monomials "3zix", "3iuyz",
# "3iuyx", read here with the stray letter taken as u
P3_READING = "u*x^2 + y*z^2 + 3*y*z*x + 3*z*u*x - x*u^2 - z*y^2 - 3*u*y*z - 3*u*y*x"

# symmetric non-convex family
P4_APPENDIX = "(3*x^2 + 4*x^4) + (1 + 2*x^2)*y + (2 + 3*x^2)*y^2 + y^3"
# printed derivative, variables as printed (z standing for the family parameter y)
P4_DERIVATIVE_PRINTED = "(3*z + 1)*(z - 2*x^2 - 1)"


@lru_cache(maxsize=None)
def get(name: str) -> MultiPoly:
    return parse(" ".join(globals()[name].split()))
