"""Certifying slopes and normalizing regular-singular connections.

The slope of z d/dz - M(z) measures how irregular the singularity at z = 0
is.  A slope certificate is a stratum in a standard parahoric filtration
whose leading term is fundamental (non-nilpotent power); scanning the 2^(n-1)
standard parahorics either certifies the slope exactly or reports an upper
bound.  Slope 0 candidates can then be brought to the constant form z^-1 B_0
by an explicit gauge transformation, computed term by term.
"""

from fractions import Fraction

from dskit import linalg
from dskit.formal import (
    CertifiedSlope,
    FormalConnection,
    RegularSingularCandidate,
    UpperBoundOnly,
    certify_slope,
    omega_power,
    regsing_normalize,
)
from dskit.laurent import LaurentMatrix

mono = LaurentMatrix.monomial

# The cyclic matrix omega (ones below the diagonal, z in the corner)
# satisfies omega^n = z.  Its negative powers are the standard examples of
# fractional slope: omega^-k has slope k/n.
for n in (2, 3, 5):
    for k in (1, n + 1):
        v = certify_slope(FormalConnection(omega_power(n, -k)))
        assert isinstance(v, CertifiedSlope)
        print(f"n={n}  omega^-{k}:  slope {v.slope}  "
              f"(witness parahoric J={v.witness.parahoric.J}, depth {v.witness.depth})")
print()

# A nilpotent polar part proves nothing by itself: the scan returns only an
# upper bound, flagged as such.
v = certify_slope(FormalConnection(mono(2, -1, 1, 2, 1)))
assert isinstance(v, UpperBoundOnly)
print(f"nilpotent z^-1 E12: upper bound {v.bound}, not certified")

# No polar part at all: a regular-singular candidate.
v = certify_slope(FormalConnection(mono(2, 0, 1, 1, Fraction(1, 2))))
assert isinstance(v, RegularSingularCandidate)
print("diag(1/2, 0) at z^0: regular-singular candidate")
print()

# Normalization: kill the positive-degree tail of M = B_0 + B_1 z + ... by a
# gauge transformation g = 1 + g_1 z + ..., provided no two eigenvalues of
# B_0 differ by a nonzero integer.  The defining identity is
#   g M - z dg/dz = B_0 g   (mod z^N).
order = 5
b0 = mono(2, 0, 2, 2, Fraction(1, 2))          # diag(0, 1/2)
m = b0 + mono(2, 1, 1, 2, 1)                    # one off-diagonal z-term
g = regsing_normalize(FormalConnection(m), order)
print(f"g_0 = identity: {g.coeff(0) == linalg.identity(2)}")
print(f"g_1 = {g.coeff(1)}")
lead = LaurentMatrix(2, {0: m.coeff(0)})
print(f"identity holds mod z^{order}:",
      (g * m - g.z_ddz()).eq_mod(lead * g, order))
