"""
Values, expansions and residual polynomials
===========================================

A first-stage valuation over the 2-adic numbers, one augmentation, and the
graded reduction that decides which polynomials are keys.
"""

from maclane import BaseDVR, QPoly, first_stage
from maclane.poly import phi_expand, to_text

x = QPoly.x()
B = BaseDVR(2)

# v(X) = 1/2, extended to Q[X] by the min rule over X-adic digits
V = first_stage(B, "1/2")
f = x ** 3 + 2 * x + 4
print("v(f) =", V.value(f))

# With v(X) = 1 the residue field is GF(2) and x^2 + 2x + 4 reduces to Y^2 + Y + 1,
# which is irreducible, so the polynomial is a key.
V = first_stage(B, 1)
phi = x ** 2 + 2 * x + 4
print("residual:", V.residual(phi))
print("is key:", V.is_key(phi))

# Give the key a larger value and look at f in the new coordinates.
W = V.augment(phi, 3)
g = phi ** 2 + 8 * x
for j, digit in enumerate(phi_expand(g, phi)):
    print(f"  digit {j}: {to_text(digit):12s} value {V.value(digit)}")
print("W(g) =", W.value(g), " versus V(g) =", V.value(g))

# The residue field grew to GF(4); residuals now live over it.
print("residue field degree:", W.field.degree)
print("residual of phi under W:", W.residual(phi))

# Lifting a residual back gives a key for the next stage.
psi = [W.field.one, W.field.one]
key = W.key_lift(psi)
print("key lift of Y + 1:", to_text(key), " key?", W.is_key(key))
