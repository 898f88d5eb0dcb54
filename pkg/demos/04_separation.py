"""
Separating two valuations
=========================

Two distinct inductive valuations sit above a common floor. A single
monomial key^N / p^M has value 0 under the floor, is a unit for one of the
two and lies in the center of the other.
"""

from maclane import BaseDVR, QPoly, first_stage, pairwise_report, separate

x = QPoly.x()
B = BaseDVR(2)

W1, W2 = first_stage(B, "1/2"), first_stage(B, 1)
cert = separate(W1, W2)
print("witness:", cert.witness_text(), " values:", cert.w1_value, cert.w2_value)

V = first_stage(B, 1)
phi = x ** 2 + 2 * x + 4
cert = separate(V.augment(phi, 3), V.augment(phi, 4))
print("witness:", cert.witness_text(), " floor:", cert.floor)
print("\n".join("  " + line for line in cert.trace))

# The certificate re-checks itself against both inputs.
print("problems:", cert.verify(V.augment(phi, 3), V.augment(phi, 4)))

vals = [first_stage(B, m) for m in ("1/3", "1/2", "1")]
for (i, j), c in pairwise_report(vals).items():
    print(i, j, c.witness_text(), c.w1_value, c.w2_value)
