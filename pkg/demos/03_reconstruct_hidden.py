"""
Rebuilding a valuation from value queries
=========================================

We hide an inductive valuation behind an oracle that only answers "what is
w(f)?" and rebuild its stages one key at a time.
"""

from maclane import BaseDVR, QPoly, ValuationOracle, approximate, first_stage
from maclane.scalar import sqrt_value

x = QPoly.x()
B = BaseDVR(3)

hidden = first_stage(B, "1/3").augment(x ** 3 + 3, "3/2")
hidden = hidden.augment(hidden.key_lift([hidden.field.one, hidden.field.one]), 5)
print("hidden:", hidden)

oracle = ValuationOracle.from_valuation(hidden)
res = approximate(oracle, B)
print("status:", res.status, "after", res.queries, "queries")
print("found: ", res.valuation)
for step in res.steps:
    print("  ", step.to_json())

# An irrational target can only be approached. Each step picks a rational
# strictly between the current value of X and sqrt(2).
B2 = BaseDVR(2, d=2)
target = first_stage(B2, sqrt_value(2))
res = approximate(ValuationOracle.from_valuation(target), B2, max_stages=8)
print("status:", res.status)
print("mu's:", [str(s.mu) for s in res.steps])
