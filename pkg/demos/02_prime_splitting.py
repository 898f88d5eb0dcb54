"""
How a prime splits in a number field
====================================

Every extension of the p-adic valuation to Q[X]/(g) appears as a leaf of a
tree of inductive valuations. The ramification index and residue degree of
each leaf give the splitting type of p.
"""

from maclane import BaseDVR, extensions
from maclane.poly import QPoly

x = QPoly.x()

fields = {
    "Q(i)": x ** 2 + 1,
    "Q(cbrt 2)": x ** 3 - 2,
    "Q(zeta_5)": x ** 4 + x ** 3 + x ** 2 + x + 1,
    "Q(zeta_8)": x ** 4 + 1,
}

for name, g in fields.items():
    row = []
    for p in (2, 3, 5, 7):
        leaves = extensions(BaseDVR(p), g)
        assert sum(l.e * l.f for l in leaves) == g.degree
        row.append(f"p={p}: " + " ".join(f"({l.e},{l.f})" for l in leaves))
    print(f"{name:10s}", " | ".join(row))

# A leaf carries the approximant that isolates its factor of g over Q_p.
for leaf in extensions(BaseDVR(5), x ** 2 + 1):
    print(leaf.approximant)
