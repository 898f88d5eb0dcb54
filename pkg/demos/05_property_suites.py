"""
Randomized property suites
==========================

The generators build valid valuations by key lifts of random residuals. The
suites check multiplicativity, monotonicity under augmentation, residual
structure, key round trips, comparison and maximality.
"""

from maclane.propcheck import GenConfig, gen_inductive, run_suite

cfg = GenConfig(seed=1, sample_count=50)
for V in list(gen_inductive(cfg))[:3]:
    print(V)

for report in run_suite("all", cfg):
    print(f"{report.suite:13s} passed {report.passed:3d}  failed {report.failed}")

# With an off-by-one planted in augmented values the monotonicity suite
# finds it and shrinks the polynomial that exposes it.
bad = run_suite("monotonicity", cfg, inject_bug=True)
print("injected bug:", bad.failed, "failures; e.g.", bad.counterexamples[0]["poly"])
