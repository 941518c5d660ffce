# The groups E^nu_n: generators e_1..e_n with e_i^2 = nu, neighbours
# anticommuting and everything else commuting.  Enumerate them abstractly,
# read off (order, center, number of order-4 elements) and compare with the
# predicted central product of D, Q, Z2 and Z4 factors.

from errorgroups.egroup import enumerate_group
from errorgroups.group_engine.classify import classify_e, decompose_e

print(f"{'group':>8} {'order':>6} {'center':>7} {'#ord4':>6}  label")
for nu in (-1, 1):
    for n in range(1, 11):
        rec = classify_e(n, nu)
        print(f"E^{nu:+d}_{n:<3} {rec.order:6d} {rec.center_type:>7} {rec.order4_count:6d}  "
              f"{rec.label} ({rec.category})")

# E^-1_4 in detail: 12 elements square to 1, 20 have order 4
e4 = enumerate_group(4, -1)
print("\nE^-1_4 order histogram:", e4.order_histogram)

# the label comes from peeling off one D or Q factor at a time
dec = decompose_e(9, -1)
print("\nE^-1_9 =", " o ".join(dec.word))
for step in dec.steps:
    print(f"  size {step.size}: <{', '.join(step.k_generators)}> is {step.factor}"
          f"  (checks {'ok' if step.passed else 'FAILED'})")
