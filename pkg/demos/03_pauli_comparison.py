# Real and complex Pauli groups next to E^nu_2k and E^nu_2k+1.
# Isomorphism verdicts use the invariant triple (order, center, #order-4).

from errorgroups.group_engine.compare import compare_pauli, dq_product_group, comparison_cells

current = None
for cell in comparison_cells():
    if cell.k != current:
        current = cell.k
        print(f"\nk = {cell.k}")
    mark = "ok" if cell.passed else "MISMATCH"
    print(f"  {cell.column:>10}: {cell.label:<8} {cell.observed}  {mark}")

dd, qq = dq_product_group("DD"), dq_product_group("QQ")
print("\nD o D:", dd.invariants, "  Q o Q:", qq.invariants)

for k in (1, 2, 3, 4):
    rep = compare_pauli(k)
    print(f"\nk = {k}")
    for v in rep.verdicts:
        print(f"  {'ok' if v.passed else 'FAIL'}  {v.claim}")
