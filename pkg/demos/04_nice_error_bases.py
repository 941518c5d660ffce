# Nice error bases from the 2^k-dimensional representations.
# One matrix per coset of the center: the identity coset gives I, every other
# matrix is traceless, and products close up to a phase.

from errorgroups.egroup import rep_kernel
from errorgroups.group_engine.nice_basis import (
    basis_equiv_mod_phase,
    nice_error_basis_check,
    pauli_basis_matrices,
    representation,
)

for n, kind in [(2, "rho"), (4, "rho"), (6, "rho"), (3, "lambda1"), (5, "lambda2")]:
    rep = nice_error_basis_check(n, -1, representation(n, -1, kind))
    print(f"E^-1_{n} via {kind:8}: d = {rep.degree}, |index group| = {rep.index_order}, "
          f"omega = {[str(w) for w in rep.omega_values]}, passed = {rep.passed}")

# the rho basis is the Pauli basis, up to phases
basis = nice_error_basis_check(4, -1).basis
match = basis_equiv_mod_phase(basis, pauli_basis_matrices(2))
print("\nrho basis for k = 2 matches the Pauli basis:", match.matched)
print("first phases:", match.phase_table()[:4])

# lambda on three generators is not faithful: (iZ)(iZ) = -I
print("\nkernel of lambda1 on E^-1_3:", [str(g) for g in rep_kernel(3, -1, representation(3, -1, "lambda1"))])
