# Exact arithmetic with eighth roots of unity.
# Every entry we ever need (i, 1/sqrt2, e^{i pi/4}) lives in Z[zeta8, 1/sqrt2],
# so equality is structural and there is no tolerance anywhere.

from errorgroups.cyclotomic import I, INV_SQRT2, ONE, SQRT2, ZETA, CycScalar
from errorgroups.exact_matrix import ExactMatrix, equal_up_to_phase, is_unitary, matmul, tensor

print("zeta^4 =", ZETA**4)
print("sqrt2 * sqrt2 =", SQRT2 * SQRT2)
print("(1 + i)/sqrt2 =", (ONE + I) * INV_SQRT2, " # the same as zeta")
print("(1 + zeta)/sqrt2 =", (ONE + ZETA) * INV_SQRT2, " # stays fractional")

# a value prints in a compact form and parses back
x = (ONE + ZETA) * INV_SQRT2
assert CycScalar.parse(str(x)) == x

# matrices
h = ExactMatrix.from_entries([[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]])
print("\nHadamard:\n" + str(h))
print("unitary:", is_unitary(h), " H^2 = I:", matmul(h, h).is_identity)

x_gate = ExactMatrix.from_entries([[0, 1], [1, 0]])
print("\nX (x) I puts X on the high bit:\n" + str(tensor(x_gate, ExactMatrix.identity(2))))

# recovering a global phase
print("\nphase between iX and X:", equal_up_to_phase(x_gate * I, x_gate))
