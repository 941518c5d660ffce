# Braid group representations R_i = (I + T_i)/sqrt2 and their finite images.

from errorgroups.braid import (
    BraidRepSpec,
    build_r_matrices,
    image_group,
    braid_hypotheses,
    verify_braid_presentation,
)

spec = BraidRepSpec(1)
r1, r2 = build_r_matrices(spec)
print("R1 =\n" + str(r1))
print("R2 =\n" + str(r2))

for k in (1, 2, 3):
    for variant in ("unscaled", "jones", "lambda1", "lambda2"):
        s = BraidRepSpec(k, variant)
        rel = verify_braid_presentation(build_r_matrices(s))
        hyp = braid_hypotheses(k, variant)
        print(f"k={k} {variant:8}: {rel.checked:3d} relations, passed={rel.passed}, "
              f"hypotheses={hyp.passed}")

# images of the braid group (G) and the pure braid group (H)
for k, variant in [(1, "unscaled"), (1, "jones"), (2, "unscaled")]:
    im = image_group(BraidRepSpec(k, variant))
    print(f"\nk={k} {variant}: |G| = {im.group.order}, |H| = {im.pure_image.order}, "
          f"|G|/|H| = {im.quotient_order}, consistent = {im.consistency}")
    print("  H histogram:", im.pure_image.order_histogram, " center:", im.pure_image.center_type)
    print("  <R_i^2> alone:", im.square_subgroup.order_histogram)

# with the Jones scaling, conjugating R_2^2 by R_1 brings in the scalar i,
# so H' is twice the size of the group generated by the squares
