# Gluing S + T into even overlattices
# ===================================
#
# Each element of M_{S,T} is an even overlattice L of S + T with |det L| = 3
# in which S and T stay primitive. We list the glue data for d = 54 and
# d = 36 and rebuild every L as an honest rank-22 Gram matrix.

from fmpartners.fmcount import OverlatticeDescriptor, assemble, check_assembled, enumerate_all
from fmpartners.lattice import GlueError, is_even

for d in (54, 36):
    d_prime = d // 18
    print(f"d = {d}, d' = {d_prime}")
    for desc in enumerate_all(d_prime):
        lat = assemble(desc)
        print(
            f"  {desc.label():26s} coords={desc.disc_coordinates()}  "
            f"index={lat.index} det={lat.det} even={is_even(lat.gram)} problems={check_assembled(desc)}"
        )

# %% A glue vector that fails: b3 = 1, k = 1 at d' = 1
try:
    assemble(OverlatticeDescriptor(1, "II", k=1, b3=1))
except GlueError as exc:
    print("rejected:", exc)
