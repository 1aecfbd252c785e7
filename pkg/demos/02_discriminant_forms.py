# Discriminant groups of S and T
# ==============================
#
# S = <l> with l^2 = -6d', and T = E8(-1)^2 + U + A2(-1) + <6d'> (rank 21).
# Smith normal form of the Gram matrix gives T*/T; we then locate the two
# distinguished generators t1/3 and t2/6d' inside it.

from fractions import Fraction

from fmpartners.lattice import discriminant_group
from fmpartners.mukai import build_N, build_S, build_T, disc_form_ST, t1_vector, t2_vector

d_prime = 4

# %% S and N
print("S =", build_S(d_prime).tolist(), " A_S orders:", discriminant_group(build_S(d_prime)).orders)
print("N =", build_N(d_prime).tolist(), " det:", build_N(d_prime).det)

# %% T via Smith normal form
T = build_T(d_prime)
dg = discriminant_group(T)
print("rank T =", T.rank, " det T =", T.det, " invariant factors:", dg.orders)
print("q on SNF generators:", [str(q) for q in dg.q_values()])

# %% Where t1/3 and t2/6d' land
g1 = [Fraction(x, 3) for x in t1_vector()[1:]]
g2 = [Fraction(x, 6 * d_prime) for x in t2_vector()[1:]]
c1, c2 = dg.coordinates(g1), dg.coordinates(g2)
print("t1/3  ->", c1, " q =", dg.q(c1))
print(f"t2/{6 * d_prime} ->", c2, " q =", dg.q(c2))
print("they generate a subgroup of order", dg.group.subgroup_order([c1, c2]), "=", 18 * d_prime)

# %% The closed-form presentation of A_S + A_T
form = disc_form_ST(d_prime)
print("A_S + A_T orders:", form.orders, " q:", [str(q) for q in form.q_values()])
