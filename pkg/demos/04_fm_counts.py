# Fourier-Mukai partner counts
# ============================
#
# Three routes to |FM(X)| for 18 | d: the closed form in u(2d), half the
# number of enumerated glue data, and half the number of isotropic graph
# subgroups found by scanning A_S + A_T directly.

from collections import Counter

from fmpartners.fmcount import count_M_ST, counts_by_type, fm_count, glue_oracle_count
from fmpartners.modarith import unit_square_root_count

print(f"{'d':>5} {'d_prime':>7} {'by type':>16} {'M_ST':>5} {'formula':>7} {'oracle':>6}")
for d in range(18, 18 * 16, 18):
    dp = d // 18
    print(f"{d:5d} {dp:7d} {str(counts_by_type(dp)):>16} {count_M_ST(dp):5d} {fm_count(d):7d} {glue_oracle_count(dp) // 2:6d}")

# %% The ratio |M_ST| / u(4d') only depends on d' mod 3
ratios = Counter((dp % 3, count_M_ST(dp) / unit_square_root_count(4 * dp)) for dp in range(1, 301))
print(sorted(ratios.items()))

# %% Small discriminants (the cases with 9 not dividing d)
print({d: fm_count(d) for d in range(8, 80) if d % 6 in (0, 2)})
