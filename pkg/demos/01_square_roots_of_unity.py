# Square roots of unity modulo n
# ===============================
#
# Every count in this package is built from u(n) = #{x mod n : x^2 = 1}.
# The CRT turns it into a product over prime powers; here we compare that
# product with a plain scan and with the three-shape formula for n = 2d.

from fmpartners.modarith import (
    closed_form_count_2d,
    count_sqrt1_halfrange,
    factorize,
    unit_square_root_count,
    unit_square_roots_bruteforce,
)

# %% CRT product versus scan
for n in (12, 24, 36, 180, 1001):
    roots = unit_square_roots_bruteforce(n)
    print(f"n={n:5d}  factors={list(factorize(n))}  CRT={unit_square_root_count(n)}  scan={len(roots)}")

print("roots mod 36:", unit_square_roots_bruteforce(36))

# %% The three shapes of an even d
# d = 2^(a+1) -> 4,  d = 2 * odd -> 2^(k+1),  d = 2^(a+1) * odd -> 2^(k+2)
for d in (8, 16, 18, 30, 36, 90, 120):
    print(f"d={d:4d}  shape formula={closed_form_count_2d(d)}  u(2d)={unit_square_root_count(2 * d)}")

# %% Half-range count: b in [0, 2n) with b^2 = 1 mod 4n picks exactly one of b, b + 2n
for n in (1, 2, 6, 15, 27):
    print(f"n={n:3d}  half-range={count_sqrt1_halfrange(n)}  u(4n)/2={unit_square_root_count(4 * n) // 2}")
