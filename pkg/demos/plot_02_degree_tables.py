"""
Degree tables for octics and quartics
=====================================

For each partition mu of d, D[mu] is the degree of the mu-discriminant.
Solving the triangular system D = M^T d gives the degrees d[lam] of the
duals of Chow varieties; zeros mark duals that are not hypersurfaces.
"""

from chowfactor import binary_chow_degree, solve_chow_degrees

table = solve_chow_degrees(8, 2)
print(f"{'lambda':<18}{'D':>8}{'d':>6}")
for row in table.rows:
    print(f"{str(row.lam):<18}{row.disc_degree:>8}{row.chow_degree:>6}")

# binary case: a closed formula reproduces every nonzero entry
for row in table.rows:
    if row.chow_degree:
        assert binary_chow_degree(row.lam) == row.chow_degree

# ternary quartics, where (3,1) is the only defective Chow variety
quartic = solve_chow_degrees(4, 3)
print({str(r.lam): r.chow_degree for r in quartic.rows})
