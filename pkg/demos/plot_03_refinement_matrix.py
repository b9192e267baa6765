"""
Two ways to count refinements
=============================

M[lam, mu] counts the ways to group the parts of mu into blocks summing to
the parts of lam. The same numbers are the coefficients of the monomial
symmetric functions in the power sums.
"""

from chowfactor import refinement_matrix_bruteforce, refinement_matrix_symfunc

d = 5
M = refinement_matrix_bruteforce(d)
labels = [str(p) for p in M.order]
width = max(map(len, labels)) + 2
print(" " * width + "".join(f"{l:>{width}}" for l in labels))
for lab, row in zip(labels, M.entries):
    print(f"{lab:<{width}}" + "".join(f"{x:>{width}}" for x in row))

# upper triangular in canonical order, with prod(m_i!) on the diagonal
print("symmetric-function route agrees:", refinement_matrix_symfunc(d) == M)
print("property violations:", M.property_violations())
