"""
Symmetrizing the 3 x 3 x 3 hyperdeterminant
===========================================

The hyperdeterminant of a 3 x 3 x 3 tensor has degree 36. Restricted to
symmetric tensors (plane cubics) it splits into the discriminant, of degree
12, and a degree-4 factor appearing six times.
"""

from chowfactor import Partition, hyperdet_report, mu_discriminant_degree

# the degree of the full hyperdeterminant, from the generating function
print("deg HD(3x3x3) =", mu_discriminant_degree(Partition((1, 1, 1)), 3))

# the factorization: one factor per Chow variety whose dual is a hypersurface
report = hyperdet_report(3, 3)
for f in report.factors:
    print(f"  lambda = ({f.lam}):  degree {f.degree}, multiplicity {f.multiplicity}")
print("  check:", " + ".join(f"{f.degree}*{f.multiplicity}" for f in report.factors), "=", report.total_degree)

# binary cubics behave simply: the symmetrized 2x2x2 hyperdeterminant is the discriminant
print(hyperdet_report(3, 2).as_tuples())
