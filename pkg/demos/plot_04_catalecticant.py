"""
The degree-5 factor for binary octics
=====================================

The dual of Chow_(2,2,2,2)(P^1) has degree 5. It is the determinant of the
5 x 5 catalecticant of a binary octic, which vanishes on sums of four
eighth powers of linear forms.
"""

import random

from chowfactor import catalecticant_det, power_sum_form

rng = random.Random(0)


def forms(k):
    return [(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(k)]


four = power_sum_form(8, [(1, 2), (3, -1), (2, 5), (-4, 1)])
print("four powers:", catalecticant_det(four))
five = power_sum_form(8, forms(5))
print("five powers:", catalecticant_det(five))

# homogeneous of degree 5 in the coefficients
print(catalecticant_det(five.scaled(2)) / catalecticant_det(five))
