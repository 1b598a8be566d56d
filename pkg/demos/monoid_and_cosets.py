"""
The Demazure product on a small Weyl group
==========================================

"""

# build the Weyl group of type A2; indices of simple reflections start at 0
from wonderful_strata.coxeter import build_system, cartan_matrix
from wonderful_strata.demazure import coset_decompose, demazure, double_coset_extremes, tri_left, tri_right

W = build_system(cartan_matrix("A2"))
s0, s1 = W.s(0), W.s(1)
print("elements:", [repr(w) for w in W])

# the product keeps only the length-increasing steps, so s0 * s0 stays s0
print("s0 * s0 =", demazure(s0, s0))
print("s0s1 * s1s0 =", demazure(s0 * s1, s1 * s0))

# the two actions pick the shortest element of {u y : u <= x} and {x v : v <= y}
print("s0 |> s0s1 =", tri_left(s0, s0 * s1))
print("s0s1 <| s1 =", tri_right(s0 * s1, s1))

# table of the monoid: row x, column y, entry x * y
import numpy as np
table = np.array([[demazure(x, y).index for y in W] for x in W])
print(table)

# shortest and longest element of W_{1} w0 W_{0}
lo, hi = double_coset_extremes(W.longest(), [1], [0])
print("double coset extremes:", lo, hi)

# x = x^J x_J with x^J the shortest element of x W_J
d = coset_decompose(W.longest(), [0])
print("w0 =", d.minimal_part, "*", d.parabolic_part)
