"""O(4) Clebsch-Gordan coefficients, 9j symbols and bipolar harmonics.

Shows the two coupling-coefficient families, a closed-form cross-check,
and the linearization of a product of two harmonics of the same argument.
"""

import numpy as np

from hsh4 import (bipolar, cgc4_c, cgc4_c_closed, cgc4_h, hsh_c,
                  linearize_product, ninej4, scalar_product_c, wigner9j)

# C-type CGC: couple two rank-1 harmonics to rank 2.
val = cgc4_c(1, 0, 0, 1, 0, 0, 2, 0, 0)
print("C^{2,0,0}_{1,0,0;1,0,0} =", val, "(sqrt(3)/2 =", np.sqrt(3) / 2, ")")

# The same coefficient from the stretched closed form.
print("closed form agrees:",
      abs(val - cgc4_c_closed("stretched", 1, 0, 0, 1, 0, 0, 2, 0, 0)))

# H-type CGC factorize into two ordinary 3D CGC (doubled projections).
print("H-type CGC (1,1,1)x(1,1,-1)->(2,2,0):",
      cgc4_h(1, 1, 1, 1, 1, -1, 2, 2, 0))

# The 4D 9j symbol is the square of a halved-argument 3D 9j.
args = (2, 2, 0, 2, 2, 0, 2, 2, 0)
print("ninej4", args, "=", ninej4(*args),
      "= (3D 9j)^2 =", wigner9j(*args) ** 2)

# Product linearization: C_{j1} C_{j2} at one point expands exactly into
# single harmonics of ranks |j1-j2|, |j1-j2|+2, ..., j1+j2.
rng = np.random.default_rng(1)
v = rng.normal(size=4)
v /= np.linalg.norm(v)
lhs = hsh_c(2, 1, 1, v) * hsh_c(1, 1, -1, v)
terms = linearize_product("c", 2, (1, 1), 1, (1, -1), v)
rhs = sum(c * y for (_, _, c, y) in terms)
print("\nproduct linearization residual:", abs(lhs - rhs))
for (j, idx, c, _) in terms:
    print(f"  rank {j}, index {idx}: weight {c:+.6f}")

# Rank-0 bipolar harmonic of two different points reduces to the scalar
# product (the 4D addition theorem) divided by l+1.
a, b = rng.normal(size=4), rng.normal(size=4)
a /= np.linalg.norm(a)
b /= np.linalg.norm(b)
for l in (1, 3):
    bip = bipolar("c", l, l, 0, a, b)[0]
    print(f"rank-0 bipolar l={l}:", bip.real,
          "= scalar product/(l+1):", scalar_product_c(l, a, b) / (l + 1))
