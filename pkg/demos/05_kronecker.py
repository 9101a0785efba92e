"""Kronecker doubling of Hadamard code groups.

The plain doubling adjoins (e, u) to the diagonal embedding and raises
both rank and kernel dimension by exactly 1.  The generalized form
adjoins (g, g*u) for any g normalizing the group with g^2 inside it; the
kernel can then DROP, which is how inequivalent codes with equal length
are told apart here.
"""

from z2z4q8 import (
    classify_shape,
    code_type,
    generalized_kronecker,
    kernel_dim,
    kronecker,
    rank,
)
from z2z4q8.fixtures import load_fixture
from z2z4q8.parsing import parse_element

C = load_fixture("hadamard16_q8")
print(f"input           length {C.sig.n}, type {code_type(C)}, "
      f"r={rank(C)} k={kernel_dim(C)}")

plain = kronecker(C)
out = plain.output
print(f"plain double    length {out.sig.n}, type {code_type(out)}, "
      f"r={rank(out)} k={kernel_dim(out)}  (both +1)")

g = parse_element("b ab 1 1", C.sig)
gk = generalized_kronecker(C, g)
out = gk.output
print(f"g = {g}")
print(f"general double  length {out.sig.n}, type {code_type(out)}, "
      f"r={rank(out)} k={kernel_dim(out)}, shape {classify_shape(out).tag}")

# a strict kernel drop: k goes from 4 to 3 while the length doubles
C2 = load_fixture("hadamard32_q8_rank7")
g2 = parse_element("a2 a2 1 1 b ab b ab", C2.sig)
out2 = generalized_kronecker(C2, g2).output
print(f"kernel drop     k({C2.sig.n}) = {kernel_dim(C2)}  ->  "
      f"k({out2.sig.n}) = {kernel_dim(out2)}")
assert kernel_dim(out2) < kernel_dim(C2) + 1
print("done.")
