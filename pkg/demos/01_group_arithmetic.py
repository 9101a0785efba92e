"""Tour of the ambient group arithmetic and the Gray map.

Words live in Z2^k1 x Z4^k2 x Q8^k3; the Gray map sends each word to a
binary vector (1, 2 and 4 bits per coordinate), turning group translation
into a distance-preserving action on Z2^n.
"""

from z2z4q8 import (
    GroupSignature,
    commutator,
    distance,
    gray,
    identity,
    pi_of,
    u_element,
    word_from_tokens,
)
from z2z4q8.gray import propelinear_product

sig = GroupSignature(1, 1, 1)  # one coordinate of each kind, n = 7
w = word_from_tokens(sig, ("1", "3", "ab"))
v = word_from_tokens(sig, ("0", "2", "b"))

print(f"ambient         {sig} (binary length {sig.n})")
print(f"w               {w}")
print(f"v               {v}")
print(f"w * v           {w * v}")
print(f"w^-1            {w.inverse()}")
print(f"order of w      {w.order()}")
print(f"(w, v)          {commutator(w, v)}")

print(f"Gray(w)         {gray(w)}")
print(f"Gray(v)         {gray(v)}")
print(f"Gray(w v)       {gray(w * v)}")
print(f"pi_w image      {pi_of(w).image}")

# the propelinear law: Gray(w v) = Gray(w) + pi_w(Gray(v))
assert gray(w * v) == propelinear_product(w, gray(v))
print("propelinear law Gray(w v) = Gray(w) + pi_w(Gray(v))  OK")

# the unique all-order-2 word maps to the all-one vector
u = u_element(sig)
print(f"u               {u} -> {gray(u)}")
assert gray(u).weight() == sig.n

# left translation by any word preserves Hamming distance
x = word_from_tokens(sig, ("1", "1", "a3b"))
d0 = distance(gray(w), gray(v))
d1 = distance(propelinear_product(x, gray(w)), propelinear_product(x, gray(v)))
assert d0 == d1
print(f"distance invariance: d = {d0} before and after translation  OK")

assert identity(sig).order() == 1
print("done.")
