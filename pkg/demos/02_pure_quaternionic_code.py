"""The smallest code that needs quaternion coordinates.

The subgroup of Q8^2 generated by (a,a) and (ab,b) has eight elements,
and its binary image cannot be produced by any abelian (Z2/Z4) group:
every abelian code group with at most 8 codewords is linear, but this
image is not even linear.  Its rank and kernel meet the generic bounds
with equality.
"""

from z2z4q8 import (
    GroupSignature,
    check_bounds,
    code_type,
    generate,
    gray,
    is_abelian,
    is_linear,
    kernel_dim,
    rank,
    span_group,
    swapper,
    word_from_tokens,
)

sig = GroupSignature(0, 0, 2)
x = word_from_tokens(sig, ("a", "a"))
y = word_from_tokens(sig, ("ab", "b"))
C = generate([x, y])

print(f"group order     {C.order}")
for w in C.sorted_elements():
    print(f"   {w}   ->  {gray(w)}")

print(f"type            {code_type(C)}")
print(f"abelian         {is_abelian(C)}")
print(f"linear image    {is_linear(C)}")

s = swapper(x, y)
print(f"swapper [x,y]   {s}   in group: {s in C}")
assert s not in C  # witnesses non-linearity

D = span_group(C)
print(f"span group      order {D.order}  (rank {rank(C)})")
print(f"kernel dim      {kernel_dim(C)}")
assert (rank(C), kernel_dim(C)) == (4, 1)

report = check_bounds(C)
print(f"bounds          {len(report.checks)} checked, all ok: {report.all_ok}")
# the chain r >= k+3, k >= sigma, r <= sigma+delta+rho+C(delta+rho,2) is
# tight on this example
assert rank(C) == kernel_dim(C) + 3 == 4
print("done.")
