"""Pair a 4-dimensional cubic map with a cubic-linear map on C^16, then move
its polynomial inverse up to the big side and back down again.
"""

from cubicpair import (
    certify_lifted_inverse,
    check_pairing,
    formal_inverse_terms,
    get_fixture,
    lift_inverse,
    lower_inverse,
    pair_up,
)

fx = get_fixture("essen4")
f = fx.f
print("f(x) = x - h(x) with h =", f.cubic_part)

p = pair_up(f)
print(f"paired with F on C^{p.N}; rank A = {p.A.rank()}")
for line in check_pairing(p):
    print("  ", line.line())

f_inv = formal_inverse_terms(f, 7).as_map()
print("inverse of f:", f_inv)

F_inv = lift_inverse(p, f_inv)
print(f"lifted inverse has degree {F_inv.degree} and {sum(len(c) for c in F_inv)} terms")
print("certified:", certify_lifted_inverse(p, F_inv))
print("lowers back to f^-1:", lower_inverse(p, F_inv) == f_inv)
