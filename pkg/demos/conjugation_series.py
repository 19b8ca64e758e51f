"""Pre-conjugation of the 5-dimensional example, computed once with lambda
kept symbolic, then checked on the 15-dimensional side.
"""

from cubicpair import (
    SYMBOLIC,
    Pairing,
    get_fixture,
    kernel_shift_holds,
    lift_conjugation,
    preconjugation_terms,
    verify_conjugation,
)

fx = get_fixture("druzkowski15")
k = preconjugation_terms(fx.f, SYMBOLIC, 9)
for m in range(3, 10, 2):
    print(f"degree {m}:", k.term(m))

# the series stops at degree 7, so it is an honest polynomial conjugation
print("exact identity lambda f(k(x)) = k(lambda x):", verify_conjugation(fx.f, k, SYMBOLIC).is_zero())

p = Pairing(fx.A, fx.B, fx.C, fx.f)
K = lift_conjugation(p, k.truncated(7), 7)
print("direct recursion on F agrees with the lift:", K == preconjugation_terms(p.F, SYMBOLIC, 7))
print("K(X + X0) = K(X) + X0 for X0 in ker A:", kernel_shift_holds(p, K))

print("k at lambda = 3:", k.truncated(7).specialize(3).as_map())
