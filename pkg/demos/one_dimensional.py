"""The smallest case: f(x) = x - x^3 on the line.

Its local inverse has the Fuss-Catalan numbers as coefficients, and the
majorant series with alpha = 1 reproduces them exactly.
"""

from fractions import Fraction

from cubicpair import SYMBOLIC, CubicHomogeneousMap, PolynomialMap, formal_inverse_terms, majorant, preconjugation_terms

f = CubicHomogeneousMap(PolynomialMap.parse(["x1^3"], 1))

inv = formal_inverse_terms(f, 11)
print("local inverse of x - x^3:")
print("  ", inv.as_map())

k = preconjugation_terms(f, SYMBOLIC, 7)
for m in (3, 5, 7):
    print(f"Psi_{m} coefficient:", k.term(m).components[0].coefficient((m,)))

# numeric lambda: the same series, evaluated
print("at lambda = 2:", k.specialize(2).as_map())

m = majorant(f, Fraction(2), terms=11)
print("majorant b_m:", [str(b) for b in m.b])
print("R^2 =", m.radius_sq, " R ~", round(m.radius, 6))
