"""Arithmetic in small Galois fields.

The matrix constructions (PSL(2,q), SL(2,q), Sz(8)) need exact arithmetic
in GF(p^f). Elements are polynomial residues encoded as integers, with a
fixed modulus per field so encodings never drift between runs.
"""

from classgraphs import field_make, tits_power

# GF(8) = GF(2)[x] / (x^3 + x + 1)
f8 = field_make(2, 3)
print("GF(8) modulus (constant term first):", f8.modulus)

x = f8.x
print("x         =", x.value, "coeffs", x.coeffs)
print("x^3       =", (x**3).value, "coeffs", (x**3).coeffs, " -- equals x + 1")
print("x * x^2   =", (x * x * x).value)

# every nonzero element has an inverse
for v in range(1, 8):
    a = f8.element(v)
    assert a * a.inverse() == f8.one
print("a * a^-1 = 1 for all 7 nonzero elements of GF(8)")

# GF(9): the multiplicative group is cyclic of order 8
f9 = field_make(3, 2)
g = f9.generator()
powers = [(g**k).value for k in range(1, 9)]
print("\nGF(9) generator:", g.value, "-- successive powers:", powers)

# The Tits endomorphism on GF(2^(2m+1)): a -> a^(2^(m+1)).
# Applying it twice is the Frobenius square, which is what makes the
# Suzuki construction over GF(8) work.
print("\nTits endomorphism on GF(8): a -> a^4")
for a in f8.elements():
    assert tits_power(tits_power(a)) == a * a
print("theta(theta(a)) = a^2 for all 8 elements")
print("theta(x) =", tits_power(x).value, "= x^4 =", (x**4).value)
