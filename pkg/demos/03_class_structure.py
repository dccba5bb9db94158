"""Conjugacy classes, centralizers, derived subgroups and quotients."""

from classgraphs import (
    alternating,
    center,
    centralizer_order,
    classify_derived_center,
    decompose,
    derived_subgroup,
    fingerprint,
    quotient,
    sl2,
    spectrum,
)

# The class decomposition of A5: sizes partition the order, every class
# carries one element order, the identity class is central.
a5 = alternating(5)
dec = decompose(a5)
print("A5 classes (order, size, centralizer):")
for cls in dec.classes:
    print(f"  o={cls.element_order}  size={cls.size}  "
          f"|C(x)|={centralizer_order(dec, cls)}  rep={cls.representative}")
print("center size:", dec.center_size)
print("spectrum:", sorted(spectrum(a5)))

# SL(2,5) has a center of order 2 sitting over A5.
g = sl2(5)
z = center(g)
print(f"\n|SL(2,5)| = {g.order}, |Z| = {z.order}")
print("derived subgroup order:", derived_subgroup(g).order, "(the group is perfect)")
print("span classification:", classify_derived_center(g))

# The quotient by the center is realized as a permutation group on the
# 60 cosets; its fingerprint (order, class sizes, spectrum) matches A5's.
q = quotient(g, z)
print("\nSL(2,5)/Z fingerprint:", fingerprint(decompose(q)))
print("A5 fingerprint:       ", fingerprint(dec))
assert fingerprint(decompose(q)) == fingerprint(dec)
