"""Permutations and group enumeration.

Everything in this package is built on two values: `Perm`, a bijection of
{0..n-1} stored as its image tuple, and `Group`, a fully enumerated
permutation group. This script walks through both.
"""

import math

from classgraphs import Perm, generate

# A permutation can be given by images or by cycles.
p = Perm((1, 0, 3, 4, 2))
q = Perm.from_cycles(5, [(0, 1), (2, 3, 4)])
print("p =", p)
print("q =", q)
print("p == q:", p == q)

# Composition applies the right factor first: (a*b)[i] = a[b[i]].
a = Perm.from_cycles(3, [(0, 1)])
b = Perm.from_cycles(3, [(1, 2)])
print("\n(0 1) * (1 2) =", a * b, " -- the 3-cycle 0 -> 1 -> 2 -> 0")

# Orders come from cycle structure: lcm of the cycle lengths.
print("order of", q, "is", q.order())
print("q ** 6 is the identity:", (q**6).is_identity())

# `generate` enumerates the closure of a generating set, breadth-first
# from the identity, so element order is deterministic.
s5 = generate(
    [Perm.from_cycles(5, [(0, 1)]), Perm.from_cycles(5, [(0, 1, 2, 3, 4)])],
    name="S5",
)
print(f"\n|S5| = {s5.order} (5! = {math.factorial(5)})")
print("first elements in discovery order:", [str(e) for e in s5.elements[:4]])

# Consecutive 3-cycles generate the alternating group.
a7 = generate([Perm.from_cycles(7, [(i, i + 1, i + 2)]) for i in range(5)], name="A7")
print(f"|A7| = {a7.order} (7!/2 = {math.factorial(7) // 2})")

# Every element's order divides the group order (Lagrange).
orders = sorted({e.order() for e in a7.elements})
print("element orders in A7:", orders)
assert all(a7.order % k == 0 for k in orders)
