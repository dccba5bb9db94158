"""Constructors for every group the catalog and its counterexamples need.

All constructors return fully enumerated permutation `Group`s. Matrix
groups (PSL(2,q), SL(2,q), Sz(8)) are built as matrices over GF(q) first
and converted to permutations via a natural point action; the conversion
is pinned by order formulas rather than by the particular matrices.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Sequence

from .arith import factor_prime_power, is_prime, multiplicative_order
from .errors import (
    ConstructionInvariantViolated,
    GroupTooLarge,
    NoValidAction,
    NotInvertible,
    NotPrime,
)
from .gf import FiniteField, field_make, tits_exponent
from .perm import DEFAULT_CAP, Group, Perm, generate


# ---------------------------------------------------------------------------
# abelian groups


def abelian(*orders: int, cap: int = DEFAULT_CAP) -> Group:
    """Regular representation of C_n1 x ... x C_nk on prod(n_i) points."""
    if not orders:
        raise ValueError("at least one cyclic factor required")
    for n in orders:
        if n < 1:
            raise ValueError(f"cyclic factor must be >= 1, got {n}")
    total = math.prod(orders)
    if total > cap:
        raise GroupTooLarge(cap)

    strides = []
    acc = 1
    for n in orders:
        strides.append(acc)
        acc *= n

    def bump(point: int, axis: int) -> int:
        digit = point // strides[axis] % orders[axis]
        return point + ((digit + 1) % orders[axis] - digit) * strides[axis]

    gens = [
        Perm(tuple(bump(pt, i) for pt in range(total)))
        for i, n in enumerate(orders)
        if n > 1
    ] or [Perm.identity(total)]
    name = " x ".join(f"C{n}" for n in orders)
    return generate(gens, cap=cap, name=name, info={"family": "abelian", "orders": orders})


def cyclic(n: int, cap: int = DEFAULT_CAP) -> Group:
    return abelian(n, cap=cap)


# ---------------------------------------------------------------------------
# dihedral and dicyclic groups


def dihedral(n: int) -> Group:
    """Dihedral group of order 2n: rotation r, reflection s, s r s^-1 = r^-1."""
    if n < 2:
        raise ValueError(f"dihedral requires n >= 2, got {n}")
    if n == 2:
        # Klein four group; the 2-point natural action is not faithful.
        r = Perm.from_cycles(4, [(0, 1)])
        s = Perm.from_cycles(4, [(2, 3)])
    else:
        r = Perm(tuple((i + 1) % n for i in range(n)))
        s = Perm(tuple((n - i) % n for i in range(n)))
    g = generate([r, s], name=f"D({n})", info={"family": "dihedral", "n": n})
    assert g.order == 2 * n
    return g


def dicyclic(n: int) -> Group:
    """Dicyclic group of order 4n (n = 2 gives the quaternion group Q8).

    Presentation <x, y | x^(2n) = 1, y^2 = x^n, y^-1 x y = x^-1>, realized
    by left multiplication on the 4n normal forms x^i y^j (j in {0, 1}).
    """
    if n < 2:
        raise ValueError(f"dicyclic requires n >= 2, got {n}")
    two_n = 2 * n

    def idx(i: int, j: int) -> int:
        return i % two_n + two_n * j

    x_images = [0] * (4 * n)
    y_images = [0] * (4 * n)
    for i in range(two_n):
        for j in (0, 1):
            x_images[idx(i, j)] = idx(i + 1, j)
            # y * x^i = x^-i y ; y * x^i y = x^(n-i)
            y_images[idx(i, j)] = idx(n - i, 0) if j else idx(-i, 1)
    g = generate(
        [Perm(x_images), Perm(y_images)],
        name=f"Dic({n})",
        info={"family": "dicyclic", "n": n},
    )
    assert g.order == 4 * n
    return g


# ---------------------------------------------------------------------------
# symmetric and alternating groups


def symmetric(n: int, cap: int = DEFAULT_CAP) -> Group:
    """Natural action of S_n on n points."""
    if n < 1:
        raise ValueError(f"symmetric requires n >= 1, got {n}")
    if math.factorial(n) > cap:
        raise GroupTooLarge(cap)
    if n == 1:
        gens = [Perm.identity(1)]
    elif n == 2:
        gens = [Perm.from_cycles(2, [(0, 1)])]
    else:
        gens = [Perm.from_cycles(n, [(0, 1)]), Perm(tuple((i + 1) % n for i in range(n)))]
    g = generate(gens, cap=cap, name=f"S{n}", info={"family": "symmetric", "n": n})
    assert g.order == math.factorial(n)
    return g


def alternating(n: int, cap: int = DEFAULT_CAP) -> Group:
    """Natural action of A_n on n points, generated by consecutive 3-cycles."""
    if n < 1:
        raise ValueError(f"alternating requires n >= 1, got {n}")
    order = math.factorial(n) // 2 if n >= 2 else 1
    if order > cap:
        raise GroupTooLarge(cap)
    if n < 3:
        gens = [Perm.identity(n)]
    else:
        gens = [Perm.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(n - 2)]
    g = generate(gens, cap=cap, name=f"A{n}", info={"family": "alternating", "n": n})
    assert g.order == order
    return g


# ---------------------------------------------------------------------------
# products


def direct_product(g: Group, h: Group, cap: int = DEFAULT_CAP) -> Group:
    """G x H acting on the disjoint union of the two point sets."""
    if g.order * h.order > cap:
        raise GroupTooLarge(cap)
    dg, dh = g.degree, h.degree
    left = [Perm(p.images + tuple(range(dg, dg + dh))) for p in g.generators]
    right = [Perm(tuple(range(dg)) + tuple(dg + i for i in p.images)) for p in h.generators]
    name = f"{g.name} x {h.name}" if g.name and h.name else ""
    prod = generate(left + right, cap=cap, name=name, info={"family": "direct_product"})
    assert prod.order == g.order * h.order
    return prod


# ---------------------------------------------------------------------------
# semidirect products


def cyclic_action_fixed_point_free(m: int, k: int, g: int) -> bool:
    """True when x -> x^(g^j) fixes no nonzero residue mod m for 0 < j < k.

    Equivalent to every g^j - 1 being a unit mod m, which is the condition
    for C_m : C_k to be a Frobenius group.
    """
    return all(math.gcd(pow(g, j, m) - 1, m) == 1 for j in range(1, k))


def semidirect_cyclic(m: int, k: int, g: int, cap: int = DEFAULT_CAP) -> Group:
    """C_m : C_k where the complement generator acts by x -> x^g.

    Acts on m + k points: the kernel C_m permutes its own m residues, the
    complement generator applies multiplication by g there and cycles the
    remaining k points. Requires g to have multiplicative order k mod m.
    """
    if m < 1 or k < 1:
        raise ValueError(f"orders must be positive, got m={m}, k={k}")
    if m * k > cap:
        raise GroupTooLarge(cap)
    order_of_g = multiplicative_order(g, m)
    if order_of_g != k:
        raise NoValidAction(
            f"{g} has multiplicative order {order_of_g} mod {m}, need {k}"
        )
    a = Perm(tuple((i + 1) % m for i in range(m)) + tuple(range(m, m + k)))
    b = Perm(
        tuple(g * i % m for i in range(m))
        + tuple(m + (j + 1) % k for j in range(k))
    )
    grp = generate(
        [a, b],
        cap=cap,
        name=f"SD({m},{k},{g})",
        info={
            "family": "semidirect_cyclic",
            "kernel_order": m,
            "complement_order": k,
            "power": g,
            "frobenius": cyclic_action_fixed_point_free(m, k, g),
        },
    )
    assert grp.order == m * k
    return grp


def _mat_mul_modp(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int):
    d = len(a)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(d)) % p for j in range(d))
        for i in range(d)
    )


def _mat_det_modp(a: Sequence[Sequence[int]], p: int) -> int:
    d = len(a)
    rows = [list(r) for r in a]
    det = 1
    for col in range(d):
        pivot = next((r for r in range(col, d) if rows[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * rows[col][col] % p
        inv = pow(rows[col][col], p - 2, p)
        for r in range(col + 1, d):
            factor = rows[r][col] * inv % p
            for c in range(col, d):
                rows[r][c] = (rows[r][c] - factor * rows[col][c]) % p
    return det % p


def matrix_action_fixed_point_free(
    p: int, action: Sequence[Sequence[int]], k: int
) -> bool:
    """True when no nontrivial power of the matrix fixes a nonzero vector."""
    d = len(action)
    ident = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    power = ident
    vectors = [
        tuple(v // p**i % p for i in range(d)) for v in range(1, p**d)
    ]
    for _ in range(1, k):
        power = _mat_mul_modp(power, action, p)
        for v in vectors:
            if all(sum(power[r][c] * v[c] for c in range(d)) % p == v[r] for r in range(d)):
                return False
    return True


def elementary_semidirect(
    p: int,
    dim: int,
    action: Sequence[Sequence[int]],
    k: int,
    cap: int = DEFAULT_CAP,
) -> Group:
    """(C_p)^dim : C_k with the complement acting by the given matrix.

    Acts on p^dim + k points: translations of the vector space plus the
    matrix action, with the complement generator also cycling k extra
    points. The matrix must lie in GL(dim, p) and have order exactly k.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if dim < 1 or k < 1:
        raise ValueError(f"dim and k must be positive, got dim={dim}, k={k}")
    mat = tuple(tuple(int(x) % p for x in row) for row in action)
    if len(mat) != dim or any(len(row) != dim for row in mat):
        raise ValueError(f"action must be a {dim}x{dim} matrix")
    if _mat_det_modp(mat, p) == 0:
        raise NotInvertible(f"action matrix is singular mod {p}")
    ident = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))
    power = ident
    for j in range(1, k + 1):
        power = _mat_mul_modp(power, mat, p)
        if power == ident:
            if j != k:
                raise NoValidAction(f"action matrix has order {j}, need {k}")
            break
    else:
        raise NoValidAction(f"action matrix order exceeds {k}, need {k}")

    total = p**dim
    if total * k > cap:
        raise GroupTooLarge(cap)

    def decode(v: int) -> tuple[int, ...]:
        return tuple(v // p**i % p for i in range(dim))

    def encode(coords: Sequence[int]) -> int:
        out = 0
        for c in reversed(list(coords)):
            out = out * p + c % p
        return out

    translations = []
    for axis in range(dim):
        images = [
            encode(
                tuple(
                    (c + (1 if i == axis else 0)) % p
                    for i, c in enumerate(decode(v))
                )
            )
            for v in range(total)
        ]
        translations.append(Perm(tuple(images) + tuple(range(total, total + k))))
    b_images = [
        encode(
            tuple(
                sum(mat[r][c] * decode(v)[c] for c in range(dim)) % p
                for r in range(dim)
            )
        )
        for v in range(total)
    ]
    b = Perm(tuple(b_images) + tuple(total + (j + 1) % k for j in range(k)))
    rows_text = ",".join(",".join(str(x) for x in row) for row in mat)
    grp = generate(
        translations + [b],
        cap=cap,
        name=f"ESD({p},{dim};{rows_text};{k})",
        info={
            "family": "elementary_semidirect",
            "kernel_order": total,
            "complement_order": k,
            "frobenius": matrix_action_fixed_point_free(p, mat, k),
        },
    )
    assert grp.order == total * k
    return grp


# ---------------------------------------------------------------------------
# groups of Lie type


def _sl2_generator_matrices(field: FiniteField) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Transvections over a polynomial basis plus the Weyl element.

    The upper unipotents {[[1,a],[0,1]]} form the additive group of the
    field, so basis transvections generate them all; conjugating by
    [[0,1],[-1,0]] yields the lower unipotents, and together these
    generate all of SL(2, q).
    """
    basis = [field.p**i for i in range(field.f)]
    gens = [((1, e), (0, 1)) for e in basis]
    gens.append(((0, 1), (field.neg(1), 0)))
    return gens


def psl2(q: int, cap: int = DEFAULT_CAP) -> Group:
    """PSL(2, q) acting on the q + 1 points of the projective line.

    Built as the permutation image of SL(2, q): the kernel of the action
    on the projective line is exactly the scalar subgroup {+-I}, so the
    image has order q(q^2 - 1)/gcd(2, q - 1) without an explicit quotient.
    """
    p, f = factor_prime_power(q)
    field = field_make(p, f)
    infinity = q  # points: x in 0..q-1 is [x : 1], q is [1 : 0]

    def act(mat, pt: int) -> int:
        (a, b), (c, d) = mat
        x, y = (1, 0) if pt == infinity else (pt, 1)
        nx = field.add(field.mul(a, x), field.mul(b, y))
        ny = field.add(field.mul(c, x), field.mul(d, y))
        if ny:
            return field.mul(nx, field.inv(ny))
        return infinity

    perms = [
        Perm(tuple(act(mat, pt) for pt in range(q + 1)))
        for mat in _sl2_generator_matrices(field)
    ]
    grp = generate(perms, cap=cap, name=f"PSL2({q})", info={"family": "psl2", "q": q})
    expected = q * (q * q - 1) // math.gcd(2, q - 1)
    if grp.order != expected:
        raise ConstructionInvariantViolated(
            f"|PSL2({q})| = {grp.order}, expected {expected}"
        )
    return grp


def sl2(q: int, cap: int = DEFAULT_CAP) -> Group:
    """SL(2, q) acting faithfully on the q^2 - 1 nonzero vectors."""
    p, f = factor_prime_power(q)
    field = field_make(p, f)
    points = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(points)}

    def act(mat, v):
        (a, b), (c, d) = mat
        x, y = v
        return (
            field.add(field.mul(a, x), field.mul(b, y)),
            field.add(field.mul(c, x), field.mul(d, y)),
        )

    perms = [
        Perm(tuple(index[act(mat, v)] for v in points))
        for mat in _sl2_generator_matrices(field)
    ]
    grp = generate(perms, cap=cap, name=f"SL2({q})", info={"family": "sl2", "q": q})
    expected = q * (q * q - 1)
    if grp.order != expected:
        raise ConstructionInvariantViolated(
            f"|SL2({q})| = {grp.order}, expected {expected}"
        )
    return grp


# ---------------------------------------------------------------------------
# the Suzuki group Sz(8)


def _suzuki_generators(field: FiniteField):
    """Standard Sz(q) generators inside GL(4, q), q = 2^(2m+1).

    With s the Tits endomorphism exponent (s^2 acts as squaring) and
    h(a, b) = a^(s+2) + ab + b^s, the lower unitriangular family

        u(a, b) = [[1, 0, 0, 0],
                   [a, 1, 0, 0],
                   [b, a^s, 1, 0],
                   [h(a,b), a^(s+1) + b, a, 1]]

    satisfies u(a,b) u(c,d) = u(a+c, b+d+a^s c) and maps the point
    (1, u, v, h(u,v)) to (1, u+a, ...), so it permutes the 65-point
    orbit used below; a diagonal torus element and the antidiagonal
    involution complete a generating set.
    """
    s = tits_exponent(field)
    mul, add, powf, inv = field.mul, field.add, field.pow_, field.inv

    def theta(a: int) -> int:
        return powf(a, s)

    def h(a: int, b: int) -> int:
        return add(add(mul(mul(a, a), theta(a)), mul(a, b)), theta(b))

    def unipotent(a: int, b: int):
        return (
            (1, 0, 0, 0),
            (a, 1, 0, 0),
            (b, theta(a), 1, 0),
            (h(a, b), add(mul(a, theta(a)), b), a, 1),
        )

    def torus(lam: int):
        t = s // 2
        top = powf(lam, t + 1)
        mid = powf(lam, t)
        return (
            (top, 0, 0, 0),
            (0, mid, 0, 0),
            (0, 0, inv(mid), 0),
            (0, 0, 0, inv(top)),
        )

    antidiag = (
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (1, 0, 0, 0),
    )
    lam = field.generator().value
    return [unipotent(1, 0), unipotent(0, 1), torus(lam), antidiag]


def suzuki8(cap: int = DEFAULT_CAP) -> Group:
    """Sz(8) as permutations of the 65-point orbit of [0:0:0:1] in PG(3, 8).

    The generator matrices are converted to permutations of the orbit of a
    distinguished projective point; correctness is pinned by the order
    q^2 (q^2 + 1)(q - 1) = 29120 and by the 65-point transitive action,
    independent of the particular matrix formulas.
    """
    field = field_make(2, 3)
    q = field.size
    mats = _suzuki_generators(field)

    def matvec(mat, vec):
        out = []
        for row in mat:
            acc = 0
            for coef, x in zip(row, vec):
                if coef and x:
                    acc = field.add(acc, field.mul(coef, x))
            out.append(acc)
        return tuple(out)

    def normalize(vec):
        for coef in vec:
            if coef:
                inv = field.inv(coef)
                return tuple(field.mul(inv, x) for x in vec)
        raise ConstructionInvariantViolated("zero vector in orbit computation")

    start = (0, 0, 0, 1)
    orbit = [start]
    index = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for mat in mats:
            w = normalize(matvec(mat, v))
            if w not in index:
                index[w] = len(orbit)
                orbit.append(w)
                queue.append(w)
    if len(orbit) != q * q + 1:
        raise ConstructionInvariantViolated(
            f"Sz(8) orbit has {len(orbit)} points, expected {q * q + 1}"
        )

    perms = [
        Perm(tuple(index[normalize(matvec(mat, v))] for v in orbit)) for mat in mats
    ]
    grp = generate(perms, cap=cap, name="Sz8", info={"family": "suzuki", "q": q})
    expected = q * q * (q * q + 1) * (q - 1)
    if grp.order != expected:
        raise ConstructionInvariantViolated(
            f"|Sz(8)| = {grp.order}, expected {expected}"
        )
    return grp
