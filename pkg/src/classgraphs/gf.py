"""Arithmetic in GF(p^f) for small p^f.

Elements are residues of GF(p)[x] modulo a fixed irreducible polynomial,
canonically encoded as integers: the element with coefficients
(c0, c1, ..., c_{f-1}) is the integer c0 + c1*p + ... + c_{f-1}*p^(f-1).
The modulus for each (p, f) comes from a fixed table (falling back to the
least irreducible under the same encoding order), so encodings are
reproducible across runs. GF(8) uses x^3 + x + 1.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .arith import is_prime
from .errors import DivisionByZero, FieldTooLarge, NotPrime, UnsupportedField

#: Largest supported field; the catalog itself never needs more than GF(16).
FIELD_SIZE_CAP = 16384

# Modulus coefficient tuples (constant term first, monic). Least irreducible
# polynomial per (p, f) under the integer encoding order; pinned here so the
# encodings cannot drift.
_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (5, 4): (2, 0, 0, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (7, 4): (1, 1, 0, 0, 1),
    (11, 2): (1, 0, 1),
    (11, 3): (4, 1, 0, 1),
    (13, 2): (2, 0, 1),
    (13, 3): (2, 0, 0, 1),
}


def _poly_is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..f//2."""
    f = len(modulus) - 1
    for d in range(1, f // 2 + 1):
        for v in range(p**d):
            divisor = []
            t = v
            for _ in range(d):
                divisor.append(t % p)
                t //= p
            divisor.append(1)
            rem = list(modulus)
            for k in range(len(rem) - 1, d - 1, -1):
                c = rem[k]
                if c:
                    for i in range(d + 1):
                        rem[k - d + i] = (rem[k - d + i] - c * divisor[i]) % p
            if all(x == 0 for x in rem[:d]):
                return False
    return True


def _least_irreducible(p: int, f: int) -> tuple[int, ...]:
    for v in range(p**f):
        low = []
        t = v
        for _ in range(f):
            low.append(t % p)
            t //= p
        mod = tuple(low) + (1,)
        if _poly_is_irreducible(mod, p):
            return mod
    raise AssertionError(f"no irreducible polynomial of degree {f} over GF({p})")


class FiniteField:
    """GF(p^f) with value-level arithmetic on canonical integer encodings.

    The `add`/`mul`/`inv`/`pow_` methods operate on encodings directly;
    `element` wraps an encoding in a `FieldElement` for operator syntax.
    Fields are immutable and shareable.
    """

    def __init__(self, p: int, f: int) -> None:
        if not is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        if f < 1:
            raise ValueError(f"extension degree must be >= 1, got {f}")
        size = p**f
        if size > FIELD_SIZE_CAP:
            raise FieldTooLarge(f"GF({p}^{f}) = GF({size}) exceeds cap {FIELD_SIZE_CAP}")
        self.p = p
        self.f = f
        self.size = size
        if f == 1:
            self.modulus: tuple[int, ...] = (0, 1)
        else:
            self.modulus = _MODULI.get((p, f)) or _least_irreducible(p, f)
            if not _poly_is_irreducible(self.modulus, p):
                raise AssertionError(f"modulus {self.modulus} reducible over GF({p})")
        self._generator: int | None = None

    # -- encoding helpers ------------------------------------------------

    def coeffs(self, v: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.f):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def encode(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c % self.p
        return v

    # -- value-level arithmetic -------------------------------------------

    def add(self, a: int, b: int) -> int:
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.encode([(x + y) % self.p for x, y in zip(ca, cb)])

    def neg(self, a: int) -> int:
        return self.encode([(-x) % self.p for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        p, f = self.p, self.f
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(2 * f - 2, f - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for k in range(f + 1):
                    prod[d - f + k] = (prod[d - f + k] - c * self.modulus[k]) % p
        return self.encode(prod[:f])

    def pow_(self, a: int, k: int) -> int:
        if k < 0:
            a = self.inv(a)
            k = -k
        out = 1
        while k:
            if k & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            k >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero field element")
        return self.pow_(a, self.size - 2)

    # -- elements ----------------------------------------------------------

    def element(self, value: int | Sequence[int]) -> "FieldElement":
        if isinstance(value, int):
            if not 0 <= value < self.size:
                raise ValueError(f"encoding {value} outside 0..{self.size - 1}")
            return FieldElement(self, value)
        return FieldElement(self, self.encode(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def x(self) -> "FieldElement":
        """The polynomial-basis element x (requires f >= 2)."""
        if self.f < 2:
            raise UnsupportedField("prime field has no polynomial generator x")
        return FieldElement(self, self.p)

    def elements(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.size))

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        k = 1
        x = a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    def generator(self) -> "FieldElement":
        """Least-encoded element whose multiplicative order is size - 1."""
        if self._generator is None:
            for v in range(1, self.size):
                if self.multiplicative_order(v) == self.size - 1:
                    self._generator = v
                    break
            else:
                raise AssertionError("no multiplicative generator found")
        return FieldElement(self, self._generator)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.f, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.size})"


class FieldElement:
    """An element of a FiniteField, wrapping its canonical integer encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int) -> None:
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _check(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise UnsupportedField("elements of different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow_(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        return f"{self.field!r}[{self.value}]"


def field_make(p: int, f: int) -> FiniteField:
    """Construct GF(p^f) with its fixed, documented modulus."""
    return FiniteField(p, f)


def tits_exponent(field: FiniteField) -> int:
    """The exponent 2^(m+1) of the Tits endomorphism on GF(2^(2m+1))."""
    if field.p != 2 or field.f < 3 or field.f % 2 == 0:
        raise UnsupportedField(
            f"Tits endomorphism needs GF(2^(2m+1)) with m >= 1, got {field!r}"
        )
    m = (field.f - 1) // 2
    return 2 ** (m + 1)


def tits_power(a: FieldElement) -> FieldElement:
    """The Tits endomorphism a -> a^(2^(m+1)); its square is the Frobenius."""
    return a ** tits_exponent(a.field)
