"""Finite fields with explicit element codes.

Elements of GF(p^k) are integer codes 0 .. p^k-1.  The code is the base-p
value of the coefficient vector (c0, c1, ..., c_{k-1}) of the residue
c0 + c1*g + ... + c_{k-1}*g^(k-1), constant term first, so codes 0..p-1
are exactly the prime subfield and the prime-subfield embedding of a
constant is the identity on codes.  For k = 1 the code is the residue.

Extensions are built over a prime field from a monic irreducible modulus,
kept as a coefficient tuple of length k+1, constant first.  Polynomials
over a field use the same constant-first tuple convention.

Element names come in two flavours: canonical names use coefficients
0..p-1 ("2i+2", "5"); signed names fold coefficients above p/2 into
negative representatives ("-3i-3", "-1").  parse_element accepts both.
"""

from __future__ import annotations

import itertools
import re

from dataclasses import dataclass

MAX_PRIME = 1000
MAX_EXTENSION_ORDER = 4096
VERIFY_BOUND = 200


class FieldError(ValueError):
    """Invalid field construction or element operation."""


class ReducibleError(FieldError):
    """A modulus that must be irreducible is not.

    .factor holds a nontrivial monic factor as witness (coefficient
    tuple, constant first).
    """

    def __init__(self, message: str, factor: tuple[int, ...]):
        super().__init__(message)
        self.factor = factor


def smallest_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_factor(n) == n


class FiniteField:
    """GF(p^k) with code-level arithmetic.  Build via make_prime_field
    or extend_by_irreducible, not directly."""

    def __init__(self, p: int, modulus: tuple[int, ...] | None = None,
                 gen_name: str = "a"):
        self.p = p
        if modulus is None:
            self.k = 1
            self.modulus = None
        else:
            self.k = len(modulus) - 1
            self.modulus = tuple(modulus)
        self.gen = gen_name
        self.order = p ** self.k
        self.zero = 0
        self.one = 1
        if self.k > 1:
            # g^(k+j) reduced mod the modulus, j = 0..k-2, as digit vectors
            self._high = self._reduction_rows()

    def _reduction_rows(self) -> list[tuple[int, ...]]:
        p, k, m = self.p, self.k, self.modulus
        rows = []
        # g^k = -(m0 + m1 g + ... + m_{k-1} g^{k-1})
        cur = [(-m[j]) % p for j in range(k)]
        rows.append(tuple(cur))
        for _ in range(k - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            for j in range(k):
                cur[j] = (cur[j] + top * rows[0][j]) % p
            rows.append(tuple(cur))
        return rows

    # -- codes and digit vectors ------------------------------------

    def digits(self, e: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(e % p)
            e //= p
        return tuple(out)

    def encode(self, digits) -> int:
        e = 0
        for c in reversed(tuple(digits)):
            e = e * self.p + c % self.p
        return e

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    # -- arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.encode((x + y) % self.p for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.encode((-x) % self.p for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        p, k = self.p, self.k
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        low = [c % p for c in conv[:k]]
        for j in range(k - 1):
            top = conv[k + j] % p
            if top:
                row = self._high[j]
                for t in range(k):
                    low[t] = (low[t] + top * row[t]) % p
        return self.encode(low)

    def pow_(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow_(self.inv(a), -e)
        acc, base = self.one, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 has no multiplicative inverse")
        return self.pow_(a, self.order - 2)

    # -- names -------------------------------------------------------

    def signed_digit(self, c: int) -> int:
        return c - self.p if c > self.p // 2 else c

    def signed_digits(self, e: int) -> tuple[int, ...]:
        return tuple(self.signed_digit(c) for c in self.digits(e))

    def _term(self, coeff: int, deg: int) -> str:
        if deg == 0:
            return str(coeff)
        var = self.gen if deg == 1 else f"{self.gen}^{deg}"
        return var if coeff == 1 else f"{coeff}{var}"

    def name(self, e: int) -> str:
        """Canonical name with coefficients 0..p-1, highest degree first."""
        if e == 0:
            return "0"
        parts = []
        for deg in range(self.k - 1, -1, -1):
            c = self.digits(e)[deg]
            if c:
                parts.append(self._term(c, deg))
        return "+".join(parts)

    def signed_name(self, e: int) -> str:
        """Name with coefficients folded into -(p//2)..p//2."""
        if e == 0:
            return "0"
        out = ""
        for deg in range(self.k - 1, -1, -1):
            s = self.signed_digit(self.digits(e)[deg])
            if not s:
                continue
            sign = "-" if s < 0 else ("+" if out else "")
            out += sign + self._term(abs(s), deg)
        return out

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}; {self.gen})"


_TERM_RE = re.compile(r"^([+-]?)(\d+)?(?:([A-Za-z]\w*)(?:\^(\d+))?)?$")


def parse_element(field: FiniteField, text: str) -> int:
    """Parse a canonical or signed element name back to its code."""
    s = text.replace(" ", "")
    if not s:
        raise FieldError("empty element name")
    coeffs = [0] * field.k
    for term in re.findall(r"[+-]?[^+-]+", s):
        m = _TERM_RE.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise FieldError(f"bad element term {term!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            deg = 0
        else:
            if m.group(3) != field.gen:
                raise FieldError(
                    f"unknown generator {m.group(3)!r} in {text!r}"
                    f" (this field uses {field.gen!r})")
            deg = int(m.group(4)) if m.group(4) is not None else 1
        if deg >= field.k:
            raise FieldError(f"degree {deg} term in {text!r} exceeds"
                             f" field degree {field.k - 1}")
        coeffs[deg] = (coeffs[deg] + sign * coeff) % field.p
    return field.encode(coeffs)


def make_prime_field(p: int) -> FiniteField:
    """GF(p) for prime p <= 1000."""
    if not isinstance(p, int) or p < 2:
        raise FieldError(f"field order must be an integer >= 2, got {p!r}")
    if not is_prime(p):
        d = smallest_factor(p)
        raise FieldError(f"{p} is not prime ({d}·{p // d})")
    if p > MAX_PRIME:
        raise FieldError(f"prime {p} exceeds the supported bound {MAX_PRIME}")
    return FiniteField(p)


def extend_by_irreducible(field: FiniteField, modulus,
                          gen_name: str | None = None) -> FiniteField:
    """Extension of a prime field by a monic irreducible modulus.

    modulus is a coefficient sequence, constant first, degree >= 2.
    """
    m = tuple(int(c) % field.p for c in modulus)
    if field.k != 1:
        raise FieldError("extensions are built over prime fields only")
    if len(m) < 3:
        raise FieldError("modulus must have degree >= 2")
    if m[-1] != 1:
        raise FieldError("modulus must be monic")
    deg = len(m) - 1
    if field.p ** deg > MAX_EXTENSION_ORDER:
        raise FieldError(
            f"extension order {field.p}^{deg} exceeds bound {MAX_EXTENSION_ORDER}")
    f = FieldPolynomial(field, m)
    for r in field.elements():
        if f.evaluate(r) == 0:
            raise ReducibleError(
                f"modulus {f} has root {field.name(r)}",
                ((-r) % field.p, 1))
    factor = _trial_divisor(f)
    if factor is not None:
        raise ReducibleError(f"modulus {f} is reducible", factor.coeffs)
    if gen_name is None:
        gen_name = "i" if m == (1, 0, 1) else "a"
    return FiniteField(field.p, m, gen_name)


def make_field(order: int, modulus=None, gen_name: str | None = None) -> FiniteField:
    """GF(order) from a prime or a prime power plus modulus."""
    if not isinstance(order, int) or order < 2:
        raise FieldError(f"field order must be an integer >= 2, got {order!r}")
    p = smallest_factor(order)
    k = 0
    n = order
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise FieldError(f"{order} is not a prime power"
                         f" ({p}·{order // p})")
    if k == 1:
        if modulus is not None:
            raise FieldError("prime fields take no modulus")
        return make_prime_field(order)
    if modulus is None:
        raise FieldError(f"order {order} = {p}^{k} needs an explicit"
                         " monic irreducible modulus")
    if len(tuple(modulus)) != k + 1:
        raise FieldError(f"modulus degree must be {k} for order {order}")
    return extend_by_irreducible(make_prime_field(p), modulus, gen_name)


def element_order(field: FiniteField, x: int) -> int:
    """Multiplicative order of a nonzero element."""
    if x == 0:
        raise FieldError("0 has no multiplicative order")
    acc, n = x, 1
    while acc != field.one:
        acc = field.mul(acc, x)
        n += 1
    return n


# -- polynomials over a field ---------------------------------------


class FieldPolynomial:
    """Coefficient tuple, constant first, trailing zeros trimmed."""

    def __init__(self, field: FiniteField, coeffs):
        self.field = field
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def evaluate(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def roots(self) -> list[int]:
        if self.is_zero():
            raise FieldError("the zero polynomial has no root set")
        return [x for x in self.field.elements() if self.evaluate(x) == 0]

    def mul_poly(self, other: "FieldPolynomial") -> "FieldPolynomial":
        F = self.field
        if self.is_zero() or other.is_zero():
            return FieldPolynomial(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return FieldPolynomial(F, out)

    def divmod_poly(self, other: "FieldPolynomial"):
        F = self.field
        if other.is_zero():
            raise FieldError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return FieldPolynomial(F, ()), FieldPolynomial(F, rem)
        inv_lead = F.inv(other.coeffs[-1])
        quot = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = F.mul(rem[i + len(other.coeffs) - 1], inv_lead)
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = F.sub(rem[i + j], F.mul(c, b))
        return FieldPolynomial(F, quot), FieldPolynomial(F, rem)

    def monic(self) -> "FieldPolynomial":
        if self.is_zero():
            return self
        F = self.field
        inv_lead = F.inv(self.coeffs[-1])
        return FieldPolynomial(F, [F.mul(c, inv_lead) for c in self.coeffs])

    def __eq__(self, other):
        return (isinstance(other, FieldPolynomial)
                and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        F = self.field
        parts = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[deg]
            if not c:
                continue
            if deg == 0:
                parts.append(F.name(c))
            else:
                var = "x" if deg == 1 else f"x^{deg}"
                parts.append(var if c == F.one else f"{F.name(c)}{var}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FieldPolynomial({self})"


def _trial_divisor(f: FieldPolynomial) -> FieldPolynomial | None:
    """Least monic divisor of degree 2..deg//2, coefficient tuples in
    ascending lexicographic order; None if there is none."""
    F = f.field
    for d in range(2, f.degree // 2 + 1):
        for tail in itertools.product(F.elements(), repeat=d):
            cand = FieldPolynomial(F, tail + (F.one,))
            _, rem = f.divmod_poly(cand)
            if rem.is_zero():
                return cand
    return None


def is_irreducible(f: FieldPolynomial) -> bool:
    if f.is_zero() or f.degree == 0:
        return False
    if f.degree == 1:
        return True
    if f.roots():
        return False
    return _trial_divisor(f) is None


def irreducible_factor(f: FieldPolynomial) -> FieldPolynomial:
    """Monic irreducible factor of minimal degree >= 2.

    Requires f of degree >= 2 with no root in the base field; a root
    would give a linear factor and the caller wants the rootless case.
    """
    if f.is_zero() or f.degree < 2:
        raise FieldError("need a polynomial of degree >= 2")
    rs = f.roots()
    if rs:
        raise FieldError(
            f"{f} has root {f.field.name(rs[0])}, no rootless factor search")
    cand = _trial_divisor(f)
    if cand is not None:
        # minimal degree >= 2 forces irreducibility: a proper factor of the
        # divisor would be a smaller divisor of f, and degree-1 divisors
        # are excluded by rootlessness
        return cand
    return f.monic()


# -- multiplicative subgroups ---------------------------------------


@dataclass(frozen=True)
class MultSubgroup:
    """Subgroup of the unit group, elements as a frozenset of codes."""

    field: FiniteField
    elements: frozenset
    label: str

    def __post_init__(self):
        F = self.field
        if not self.elements or 0 in self.elements:
            raise FieldError("subgroup must be nonempty and avoid 0")
        if F.one not in self.elements:
            raise FieldError("subgroup must contain 1")
        for a in self.elements:
            for b in self.elements:
                if F.mul(a, b) not in self.elements:
                    raise FieldError(
                        f"subgroup not closed: {F.name(a)}·{F.name(b)}")

    @property
    def order(self) -> int:
        return len(self.elements)


def subgroup_from_generators(field: FiniteField, gens, label: str | None = None
                             ) -> MultSubgroup:
    gens = tuple(gens)
    if any(g == 0 for g in gens):
        raise FieldError("0 cannot generate a multiplicative subgroup")
    seen = {field.one}
    frontier = list(seen)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = field.mul(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    if label is None:
        label = "<" + ",".join(field.name(g) for g in gens) + ">"
    return MultSubgroup(field, frozenset(seen), label)


def squares_subgroup(field: FiniteField) -> MultSubgroup:
    sq = frozenset(field.mul(x, x) for x in field.nonzero())
    return MultSubgroup(field, sq, "squares")


def base_squares_subgroup(field: FiniteField) -> MultSubgroup:
    """Squares of the prime subfield's units, embedded as constants."""
    sq = frozenset(c * c % field.p for c in range(1, field.p))
    return MultSubgroup(field, sq, "squares-of-base")


def trivial_subgroup(field: FiniteField) -> MultSubgroup:
    return MultSubgroup(field, frozenset({field.one}), "trivial")


def full_subgroup(field: FiniteField) -> MultSubgroup:
    return MultSubgroup(field, frozenset(field.nonzero()), "full")


SUBGROUP_KEYWORDS = ("squares", "squares-of-base", "trivial", "full")


def subgroup_by_keyword(field: FiniteField, keyword: str) -> MultSubgroup:
    if keyword == "squares":
        return squares_subgroup(field)
    if keyword == "squares-of-base":
        return base_squares_subgroup(field)
    if keyword == "trivial":
        return trivial_subgroup(field)
    if keyword == "full":
        return full_subgroup(field)
    raise FieldError(f"unknown subgroup keyword {keyword!r}"
                     f" (expected one of {', '.join(SUBGROUP_KEYWORDS)})")


# -- exhaustive axiom sweep -----------------------------------------


def verify_field_axioms(field: FiniteField) -> list[str]:
    """Exhaustive field-axiom check for |F| <= 200; returns failures."""
    import numpy as np

    n = field.order
    if n > VERIFY_BOUND:
        raise FieldError(f"exhaustive check bounded to {VERIFY_BOUND} elements")
    A = np.empty((n, n), dtype=np.int16)
    M = np.empty((n, n), dtype=np.int16)
    for a in range(n):
        for b in range(n):
            A[a, b] = field.add(a, b)
            M[a, b] = field.mul(a, b)
    idx = np.arange(n, dtype=np.int16)
    bad = []
    if not np.array_equal(A, A.T):
        bad.append("addition not commutative")
    if not np.array_equal(M, M.T):
        bad.append("multiplication not commutative")
    if not np.array_equal(A[A], A[:, A]):
        bad.append("addition not associative")
    if not np.array_equal(M[M], M[:, M]):
        bad.append("multiplication not associative")
    if not np.array_equal(M[:, A], A[M[:, :, None], M[:, None, :]]):
        bad.append("distributivity fails")
    if not np.array_equal(A[0], idx):
        bad.append("0 is not the additive identity")
    if not np.array_equal(M[1], idx):
        bad.append("1 is not the multiplicative identity")
    if not ((A == 0).sum(axis=1) == 1).all():
        bad.append("additive inverses not unique")
    if n > 1 and not ((M[1:] == 1).sum(axis=1) == 1).all():
        bad.append("multiplicative inverses not unique on units")
    if n > 1 and (M[1:, 1:] == 0).any():
        bad.append("zero divisors present")
    return bad
