"""Quotient hyperfields F/G for a finite field F and a subgroup G of F^x.

The classes are the multiplicative cosets of G together with {0}; the
class product is inherited from F, and a class [z] belongs to [x] (+) [y]
exactly when z' = x' + y' for some representatives.  Because cosets are
closed under the unit action, it suffices to fix one representative on
one side, which keeps table construction linear in the coset size.

Display follows signed coefficient names: each class is named "[m]"
where m is its representative in signed form ("i+1", "-3i-2", ...).
The representative of a class is its member with the smallest magnitude
profile (absolute signed coefficients from the highest degree down,
negative signs breaking ties), which also orders members inside a class;
classes themselves are listed zero first, then by a key that interleaves
the constant term's sign between the leading magnitudes and the constant
magnitude.  These choices make class_listing stable and human-friendly.

The circle hyperfield (phases of complex numbers modulo positive reals)
is the infinite analogue of this construction; it lives in
hyperlab.phase and is re-exported here for convenience.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .ffield import FiniteField, MultSubgroup
from .hcore import MAX_CARRIER, FiniteHyperfield
from .phase import PhaseHyperfield, phase_hyperfield  # noqa: F401  (re-export)


class QuotientError(ValueError):
    """Invalid quotient construction or lookup."""


def _signed_digits(field: FiniteField, code: int) -> tuple:
    return tuple(field.signed_digit(c) for c in field.digits(code))


def member_key(field: FiniteField, code: int) -> tuple:
    """Order key for elements: |signed coeffs| high degree first, then
    negativity flags high degree first.  Zero sorts before everything."""
    sd = _signed_digits(field, code)
    mags = tuple(abs(c) for c in reversed(sd))
    negs = tuple(1 if c < 0 else 0 for c in reversed(sd))
    return mags + negs


def listing_key(field: FiniteField, code: int) -> tuple:
    """Order key for class representatives in listings: leading
    magnitudes, then the constant's sign, the constant's magnitude,
    and finally the leading signs."""
    sd = _signed_digits(field, code)
    lead = sd[1:][::-1]
    mags = tuple(abs(c) for c in lead)
    negs = tuple(1 if c < 0 else 0 for c in lead)
    c0 = sd[0]
    return mags + (1 if c0 < 0 else 0, abs(c0)) + negs


@dataclass(frozen=True)
class QuotientStructure:
    field: FiniteField
    subgroup: MultSubgroup
    classes: tuple          # tuple[frozenset[int]]; classes[0] == {0}
    reps: tuple             # representative code per class
    hyperfield: FiniteHyperfield
    _index: dict = dc_field(repr=False, default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.classes)

    def class_of(self, code: int) -> int:
        """Class index of a field element code."""
        if not 0 <= code < self.field.order:
            raise QuotientError(f"code {code} outside field of order "
                                f"{self.field.order}")
        return self._index[code]

    def class_name_of(self, code: int) -> str:
        return self.hyperfield.name(self.class_of(code))

    def members(self, idx: int) -> tuple:
        """Class members as codes, in member-key order."""
        F = self.field
        return tuple(sorted(self.classes[idx], key=lambda c: member_key(F, c)))


def build_quotient(field: FiniteField, subgroup: MultSubgroup) -> QuotientStructure:
    if subgroup.field is not field:
        raise QuotientError("subgroup belongs to a different field")
    G = sorted(subgroup.elements)
    seen = set()
    cosets = []
    for x in range(1, field.order):
        if x in seen:
            continue
        coset = frozenset(field.mul(x, g) for g in G)
        seen |= coset
        cosets.append(coset)
    n = 1 + len(cosets)
    if n > MAX_CARRIER:
        raise QuotientError(
            f"{n} classes exceed the carrier limit of {MAX_CARRIER}")

    reps = [0] + [min(c, key=lambda m: member_key(field, m)) for c in cosets]
    order = sorted(range(1, n), key=lambda i: listing_key(field, reps[i]))
    classes = (frozenset({0}),) + tuple(cosets[i - 1] for i in order)
    reps = (0,) + tuple(reps[i] for i in order)

    index = {}
    for i, cls in enumerate(classes):
        for m in cls:
            index[m] = i

    names = tuple(f"[{field.signed_name(r)}]" for r in reps)
    mul = [[index[field.mul(reps[i], reps[j])] for j in range(n)]
           for i in range(n)]
    neg = [index[field.neg(reps[i])] for i in range(n)]
    add = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            mask = 0
            for y in classes[j]:
                mask |= 1 << index[field.add(reps[i], y)]
            add[i][j] = add[j][i] = mask

    H = FiniteHyperfield(names, 0, index[field.one], mul, add, neg)
    qs = QuotientStructure(field, subgroup, classes, reps, H, index)
    H.provenance = qs
    return qs


def setsum_membership_check(qs: QuotientStructure, z: int, xs) -> tuple | None:
    """Decide [z] in [x1] (+) ... (+) [xn] by explicit representatives.

    Returns a tuple (x1', ..., xn') of field codes with xi' in [xi] and
    x1' + ... + xn' in [z], or None when no such choice exists.  The
    translation-invariance of cosets means the first factor may stay
    fixed at its representative.
    """
    xs = tuple(xs)
    if not xs:
        raise QuotientError("membership in an empty hypersum is undefined")
    F = qs.field
    target = qs.class_of(z)
    first = qs.reps[qs.class_of(xs[0])]
    stack = [(first, (first,))]
    for x in xs[1:]:
        cls = qs.classes[qs.class_of(x)]
        stack = [(F.add(s, m), picks + (m,))
                 for s, picks in stack for m in cls]
    for s, picks in stack:
        if qs.class_of(s) == target:
            return picks
    return None


def class_listing(qs: QuotientStructure) -> str:
    """One line per class: "[rep] = {members...}" in carrier order."""
    F = qs.field
    lines = []
    for i in range(qs.n):
        members = ", ".join(F.signed_name(m) for m in qs.members(i))
        lines.append(f"{qs.hyperfield.name(i)} = {{{members}}}")
    return "\n".join(lines)
