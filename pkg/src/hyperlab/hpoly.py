"""Polynomials over finite hyperfields.

A polynomial here is a formal sum of single-valued terms a_i T^i; since
hyperaddition is multivalued, evaluating at a point yields a SET of
elements (the n-ary hypersum of the term values), and the product of two
polynomials yields a SET of polynomials, one per choice of coefficient
from each coefficient hypersum.  A root of f is a point x whose
evaluation set contains zero.

Text form: terms joined by '+', each term a coefficient name, 'T' or
'T^k' with the coefficient elided when it is one, e.g. "1+T^2",
"[-1]+[i]T+T^2".  Coefficient names may be bracketed to protect '+'
or '-' inside them; a bare '-' binds to the coefficient name, so
"-1T" is the term (-1)*T.

Quotient interplay: a polynomial over F induces one over F/G by mapping
coefficients to their classes, and a polynomial over F/G lifts back by
choosing class representatives.  Inducing after lifting restores the
original, and the class of any field evaluation lies in the induced
evaluation set; both facts are exercised by the property suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .ffield import FieldPolynomial
from .hcore import FiniteHyperfield, bits, nary_hypersum_mask, resolve_element
from .quotient import QuotientStructure

MAX_PRODUCT_CHOICES = 4096


class HpolyError(ValueError):
    """Invalid polynomial operation."""


class PolyParseError(HpolyError):
    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"at {position}: expected {expected}")


@dataclass(frozen=True)
class HyperPolynomial:
    hyperfield: FiniteHyperfield
    coeffs: tuple  # element indices, constant term first, trimmed

    def __post_init__(self):
        cs = tuple(self.coeffs)
        if not cs:
            raise HpolyError("coefficient sequence must be nonempty")
        H = self.hyperfield
        for c in cs:
            if not 0 <= c < H.n:
                raise HpolyError(f"coefficient index {c} outside carrier")
        while len(cs) > 1 and cs[-1] == H.zero:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self):
        """Largest exponent with a nonzero coefficient; None for the
        zero polynomial."""
        if self.coeffs == (self.hyperfield.zero,):
            return None
        return len(self.coeffs) - 1

    def eval_mask(self, x: int) -> int:
        H = self.hyperfield
        terms = []
        power = H.one
        for c in self.coeffs:
            terms.append(H.mul(c, power))
            power = H.mul(power, x)
        return nary_hypersum_mask(H, terms)

    def eval_set(self, x: int) -> frozenset:
        return frozenset(bits(self.eval_mask(x)))

    def eval_names(self, x: int) -> tuple:
        H = self.hyperfield
        return tuple(H.name(i) for i in sorted(self.eval_set(x)))

    def __str__(self):
        return render_hpoly(self)


def hpoly(H: FiniteHyperfield, coeffs) -> HyperPolynomial:
    return HyperPolynomial(H, tuple(coeffs))


def roots(p: HyperPolynomial) -> list:
    """Carrier elements whose evaluation set contains zero."""
    H = p.hyperfield
    zbit = 1 << H.zero
    return [x for x in range(H.n) if p.eval_mask(x) & zbit]


def root_names(p: HyperPolynomial) -> list:
    return [p.hyperfield.name(x) for x in roots(p)]


# -- multivalued product --------------------------------------------


def coefficient_sums(p: HyperPolynomial, q: HyperPolynomial) -> list:
    """Per-degree masks of the product's coefficient hypersums."""
    H = p.hyperfield
    if H is not q.hyperfield:
        raise HpolyError("polynomials live over different hyperfields")
    dp, dq = len(p.coeffs) - 1, len(q.coeffs) - 1
    out = []
    for k in range(dp + dq + 1):
        terms = [H.mul(p.coeffs[i], q.coeffs[k - i])
                 for i in range(max(0, k - dq), min(dp, k) + 1)]
        out.append(nary_hypersum_mask(H, terms))
    return out


def mul_multivalued(p: HyperPolynomial, q: HyperPolynomial) -> frozenset:
    """All polynomials obtainable by fixing one coefficient from each
    hypersum of the product; a singleton exactly when every sum is."""
    H = p.hyperfield
    cells = [sorted(bits(m)) for m in coefficient_sums(p, q)]
    count = 1
    for cell in cells:
        count *= len(cell)
        if count > MAX_PRODUCT_CHOICES:
            raise HpolyError(
                f"product has more than {MAX_PRODUCT_CHOICES} choices")
    return frozenset(HyperPolynomial(H, choice) for choice in product(*cells))


# -- quotient interplay ---------------------------------------------


def induce(qs: QuotientStructure, f: FieldPolynomial) -> HyperPolynomial:
    """Image of a field polynomial in the quotient: classes of coeffs."""
    if f.field is not qs.field:
        raise HpolyError("polynomial is over a different field")
    if f.is_zero():
        return HyperPolynomial(qs.hyperfield, (0,))
    return HyperPolynomial(qs.hyperfield,
                           tuple(qs.class_of(c) for c in f.coeffs))


def lift(qs: QuotientStructure, p: HyperPolynomial) -> FieldPolynomial:
    """A field polynomial inducing p: class representatives as coeffs."""
    if p.hyperfield is not qs.hyperfield:
        raise HpolyError("polynomial is over a different hyperfield")
    return FieldPolynomial(qs.field, tuple(qs.reps[c] for c in p.coeffs))


def induced_eval_covers(qs: QuotientStructure, f: FieldPolynomial,
                        x: int) -> bool:
    """The class of f(x) lies in the induced polynomial's value at [x]."""
    fx = qs.class_of(f.evaluate(x))
    mask = induce(qs, f).eval_mask(qs.class_of(x))
    return bool(mask & (1 << fx))


# -- text form ------------------------------------------------------


def parse_hpoly(H: FiniteHyperfield, text: str) -> HyperPolynomial:
    s = text.strip()
    if not s:
        raise PolyParseError(0, "a term")
    coeffs = {}
    pos = 0
    n = len(s)
    first = True

    def skip(p):
        while p < n and s[p].isspace():
            p += 1
        return p

    while True:
        if not first:
            pos = skip(pos)
            if pos >= n:
                break
            if s[pos] != "+":
                raise PolyParseError(pos, "'+' or end of input")
            pos = skip(pos + 1)
        first = False
        if pos >= n:
            raise PolyParseError(pos, "a term")
        start = pos
        # coefficient: bracketed, or a bare name running to 'T'/'+'/end
        if s[pos] == "[":
            close = s.find("]", pos)
            if close < 0:
                raise PolyParseError(pos, "closing ']'")
            coeff_text = s[pos + 1:close].strip()
            pos = close + 1
            has_coeff = True
        else:
            end = pos
            while end < n and s[end] not in "+T" and not s[end].isspace():
                end += 1
            coeff_text = s[pos:end]
            pos = end
            has_coeff = bool(coeff_text)
        pos = skip(pos)
        power = 0
        if pos < n and s[pos] == "T":
            pos += 1
            power = 1
            if pos < n and s[pos] == "^":
                pos += 1
                dstart = pos
                while pos < n and s[pos].isdigit():
                    pos += 1
                if pos == dstart:
                    raise PolyParseError(dstart, "an exponent")
                power = int(s[dstart:pos])
        elif not has_coeff:
            raise PolyParseError(start, "a coefficient or 'T'")
        if has_coeff:
            try:
                c = resolve_element(H, coeff_text)
            except Exception:
                raise PolyParseError(
                    start, f"an element of {{{', '.join(H.names)}}}"
                ) from None
        else:
            c = H.one
        if power in coeffs:
            raise PolyParseError(start, f"a single T^{power} term")
        coeffs[power] = c
    deg = max(coeffs)
    return HyperPolynomial(
        H, tuple(coeffs.get(i, H.zero) for i in range(deg + 1)))


def render_hpoly(p: HyperPolynomial) -> str:
    H = p.hyperfield
    if p.degree is None:
        return H.name(H.zero)
    parts = []
    for i, c in enumerate(p.coeffs):
        if c == H.zero:
            continue
        if i == 0:
            parts.append(H.name(c))
            continue
        var = "T" if i == 1 else f"T^{i}"
        parts.append(var if c == H.one else f"{H.name(c)}{var}")
    return "+".join(parts)
