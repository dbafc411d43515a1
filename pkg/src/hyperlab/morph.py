"""Maps between hyperfields: classification and embedding search.

A map f with f(0)=0, f(1)=1 that respects products is graded by how it
treats hyperaddition:

  weak    z in x (+) y  implies  f(z) in f(x) (+) f(y)
  strong  f applied to x (+) y equals f(x) (+) f(y) as sets

Everything else is "not-hom".  Strong implies weak; searches asked for
weak maps therefore return strong ones too, labeled.

Targets may be finite hyperfields or the circle oracle from
hyperlab.phase; sums in the circle can be infinite arcs, in which case
a finite image set can never equal them and the map cannot be strong
through that pair.

Unit groups of every structure built here are cyclic, so embeddings are
searched by picking a generator of the source units and trying each
target element of the same multiplicative order as its image; an
embedding is determined by that one choice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hcore import FiniteHyperfield, bits, builtin, resolve_element
from .phase import PhaseElement, PhaseHyperfield, parse_phase


class MorphError(ValueError):
    """Invalid map construction or search."""


def _is_phase(target) -> bool:
    return isinstance(target, PhaseHyperfield)


@dataclass(frozen=True)
class HyperfieldMap:
    source: FiniteHyperfield
    target: object          # FiniteHyperfield or PhaseHyperfield
    images: tuple           # per source index: target index / PhaseElement

    def __post_init__(self):
        if len(self.images) != self.source.n:
            raise MorphError("one image per source element required")

    def apply(self, i: int):
        return self.images[i]

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def image_names(self) -> tuple:
        t = self.target
        if _is_phase(t):
            return tuple(str(v) for v in self.images)
        return tuple(t.name(v) for v in self.images)

    def __str__(self):
        src = self.source.names
        return ", ".join(f"{src[i]} -> {name}"
                         for i, name in enumerate(self.image_names()))


def make_map(source: FiniteHyperfield, target, assignment: dict) -> HyperfieldMap:
    """Build a map from source element names to target elements; target
    values may be names (finite), PhaseElements, or phase text."""
    images = []
    for i in range(source.n):
        name = source.name(i)
        if name not in assignment:
            raise MorphError(f"no image assigned to {name}")
        v = assignment[name]
        if _is_phase(target):
            images.append(v if isinstance(v, PhaseElement) else parse_phase(v))
        else:
            images.append(v if isinstance(v, int) else resolve_element(target, v))
    extra = set(assignment) - set(source.names)
    if extra:
        raise MorphError(f"images for unknown elements: {sorted(extra)}")
    return HyperfieldMap(source, target, tuple(images))


def identity_map(H: FiniteHyperfield) -> HyperfieldMap:
    return HyperfieldMap(H, H, tuple(range(H.n)))


def collapse_to_krasner(H: FiniteHyperfield,
                        K: FiniteHyperfield | None = None) -> HyperfieldMap:
    """Send zero to zero and every unit to one."""
    if K is None:
        K = builtin("krasner")
    if K.n != 2:
        raise MorphError("collapse target must have exactly two elements")
    images = tuple(K.zero if i == H.zero else K.one for i in range(H.n))
    return HyperfieldMap(H, K, images)


def _mult_respected(m: HyperfieldMap) -> bool:
    S, t, f = m.source, m.target, m.images
    if _is_phase(t):
        if not f[S.zero].is_zero or f[S.one] != t.one:
            return False
        for x in S.units():
            if f[x].is_zero:
                return False
            for y in S.units():
                if t.mul(f[x], f[y]) != f[S.mul(x, y)]:
                    return False
        return True
    if f[S.zero] != t.zero or f[S.one] != t.one:
        return False
    for x in S.units():
        if f[x] == t.zero:
            return False
        for y in S.units():
            if t.mul(f[x], f[y]) != f[S.mul(x, y)]:
                return False
    return True


def classify_map(m: HyperfieldMap) -> str:
    """Grade a map: "not-hom", "weak", or "strong"."""
    if not _mult_respected(m):
        return "not-hom"
    S, t, f = m.source, m.target, m.images
    phase = _is_phase(t)
    strong = True
    for x in range(S.n):
        for y in range(x + 1):
            members = list(bits(S.add_mask(x, y)))
            image = {f[z] for z in members}
            if phase:
                for z in members:
                    if not t.member(f[z], f[x], f[y]):
                        return "not-hom"
                if strong:
                    fin = t.finite_sum(f[x], f[y])
                    strong = fin is not None and image == fin
            else:
                smask = t.add_mask(f[x], f[y])
                if any(not smask & (1 << f[z]) for z in members):
                    return "not-hom"
                if strong:
                    strong = image == set(bits(smask))
    return "strong" if strong else "weak"


def unit_orders(H: FiniteHyperfield) -> dict:
    out = {}
    for x in H.units():
        k, acc = 1, x
        while acc != H.one:
            acc = H.mul(acc, x)
            k += 1
        out[x] = k
    return out


def cyclic_generator(H: FiniteHyperfield):
    """A unit whose powers cover all units, or None."""
    orders = unit_orders(H)
    m = H.n - 1
    for x in sorted(orders):
        if orders[x] == m:
            return x
    return None


def find_embeddings(K: FiniteHyperfield, L: FiniteHyperfield,
                    kind: str = "weak") -> list:
    """Injective maps K -> L whose grade is at least `kind`, sorted by
    image tuple.  Requires a cyclic source unit group."""
    if kind not in ("weak", "strong"):
        raise MorphError(f"kind must be weak or strong, not {kind!r}")
    g = cyclic_generator(K)
    if g is None:
        raise MorphError("source unit group is not cyclic")
    m = K.n - 1
    # source unit x = g^j; precompute exponents
    expo = {}
    acc, j = K.one, 0
    while True:
        expo[acc] = j
        acc = K.mul(acc, g)
        j += 1
        if acc == K.one:
            break
    found = []
    target_orders = unit_orders(L)
    for h, order in sorted(target_orders.items()):
        if order != m:
            continue
        pow_h = {0: L.one}
        acc = L.one
        for j in range(1, m):
            acc = L.mul(acc, h)
            pow_h[j] = acc
        images = [L.zero] * K.n
        for x, j in expo.items():
            images[x] = pow_h[j]
        cand = HyperfieldMap(K, L, tuple(images))
        grade = classify_map(cand)
        if grade == "strong" or (grade == "weak" and kind == "weak"):
            found.append((cand, grade))
    found.sort(key=lambda pair: pair[0].images)
    return found


def is_isomorphic(K: FiniteHyperfield, L: FiniteHyperfield):
    """(True, map) for some strong bijection, else (False, None)."""
    if K.n != L.n:
        return False, None
    for cand, grade in find_embeddings(K, L, "strong"):
        if cand.is_injective():
            return True, cand
    return False, None


def lagrange_obstruction(K: FiniteHyperfield, L: FiniteHyperfield):
    """Unit-count divisibility obstruction to embedding K into L, or
    None when sizes are compatible."""
    uk, ul = K.n - 1, L.n - 1
    if ul % uk == 0:
        return None
    return f"|K^x| = {uk} does not divide |L^x| = {ul}"
