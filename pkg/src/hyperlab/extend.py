"""Root extensions of quotient hyperfields and minimality certification.

Given K = F/G and a polynomial with no root over K, a bigger quotient
with a root is built by lifting the polynomial to F, picking a monic
irreducible factor, extending F by it, and quotienting the extension by
the same G (constants keep their codes, so G transfers verbatim).  The
class-of-constants map K -> L is the canonical embedding; construction
verifies eagerly that it grades strong, that the image polynomial gains
a root, and that L satisfies every hyperfield axiom.

Minimality is certified negatively: any weak subhyperfield of L that
contains the embedded base and a root must include a required core R
(closure of both under product and negation), and its unit set must be
a subgroup of L^x.  For each proper subgroup candidate S above R, a
pair x, y in S with (x (+) y) disjoint from S union {0} rules S out,
because a weak structure on S must pick its sums inside that
intersection and sums are never empty.  If every candidate is ruled
out, the extension is minimal.  An optional exhaustive mode settles
unobstructed candidates by searching for an actual hyperaddition.

`nonuniqueness_experiment` chains the whole story for 1 (+) T^2 over
the two small quotient presentations of the weak sign structure and
ends with a verdict line comparing the two non-isomorphic results.
"""

from __future__ import annotations

import json

from dataclasses import dataclass

from .ffield import (
    FieldPolynomial,
    extend_by_irreducible,
    irreducible_factor,
    make_prime_field,
    squares_subgroup,
    subgroup_from_generators,
)
from .hcore import FiniteHyperfield, bits, verify_axioms
from .hpoly import HyperPolynomial, lift, parse_hpoly, roots
from .morph import (
    HyperfieldMap,
    classify_map,
    cyclic_generator,
    find_embeddings,
    is_isomorphic,
    lagrange_obstruction,
    unit_orders,
)
from .quotient import QuotientStructure, build_quotient

EXHAUSTIVE_LIMIT = 8


class ExtendError(ValueError):
    """Invalid extension construction or certification."""


@dataclass(frozen=True)
class RootExtension:
    base: QuotientStructure
    ext: QuotientStructure
    poly: HyperPolynomial        # over the base hyperfield
    image_poly: HyperPolynomial  # the same polynomial pushed into L
    factor: FieldPolynomial      # irreducible modulus used to grow F
    embedding: HyperfieldMap
    grade: str
    root: int                    # first root of image_poly, carrier order

    @property
    def root_name(self) -> str:
        return self.ext.hyperfield.name(self.root)

    def to_record(self) -> dict:
        return {
            "base": f"F{self.base.field.order}/"
                    f"{subgroup_short(self.base.subgroup.label)}",
            "extension": f"F{self.ext.field.order}/"
                         f"{subgroup_short(self.ext.subgroup.label)}",
            "units": self.ext.n - 1,
            "modulus": str(self.factor),
            "root": self.root_name,
            "grade": self.grade,
            "embedding": str(self.embedding),
        }


def _quotient_of(value) -> QuotientStructure:
    if isinstance(value, QuotientStructure):
        return value
    prov = getattr(value, "provenance", None)
    if isinstance(prov, QuotientStructure):
        return prov
    raise ExtendError(
        "root extensions need a hyperfield built as a field quotient")


def subgroup_short(label: str | None) -> str:
    if label in ("squares", "squares-of-base"):
        return "sq"
    return label or "G"


def build_root_extension(base, poly: HyperPolynomial,
                         gen_name: str | None = None) -> RootExtension:
    qs = _quotient_of(base)
    if poly.hyperfield is not qs.hyperfield:
        raise ExtendError("polynomial is over a different hyperfield")
    existing = roots(poly)
    if existing:
        names = ", ".join(qs.hyperfield.name(r) for r in existing)
        raise ExtendError(f"polynomial already has roots: {names}")
    fpoly = lift(qs, poly)
    factor = irreducible_factor(fpoly)
    big = extend_by_irreducible(qs.field, factor.coeffs, gen_name)
    carried = subgroup_from_generators(big, sorted(qs.subgroup.elements),
                                       label=qs.subgroup.label)
    ext = build_quotient(big, carried)

    images = tuple(ext.class_of(qs.reps[i]) for i in range(qs.n))
    embedding = HyperfieldMap(qs.hyperfield, ext.hyperfield, images)
    grade = classify_map(embedding)
    if grade == "not-hom" or not embedding.is_injective():
        raise ExtendError("constant embedding failed to respect structure")
    failures = verify_axioms(ext.hyperfield)
    if not failures.passed:
        raise ExtendError("extension violates hyperfield axioms")
    image_poly = HyperPolynomial(ext.hyperfield,
                                 tuple(images[c] for c in poly.coeffs))
    found = roots(image_poly)
    if not found:
        raise ExtendError("extension did not produce a root")
    return RootExtension(qs, ext, poly, image_poly, factor, embedding,
                         grade, found[0])


def render_extension(ext: RootExtension) -> str:
    L = ext.ext
    label = subgroup_short(L.subgroup.label)
    lines = [
        f"L = F{L.field.order}/{label}, root {ext.root_name}",
        f"|L^x| = {L.n - 1}; modulus {ext.factor}",
        f"embedding ({ext.grade}): {ext.embedding}",
    ]
    return "\n".join(lines)


# -- subgroup candidates and obstructions ---------------------------


def subgroup_candidates(H: FiniteHyperfield, containing=frozenset()):
    """All multiplicative subgroups of H^x that contain `containing`,
    smallest first; unit group must be cyclic."""
    if cyclic_generator(H) is None:
        raise ExtendError("unit group is not cyclic")
    m = H.n - 1
    orders = unit_orders(H)
    need = frozenset(containing)
    out = []
    for d in sorted(k for k in range(1, m + 1) if m % k == 0):
        S = frozenset(x for x, o in orders.items() if d % o == 0)
        if need <= S:
            out.append(S)
    return out


def weak_closure_obstruction(H: FiniteHyperfield, S):
    """First pair x <= y in S (by carrier index) whose sum avoids
    S union {0} entirely, or None."""
    pairs = all_obstruction_pairs(H, S)
    return pairs[0] if pairs else None


def all_obstruction_pairs(H: FiniteHyperfield, S) -> tuple:
    members = sorted(S)
    allowed = 1 << H.zero
    for x in members:
        allowed |= 1 << x
    out = []
    for i, x in enumerate(members):
        for y in members[i:]:
            if not H.add_mask(x, y) & allowed:
                out.append((x, y))
    return tuple(out)


# -- exhaustive structure search ------------------------------------


_SEARCH_CAP = 1_000_000


def _search_weak_structure(H: FiniteHyperfield, S):
    """Try to build a hyperaddition on S union {0} whose cells are
    nonempty subsets of H's sums; returns a FiniteHyperfield or None.

    Distributivity pins every cell to the 1 (+) u row: x (+) y must be
    x * (1 (+) x^-1 y), so only that row is searched; each assignment
    expands to a full table, rejected unless symmetric and axiom-clean.
    """
    carrier = [H.zero] + sorted(S)
    n = len(carrier)
    pos = {e: i for i, e in enumerate(carrier)}
    allowed_mask = 0
    for e in carrier:
        allowed_mask |= 1 << e

    def to_local(mask_global: int) -> int:
        m = 0
        for e in bits(mask_global):
            m |= 1 << pos[e]
        return m

    one = H.one
    minus_one = H.neg_of(one)
    inv = {}
    for u in carrier[1:]:
        v = u
        while H.mul(u, v) != one:
            v = H.mul(v, u)
        inv[u] = v

    # subset choices for 1 (+) u, honoring the unique-inverse axiom:
    # zero belongs to the cell exactly when u = -1
    row_domains = []
    total = 1
    for u in carrier[1:]:
        options = to_local(H.add_mask(one, u) & allowed_mask)
        subsets = []
        sub = options
        while True:
            if sub:
                want_zero = u == minus_one
                if bool(sub & 1) == want_zero:
                    subsets.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & options
        if not subsets:
            return None
        subsets.sort(key=lambda m: (bin(m).count("1"), m))
        row_domains.append(subsets)
        total *= len(subsets)
        if total > _SEARCH_CAP:
            raise ExtendError("structure search space too large")

    mul = [[pos[H.mul(a, b)] for b in carrier] for a in carrier]
    neg = [pos[H.neg_of(a)] for a in carrier]
    names = tuple(H.name(e) for e in carrier)

    def expand(row):
        add = [[0] * n for _ in range(n)]
        add[0][0] = 1
        for j in range(1, n):
            add[0][j] = add[j][0] = 1 << j
        for i in range(1, n):
            x = carrier[i]
            for j in range(1, n):
                u = H.mul(inv[x], carrier[j])
                cell = 0
                for z in bits(row[pos[u] - 1]):
                    cell |= 1 << mul[i][z]
                add[i][j] = cell
        for i in range(n):
            for j in range(i):
                if add[i][j] != add[j][i]:
                    return None
        return add

    def attempt(idx, row):
        if idx == len(row_domains):
            add = expand(row)
            if add is None:
                return None
            cand = FiniteHyperfield(names, 0, pos[one], mul, add, neg)
            return cand if verify_axioms(cand).passed else None
        for m in row_domains[idx]:
            got = attempt(idx + 1, row + [m])
            if got is not None:
                return got
        return None

    return attempt(0, [])


# -- certification --------------------------------------------------


@dataclass(frozen=True)
class CandidateReport:
    elements: frozenset
    size: int
    witness: tuple | None        # lex-least obstruction pair or None
    all_witnesses: tuple
    exhaustive: str | None       # None | "structure-found" | "no-structure"

    @property
    def obstructed(self) -> bool:
        return self.witness is not None

    @property
    def settled(self) -> bool:
        return self.obstructed or self.exhaustive == "no-structure"


@dataclass(frozen=True)
class MinimalityCertificate:
    extension: RootExtension
    required: frozenset
    candidates: tuple
    minimal: bool
    notes: tuple

    def to_record(self) -> dict:
        L = self.extension.ext.hyperfield
        name = L.name
        return {
            "base": f"F{self.extension.base.field.order}/"
                    f"{subgroup_short(self.extension.base.subgroup.label)}",
            "extension": f"F{self.extension.ext.field.order}/"
                         f"{subgroup_short(self.extension.ext.subgroup.label)}",
            "root": self.extension.root_name,
            "required": [name(x) for x in sorted(self.required)],
            "candidates": [
                {
                    "size": c.size,
                    "elements": [name(x) for x in sorted(c.elements)],
                    "witness": [name(c.witness[0]), name(c.witness[1])]
                    if c.witness else None,
                    "all_witnesses": [[name(x), name(y)]
                                      for x, y in c.all_witnesses],
                    "exhaustive": c.exhaustive,
                }
                for c in self.candidates
            ],
            "minimal": self.minimal,
            "notes": list(self.notes),
        }


def _closure_mul_neg(H: FiniteHyperfield, seed) -> frozenset:
    out = set(seed)
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for y in (H.neg_of(x), *[H.mul(x, z) for z in list(out)]):
            if y not in out:
                out.add(y)
                frontier.append(y)
    # products of distinct known elements may appear late; iterate to fix
    changed = True
    while changed:
        changed = False
        for a in list(out):
            for b in list(out):
                c = H.mul(a, b)
                if c not in out:
                    out.add(c)
                    changed = True
    return frozenset(out)


def certify_minimal(ext: RootExtension, exhaustive: bool = False
                    ) -> MinimalityCertificate:
    L = ext.ext.hyperfield
    base_units = {ext.embedding.apply(i)
                  for i in ext.base.hyperfield.units()}
    required = _closure_mul_neg(L, base_units | {ext.root})
    units = set(L.units())
    if not required <= units:
        raise ExtendError("required core escaped the unit group")

    reports = []
    for S in subgroup_candidates(L, required):
        if S == frozenset(units):
            continue
        pairs = all_obstruction_pairs(L, S)
        exh = None
        if exhaustive and not pairs and len(S) <= EXHAUSTIVE_LIMIT:
            found = _search_weak_structure(L, S)
            exh = "structure-found" if found is not None else "no-structure"
        reports.append(CandidateReport(
            S, len(S), pairs[0] if pairs else None, pairs, exh))

    minimal = all(r.settled for r in reports)
    notes = (
        "witness soundness: every stored pair (x, y) has "
        "(x (+) y) & (S | {0}) empty, re-verified by direct set "
        "computation",
        "a weak substructure must choose its sums as nonempty subsets "
        "of the ambient sums, so an empty intersection rules out the "
        "candidate",
        "the test is one-sided: an unobstructed candidate is settled "
        "only by the exhaustive mode",
    )
    for r in reports:
        for x, y in r.all_witnesses:
            if L.add_mask(x, y) & (sum(1 << e for e in r.elements) | 1 << L.zero):
                raise ExtendError("stored witness failed re-verification")
    return MinimalityCertificate(ext, required, tuple(reports), minimal, notes)


def render_certificate(cert: MinimalityCertificate) -> str:
    L = cert.extension.ext.hyperfield
    name = L.name
    lines = [
        f"required core ({len(cert.required)}): "
        + ", ".join(name(x) for x in sorted(cert.required)),
    ]
    if not cert.candidates:
        lines.append("no proper subgroup candidates above the core")
    for c in cert.candidates:
        head = (f"candidate of order {c.size}: "
                + ", ".join(name(x) for x in sorted(c.elements)))
        lines.append(head)
        if c.witness:
            x, y = c.witness
            sums = ", ".join(L.names_of(L.add_set(x, y)))
            lines.append(f"  obstructed: {name(x)} (+) {name(y)} = "
                         f"{{{sums}}} misses the candidate")
            lines.append("  all obstruction pairs: "
                         + "; ".join(f"({name(x)}, {name(y)})"
                                     for x, y in c.all_witnesses))
        elif c.exhaustive == "no-structure":
            lines.append("  no weak structure exists (exhaustive search)")
        elif c.exhaustive == "structure-found":
            lines.append("  admits a weak structure (exhaustive search)")
        else:
            lines.append("  unobstructed; not settled")
    if cert.minimal:
        lines.append("verdict: minimal")
    elif any(c.exhaustive == "structure-found" for c in cert.candidates):
        lines.append("verdict: not minimal (a weak substructure exists)")
    else:
        lines.append("verdict: inconclusive")
    return "\n".join(lines)


# -- the end-to-end experiment --------------------------------------


@dataclass(frozen=True)
class ExperimentReport:
    steps: tuple     # (title, payload dict) pairs
    verdict: str

    def to_record(self) -> dict:
        return {"steps": [{"title": t, **p} for t, p in self.steps],
                "verdict": self.verdict}

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2, ensure_ascii=False)


def nonuniqueness_experiment() -> ExperimentReport:
    """Build both root extensions of the weak sign structure for
    1 (+) T^2, certify minimality, and compare them."""
    steps = []

    bases = {}
    for p in (7, 11):
        F = make_prime_field(p)
        bases[p] = build_quotient(F, squares_subgroup(F))
    polys = {p: parse_hpoly(q.hyperfield, "1+T^2") for p, q in bases.items()}
    steps.append((
        "no roots over the base quotients",
        {f"F{p}/sq": [bases[p].hyperfield.name(r) for r in roots(polys[p])]
         for p in (7, 11)},
    ))

    exts = {p: build_root_extension(bases[p], polys[p]) for p in (7, 11)}
    steps.append((
        "root extensions built",
        {f"F{exts[p].ext.field.order}/sq": {
            "units": exts[p].ext.n - 1,
            "root": exts[p].root_name,
            "embedding": exts[p].grade,
        } for p in (7, 11)},
    ))

    certs = {7: certify_minimal(exts[7]),
             11: certify_minimal(exts[11], exhaustive=True)}
    for p in (7, 11):
        cert = certs[p]
        L = cert.extension.ext.hyperfield

        def outcome(c):
            if c.witness:
                return [L.name(c.witness[0]), L.name(c.witness[1])]
            return c.exhaustive or "unobstructed"

        steps.append((
            f"minimality of F{cert.extension.ext.field.order}/sq",
            {
                "candidates": {str(c.size): outcome(c)
                               for c in cert.candidates},
                "minimal": cert.minimal,
            },
        ))

    L1, L2 = exts[7].ext.hyperfield, exts[11].ext.hyperfield
    steps.append((
        "no embedding between the extensions",
        {
            "lagrange": lagrange_obstruction(L1, L2),
            "weak_embeddings": len(find_embeddings(L1, L2, "weak")),
            "isomorphic": is_isomorphic(L1, L2)[0],
        },
    ))

    u1, u2 = L1.n - 1, L2.n - 1
    verdict = (f"two non-isomorphic minimal extensions: "
               f"|L1^x|={u1}, |L2^x|={u2}")
    return ExperimentReport(tuple(steps), verdict)


def render_experiment(report: ExperimentReport) -> str:
    lines = []
    for i, (title, payload) in enumerate(report.steps, start=1):
        lines.append(f"step {i}: {title}")
        for key in payload:
            lines.append(f"  {key}: {json.dumps(payload[key], ensure_ascii=False)}")
    lines.append(report.verdict)
    return "\n".join(lines)
