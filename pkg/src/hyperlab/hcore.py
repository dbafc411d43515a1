"""Finite hyperfields as explicit tables.

A finite hyperfield here is a carrier of named elements with a
single-valued commutative multiplication and a multivalued addition:
x (+) y is a nonempty SUBSET of the carrier.  Carrier elements are
indexed 0..n-1 in a fixed order; zero and one are stored as indices.
Addition cells are bitmasks over carrier indices, which bounds the
carrier at 64 elements and makes the exhaustive axiom sweeps cheap.

The constructor enforces structural invariants only (nonempty symmetric
cells, valid indices, zero != one).  The hyperfield laws themselves are
checked by verify_axioms, which reports a verdict per clause together
with the first failing witness in scan order.
"""

from __future__ import annotations

import json

from dataclasses import dataclass

MAX_CARRIER = 64


class HcoreError(ValueError):
    """Invalid hyperfield table, record, or element reference."""


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset:
    return frozenset(bits(mask))


class FiniteHyperfield:
    """Table-backed hyperfield; treat instances as immutable."""

    def __init__(self, names, zero: int, one: int, mul, add_masks, neg,
                 provenance=None):
        names = tuple(names)
        n = len(names)
        if not 2 <= n <= MAX_CARRIER:
            raise HcoreError(f"carrier size {n} outside 2..{MAX_CARRIER}")
        if len(set(names)) != n:
            raise HcoreError("carrier names must be unique")
        if not (0 <= zero < n and 0 <= one < n):
            raise HcoreError("zero/one indices out of range")
        if zero == one:
            raise HcoreError("zero and one must differ")
        self.names = names
        self.zero = zero
        self.one = one
        self._mul = tuple(tuple(int(v) for v in row) for row in mul)
        self._add = tuple(tuple(int(v) for v in row) for row in add_masks)
        self.neg = tuple(int(v) for v in neg)
        self.provenance = provenance
        full = (1 << n) - 1
        if len(self._mul) != n or any(len(r) != n for r in self._mul):
            raise HcoreError("multiplication table must be n x n")
        if any(not 0 <= v < n for r in self._mul for v in r):
            raise HcoreError("multiplication entry out of range")
        if len(self._add) != n or any(len(r) != n for r in self._add):
            raise HcoreError("addition table must be n x n")
        for i in range(n):
            for j in range(n):
                cell = self._add[i][j]
                if not 0 < cell <= full:
                    raise HcoreError(
                        f"addition cell {names[i]} (+) {names[j]} must be a"
                        " nonempty subset of the carrier")
                if cell != self._add[j][i]:
                    raise HcoreError("addition table must be symmetric")
        if self._mul != tuple(zip(*self._mul)):
            raise HcoreError("multiplication table must be symmetric")
        if len(self.neg) != n or any(not 0 <= v < n for v in self.neg):
            raise HcoreError("negation map out of range")
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise HcoreError(f"unknown element {name!r}; carrier is "
                             + ", ".join(self.names)) from None

    def name(self, i: int) -> str:
        return self.names[i]

    def mul(self, i: int, j: int) -> int:
        return self._mul[i][j]

    def add_mask(self, i: int, j: int) -> int:
        return self._add[i][j]

    def add_set(self, i: int, j: int) -> frozenset:
        return set_of(self._add[i][j])

    def neg_of(self, i: int) -> int:
        return self.neg[i]

    def units(self) -> list[int]:
        return [i for i in range(self.n) if i != self.zero]

    def set_by_names(self, names) -> frozenset:
        return frozenset(self.index(s) for s in names)

    def names_of(self, indices) -> tuple[str, ...]:
        return tuple(self.names[i] for i in sorted(indices))

    def __repr__(self):
        return f"FiniteHyperfield({self.n} elements)"


def resolve_element(H: FiniteHyperfield, text: str) -> int:
    """Carrier lookup that also tries the bracketed class spelling."""
    s = text.strip()
    if s in H._index:
        return H._index[s]
    bracketed = f"[{s}]"
    if bracketed in H._index:
        return H._index[bracketed]
    raise HcoreError(f"unknown element {text!r}; carrier is "
                     + ", ".join(H.names))


# -- hypersums ------------------------------------------------------


def hypersum_masks(H: FiniteHyperfield, amask: int, bmask: int) -> int:
    out = 0
    add = H._add
    for i in bits(amask):
        row = add[i]
        for j in bits(bmask):
            out |= row[j]
    return out


def hypersum_sets(H: FiniteHyperfield, A, B) -> frozenset:
    """Elementwise hyperunion of two nonempty sets of elements."""
    am, bm = mask_of(A), mask_of(B)
    if not am or not bm:
        raise HcoreError("hypersum of an empty set is undefined")
    return set_of(hypersum_masks(H, am, bm))


def nary_hypersum(H: FiniteHyperfield, xs) -> frozenset:
    """Left fold of hyperaddition over a nonempty element sequence."""
    xs = tuple(xs)
    if not xs:
        raise HcoreError("hypersum of an empty sequence is undefined")
    mask = 1 << xs[0]
    for x in xs[1:]:
        mask = hypersum_masks(H, mask, 1 << x)
    return set_of(mask)


def nary_hypersum_mask(H: FiniteHyperfield, xs) -> int:
    mask = 0
    first = True
    for x in xs:
        if first:
            mask, first = 1 << x, False
        else:
            mask = hypersum_masks(H, mask, 1 << x)
    if first:
        raise HcoreError("hypersum of an empty sequence is undefined")
    return mask


# -- axiom verification ---------------------------------------------


@dataclass(frozen=True)
class AxiomClause:
    name: str
    ok: bool
    witness: tuple[str, ...] | None
    detail: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    clauses: tuple[AxiomClause, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.clauses)

    def clause(self, name: str) -> AxiomClause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_record(self) -> dict:
        return {
            "passed": self.passed,
            "clauses": [
                {"name": c.name, "ok": c.ok,
                 "witness": list(c.witness) if c.witness else None,
                 "detail": c.detail}
                for c in self.clauses
            ],
        }


def verify_axioms(H: FiniteHyperfield) -> AxiomReport:
    """Exhaustive hyperfield-law check; first witness per clause."""
    n, zero, one = H.n, H.zero, H.one
    mul, add, neg = H._mul, H._add, H.neg
    rng = range(n)
    units = [i for i in rng if i != zero]
    clauses = []

    def done(name, witness=None, detail=None):
        clauses.append(AxiomClause(
            name, witness is None,
            tuple(H.names[i] for i in witness) if witness else None, detail))

    # multiplicative abelian group on the units: identity, closure,
    # commutativity, associativity, inverses (in that scan order)
    witness = detail = None
    for x in rng:
        if mul[one][x] != x:
            witness, detail = (x,), "identity"
            break
    if witness is None:
        for x in units:
            for y in units:
                if mul[x][y] == zero:
                    witness, detail = (x, y), "closure"
                    break
            if witness:
                break
    if witness is None:
        for x in rng:
            for y in rng:
                if mul[x][y] != mul[y][x]:
                    witness, detail = (x, y), "commutativity"
                    break
            if witness:
                break
    if witness is None:
        for x in rng:
            for y in rng:
                for z in rng:
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                        witness, detail = (x, y, z), "associativity"
                        break
                if witness:
                    break
            if witness:
                break
    if witness is None:
        for x in units:
            if all(mul[x][y] != one for y in units):
                witness, detail = (x,), "no inverse"
                break
    done("mul-group", witness, detail)

    witness = None
    for x in rng:
        if mul[zero][x] != zero or mul[x][zero] != zero:
            witness = (x,)
            break
    done("zero-absorbing", witness)

    witness = None
    for x in rng:
        mrow = mul[x]
        for y in rng:
            for z in rng:
                lhs = 0
                for s in bits(add[y][z]):
                    lhs |= 1 << mrow[s]
                if lhs != add[mrow[y]][mrow[z]]:
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    done("distributive-left", witness)

    witness = None
    for x in rng:
        for y in rng:
            for z in rng:
                lhs = 0
                for s in bits(add[y][z]):
                    lhs |= 1 << mul[s][x]
                if lhs != add[mul[y][x]][mul[z][x]]:
                    witness = (y, z, x)
                    break
            if witness:
                break
        if witness:
            break
    done("distributive-right", witness)

    witness = None
    for x in rng:
        for y in rng:
            m1 = add[x][y]
            for z in rng:
                lhs = 0
                for s in bits(m1):
                    lhs |= add[s][z]
                rhs = 0
                for s in bits(add[y][z]):
                    rhs |= add[x][s]
                if lhs != rhs:
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    done("add-associative", witness)

    witness = None
    for x in rng:
        for y in rng:
            if add[x][y] != add[y][x]:
                witness = (x, y)
                break
        if witness:
            break
    done("add-commutative", witness)

    witness = None
    for x in rng:
        if add[zero][x] != 1 << x:
            witness = (x,)
            break
    done("zero-identity", witness)

    witness = None
    for x in rng:
        inverses = [y for y in rng if add[x][y] >> zero & 1]
        if len(inverses) != 1 or inverses[0] != neg[x]:
            witness = (x, neg[x])
            break
    done("unique-inverses", witness)

    witness = None
    for y in rng:
        for z in rng:
            m = add[y][z]
            for x in rng:
                if bool(m >> x & 1) != bool(add[neg[x]][z] >> neg[y] & 1):
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    done("reversibility", witness)

    return AxiomReport(tuple(clauses))


def render_axiom_report(report: AxiomReport) -> str:
    lines = ["axioms: " + ("PASS" if report.passed else "FAIL")]
    for c in report.clauses:
        if c.ok:
            lines.append(f"  pass {c.name}")
        else:
            w = "(" + ", ".join(c.witness) + ")" if c.witness else ""
            extra = f" [{c.detail}]" if c.detail else ""
            lines.append(f"  FAIL {c.name}  witness {w}{extra}")
    return "\n".join(lines)


# -- builtin hyperfields --------------------------------------------


def builtin(name: str) -> FiniteHyperfield:
    """One of the three classical small hyperfields."""
    if name == "krasner":
        return FiniteHyperfield(
            ("0", "1"), 0, 1,
            mul=((0, 0), (0, 1)),
            add_masks=((0b01, 0b10), (0b10, 0b11)),
            neg=(0, 1))
    if name == "signs":
        return FiniteHyperfield(
            ("0", "1", "-1"), 0, 1,
            mul=((0, 0, 0), (0, 1, 2), (0, 2, 1)),
            add_masks=((0b001, 0b010, 0b100),
                       (0b010, 0b010, 0b111),
                       (0b100, 0b111, 0b100)),
            neg=(0, 2, 1))
    if name == "weak_signs":
        return FiniteHyperfield(
            ("0", "1", "-1"), 0, 1,
            mul=((0, 0, 0), (0, 1, 2), (0, 2, 1)),
            add_masks=((0b001, 0b010, 0b100),
                       (0b010, 0b110, 0b111),
                       (0b100, 0b111, 0b110)),
            neg=(0, 2, 1))
    raise HcoreError(f"unknown builtin {name!r}"
                     " (expected krasner, signs, or weak_signs)")


BUILTIN_NAMES = ("krasner", "signs", "weak_signs")


def field_hyperfield(F) -> FiniteHyperfield:
    """A field viewed as a hyperfield: every sum is a singleton."""
    if F.order > MAX_CARRIER:
        raise HcoreError(f"field too large for a table hyperfield"
                         f" ({F.order} > {MAX_CARRIER})")
    names = tuple(F.name(x) for x in F.elements())
    mul = tuple(tuple(F.mul(a, b) for b in F.elements()) for a in F.elements())
    add = tuple(tuple(1 << F.add(a, b) for b in F.elements())
                for a in F.elements())
    neg = tuple(F.neg(a) for a in F.elements())
    return FiniteHyperfield(names, 0, F.one, mul, add, neg)


def massouros_instance(n: int) -> FiniteHyperfield:
    """Cyclic-group construction from the classical literature: carrier is
    a cyclic group of order n plus 0, with x (+) y = {x, y} for distinct
    nonzero x, y and x (+) x = everything except x.  Validated through
    verify_axioms; kept out of the reproduction pipeline by design."""
    if not 2 <= n <= 16:
        raise HcoreError(f"group order {n} outside 2..16")
    names = ("0", "1") + tuple(
        "g" if e == 1 else f"g^{e}" for e in range(1, n))
    m = n + 1
    full = (1 << m) - 1

    def gmul(i, j):
        if i == 0 or j == 0:
            return 0
        return (i - 1 + j - 1) % n + 1

    mul = tuple(tuple(gmul(i, j) for j in range(m)) for i in range(m))
    add = []
    for i in range(m):
        row = []
        for j in range(m):
            if i == 0:
                row.append(1 << j)
            elif j == 0:
                row.append(1 << i)
            elif i == j:
                row.append(full & ~(1 << i))
            else:
                row.append(1 << i | 1 << j)
        add.append(tuple(row))
    return FiniteHyperfield(names, 0, 1, mul, tuple(add),
                            neg=tuple(range(m)))


# -- exchange format ------------------------------------------------


RECORD_KEYS = ("elements", "zero", "one", "neg", "mul", "add")


def to_record(H: FiniteHyperfield) -> dict:
    """Plain-data form of the tables, stable key and cell order."""
    return {
        "elements": list(H.names),
        "zero": H.names[H.zero],
        "one": H.names[H.one],
        "neg": {H.names[i]: H.names[H.neg[i]] for i in range(H.n)},
        "mul": [[H.names[H.mul(i, j)] for j in range(H.n)]
                for i in range(H.n)],
        "add": [[[H.names[b] for b in sorted(bits(H.add_mask(i, j)))]
                 for j in range(H.n)] for i in range(H.n)],
    }


def from_record(record: dict) -> FiniteHyperfield:
    """Rebuild a hyperfield from its record; strict validation."""
    if not isinstance(record, dict):
        raise HcoreError("hyperfield record must be an object")
    missing = [k for k in RECORD_KEYS if k not in record]
    if missing:
        raise HcoreError(f"record missing keys: {', '.join(missing)}")
    extra = [k for k in record if k not in RECORD_KEYS]
    if extra:
        raise HcoreError(f"record has unknown keys: {', '.join(extra)}")
    names = record["elements"]
    if (not isinstance(names, list)
            or not all(isinstance(s, str) for s in names)):
        raise HcoreError("elements must be a list of strings")
    index = {s: i for i, s in enumerate(names)}
    if len(index) != len(names):
        raise HcoreError("carrier names must be unique")

    def look(s):
        if s not in index:
            raise HcoreError(f"record references unknown element {s!r}")
        return index[s]

    zero, one = look(record["zero"]), look(record["one"])
    negmap = record["neg"]
    if not isinstance(negmap, dict) or set(negmap) != set(names):
        raise HcoreError("neg must map every element name")
    neg = tuple(look(negmap[s]) for s in names)
    mul_rows = record["mul"]
    add_rows = record["add"]
    n = len(names)
    if len(mul_rows) != n or any(len(r) != n for r in mul_rows):
        raise HcoreError("mul must be an n x n table of names")
    if len(add_rows) != n or any(len(r) != n for r in add_rows):
        raise HcoreError("add must be an n x n table of name lists")
    mul = tuple(tuple(look(v) for v in row) for row in mul_rows)
    add = []
    for row in add_rows:
        cells = []
        for cell in row:
            if not isinstance(cell, list) or not cell:
                raise HcoreError("every addition cell must be a nonempty list")
            cells.append(mask_of(look(v) for v in cell))
        add.append(tuple(cells))
    return FiniteHyperfield(names, zero, one, mul, tuple(add), neg)


def to_json(H: FiniteHyperfield) -> str:
    return json.dumps(to_record(H), indent=2, ensure_ascii=False)


def from_json(text: str) -> FiniteHyperfield:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HcoreError(f"bad JSON: {exc}") from None
    return from_record(record)


# -- table rendering ------------------------------------------------


def _grid(header: list[str], rows: list[list[str]]) -> str:
    table = [header] + rows
    widths = [max(len(r[c]) for r in table) for c in range(len(header))]
    out = []
    for r, row in enumerate(table):
        out.append(" | ".join(cell.ljust(widths[c])
                              for c, cell in enumerate(row)).rstrip())
        if r == 0:
            out.append("-+-".join("-" * w for w in widths))
    return "\n".join(out)


def render_tables(H: FiniteHyperfield) -> str:
    """Addition table over the carrier, multiplication over the units."""

    def cell(i, j):
        return "{" + ", ".join(H.names[b]
                               for b in sorted(bits(H.add_mask(i, j)))) + "}"

    order = list(range(H.n))
    add_rows = [[H.names[i]] + [cell(i, j) for j in order] for i in order]
    add = _grid(["⊞"] + [H.names[j] for j in order], add_rows)
    units = H.units()
    mul_rows = [[H.names[i]] + [H.names[H.mul(i, j)] for j in units]
                for i in units]
    mul = _grid(["⊙"] + [H.names[j] for j in units], mul_rows)
    return add + "\n\n" + mul
