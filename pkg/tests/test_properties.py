"""Randomized law suites, 10^4 cases each at a fixed seed."""

import random

from hyperlab.extend import build_root_extension
from hyperlab.ffield import (
    FieldPolynomial,
    make_prime_field,
    squares_subgroup,
    subgroup_from_generators,
)
from hyperlab.hcore import (
    bits,
    builtin,
    field_hyperfield,
    nary_hypersum_mask,
)
from hyperlab.hpoly import (
    HyperPolynomial,
    induce,
    induced_eval_covers,
    lift,
    parse_hpoly,
)
from hyperlab.morph import classify_map, collapse_to_krasner, find_embeddings, identity_map
from hyperlab.quotient import build_quotient

CASES = 10_000
SEED = 20260822


def quotient_pool():
    out = []
    for p in (7, 11):
        F = make_prime_field(p)
        qs = build_quotient(F, squares_subgroup(F))
        out.append(qs)
        ext = build_root_extension(qs, parse_hpoly(qs.hyperfield, "1 + T^2"))
        out.append(ext.ext)
    F13 = make_prime_field(13)
    out.append(build_quotient(F13, subgroup_from_generators(F13, [3])))
    return out


POOL = quotient_pool()


def test_induced_eval_membership():
    rng = random.Random(SEED)
    for _ in range(CASES):
        qs = rng.choice(POOL)
        deg = rng.randrange(1, 4)
        coeffs = [rng.randrange(qs.field.order) for _ in range(deg + 1)]
        f = FieldPolynomial(qs.field, tuple(coeffs))
        if f.is_zero():
            continue
        x = rng.randrange(qs.field.order)
        assert induced_eval_covers(qs, f, x)


def test_setsum_implies_hypersum_membership():
    rng = random.Random(SEED + 1)
    for _ in range(CASES):
        qs = rng.choice(POOL)
        xs = [rng.randrange(qs.field.order)
              for _ in range(rng.randrange(2, 5))]
        z = 0
        for x in xs:
            z = qs.field.add(z, x)
        mask = nary_hypersum_mask(qs.hyperfield,
                                  [qs.class_of(x) for x in xs])
        assert mask >> qs.class_of(z) & 1


def test_induce_after_lift_is_identity():
    rng = random.Random(SEED + 2)
    for _ in range(CASES):
        qs = rng.choice(POOL)
        deg = rng.randrange(0, 4)
        coeffs = [rng.randrange(qs.n) for _ in range(deg)]
        coeffs.append(rng.randrange(1, qs.n))    # nonzero lead
        p = HyperPolynomial(qs.hyperfield, tuple(coeffs))
        assert induce(qs, lift(qs, p)) == p


def hyperfield_pool():
    out = [builtin(n) for n in ("krasner", "signs", "weak_signs")]
    out += [field_hyperfield(make_prime_field(p)) for p in (2, 3, 5, 7, 11, 13)]
    out += [qs.hyperfield for qs in POOL]
    return out


def test_collapse_is_weak():
    structures = hyperfield_pool()
    maps = [collapse_to_krasner(H) for H in structures]
    for m in maps:
        assert classify_map(m) in ("weak", "strong")
    rng = random.Random(SEED + 3)
    K = builtin("krasner")
    for _ in range(CASES):
        m = rng.choice(maps)
        H = m.source
        x, y = rng.randrange(H.n), rng.randrange(H.n)
        image = {m.images[t] for t in bits(H.add_mask(x, y))}
        target = K.add_set(m.images[x], m.images[y])
        assert image <= target


def test_strong_implies_weak():
    structures = hyperfield_pool()
    maps = [identity_map(H) for H in structures]
    maps += [collapse_to_krasner(H) for H in structures]
    W, S = builtin("weak_signs"), builtin("signs")
    maps += [m for m, _ in find_embeddings(W, POOL[1].hyperfield, "weak")]
    maps += [m for m, _ in find_embeddings(S, S, "weak")]
    graded = [(m, classify_map(m)) for m in maps]
    assert any(g == "strong" for _, g in graded)
    rng = random.Random(SEED + 4)
    for _ in range(CASES):
        m, grade = rng.choice(graded)
        H, L = m.source, m.target
        x, y = rng.randrange(H.n), rng.randrange(H.n)
        image = {m.images[t] for t in bits(H.add_mask(x, y))}
        target = L.add_set(m.images[x], m.images[y])
        if grade == "strong":
            assert image == target
        if grade in ("weak", "strong"):
            assert image <= target
