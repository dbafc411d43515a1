"""Acceptance gate: eleven criteria, one test and one verdict line each."""

import random
from fractions import Fraction
from pathlib import Path

from hyperlab.cli import main
from hyperlab.extend import (
    build_root_extension,
    certify_minimal,
    nonuniqueness_experiment,
)
from hyperlab.ffield import make_prime_field, full_subgroup, squares_subgroup
from hyperlab.hcore import builtin, field_hyperfield, verify_axioms
from hyperlab.hpoly import mul_multivalued, parse_hpoly, render_hpoly, root_names, roots
from hyperlab.morph import (
    classify_map,
    cyclic_generator,
    find_embeddings,
    is_isomorphic,
    lagrange_obstruction,
    make_map,
)
from hyperlab.phase import ArcSet, PHASE_ZERO, phase, phase_hyperfield
from hyperlab.quotient import build_quotient, class_listing

import test_properties


def quotient(p, sub=squares_subgroup):
    F = make_prime_field(p)
    return build_quotient(F, sub(F))


Q7 = quotient(7)
Q11 = quotient(11)
EXT7 = build_root_extension(Q7, parse_hpoly(Q7.hyperfield, "1 + T^2"))
EXT11 = build_root_extension(Q11, parse_hpoly(Q11.hyperfield, "1 + T^2"))
L1 = EXT7.ext
L2 = EXT11.ext

SUM_1_I = {"[i+1]", "[i+2]", "[i-3]"}
SUM_I_I1 = {"[i-3]", "[-i-3]", "[-i+2]"}


def verdict(n, label):
    print(f"criterion {n}: PASS - {label}")


def test_criterion_01_axiom_sweep():
    structures = [builtin(n) for n in ("krasner", "signs", "weak_signs")]
    structures += [field_hyperfield(make_prime_field(p))
                   for p in (2, 3, 5, 7, 11, 13)]
    structures += [Q7.hyperfield, Q11.hyperfield,
                   L1.hyperfield, L2.hyperfield]
    for H in structures:
        report = verify_axioms(H)
        assert report.passed, (H, report)
    verdict(1, "axiom sweep over builtins, prime fields, quotients")


def test_criterion_02_quotient_identities():
    W = builtin("weak_signs")
    for qs in (Q7, Q11):
        ok, m = is_isomorphic(qs.hyperfield, W)
        assert ok and m.is_injective() and classify_map(m) == "strong"
    K = builtin("krasner")
    for p in (5, 7):
        ok, m = is_isomorphic(quotient(p, full_subgroup).hyperfield, K)
        assert ok and m is not None
    verdict(2, "quotient isomorphism identities")


def test_criterion_03_golden_class_listing():
    qs = L1
    text = class_listing(qs)
    want = (Path(__file__).parent / "golden" / "f49_sq_listing.txt").read_text()
    assert text + "\n" == want
    assert qs.n - 1 == 16
    g = cyclic_generator(qs.hyperfield)
    assert g is not None and qs.hyperfield.name(g) == "[i+2]"
    verdict(3, "golden 17-class listing, cyclic unit group of order 16")


def test_criterion_04_golden_hypersums():
    H = L1.hyperfield
    one, i = H.index("[1]"), H.index("[i]")
    i1 = H.index("[i+1]")
    assert set(H.names_of(H.add_set(one, i))) == SUM_1_I
    assert set(H.names_of(H.add_set(i, i1))) == SUM_I_I1
    verdict(4, "golden hypersums in F49/sq")


def test_criterion_05_roots():
    for name in ("weak_signs", "signs"):
        H = builtin(name)
        assert roots(parse_hpoly(H, "1 + T^2")) == []
    assert root_names(parse_hpoly(L1.hyperfield, "1 + T^2")) == \
        ["[i]", "[-i]"]
    verdict(5, "rootless bases, roots {[i], [-i]} in F49/sq")


def test_criterion_06_extension_pipeline():
    assert EXT7.grade == "strong"
    assert classify_map(EXT7.embedding) == "strong"
    assert EXT7.root in roots(EXT7.image_poly)
    assert EXT11.grade == "strong"
    assert EXT11.root in roots(EXT11.image_poly)
    assert L2.n - 1 == 24
    verdict(6, "root extension pipeline, strong embeddings, |L2^x| = 24")


def test_criterion_07_minimality():
    cert = certify_minimal(EXT7)
    assert cert.minimal
    assert [c.size for c in cert.candidates] == [4, 8]
    assert all(c.obstructed for c in cert.candidates)
    H = L1.hyperfield
    c4, c8 = cert.candidates
    # the order-4 witness carries the first golden sum
    assert set(H.names_of(H.add_set(*c4.witness))) == SUM_1_I
    # the order-8 witness list carries the second golden sum's pair
    pair = (H.index("[i]"), H.index("[i+1]"))
    assert pair in c8.all_witnesses
    assert set(H.names_of(H.add_set(*pair))) == SUM_I_I1
    verdict(7, "minimality certificate with the golden obstruction pairs")


def test_criterion_08_nonuniqueness(capsys):
    msg = lagrange_obstruction(L1.hyperfield, L2.hyperfield)
    assert msg == "|K^x| = 16 does not divide |L^x| = 24"
    assert find_embeddings(L1.hyperfield, L2.hyperfield, "weak") == []
    line = ("two non-isomorphic minimal extensions: "
            "|L1^x|=16, |L2^x|=24")
    assert nonuniqueness_experiment().verdict == line
    code = main(["reproduce-paper"])
    out = capsys.readouterr().out
    assert code == 0 and out.splitlines()[-1] == line
    verdict(8, "no embedding L1 -> L2, experiment verdict reproduced")


def test_criterion_09_multivalued_product():
    S = builtin("signs")
    p = parse_hpoly(S, "1 + T")
    q = parse_hpoly(S, "-1 + T")
    got = {render_hpoly(r) for r in mul_multivalued(p, q)}
    assert got == {"-1+T^2", "-1+-1T+T^2", "-1+T+T^2"}
    verdict(9, "multivalued product over signs: three expansions")


def test_criterion_10_property_suites():
    test_properties.test_induced_eval_membership()
    test_properties.test_setsum_implies_hypersum_membership()
    test_properties.test_induce_after_lift_is_identity()
    test_properties.test_collapse_is_weak()
    test_properties.test_strong_implies_weak()
    verdict(10, "five randomized law suites, 10^4 cases each")


def test_criterion_11_phase_oracle():
    P = phase_hyperfield()
    i, mi = phase(Fraction(1, 4)), phase(Fraction(3, 4))
    got = P.pair_arcset(i, mi)
    assert got == ArcSet(True, False,
                         frozenset({Fraction(1, 4), Fraction(3, 4)}), ())
    assert P.member(PHASE_ZERO, i, mi)
    assert P.member(i, i, mi) and P.member(mi, i, mi)
    assert not P.member(phase(Fraction(0)), i, mi)

    S = builtin("signs")
    m = make_map(S, P, {"0": "0", "1": "e(0)", "-1": "e(1/2)"})
    assert classify_map(m) == "strong"

    rng = random.Random(4049)
    for _ in range(10_000):
        x, y, w = (P.sample(rng) for _ in range(3))
        left = P.sum_point(P.pair_arcset(x, y), w)
        right = P.sum_point(P.pair_arcset(y, w), x)
        assert left == right, (x, y, w)
        t = P.sample(rng)
        assert P.member(t, x, y) == P.member(P.neg(x), P.neg(t), y)
    verdict(11, "phase memberships, strong sign embedding, 10^4 triples")
