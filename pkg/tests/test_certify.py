"""Farkas certificates, separation witnesses, and the scan reports."""

from fractions import Fraction

import pytest

from ingletonlp import certify, ingen
from ingletonlp.entspace import (
    GroundSetError,
    IngletonQuad,
    evaluate,
    ingleton_expr,
    parse_expr,
)


def delta_exprs(n):
    return [ci.expr for ci in ingen.gen_delta(n)]


def elemental_exprs(n):
    return [ci.expr for ci in ingen.gen_elemental(n)]


# ---------------------------------------------------------------------------
# certificates


def test_conic_implies_finds_exact_combination():
    gens = delta_exprs(3)
    target = ingleton_expr(IngletonQuad(3, 0b1, 0b10, 0, 0b100))
    cert = certify.conic_implies(target, gens)
    assert cert is not None
    assert all(cf > 0 for cf in cert.coeffs)
    assert all(isinstance(cf, Fraction) for cf in cert.coeffs)
    assert certify.verify_certificate(target, gens, cert)
    # re-verify by hand: the combination reproduces the target exactly
    combo = sum((cf * gens[k] for k, cf in zip(cert.gen_ids, cert.coeffs)),
                start=parse_expr("0", 3))
    assert combo == target


def test_verify_certificate_rejects_tampered_coeffs():
    gens = delta_exprs(3)
    target = gens[0] + gens[1]
    cert = certify.conic_implies(target, gens)
    assert cert is not None and certify.verify_certificate(target, gens, cert)
    bad = certify.FarkasCertificate(cert.gen_ids,
                                    tuple(cf + 1 for cf in cert.coeffs))
    assert not certify.verify_certificate(target, gens, bad)


def test_verify_certificate_rejects_negative_multiplier():
    gens = delta_exprs(3)
    target = gens[0] - gens[1]  # needs a negative weight: not conic
    cert = certify.FarkasCertificate((0, 1), (Fraction(1), Fraction(-1)))
    assert not certify.verify_certificate(target, gens, cert)
    assert certify.conic_implies(target, gens) is None


def test_separation_witness_when_not_implied():
    gens = elemental_exprs(4)
    target = ingleton_expr(IngletonQuad(4, 0b1, 0b10, 0b100, 0b1000))
    assert certify.conic_implies(target, gens) is None
    wit = certify.separation_witness(target, gens)
    assert wit is not None
    assert certify.verify_witness(target, gens, wit)
    assert evaluate(target, wit.point) < 0
    assert all(evaluate(g, wit.point) >= 0 for g in gens)


def test_separation_witness_absent_when_implied():
    gens = delta_exprs(3)
    target = gens[2] + gens[5]
    assert certify.separation_witness(target, gens) is None


def test_certificate_file_roundtrip(tmp_path):
    gens = delta_exprs(3)
    items = []
    for idx in (0, 3):
        target = gens[idx]
        cert = certify.conic_implies(target, gens)
        items.append((f"member-{idx}", cert))
    path = tmp_path / "certs.txt"
    certify.write_certificates(path, items)
    back = certify.read_certificates(path)
    assert back == items


def test_witness_file_roundtrip(tmp_path):
    gens = elemental_exprs(4)
    target = ingleton_expr(IngletonQuad(4, 0b1, 0b10, 0b100, 0b1000))
    wit = certify.separation_witness(target, gens)
    path = tmp_path / "wit.txt"
    certify.write_witnesses(path, 4, [("gap", wit)])
    n, back = certify.read_witnesses(path)
    assert n == 4
    label, w2 = back[0]
    assert label == "gap"
    assert all(w2.point[m] == wit.point[m] for m in range(1, 16))


# ---------------------------------------------------------------------------
# scans


def test_theorem1_n3_every_orbit_implied():
    rep = certify.check_theorem1(3)
    assert (rep.quads, rep.classes, rep.orbits) == (4096, 1296, 291)
    assert rep.implied == 291 and rep.not_implied == 0
    assert not rep.counterexamples
    assert rep.ok
    assert rep.to_text().endswith("status ok\n")


def test_theorem1_sampled_mode_is_deterministic():
    a = certify.check_theorem1(5, sample=200, seed=11)
    b = certify.check_theorem1(5, sample=200, seed=11)
    assert a.to_text() == b.to_text()
    assert a.mode == "sample"
    assert a.ok


def test_theorem1_worker_count_does_not_change_report():
    a = certify.check_theorem1(3, workers=1)
    b = certify.check_theorem1(3, workers=2)
    assert a.to_text() == b.to_text()


def test_completeness_n3_certifies_every_class():
    rep = certify.check_completeness(3)
    assert rep.mode == "exhaustive"
    assert (rep.quads, rep.classes, rep.orbits) == (4096, 1296, 291)
    assert rep.certified == 1296
    assert len(rep.certificates) == 1296
    assert rep.ok and not rep.failures
    assert rep.to_text().endswith("status ok\n")


def test_completeness_sampled_mode():
    rep = certify.check_completeness(5, sample_size=50, seed=3)
    assert rep.mode == "sample"
    assert rep.certified == rep.samples == 50
    assert rep.ok


def test_minimality_n3_no_member_redundant():
    rep = certify.check_minimality(3)
    assert rep.members == 9
    assert len(rep.witnesses) == 9
    assert not rep.redundant
    assert rep.ok
    # each witness drives its own member negative while the rest stay >= 0
    gens = delta_exprs(3)
    members = ingen.gen_delta(3)
    by_payload = {(ci.kind, ci.payload_text()): k
                  for k, ci in enumerate(members)}
    for kind, payload, wit in rep.witnesses:
        k = by_payload[(kind, payload)]
        assert evaluate(gens[k], wit.point) == -1
        rest = gens[:k] + gens[k + 1:]
        assert all(evaluate(g, wit.point) >= 0 for g in rest)


def test_minimality_refuses_large_n_without_optin():
    with pytest.raises(ValueError):
        certify.check_minimality(6)


# ---------------------------------------------------------------------------
# named violator


def test_violator_below_four_elements_is_impossible():
    with pytest.raises(GroundSetError):
        certify.find_ingleton_violator(3)


def test_violator_scales_with_ground_set():
    v4 = certify.find_ingleton_violator(4)
    assert v4.n == 4 and v4[0b1111] == 1
    v5 = certify.find_ingleton_violator(5)
    assert v5.n == 5
    q5 = IngletonQuad(5, 0b1, 0b10, 0b100, 0b1000)
    assert evaluate(ingleton_expr(q5), v5) < 0
