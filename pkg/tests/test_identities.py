"""The identity registry: every derived identity holds exactly, printed defects are flagged."""

import json

import pytest

from cyclicquad import identities as I
from cyclicquad.identities import REGISTRY, SUITES, registry_ids, verify, verify_all
from cyclicquad.poly import parse

# entries whose printed form disagrees with the derived one (the derived one is exact)
CORRECTED = {"I-F0-RAT", "I-T-TRANSCRIPTION", "I-CASE-YXZ", "I-63", "I-65-D", "I-P3", "I-63Q", "I-APP"}


@pytest.fixture(scope="module")
def ledger():
    return verify_all()


def test_nothing_fails(ledger):
    assert ledger.ok
    assert ledger.totals["failed"] == 0
    assert ledger.totals["total"] == len(REGISTRY)


@pytest.mark.parametrize("id_", sorted(REGISTRY))
def test_status(ledger, id_):
    rec = next(r for r in ledger.records if r.id == id_)
    assert all(c.ok for c in rec.checks if c.required)
    assert rec.status == ("corrected" if id_ in CORRECTED else "verified")


def test_corrected_entries_carry_witnesses(ledger):
    for rec in ledger.records:
        if rec.status == "corrected":
            assert rec.printed_ok is False
            assert all(c.witness for c in rec.failures())


def test_known_constants(ledger):
    by_id = {r.id: r for r in ledger.records}
    assert by_id["I-PTOLEMY-RAT"].constant == "-4"
    assert by_id["I-CM-EXPANSION"].constant == "-2"
    assert by_id["I-RR-FACT"].constant == "4"


def test_t_transcription_names_the_bad_monomial(ledger):
    rec = next(r for r in ledger.records if r.id == "I-T-TRANSCRIPTION")
    text = " ".join(c.witness or "" for c in rec.failures())
    assert "x^2*y*z^2*u" in text.replace(" ", "") or "x^2*y*z*u^2" in text.replace(" ", "")


def test_suites_partition_registry():
    tagged = set()
    for name, tag in SUITES.items():
        if tag is not None:
            tagged |= set(registry_ids(tag))
    assert tagged == set(REGISTRY)
    assert registry_ids("appendix") == ["I-APP"]


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify("I-NOPE")


def test_factored_helper_reports_cofactor():
    ok = I.factored("ok", parse("2*(x-y)*(x+y)"), [parse("x-y"), parse("x+y")], constant=2)
    assert ok.ok and ok.constant == "2"
    bad = I.factored("bad", parse("(x-y)*(x+y+1)"), [parse("x-y")])
    assert not bad.ok and "cofactor" in bad.witness
    nondiv = I.factored("nd", parse("x^2+1"), [parse("x-1")])
    assert not nondiv.ok and "not divisible" in nondiv.witness
    wrong_k = I.factored("k", parse("3*x"), [parse("x")], constant=2)
    assert not wrong_k.ok


def test_json_is_stable_without_timing():
    a = verify_all(tag="core").to_json(timing=False)
    b = verify_all(tag="core").to_json(timing=False)
    assert a == b
    data = json.loads(a)
    assert {r["id"] for r in data["records"]} == set(registry_ids("core"))
