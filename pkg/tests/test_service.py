import copy

from fastapi.testclient import TestClient

from hyperlab.hcore import builtin, from_record, render_tables, to_record
from hyperlab.service.app import app

client = TestClient(app)


def test_healthz():
    r = client.get("/healthz")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_build_builtin_table():
    r = client.post("/api/build", json={"spec": {"builtin": "signs"}})
    assert r.status_code == 200
    body = r.json()
    assert body["name"] == "signs" and body["size"] == 3
    assert body["text"] == render_tables(builtin("signs"))
    assert "record" not in body


def test_build_quotient_listing():
    r = client.post("/api/build", json={
        "spec": {"field": 49, "modulus": "1,0,1",
                 "subgroup": "squares-of-base"}})
    assert r.status_code == 200
    body = r.json()
    assert body["name"] == "F49/sq" and body["size"] == 17
    lines = body["text"].splitlines()
    assert len(lines) == 17
    assert lines[0] == "[0] = {0}"
    assert lines[-1] == "[-i-3] = {-i-3, -2i+1, 3i+2}"


def test_build_records_round_trip():
    r = client.post("/api/build", json={"spec": {"builtin": "weak_signs"},
                                        "format": "records"})
    body = r.json()
    assert "text" not in body
    rec = body["record"]
    assert rec == to_record(builtin("weak_signs"))
    assert to_record(from_record(rec)) == rec
    # records describe a hyperfield the service accepts back
    r2 = client.post("/api/verify", json={"spec": {"record": rec}})
    assert r2.json()["passed"] is True


def test_verify_pass_and_fail():
    r = client.post("/api/verify", json={"spec": {"builtin": "krasner"}})
    body = r.json()
    assert body["passed"] is True
    assert body["text"].splitlines()[0] == "axioms: PASS"
    assert body["record"]["passed"] is True

    broken = copy.deepcopy(to_record(builtin("signs")))
    broken["add"][1][1] = ["-1"]    # 1 (+) 1 = {-1} kills reversibility
    r = client.post("/api/verify", json={"spec": {"record": broken}})
    body = r.json()
    assert r.status_code == 200 and body["passed"] is False
    bad = [c["name"] for c in body["record"]["clauses"] if not c["ok"]]
    assert "reversibility" in bad


def test_eval_and_roots():
    r = client.post("/api/eval", json={
        "spec": {"builtin": "signs"}, "poly": "1 + T^2", "at": "1"})
    assert r.json() == {"values": ["1"]}
    r = client.post("/api/roots", json={
        "spec": {"builtin": "weak_signs"}, "poly": "1 + T^2"})
    assert r.json() == {"roots": []}
    r = client.post("/api/roots", json={
        "spec": {"field": 49, "modulus": "1,0,1",
                 "subgroup": "squares-of-base"},
        "poly": "1 + T^2"})
    assert r.json() == {"roots": ["[i]", "[-i]"]}


def test_extend_endpoint():
    r = client.post("/api/extend", json={
        "field": 7, "subgroup": "squares", "poly": "1 + T^2"})
    assert r.status_code == 200
    body = r.json()
    assert body["text"].splitlines() == [
        "L = F49/sq, root [i]",
        "|L^x| = 16; modulus x^2 + 1",
        "embedding (strong): [0] -> [0], [1] -> [1], [-1] -> [-1]",
    ]
    assert body["record"] == {
        "base": "F7/sq", "extension": "F49/sq", "units": 16,
        "modulus": "x^2 + 1", "root": "[i]", "grade": "strong",
        "embedding": "[0] -> [0], [1] -> [1], [-1] -> [-1]",
    }


def test_minimal_endpoint():
    r = client.post("/api/minimal", json={
        "field": 7, "poly": "1 + T^2"})
    body = r.json()
    assert body["minimal"] is True
    assert body["text"].endswith("verdict: minimal")
    assert body["record"]["minimal"] is True
    r = client.post("/api/minimal", json={
        "field": 11, "poly": "1 + T^2", "exhaustive": True})
    body = r.json()
    assert body["minimal"] is False
    assert body["text"].endswith("not minimal (a weak substructure exists)")


def test_experiment_endpoint():
    r = client.post("/api/reproduce-paper")
    body = r.json()
    assert body["verdict"] == ("two non-isomorphic minimal extensions: "
                               "|L1^x|=16, |L2^x|=24")
    assert body["text"].splitlines()[-1] == body["verdict"]
    assert body["record"]["steps"][0]["title"] == \
        "no roots over the base quotients"


def test_error_statuses():
    r = client.post("/api/build", json={"spec": {"field": 6}})
    assert r.status_code == 400
    assert "not a prime power" in r.json()["detail"]
    r = client.post("/api/build", json={"spec": {"builtin": "signs",
                                                 "bogus": 1}})
    assert r.status_code == 422
    r = client.post("/api/build", json={"spec": {"builtin": "signs",
                                                 "field": 7}})
    assert r.status_code == 422
    r = client.post("/api/verify", json={"spec": {"record": {}}})
    assert r.status_code == 400
    r = client.post("/api/roots", json={"spec": {"builtin": "signs"},
                                        "poly": "1 + Q"})
    assert r.status_code == 400
    assert "at 4" in r.json()["detail"]
    r = client.post("/api/build", json={"spec": {"field": 49,
                                                 "modulus": "1,x,1"}})
    assert r.status_code == 400
    r = client.post("/api/extend", json={"field": 7, "subgroup": "full",
                                         "poly": "1 + T^2"})
    assert r.status_code == 400
    assert "already has roots" in r.json()["detail"]
