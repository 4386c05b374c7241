from fastapi.testclient import TestClient

from equisurf.service import app

client = TestClient(app)


def test_healthz():
    r = client.get("/healthz")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_classify_ok():
    r = client.post("/classify", json={"expr": "Sph(1,2)"})
    assert r.status_code == 200
    body = r.json()
    assert body["name"] == "Sph_8[4]"
    assert body["family"] == "SPH"
    assert body["invariants"]["beta"] == 16
    assert body["quotient"] == "M_2"
    assert body["underlying"] == "M_8"


def test_classify_parse_error():
    r = client.post("/classify", json={"expr": "Sph(1"})
    assert r.status_code == 400
    assert r.json()["detail"]["kind"] == "parse"


def test_classify_semantic_error():
    r = client.post("/classify", json={"expr": "NEven(0,0)"})
    assert r.status_code == 422
    assert r.json()["detail"]["kind"] == "semantic"


def test_cohomology_json():
    r = client.post("/cohomology", json={"expr": "NOdd(0,0)"})
    assert r.status_code == 200
    body = r.json()
    assert body["rendered"] is None
    assert body["answer"]["summands"] == [
        {"kind": "M3", "shift": [0, 0], "multiplicity": 1}
    ]
    assert all(body["answer"]["checks"].values())


def test_cohomology_ascii():
    r = client.post(
        "/cohomology",
        json={"expr": "MFree(0)", "format": "ascii", "window": "-2:2,-1:1"},
    )
    assert r.status_code == 200
    assert "1 2 1" in r.json()["rendered"]


def test_cohomology_bad_window():
    r = client.post("/cohomology", json={"expr": "Sph(0,0)", "window": "oops"})
    assert r.status_code == 400
    assert r.json()["detail"]["kind"] == "parse"


def test_ext_endpoint():
    r = client.post("/ext", json={"target": "M3@2,1"})
    assert r.status_code == 200
    body = r.json()
    assert body["target"] == "S{2,1}M3"
    assert body["ext1"] == 0
    assert body["dim_hom_f1"] == 2


def test_ext_bad_target():
    r = client.post("/ext", json={"target": "M5"})
    assert r.status_code == 400


def test_verify_axioms_suite():
    r = client.post("/verify", json={"suite": "axioms"})
    assert r.status_code == 200
    assert r.json()["passed"] is True


def test_verify_unknown_suite():
    r = client.post("/verify", json={"suite": "bogus"})
    assert r.status_code == 422


def test_replay_fixture():
    r = client.post("/replay", json={"case": "n1_bracket"})
    assert r.status_code == 200
    body = r.json()
    assert body["report"]["ok"] is True
    assert body["report"]["unique"] is True
    assert body["case"]["middle"] == "M3"
    assert body["extension"] == "n/a (nonzero differential)"


def test_replay_factory_case():
    r = client.post("/replay", json={"case": "free_nonor_r1", "window": "-5:5,-5:5"})
    assert r.status_code == 200
    body = r.json()
    assert body["report"]["ok"] is True
    assert body["extension"] == "unresolved"


def test_replay_unknown():
    r = client.post("/replay", json={"case": "zzz"})
    assert r.status_code == 422


def test_replay_case_list():
    r = client.get("/replay/cases")
    names = r.json()["cases"]
    assert "eb_cone" in names
    assert "poly_base" in names
