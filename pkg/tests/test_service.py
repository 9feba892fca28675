import pytest
from fastapi.testclient import TestClient

from fuchskit.service import app

client = TestClient(app)


def test_analyze_catalog():
    r = client.post("/analyze", json={"operator": {"catalog": "G54"}})
    assert r.status_code == 200
    body = r.json()
    assert body["schema"] == "fuchskit-report/1"
    assert body["fuchsian"] is True
    assert len(body["places"]) == 4
    for entry in body["places"]:
        assert entry["exponents"] == ["-1/6", "1/3", "4/3"]
        assert entry["ram_index"] == 2
    assert body["places"][-1]["place"] == {"type": "infinity", "min_poly": None}
    assert body["fuchs_relation"]["ok"] is True


def test_analyze_with_genus():
    r = client.post("/analyze", json={"operator": {"catalog": "H72"}, "group_order": 72})
    assert r.status_code == 200
    g = r.json()["genus"]
    assert g == {"hurwitz_sum": "9/4", "group_order": 72, "base_genus": 0, "genus": "10"}


def test_analyze_coefficients():
    r = client.post("/analyze", json={"operator": {"coefficients": ["0", "0"]}})
    assert r.status_code == 200
    assert r.json()["places"] == [
        {
            "place": {"type": "infinity", "min_poly": None},
            "exponents": ["-1", "0"],
            "delta": "0",
            "ram_index": 1,
            "apparent": False,
        }
    ]


def test_operator_input_validation():
    r = client.post("/analyze", json={"operator": {}})
    assert r.status_code == 422
    r = client.post(
        "/analyze", json={"operator": {"catalog": "G54", "coefficients": ["0"]}}
    )
    assert r.status_code == 422


def test_domain_errors_are_422():
    r = client.post("/analyze", json={"operator": {"coefficients": ["1/(x-x)"]}})
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "DivisionByZeroFunction"
    r = client.post("/genus", json={"operator": {"coefficients": ["-x", "0"]}, "group_order": 2})
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "NotFuchsianAt"


def test_equiv_endpoint():
    r = client.post(
        "/equiv",
        json={
            "operator": {"catalog": "G54"},
            "other": {"catalog": "3F2-klein"},
            "map": "(1/16)*(x^2+1)^4/(x^2*(x+1)^2*(x-1)^2)",
        },
    )
    assert r.status_code == 200
    assert r.json()["equivalent"] is True


def test_normalize_endpoint():
    r = client.post("/normalize", json={"operator": {"coefficients": ["2/x^2", "-2/x"]}})
    assert r.status_code == 200
    assert r.json()["coefficients"][1] == "0"


def test_sympow_and_ratsol():
    r = client.post("/sympow", json={"operator": {"coefficients": ["0", "0"]}, "degree": 2})
    assert r.status_code == 200
    assert r.json() == {"order": 3, "coefficients": ["0", "0", "0"]}
    r = client.post("/ratsol", json={"operator": {"coefficients": ["2/x^2", "-2/x"]}})
    assert r.status_code == 200
    assert r.json()["dimension"] == 2


def test_ruled_endpoint():
    r = client.post("/ruled", json={"group": "D4"})
    assert r.status_code == 200
    body = r.json()
    assert (body["deg_l"], body["deg_lprime"], body["twist"]) == (1, 5, 4)
    assert body["degree"] == 4
    r = client.post("/ruled", json={"group": "D5"})
    assert r.status_code == 422


def test_catalog_endpoints():
    r = client.get("/catalog")
    assert r.status_code == 200 and "G54" in r.json()
    r = client.get("/catalog/F36")
    assert r.status_code == 200
    assert r.json()["pullback_of"] == "3F2-klein"
    r = client.get("/catalog/missing")
    assert r.status_code == 422
