import json
import os
import pathlib

import contra

DATA = pathlib.Path(os.environ.get("CONTRA_DATA", pathlib.Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def test_verify_grouplike():
    code, report = contra.run("verify", {"input": load("grouplike3.json")})
    assert code == 0
    assert report["verdict"]["ok"]


def test_verify_reports_failures():
    code, report = contra.run("verify", {"input": load("bad_counit.json")})
    assert code == 1
    assert any("counit" in f for f in report["verdict"]["failures"])


def test_schema_error_points_at_field():
    code, report = contra.run("verify", {"input": load("bad_schema.json")})
    assert code == 2
    assert report["error"]["pointer"].startswith("/delta/1")


def test_adjunction_dims_match():
    inputs = {"rho": load("rho_c3_d2.json"), "W": load("w_free_d2.json"), "V": load("v_free_c3.json")}
    code, report = contra.run("adjoint-check", inputs)
    assert code == 0
    adj = report["adjunction"]
    assert adj["lhs_dim"] == adj["rhs_dim"]
    assert report["exactness"]["injective_along"] is False


def test_tower_battery():
    code, report = contra.run("tower", {"battery": load("std.json")}, lam=0, mmax=3)
    assert code == 0
    stable = {r["V"]: r["stages"][-1]["dim_cohom"] for r in report["reports"]}
    assert stable == {"L0": 1, "L1": 0, "L2": 0, "L3": 0, "L1*L1": 2}


def test_characters():
    assert contra.character("L1*L1") == {-2: 1, 0: 2, 2: 1}
    assert contra.f_multiplicity(0, "L1*L1") == 2
    assert contra.coalgebra_dim("frobenius_kernel(1)", "Fp:2") == 8


def test_seeded_runs_are_deterministic():
    inputs = {"rho": load("rho_c3_d2.json")}
    assert contra.run("exactness", inputs, seed=5) == contra.run("exactness", inputs, seed=5)
