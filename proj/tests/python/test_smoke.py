import json

import pytest

fc = pytest.importorskip("folcalc")


def test_lie_bracket_and_closure():
    assert fc.lie_bracket("d1", "z1*d2", 2) == "d2"
    out = fc.closure(3, ["d1", "d2 + z1*d3"])
    assert out["rank"] == 3
    assert out["generators"] == ["d1", "d2", "d3"]
    assert out["iterations"] <= 3


def test_union_of_twisted_pair():
    out = fc.union_foliations(3, ["d3"], ["d1 + z2*d3"])
    assert out["rank"] == 2
    assert out["generators"] == ["d1", "d3"]


def test_induced_foliation_hyperbolas():
    out = fc.induced_foliation(2, ["z1*z2"])
    assert out["rank"] == 1
    assert out["generators"] == ["z1*d1 - z2*d2"]
    assert out["singular_ideal"] == ["z2", "z1"] or out["singular_ideal"] == ["z1", "z2"]


def test_saturation_and_membership():
    assert fc.saturate(2, ["z1*d2"]) == ["d2"]
    assert fc.member(2, "z1^2*d1", ["z1*d1"])
    assert not fc.member(2, "d1", ["z1*d1"])


def test_wedge_coefficient_and_basis():
    h = [[3.0, 0.0], [0.0, 5.0]]
    c = fc.wedge_coefficient(h, 1, [2], [2])
    assert abs(c - 3.0) < 1e-12
    basis = fc.test_form_basis(2, 1, 1)
    assert basis == [([1], [2]), ([2], [1]), ([2], [2])]
    assert fc.cauchy_schwarz_audit(h, 1)


def test_scene_roundtrip_is_deterministic():
    scene = """
ring z1 z2

foliation F {
  gen = d1
}

field T {
  h 1 1 = eps
  h 2 2 = 1/(1+abs2(z2))^2 + eps
  eps = 0.1 0.05 0.025
}

chart C {
  center = 0 0 0 0
  half_width = 1
  grid = 8
  k = 1
}

task r : rank F
task nt : nt-check T C
"""
    a = fc.run_scene(scene)
    b = fc.run_scene(scene)
    assert a == b
    rows = json.loads(a)
    assert rows[0]["result"]["rank"] == 1
    nt = rows[1]["result"]
    assert nt["verdict"] == "consistent with numerical triviality"
    leaf = [s for s in nt["series"] if s["I"] == [2] and s["J"] == [2]][0]
    assert abs(leaf["values"][0] - 1.6) < 1e-9


def test_scene_errors_are_located():
    errors = fc.check_scene("ring z1\nfoliation F {\n  gen = d7\n}\n")
    assert errors
    assert errors[0][0] == 3
