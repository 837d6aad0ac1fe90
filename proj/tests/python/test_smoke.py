"""Smoke tests for the Python bindings. Runnable with pytest or directly."""

import json
import os

import polycert

DATA = os.path.join(os.path.dirname(__file__), "..", "..", "data")


def load(name):
    with open(os.path.join(DATA, name)) as fh:
        return fh.read()


def test_validate():
    rep = json.loads(polycert.validate(load("prism.json")))
    assert rep["ok"] and rep["char"]["ok"]
    rep = json.loads(polycert.validate(load("cube_paper.json")))
    assert not rep["ok"]
    assert any("dependent" in e for e in rep["char"]["errors"])


def test_info_and_orders():
    info = json.loads(polycert.info(load("prism.json")))
    assert info["dim"] == 3
    assert sorted(info["vertex_orders"]) == [1, 1, 1, 1, 2, 2]
    assert polycert.vertex_order(load("square.json"), 3) == "47"


def test_constructions():
    w = json.loads(polycert.wedge(load("square.json"), "F3", 2, a=2))
    assert len(w["facets"]) == 6 and len(w["vertices"]) == 8
    assert set(w["char"]) == {"F0", "F1", "F2", "H", "W1", "W2"}

    pr = json.loads(polycert.product(load("square.json"), 1))
    assert len(pr["vertices"]) == 8

    bu = json.loads(polycert.blowup(load("prism.json"), ["T", "R"]))
    assert "T:T,R" in bu["facets"]

    bd = json.loads(
        polycert.blowdown(load("cube_swapped.json"), "Ft", ["Ft", "F1"]))
    assert len(bd["facets"]) == 5 and len(bd["vertices"]) == 6
    assert json.loads(polycert.validate(json.dumps(bd)))["ok"]


def test_retraction():
    seq = polycert.retract(load("cube_plain.json"), seed=5)
    assert seq is not None and len(json.loads(seq)) == 8
    assert polycert.verify_sequence(load("cube_plain.json"), seq)

    tr = json.loads(polycert.trace(load("prism.json")))
    assert tr["trace"] == [1] * 6


def test_torsion():
    cert = polycert.torsion_plain(load("prism.json"), 7)
    assert json.loads(cert)["conclusion"] == "no-p-torsion"
    assert polycert.verify_plain(load("prism.json"), cert)

    cert = polycert.torsion_blowdown(load("cube_swapped.json"), "Ft",
                                     ["Ft", "F1"], 5)
    parsed = json.loads(cert)
    assert parsed["conclusion"] == "no-p-torsion"
    assert parsed["a2"]["pass"]
    assert polycert.verify_blowdown(load("cube_swapped.json"), "Ft",
                                    ["Ft", "F1"], cert)

    cert = polycert.torsion_wedge(load("square.json"), "F3", 2, 7)
    assert json.loads(cert)["conclusion"] == "no-p-torsion"
    assert polycert.verify_wedge(load("square.json"), "F3", 2, cert)

    scan = json.loads(polycert.scan(load("square.json")))
    assert scan["torsion_free"] and scan["primes"] == [2, 17, 47]


def test_simplicial():
    k = polycert.dualize(load("square.json"))
    w = json.loads(polycert.swedge(k, "F3", 2))
    assert len(w["vertices"]) == 6 and len(w["maximal"]) == 8

    pw = polycert.wedge(load("square.json"), "F3", 2)
    assert polycert.complexes_isomorphic(json.dumps(w),
                                         polycert.dualize(pw))


def test_errors():
    try:
        polycert.wedge(load("square.json"), "nope", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown facet should raise ValueError")
    try:
        polycert.torsion_plain(load("cube_plain.json"), 3)
    except ValueError:
        pass
    else:
        raise AssertionError("missing char should raise ValueError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(name, "ok")
    print("all python checks passed")
