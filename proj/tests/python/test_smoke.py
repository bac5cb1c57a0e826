import json
import pathlib

import pytest

import gasket_lab

ROOT = pathlib.Path(__file__).resolve().parents[2]


def test_bundled_names():
    assert gasket_lab.bundled_names()[:1] == ["iib_l2"]
    assert {"typeI_min", "typeIIA_min"} <= set(gasket_lab.bundled_names())


def test_validate_shipped_core():
    doc = json.loads((ROOT / "data" / "cores" / "iib_l2.json").read_text())
    report = gasket_lab.validate(doc)
    assert report["ok"]
    assert all(report["rules"].values())


def test_tower_counts_iib():
    counts = gasket_lab.tower_counts("bundled:iib_l2", 3)
    assert counts[1:] == [(4, 4, 2), (6, 8, 4), (10, 16, 8)]


def test_certify_iib():
    cert = gasket_lab.certify("bundled:iib_l2", depth=3)
    assert cert["type"] == "IIB"
    assert cert["l"] == 2
    assert cert["bipartite"]
    assert [lv["anchored_cycles"] for lv in cert["levels"]] == [1, 3, 5]


def test_descartes():
    assert gasket_lab.descartes_fourth(2, 2, 3) == pytest.approx((15, -1))


def test_apollonian_and_compare():
    packing = gasket_lab.apollonian((-1, 2, 2, 3), 10)
    assert packing["certificate"]["triangle"] is not None
    assert not packing["certificate"]["bipartite"]
    verdict = gasket_lab.compare(gasket_lab.certify("bundled:typeI_min", depth=2), packing["certificate"])
    assert verdict["verdict"] == "non-equivalent: bipartite vs odd cycle"


def test_enumerate_four():
    cores = gasket_lab.enumerate_cores(4)
    assert [c["type"] for c in cores] == ["IIB"]


def test_errors_carry_codes():
    with pytest.raises(gasket_lab.GasketError, match="SchemaError"):
        gasket_lab.validate({"name": "broken"})
    with pytest.raises(gasket_lab.GasketError, match="InvalidRoot"):
        gasket_lab.apollonian((1, 1, 1, 1), 10)
