import json
import os
import pathlib
import subprocess

import pytest

import gasket_lab

jsonschema = pytest.importorskip("jsonschema")

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


@pytest.mark.parametrize("path", sorted((ROOT / "data" / "cores").glob("*.json")), ids=lambda p: p.stem)
def test_shipped_cores_follow_the_schema(path):
    jsonschema.validate(json.loads(path.read_text()), schema("core.schema.json"))


@pytest.mark.parametrize("name", ["iib_l2", "typeI_min", "typeIIA_min"])
def test_core_certificates_follow_the_schema(name):
    cert = gasket_lab.certify("bundled:" + name, depth=4)
    jsonschema.validate(cert, schema("certificate.schema.json"))


def test_packing_certificate_follows_the_schema():
    cert = gasket_lab.apollonian((-1, 2, 2, 3), 30)["certificate"]
    jsonschema.validate(cert, schema("certificate.schema.json"))


def test_unknown_fields_are_rejected_by_the_schema():
    doc = json.loads((ROOT / "data" / "cores" / "iib_l2.json").read_text())
    doc["extra"] = 1
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, schema("core.schema.json"))


@pytest.mark.skipif("GASKET_LAB" not in os.environ, reason="CLI path not provided")
def test_cli_output_is_deterministic_and_valid(tmp_path):
    cmd = [os.environ["GASKET_LAB"], "certify", "bundled:typeI_min", "--depth", "4", "--deterministic"]
    first = subprocess.run(cmd, check=True, capture_output=True, text=True).stdout
    second = subprocess.run(cmd, check=True, capture_output=True, text=True).stdout
    assert first == second
    jsonschema.validate(json.loads(first), schema("certificate.schema.json"))
