import json
import os
import subprocess

import pytest

import hyperell


def test_catalog_listing():
    names = hyperell.catalog_list()
    assert "bielliptic-1" in names
    assert "z2z2-threefold" in names


def test_catalog_run_is_clean():
    for name in hyperell.catalog_list():
        assert hyperell.catalog_run(name)["diff"] == [], name


def test_check_and_albanese():
    doc = hyperell.catalog_export("z4-threefold")
    assert hyperell.check(doc)["passed"]
    report = hyperell.albanese(doc, recurse=True)
    assert report["subgroup_h"] == ["e", "g^2"]
    assert report["fiber_class"]["holonomy_order"] == 2
    assert report["fiber_report"]["q"] == 1
    assert hyperell.albanese_round_trip(report)


def test_invariants():
    inv = hyperell.invariants(hyperell.catalog_export("z2z2-threefold"))
    assert inv["q"] == 0
    assert inv["hodge"]["rows"][3] == [1, 3, 3, 1]
    assert inv["canonical_order"] == 1


def test_oracle():
    verdict = hyperell.oracle(hyperell.catalog_export("bielliptic-1"))
    assert verdict["pass"]
    assert verdict["fiber_count"]["pass"]


def test_errors():
    doc = hyperell.catalog_export("bielliptic-1")
    doc["generators"][0]["translation"][0] = 0.5
    with pytest.raises(hyperell.HyperellError, match="FloatNotAllowed"):
        hyperell.check(doc)
    with pytest.raises(hyperell.HyperellError, match="UnknownEntry"):
        hyperell.catalog_run("nothing")
    bad = hyperell.catalog_export("z4-threefold-corrupted")
    assert not hyperell.check(bad)["passed"]
    with pytest.raises(hyperell.HyperellError):
        hyperell.albanese(bad)


@pytest.mark.skipif("HYPERELL_CLI" not in os.environ, reason="command-line tool not built")
def test_cli_matches_module(tmp_path):
    doc = hyperell.catalog_export("bielliptic-6")
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc))
    out = subprocess.run(
        [os.environ["HYPERELL_CLI"], "albanese", "--format", "json", str(path)],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    assert json.loads(out) == hyperell.albanese(doc)
