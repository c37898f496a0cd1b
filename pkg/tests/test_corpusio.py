import json

import pytest

import oracles
from fusionkit.corpusio import (
    CatalogEntry,
    GroupSpec,
    comparison_payload,
    load_catalog,
    load_group,
    parse_group_text,
    resolve_group,
    run_catalog,
    shipped_group_names,
    write_group,
)
from fusionkit.errors import GroupFileError
from fusionkit.groups import cyclic, direct_product, make_named, sl23, symmetric
from fusionkit.permcore import PermGroup, center


def elts(G):
    return frozenset(x.images for x in G.elements())


def test_make_named_examples():
    assert make_named("symmetric", 3).order() == 6
    assert cyclic(1).is_trivial()
    G = make_named("sl23")
    assert G.order() == 24 and center(G).order() == 2
    assert len(oracles.closure([g.images for g in G.generators], G.degree)) == 24
    with pytest.raises(ValueError):
        make_named("monster")
    with pytest.raises(ValueError):
        make_named("dihedral", 2)
    with pytest.raises(ValueError):
        make_named("elementary_abelian", 4, 2)


def test_direct_product_examples():
    G = direct_product(symmetric(3), symmetric(3))
    assert G.degree == 6 and G.order() == 36
    A = symmetric(4)
    assert direct_product(A, PermGroup(1)).order() == 24
    assert direct_product(cyclic(2), cyclic(2)).order() == 4


def test_shipped_counterexample_file(ce):
    loaded = resolve_group("s3xs3")
    assert loaded.group.order() == 36
    assert loaded.group == direct_product(symmetric(3), symmetric(3))
    assert loaded.subgroup("G1") == ce["G1"]
    assert loaded.subgroup("H") == ce["H"]
    with pytest.raises(GroupFileError, match="no subgroup named"):
        loaded.subgroup("nope")


def test_shipped_groups_load():
    names = shipped_group_names()
    assert {"s3", "s4", "sl23", "s3xs3"} <= set(names)
    for name in names:
        loaded = resolve_group(name)
        assert all(H.is_subgroup_of(loaded.group) for H in loaded.subgroups.values())


def test_round_trip(tmp_path):
    for name in shipped_group_names():
        loaded = resolve_group(name)
        path = tmp_path / f"{name}.json"
        write_group(loaded.spec, path)
        again = load_group(path)
        assert again.group.order() == loaded.group.order()
        assert again.subgroups.keys() == loaded.subgroups.keys()
        for key, H in loaded.subgroups.items():
            assert elts(again.subgroups[key]) == elts(H)


def test_from_group_round_trip(tmp_path):
    G = sl23()
    spec = GroupSpec.from_group("sl", G, {"Z": center(G)})
    write_group(spec, tmp_path / "sl.json")
    loaded = load_group(tmp_path / "sl.json")
    assert loaded.group == G and loaded.subgroup("Z") == center(G)


def test_rejects_repeated_image():
    text = '{"name": "bad", "degree": 3, "generators": [[1, 2, 0], [0, 0, 1]]}'
    with pytest.raises(GroupFileError, match="generator 1"):
        parse_group_text(text)


def test_rejects_missing_generator_index():
    text = '{"name": "bad", "degree": 3, "generators": [[1, 2, 0]], "subgroups": {"H": [3]}}'
    with pytest.raises(GroupFileError, match="missing generator index 3"):
        parse_group_text(text).build()


@pytest.mark.parametrize("text, pattern", [
    ("{", "line 1"),
    ("[]", "top level"),
    ('{"name": "x", "degree": 3}', "missing keys"),
    ('{"name": "x", "degree": 0, "generators": []}', "positive"),
    ('{"name": "x", "degree": 2, "generators": [[1, 0]], "subgroups": {"H": [[0, 1, 2]]}}', "length 3"),
    ('{"name": "x", "degree": 3, "generators": [[1, 0, 2]], "subgroups": {"H": [[1, 2, 0]]}}', "not contained"),
    ('{"name": "x", "degree": 2, "generators": [[1, 0]], "subgroups": {"H": ["a"]}}', "neither"),
])
def test_rejections(text, pattern):
    with pytest.raises(GroupFileError, match=pattern):
        parse_group_text(text).build()


def test_resolve_group_forms(tmp_path):
    assert resolve_group("symmetric:4").group.order() == 24
    assert resolve_group("elementary_abelian:3,2").group.order() == 9
    assert resolve_group("sl23").group.order() == 24
    write_group(GroupSpec.from_group("c5", cyclic(5)), tmp_path / "c5.json")
    assert resolve_group(str(tmp_path / "c5.json")).group.order() == 5
    with pytest.raises(GroupFileError):
        resolve_group(str(tmp_path / "absent.json"))
    with pytest.raises(GroupFileError, match="unknown group"):
        resolve_group("nosuchthing")
    with pytest.raises(GroupFileError, match="bad parameters"):
        resolve_group("symmetric:x")


def test_catalog_contents():
    entries = load_catalog()
    ids = {e.id for e in entries}
    for needed in ("s3/-/p=3", "s4/-/p=2", "sl23/-/p=2", "s3xs3/G1/p=3", "s3xs3/S/p=3", "s4/A4/p=2", "sl23/Q8/p=2"):
        assert needed in ids
    nonnormal = [e for e in entries if e.id == "s3xs3/H/p=3"]
    assert nonnormal and nonnormal[0].expected["theorem_b"] == "hypothesis_violated"


def test_catalog_entry_validation():
    with pytest.raises(ValueError):
        CatalogEntry("s3", None, 4, {"theorem_a": "pass"})
    with pytest.raises(ValueError):
        CatalogEntry("s3", None, 3, {"theorem_z": "pass"})


def test_catalog_filter_and_jobs():
    doc = run_catalog("sl23")
    assert doc["summary"]["entries"] == len([e for e in load_catalog() if "sl23" in e.id])
    assert not doc["summary"]["mismatched"]
    by_claim = run_catalog("lemma_1")
    assert all(r["claim"] == "lemma_1" for e in by_claim["catalog"] for r in e["results"])
    parallel = run_catalog("s4", jobs=2)
    assert comparison_payload(parallel) == comparison_payload(run_catalog("s4"))


def test_comparison_payload_strips_timing():
    doc = {"a": [{"timing_ms": 3, "b": 1}], "timing_ms": 2}
    assert comparison_payload(doc) == {"a": [{"b": 1}]}
    assert "timing_ms" not in json.dumps(comparison_payload(run_catalog("s3/-")))

