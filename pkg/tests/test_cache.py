import json

from burnside.cache import (CACHE_VERSION, fingerprint, load_marks_json,
                            resolve_cache_dir, store_marks_json)
from burnside.marks import table_of_marks
from util import get_group, get_marks


def test_fingerprint_ignores_generator_order():
    g = get_group("S3")
    fp = fingerprint(g)
    assert fp.startswith("3|")
    from burnside.permgroup import PermGroup
    reordered = PermGroup(g.degree, list(reversed(g.generators)), g.elements)
    assert fingerprint(reordered) == fp


def test_round_trip_identical_bytes(tmp_path):
    group = get_group("S3")
    doc = get_marks("S3").to_json("S3")
    store_marks_json(tmp_path, group, doc)
    loaded = load_marks_json(tmp_path, group)
    recomputed = table_of_marks(group).to_json("S3")
    dump = lambda d: json.dumps(d, sort_keys=True).encode()
    assert dump(loaded) == dump(doc) == dump(recomputed)


def test_miss_and_stale_version(tmp_path):
    group = get_group("C4")
    assert load_marks_json(tmp_path, group) is None
    store_marks_json(tmp_path, group, get_marks("C4").to_json("C4"))
    assert load_marks_json(tmp_path, group) is not None
    # corrupt the version tag: the entry must be treated as a miss
    path = next(tmp_path.glob("marks-*.json"))
    doc = json.loads(path.read_text())
    doc["version"] = CACHE_VERSION + 1
    path.write_text(json.dumps(doc))
    assert load_marks_json(tmp_path, group) is None


def test_resolve_cache_dir_precedence(tmp_path, monkeypatch):
    monkeypatch.setenv("BURNSIDE_CACHE", str(tmp_path / "env"))
    assert resolve_cache_dir(None) == tmp_path / "env"
    assert resolve_cache_dir(str(tmp_path / "flag")) == tmp_path / "flag"
    monkeypatch.delenv("BURNSIDE_CACHE")
    assert resolve_cache_dir(None).name == "burnside"
