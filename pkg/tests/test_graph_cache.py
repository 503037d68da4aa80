import json

import pytest

from core.errors import CacheInvalid
from core.graph_cache import FORMAT_VERSION, GraphCache, classes_checksum
from core.invariants import InvariantEngine, InvariantKind, InvariantRequest


def test_round_trip_degree_two(tmp_path, graph_classes):
    cache = GraphCache(tmp_path)
    cache.cache_graphs(2, graph_classes(2))
    loaded = GraphCache(tmp_path).load_graphs(2)
    assert len(loaded) == 30
    assert loaded == graph_classes(2)
    assert [c.aut_order for c in loaded] == [c.aut_order for c in graph_classes(2)]


def test_round_trip_degree_three(tmp_path, graph_classes):
    GraphCache(tmp_path).cache_graphs(3)
    loaded = GraphCache(tmp_path).load_graphs(3)
    assert len(loaded) == 136
    assert [c.canonical_key for c in loaded] == [c.canonical_key for c in graph_classes(3)]


def test_cache_directory_created_lazily(tmp_path):
    target = tmp_path / "nested" / "cache"
    cache = GraphCache(target)
    assert not target.exists()
    cache.get_graphs(1)
    assert (target / "graphs_d1.json").exists()


def _rewrite(path, mutate, fix_checksum=True):
    document = json.loads(path.read_text())
    mutate(document)
    if fix_checksum:
        document["checksum"] = classes_checksum(document["classes"])
    path.write_text(json.dumps(document))


def test_tampered_canonical_key(tmp_path):
    cache = GraphCache(tmp_path)
    cache.cache_graphs(2)
    path = cache.path_for(2)

    def mutate(document):
        first = document["classes"][0]
        first["canonical"] = document["classes"][1]["canonical"]

    _rewrite(path, mutate, fix_checksum=False)
    with pytest.raises(CacheInvalid, match="checksum"):
        GraphCache(tmp_path).load_graphs(2)

    _rewrite(path, mutate, fix_checksum=True)
    with pytest.raises(CacheInvalid):
        GraphCache(tmp_path).load_graphs(2)


def test_tampered_automorphism_order(tmp_path):
    cache = GraphCache(tmp_path)
    cache.cache_graphs(2)

    def mutate(document):
        document["classes"][0]["aut_order"] += 1

    _rewrite(cache.path_for(2), mutate)
    with pytest.raises(CacheInvalid, match="automorphism"):
        GraphCache(tmp_path).load_graphs(2)


def test_version_mismatch(tmp_path):
    cache = GraphCache(tmp_path)
    cache.cache_graphs(1)
    _rewrite(cache.path_for(1), lambda d: d.update(format_version=FORMAT_VERSION + 1))
    with pytest.raises(CacheInvalid, match="version"):
        GraphCache(tmp_path).load_graphs(1)


def test_corrupt_file_is_recomputed(tmp_path, graph_classes):
    cache = GraphCache(tmp_path)
    cache.cache_graphs(2)
    cache.path_for(2).write_text("{ not json")
    fresh = GraphCache(tmp_path)
    assert fresh.get_graphs(2) == graph_classes(2)
    assert fresh.stats["invalid"] == 1
    assert GraphCache(tmp_path).load_graphs(2) == graph_classes(2)


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        GraphCache(tmp_path).load_graphs(3)


def test_disabled_cache_writes_nothing(tmp_path):
    cache = GraphCache(tmp_path, enabled=False)
    assert len(cache.get_graphs(1)) == 6
    assert list(tmp_path.iterdir()) == []


def test_memory_hits(tmp_path):
    cache = GraphCache(tmp_path)
    first = cache.get_graphs(1)
    assert cache.get_graphs(1) is first
    assert cache.stats["hits"] == 1
    assert cache.stats["misses"] == 1


def test_undecodable_file_is_recomputed(tmp_path, graph_classes):
    cache = GraphCache(tmp_path)
    cache.path_for(2).parent.mkdir(parents=True, exist_ok=True)
    cache.path_for(2).write_bytes(b'{"format_version": 1, "degree": 2, "classes": ["\xff\xfe"]}')
    with pytest.raises(CacheInvalid, match="unreadable"):
        cache.load_graphs(2)
    assert cache.get_graphs(2) == graph_classes(2)
    assert cache.stats["invalid"] == 1
    assert GraphCache(tmp_path).load_graphs(2) == graph_classes(2)


def test_directory_at_cache_path(tmp_path, graph_classes):
    cache = GraphCache(tmp_path)
    cache.path_for(2).mkdir(parents=True)
    with pytest.raises(CacheInvalid, match="unreadable"):
        cache.load_graphs(2)
    assert cache.get_graphs(2) == graph_classes(2)
    assert cache.stats["invalid"] == 1
    assert cache.stats["writes"] == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["graphs_d2.json"]


def test_truncated_class_list(tmp_path):
    cache = GraphCache(tmp_path)
    cache.cache_graphs(2)
    _rewrite(cache.path_for(2), lambda d: d["classes"].pop(7))
    with pytest.raises(CacheInvalid, match="does not cover"):
        GraphCache(tmp_path).load_graphs(2)


def test_truncated_cache_does_not_reach_compute(tmp_path):
    cache = GraphCache(tmp_path)
    cache.cache_graphs(2)
    _rewrite(cache.path_for(2), lambda d: d["classes"].pop())
    engine = InvariantEngine(cache=GraphCache(tmp_path))
    result = engine.compute(InvariantRequest(2, InvariantKind.GW_LINES))
    assert result.value == 92
    assert result.graph_class_count == 30
    assert engine.cache.stats["invalid"] == 1
