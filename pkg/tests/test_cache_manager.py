import json

import pytest

from src.utils.cache_manager import CACHE_VERSION, TableCacheManager
from src.utils.models import HallConfig, QuiverConfig


@pytest.fixture
def config(tmp_path):
    return HallConfig(
        quiver=QuiverConfig(vertex_count=2, arrows=[(1, 2)]),
        q=2,
        dim_caps=[1, 1],
        cache_path=str(tmp_path / "table.json"),
    )


def test_build_store_and_load(config):
    manager = TableCacheManager(config)
    assert manager.load() is None
    table = manager.get_table()
    assert len(table) == 5

    with open(manager.path, encoding="utf-8") as handle:
        stored = json.load(handle)
    assert stored["key"]["version"] == CACHE_VERSION
    assert [c["alias"] for c in stored["classes"]] == ["0", "S1", "S2", "S1+S2", "P"]

    reloaded = TableCacheManager(config).load()
    assert reloaded.aliases() == table.aliases()


def test_corrupt_cache_is_rebuilt(config):
    with open(config.cache_path, "w", encoding="utf-8") as handle:
        handle.write("{broken")
    manager = TableCacheManager(config)
    assert manager.load() is None
    assert len(manager.get_table()) == 5
    assert manager.load() is not None


def test_cache_for_other_key_is_ignored(config):
    TableCacheManager(config).get_table()
    other = config.model_copy(update={"dim_caps": [1, 0]})
    assert TableCacheManager(other).load() is None


def test_newer_cache_version_is_not_overwritten(config):
    manager = TableCacheManager(config)
    manager.get_table()
    with open(manager.path, encoding="utf-8") as handle:
        stored = json.load(handle)
    stored["key"]["version"] = CACHE_VERSION + 1
    text = json.dumps(stored)
    with open(manager.path, "w", encoding="utf-8") as handle:
        handle.write(text)

    assert len(TableCacheManager(config).get_table()) == 5
    with open(manager.path, encoding="utf-8") as handle:
        assert handle.read() == text


def test_default_path_uses_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("HALLCALC_CACHE_DIR", str(tmp_path / "cache"))
    manager = TableCacheManager(HallConfig())
    assert manager.path.startswith(str(tmp_path / "cache"))
    result = manager.store(manager.build())
    assert result["success"]


def _rewrite_cache(manager, edit):
    with open(manager.path, encoding="utf-8") as handle:
        stored = json.load(handle)
    edit(stored)
    with open(manager.path, "w", encoding="utf-8") as handle:
        json.dump(stored, handle)


def test_truncated_cache_is_rebuilt(config):
    manager = TableCacheManager(config)
    manager.get_table()
    _rewrite_cache(manager, lambda stored: stored["classes"].pop())

    assert manager.load() is None
    table = manager.get_table()
    assert len(table) == 5
    assert table.resolve("P") == 4
    assert len(manager.load()) == 5


def test_tampered_aut_order_is_rebuilt(config):
    manager = TableCacheManager(config)
    manager.get_table()

    def tamper(stored):
        next(c for c in stored["classes"] if c["alias"] == "S1")["aut_order"] = 7

    _rewrite_cache(manager, tamper)
    assert manager.load() is None
    table = manager.get_table()
    assert [table.aut_order(c) for c in table.ids()] == [1, 1, 1, 1, 1]


def test_failed_store_leaves_no_temporary_file(config, monkeypatch, tmp_path):
    manager = TableCacheManager(config)
    table = manager.build()

    def refuse(source, target):
        raise OSError("read-only")

    monkeypatch.setattr("src.utils.cache_manager.os.replace", refuse)
    result = manager.store(table)
    assert not result["success"]
    assert list(tmp_path.iterdir()) == []
