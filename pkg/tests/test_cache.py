from __future__ import annotations

import json
import logging

from alcove_tilt import cache
from alcove_tilt.affine_weyl import AffineWeylGroup
from alcove_tilt.hecke import kl_table
from alcove_tilt.root_datum import build_root_datum


def fresh(name="A2"):
    return AffineWeylGroup(build_root_datum(name))


def test_disabled_without_env(monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    g = fresh()
    assert cache.cache_dir() is None
    assert cache.save_kl(g, 3) is None and not cache.load_kl(g, 3)
    cache.ensure_kl(g, 3)
    assert kl_table(g).frontier >= 3


def test_round_trip(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    g = fresh()
    cache.ensure_kl(g, 5)
    files = list(tmp_path.glob("kl-*-L5.json"))
    assert len(files) == 1 and not list(tmp_path.glob(".tmp-*"))
    doc = json.loads(files[0].read_text())
    assert set(doc) == {"sha256", "payload"}

    g2 = fresh()
    assert cache.load_kl(g2, 4)
    assert kl_table(g2).frontier == 5
    for w in g.elements_up_to(5):
        assert kl_table(g2).terms(w) == kl_table(g).terms(w)


def test_other_datum_is_not_reused(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    cache.ensure_kl(fresh("A2"), 3)
    assert not cache.load_kl(fresh("B2"), 3)


def test_corruption_is_detected_and_recomputed(monkeypatch, tmp_path, caplog):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    g = fresh()
    path = cache.save_kl(g, 4)
    doc = json.loads(path.read_text())
    doc["payload"] = doc["payload"].replace('"frontier":4', '"frontier":9')
    path.write_text(json.dumps(doc))

    g2 = fresh()
    with caplog.at_level(logging.WARNING, logger="alcove_tilt.cache"):
        assert not cache.load_kl(g2, 4)
    assert "checksum" in caplog.text
    assert not path.exists()
    cache.ensure_kl(g2, 4)
    assert path.exists()
    for w in g.elements_up_to(4):
        assert kl_table(g2).terms(w) == kl_table(g).terms(w)


def test_garbage_file_is_removed(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    g = fresh()
    path = cache.save_kl(g, 2)
    path.write_text("{not json")
    assert not cache.load_kl(fresh(), 2)
    assert not path.exists()
