import json
import os

import pytest

from qzeta.cache import ENGINE_VERSION, CacheEntry, DiskCache
from qzeta.errors import CacheIOError
from qzeta.expand import Expander


def test_roundtrip_identical(tmp_path):
    cache = DiskCache(str(tmp_path))
    ex = Expander(disk=cache)
    first = ex.modified((3, 1), 13)
    again = Expander(disk=DiskCache(str(tmp_path))).modified((3, 1), 13)
    assert first.coeffs == again.coeffs
    path = tmp_path / "weight_0004.jsonl"
    assert path.exists()
    entry = CacheEntry.from_json(path.read_text().splitlines()[0])
    assert entry.index == (3, 1) and entry.trunc == 13
    assert entry.coeffs == tuple(first.coeffs)


def test_lower_order_served_by_slicing(tmp_path):
    cache = DiskCache(str(tmp_path))
    Expander(disk=cache).modified((3, 1), 20)
    fresh = DiskCache(str(tmp_path))
    sliced = fresh.load((3, 1), "modified", 7)
    assert sliced is not None and len(sliced) == 8
    assert fresh.load((3, 1), "modified", 25) is None


def test_version_mismatch_recomputed(tmp_path):
    cache = DiskCache(str(tmp_path))
    Expander(disk=cache).modified((2,), 10)
    path = tmp_path / "weight_0002.jsonl"
    obj = json.loads(path.read_text().splitlines()[0])
    obj["engine_version"] = "0.0.0-other"
    obj["coeffs"] = ["0"] * 11  # stale garbage that must be ignored
    path.write_text(json.dumps(obj) + "\n")
    assert DiskCache(str(tmp_path)).load((2,), "modified", 10) is None
    series = Expander(disk=DiskCache(str(tmp_path))).modified((2,), 10)
    assert series.coeff(1) == 1  # recomputed, not the garbage


def test_corrupted_lines_skipped(tmp_path, capsys):
    cache = DiskCache(str(tmp_path))
    Expander(disk=cache).modified((2,), 10)
    path = tmp_path / "weight_0002.jsonl"
    good = path.read_text()
    path.write_text("this is not json\n" + good + '{"index": [2], "kind": "modified"}\n')
    fresh = DiskCache(str(tmp_path))
    assert fresh.load((2,), "modified", 10) is not None
    err = capsys.readouterr().err
    assert "skipping corrupted cache line" in err


def test_raw_and_modified_cached_separately(tmp_path):
    cache = DiskCache(str(tmp_path))
    ex = Expander(disk=cache)
    ex.modified((3,), 12)
    ex.raw((3,), 12)
    lines = (tmp_path / "weight_0003.jsonl").read_text().splitlines()
    kinds = {json.loads(line)["kind"] for line in lines}
    assert kinds == {"modified", "raw"}


def test_fraction_coefficients_roundtrip(tmp_path):
    from fractions import Fraction

    entry = CacheEntry((2,), "raw", 2, (0, 1, Fraction(-1, 2)), ENGINE_VERSION)
    back = CacheEntry.from_json(entry.to_json())
    assert back == entry


def test_unwritable_directory_fails_loud(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("a file, not a directory")
    with pytest.raises(CacheIOError):
        DiskCache(str(blocker))
