"""On-disk expansion cache: one JSON-lines file per weight.

Entry schema: {"index": [3, 1], "kind": "modified", "trunc": 13,
"coeffs": ["0", ..., "1/2"], "engine_version": "..."}.  Coefficients are
decimal strings, "num/den" for proper fractions.  Writes are atomic
(temp file + rename); corrupted lines are skipped with a warning; entries
from another engine version are ignored so they get recomputed.
"""

import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction

from qzeta._version import __version__
from qzeta.errors import CacheIOError
from qzeta.indices import as_index, weight

ENGINE_VERSION = __version__


def _encode_coeff(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def _decode_coeff(s):
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return int(s)


@dataclass(frozen=True)
class CacheEntry:
    index: tuple
    kind: str
    trunc: int
    coeffs: tuple
    engine_version: str

    def to_json(self):
        return json.dumps(
            {
                "index": list(self.index),
                "kind": self.kind,
                "trunc": self.trunc,
                "coeffs": [_encode_coeff(c) for c in self.coeffs],
                "engine_version": self.engine_version,
            }
        )

    @classmethod
    def from_json(cls, line):
        obj = json.loads(line)
        index = as_index(obj["index"])
        kind = obj["kind"]
        if kind not in ("modified", "raw"):
            raise ValueError(f"unknown kind {kind!r}")
        trunc = int(obj["trunc"])
        coeffs = tuple(_decode_coeff(s) for s in obj["coeffs"])
        if len(coeffs) != trunc + 1:
            raise ValueError("coefficient count does not match trunc")
        return cls(index, kind, trunc, coeffs, str(obj["engine_version"]))


class DiskCache:
    """Directory-backed cache; plugs into qzeta.expand.Expander as `disk`."""

    def __init__(self, directory):
        self.directory = directory
        self._entries = {}  # weight -> {(index, kind): CacheEntry}
        try:
            os.makedirs(directory, exist_ok=True)
        except OSError as exc:
            raise CacheIOError(f"cannot create cache directory {directory}: {exc}") from exc

    def _path(self, w):
        return os.path.join(self.directory, f"weight_{w:04d}.jsonl")

    def _load_weight(self, w):
        if w in self._entries:
            return self._entries[w]
        table = {}
        path = self._path(w)
        if os.path.exists(path):
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    lines = fh.readlines()
            except OSError as exc:
                raise CacheIOError(f"cannot read cache file {path}: {exc}") from exc
            for i, line in enumerate(lines, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = CacheEntry.from_json(line)
                except (ValueError, KeyError, TypeError) as exc:
                    print(
                        f"warning: skipping corrupted cache line {i} in {path}: {exc}",
                        file=sys.stderr,
                    )
                    continue
                table[(entry.index, entry.kind)] = entry
        self._entries[w] = table
        return table

    def _write_weight(self, w):
        path = self._path(w)
        table = self._entries[w]
        try:
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                for key in sorted(table):
                    fh.write(table[key].to_json() + "\n")
            os.replace(tmp, path)
        except OSError as exc:
            raise CacheIOError(f"cannot write cache file {path}: {exc}") from exc

    def load(self, parts, kind, n):
        """Coefficient list through q^n, or None on miss."""
        parts = as_index(parts)
        table = self._load_weight(weight(parts))
        entry = table.get((parts, kind))
        if entry is None or entry.engine_version != ENGINE_VERSION:
            return None
        if entry.trunc < n:
            return None
        return list(entry.coeffs[: n + 1])

    def store(self, parts, kind, n, coeffs):
        parts = as_index(parts)
        w = weight(parts)
        table = self._load_weight(w)
        old = table.get((parts, kind))
        if old is not None and old.engine_version == ENGINE_VERSION and old.trunc >= n:
            return
        table[(parts, kind)] = CacheEntry(
            parts, kind, n, tuple(coeffs[: n + 1]), ENGINE_VERSION
        )
        self._write_weight(w)
