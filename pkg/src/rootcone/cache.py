"""On-disk JSON store for fundamental profiles, keyed by canonical type string.

Layout of ``profiles.json``::

    {"schemaVersion": 1,
     "profiles": {"E8": {"values": [[...]], "witnesses": [["1,3,4", ...]]}}}

A file with another schema version, or one that fails to parse, is ignored
as a whole (with a warning for the latter) and rewritten on the next store.
"""

from __future__ import annotations

import json
import os
import tempfile
import warnings
from pathlib import Path
from typing import Dict, Optional

import platformdirs

from .ell import Profile, ProfileStore

SCHEMA_VERSION = 1
ENV_VAR = "ROOTCONE_CACHE_DIR"
FILENAME = "profiles.json"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(platformdirs.user_cache_dir("rootcone"))


def _encode(p: Profile) -> dict:
    return {
        "values": [list(r) for r in p.values],
        "witnesses": [[",".join(map(str, w)) for w in r] for r in p.witnesses],
    }


def _decode(type_string: str, raw: dict) -> Profile:
    values = tuple(tuple(int(x) for x in r) for r in raw["values"])
    wits = tuple(tuple(tuple(int(c) for c in w.split(",")) if w else () for w in r) for r in raw["witnesses"])
    if len(values) != len(wits) or any(len(a) != len(b) for a, b in zip(values, wits)):
        raise ValueError("shape mismatch")
    return Profile(type_string, values, wits)


class JsonProfileStore(ProfileStore):
    def __init__(self, directory: Optional[Path] = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.path = self.directory / FILENAME
        self._data: Optional[Dict[str, dict]] = None

    def _read(self) -> Dict[str, dict]:
        if self._data is not None:
            return self._data
        data: Dict[str, dict] = {}
        if self.path.exists():
            try:
                doc = json.loads(self.path.read_text())
                if doc.get("schemaVersion") == SCHEMA_VERSION and isinstance(doc.get("profiles"), dict):
                    data = doc["profiles"]
            except (OSError, ValueError, AttributeError) as exc:
                warnings.warn(f"ignoring unreadable cache {self.path}: {exc}", RuntimeWarning, stacklevel=2)
        self._data = data
        return data

    def load(self, type_string: str) -> Optional[Profile]:
        raw = self._read().get(type_string)
        if raw is None:
            return None
        try:
            return _decode(type_string, raw)
        except (KeyError, TypeError, ValueError) as exc:
            warnings.warn(f"ignoring corrupt cache entry {type_string}: {exc}", RuntimeWarning, stacklevel=2)
            return None

    def store(self, profile: Profile) -> None:
        data = dict(self._read())
        data[profile.type] = _encode(profile)
        doc = {"schemaVersion": SCHEMA_VERSION, "profiles": dict(sorted(data.items()))}
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".profiles-", suffix=".json")
            with os.fdopen(fd, "w") as fh:
                json.dump(doc, fh, sort_keys=True)
            os.replace(tmp, self.path)
        except OSError as exc:
            warnings.warn(f"could not write cache {self.path}: {exc}", RuntimeWarning, stacklevel=2)
            return
        self._data = doc["profiles"]
