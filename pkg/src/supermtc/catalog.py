"""Bundled example data: the sixteen free-fermion categories F_1 ... F_16.

Entries live in ``supermtc/catalog`` (or ``$MTC_CATALOG``) next to an ``index.json`` that
records a SHA-256 checksum for each file.  ``python -m supermtc.catalog`` rebuilds it.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io
from .errors import InputError
from .family import ising_like

INDEX = "index.json"


@dataclass(frozen=True)
class CatalogEntry:
    path: Path
    name: str
    checksum: str

    def verify(self) -> bool:
        return sha256(self.path) == self.checksum


def sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def catalog_dir() -> Path:
    env = os.environ.get("MTC_CATALOG")
    return Path(env) if env else Path(__file__).with_name("catalog")


def entries(directory=None) -> list[CatalogEntry]:
    directory = Path(directory) if directory else catalog_dir()
    try:
        index = json.loads((directory / INDEX).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"unreadable catalog index in {directory}: {exc}") from None
    return [CatalogEntry(directory / e["file"], e["name"], e["sha256"]) for e in index["entries"]]


def lookup(name: str, directory=None) -> CatalogEntry | None:
    key = name.replace("_", "").lower()
    for e in entries(directory):
        if e.name.replace("_", "").lower() == key or e.path.name == name:
            return e
    return None


def build(directory) -> list[CatalogEntry]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for l in range(1, 17):
        G = ising_like(l)
        path = directory / f"F_{l:02d}.mtc"
        path.write_text(io.dumps_graded(G), encoding="utf-8")
        out.append(CatalogEntry(path, f"F_{l}", sha256(path)))
    index = {"entries": [{"name": e.name, "file": e.path.name, "sha256": e.checksum} for e in out]}
    (directory / INDEX).write_text(json.dumps(index, indent=1) + "\n", encoding="utf-8")
    return out


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else Path(__file__).with_name("catalog")
    for e in build(target):
        print(e.name, e.checksum)
