"""Corpus handling: a directory of algebra presentations with a manifest.

A corpus is a directory containing ``manifest.json`` plus the presentation
files (and optional module files) it references.  The manifest pins each
entry's classification and the invariant values expected of it, so a
verification run can cross-check its own computations against the frozen
record and so reports come out in a stable order.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .algebra import AlgebraTable, DEFAULT_MAX_PATH_LENGTH, table_from_text
from .modules import ModuleRep, parse_module

__all__ = ["CorpusError", "CorpusEntry", "load_corpus", "MANIFEST_NAME"]

MANIFEST_NAME = "manifest.json"

_EXPECTED_KEYS = {"dim", "selfinjective", "domdim", "gldim", "mueller", "gorenstein"}


class CorpusError(ValueError):
    """Raised for any malformed or unusable corpus input."""


@dataclass
class CorpusEntry:
    entry_id: str
    file: str
    root: str
    classification: tuple = ()
    expected: dict = field(default_factory=dict)
    known_indecomposables: tuple = ()
    _table: AlgebraTable = field(default=None, repr=False, compare=False)

    def load_table(self, max_path_length: int = DEFAULT_MAX_PATH_LENGTH) -> AlgebraTable:
        if self._table is None:
            path = os.path.join(self.root, self.file)
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise CorpusError(f"{self.entry_id}: cannot read {path}: {exc}") from exc
            self._table = table_from_text(text, max_path_length, label=self.entry_id)
        return self._table

    def load_known_indecomposables(self) -> list:
        """[(name, module)] for the entry's shipped indecomposable list."""
        tbl = self.load_table()
        out = []
        for rel in self.known_indecomposables:
            path = os.path.join(self.root, rel)
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise CorpusError(f"{self.entry_id}: cannot read {path}: {exc}") from exc
            name = os.path.splitext(os.path.basename(rel))[0]
            out.append((name, parse_module(text, tbl, label=f"{self.entry_id}/{name}")))
        return out

    def is_classified(self, *labels: str) -> bool:
        return all(lab in self.classification for lab in labels)


def _expect_str(raw, what: str) -> str:
    if not isinstance(raw, str) or not raw:
        raise CorpusError(f"{what} must be a non-empty string, got {raw!r}")
    return raw


def load_corpus(root: str) -> list:
    """All entries of the corpus at ``root``, in manifest order."""
    if not os.path.isdir(root):
        raise CorpusError(f"corpus directory not found: {root}")
    manifest_path = os.path.join(root, MANIFEST_NAME)
    if not os.path.isfile(manifest_path):
        raise CorpusError(f"no {MANIFEST_NAME} in {root}")
    with open(manifest_path, "r", encoding="utf-8") as fh:
        try:
            manifest = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{manifest_path}: invalid JSON: {exc}") from exc
    raw_entries = manifest.get("entries")
    if not isinstance(raw_entries, list) or not raw_entries:
        raise CorpusError(f"{manifest_path}: no entries")
    entries = []
    seen = set()
    for raw in raw_entries:
        entry_id = _expect_str(raw.get("id"), "entry id")
        if entry_id in seen:
            raise CorpusError(f"duplicate corpus entry id {entry_id!r}")
        seen.add(entry_id)
        file_name = _expect_str(raw.get("file"), f"{entry_id}: file")
        expected = raw.get("expected", {})
        unknown = set(expected) - _EXPECTED_KEYS
        if unknown:
            raise CorpusError(f"{entry_id}: unknown expected keys {sorted(unknown)}")
        entries.append(
            CorpusEntry(
                entry_id=entry_id,
                file=file_name,
                root=os.path.abspath(root),
                classification=tuple(raw.get("classification", ())),
                expected=dict(expected),
                known_indecomposables=tuple(raw.get("known_indecomposables", ())),
            )
        )
    return entries


def capped_matches(expected: dict, computed) -> bool:
    """Whether a computed CappedNat agrees with its manifest record.

    Only kind and value are compared; certificates are explanatory text.
    """
    if expected.get("kind") != computed.kind:
        return False
    if computed.kind == "infinite":
        return True
    return expected.get("value") == computed.value
