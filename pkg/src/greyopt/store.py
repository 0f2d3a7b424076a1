"""Content-addressed model store with optional directory persistence.

Models are stored as their canonical JSON documents; the handle is a hash
of that text, so ingesting the same document twice is a no-op and distinct
documents never collide.  When a root directory is configured every
document lands in ``models/<handle>.json`` so a restarted service sees the
same handles.
"""

from __future__ import annotations

import json
from pathlib import Path

from .documents import (
    ParsedModel,
    canonical_text,
    document_handle,
    parse_document,
)
from .errors import UnknownHandle


class ModelStore:
    def __init__(self, root: str | Path | None = None):
        self._documents: dict[str, dict] = {}
        self._parsed: dict[str, ParsedModel] = {}
        self.root = Path(root) if root is not None else None
        if self.root is not None:
            (self.root / "models").mkdir(parents=True, exist_ok=True)
            for path in sorted((self.root / "models").glob("*.json")):
                doc = json.loads(path.read_text())
                self._documents[path.stem] = doc

    def ingest(self, doc: dict) -> str:
        """Validate and store a document, returning its handle (idempotent)."""
        parsed = parse_document(doc)
        handle = document_handle(doc)
        if handle not in self._documents:
            self._documents[handle] = doc
            self._parsed[handle] = parsed
            if self.root is not None:
                path = self.root / "models" / f"{handle}.json"
                tmp = path.with_suffix(".tmp")
                tmp.write_text(canonical_text(doc))
                tmp.replace(path)
        return handle

    def document(self, handle: str) -> dict:
        try:
            return self._documents[handle]
        except KeyError:
            raise UnknownHandle(handle) from None

    def model(self, handle: str) -> ParsedModel:
        if handle not in self._parsed:
            self._parsed[handle] = parse_document(self.document(handle))
        return self._parsed[handle]

    def handles(self) -> list[str]:
        return sorted(self._documents)

    def __contains__(self, handle: str) -> bool:
        return handle in self._documents
