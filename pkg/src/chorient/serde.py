"""Canonical JSON serialization shared by the library and the HTTP facade.

Key order is insertion order of the to_jsonable dicts, so identical inputs
always produce identical bytes.
"""

from __future__ import annotations

import json


def canonical_dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, allow_nan=False)


def canonical_bytes(obj) -> bytes:
    return canonical_dumps(obj).encode("utf-8")
