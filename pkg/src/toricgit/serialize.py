"""Canonical JSON emission: sorted keys, fixed layout, trailing newline.

Reports contain only ints, strings, lists, dicts, bools and None, so
parsing an emitted document and re-serializing it is byte-identical.
"""

import json


def canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json(path, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(obj))
