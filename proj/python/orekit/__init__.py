"""Python access to the orekit operator workbench.

Every call returns an Outcome whose reports are the same JSON documents the
command line tool prints, decoded into dicts.
"""

import json
from typing import List, NamedTuple, Optional, Sequence

from . import _orekit

schema_version = _orekit.schema_version


class Outcome(NamedTuple):
    exit_code: int  # 0 ok, 1 error, 2 undecided case split
    reports: List[dict]

    @property
    def report(self) -> dict:
        return self.reports[0]


def _wrap(raw) -> Outcome:
    code, texts = raw
    return Outcome(code, [json.loads(t) for t in texts])


def commands() -> List[str]:
    return list(_orekit.commands())


def run(command: str, text: str, *, source: str = "<string>", case: str = "",
        assume: Sequence[str] = (), split: bool = False, policy: str = "strict",
        ext_index: Optional[int] = None, max_steps: Optional[int] = None,
        timing: bool = False) -> Outcome:
    return _wrap(_orekit.run(command, text, source, case, list(assume), split, policy,
                             -1 if ext_index is None else ext_index,
                             -1 if max_steps is None else max_steps, timing))


def run_file(command: str, path: str, **kw) -> Outcome:
    with open(path, encoding="utf-8") as f:
        text = f.read()
    kw.setdefault("source", path)
    return run(command, text, **kw)


def spencer(family: str, n: int) -> Outcome:
    return _wrap(_orekit.spencer(family, n))


def to_markdown(report: dict) -> str:
    return _orekit.to_markdown(json.dumps(report))


def digest(text: str) -> str:
    return _orekit.digest(text)


__all__ = ["Outcome", "commands", "run", "run_file", "spencer", "to_markdown", "digest", "schema_version"]
