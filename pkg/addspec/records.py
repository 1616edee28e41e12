"""
Run records: writing them as JSON lines, CSV or text, and reading them back.
"""

import csv
import hashlib
import io
import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, List, TextIO, Union

from loguru import logger as _logger

from addspec import __version__
from addspec.exceptions import RecordError
from addspec.utils import format_values

CSV_COLUMNS = ("s", "N", "f", "g", "attained", "exceptions")


class RecordKind(str, Enum):
    SPECTRUM = "spectrum"
    VERIFY = "verify"
    CONJECTURE = "conjecture"
    RVALUE = "rvalue"
    CONSTRUCT = "construct"


class RecordFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


def _payload(result: Any) -> Any:
    return result.to_dict() if hasattr(result, "to_dict") else result


@dataclass(frozen=True)
class RunRecord:
    """One CLI result.

    ``result`` holds the JSON form of the payload (``SpectrumResult.to_dict()``,
    ``VerificationReport.to_dict()``, a prediction or a plain integer).
    ``elapsed_ms`` is the only field that differs between identical runs.
    """

    kind: RecordKind
    params: Dict[str, Any]
    result: Any
    tool_version: str = __version__
    elapsed_ms: int = 0

    @classmethod
    def make(cls, kind, params: Dict[str, Any], result: Any, elapsed_ms: int = 0):
        return cls(
            RecordKind(kind), dict(params), _payload(result), __version__, elapsed_ms
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "params": self.params,
            "result": self.result,
            "tool_version": self.tool_version,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "RunRecord":
        try:
            d = json.loads(line)
            return cls(
                kind=RecordKind(d["kind"]),
                params=d["params"],
                result=d["result"],
                tool_version=d["tool_version"],
                elapsed_ms=d["elapsed_ms"],
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise RecordError(f"malformed record: {exc}") from exc


def _set_text(members: Iterable[int]) -> str:
    return "{" + format_values(members) + "}"


def render_text(record: RunRecord) -> str:
    """Human readable form of a record, one or more lines."""
    res = record.result
    if record.kind is RecordKind.RVALUE:
        return str(res)
    if record.kind is RecordKind.SPECTRUM:
        line = (
            f"R({res['s']},{res['N']}) = {_set_text(res['attained'])}; "
            f"f={res['f']} g={res['g']}; exceptions={_set_text(res['exceptions'])}"
        )
        if record.params.get("list_extremal"):
            lines = [line]
            lines += [f"  min {_set_text(m)}" for m in res["min_sets"]]
            lines += [f"  max {_set_text(m)}" for m in res["max_sets"]]
            lines.append(
                f"  {res['min_count']} minimizer(s), {res['max_count']} maximizer(s)"
            )
            return "\n".join(lines)
        return line
    if record.kind in (RecordKind.VERIFY, RecordKind.CONJECTURE):
        lines = [
            f"{res['statement_id']} [{res['parameter_range']}]: "
            f"{res['status']} (checked {res['checked']})"
        ]
        for cx in res["counterexamples"]:
            witness = "" if cx["set"] is None else f" set={_set_text(cx['set'])}"
            tag = "errata" if cx["errata"] else "counterexample"
            lines.append(
                f"  {tag} {cx['parameters']}{witness}: "
                f"expected {cx['expected']}, got {cx['actual']}"
            )
        return "\n".join(lines)
    # construct
    note = "" if res["in_validated_range"] else ", outside validated range"
    return (
        f"{record.params['spec']} -> {_set_text(res['set'])}: "
        f"predicted r={res['predicted_r']} actual r={res['actual_r']} "
        f"({res['source']}{note})"
    )


def _csv_row(record: RunRecord) -> List[Any]:
    if record.kind is not RecordKind.SPECTRUM:
        raise ValueError(
            f"CSV output is only defined for spectrum records, not {record.kind.value}"
        )
    res = record.result
    return [
        res["s"],
        res["N"],
        res["f"],
        res["g"],
        format_values(res["attained"], ";"),
        format_values(res["exceptions"], ";"),
    ]


def _render(records: List[RunRecord], fmt: RecordFormat, header: bool) -> str:
    if fmt is RecordFormat.JSON:
        return "".join(r.to_json() + "\n" for r in records)
    if fmt is RecordFormat.TEXT:
        return "".join(render_text(r) + "\n" for r in records)
    rows = [_csv_row(r) for r in records]
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue()


def write_records(
    records: Iterable[RunRecord],
    sink: Union[str, Path, TextIO],
    format: Union[str, RecordFormat] = RecordFormat.JSON,
    append: bool = False,
):
    """Write records to a file path or an open text stream.

    Args:
        records: the records, written in order
        sink: path or text stream
        format: ``json`` (one record per line), ``csv`` (spectrum records
            only, header then one row per record) or ``text``
        append: append to an existing file instead of overwriting it; no
            CSV header is written to a non-empty file

    Raises:
        ValueError: CSV requested for a record that is not a spectrum
        RecordError: the file cannot be written
    """
    fmt = RecordFormat(format)
    records = list(records)
    if not isinstance(sink, (str, Path)):
        sink.write(_render(records, fmt, header=True))
        return
    path = Path(sink)
    header = not (append and path.is_file() and path.stat().st_size > 0)
    text = _render(records, fmt, header)
    mode = "a" if append else "w"
    try:
        with open(path, mode, encoding="utf-8") as fobj:
            fobj.write(text)
    except OSError as exc:
        raise RecordError(f"{path}: cannot write records: {exc}") from exc
    _logger.debug(f"Wrote {len(records)} record(s) to {path}")


class RecordLog:
    """Records loaded from one or more JSON lines files.

    Files written with ``--append`` by resumed runs may overlap; identical
    lines are loaded once::

        log = RecordLog('run1.jsonl', 'run2.jsonl')
        for rec in log.get('spectrum'):
            ...

    Args:
        *files (str): one or multiple file names
        remove_duplicates (bool): skip lines that were already loaded
    """

    def __init__(self, *files, remove_duplicates=True):
        self.files = files
        # records by kind, in file order
        self.data: Dict[RecordKind, List[RunRecord]] = dict()
        # all records in load order
        self._ordered: List[RunRecord] = []
        # number of lines that did not decode to a record
        self.errorcount = 0
        self._files_read = False
        self._line_hashes = set()
        self._remove_duplicates = remove_duplicates

    def load(self):
        """Read all files. Called on first access by :meth:`get`, :meth:`has`
        and :meth:`list_kinds`."""
        _logger.info(f"Reading records from {len(self.files)} file(s)")
        for fname in self.files:
            self._load_single_file(fname)
        self._files_read = True
        if self.errorcount:
            _logger.warning(f"Skipped {self.errorcount} malformed record line(s)")

    def _load_single_file(self, fname):
        try:
            with open(fname, "r", encoding="utf-8") as fobj:
                lines = fobj.readlines()
        except OSError as exc:
            raise RecordError(f"{fname}: cannot read records: {exc}") from exc
        for line in lines:
            self._parse_line(line)

    def _parse_line(self, line: str):
        if not line.strip():
            return
        if self._remove_duplicates:
            lhash = hashlib.md5(line.encode()).hexdigest()
            if lhash in self._line_hashes:
                return
            self._line_hashes.add(lhash)
        try:
            record = RunRecord.from_json(line)
        except RecordError:
            self.errorcount += 1
            return
        self.data.setdefault(record.kind, []).append(record)
        self._ordered.append(record)

    def _ensure_loaded(self):
        if not self._files_read:
            self.load()

    def records(self) -> List[RunRecord]:
        """All records in the order they were read."""
        self._ensure_loaded()
        return list(self._ordered)

    def get(self, kind) -> List[RunRecord]:
        """Records of one kind.

        Raises:
            KeyError: no record of this kind was loaded
        """
        self._ensure_loaded()
        return self.data[RecordKind(kind)]

    def has(self, kind) -> bool:
        self._ensure_loaded()
        return RecordKind(kind) in self.data

    def list_kinds(self) -> List[str]:
        self._ensure_loaded()
        return [k.value for k in self.data]
