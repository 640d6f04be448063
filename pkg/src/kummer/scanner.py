"""Prime-range sweeps running both regularity routes, with an on-disk cache.

Work is split one prime per task.  The Bernoulli table is built once, up
front, and handed read-only to the workers; results are sorted by p so the
serialized output does not depend on the number of workers.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable, Literal, Optional

from kummer import __version__
from kummer.arith import primes_between
from kummer.bernoulli import BernoulliTable, bernoulli_table, is_regular_bernoulli
from kummer.classnumber import ExactnessError, RouteDisagreement, h_minus_exact, h_minus_numeric

log = logging.getLogger(__name__)

ARTIFACT_VERSION = __version__


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RegularityReport:
    p: int
    regular: bool
    irregular_pairs: tuple[tuple[int, int], ...]
    h_minus: str
    routes_agree: bool
    bernoulli_ms: Optional[float]
    classnumber_ms: Optional[float]
    artifact_version: str

    def to_record(self, timings: bool = True) -> dict:
        rec = {
            "p": self.p,
            "regular": self.regular,
            "irregular_pairs": [list(pair) for pair in self.irregular_pairs],
            "h_minus": self.h_minus,
            "routes_agree": self.routes_agree,
            "bernoulli_ms": self.bernoulli_ms if timings else None,
            "classnumber_ms": self.classnumber_ms if timings else None,
            "artifact_version": self.artifact_version,
        }
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> RegularityReport:
        return cls(
            p=int(rec["p"]),
            regular=bool(rec["regular"]),
            irregular_pairs=tuple((int(a), int(b)) for a, b in rec["irregular_pairs"]),
            h_minus=str(rec["h_minus"]),
            routes_agree=bool(rec["routes_agree"]),
            bernoulli_ms=rec["bernoulli_ms"],
            classnumber_ms=rec["classnumber_ms"],
            artifact_version=str(rec["artifact_version"]),
        )


FIELD_NAMES = tuple(f.name for f in fields(RegularityReport))


def analyze_prime(
    p: int,
    table: BernoulliTable | None = None,
    verify_numeric: bool = False,
    precision_bits: int = 192,
) -> RegularityReport:
    t0 = time.perf_counter()
    flag, pairs = is_regular_bernoulli(p, table)
    t1 = time.perf_counter()
    h = h_minus_exact(p).h_minus
    if verify_numeric:
        numeric = h_minus_numeric(p, precision_bits).h_minus
        if numeric != h:
            raise ExactnessError(f"h^-({p}): exact {h} != numeric {numeric}")
    t2 = time.perf_counter()
    class_flag = h % p != 0
    if flag != class_flag:
        raise RouteDisagreement(f"routes disagree at p={p}: bernoulli={flag}, classnumber={class_flag}")
    return RegularityReport(
        p=p,
        regular=flag,
        irregular_pairs=tuple((pr.p, pr.k) for pr in pairs),
        h_minus=str(h),
        routes_agree=True,
        bernoulli_ms=round((t1 - t0) * 1e3, 3),
        classnumber_ms=round((t2 - t1) * 1e3, 3),
        artifact_version=ARTIFACT_VERSION,
    )


# -- cache --------------------------------------------------------------------

def _canonical(report: RegularityReport) -> str:
    return json.dumps(report.to_record(), separators=(",", ":"))


def _checksum(report: RegularityReport) -> str:
    return hashlib.sha256(_canonical(report).encode()).hexdigest()


def cache_path(p: int, version: str, directory: Path) -> Path:
    key = hashlib.sha256(f"{version}:{p}".encode()).hexdigest()[:32]
    return Path(directory) / f"{key}.json"


def cache_get(p: int, directory: Path, version: str = ARTIFACT_VERSION) -> RegularityReport | None:
    directory = Path(directory)
    if directory.exists() and not directory.is_dir():
        raise NotADirectoryError(f"cache path is not a directory: {directory}")
    path = cache_path(p, version, directory)
    if not path.exists():
        return None
    try:
        entry = json.loads(path.read_text())
        report = RegularityReport.from_record(entry["report"])
        ok = entry["p"] == p and entry["artifact_version"] == version and entry["checksum"] == _checksum(report)
    except (ValueError, KeyError, TypeError):
        ok = False
    if not ok:
        log.warning("ignoring corrupted cache entry %s", path)
        return None
    return report


def cache_put(report: RegularityReport, directory: Path) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    entry = {
        "p": report.p,
        "artifact_version": report.artifact_version,
        "checksum": _checksum(report),
        "report": report.to_record(),
    }
    path = cache_path(report.p, report.artifact_version, directory)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(entry, fh)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return path


# -- scanning -----------------------------------------------------------------

_worker_table: BernoulliTable | None = None
_worker_opts: tuple[bool, int] = (False, 192)


def _init_worker(table: BernoulliTable, verify_numeric: bool, precision_bits: int) -> None:
    global _worker_table, _worker_opts
    _worker_table = table
    _worker_opts = (verify_numeric, precision_bits)


def _work(p: int) -> RegularityReport:
    return analyze_prime(p, _worker_table, *_worker_opts)


def scan(
    start: int,
    stop: int,
    jobs: int = 1,
    cache_dir: Path | None = None,
    verify_numeric: bool = False,
    precision_bits: int = 192,
) -> list[RegularityReport]:
    """One report per prime in [start, stop], sorted by p."""
    if start < 5 or start > stop:
        raise UsageError(f"need 5 <= from <= to, got from={start}, to={stop}")
    if jobs < 1:
        raise UsageError("jobs must be a positive integer")

    primes = primes_between(start, stop)
    done: dict[int, RegularityReport] = {}
    if cache_dir is not None:
        for p in primes:
            hit = cache_get(p, cache_dir)
            if hit is not None:
                done[p] = hit
    todo = [p for p in primes if p not in done]

    if todo:
        table = bernoulli_table(max(todo) - 3)
        if jobs == 1 or len(todo) == 1:
            fresh = [analyze_prime(p, table, verify_numeric, precision_bits) for p in todo]
        else:
            with ProcessPoolExecutor(
                max_workers=jobs,
                initializer=_init_worker,
                initargs=(table, verify_numeric, precision_bits),
            ) as pool:
                fresh = list(pool.map(_work, todo))
        for report in fresh:
            done[report.p] = report
            if cache_dir is not None:
                cache_put(report, cache_dir)

    return [done[p] for p in sorted(done)]


# -- output -------------------------------------------------------------------

def _csv_cell(name: str, value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if name == "irregular_pairs":
        return ";".join(f"{a}:{b}" for a, b in value)
    return str(value)


def render(reports: Iterable[RegularityReport], fmt: Literal["json", "csv"] = "json", timings: bool = False) -> str:
    """Serialize reports.  Timings are blanked unless asked for, keeping output reproducible."""
    reports = list(reports)
    if not reports:
        raise UsageError("no reports to emit")
    records = [r.to_record(timings) for r in reports]
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELD_NAMES)
        for rec in records:
            writer.writerow(_csv_cell(k, rec[k]) for k in FIELD_NAMES)
        return buf.getvalue()
    raise UsageError(f"unknown format {fmt!r}")


def emit(
    reports: Iterable[RegularityReport],
    fmt: Literal["json", "csv"] = "json",
    destination: str | Path | None = None,
    timings: bool = False,
) -> str:
    """Write rendered reports to ``destination`` (stdout when None)."""
    text = render(reports, fmt, timings)
    if destination is None or str(destination) == "-":
        sys.stdout.write(text)
    else:
        path = Path(destination)
        try:
            path.write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return text
