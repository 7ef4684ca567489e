"""Classify mutants by running external compile and launch hooks."""

from __future__ import annotations

import enum
import os
import shlex
import shutil
import subprocess
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from .errors import HookNotExecutable, UnknownMutantId

EVIDENCE_LINES = 64
CRASH_PREFIX = "CRASH:"


class Status(str, enum.Enum):
    STILLBORN = "Stillborn"
    TRIVIAL = "Trivial"
    LIVE = "Live"
    KILLED = "Killed"
    SURVIVED = "Survived"
    SKIPPED = "Skipped"


def default_parallelism():
    return max(1, min(os.cpu_count() or 1, 20))


@dataclass(frozen=True)
class HookConfig:
    """Command templates receive ``{mutant_dir}`` (and ``{mutant_id}``)."""

    compile_command: str
    launch_command: Optional[str] = None
    compile_timeout_s: float = 600.0
    launch_timeout_s: float = 120.0
    max_parallel: int = 0  # 0 picks the CPU count, capped at 20

    def __post_init__(self):
        if self.max_parallel == 0:
            object.__setattr__(self, "max_parallel", default_parallelism())
        if self.max_parallel < 1:
            raise ValueError("max_parallel must be >= 1")
        if self.compile_timeout_s <= 0 or self.launch_timeout_s <= 0:
            raise ValueError("hook timeouts must be positive")

    def argv(self, template, mutant_dir, mutant_id):
        return [part.format(mutant_dir=str(mutant_dir), mutant_id=mutant_id) for part in shlex.split(template)]


@dataclass(frozen=True)
class MutantOutcome:
    mutant_id: str
    status: Status
    evidence: str = ""
    wall_time_s: float = 0.0
    exception: Optional[str] = None

    def to_dict(self):
        d = {"mutant_id": self.mutant_id, "status": self.status.value, "evidence": self.evidence,
             "wall_time_s": round(self.wall_time_s, 3)}
        if self.exception is not None:
            d["exception"] = self.exception
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["mutant_id"], Status(d["status"]), d.get("evidence", ""),
                   d.get("wall_time_s", 0.0), d.get("exception"))


def _head(text, lines=EVIDENCE_LINES):
    return "\n".join(text.splitlines()[:lines])


def _run(argv, timeout):
    try:
        proc = subprocess.run(argv, stdout=subprocess.PIPE, stderr=subprocess.STDOUT, timeout=timeout)
    except subprocess.TimeoutExpired:
        return None, "timeout"
    return proc.returncode, proc.stdout.decode("utf-8", "replace")


def _check_executable(template):
    if not template:
        return
    program = shlex.split(template)[0]
    if shutil.which(program) is None:
        raise HookNotExecutable(f"hook program not found or not executable: {program}")


def _id_key(mutant_id):
    op, _, n = mutant_id.rpartition("-")
    return (op, int(n)) if n.isdigit() else (mutant_id, 0)


def verify_one(mutant_id, mutant_dir, hooks: HookConfig) -> MutantOutcome:
    started = time.monotonic()

    def done(status, evidence="", exception=None):
        return MutantOutcome(mutant_id, status, _head(evidence), time.monotonic() - started, exception)

    if not Path(mutant_dir).is_dir():
        return done(Status.SKIPPED, f"mutant directory missing: {mutant_dir}")
    code, output = _run(hooks.argv(hooks.compile_command, mutant_dir, mutant_id), hooks.compile_timeout_s)
    if code is None or code != 0:
        return done(Status.STILLBORN, output)
    if not hooks.launch_command:
        return done(Status.LIVE, output)
    code, output = _run(hooks.argv(hooks.launch_command, mutant_dir, mutant_id), hooks.launch_timeout_s)
    if code is None:
        return done(Status.TRIVIAL, "timeout")
    first = output.splitlines()[0].strip() if output.strip() else ""
    if first.startswith(CRASH_PREFIX):
        return done(Status.TRIVIAL, output, first[len(CRASH_PREFIX):].strip() or None)
    if code != 0:
        return done(Status.SKIPPED, output)
    return done(Status.LIVE, output)


def verify(mutant_dirs, hooks: HookConfig):
    """Run the hooks for every mutant.

    ``mutant_dirs`` maps mutant_id to its materialized clone directory.
    Returns one outcome per mutant, ordered by operator then sequence number.
    """
    _check_executable(hooks.compile_command)
    _check_executable(hooks.launch_command)
    items = sorted(dict(mutant_dirs).items(), key=lambda kv: _id_key(kv[0]))
    with ThreadPoolExecutor(max_workers=hooks.max_parallel) as pool:
        futures = [pool.submit(verify_one, mid, mdir, hooks) for mid, mdir in items]
        return [f.result() for f in futures]


def classify_with_tests(outcomes, test_results):
    """Mark Live mutants Killed or Survived from ``{id: {"any_test_failed": bool}}``."""
    by_id = {o.mutant_id: o for o in outcomes}
    for mid in test_results:
        if mid not in by_id or by_id[mid].status != Status.LIVE:
            raise UnknownMutantId(f"{mid} is not a Live mutant")
    updated = []
    for o in outcomes:
        result = test_results.get(o.mutant_id)
        if result is None:
            updated.append(o)
        else:
            status = Status.KILLED if result["any_test_failed"] else Status.SURVIVED
            updated.append(replace(o, status=status))
    return updated


def outcomes_document(outcomes):
    return {"format_version": 1, "outcomes": [o.to_dict() for o in outcomes]}


def outcomes_from_document(doc):
    return [MutantOutcome.from_dict(d) for d in doc["outcomes"]]
