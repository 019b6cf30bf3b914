"""Verification report plumbing shared by the CLI suites.

A report is a list of uniquely-identified checks, each with a status in
{pass, fail, partial, hypothesis-not-met} and optional witness data.  The
JSON rendering (schema report/1) is deterministic; the wall-time stamp is
kept out of it by default so reports stay byte-identical across runs, and
goes to the human-readable rendering instead.
"""

from __future__ import annotations

import json
import platform
from dataclasses import dataclass, field

from . import __version__

PASS = "pass"
FAIL = "fail"
PARTIAL = "partial"
HYP_NOT_MET = "hypothesis-not-met"


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    witness: object = None


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)
    wall_time_s: float = 0.0

    def add(self, check_id, anchor, status, witness=None):
        if any(c.id == check_id for c in self.checks):
            raise ValueError(f"duplicate check id {check_id}")
        self.checks.append(Check(check_id, anchor, status, witness))

    def record(self, check_id, anchor, passed, witness=None):
        self.add(check_id, anchor, PASS if passed else FAIL, witness)

    @property
    def overall(self):
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    @property
    def failed(self):
        return [c for c in self.checks if c.status == FAIL]

    def to_json_dict(self, include_timing=False):
        out = {
            "schema": "report/1",
            "suite": self.suite,
            "toolchain": {
                "package": f"gagola {__version__}",
                "python": platform.python_version(),
            },
            "overall": self.overall,
            "checks": [
                {
                    "id": c.id,
                    "anchor": c.anchor,
                    "status": c.status,
                    "witness": c.witness,
                }
                for c in sorted(self.checks, key=lambda c: c.id)
            ],
        }
        if include_timing:
            out["wallTimeS"] = round(self.wall_time_s, 3)
        return out

    def to_json(self, include_timing=False):
        return json.dumps(self.to_json_dict(include_timing), indent=2)

    def render_text(self):
        lines = [f"suite {self.suite}: {self.overall} "
                 f"({len(self.checks)} checks, {self.wall_time_s:.2f}s)"]
        for c in sorted(self.checks, key=lambda c: c.id):
            lines.append(f"  [{c.status:>4}] {c.id}  ({c.anchor})")
            if c.status == FAIL and c.witness is not None:
                lines.append(f"         witness: {c.witness}")
        return "\n".join(lines)
