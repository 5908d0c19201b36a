"""Self-contained run reports with a stable JSON encoding.

A report ties a result payload to the exact field it was computed in
(p, n and modulus digits pin the context bit-for-bit) and tags each claim
with its provenance: THEOREM for conclusions of proved statements,
EXHAUSTIVE for completed searches, CONSTRUCTED for verified explicit
families.  Identical inputs must produce byte-identical JSON, so wall time
is only attached when explicitly requested.
"""

from __future__ import annotations

import json

TOOL_NAME = "sgdecomp"
TOOL_VERSION = "0.1.0"
SCHEMA_VERSION = 1

THEOREM = "THEOREM"
EXHAUSTIVE = "EXHAUSTIVE"
CONSTRUCTED = "CONSTRUCTED"


def canonical_json(obj) -> str:
    """Deterministic rendering: sorted keys, fixed separators, 2-space indent."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": "))


def field_identity(ctx) -> dict:
    return {
        "p": ctx.p,
        "n": ctx.n,
        "q": ctx.q,
        "modulus": list(ctx.modulus),
        "generator": ctx.generator,
    }


def run_report(command: str, results, ctx=None,
               wall_time: float | None = None) -> dict:
    report = {
        "schema": SCHEMA_VERSION,
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "command": command,
        "field": field_identity(ctx) if ctx is not None else None,
        "results": results,
    }
    if wall_time is not None:
        report["wall_time_s"] = round(wall_time, 6)
    return report
