"""Run configuration, report records and the on-disk result cache."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .engine import DEFAULT_DIAMETER_CAP, DEFAULT_SAMPLES
from .groups import DEFAULT_MAX_ORDER

CACHE_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    max_order: int = DEFAULT_MAX_ORDER
    diameter_cap: int = DEFAULT_DIAMETER_CAP
    samples: int = DEFAULT_SAMPLES
    threads: int = 1
    cache_dir: str | None = None
    seed: int = 0
    timings: bool = False

    def __post_init__(self):
        for name in ("max_order", "diameter_cap", "samples", "threads"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def key_fields(self) -> dict:
        """Fields that can change a result (threads and caching cannot)."""
        return {"max_order": self.max_order, "diameter_cap": self.diameter_cap,
                "samples": self.samples, "seed": self.seed}


def _num(v):
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


@dataclass
class ReportRecord:
    spec: str | None = None
    order: int | None = None
    check: str | None = None
    components: int | None = None
    sizes_histogram: dict | None = None
    representatives: list | None = None
    diameter: int | str | None = None
    lower_bound: bool | None = None
    census: dict | None = None
    predictions: list[dict] = field(default_factory=list)
    ok: bool | None = None
    detail: str | None = None
    timings: dict | None = None

    def to_json(self) -> dict:
        d = {k: _num(v) for k, v in asdict(self).items() if v is not None}
        if not d.get("predictions"):
            d.pop("predictions", None)
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, d: dict) -> ReportRecord:
        d = dict(d)
        if "sizes_histogram" in d and d["sizes_histogram"] is not None:
            d["sizes_histogram"] = {int(k): v for k, v in d["sizes_histogram"].items()}
        return cls(**d)

    @property
    def mismatch(self) -> bool:
        if self.ok is False:
            return True
        return any(p.get("match") is False for p in self.predictions)


def attach(record: ReportRecord, prediction, measured) -> None:
    """Add a prediction to ``record``; ``match`` only when both sides exist."""
    entry = prediction.to_json()
    if prediction.value is not None and measured is not None:
        entry["match"] = prediction.value == measured
        entry["measured"] = str(_num(measured))
    record.predictions.append(entry)


def to_csv(records: list[ReportRecord]) -> str:
    cols = ["spec", "order", "check", "components", "diameter", "lower_bound", "ok", "predictions"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in records:
        d = r.to_json()
        preds = ";".join(f"{p['case']}={p['value']}" + ("" if "match" not in p else
                                                       ("(match)" if p["match"] else "(MISMATCH)"))
                         for p in r.predictions)
        w.writerow([d.get(c, "") if c != "predictions" else preds for c in cols])
    return buf.getvalue()


def to_table(r: ReportRecord) -> str:
    d = r.to_json()
    lines = []
    for k in ("spec", "check", "order", "components", "sizes_histogram", "diameter",
              "lower_bound", "census", "ok", "detail", "timings"):
        if k in d:
            v = d[k]
            if isinstance(v, dict):
                v = ", ".join(f"{a}:{b}" for a, b in v.items())
            lines.append(f"{k:<16}{v}")
    for p in r.predictions:
        status = "" if "match" not in p else ("  match" if p["match"] else "  MISMATCH")
        if p["value"] is None and p["kind"] == "diameter":
            shown = "UNCLASSIFIED"
        elif p["value"] is None and p["cases"]:
            shown = "DISAGREE: " + ", ".join(f"{c['case']}={c['value']}" for c in p["cases"])
        elif p["value"] is None:
            failed = sorted(k for k, ok in p["preconditions"].items() if not ok)
            shown = "n/a" + (f" (fails: {', '.join(failed)})" if failed else "")
        else:
            shown = "CONNECTED" if p.get("connected") else p["value"]
        lines.append(f"{'prediction':<16}{p['case']} = {shown}{status}")
    return "\n".join(lines)


class Cache:
    """One JSON file per (spec, operation, config) key."""

    def __init__(self, root: str | os.PathLike | None):
        self.root = Path(root) if root else None

    @staticmethod
    def key(spec: str, op: str, config: RunConfig) -> str:
        payload = json.dumps({"spec": spec, "op": op, "config": config.key_fields(),
                              "version": CACHE_VERSION}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:32]

    def _path(self, key: str) -> Path:
        assert self.root is not None
        return self.root / f"{key}.json"

    def get(self, spec: str, op: str, config: RunConfig) -> ReportRecord | None:
        if self.root is None:
            return None
        path = self._path(self.key(spec, op, config))
        try:
            blob = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if (blob.get("version") != CACHE_VERSION or blob.get("spec") != spec
                or blob.get("op") != op or blob.get("config") != config.key_fields()):
            return None  # stale or colliding entry
        return ReportRecord.from_json(blob["record"])

    def put(self, spec: str, op: str, config: RunConfig, record: ReportRecord) -> None:
        if self.root is None:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        blob = {"version": CACHE_VERSION, "spec": spec, "op": op,
                "config": config.key_fields(), "record": record.to_json()}
        path = self._path(self.key(spec, op, config))
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(blob, sort_keys=True))
        tmp.replace(path)
