"""Recorded results that later runs are verified against."""
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .. import __version__

logger = logging.getLogger(__name__)

GOLDEN_VERSION = "v1"
ENVELOPE_SLACK = 1.05

STATUS_OK = 0
STATUS_FAILED = 1

Envelopes = Dict[str, Tuple[float, float]]


@dataclass
class GoldenStore:
    root: Path

    def path(self, name: str) -> Path:
        return Path(self.root) / GOLDEN_VERSION / f"{name}.json"

    def load(self, name: str) -> Optional[dict]:
        path = self.path(name)
        if not path.exists():
            return None
        return json.loads(path.read_text(encoding="utf-8"))

    def record(self, name: str, digest: str, envelopes: Envelopes, deterministic: bool) -> Path:
        path = self.path(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "version": __version__,
            "deterministic": deterministic,
            "digest": digest,
            "envelopes": {key: [float(lo), float(hi)] for key, (lo, hi) in sorted(envelopes.items())},
        }
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        logger.info("recorded golden %s", path)
        return path


def widened(recorded: Envelopes, current: Envelopes, slack: float = ENVELOPE_SLACK) -> List[str]:
    """Keys whose current envelope reaches beyond the recorded one by more than ``slack``."""
    problems = []
    for key, (lo, hi) in current.items():
        if key not in recorded:
            problems.append(f"{key}: no recorded envelope")
            continue
        rec_lo, rec_hi = recorded[key]
        if lo < rec_lo - (slack - 1.0) * abs(rec_lo) or hi > rec_hi + (slack - 1.0) * abs(rec_hi):
            problems.append(f"{key}: [{lo:.6g}, {hi:.6g}] outside recorded [{rec_lo:.6g}, {rec_hi:.6g}]")
    return problems


def check_golden(store: GoldenStore, name: str, mode: Optional[str], digest: str, envelopes: Envelopes,
                 deterministic: bool) -> int:
    """Record or verify one experiment's golden; returns an exit status."""
    if mode is None:
        return STATUS_OK
    if mode == "record":
        store.record(name, digest, envelopes, deterministic)
        return STATUS_OK
    golden = store.load(name)
    if golden is None:
        logger.error("no golden recorded for %s at %s", name, store.path(name))
        return STATUS_FAILED
    if deterministic and golden.get("deterministic"):
        if golden.get("digest") != digest:
            logger.error("%s output differs from the recorded golden (digest %s, recorded %s)", name, digest[:12],
                         str(golden.get("digest"))[:12])
            return STATUS_FAILED
        return STATUS_OK
    recorded = {key: tuple(value) for key, value in golden.get("envelopes", {}).items()}
    problems = widened(recorded, envelopes)
    for problem in problems:
        logger.error("%s envelope widened: %s", name, problem)
    return STATUS_FAILED if problems else STATUS_OK
