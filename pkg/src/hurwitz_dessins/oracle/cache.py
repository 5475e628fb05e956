"""Append-only JSON-lines cache of oracle counts, keyed by the canonical datum."""

from __future__ import annotations

import json
import os
from pathlib import Path

from ..branch_data import BranchDatum

ENV_VAR = "HURWITZ_CACHE"


def _key(datum: BranchDatum, moves) -> str:
    flags = {"mirror": moves.use_mirror, "relabel": moves.use_relabel}
    return json.dumps([datum.to_json(), flags], sort_keys=True)


class OracleCache:
    def __init__(self, path):
        self.path = Path(path)
        self._records = {}
        if self.path.exists():
            with open(self.path) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    self._records[json.dumps([rec["datum"], rec["flags"]], sort_keys=True)] = rec

    @classmethod
    def from_env(cls, default=None):
        path = os.environ.get(ENV_VAR) or default
        return cls(path) if path else None

    def get(self, datum: BranchDatum, moves):
        from .weak import OracleCounts

        rec = self._records.get(_key(datum, moves))
        if rec is None:
            return None
        return OracleCounts(rec["conj_orbits"], rec["weak"])

    def put(self, datum: BranchDatum, moves, counts) -> None:
        rec = {
            "datum": datum.to_json(),
            "conj_orbits": counts.conj_orbits,
            "weak": counts.weak,
            "flags": {"mirror": moves.use_mirror, "relabel": moves.use_relabel},
        }
        self._records[_key(datum, moves)] = rec
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")

    def __len__(self):
        return len(self._records)
