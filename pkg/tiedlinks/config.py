#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/config.py — tuning knobs and YAML configuration loading.

Public API
----------
DEFAULTS                         built-in knobs (also the schema's defaults)
cfg = load_config(path=None, **overrides)
                                 DEFAULTS ← YAML file ← overrides; the file path
                                 may come from $TIEDLINKS_CONFIG

Tuning knobs
------------
seed                  PRNG seed printed in every report
trials                Markov harness: random braids per kind
moves_per_braid       Markov harness: random moves applied to each braid
max_n / max_len       strand and word-length budget for random braids
skein_trials          random (α, i, β) instances per rule per kind
homogeneity_trials    random singular braids for the homogeneity check
trace_trials          random (X, Y) pairs for the trace rules, summed over n and presentations
relation_trials       random contexts per defining-relation family
field_trials          random triples per coefficient field for the field axioms
dim_max_n             largest n enumerated by the basis self-test
tie_probability       chance that a random braid starts with a tie arc
tau_probability       chance that a random letter is singular
gcd_degree_threshold  denominator degree past which sums get a gcd cancel
memo_warn_keys        trace memo size that triggers a warning line
homflypt_renaming     oracle variables expressed in each coefficient field

Homflypt renaming
-----------------
On a single-block partition every E acts as the identity, so the bt-algebra
relation T² = 1 + (u−1)E + (u−1)ET collapses to the Hecke relation
T² = u + (u−1)T, and the trace rules become ρ(E_[n]·X·T_n) = a·ρ(E_[n]·X),
ρ(E_[n]·X) = b·ρ(E_[n−1]·X) on the extra strand. Hence
ρ(E_[n]·X) = b^{n−1}·tr(X) for the Ocneanu trace with q = u, z = a/b, and

    Φ(L, {1..n}) = (1/(z·s))^{n−1} · s^ε · tr(·)   with   s² = (1 − u + z)/(u·z),

which is exactly the Homflypt normalization with t = s (so λ = t² = c).
In the V-form E·V = v⁻¹·E·T, so σ ↦ r·V acts as (r/v)·T and the same
argument gives q = v², t = r/v.
"""

from __future__ import annotations

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .validators import assert_config


ENV_VAR = "TIEDLINKS_CONFIG"

DEFAULTS: Dict[str, Any] = {
    "seed": 1,
    "trials": 100,
    "moves_per_braid": 5,
    "max_n": 4,
    "max_len": 8,
    "skein_trials": 100,
    "homogeneity_trials": 50,
    "trace_trials": 500,
    "relation_trials": 5,
    "field_trials": 1000,
    "dim_max_n": 4,
    "tie_probability": 0.3,
    "tau_probability": 0.25,
    "gcd_degree_threshold": 8,
    "memo_warn_keys": 200000,
    "homflypt_renaming": {
        "T": {"q": "u", "t": "s"},
        "V": {"q": "v^2", "t": "r/v"},
    },
}


def _read_yaml(path: Path) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    return data or {}


def load_config(path: Optional[str] = None, **overrides: Any) -> Dict[str, Any]:
    """
    Merge DEFAULTS ← YAML file ← overrides. The file is validated against
    schemas/config.schema.yaml; None-valued overrides are ignored so CLI
    flags that were not given fall through.
    """
    cfg = copy.deepcopy(DEFAULTS)
    src = path or os.environ.get(ENV_VAR)
    if src:
        data = _read_yaml(Path(src))
        assert_config(data, where=str(src))
        for key, val in data.items():
            if key == "homflypt_renaming":
                for tag, names in val.items():
                    cfg[key].setdefault(tag, {}).update(names)
            else:
                cfg[key] = val
    cfg.update({k: v for k, v in overrides.items() if v is not None})
    return cfg
