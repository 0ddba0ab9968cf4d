# Copyright 2026 The amongus-sim Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python front end for the amongus_sim engine, annotator and analysis."""

import json as _json
import os as _os

from . import _core
from ._core import (
    CollinearityError,
    ConfigError,
    chi2_sf,
    chi_squared,
    deception_template,
    logistic_fit,
    normal_sf,
    normalize_label,
    odds_ratio,
    speech_act_template,
    spearman,
    t_two_sided,
    tally_votes,
    two_prop_z,
)

__all__ = [
    "CollinearityError",
    "ConfigError",
    "analyze",
    "annotate",
    "check_termination",
    "chi2_sf",
    "chi_squared",
    "deception_template",
    "logistic_fit",
    "normal_sf",
    "normalize_label",
    "odds_ratio",
    "replay",
    "run_game",
    "simulate",
    "spearman",
    "speech_act_template",
    "t_two_sided",
    "tally_votes",
    "two_prop_z",
]


def run_game(config=None, roster=None, game_id="game"):
    """Plays one game; returns the record as a dict."""
    text = _core.run_game(_json.dumps(config or {}), _json.dumps(roster or {}), game_id)
    return _json.loads(text)


def replay(record):
    """Re-applies a record's inputs; returns the regenerated record."""
    if not isinstance(record, str):
        record = _json.dumps(record)
    return _json.loads(_core.replay(record))


def simulate(plan, out="", workers=1):
    return _json.loads(_core.simulate(_os.fspath(plan), _os.fspath(out), workers))


def annotate(corpus, out="", backend="rules", runs=3, labels="", endpoint="",
             window="meeting"):
    return _json.loads(_core.annotate(_os.fspath(corpus), _os.fspath(out), backend, runs,
                                      _os.fspath(labels), _os.fspath(endpoint), window))


def analyze(corpus, annotations="", out="", speech_run=1, deception_run=1):
    return _json.loads(_core.analyze(_os.fspath(corpus), _os.fspath(annotations),
                                     _os.fspath(out), speech_run, deception_run))


def check_termination(impostors, crew, tasks_done, round, max_rounds):
    """Outcome dict, or None while the game goes on."""
    text = _core.termination(impostors, crew, tasks_done, round, max_rounds)
    return None if text is None else _json.loads(text)
