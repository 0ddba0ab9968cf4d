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

import hashlib
import json
import os
import pathlib

import pytest

import amongus_sim as am

ROOT = pathlib.Path(__file__).resolve().parents[2]


def test_run_game_and_replay():
    rec = am.run_game({"num_crew": 3, "num_impostors": 1, "seed": 5}, game_id="py")
    assert rec["game_id"] == "py"
    assert rec["outcome"]["kind"] in ("CrewWin", "ImpostorWin", "Timeout")
    again = am.replay(rec)
    assert again["outcome"] == rec["outcome"]
    assert again["final_state"] == rec["final_state"]


def test_run_game_deterministic():
    cfg = {"num_crew": 5, "num_impostors": 2, "seed": 99}
    assert am.run_game(cfg) == am.run_game(cfg)


def test_bad_config_raises():
    with pytest.raises(am.ConfigError):
        am.run_game({"num_crew": 1, "num_impostors": 2})


def test_rules():
    assert am.check_termination(0, 3, False, 1, 100)["kind"] == "CrewWin"
    assert am.check_termination(2, 2, False, 1, 100)["kind"] == "ImpostorWin"
    assert am.check_termination(1, 3, False, 1, 100) is None
    assert am.tally_votes({0: 2, 1: 2, 2: None}) == 2
    assert am.tally_votes({0: 1, 1: 2}) is None


def test_stats():
    assert am.chi2_sf(3.841458820694124, 1) == pytest.approx(0.05, abs=1e-9)
    assert am.odds_ratio(10, 20, 5, 40)[0] == pytest.approx(4.0)
    assert am.spearman([1, 2, 3, 4], [2, 1, 4, 3])[0] == pytest.approx(0.6)
    x = [[1.0]] * 50 + [[0.0]] * 50
    y = [1.0] * 30 + [0.0] * 20 + [1.0] * 10 + [0.0] * 40
    fit = am.logistic_fit(x, y, ["x"])
    assert fit["beta"][1] == pytest.approx(1.791759469228055, abs=1e-6)


def test_prompts():
    assert hashlib.sha256(am.speech_act_template().encode()).hexdigest() == (
        "f1cea95659e53a7b7cf0db80a7b235e8165a401db64a230518951693edae14dd")
    assert "Only output one word." in am.speech_act_template()
    assert am.normalize_label(" directive. ") == "Directives"


def test_pipeline(tmp_path):
    plan = {"base_seed": 3, "configs": [{"num_crew": 3, "num_impostors": 1,
                                         "repetitions": 4}]}
    plan_file = tmp_path / "plan.json"
    plan_file.write_text(json.dumps(plan))
    summary = am.simulate(plan_file, tmp_path / "corpus")
    assert summary["generated"] == 4
    ann = am.annotate(tmp_path / "corpus", runs=1)
    assert ann["complete"]
    report = am.analyze(tmp_path / "corpus", tmp_path / "corpus" / "annotations",
                        tmp_path / "report")
    assert report["games"]["total"] == 4
    assert (tmp_path / "report" / "report.json").exists()
