# Copyright 2026 The egal Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import egal


def test_summary_value():
    # Elevator apartments, floors as unions.
    shares = egal.value_of_summary("edu", [100, 100, 100, 90, 90, 80], [[0, 1, 2], [3, 4], [5]], [100, 90, 80], 120)
    assert shares == pytest.approx([40 / 3] * 3 + [20, 20, 40])


def test_explicit_value():
    # v(0)=1, v(1)=3, v(01)=6, v(2)=2, v(N)=12 with P = {{0,1},{2}}.
    worths = [0, 1, 3, 6, 2, 0, 0, 12]
    assert egal.value_of_game("esd2u", 3, worths, [[0, 1], [2]]) == pytest.approx([3, 5, 4])
    assert sum(egal.value_of_game("esd", 3, worths)) == pytest.approx(12)


def test_reproduce_table():
    t = egal.reproduce_table(6)
    cols = {c["name"]: c["values"] for c in t["columns"]}
    assert cols["Dutch rule"][-1] == pytest.approx(-200 / 3)
    assert cols["Spanish rule"][-1] == pytest.approx(-2060)
    t4, t5 = egal.reproduce_table(4)["columns"], egal.reproduce_table(5)["columns"]
    for a, b in zip(t4, t5):
        assert a["values"] == pytest.approx(b["values"], rel=1e-12)


def test_elevator_uniform_surface():
    spec = {
        "floors": [{"label": "1", "apartments": [{"label": "a", "surface": 50}, {"label": "b", "surface": 50}]},
                   {"label": "2", "apartments": [{"label": "c", "surface": 50}]}],
        "totalCost": 90,
    }
    t = egal.elevator_table(["dutch:esd1u", "spanish:esd1u"], spec)
    assert t["columns"][0]["values"] == pytest.approx(t["columns"][1]["values"])


def test_check_and_errors():
    r = egal.check("edu", "npp", trials=50)
    assert r["outcome"] == "holds"
    r = egal.check("esd3u", "qgp", search=True)
    assert r["outcome"] == "violated" and "witness" in r
    with pytest.raises(egal.EgalError):
        egal.value_of_summary("edu", [1, 2], [[0]], [1], 3)
    with pytest.raises(ValueError):
        egal.value_of_game("nope", 1, [0, 1])
