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

"""Egalitarian values for TU-games with a priori unions.

Games are given either as a summary (singleton worths, partition, union
worths, total) or explicitly as 2**n worths indexed by coalition bitmask.
"""

import json

from ._core import EgalError, value_of_game, value_of_summary
from . import _core

__all__ = ["EgalError", "value_of_game", "value_of_summary", "reproduce_table", "elevator_table", "check"]

VALUES = ("ed", "esd", "edu", "esd1u", "esd2u", "esd3u")


def reproduce_table(table_id):
    """Reference table 1..6 of the elevator example as a dict."""
    return json.loads(_core.reproduce_json(table_id))


def elevator_table(rules, spec=None):
    """Per-apartment shares for rules like ``"spanish:edu"``.

    ``spec`` is a building spec dict (see docs/formats.md); None means the
    standard three-floor building.
    """
    return json.loads(_core.elevator_json(list(rules), None if spec is None else json.dumps(spec)))


def check(value, axiom, trials=200, seed=1, search=False, exhaustive=False):
    """Runs one axiom check and returns its report as a dict."""
    return json.loads(_core.check_json(value, axiom, trials, seed, search, exhaustive))
