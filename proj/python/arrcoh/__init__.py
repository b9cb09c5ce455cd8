# Copyright 2026 The Authors.
#
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

"""Exact twisted cohomology of real line and point arrangements.

Arrangements are passed as text in the dim/coefficient format used by the
command-line tool. Report functions return the same JSON documents as
arrcoh --json, decoded into dictionaries.
"""

import json as _json

from . import _arrcoh
from ._arrcoh import InternalError, ParseError, betti, normalize

schema_version = _arrcoh.schema_version

__all__ = [
    "InternalError",
    "ParseError",
    "analyze",
    "aomoto",
    "betti",
    "cohomology",
    "corpus",
    "load",
    "normalize",
    "schema_version",
    "sweep",
    "triple",
]


def load(path):
    """Read an arrangement file and return its text."""
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def corpus():
    """Built-in arrangements as a name -> text mapping."""
    return dict(_arrcoh.corpus())


def analyze(text, seed=1):
    return _json.loads(_arrcoh.analyze(text, seed))


def cohomology(text, m=None, exponents=(), prime=None, roots=(), seed=1):
    return _json.loads(_arrcoh.cohomology(text, m, list(exponents), prime, list(roots), seed))


def sweep(text, m, prime=None, characters=True, limit=1000000, threads=0, seed=1):
    return _json.loads(_arrcoh.sweep(text, m, prime, characters, limit, threads, seed))


def aomoto(text, weights, field="Q", seed=1):
    return _json.loads(_arrcoh.aomoto(text, [str(w) for w in weights], str(field), seed))


def triple(text, delete, m=None, exponents=(), prime=None, roots=(), seed=1):
    return _json.loads(
        _arrcoh.triple(text, delete, m, list(exponents), prime, list(roots), seed)
    )
