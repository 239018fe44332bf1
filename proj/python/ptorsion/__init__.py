# Copyright 2026 The ptorsion Authors
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

"""Planar torsion detection on blown up summed open books.

Domains are plain dicts in the JSON domain format (see docs/domain.schema.json);
a JSON string is accepted wherever a domain or record is expected.
"""

import json as _json

from . import _ptorsion
from ._ptorsion import (
    CatalogMismatch,
    Error,
    IntegerOverflowError,
    InvalidReference,
    InvariantViolation,
    ParseError,
    PreconditionError,
)

__all__ = [
    "CatalogMismatch",
    "Error",
    "IntegerOverflowError",
    "InvalidReference",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "analyze",
    "canonical",
    "ech_report",
    "enumerate_domains",
    "evaluate_index_record",
    "named_models",
    "torsion_report",
    "validate",
    "write_catalog",
]


def _text(value):
    return value if isinstance(value, str) else _json.dumps(value)


def validate(domain):
    """Invariant violations and connected components of a domain."""
    return _json.loads(_ptorsion.validate(_text(domain)))


def canonical(domain):
    """Canonical form of a valid domain."""
    return _json.loads(_ptorsion.canonical(_text(domain)))


def torsion_report(domain):
    """Planar torsion order, witness and candidate pieces."""
    return _json.loads(_ptorsion.torsion_report(_text(domain)))


def analyze(domain):
    """The full analysis record also used by the catalog."""
    return _json.loads(_ptorsion.analyze(_text(domain)))


def ech_report(domain, piece=None, umap=0, twisted=False, k0=16):
    """Perturbed model, gamma_0 and its differential, optional U-map tower."""
    return _json.loads(_ptorsion.ech_report(_text(domain), piece, umap, twisted, k0))


def evaluate_index_record(record):
    """A copy of an index record with the computed values filled in."""
    return _json.loads(_ptorsion.evaluate_index_record(_text(record)))


def named_models():
    """The named models: dicts with name, summary, domain and expected values."""
    return _json.loads(_ptorsion.named_models())


def enumerate_domains(max_pieces, max_edges):
    """Canonical forms of all connected domains up to the given size."""
    return _json.loads(_ptorsion.enumerate_domains(max_pieces, max_edges))


def write_catalog(directory, bounds=None, threads=1):
    """Writes the catalog (and enumeration if bounds=(pieces, edges)) to a directory."""
    return _json.loads(_ptorsion.write_catalog(str(directory), bounds, threads))
