"""Reading and writing the JSON dialect shared by the CLI and the datasets.

Every document is a single JSON object carrying a ``format`` tag (optional
on input, always written) and the fields listed in the README:

* density-matrix:       n_qubits, entries (4**N rows of [re, im])
* coefficients:         n_parties, lambda0_plus, lambda0_minus, lambdas
* measured-coefficients: n_parties, lambda0_plus/lambda0_minus/fidelity as
                         [lo, hi] pairs, two_lambda map, optional meta
* molecule:             n_parties, pairs, optional weights
* scenario:             states (paths to coefficient files), optional grouping

Map keys for splittings/sectors are (N-1)-bit chain strings; missing keys
default to zero (coefficients) or to the trivial bound (measured data).
"""

import json
import math
from pathlib import Path

import numpy as np

from .activation import Scenario
from .detect import Interval, MeasuredCoefficients
from .family import GhzDiagonalState, n_sectors
from .molecules import MoleculeSpec
from .partitions import PartyGrouping, chain_string
from .qlinalg import DEFAULT_MAX_QUBITS, DensityMatrix


class FormatError(ValueError):
    """A document failed to parse or violated its schema."""


def load_document(path):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: top-level value must be an object")
    return doc


def detect_kind(doc):
    kind = doc.get("format")
    if kind is not None:
        return kind
    if "entries" in doc and "n_qubits" in doc:
        return "density-matrix"
    if "two_lambda" in doc:
        return "measured-coefficients"
    if "pairs" in doc:
        return "molecule"
    if "states" in doc:
        return "scenario"
    if "n_parties" in doc:
        return "coefficients"
    raise FormatError("cannot determine the document format")


def _field(doc, name, types, where):
    if name not in doc:
        raise FormatError(f"{where}: missing field {name!r}")
    value = doc[name]
    if not isinstance(value, types):
        raise FormatError(f"{where}: field {name!r} has the wrong type")
    return value


def _chain_map(doc_map, n_parties, where):
    if not isinstance(doc_map, dict):
        raise FormatError(f"{where}: expected an object keyed by bit chains")
    out = {}
    for key, value in doc_map.items():
        if (
            not isinstance(key, str)
            or len(key) != n_parties - 1
            or any(c not in "01" for c in key)
        ):
            raise FormatError(f"{where}: key {key!r} is not an {n_parties - 1}-bit chain")
        k = int(key, 2)
        if k == 0:
            raise FormatError(f"{where}: the all-zero chain labels no sector")
        out[k] = value
    return out


def parse_density_matrix(doc, max_qubits=DEFAULT_MAX_QUBITS):
    n = _field(doc, "n_qubits", int, "density-matrix")
    entries = _field(doc, "entries", list, "density-matrix")
    if n < 1:
        raise FormatError("density-matrix: n_qubits must be positive")
    dim = 2**n
    if len(entries) != dim * dim:
        raise FormatError(
            f"density-matrix: expected {dim * dim} entries, got {len(entries)}"
        )
    values = []
    for i, entry in enumerate(entries):
        if not (isinstance(entry, list) and len(entry) == 2):
            raise FormatError(f"density-matrix: entry {i} is not a [re, im] pair")
        values.append(complex(float(entry[0]), float(entry[1])))
    matrix = np.array(values, dtype=complex).reshape(dim, dim)
    return DensityMatrix(n, matrix, max_qubits=max_qubits)


def density_matrix_payload(rho):
    entries = [
        [value.real, value.imag] for value in rho.matrix.reshape(-1)
    ]
    return {"format": "density-matrix", "n_qubits": rho.n_qubits, "entries": entries}


def parse_coefficients(doc):
    n = _field(doc, "n_parties", int, "coefficients")
    if n < 2:
        raise FormatError("coefficients: n_parties must be at least 2")
    lambdas = _chain_map(doc.get("lambdas", {}), n, "coefficients.lambdas")
    for k, value in lambdas.items():
        if not isinstance(value, (int, float)):
            raise FormatError("coefficients.lambdas: values must be numbers")
    return GhzDiagonalState.from_lambdas(
        n,
        float(_field(doc, "lambda0_plus", (int, float), "coefficients")),
        float(doc.get("lambda0_minus", 0.0)),
        lambdas,
    )


def coefficients_payload(state):
    n = state.n_parties
    return {
        "format": "coefficients",
        "n_parties": n,
        "lambda0_plus": state.lambda0_plus,
        "lambda0_minus": state.lambda0_minus,
        "lambdas": {
            chain_string(k, n): state.lam[k - 1]
            for k in range(1, n_sectors(n) + 1)
            if state.lam[k - 1] != 0.0
        },
    }


def _parse_interval(value, where):
    if not (isinstance(value, list) and len(value) == 2):
        raise FormatError(f"{where}: expected a [lo, hi] pair")
    try:
        return Interval(float(value[0]), float(value[1]))
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from exc


def parse_measured(doc):
    n = _field(doc, "n_parties", int, "measured-coefficients")
    if n < 2:
        raise FormatError("measured-coefficients: n_parties must be at least 2")
    two_lambda = {
        k: _parse_interval(v, f"measured-coefficients.two_lambda[{chain_string(k, n)}]")
        for k, v in _chain_map(
            doc.get("two_lambda", {}), n, "measured-coefficients.two_lambda"
        ).items()
    }
    fidelity = doc.get("fidelity")
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise FormatError("measured-coefficients: meta must be an object")
    return MeasuredCoefficients(
        n,
        _parse_interval(
            _field(doc, "lambda0_plus", list, "measured-coefficients"),
            "measured-coefficients.lambda0_plus",
        ),
        _parse_interval(
            _field(doc, "lambda0_minus", list, "measured-coefficients"),
            "measured-coefficients.lambda0_minus",
        ),
        two_lambda,
        fidelity=_parse_interval(fidelity, "measured-coefficients.fidelity")
        if fidelity is not None
        else None,
        meta=meta,
    )


def measured_payload(measured):
    n = measured.n_parties
    payload = {
        "format": "measured-coefficients",
        "n_parties": n,
        "lambda0_plus": [measured.lambda0_plus.lo, measured.lambda0_plus.hi],
        "lambda0_minus": [measured.lambda0_minus.lo, measured.lambda0_minus.hi],
        "two_lambda": {
            chain_string(k, n): [interval.lo, interval.hi]
            for k, interval in sorted(measured.two_lambda.items())
        },
    }
    if measured.fidelity is not None:
        payload["fidelity"] = [measured.fidelity.lo, measured.fidelity.hi]
    if measured.meta:
        payload["meta"] = measured.meta
    return payload


def parse_molecule(doc):
    n = _field(doc, "n_parties", int, "molecule")
    pairs = _field(doc, "pairs", list, "molecule")
    parsed_pairs = []
    for i, pair in enumerate(pairs):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise FormatError(f"molecule: pairs[{i}] is not a [k, l] pair")
        parsed_pairs.append((int(pair[0]), int(pair[1])))
    weights = {}
    for key, value in doc.get("weights", {}).items():
        parts = key.split("-")
        if len(parts) != 2:
            raise FormatError(f"molecule.weights: key {key!r} is not of the form 'k-l'")
        weights[(int(parts[0]), int(parts[1]))] = float(value)
    return MoleculeSpec(n, frozenset(parsed_pairs), weights or None)


def molecule_payload(spec):
    return {
        "format": "molecule",
        "n_parties": spec.n_parties,
        "pairs": [[k, l] for k, l in sorted(spec.pairs)],
        "weights": {f"{k}-{l}": w for (k, l), w in sorted(spec.weights.items())},
    }


def parse_scenario(doc, base_dir):
    paths = _field(doc, "states", list, "scenario")
    if not paths:
        raise FormatError("scenario: states must list at least one file")
    base_dir = Path(base_dir)
    states, labels = [], []
    for entry in paths:
        if not isinstance(entry, str):
            raise FormatError("scenario: states must be file paths")
        path = base_dir / entry
        states.append(parse_coefficients(load_document(path)))
        labels.append(entry)
    grouping = None
    if doc.get("grouping") is not None:
        groups = doc["grouping"]
        if not isinstance(groups, list):
            raise FormatError("scenario: grouping must be a list of party lists")
        grouping = PartyGrouping(states[0].n_parties, tuple(tuple(g) for g in groups))
    return Scenario(tuple(states), grouping=grouping, labels=tuple(labels))


def dumps(payload):
    """Canonical serialization: sorted keys, two-space indent, final newline."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_document(path, payload):
    Path(path).write_text(dumps(payload))
