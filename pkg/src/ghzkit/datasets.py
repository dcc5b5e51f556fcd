"""Embedded measurement datasets from two published experiments.

* ``sackett2000``        — four trapped-ion GHZ experiment
  (C. A. Sackett et al., Nature 404, 256 (2000))
* ``rauschenbeutel2000`` — two atoms + cavity mode GHZ experiment
  (A. Rauschenbeutel et al., Science 288, 2024 (2000))

Each file stores worst-case intervals (published central values widened by
their quoted errors) plus a ``meta.point_values`` block with the central
values alone; ``load_dataset(name, point=True)`` returns the latter.
Derivation notes live in the files' ``meta.notes``.
"""

from importlib import resources

from .detect import Interval, MeasuredCoefficients
from .io import parse_measured

DATASET_NAMES = ("rauschenbeutel2000", "sackett2000")


def dataset_text(name):
    if name not in DATASET_NAMES:
        raise ValueError(f"unknown dataset {name!r}; available: {', '.join(DATASET_NAMES)}")
    return resources.files("ghzkit.data").joinpath(f"{name}.json").read_text()


def load_dataset(name, point=False):
    """An embedded dataset as interval data.

    With ``point=True`` the zero-error central values from the dataset's
    ``meta.point_values`` block are returned instead of the worst-case
    intervals.
    """
    import json

    doc = json.loads(dataset_text(name))
    measured = parse_measured(doc)
    if not point:
        return measured
    block = measured.meta.get("point_values")
    if block is None:
        raise ValueError(f"dataset {name!r} carries no point values")
    return MeasuredCoefficients(
        measured.n_parties,
        Interval(*block["lambda0_plus"]),
        Interval(*block["lambda0_minus"]),
        {key: Interval(*value) for key, value in block["two_lambda"].items()},
        fidelity=Interval(*block["fidelity"]) if "fidelity" in block else None,
        meta=measured.meta,
    )
