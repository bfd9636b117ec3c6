"""Multi-view dataset representation, manifest I/O, and standardization.

On disk a dataset is a JSON manifest pointing at one headerless CSV per view
(one instance per row, comma separated, LF line endings) plus an optional
labels file with one integer class id per line::

    {
      "views": [{"name": "shape", "path": "shape.csv"}, ...],
      "labels": "labels.txt"
    }

Relative paths are resolved against the manifest's directory. Values are
written with 17 significant digits so a load -> save -> load cycle is
bit-exact for finite doubles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    EmptyDatasetError,
    MalformedManifestError,
    MissingFileError,
    NonFiniteValueError,
    RowCountMismatchError,
)

_CSV_FLOAT_FMT = "%.17g"


def validate_view(values: np.ndarray, name: str = "view") -> np.ndarray:
    """Check a single view matrix: 2-D, N >= 2, all entries finite.

    Returns the validated array as float64.
    """
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 2:
        raise MalformedManifestError(
            f"{name}: expected a 2-D matrix, got {arr.ndim} dimension(s)"
        )
    if arr.shape[0] < 2:
        raise MalformedManifestError(
            f"{name}: needs at least 2 instances, got {arr.shape[0]}"
        )
    if not np.isfinite(arr).all():
        bad = np.argwhere(~np.isfinite(arr))[0]
        raise NonFiniteValueError(
            f"{name}: non-finite value at row {bad[0]}, col {bad[1]}"
        )
    return arr


@dataclass(frozen=True, eq=False)
class MultiViewDataset:
    """Ordered collection of per-view matrices over the same instances.

    All views share the same row count N; rows are aligned across views.
    ``labels``, when present, holds one integer class id per instance and
    every class must have at least two members.
    """

    views: list[np.ndarray]
    view_names: list[str]
    labels: np.ndarray | None = None
    _skip_validation: bool = field(default=False, repr=False)

    def __post_init__(self) -> None:
        if self._skip_validation:
            return
        if len(self.views) < 1:
            raise EmptyDatasetError("dataset must contain at least one view")
        if len(self.view_names) != len(self.views):
            raise MalformedManifestError(
                f"{len(self.views)} views but {len(self.view_names)} names"
            )
        if len(set(self.view_names)) != len(self.view_names):
            raise MalformedManifestError("view names must be unique")
        n = self.views[0].shape[0]
        for name, view in zip(self.view_names, self.views):
            validate_view(view, name)
            if view.shape[0] != n:
                raise RowCountMismatchError(
                    f"view {name!r} has {view.shape[0]} rows, expected {n}"
                )
        if self.labels is not None:
            labels = np.asarray(self.labels)
            if labels.ndim != 1 or labels.shape[0] != n:
                raise RowCountMismatchError(
                    f"labels length {labels.shape[0]} does not match N={n}"
                )
            _, counts = np.unique(labels, return_counts=True)
            if counts.min() < 2:
                raise MalformedManifestError(
                    "every class in the labels file needs at least 2 members"
                )

    @property
    def n_instances(self) -> int:
        return self.views[0].shape[0]

    @property
    def n_views(self) -> int:
        return len(self.views)

    def view_index(self, name: str) -> int:
        return self.view_names.index(name)

    def drop_view(self, index: int) -> "MultiViewDataset":
        """Dataset with view ``index`` removed (views are shared, not copied)."""
        keep = [v for v in range(self.n_views) if v != index]
        return MultiViewDataset(
            views=[self.views[v] for v in keep],
            view_names=[self.view_names[v] for v in keep],
            labels=self.labels,
            _skip_validation=True,
        )

    def replace_view(self, index: int, values: np.ndarray) -> "MultiViewDataset":
        """Dataset with view ``index`` swapped for ``values``."""
        views = list(self.views)
        views[index] = validate_view(values, self.view_names[index])
        return MultiViewDataset(
            views=views,
            view_names=list(self.view_names),
            labels=self.labels,
            _skip_validation=True,
        )


def load_dataset(manifest_path: str | Path) -> MultiViewDataset:
    """Load and validate a dataset from a manifest file.

    View order follows manifest order. Raises :class:`MissingFileError`,
    :class:`MalformedManifestError`, :class:`RowCountMismatchError`, or
    :class:`NonFiniteValueError` on bad input.
    """
    manifest_path = Path(manifest_path)
    if not manifest_path.is_file():
        raise MissingFileError(f"manifest not found: {manifest_path}")
    try:
        manifest = json.loads(manifest_path.read_text())
    except json.JSONDecodeError as exc:
        raise MalformedManifestError(f"{manifest_path}: invalid JSON ({exc})") from exc

    if not isinstance(manifest, dict) or "views" not in manifest:
        raise MalformedManifestError(f"{manifest_path}: missing 'views' key")
    entries = manifest["views"]
    if not isinstance(entries, list) or not entries:
        raise MalformedManifestError(f"{manifest_path}: 'views' must be a non-empty list")

    base = manifest_path.parent
    views: list[np.ndarray] = []
    names: list[str] = []
    for entry in entries:
        if not isinstance(entry, dict) or "name" not in entry or "path" not in entry:
            raise MalformedManifestError(
                f"{manifest_path}: each view entry needs 'name' and 'path'"
            )
        name = str(entry["name"])
        path = base / entry["path"]
        if not path.is_file():
            raise MissingFileError(f"view {name!r}: file not found: {path}")
        try:
            values = np.loadtxt(path, delimiter=",", ndmin=2, dtype=float)
        except ValueError as exc:
            raise MalformedManifestError(f"view {name!r}: {path}: {exc}") from exc
        views.append(validate_view(values, name))
        names.append(name)

    labels = None
    if manifest.get("labels") is not None:
        labels_path = base / manifest["labels"]
        if not labels_path.is_file():
            raise MissingFileError(f"labels file not found: {labels_path}")
        try:
            labels = np.loadtxt(labels_path, dtype=int, ndmin=1)
        except ValueError as exc:
            raise MalformedManifestError(f"labels: {labels_path}: {exc}") from exc

    return MultiViewDataset(views=views, view_names=names, labels=labels)


def save_dataset(
    dataset: MultiViewDataset,
    out_dir: str | Path,
    provenance: dict | None = None,
) -> Path:
    """Write a dataset as manifest + CSV files under ``out_dir``.

    Returns the manifest path. ``provenance`` is recorded verbatim in the
    manifest when given (used by the corruption CLI).
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    for name, view in zip(dataset.view_names, dataset.views):
        filename = f"{name}.csv"
        np.savetxt(out_dir / filename, view, fmt=_CSV_FLOAT_FMT, delimiter=",", newline="\n")
        entries.append({"name": name, "path": filename})
    manifest: dict = {"views": entries}
    if dataset.labels is not None:
        np.savetxt(out_dir / "labels.txt", dataset.labels, fmt="%d", newline="\n")
        manifest["labels"] = "labels.txt"
    if provenance is not None:
        manifest["provenance"] = provenance
    manifest_path = out_dir / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest_path


def standardize(view: np.ndarray) -> np.ndarray:
    """Center each column and scale it to unit population standard deviation.

    Columns with zero variance carry no structure and are mapped to all-zeros
    instead of raising.
    """
    arr = np.asarray(view, dtype=float)
    mean = arr.mean(axis=0)
    std = arr.std(axis=0)
    centered = arr - mean
    out = np.zeros_like(centered)
    nonzero = std > 0
    out[:, nonzero] = centered[:, nonzero] / std[nonzero]
    return out


def standardize_dataset(dataset: MultiViewDataset) -> MultiViewDataset:
    """Standardize every view of a dataset."""
    return MultiViewDataset(
        views=[standardize(v) for v in dataset.views],
        view_names=list(dataset.view_names),
        labels=dataset.labels,
        _skip_validation=True,
    )


def concatenate_views(dataset: MultiViewDataset) -> np.ndarray:
    """Row-aligned horizontal concatenation of all (standardized) views.

    Column blocks appear in view order, so row i is the aggregated feature
    vector of instance i.
    """
    if dataset.n_views == 0:
        raise EmptyDatasetError("cannot concatenate an empty dataset")
    return np.hstack(dataset.views)
