"""scikit-learn compatible wrappers so the conversions, fuzzy classification,
and completion-time clustering compose with pipelines and grid search."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin

from .analysis import _CATEGORY_BY_CLUSTER, lloyd_1d
from .core import ColorModelId, Rgb8, rgb8_from_unit, unit_from_rgb8
from .fuzzy import FuzzyColorSpace, bundled_space
from .transforms import COMPONENTS, build_kernels, coord_from_components


def check_rgb8_array(X) -> np.ndarray:
    """Validate an (n, 3) array of 8-bit RGB rows and return it as float64."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 3:
        raise ValueError(f"expected an (n, 3) RGB array, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("RGB array contains non-finite values")
    if (arr < 0).any() or (arr > 255).any():
        raise ValueError("RGB channels must lie in [0, 255]")
    if not np.equal(np.mod(arr, 1), 0).all():
        raise ValueError("RGB channels must be integers")
    return arr


def check_component_array(X, model: ColorModelId) -> np.ndarray:
    arr = np.asarray(X, dtype=float)
    expected = len(COMPONENTS[model])
    if arr.ndim != 2 or arr.shape[1] != expected:
        raise ValueError(f"expected an (n, {expected}) array for {model}, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("component array contains non-finite values")
    return arr


class ColorSpaceTransformer(BaseEstimator, TransformerMixin):
    """Stateless transform from 8-bit RGB rows to one model's coordinates.

    ``transform`` applies the forward kernel row-wise; ``inverse_transform``
    returns quantized uint8 RGB. ``fit`` only validates parameters.
    """

    def __init__(self, model: str = "lab", bt601_studio: bool = False):
        self.model = model
        self.bt601_studio = bt601_studio

    def fit(self, X=None, y=None):
        self.model_id_ = ColorModelId.parse(self.model)
        self.kernel_ = build_kernels(bt601_studio=self.bt601_studio)[self.model_id_]
        self.n_components_ = len(COMPONENTS[self.model_id_])
        return self

    def transform(self, X) -> np.ndarray:
        self._ensure_fitted()
        arr = check_rgb8_array(X)
        fwd = self.kernel_.forward
        out = np.empty((arr.shape[0], self.n_components_), dtype=float)
        for i, (r, g, b) in enumerate(arr):
            out[i] = fwd(unit_from_rgb8(Rgb8(int(r), int(g), int(b)))).components
        return out

    def inverse_transform(self, C) -> np.ndarray:
        self._ensure_fitted()
        arr = check_component_array(C, self.model_id_)
        inv = self.kernel_.inverse
        out = np.empty((arr.shape[0], 3), dtype=np.uint8)
        for i, row in enumerate(arr):
            rgb = rgb8_from_unit(inv(coord_from_components(self.model_id_, tuple(row))))
            out[i] = (rgb.r, rgb.g, rgb.b)
        return out

    def get_feature_names_out(self, input_features=None):
        self._ensure_fitted()
        return np.asarray([c.name for c in COMPONENTS[self.model_id_]], dtype=object)

    def _ensure_fitted(self):
        if not hasattr(self, "kernel_"):
            raise RuntimeError("ColorSpaceTransformer is not fitted; call fit() first")


class FuzzyColorClassifier(BaseEstimator):
    """Label HS* coordinates with the strongest fuzzy color of a space."""

    def __init__(self, space: FuzzyColorSpace | None = None):
        self.space = space

    def fit(self, X=None, y=None):
        self.space_ = self.space if self.space is not None else bundled_space()
        self.classes_ = np.asarray([c.label for c in self.space_.colors], dtype=object)
        return self

    def transform(self, X) -> np.ndarray:
        """Membership matrix, one column per fuzzy color."""
        self._ensure_fitted()
        arr = check_component_array(X, self.space_.model)
        out = np.empty((arr.shape[0], len(self.space_.colors)), dtype=float)
        for i, (h, s, v) in enumerate(arr):
            out[i] = [c.membership(h % 360.0, s, v) for c in self.space_.colors]
        return out

    def predict(self, X) -> np.ndarray:
        memberships = self.transform(X)
        return self.classes_[np.argmax(memberships, axis=1)]

    def _ensure_fitted(self):
        if not hasattr(self, "space_"):
            raise RuntimeError("FuzzyColorClassifier is not fitted; call fit() first")


class CompletionTimeClusterer(BaseEstimator, ClusterMixin):
    """Deterministic 1-D k-means over completion times (min/median/max seeding)."""

    def __init__(self, n_clusters: int = 3):
        self.n_clusters = n_clusters

    def fit(self, X, y=None):
        values = self._flatten(X)
        assignment, centroids = lloyd_1d(values, self.n_clusters)
        self.labels_ = np.asarray(assignment, dtype=int)
        self.cluster_centers_ = np.asarray(centroids, dtype=float).reshape(-1, 1)
        if self.n_clusters == 3:
            self.categories_ = tuple(c.value for c in _CATEGORY_BY_CLUSTER)
        return self

    def predict(self, X) -> np.ndarray:
        if not hasattr(self, "cluster_centers_"):
            raise RuntimeError("CompletionTimeClusterer is not fitted; call fit() first")
        values = self._flatten(X)
        centers = self.cluster_centers_.ravel()
        return np.asarray(
            [int(np.argmin(np.abs(centers - v))) for v in values], dtype=int
        )

    @staticmethod
    def _flatten(X) -> list[float]:
        arr = np.asarray(X, dtype=float)
        if arr.ndim == 2 and arr.shape[1] == 1:
            arr = arr.ravel()
        if arr.ndim != 1:
            raise ValueError(f"expected 1-D values or an (n, 1) column, got shape {arr.shape}")
        return [float(v) for v in arr]
