"""colorlab: color model conversions, perceptual difference metrics, fuzzy
color spaces, and the benchmarking/experiment harnesses built on them."""

from .core import (
    D65,
    ColorCoord,
    ColorModelId,
    GammaCurve,
    GammaCurveKind,
    PixelBuffer,
    Rgb8,
    UnitRgb,
    WhitePoint,
    rgb8_from_unit,
    unit_from_rgb8,
)
from .estimators import ColorSpaceTransformer, CompletionTimeClusterer, FuzzyColorClassifier
from .metrics import DeltaEParams, LabPair, delta_e_76, delta_e_94, delta_e_2000
from .transforms import (
    COMPONENTS,
    KERNELS,
    ConversionKernel,
    build_kernels,
    convert_image,
    kernel_for,
    roundtrip_rgb8,
)

__version__ = "0.1.0"

__all__ = [
    "D65",
    "COMPONENTS",
    "KERNELS",
    "ColorCoord",
    "ColorModelId",
    "ColorSpaceTransformer",
    "CompletionTimeClusterer",
    "ConversionKernel",
    "DeltaEParams",
    "FuzzyColorClassifier",
    "GammaCurve",
    "GammaCurveKind",
    "LabPair",
    "PixelBuffer",
    "Rgb8",
    "UnitRgb",
    "WhitePoint",
    "build_kernels",
    "convert_image",
    "delta_e_76",
    "delta_e_94",
    "delta_e_2000",
    "kernel_for",
    "rgb8_from_unit",
    "roundtrip_rgb8",
    "unit_from_rgb8",
    "__version__",
]
