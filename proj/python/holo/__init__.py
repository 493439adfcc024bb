"""Phase-only hologram encoding with a binarized amplitude and canceling waves.

Fields are complex128 NumPy arrays of shape (height, width); phases are float64 radians in [0, 2*pi).
"""

import json

from ._core import (
    HoloError,
    binarize,
    canceling_phase,
    encode_dph,
    encode_naive,
    encode_proposed,
    hermite_gaussian,
    light_efficiency,
    propagate,
    psnr,
    reconstruct,
    spectrum_filter,
)
from ._core import _run_scenario_json

__all__ = [
    "HoloError",
    "binarize",
    "canceling_phase",
    "encode_dph",
    "encode_naive",
    "encode_proposed",
    "hermite_gaussian",
    "light_efficiency",
    "propagate",
    "psnr",
    "reconstruct",
    "run_scenario",
    "spectrum_filter",
]


def run_scenario(
    name,
    *,
    width=1024,
    height=1024,
    distance=None,
    synthetic=False,
    data_dir="data",
    out_dir="",
    cancel="alternate",
    seed=1,
    kernel="fs",
    aperture=0.125,
    binarize_scale="unit",
):
    """Run fig1, fig3, fig4 or fig7 and return the report as a dict."""
    text = _run_scenario_json(
        name, width, height, distance, synthetic, str(data_dir), str(out_dir),
        cancel, seed, kernel, aperture, binarize_scale,
    )
    return json.loads(text)
