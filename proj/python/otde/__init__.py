"""Ordinal temporal dictionary ensemble for time series ordinal classification."""

from ._core import (
    Dataset,
    Ensemble,
    OtdeError,
    TransformParams,
    average_ranks,
    ccr,
    dft_coefficients,
    discretize_equal_width,
    discretize_thresholds,
    fit,
    fit_igb,
    gp_predict,
    holm_adjust,
    load_ensemble,
    mae,
    one_off,
    qwk,
    read_dataset,
    stratified_resample,
    wilcoxon,
    write_dataset,
)

__all__ = [
    "Dataset",
    "Ensemble",
    "OtdeError",
    "TransformParams",
    "average_ranks",
    "ccr",
    "dft_coefficients",
    "discretize_equal_width",
    "discretize_thresholds",
    "fit",
    "fit_igb",
    "gp_predict",
    "holm_adjust",
    "load_ensemble",
    "mae",
    "one_off",
    "qwk",
    "read_dataset",
    "stratified_resample",
    "wilcoxon",
    "write_dataset",
]
