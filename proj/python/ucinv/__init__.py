"""Generalized matrix inverses (Moore-Penrose, unit-consistent, mixed) with a
resolved-rate robot simulation harness."""

from ._core import (
    BalanceSettings,
    FrameTransform,
    ScaleDecomposition,
    SvdResult,
    apply_inverse,
    arm_forward,
    arm_jacobian,
    arm_unit_transform,
    check_rotation_consistency,
    check_unit_consistency,
    diag_from,
    kron,
    mixed_inverse,
    pinv,
    rotation_embed,
    rover_forward,
    rover_frame_transform,
    rover_jacobian,
    run_scenario,
    scale_decompose,
    scenario_names,
    simulate,
    svd,
    uc_inverse,
    verify,
)

__all__ = [
    "BalanceSettings",
    "FrameTransform",
    "ScaleDecomposition",
    "SvdResult",
    "apply_inverse",
    "arm_forward",
    "arm_jacobian",
    "arm_unit_transform",
    "check_rotation_consistency",
    "check_unit_consistency",
    "diag_from",
    "kron",
    "mixed_inverse",
    "pinv",
    "rotation_embed",
    "rover_forward",
    "rover_frame_transform",
    "rover_jacobian",
    "run_scenario",
    "scale_decompose",
    "scenario_names",
    "simulate",
    "svd",
    "uc_inverse",
    "verify",
]
