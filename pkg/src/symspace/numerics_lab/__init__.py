"""Numerical cross-checks: Jacobi fields, ball volumes and entropy, Busemann Laplacians."""
from .busemann import BusemannProbe, DistanceToRayPoint, busemann_probe, busemann_sequence
from .jacobi import jacobi_verify, rk4_jacobi
from .kernels import log_sinh_ratio, sinh_ratio, sqrt_coth
from .spd import (
    SPDPoint,
    algebra_to_tangent,
    identity_point,
    orthonormal_frame,
    spd_distance,
    spd_geodesic,
    spd_log,
    tangent_norm,
)
from .volume import VolumeEstimate, VolumeGrowthCurve, entropy_estimate, volume_ball, volume_curve

__all__ = [
    "BusemannProbe",
    "DistanceToRayPoint",
    "busemann_probe",
    "busemann_sequence",
    "jacobi_verify",
    "rk4_jacobi",
    "log_sinh_ratio",
    "sinh_ratio",
    "sqrt_coth",
    "SPDPoint",
    "algebra_to_tangent",
    "identity_point",
    "orthonormal_frame",
    "spd_distance",
    "spd_geodesic",
    "spd_log",
    "tangent_norm",
    "VolumeEstimate",
    "VolumeGrowthCurve",
    "entropy_estimate",
    "volume_ball",
    "volume_curve",
]
