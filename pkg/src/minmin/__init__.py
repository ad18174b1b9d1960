"""Birkhoff-Gauss maps and minimal hypersurfaces in (n+1)-space with 2m-norm."""

from .curvature import (
    CurvatureReport,
    GraphChart,
    SeparableChart,
    WeingartenMatrix,
    mean_curvature_oracle,
    mean_curvature_separable,
    mean_curvature_translation,
    report_separable,
    report_translation,
    separable_residual_sum,
    translation_residual_sum,
    weingarten_separable,
    weingarten_translation,
)
from .functions import C3Function
from .norms import (
    BirkhoffNormal,
    NormParams,
    birkhoff_normal_graph,
    birkhoff_normal_implicit,
    grad_phi,
    norm_2m,
    phi,
    signed_pow,
)
from .separable import (
    AdmissibleDomain,
    AnsatzSystem,
    SeparableMinimalPatch,
    SeparableSurface,
    XProfile,
    admissible_domain,
    example_surface,
    example_xprofiles,
    extract_affine_system,
    extract_exponential_system,
    extract_quadratic_system,
    feasible_axes,
    minimality_identity_residual,
    patch_from_xprofiles,
)
from .translation import (
    ProfileCurve,
    ProfileODEParams,
    TranslationSurface,
    assemble_separated_surface,
    cylinder_over,
    integrate_profile,
    minimality_residual,
    residual_grid,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleDomain",
    "AnsatzSystem",
    "BirkhoffNormal",
    "C3Function",
    "CurvatureReport",
    "GraphChart",
    "NormParams",
    "ProfileCurve",
    "ProfileODEParams",
    "SeparableChart",
    "SeparableMinimalPatch",
    "SeparableSurface",
    "TranslationSurface",
    "WeingartenMatrix",
    "XProfile",
    "admissible_domain",
    "assemble_separated_surface",
    "birkhoff_normal_graph",
    "birkhoff_normal_implicit",
    "cylinder_over",
    "example_surface",
    "example_xprofiles",
    "extract_affine_system",
    "extract_exponential_system",
    "extract_quadratic_system",
    "feasible_axes",
    "grad_phi",
    "integrate_profile",
    "mean_curvature_oracle",
    "mean_curvature_separable",
    "mean_curvature_translation",
    "minimality_identity_residual",
    "minimality_residual",
    "norm_2m",
    "patch_from_xprofiles",
    "phi",
    "report_separable",
    "report_translation",
    "residual_grid",
    "separable_residual_sum",
    "signed_pow",
    "translation_residual_sum",
    "weingarten_separable",
    "weingarten_translation",
]
