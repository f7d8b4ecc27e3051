"""Spectral gap certification for symplectic Steinberg presentations.

Thin Python surface over the C++ core: presentations, Laplacian targets,
SDP problem/solution files, certificates and their replay.  All heavy
operations work through the same JSON/SDPA files as the `spgap` CLI.
"""

from ._spgap import (
    build_problem_file,
    certify_files,
    combined_bound,
    export_sdpa_file,
    induced_gap,
    kazhdan_bound,
    laplacian_json,
    presentation_json,
    run_pipeline_json,
    solve_problem_file,
    validate_presentation,
    verify_certificate_file,
)

__all__ = [
    "build_problem_file",
    "certify_files",
    "combined_bound",
    "export_sdpa_file",
    "induced_gap",
    "kazhdan_bound",
    "laplacian_json",
    "presentation_json",
    "run_pipeline_json",
    "solve_problem_file",
    "validate_presentation",
    "verify_certificate_file",
]
