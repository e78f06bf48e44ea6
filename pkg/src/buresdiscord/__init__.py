"""Bures-geometric discord for two-qubit X-states.

Closed-form maximal fidelities, closest classical states, and geometric
classical correlations, validated against a brute-force optimizer over
projective measurements on qubit A.
"""

from .closed_forms import (
    BdTransport,
    CandidateBreakdown,
    CharPolyCoeffs,
    EquatorialCandidate,
    SymmetricBranch,
    SymmetricCcs,
    bd_transport,
    char_poly_coeffs,
    classical_correlation_symmetric,
    degenerate_fidelity,
    discord_upper_bound,
    lambda1_profile,
    symmetric_ccs,
    symmetric_fidelity,
    x_candidate_discord,
    x_ccs_z,
    x_fidelity_equatorial,
    x_fidelity_z,
)
from .discord_core import (
    CcsResult,
    DiscordResult,
    GridConfig,
    MeasurementDirection,
    QsdEnsemble,
    ccs_from_measurement,
    entropic_discord,
    fidelity_at_direction,
    helstrom_success,
    induced_ensemble,
    lambda_matrix,
    max_fidelity_bruteforce,
    mutual_information,
)
from .errors import (
    BuresDiscordError,
    InvalidParams,
    NoConvergence,
    NotHermitian,
    NotPSD,
    NotSymmetricFamily,
    NotUnitary,
    PreconditionNotMet,
)
from .linalg import (
    EigenDecomposition,
    bures_distance_sq,
    check_density_matrix,
    fidelity,
    herm_eig,
    partial_trace_A,
    partial_trace_B,
    psd_sqrt,
    trace_norm,
    von_neumann_entropy,
)
from .states import (
    BlochForm,
    ClassicalStateParams,
    XSpectrum,
    XStateParams,
    bd_probs,
    bd_state,
    bloch_form,
    classical_state,
    from_bloch,
    is_symmetric_family,
    local_unitary,
    symmetric_to_bd,
    werner_params,
    x_params_from_matrix,
    x_spectrum,
    x_state,
)

__version__ = "0.1.0"

__all__ = [
    "BdTransport",
    "BlochForm",
    "BuresDiscordError",
    "CandidateBreakdown",
    "CcsResult",
    "CharPolyCoeffs",
    "ClassicalStateParams",
    "DiscordResult",
    "EigenDecomposition",
    "EquatorialCandidate",
    "GridConfig",
    "InvalidParams",
    "MeasurementDirection",
    "NoConvergence",
    "NotHermitian",
    "NotPSD",
    "NotSymmetricFamily",
    "NotUnitary",
    "PreconditionNotMet",
    "QsdEnsemble",
    "SymmetricBranch",
    "SymmetricCcs",
    "XSpectrum",
    "XStateParams",
    "bd_probs",
    "bd_state",
    "bd_transport",
    "bloch_form",
    "bures_distance_sq",
    "ccs_from_measurement",
    "char_poly_coeffs",
    "check_density_matrix",
    "classical_correlation_symmetric",
    "classical_state",
    "degenerate_fidelity",
    "discord_upper_bound",
    "entropic_discord",
    "fidelity",
    "fidelity_at_direction",
    "from_bloch",
    "helstrom_success",
    "herm_eig",
    "induced_ensemble",
    "is_symmetric_family",
    "lambda1_profile",
    "lambda_matrix",
    "local_unitary",
    "max_fidelity_bruteforce",
    "mutual_information",
    "partial_trace_A",
    "partial_trace_B",
    "psd_sqrt",
    "symmetric_ccs",
    "symmetric_fidelity",
    "symmetric_to_bd",
    "trace_norm",
    "von_neumann_entropy",
    "werner_params",
    "x_candidate_discord",
    "x_ccs_z",
    "x_fidelity_equatorial",
    "x_fidelity_z",
    "x_params_from_matrix",
    "x_spectrum",
    "x_state",
]
