#include "isostokes/errors.hpp"

namespace isostokes {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_hermitian_input: return "NonHermitianInput";
        case errc::convergence_failure: return "ConvergenceFailure";
        case errc::overflow_risk: return "OverflowRisk";
        case errc::non_positive_base: return "NonPositiveBase";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::mismatched_selection: return "MismatchedSelection";
        case errc::zero_argument: return "ZeroArgument";
        case errc::pole_argument: return "PoleArgument";
        case errc::nonzero_diagonal: return "NonzeroDiagonal";
        case errc::degenerate_u: return "DegenerateU";
        case errc::step_size_underflow: return "StepSizeUnderflow";
        case errc::tolerance_not_met: return "ToleranceNotMet";
        case errc::non_positive_ratio: return "NonPositiveRatio";
        case errc::fixed_point_divergence: return "FixedPointDivergence";
        case errc::parameter_out_of_range: return "ParameterOutOfRange";
        case errc::degenerate_spectrum: return "DegenerateSpectrum";
        case errc::triangularity_violation: return "TriangularityViolation";
        case errc::conditioning_failure: return "ConditioningFailure";
        case errc::path_crosses_cut: return "PathCrossesCut";
        case errc::anchor_too_close: return "AnchorTooClose";
        case errc::non_convergence: return "NonConvergence";
        case errc::wrong_dimension: return "WrongDimension";
        case errc::no_zero_eigenvalue: return "NoZeroEigenvalue";
        case errc::schema_violation: return "SchemaViolation";
    }
    return "UnknownError";
}

int errc_exit_code(errc c) {
    switch (c) {
        case errc::schema_violation:
            return 2;
        case errc::convergence_failure:
        case errc::overflow_risk:
        case errc::step_size_underflow:
        case errc::tolerance_not_met:
        case errc::triangularity_violation:
        case errc::conditioning_failure:
            return 3;
        case errc::non_hermitian_input:
        case errc::non_positive_base:
        case errc::index_out_of_range:
        case errc::mismatched_selection:
        case errc::zero_argument:
        case errc::pole_argument:
        case errc::nonzero_diagonal:
        case errc::degenerate_u:
        case errc::non_positive_ratio:
        case errc::parameter_out_of_range:
        case errc::degenerate_spectrum:
        case errc::path_crosses_cut:
        case errc::anchor_too_close:
        case errc::wrong_dimension:
        case errc::no_zero_eigenvalue:
            return 4;
        case errc::fixed_point_divergence:
        case errc::non_convergence:
            return 5;
    }
    return 1;
}

} // namespace isostokes
