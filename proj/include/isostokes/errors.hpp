#pragma once

#include <stdexcept>
#include <string>

namespace isostokes {

/// Failure categories used across the library. Each maps to a process exit
/// code in the CLI layer (see io.hpp): schema -> 2, numerical -> 3,
/// rejected input -> 4, non-convergence -> 5.
enum class errc {
    // linalg
    non_hermitian_input,
    convergence_failure,
    overflow_risk,
    non_positive_base,
    index_out_of_range,
    mismatched_selection,
    // special functions
    zero_argument,
    pole_argument,
    // flow
    nonzero_diagonal,
    degenerate_u,
    step_size_underflow,
    tolerance_not_met,
    non_positive_ratio,
    fixed_point_divergence,
    parameter_out_of_range,
    // stokes
    degenerate_spectrum,
    triangularity_violation,
    conditioning_failure,
    path_crosses_cut,
    anchor_too_close,
    // connection
    non_convergence,
    wrong_dimension,
    no_zero_eigenvalue,
    // io
    schema_violation,
};

const char* errc_name(errc c);

/// Exit-code category of an error kind (see enum comment).
int errc_exit_code(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

} // namespace isostokes
