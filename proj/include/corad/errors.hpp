#pragma once

#include <stdexcept>
#include <string>

namespace corad {

enum class errc {
  division_by_zero,
  incompatible_conductor,
  ambient_mismatch,
  dimension_mismatch,
  not_a_subspace,
  base_mismatch,
  no_integral,
  coradical_not_hopf_subalgebra,
  filtration_not_multiplicative,
  not_idempotent_mod_radical,
  not_orthogonal_mod_radical,
  not_a_decomposition,
  coradical_not_split,
  incomplete_family,
  not_qls,
  group_too_large,
  order_mismatch,
  unknown_command,
  bad_params,
  internal,
};

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::incompatible_conductor: return "IncompatibleConductor";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_subspace: return "NotASubspace";
    case errc::base_mismatch: return "BaseMismatch";
    case errc::no_integral: return "NoIntegral";
    case errc::coradical_not_hopf_subalgebra: return "CoradicalNotHopfSubalgebra";
    case errc::filtration_not_multiplicative: return "FiltrationNotMultiplicative";
    case errc::not_idempotent_mod_radical: return "NotIdempotentModRadical";
    case errc::not_orthogonal_mod_radical: return "NotOrthogonalModRadical";
    case errc::not_a_decomposition: return "NotADecomposition";
    case errc::coradical_not_split: return "CoradicalNotSplit";
    case errc::incomplete_family: return "IncompleteFamily";
    case errc::not_qls: return "NotQLS";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::unknown_command: return "UnknownCommand";
    case errc::bad_params: return "BadParams";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

// Internal consistency assertion; firing indicates a kernel bug, not bad input.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) fail(errc::internal, what);
}

}  // namespace corad
