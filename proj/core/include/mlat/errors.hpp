#pragma once

#include <stdexcept>
#include <string>

namespace mlat {

/// Error categories surfaced by the library. The CLI maps these onto its
/// exit-code contract (domain rejection vs usage vs non-convergence).
enum class Errc {
  tag_mismatch,
  degenerate_probe,
  not_hermitian,
  not_psd,
  zero_marking,
  singular_matrix,
  singular_gram,
  singular_action,
  incomplete_probe,
  inconsistent_lengths,
  size_mismatch,
  not_autodual,
  reduction_failure,
  invalid_order,
  invalid_splitting,
  invalid_family,
  no_convergence,
  schema,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::tag_mismatch: return "tag-mismatch";
    case Errc::degenerate_probe: return "degenerate-probe";
    case Errc::not_hermitian: return "not-hermitian";
    case Errc::not_psd: return "not-psd";
    case Errc::zero_marking: return "zero-marking";
    case Errc::singular_matrix: return "singular-matrix";
    case Errc::singular_gram: return "singular-gram";
    case Errc::singular_action: return "singular-action";
    case Errc::incomplete_probe: return "incomplete-probe";
    case Errc::inconsistent_lengths: return "inconsistent-lengths";
    case Errc::size_mismatch: return "size-mismatch";
    case Errc::not_autodual: return "not-autodual";
    case Errc::reduction_failure: return "reduction-failure";
    case Errc::invalid_order: return "invalid-order";
    case Errc::invalid_splitting: return "invalid-splitting";
    case Errc::invalid_family: return "invalid-family";
    case Errc::no_convergence: return "no-convergence";
    case Errc::schema: return "schema";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace mlat
