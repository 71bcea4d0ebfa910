#pragma once

#include <stdexcept>
#include <string>

namespace wflab {

enum class errc {
    not_monic,
    reducible,
    irreducibility_unverified,
    field_mismatch,
    zero_input,
    zero_element,
    not_prime,
    precision_exhausted,
    not_a_unit_mod_pi,
    factorization_incomplete,
    domain_too_small,
    not_real_quadratic,
    non_dominant_base,
    unsupported_rank,
    singular_curve,
    bad_reduction,
    torsion_point,
    partial_factorization,
    degenerate_triple,
    config_parse,
    ledger_corrupt,
    insufficient_data,
    certification_contradiction,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace wflab
