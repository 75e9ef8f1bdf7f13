#pragma once

#include <stdexcept>
#include <string>

namespace avf {

// Failure codes shared by the library and the CLI exit-code mapping.
enum class errc {
    invalid_input,
    not_monic,
    bad_degree_parity,
    symmetry_violated,
    root_modulus_violated,
    not_prime_power,
    not_prime_power_shape,
    degree_cap_exceeded,
    singular_matrix,
    not_a_ring,
    not_full_rank,
    zero_ideal,
    zero_element,
    not_coprime,
    bad_prime,
    not_gorenstein,
    not_commutative_case,
    not_coprime_to_conductor,
    pi_not_in_order,
    separability_unknown,
    not_invertible_prime,
    residue_characteristic_p,
    out_of_theorem_scope,
    field_too_large,
    factor_too_large,
    index_cap_exceeded,
};

// invalid -> exit 2, hypothesis -> exit 1, resource -> exit 3
enum class err_category { invalid, hypothesis, resource };

const char* errc_name(errc c);
err_category errc_category(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace avf
