#include "avf/errors.hpp"

namespace avf {

const char* errc_name(errc c)
{
    switch (c) {
        case errc::invalid_input: return "InvalidInput";
        case errc::not_monic: return "NotMonic";
        case errc::bad_degree_parity: return "BadDegreeParity";
        case errc::symmetry_violated: return "SymmetryViolated";
        case errc::root_modulus_violated: return "RootModulusViolated";
        case errc::not_prime_power: return "NotPrimePower";
        case errc::not_prime_power_shape: return "NotPrimePowerShape";
        case errc::degree_cap_exceeded: return "DegreeCapExceeded";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::not_a_ring: return "NotARing";
        case errc::not_full_rank: return "NotFullRank";
        case errc::zero_ideal: return "ZeroIdeal";
        case errc::zero_element: return "ZeroElement";
        case errc::not_coprime: return "NotCoprime";
        case errc::bad_prime: return "BadPrime";
        case errc::not_gorenstein: return "NotGorenstein";
        case errc::not_commutative_case: return "NotCommutativeCase";
        case errc::not_coprime_to_conductor: return "NotCoprimeToConductor";
        case errc::pi_not_in_order: return "PiNotInOrder";
        case errc::separability_unknown: return "SeparabilityUnknown";
        case errc::not_invertible_prime: return "NotInvertiblePrime";
        case errc::residue_characteristic_p: return "ResidueCharacteristicP";
        case errc::out_of_theorem_scope: return "OutOfTheoremScope";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::factor_too_large: return "FactorTooLarge";
        case errc::index_cap_exceeded: return "IndexCapExceeded";
    }
    return "UnknownError";
}

err_category errc_category(errc c)
{
    switch (c) {
        case errc::not_gorenstein:
        case errc::not_commutative_case:
        case errc::not_coprime_to_conductor:
        case errc::pi_not_in_order:
        case errc::not_coprime:
        case errc::separability_unknown:
        case errc::not_invertible_prime:
        case errc::residue_characteristic_p:
        case errc::out_of_theorem_scope:
            return err_category::hypothesis;
        case errc::field_too_large:
        case errc::factor_too_large:
        case errc::index_cap_exceeded:
        case errc::degree_cap_exceeded:
        case errc::bad_prime:
            return err_category::resource;
        default:
            return err_category::invalid;
    }
}

} // namespace avf
