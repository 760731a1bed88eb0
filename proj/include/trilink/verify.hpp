#ifndef TRILINK_VERIFY_HPP
#define TRILINK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trilink/diagram.hpp"
#include "trilink/invariants.hpp"
#include "trilink/moves.hpp"

namespace trilink {

// Reference implementation of the pairing used to audit count_pattern:
// enumerates every injective map of pattern arrows to diagram arrows and
// filters by component, direction, sign and order conditions. Kept free of
// the backtracking machinery on purpose.
long long count_pattern_all_injections(const arrow_pattern& p, const permutation& binding,
                                       const gauss_diagram& d);

// Seeded valid random diagram: 3 based components, `arrows` arrows placed at
// random slots with random directions and signs.
gauss_diagram random_diagram(std::uint64_t seed, int arrows);

// Seeded diagram that contains at least one site of the given R3 variant
// side: a random context with the variant's left (or right) picture planted.
gauss_diagram plant_r3_fragment(std::uint64_t seed, const move_variant& v, bool flipped,
                                int context_arrows);

struct property_result {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string detail;          // first failure description
    std::string counterexample;  // minimized diagram, gauss code
};

struct verify_options {
    std::uint64_t seed = 1;
    int trials = 60;  // diagrams per property; move cases multiply this
};

struct verify_summary {
    std::vector<property_result> properties;
    bool ok() const {
        for (const property_result& p : properties)
            if (p.failures > 0) return false;
        return true;
    }
    long long total_cases() const {
        long long n = 0;
        for (const property_result& p : properties) n += p.cases;
        return n;
    }
};

// Runs the full property suite: move invariance across every variant of the
// table, the mu identities, base-point move deltas, crossing-change
// integrality, the fixed known values, and the all-injections pattern audit.
verify_summary run_verification(const invariant_context& ctx, const move_table& table,
                                const verify_options& opt);

std::string summary_to_text(const verify_summary& s);

// Fixed reference diagrams used by the known-value checks and tests.
gauss_diagram unlink3_diagram();
gauss_diagram hopf_plus_sublink_diagram();   // components 1,2 a positive Hopf clasp
gauss_diagram borromean_diagram();           // the standard 6-crossing diagram

}  // namespace trilink

#endif
