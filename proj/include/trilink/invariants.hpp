#ifndef TRILINK_INVARIANTS_HPP
#define TRILINK_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trilink/diagram.hpp"
#include "trilink/pattern.hpp"
#include "trilink/permutation.hpp"
#include "trilink/rational.hpp"

namespace trilink {

// A raw invariant value together with its modular reduction. modulus 0 means
// no reduction (the gcd convention: gcd of an all-zero list is 0). Residues
// are canonical nonnegative representatives.
struct invariant_value {
    rational raw;
    long long modulus = 0;
    long long residue = 0;
};

struct q_index {
    permutation sigma;
    int n = 1;  // 1, 2 or 3
};

// The assembled formula tables over a loaded pattern library. Letters are the
// four diagram families of the formulas; each letter may be realized by one
// or more library patterns named <letter><index>_ijk with a matching
// <letter><index>_kji reindexing. Construction validates the library shape.
class invariant_context {
  public:
    explicit invariant_context(pattern_library lib);
    static invariant_context load(const std::string& patterns_path);

    const pattern_library& library() const { return lib_; }
    const std::vector<const arrow_pattern*>& letter_ijk(char letter) const;
    const std::vector<const arrow_pattern*>& letter_kji(char letter) const;

  private:
    pattern_library lib_;
    std::map<char, std::vector<const arrow_pattern*>> ijk_, kji_;
};

// Signed count of arrows with tail on component i and head on component j.
// One-sided by design; the verification suite checks move invariance of this
// exact count, and on realizable diagrams it is the linking number.
long long linking_number(const gauss_diagram& d, int i, int j);

// Total signed count between the pair, both directions. Equals 2*lk on
// realizable closed-link diagrams.
long long pair_count(const gauss_diagram& d, int i, int j);

// The named invariants. All require a valid 3-component diagram whose
// components are based (the pairing uses base-point-respecting linear order).
rational p_even(const invariant_context& ctx, const gauss_diagram& d);
rational p_odd(const invariant_context& ctx, const gauss_diagram& d);
rational p_hat(const invariant_context& ctx, const gauss_diagram& d);
invariant_value milnor_mu123(const invariant_context& ctx, const gauss_diagram& d);
long long p1(const invariant_context& ctx, const gauss_diagram& d);
long long p2(const invariant_context& ctx, const gauss_diagram& d);
long long q_invariant(const invariant_context& ctx, const q_index& idx, const gauss_diagram& d);
rational interpolated_mu(const invariant_context& ctx, const rational& t, const gauss_diagram& d);

// P1 and P2 reduced mod gcd(2 lk(2,3), 2 lk(1,3), 2 lk(1,2)).
invariant_value p1_reduced(const invariant_context& ctx, const gauss_diagram& d);
invariant_value p2_reduced(const invariant_context& ctx, const gauss_diagram& d);

invariant_value reduce_mod(long long value, const std::vector<long long>& moduli);

// Full report for one diagram (all invariants; mu_t only when t is given).
struct invariant_report {
    long long lk12 = 0, lk13 = 0, lk23 = 0;
    invariant_value mu123;
    rational pe, po, phat;
    long long P1 = 0, P2 = 0;
    // q[s][n-1] indexed by the fixed S3 order (see s3()).
    std::map<std::string, std::array<long long, 3>> q;
    std::optional<rational> mu_t;
};
invariant_report compute_report(const invariant_context& ctx, const gauss_diagram& d,
                                const std::optional<rational>& t = std::nullopt);

// JSON per the documented schema; rationals as exact "p/q" strings. The text
// form is an aligned table. Both are byte-stable for fixed input.
std::string report_to_json(const invariant_report& r);
std::string report_to_text(const invariant_report& r);

}  // namespace trilink

#endif
