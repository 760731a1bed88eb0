#include "trilink/invariants.hpp"

#include <json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trilink {

namespace {
const std::array<char, 4> k_letters = {'b', 'c', 'a', 'd'};
}

invariant_context::invariant_context(pattern_library lib) : lib_(std::move(lib)) {
    for (const arrow_pattern& p : lib_.all()) {
        auto violations = validate_pattern(p);
        if (!violations.empty())
            throw std::runtime_error("pattern library: " + violations.front());
    }
    for (char letter : k_letters) {
        for (int idx = 1;; ++idx) {
            std::string base = std::string(1, letter) + std::to_string(idx);
            if (!lib_.contains(base + "_ijk")) break;
            const arrow_pattern& pijk = lib_.at(base + "_ijk");
            if (!lib_.contains(base + "_kji"))
                throw std::runtime_error("pattern library: missing " + base + "_kji");
            const arrow_pattern& pkji = lib_.at(base + "_kji");
            if (!same_geometry(reindex_ikswap(pijk, pkji.name), pkji))
                throw std::runtime_error("pattern library: " + base +
                                         "_kji is not the (k,j,i) reindexing of " + base +
                                         "_ijk");
            ijk_[letter].push_back(&pijk);
            kji_[letter].push_back(&pkji);
        }
        if (ijk_[letter].empty())
            throw std::runtime_error(std::string("pattern library: no patterns for letter '") +
                                     letter + "'");
    }
}

invariant_context invariant_context::load(const std::string& patterns_path) {
    return invariant_context(pattern_library::load_file(patterns_path));
}

const std::vector<const arrow_pattern*>& invariant_context::letter_ijk(char letter) const {
    auto it = ijk_.find(letter);
    if (it == ijk_.end()) throw std::out_of_range("no such letter");
    return it->second;
}
const std::vector<const arrow_pattern*>& invariant_context::letter_kji(char letter) const {
    auto it = kji_.find(letter);
    if (it == kji_.end()) throw std::out_of_range("no such letter");
    return it->second;
}

long long linking_number(const gauss_diagram& d, int i, int j) {
    if (i == j) throw std::invalid_argument("linking_number: components must differ");
    long long s = 0;
    for (const arrow& a : d.arrows)
        if (a.tail.component == i && a.head.component == j) s += a.sign;
    return s;
}

long long pair_count(const gauss_diagram& d, int i, int j) {
    return linking_number(d, i, j) + linking_number(d, j, i);
}

namespace {

void require_three_based(const gauss_diagram& d) {
    if (d.component_count() != 3)
        throw std::invalid_argument("invariant: diagram must have 3 components");
    for (const component_info& c : d.components)
        if (!c.based)
            throw std::invalid_argument("invariant: all components must be based");
}

// The six-permutation formulas share one term list: 2b + 2c + a + d.
formula main_combination(const invariant_context& ctx, summation mode) {
    formula f;
    f.mode = mode;
    f.prefactor = rational(1, 6);
    for (char letter : k_letters) {
        rational coeff = (letter == 'b' || letter == 'c') ? rational(2) : rational(1);
        for (const arrow_pattern* p : ctx.letter_ijk(letter))
            f.terms.push_back(formula_term{coeff, p});
    }
    return f;
}

formula p_combination(const invariant_context& ctx, char third_letter) {
    formula f;
    f.mode = summation::signed_s3;
    f.prefactor = rational(1);
    for (char letter : {'b', 'c', third_letter})
        for (const arrow_pattern* p : ctx.letter_ijk(letter))
            f.terms.push_back(formula_term{rational(1), p});
    return f;
}

}  // namespace

rational p_even(const invariant_context& ctx, const gauss_diagram& d) {
    require_three_based(d);
    return evaluate_formula(main_combination(ctx, summation::even_permutations), d);
}

rational p_odd(const invariant_context& ctx, const gauss_diagram& d) {
    require_three_based(d);
    return evaluate_formula(main_combination(ctx, summation::odd_permutations), d);
}

rational p_hat(const invariant_context& ctx, const gauss_diagram& d) {
    return p_even(ctx, d) + p_odd(ctx, d);
}

invariant_value milnor_mu123(const invariant_context& ctx, const gauss_diagram& d) {
    require_three_based(d);
    rational raw = evaluate_formula(main_combination(ctx, summation::signed_s3), d);
    rational via_split = p_even(ctx, d) - p_odd(ctx, d);
    if (raw != via_split)
        throw std::logic_error("milnor_mu123: signed sum disagrees with even-odd split");

    invariant_value v;
    v.raw = raw;
    if (raw.is_integer()) {
        invariant_value red = reduce_mod(raw.as_integer(),
                                         {linking_number(d, 2, 3), linking_number(d, 1, 3),
                                          linking_number(d, 1, 2)});
        v.modulus = red.modulus;
        v.residue = red.residue;
    }
    return v;
}

long long p1(const invariant_context& ctx, const gauss_diagram& d) {
    require_three_based(d);
    return evaluate_formula(p_combination(ctx, 'a'), d).as_integer();
}

long long p2(const invariant_context& ctx, const gauss_diagram& d) {
    require_three_based(d);
    return evaluate_formula(p_combination(ctx, 'd'), d).as_integer();
}

long long q_invariant(const invariant_context& ctx, const q_index& idx, const gauss_diagram& d) {
    require_three_based(d);
    if (idx.n < 1 || idx.n > 3) throw std::invalid_argument("q_invariant: n must be 1, 2 or 3");
    if (!idx.sigma.is_valid()) throw std::invalid_argument("q_invariant: invalid permutation");

    formula f;
    f.mode = summation::single;
    f.prefactor = rational(1);
    auto add = [&](const std::vector<const arrow_pattern*>& ps) {
        for (const arrow_pattern* p : ps) f.terms.push_back(formula_term{rational(1), p});
    };
    switch (idx.n) {
        case 1:
            add(ctx.letter_ijk('b'));
            add(ctx.letter_kji('c'));
            break;
        case 2:
            add(ctx.letter_ijk('d'));
            add(ctx.letter_kji('d'));
            break;
        case 3:
            add(ctx.letter_ijk('a'));
            add(ctx.letter_kji('a'));
            break;
    }
    return evaluate_formula(f, d, idx.sigma).as_integer();
}

rational interpolated_mu(const invariant_context& ctx, const rational& t,
                         const gauss_diagram& d) {
    rational mu = milnor_mu123(ctx, d).raw;
    rational hat = p_hat(ctx, d);
    return (rational(1) - t) * mu + t * hat;
}

invariant_value reduce_mod(long long value, const std::vector<long long>& moduli) {
    long long m = 0;
    for (long long x : moduli) m = std::gcd(m, x < 0 ? -x : x);
    invariant_value v;
    v.raw = rational(value);
    v.modulus = m;
    v.residue = m > 0 ? ((value % m) + m) % m : 0;
    return v;
}

invariant_value p1_reduced(const invariant_context& ctx, const gauss_diagram& d) {
    return reduce_mod(p1(ctx, d), {2 * linking_number(d, 2, 3), 2 * linking_number(d, 1, 3),
                                   2 * linking_number(d, 1, 2)});
}

invariant_value p2_reduced(const invariant_context& ctx, const gauss_diagram& d) {
    return reduce_mod(p2(ctx, d), {2 * linking_number(d, 2, 3), 2 * linking_number(d, 1, 3),
                                   2 * linking_number(d, 1, 2)});
}

invariant_report compute_report(const invariant_context& ctx, const gauss_diagram& d,
                                const std::optional<rational>& t) {
    invariant_report r;
    r.lk12 = linking_number(d, 1, 2);
    r.lk13 = linking_number(d, 1, 3);
    r.lk23 = linking_number(d, 2, 3);
    r.mu123 = milnor_mu123(ctx, d);
    r.pe = p_even(ctx, d);
    r.po = p_odd(ctx, d);
    r.phat = r.pe + r.po;
    r.P1 = p1(ctx, d);
    r.P2 = p2(ctx, d);
    for (const permutation& s : s3()) {
        std::array<long long, 3> triple{};
        for (int n = 1; n <= 3; ++n) triple[n - 1] = q_invariant(ctx, q_index{s, n}, d);
        r.q[s.name()] = triple;
    }
    if (t) r.mu_t = interpolated_mu(ctx, *t, d);
    return r;
}

std::string report_to_json(const invariant_report& r) {
    nlohmann::ordered_json j;
    j["lk"] = {{"12", r.lk12}, {"13", r.lk13}, {"23", r.lk23}};
    j["mu123"]["raw"] = r.mu123.raw.str();
    j["mu123"]["modulus"] = r.mu123.modulus;
    if (r.mu123.modulus > 0) j["mu123"]["residue"] = r.mu123.residue;
    j["p_even"] = r.pe.str();
    j["p_odd"] = r.po.str();
    j["p_hat"] = r.phat.str();
    j["p1"] = r.P1;
    j["p2"] = r.P2;
    nlohmann::ordered_json q;
    for (const permutation& s : s3()) {
        const auto& triple = r.q.at(s.name());
        q[s.name()] = {triple[0], triple[1], triple[2]};
    }
    j["q"] = q;
    if (r.mu_t) j["mu_t"] = r.mu_t->str();
    return j.dump(2) + "\n";
}

std::string report_to_text(const invariant_report& r) {
    std::ostringstream out;
    out << "lk(1,2) = " << r.lk12 << "\n";
    out << "lk(1,3) = " << r.lk13 << "\n";
    out << "lk(2,3) = " << r.lk23 << "\n";
    out << "mu123   = " << r.mu123.raw.str();
    if (r.mu123.modulus > 0)
        out << "  (mod " << r.mu123.modulus << " -> " << r.mu123.residue << ")";
    out << "\n";
    out << "p_even  = " << r.pe.str() << "\n";
    out << "p_odd   = " << r.po.str() << "\n";
    out << "p_hat   = " << r.phat.str() << "\n";
    out << "p1      = " << r.P1 << "\n";
    out << "p2      = " << r.P2 << "\n";
    for (const permutation& s : s3()) {
        const auto& triple = r.q.at(s.name());
        out << "q[" << s.name() << "]";
        for (size_t pad = s.name().size(); pad < 5; ++pad) out << ' ';
        out << " = (" << triple[0] << ", " << triple[1] << ", " << triple[2] << ")\n";
    }
    if (r.mu_t) out << "mu_t    = " << r.mu_t->str() << "\n";
    return out.str();
}

}  // namespace trilink
