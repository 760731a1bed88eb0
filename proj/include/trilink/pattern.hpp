#ifndef TRILINK_PATTERN_HPP
#define TRILINK_PATTERN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trilink/diagram.hpp"
#include "trilink/permutation.hpp"
#include "trilink/rational.hpp"

namespace trilink {

// Patterns are small Gauss-diagram templates on up to three circles carrying
// the index placeholders i, j, k (stored as 0, 1, 2). A binding permutation
// assigns the placeholders to diagram components and the pairing counts
// order-preserving embeddings with sign weights.

struct pattern_endpoint {
    int circle = 0;  // 0 = i, 1 = j, 2 = k
    int slot = 0;    // index into the circle's slot order

    friend bool operator==(const pattern_endpoint& a, const pattern_endpoint& b) {
        return a.circle == b.circle && a.slot == b.slot;
    }
    friend bool operator<(const pattern_endpoint& a, const pattern_endpoint& b) {
        if (a.circle != b.circle) return a.circle < b.circle;
        return a.slot < b.slot;
    }
};

struct pattern_arrow {
    int sign = 0;  // 0 = unconstrained, otherwise +1 / -1
    pattern_endpoint tail;
    pattern_endpoint head;

    friend bool operator==(const pattern_arrow& a, const pattern_arrow& b) {
        return a.sign == b.sign && a.tail == b.tail && a.head == b.head;
    }
};

struct pattern_circle {
    bool based = true;
    std::vector<std::string> slot_names;  // in order along the circle
    int size() const { return static_cast<int>(slot_names.size()); }
};

struct arrow_pattern {
    std::string name;
    std::vector<pattern_circle> circles;  // exactly 3 (some may be empty)
    std::vector<pattern_arrow> arrows;
};

// Same well-formedness rules as diagrams: one tail and one head per arrow,
// every slot used exactly once, circles limited to the three placeholders.
std::vector<std::string> validate_pattern(const arrow_pattern& p);

// Reindexes (i,j,k) -> (k,j,i): swaps the outer circles. An involution.
arrow_pattern reindex_ikswap(const arrow_pattern& p, const std::string& new_name);

// Structural equality ignoring names: same circle shapes (based flags, slot
// counts) and the same arrow set in slot coordinates.
bool same_geometry(const arrow_pattern& a, const arrow_pattern& b);

// The pairing <pattern, diagram> at one binding: sum over embeddings of the
// product of matched arrow signs. An embedding maps pattern arrows injectively
// to diagram arrows so that endpoints land on the bound components, directions
// agree, sign constraints hold, and slot order matches the component order
// (linear from the base point on based circles, cyclic on closed ones).
// Throws if the binding is not a permutation or a based pattern circle with
// two or more endpoints is bound to a closed component.
long long count_pattern(const arrow_pattern& p, const permutation& binding,
                        const gauss_diagram& d);

// Formulas: rational-weighted pattern sums with a permutation-summation mode.
enum class summation {
    single,             // evaluate at one supplied binding
    even_permutations,  // unsigned sum over even bindings
    odd_permutations,   // unsigned sum over odd bindings
    signed_s3,          // sum of sign(s) * <...> over all of S3
    unsigned_s3,        // plain sum over all of S3
};

struct formula_term {
    rational coeff;
    const arrow_pattern* pattern = nullptr;
};

struct formula {
    rational prefactor{1};
    summation mode = summation::signed_s3;
    std::vector<formula_term> terms;
};

// prefactor * sum over the mode's bindings of (parity factor if signed) *
// sum over terms of coeff * count. Exact arithmetic; requires a 3-component
// diagram. `binding` is used only in single mode.
rational evaluate_formula(const formula& f, const gauss_diagram& d,
                          const permutation& binding = permutation{});

// A named, immutable pattern collection loaded from a pattern file:
//   pattern <name>
//   circle <i|j|k>[*]: s1 s2 ...
//   arrow <tail-slot> -> <head-slot> [+|-]
// Plain text, '#' comments. Slot names are unique within a pattern.
class pattern_library {
  public:
    static pattern_library load_file(const std::string& path);
    static pattern_library parse(const std::string& text);

    const arrow_pattern& at(const std::string& name) const;
    bool contains(const std::string& name) const { return by_name_.count(name) > 0; }
    const std::vector<arrow_pattern>& all() const { return patterns_; }

  private:
    std::vector<arrow_pattern> patterns_;
    std::map<std::string, size_t> by_name_;
};

}  // namespace trilink

#endif
