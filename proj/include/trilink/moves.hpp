#ifndef TRILINK_MOVES_HPP
#define TRILINK_MOVES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trilink/diagram.hpp"

namespace trilink {

enum class move_kind { r1, r2, r3 };

// One oriented Reidemeister move variant, decoded from the move-table file.
//
// R1 inserts/deletes an isolated arrow with both endpoints adjacent on one
// strand (4 variants: crossing sign x which end comes first).
//
// R2 inserts/deletes a pair of arrows sharing tail strand and head strand
// with opposite signs, tails adjacent and heads adjacent (4 variants: whether
// the head order matches the tail order x the sign of the leading arrow).
//
// R3 rewrites three arrows forming a triangle: the arrows connect strands
// H -> M, H -> L, M -> L, their six endpoints form three adjacent pairs (one
// per strand), and the move swaps each pair in place. Realizable variants are
// parametrized by the sign triple (s_hm, s_hl, s_ml); the two sides of the
// move are the two endpoint-order states compatible with those signs:
//   h = [tail of HM before tail of HL on H]
//   m = [head of HM before tail of ML on M]
//   l = [head of HL before head of ML on L]
// with h xor m = [s_hl*s_ml < 0] and m xor l = [s_hm*s_hl < 0]; the free bit
// flips under the move. The loader checks the table rows against these
// relations, so an incorrectly transcribed row is rejected up front.
struct move_variant {
    std::string tag;
    move_kind kind = move_kind::r1;

    int r1_sign = +1;
    bool r1_head_first = false;

    int r2_lead_sign = +1;
    bool r2_same_order = true;

    std::array<int, 3> r3_signs{+1, +1, +1};
    std::array<bool, 3> r3_left_bits{true, true, true};
};

// direction apply = left-to-right (insertion for R1/R2), inverse = back.
struct move_spec {
    const move_variant* variant = nullptr;
    bool inverse = false;
};

// Where a move applies. For insertions, `gaps` holds (component, gap) targets
// (gap g sits before position g). For deletions and R3, `arrow_ids` holds the
// matched arrows (R2: lead then partner; R3: HM, HL, ML roles).
struct move_site {
    std::vector<std::pair<int, int>> gaps;
    std::vector<std::string> arrow_ids;

    friend bool operator==(const move_site& a, const move_site& b) {
        return a.gaps == b.gaps && a.arrow_ids == b.arrow_ids;
    }
    friend bool operator<(const move_site& a, const move_site& b) {
        if (a.gaps != b.gaps) return a.gaps < b.gaps;
        return a.arrow_ids < b.arrow_ids;
    }
};

// Complete, deterministically ordered site list. R1/R2 insertion sites range
// over distinct (component, gap) anchors; deletion and R3 sites over all
// matching arrow tuples. Local pictures never span a base point (adjacency on
// a based component does not wrap).
std::vector<move_site> enumerate_sites(const gauss_diagram& d, const move_spec& spec);

// Rewrites at the given site. Throws std::invalid_argument if the site is
// stale (the configuration is no longer present).
gauss_diagram apply_move(const gauss_diagram& d, const move_spec& spec, const move_site& site);

// The move table, shipped as a versioned data file (two local pictures per
// variant in left:/right: blocks using the pattern-file slot syntax).
class move_table {
  public:
    static move_table load_file(const std::string& path);
    static move_table parse(const std::string& text);

    const move_variant& at(const std::string& tag) const;
    const std::vector<move_variant>& all() const { return variants_; }

  private:
    std::vector<move_variant> variants_;
    std::map<std::string, size_t> by_tag_;
};

// Deterministic pseudo-random move walk: steps diagrams, each obtained from
// the previous by one applicable (move, site) pair drawn uniformly under the
// seeded generator. If nothing in `allowed` applies, a forced R1/R2 insertion
// from `table` keeps the walk alive. Returns steps+1 diagrams incl. start.
std::vector<gauss_diagram> random_walk(std::uint64_t seed, int steps,
                                       const std::vector<move_spec>& allowed,
                                       const gauss_diagram& start, const move_table& table);

}  // namespace trilink

#endif
