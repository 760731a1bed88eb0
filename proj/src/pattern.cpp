#include "trilink/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trilink {

std::vector<std::string> validate_pattern(const arrow_pattern& p) {
    std::vector<std::string> out;
    if (p.circles.size() != 3) {
        out.push_back("pattern '" + p.name + "' must have exactly 3 circles");
        return out;
    }
    std::set<std::string> names;
    for (const pattern_circle& c : p.circles)
        for (const std::string& s : c.slot_names)
            if (!names.insert(s).second)
                out.push_back("pattern '" + p.name + "': duplicate slot name '" + s + "'");

    std::set<std::pair<int, int>> used;
    for (const pattern_arrow& a : p.arrows) {
        if (a.sign != 0 && a.sign != 1 && a.sign != -1)
            out.push_back("pattern '" + p.name + "': bad sign constraint");
        for (const pattern_endpoint* e : {&a.tail, &a.head}) {
            if (e->circle < 0 || e->circle > 2 || e->slot < 0 ||
                e->slot >= p.circles[e->circle].size()) {
                out.push_back("pattern '" + p.name + "': endpoint out of range");
            } else if (!used.insert({e->circle, e->slot}).second) {
                out.push_back("pattern '" + p.name + "': slot used twice");
            }
        }
    }
    for (int c = 0; c < 3; ++c)
        for (int s = 0; s < p.circles[c].size(); ++s)
            if (!used.count({c, s}))
                out.push_back("pattern '" + p.name + "': unused slot '" +
                              p.circles[c].slot_names[s] + "'");
    return out;
}

arrow_pattern reindex_ikswap(const arrow_pattern& p, const std::string& new_name) {
    arrow_pattern r = p;
    r.name = new_name;
    std::swap(r.circles[0], r.circles[2]);
    for (pattern_arrow& a : r.arrows)
        for (pattern_endpoint* e : {&a.tail, &a.head})
            if (e->circle == 0)
                e->circle = 2;
            else if (e->circle == 2)
                e->circle = 0;
    return r;
}

bool same_geometry(const arrow_pattern& a, const arrow_pattern& b) {
    if (a.circles.size() != b.circles.size()) return false;
    for (size_t c = 0; c < a.circles.size(); ++c)
        if (a.circles[c].based != b.circles[c].based ||
            a.circles[c].size() != b.circles[c].size())
            return false;
    auto sorted_arrows = [](const arrow_pattern& p) {
        auto arrows = p.arrows;
        std::sort(arrows.begin(), arrows.end(),
                  [](const pattern_arrow& x, const pattern_arrow& y) {
                      if (!(x.tail == y.tail)) return x.tail < y.tail;
                      return x.head < y.head;
                  });
        return arrows;
    };
    return sorted_arrows(a) == sorted_arrows(b);
}

namespace {

// Cyclic-order check: the assigned positions, read in slot order, must be a
// rotation of a strictly increasing sequence (at most one descent around).
bool cyclic_compatible(const std::vector<int>& positions) {
    int descents = 0;
    const size_t n = positions.size();
    if (n <= 1) return true;
    for (size_t t = 0; t < n; ++t) {
        int cur = positions[t];
        int nxt = positions[(t + 1) % n];
        if (cur == nxt) return false;
        if (cur > nxt) ++descents;
    }
    return descents <= 1;
}

struct match_state {
    const arrow_pattern* pat;
    const gauss_diagram* dia;
    const permutation* binding;
    std::vector<std::vector<int>> candidates;  // per pattern arrow
    std::vector<int> chosen;                   // pattern arrow -> diagram arrow index
    std::vector<int> order;                    // search order over pattern arrows
    std::vector<char> used;                    // diagram arrow usage
    long long total = 0;

    // position of the slot under the partial assignment, or -1
    int slot_position(int circle, int slot) const {
        for (size_t pa = 0; pa < pat->arrows.size(); ++pa) {
            if (chosen[pa] < 0) continue;
            const pattern_arrow& a = pat->arrows[pa];
            const arrow& da = dia->arrows[chosen[pa]];
            if (a.tail.circle == circle && a.tail.slot == slot) return da.tail.position;
            if (a.head.circle == circle && a.head.slot == slot) return da.head.position;
        }
        return -1;
    }

    bool orders_consistent() const {
        for (int c = 0; c < 3; ++c) {
            const pattern_circle& pc = pat->circles[c];
            if (pc.size() < 2) continue;
            std::vector<int> assigned;
            bool complete = true;
            for (int s = 0; s < pc.size(); ++s) {
                int pos = slot_position(c, s);
                if (pos < 0) {
                    complete = false;
                    continue;
                }
                assigned.push_back(pos);
            }
            if (assigned.size() < 2) continue;
            const bool diagram_based = dia->components[(*binding)(c + 1) - 1].based;
            if (pc.based && diagram_based) {
                for (size_t t = 1; t < assigned.size(); ++t)
                    if (assigned[t - 1] >= assigned[t]) return false;
            } else {
                // Closed-order comparison; only exact when all slots are
                // assigned, so partial states defer to the complete check.
                if (complete && !cyclic_compatible(assigned)) return false;
                if (!complete) continue;
            }
        }
        return true;
    }

    void search(size_t depth) {
        if (depth == order.size()) {
            long long w = 1;
            for (size_t pa = 0; pa < pat->arrows.size(); ++pa)
                w *= dia->arrows[chosen[pa]].sign;
            total += w;
            return;
        }
        int pa = order[depth];
        for (int cand : candidates[pa]) {
            if (used[cand]) continue;
            chosen[pa] = cand;
            used[cand] = 1;
            if (orders_consistent()) search(depth + 1);
            chosen[pa] = -1;
            used[cand] = 0;
        }
    }
};

}  // namespace

long long count_pattern(const arrow_pattern& p, const permutation& binding,
                        const gauss_diagram& d) {
    if (!binding.is_valid())
        throw std::invalid_argument("count_pattern: binding is not a permutation of {1,2,3}");
    if (d.component_count() != 3)
        throw std::invalid_argument("count_pattern: diagram must have 3 components");
    auto pv = validate_pattern(p);
    if (!pv.empty()) throw std::invalid_argument("count_pattern: " + pv.front());

    for (int c = 0; c < 3; ++c)
        if (p.circles[c].based && p.circles[c].size() >= 2 &&
            !d.components[binding(c + 1) - 1].based)
            throw std::invalid_argument(
                "count_pattern: based pattern circle bound to closed component");

    match_state st;
    st.pat = &p;
    st.dia = &d;
    st.binding = &binding;
    st.chosen.assign(p.arrows.size(), -1);
    st.used.assign(d.arrows.size(), 0);
    st.candidates.resize(p.arrows.size());

    for (size_t pa = 0; pa < p.arrows.size(); ++pa) {
        const pattern_arrow& a = p.arrows[pa];
        const int want_tail = binding(a.tail.circle + 1);
        const int want_head = binding(a.head.circle + 1);
        for (int da = 0; da < d.arrow_count(); ++da) {
            const arrow& ar = d.arrows[da];
            if (ar.tail.component != want_tail || ar.head.component != want_head) continue;
            if (a.sign != 0 && ar.sign != a.sign) continue;
            st.candidates[pa].push_back(da);
        }
    }

    // Most-constrained-first keeps the backtracking shallow.
    st.order.resize(p.arrows.size());
    for (size_t i = 0; i < st.order.size(); ++i) st.order[i] = static_cast<int>(i);
    std::stable_sort(st.order.begin(), st.order.end(), [&](int x, int y) {
        return st.candidates[x].size() < st.candidates[y].size();
    });

    st.search(0);
    return st.total;
}

rational evaluate_formula(const formula& f, const gauss_diagram& d, const permutation& binding) {
    if (d.component_count() != 3)
        throw std::invalid_argument("evaluate_formula: diagram must have 3 components");

    auto term_sum = [&](const permutation& b) {
        rational s{0};
        for (const formula_term& t : f.terms)
            s += t.coeff * rational(count_pattern(*t.pattern, b, d));
        return s;
    };

    rational total{0};
    switch (f.mode) {
        case summation::single:
            total = term_sum(binding);
            break;
        case summation::even_permutations:
            for (const permutation& s : s3_even()) total += term_sum(s);
            break;
        case summation::odd_permutations:
            for (const permutation& s : s3_odd()) total += term_sum(s);
            break;
        case summation::signed_s3:
            for (const permutation& s : s3())
                total += rational(s.parity()) * term_sum(s);
            break;
        case summation::unsigned_s3:
            for (const permutation& s : s3()) total += term_sum(s);
            break;
    }
    return f.prefactor * total;
}

namespace {

int circle_index(const std::string& label) {
    if (label == "i") return 0;
    if (label == "j") return 1;
    if (label == "k") return 2;
    return -1;
}

}  // namespace

pattern_library pattern_library::parse(const std::string& text) {
    pattern_library lib;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    arrow_pattern current;
    bool open = false;
    std::map<std::string, pattern_endpoint> slot_lookup;

    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("pattern file line " + std::to_string(line_no) + ": " + msg);
    };

    auto flush = [&]() {
        if (!open) return;
        auto violations = validate_pattern(current);
        if (!violations.empty()) fail(violations.front());
        if (lib.by_name_.count(current.name))
            fail("duplicate pattern name '" + current.name + "'");
        lib.by_name_[current.name] = lib.patterns_.size();
        lib.patterns_.push_back(current);
        open = false;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        if (word == "pattern") {
            flush();
            current = arrow_pattern{};
            current.circles.resize(3);
            slot_lookup.clear();
            if (!(ls >> current.name)) fail("expected pattern name");
            open = true;
        } else if (word == "circle") {
            if (!open) fail("'circle' outside a pattern block");
            std::string label;
            if (!(ls >> label)) fail("expected circle label");
            bool based = false;
            if (!label.empty() && label.back() == ':') label.pop_back();
            if (!label.empty() && label.back() == '*') {
                based = true;
                label.pop_back();
            }
            int idx = circle_index(label);
            if (idx < 0) fail("circle label must be i, j or k");
            pattern_circle& pc = current.circles[idx];
            if (!pc.slot_names.empty()) fail("circle '" + label + "' defined twice");
            pc.based = based;
            std::string slot;
            while (ls >> slot) {
                if (slot_lookup.count(slot)) fail("duplicate slot name '" + slot + "'");
                slot_lookup[slot] = pattern_endpoint{idx, pc.size()};
                pc.slot_names.push_back(slot);
            }
        } else if (word == "arrow") {
            if (!open) fail("'arrow' outside a pattern block");
            std::string tail, arrow_sym, head, sign_word;
            if (!(ls >> tail >> arrow_sym >> head)) fail("expected 'arrow <tail> -> <head>'");
            if (arrow_sym != "->") fail("expected '->'");
            pattern_arrow a;
            auto t = slot_lookup.find(tail);
            auto h = slot_lookup.find(head);
            if (t == slot_lookup.end()) fail("unknown slot '" + tail + "'");
            if (h == slot_lookup.end()) fail("unknown slot '" + head + "'");
            a.tail = t->second;
            a.head = h->second;
            if (ls >> sign_word) {
                if (sign_word == "+")
                    a.sign = +1;
                else if (sign_word == "-")
                    a.sign = -1;
                else
                    fail("bad sign '" + sign_word + "'");
            }
            current.arrows.push_back(a);
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    flush();
    return lib;
}

pattern_library pattern_library::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const arrow_pattern& pattern_library::at(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw std::out_of_range("pattern library has no pattern '" + name + "'");
    return patterns_[it->second];
}

}  // namespace trilink
