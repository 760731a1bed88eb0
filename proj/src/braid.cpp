#include "trilink/braid.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace trilink {

gauss_diagram braid_closure_diagram(int strands, const std::vector<int>& word) {
    if (strands < 1) throw std::invalid_argument("braid: need at least one strand");

    struct passage {
        std::string id;
        bool over;
        int sign;
    };
    std::vector<std::vector<passage>> along(strands + 1);  // 1-based strand index
    std::vector<int> pos(strands + 1);                     // position -> strand
    for (int p = 1; p <= strands; ++p) pos[p] = p;

    int crossing = 0;
    for (int gen : word) {
        int i = gen > 0 ? gen : -gen;
        if (i < 1 || i >= strands) throw std::invalid_argument("braid: generator out of range");
        int a = pos[i], b = pos[i + 1];
        ++crossing;
        std::string id = std::to_string(crossing);
        int over = gen > 0 ? a : b;
        int under = gen > 0 ? b : a;
        int sign = gen > 0 ? +1 : -1;
        along[over].push_back(passage{id, true, sign});
        along[under].push_back(passage{id, false, sign});
        std::swap(pos[i], pos[i + 1]);
    }

    // next strand after s in the closure = the final position of s
    std::vector<int> next(strands + 1);
    for (int p = 1; p <= strands; ++p) next[pos[p]] = p;

    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(strands + 1, false);
    for (int s = 1; s <= strands; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        for (int t = s; !seen[t]; t = next[t]) {
            seen[t] = true;
            cyc.push_back(t);
        }
        cycles.push_back(cyc);
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    gauss_diagram d;
    d.components.assign(cycles.size(), component_info{true, 0});

    struct half {
        endpoint at;
        int sign = 0;
        bool seen = false;
    };
    std::map<std::string, std::pair<half, half>> by_id;  // tail, head

    for (size_t c = 0; c < cycles.size(); ++c) {
        int position = 0;
        for (int s : cycles[c])
            for (const passage& p : along[s]) {
                half& h = p.over ? by_id[p.id].first : by_id[p.id].second;
                h.at = endpoint{static_cast<int>(c) + 1, position++};
                h.sign = p.sign;
                h.seen = true;
            }
        d.components[c].size = position;
    }
    for (const auto& [id, p] : by_id)
        d.arrows.push_back(arrow{id, p.first.sign, p.first.at, p.second.at});
    return d;
}

gauss_diagram random_braid_closure(std::uint64_t seed, int strands, int length, int components) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<int> word(length);
        for (int& g : word) {
            int i = 1 + static_cast<int>(rng() % (strands - 1));
            g = (rng() & 1) ? i : -i;
        }
        gauss_diagram d = braid_closure_diagram(strands, word);
        if (d.component_count() == components) return d;
    }
    throw std::runtime_error("random_braid_closure: no word with the requested cycle count");
}

}  // namespace trilink
