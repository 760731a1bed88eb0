#include "trilink/moves.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace trilink {

namespace {

int gap_count(const component_info& c) {
    return c.based ? c.size + 1 : std::max(c.size, 1);
}

// q sits immediately after p along the component order. Adjacency never wraps
// on based components, so local pictures cannot span a base point.
bool follows(const component_info& c, int p, int q) {
    if (c.based) return q == p + 1;
    if (c.size < 2) return false;
    return q == (p + 1) % c.size;
}

std::string fresh_id(const gauss_diagram& d, int offset) {
    long long mx = 0;
    for (const arrow& a : d.arrows) {
        bool digits = !a.id.empty();
        for (char ch : a.id)
            if (!std::isdigit(static_cast<unsigned char>(ch))) digits = false;
        if (digits) mx = std::max(mx, std::stoll(a.id));
    }
    return std::to_string(mx + 1 + offset);
}

void shift_for_insert(gauss_diagram& d, int component, int gap) {
    for (arrow& a : d.arrows)
        for (endpoint* e : {&a.tail, &a.head})
            if (e->component == component && e->position >= gap) e->position += 2;
    d.components[component - 1].size += 2;
}

// Removes the given slots (their arrows must already be gone) and compacts.
void remove_slots(gauss_diagram& d, const std::vector<endpoint>& removed) {
    for (arrow& a : d.arrows)
        for (endpoint* e : {&a.tail, &a.head}) {
            int below = 0;
            for (const endpoint& r : removed)
                if (r.component == e->component && r.position < e->position) ++below;
            e->position -= below;
        }
    for (const endpoint& r : removed) d.components[r.component - 1].size -= 1;
}

void erase_arrow(gauss_diagram& d, const std::string& id) {
    int idx = d.find_arrow(id);
    d.arrows.erase(d.arrows.begin() + idx);
}

// --- site matching -------------------------------------------------------

bool match_r1_delete(const gauss_diagram& d, const move_variant& v, const arrow& a) {
    if (a.sign != v.r1_sign) return false;
    if (a.tail.component != a.head.component) return false;
    const component_info& c = d.components[a.tail.component - 1];
    if (v.r1_head_first) return follows(c, a.head.position, a.tail.position);
    return follows(c, a.tail.position, a.head.position);
}

bool match_r2_delete(const gauss_diagram& d, const move_variant& v, const arrow& lead,
                     const arrow& partner) {
    if (lead.sign != v.r2_lead_sign || partner.sign != -v.r2_lead_sign) return false;
    if (lead.tail.component != partner.tail.component) return false;
    if (lead.head.component != partner.head.component) return false;
    const component_info& ct = d.components[lead.tail.component - 1];
    const component_info& ch = d.components[lead.head.component - 1];
    if (!follows(ct, lead.tail.position, partner.tail.position)) return false;
    if (v.r2_same_order) return follows(ch, lead.head.position, partner.head.position);
    return follows(ch, partner.head.position, lead.head.position);
}

bool match_r3(const gauss_diagram& d, const move_variant& v, bool flipped, const arrow& hm,
              const arrow& hl, const arrow& ml) {
    if (hm.sign != v.r3_signs[0] || hl.sign != v.r3_signs[1] || ml.sign != v.r3_signs[2])
        return false;
    const bool h = v.r3_left_bits[0] != flipped;
    const bool m = v.r3_left_bits[1] != flipped;
    const bool l = v.r3_left_bits[2] != flipped;

    if (hm.tail.component != hl.tail.component) return false;
    if (hm.head.component != ml.tail.component) return false;
    if (hl.head.component != ml.head.component) return false;

    const component_info& ch = d.components[hm.tail.component - 1];
    const component_info& cm = d.components[hm.head.component - 1];
    const component_info& cl = d.components[hl.head.component - 1];

    if (h ? !follows(ch, hm.tail.position, hl.tail.position)
          : !follows(ch, hl.tail.position, hm.tail.position))
        return false;
    if (m ? !follows(cm, hm.head.position, ml.tail.position)
          : !follows(cm, ml.tail.position, hm.head.position))
        return false;
    if (l ? !follows(cl, hl.head.position, ml.head.position)
          : !follows(cl, ml.head.position, hl.head.position))
        return false;
    return true;
}

bool site_matches(const gauss_diagram& d, const move_spec& spec, const move_site& site) {
    const move_variant& v = *spec.variant;
    const bool insertion = (v.kind != move_kind::r3) && !spec.inverse;
    if (insertion) {
        const size_t want = v.kind == move_kind::r1 ? 1 : 2;
        if (site.gaps.size() != want || !site.arrow_ids.empty()) return false;
        for (const auto& [c, g] : site.gaps) {
            if (c < 1 || c > d.component_count()) return false;
            if (g < 0 || g >= gap_count(d.components[c - 1])) return false;
        }
        if (want == 2 && site.gaps[0] == site.gaps[1]) return false;
        return true;
    }
    std::vector<const arrow*> arrows;
    for (const std::string& id : site.arrow_ids) {
        int idx = d.find_arrow(id);
        if (idx < 0) return false;
        arrows.push_back(&d.arrows[idx]);
    }
    switch (v.kind) {
        case move_kind::r1:
            return arrows.size() == 1 && match_r1_delete(d, v, *arrows[0]);
        case move_kind::r2:
            return arrows.size() == 2 && arrows[0] != arrows[1] &&
                   match_r2_delete(d, v, *arrows[0], *arrows[1]);
        case move_kind::r3:
            return arrows.size() == 3 && arrows[0] != arrows[1] && arrows[0] != arrows[2] &&
                   arrows[1] != arrows[2] &&
                   match_r3(d, v, spec.inverse, *arrows[0], *arrows[1], *arrows[2]);
    }
    return false;
}

}  // namespace

std::vector<move_site> enumerate_sites(const gauss_diagram& d, const move_spec& spec) {
    const move_variant& v = *spec.variant;
    std::vector<move_site> out;

    if (v.kind == move_kind::r1 && !spec.inverse) {
        for (int c = 1; c <= d.component_count(); ++c)
            for (int g = 0; g < gap_count(d.components[c - 1]); ++g)
                out.push_back(move_site{{{c, g}}, {}});
        return out;
    }
    if (v.kind == move_kind::r2 && !spec.inverse) {
        for (int c1 = 1; c1 <= d.component_count(); ++c1)
            for (int g1 = 0; g1 < gap_count(d.components[c1 - 1]); ++g1)
                for (int c2 = 1; c2 <= d.component_count(); ++c2)
                    for (int g2 = 0; g2 < gap_count(d.components[c2 - 1]); ++g2)
                        if (std::pair{c1, g1} != std::pair{c2, g2})
                            out.push_back(move_site{{{c1, g1}, {c2, g2}}, {}});
        return out;
    }
    if (v.kind == move_kind::r1) {
        for (const arrow& a : d.arrows)
            if (match_r1_delete(d, v, a)) out.push_back(move_site{{}, {a.id}});
    } else if (v.kind == move_kind::r2) {
        for (const arrow& a : d.arrows)
            for (const arrow& b : d.arrows)
                if (&a != &b && match_r2_delete(d, v, a, b))
                    out.push_back(move_site{{}, {a.id, b.id}});
    } else {
        for (const arrow& hm : d.arrows)
            for (const arrow& hl : d.arrows)
                for (const arrow& ml : d.arrows) {
                    if (&hm == &hl || &hm == &ml || &hl == &ml) continue;
                    if (match_r3(d, v, spec.inverse, hm, hl, ml))
                        out.push_back(move_site{{}, {hm.id, hl.id, ml.id}});
                }
    }
    std::sort(out.begin(), out.end());
    return out;
}

gauss_diagram apply_move(const gauss_diagram& d, const move_spec& spec, const move_site& site) {
    if (!spec.variant) throw std::invalid_argument("apply_move: null variant");
    if (!site_matches(d, spec, site))
        throw std::invalid_argument("apply_move: stale site for variant '" + spec.variant->tag +
                                    "'");
    const move_variant& v = *spec.variant;
    gauss_diagram r = d;

    if (v.kind == move_kind::r1 && !spec.inverse) {
        auto [c, g] = site.gaps[0];
        shift_for_insert(r, c, g);
        arrow a;
        a.id = fresh_id(d, 0);
        a.sign = v.r1_sign;
        endpoint first{c, g}, second{c, g + 1};
        a.tail = v.r1_head_first ? second : first;
        a.head = v.r1_head_first ? first : second;
        r.arrows.push_back(a);
        return r;
    }
    if (v.kind == move_kind::r2 && !spec.inverse) {
        auto [ct, gt] = site.gaps[0];
        auto [ch, gh] = site.gaps[1];
        shift_for_insert(r, ct, gt);
        if (ch == ct && gh >= gt) gh += 2;
        shift_for_insert(r, ch, gh);
        arrow lead, partner;
        lead.id = fresh_id(d, 0);
        partner.id = fresh_id(d, 1);
        lead.sign = v.r2_lead_sign;
        partner.sign = -v.r2_lead_sign;
        lead.tail = endpoint{ct, gt};
        partner.tail = endpoint{ct, gt + 1};
        if (v.r2_same_order) {
            lead.head = endpoint{ch, gh};
            partner.head = endpoint{ch, gh + 1};
        } else {
            partner.head = endpoint{ch, gh};
            lead.head = endpoint{ch, gh + 1};
        }
        r.arrows.push_back(lead);
        r.arrows.push_back(partner);
        return r;
    }
    if (v.kind == move_kind::r1) {
        const arrow a = d.arrows[d.find_arrow(site.arrow_ids[0])];
        erase_arrow(r, a.id);
        remove_slots(r, {a.tail, a.head});
        return r;
    }
    if (v.kind == move_kind::r2) {
        const arrow a = d.arrows[d.find_arrow(site.arrow_ids[0])];
        const arrow b = d.arrows[d.find_arrow(site.arrow_ids[1])];
        erase_arrow(r, a.id);
        erase_arrow(r, b.id);
        remove_slots(r, {a.tail, a.head, b.tail, b.head});
        return r;
    }

    // R3: swap the three adjacent endpoint pairs in place.
    const arrow& hm = d.arrows[d.find_arrow(site.arrow_ids[0])];
    const arrow& hl = d.arrows[d.find_arrow(site.arrow_ids[1])];
    const arrow& ml = d.arrows[d.find_arrow(site.arrow_ids[2])];
    std::array<std::pair<endpoint, endpoint>, 3> pairs = {{
        {hm.tail, hl.tail},
        {hm.head, ml.tail},
        {hl.head, ml.head},
    }};
    auto swap_pair = [&](endpoint* e) {
        for (const auto& [x, y] : pairs) {
            if (*e == x) {
                *e = y;
                return;
            }
            if (*e == y) {
                *e = x;
                return;
            }
        }
    };
    for (arrow& a : r.arrows) {
        swap_pair(&a.tail);
        swap_pair(&a.head);
    }
    return r;
}

// --- move table ----------------------------------------------------------

namespace {

struct picture_strand {
    std::string name;
    std::vector<std::string> slots;
};
struct picture_arrow {
    std::string tail, head;
    int sign = 0;
};
struct picture {
    std::vector<picture_strand> strands;
    std::vector<picture_arrow> arrows;

    // (strand index, slot order index), or (-1,-1)
    std::pair<int, int> locate(const std::string& slot) const {
        for (size_t s = 0; s < strands.size(); ++s)
            for (size_t t = 0; t < strands[s].slots.size(); ++t)
                if (strands[s].slots[t] == slot)
                    return {static_cast<int>(s), static_cast<int>(t)};
        return {-1, -1};
    }
};

struct raw_move {
    std::string tag;
    picture left, right;
    int line = 0;
};

move_variant decode(const raw_move& rm) {
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("move table: variant '" + rm.tag + "' (line " +
                                 std::to_string(rm.line) + "): " + msg);
    };

    move_variant v;
    v.tag = rm.tag;

    const picture& L = rm.left;
    const picture& R = rm.right;

    if (R.arrows.size() == 1) {
        v.kind = move_kind::r1;
        if (!L.arrows.empty() || L.strands.size() != 1 || !L.strands[0].slots.empty())
            fail("R1 left side must be one empty strand");
        if (R.strands.size() != 1 || R.strands[0].slots.size() != 2)
            fail("R1 right side must be one strand with two slots");
        const picture_arrow& a = R.arrows[0];
        if (a.sign == 0) fail("move arrows must carry signs");
        v.r1_sign = a.sign;
        v.r1_head_first = R.strands[0].slots[0] == a.head;
        if (!v.r1_head_first && R.strands[0].slots[0] != a.tail) fail("R1 slots mismatch");
        return v;
    }

    if (R.arrows.size() == 2) {
        v.kind = move_kind::r2;
        if (!L.arrows.empty() || L.strands.size() != 2)
            fail("R2 left side must be two empty strands");
        if (R.strands.size() != 2 || R.strands[0].slots.size() != 2 ||
            R.strands[1].slots.size() != 2)
            fail("R2 right side must be two strands with two slots each");
        // Lead arrow = the one whose tail opens the first strand.
        const picture_arrow* lead = nullptr;
        const picture_arrow* partner = nullptr;
        for (const picture_arrow& a : R.arrows) {
            if (a.tail == R.strands[0].slots[0])
                lead = &a;
            else if (a.tail == R.strands[0].slots[1])
                partner = &a;
        }
        if (!lead || !partner) fail("R2 tails must fill the first strand");
        if (lead->sign == 0 || partner->sign != -lead->sign)
            fail("R2 arrows must carry opposite signs");
        v.r2_lead_sign = lead->sign;
        if (lead->head == R.strands[1].slots[0] && partner->head == R.strands[1].slots[1])
            v.r2_same_order = true;
        else if (lead->head == R.strands[1].slots[1] && partner->head == R.strands[1].slots[0])
            v.r2_same_order = false;
        else
            fail("R2 heads must fill the second strand");
        return v;
    }

    if (R.arrows.size() != 3 || L.arrows.size() != 3) fail("unrecognized move shape");
    v.kind = move_kind::r3;
    if (L.strands.size() != 3 || R.strands.size() != 3) fail("R3 needs three strands");

    // Identify roles from the left picture: H carries two tails, L two heads.
    auto analyze = [&](const picture& pic, std::array<int, 3>* signs,
                       std::array<bool, 3>* bits) {
        int h_strand = -1, m_strand = -1, l_strand = -1;
        std::vector<int> tails(pic.strands.size(), 0), heads(pic.strands.size(), 0);
        for (const picture_arrow& a : pic.arrows) {
            auto [ts, tt] = pic.locate(a.tail);
            auto [hs, ht] = pic.locate(a.head);
            if (ts < 0 || hs < 0) fail("arrow references unknown slot");
            (void)tt;
            (void)ht;
            ++tails[ts];
            ++heads[hs];
        }
        for (size_t s = 0; s < pic.strands.size(); ++s) {
            if (pic.strands[s].slots.size() != 2) fail("R3 strands need two slots each");
            if (tails[s] == 2)
                h_strand = static_cast<int>(s);
            else if (heads[s] == 2)
                l_strand = static_cast<int>(s);
            else if (tails[s] == 1 && heads[s] == 1)
                m_strand = static_cast<int>(s);
        }
        if (h_strand < 0 || m_strand < 0 || l_strand < 0) fail("R3 direction pattern invalid");

        const picture_arrow *hm = nullptr, *hl = nullptr, *ml = nullptr;
        for (const picture_arrow& a : pic.arrows) {
            int ts = pic.locate(a.tail).first;
            int hs = pic.locate(a.head).first;
            if (ts == h_strand && hs == m_strand)
                hm = &a;
            else if (ts == h_strand && hs == l_strand)
                hl = &a;
            else if (ts == m_strand && hs == l_strand)
                ml = &a;
        }
        if (!hm || !hl || !ml) fail("R3 arrows must form the H->M, H->L, M->L triangle");
        if (hm->sign == 0 || hl->sign == 0 || ml->sign == 0) fail("move arrows must carry signs");
        *signs = {hm->sign, hl->sign, ml->sign};
        (*bits)[0] = pic.locate(hm->tail).second == 0;  // h: HM tail first on H
        (*bits)[1] = pic.locate(hm->head).second == 0;  // m: HM head first on M
        (*bits)[2] = pic.locate(hl->head).second == 0;  // l: HL head first on L
    };

    std::array<int, 3> lsigns{}, rsigns{};
    std::array<bool, 3> lbits{}, rbits{};
    analyze(L, &lsigns, &lbits);
    analyze(R, &rsigns, &rbits);
    if (lsigns != rsigns) fail("R3 sides disagree on signs");
    for (int t = 0; t < 3; ++t)
        if (rbits[t] == lbits[t]) fail("R3 right side must flip every pair");

    // Realizability: only these order states occur in planar triangles.
    const bool hm_xor = lbits[0] != lbits[1];
    const bool ml_xor = lbits[1] != lbits[2];
    if (hm_xor != (lsigns[1] * lsigns[2] < 0) || ml_xor != (lsigns[0] * lsigns[1] < 0))
        fail("R3 order bits inconsistent with signs (not a planar triangle)");

    v.r3_signs = lsigns;
    v.r3_left_bits = lbits;
    return v;
}

}  // namespace

move_table move_table::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::vector<raw_move> raws;
    raw_move cur;
    bool open = false;
    picture* side = nullptr;

    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("move table line " + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        if (word == "move") {
            if (open) raws.push_back(cur);
            cur = raw_move{};
            cur.line = line_no;
            if (!(ls >> cur.tag)) fail("expected move tag");
            open = true;
            side = nullptr;
        } else if (word == "left:") {
            if (!open) fail("'left:' outside a move block");
            side = &cur.left;
        } else if (word == "right:") {
            if (!open) fail("'right:' outside a move block");
            side = &cur.right;
        } else if (word == "strand") {
            if (!side) fail("'strand' before left:/right:");
            picture_strand s;
            if (!(ls >> s.name)) fail("expected strand name");
            if (!s.name.empty() && s.name.back() == ':') s.name.pop_back();
            std::string slot;
            while (ls >> slot) s.slots.push_back(slot);
            side->strands.push_back(s);
        } else if (word == "arrow") {
            if (!side) fail("'arrow' before left:/right:");
            picture_arrow a;
            std::string sym, sign;
            if (!(ls >> a.tail >> sym >> a.head >> sign) || sym != "->")
                fail("expected 'arrow <tail> -> <head> <sign>'");
            if (sign == "+")
                a.sign = +1;
            else if (sign == "-")
                a.sign = -1;
            else
                fail("bad sign '" + sign + "'");
            side->arrows.push_back(a);
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (open) raws.push_back(cur);

    move_table table;
    for (const raw_move& rm : raws) {
        move_variant v = decode(rm);
        if (table.by_tag_.count(v.tag))
            throw std::runtime_error("move table: duplicate tag '" + v.tag + "'");
        table.by_tag_[v.tag] = table.variants_.size();
        table.variants_.push_back(v);
    }
    return table;
}

move_table move_table::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open move table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const move_variant& move_table::at(const std::string& tag) const {
    auto it = by_tag_.find(tag);
    if (it == by_tag_.end()) throw std::out_of_range("move table has no variant '" + tag + "'");
    return variants_[it->second];
}

std::vector<gauss_diagram> random_walk(std::uint64_t seed, int steps,
                                       const std::vector<move_spec>& allowed,
                                       const gauss_diagram& start, const move_table& table) {
    if (steps < 0) throw std::invalid_argument("random_walk: negative step count");
    std::mt19937_64 rng(seed);
    std::vector<gauss_diagram> walk{start};
    walk.reserve(steps + 1);

    std::vector<move_spec> fallback;
    for (const move_variant& v : table.all())
        if (v.kind != move_kind::r3) fallback.push_back(move_spec{&v, false});

    for (int s = 0; s < steps; ++s) {
        const gauss_diagram& cur = walk.back();
        std::vector<std::pair<const move_spec*, move_site>> options;
        for (const move_spec& spec : allowed)
            for (move_site& site : enumerate_sites(cur, spec))
                options.emplace_back(&spec, std::move(site));
        if (options.empty())
            for (const move_spec& spec : fallback)
                for (move_site& site : enumerate_sites(cur, spec))
                    options.emplace_back(&spec, std::move(site));
        if (options.empty()) {
            walk.push_back(cur);  // nothing applies anywhere (no components)
            continue;
        }
        const auto& [spec, site] = options[rng() % options.size()];
        walk.push_back(apply_move(cur, *spec, site));
    }
    return walk;
}

}  // namespace trilink
