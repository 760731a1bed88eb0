#include "trilink/bouquet.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "trilink/gauss_code.hpp"

namespace trilink {

namespace {

// Letters in order of first occurrence.
std::vector<char> first_occurrence_order(const std::vector<char>& word) {
    std::vector<char> order;
    for (char ch : word)
        if (std::find(order.begin(), order.end(), ch) == order.end()) order.push_back(ch);
    return order;
}

}  // namespace

std::vector<std::string> validate_bouquet(const bouquet_presentation& b) {
    std::vector<std::string> out;
    if (b.vertex_word.size() != 6) {
        out.push_back("vertex word must have six letters");
        return out;
    }
    std::map<char, int> counts;
    for (char ch : b.vertex_word) ++counts[ch];
    if (counts.size() != 3) out.push_back("vertex word must use exactly three letters");
    for (const auto& [ch, n] : counts)
        if (n != 2)
            out.push_back(std::string("letter '") + ch + "' must occur exactly twice");
    for (const auto& [ch, n] : counts)
        if (!b.edges.count(ch))
            out.push_back(std::string("no traversal for edge '") + ch + "'");
    for (const auto& [ch, toks] : b.edges) {
        (void)toks;
        if (!counts.count(ch))
            out.push_back(std::string("traversal for unknown edge '") + ch + "'");
    }
    if (!out.empty()) return out;

    struct half {
        bool seen = false;
        int sign = 0;
    };
    std::map<std::string, std::pair<half, half>> by_id;  // over, under
    for (const auto& [ch, toks] : b.edges) {
        (void)ch;
        for (const traversal_token& t : toks) {
            half& h = t.over ? by_id[t.id].first : by_id[t.id].second;
            if (h.seen)
                out.push_back("crossing '" + t.id + "' has two " +
                              (t.over ? "over" : "under") + " passages");
            h.seen = true;
            h.sign = t.sign;
        }
    }
    for (const auto& [id, p] : by_id) {
        if (!p.first.seen || !p.second.seen)
            out.push_back("crossing '" + id + "' is unpaired");
        else if (p.first.sign != p.second.sign)
            out.push_back("crossing '" + id + "' has mismatched signs");
    }
    return out;
}

gauss_diagram compile_bouquet(const bouquet_presentation& b) {
    auto violations = validate_bouquet(b);
    if (!violations.empty())
        throw std::invalid_argument("compile_bouquet: " + violations.front());

    std::vector<char> order = first_occurrence_order(b.vertex_word);

    gauss_diagram d;
    d.components.assign(3, component_info{true, 0});

    struct half {
        bool seen = false;
        endpoint at;
        int sign = 0;
    };
    std::map<std::string, std::pair<half, half>> by_id;  // tail (O), head (U)

    for (int c = 1; c <= 3; ++c) {
        const auto& toks = b.edges.at(order[c - 1]);
        d.components[c - 1].size = static_cast<int>(toks.size());
        for (size_t p = 0; p < toks.size(); ++p) {
            const traversal_token& t = toks[p];
            half& h = t.over ? by_id[t.id].first : by_id[t.id].second;
            h.seen = true;
            h.at = endpoint{c, static_cast<int>(p)};
            h.sign = t.sign;
        }
    }
    for (const auto& [id, p] : by_id)
        d.arrows.push_back(arrow{id, p.first.sign, p.first.at, p.second.at});

    auto dv = validate(d);
    if (!dv.empty()) throw std::logic_error("compile_bouquet: " + dv.front());
    return d;
}

bouquet_presentation cyclic_rebase(const bouquet_presentation& b, int shift) {
    auto violations = validate_bouquet(b);
    if (!violations.empty())
        throw std::invalid_argument("cyclic_rebase: " + violations.front());
    shift = ((shift % 6) + 6) % 6;

    bouquet_presentation r;
    for (int p = 0; p < 6; ++p) r.vertex_word.push_back(b.vertex_word[(p + shift) % 6]);

    // A letter reverses orientation when the rotation swaps which of its two
    // occurrences is read first.
    std::map<char, bool> reversed;
    for (char ch : first_occurrence_order(b.vertex_word)) {
        int a = -1, bpos = -1;
        for (int p = 0; p < 6; ++p)
            if (b.vertex_word[p] == ch) (a < 0 ? a : bpos) = p;
        int na = (a - shift + 6) % 6, nb = (bpos - shift + 6) % 6;
        reversed[ch] = na > nb;
    }

    auto passage_edge = [&](const std::string& id, bool over) -> char {
        for (const auto& [ch, toks] : b.edges)
            for (const traversal_token& t : toks)
                if (t.id == id && t.over == over) return ch;
        return 0;
    };

    for (const auto& [ch, toks] : b.edges) {
        std::vector<traversal_token> out = toks;
        if (reversed[ch]) std::reverse(out.begin(), out.end());
        // Sign flips when exactly one of the two passing edges reverses.
        for (traversal_token& t : out) {
            char other = passage_edge(t.id, !t.over);
            if (reversed[ch] != reversed[other]) t.sign = -t.sign;
        }
        r.edges[ch] = std::move(out);
    }
    return r;
}

bouquet_presentation bouquet_mirror(const bouquet_presentation& b) {
    bouquet_presentation m = b;
    for (auto& [ch, toks] : m.edges) {
        (void)ch;
        for (traversal_token& t : toks) {
            t.over = !t.over;
            t.sign = -t.sign;
        }
    }
    return m;
}

bouquet_presentation parse_bouquet(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_header = false;

    bouquet_presentation b;
    auto fail = [&](const std::string& msg, int col) { throw parse_error(msg, line_no, col); };

    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        if (!saw_header) {
            if (word != "bouquet") fail("expected 'bouquet' header", 1);
            saw_header = true;
            continue;
        }
        if (word == "vertex:") {
            std::string letter;
            while (ls >> letter) {
                if (letter.size() != 1) fail("vertex letters must be single characters", 1);
                b.vertex_word.push_back(letter[0]);
            }
        } else if (word == "edge") {
            std::string label;
            if (!(ls >> label)) fail("expected edge letter", 1);
            if (!label.empty() && label.back() == ':') label.pop_back();
            if (label.size() != 1) fail("edge letters must be single characters", 1);
            std::vector<traversal_token> toks;
            std::string tok;
            while (ls >> tok) {
                if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
                    fail("expected O or U in token '" + tok + "'", 1);
                char sign_ch = tok.back();
                if (sign_ch != '+' && sign_ch != '-')
                    fail("expected sign +/- in token '" + tok + "'", 1);
                std::string id = tok.substr(1, tok.size() - 2);
                for (char ch : id)
                    if (!std::isalnum(static_cast<unsigned char>(ch)))
                        fail("crossing label must be alphanumeric in '" + tok + "'", 1);
                toks.push_back(traversal_token{tok[0] == 'O', id, sign_ch == '+' ? +1 : -1});
            }
            if (b.edges.count(label[0])) fail(std::string("edge '") + label + "' defined twice", 1);
            b.edges[label[0]] = std::move(toks);
        } else {
            fail("unknown directive '" + word + "'", 1);
        }
    }
    if (!saw_header) throw parse_error("expected 'bouquet' header", 1, 1);
    auto violations = validate_bouquet(b);
    if (!violations.empty()) throw parse_error("invalid bouquet: " + violations.front(), line_no, 1);
    return b;
}

std::string serialize_bouquet(const bouquet_presentation& b) {
    auto violations = validate_bouquet(b);
    if (!violations.empty())
        throw std::invalid_argument("serialize_bouquet: " + violations.front());
    std::ostringstream out;
    out << "bouquet\nvertex:";
    for (char ch : b.vertex_word) out << ' ' << ch;
    out << "\n";
    for (char ch : first_occurrence_order(b.vertex_word)) {
        out << "edge " << ch << ":";
        for (const traversal_token& t : b.edges.at(ch))
            out << ' ' << (t.over ? 'O' : 'U') << t.id << (t.sign > 0 ? '+' : '-');
        out << "\n";
    }
    return out.str();
}

bouquet_presentation load_bouquet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bouquet file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bouquet(buf.str());
}

}  // namespace trilink
