#include "trilink/gauss_code.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace trilink {

namespace {

struct token_pos {
    std::string text;
    int line;
    int column;
};

// Splits one physical line into whitespace-separated tokens, tracking columns.
std::vector<token_pos> split_tokens(const std::string& line, int line_no) {
    std::vector<token_pos> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

}  // namespace

gauss_diagram parse_gauss_code(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::vector<std::vector<token_pos>> lines;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_tokens(line, line_no);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    if (lines.empty()) throw parse_error("expected 'link <n>' header", 1, 1);

    const auto& header = lines.front();
    if (header[0].text != "link")
        throw parse_error("expected 'link'", header[0].line, header[0].column);
    if (header.size() != 2)
        throw parse_error("expected 'link <n>'", header[0].line, header[0].column);
    int n_components = 0;
    try {
        n_components = std::stoi(header[1].text);
    } catch (const std::exception&) {
        throw parse_error("malformed component count '" + header[1].text + "'", header[1].line,
                          header[1].column);
    }
    if (n_components < 0)
        throw parse_error("negative component count", header[1].line, header[1].column);

    gauss_diagram d;
    d.components.assign(n_components, component_info{});

    struct half {
        bool seen = false;
        int sign = 0;
        endpoint at;
        int line = 0, column = 0;
    };
    struct pending {
        half tail, head;
    };
    std::map<std::string, pending> by_id;

    if (static_cast<int>(lines.size()) - 1 != n_components)
        throw parse_error("expected " + std::to_string(n_components) + " component lines, got " +
                              std::to_string(lines.size() - 1),
                          header[0].line, header[0].column);

    for (int c = 1; c <= n_components; ++c) {
        const auto& toks = lines[c];
        if (toks[0].text != "component")
            throw parse_error("expected 'component'", toks[0].line, toks[0].column);
        if (toks.size() < 2)
            throw parse_error("expected component index", toks[0].line, toks[0].column);

        // "component <i>[*]:" — the index may carry a based marker and the colon.
        std::string label = toks[1].text;
        bool based = false;
        if (!label.empty() && label.back() == ':') label.pop_back();
        if (!label.empty() && label.back() == '*') {
            based = true;
            label.pop_back();
        }
        int idx = 0;
        try {
            idx = std::stoi(label);
        } catch (const std::exception&) {
            throw parse_error("malformed component index '" + toks[1].text + "'", toks[1].line,
                              toks[1].column);
        }
        if (idx != c)
            throw parse_error("component lines must appear in index order (expected " +
                                  std::to_string(c) + ", got " + std::to_string(idx) + ")",
                              toks[1].line, toks[1].column);
        d.components[c - 1].based = based;

        int position = 0;
        for (size_t t = 2; t < toks.size(); ++t) {
            const token_pos& tok = toks[t];
            const std::string& s = tok.text;
            if (s.size() < 3)
                throw parse_error("malformed token '" + s + "'", tok.line, tok.column);
            if (s[0] != 'O' && s[0] != 'U')
                throw parse_error("expected O or U in token '" + s + "'", tok.line, tok.column);
            char sign_ch = s.back();
            if (sign_ch != '+' && sign_ch != '-')
                throw parse_error("expected sign +/- in token '" + s + "'", tok.line, tok.column);
            std::string id = s.substr(1, s.size() - 2);
            for (char ch : id)
                if (!std::isalnum(static_cast<unsigned char>(ch)))
                    throw parse_error("crossing label must be alphanumeric in token '" + s + "'",
                                      tok.line, tok.column);
            int sign = sign_ch == '+' ? +1 : -1;
            half& h = s[0] == 'O' ? by_id[id].tail : by_id[id].head;
            if (h.seen)
                throw parse_error(std::string("crossing '") + id + "' has two " +
                                      (s[0] == 'O' ? "over" : "under") + " passages",
                                  tok.line, tok.column);
            h.seen = true;
            h.sign = sign;
            h.at = endpoint{c, position};
            h.line = tok.line;
            h.column = tok.column;
            ++position;
        }
        d.components[c - 1].size = position;
    }

    for (const auto& [id, p] : by_id) {
        if (!p.tail.seen)
            throw parse_error("crossing '" + id + "' has no over passage", p.head.line,
                              p.head.column);
        if (!p.head.seen)
            throw parse_error("crossing '" + id + "' has no under passage", p.tail.line,
                              p.tail.column);
        if (p.tail.sign != p.head.sign)
            throw parse_error("crossing '" + id + "' has mismatched signs", p.head.line,
                              p.head.column);
        d.arrows.push_back(arrow{id, p.tail.sign, p.tail.at, p.head.at});
    }

    auto violations = validate(d);
    if (!violations.empty())
        throw parse_error("invalid diagram: " + violations.front(), line_no, 1);
    return d;
}

std::string serialize_gauss_code(const gauss_diagram& d) {
    auto violations = validate(d);
    if (!violations.empty())
        throw std::invalid_argument("serialize_gauss_code: invalid diagram: " + violations.front());

    endpoint_table table(d);
    std::ostringstream out;
    out << "link " << d.component_count() << "\n";
    for (int c = 1; c <= d.component_count(); ++c) {
        out << "component " << c << (d.components[c - 1].based ? "*" : "") << ":";
        for (int p = 0; p < d.components[c - 1].size; ++p) {
            const endpoint_ref& ref = table.at(c, p);
            const arrow& a = d.arrows[ref.arrow_index];
            out << " " << (ref.is_head ? 'U' : 'O') << a.id << (a.sign > 0 ? '+' : '-');
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace trilink
