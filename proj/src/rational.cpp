#include "trilink/rational.hpp"

#include <cctype>

namespace trilink {

rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational");
    size_t slash = text.find('/');
    auto parse_ll = [](const std::string& s) {
        if (s.empty() || (!std::isdigit(static_cast<unsigned char>(s[0])) && s[0] != '-'))
            throw std::invalid_argument("malformed rational component: '" + s + "'");
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            throw std::invalid_argument("malformed rational component: '" + s + "'");
        return v;
    };
    if (slash == std::string::npos)
        return rational(parse_ll(text));
    return rational(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

}  // namespace trilink
