#include "gameforms/rational.hpp"

#include <cctype>

namespace gf {

namespace {

bool parse_int(std::string_view s, Int& out) {
    if (s.empty()) return false;
    size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) return false;
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
}

}  // namespace

std::optional<Rat> parse_rat(std::string_view s) {
    auto slash = s.find('/');
    Int p, q = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(s, p)) return std::nullopt;
    } else {
        if (!parse_int(s.substr(0, slash), p)) return std::nullopt;
        if (!parse_int(s.substr(slash + 1), q)) return std::nullopt;
        if (q == 0) return std::nullopt;
    }
    return Rat(p, q);
}

}  // namespace gf
