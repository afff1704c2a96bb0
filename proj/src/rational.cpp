#include "zb/rational.hpp"

#include <cctype>

namespace zb {

std::optional<Rat> parse_rational(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string buf(s);
    for (char c : buf) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            return std::nullopt;
    }
    try {
        Rat q(buf);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace zb
