#include "arithgraph/integer.hpp"

#include <stdexcept>

namespace arithgraph {

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (text.size() == start) throw std::invalid_argument("empty integer literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("malformed integer literal: " + text);
        }
    }
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

std::optional<std::int64_t> to_int64(const Integer& v) {
    if (!fits_int64(v)) return std::nullopt;
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return std::stoll(v.get_str());
}

Integer gcd_of(const std::vector<Integer>& values) {
    Integer g = 0;
    for (const auto& v : values) g = gcd(g, v);
    return g;
}

std::vector<Integer> to_integers(const std::vector<std::int64_t>& values) {
    std::vector<Integer> out;
    out.reserve(values.size());
    for (auto v : values) out.push_back(make_integer(v));
    return out;
}

}  // namespace arithgraph
