#include "lowdisc/enclosure.hpp"

namespace lowdisc {

std::string Enclosure::str(int digits) const {
    return "[" + lo_.to_decimal(digits, -1) + ", " + hi_.to_decimal(digits, +1) + "]";
}

Enclosure Enclosure::parse(std::string_view s) {
    auto bad = [&] { throw domain_error("Enclosure: cannot parse '" + std::string(s) + "'"); };
    size_t open = s.find('[');
    size_t comma = s.find(',');
    size_t close = s.rfind(']');
    if (open == std::string_view::npos || comma == std::string_view::npos ||
        close == std::string_view::npos || !(open < comma && comma < close))
        bad();
    auto trim = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        return v;
    };
    Rational lo = Rational::from_decimal(trim(s.substr(open + 1, comma - open - 1)));
    Rational hi = Rational::from_decimal(trim(s.substr(comma + 1, close - comma - 1)));
    return Enclosure(lo, hi);
}

} // namespace lowdisc
