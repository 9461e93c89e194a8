#include "render_util.hpp"

namespace svq::detail
{

void append_sum_term(std::string &out, bool first, const Rational &c, const std::string &basis)
{
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
        if (neg) {
            out += '-';
        }
    } else {
        out += neg ? " - " : " + ";
    }
    if (basis.empty()) {
        out += mag.to_string();
    } else if (mag.is_one()) {
        out += basis;
    } else {
        out += mag.to_string();
        out += '*';
        out += basis;
    }
}

std::string dotted_term(const Rational &c, const std::string &basis)
{
    if (c.is_one()) {
        return basis;
    }
    if (c.sign() < 0) {
        return "(" + c.to_string() + ")·" + basis;
    }
    return c.to_string() + "·" + basis;
}

} // namespace svq::detail
