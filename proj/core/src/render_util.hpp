#ifndef SVQ_SRC_RENDER_UTIL_HPP
#define SVQ_SRC_RENDER_UTIL_HPP

#include <string>

#include <svq/rational.hpp>

namespace svq::detail
{

// Appends "c*basis" to a signed sum: "x - 1/2*y + 3". An empty basis means the unit.
void append_sum_term(std::string &out, bool first, const Rational &c, const std::string &basis);

// "basis", "1/2·basis", "(-1)·basis"
std::string dotted_term(const Rational &c, const std::string &basis);

} // namespace svq::detail

#endif
