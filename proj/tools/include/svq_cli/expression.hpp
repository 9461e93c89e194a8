#ifndef SVQ_CLI_EXPRESSION_HPP
#define SVQ_CLI_EXPRESSION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <svq/enveloping.hpp>
#include <svq/lie.hpp>

namespace svq::cli
{

/*
 * element  := ['+'|'-'] term (('+'|'-') term)*
 * term     := rational [['*'] product] | product
 * product  := factor ('*' factor)*
 * factor   := atom ['^' uint]
 * atom     := 'L' '(' int ')' | 'M' '(' int ')' | 'Y' '(' int '/' '2' ')'
 * rational := uint ['/' uint]
 *
 * Whitespace is ignored. Generators multiply in written order.
 */

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t position, const std::string &message);

    // 0-based offset into the input.
    [[nodiscard]] std::size_t position() const { return position_; }
    [[nodiscard]] const std::string &detail() const { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

UEAElement parse_element(std::string_view text);

// A single bare generator such as "Y(-3/2)".
Generator parse_generator(std::string_view text);

// Two-line caret diagnostic for a parse error in text.
std::string caret_diagnostic(std::string_view text, const ParseError &err);

} // namespace svq::cli

#endif
