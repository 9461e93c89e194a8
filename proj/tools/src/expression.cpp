#include <svq_cli/expression.hpp>

#include <algorithm>
#include <cctype>
#include <limits>

namespace svq::cli
{

ParseError::ParseError(std::size_t position, const std::string &message)
    : std::runtime_error("column " + std::to_string(position + 1) + ": " + message), position_(position),
      detail_(message)
{
}

namespace
{

constexpr unsigned kMaxExponent = 32;

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    UEAElement element()
    {
        UEAElement out;
        skip();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
        }
        out.add_scaled(term(), Rational(negative ? -1 : 1));
        for (;;) {
            skip();
            if (peek() != '+' && peek() != '-') {
                break;
            }
            negative = get() == '-';
            out.add_scaled(term(), Rational(negative ? -1 : 1));
        }
        expect_end();
        return out;
    }

    Generator single_generator()
    {
        skip();
        const Generator g = atom();
        expect_end();
        return g;
    }

private:
    UEAElement term()
    {
        skip();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const Rational c = rational();
            skip();
            if (peek() == '*') {
                ++pos_;
                return c * product();
            }
            if (is_atom_start(peek())) {
                return c * product();
            }
            return uea_scalar(c);
        }
        return product();
    }

    UEAElement product()
    {
        std::vector<Generator> word;
        factor(word);
        for (;;) {
            skip();
            if (peek() != '*') {
                break;
            }
            ++pos_;
            factor(word);
        }
        return normalize(word);
    }

    void factor(std::vector<Generator> &word)
    {
        skip();
        const Generator g = atom();
        skip();
        unsigned count = 1;
        if (peek() == '^') {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            count = static_cast<unsigned>(unsigned_integer("exponent"));
            if (count > kMaxExponent) {
                throw ParseError(at, "exponent larger than " + std::to_string(kMaxExponent));
            }
        }
        word.insert(word.end(), count, g);
    }

    Generator atom()
    {
        const std::size_t start = pos_;
        const char letter = peek();
        if (!is_atom_start(letter)) {
            throw ParseError(start, at_end() ? "unexpected end of input, expected a generator"
                                             : std::string("expected L, M or Y, found '") + letter + "'");
        }
        ++pos_;
        skip();
        expect('(');
        skip();
        const std::size_t arg = pos_;
        const long num = signed_integer();
        skip();
        long den = 1;
        if (peek() == '/') {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            den = unsigned_integer("denominator");
            if (den == 0) {
                throw ParseError(at, "zero denominator");
            }
            skip();
        }
        expect(')');

        if (letter == 'Y') {
            if (den != 2 || num % 2 == 0) {
                throw ParseError(arg, "Y index must lie in Z + 1/2, got " + Rational(num, den).to_string());
            }
            return Generator::Y_twice(num);
        }
        if (den != 1) {
            throw ParseError(arg, std::string(1, letter) + " index must be an integer");
        }
        return letter == 'L' ? Generator::L(num) : Generator::M(num);
    }

    Rational rational()
    {
        const long num = unsigned_integer("number");
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            const long den = unsigned_integer("denominator");
            if (den == 0) {
                throw ParseError(at, "zero denominator");
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    long signed_integer()
    {
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
            skip();
        }
        const long v = unsigned_integer("integer");
        return negative ? -v : v;
    }

    long unsigned_integer(const char *what)
    {
        const std::size_t start = pos_;
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const int digit = get() - '0';
            if (v > (std::numeric_limits<int>::max() - digit) / 10) {
                throw ParseError(start, std::string(what) + " out of range");
            }
            v = v * 10 + digit;
        }
        if (pos_ == start) {
            throw ParseError(start, std::string("expected ") + what);
        }
        return v;
    }

    void expect(char c)
    {
        if (peek() != c) {
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void expect_end()
    {
        skip();
        if (!at_end()) {
            throw ParseError(pos_, std::string("unexpected '") + peek() + "'");
        }
    }

    static bool is_atom_start(char c) { return c == 'L' || c == 'M' || c == 'Y'; }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

UEAElement parse_element(std::string_view text)
{
    return Parser(text).element();
}

Generator parse_generator(std::string_view text)
{
    return Parser(text).single_generator();
}

std::string caret_diagnostic(std::string_view text, const ParseError &err)
{
    std::string out(text);
    out += '\n';
    out += std::string(std::min(err.position(), text.size()), ' ');
    out += '^';
    return out;
}

} // namespace svq::cli
