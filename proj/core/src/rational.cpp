#include <svq/rational.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace svq
{

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q))
{
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string &t) {
        std::size_t i = 0;
        if (i < t.size() && (t[i] == '-' || t[i] == '+')) {
            ++i;
        }
        if (i == t.size()) {
            return false;
        }
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
                return false;
            }
        }
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("Rational: malformed '" + s + "'");
    }
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw std::domain_error("Rational: zero denominator in '" + s + "'");
    }
    mpq_class q(n, d);
    return Rational(std::move(q));
}

long Rational::to_long() const
{
    if (!is_integer() || !q_.get_num().fits_slong_p()) {
        throw std::domain_error("Rational: " + to_string() + " is not a machine integer");
    }
    return q_.get_num().get_si();
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(const Rational &alpha, unsigned k)
{
    Rational result(1);
    for (unsigned j = 0; j < k; ++j) {
        result *= alpha - Rational(static_cast<long>(j));
    }
    return result / factorial(k);
}

} // namespace svq
