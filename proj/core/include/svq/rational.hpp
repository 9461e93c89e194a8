#ifndef SVQ_RATIONAL_HPP
#define SVQ_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace svq
{

// Exact rational number, always in lowest terms with a positive denominator.
// Thin value wrapper over GMP's mpq_class.
class Rational
{
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    // Accepts "p" or "p/q" with optional leading sign.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class &raw() const { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_one() const { return q_ == 1; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    // Throws std::domain_error when the value is not an integer fitting in a long.
    [[nodiscard]] long to_long() const;

    // "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    Rational &operator+=(const Rational &o)
    {
        q_ += o.q_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        q_ -= o.q_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        q_ *= o.q_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    mpq_class q_{0};
};

// n!
Rational factorial(unsigned n);

// Generalized binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k!.
Rational binomial(const Rational &alpha, unsigned k);

} // namespace svq

#endif
