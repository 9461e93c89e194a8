#ifndef SVQ_SERIES_HPP
#define SVQ_SERIES_HPP

#include <functional>
#include <string>
#include <vector>

#include <svq/enveloping.hpp>
#include <svq/rational.hpp>

namespace svq
{

// Truncated formal power series sum_{k=0}^{N} c_k t^k whose coefficients lie
// in U(L)^{(x) d}, d in {1, 2, 3}. Terms beyond t^N are discarded.
class Series
{
public:
    Series(int degree, int order);

    static Series one(int degree, int order);
    static Series embed(const Tensor &x, int order);
    static Series embed(const UEAElement &x, int order);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const Tensor &coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] const std::vector<Tensor> &coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const;

    // c_k += c * x; ignored when k exceeds the order.
    void add_term(int k, const Tensor &x, const Rational &c = Rational(1));

    // Drops every t^k with k > order. order must not exceed the current order.
    [[nodiscard]] Series truncated(int order) const;
    // Multiplies by t^k.
    [[nodiscard]] Series shifted(int k) const;
    // Replaces every coefficient c_k with f(c_k); f must preserve the degree.
    [[nodiscard]] Series map_coeffs(const std::function<Tensor(const Tensor &)> &f, int new_degree) const;

    Series &operator+=(const Series &o);
    Series &operator-=(const Series &o);
    Series &operator*=(const Rational &c);

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator-(Series a) { return a *= Rational(-1); }
    friend Series operator*(const Rational &c, Series a) { return a *= c; }

    // Cauchy product in the tensor algebra, operand order preserved; result
    // order is the smaller of the two.
    friend Series operator*(const Series &a, const Series &b);

    friend bool operator==(const Series &a, const Series &b) = default;

    // "1⊗M(1) + M(1)⊗1 + (-1)·M(1)⊗M(1)·t"
    [[nodiscard]] std::string to_string() const;

private:
    void require_same_degree(const Series &o) const;

    int degree_;
    std::vector<Tensor> coeffs_;
};

// s^{-1} by the recursion x_0 = 1, x_k = -sum_{j=1}^k s_j x_{k-j}.
// Throws std::invalid_argument unless the constant term is the identity.
Series invert(const Series &s);

// (1 - e t)^alpha = sum_k C(alpha, k) (-1)^k e^k t^k.
Series binomial_series(const UEAElement &e, const Rational &alpha, int order);

enum class LegMap { Identity, Coproduct0, Antipode0, Counit };

// Applies Delta0 / S0 / eps / Id to one leg of every coefficient. Delta0 raises
// the degree by one, eps lowers it.
Series tensor_apply(LegMap f, int leg, const Series &s);

// Applies a series-valued linear map, given on basis monomials, to one leg.
// f(m, k) must return a series of degree image_degree and order >= k.
Series apply_leg(const Series &s, int leg, int image_degree,
                 const std::function<Series(const Monomial &, int)> &f);

// Outer tensor product of two series; degrees add.
Series tensor_product(const Series &a, const Series &b);

// m: multiplies the legs of every coefficient, giving a degree-1 series.
Series multiply_legs(const Series &s);

} // namespace svq

#endif
