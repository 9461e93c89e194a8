#ifndef SVQ_ENVELOPING_HPP
#define SVQ_ENVELOPING_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <svq/combination.hpp>
#include <svq/lie.hpp>
#include <svq/rational.hpp>

namespace svq
{

// A PBW basis word: generators in non-decreasing order (M < Y < L, then by index).
// The empty word is the unit.
class Monomial
{
public:
    Monomial() = default;
    // Throws std::invalid_argument if the word is not sorted.
    explicit Monomial(std::vector<Generator> word);
    explicit Monomial(const Generator &g) : word_{g} {}

    [[nodiscard]] const std::vector<Generator> &word() const { return word_; }
    [[nodiscard]] bool is_unit() const { return word_.empty(); }
    [[nodiscard]] std::size_t length() const { return word_.size(); }

    // "1", "L(0)*L(1)", "Y(1/2)*Y(1/2)"
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Monomial &, const Monomial &) = default;
    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    std::vector<Generator> word_;
};

bool is_pbw_ordered(const std::vector<Generator> &word);

using UEAElement = LinearCombination<Monomial>;

UEAElement uea_scalar(const Rational &c);
UEAElement uea(const Generator &g, const Rational &c = Rational(1));
UEAElement uea(const LieElement &x);

// PBW straightening of an arbitrary word. Leftmost out-of-order adjacent pair
// yx is rewritten first as xy + [y, x]. Results are memoized per thread.
UEAElement normalize(const std::vector<Generator> &word);

// Associative product of U(L), concatenate then normalize.
UEAElement mul(const UEAElement &x, const UEAElement &y);
UEAElement operator*(const UEAElement &x, const UEAElement &y);

UEAElement power(const UEAElement &x, unsigned n);

// Commutator xy - yx.
UEAElement commutator(const UEAElement &x, const UEAElement &y);

// Canonical text: terms in monomial order, "L(0)*L(1) - 1/2*Y(1/2) + 3".
std::string to_string(const UEAElement &x);

// Drops the per-thread straightening cache.
void clear_normal_form_cache();
std::size_t normal_form_cache_size();

inline constexpr int kMaxTensorDegree = 3;

// Element of U(L)^{(x) d} for d in {1, 2, 3}, on the basis of PBW monomial tuples.
class Tensor
{
public:
    using Key = std::array<Monomial, kMaxTensorDegree>;

    explicit Tensor(int degree);

    static Tensor identity(int degree, const Rational &c = Rational(1));
    static Tensor from(const UEAElement &x);
    static Tensor tensor(const UEAElement &a, const UEAElement &b);
    static Tensor tensor(const UEAElement &a, const UEAElement &b, const UEAElement &c);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const LinearCombination<Key> &terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.is_zero(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    // Degree-1 tensor back to U(L).
    [[nodiscard]] UEAElement to_uea() const;

    void add(const Key &k, const Rational &c) { terms_.add(k, c); }
    void add_scaled(const Tensor &o, const Rational &c);

    Tensor &operator+=(const Tensor &o);
    Tensor &operator-=(const Tensor &o);
    Tensor &operator*=(const Rational &c);

    friend Tensor operator+(Tensor a, const Tensor &b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor &b) { return a -= b; }
    friend Tensor operator-(Tensor a) { return a *= Rational(-1); }
    friend Tensor operator*(const Rational &c, Tensor a) { return a *= c; }
    friend Tensor operator*(Tensor a, const Rational &c) { return a *= c; }

    // Legwise product (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2.
    friend Tensor operator*(const Tensor &a, const Tensor &b);

    friend bool operator==(const Tensor &, const Tensor &) = default;

    // "1⊗M(1) + (-1)·M(1)⊗M(1)"
    [[nodiscard]] std::string to_string() const;

private:
    void require_same_degree(const Tensor &o) const;

    int degree_;
    LinearCombination<Key> terms_;
};

// Outer tensor product; degrees add (at most 3).
Tensor tensor_product(const Tensor &a, const Tensor &b);

// Replace leg `leg` of every basis tuple by f(monomial), a tensor of degree
// image_degree; the result has degree d - 1 + image_degree.
template <typename F>
Tensor map_leg(const Tensor &t, int leg, int image_degree, F &&f);

// (.. (x) eps (x) ..) on leg `leg`; lowers the degree by one. Requires degree >= 2.
Tensor counit_leg(const Tensor &t, int leg);

// m: multiplies the legs in order, U^{(x) d} -> U.
UEAElement multiply_legs(const Tensor &t);

// Undeformed Hopf structure of U(L).
Tensor coproduct0(const UEAElement &x);
Tensor coproduct0(const Monomial &m);
UEAElement antipode0(const UEAElement &x);
UEAElement antipode0(const Monomial &m);
Rational counit(const UEAElement &x);

// (x + a)(x + a + 1) ... (x + a + n - 1)
UEAElement rising_factorial(const UEAElement &x, unsigned n, const Rational &a = Rational(0));
// (x + a)(x + a - 1) ... (x + a - n + 1)
UEAElement falling_factorial(const UEAElement &x, unsigned n, const Rational &a = Rational(0));

struct FactorialIdentityDefects {
    // x^(s+t)_a - x^(s)_a x^(t)_{a+s}, x^[s+t]_a - x^[s]_a x^[t]_{a-s}, x^[s]_a - x^(s)_{a-s+1}
    // for every split s + t = r.
    std::vector<UEAElement> product_rules;
    // sum_{s+t=r} (-1)^t/(s! t!) x^[s]_a x^(t)_b - C(a-b, r)
    UEAElement alternating_rising;
    // sum_{s+t=r} (-1)^t/(s! t!) x^[s]_a x^[t]_{b-s} - C(a-b+r-1, r)
    UEAElement alternating_falling;

    [[nodiscard]] bool all_zero() const;
};

FactorialIdentityDefects factorial_identity_defects(const UEAElement &x, const Rational &a, const Rational &b,
                                                    unsigned r);

// (ad y)(x) = yx - xy
UEAElement ad(const UEAElement &y, const UEAElement &x);

// x y^m - sum_k (-1)^k C(m, k) y^{m-k} (ad y)^k (x)
UEAElement ad_power_expansion_defect(const UEAElement &x, const UEAElement &y, unsigned m);

// ---------------------------------------------------------------------------

template <typename F>
Tensor map_leg(const Tensor &t, int leg, int image_degree, F &&f)
{
    const int d = t.degree();
    Tensor out(d - 1 + image_degree);
    for (const auto &[key, c] : t.terms()) {
        const Tensor image = f(key[static_cast<std::size_t>(leg)]);
        for (const auto &[ikey, ic] : image.terms()) {
            Tensor::Key k{};
            std::size_t pos = 0;
            for (int i = 0; i < leg; ++i) {
                k[pos++] = key[static_cast<std::size_t>(i)];
            }
            for (int i = 0; i < image_degree; ++i) {
                k[pos++] = ikey[static_cast<std::size_t>(i)];
            }
            for (int i = leg + 1; i < d; ++i) {
                k[pos++] = key[static_cast<std::size_t>(i)];
            }
            out.add(k, c * ic);
        }
    }
    return out;
}

} // namespace svq

#endif
