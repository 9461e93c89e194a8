#include <svq/enveloping.hpp>

#include "render_util.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace svq
{

bool is_pbw_ordered(const std::vector<Generator> &word)
{
    return std::is_sorted(word.begin(), word.end());
}

Monomial::Monomial(std::vector<Generator> word) : word_(std::move(word))
{
    if (!is_pbw_ordered(word_)) {
        throw std::invalid_argument("Monomial: word is not in PBW order");
    }
}

std::string Monomial::to_string() const
{
    if (word_.empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) {
            out += '*';
        }
        out += word_[i].to_string();
    }
    return out;
}

UEAElement uea_scalar(const Rational &c)
{
    return UEAElement(Monomial{}, c);
}

UEAElement uea(const Generator &g, const Rational &c)
{
    return UEAElement(Monomial(g), c);
}

UEAElement uea(const LieElement &x)
{
    UEAElement out;
    for (const auto &[g, c] : x) {
        out.add(Monomial(g), c);
    }
    return out;
}

namespace
{

struct WordHash {
    std::size_t operator()(const std::vector<Generator> &w) const noexcept
    {
        std::size_t h = w.size();
        for (const auto &g : w) {
            const auto v = (static_cast<std::size_t>(g.family()) << 32)
                           ^ static_cast<std::size_t>(static_cast<std::uint32_t>(g.twice_index()));
            h ^= std::hash<std::size_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

constexpr std::size_t kCacheLimit = 400000;

struct NormalFormCache {
    std::uint64_t generation = ~std::uint64_t{0};
    std::unordered_map<std::vector<Generator>, UEAElement, WordHash> map;
};

thread_local NormalFormCache cache;

std::size_t first_descent(const std::vector<Generator> &w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i + 1] < w[i]) {
            return i;
        }
    }
    return w.size();
}

// Only unsorted words are memoized.
const UEAElement &straighten(const std::vector<Generator> &w, std::size_t descent)
{
    if (auto it = cache.map.find(w); it != cache.map.end()) {
        return it->second;
    }
    auto swapped = w;
    std::swap(swapped[descent], swapped[descent + 1]);

    UEAElement result;
    {
        const std::size_t d = first_descent(swapped);
        if (d == swapped.size()) {
            result.add(Monomial(std::move(swapped)), Rational(1));
        } else {
            result = straighten(swapped, d);
        }
    }
    if (auto b = bracket(w[descent], w[descent + 1])) {
        std::vector<Generator> contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(descent));
        contracted.push_back(b->gen);
        contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(descent + 2), w.end());
        const std::size_t d = first_descent(contracted);
        if (d == contracted.size()) {
            result.add(Monomial(std::move(contracted)), b->coeff);
        } else {
            result.add_scaled(straighten(contracted, d), b->coeff);
        }
    }
    return cache.map.emplace(w, std::move(result)).first->second;
}

void prepare_cache()
{
    const auto gen = bracket_rule_generation();
    if (cache.generation != gen || cache.map.size() > kCacheLimit) {
        cache.map.clear();
        cache.generation = gen;
    }
}

// this += c * normalize(word)
void add_normalized(UEAElement &out, std::vector<Generator> &&word, const Rational &c)
{
    const std::size_t d = first_descent(word);
    if (d == word.size()) {
        out.add(Monomial(std::move(word)), c);
        return;
    }
    prepare_cache();
    out.add_scaled(straighten(word, d), c);
}

std::vector<Generator> concat(const std::vector<Generator> &a, const std::vector<Generator> &b)
{
    std::vector<Generator> w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

UEAElement monomial_product(const Monomial &a, const Monomial &b)
{
    UEAElement out;
    add_normalized(out, concat(a.word(), b.word()), Rational(1));
    return out;
}

} // namespace

void clear_normal_form_cache()
{
    cache.map.clear();
}

std::size_t normal_form_cache_size()
{
    return cache.map.size();
}

UEAElement normalize(const std::vector<Generator> &word)
{
    UEAElement out;
    add_normalized(out, std::vector<Generator>(word), Rational(1));
    return out;
}

UEAElement mul(const UEAElement &x, const UEAElement &y)
{
    UEAElement out;
    for (const auto &[mx, cx] : x) {
        for (const auto &[my, cy] : y) {
            add_normalized(out, concat(mx.word(), my.word()), cx * cy);
        }
    }
    return out;
}

UEAElement operator*(const UEAElement &x, const UEAElement &y)
{
    return mul(x, y);
}

UEAElement power(const UEAElement &x, unsigned n)
{
    UEAElement out = uea_scalar(1);
    for (unsigned i = 0; i < n; ++i) {
        out = out * x;
    }
    return out;
}

UEAElement commutator(const UEAElement &x, const UEAElement &y)
{
    return x * y - y * x;
}

std::string to_string(const UEAElement &x)
{
    if (x.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : x) {
        detail::append_sum_term(out, first, c, m.is_unit() ? std::string{} : m.to_string());
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor

Tensor::Tensor(int degree) : degree_(degree)
{
    if (degree < 1 || degree > kMaxTensorDegree) {
        throw std::invalid_argument("Tensor degree must be 1, 2 or 3");
    }
}

Tensor Tensor::identity(int degree, const Rational &c)
{
    Tensor out(degree);
    out.add(Key{}, c);
    return out;
}

Tensor Tensor::from(const UEAElement &x)
{
    Tensor out(1);
    for (const auto &[m, c] : x) {
        out.add(Key{m, Monomial{}, Monomial{}}, c);
    }
    return out;
}

Tensor Tensor::tensor(const UEAElement &a, const UEAElement &b)
{
    Tensor out(2);
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            out.add(Key{ma, mb, Monomial{}}, ca * cb);
        }
    }
    return out;
}

Tensor Tensor::tensor(const UEAElement &a, const UEAElement &b, const UEAElement &c)
{
    Tensor out(3);
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            for (const auto &[mc, cc] : c) {
                out.add(Key{ma, mb, mc}, ca * cb * cc);
            }
        }
    }
    return out;
}

UEAElement Tensor::to_uea() const
{
    if (degree_ != 1) {
        throw std::invalid_argument("Tensor::to_uea requires degree 1");
    }
    UEAElement out;
    for (const auto &[k, c] : terms_) {
        out.add(k[0], c);
    }
    return out;
}

void Tensor::require_same_degree(const Tensor &o) const
{
    if (o.degree_ != degree_) {
        throw std::invalid_argument("Tensor: degree mismatch (" + std::to_string(degree_) + " vs "
                                    + std::to_string(o.degree_) + ")");
    }
}

void Tensor::add_scaled(const Tensor &o, const Rational &c)
{
    require_same_degree(o);
    terms_.add_scaled(o.terms_, c);
}

Tensor &Tensor::operator+=(const Tensor &o)
{
    add_scaled(o, Rational(1));
    return *this;
}

Tensor &Tensor::operator-=(const Tensor &o)
{
    add_scaled(o, Rational(-1));
    return *this;
}

Tensor &Tensor::operator*=(const Rational &c)
{
    terms_ *= c;
    return *this;
}

Tensor operator*(const Tensor &a, const Tensor &b)
{
    a.require_same_degree(b);
    const int d = a.degree();
    Tensor out(d);
    std::array<UEAElement, kMaxTensorDegree> legs;
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            for (int i = 0; i < d; ++i) {
                legs[static_cast<std::size_t>(i)] = monomial_product(ka[static_cast<std::size_t>(i)],
                                                                     kb[static_cast<std::size_t>(i)]);
            }
            const Rational c = ca * cb;
            switch (d) {
                case 1:
                    for (const auto &[m0, c0] : legs[0]) {
                        out.add(Tensor::Key{m0, Monomial{}, Monomial{}}, c * c0);
                    }
                    break;
                case 2:
                    for (const auto &[m0, c0] : legs[0]) {
                        for (const auto &[m1, c1] : legs[1]) {
                            out.add(Tensor::Key{m0, m1, Monomial{}}, c * c0 * c1);
                        }
                    }
                    break;
                default:
                    for (const auto &[m0, c0] : legs[0]) {
                        for (const auto &[m1, c1] : legs[1]) {
                            const Rational c01 = c * c0 * c1;
                            for (const auto &[m2, c2] : legs[2]) {
                                out.add(Tensor::Key{m0, m1, m2}, c01 * c2);
                            }
                        }
                    }
                    break;
            }
        }
    }
    return out;
}

std::string Tensor::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        std::string basis;
        for (int i = 0; i < degree_; ++i) {
            if (i) {
                basis += "⊗";
            }
            basis += k[static_cast<std::size_t>(i)].to_string();
        }
        if (!first) {
            out += " + ";
        }
        out += detail::dotted_term(c, basis);
        first = false;
    }
    return out;
}

Tensor tensor_product(const Tensor &a, const Tensor &b)
{
    const int d = a.degree() + b.degree();
    if (d > kMaxTensorDegree) {
        throw std::invalid_argument("tensor_product: resulting degree exceeds 3");
    }
    Tensor out(d);
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            Tensor::Key k{};
            std::size_t pos = 0;
            for (int i = 0; i < a.degree(); ++i) {
                k[pos++] = ka[static_cast<std::size_t>(i)];
            }
            for (int i = 0; i < b.degree(); ++i) {
                k[pos++] = kb[static_cast<std::size_t>(i)];
            }
            out.add(k, ca * cb);
        }
    }
    return out;
}

Tensor counit_leg(const Tensor &t, int leg)
{
    const int d = t.degree();
    if (d < 2 || leg < 0 || leg >= d) {
        throw std::invalid_argument("counit_leg: illegal leg for degree " + std::to_string(d));
    }
    Tensor out(d - 1);
    for (const auto &[k, c] : t.terms()) {
        if (!k[static_cast<std::size_t>(leg)].is_unit()) {
            continue;
        }
        Tensor::Key nk{};
        std::size_t pos = 0;
        for (int i = 0; i < d; ++i) {
            if (i != leg) {
                nk[pos++] = k[static_cast<std::size_t>(i)];
            }
        }
        out.add(nk, c);
    }
    return out;
}

UEAElement multiply_legs(const Tensor &t)
{
    UEAElement out;
    for (const auto &[k, c] : t.terms()) {
        std::vector<Generator> word;
        for (int i = 0; i < t.degree(); ++i) {
            const auto &w = k[static_cast<std::size_t>(i)].word();
            word.insert(word.end(), w.begin(), w.end());
        }
        add_normalized(out, std::move(word), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hopf structure

Tensor coproduct0(const Monomial &m)
{
    // Group the sorted word into runs g^j; Delta0(g^j) = sum_i C(j,i) g^i (x) g^{j-i}.
    const auto &w = m.word();
    std::vector<std::pair<Generator, unsigned>> runs;
    for (const auto &g : w) {
        if (!runs.empty() && runs.back().first == g) {
            ++runs.back().second;
        } else {
            runs.emplace_back(g, 1U);
        }
    }
    Tensor out(2);
    std::vector<Generator> left;
    std::vector<Generator> right;
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t r, Rational c) {
        if (r == runs.size()) {
            out.add(Tensor::Key{Monomial(left), Monomial(right), Monomial{}}, c);
            return;
        }
        const auto [g, j] = runs[r];
        for (unsigned i = 0; i <= j; ++i) {
            left.insert(left.end(), i, g);
            right.insert(right.end(), j - i, g);
            rec(r + 1, c * binomial(Rational(static_cast<long>(j)), i));
            left.erase(left.end() - i, left.end());
            right.erase(right.end() - (j - i), right.end());
        }
    };
    rec(0, Rational(1));
    return out;
}

Tensor coproduct0(const UEAElement &x)
{
    Tensor out(2);
    for (const auto &[m, c] : x) {
        out.add_scaled(coproduct0(m), c);
    }
    return out;
}

UEAElement antipode0(const Monomial &m)
{
    std::vector<Generator> rev(m.word().rbegin(), m.word().rend());
    UEAElement out;
    add_normalized(out, std::move(rev), (m.length() % 2 == 0) ? Rational(1) : Rational(-1));
    return out;
}

UEAElement antipode0(const UEAElement &x)
{
    UEAElement out;
    for (const auto &[m, c] : x) {
        out.add_scaled(antipode0(m), c);
    }
    return out;
}

Rational counit(const UEAElement &x)
{
    return x.coefficient(Monomial{});
}

// ---------------------------------------------------------------------------
// Factorial polynomials

UEAElement rising_factorial(const UEAElement &x, unsigned n, const Rational &a)
{
    UEAElement out = uea_scalar(1);
    for (unsigned j = 0; j < n; ++j) {
        out = out * (x + uea_scalar(a + Rational(static_cast<long>(j))));
    }
    return out;
}

UEAElement falling_factorial(const UEAElement &x, unsigned n, const Rational &a)
{
    UEAElement out = uea_scalar(1);
    for (unsigned j = 0; j < n; ++j) {
        out = out * (x + uea_scalar(a - Rational(static_cast<long>(j))));
    }
    return out;
}

bool FactorialIdentityDefects::all_zero() const
{
    return alternating_rising.is_zero() && alternating_falling.is_zero()
           && std::all_of(product_rules.begin(), product_rules.end(), [](const auto &d) { return d.is_zero(); });
}

FactorialIdentityDefects factorial_identity_defects(const UEAElement &x, const Rational &a, const Rational &b,
                                                    unsigned r)
{
    FactorialIdentityDefects out;
    const UEAElement rising_r = rising_factorial(x, r, a);
    const UEAElement falling_r = falling_factorial(x, r, a);
    for (unsigned s = 0; s <= r; ++s) {
        const unsigned t = r - s;
        const Rational sr(static_cast<long>(s));
        out.product_rules.push_back(rising_r - rising_factorial(x, s, a) * rising_factorial(x, t, a + sr));
        out.product_rules.push_back(falling_r - falling_factorial(x, s, a) * falling_factorial(x, t, a - sr));
        out.product_rules.push_back(falling_factorial(x, s, a) - rising_factorial(x, s, a - sr + Rational(1)));
    }

    UEAElement rising_sum;
    UEAElement falling_sum;
    for (unsigned s = 0; s <= r; ++s) {
        const unsigned t = r - s;
        const Rational sr(static_cast<long>(s));
        const Rational w = Rational(t % 2 == 0 ? 1 : -1) / (factorial(s) * factorial(t));
        rising_sum.add_scaled(falling_factorial(x, s, a) * rising_factorial(x, t, b), w);
        falling_sum.add_scaled(falling_factorial(x, s, a) * falling_factorial(x, t, b - sr), w);
    }
    out.alternating_rising = rising_sum - uea_scalar(binomial(a - b, r));
    out.alternating_falling
        = falling_sum - uea_scalar(binomial(a - b + Rational(static_cast<long>(r)) - Rational(1), r));
    return out;
}

UEAElement ad(const UEAElement &y, const UEAElement &x)
{
    return y * x - x * y;
}

UEAElement ad_power_expansion_defect(const UEAElement &x, const UEAElement &y, unsigned m)
{
    UEAElement lhs = x * power(y, m);
    UEAElement rhs;
    UEAElement ad_k = x;
    for (unsigned k = 0; k <= m; ++k) {
        const Rational c = Rational(k % 2 == 0 ? 1 : -1) * binomial(Rational(static_cast<long>(m)), k);
        rhs.add_scaled(power(y, m - k) * ad_k, c);
        ad_k = ad(y, ad_k);
    }
    return lhs - rhs;
}

} // namespace svq
