#ifndef SVQ_COMBINATION_HPP
#define SVQ_COMBINATION_HPP

#include <cstddef>
#include <map>
#include <utility>

#include <svq/rational.hpp>

namespace svq
{

// Finite rational-linear combination of basis keys. Zero coefficients are never
// stored, so structural equality is mathematical equality.
template <typename Key>
class LinearCombination
{
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational>;

    LinearCombination() = default;
    explicit LinearCombination(Key k, Rational c = Rational(1))
    {
        add(std::move(k), c);
    }

    void add(const Key &k, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    void add(Key &&k, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    // this += c * other
    void add_scaled(const LinearCombination &other, const Rational &c)
    {
        if (c.is_zero()) {
            return;
        }
        for (const auto &[k, v] : other.terms_) {
            add(k, v * c);
        }
    }

    [[nodiscard]] const map_type &terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Rational coefficient(const Key &k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinearCombination &operator+=(const LinearCombination &o)
    {
        add_scaled(o, Rational(1));
        return *this;
    }
    LinearCombination &operator-=(const LinearCombination &o)
    {
        add_scaled(o, Rational(-1));
        return *this;
    }
    LinearCombination &operator*=(const Rational &c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &kv : terms_) {
            kv.second *= c;
        }
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination &b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination &b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
    friend LinearCombination operator*(LinearCombination a, const Rational &c) { return a *= c; }
    friend LinearCombination operator*(const Rational &c, LinearCombination a) { return a *= c; }

    friend bool operator==(const LinearCombination &, const LinearCombination &) = default;

private:
    map_type terms_;
};

} // namespace svq

#endif
