#ifndef SVQ_LIE_HPP
#define SVQ_LIE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <svq/combination.hpp>
#include <svq/rational.hpp>

namespace svq
{

// Generator families of the Schroedinger-Virasoro algebra. The enumerator
// order is the PBW order used throughout: M < Y < L.
enum class Family : std::uint8_t { M = 0, Y = 1, L = 2 };

char family_letter(Family f);

// A basis vector L_n, M_n (n integer) or Y_p (p in Z + 1/2).
// The index is stored doubled so that every generator is an exact integer pair.
class Generator
{
public:
    static Generator L(long n);
    static Generator M(long n);
    // Throws std::invalid_argument unless p - 1/2 is an integer.
    static Generator Y(const Rational &p);
    // Y with index twice_p / 2; twice_p must be odd.
    static Generator Y_twice(long twice_p);
    // Validating constructor for any family.
    static Generator make(Family f, const Rational &index);

    [[nodiscard]] Family family() const { return family_; }
    [[nodiscard]] Rational index() const { return Rational(twice_, 2); }
    [[nodiscard]] long twice_index() const { return twice_; }

    // "L(3)", "M(-1)", "Y(5/2)"
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Generator &, const Generator &) = default;

private:
    Generator(Family f, long twice) : family_(f), twice_(static_cast<std::int32_t>(twice)) {}

    Family family_;
    std::int32_t twice_;
};

using LieElement = LinearCombination<Generator>;

LieElement lie(const Generator &g, const Rational &c = Rational(1));

// Single-term value of a generator bracket [x, y] = coeff * gen.
struct BracketTerm {
    Rational coeff;
    Generator gen;
};

using BracketRule = std::optional<BracketTerm> (*)(const Generator &, const Generator &);

// The four non-vanishing bracket families, extended by antisymmetry.
std::optional<BracketTerm> standard_bracket(const Generator &x, const Generator &y);

// Test hook: standard bracket except [L_m, M_n] = (n + 1) M_{m+n}.
std::optional<BracketTerm> corrupted_bracket(const Generator &x, const Generator &y);

// Bracket through the currently installed rule (standard unless overridden).
std::optional<BracketTerm> bracket(const Generator &x, const Generator &y);
LieElement bracket(const LieElement &x, const LieElement &y);

// Incremented whenever the active bracket rule changes; caches key on it.
std::uint64_t bracket_rule_generation();

// Installs an alternative bracket rule for the lifetime of the object.
// Not thread-safe with respect to concurrent computations.
class ScopedBracketRule
{
public:
    explicit ScopedBracketRule(BracketRule rule);
    ~ScopedBracketRule();
    ScopedBracketRule(const ScopedBracketRule &) = delete;
    ScopedBracketRule &operator=(const ScopedBracketRule &) = delete;

private:
    BracketRule previous_;
};

// Element of L (x) L or L (x) L (x) L.
class TensorLieElement
{
public:
    using Key = std::vector<Generator>;

    explicit TensorLieElement(int degree);

    static TensorLieElement tensor(const LieElement &a, const LieElement &b);
    static TensorLieElement tensor(const LieElement &a, const LieElement &b, const LieElement &c);

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const LinearCombination<Key> &terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.is_zero(); }

    void add(const Key &k, const Rational &c);

    TensorLieElement &operator+=(const TensorLieElement &o);
    TensorLieElement &operator-=(const TensorLieElement &o);
    TensorLieElement &operator*=(const Rational &c);

    friend TensorLieElement operator+(TensorLieElement a, const TensorLieElement &b) { return a += b; }
    friend TensorLieElement operator-(TensorLieElement a, const TensorLieElement &b) { return a -= b; }
    friend TensorLieElement operator-(TensorLieElement a) { return a *= Rational(-1); }
    friend TensorLieElement operator*(const Rational &c, TensorLieElement a) { return a *= c; }

    friend bool operator==(const TensorLieElement &, const TensorLieElement &) = default;

    // Factor swap a (x) b -> b (x) a. Degree 2 only.
    [[nodiscard]] TensorLieElement swapped() const;

    [[nodiscard]] std::string to_string() const;

private:
    void require_same_degree(const TensorLieElement &o) const;

    int degree_;
    LinearCombination<Key> terms_;
};

// Diagonal adjoint action x . (a1 (x) ... (x) ad) = sum_i a1 (x) .. [x, ai] .. (x) ad.
TensorLieElement adjoint_action(const LieElement &x, const TensorLieElement &t);

std::string to_string(const LieElement &x);

// Twist parameter choice: case 1 (h = L0/n0, e = M_{n0}), case 2 (h = 2 L0/n0,
// e = Y_{n0/2}, n0 odd), case 3 (h = L0/n0, e = L_{n0}).
class TwistCase
{
public:
    // Throws std::invalid_argument for n0 = 0, an unknown case id, or case 2 with even n0.
    TwistCase(int id, long n0);

    [[nodiscard]] int id() const { return id_; }
    [[nodiscard]] long n0() const { return n0_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const TwistCase &, const TwistCase &) = default;

private:
    int id_;
    long n0_;
};

struct TwistGenerators {
    LieElement h;
    LieElement e;
};

// The distinguished pair (h, e) of a case; always satisfies [h, e] = e.
TwistGenerators case_generators(const TwistCase &c);

// r = h (x) e - e (x) h. Throws std::invalid_argument unless [h, e] = e.
TensorLieElement r_matrix(const LieElement &h, const LieElement &e);

// [r12, r13] + [r12, r23] + [r13, r23]; zero iff r solves the classical Yang-Baxter equation.
TensorLieElement cybe_defect(const TensorLieElement &r);

// [x,a] (x) b - b (x) [x,a] + a (x) [x,b] - [x,b] (x) a
TensorLieElement delta_r(const LieElement &x, const LieElement &a, const LieElement &b);

// delta_r([x,y]) - x . delta_r(y) + y . delta_r(x)
TensorLieElement cocycle_defect(const LieElement &x, const LieElement &y, const LieElement &a, const LieElement &b);

// All generators with |n| <= range and half-integers |p| < range (|2p| <= 2 range - 1), in PBW order.
std::vector<Generator> generator_grid(long range);

} // namespace svq

#endif
