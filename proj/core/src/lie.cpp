#include <svq/lie.hpp>

#include "render_util.hpp"

#include <atomic>
#include <stdexcept>

namespace svq
{

char family_letter(Family f)
{
    switch (f) {
        case Family::M:
            return 'M';
        case Family::Y:
            return 'Y';
        case Family::L:
            return 'L';
    }
    return '?';
}

Generator Generator::L(long n)
{
    return Generator(Family::L, 2 * n);
}

Generator Generator::M(long n)
{
    return Generator(Family::M, 2 * n);
}

Generator Generator::Y_twice(long twice_p)
{
    if (twice_p % 2 == 0) {
        throw std::invalid_argument("Y index must lie in Z + 1/2, got " + Rational(twice_p, 2).to_string());
    }
    return Generator(Family::Y, twice_p);
}

Generator Generator::Y(const Rational &p)
{
    const Rational twice = p * Rational(2);
    if (!twice.is_integer()) {
        throw std::invalid_argument("Y index must lie in Z + 1/2, got " + p.to_string());
    }
    return Y_twice(twice.to_long());
}

Generator Generator::make(Family f, const Rational &index)
{
    if (f == Family::Y) {
        return Y(index);
    }
    if (!index.is_integer()) {
        throw std::invalid_argument(std::string(1, family_letter(f)) + " index must be an integer, got "
                                    + index.to_string());
    }
    return f == Family::L ? L(index.to_long()) : M(index.to_long());
}

std::string Generator::to_string() const
{
    return std::string(1, family_letter(family_)) + "(" + index().to_string() + ")";
}

LieElement lie(const Generator &g, const Rational &c)
{
    return LieElement(g, c);
}

namespace
{

// Brackets for the ordered family pairs (L,L), (L,M), (L,Y), (Y,Y), with
// the coefficient of [L_m, M_n] supplied by the caller.
template <typename LMCoeff>
std::optional<BracketTerm> bracket_table(const Generator &x, const Generator &y, LMCoeff lm_coeff)
{
    const long tx = x.twice_index();
    const long ty = y.twice_index();
    auto term = [](Rational c, Generator g) -> std::optional<BracketTerm> {
        if (c.is_zero()) {
            return std::nullopt;
        }
        return BracketTerm{std::move(c), g};
    };
    auto negate = [](std::optional<BracketTerm> t) {
        if (t) {
            t->coeff = -t->coeff;
        }
        return t;
    };

    switch (x.family()) {
        case Family::L:
            switch (y.family()) {
                case Family::L:
                    return term(Rational(ty - tx, 2), Generator::L((tx + ty) / 2));
                case Family::M:
                    return term(lm_coeff(ty), Generator::M((tx + ty) / 2));
                case Family::Y:
                    return term(Rational(2 * ty - tx, 4), Generator::Y_twice(tx + ty));
            }
            break;
        case Family::M:
            if (y.family() == Family::L) {
                return negate(term(lm_coeff(tx), Generator::M((tx + ty) / 2)));
            }
            return std::nullopt;
        case Family::Y:
            switch (y.family()) {
                case Family::L:
                    return negate(term(Rational(2 * tx - ty, 4), Generator::Y_twice(tx + ty)));
                case Family::Y:
                    return term(Rational(ty - tx, 2), Generator::M((tx + ty) / 2));
                case Family::M:
                    return std::nullopt;
            }
            break;
    }
    return std::nullopt;
}

std::atomic<BracketRule> active_rule{&standard_bracket};
std::atomic<std::uint64_t> rule_generation{0};

} // namespace

std::optional<BracketTerm> standard_bracket(const Generator &x, const Generator &y)
{
    // [L_m, M_n] = n M_{m+n}; argument is the doubled M index.
    return bracket_table(x, y, [](long twice_n) { return Rational(twice_n, 2); });
}

std::optional<BracketTerm> corrupted_bracket(const Generator &x, const Generator &y)
{
    return bracket_table(x, y, [](long twice_n) { return Rational(twice_n + 2, 2); });
}

std::optional<BracketTerm> bracket(const Generator &x, const Generator &y)
{
    return active_rule.load(std::memory_order_relaxed)(x, y);
}

std::uint64_t bracket_rule_generation()
{
    return rule_generation.load(std::memory_order_acquire);
}

ScopedBracketRule::ScopedBracketRule(BracketRule rule) : previous_(active_rule.exchange(rule))
{
    rule_generation.fetch_add(1, std::memory_order_acq_rel);
}

ScopedBracketRule::~ScopedBracketRule()
{
    active_rule.store(previous_);
    rule_generation.fetch_add(1, std::memory_order_acq_rel);
}

LieElement bracket(const LieElement &x, const LieElement &y)
{
    LieElement out;
    for (const auto &[gx, cx] : x) {
        for (const auto &[gy, cy] : y) {
            if (auto t = bracket(gx, gy)) {
                out.add(t->gen, cx * cy * t->coeff);
            }
        }
    }
    return out;
}

std::string to_string(const LieElement &x)
{
    if (x.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[g, c] : x) {
        detail::append_sum_term(out, first, c, g.to_string());
        first = false;
    }
    return out;
}

TensorLieElement::TensorLieElement(int degree) : degree_(degree)
{
    if (degree != 2 && degree != 3) {
        throw std::invalid_argument("TensorLieElement degree must be 2 or 3");
    }
}

TensorLieElement TensorLieElement::tensor(const LieElement &a, const LieElement &b)
{
    TensorLieElement out(2);
    for (const auto &[ga, ca] : a) {
        for (const auto &[gb, cb] : b) {
            out.terms_.add(Key{ga, gb}, ca * cb);
        }
    }
    return out;
}

TensorLieElement TensorLieElement::tensor(const LieElement &a, const LieElement &b, const LieElement &c)
{
    TensorLieElement out(3);
    for (const auto &[ga, ca] : a) {
        for (const auto &[gb, cb] : b) {
            for (const auto &[gc, cc] : c) {
                out.terms_.add(Key{ga, gb, gc}, ca * cb * cc);
            }
        }
    }
    return out;
}

void TensorLieElement::add(const Key &k, const Rational &c)
{
    if (static_cast<int>(k.size()) != degree_) {
        throw std::invalid_argument("TensorLieElement: key degree mismatch");
    }
    terms_.add(k, c);
}

void TensorLieElement::require_same_degree(const TensorLieElement &o) const
{
    if (o.degree_ != degree_) {
        throw std::invalid_argument("TensorLieElement: degree mismatch");
    }
}

TensorLieElement &TensorLieElement::operator+=(const TensorLieElement &o)
{
    require_same_degree(o);
    terms_ += o.terms_;
    return *this;
}

TensorLieElement &TensorLieElement::operator-=(const TensorLieElement &o)
{
    require_same_degree(o);
    terms_ -= o.terms_;
    return *this;
}

TensorLieElement &TensorLieElement::operator*=(const Rational &c)
{
    terms_ *= c;
    return *this;
}

TensorLieElement TensorLieElement::swapped() const
{
    if (degree_ != 2) {
        throw std::invalid_argument("TensorLieElement::swapped requires degree 2");
    }
    TensorLieElement out(2);
    for (const auto &[k, c] : terms_) {
        out.terms_.add(Key{k[1], k[0]}, c);
    }
    return out;
}

std::string TensorLieElement::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        std::string basis;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) {
                basis += "⊗";
            }
            basis += k[i].to_string();
        }
        detail::append_sum_term(out, first, c, basis);
        first = false;
    }
    return out;
}

TensorLieElement adjoint_action(const LieElement &x, const TensorLieElement &t)
{
    TensorLieElement out(t.degree());
    for (const auto &[key, c] : t.terms()) {
        for (std::size_t leg = 0; leg < key.size(); ++leg) {
            for (const auto &[gx, cx] : x) {
                if (auto b = bracket(gx, key[leg])) {
                    auto k = key;
                    k[leg] = b->gen;
                    out.add(k, c * cx * b->coeff);
                }
            }
        }
    }
    return out;
}

TwistCase::TwistCase(int id, long n0) : id_(id), n0_(n0)
{
    if (id < 1 || id > 3) {
        throw std::invalid_argument("twist case must be 1, 2 or 3");
    }
    if (n0 == 0) {
        throw std::invalid_argument("n0 must be nonzero");
    }
    if (id == 2 && n0 % 2 == 0) {
        throw std::invalid_argument("case 2 requires odd n0, got " + std::to_string(n0));
    }
}

std::string TwistCase::to_string() const
{
    return "case " + std::to_string(id_) + ", n0=" + std::to_string(n0_);
}

TwistGenerators case_generators(const TwistCase &c)
{
    const Generator L0 = Generator::L(0);
    switch (c.id()) {
        case 1:
            return {lie(L0, Rational(1, c.n0())), lie(Generator::M(c.n0()))};
        case 2:
            return {lie(L0, Rational(2, c.n0())), lie(Generator::Y_twice(c.n0()))};
        default:
            return {lie(L0, Rational(1, c.n0())), lie(Generator::L(c.n0()))};
    }
}

TensorLieElement r_matrix(const LieElement &h, const LieElement &e)
{
    if (bracket(h, e) != e) {
        throw std::invalid_argument("r_matrix requires [h, e] = e");
    }
    return TensorLieElement::tensor(h, e) - TensorLieElement::tensor(e, h);
}

TensorLieElement cybe_defect(const TensorLieElement &r)
{
    if (r.degree() != 2) {
        throw std::invalid_argument("cybe_defect requires a degree-2 tensor");
    }
    TensorLieElement out(3);
    for (const auto &[ki, ci] : r.terms()) {
        for (const auto &[kj, cj] : r.terms()) {
            const Rational c = ci * cj;
            // [r12, r13]
            if (auto b = bracket(ki[0], kj[0])) {
                out.add({b->gen, ki[1], kj[1]}, c * b->coeff);
            }
            // [r12, r23]
            if (auto b = bracket(ki[1], kj[0])) {
                out.add({ki[0], b->gen, kj[1]}, c * b->coeff);
            }
            // [r13, r23]
            if (auto b = bracket(ki[1], kj[1])) {
                out.add({ki[0], kj[0], b->gen}, c * b->coeff);
            }
        }
    }
    return out;
}

TensorLieElement delta_r(const LieElement &x, const LieElement &a, const LieElement &b)
{
    const LieElement xa = bracket(x, a);
    const LieElement xb = bracket(x, b);
    return TensorLieElement::tensor(xa, b) - TensorLieElement::tensor(b, xa) + TensorLieElement::tensor(a, xb)
           - TensorLieElement::tensor(xb, a);
}

TensorLieElement cocycle_defect(const LieElement &x, const LieElement &y, const LieElement &a, const LieElement &b)
{
    return delta_r(bracket(x, y), a, b) - adjoint_action(x, delta_r(y, a, b)) + adjoint_action(y, delta_r(x, a, b));
}

std::vector<Generator> generator_grid(long range)
{
    std::vector<Generator> out;
    for (long n = -range; n <= range; ++n) {
        out.push_back(Generator::M(n));
    }
    for (long t = -(2 * range - 1); t <= 2 * range - 1; t += 2) {
        out.push_back(Generator::Y_twice(t));
    }
    for (long n = -range; n <= range; ++n) {
        out.push_back(Generator::L(n));
    }
    return out;
}

} // namespace svq
