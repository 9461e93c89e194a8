#include <svq/twist.hpp>

#include <map>
#include <stdexcept>

namespace svq
{

namespace
{

struct CaseElements {
    UEAElement h;
    UEAElement e;
};

CaseElements elements_of(const TwistCase &c)
{
    const auto [h, e] = case_generators(c);
    return {uea(h), uea(e)};
}

// The index scale s with [L_0, X_j] = -j X_j turning into X_j h = (h + s j) X_j:
// s = 1/n0 in cases 1 and 3, 2/n0 in case 2.
Rational index_scale(const TwistCase &c)
{
    return Rational(c.id() == 2 ? 2 : 1, c.n0());
}

// sum_r w(r) A_r (x) e^r t^r (degree 2) or sum_r w(r) A_r e^r t^r (degree 1).
template <typename Weight, typename Left>
Series twist_sum(const CaseElements &ce, int degree, int order, Weight weight, Left left)
{
    Series out(degree, order);
    UEAElement e_power = uea_scalar(1);
    for (int r = 0; r <= order; ++r) {
        const auto ur = static_cast<unsigned>(r);
        const UEAElement a = left(ur);
        const Tensor coeff = degree == 2 ? Tensor::tensor(a, e_power) : Tensor::from(a * e_power);
        out.add_term(r, coeff, weight(ur));
        if (r < order) {
            e_power = e_power * ce.e;
        }
    }
    return out;
}

Rational inv_factorial(unsigned r)
{
    return Rational(1) / factorial(r);
}

Rational signed_inv_factorial(unsigned r)
{
    return r % 2 == 0 ? inv_factorial(r) : -inv_factorial(r);
}

Series one_tensor(const UEAElement &a, const UEAElement &b, int order)
{
    return Series::embed(Tensor::tensor(a, b), order);
}

Series embed1(const UEAElement &x, int order)
{
    return Series::embed(x, order);
}

Series tensor_one_left(const Series &s)
{
    return tensor_product(Series::one(1, s.order()), s);
}

Series tensor_one_right(const Series &s)
{
    return tensor_product(s, Series::one(1, s.order()));
}

void require_closed_form_case(const TwistData &d)
{
    if (d.twist_case.id() == 3) {
        throw std::invalid_argument("no closed-form twisted structure exists for case 3");
    }
}

} // namespace

Series build_F(const Rational &a, const TwistCase &c, int order)
{
    const CaseElements ce = elements_of(c);
    return twist_sum(ce, 2, order, inv_factorial, [&](unsigned r) { return rising_factorial(ce.h, r, a); });
}

Series build_scriptF(const Rational &a, const TwistCase &c, int order)
{
    const CaseElements ce = elements_of(c);
    return twist_sum(ce, 2, order, signed_inv_factorial,
                     [&](unsigned r) { return falling_factorial(ce.h, r, a); });
}

Series build_u(const Rational &a, const TwistCase &c, int order)
{
    const CaseElements ce = elements_of(c);
    return twist_sum(ce, 1, order, signed_inv_factorial,
                     [&](unsigned r) { return falling_factorial(ce.h, r, -a); });
}

Series build_v(const Rational &a, const TwistCase &c, int order)
{
    const CaseElements ce = elements_of(c);
    return twist_sum(ce, 1, order, inv_factorial, [&](unsigned r) { return falling_factorial(ce.h, r, a); });
}

Series u_by_contraction(const Rational &a, const TwistCase &c, int order)
{
    return multiply_legs(tensor_apply(LegMap::Antipode0, 0, build_F(a, c, order)));
}

Series v_by_contraction(const Rational &a, const TwistCase &c, int order)
{
    return multiply_legs(tensor_apply(LegMap::Antipode0, 1, build_scriptF(a, c, order)));
}

TwistData build_twist(const TwistCase &c, int order)
{
    if (order < 0) {
        throw std::invalid_argument("truncation order must be nonnegative");
    }
    const CaseElements ce = elements_of(c);
    const Rational zero(0);
    return TwistData{c,
                     order,
                     ce.h,
                     ce.e,
                     build_F(zero, c, order),
                     build_scriptF(zero, c, order),
                     build_u(zero, c, order),
                     build_v(zero, c, order)};
}

bool TwistDefects::all_zero() const
{
    return cocycle.is_zero() && left_counit.is_zero() && right_counit.is_zero();
}

TwistDefects twist_defects(const TwistData &d)
{
    const Series &f = d.scriptF;
    const Series lhs = tensor_one_right(f) * tensor_apply(LegMap::Coproduct0, 0, f);
    const Series rhs = tensor_one_left(f) * tensor_apply(LegMap::Coproduct0, 1, f);
    const Series one = Series::one(1, d.order);
    return TwistDefects{lhs - rhs, tensor_apply(LegMap::Counit, 0, f) - one,
                        tensor_apply(LegMap::Counit, 1, f) - one};
}

Series delta_twisted(const UEAElement &x, const TwistData &d)
{
    return d.scriptF * Series::embed(coproduct0(x), d.order) * d.F;
}

Series antipode_twisted(const UEAElement &x, const TwistData &d)
{
    return d.v * embed1(antipode0(x), d.order) * d.u;
}

Series closed_form_delta(const Generator &g, const TwistData &d)
{
    require_closed_form_case(d);
    const int N = d.order;
    const long n0 = d.twist_case.n0();
    const Rational s = index_scale(d.twist_case);
    const Rational j = g.index();
    const UEAElement one = uea_scalar(1);
    const UEAElement x = uea(g);
    auto B = [&](const Rational &alpha) { return binomial_series(d.e, alpha, N); };

    Series out = one_tensor(one, x, N) + tensor_product(embed1(x, N), B(s * j));

    if (d.twist_case.id() == 1) {
        if (g.family() == Family::L) {
            const UEAElement m = uea(Generator::M(j.to_long() + n0));
            out += Rational(n0) * tensor_product(embed1(d.h, N), B(Rational(-1)) * embed1(m, N)).shifted(1);
        }
        return out;
    }

    const Rational half_n0(n0, 2);
    if (g.family() == Family::L) {
        const long n = j.to_long();
        const UEAElement y = uea(Generator::Y(Rational(n) + half_n0));
        const UEAElement m = uea(Generator::M(n + n0));
        out += Rational(n0 - n, 2) * tensor_product(embed1(d.h, N), B(Rational(-1)) * embed1(y, N)).shifted(1);
        out += Rational(n * (n - n0), 4)
               * tensor_product(embed1(rising_factorial(d.h, 2), N), B(Rational(-2)) * embed1(m, N)).shifted(2);
    } else if (g.family() == Family::Y) {
        const UEAElement m = uea(Generator::M((j + half_n0).to_long()));
        out -= (j - half_n0) * tensor_product(embed1(d.h, N), B(Rational(-1)) * embed1(m, N)).shifted(1);
    }
    return out;
}

Series closed_form_antipode(const Generator &g, const TwistData &d)
{
    require_closed_form_case(d);
    const int N = d.order;
    const long n0 = d.twist_case.n0();
    const Rational s = index_scale(d.twist_case);
    const Rational j = g.index();
    const UEAElement x = uea(g);
    const Series prefactor = -binomial_series(d.e, -(s * j), N);
    const UEAElement h1 = falling_factorial(d.h, 1, Rational(1));

    Series inner = embed1(x, N);
    if (d.twist_case.id() == 1) {
        if (g.family() == Family::L) {
            const UEAElement m = uea(Generator::M(j.to_long() + n0));
            inner -= Rational(n0) * embed1(m * h1, N).shifted(1);
        }
        return prefactor * inner;
    }

    const Rational half_n0(n0, 2);
    if (g.family() == Family::L) {
        const long n = j.to_long();
        const UEAElement y = uea(Generator::Y(Rational(n) + half_n0));
        const UEAElement m = uea(Generator::M(n + n0));
        const UEAElement h2 = falling_factorial(d.h, 2, Rational(2));
        inner += Rational(n - n0, 2) * embed1(y * h1, N).shifted(1);
        inner += Rational(n * (n - n0), 4) * embed1(m * h2, N).shifted(2);
    } else if (g.family() == Family::Y) {
        const UEAElement m = uea(Generator::M((j + half_n0).to_long()));
        inner += (j - half_n0) * embed1(m * h1, N).shifted(1);
    }
    return prefactor * inner;
}

std::vector<NamedDefect> transport_identity_defects(const TwistData &d, const TransportParams &params)
{
    std::vector<NamedDefect> out;
    const int id = d.twist_case.id();
    if (id == 3) {
        return out;
    }
    const TwistCase &c = d.twist_case;
    const int N = d.order;
    const long n0 = c.n0();
    const Rational s = index_scale(c);
    const Rational &a = params.a;
    const Rational half_n0(n0, 2);
    const UEAElement one = uea_scalar(1);

    const UEAElement Ln = uea(Generator::L(params.n));
    const UEAElement Mk = uea(Generator::M(params.k));
    const UEAElement Yp = uea(Generator::Y(params.p));
    const Rational n(params.n);
    const Rational k(params.k);
    const Rational &p = params.p;

    auto F = [&](const Rational &b) { return build_F(b, c, N); };
    auto u = [&](const Rational &b) { return build_u(b, c, N); };
    auto left = [&](const UEAElement &x) { return one_tensor(x, one, N); };
    auto right = [&](const UEAElement &x) { return one_tensor(one, x, N); };
    auto add = [&](std::string name, Series defect) { out.push_back({std::move(name), std::move(defect)}); };

    const Series Fa = F(a);
    add("(L(n)⊗1)F_a", left(Ln) * Fa - F(a - s * n) * left(Ln));
    add("(M(k)⊗1)F_a", left(Mk) * Fa - F(a - s * k) * left(Mk));
    add("(Y(p)⊗1)F_a", left(Yp) * Fa - F(a - s * p) * left(Yp));
    add("(1⊗M(k))F_a", right(Mk) * Fa - Fa * right(Mk));

    const UEAElement h1a = rising_factorial(d.h, 1, a);
    const UEAElement h1 = falling_factorial(d.h, 1, Rational(1) - a);
    const Series ua = u(a);
    if (id == 1) {
        const UEAElement m = uea(Generator::M(params.n + n0));
        add("(1⊗Y(p))F_a", right(Yp) * Fa - Fa * right(Yp));
        add("(1⊗L(n))F_a",
            right(Ln) * Fa - Fa * right(Ln) - Rational(n0) * (F(a + 1) * one_tensor(h1a, m, N)).shifted(1));
        add("L(n)u_a", embed1(Ln, N) * ua
                           - u(a + s * n) * (embed1(Ln, N) - Rational(n0) * embed1(m * h1, N).shifted(1)));
        add("M(k)u_a", embed1(Mk, N) * ua - u(a + s * k) * embed1(Mk, N));
        add("Y(p)u_a", embed1(Yp, N) * ua - u(a + s * p) * embed1(Yp, N));
        return out;
    }

    const UEAElement y_n = uea(Generator::Y(n + half_n0));
    const UEAElement m_n = uea(Generator::M(params.n + n0));
    const UEAElement m_p = uea(Generator::M((p + half_n0).to_long()));
    const Rational cy = (n - Rational(n0)) / Rational(2);
    const Rational cm = n * (n - Rational(n0)) / Rational(4);
    const Rational cp = p - half_n0;

    add("(1⊗L(n))F_a", right(Ln) * Fa - Fa * right(Ln)
                           + cy * (F(a + 1) * one_tensor(h1a, y_n, N)).shifted(1)
                           - cm * (F(a + 2) * one_tensor(rising_factorial(d.h, 2, a), m_n, N)).shifted(2));
    add("(1⊗Y(p))F_a",
        right(Yp) * Fa - Fa * right(Yp) + cp * (F(a + 1) * one_tensor(h1a, m_p, N)).shifted(1));
    add("M(k)u_a", embed1(Mk, N) * ua - u(a + s * k) * embed1(Mk, N));
    add("Y(p)u_a",
        embed1(Yp, N) * ua - u(a + s * p) * (embed1(Yp, N) + cp * embed1(m_p * h1, N).shifted(1)));
    const UEAElement h2 = falling_factorial(d.h, 2, Rational(2) - a);
    add("L(n)u_a", embed1(Ln, N) * ua
                       - u(a + s * n)
                             * (embed1(Ln, N) + cy * embed1(y_n * h1, N).shifted(1)
                                + cm * embed1(m_n * h2, N).shifted(2)));
    return out;
}

std::vector<NamedDefect> inverse_pair_defects(const TwistData &d, const Rational &a, const Rational &b)
{
    const TwistCase &c = d.twist_case;
    const int N = d.order;
    const Series lhs_f = build_scriptF(a, c, N) * build_F(b, c, N);
    const Series rhs_f = tensor_product(Series::one(1, N), binomial_series(d.e, a - b, N));
    const Series lhs_u = build_v(a, c, N) * build_u(b, c, N);
    const Series rhs_u = binomial_series(d.e, -(a + b), N);
    return {{"scriptF_a F_b", lhs_f - rhs_f}, {"v_a u_b", lhs_u - rhs_u}};
}

std::vector<NamedDefect> HopfAxiomDefects::named() const
{
    return {{"coassociativity", coassociativity},
            {"left counit", left_counit},
            {"right counit", right_counit},
            {"left antipode", left_antipode},
            {"right antipode", right_antipode}};
}

HopfAxiomDefects twisted_hopf_defects(const UEAElement &x, const TwistData &d)
{
    const int N = d.order;
    std::map<Monomial, Series> delta_memo;
    std::map<Monomial, Series> antipode_memo;
    auto delta_of = [&](const Monomial &m, int) -> Series {
        auto it = delta_memo.find(m);
        if (it == delta_memo.end()) {
            it = delta_memo.emplace(m, delta_twisted(UEAElement(m, Rational(1)), d)).first;
        }
        return it->second;
    };
    auto antipode_of = [&](const Monomial &m, int) -> Series {
        auto it = antipode_memo.find(m);
        if (it == antipode_memo.end()) {
            it = antipode_memo.emplace(m, antipode_twisted(UEAElement(m, Rational(1)), d)).first;
        }
        return it->second;
    };

    const Series D = delta_twisted(x, d);
    const Series X = embed1(x, N);
    const Series unit = Series::embed(uea_scalar(counit(x)), N);

    HopfAxiomDefects out{apply_leg(D, 0, 2, delta_of) - apply_leg(D, 1, 2, delta_of),
                         tensor_apply(LegMap::Counit, 0, D) - X,
                         tensor_apply(LegMap::Counit, 1, D) - X,
                         multiply_legs(apply_leg(D, 0, 1, antipode_of)) - unit,
                         multiply_legs(apply_leg(D, 1, 1, antipode_of)) - unit};
    return out;
}

Series constant_part(const Series &s)
{
    return Series::embed(s.coeff(0), s.order());
}

} // namespace svq
