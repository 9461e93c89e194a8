#include <svq/twist.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

using svq::Generator;
using svq::Rational;
using svq::Series;
using svq::Tensor;
using svq::TwistCase;
using svq::TwistData;
using svq::UEAElement;
using svq::uea;
using svq::uea_scalar;

namespace
{

const UEAElement one = uea_scalar(1);

std::vector<TwistCase> all_cases()
{
    return {TwistCase(1, 1), TwistCase(1, 2), TwistCase(1, -1), TwistCase(2, 1), TwistCase(2, 3),
            TwistCase(2, -1), TwistCase(3, 1), TwistCase(3, 2)};
}

std::vector<TwistCase> closed_form_cases()
{
    return {TwistCase(1, 1), TwistCase(1, 2), TwistCase(1, -3), TwistCase(2, 1), TwistCase(2, 3), TwistCase(2, -1)};
}

Series tensor_series(std::initializer_list<std::tuple<int, UEAElement, UEAElement, Rational>> terms, int order)
{
    Series s(2, order);
    for (const auto &[k, a, b, c] : terms) {
        s.add_term(k, Tensor::tensor(a, b), c);
    }
    return s;
}

Series element_series(std::initializer_list<std::pair<int, UEAElement>> terms, int order)
{
    Series s(1, order);
    for (const auto &[k, x] : terms) {
        s.add_term(k, Tensor::from(x));
    }
    return s;
}

} // namespace

TEST(Twist, BuildRejectsNegativeOrder)
{
    EXPECT_THROW(svq::build_twist(TwistCase(1, 1), -1), std::invalid_argument);
}

TEST(Twist, CaseOneSecondOrderValues)
{
    const TwistData d = svq::build_twist(TwistCase(1, 1), 2);
    const UEAElement h = uea(Generator::L(0));
    const UEAElement e = uea(Generator::M(1));
    EXPECT_EQ(d.h, h);
    EXPECT_EQ(d.e, e);
    const UEAElement e2 = e * e;
    EXPECT_EQ(d.F, tensor_series({{0, one, one, Rational(1)},
                                  {1, h, e, Rational(1)},
                                  {2, h * (h + one), e2, Rational(1, 2)}},
                                 2));
    EXPECT_EQ(d.scriptF, tensor_series({{0, one, one, Rational(1)},
                                        {1, h, e, Rational(-1)},
                                        {2, h * (h - one), e2, Rational(1, 2)}},
                                       2));
}

TEST(Twist, OrderZeroIsTrivial)
{
    for (const auto &c : all_cases()) {
        const TwistData d = svq::build_twist(c, 0);
        EXPECT_EQ(d.F, Series::one(2, 0));
        EXPECT_EQ(d.scriptF, Series::one(2, 0));
        EXPECT_EQ(d.u, Series::one(1, 0));
        EXPECT_EQ(d.v, Series::one(1, 0));
    }
}

TEST(Twist, ContractionFirstOrder)
{
    const TwistData d = svq::build_twist(TwistCase(1, 1), 1);
    const UEAElement he = uea(Generator::L(0)) * uea(Generator::M(1));
    EXPECT_EQ(d.u, element_series({{0, one}, {1, -he}}, 1));
    EXPECT_EQ(d.v, element_series({{0, one}, {1, he}}, 1));
}

TEST(Twist, CaseTwoElements)
{
    const TwistData d = svq::build_twist(TwistCase(2, 3), 1);
    EXPECT_EQ(d.h, uea(Generator::L(0), Rational(2, 3)));
    EXPECT_EQ(d.e, uea(Generator::Y(Rational(3, 2))));
}

TEST(Twist, ShiftedFamiliesMatchFactorialDefinitions)
{
    const TwistCase c(1, 2);
    const int N = 3;
    const TwistData d = svq::build_twist(c, N);
    for (const Rational &a : {Rational(0), Rational(1, 2), Rational(-2)}) {
        Series F(2, N);
        Series scriptF(2, N);
        Series u(1, N);
        Series v(1, N);
        for (unsigned r = 0; r <= static_cast<unsigned>(N); ++r) {
            const Rational w = Rational(1) / svq::factorial(r);
            const Rational sw = r % 2 == 0 ? w : -w;
            const UEAElement er = svq::power(d.e, r);
            const int k = static_cast<int>(r);
            F.add_term(k, Tensor::tensor(svq::rising_factorial(d.h, r, a), er), w);
            scriptF.add_term(k, Tensor::tensor(svq::falling_factorial(d.h, r, a), er), sw);
            u.add_term(k, Tensor::from(svq::falling_factorial(d.h, r, -a) * er), sw);
            v.add_term(k, Tensor::from(svq::falling_factorial(d.h, r, a) * er), w);
        }
        EXPECT_EQ(svq::build_F(a, c, N), F);
        EXPECT_EQ(svq::build_scriptF(a, c, N), scriptF);
        EXPECT_EQ(svq::build_u(a, c, N), u);
        EXPECT_EQ(svq::build_v(a, c, N), v);
    }
}

TEST(Twist, InversePairs)
{
    for (const auto &c : all_cases()) {
        const TwistData d = svq::build_twist(c, 4);
        EXPECT_EQ(d.scriptF * d.F, Series::one(2, 4)) << c.to_string();
        EXPECT_EQ(d.F * d.scriptF, Series::one(2, 4)) << c.to_string();
        EXPECT_EQ(svq::invert(d.F), d.scriptF) << c.to_string();
        EXPECT_EQ(d.u * d.v, Series::one(1, 4)) << c.to_string();
        EXPECT_EQ(d.v * d.u, Series::one(1, 4)) << c.to_string();
    }
}

TEST(Twist, ShiftedInversePairs)
{
    const std::vector<Rational> as{Rational(0), Rational(1), Rational(-1, 2), Rational(1, 3)};
    for (const auto &c : all_cases()) {
        const TwistData d = svq::build_twist(c, 3);
        for (const auto &a : as) {
            for (const auto &b : as) {
                for (const auto &nd : svq::inverse_pair_defects(d, a, b)) {
                    EXPECT_TRUE(nd.defect.is_zero()) << c.to_string() << ' ' << nd.name << ' ' << nd.defect.to_string();
                }
            }
        }
    }
}

TEST(Twist, ShiftedInversePairByHand)
{
    const TwistCase c(1, 1);
    const Series lhs = svq::build_v(Rational(1), c, 3) * svq::build_u(Rational(1), c, 3);
    EXPECT_EQ(lhs, svq::binomial_series(uea(Generator::M(1)), Rational(-2), 3));
}

TEST(Twist, ContractionsAgreeWithClosedSums)
{
    for (const auto &c : all_cases()) {
        for (const Rational &a : {Rational(0), Rational(1), Rational(-1, 2)}) {
            EXPECT_EQ(svq::u_by_contraction(a, c, 3), svq::build_u(a, c, 3)) << c.to_string();
            EXPECT_EQ(svq::v_by_contraction(a, c, 3), svq::build_v(a, c, 3)) << c.to_string();
        }
    }
}

TEST(Twist, CocycleAndCounit)
{
    for (const auto &c : all_cases()) {
        const svq::TwistDefects t = svq::twist_defects(svq::build_twist(c, 4));
        EXPECT_TRUE(t.cocycle.is_zero()) << c.to_string() << ' ' << t.cocycle.to_string();
        EXPECT_TRUE(t.left_counit.is_zero()) << c.to_string();
        EXPECT_TRUE(t.right_counit.is_zero()) << c.to_string();
        EXPECT_TRUE(t.all_zero());
    }
}

TEST(Twist, CocycleFailsForTruncatedExponential)
{
    TwistData d = svq::build_twist(TwistCase(1, 1), 2);
    d.F = Series::one(2, 2);
    d.F.add_term(1, Tensor::tensor(d.h, d.e));
    d.scriptF = svq::invert(d.F);
    EXPECT_FALSE(svq::twist_defects(d).cocycle.is_zero());
}

TEST(TwistedCoproduct, FirstOrderExample)
{
    const TwistData d = svq::build_twist(TwistCase(1, 1), 1);
    const Series delta = svq::delta_twisted(uea(Generator::M(1)), d);
    EXPECT_EQ(delta.to_string(), "1⊗M(1) + M(1)⊗1 + (-1)·M(1)⊗M(1)·t");
}

TEST(TwistedAntipode, CaseOneMk)
{
    const TwistData d = svq::build_twist(TwistCase(1, 1), 1);
    const UEAElement m1 = uea(Generator::M(1));
    EXPECT_EQ(svq::antipode_twisted(m1, d), element_series({{0, -m1}, {1, -(m1 * m1)}}, 1));
    const TwistData d4 = svq::build_twist(TwistCase(1, 2), 4);
    for (long k : {-3L, -1L, 0L, 2L, 5L}) {
        const UEAElement mk = uea(Generator::M(k));
        const Series expected = -svq::binomial_series(d4.e, Rational(-k, 2), 4) * Series::embed(mk, 4);
        EXPECT_EQ(svq::antipode_twisted(mk, d4), expected) << k;
    }
}

TEST(TwistedAntipode, CaseTwoY)
{
    const TwistData d0 = svq::build_twist(TwistCase(2, 1), 0);
    const UEAElement y = uea(Generator::Y(Rational(1, 2)));
    EXPECT_EQ(svq::antipode_twisted(y, d0).to_string(), "(-1)·Y(1/2)");
    const TwistData d2 = svq::build_twist(TwistCase(2, 1), 2);
    EXPECT_EQ(svq::antipode_twisted(y, d2), element_series({{0, -y}, {1, -(y * y)}, {2, -(y * y * y)}}, 2));
}

TEST(ClosedForms, MatchConjugation)
{
    for (const auto &c : closed_form_cases()) {
        const TwistData d = svq::build_twist(c, 4);
        for (const auto &g : svq::generator_grid(2)) {
            if (c.id() == 1 && g.family() == svq::Family::Y) {
                continue;
            }
            const UEAElement x = uea(g);
            ASSERT_EQ(svq::closed_form_delta(g, d), svq::delta_twisted(x, d)) << c.to_string() << ' ' << g.to_string();
            ASSERT_EQ(svq::closed_form_antipode(g, d), svq::antipode_twisted(x, d))
                << c.to_string() << ' ' << g.to_string();
        }
    }
}

TEST(ClosedForms, CaseThreeThrows)
{
    const TwistData d = svq::build_twist(TwistCase(3, 1), 2);
    EXPECT_THROW(svq::closed_form_delta(Generator::L(1), d), std::invalid_argument);
    EXPECT_THROW(svq::closed_form_antipode(Generator::M(1), d), std::invalid_argument);
}

TEST(Transport, IdentitiesHold)
{
    for (const auto &c : closed_form_cases()) {
        const TwistData d = svq::build_twist(c, 4);
        for (const Rational &a : {Rational(0), Rational(1), Rational(-1, 2)}) {
            for (long n : {-2L, 0L, 3L}) {
                const svq::TransportParams params{a, n, n + 1, Rational(2 * n + 1, 2)};
                const auto defects = svq::transport_identity_defects(d, params);
                EXPECT_EQ(defects.size(), 9U);
                for (const auto &nd : defects) {
                    EXPECT_TRUE(nd.defect.is_zero()) << c.to_string() << ' ' << nd.name << ' ' << nd.defect.to_string();
                }
            }
        }
    }
    EXPECT_TRUE(svq::transport_identity_defects(svq::build_twist(TwistCase(3, 1), 2), {}).empty());
}

TEST(Transport, DetectsCorruptedBracket)
{
    const TwistData d = svq::build_twist(TwistCase(1, 1), 3);
    svq::ScopedBracketRule corrupt(&svq::corrupted_bracket);
    bool any = false;
    for (const auto &nd : svq::transport_identity_defects(d, {Rational(0), 2, 1, Rational(1, 2)})) {
        any = any || !nd.defect.is_zero();
    }
    EXPECT_TRUE(any);
}

TEST(TwistedHopf, AxiomsHoldInEveryCase)
{
    for (const auto &c : all_cases()) {
        const TwistData d = svq::build_twist(c, 3);
        for (const auto &g : svq::generator_grid(1)) {
            const auto defects = svq::twisted_hopf_defects(uea(g), d).named();
            ASSERT_EQ(defects.size(), 5U);
            for (const auto &nd : defects) {
                ASSERT_TRUE(nd.defect.is_zero()) << c.to_string() << ' ' << g.to_string() << ' ' << nd.name;
            }
        }
    }
}

TEST(TwistedHopf, AxiomsOnProducts)
{
    const TwistData d = svq::build_twist(TwistCase(2, 1), 2);
    const UEAElement x = uea(Generator::L(1)) * uea(Generator::Y(Rational(-1, 2))) + uea(Generator::M(0));
    for (const auto &nd : svq::twisted_hopf_defects(x, d).named()) {
        EXPECT_TRUE(nd.defect.is_zero()) << nd.name;
    }
}

TEST(TwistedHopf, UndeformedLimit)
{
    for (const auto &c : all_cases()) {
        const TwistData d = svq::build_twist(c, 3);
        for (const auto &g : svq::generator_grid(1)) {
            const UEAElement x = uea(g);
            EXPECT_EQ(svq::constant_part(svq::delta_twisted(x, d)), Series::embed(svq::coproduct0(x), 3));
            EXPECT_EQ(svq::constant_part(svq::antipode_twisted(x, d)), Series::embed(svq::antipode0(x), 3));
        }
    }
}

TEST(TwistedHopf, CorruptedBracketBreaksClosedForms)
{
    const TwistData d = svq::build_twist(TwistCase(1, 1), 3);
    svq::ScopedBracketRule corrupt(&svq::corrupted_bracket);
    bool any = false;
    for (const auto &g : svq::generator_grid(2)) {
        if (g.family() == svq::Family::Y) {
            continue;
        }
        const UEAElement x = uea(g);
        any = any || svq::closed_form_delta(g, d) != svq::delta_twisted(x, d) ||
              svq::closed_form_antipode(g, d) != svq::antipode_twisted(x, d);
    }
    EXPECT_TRUE(any);
}
