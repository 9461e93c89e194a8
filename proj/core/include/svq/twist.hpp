#ifndef SVQ_TWIST_HPP
#define SVQ_TWIST_HPP

#include <string>
#include <vector>

#include <svq/enveloping.hpp>
#include <svq/lie.hpp>
#include <svq/rational.hpp>
#include <svq/series.hpp>

namespace svq
{

// The twist F_0^{-1} ... data attached to one (case, n0, order) choice.
//
//   F        = sum_r 1/r!      h^(r) (x) e^r t^r
//   scriptF  = sum_r (-1)^r/r! h^[r] (x) e^r t^r     (the Drinfel'd twist, F^{-1})
//   u        = sum_r (-1)^r/r! h^[r] e^r t^r         (= m(S0 (x) Id)(F))
//   v        = sum_r 1/r!      h^[r] e^r t^r         (= m(Id (x) S0)(scriptF), u^{-1})
struct TwistData {
    TwistCase twist_case;
    int order;
    UEAElement h;
    UEAElement e;
    Series F;
    Series scriptF;
    Series u;
    Series v;
};

TwistData build_twist(const TwistCase &c, int order);

// Shifted families F_a, scriptF_a, u_a, v_a.
Series build_F(const Rational &a, const TwistCase &c, int order);
Series build_scriptF(const Rational &a, const TwistCase &c, int order);
Series build_u(const Rational &a, const TwistCase &c, int order);
Series build_v(const Rational &a, const TwistCase &c, int order);

// u_a and v_a computed from their multiplicative definitions.
Series u_by_contraction(const Rational &a, const TwistCase &c, int order);
Series v_by_contraction(const Rational &a, const TwistCase &c, int order);

struct TwistDefects {
    // (scriptF (x) 1)(Delta0 (x) Id)(scriptF) - (1 (x) scriptF)(Id (x) Delta0)(scriptF)
    Series cocycle;
    // (eps (x) Id)(scriptF) - 1 and (Id (x) eps)(scriptF) - 1
    Series left_counit;
    Series right_counit;

    [[nodiscard]] bool all_zero() const;
};

TwistDefects twist_defects(const TwistData &d);

// scriptF Delta0(x) F
Series delta_twisted(const UEAElement &x, const TwistData &d);
// v S0(x) u
Series antipode_twisted(const UEAElement &x, const TwistData &d);

// Closed-form twisted coproduct / antipode of a generator (cases 1 and 2).
// Throws std::invalid_argument for case 3, which has no closed forms.
Series closed_form_delta(const Generator &g, const TwistData &d);
Series closed_form_antipode(const Generator &g, const TwistData &d);

struct TransportParams {
    Rational a;
    long n = 0;
    long k = 0;
    Rational p{1, 2};
};

struct NamedDefect {
    std::string name;
    Series defect;
};

// LHS - RHS of every commutation rule of generators past F_a and u_a that
// applies to the active case (cases 1 and 2); empty for case 3.
std::vector<NamedDefect> transport_identity_defects(const TwistData &d, const TransportParams &params);

// scriptF_a F_b - 1 (x) (1 - et)^{a-b} and v_a u_b - (1 - et)^{-(a+b)}. Valid for every case.
std::vector<NamedDefect> inverse_pair_defects(const TwistData &d, const Rational &a, const Rational &b);

struct HopfAxiomDefects {
    Series coassociativity;  // (Delta (x) Id)Delta(x) - (Id (x) Delta)Delta(x)
    Series left_counit;      // (eps (x) Id)Delta(x) - x
    Series right_counit;     // (Id (x) eps)Delta(x) - x
    Series left_antipode;    // m(S (x) Id)Delta(x) - eps(x) 1
    Series right_antipode;   // m(Id (x) S)Delta(x) - eps(x) 1

    [[nodiscard]] std::vector<NamedDefect> named() const;
};

// Hopf axioms of the twisted structure evaluated on x, up to t^order.
HopfAxiomDefects twisted_hopf_defects(const UEAElement &x, const TwistData &d);

// Sets every t^k (k >= 1) coefficient to zero.
Series constant_part(const Series &s);

} // namespace svq

#endif
