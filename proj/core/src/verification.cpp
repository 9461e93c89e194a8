#include <svq/verification.hpp>

#include <svq/enveloping.hpp>
#include <svq/lie.hpp>
#include <svq/series.hpp>
#include <svq/twist.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace svq
{

namespace
{

using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(long v)
{
    return std::to_string(v);
}

std::string str(const Rational &v)
{
    return v.to_string();
}

std::vector<std::string> tensor_legs(const Tensor::Key &key, int degree)
{
    std::vector<std::string> legs;
    for (int i = 0; i < degree; ++i) {
        legs.push_back(key[static_cast<std::size_t>(i)].to_string());
    }
    return legs;
}

Defect witness(const Series &s)
{
    Defect d{s.to_string(), {}};
    for (int k = 0; k <= s.order(); ++k) {
        for (const auto &[key, c] : s.coeff(k).terms()) {
            d.terms.push_back({k, tensor_legs(key, s.degree()), c.to_string()});
        }
    }
    return d;
}

Defect witness(const Tensor &t)
{
    return witness(Series::embed(t, 0));
}

Defect witness(const UEAElement &x)
{
    Defect d{to_string(x), {}};
    for (const auto &[m, c] : x) {
        d.terms.push_back({0, {m.to_string()}, c.to_string()});
    }
    return d;
}

Defect witness(const LieElement &x)
{
    Defect d{to_string(x), {}};
    for (const auto &[g, c] : x) {
        d.terms.push_back({0, {g.to_string()}, c.to_string()});
    }
    return d;
}

Defect witness(const TensorLieElement &x)
{
    Defect d{x.to_string(), {}};
    for (const auto &[key, c] : x.terms()) {
        std::vector<std::string> legs;
        for (const auto &g : key) {
            legs.push_back(g.to_string());
        }
        d.terms.push_back({0, legs, c.to_string()});
    }
    return d;
}

class Check
{
public:
    Check(std::string suite, std::string name, Params params)
        : record_{std::move(suite), std::move(name), std::move(params), true, {}}
    {
    }

    template <typename T>
    void expect_zero(const T &defect, const std::string &instance = {})
    {
        if (!record_.passed || defect.is_zero()) {
            return;
        }
        record_.passed = false;
        record_.defect = witness(defect);
        if (!instance.empty()) {
            record_.defect.text = instance + ": " + record_.defect.text;
        }
    }

    void fail(const std::string &message)
    {
        if (record_.passed) {
            record_.passed = false;
            record_.defect = Defect{message, {}};
        }
    }

    CheckRecord take() { return std::move(record_); }

private:
    CheckRecord record_;
};

class Runner
{
public:
    explicit Runner(const SuiteConfig &cfg) : cfg_(cfg), rng_(cfg.seed) {}

    void run(const std::string &suite, const std::string &name, Params params,
             const std::function<void(Check &)> &body)
    {
        Check check(suite, name, std::move(params));
        try {
            body(check);
        } catch (const std::exception &ex) {
            check.fail(std::string("error: ") + ex.what());
        }
        records_.push_back(check.take());
    }

    std::vector<TwistCase> case_points(int id) const
    {
        std::vector<TwistCase> out;
        for (long n0 : cfg_.n0_values) {
            if (n0 == 0 || (id == 2 && n0 % 2 == 0)) {
                continue;
            }
            out.emplace_back(id, n0);
        }
        return out;
    }

    const SuiteConfig &config() const { return cfg_; }
    std::mt19937_64 &rng() { return rng_; }
    std::vector<CheckRecord> take() { return std::move(records_); }

private:
    const SuiteConfig &cfg_;
    std::mt19937_64 rng_;
    std::vector<CheckRecord> records_;
};

Params case_params(const TwistCase &c)
{
    return {{"case", std::to_string(c.id())}, {"n0", str(c.n0())}};
}

Params with(Params p, const std::string &key, const std::string &value)
{
    p.emplace_back(key, value);
    return p;
}

Rational index_scale(const TwistCase &c)
{
    return Rational(c.id() == 2 ? 2 : 1, c.n0());
}

// ---------------------------------------------------------------------------

void bialgebra_suite(Runner &run)
{
    const std::string suite = "bialgebra";
    const auto grid = generator_grid(run.config().index_range);

    for (const auto &x : grid) {
        const Params p{{"x", x.to_string()}};
        run.run(suite, "antisymmetry", p, [&](Check &c) {
            for (const auto &y : grid) {
                c.expect_zero(bracket(lie(x), lie(y)) + bracket(lie(y), lie(x)), "y=" + y.to_string());
            }
        });
        run.run(suite, "jacobi", p, [&](Check &c) {
            const LieElement lx = lie(x);
            for (const auto &y : grid) {
                const LieElement ly = lie(y);
                const LieElement xy = bracket(lx, ly);
                for (const auto &z : grid) {
                    const LieElement lz = lie(z);
                    c.expect_zero(bracket(lx, bracket(ly, lz)) + bracket(ly, bracket(lz, lx)) + bracket(lz, xy),
                                  "y=" + y.to_string() + ", z=" + z.to_string());
                }
            }
        });
        run.run(suite, "grading", p, [&](Check &c) {
            for (const auto &y : grid) {
                for (const auto &[g, coeff] : bracket(lie(x), lie(y))) {
                    if (g.index() != x.index() + y.index()) {
                        c.fail("y=" + y.to_string() + ": bracket term " + g.to_string() + " has wrong index");
                    }
                }
            }
        });
    }

    for (int id = 1; id <= 3; ++id) {
        for (const auto &tc : run.case_points(id)) {
            const auto [h, e] = case_generators(tc);
            const Params cp = case_params(tc);
            run.run(suite, "[h,e]=e", cp, [&](Check &c) { c.expect_zero(bracket(h, e) - e); });
            run.run(suite, "r skew", cp, [&](Check &c) {
                const TensorLieElement r = r_matrix(h, e);
                c.expect_zero(r.swapped() + r);
            });
            run.run(suite, "classical Yang-Baxter", cp, [&](Check &c) { c.expect_zero(cybe_defect(r_matrix(h, e))); });
            run.run(suite, "delta_r(h)=r", cp,
                    [&](Check &c) { c.expect_zero(delta_r(h, h, e) - r_matrix(h, e)); });
            run.run(suite, "delta_r(e)=0", cp, [&](Check &c) { c.expect_zero(delta_r(e, h, e)); });
            run.run(suite, "delta_r skew", cp, [&](Check &c) {
                for (const auto &x : grid) {
                    const TensorLieElement dx = delta_r(lie(x), h, e);
                    c.expect_zero(dx.swapped() + dx, "x=" + x.to_string());
                }
            });
            for (const auto &x : grid) {
                run.run(suite, "cocycle", with(cp, "x", x.to_string()), [&](Check &c) {
                    for (const auto &y : grid) {
                        c.expect_zero(cocycle_defect(lie(x), lie(y), h, e), "y=" + y.to_string());
                    }
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------

std::vector<Generator> random_word(std::mt19937_64 &rng, const std::vector<Generator> &grid, int min_len,
                                   int max_len)
{
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_int_distribution<std::size_t> gen_dist(0, grid.size() - 1);
    std::vector<Generator> w;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
        w.push_back(grid[gen_dist(rng)]);
    }
    return w;
}

std::string word_text(const std::vector<Generator> &w)
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? "*" : "") + w[i].to_string();
    }
    return out;
}

constexpr int kRandomSamples = 120;

void pbw_hopf_suite(Runner &run)
{
    const std::string suite = "pbw-hopf";
    const auto grid = generator_grid(run.config().index_range);
    auto &rng = run.rng();

    std::vector<std::vector<Generator>> words;
    for (const auto &g : grid) {
        words.push_back({g});
    }
    for (int i = 0; i < kRandomSamples; ++i) {
        words.push_back(random_word(rng, grid, 0, 3));
    }
    std::vector<Monomial> monomials;
    for (const auto &w : words) {
        for (const auto &[m, c] : normalize(w)) {
            monomials.push_back(m);
        }
    }
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    const Params sampled{{"samples", std::to_string(words.size())}, {"seed", std::to_string(run.config().seed)}};

    run.run(suite, "normalize idempotent", sampled, [&](Check &c) {
        for (const auto &w : words) {
            const UEAElement x = normalize(w);
            UEAElement again;
            for (const auto &[m, coeff] : x) {
                again.add_scaled(normalize(m.word()), coeff);
            }
            c.expect_zero(again - x, word_text(w));
        }
    });

    for (const auto &x : grid) {
        run.run(suite, "bracket compatibility", {{"x", x.to_string()}}, [&](Check &c) {
            for (const auto &y : grid) {
                c.expect_zero(commutator(uea(x), uea(y)) - uea(bracket(lie(x), lie(y))), "y=" + y.to_string());
            }
        });
    }

    run.run(suite, "associativity on generators", {{"range", str(run.config().index_range)}}, [&](Check &c) {
        for (const auto &x : grid) {
            for (const auto &y : grid) {
                const UEAElement xy = uea(x) * uea(y);
                for (const auto &z : grid) {
                    c.expect_zero(xy * uea(z) - uea(x) * (uea(y) * uea(z)),
                                  x.to_string() + ", " + y.to_string() + ", " + z.to_string());
                }
            }
        }
    });

    run.run(suite, "associativity on words", sampled, [&](Check &c) {
        for (int i = 0; i < kRandomSamples; ++i) {
            const auto wa = random_word(rng, grid, 0, 3);
            const auto wb = random_word(rng, grid, 0, 3);
            const auto wc = random_word(rng, grid, 0, 3);
            const UEAElement a = normalize(wa);
            const UEAElement b = normalize(wb);
            const UEAElement d = normalize(wc);
            c.expect_zero((a * b) * d - a * (b * d), word_text(wa) + ", " + word_text(wb) + ", " + word_text(wc));
        }
    });

    const Params mono{{"monomials", std::to_string(monomials.size())}, {"seed", std::to_string(run.config().seed)}};
    auto coproduct_leg = [](const Monomial &m) { return coproduct0(m); };
    auto antipode_leg = [](const Monomial &m) { return Tensor::from(antipode0(m)); };

    run.run(suite, "coassociativity", mono, [&](Check &c) {
        for (const auto &m : monomials) {
            const Tensor d = coproduct0(m);
            c.expect_zero(map_leg(d, 0, 2, coproduct_leg) - map_leg(d, 1, 2, coproduct_leg), m.to_string());
        }
    });
    run.run(suite, "counit", mono, [&](Check &c) {
        for (const auto &m : monomials) {
            const Tensor d = coproduct0(m);
            const Tensor x = Tensor::from(UEAElement(m));
            c.expect_zero(counit_leg(d, 0) - x, m.to_string() + " (left)");
            c.expect_zero(counit_leg(d, 1) - x, m.to_string() + " (right)");
        }
    });
    run.run(suite, "antipode", mono, [&](Check &c) {
        for (const auto &m : monomials) {
            const Tensor d = coproduct0(m);
            const UEAElement unit = uea_scalar(counit(UEAElement(m)));
            c.expect_zero(multiply_legs(map_leg(d, 0, 1, antipode_leg)) - unit, m.to_string() + " (left)");
            c.expect_zero(multiply_legs(map_leg(d, 1, 1, antipode_leg)) - unit, m.to_string() + " (right)");
        }
    });
    run.run(suite, "antipode involutive", mono, [&](Check &c) {
        for (const auto &m : monomials) {
            c.expect_zero(antipode0(antipode0(m)) - UEAElement(m), m.to_string());
        }
    });
}

// ---------------------------------------------------------------------------

constexpr unsigned kMaxPower = 4;

void factorial_checks(Runner &run, const std::string &suite)
{
    const std::vector<std::pair<std::string, UEAElement>> xs{
        {"L(0)", uea(Generator::L(0))},
        {"2*L(1) - M(-1)", uea(Generator::L(1), Rational(2)) - uea(Generator::M(-1))},
    };
    const std::vector<Rational> ab{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
    for (const auto &[label, x] : xs) {
        for (const auto &a : ab) {
            for (const auto &b : ab) {
                for (unsigned r = 0; r <= kMaxPower; ++r) {
                    const Params p{{"x", label}, {"a", str(a)}, {"b", str(b)}, {"r", std::to_string(r)}};
                    std::optional<FactorialIdentityDefects> defects;
                    run.run(suite, "factorial product rules", p, [&](Check &c) {
                        defects = factorial_identity_defects(x, a, b, r);
                        for (const auto &d : defects->product_rules) {
                            c.expect_zero(d);
                        }
                    });
                    run.run(suite, "alternating rising sum", p, [&](Check &c) {
                        if (!defects) {
                            throw std::runtime_error("factorial defects unavailable");
                        }
                        c.expect_zero(defects->alternating_rising);
                    });
                    run.run(suite, "alternating falling sum", p, [&](Check &c) {
                        if (!defects) {
                            throw std::runtime_error("factorial defects unavailable");
                        }
                        c.expect_zero(defects->alternating_falling);
                    });
                }
            }
        }
    }
}

void ad_expansion_checks(Runner &run, const std::string &suite)
{
    const std::vector<std::pair<Generator, Generator>> pairs{
        {Generator::Y(Rational(1, 2)), Generator::Y(Rational(3, 2))},
        {Generator::L(1), Generator::M(1)},
        {Generator::L(1), Generator::L(-1)},
        {Generator::Y(Rational(-1, 2)), Generator::L(2)},
        {Generator::M(0), Generator::L(0)},
        {Generator::L(-2), Generator::Y(Rational(5, 2))},
    };
    for (const auto &[x, y] : pairs) {
        run.run(suite, "ad expansion", {{"x", x.to_string()}, {"y", y.to_string()}}, [&](Check &c) {
            for (unsigned m = 0; m <= kMaxPower; ++m) {
                c.expect_zero(ad_power_expansion_defect(uea(x), uea(y), m), "m=" + std::to_string(m));
            }
        });
    }
}

void commutation_checks(Runner &run, const std::string &suite, const std::vector<Generator> &grid)
{
    const auto &as = run.config().a_samples;
    for (int id = 1; id <= 2; ++id) {
        for (const auto &tc : run.case_points(id)) {
            const auto [hl, el] = case_generators(tc);
            const UEAElement h = uea(hl);
            const UEAElement e = uea(el);
            const Rational s = index_scale(tc);
            const Params cp = case_params(tc);
            for (const auto &g : grid) {
                run.run(suite, "generator past factorials", with(cp, "x", g.to_string()), [&](Check &c) {
                    const UEAElement x = uea(g);
                    const Rational shift = s * g.index();
                    for (unsigned i = 0; i <= kMaxPower; ++i) {
                        for (const auto &a : as) {
                            const std::string inst = "i=" + std::to_string(i) + ", a=" + str(a);
                            c.expect_zero(x * rising_factorial(h, i, a) - rising_factorial(h, i, a - shift) * x,
                                          inst + " (rising)");
                            c.expect_zero(x * falling_factorial(h, i, a) - falling_factorial(h, i, a - shift) * x,
                                          inst + " (falling)");
                        }
                    }
                });
            }
            run.run(suite, "e^n past factorials", cp, [&](Check &c) {
                UEAElement en = uea_scalar(1);
                for (long n = 0; n <= 3; ++n) {
                    for (unsigned i = 0; i <= kMaxPower; ++i) {
                        for (const auto &a : as) {
                            const std::string inst = "n=" + str(n) + ", i=" + std::to_string(i) + ", a=" + str(a);
                            c.expect_zero(en * rising_factorial(h, i, a) - rising_factorial(h, i, a - Rational(n)) * en,
                                          inst + " (rising)");
                            c.expect_zero(
                                en * falling_factorial(h, i, a) - falling_factorial(h, i, a - Rational(n)) * en,
                                inst + " (falling)");
                        }
                    }
                    en = en * e;
                }
            });
            for (unsigned r = 0; r <= kMaxPower; ++r) {
                run.run(suite, "coproduct of h^[r]", with(cp, "r", std::to_string(r)), [&](Check &c) {
                    const Tensor lhs = coproduct0(falling_factorial(h, r));
                    for (const auto &a : as) {
                        Tensor rhs(2);
                        for (unsigned i = 0; i <= r; ++i) {
                            rhs.add_scaled(Tensor::tensor(falling_factorial(h, i, -a), falling_factorial(h, r - i, a)),
                                           binomial(Rational(static_cast<long>(r)), i));
                        }
                        c.expect_zero(lhs - rhs, "a=" + str(a));
                    }
                });
            }
        }
    }
}

void y_power_checks(Runner &run, const std::string &suite, const std::vector<Generator> &grid)
{
    std::vector<Generator> ys;
    std::copy_if(grid.begin(), grid.end(), std::back_inserter(ys),
                 [](const Generator &g) { return g.family() == Family::Y; });
    for (const auto &yp : ys) {
        run.run(suite, "Y_p past Y_q^s", {{"p", str(yp.index())}}, [&](Check &c) {
            for (const auto &yq : ys) {
                const UEAElement p = uea(yp);
                const UEAElement q = uea(yq);
                const UEAElement m = uea(Generator::M((yp.index() + yq.index()).to_long()));
                for (unsigned s = 0; s <= kMaxPower; ++s) {
                    UEAElement rhs = power(q, s) * p;
                    if (s > 0) {
                        rhs -= Rational(static_cast<long>(s)) * (yp.index() - yq.index()) * (power(q, s - 1) * m);
                    }
                    c.expect_zero(p * power(q, s) - rhs, "q=" + str(yq.index()) + ", s=" + std::to_string(s));
                }
            }
        });
    }
}

void transport_checks(Runner &run, const std::string &suite)
{
    const long r = run.config().index_range;
    std::vector<long> ints;
    for (long n = -r; n <= r; ++n) {
        ints.push_back(n);
    }
    std::vector<Rational> halves;
    for (long t = -(2 * r - 1); t <= 2 * r - 1; t += 2) {
        halves.emplace_back(t, 2);
    }
    const std::size_t points = std::max(ints.size(), halves.size());
    for (int id = 1; id <= 2; ++id) {
        for (const auto &tc : run.case_points(id)) {
            const TwistData d = build_twist(tc, run.config().order);
            for (const auto &a : run.config().a_samples) {
                for (std::size_t i = 0; i < points; ++i) {
                    TransportParams tp{a, ints[i % ints.size()], ints[(i + 3) % ints.size()],
                                       halves[i % halves.size()]};
                    Params p = case_params(tc);
                    p.insert(p.end(), {{"a", str(a)}, {"n", str(tp.n)}, {"k", str(tp.k)}, {"p", str(tp.p)}});
                    std::vector<NamedDefect> defects;
                    try {
                        defects = transport_identity_defects(d, tp);
                    } catch (const std::exception &ex) {
                        run.run(suite, "transport", p, [&](Check &c) { c.fail(std::string("error: ") + ex.what()); });
                        continue;
                    }
                    for (const auto &nd : defects) {
                        run.run(suite, nd.name, p, [&](Check &c) { c.expect_zero(nd.defect); });
                    }
                }
            }
        }
    }
}

void inverse_pair_checks(Runner &run, const std::string &suite)
{
    const auto &as = run.config().a_samples;
    for (int id = 1; id <= 3; ++id) {
        for (const auto &tc : run.case_points(id)) {
            const TwistData d = build_twist(tc, run.config().order);
            for (std::size_t i = 0; i < as.size(); ++i) {
                const Rational &a = as[i];
                const Rational &b = as[(i + 1) % as.size()];
                Params p = case_params(tc);
                p.insert(p.end(), {{"a", str(a)}, {"b", str(b)}});
                for (const auto &nd : inverse_pair_defects(d, a, b)) {
                    run.run(suite, nd.name, p, [&](Check &c) { c.expect_zero(nd.defect); });
                }
            }
        }
    }
}

void lemmas_suite(Runner &run)
{
    const std::string suite = "lemmas";
    const auto grid = generator_grid(run.config().index_range);
    factorial_checks(run, suite);
    ad_expansion_checks(run, suite);
    commutation_checks(run, suite, grid);
    y_power_checks(run, suite, grid);
    transport_checks(run, suite);
    inverse_pair_checks(run, suite);
}

// ---------------------------------------------------------------------------

void twist_suite(Runner &run)
{
    const std::string suite = "twist";
    const int N = run.config().order;
    for (int id = 1; id <= 3; ++id) {
        for (const auto &tc : run.case_points(id)) {
            const Params cp = case_params(tc);
            const TwistData d = build_twist(tc, N);
            std::optional<TwistDefects> td;
            run.run(suite, "cocycle condition", cp, [&](Check &c) {
                td = twist_defects(d);
                c.expect_zero(td->cocycle);
            });
            run.run(suite, "left counit", cp, [&](Check &c) {
                if (!td) {
                    throw std::runtime_error("twist defects unavailable");
                }
                c.expect_zero(td->left_counit);
            });
            run.run(suite, "right counit", cp, [&](Check &c) {
                if (!td) {
                    throw std::runtime_error("twist defects unavailable");
                }
                c.expect_zero(td->right_counit);
            });
            const Series one2 = Series::one(2, N);
            const Series one1 = Series::one(1, N);
            run.run(suite, "F scriptF = 1", cp, [&](Check &c) { c.expect_zero(d.F * d.scriptF - one2); });
            run.run(suite, "scriptF F = 1", cp, [&](Check &c) { c.expect_zero(d.scriptF * d.F - one2); });
            run.run(suite, "F^-1 = scriptF", cp, [&](Check &c) { c.expect_zero(invert(d.F) - d.scriptF); });
            run.run(suite, "v u = 1", cp, [&](Check &c) { c.expect_zero(d.v * d.u - one1); });
            run.run(suite, "u v = 1", cp, [&](Check &c) { c.expect_zero(d.u * d.v - one1); });
            for (const auto &a : run.config().a_samples) {
                const Params p = with(cp, "a", str(a));
                run.run(suite, "u_a = m(S0⊗Id)(F_a)", p,
                        [&](Check &c) { c.expect_zero(build_u(a, tc, N) - u_by_contraction(a, tc, N)); });
                run.run(suite, "v_a = m(Id⊗S0)(scriptF_a)", p,
                        [&](Check &c) { c.expect_zero(build_v(a, tc, N) - v_by_contraction(a, tc, N)); });
            }
        }
    }
}

void hopf_checks(Runner &run, const std::string &suite, const TwistData &d, const Params &p, const Generator &g)
{
    const UEAElement x = uea(g);
    std::optional<HopfAxiomDefects> hd;
    for (const char *name :
         {"twisted coassociativity", "twisted left counit", "twisted right counit", "twisted left antipode",
          "twisted right antipode"}) {
        run.run(suite, name, p, [&](Check &c) {
            if (!hd) {
                hd = twisted_hopf_defects(x, d);
            }
            const auto named = hd->named();
            const std::string key = std::string(name).substr(std::string("twisted ").size());
            for (const auto &nd : named) {
                if (nd.name == key) {
                    c.expect_zero(nd.defect);
                }
            }
        });
    }
    run.run(suite, "undeformed coproduct", p, [&](Check &c) {
        c.expect_zero(constant_part(delta_twisted(x, d)) - Series::embed(coproduct0(x), d.order));
    });
    run.run(suite, "undeformed antipode", p, [&](Check &c) {
        c.expect_zero(constant_part(antipode_twisted(x, d)) - Series::embed(antipode0(x), d.order));
    });
}

void theorem_suite(Runner &run, int id)
{
    const std::string suite = id == 1 ? "theorem1" : "theorem2";
    const auto grid = generator_grid(run.config().index_range);
    for (const auto &tc : run.case_points(id)) {
        const TwistData d = build_twist(tc, run.config().order);
        for (const auto &g : grid) {
            const Params p = with(case_params(tc), "g", g.to_string());
            run.run(suite, "coproduct closed form", p, [&](Check &c) {
                c.expect_zero(delta_twisted(uea(g), d) - closed_form_delta(g, d));
            });
            run.run(suite, "antipode closed form", p, [&](Check &c) {
                c.expect_zero(antipode_twisted(uea(g), d) - closed_form_antipode(g, d));
            });
            hopf_checks(run, suite, d, p, g);
        }
    }
}

void case3_suite(Runner &run)
{
    const std::string suite = "case3-hopf";
    const auto grid = generator_grid(run.config().index_range);
    for (const auto &tc : run.case_points(3)) {
        const TwistData d = build_twist(tc, run.config().order);
        for (const auto &g : grid) {
            hopf_checks(run, suite, d, with(case_params(tc), "g", g.to_string()), g);
        }
    }
}

std::size_t suite_rank(const std::string &name)
{
    const auto &names = suite_names();
    const auto it = std::find(names.begin(), names.end(), name);
    return static_cast<std::size_t>(it - names.begin());
}

bool selected(const SuiteConfig &cfg, const std::string &name)
{
    return std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end();
}

} // namespace

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"bialgebra", "pbw-hopf", "lemmas",    "twist",
                                                "theorem1",  "theorem2", "case3-hopf"};
    return names;
}

SuiteConfig SuiteConfig::defaults()
{
    SuiteConfig cfg;
    cfg.suites = suite_names();
    return cfg;
}

std::vector<std::string> config_errors(const SuiteConfig &cfg)
{
    std::vector<std::string> errors;
    for (const auto &s : cfg.suites) {
        if (suite_rank(s) == suite_names().size()) {
            errors.push_back("unknown suite '" + s + "'");
        }
    }
    for (long n0 : cfg.n0_values) {
        if (n0 == 0) {
            errors.emplace_back("n0 must be nonzero");
        }
    }
    if (cfg.order < 0) {
        errors.emplace_back("order must be nonnegative");
    }
    if (cfg.order < 2 && (selected(cfg, "theorem1") || selected(cfg, "theorem2"))) {
        errors.emplace_back("theorem suites need order >= 2");
    }
    if (cfg.index_range < 1) {
        errors.emplace_back("index range must be at least 1");
    }
    if (selected(cfg, "theorem2")
        && std::none_of(cfg.n0_values.begin(), cfg.n0_values.end(), [](long n0) { return n0 % 2 != 0; })) {
        errors.emplace_back("theorem2 needs an odd n0");
    }
    return errors;
}

std::size_t Report::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckRecord &c) { return c.passed; }));
}

std::size_t Report::failed() const
{
    return checks.size() - passed();
}

Report run_suite(const SuiteConfig &cfg)
{
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.config = cfg;

    const auto errors = config_errors(cfg);
    if (!errors.empty()) {
        for (const auto &e : errors) {
            report.checks.push_back({"config", "validation", {}, false, Defect{e, {}}});
        }
        return report;
    }

    std::optional<ScopedBracketRule> corruption;
    if (cfg.corrupt_bracket) {
        corruption.emplace(&corrupted_bracket);
    }

    Runner run(cfg);
    const std::vector<std::pair<std::string, std::function<void(Runner &)>>> suites{
        {"bialgebra", bialgebra_suite},
        {"pbw-hopf", pbw_hopf_suite},
        {"lemmas", lemmas_suite},
        {"twist", twist_suite},
        {"theorem1", [](Runner &r) { theorem_suite(r, 1); }},
        {"theorem2", [](Runner &r) { theorem_suite(r, 2); }},
        {"case3-hopf", case3_suite},
    };
    for (const auto &[name, body] : suites) {
        if (selected(cfg, name)) {
            body(run);
        }
    }
    report.checks = run.take();
    std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckRecord &a, const CheckRecord &b) {
        const auto ra = suite_rank(a.suite);
        const auto rb = suite_rank(b.suite);
        if (ra != rb) {
            return ra < rb;
        }
        if (a.name != b.name) {
            return a.name < b.name;
        }
        return a.params < b.params;
    });

    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------

using json = nlohmann::ordered_json;

std::string to_json(const Report &r, int indent)
{
    json cfg;
    cfg["suites"] = r.config.suites;
    cfg["n0_values"] = r.config.n0_values;
    cfg["order"] = r.config.order;
    cfg["index_range"] = r.config.index_range;
    json as = json::array();
    for (const auto &a : r.config.a_samples) {
        as.push_back(a.to_string());
    }
    cfg["a_samples"] = as;
    cfg["seed"] = r.config.seed;
    cfg["corrupt_bracket"] = r.config.corrupt_bracket;

    json checks = json::array();
    for (const auto &c : r.checks) {
        json rec;
        rec["suite"] = c.suite;
        rec["name"] = c.name;
        json params = json::object();
        for (const auto &[k, v] : c.params) {
            params[k] = v;
        }
        rec["params"] = params;
        rec["status"] = c.passed ? "pass" : "fail";
        if (!c.passed) {
            json terms = json::array();
            for (const auto &t : c.defect.terms) {
                terms.push_back({{"t", t.t_power}, {"legs", t.legs}, {"coeff", t.coeff}});
            }
            rec["defect"] = {{"text", c.defect.text}, {"terms", terms}};
        }
        checks.push_back(std::move(rec));
    }

    json out;
    out["config"] = cfg;
    out["checks"] = checks;
    out["summary"] = {{"passed", r.passed()}, {"failed", r.failed()}, {"status", r.ok() ? "pass" : "fail"}};
    out["runtime_seconds"] = r.runtime_seconds;
    return out.dump(indent);
}

Report report_from_json(const std::string &text)
{
    const json in = json::parse(text);
    Report r;
    const json &cfg = in.at("config");
    r.config.suites = cfg.at("suites").get<std::vector<std::string>>();
    r.config.n0_values = cfg.at("n0_values").get<std::vector<long>>();
    r.config.order = cfg.at("order").get<int>();
    r.config.index_range = cfg.at("index_range").get<long>();
    r.config.a_samples.clear();
    for (const auto &a : cfg.at("a_samples")) {
        r.config.a_samples.push_back(Rational::parse(a.get<std::string>()));
    }
    r.config.seed = cfg.at("seed").get<std::uint64_t>();
    r.config.corrupt_bracket = cfg.at("corrupt_bracket").get<bool>();

    for (const auto &rec : in.at("checks")) {
        CheckRecord c;
        c.suite = rec.at("suite").get<std::string>();
        c.name = rec.at("name").get<std::string>();
        for (const auto &[k, v] : rec.at("params").items()) {
            c.params.emplace_back(k, v.get<std::string>());
        }
        const auto status = rec.at("status").get<std::string>();
        if (status != "pass" && status != "fail") {
            throw std::invalid_argument("unknown check status '" + status + "'");
        }
        c.passed = status == "pass";
        if (rec.contains("defect")) {
            const json &d = rec.at("defect");
            c.defect.text = d.at("text").get<std::string>();
            for (const auto &t : d.at("terms")) {
                c.defect.terms.push_back({t.at("t").get<int>(), t.at("legs").get<std::vector<std::string>>(),
                                          t.at("coeff").get<std::string>()});
            }
        }
        r.checks.push_back(std::move(c));
    }
    r.runtime_seconds = in.at("runtime_seconds").get<double>();
    return r;
}

std::string to_text(const Report &r)
{
    std::ostringstream out;
    for (const auto &c : r.checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.suite << "  " << c.name;
        for (const auto &[k, v] : c.params) {
            out << "  " << k << "=" << v;
        }
        out << '\n';
        if (!c.passed) {
            out << "      defect: " << c.defect.text << '\n';
        }
    }
    out << "summary: " << r.passed() << " passed, " << r.failed() << " failed\n";
    return out.str();
}

} // namespace svq
