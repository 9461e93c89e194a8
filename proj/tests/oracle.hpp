#ifndef SVQ_TESTS_ORACLE_HPP
#define SVQ_TESTS_ORACLE_HPP

// Slow reference implementations used to cross-check the library. They are
// written from the defining formulas and share no code paths with svq.

#include <svq/enveloping.hpp>
#include <svq/lie.hpp>

#include <map>
#include <vector>

namespace oracle
{

using svq::Family;
using svq::Generator;
using svq::Rational;

inline svq::LieElement bracket(const Generator &x, const Generator &y)
{
    const Rational m = x.index();
    const Rational n = y.index();
    const auto fx = x.family();
    const auto fy = y.family();
    svq::LieElement out;
    if (fx == Family::L && fy == Family::L) {
        out.add(Generator::L((m + n).to_long()), n - m);
    } else if (fx == Family::L && fy == Family::M) {
        out.add(Generator::M((m + n).to_long()), n);
    } else if (fx == Family::M && fy == Family::L) {
        out.add(Generator::M((m + n).to_long()), -m);
    } else if (fx == Family::L && fy == Family::Y) {
        out.add(Generator::Y(m + n), n - m / Rational(2));
    } else if (fx == Family::Y && fy == Family::L) {
        out.add(Generator::Y(m + n), -(m - n / Rational(2)));
    } else if (fx == Family::Y && fy == Family::Y) {
        out.add(Generator::M((m + n).to_long()), n - m);
    }
    return out;
}

using Word = std::vector<Generator>;
using WordSum = std::map<Word, Rational>;

inline void accumulate(WordSum &s, const Word &w, const Rational &c)
{
    auto &slot = s[w];
    slot += c;
    if (slot.is_zero()) {
        s.erase(w);
    }
}

// Straightens by always rewriting the rightmost descent, the opposite of the
// library's strategy, without memoization.
inline svq::UEAElement normalize(const WordSum &input)
{
    WordSum pending = input;
    svq::UEAElement out;
    while (!pending.empty()) {
        const auto [w, c] = *pending.begin();
        pending.erase(pending.begin());
        std::size_t d = w.size();
        for (std::size_t i = w.size(); i-- > 1;) {
            if (w[i] < w[i - 1]) {
                d = i - 1;
                break;
            }
        }
        if (d == w.size()) {
            out.add(svq::Monomial(w), c);
            continue;
        }
        Word swapped = w;
        std::swap(swapped[d], swapped[d + 1]);
        accumulate(pending, swapped, c);
        for (const auto &[g, bc] : oracle::bracket(w[d], w[d + 1])) {
            Word contracted(w.begin(), w.begin() + static_cast<long>(d));
            contracted.push_back(g);
            contracted.insert(contracted.end(), w.begin() + static_cast<long>(d) + 2, w.end());
            accumulate(pending, contracted, c * bc);
        }
    }
    return out;
}

inline svq::UEAElement normalize(const Word &w)
{
    return normalize(WordSum{{w, Rational(1)}});
}

inline svq::UEAElement product(const svq::UEAElement &a, const svq::UEAElement &b)
{
    WordSum s;
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            Word w = ma.word();
            w.insert(w.end(), mb.word().begin(), mb.word().end());
            accumulate(s, w, ca * cb);
        }
    }
    return normalize(s);
}

} // namespace oracle

#endif
