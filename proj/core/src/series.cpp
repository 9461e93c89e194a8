#include <svq/series.hpp>

#include "render_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace svq
{

Series::Series(int degree, int order) : degree_(degree)
{
    if (order < 0) {
        throw std::invalid_argument("Series order must be nonnegative");
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Tensor(degree));
}

Series Series::one(int degree, int order)
{
    Series s(degree, order);
    s.coeffs_[0] = Tensor::identity(degree);
    return s;
}

Series Series::embed(const Tensor &x, int order)
{
    Series s(x.degree(), order);
    s.coeffs_[0] = x;
    return s;
}

Series Series::embed(const UEAElement &x, int order)
{
    return embed(Tensor::from(x), order);
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Tensor &c) { return c.is_zero(); });
}

void Series::add_term(int k, const Tensor &x, const Rational &c)
{
    if (k < 0 || k > order()) {
        return;
    }
    coeffs_[static_cast<std::size_t>(k)].add_scaled(x, c);
}

Series Series::truncated(int order) const
{
    if (order > this->order()) {
        throw std::invalid_argument("Series::truncated cannot raise the order");
    }
    Series out(degree_, order);
    std::copy_n(coeffs_.begin(), order + 1, out.coeffs_.begin());
    return out;
}

Series Series::shifted(int k) const
{
    Series out(degree_, order());
    for (int i = 0; i + k <= order(); ++i) {
        out.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return out;
}

Series Series::map_coeffs(const std::function<Tensor(const Tensor &)> &f, int new_degree) const
{
    Series out(new_degree, order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out.coeffs_[k] = f(coeffs_[k]);
        if (out.coeffs_[k].degree() != new_degree) {
            throw std::invalid_argument("Series::map_coeffs: image has wrong degree");
        }
    }
    return out;
}

void Series::require_same_degree(const Series &o) const
{
    if (o.degree_ != degree_) {
        throw std::invalid_argument("Series: degree mismatch (" + std::to_string(degree_) + " vs "
                                    + std::to_string(o.degree_) + ")");
    }
}

Series &Series::operator+=(const Series &o)
{
    require_same_degree(o);
    if (o.order() < order()) {
        coeffs_.resize(o.coeffs_.size(), Tensor(degree_));
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
    }
    return *this;
}

Series &Series::operator-=(const Series &o)
{
    require_same_degree(o);
    if (o.order() < order()) {
        coeffs_.resize(o.coeffs_.size(), Tensor(degree_));
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
}

Series &Series::operator*=(const Rational &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

Series operator*(const Series &a, const Series &b)
{
    a.require_same_degree(b);
    const int n = std::min(a.order(), b.order());
    Series out(a.degree(), n);
    for (int i = 0; i <= n; ++i) {
        const Tensor &ai = a.coeff(i);
        if (ai.is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            const Tensor &bj = b.coeff(j);
            if (bj.is_zero()) {
                continue;
            }
            out.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return out;
}

std::string Series::to_string() const
{
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        const Tensor &c = coeffs_[static_cast<std::size_t>(k)];
        const std::string suffix = k == 0 ? "" : (k == 1 ? "·t" : "·t^" + std::to_string(k));
        for (const auto &[key, v] : c.terms()) {
            std::string basis;
            for (int i = 0; i < degree_; ++i) {
                if (i) {
                    basis += "⊗";
                }
                basis += key[static_cast<std::size_t>(i)].to_string();
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += detail::dotted_term(v, basis);
            out += suffix;
        }
    }
    return out.empty() ? "0" : out;
}

Series invert(const Series &s)
{
    if (s.coeff(0) != Tensor::identity(s.degree())) {
        throw std::invalid_argument("invert: constant term is not the identity");
    }
    const int n = s.order();
    Series x = Series::one(s.degree(), n);
    for (int k = 1; k <= n; ++k) {
        Tensor acc(s.degree());
        for (int j = 1; j <= k; ++j) {
            if (s.coeff(j).is_zero() || x.coeff(k - j).is_zero()) {
                continue;
            }
            acc -= s.coeff(j) * x.coeff(k - j);
        }
        x.add_term(k, acc);
    }
    return x;
}

Series binomial_series(const UEAElement &e, const Rational &alpha, int order)
{
    Series out(1, order);
    UEAElement e_power = uea_scalar(1);
    for (int k = 0; k <= order; ++k) {
        const Rational c = binomial(alpha, static_cast<unsigned>(k)) * Rational(k % 2 == 0 ? 1 : -1);
        if (!c.is_zero()) {
            out.add_term(k, Tensor::from(e_power), c);
        }
        if (k < order) {
            e_power = e_power * e;
        }
    }
    return out;
}

Series tensor_apply(LegMap f, int leg, const Series &s)
{
    const int d = s.degree();
    if (leg < 0 || leg >= d) {
        throw std::invalid_argument("tensor_apply: illegal leg " + std::to_string(leg) + " for degree "
                                    + std::to_string(d));
    }
    switch (f) {
        case LegMap::Identity:
            return s;
        case LegMap::Coproduct0:
            if (d + 1 > kMaxTensorDegree) {
                throw std::invalid_argument("tensor_apply: coproduct would exceed degree 3");
            }
            return s.map_coeffs(
                [leg](const Tensor &c) {
                    return map_leg(c, leg, 2, [](const Monomial &m) { return coproduct0(m); });
                },
                d + 1);
        case LegMap::Antipode0:
            return s.map_coeffs(
                [leg](const Tensor &c) {
                    return map_leg(c, leg, 1, [](const Monomial &m) { return Tensor::from(antipode0(m)); });
                },
                d);
        case LegMap::Counit:
            if (d < 2) {
                throw std::invalid_argument("tensor_apply: counit needs degree >= 2");
            }
            return s.map_coeffs([leg](const Tensor &c) { return counit_leg(c, leg); }, d - 1);
    }
    return s;
}

Series apply_leg(const Series &s, int leg, int image_degree, const std::function<Series(const Monomial &, int)> &f)
{
    const int d = s.degree();
    if (leg < 0 || leg >= d) {
        throw std::invalid_argument("apply_leg: illegal leg");
    }
    const int n = s.order();
    Series out(d - 1 + image_degree, n);
    for (int j = 0; j <= n; ++j) {
        for (const auto &[key, c] : s.coeff(j).terms()) {
            const Series image = f(key[static_cast<std::size_t>(leg)], n - j);
            if (image.degree() != image_degree) {
                throw std::invalid_argument("apply_leg: image has wrong degree");
            }
            for (int i = 0; i + j <= n; ++i) {
                const Tensor &ic = image.coeff(i);
                if (ic.is_zero()) {
                    continue;
                }
                // Splice the image legs into position `leg`.
                Tensor single(d);
                single.add(key, c);
                out.add_term(i + j, map_leg(single, leg, image_degree, [&ic](const Monomial &) { return ic; }));
            }
        }
    }
    return out;
}

Series tensor_product(const Series &a, const Series &b)
{
    const int n = std::min(a.order(), b.order());
    Series out(a.degree() + b.degree(), n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) {
                continue;
            }
            out.add_term(i + j, tensor_product(a.coeff(i), b.coeff(j)));
        }
    }
    return out;
}

Series multiply_legs(const Series &s)
{
    return s.map_coeffs([](const Tensor &c) { return Tensor::from(multiply_legs(c)); }, 1);
}

} // namespace svq
