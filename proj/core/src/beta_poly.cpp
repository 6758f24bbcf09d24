#include "conekit/beta_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conekit {

// ---------------------------------------------------------------------------
// RYPoly

RYPoly RYPoly::from_terms(unsigned ell, std::span<const RYTerm> terms) {
    RYPoly p(ell);
    for (const auto& t : terms) {
        if (t.r_power % 2 != 0)
            throw std::invalid_argument("RYPoly: odd power of r (the operator would leave the polynomial ring)");
        if (t.y_exps.size() != ell)
            throw std::invalid_argument("RYPoly: y multi-index arity mismatch");
        size_t j = t.r_power / 2;
        if (p.layers_.size() <= j) p.layers_.resize(j + 1, MultiPoly(ell));
        p.layers_[j].add_term(t.y_exps, t.coeff);
    }
    p.trim();
    return p;
}

bool RYPoly::is_zero() const {
    for (const auto& l : layers_)
        if (!l.is_zero()) return false;
    return true;
}

void RYPoly::set_layer(size_t j, MultiPoly p) {
    if (p.nvars() != ell_) throw std::invalid_argument("RYPoly::set_layer: arity mismatch");
    if (layers_.size() <= j) layers_.resize(j + 1, MultiPoly(ell_));
    layers_[j] = std::move(p);
    trim();
}

void RYPoly::trim() {
    while (!layers_.empty() && layers_.back().is_zero()) layers_.pop_back();
}

RYPoly RYPoly::operator+(const RYPoly& o) const {
    if (ell_ != o.ell_) throw std::invalid_argument("RYPoly::operator+: arity mismatch");
    RYPoly r(ell_);
    r.layers_.resize(std::max(layers_.size(), o.layers_.size()), MultiPoly(ell_));
    for (size_t j = 0; j < r.layers_.size(); ++j) {
        if (j < layers_.size()) r.layers_[j] = r.layers_[j] + layers_[j];
        if (j < o.layers_.size()) r.layers_[j] = r.layers_[j] + o.layers_[j];
    }
    r.trim();
    return r;
}

RYPoly RYPoly::operator-(const RYPoly& o) const { return *this + (o * Rational(-1)); }

RYPoly RYPoly::operator*(const Rational& c) const {
    RYPoly r(ell_);
    r.layers_.reserve(layers_.size());
    for (const auto& l : layers_) r.layers_.push_back(l * c);
    r.trim();
    return r;
}

bool RYPoly::operator==(const RYPoly& o) const {
    return ell_ == o.ell_ && layers_ == o.layers_;
}

double RYPoly::eval(double r, std::span<const double> y) const {
    const double r2 = r * r;
    double sum = 0.0, pw = 1.0;
    for (const auto& l : layers_) {
        if (!l.is_zero()) sum += pw * l.eval(y);
        pw *= r2;
    }
    return sum;
}

std::vector<double> RYPoly::eval_gradient(double r, std::span<const double> y) const {
    std::vector<double> g(1 + ell_, 0.0);
    const double r2 = r * r;
    double pw = 1.0;  // r^{2j}
    for (size_t j = 0; j < layers_.size(); ++j) {
        const auto& l = layers_[j];
        if (!l.is_zero()) {
            if (j > 0) g[0] += 2.0 * j * (pw / r) * l.eval(y);
            for (unsigned i = 0; i < ell_; ++i) g[1 + i] += pw * l.derivative(i).eval(y);
        }
        pw *= r2;
    }
    return g;
}

MultiPoly RYPoly::trace() const {
    MultiPoly t(1 + ell_);
    for (size_t j = 0; j < layers_.size(); ++j) {
        for (const auto& [m, c] : layers_[j].terms()) {
            Monomial exps(1 + ell_);
            exps[0] = static_cast<unsigned>(2 * j);
            for (unsigned i = 0; i < ell_; ++i) exps[1 + i] = m[i];
            t.add_term(exps, c);
        }
    }
    return t;
}

RYPoly apply_beta_laplacian(const RYPoly& h, const Rational& beta) {
    RYPoly out(h.ell());
    const auto& layers = h.layers();
    if (layers.empty()) return out;
    for (size_t j = 0; j < layers.size(); ++j) {
        MultiPoly term = layers[j].laplacian();
        if (j + 1 < layers.size()) {
            Rational c = Rational(2 * (j + 1)) * (Rational(2 * (j + 1)) + beta);
            term = term + layers[j + 1] * c;
        }
        out.set_layer(j, std::move(term));
    }
    return out;
}

// ---------------------------------------------------------------------------
// BetaPolynomial

namespace {

std::vector<MultiPoly> laplacian_powers(const MultiPoly& p0) {
    std::vector<MultiPoly> powers{p0};
    while (!powers.back().is_zero()) {
        MultiPoly next = powers.back().laplacian();
        if (next.is_zero()) break;
        powers.push_back(std::move(next));
    }
    return powers;
}

}  // namespace

BetaPolynomial BetaPolynomial::generate(const Rational& beta, unsigned ell, const MultiPoly& p0) {
    if (beta <= 0) throw std::invalid_argument("BetaPolynomial::generate: beta must be > 0");
    BetaPolynomial h = generate_symbolic(ell, p0);
    h.beta_ = beta;
    return h;
}

BetaPolynomial BetaPolynomial::generate_symbolic(unsigned ell, const MultiPoly& p0) {
    if (p0.nvars() != ell)
        throw std::invalid_argument("BetaPolynomial::generate: p0 arity must equal ell");
    if (!p0.is_homogeneous())
        throw std::invalid_argument("BetaPolynomial::generate: p0 must be homogeneous");
    BetaPolynomial h;
    h.ell_ = ell;
    h.lap_powers_ = laplacian_powers(p0);
    return h;
}

const Rational& BetaPolynomial::beta() const {
    if (!beta_) throw std::logic_error("BetaPolynomial: beta is symbolic");
    return *beta_;
}

double BetaPolynomial::beta_double() const { return to_double(beta()); }

int BetaPolynomial::degree() const {
    if (is_zero()) return 0;
    return lap_powers_[0].degree();
}

const MultiPoly& BetaPolynomial::leading_layer() const {
    static const MultiPoly empty;
    return lap_powers_.empty() ? empty : lap_powers_[0];
}

MultiPoly BetaPolynomial::layer(size_t j) const {
    if (j >= lap_powers_.size()) return MultiPoly(ell_);
    Rational c = 1;
    const Rational& b = beta();
    for (size_t i = 1; i <= j; ++i) c *= -Rational(1) / (Rational(2 * i) * (Rational(2 * i) + b));
    return lap_powers_[j] * c;
}

RYPoly BetaPolynomial::as_rypoly() const {
    RYPoly p(ell_);
    p.layers_.reserve(lap_powers_.size());
    for (size_t j = 0; j < lap_powers_.size(); ++j) p.layers_.push_back(layer(j));
    p.trim();
    return p;
}

BetaPolynomial::SymbolicLayer BetaPolynomial::symbolic_layer(size_t j) const {
    SymbolicLayer out;
    if (j >= lap_powers_.size() || lap_powers_[j].is_zero()) {
        out.num = 0;
        out.poly = MultiPoly(ell_);
        return out;
    }
    Rational content = lap_powers_[j].content();
    out.poly = lap_powers_[j] * (Rational(1) / content);
    Rational num = content;
    for (size_t i = 1; i <= j; ++i) {
        num /= -Rational(2 * i);
        out.den_offsets.push_back(static_cast<int>(2 * i));
    }
    out.num = num;
    std::sort(out.den_offsets.begin(), out.den_offsets.end());
    return out;
}

BetaPolynomial BetaPolynomial::scaled(const Rational& c) const {
    BetaPolynomial out = *this;
    for (auto& p : out.lap_powers_) p = p * c;
    return out;
}

double BetaPolynomial::eval(double r, std::span<const double> y) const {
    return as_rypoly().eval(r, y);
}

bool BetaPolynomial::operator==(const BetaPolynomial& o) const {
    return beta_ == o.beta_ && ell_ == o.ell_ && lap_powers_ == o.lap_powers_;
}

// ---------------------------------------------------------------------------
// CompiledRY

CompiledRY::CompiledRY(const RYPoly& p) {
    layers_.reserve(p.layers().size());
    for (const auto& l : p.layers()) {
        std::vector<Term> terms;
        terms.reserve(l.term_count());
        for (const auto& [m, c] : l.terms()) terms.push_back({m, to_double(c)});
        layers_.push_back(std::move(terms));
    }
}

double CompiledRY::eval(std::span<const double> pt) const {
    const double r2 = pt[0] * pt[0];
    double sum = 0.0, pw = 1.0;
    for (const auto& layer : layers_) {
        double ls = 0.0;
        for (const auto& t : layer) {
            double v = t.c;
            for (size_t i = 0; i < t.exps.size(); ++i)
                for (unsigned k = 0; k < t.exps[i]; ++k) v *= pt[1 + i];
            ls += v;
        }
        sum += pw * ls;
        pw *= r2;
    }
    return sum;
}

double CompiledRY::eval(double r, std::span<const double> y) const {
    const double r2 = r * r;
    double sum = 0.0, pw = 1.0;
    for (const auto& layer : layers_) {
        double ls = 0.0;
        for (const auto& t : layer) {
            double v = t.c;
            for (size_t i = 0; i < t.exps.size(); ++i)
                for (unsigned k = 0; k < t.exps[i]; ++k) v *= y[i];
            ls += v;
        }
        sum += pw * ls;
        pw *= r2;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Inner products and norms

namespace {

double moments_of(const MultiPoly& ambient, int ell, double beta) {
    double sum = 0.0;
    for (const auto& [m, c] : ambient.terms())
        sum += to_double(c) * half_sphere_monomial_moment(ell, beta, m);
    return sum;
}

}  // namespace

HalfSphereMeasure HalfSphereMeasure::create(int ell, double beta, int order) {
    HalfSphereMeasure m;
    m.ell = ell;
    m.beta = beta;
    m.rule = half_sphere_rule(ell, beta, order);
    m.total_mass = 0.0;
    for (double w : m.rule.weights) m.total_mass += w;
    const Monomial zero(static_cast<size_t>(ell + 1), 0u);
    const double exact = half_sphere_monomial_moment(ell, beta, zero);
    if (std::abs(m.total_mass - exact) > 1e-10 * exact)
        throw std::runtime_error("HalfSphereMeasure: quadrature mass does not match closed form");
    return m;
}

InnerProduct sphere_inner_product(const RYPoly& h1, const RYPoly& h2,
                                  const HalfSphereMeasure& measure) {
    if (static_cast<int>(h1.ell()) != measure.ell || static_cast<int>(h2.ell()) != measure.ell)
        throw std::invalid_argument("sphere_inner_product: dimension mismatch");

    InnerProduct out;
    const CompiledRY f1(h1);
    const CompiledRY f2(h2);
    double quad = 0.0;
    for (size_t k = 0; k < measure.rule.points.size(); ++k) {
        const auto& pt = measure.rule.points[k];
        quad += measure.rule.weights[k] * f1.eval(pt) * f2.eval(pt);
    }
    out.via_quadrature = quad;

    const MultiPoly t1 = h1.trace(), t2 = h2.trace();
    out.via_moments = moments_of(t1 * t2, measure.ell, measure.beta);
    out.value = out.via_moments;

    const double n1 = std::sqrt(std::max(0.0, moments_of(t1 * t1, measure.ell, measure.beta)));
    const double n2 = std::sqrt(std::max(0.0, moments_of(t2 * t2, measure.ell, measure.beta)));
    const double scale = n1 * n2;
    out.rel_gap = scale > 0.0 ? std::abs(out.via_quadrature - out.via_moments) / scale : 0.0;
    if (out.rel_gap > 1e-6)
        throw std::runtime_error("sphere_inner_product: quadrature and moment routes disagree");
    return out;
}

InnerProduct sphere_inner_product(const BetaPolynomial& h1, const BetaPolynomial& h2,
                                  const HalfSphereMeasure& measure) {
    for (const BetaPolynomial* h : {&h1, &h2}) {
        if (h->has_symbolic_beta())
            throw std::invalid_argument("sphere_inner_product: beta must be numeric");
        if (std::abs(to_double(h->beta()) - measure.beta) > 1e-12 * (1.0 + measure.beta))
            throw std::invalid_argument("sphere_inner_product: polynomial beta does not match the measure");
    }
    return sphere_inner_product(h1.as_rypoly(), h2.as_rypoly(), measure);
}

BallL2 weighted_ball_l2(const BetaPolynomial& h, double R, int quad_points) {
    if (R <= 0) throw std::invalid_argument("weighted_ball_l2: R must be > 0");
    const double beta = to_double(h.beta());
    const int ell = static_cast<int>(h.ell());
    BallL2 out;

    const RYPoly p = h.as_rypoly();
    const MultiPoly t = p.trace();
    const double nq_sq = moments_of(t * t, ell, beta);
    const double power = ell + 2 + beta + 2.0 * h.degree();
    out.analytic = nq_sq / power * std::pow(R, power);

    const CompiledRY f(p);
    Cubature ball = half_ball_rule(ell, beta, R, quad_points);
    double quad = 0.0;
    for (size_t k = 0; k < ball.points.size(); ++k) {
        double v = f.eval(ball.points[k]);
        quad += ball.weights[k] * v * v;
    }
    out.quadrature = quad;
    out.rel_gap = std::abs(out.analytic - out.quadrature) /
                  (std::max(std::abs(out.analytic), std::abs(out.quadrature)) + 1e-300);
    return out;
}

double spherical_eigen_check(const BetaPolynomial& h, int order) {
    const double beta = to_double(h.beta());
    const int ell = static_cast<int>(h.ell());
    const int q = h.degree();
    if (h.is_zero()) return 0.0;

    HalfSphereMeasure measure = HalfSphereMeasure::create(ell, beta, order);
    const RYPoly hp = h.as_rypoly();
    const double eigen = q * (q + ell + beta);

    // battery of smooth test functions (even in r, arbitrary in y)
    std::vector<RYPoly> tests;
    {
        RYPoly one(ell);
        one.set_layer(0, MultiPoly::constant(ell, 1));
        tests.push_back(one);
        RYPoly r2(ell);
        r2.set_layer(1, MultiPoly::constant(ell, 1));
        tests.push_back(r2);
        for (unsigned i = 0; i < h.ell(); ++i) {
            RYPoly yi(ell);
            yi.set_layer(0, MultiPoly::variable(ell, i));
            tests.push_back(yi);
            RYPoly yi2(ell);
            yi2.set_layer(0, MultiPoly::variable(ell, i) * MultiPoly::variable(ell, i));
            tests.push_back(yi2);
            RYPoly yi3(ell);
            yi3.set_layer(0, MultiPoly::variable(ell, i) * MultiPoly::variable(ell, i) *
                                 MultiPoly::variable(ell, i));
            tests.push_back(yi3);
        }
        tests.push_back(hp);
    }

    const auto norm_of = [&](const RYPoly& f) {
        const MultiPoly t = f.trace();
        return std::sqrt(std::max(1e-300, moments_of(t * t, ell, beta)));
    };
    const double nh = norm_of(hp);

    double worst = 0.0;
    for (const auto& zeta : tests) {
        double grad_side = 0.0, mass_side = 0.0;
        for (size_t k = 0; k < measure.rule.points.size(); ++k) {
            const auto& pt = measure.rule.points[k];
            const double w = measure.rule.weights[k];
            auto gh = hp.eval_gradient(pt[0], std::span<const double>(pt).subspan(1));
            auto gz = zeta.eval_gradient(pt[0], std::span<const double>(pt).subspan(1));
            double gh_dot_w = 0.0, gz_dot_w = 0.0, gh_dot_gz = 0.0;
            for (size_t i = 0; i < pt.size(); ++i) {
                gh_dot_w += gh[i] * pt[i];
                gz_dot_w += gz[i] * pt[i];
                gh_dot_gz += gh[i] * gz[i];
            }
            // tangential parts: subtract the radial components
            grad_side += w * (gh_dot_gz - gh_dot_w * gz_dot_w);
            double hv = hp.eval(pt[0], std::span<const double>(pt).subspan(1));
            double zv = zeta.eval(pt[0], std::span<const double>(pt).subspan(1));
            mass_side += w * hv * zv;
        }
        const double scale = nh * norm_of(zeta) * (1.0 + eigen);
        worst = std::max(worst, std::abs(grad_side - eigen * mass_side) / scale);
    }
    return worst;
}

}  // namespace conekit
