#include "conekit/multipoly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace conekit {

namespace {

void check_arity(unsigned a, unsigned b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": variable count mismatch");
}

}  // namespace

MultiPoly MultiPoly::constant(unsigned nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index) {
    if (index >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    return monomial(std::move(m), 1);
}

MultiPoly MultiPoly::monomial(Monomial exps, const Rational& c) {
    MultiPoly p(static_cast<unsigned>(exps.size()));
    p.add_term(exps, c);
    return p;
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
        if (t > d) d = t;
    }
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
        if (d < 0) d = t;
        else if (t != d) return false;
    }
    return true;
}

void MultiPoly::add_term(const Monomial& exps, const Rational& c) {
    if (exps.size() != nvars_) throw std::invalid_argument("MultiPoly::add_term: wrong arity");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coefficient(const Monomial& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_arity(nvars_, o.nvars_, "MultiPoly::operator+");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_arity(nvars_, o.nvars_, "MultiPoly::operator-");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_arity(nvars_, o.nvars_, "MultiPoly::operator*");
    MultiPoly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

MultiPoly MultiPoly::operator-() const { return *this * Rational(-1); }

MultiPoly MultiPoly::derivative(unsigned var) const {
    if (var >= nvars_) throw std::invalid_argument("MultiPoly::derivative: index out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

MultiPoly MultiPoly::laplacian() const {
    MultiPoly r(nvars_);
    for (unsigned v = 0; v < nvars_; ++v) r = r + derivative(v).derivative(v);
    return r;
}

double MultiPoly::eval(std::span<const double> x) const {
    if (x.size() != nvars_) throw std::invalid_argument("MultiPoly::eval: wrong point arity");
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (unsigned i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < m[i]; ++k) t *= x[i];
        }
        sum += t;
    }
    return sum;
}

Rational MultiPoly::eval_exact(std::span<const Rational> x) const {
    if (x.size() != nvars_) throw std::invalid_argument("MultiPoly::eval_exact: wrong point arity");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < m[i]; ++k) t *= x[i];
        }
        sum += t;
    }
    return sum;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return 0;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(boost::multiprecision::numerator(c)));
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    }
    Rational content(num_gcd, den_lcm);
    // sign convention: leading (lex-largest) coefficient positive
    if (terms_.rbegin()->second < 0) content = -content;
    return content;
}

std::string MultiPoly::str(std::span<const std::string> var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest monomials first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = false;
        for (unsigned e : m)
            if (e) has_vars = true;
        bool need_star = false;
        if (!has_vars || a != 1) {
            os << format_rational(a);
            need_star = true;
        }
        for (unsigned i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            if (i < var_names.size()) os << var_names[i];
            else os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace conekit
