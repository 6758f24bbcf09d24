#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "conekit/rational.hpp"

namespace conekit {

// Monomial exponent vector; size fixes the number of variables.
using Monomial = std::vector<unsigned>;

// Sparse multivariate polynomial with exact rational coefficients.
// The variable count is fixed at construction; mixing arities throws.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(unsigned nvars) : nvars_(nvars) {}

    static MultiPoly constant(unsigned nvars, const Rational& c);
    static MultiPoly variable(unsigned nvars, unsigned index);
    static MultiPoly monomial(Monomial exps, const Rational& c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& exps, const Rational& c);
    Rational coefficient(const Monomial& exps) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const = default;

    MultiPoly derivative(unsigned var) const;
    MultiPoly laplacian() const;

    double eval(std::span<const double> x) const;
    Rational eval_exact(std::span<const Rational> x) const;

    // gcd of numerators over lcm of denominators, signed so that the
    // lexicographically largest monomial has positive coefficient.
    // Zero polynomial has content 0.
    Rational content() const;

    std::string str(std::span<const std::string> var_names = {}) const;

private:
    unsigned nvars_;
    std::map<Monomial, Rational> terms_;  // invariant: no zero coefficients
};

}  // namespace conekit
