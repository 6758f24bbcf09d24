#include "conekit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace conekit {

BigInt sphere_harmonic_dim(int d, int k) {
    if (d < 1 || k < 0) throw std::invalid_argument("sphere_harmonic_dim: bad arguments");
    if (k == 0) return 1;
    BigInt hi = binomial(static_cast<unsigned>(k + d), static_cast<unsigned>(d));
    BigInt lo = k >= 2 ? binomial(static_cast<unsigned>(k + d - 2), static_cast<unsigned>(d)) : BigInt(0);
    return hi - lo;
}

namespace {

// -Delta_Sigma eigenvalue of the (k,m) product harmonic
Rational product_level(const ConeSpec& cone, int k, int m) {
    Rational from_p = Rational(k) * (k + cone.p - 1) / cone.a_sq;
    Rational from_q = Rational(m) * (m + cone.q - 1) / cone.b_sq;
    return from_p + from_q;
}

void fill_exponents(const ConeSpec& cone, SpectralLine& line) {
    line.discriminant = rational_pow(Rational(cone.n - 2, 2), 2) + line.lambda;
    const double half = 0.5 * (cone.n - 2);
    if (line.discriminant < 0) {
        line.beta = std::numeric_limits<double>::quiet_NaN();
        line.gamma_plus = std::numeric_limits<double>::quiet_NaN();
        line.gamma_minus = std::numeric_limits<double>::quiet_NaN();
        return;
    }
    const double root = std::sqrt(to_double(line.discriminant));
    line.beta = 2.0 * root;
    line.gamma_plus = -half + root;
    line.gamma_minus = -half - root;
    if (auto exact = rational_sqrt(line.discriminant)) {
        line.beta_exact = 2 * *exact;
        line.gamma_plus_exact = -Rational(cone.n - 2, 2) + *exact;
        line.gamma_minus_exact = -Rational(cone.n - 2, 2) - *exact;
    }
}

}  // namespace

std::vector<SpectralLine> spectrum(const ConeSpec& cone, int count) {
    if (cone.p < 1 || cone.q < 1) throw std::invalid_argument("spectrum: invalid cone");
    if (count < 1) throw std::invalid_argument("spectrum: count must be >= 1");

    int box = count + 2;
    std::map<Rational, SpectralLine> levels;
    for (;;) {
        levels.clear();
        for (int k = 0; k <= box; ++k) {
            for (int m = 0; m <= box; ++m) {
                Rational mu = product_level(cone, k, m);
                auto& line = levels[mu];
                line.multiplicity += static_cast<int>(
                    sphere_harmonic_dim(cone.p, k) * sphere_harmonic_dim(cone.q, m));
                line.labels.emplace_back(k, m);
            }
        }
        if (static_cast<int>(levels.size()) >= count) {
            auto it = levels.begin();
            std::advance(it, count - 1);
            // every (k,m) outside the box yields an eigenvalue beyond these
            Rational outside = std::min(product_level(cone, box + 1, 0),
                                        product_level(cone, 0, box + 1));
            if (it->first < outside) break;
        }
        box *= 2;
    }

    std::vector<SpectralLine> lines;
    lines.reserve(count);
    int index = 1;
    for (auto& [mu, line] : levels) {
        if (index > count) break;
        line.index = index++;
        line.lambda = mu - (cone.n - 1);  // subtract |A_Sigma|^2
        std::sort(line.labels.begin(), line.labels.end());
        fill_exponents(cone, line);
        lines.push_back(std::move(line));
    }
    return lines;
}

namespace {

std::string format_real(double v, const std::optional<Rational>& exact) {
    if (exact) return format_rational(*exact);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string spectrum_csv(std::span<const SpectralLine> lines) {
    std::ostringstream os;
    os << "j,lambda,multiplicity,gamma_minus,gamma_plus,beta,k,m\n";
    for (const auto& line : lines) {
        const auto& label = line.labels.empty() ? std::pair<int, int>{0, 0} : line.labels.front();
        os << line.index << ',' << format_rational(line.lambda) << ',' << line.multiplicity << ','
           << format_real(line.gamma_minus, line.gamma_minus_exact) << ','
           << format_real(line.gamma_plus, line.gamma_plus_exact) << ','
           << format_real(line.beta, line.beta_exact) << ','
           << label.first << ',' << label.second << '\n';
    }
    return os.str();
}

}  // namespace conekit
