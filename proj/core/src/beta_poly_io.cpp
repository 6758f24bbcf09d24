#include "conekit/beta_poly_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace conekit {

std::string beta_polynomial_to_json(const BetaPolynomial& h) {
    if (h.has_symbolic_beta())
        throw std::invalid_argument("beta_polynomial_to_json: beta must be numeric");
    nlohmann::json root;
    root["beta"] = format_rational(h.beta());
    root["ell"] = h.ell();
    root["q"] = h.degree();
    nlohmann::json layers = nlohmann::json::array();
    for (size_t j = 0; j < h.layer_count(); ++j) {
        MultiPoly p = h.layer(j);
        nlohmann::json layer;
        layer["degree"] = h.degree() - 2 * static_cast<int>(j);
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : p.terms()) {
            nlohmann::json term;
            term["multi_index"] = m;
            term["numerator"] = boost::multiprecision::numerator(c).str();
            term["denominator"] = boost::multiprecision::denominator(c).str();
            terms.push_back(std::move(term));
        }
        layer["terms"] = std::move(terms);
        layers.push_back(std::move(layer));
    }
    root["layers"] = std::move(layers);
    return root.dump(2);
}

BetaPolynomial beta_polynomial_from_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("beta polynomial JSON: ") + e.what());
    }
    try {
        const Rational beta = parse_rational(root.at("beta").get<std::string>());
        const unsigned ell = root.at("ell").get<unsigned>();
        const auto& layers = root.at("layers");
        if (!layers.is_array() || layers.empty())
            throw std::invalid_argument("beta polynomial JSON: missing layers");

        auto parse_layer = [&](const nlohmann::json& layer) {
            MultiPoly p(ell);
            for (const auto& term : layer.at("terms")) {
                Monomial m = term.at("multi_index").get<Monomial>();
                BigInt num(term.at("numerator").get<std::string>());
                BigInt den(term.at("denominator").get<std::string>());
                if (den == 0) throw std::invalid_argument("beta polynomial JSON: zero denominator");
                p.add_term(m, Rational(num, den));
            }
            return p;
        };

        BetaPolynomial h = BetaPolynomial::generate(beta, ell, parse_layer(layers[0]));
        if (root.at("q").get<int>() != h.degree())
            throw std::invalid_argument("beta polynomial JSON: degree does not match leading layer");
        // every stored layer must agree with the recursion
        if (!h.is_zero() && layers.size() != h.layer_count())
            throw std::invalid_argument("beta polynomial JSON: wrong layer count");
        for (size_t j = 1; j < layers.size(); ++j) {
            if (!(parse_layer(layers[j]) == h.layer(j)))
                throw std::invalid_argument("beta polynomial JSON: layer violates the recursion");
        }
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("beta polynomial JSON: ") + e.what());
    }
}

}  // namespace conekit
