#pragma once

#include <string>

#include "json.hpp"
#include "qlk/chord_diagram.hpp"
#include "qlk/polynomial.hpp"

namespace qlk {

using Json = nlohmann::ordered_json;

// [re_num, re_den, im_num, im_den] with the numbers as decimal strings.
Json to_json(const GaussianRational& x);
GaussianRational gaussian_from_json(const Json& j);

// {"order": N, "coeffs": [...]}; exact coefficients as above, float ones as
// {"re": "...", "im": "..."} decimal strings at the given number of digits.
Json to_json(const Series<GaussianRational>& s);
Json to_json(const Series<BigComplex>& s, int digits);
Series<GaussianRational> series_from_json(const Json& j);

// Polynomials as coefficient lists, lowest degree first.
Json to_json(const ParamPolynomial& p);
Json to_json(const PolySeries& s);
Json to_json(const FloatPolynomial& p, int digits);
Json to_json(const Series<FloatPolynomial>& s, int digits);

// [{"word": "ABAB", "coeff": [...]}, ...]
Json to_json(const DiagramSum& d);
DiagramSum diagram_sum_from_json(const Json& j);

}  // namespace qlk
