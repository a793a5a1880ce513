#include "ceuler/io.hpp"

#include <limits>
#include <stdexcept>

namespace ceuler {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

Json rational_to_json(const Rational& r) {
  return Json::array({int_to_json(Int(r.get_num())), int_to_json(Int(r.get_den()))});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be a [num, den] pair");
  return make_rational(int_from_json(j[0]), int_from_json(j[1]));
}

Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
  return Json{{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& item : j.at("coeffs")) c.push_back(rational_from_json(item));
  return Polynomial(std::move(c));
}

Json partition_to_json(const ColoredOrderedSetPartition& tau) {
  return Json{{"blocks", tau.blocks()}, {"colors", tau.colors()}};
}

ColoredOrderedSetPartition partition_from_json(const Json& j, int alpha) {
  return ColoredOrderedSetPartition(j.at("blocks").get<std::vector<std::vector<int>>>(),
                                    j.at("colors").get<std::vector<int>>(), alpha);
}

Json colored_permutation_to_json(const ColoredPermutation& tau) {
  return Json{{"word", tau.word()}, {"colors", tau.colors()}};
}

ColoredPermutation colored_permutation_from_json(const Json& j, int alpha) {
  return ColoredPermutation(j.at("word").get<std::vector<int>>(), j.at("colors").get<std::vector<int>>(), alpha);
}

std::string to_decimal(const Rational& r, int precision) {
  if (precision < 0) throw std::invalid_argument("to_decimal: negative precision");
  const Int scale = pow(Int(10), static_cast<unsigned long>(precision));
  const Int num = abs(r.get_num()) * scale;
  const Int den = r.get_den();
  Int q = num / den;
  if (Int(2) * (num - q * den) >= den) q += 1;
  std::string digits = q.get_str();
  if (precision > 0) {
    if (digits.size() <= static_cast<std::size_t>(precision))
      digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  }
  return (r < 0 && q != 0 ? "-" : "") + digits;
}

}  // namespace ceuler
