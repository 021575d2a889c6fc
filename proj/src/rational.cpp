#include "ucs/rational.hpp"

#include "ucs/ground_set.hpp"

namespace ucs {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty text");
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return Rational(v);
    }
    std::int64_t num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("");
    std::int64_t den = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1) throw std::invalid_argument("");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: malformed value '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational: value out of range '" + text + "'");
  }
}

GroundSet GroundSet::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return GroundSet{std::move(labels)};
}

}  // namespace ucs
