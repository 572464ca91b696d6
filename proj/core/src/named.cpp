#include "qpseudo/named.hpp"

#include <charconv>
#include <cmath>

#include "qpseudo/error.hpp"

namespace qps {

QMatrix nilpotent2() { return {{0.0, 1.0}, {0.0, 0.0}}; }

QMatrix proj2() { return QMatrix::diagonal({1.0, 0.0}); }

QMatrix diagjk() { return QMatrix::diagonal({Quaternion::j(), Quaternion::k()}); }

QMatrix disc_normal() {
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  return QMatrix::diagonal({Quaternion(1.0, 0.0, 0.5, 0.0), Quaternion(3.0, -c, -c, 0.0)});
}

QMatrix hyponormal_truncation(std::size_t n) {
  QMatrix t(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    t(i, i + 1) = 1.0;
    t(i + 1, i) = 2.0;
  }
  return t;
}

namespace {

constexpr std::string_view kLeftMult = "leftmult:";

QMatrix parse_leftmult(std::string_view spec) {
  const std::string_view body = spec.substr(kLeftMult.size());
  const auto colon = body.rfind(':');
  if (colon == std::string_view::npos) throw ParseError("leftmult: expected leftmult:<q>:<n>");
  const Quaternion q = parse_quaternion(body.substr(0, colon));
  const std::string_view dim = body.substr(colon + 1);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(dim.data(), dim.data() + dim.size(), n);
  if (ec != std::errc() || ptr != dim.data() + dim.size() || n == 0)
    throw ParseError("leftmult: bad dimension '" + std::string(dim) + "'");
  return left_mult_matrix(q, n);
}

}  // namespace

QMatrix named_matrix(std::string_view name) {
  if (name == "nilpotent2") return nilpotent2();
  if (name == "proj2") return proj2();
  if (name == "diagjk") return diagjk();
  if (name == "disc-normal") return disc_normal();
  if (name == "hypo12") return hyponormal_truncation(12);
  if (name.starts_with(kLeftMult)) return parse_leftmult(name);
  throw ParseError("unknown named matrix '" + std::string(name) + "'");
}

bool is_named_matrix(std::string_view name) {
  for (const auto& n : named_matrix_names())
    if (name == n) return true;
  return name.starts_with(kLeftMult);
}

std::vector<std::string> named_matrix_names() {
  return {"nilpotent2", "proj2", "diagjk", "disc-normal", "hypo12", "leftmult:<q>:<n>"};
}

}  // namespace qps
