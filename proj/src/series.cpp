#include "maghom/series.hpp"

#include <json.hpp>

#include "maghom/homology.hpp"

namespace maghom {

Rational GradedSeries::coefficient(const Rational& grade) const {
  auto it = terms_.find(grade);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedSeries::add(const Rational& grade, const Rational& c) {
  if (grade > lmax_ || sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(grade, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

GradedSeries GradedSeries::operator+(const GradedSeries& other) const {
  GradedSeries out(std::min(lmax_, other.lmax_));
  for (const auto& [g, c] : terms_) out.add(g, c);
  for (const auto& [g, c] : other.terms_) out.add(g, c);
  return out;
}

GradedSeries GradedSeries::operator*(const GradedSeries& other) const {
  GradedSeries out(std::min(lmax_, other.lmax_));
  for (const auto& [g, c] : terms_) {
    for (const auto& [h, d] : other.terms_) {
      if (g + h > out.lmax_) break;
      out.add(g + h, c * d);
    }
  }
  return out;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries out(lmax_);
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
  return out;
}

std::string GradedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms_) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool constant = sgn(g) == 0;
    if (constant || mag != 1) out += rational_to_string(mag);
    if (constant) continue;
    out += "q";
    if (g != 1) {
      out += g.get_den() == 1 ? "^" + rational_to_string(g) : "^(" + rational_to_string(g) + ")";
    }
  }
  return out;
}

std::string GradedSeries::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [g, c] : terms_) j.push_back({rational_to_string(g), rational_to_string(c)});
  return j.dump();
}

namespace {

// Smallest positive distance, or nullopt when no finite positive one exists.
std::optional<Rational> step_floor(const QuasiMetricSpace& X) {
  require_positive_min(X);
  if (X.size() < 2) return std::nullopt;
  auto d = min_positive_distance(X);
  if (d.is_infinite()) return std::nullopt;
  return d.value();
}

}  // namespace

GradedSeries euler_series(const QuasiMetricSpace& X, const Rational& lmax) {
  const auto delta = step_floor(X);
  GradedSeries out(lmax);
  for (const auto& grade : realizable_grades(X, lmax)) {
    std::size_t kmax = 0;
    if (delta) {
      Rational ratio = grade / *delta;
      kmax = static_cast<std::size_t>(Integer(ratio.get_num() / ratio.get_den()).get_ui());
    }
    auto block = build_block(X, grade, kmax);
    Rational total = 0;
    for (std::size_t k = 0; k <= kmax; ++k) {
      const long rank = static_cast<long>(cohomology_group(block, k).rank);
      total += k % 2 == 0 ? rank : -rank;
    }
    out.add(grade, total);
  }
  return out;
}

GradedSeries inversion_series(const QuasiMetricSpace& X, const Rational& lmax) {
  const auto delta = step_floor(X);
  const std::size_t n = X.size();
  using SeriesMatrix = std::vector<std::vector<GradedSeries>>;
  auto zero_matrix = [&] { return SeriesMatrix(n, std::vector<GradedSeries>(n, GradedSeries(lmax))); };

  SeriesMatrix N = zero_matrix();
  SeriesMatrix term = zero_matrix();
  SeriesMatrix total = zero_matrix();
  for (std::size_t a = 0; a < n; ++a) {
    term[a][a].add(0, 1);
    total[a][a].add(0, 1);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && X.d(a, b).is_finite()) N[a][b].add(X.d(a, b).value(), 1);
    }
  }
  // (-N)^j has no terms below j * delta, so the expansion stops at lmax / delta.
  std::size_t steps = 0;
  if (delta) {
    Rational ratio = lmax / *delta;
    steps = static_cast<std::size_t>(Integer(ratio.get_num() / ratio.get_den()).get_ui());
  }
  for (std::size_t j = 1; j <= steps; ++j) {
    SeriesMatrix next = zero_matrix();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        if (term[a][c].terms().empty()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (N[c][b].terms().empty()) continue;
          next[a][b] = next[a][b] + -(term[a][c] * N[c][b]);
        }
      }
    }
    term = std::move(next);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) total[a][b] = total[a][b] + term[a][b];
    }
  }
  GradedSeries sum(lmax);
  for (const auto& row : total) {
    for (const auto& entry : row) sum = sum + entry;
  }
  return sum;
}

Report categorification_check(const QuasiMetricSpace& X, const Rational& lmax) {
  Report report;
  auto euler = euler_series(X, lmax);
  auto inverse = inversion_series(X, lmax);
  if (!(euler == inverse)) {
    report.fail("Euler series " + euler.to_string() + " differs from the inverse-matrix series " +
                inverse.to_string());
  }
  return report;
}

}  // namespace maghom
