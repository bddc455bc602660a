#include "parcone/parabolic_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace parcone {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
  std::string out;
  for (const auto& s : issues) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

std::map<Rational, int> weight_multiset(const ParabolicPoint& p) {
  std::map<Rational, int> out;
  for (const auto& w : p.weights) out[w.alpha] += w.multiplicity;
  return out;
}

std::vector<std::string> point_issues(const ParabolicPoint& p, int rank) {
  std::vector<std::string> issues;
  const std::string where = "point '" + p.label + "': ";
  for (std::size_t i = 0; i < p.weights.size(); ++i) {
    const auto& w = p.weights[i];
    if (w.alpha < 0 || w.alpha >= 1) {
      issues.push_back(where + "weight " + to_string(w.alpha) + " not in [0,1)");
    }
    if (w.multiplicity < 1) {
      issues.push_back(where + "multiplicity of weight " + to_string(w.alpha) + " must be positive");
    }
    if (i > 0 && !(p.weights[i - 1].alpha < w.alpha)) {
      issues.push_back(where + "weights must be strictly increasing");
    }
  }
  if (p.total_multiplicity() != rank) {
    issues.push_back(where + "weight multiplicities sum to " + std::to_string(p.total_multiplicity()) +
                     ", expected rank " + std::to_string(rank));
  }
  return issues;
}

Rational finite_sum_degree(const BundleData& data) {
  Rational total = data.degree;
  for (const auto& p : data.points) {
    for (const auto& w : p.weights) total += w.alpha * w.multiplicity;
  }
  return total;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::invalid_argument(join_issues(issues)), issues_(std::move(issues)) {}

int ParabolicPoint::total_multiplicity() const {
  int total = 0;
  for (const auto& w : weights) total += w.multiplicity;
  return total;
}

Rational LineSummand::parabolic_degree() const {
  Rational total = degree;
  for (const auto& [label, alpha] : weights) total += alpha;
  return total;
}

HNData::HNData(std::vector<HNPiece> pieces) : pieces_(std::move(pieces)) {
  std::vector<std::string> issues;
  if (pieces_.empty()) issues.emplace_back("HN data must have at least one piece");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].rank < 1) {
      issues.push_back("HN piece " + std::to_string(i + 1) + " has non-positive rank");
      continue;
    }
    if (i > 0 && pieces_[i - 1].rank >= 1 && !(pieces_[i - 1].slope() < pieces_[i].slope())) {
      issues.emplace_back("HN slopes must be strictly increasing");
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

int HNData::rank() const { return rank_through(pieces_.size()); }

Rational HNData::degree() const {
  Rational total = 0;
  for (const auto& p : pieces_) total += p.degree;
  return total;
}

int HNData::rank_through(std::size_t i) const {
  int total = 0;
  for (std::size_t t = 0; t < i && t < pieces_.size(); ++t) total += pieces_[t].rank;
  return total;
}

Rational HNData::degree_after(std::size_t i) const {
  Rational total = degree();
  for (std::size_t t = 0; t < i && t < pieces_.size(); ++t) total -= pieces_[t].degree;
  return total;
}

void HNData::check_totals(int r, const Rational& pardeg) const {
  std::vector<std::string> issues;
  if (rank() != r) {
    issues.push_back("HN ranks sum to " + std::to_string(rank()) + ", expected rank " + std::to_string(r));
  }
  if (degree() != pardeg) {
    issues.push_back("HN degrees sum to " + to_string(degree()) + ", expected parabolic degree " +
                     to_string(pardeg));
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

std::vector<std::string> ParabolicBundleSpec::validate(const BundleData& data) {
  std::vector<std::string> issues;
  if (data.rank < 1) {
    issues.emplace_back("rank must be positive");
    return issues;
  }

  std::set<std::string> labels;
  bool points_ok = true;
  for (const auto& p : data.points) {
    if (p.label.empty()) issues.emplace_back("point label must be non-empty");
    if (!labels.insert(p.label).second) issues.push_back("duplicate point label '" + p.label + "'");
    auto more = point_issues(p, data.rank);
    points_ok = points_ok && more.empty();
    issues.insert(issues.end(), more.begin(), more.end());
  }

  if (data.split && data.hn) {
    issues.emplace_back("at most one of split summands and explicit HN may be given");
  }

  if (data.split) {
    const auto& summands = *data.split;
    if (static_cast<int>(summands.size()) != data.rank) {
      issues.push_back("split has " + std::to_string(summands.size()) + " summands, expected rank " +
                       std::to_string(data.rank));
    }
    long degree_sum = 0;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      degree_sum += summands[i].degree;
      for (const auto& [label, alpha] : summands[i].weights) {
        if (!labels.count(label)) {
          issues.push_back("summand " + std::to_string(i + 1) + " names unknown point '" + label + "'");
        }
        if (alpha < 0 || alpha >= 1) {
          issues.push_back("summand " + std::to_string(i + 1) + ": weight " + to_string(alpha) +
                           " not in [0,1)");
        }
      }
    }
    if (degree_sum != data.degree) {
      issues.push_back("summand degrees sum to " + std::to_string(degree_sum) + ", expected degree " +
                       std::to_string(data.degree));
    }
    for (const auto& p : data.points) {
      std::map<Rational, int> from_summands;
      for (const auto& s : summands) {
        auto it = s.weights.find(p.label);
        from_summands[it == s.weights.end() ? Rational(0) : it->second] += 1;
      }
      if (from_summands != weight_multiset(p)) {
        issues.push_back("point '" + p.label + "': weights disagree with the summand weights");
      }
    }
  }

  if (data.hn && points_ok) {
    try {
      data.hn->check_totals(data.rank, finite_sum_degree(data));
    } catch (const ValidationError& e) {
      issues.insert(issues.end(), e.issues().begin(), e.issues().end());
    }
  }
  return issues;
}

ParabolicBundleSpec::ParabolicBundleSpec(BundleData data) : data_(std::move(data)) {
  auto issues = validate(data_);
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

ParabolicBundleSpec ParabolicBundleSpec::from_summands(std::vector<LineSummand> summands) {
  std::set<std::string> labels;
  for (const auto& s : summands) {
    for (const auto& [label, alpha] : s.weights) labels.insert(label);
  }
  BundleData data;
  data.rank = static_cast<int>(summands.size());
  for (const auto& s : summands) data.degree += s.degree;
  for (const auto& label : labels) {
    std::map<Rational, int> counts;
    for (const auto& s : summands) {
      auto it = s.weights.find(label);
      counts[it == s.weights.end() ? Rational(0) : it->second] += 1;
    }
    ParabolicPoint p{label, {}};
    for (const auto& [alpha, m] : counts) p.weights.push_back({alpha, m});
    data.points.push_back(std::move(p));
  }
  data.split = std::move(summands);
  return ParabolicBundleSpec(std::move(data));
}

Rational parabolic_degree(const ParabolicBundleSpec& spec) {
  const Rational finite = finite_sum_degree(spec.data());
  const Rational integral = parabolic_degree_by_integral(spec);
  if (finite != integral) {
    throw std::logic_error("parabolic degree: finite sum " + to_string(finite) +
                           " disagrees with integral form " + to_string(integral));
  }
  return finite;
}

Rational parabolic_degree_by_integral(const ParabolicBundleSpec& spec) {
  // E_t is constant on the open intervals between consecutive weights; at a
  // parameter t the fibre at x is cut down to the flag step whose weight is
  // the first one >= t, so deg(E_t) drops by the multiplicities of all
  // weights strictly below t.
  std::set<Rational> breaks{Rational(0), Rational(1)};
  for (const auto& p : spec.points()) {
    for (const auto& w : p.weights) breaks.insert(w.alpha);
  }
  Rational integral = 0;
  for (auto it = breaks.begin(); std::next(it) != breaks.end(); ++it) {
    const Rational& a = *it;
    const Rational& b = *std::next(it);
    const Rational t = (a + b) / 2;
    Rational deg_t = spec.degree();
    for (const auto& p : spec.points()) {
      for (const auto& w : p.weights) {
        if (w.alpha < t) deg_t -= w.multiplicity;
      }
    }
    integral += (b - a) * deg_t;
  }
  return integral + Rational(spec.rank()) * static_cast<long>(spec.points().size());
}

Rational parabolic_slope(const ParabolicBundleSpec& spec) {
  return parabolic_degree(spec) / spec.rank();
}

long level(const ParabolicBundleSpec& spec) {
  Integer n = 1;
  for (const auto& p : spec.points()) {
    Integer n_x = 1;
    for (const auto& w : p.weights) n_x = lcm(n_x, Integer(w.alpha.get_den()));
    n = lcm(n, n_x);
  }
  return to_long(n);
}

HNData hn_from_split(const ParabolicBundleSpec& spec) {
  if (!spec.split()) throw std::invalid_argument("hn_from_split: bundle has no splitting");
  std::vector<Rational> slopes;
  for (const auto& s : *spec.split()) slopes.push_back(s.parabolic_degree());
  std::sort(slopes.begin(), slopes.end());

  std::vector<HNPiece> pieces;
  for (const auto& mu : slopes) {
    if (!pieces.empty() && pieces.back().slope() == mu) {
      pieces.back().rank += 1;
      pieces.back().degree += mu;
    } else {
      pieces.push_back({1, mu});
    }
  }
  return HNData(std::move(pieces));
}

HNData resolve_hn(const ParabolicBundleSpec& spec) {
  if (spec.explicit_hn()) {
    spec.explicit_hn()->check_totals(spec.rank(), parabolic_degree(spec));
    return *spec.explicit_hn();
  }
  if (spec.split()) return hn_from_split(spec);
  if (spec.rank() == 1) return HNData({{1, parabolic_degree(spec)}});
  throw UnderdeterminedBundleError("underdetermined bundle: rank " + std::to_string(spec.rank()) +
                                   " needs either HN data or a splitting");
}

ParabolicBundleSpec hn_subbundle(const ParabolicBundleSpec& spec, std::size_t i) {
  if (!spec.split()) throw std::invalid_argument("hn_subbundle: bundle has no splitting");
  const HNData hn = hn_from_split(spec);
  if (i >= hn.length()) throw std::out_of_range("hn_subbundle: index past the last HN piece");
  const Rational threshold = hn[i].slope();
  std::vector<LineSummand> kept;
  for (const auto& s : *spec.split()) {
    if (s.parabolic_degree() >= threshold) kept.push_back(s);
  }
  return ParabolicBundleSpec::from_summands(std::move(kept));
}

}  // namespace parcone
