#pragma once

// Numerical data of a parabolic vector bundle on a smooth projective curve:
// rank, underlying degree, weighted flags at the marked points, and the
// Harder-Narasimhan pieces. Everything here is an immutable value.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parcone/rational.hpp"

namespace parcone {

/// Raised when bundle data violates one of its invariants. Carries every
/// violation found, not just the first.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> issues);
  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  std::vector<std::string> issues_;
};

/// Rank >= 2 with neither an explicit HN filtration nor a splitting.
class UnderdeterminedBundleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WeightBlock {
  Rational alpha;
  int multiplicity = 1;
};

struct ParabolicPoint {
  std::string label;
  std::vector<WeightBlock> weights;  // alpha strictly increasing in [0, 1)

  int total_multiplicity() const;
};

/// A line-bundle summand of a split parabolic bundle. Points missing from
/// `weights` carry weight 0 on this summand.
struct LineSummand {
  long degree = 0;
  std::map<std::string, Rational> weights;

  Rational parabolic_degree() const;
};

struct HNPiece {
  int rank = 0;
  Rational degree;

  Rational slope() const { return degree / rank; }
  friend bool operator==(const HNPiece& a, const HNPiece& b) {
    return a.rank == b.rank && a.degree == b.degree;
  }
};

/// Harder-Narasimhan data in the quotient convention: piece i is
/// Q^i = E^{i-1}/E^i and slopes increase strictly along the list.
class HNData {
 public:
  HNData() = default;
  /// Throws ValidationError unless ranks are positive and slopes strictly increase.
  explicit HNData(std::vector<HNPiece> pieces);

  const std::vector<HNPiece>& pieces() const noexcept { return pieces_; }
  std::size_t length() const noexcept { return pieces_.size(); }
  const HNPiece& operator[](std::size_t i) const { return pieces_.at(i); }
  bool semistable() const noexcept { return pieces_.size() == 1; }

  int rank() const;
  Rational degree() const;

  /// rank(E / E^i): sum of the first i piece ranks.
  int rank_through(std::size_t i) const;
  /// par-deg(E^i): total degree minus the first i piece degrees.
  Rational degree_after(std::size_t i) const;

  /// Throws ValidationError naming the violated sum.
  void check_totals(int rank, const Rational& parabolic_degree) const;

  friend bool operator==(const HNData& a, const HNData& b) { return a.pieces_ == b.pieces_; }

 private:
  std::vector<HNPiece> pieces_;
};

struct BundleData {
  int rank = 1;
  long degree = 0;
  std::vector<ParabolicPoint> points;
  std::optional<std::vector<LineSummand>> split;
  std::optional<HNData> hn;
};

class ParabolicBundleSpec {
 public:
  /// Validates every invariant; throws ValidationError listing all violations.
  explicit ParabolicBundleSpec(BundleData data);

  /// Direct sum of line summands; the point weight lists are derived from them.
  static ParabolicBundleSpec from_summands(std::vector<LineSummand> summands);

  int rank() const noexcept { return data_.rank; }
  long degree() const noexcept { return data_.degree; }
  const std::vector<ParabolicPoint>& points() const noexcept { return data_.points; }
  const std::optional<std::vector<LineSummand>>& split() const noexcept { return data_.split; }
  const std::optional<HNData>& explicit_hn() const noexcept { return data_.hn; }
  const BundleData& data() const noexcept { return data_; }

  /// Invariant violations of `data`, empty when valid.
  static std::vector<std::string> validate(const BundleData& data);

 private:
  BundleData data_;
};

/// deg(E) + sum over points of alpha * multiplicity. Also integrates the
/// filtration degree over [0, 1] and throws std::logic_error on disagreement.
Rational parabolic_degree(const ParabolicBundleSpec& spec);

/// integral_0^1 deg(E_t) dt + r * #D, with E_t the step filtration cut out by the weights.
Rational parabolic_degree_by_integral(const ParabolicBundleSpec& spec);

Rational parabolic_slope(const ParabolicBundleSpec& spec);

/// lcm over points of the lcm of the weight denominators there; 1 for an empty divisor.
long level(const ParabolicBundleSpec& spec);

/// Sort summands by slope and group equal slopes. Requires split data.
HNData hn_from_split(const ParabolicBundleSpec& spec);

/// Explicit HN if supplied, else from the splitting, else the rank-one piece.
HNData resolve_hn(const ParabolicBundleSpec& spec);

/// The split subbundle E^i made of the summands in HN pieces i+1..l.
ParabolicBundleSpec hn_subbundle(const ParabolicBundleSpec& spec, std::size_t i);

}  // namespace parcone
