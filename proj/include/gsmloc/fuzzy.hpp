#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsmloc/ids.hpp"

namespace gsmloc {

enum class LinguisticLabel { Low, Medium, High };

inline constexpr std::array<LinguisticLabel, 3> kAllLabels{LinguisticLabel::Low, LinguisticLabel::Medium,
                                                           LinguisticLabel::High};

std::string_view to_string(LinguisticLabel label) noexcept;
/// Case-insensitive; also accepts the `Low_visits` style names.
std::optional<LinguisticLabel> parse_label(std::string_view s);

struct Bound {
  double value = 0;
  bool inclusive = true;
  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Interval over visit counts; a missing bound is unbounded on that side.
struct Condition {
  std::optional<Bound> lower;
  std::optional<Bound> upper;

  bool contains(double v) const noexcept;
  friend bool operator==(const Condition&, const Condition&) = default;

  static Condition at_most(double hi) { return {std::nullopt, Bound{hi, true}}; }
  static Condition below(double hi) { return {std::nullopt, Bound{hi, false}}; }
  static Condition at_least(double lo) { return {Bound{lo, true}, std::nullopt}; }
  static Condition above(double lo) { return {Bound{lo, false}, std::nullopt}; }
  static Condition between(Bound lo, Bound hi) { return {lo, hi}; }
};

/// One branch: `(slope * v + intercept) / divisor` when `when` matches.
/// Keeping the divisor separate lets fifths and thirds come out exactly as
/// written, e.g. (8 - v) / 5.
struct Branch {
  Condition when;
  double slope = 0;
  double intercept = 0;
  double divisor = 1;

  double value_at(double v) const noexcept { return (slope * v + intercept) / divisor; }
  friend bool operator==(const Branch&, const Branch&) = default;
};

class MembershipFunction {
 public:
  MembershipFunction() = default;
  MembershipFunction(LinguisticLabel label, std::vector<Branch> branches)
      : label_(label), branches_(std::move(branches)) {}

  LinguisticLabel label() const noexcept { return label_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }

  /// First matching branch wins; the result is clamped to [0, 1].
  /// Throws NoBranchMatches.
  double operator()(std::uint64_t visits) const;

  friend bool operator==(const MembershipFunction&, const MembershipFunction&) = default;

 private:
  LinguisticLabel label_ = LinguisticLabel::Low;
  std::vector<Branch> branches_;
};

/// Low/Medium/High functions over a shared universe of visit counts.
struct FuzzySetSpec {
  std::uint64_t domain_min = 0;
  std::uint64_t domain_max = 0;
  std::array<MembershipFunction, 3> functions;

  const MembershipFunction& operator[](LinguisticLabel label) const {
    return functions[static_cast<std::size_t>(label)];
  }
  friend bool operator==(const FuzzySetSpec&, const FuzzySetSpec&) = default;
};

/// Throws NoBranchMatches when `fn` has no branch for `visits`.
double eval_membership(const MembershipFunction& fn, std::uint64_t visits);

/// Fuzzy intersection: the smallest degree. Throws EmptyInput.
double min_intersection(std::span<const double> degrees);

struct Candidate {
  Imsi imsi;
  double degree = 0;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Picks the candidate with the minimum degree; ties go to the
/// lexicographically smallest IMSI. Throws EmptyInput.
Candidate select_frequent(std::span<const Candidate> candidates);

struct VisitStats {
  Imsi imsi;
  std::vector<std::uint32_t> per_day_visits;
  std::uint64_t total_visits = 0;

  explicit VisitStats(Imsi who = {}, std::size_t window_days = 7)
      : imsi(std::move(who)), per_day_visits(window_days, 0) {}

  std::size_t window_days() const noexcept { return per_day_visits.size(); }
  void recount() noexcept;

  friend bool operator==(const VisitStats&, const VisitStats&) = default;
};

/// Crisp cut-offs on a window's total visit count.
struct ClassThresholds {
  std::uint64_t low_max = 2;     // total <= low_max -> Low
  std::uint64_t medium_max = 5;  // total <= medium_max -> Medium, else High
};

LinguisticLabel classify_visits(const VisitStats& stats, const ClassThresholds& thresholds = {});
LinguisticLabel classify_total(std::uint64_t total, const ClassThresholds& thresholds = {});

/// Label whose membership is largest at `visits`, preferring the higher label on ties.
LinguisticLabel strongest_label(const FuzzySetSpec& spec, std::uint64_t visits);

/// Visit-count functions on [0, 20].
FuzzySetSpec observation_fuzzy_spec();
/// Weekly visit-count functions on [0, 7].
FuzzySetSpec weekly_fuzzy_spec();

struct DefaultFuzzySpecs {
  FuzzySetSpec observation;
  FuzzySetSpec weekly;
};
DefaultFuzzySpecs default_fuzzy_specs();

/// Text format, one record per line, fields separated by `|`:
///   domain | <min> | <max>
///   <label> | <interval> | <slope> | <intercept> [| <divisor>]
/// where <interval> is written like `(4, 8)`, `[12, 14]` or `(-inf, 4]`.
/// Branches of one label keep their file order. Throws Parse.
FuzzySetSpec parse_fuzzy_spec(std::istream& in);
void write_fuzzy_spec(std::ostream& out, const FuzzySetSpec& spec);

}  // namespace gsmloc
