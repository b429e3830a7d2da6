#include "gsmloc/fuzzy.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "gsmloc/error.hpp"
#include "text.hpp"

namespace gsmloc {

std::string_view to_string(LinguisticLabel label) noexcept {
  switch (label) {
    case LinguisticLabel::Low: return "Low";
    case LinguisticLabel::Medium: return "Medium";
    case LinguisticLabel::High: return "High";
  }
  return "Low";
}

std::optional<LinguisticLabel> parse_label(std::string_view s) {
  std::string lower;
  for (char c : text::trim(s)) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.ends_with("_visits")) lower.resize(lower.size() - 7);
  if (lower == "low") return LinguisticLabel::Low;
  if (lower == "medium") return LinguisticLabel::Medium;
  if (lower == "high") return LinguisticLabel::High;
  return std::nullopt;
}

bool Condition::contains(double v) const noexcept {
  if (lower && (lower->inclusive ? v < lower->value : v <= lower->value)) return false;
  if (upper && (upper->inclusive ? v > upper->value : v >= upper->value)) return false;
  return true;
}

double MembershipFunction::operator()(std::uint64_t visits) const {
  const auto v = static_cast<double>(visits);
  for (const auto& b : branches_) {
    if (b.when.contains(v)) return std::clamp(b.value_at(v), 0.0, 1.0);
  }
  throw Error(ErrorCode::NoBranchMatches, std::string(to_string(label_)) + " has no branch for " +
                                              std::to_string(visits) + " visits");
}

double eval_membership(const MembershipFunction& fn, std::uint64_t visits) { return fn(visits); }

double min_intersection(std::span<const double> degrees) {
  if (degrees.empty()) throw Error(ErrorCode::EmptyInput, "min_intersection of an empty list");
  return *std::min_element(degrees.begin(), degrees.end());
}

Candidate select_frequent(std::span<const Candidate> candidates) {
  if (candidates.empty()) throw Error(ErrorCode::EmptyInput, "select_frequent of an empty list");
  return *std::min_element(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.imsi < b.imsi;
  });
}

void VisitStats::recount() noexcept {
  total_visits = 0;
  for (auto n : per_day_visits) total_visits += n;
}

LinguisticLabel classify_total(std::uint64_t total, const ClassThresholds& thresholds) {
  if (total <= thresholds.low_max) return LinguisticLabel::Low;
  if (total <= thresholds.medium_max) return LinguisticLabel::Medium;
  return LinguisticLabel::High;
}

LinguisticLabel classify_visits(const VisitStats& stats, const ClassThresholds& thresholds) {
  return classify_total(stats.total_visits, thresholds);
}

LinguisticLabel strongest_label(const FuzzySetSpec& spec, std::uint64_t visits) {
  auto best = LinguisticLabel::Low;
  double best_degree = -1;
  for (auto label : kAllLabels) {
    const double d = spec[label](visits);
    if (d >= best_degree) {
      best = label;
      best_degree = d;
    }
  }
  return best;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Branch constant(Condition when, double value) { return {when, 0, value, 1}; }
Branch affine(Condition when, double slope, double intercept, double divisor) {
  return {when, slope, intercept, divisor};
}
Bound incl(double v) { return {v, true}; }
Bound excl(double v) { return {v, false}; }

}  // namespace

FuzzySetSpec observation_fuzzy_spec() {
  using L = LinguisticLabel;
  FuzzySetSpec spec;
  spec.domain_min = 0;
  spec.domain_max = 20;
  spec.functions[0] = MembershipFunction(L::Low, {
      constant(Condition::at_most(4), 1),
      affine(Condition::between(excl(4), excl(8)), -1, 8, 5),
      constant(Condition::at_least(8), 0),
  });
  // Rising edge anchored at 8 so Medium(8) = 0. The falling branch includes
  // 14 so that v = 14 is covered.
  spec.functions[1] = MembershipFunction(L::Medium, {
      constant(Condition::at_most(8), 0),
      affine(Condition::between(excl(8), excl(12)), 1, -8, 5),
      affine(Condition::between(incl(12), incl(14)), -1, 14, 5),
      constant(Condition::above(14), 1),
  });
  spec.functions[2] = MembershipFunction(L::High, {
      constant(Condition::below(16), 0),
      affine(Condition::between(incl(16), excl(18)), -1, 18, 5),
      constant(Condition::at_least(18), 1),
  });
  return spec;
}

FuzzySetSpec weekly_fuzzy_spec() {
  using L = LinguisticLabel;
  FuzzySetSpec spec;
  spec.domain_min = 0;
  spec.domain_max = 7;
  // Slopes in thirds; 0-1 visits read Low, 4 reads Medium, 6+ reads High.
  spec.functions[0] = MembershipFunction(L::Low, {
      constant(Condition::at_most(1), 1),
      affine(Condition::between(excl(1), excl(4)), -1, 4, 3),
      constant(Condition::at_least(4), 0),
  });
  spec.functions[1] = MembershipFunction(L::Medium, {
      constant(Condition::at_most(2), 0),
      affine(Condition::between(excl(2), excl(4)), 1, -2, 3),
      affine(Condition::between(incl(4), excl(6)), -1, 6, 3),
      constant(Condition::at_least(6), 0),
  });
  spec.functions[2] = MembershipFunction(L::High, {
      constant(Condition::below(5), 0),
      affine(Condition::between(incl(5), excl(6)), 1, -3, 3),
      constant(Condition::at_least(6), 1),
  });
  return spec;
}

DefaultFuzzySpecs default_fuzzy_specs() { return {observation_fuzzy_spec(), weekly_fuzzy_spec()}; }

namespace {

std::string format_number(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_bound_value(std::string_view s) {
  s = text::trim(s);
  if (s == "inf" || s == "+inf") return kInf;
  if (s == "-inf") return -kInf;
  return text::parse_double(s);
}

std::optional<Condition> parse_condition(std::string_view s) {
  s = text::trim(s);
  if (s.size() < 2) return std::nullopt;
  const char open = s.front();
  const char close = s.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) return std::nullopt;
  const auto parts = text::split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 2) return std::nullopt;
  const auto lo = parse_bound_value(parts[0]);
  const auto hi = parse_bound_value(parts[1]);
  if (!lo || !hi) return std::nullopt;
  Condition c;
  if (*lo != -kInf) c.lower = Bound{*lo, open == '['};
  if (*hi != kInf) c.upper = Bound{*hi, close == ']'};
  return c;
}

std::string format_condition(const Condition& c) {
  std::string out;
  out += c.lower ? (c.lower->inclusive ? "[" : "(") : "(";
  out += c.lower ? format_number(c.lower->value) : "-inf";
  out += ", ";
  out += c.upper ? format_number(c.upper->value) : "inf";
  out += c.upper ? (c.upper->inclusive ? "]" : ")") : ")";
  return out;
}

}  // namespace

FuzzySetSpec parse_fuzzy_spec(std::istream& in) {
  FuzzySetSpec spec;
  std::array<std::vector<Branch>, 3> branches;
  bool have_domain = false;
  std::string raw;
  int line = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + why);
  };
  while (std::getline(in, raw)) {
    ++line;
    const auto body = text::strip_comment(raw);
    if (body.empty()) continue;
    const auto fields = text::split(body, '|');
    if (fields[0] == "domain") {
      if (fields.size() != 3) fail("expected 'domain | min | max'");
      const auto lo = text::parse_number<std::uint64_t>(fields[1]);
      const auto hi = text::parse_number<std::uint64_t>(fields[2]);
      if (!lo || !hi || *lo > *hi) fail("bad domain bounds");
      spec.domain_min = *lo;
      spec.domain_max = *hi;
      have_domain = true;
      continue;
    }
    if (fields.size() != 4 && fields.size() != 5) fail("expected 'label | interval | slope | intercept [| divisor]'");
    const auto label = parse_label(fields[0]);
    if (!label) fail("unknown label '" + fields[0] + "'");
    const auto cond = parse_condition(fields[1]);
    if (!cond) fail("bad interval '" + fields[1] + "'");
    const auto slope = text::parse_double(fields[2]);
    const auto intercept = text::parse_double(fields[3]);
    const auto divisor = fields.size() == 5 ? text::parse_double(fields[4]) : std::optional<double>(1.0);
    if (!slope || !intercept || !divisor || *divisor == 0) fail("bad branch coefficients");
    branches[static_cast<std::size_t>(*label)].push_back({*cond, *slope, *intercept, *divisor});
  }
  if (!have_domain) throw Error(ErrorCode::Parse, "fuzzy spec has no domain line");
  for (auto label : kAllLabels) {
    auto& bs = branches[static_cast<std::size_t>(label)];
    if (bs.empty())
      throw Error(ErrorCode::Parse, "fuzzy spec has no branches for " + std::string(to_string(label)));
    spec.functions[static_cast<std::size_t>(label)] = MembershipFunction(label, std::move(bs));
  }
  return spec;
}

void write_fuzzy_spec(std::ostream& out, const FuzzySetSpec& spec) {
  out << "# label | interval | slope | intercept | divisor\n";
  out << "domain | " << spec.domain_min << " | " << spec.domain_max << "\n";
  for (const auto& fn : spec.functions) {
    for (const auto& b : fn.branches()) {
      out << to_string(fn.label()) << " | " << format_condition(b.when) << " | " << format_number(b.slope)
          << " | " << format_number(b.intercept) << " | " << format_number(b.divisor) << "\n";
    }
  }
}

}  // namespace gsmloc
