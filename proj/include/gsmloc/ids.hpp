#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace gsmloc {

/// String identifier tagged by what it names, so an LA id cannot be passed
/// where an MSC id is expected.
template <class Tag>
class Id {
 public:
  Id() = default;
  explicit Id(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const Id&, const Id&) = default;
  friend bool operator==(const Id&, const Id&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Id& id) { return os << id.value_; }

 private:
  std::string value_;
};

struct ImsiTag {};
struct CellTag {};
struct LaTag {};
struct MscTag {};

using Imsi = Id<ImsiTag>;
using CellId = Id<CellTag>;
using LaId = Id<LaTag>;
using MscId = Id<MscTag>;

/// Simulated time in whole seconds since the start of the run.
using SimTime = std::int64_t;
/// Durations share the unit of SimTime.
using Duration = std::int64_t;

inline constexpr SimTime kSecondsPerDay = 86400;

constexpr std::int64_t day_of(SimTime t) noexcept { return t / kSecondsPerDay; }

}  // namespace gsmloc

template <class Tag>
struct std::hash<gsmloc::Id<Tag>> {
  std::size_t operator()(const gsmloc::Id<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
