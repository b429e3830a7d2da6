#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsmloc/ids.hpp"
#include "gsmloc/network.hpp"
#include "gsmloc/tiered_vlr.hpp"

namespace gsmloc {

enum class Procedure { Registration, CallDelivery };

enum class MessageKind {
  // registration
  VlrCheck,
  ProfileRequest,
  ProfileResponseAndHlrUpdate,
  CancelOld,
  VlrStore,
  // call delivery
  CallInit,
  LocationRequest,
  RouteRequest,
  TldnResponse,
  TldnForward,
  CallSetup,
  // two-tier registration only
  HlrPointerUpdate,
  BillingRefresh,
};

std::string_view to_string(Procedure p) noexcept;
std::string_view to_string(MessageKind k) noexcept;
std::optional<MessageKind> parse_message_kind(std::string_view s);

/// Procedure and step number a message kind belongs to.
struct StepLabel {
  Procedure procedure;
  int step;
  friend bool operator==(const StepLabel&, const StepLabel&) = default;
};
StepLabel step_of(MessageKind kind) noexcept;

enum class NodeRole { Ms, Vlr, Msc, Hlr };

struct Node {
  NodeRole role = NodeRole::Hlr;
  std::string id;

  static Node ms(const Imsi& i) { return {NodeRole::Ms, i.str()}; }
  static Node vlr(const MscId& m) { return {NodeRole::Vlr, m.str()}; }
  static Node msc(const MscId& m) { return {NodeRole::Msc, m.str()}; }
  static Node hlr() { return {NodeRole::Hlr, "hlr"}; }

  friend bool operator==(const Node&, const Node&) = default;
};

/// `VLR/msc2`, `MSC/msc1`, `MS/<imsi>`, `HLR`.
std::string to_string(const Node& n);

struct Message {
  SimTime time = 0;
  StepLabel label{Procedure::Registration, 1};
  MessageKind kind = MessageKind::VlrCheck;
  Node from;
  Node to;
  Imsi subject;

  friend bool operator==(const Message&, const Message&) = default;
};

/// Append-only, time-ordered record of signaling.
class MessageLog {
 public:
  void append(Message m);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Message& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Message>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::vector<MessageKind> kinds() const;

  friend bool operator==(const MessageLog&, const MessageLog&) = default;

 private:
  std::vector<Message> entries_;
};

struct Tldn {
  std::string value;
  MscId owner_msc;
  std::uint32_t slot = 0;
  friend bool operator==(const Tldn&, const Tldn&) = default;
};

/// Temporary routing numbers handed out by one MSC. The lowest free slot is
/// always reused first.
class TldnPool {
 public:
  explicit TldnPool(MscId owner) : owner_(std::move(owner)) {}

  Tldn allocate();
  bool release(const Tldn& t);
  std::size_t outstanding() const noexcept { return in_use_.size(); }

 private:
  MscId owner_;
  std::set<std::uint32_t> in_use_;
};

struct CallRoute {
  Imsi caller;
  Imsi callee;
  MscId calling_msc;
  MscId called_msc;
  Tldn tldn;
};

/// Topology, the HLR, and one tiered VLR plus TLDN pool per MSC.
class Network {
 public:
  explicit Network(NetworkTopology topology, TierConfig tier_config = {});

  const NetworkTopology& topology() const noexcept { return topology_; }
  Hlr& hlr() noexcept { return hlr_; }
  const Hlr& hlr() const noexcept { return hlr_; }

  TieredVlr& vlr(const MscId& msc);
  const TieredVlr& vlr(const MscId& msc) const;
  std::map<MscId, TieredVlr>& vlrs() noexcept { return vlrs_; }
  const std::map<MscId, TieredVlr>& vlrs() const noexcept { return vlrs_; }

  TldnPool& tldns(const MscId& msc);

  void provision(SubscriberProfile profile) { hlr_.provision(std::move(profile)); }

  /// Tier-1 record at the subscriber's serving MSC, if attached.
  const VlrRecord* serving_record(const Imsi& imsi) const;

 private:
  NetworkTopology topology_;
  Hlr hlr_;
  std::map<MscId, TieredVlr> vlrs_;
  std::map<MscId, TldnPool> tldns_;
};

enum class RegistrationOutcome { AlreadyKnown, RegisteredFresh };

/// What happens to the old VLR's record when the HLR cancels it.
enum class CancelEffect { Delete, Demote };

/// Step 1 of a registration: the new VLR checks its own database.
void log_vlr_check(const Imsi& imsi, const MscId& msc, SimTime now, MessageLog& log);

/// Steps 2-5 after a local miss: fetch the profile from the HLR, move the HLR
/// pointer, cancel the old VLR (only if there was one) and store locally.
/// Returns the previous serving MSC.
std::optional<MscId> complete_registration(Network& net, const Imsi& imsi, const CellId& cell, SimTime now,
                                           MessageLog& log, CancelEffect cancel_effect);

/// Location registration on entering a new LA. Throws UnknownImsi, UnknownCell.
RegistrationOutcome register_arrival(Network& net, const Imsi& imsi, const CellId& new_cell, SimTime now,
                                     MessageLog& log);

/// Cell change inside the current LA; no signaling. Throws LaMismatch,
/// UnknownCell, UnknownImsi, NotRegisteredHere (detached subscriber).
void intra_la_move(Network& net, const Imsi& imsi, const CellId& new_cell);

/// Detach: clears the HLR pointer and the serving VLR's tier-1 record.
void power_off(Network& net, const Imsi& imsi, SimTime now, CancelEffect effect);

/// Allocates a TLDN for a subscriber registered at `msc`. Throws NotRegisteredHere.
Tldn assign_tldn(Network& net, const MscId& msc, const Imsi& imsi);
bool release_tldn(Network& net, const Tldn& tldn);

/// Six-step call delivery through the callee's HLR. The returned route holds
/// a TLDN that the caller releases at teardown. Throws UnknownImsi,
/// CallerDetached (nothing logged), CalleeDetached (steps 1-2 logged).
CallRoute deliver_call(Network& net, const Imsi& caller, const Imsi& callee, SimTime now, MessageLog& log);

}  // namespace gsmloc
