#include "gsmloc/protocol.hpp"

#include <array>
#include <cstdio>

#include "gsmloc/error.hpp"

namespace gsmloc {

namespace {

struct KindInfo {
  MessageKind kind;
  std::string_view name;
  StepLabel label;
};

constexpr std::array<KindInfo, 13> kKinds{{
    {MessageKind::VlrCheck, "vlr_check", {Procedure::Registration, 1}},
    {MessageKind::ProfileRequest, "profile_request", {Procedure::Registration, 2}},
    {MessageKind::ProfileResponseAndHlrUpdate, "profile_response_and_hlr_update", {Procedure::Registration, 3}},
    {MessageKind::CancelOld, "cancel_old", {Procedure::Registration, 4}},
    {MessageKind::VlrStore, "vlr_store", {Procedure::Registration, 5}},
    {MessageKind::CallInit, "call_init", {Procedure::CallDelivery, 1}},
    {MessageKind::LocationRequest, "location_request", {Procedure::CallDelivery, 2}},
    {MessageKind::RouteRequest, "route_request", {Procedure::CallDelivery, 3}},
    {MessageKind::TldnResponse, "tldn_response", {Procedure::CallDelivery, 4}},
    {MessageKind::TldnForward, "tldn_forward", {Procedure::CallDelivery, 5}},
    {MessageKind::CallSetup, "call_setup", {Procedure::CallDelivery, 6}},
    // A tier-2 hit replaces steps 2-3 with a bare pointer update.
    {MessageKind::HlrPointerUpdate, "hlr_pointer_update", {Procedure::Registration, 3}},
    {MessageKind::BillingRefresh, "billing_refresh", {Procedure::Registration, 2}},
}};

const KindInfo& info(MessageKind k) { return kKinds[static_cast<std::size_t>(k)]; }

Message make(SimTime now, MessageKind kind, Node from, Node to, const Imsi& subject) {
  return {now, step_of(kind), kind, std::move(from), std::move(to), subject};
}

}  // namespace

std::string_view to_string(Procedure p) noexcept {
  return p == Procedure::Registration ? "registration" : "call_delivery";
}

std::string_view to_string(MessageKind k) noexcept { return info(k).name; }

std::optional<MessageKind> parse_message_kind(std::string_view s) {
  for (const auto& k : kKinds)
    if (k.name == s) return k.kind;
  return std::nullopt;
}

StepLabel step_of(MessageKind kind) noexcept { return info(kind).label; }

std::string to_string(const Node& n) {
  switch (n.role) {
    case NodeRole::Ms: return "MS/" + n.id;
    case NodeRole::Vlr: return "VLR/" + n.id;
    case NodeRole::Msc: return "MSC/" + n.id;
    case NodeRole::Hlr: return "HLR";
  }
  return n.id;
}

void MessageLog::append(Message m) {
  if (!entries_.empty() && m.time < entries_.back().time)
    throw Error(ErrorCode::TraceOutOfOrder, "message log must be appended in time order");
  entries_.push_back(std::move(m));
}

std::vector<MessageKind> MessageLog::kinds() const {
  std::vector<MessageKind> out;
  out.reserve(entries_.size());
  for (const auto& m : entries_) out.push_back(m.kind);
  return out;
}

Tldn TldnPool::allocate() {
  std::uint32_t slot = 1;
  for (auto used : in_use_) {
    if (used != slot) break;
    ++slot;
  }
  in_use_.insert(slot);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04u", slot);
  return {"TLDN-" + owner_.str() + "-" + buf, owner_, slot};
}

bool TldnPool::release(const Tldn& t) { return t.owner_msc == owner_ && in_use_.erase(t.slot) != 0; }

Network::Network(NetworkTopology topology, TierConfig tier_config) : topology_(std::move(topology)) {
  for (const auto& msc : topology_.mscs()) {
    vlrs_.emplace(msc, TieredVlr(msc, tier_config));
    tldns_.emplace(msc, TldnPool(msc));
  }
}

TieredVlr& Network::vlr(const MscId& msc) {
  const auto it = vlrs_.find(msc);
  if (it == vlrs_.end()) throw Error(ErrorCode::UnresolvableId, "unknown MSC '" + msc.str() + "'");
  return it->second;
}

const TieredVlr& Network::vlr(const MscId& msc) const {
  const auto it = vlrs_.find(msc);
  if (it == vlrs_.end()) throw Error(ErrorCode::UnresolvableId, "unknown MSC '" + msc.str() + "'");
  return it->second;
}

TldnPool& Network::tldns(const MscId& msc) {
  const auto it = tldns_.find(msc);
  if (it == tldns_.end()) throw Error(ErrorCode::UnresolvableId, "unknown MSC '" + msc.str() + "'");
  return it->second;
}

const VlrRecord* Network::serving_record(const Imsi& imsi) const {
  const auto& rec = hlr_.lookup(imsi);
  if (!rec.serving_vlr) return nullptr;
  return vlr(*rec.serving_vlr).tier1().find(imsi);
}

void log_vlr_check(const Imsi& imsi, const MscId& msc, SimTime now, MessageLog& log) {
  log.append(make(now, MessageKind::VlrCheck, Node::vlr(msc), Node::vlr(msc), imsi));
}

namespace {

void cancel_at(Network& net, const MscId& old_msc, const Imsi& imsi, SimTime now, CancelEffect effect) {
  auto& old_vlr = net.vlr(old_msc);
  if (effect == CancelEffect::Demote)
    old_vlr.demote(imsi, now);
  else
    old_vlr.tier1().erase(imsi);
}

}  // namespace

std::optional<MscId> complete_registration(Network& net, const Imsi& imsi, const CellId& cell, SimTime now,
                                           MessageLog& log, CancelEffect cancel_effect) {
  const auto where = net.topology().locate(cell);
  const auto& profile = net.hlr().lookup(imsi).profile;
  log.append(make(now, MessageKind::ProfileRequest, Node::vlr(where.msc), Node::hlr(), imsi));
  auto copy = profile;
  const auto previous = net.hlr().update_location(imsi, where.msc, where.la);
  log.append(make(now, MessageKind::ProfileResponseAndHlrUpdate, Node::hlr(), Node::vlr(where.msc), imsi));
  if (previous) {
    log.append(make(now, MessageKind::CancelOld, Node::hlr(), Node::vlr(*previous), imsi));
    if (*previous != where.msc) cancel_at(net, *previous, imsi, now, cancel_effect);
  }
  copy.tmsi = derive_tmsi(imsi, net.hlr().next_registration(imsi));
  net.vlr(where.msc).tier1().insert(VlrRecord{std::move(copy), where.la, cell, VlrStatus::Idle});
  log.append(make(now, MessageKind::VlrStore, Node::vlr(where.msc), Node::vlr(where.msc), imsi));
  return previous;
}

RegistrationOutcome register_arrival(Network& net, const Imsi& imsi, const CellId& new_cell, SimTime now,
                                     MessageLog& log) {
  net.hlr().lookup(imsi);
  const auto where = net.topology().locate(new_cell);
  auto& tier1 = net.vlr(where.msc).tier1();
  log_vlr_check(imsi, where.msc, now, log);
  if (auto* rec = tier1.find(imsi)) {
    rec->la = where.la;
    rec->cell = new_cell;
    return RegistrationOutcome::AlreadyKnown;
  }
  complete_registration(net, imsi, new_cell, now, log, CancelEffect::Delete);
  return RegistrationOutcome::RegisteredFresh;
}

void intra_la_move(Network& net, const Imsi& imsi, const CellId& new_cell) {
  const auto& hrec = net.hlr().lookup(imsi);
  const auto where = net.topology().locate(new_cell);
  if (!hrec.serving_vlr)
    throw Error(ErrorCode::NotRegisteredHere, "subscriber '" + imsi.str() + "' is detached");
  auto* rec = net.vlr(*hrec.serving_vlr).tier1().find(imsi);
  if (rec == nullptr)
    throw Error(ErrorCode::NotRegisteredHere, "subscriber '" + imsi.str() + "' has no serving VLR record");
  if (rec->la != where.la)
    throw Error(ErrorCode::LaMismatch, "cell '" + new_cell.str() + "' is in LA '" + where.la.str() +
                                           "', subscriber is in LA '" + rec->la.str() + "'");
  rec->cell = new_cell;
}

void power_off(Network& net, const Imsi& imsi, SimTime now, CancelEffect effect) {
  if (const auto previous = net.hlr().detach(imsi)) cancel_at(net, *previous, imsi, now, effect);
}

Tldn assign_tldn(Network& net, const MscId& msc, const Imsi& imsi) {
  if (!net.vlr(msc).tier1().contains(imsi))
    throw Error(ErrorCode::NotRegisteredHere, "subscriber '" + imsi.str() + "' not registered at '" + msc.str() + "'");
  return net.tldns(msc).allocate();
}

bool release_tldn(Network& net, const Tldn& tldn) { return net.tldns(tldn.owner_msc).release(tldn); }

CallRoute deliver_call(Network& net, const Imsi& caller, const Imsi& callee, SimTime now, MessageLog& log) {
  const auto& caller_rec = net.hlr().lookup(caller);
  net.hlr().lookup(callee);
  if (!caller_rec.serving_vlr)
    throw Error(ErrorCode::CallerDetached, "caller '" + caller.str() + "' is not attached");
  const MscId calling = *caller_rec.serving_vlr;

  log.append(make(now, MessageKind::CallInit, Node::ms(caller), Node::msc(calling), callee));
  log.append(make(now, MessageKind::LocationRequest, Node::msc(calling), Node::hlr(), callee));
  const auto& callee_rec = net.hlr().lookup(callee);
  if (!callee_rec.serving_vlr)
    throw Error(ErrorCode::CalleeDetached, "callee '" + callee.str() + "' is not attached");
  const MscId called = *callee_rec.serving_vlr;

  log.append(make(now, MessageKind::RouteRequest, Node::hlr(), Node::msc(called), callee));
  auto tldn = assign_tldn(net, called, callee);
  log.append(make(now, MessageKind::TldnResponse, Node::msc(called), Node::hlr(), callee));
  log.append(make(now, MessageKind::TldnForward, Node::hlr(), Node::msc(calling), callee));
  log.append(make(now, MessageKind::CallSetup, Node::msc(calling), Node::msc(called), callee));
  return {caller, callee, calling, called, std::move(tldn)};
}

}  // namespace gsmloc
