#include "gsmloc/intelligent.hpp"

#include "gsmloc/error.hpp"

namespace gsmloc {

std::string_view to_string(IntelligentOutcome o) noexcept {
  switch (o) {
    case IntelligentOutcome::Tier1Hit: return "tier1_hit";
    case IntelligentOutcome::Tier2HitPromoted: return "tier2_hit_promoted";
    case IntelligentOutcome::MissFullProcedure: return "miss_full_procedure";
  }
  return "miss_full_procedure";
}

namespace {

Message make(SimTime now, MessageKind kind, Node from, Node to, const Imsi& subject) {
  return {now, step_of(kind), kind, std::move(from), std::move(to), subject};
}

}  // namespace

IntelligentOutcome intelligent_register(Network& net, const Imsi& imsi, const CellId& new_cell, SimTime now,
                                        MessageLog& log, const IntelligentOptions& options) {
  net.hlr().lookup(imsi);
  const auto where = net.topology().locate(new_cell);
  auto& tv = net.vlr(where.msc);
  log_vlr_check(imsi, where.msc, now, log);
  if (options.corrupt_dominance)
    log.append(make(now, MessageKind::ProfileRequest, Node::vlr(where.msc), Node::hlr(), imsi));

  if (auto* rec = tv.tier1().find(imsi)) {
    rec->la = where.la;
    rec->cell = new_cell;
    return IntelligentOutcome::Tier1Hit;
  }

  if (tv.tier2_live(imsi, now)) {
    const auto here = Node::vlr(where.msc);
    if (options.refresh_billing) log.append(make(now, MessageKind::BillingRefresh, here, Node::hlr(), imsi));
    log.append(make(now, MessageKind::HlrPointerUpdate, here, Node::hlr(), imsi));
    const auto previous = net.hlr().update_location(imsi, where.msc, where.la);
    if (previous) {
      log.append(make(now, MessageKind::CancelOld, Node::hlr(), Node::vlr(*previous), imsi));
      if (*previous != where.msc) net.vlr(*previous).demote(imsi, now);
    }
    tv.promote(imsi, where.la, new_cell, now);
    tv.tier1().find(imsi)->profile.tmsi = derive_tmsi(imsi, net.hlr().next_registration(imsi));
    log.append(make(now, MessageKind::VlrStore, here, here, imsi));
    tv.record_visit(imsi, tv.current_day_slot(), where.la, now);
    return IntelligentOutcome::Tier2HitPromoted;
  }

  complete_registration(net, imsi, new_cell, now, log, CancelEffect::Demote);
  tv.admit(tv.tier1().find(imsi)->profile, where.la, now);
  tv.record_visit(imsi, tv.current_day_slot(), where.la, now);
  return IntelligentOutcome::MissFullProcedure;
}

CallRoute intelligent_deliver(Network& net, const Imsi& caller, const Imsi& callee, SimTime now, MessageLog& log) {
  const auto& caller_rec = net.hlr().lookup(caller);
  net.hlr().lookup(callee);
  if (!caller_rec.serving_vlr)
    throw Error(ErrorCode::CallerDetached, "caller '" + caller.str() + "' is not attached");
  const MscId calling = *caller_rec.serving_vlr;
  auto& tv = net.vlr(calling);
  if (tv.tier1().contains(callee) && tv.tier2_live(callee, now)) {
    log.append(make(now, MessageKind::CallInit, Node::ms(caller), Node::msc(calling), callee));
    auto tldn = assign_tldn(net, calling, callee);
    log.append(make(now, MessageKind::CallSetup, Node::msc(calling), Node::msc(calling), callee));
    return {caller, callee, calling, calling, std::move(tldn)};
  }
  return deliver_call(net, caller, callee, now, log);
}

}  // namespace gsmloc
