#include "gsmloc/network.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gsmloc/error.hpp"
#include "text.hpp"

namespace gsmloc {

std::string_view to_string(ServiceType s) noexcept {
  switch (s) {
    case ServiceType::Voice: return "voice";
    case ServiceType::VoiceSms: return "voice+sms";
    case ServiceType::VoiceData: return "voice+data";
  }
  return "voice";
}

SubscriberProfile make_default_profile(const Imsi& imsi, std::size_t ordinal) {
  char buf[32];
  SubscriberProfile p;
  p.imsi = imsi;
  std::snprintf(buf, sizeof buf, "+9194%08zu", ordinal);
  p.msisdn = buf;
  p.tmsi = derive_tmsi(imsi, 0);
  std::snprintf(buf, sizeof buf, "+9198%08zu", ordinal);
  p.msrn = buf;
  p.service_type = static_cast<ServiceType>(ordinal % 3);
  p.hlr_address = "hlr-1";
  p.ciphering_keys = "kc-" + imsi.str();
  p.billing_info = "prepaid";
  p.gprs_access_point = "internet";
  return p;
}

std::string derive_tmsi(const Imsi& imsi, std::uint64_t registration_count) {
  const auto h = text::fnv1a(std::to_string(registration_count), text::fnv1a(imsi.str()));
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(h & 0xffffffffu));
  return buf;
}

Location NetworkTopology::locate(const CellId& cell) const {
  const auto it = cells_.find(cell);
  if (it == cells_.end()) throw Error(ErrorCode::UnknownCell, "unknown cell '" + cell.str() + "'");
  return {it->second, las_.at(it->second)};
}

const MscId& NetworkTopology::msc_of(const LaId& la) const {
  const auto it = las_.find(la);
  if (it == las_.end()) throw Error(ErrorCode::UnknownLa, "unknown location area '" + la.str() + "'");
  return it->second;
}

std::vector<CellId> NetworkTopology::cells_of(const LaId& la) const {
  msc_of(la);
  std::vector<CellId> out;
  for (const auto& [cell, owner] : cells_)
    if (owner == la) out.push_back(cell);
  return out;
}

namespace {

std::string at_line(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : std::string{}; }

}  // namespace

NetworkTopology build_topology(const TopologySpec& spec) {
  if (spec.empty()) throw Error(ErrorCode::EmptyTopology, "topology lists no cells");
  NetworkTopology topo;
  for (const auto& a : spec) {
    if (a.cell.empty() || a.la.empty())
      throw Error(ErrorCode::Parse, at_line(a.line) + "cell and location area ids must be non-empty");
    if (a.msc.empty())
      throw Error(ErrorCode::OrphanLa, at_line(a.line) + "location area '" + a.la.str() + "' has no MSC");
    if (!topo.cells_.emplace(a.cell, a.la).second)
      throw Error(ErrorCode::DuplicateCell, at_line(a.line) + "cell '" + a.cell.str() + "' listed more than once");
    const auto [it, inserted] = topo.las_.emplace(a.la, a.msc);
    if (!inserted && it->second != a.msc)
      throw Error(ErrorCode::ConflictingLa, at_line(a.line) + "location area '" + a.la.str() +
                                                "' assigned to both '" + it->second.str() + "' and '" +
                                                a.msc.str() + "'");
    topo.mscs_.insert(a.msc);
  }
  return topo;
}

TopologySpec parse_topology_spec(std::istream& in) {
  TopologySpec spec;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto body = text::strip_comment(raw);
    if (body.empty()) continue;
    auto fields = text::split(body, ',');
    if (fields.size() == 2) fields.emplace_back();
    if (fields.size() != 3)
      throw Error(ErrorCode::Parse, at_line(line) + "expected 'cell_id, la_id, msc_id'");
    spec.push_back({CellId(fields[0]), LaId(fields[1]), MscId(fields[2]), line});
  }
  return spec;
}

NetworkTopology load_topology(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open topology file '" + path.string() + "'");
  try {
    return build_topology(parse_topology_spec(in));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void Hlr::provision(SubscriberProfile profile) {
  auto imsi = profile.imsi;
  if (imsi.empty()) throw Error(ErrorCode::UnknownImsi, "cannot provision an empty IMSI");
  records_.insert_or_assign(std::move(imsi), HlrRecord{std::move(profile), std::nullopt, std::nullopt, 0});
}

const HlrRecord& Hlr::lookup(const Imsi& imsi) const {
  const auto it = records_.find(imsi);
  if (it == records_.end()) throw Error(ErrorCode::UnknownImsi, "IMSI '" + imsi.str() + "' not provisioned");
  return it->second;
}

HlrRecord& Hlr::mutable_record(const Imsi& imsi) {
  const auto it = records_.find(imsi);
  if (it == records_.end()) throw Error(ErrorCode::UnknownImsi, "IMSI '" + imsi.str() + "' not provisioned");
  return it->second;
}

std::optional<MscId> Hlr::update_location(const Imsi& imsi, const MscId& new_vlr, const LaId& new_la) {
  auto& rec = mutable_record(imsi);
  auto previous = std::exchange(rec.serving_vlr, new_vlr);
  rec.current_la = new_la;
  return previous;
}

std::optional<MscId> Hlr::detach(const Imsi& imsi) {
  auto& rec = mutable_record(imsi);
  rec.current_la.reset();
  return std::exchange(rec.serving_vlr, std::nullopt);
}

std::uint64_t Hlr::next_registration(const Imsi& imsi) { return ++mutable_record(imsi).registrations; }

void Vlr::insert(VlrRecord record) {
  auto imsi = record.profile.imsi;
  records_.insert_or_assign(std::move(imsi), std::move(record));
}

std::optional<VlrRecord> Vlr::lookup(const Imsi& imsi) const {
  const auto it = records_.find(imsi);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

VlrRecord* Vlr::find(const Imsi& imsi) {
  const auto it = records_.find(imsi);
  return it == records_.end() ? nullptr : &it->second;
}

const VlrRecord* Vlr::find(const Imsi& imsi) const {
  const auto it = records_.find(imsi);
  return it == records_.end() ? nullptr : &it->second;
}

bool Vlr::erase(const Imsi& imsi) { return records_.erase(imsi) != 0; }

}  // namespace gsmloc
