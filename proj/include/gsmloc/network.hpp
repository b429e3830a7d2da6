#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsmloc/ids.hpp"

namespace gsmloc {

enum class ServiceType { Voice, VoiceSms, VoiceData };

std::string_view to_string(ServiceType s) noexcept;

/// HLR master record contents, also copied into VLRs. The ciphering, billing
/// and GPRS fields are stored but never interpreted.
struct SubscriberProfile {
  Imsi imsi;
  std::string msisdn;
  std::string tmsi;
  std::string msrn;
  ServiceType service_type = ServiceType::Voice;
  std::string hlr_address;
  std::string ciphering_keys;
  std::string billing_info;
  std::string gprs_access_point;

  friend bool operator==(const SubscriberProfile&, const SubscriberProfile&) = default;
};

/// Deterministic profile for the n-th subscriber of a population.
SubscriberProfile make_default_profile(const Imsi& imsi, std::size_t ordinal);

/// Temporary identity derived from (IMSI, registration count) so reruns agree.
std::string derive_tmsi(const Imsi& imsi, std::uint64_t registration_count);

struct HlrRecord {
  SubscriberProfile profile;
  std::optional<MscId> serving_vlr;  // empty iff detached
  std::optional<LaId> current_la;
  std::uint64_t registrations = 0;
};

enum class VlrStatus { Idle, Busy };

struct VlrRecord {
  SubscriberProfile profile;
  LaId la;
  CellId cell;
  VlrStatus status = VlrStatus::Idle;
};

struct Location {
  LaId la;
  MscId msc;
};

/// One line of a topology description.
struct CellAssignment {
  CellId cell;
  LaId la;
  MscId msc;  // empty when the description omits it
  int line = 0;
};

using TopologySpec = std::vector<CellAssignment>;

/// Static cell -> LA -> MSC map. Construct through build_topology.
class NetworkTopology {
 public:
  const std::map<CellId, LaId>& cells() const noexcept { return cells_; }
  const std::map<LaId, MscId>& las() const noexcept { return las_; }
  const std::set<MscId>& mscs() const noexcept { return mscs_; }

  bool has_cell(const CellId& c) const { return cells_.count(c) != 0; }
  bool has_la(const LaId& la) const { return las_.count(la) != 0; }
  bool has_msc(const MscId& m) const { return mscs_.count(m) != 0; }

  /// Throws UnknownCell.
  Location locate(const CellId& cell) const;
  /// Throws UnknownLa.
  const MscId& msc_of(const LaId& la) const;
  /// Cells of an LA in sorted order. Throws UnknownLa.
  std::vector<CellId> cells_of(const LaId& la) const;

  friend NetworkTopology build_topology(const TopologySpec& spec);

 private:
  std::map<CellId, LaId> cells_;
  std::map<LaId, MscId> las_;
  std::set<MscId> mscs_;
};

/// Throws DuplicateCell, OrphanLa, ConflictingLa or EmptyTopology; messages
/// carry the offending line number when the spec came from a file.
NetworkTopology build_topology(const TopologySpec& spec);

/// `cell_id, la_id, msc_id` per line; blank lines and `#` comments ignored.
TopologySpec parse_topology_spec(std::istream& in);
NetworkTopology load_topology(const std::filesystem::path& path);

class Hlr {
 public:
  void provision(SubscriberProfile profile);
  bool is_provisioned(const Imsi& imsi) const { return records_.count(imsi) != 0; }

  /// Throws UnknownImsi.
  const HlrRecord& lookup(const Imsi& imsi) const;

  /// Points the subscriber at a new serving VLR and returns the previous one.
  /// Throws UnknownImsi.
  std::optional<MscId> update_location(const Imsi& imsi, const MscId& new_vlr, const LaId& new_la);

  /// Clears the serving pointer. Throws UnknownImsi.
  std::optional<MscId> detach(const Imsi& imsi);

  /// Bumps and returns the registration counter. Throws UnknownImsi.
  std::uint64_t next_registration(const Imsi& imsi);

  const std::map<Imsi, HlrRecord>& records() const noexcept { return records_; }

 private:
  HlrRecord& mutable_record(const Imsi& imsi);
  std::map<Imsi, HlrRecord> records_;
};

/// Plain keyed VLR store.
class Vlr {
 public:
  void insert(VlrRecord record);
  std::optional<VlrRecord> lookup(const Imsi& imsi) const;
  VlrRecord* find(const Imsi& imsi);
  const VlrRecord* find(const Imsi& imsi) const;
  bool erase(const Imsi& imsi);
  bool contains(const Imsi& imsi) const { return records_.count(imsi) != 0; }
  std::size_t size() const noexcept { return records_.size(); }
  const std::map<Imsi, VlrRecord>& records() const noexcept { return records_; }

 private:
  std::map<Imsi, VlrRecord> records_;
};

}  // namespace gsmloc
