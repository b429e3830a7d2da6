#include "gsmloc/simulator.hpp"

#include <iomanip>
#include <sstream>

#include "gsmloc/error.hpp"
#include "text.hpp"

namespace gsmloc {

std::string_view to_string(Scheme s) noexcept { return s == Scheme::Baseline ? "baseline" : "intelligent"; }

std::optional<Scheme> parse_scheme(std::string_view s) {
  s = text::trim(s);
  if (s == "baseline") return Scheme::Baseline;
  if (s == "intelligent") return Scheme::Intelligent;
  return std::nullopt;
}

namespace {

class Engine {
 public:
  Engine(const NetworkTopology& topology, Scheme scheme, const SimOptions& options)
      : net_(topology, options.tier), scheme_(scheme), options_(options) {}

  SimulationResult run(const Trace& trace) {
    validate_trace(trace, net_.topology());
    const auto population = population_of(trace);
    for (std::size_t i = 0; i < population.size(); ++i) net_.provision(make_default_profile(population[i], i));
    for (const auto& msc : net_.topology().mscs()) result_.metrics.per_msc[msc];
    if (!trace.empty())
      for (std::int64_t d = 0; d <= day_of(trace.back().time); ++d) result_.metrics.per_day[d];

    for (std::size_t i = 0; i < trace.size(); ++i) {
      advance_to(trace[i].time);
      const auto before = result_.log.size();
      handle(trace[i], i);
      for (auto k = before; k < result_.log.size(); ++k) result_.metrics.account(result_.log[k]);
    }

    SimTime end = options_.horizon_days * kSecondsPerDay;
    if (!trace.empty()) {
      const SimTime last_day_end = (day_of(trace.back().time) + 1) * kSecondsPerDay;
      end = std::max(end, last_day_end);
    }
    advance_to(end);
    return std::move(result_);
  }

 private:
  bool intelligent() const { return scheme_ == Scheme::Intelligent; }

  void advance_to(SimTime t) {
    while (next_boundary_ <= t) {
      if (intelligent()) {
        for (auto& [msc, tv] : net_.vlrs()) {
          const auto evicted = tv.on_day_boundary(next_boundary_);
          if (!evicted.empty())
            result_.metrics.add(Counter::Tier2Evictions, msc, day_of(next_boundary_), evicted.size());
        }
      }
      next_boundary_ += kSecondsPerDay;
    }
  }

  void registration(const TraceEvent& e, const CellId& cell) {
    const auto where = net_.topology().locate(cell);
    const auto day = day_of(e.time);
    if (intelligent()) {
      switch (intelligent_register(net_, e.imsi, cell, e.time, result_.log, options_.intelligent)) {
        case IntelligentOutcome::Tier1Hit: result_.metrics.add(Counter::RegistrationsTier1Hit, where.msc, day); break;
        case IntelligentOutcome::Tier2HitPromoted:
          result_.metrics.add(Counter::RegistrationsTier2Hit, where.msc, day);
          break;
        case IntelligentOutcome::MissFullProcedure:
          result_.metrics.add(Counter::RegistrationsFull, where.msc, day);
          break;
      }
    } else {
      const auto outcome = register_arrival(net_, e.imsi, cell, e.time, result_.log);
      result_.metrics.add(outcome == RegistrationOutcome::AlreadyKnown ? Counter::RegistrationsTier1Hit
                                                                       : Counter::RegistrationsFull,
                          where.msc, day);
    }
  }

  void call(const TraceEvent& e, std::size_t index) {
    CallRecord rec{index, e.imsi, e.callee(), false, std::nullopt, std::nullopt};
    const auto& caller = net_.hlr().lookup(e.imsi);
    // Attribute failures to the caller's MSC when it has one.
    const MscId attribution = caller.serving_vlr ? *caller.serving_vlr : MscId();
    try {
      auto route = intelligent() ? intelligent_deliver(net_, e.imsi, e.callee(), e.time, result_.log)
                                 : deliver_call(net_, e.imsi, e.callee(), e.time, result_.log);
      release_tldn(net_, route.tldn);
      rec.delivered = true;
      rec.called_msc = route.called_msc;
      result_.metrics.add(Counter::CallsDelivered, route.calling_msc, day_of(e.time));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::CalleeDetached && err.code() != ErrorCode::CallerDetached) throw;
      rec.failure = err.code();
      result_.metrics.total[Counter::CallsFailed] += 1;
      result_.metrics.per_day[day_of(e.time)][Counter::CallsFailed] += 1;
      if (!attribution.empty()) result_.metrics.per_msc[attribution][Counter::CallsFailed] += 1;
    }
    result_.calls.push_back(std::move(rec));
  }

  void handle(const TraceEvent& e, std::size_t index) {
    switch (e.kind) {
      case EventKind::PowerOn: registration(e, e.cell()); break;
      case EventKind::Move: {
        const auto* current = net_.serving_record(e.imsi);
        if (current == nullptr) break;
        if (current->la == net_.topology().locate(e.cell()).la)
          intra_la_move(net_, e.imsi, e.cell());
        else
          registration(e, e.cell());
        break;
      }
      case EventKind::PowerOff:
        power_off(net_, e.imsi, e.time, intelligent() ? CancelEffect::Demote : CancelEffect::Delete);
        break;
      case EventKind::Call: call(e, index); break;
    }
  }

  Network net_;
  Scheme scheme_;
  SimOptions options_;
  SimulationResult result_;
  SimTime next_boundary_ = kSecondsPerDay;
};

}  // namespace

SimulationResult run_simulation(const NetworkTopology& topology, const Trace& trace, Scheme scheme,
                                const SimOptions& options) {
  return Engine(topology, scheme, options).run(trace);
}

Comparison compare_schemes(const NetworkTopology& topology, const Trace& trace, const SimOptions& options) {
  Comparison c;
  c.baseline = run_simulation(topology, trace, Scheme::Baseline, options);
  c.intelligent = run_simulation(topology, trace, Scheme::Intelligent, options);

  const auto b = c.baseline.metrics.total.hlr_queries();
  const auto i = c.intelligent.metrics.total.hlr_queries();
  if (i > b) {
    c.dominance_holds = false;
    c.violations.push_back("intelligent scheme issued " + std::to_string(i) + " HLR profile/location queries, baseline " +
                           std::to_string(b));
  }
  const auto& bc = c.baseline.calls;
  const auto& ic = c.intelligent.calls;
  if (bc.size() != ic.size()) {
    c.routing_equivalent = false;
    c.violations.push_back("call counts differ");
  } else {
    for (std::size_t k = 0; k < bc.size(); ++k) {
      if (bc[k].delivered != ic[k].delivered || bc[k].called_msc != ic[k].called_msc) {
        c.routing_equivalent = false;
        c.violations.push_back("call at event " + std::to_string(bc[k].event_index) + " routed differently");
      }
    }
  }
  return c;
}

namespace {

struct ReportRow {
  std::string scope;
  std::string key;
  Counter counter;
  std::uint64_t baseline;
  std::uint64_t intelligent;
};

std::vector<ReportRow> report_rows(const Comparison& c) {
  std::vector<ReportRow> rows;
  auto emit = [&](const std::string& scope, const std::string& key, const Counters& b, const Counters& i) {
    for (auto counter : kAllCounters) rows.push_back({scope, key, counter, b[counter], i[counter]});
  };
  emit("total", "all", c.baseline.metrics.total, c.intelligent.metrics.total);
  for (const auto& [msc, counters] : c.baseline.metrics.per_msc)
    emit("msc", msc.str(), counters, c.intelligent.metrics.msc(msc));
  return rows;
}

std::string signed_delta(std::uint64_t baseline, std::uint64_t intelligent) {
  const auto d = static_cast<std::int64_t>(intelligent) - static_cast<std::int64_t>(baseline);
  return (d > 0 ? "+" : "") + std::to_string(d);
}

}  // namespace

void write_report_csv(std::ostream& out, const Comparison& c) {
  out << "scope,key,counter,baseline,intelligent,delta\n";
  for (const auto& r : report_rows(c))
    out << r.scope << ',' << r.key << ',' << counter_name(r.counter) << ',' << r.baseline << ',' << r.intelligent
        << ',' << signed_delta(r.baseline, r.intelligent) << '\n';
  out << "check,cost_dominance,," << (c.dominance_holds ? "holds" : "violated") << ",,\n";
  out << "check,routing_equivalence,," << (c.routing_equivalent ? "holds" : "violated") << ",,\n";
}

void write_report_text(std::ostream& out, const Comparison& c) {
  const auto rows = report_rows(c);
  std::size_t key_width = 5;
  for (const auto& r : rows) key_width = std::max(key_width, r.scope.size() + 1 + r.key.size());
  out << std::left << std::setw(static_cast<int>(key_width)) << "scope" << "  " << std::setw(24) << "counter"
      << std::right << std::setw(10) << "baseline" << std::setw(13) << "intelligent" << std::setw(8) << "delta"
      << '\n';
  std::string last_scope;
  for (const auto& r : rows) {
    const auto scope = r.scope + (r.scope == "total" ? "" : ":" + r.key);
    if (!last_scope.empty() && scope != last_scope) out << '\n';
    last_scope = scope;
    out << std::left << std::setw(static_cast<int>(key_width)) << scope << "  " << std::setw(24)
        << counter_name(r.counter) << std::right << std::setw(10) << r.baseline << std::setw(13) << r.intelligent
        << std::setw(8) << signed_delta(r.baseline, r.intelligent) << '\n';
  }
  out << "\ncost dominance:      " << (c.dominance_holds ? "holds" : "VIOLATED") << '\n';
  out << "routing equivalence: " << (c.routing_equivalent ? "holds" : "VIOLATED") << '\n';
  for (const auto& v : c.violations) out << "  " << v << '\n';
}

void write_log_csv(std::ostream& out, const MessageLog& log) {
  out << "time_s,procedure,step,kind,from,to,imsi\n";
  for (const auto& m : log)
    out << m.time << ',' << to_string(m.label.procedure) << ',' << m.label.step << ',' << to_string(m.kind) << ','
        << to_string(m.from) << ',' << to_string(m.to) << ',' << m.subject << '\n';
}

namespace {

std::optional<Node> parse_node(std::string_view s) {
  if (s == "HLR") return Node::hlr();
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const auto role = s.substr(0, slash);
  std::string id(s.substr(slash + 1));
  if (role == "MS") return Node{NodeRole::Ms, id};
  if (role == "VLR") return Node{NodeRole::Vlr, id};
  if (role == "MSC") return Node{NodeRole::Msc, id};
  return std::nullopt;
}

}  // namespace

MessageLog read_log_csv(std::istream& in) {
  MessageLog log;
  std::string raw;
  int line = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::Parse, "log line " + std::to_string(line) + ": " + why);
  };
  if (!std::getline(in, raw)) return log;
  ++line;
  while (std::getline(in, raw)) {
    ++line;
    const auto body = text::trim(raw);
    if (body.empty()) continue;
    const auto f = text::split(body, ',');
    if (f.size() != 7) fail("expected 7 fields");
    const auto time = text::parse_number<SimTime>(f[0]);
    const auto kind = parse_message_kind(f[3]);
    const auto from = parse_node(f[4]);
    const auto to = parse_node(f[5]);
    if (!time || !kind || !from || !to) fail("malformed message");
    log.append({*time, step_of(*kind), *kind, *from, *to, Imsi(f[6])});
  }
  return log;
}

}  // namespace gsmloc
