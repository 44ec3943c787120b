#include "fdsim/scenario.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fdsim/errors.hpp"

namespace fdsim {

const char* to_string(Placement p) {
  return p == Placement::AllOnCoreZero ? "all_on_core0" : "round_robin";
}

void Scenario::validate() const {
  auto fail = [](const std::string& msg, const std::string& field) {
    throw ValidationError("invalid scenario: " + msg, field);
  };

  if (cores < 1) fail("cores must be >= 1", "cores");
  if (ring_size < 1) fail("ring_size must be >= 1", "ring_size");
  if (service_rate_pps <= 0.0) fail("service_rate_pps must be > 0", "service_rate_pps");

  if (scheduler.interval_s <= 0.0) fail("scheduler.interval_s must be > 0", "scheduler.interval_s");
  if (scheduler.migrate_prob < 0.0 || scheduler.migrate_prob > 1.0) {
    fail("scheduler.migrate_prob must be in [0,1]", "scheduler.migrate_prob");
  }

  if (fd.sample_rate < 1) fail("fd.sample_rate must be >= 1", "fd.sample_rate");

  if (rss.indirection_len < 1 || !std::has_single_bit(rss.indirection_len)) {
    fail("rss.indirection_len must be a power of two", "rss.indirection_len");
  }
  if (rss.hash_key.size() < 16) {
    fail("rss.hash_key must be at least 16 bytes", "rss.hash_key");
  }

  if (workload.n_flows < 1) fail("workload.n_flows must be >= 1", "workload.n_flows");
  if (workload.duration_s <= 0.0) fail("workload.duration_s must be > 0", "workload.duration_s");
  const bool per_flow = workload.per_flow_pps > 0.0;
  const bool total = workload.total_pps > 0.0;
  if (per_flow == total) {
    fail("exactly one of workload.per_flow_pps / workload.total_pps must be set",
         "workload.per_flow_pps");
  }
  if (std::uint32_t(base_flow.src_port) + workload.n_flows - 1 > 65535) {
    fail("workload.n_flows overflows the source port range", "workload.n_flows");
  }

  if (seeds.empty()) fail("seeds must not be empty", "seeds");
  if (outputs.summary_path.empty()) fail("outputs.summary must not be empty", "outputs.summary");
}

namespace {

struct Cursor {
  std::string_view source;
  int line = 0;
};

[[noreturn]] void parse_fail(const Cursor& c, const std::string& msg) {
  std::ostringstream os;
  os << c.source << ":" << c.line << ": " << msg;
  throw ParseError(os.str(), c.line);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(const Cursor& c, std::string_view v) {
  double out = 0.0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    parse_fail(c, "expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

std::uint64_t parse_uint(const Cursor& c, std::string_view v) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    parse_fail(c, "expected a non-negative integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(const Cursor& c, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  parse_fail(c, "expected a boolean, got '" + std::string(v) + "'");
}

std::vector<std::uint64_t> parse_uint_list(const Cursor& c, std::string_view v) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    std::size_t comma = v.find(',', pos);
    std::string_view item = trim(v.substr(pos, comma == v.npos ? v.npos : comma - pos));
    if (item.empty()) parse_fail(c, "empty element in list");
    out.push_back(parse_uint(c, item));
    if (comma == v.npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::uint8_t> parse_hex_bytes(const Cursor& c, std::string_view v) {
  if (v.size() % 2 != 0) parse_fail(c, "hex string must have an even number of digits");
  auto nibble = [&](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    parse_fail(c, std::string("invalid hex digit '") + ch + "'");
  };
  std::vector<std::uint8_t> out;
  out.reserve(v.size() / 2);
  for (std::size_t i = 0; i < v.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nibble(v[i]) * 16 + nibble(v[i + 1])));
  }
  return out;
}

SchedulerPolicy parse_policy(const Cursor& c, std::string_view v) {
  if (v == "pinned") return SchedulerPolicy::Pinned;
  if (v == "periodic_random") return SchedulerPolicy::PeriodicRandom;
  if (v == "load_balance") return SchedulerPolicy::LoadBalance;
  parse_fail(c, "unknown scheduler policy '" + std::string(v) +
                    "' (pinned | periodic_random | load_balance)");
}

Placement parse_placement(const Cursor& c, std::string_view v) {
  if (v == "all_on_core0") return Placement::AllOnCoreZero;
  if (v == "round_robin") return Placement::RoundRobin;
  parse_fail(c, "unknown placement '" + std::string(v) + "' (all_on_core0 | round_robin)");
}

ArrivalKind parse_arrival(const Cursor& c, std::string_view v) {
  if (v == "constant") return ArrivalKind::ConstantRate;
  if (v == "poisson") return ArrivalKind::Poisson;
  parse_fail(c, "unknown arrival kind '" + std::string(v) + "' (constant | poisson)");
}

}  // namespace

Scenario parse_scenario(std::string_view text, std::string_view source_name) {
  Scenario s;
  bool file_set_per_flow = false;
  bool file_set_total = false;

  Cursor cur{source_name, 0};
  std::string section;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
    pos = (nl == text.npos) ? text.size() + 1 : nl + 1;
    ++cur.line;

    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(cur, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "scheduler" && section != "fd" && section != "rss" &&
          section != "workload" && section != "outputs") {
        parse_fail(cur, "unknown section [" + section + "]");
      }
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == line.npos) parse_fail(cur, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) parse_fail(cur, "missing key before '='");
    if (value.empty()) parse_fail(cur, "missing value for key '" + key + "'");

    auto unknown = [&]() -> void {
      std::string where = section.empty() ? "top level" : "[" + section + "]";
      parse_fail(cur, "unknown key '" + key + "' in " + where);
    };

    if (section.empty()) {
      if (key == "id") s.id = std::string(value);
      else if (key == "cores") s.cores = static_cast<std::uint32_t>(parse_uint(cur, value));
      else if (key == "ring_size") s.ring_size = static_cast<std::uint32_t>(parse_uint(cur, value));
      else if (key == "service_rate_pps") s.service_rate_pps = parse_number(cur, value);
      else if (key == "exponential_service") s.exponential_service = parse_bool(cur, value);
      else if (key == "seeds") s.seeds = parse_uint_list(cur, value);
      else unknown();
    } else if (section == "scheduler") {
      if (key == "policy") s.scheduler.policy = parse_policy(cur, value);
      else if (key == "interval_s") s.scheduler.interval_s = parse_number(cur, value);
      else if (key == "migrate_prob") s.scheduler.migrate_prob = parse_number(cur, value);
      else if (key == "placement") s.scheduler.placement = parse_placement(cur, value);
      else unknown();
    } else if (section == "fd") {
      if (key == "enabled") s.fd.enabled = parse_bool(cur, value);
      else if (key == "sample_rate") s.fd.sample_rate = static_cast<std::uint32_t>(parse_uint(cur, value));
      else if (key == "preinstall") s.fd.preinstall = parse_bool(cur, value);
      else unknown();
    } else if (section == "rss") {
      if (key == "indirection_len") s.rss.indirection_len = static_cast<std::uint32_t>(parse_uint(cur, value));
      else if (key == "hash_key") s.rss.hash_key = parse_hex_bytes(cur, value);
      else unknown();
    } else if (section == "workload") {
      if (key == "n_flows") s.workload.n_flows = static_cast<std::uint32_t>(parse_uint(cur, value));
      else if (key == "per_flow_pps") { s.workload.per_flow_pps = parse_number(cur, value); file_set_per_flow = true; }
      else if (key == "total_pps") { s.workload.total_pps = parse_number(cur, value); file_set_total = true; }
      else if (key == "arrival") s.workload.arrival = parse_arrival(cur, value);
      else if (key == "duration_s") s.workload.duration_s = parse_number(cur, value);
      else if (key == "tx_per_delivery") s.workload.tx_per_delivery = static_cast<std::uint32_t>(parse_uint(cur, value));
      else unknown();
    } else if (section == "outputs") {
      if (key == "summary") s.outputs.summary_path = std::string(value);
      else if (key == "trace") s.outputs.trace_path = std::string(value);
      else unknown();
    }
  }

  // A file that picks per_flow_pps replaces the default aggregate budget.
  if (file_set_per_flow && !file_set_total) s.workload.total_pps = 0.0;

  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file: " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

}  // namespace fdsim
