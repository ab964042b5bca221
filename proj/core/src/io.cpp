#include "refnet/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace refnet {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

namespace {

// Iterates lines of a text blob, tolerating \r\n and a missing final newline.
struct LineCursor {
  std::string_view text;
  std::size_t pos = 0;

  bool next(std::string_view& line) {
    if (pos >= text.size()) return false;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return true;
  }

  // Skips blank lines; false at end of input.
  bool next_content(std::string_view& line) {
    while (next(line)) {
      if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
    }
    return false;
  }
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_u64(std::string_view token, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::runtime_error(std::string("expected an unsigned integer for ") + what +
                             ", got '" + std::string(token) + "'");
  return value;
}

std::uint32_t parse_u32(std::string_view token, const char* what) {
  const std::uint64_t value = parse_u64(token, what);
  if (value > UINT32_MAX)
    throw std::runtime_error(std::string(what) + " out of range: " + std::string(token));
  return static_cast<std::uint32_t>(value);
}

double parse_double(std::string_view token, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::runtime_error(std::string("expected a number for ") + what + ", got '" +
                             std::string(token) + "'");
  return value;
}

BigInt parse_bigint(std::string_view token, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::runtime_error(std::string("expected a decimal integer for ") + what +
                             ", got '" + std::string(token) + "'");
  return BigInt(std::string(token));
}

bool parse_flag01(std::string_view token, const char* what) {
  if (token == "0") return false;
  if (token == "1") return true;
  throw std::runtime_error(std::string("expected 0 or 1 for ") + what + ", got '" +
                           std::string(token) + "'");
}

void append_values(std::string& out, std::span<const std::uint32_t> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    out += ' ';
    out += std::to_string(values[i]);
  }
}

// Parses the arc-list prefix shared by digraph and network files. Stops at
// the first line whose leading token is not an integer (the network formats'
// `p:` line) and leaves the cursor on the line after it via `stop_line`.
Digraph parse_arc_list(LineCursor& cursor, std::string_view* stop_line) {
  std::string_view line;
  if (!cursor.next_content(line)) throw std::runtime_error("empty digraph file");
  auto header = split_ws(line);
  if (header.size() != 1) throw std::runtime_error("digraph header must be a single node count");
  const std::uint32_t n = parse_u32(header[0], "node count");
  Digraph g(n);
  if (stop_line) *stop_line = {};
  while (cursor.next_content(line)) {
    auto tokens = split_ws(line);
    if (stop_line && !tokens.empty() && (tokens[0].front() < '0' || tokens[0].front() > '9')) {
      *stop_line = line;
      return g;
    }
    if (tokens.size() != 2) throw std::runtime_error("arc lines must be 'source target'");
    const auto src = static_cast<NodeId>(parse_u32(tokens[0], "arc source"));
    const auto dst = static_cast<NodeId>(parse_u32(tokens[1], "arc target"));
    if (src < 1 || src > n || dst < 1 || dst > n)
      throw std::runtime_error("arc endpoint out of range");
    if (src == dst) throw std::runtime_error("self-loops are not representable");
    if (!g.add_arc(src, dst)) throw std::runtime_error("duplicate arc in file");
  }
  return g;
}

std::vector<std::uint32_t> parse_labeled_values(std::string_view line, std::string_view label,
                                                std::uint32_t n) {
  auto tokens = split_ws(line);
  if (tokens.empty() || tokens[0] != label)
    throw std::runtime_error("expected line starting with '" + std::string(label) + "'");
  if (tokens.size() != static_cast<std::size_t>(n) + 1)
    throw std::runtime_error("line '" + std::string(label) + "' must list one value per node");
  std::vector<std::uint32_t> values(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t i = 1; i <= n; ++i) values[i] = parse_u32(tokens[i], "node parameter");
  return values;
}

}  // namespace

std::string digraph_to_text(const Digraph& g) {
  std::string out = std::to_string(g.node_count());
  out += '\n';
  for (NodeId src = 1; src <= g.node_count(); ++src) {
    for (NodeId dst : g.out_neighbors(src)) {
      out += std::to_string(src);
      out += ' ';
      out += std::to_string(dst);
      out += '\n';
    }
  }
  return out;
}

Digraph digraph_from_text(std::string_view text) {
  LineCursor cursor{text};
  return parse_arc_list(cursor, nullptr);
}

std::string network_to_text(const Network& net) {
  std::string out = digraph_to_text(net.graph);
  out += "p:";
  append_values(out, net.p);
  out += "\nth:";
  append_values(out, net.th);
  out += '\n';
  return out;
}

Network network_from_text(std::string_view text) {
  LineCursor cursor{text};
  std::string_view p_line;
  Digraph g = parse_arc_list(cursor, &p_line);
  if (p_line.empty()) throw std::runtime_error("network file is missing the 'p:' line");
  const std::uint32_t n = g.node_count();
  Network net{std::move(g), parse_labeled_values(p_line, "p:", n), {}};
  std::string_view th_line;
  if (!cursor.next_content(th_line)) throw std::runtime_error("network file is missing the 'th:' line");
  net.th = parse_labeled_values(th_line, "th:", n);
  std::string_view extra;
  if (cursor.next_content(extra)) throw std::runtime_error("trailing content after 'th:' line");
  try {
    net.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  return net;
}

std::string state_to_text(const State& s) {
  std::string out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(s[i]);
  }
  out += '\n';
  return out;
}

State state_from_text(std::string_view text) {
  State s{0};
  LineCursor cursor{text};
  std::string_view line;
  while (cursor.next_content(line)) {
    for (std::string_view token : split_ws(line))
      s.push_back(parse_u32(token, "node state"));
  }
  if (s.size() == 1) throw std::runtime_error("empty state file");
  return s;
}

std::string summary_to_json(const DynamicsSummary& s) {
  nlohmann::json j;
  j["tau"] = s.tau;
  j["alpha"] = s.alpha.str();
  j["capped"] = s.capped();
  if (s.per_node_period.has_value()) {
    std::vector<std::uint64_t> periods(s.per_node_period->begin() + 1, s.per_node_period->end());
    j["per_node_period"] = periods;
  }
  return j.dump(2);
}

DynamicsSummary summary_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("summary JSON parse error: ") + e.what());
  }
  DynamicsSummary s;
  try {
    s.tau = j.at("tau").get<std::uint64_t>();
    s.alpha = parse_bigint(j.at("alpha").get<std::string>(), "alpha");
    const bool capped = j.at("capped").get<bool>();
    s.capped_alpha = capped;
    s.capped_tau = capped;
    if (j.contains("per_node_period")) {
      auto periods = j.at("per_node_period").get<std::vector<std::uint64_t>>();
      periods.insert(periods.begin(), 0);
      s.per_node_period = std::move(periods);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("summary JSON field error: ") + e.what());
  }
  return s;
}

namespace {

constexpr std::string_view kRecordsHeader = "n,c,rep,seed,alpha,tau,capped_alpha,capped_tau";
constexpr std::string_view kStatsHeader =
    "n,c,reps,median_alpha,p999_alpha,max_alpha,median_tau,p999_tau,max_tau,capped_fraction";

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Mean of the 2nd and 3rd largest, carried as twice its value; halves render
// exactly rather than in floating point.
template <typename T>
std::string render_half(const T& times2) {
  T half = times2 / 2;
  std::string out;
  if constexpr (std::is_same_v<T, BigInt>)
    out = half.str();
  else
    out = std::to_string(half);
  if (times2 % 2 != 0) out += ".5";
  return out;
}

template <typename Value, typename Render>
void append_optional(std::string& out, const std::optional<Value>& value, Render render) {
  out += ',';
  if (value.has_value())
    out += render(*value);
  else
    out += "nan";
}

}  // namespace

std::string records_to_csv(std::span<const SweepRecord> records) {
  std::string out{kRecordsHeader};
  out += '\n';
  for (const SweepRecord& r : records) {
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.c);
    out += ',';
    out += std::to_string(r.rep);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += r.alpha.str();
    out += ',';
    out += std::to_string(r.tau);
    out += ',';
    out += r.capped_alpha ? '1' : '0';
    out += ',';
    out += r.capped_tau ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::vector<SweepRecord> records_from_csv(std::string_view text) {
  LineCursor cursor{text};
  std::string_view line;
  if (!cursor.next_content(line) || line != kRecordsHeader)
    throw std::runtime_error("records CSV must start with the header '" +
                             std::string(kRecordsHeader) + "'");
  std::vector<SweepRecord> records;
  while (cursor.next_content(line)) {
    auto fields = split_csv(line);
    if (fields.size() != 8) throw std::runtime_error("records CSV row must have 8 fields");
    SweepRecord r;
    r.n = parse_u32(fields[0], "n");
    r.c = parse_double(fields[1], "c");
    r.rep = parse_u32(fields[2], "rep");
    r.seed = parse_u64(fields[3], "seed");
    r.alpha = parse_bigint(fields[4], "alpha");
    r.tau = parse_u64(fields[5], "tau");
    r.capped_alpha = parse_flag01(fields[6], "capped_alpha");
    r.capped_tau = parse_flag01(fields[7], "capped_tau");
    records.push_back(std::move(r));
  }
  return records;
}

std::string stats_to_csv(std::span<const CellStats> cells) {
  std::string out{kStatsHeader};
  out += '\n';
  for (const CellStats& cell : cells) {
    out += std::to_string(cell.n);
    out += ',';
    out += format_double(cell.c);
    out += ',';
    out += std::to_string(cell.reps);
    append_optional(out, cell.median_alpha, [](const BigInt& v) { return v.str(); });
    append_optional(out, cell.p999_alpha_times2, [](const BigInt& v) { return render_half(v); });
    append_optional(out, cell.max_alpha, [](const BigInt& v) { return v.str(); });
    append_optional(out, cell.median_tau, [](std::uint64_t v) { return std::to_string(v); });
    append_optional(out, cell.p999_tau_times2, [](std::uint64_t v) { return render_half(v); });
    append_optional(out, cell.max_tau, [](std::uint64_t v) { return std::to_string(v); });
    out += ',';
    out += format_double(cell.capped_fraction);
    out += '\n';
  }
  return out;
}

std::string sweep_config_to_text(const SweepConfig& cfg) {
  std::string out = "n_list";
  for (std::uint32_t n : cfg.n_list) {
    out += ' ';
    out += std::to_string(n);
  }
  out += "\nc_list";
  for (double c : cfg.c_list) {
    out += ' ';
    out += format_double(c);
  }
  out += "\nreps " + std::to_string(cfg.reps);
  out += "\np_lo " + std::to_string(cfg.p_lo);
  out += "\np_hi " + std::to_string(cfg.p_hi);
  out += "\nth_lo " + std::to_string(cfg.th_lo);
  out += "\nth_hi " + std::to_string(cfg.th_hi);
  out += "\nstep_cap " + std::to_string(cfg.step_cap);
  out += "\nbase_seed " + std::to_string(cfg.base_seed);
  out += '\n';
  return out;
}

SweepConfig sweep_config_from_text(std::string_view text) {
  SweepConfig cfg;
  bool saw_n_list = false;
  bool saw_c_list = false;
  LineCursor cursor{text};
  std::string_view line;
  while (cursor.next_content(line)) {
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::string_view key = tokens[0];
    std::span<const std::string_view> values(tokens.data() + 1, tokens.size() - 1);
    if (!values.empty() && values[0] == "=") values = values.subspan(1);
    auto single = [&]() -> std::string_view {
      if (values.size() != 1)
        throw std::runtime_error("config key '" + std::string(key) + "' takes one value");
      return values[0];
    };
    if (key == "n_list") {
      if (values.empty()) throw std::runtime_error("n_list needs at least one value");
      cfg.n_list.clear();
      for (auto v : values) cfg.n_list.push_back(parse_u32(v, "n_list"));
      saw_n_list = true;
    } else if (key == "c_list") {
      if (values.empty()) throw std::runtime_error("c_list needs at least one value");
      cfg.c_list.clear();
      for (auto v : values) cfg.c_list.push_back(parse_double(v, "c_list"));
      saw_c_list = true;
    } else if (key == "reps") {
      cfg.reps = parse_u32(single(), "reps");
    } else if (key == "p_lo") {
      cfg.p_lo = parse_u32(single(), "p_lo");
    } else if (key == "p_hi") {
      cfg.p_hi = parse_u32(single(), "p_hi");
    } else if (key == "th_lo") {
      cfg.th_lo = parse_u32(single(), "th_lo");
    } else if (key == "th_hi") {
      cfg.th_hi = parse_u32(single(), "th_hi");
    } else if (key == "step_cap") {
      cfg.step_cap = parse_u64(single(), "step_cap");
    } else if (key == "base_seed") {
      cfg.base_seed = parse_u64(single(), "base_seed");
    } else {
      throw std::runtime_error("unknown config key '" + std::string(key) + "'");
    }
  }
  if (!saw_n_list || !saw_c_list)
    throw std::runtime_error("config must set n_list and c_list");
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error while reading '" + path + "'");
  return std::move(buffer).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("error while writing '" + path + "'");
}

}  // namespace refnet
