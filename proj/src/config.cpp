#include "wsnsim/config.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "format.hpp"
#include "wsnsim/errors.hpp"

namespace wsnsim {

using detail::format_double;
using detail::trim;

namespace {

struct Key {
  const char* name;
  std::function<void(ExperimentSpec&, std::string_view)> set;
  std::function<std::string(const ExperimentSpec&)> get;
};

[[noreturn]] void bad(const char* key, std::string_view value, const char* what) {
  throw ConfigError(std::string("key '") + key + "': " + what + " (got '" + std::string(value) + "')");
}

double to_double(const char* key, std::string_view v) {
  auto d = detail::parse_double(v);
  if (!d) bad(key, v, "expected a number");
  return *d;
}

template <class Int>
Int to_int(const char* key, std::string_view v) {
  auto i = detail::parse_int<Int>(v);
  if (!i) bad(key, v, "expected an integer");
  return *i;
}

template <class Int>
Int to_positive(const char* key, std::string_view v) {
  const Int i = to_int<Int>(key, v);
  if (i <= 0) bad(key, v, "must be positive");
  return i;
}

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto j = s.find_first_of(seps, i);
    const auto piece = trim(s.substr(i, j == std::string_view::npos ? s.size() - i : j - i));
    if (!piece.empty()) out.push_back(piece);
    if (j == std::string_view::npos) break;
    i = j + 1;
  }
  return out;
}

template <class Get>
Key real(const char* name, Get get) {
  return {name,
          [name, get](ExperimentSpec& s, std::string_view v) { get(s) = to_double(name, v); },
          [get](const ExperimentSpec& s) { return format_double(get(const_cast<ExperimentSpec&>(s))); }};
}

template <class Int, class Get>
Key integer(const char* name, Get get, bool positive) {
  return {name,
          [name, get, positive](ExperimentSpec& s, std::string_view v) {
            get(s) = positive ? to_positive<Int>(name, v) : to_int<Int>(name, v);
          },
          [get](const ExperimentSpec& s) { return std::to_string(get(const_cast<ExperimentSpec&>(s))); }};
}

const char* sensing_model_name(SensingModel m) {
  switch (m) {
    case SensingModel::kUniform: return "uniform";
    case SensingModel::kGaussian: return "gaussian";
    case SensingModel::kTrace: return "trace";
  }
  return "?";
}

const std::vector<Key>& keys() {
  static const std::vector<Key> table = [] {
    std::vector<Key> k;
    k.push_back(integer<int>("nodes", [](ExperimentSpec& s) -> int& { return s.scenario.node_count; }, true));
    k.push_back(real("region.width", [](ExperimentSpec& s) -> double& { return s.scenario.width; }));
    k.push_back(real("region.height", [](ExperimentSpec& s) -> double& { return s.scenario.height; }));
    k.push_back(real("bs.x", [](ExperimentSpec& s) -> double& { return s.scenario.bs.x; }));
    k.push_back(real("bs.y", [](ExperimentSpec& s) -> double& { return s.scenario.bs.y; }));
    k.push_back(real("radio.e_elec", [](ExperimentSpec& s) -> double& { return s.scenario.radio.e_elec; }));
    k.push_back(real("radio.eps_amp", [](ExperimentSpec& s) -> double& { return s.scenario.radio.eps_amp; }));
    k.push_back(integer<std::uint32_t>(
        "radio.data_bits", [](ExperimentSpec& s) -> std::uint32_t& { return s.scenario.radio.data_bits; }, true));
    k.push_back(integer<std::uint32_t>(
        "radio.ctrl_bits", [](ExperimentSpec& s) -> std::uint32_t& { return s.scenario.radio.ctrl_bits; }, false));
    k.push_back(real("radio.bandwidth", [](ExperimentSpec& s) -> double& { return s.scenario.radio.bandwidth; }));
    k.push_back(real("radio.e_agg", [](ExperimentSpec& s) -> double& { return s.scenario.radio.e_agg; }));
    k.push_back(real("energy.initial", [](ExperimentSpec& s) -> double& { return s.scenario.initial_energy; }));
    k.push_back(real("energy.floor_frac", [](ExperimentSpec& s) -> double& { return s.scenario.floor_fraction; }));
    k.push_back(integer<int>("rounds", [](ExperimentSpec& s) -> int& { return s.scenario.max_rounds; }, false));
    k.push_back(real("leach.p", [](ExperimentSpec& s) -> double& { return s.scenario.leach.p; }));
    k.push_back(integer<int>(
        "baseline.setup_period", [](ExperimentSpec& s) -> int& { return s.scenario.leach.setup_period; }, true));
    k.push_back(real("teen.hard_threshold", [](ExperimentSpec& s) -> double& { return s.scenario.teen.hard_threshold; }));
    k.push_back(real("teen.soft_threshold", [](ExperimentSpec& s) -> double& { return s.scenario.teen.soft_threshold; }));
    k.push_back({"apteen.attribute",
                 [](ExperimentSpec& s, std::string_view v) { s.scenario.apteen.attribute = std::string(v); },
                 [](const ExperimentSpec& s) { return s.scenario.apteen.attribute; }});
    k.push_back(real("apteen.hard_threshold", [](ExperimentSpec& s) -> double& { return s.scenario.apteen.hard_threshold; }));
    k.push_back(real("apteen.soft_threshold", [](ExperimentSpec& s) -> double& { return s.scenario.apteen.soft_threshold; }));
    k.push_back(integer<int>(
        "apteen.count_time", [](ExperimentSpec& s) -> int& { return s.scenario.apteen.count_time; }, true));
    k.push_back(integer<int>(
        "priya.clusters", [](ExperimentSpec& s) -> int& { return s.scenario.priya.num_clusters; }, true));
    k.push_back(real("priya.range_lo", [](ExperimentSpec& s) -> double& { return s.scenario.priya.range_lo; }));
    k.push_back(real("priya.range_hi", [](ExperimentSpec& s) -> double& { return s.scenario.priya.range_hi; }));
    k.push_back(real("priya.ch_min_energy_frac",
                     [](ExperimentSpec& s) -> double& { return s.scenario.priya.ch_min_energy_frac; }));
    k.push_back({"sensing.model",
                 [](ExperimentSpec& s, std::string_view v) {
                   for (auto m : {SensingModel::kUniform, SensingModel::kGaussian, SensingModel::kTrace})
                     if (v == sensing_model_name(m)) {
                       s.scenario.sensing.model = m;
                       return;
                     }
                   bad("sensing.model", v, "expected uniform, gaussian or trace");
                 },
                 [](const ExperimentSpec& s) { return std::string(sensing_model_name(s.scenario.sensing.model)); }});
    k.push_back(real("sensing.lo", [](ExperimentSpec& s) -> double& { return s.scenario.sensing.lo; }));
    k.push_back(real("sensing.hi", [](ExperimentSpec& s) -> double& { return s.scenario.sensing.hi; }));
    k.push_back(real("sensing.mean", [](ExperimentSpec& s) -> double& { return s.scenario.sensing.mean; }));
    k.push_back(real("sensing.stddev", [](ExperimentSpec& s) -> double& { return s.scenario.sensing.stddev; }));
    k.push_back({"sensing.trace",
                 [](ExperimentSpec& s, std::string_view v) {
                   auto& trace = s.scenario.sensing.trace;
                   trace.clear();
                   for (auto row : split(v, ";")) {
                     std::vector<double> values;
                     for (auto cell : split(row, " \t,")) values.push_back(to_double("sensing.trace", cell));
                     trace.push_back(std::move(values));
                   }
                 },
                 [](const ExperimentSpec& s) {
                   std::string out;
                   for (std::size_t r = 0; r < s.scenario.sensing.trace.size(); ++r) {
                     if (r) out += "; ";
                     const auto& row = s.scenario.sensing.trace[r];
                     for (std::size_t i = 0; i < row.size(); ++i) {
                       if (i) out += ' ';
                       out += format_double(row[i]);
                     }
                   }
                   return out;
                 }});
    k.push_back({"layout.positions",
                 [](ExperimentSpec& s, std::string_view v) {
                   auto& pts = s.scenario.positions;
                   pts.clear();
                   for (auto pair : split(v, ";")) {
                     auto xy = split(pair, " \t,");
                     if (xy.size() != 2) bad("layout.positions", pair, "expected 'x y' pairs separated by ';'");
                     pts.push_back({to_double("layout.positions", xy[0]), to_double("layout.positions", xy[1])});
                   }
                 },
                 [](const ExperimentSpec& s) {
                   std::string out;
                   for (std::size_t i = 0; i < s.scenario.positions.size(); ++i) {
                     if (i) out += "; ";
                     out += format_double(s.scenario.positions[i].x) + " " +
                            format_double(s.scenario.positions[i].y);
                   }
                   return out;
                 }});
    k.push_back({"experiment.protocols",
                 [](ExperimentSpec& s, std::string_view v) {
                   s.protocols.clear();
                   for (auto name : split(v, ", \t")) {
                     try {
                       s.protocols.push_back(parse_protocol(name));
                     } catch (const ConfigError&) {
                       bad("experiment.protocols", name, "unsupported protocol");
                     }
                   }
                 },
                 [](const ExperimentSpec& s) {
                   std::string out;
                   for (std::size_t i = 0; i < s.protocols.size(); ++i) {
                     if (i) out += ",";
                     out += protocol_name(s.protocols[i]);
                   }
                   return out;
                 }});
    k.push_back({"experiment.seeds",
                 [](ExperimentSpec& s, std::string_view v) {
                   s.seeds.clear();
                   for (auto seed : split(v, ", \t")) s.seeds.push_back(to_int<std::uint64_t>("experiment.seeds", seed));
                 },
                 [](const ExperimentSpec& s) {
                   std::string out;
                   for (std::size_t i = 0; i < s.seeds.size(); ++i) {
                     if (i) out += ",";
                     out += std::to_string(s.seeds[i]);
                   }
                   return out;
                 }});
    k.push_back({"experiment.out", [](ExperimentSpec& s, std::string_view v) { s.out_dir = std::string(v); },
                 [](const ExperimentSpec& s) { return s.out_dir; }});
    return k;
  }();
  return table;
}

}  // namespace

void ExperimentSpec::validate() const {
  if (protocols.empty()) throw ConfigError("experiment.protocols must not be empty");
  if (seeds.empty()) throw ConfigError("experiment.seeds must not be empty");
  if (out_dir.empty()) throw ConfigError("experiment.out must not be empty");
  if (scenario.apteen.attribute.empty() || scenario.apteen.attribute.find('#') != std::string::npos)
    throw ConfigError("apteen.attribute must be a non-empty label without '#'");
  for (auto p : protocols) {
    Scenario sc = scenario;
    sc.protocol = p;
    sc.validate();
  }
}

ExperimentSpec parse_config_text(std::string_view text) {
  ExperimentSpec spec;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    const auto& table = keys();
    auto it = std::find_if(table.begin(), table.end(), [&](const Key& k) { return key == k.name; });
    if (it == table.end()) throw ConfigError("unknown key '" + key + "' on line " + std::to_string(line_no));
    if (!seen.insert(key).second) throw ConfigError("key '" + key + "' given twice");
    it->set(spec, value);
  }
  spec.validate();
  return spec;
}

ExperimentSpec parse_config(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw IoError("config '" + path.string() + "' is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string emit_config(const ExperimentSpec& spec) {
  std::string out = "# resolved wsnsim configuration\n";
  for (const auto& k : keys()) {
    const auto v = k.get(spec);
    if (v.empty()) continue;
    out += k.name;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace wsnsim
