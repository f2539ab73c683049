#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "wsnsim/config.hpp"
#include "wsnsim/errors.hpp"
#include "wsnsim/experiment.hpp"
#include "wsnsim/version.hpp"

namespace py = pybind11;
using namespace wsnsim;

namespace {

py::object maybe(const std::optional<double>& v) { return v ? py::cast(*v) : py::none(); }
py::object maybe(const std::optional<int>& v) { return v ? py::cast(*v) : py::none(); }

py::dict report_to_dict(const MetricsReport& r) {
  py::dict summary;
  const auto& s = r.summary;
  summary["first_death_round"] = maybe(s.first_death_round);
  summary["all_dead_round"] = maybe(s.all_dead_round);
  summary["formation_time_s"] = maybe(s.cluster_formation_time);
  summary["avg_delay_s"] = maybe(s.avg_delay);
  summary["yield_ch_pps"] = maybe(s.yield_ch);
  summary["yield_bs_pps"] = maybe(s.yield_bs);
  summary["elapsed_s"] = s.elapsed;
  summary["total_ch_packets"] = s.total_ch_packets;
  summary["total_bs_packets"] = s.total_bs_packets;

  std::vector<int> alive;
  std::vector<double> joules;
  std::vector<long> bs, ch;
  for (const auto& m : r.rounds) {
    alive.push_back(m.alive);
    joules.push_back(m.cumulative_joules);
    bs.push_back(m.bs_packets);
    ch.push_back(m.ch_packets);
  }
  py::dict series;
  series["alive"] = alive;
  series["cumulative_joules"] = joules;
  series["bs_packets"] = bs;
  series["ch_packets"] = ch;

  py::dict out;
  out["protocol"] = std::string(protocol_name(r.protocol));
  out["seed"] = r.seed;
  out["summary"] = summary;
  out["series"] = series;
  out["node_dissipation"] = r.node_dissipation;
  out["setup_joules"] = r.setup_joules;
  out["ledger_total"] = r.ledger_total;
  out["data_tx_joules"] = r.data_tx_joules;
  out["initial_total"] = r.initial_total;
  out["remaining_total"] = r.remaining_total;
  return out;
}

}  // namespace

PYBIND11_MODULE(_wsnsim, m) {
  m.doc() = "Clustered WSN routing simulator: PRIYA with LEACH/TEEN/APTEEN baselines";
  m.attr("__version__") = kVersion;

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<RadioParams>(m, "RadioParams")
      .def(py::init<>())
      .def_readwrite("e_elec", &RadioParams::e_elec)
      .def_readwrite("eps_amp", &RadioParams::eps_amp)
      .def_readwrite("data_bits", &RadioParams::data_bits)
      .def_readwrite("ctrl_bits", &RadioParams::ctrl_bits)
      .def_readwrite("bandwidth", &RadioParams::bandwidth)
      .def_readwrite("e_agg", &RadioParams::e_agg);

  m.def("tx_cost", &tx_cost, py::arg("bits"), py::arg("distance"), py::arg("radio") = RadioParams{});
  m.def("rx_cost", &rx_cost, py::arg("bits"), py::arg("radio") = RadioParams{});
  m.def("aggregate_cost", &aggregate_cost, py::arg("bits"), py::arg("n_inputs"),
        py::arg("radio") = RadioParams{});
  m.def("tx_delay", &tx_delay, py::arg("bits"), py::arg("radio") = RadioParams{});

  m.def("distance", [](std::pair<double, double> a, std::pair<double, double> b) {
    return distance({a.first, a.second}, {b.first, b.second});
  });

  m.def("leach_threshold", &leach_threshold, py::arg("p"), py::arg("r"), py::arg("in_g") = true);
  m.def(
      "teen_should_transmit",
      [](double value, std::optional<double> last_sent, double hard, double soft) {
        return teen_should_transmit(value, last_sent, {hard, soft});
      },
      py::arg("value"), py::arg("last_sent") = py::none(), py::arg("hard_threshold") = 30.0,
      py::arg("soft_threshold") = 2.0);
  m.def(
      "apteen_should_transmit",
      [](double value, std::optional<double> last_sent, int rounds_since_tx, double hard, double soft,
         int count_time) {
        ApteenConfig cfg;
        cfg.hard_threshold = hard;
        cfg.soft_threshold = soft;
        cfg.count_time = count_time;
        return apteen_should_transmit(value, last_sent, rounds_since_tx, cfg);
      },
      py::arg("value"), py::arg("last_sent") = py::none(), py::arg("rounds_since_tx") = 0,
      py::arg("hard_threshold") = 30.0, py::arg("soft_threshold") = 2.0, py::arg("count_time") = 5);
  m.def(
      "priya_classify",
      [](double value, double lo, double hi) { return std::string(reading_class_name(priya_classify(value, lo, hi))); },
      py::arg("value"), py::arg("lo") = 30.0, py::arg("hi") = 60.0);

  m.def("tdma_slots", [](std::vector<int> members) {
    std::vector<std::pair<int, int>> out;
    for (const auto& s : tdma_slots(members)) out.emplace_back(s.node_id, s.slot);
    return out;
  });

  m.def(
      "resolve_config", [](const std::string& text) { return emit_config(parse_config_text(text)); },
      py::arg("text") = "", "Parse a config and return its fully-resolved canonical text.");

  m.def(
      "simulate",
      [](const std::string& text, const std::string& protocol, std::uint64_t seed,
         std::optional<int> max_rounds) {
        ExperimentSpec spec = parse_config_text(text);
        Scenario sc = spec.scenario;
        sc.protocol = parse_protocol(protocol);
        sc.seed = seed;
        if (max_rounds) sc.max_rounds = *max_rounds;
        MetricsReport r;
        {
          py::gil_scoped_release release;
          r = run(sc);
        }
        return report_to_dict(r);
      },
      py::arg("config") = "", py::arg("protocol") = "priya", py::arg("seed") = 1,
      py::arg("max_rounds") = py::none(), "Run one scenario and return its metrics report.");

  m.def(
      "run_experiment",
      [](const std::string& text, std::optional<std::string> out_dir,
         std::optional<std::vector<std::string>> protocols,
         std::optional<std::vector<std::uint64_t>> seeds) {
        ExperimentSpec spec = parse_config_text(text);
        if (out_dir) spec.out_dir = *out_dir;
        if (protocols) {
          spec.protocols.clear();
          for (const auto& p : *protocols) spec.protocols.push_back(parse_protocol(p));
        }
        if (seeds) spec.seeds = *seeds;
        ExperimentResult res;
        {
          py::gil_scoped_release release;
          res = run_experiment(spec);
        }
        return res.written;
      },
      py::arg("config") = "", py::arg("out_dir") = py::none(), py::arg("protocols") = py::none(),
      py::arg("seeds") = py::none(), "Run every (protocol, seed) pair and write the CSV files.");
}
