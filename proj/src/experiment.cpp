#include "wsnsim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "format.hpp"
#include "wsnsim/errors.hpp"

namespace wsnsim {

using detail::format_double;

namespace fs = std::filesystem;

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "NA";
  if constexpr (std::is_floating_point_v<T>)
    return format_double(*v);
  else
    return std::to_string(*v);
}

// Value of a series at `round`, holding the last recorded value past the end
// of a run. Runs with no rounds report the setup state.
template <class Field>
double at(const MetricsReport& r, std::size_t round, Field field, double empty) {
  if (r.rounds.empty()) return empty;
  return field(r.rounds[std::min(round, r.rounds.size() - 1)]);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

CsvTables render_csv(const ExperimentSpec& spec, const std::vector<MetricsReport>& reports) {
  CsvTables t;
  t.deaths = "round,protocol,alive_count,dead_pct\n";
  t.energy = "round,protocol,cumulative_joules\n";
  t.packets = "round,protocol,bs_packets_cum,ch_packets_cum\n";
  t.node_energy = "protocol,seed,node_id,dissipated_joules\n";
  t.summary =
      "protocol,seed,first_death_round,all_dead_round,formation_time_s,avg_delay_s,yield_ch_pps,"
      "yield_bs_pps\n";

  const double n = static_cast<double>(spec.scenario.node_count);
  for (auto protocol : spec.protocols) {
    std::vector<const MetricsReport*> runs;
    for (const auto& r : reports)
      if (r.protocol == protocol) runs.push_back(&r);
    const std::string name(protocol_name(protocol));

    std::size_t length = 0;
    for (const auto* r : runs) length = std::max(length, r->rounds.size());
    for (std::size_t round = 0; round < length; ++round) {
      std::vector<double> alive, joules, bs, ch;
      for (const auto* r : runs) {
        alive.push_back(at(*r, round, [](const RoundMetrics& m) { return double(m.alive); }, n));
        joules.push_back(at(*r, round, [](const RoundMetrics& m) { return m.cumulative_joules; }, r->setup_joules));
        bs.push_back(at(*r, round, [](const RoundMetrics& m) { return double(m.bs_packets); }, 0.0));
        ch.push_back(at(*r, round, [](const RoundMetrics& m) { return double(m.ch_packets); }, 0.0));
      }
      const std::string prefix = std::to_string(round) + "," + name + ",";
      const double a = median(alive);
      const double dead_pct = n > 0 ? 100.0 * (n - a) / n : 0.0;
      t.deaths += prefix + format_double(a) + "," + format_double(dead_pct) + "\n";
      t.energy += prefix + format_double(median(joules)) + "\n";
      t.packets += prefix + format_double(median(bs)) + "," + format_double(median(ch)) + "\n";
    }

    for (const auto* r : runs) {
      const std::string head = name + "," + std::to_string(r->seed) + ",";
      for (std::size_t i = 0; i < r->node_dissipation.size(); ++i)
        t.node_energy += head + std::to_string(i) + "," + format_double(r->node_dissipation[i]) + "\n";
      const auto& s = r->summary;
      t.summary += head + opt(s.first_death_round) + "," + opt(s.all_dead_round) + "," +
                   opt(s.cluster_formation_time) + "," + opt(s.avg_delay) + "," + opt(s.yield_ch) +
                   "," + opt(s.yield_bs) + "\n";
    }
  }
  return t;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned threads) {
  spec.validate();

  std::vector<Scenario> jobs;
  for (auto protocol : spec.protocols)
    for (auto seed : spec.seeds) {
      Scenario sc = spec.scenario;
      sc.protocol = protocol;
      sc.seed = seed;
      sc.keep_ledger = false;
      sc.keep_packets = false;
      jobs.push_back(std::move(sc));
    }

  ExperimentResult result;
  result.reports.resize(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        result.reports[i] = run(jobs[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const CsvTables tables = render_csv(spec, result.reports);
  const std::pair<const char*, const std::string*> files[] = {
      {"deaths.csv", &tables.deaths},         {"energy.csv", &tables.energy},
      {"packets.csv", &tables.packets},       {"node_energy.csv", &tables.node_energy},
      {"summary.csv", &tables.summary},
  };
  const std::string resolved = emit_config(spec);

  const fs::path out(spec.out_dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec || !fs::is_directory(out)) throw IoError("cannot create output directory '" + out.string() + "'");

  std::vector<std::pair<fs::path, fs::path>> staged;
  auto cleanup = [&] {
    for (const auto& [tmp, _] : staged) fs::remove(tmp, ec);
  };
  try {
    for (const auto& [name, content] : files) {
      const fs::path tmp = out / (std::string(".") + name + ".tmp");
      staged.emplace_back(tmp, out / name);
      write_file(tmp, *content);
    }
    const fs::path tmp = out / ".resolved.cfg.tmp";
    staged.emplace_back(tmp, out / "resolved.cfg");
    write_file(tmp, resolved);
  } catch (...) {
    cleanup();
    throw;
  }
  for (const auto& [tmp, final_path] : staged) {
    fs::rename(tmp, final_path, ec);
    if (ec) {
      cleanup();
      throw IoError("cannot rename into '" + final_path.string() + "': " + ec.message());
    }
    result.written.push_back(final_path.filename().string());
  }
  return result;
}

}  // namespace wsnsim
