#include "chordlab/cli.hpp"

#include "chordlab/analysis.hpp"
#include "chordlab/bijections.hpp"
#include "chordlab/enumeration.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/statistics.hpp"
#include "chordlab/triangles.hpp"
#include "chordlab/verify.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace chordlab::cli {

namespace {

int env_int(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr) return fallback;
  std::string_view text(value);
  int parsed = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(std::string(name) + " must be an integer, got \"" + value + "\"");
  }
  return parsed;
}

void require_within_cap(int n, int cap, const std::string& what) {
  if (n > cap) {
    throw ResourceLimitError(what + ": n = " + std::to_string(n) + " exceeds the enumeration cap " +
                             std::to_string(cap) + " (raise it with --cap or CHORDLAB_CAP)");
  }
}

ChordDiagram parse_diagram_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return parse_diagram_json(text);
  return parse_diagram(text);
}

std::string cmd_table(const RunConfig& c) {
  const auto kind = parse_triangle_kind(c.target);
  const auto format = parse_export_format(c.format.empty() ? "text" : c.format);
  const int n_max = c.n_max < 0 ? 8 : c.n_max;
  return export_triangle(kind, n_max, format, {c.cap, kRecurrenceRowLimit});
}

int cmd_verify(const RunConfig& c, const std::string& suite_name, std::string& text) {
  const Suite suite = parse_suite(suite_name);
  VerifyOptions options;
  options.n_max = c.n_max < 0 ? default_n_max(suite) : c.n_max;
  options.threads = c.threads;
  options.enumeration_cap = c.cap;
  const SuiteReport report = run_suite(suite, options);
  text = report.to_text();
  return report.passed() ? kExitOk : kExitFailure;
}

std::string cmd_enumerate(const RunConfig& c, bool as_histogram) {
  if (c.n < 0) throw ParseError("--n must be nonnegative");
  require_within_cap(c.n, c.cap, "enumerate");
  const Filter filter = Filter::parse(c.filter);
  const std::string format = c.format.empty() ? "text" : c.format;
  if (format != "text" && format != "json") {
    throw ParseError("enumerate supports --format text or json");
  }
  if (as_histogram) {
    const Statistic stat = Statistic::parse(c.statistic.empty() ? "sc" : c.statistic, filter);
    return histogram(c.n, filter, stat, c.threads).to_json() + "\n";
  }
  std::optional<Statistic> stat;
  if (!c.statistic.empty()) stat = Statistic::parse(c.statistic, filter);
  std::string out;
  DiagramStream stream = enumerate(c.n, filter);
  while (auto d = stream.next()) {
    out += format == "json" ? to_json(*d) : to_text(*d);
    if (stat) out += " " + std::to_string((*stat)(d->partners()));
    out += '\n';
  }
  return out;
}

std::string cmd_map(const std::string& map, const std::string& input, const std::string& mark,
                    std::optional<int> j) {
  if (map == "dyck2match") return to_text(dyck_to_matching(DyckPath::parse(input))) + "\n";
  if (map != "unwrap" && map != "rewrap" && map != "match2dyck" && map != "phi") {
    throw ParseError("unknown map \"" + map +
                     "\" (expected unwrap, rewrap, dyck2match, match2dyck or phi)");
  }
  const ChordDiagram d = parse_diagram_input(input);
  if (map == "unwrap") {
    if (mark.empty()) throw ParseError("unwrap needs --mark \"(i,i+1)\"");
    return to_text(unwrap(d, parse_chord(mark))) + "\n";
  }
  if (map == "rewrap") return to_text(rewrap(d)) + "\n";
  if (map == "match2dyck") return matching_to_dyck(d).to_string() + "\n";
  return to_text(phi(d, j.value_or(short_chords(d, 1)))) + "\n";
}

int cmd_analyze(const RunConfig& c, std::string& text) {
  const auto kind = parse_triangle_kind(c.target);
  const int n_max = c.n_max < 0 ? 20 : c.n_max;
  const std::string format = c.format.empty() ? "text" : c.format;
  if (format != "text" && format != "json") throw ParseError("analyze supports --format text or json");
  const auto reports = sweep(kind, n_max, c.threads, {c.cap, kRecurrenceRowLimit});
  text = format == "json" ? to_json(reports) + "\n" : to_table(reports);
  // Unimodality of L and log-concavity of T and E are theorems; a failure
  // there is an error. Log-concavity of L is only reported.
  for (const auto& r : reports) {
    if (!r.consistent()) return kExitFailure;
    if (kind == TriangleKind::L && !r.unimodal) return kExitFailure;
    if ((kind == TriangleKind::T || kind == TriangleKind::E) && !r.log_concave) return kExitFailure;
  }
  return kExitOk;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open --out file \"" + path + "\"");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"chordlab: exact enumeration and number triangles for linear chord diagrams",
               "chordlab"};
  app.require_subcommand(1);

  RunConfig config;
  std::optional<int> threads_flag;
  std::optional<int> cap_flag;
  std::string positional;
  std::string input;
  std::string mark;
  std::optional<int> j_flag;
  bool as_histogram = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads_flag, "worker threads (env CHORDLAB_THREADS)");
    sub->add_option("--cap", cap_flag, "largest n for enumeration-backed work (env CHORDLAB_CAP)");
    sub->add_option("--out", config.out_path, "write output to this file");
  };

  auto* table = app.add_subcommand("table", "print a number triangle");
  table->add_option("kind", positional, "L, T, E, narayana or sullivan")->required();
  table->add_option("--nmax", config.n_max, "last row");
  table->add_option("--format", config.format, "csv, json, bfile or text");
  common(table);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", positional,
                     "recurrence, egf, bijection, rowsum, expectation, narayana-transport, reversal")
      ->required();
  verify->add_option("--nmax", config.n_max, "last row");
  common(verify);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list diagrams or their histogram");
  enumerate_cmd->add_option("--n", config.n, "chord count")->required();
  enumerate_cmd->add_option("--filter", config.filter, "all, minlen=K, noncrossing, nonnesting");
  enumerate_cmd->add_option("--stat", config.statistic, "sc, scK or lr");
  enumerate_cmd->add_flag("--histogram", as_histogram, "print the statistic's histogram as JSON");
  enumerate_cmd->add_option("--format", config.format, "text or json");
  common(enumerate_cmd);

  auto* map_cmd = app.add_subcommand("map", "apply a bijection");
  map_cmd->add_option("map", positional, "unwrap, rewrap, dyck2match, match2dyck or phi")
      ->required();
  map_cmd->add_option("input", input, "diagram \"(a,b)(c,d)...\" or Dyck path")->required();
  map_cmd->add_option("--mark", mark, "marked chord for unwrap");
  map_cmd->add_option("--j", j_flag, "short chord count for phi (default: computed)");
  common(map_cmd);

  auto* analyze = app.add_subcommand("analyze", "unimodality and log-concavity of triangle rows");
  analyze->add_option("kind", positional, "L, T, E, narayana or sullivan")->required();
  analyze->add_option("--nmax", config.n_max, "last row");
  analyze->add_option("--format", config.format, "text or json");
  common(analyze);

  std::vector<std::string> argv_storage;
  argv_storage.emplace_back("chordlab");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "chordlab: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    config.threads = threads_flag ? *threads_flag : env_int("CHORDLAB_THREADS", 0);
    config.cap = cap_flag ? *cap_flag : env_int("CHORDLAB_CAP", kDefaultEnumerationCap);
    if (config.threads < 0) throw ParseError("--threads must be nonnegative");
    if (config.cap < 0) throw ParseError("--cap must be nonnegative");

    std::string text;
    int code = kExitOk;
    if (table->parsed()) {
      config.verb = "table";
      config.target = positional;
      text = cmd_table(config);
    } else if (verify->parsed()) {
      config.verb = "verify";
      config.target = positional;
      code = cmd_verify(config, config.target, text);
    } else if (enumerate_cmd->parsed()) {
      config.verb = "enumerate";
      text = cmd_enumerate(config, as_histogram);
    } else if (map_cmd->parsed()) {
      config.verb = "map";
      config.target = positional;
      text = cmd_map(config.target, input, mark, j_flag);
    } else if (analyze->parsed()) {
      config.verb = "analyze";
      config.target = positional;
      code = cmd_analyze(config, text);
    }
    emit(text, config.out_path, out);
    return code;
  } catch (const ParseError& e) {
    err << "chordlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "chordlab: " << e.what() << "\n";
    return kExitResource;
  } catch (const ValidationError& e) {
    err << "chordlab: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace chordlab::cli
