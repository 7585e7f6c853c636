// tetralab: runs the verification checks and prints one JSON report per line.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tetralab/error.hpp"
#include "tetralab/report.hpp"

namespace {

using namespace tetralab;

std::array<int, 3> parse_size(const std::string& s) { return TorusLattice::parse(s).sizes(); }

CubeDirections parse_dirs(const std::string& s) {
  std::vector<int> d;
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    if (c < '1' || c > '4') throw UsageError("--dirs takes three of 1..4, e.g. 1,2,3");
    d.push_back(c - '0');
  }
  if (d.size() != 3 || !(d[0] < d[1] && d[1] < d[2])) throw UsageError("--dirs takes three ascending directions");
  return {d[0], d[1], d[2]};
}

AReading parse_reading(const std::string& s) {
  if (s == "direction") return AReading::EdgeDirection;
  if (s == "value") return AReading::FixedValue;
  throw UsageError("--a-reading must be direction or value");
}

std::vector<std::string> read_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) {
    std::stringstream ss(w);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) words.push_back(part);
  }
  return words;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

int emit(const std::vector<Report>& reports, const std::string& emit_mode, const std::string& out_path) {
  std::ofstream file;
  if (!out_path.empty() && out_path != "-" && out_path != "json") {
    file.open(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  bool ok = true;
  for (const auto& r : reports) {
    if (emit_mode == "star" && !r.text.empty())
      out << r.text;
    else
      out << r.to_json().dump() << '\n';
    std::cerr << r.check << ": " << to_string(r.status) << " (" << static_cast<long long>(r.runtime_ms) << " ms)\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for tetrahedron-equation structures of the 3D Ising model"};
  app.require_subcommand(1);

  std::string size = "2x2x2", dirs = "1,2,3", method, emit_mode = "json", out_path, reading = "direction";
  unsigned threads = 0;

  auto* verify = app.add_subcommand("verify", "run a check and print its report");
  std::string check;
  std::vector<std::string> ids = check_ids();
  ids.push_back("all");
  verify->add_option("check", check, "check id")->required()->check(CLI::IsMember(ids));
  verify->add_option("--size", size, "lattice L1xL2xL3")->capture_default_str();
  verify->add_option("--dirs", dirs, "cube directions for the network weight")->capture_default_str();
  verify->add_option("--method", method, "partition: spin|edge|network|all");
  verify->add_option("--emit", emit_mode, "json or star")->check(CLI::IsMember({"json", "star"}))->capture_default_str();
  verify->add_option("--threads", threads, "worker threads, 0 = hardware");
  verify->add_option("--out", out_path, "report file (default stdout)");
  verify->add_option("--a-reading", reading, "direction or value")->capture_default_str();

  auto* partition = app.add_subcommand("partition", "partition functions on a periodic lattice");
  partition->add_option("--size", size, "lattice L1xL2xL3")->capture_default_str();
  partition->add_option("--method", method, "spin|edge|network|all");
  partition->add_option("--dirs", dirs, "cube directions for the network weight")->capture_default_str();
  partition->add_option("--out", out_path, "json (stdout) or a file path");

  auto* codes = app.add_subcommand("codes", "cycle and code checks");
  codes->require_subcommand(1);
  auto* coil = codes->add_subcommand("coil", "check an induced cycle");
  int coil_n = 4;
  std::string cycle_words;
  coil->add_option("--n", coil_n, "cube dimension")->capture_default_str();
  coil->add_option("--cycle", cycle_words, "comma-separated vertices or '*' edges");
  coil->add_option("--out", out_path, "report file (default stdout)");
  auto* distance = codes->add_subcommand("distance", "minimum distance of a code");
  std::string words_file;
  distance->add_option("--words", words_file, "file of binary words")->required();
  distance->add_option("--out", out_path, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CheckOptions o;
    o.size = parse_size(size);
    o.dirs = parse_dirs(dirs);
    o.threads = threads;
    o.a_reading = parse_reading(reading);
    if (!method.empty()) o.method = method;

    if (*verify) return emit(run_check(check, o), emit_mode, out_path);
    if (*partition) return emit({partition_report(o)}, "json", out_path);
    if (*coil) return emit({codes_coil_report(coil_n, split_list(cycle_words))}, "json", out_path);
    if (*distance) return emit({codes_distance_report(read_words(words_file))}, "json", out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "structural failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
