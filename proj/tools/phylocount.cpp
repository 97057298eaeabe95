#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "phylocount/cli/count.hpp"
#include "phylocount/cli/output.hpp"
#include "phylocount/cli/verify.hpp"
#include "phylocount/netcore/serialize.hpp"
#include "phylocount/oracle/enumerate.hpp"
#include "phylocount/retvis/retvis.hpp"

namespace fs = std::filesystem;
using namespace phylocount;

namespace {

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw cli::UsageError("cannot write " + path.string());
  f << text;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
}

void make_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw cli::UsageError("cannot create directory " + dir + ": " + ec.message());
}

std::string numbered(const std::string& stem, std::size_t i) {
  std::ostringstream s;
  s << stem << "_" << std::setw(4) << std::setfill('0') << i;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of phylogenetic network classes"};
  app.require_subcommand(1);
  int threads = 1;
  int trunc_order = 64;
  std::string format;
  std::string out;

  auto* count = app.add_subcommand("count", "count one class at (l, k)");
  cli::CountRequest req;
  std::string count_format = "json";
  count->add_option("--class", req.cls, "network class")->required()->check(CLI::IsMember(cli::kClasses));
  count->add_option("--leaves", req.l, "number of leaves")->required();
  count->add_option("--rets", req.k, "number of reticulations")->capture_default_str();
  count->add_option("--method", req.method, "counting method")->capture_default_str()->check(
      CLI::IsMember(cli::kMethods));
  count->add_option("--format", count_format, "json, csv or text")->capture_default_str()->check(
      CLI::IsMember(cli::kFormats));
  count->add_option("--trunc-order", req.trunc_order, "series truncation order")->capture_default_str();
  count->add_option("--threads", req.threads, "worker threads for brute force")->capture_default_str();

  auto* table = app.add_subcommand("table", "matrix of exact counts");
  std::string table_class;
  long l_max = 10;
  int k_max = 3;
  std::string table_format = "csv";
  table->add_option("--class", table_class, "network class")->required()->check(CLI::IsMember(cli::kClasses));
  table->add_option("--lmax", l_max, "largest leaf count")->capture_default_str();
  table->add_option("--kmax", k_max, "largest reticulation count")->capture_default_str();
  table->add_option("--format", table_format, "json, csv or text")->capture_default_str()->check(
      CLI::IsMember(cli::kFormats));
  table->add_option("--out", out, "output file (default stdout)");
  table->add_option("--trunc-order", trunc_order, "series truncation order")->capture_default_str();
  table->add_option("--threads", threads, "worker threads for brute force")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  std::string suite = "all";
  std::string verify_format = "text";
  verify->add_option("--suite", suite, "suite name")->capture_default_str()->check(CLI::IsMember(cli::kSuites));
  verify->add_option("--format", verify_format, "json, csv or text")->capture_default_str()->check(
      CLI::IsMember(cli::kFormats));
  verify->add_option("--threads", threads, "worker threads for brute force")->capture_default_str();

  auto* asympt = app.add_subcommand("asympt", "compare exact counts with the asymptotic main term");
  std::string asympt_class = "gn";
  int asympt_k = 1;
  std::vector<long> asympt_ls{50, 100, 200, 400};
  std::string asympt_format = "text";
  asympt->add_option("--class", asympt_class, "gn or rv")->capture_default_str()->check(CLI::IsMember({"gn", "rv"}));
  asympt->add_option("--rets", asympt_k, "number of reticulations (0..3)")->capture_default_str();
  asympt->add_option("--leaves", asympt_ls, "leaf counts")->capture_default_str()->delimiter(',');
  asympt->add_option("--format", asympt_format, "json, csv or text")->capture_default_str()->check(
      CLI::IsMember(cli::kFormats));

  auto* enumerate = app.add_subcommand("enumerate", "write every network of a class as JSON and DOT");
  oracle::EnumerationJob job;
  std::string enum_class = "pn";
  std::string enum_dir;
  enumerate->add_option("--leaves", job.leaves, "number of leaves")->required();
  enumerate->add_option("--rets", job.reticulations, "number of reticulations")->capture_default_str();
  enumerate->add_option("--class", enum_class, "network class")->capture_default_str()->check(
      CLI::IsMember(cli::kClasses));
  enumerate->add_option("--out", enum_dir, "output directory")->required();
  enumerate->add_option("--threads", job.threads, "worker threads")->capture_default_str();

  auto* patterns = app.add_subcommand("patterns", "list the DAG pattern catalog D_m");
  int m = 3;
  std::string dot_dir;
  patterns->add_option("--m", m, "pattern size (2..8)")->capture_default_str();
  patterns->add_option("--dot", dot_dir, "directory for DOT drawings");

  auto* mtable = app.add_subcommand("M", "table of one-component counts M(l, k) as CSV");
  long m_lmax = 10, m_kmax = 3;
  mtable->add_option("--lmax", m_lmax, "largest leaf count")->capture_default_str();
  mtable->add_option("--kmax", m_kmax, "largest reticulation count")->capture_default_str();
  mtable->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) {
      std::cout << cli::render_count(cli::count(req), count_format);
    } else if (*table) {
      emit(cli::render_table(cli::make_table(table_class, l_max, k_max, trunc_order, threads), table_format), out);
    } else if (*verify) {
      const auto results = cli::run_suite(suite, threads);
      std::cout << cli::render_verify(results, verify_format);
      return cli::suite_passed(results) ? 0 : 1;
    } else if (*asympt) {
      std::cout << cli::render_asympt(asympt_class, asympt_k, cli::asympt_report(asympt_class, asympt_k, asympt_ls),
                                      asympt_format);
    } else if (*enumerate) {
      const auto pred = oracle::class_predicate(enum_class);
      make_dir(enum_dir);
      std::size_t n = 0;
      const std::string stem =
          enum_class + "_l" + std::to_string(job.leaves) + "_k" + std::to_string(job.reticulations);
      for (const auto& net : oracle::enumerate_networks(job)) {
        if (!pred(net)) continue;
        const std::string name = numbered(stem, ++n);
        write_file(fs::path(enum_dir) / (name + ".json"), netcore::to_json(net).dump(2) + "\n");
        write_file(fs::path(enum_dir) / (name + ".dot"), netcore::to_dot(net, name));
      }
      std::cout << n << " networks written to " << enum_dir << "\n";
    } else if (*patterns) {
      const auto& cat = retvis::enumerate_dm(m);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      if (!dot_dir.empty()) make_dir(dot_dir);
      std::size_t i = 0;
      for (const auto& e : cat.patterns) {
        arr.push_back({{"code", e.code}, {"automorphisms", e.automorphisms}, {"pattern", netcore::to_json(e.pattern)}});
        const std::string name = numbered("D" + std::to_string(m), ++i);
        if (!dot_dir.empty())
          write_file(fs::path(dot_dir) / (name + ".dot"), netcore::to_dot(e.pattern, e.automorphisms, name));
      }
      nlohmann::ordered_json j{{"m", m}, {"count", cat.patterns.size()}, {"patterns", arr}};
      std::cout << j.dump(2) << "\n";
    } else if (*mtable) {
      emit(cli::render_m_table(m_lmax, m_kmax), out);
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
