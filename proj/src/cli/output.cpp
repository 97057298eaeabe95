#include "phylocount/cli/output.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "phylocount/galled/galled.hpp"
#include "phylocount/onecomp/onecomp.hpp"
#include "phylocount/retvis/retvis.hpp"

namespace phylocount::cli {
namespace {

void check_format(const std::string& format) {
  if (std::find(kFormats.begin(), kFormats.end(), format) == kFormats.end())
    throw UsageError("unknown format '" + format + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// Fixed-precision rendering so that output is byte-stable across runs.
std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string scientific(const LogValue& v) {
  return fixed(v.mantissa, 9) + "e" + (v.exponent < 0 ? "-" : "+") + std::to_string(std::abs(v.exponent));
}

}  // namespace

std::string render_count(const CountResult& r, const std::string& format) {
  check_format(format);
  const std::string value = r.value.get_str();
  if (format == "json") {
    nlohmann::ordered_json j{{"class", r.cls}, {"l", r.l},           {"k", r.k},
                             {"method", r.method}, {"value", value}, {"validity", r.validity}};
    return j.dump(2) + "\n";
  }
  if (format == "csv")
    return "class,l,k,method,value,validity\n" + r.cls + "," + std::to_string(r.l) + "," + std::to_string(r.k) + "," +
           r.method + "," + value + "," + r.validity + "\n";
  return r.cls + "(" + std::to_string(r.l) + "," + std::to_string(r.k) + ") = " + value + "  [method " + r.method +
         ", " + r.validity + "]\n";
}

CountTable make_table(const std::string& cls, long l_max, int k_max, int trunc_order, int threads) {
  if (l_max < 1 || k_max < 0) throw UsageError("table needs --lmax >= 1 and --kmax >= 0");
  CountTable t{cls, l_max, k_max, {}};
  for (long l = 1; l <= l_max; ++l) {
    std::vector<BigInt> row;
    for (int k = 0; k <= k_max; ++k) {
      try {
        row.push_back(count({cls, l, k, "auto", trunc_order, threads}).value);
      } catch (const UsageError& e) {
        throw UsageError("table " + cls + " cannot reach l=" + std::to_string(l) + ", k=" + std::to_string(k) + ": " +
                         e.what());
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_table(const CountTable& t, const std::string& format) {
  check_format(format);
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      nlohmann::ordered_json counts = nlohmann::ordered_json::array();
      for (const auto& v : t.rows[i]) counts.push_back(v.get_str());
      rows.push_back({{"l", static_cast<long>(i) + 1}, {"counts", counts}});
    }
    nlohmann::ordered_json j{{"class", t.cls}, {"lmax", t.l_max}, {"kmax", t.k_max}, {"rows", rows}};
    out << j.dump(2) << "\n";
  } else {
    const char* sep = format == "csv" ? "," : "\t";
    out << "l";
    for (int k = 0; k <= t.k_max; ++k) out << sep << "k=" << k;
    out << "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      out << i + 1;
      for (const auto& v : t.rows[i]) out << sep << v.get_str();
      out << "\n";
    }
  }
  return out.str();
}

std::vector<AsymptRow> asympt_report(const std::string& cls, int k, const std::vector<long>& ls) {
  if (cls != "gn" && cls != "rv") throw UsageError("asympt supports --class gn or rv");
  if (k < 0 || k > 3) throw UsageError("asympt supports 0 <= --rets <= 3");
  std::vector<AsymptRow> rows;
  for (long l : ls) {
    if (l < 1) throw UsageError("asympt needs leaves >= 1");
    AsymptRow r;
    r.l = l;
    r.exact = cls == "gn" ? galled::gn_count(l, k) : retvis::rv_count(l, k);
    r.main_term = galled::asympt_gn(l, k);
    r.ratio = galled::asympt_ratio(r.exact, l, k);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string render_asympt(const std::string& cls, int k, const std::vector<AsymptRow>& rows,
                          const std::string& format) {
  check_format(format);
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"l", r.l},
                     {"exact", r.exact.get_str()},
                     {"main_term", scientific(r.main_term)},
                     {"log_main_term", fixed(r.main_term.log_value, 9)},
                     {"ratio", fixed(r.ratio, 9)}});
    nlohmann::ordered_json j{{"class", cls}, {"k", k}, {"precision", "double, 9 decimals"}, {"rows", arr}};
    out << j.dump(2) << "\n";
    return out.str();
  }
  if (format == "csv") {
    out << "l,exact,main_term,log_main_term,ratio\n";
    for (const auto& r : rows)
      out << r.l << "," << r.exact.get_str() << "," << scientific(r.main_term) << ","
          << fixed(r.main_term.log_value, 9) << "," << fixed(r.ratio, 9) << "\n";
    return out.str();
  }
  out << cls << " k=" << k << " (main term and ratio in double precision, 9 decimals shown)\n";
  for (const auto& r : rows)
    out << "l=" << r.l << "  exact=" << r.exact.get_str() << "  main_term=" << scientific(r.main_term)
        << "  ratio=" << fixed(r.ratio, 9) << "\n";
  return out.str();
}

std::string render_verify(const std::vector<CheckResult>& results, const std::string& format) {
  check_format(format);
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : results)
      arr.push_back({{"suite", c.suite}, {"check", c.name}, {"status", c.status}, {"detail", c.detail}});
    nlohmann::ordered_json j{{"passed", suite_passed(results)}, {"checks", arr}};
    out << j.dump(2) << "\n";
    return out.str();
  }
  if (format == "csv") {
    out << "suite,check,status,detail\n";
    for (const auto& c : results)
      out << c.suite << "," << csv_field(c.name) << "," << c.status << "," << csv_field(c.detail) << "\n";
    return out.str();
  }
  int pass = 0, fail = 0, mismatch = 0;
  for (const auto& c : results) {
    out << c.status << "  [" << c.suite << "] " << c.name;
    if (!c.detail.empty()) out << "\n      " << c.detail;
    out << "\n";
    (c.status == "PASS" ? pass : c.status == "FAIL" ? fail : mismatch) += 1;
  }
  out << pass << " passed, " << fail << " failed, " << mismatch << " printed-form mismatches\n";
  return out.str();
}

std::string render_m_table(long l_max, long k_max) {
  if (l_max < 1 || k_max < 0) throw UsageError("M needs --lmax >= 1 and --kmax >= 0");
  std::ostringstream out;
  out << "l";
  for (long k = 0; k <= k_max; ++k) out << ",k=" << k;
  out << "\n";
  for (long l = 1; l <= l_max; ++l) {
    out << l;
    for (long k = 0; k <= k_max; ++k) out << "," << (k <= l ? onecomp::M(l, k).get_str() : "");
    out << "\n";
  }
  return out.str();
}

}  // namespace phylocount::cli
