#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "phylocount/numeric.hpp"

namespace phylocount::cli {

/// A request the library cannot serve (unknown class, unsupported method,
/// limits exceeded). The CLI maps it to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string> kClasses = {"pn", "rv", "gn", "tc", "normal", "onecomp", "trees"};
inline const std::vector<std::string> kMethods = {"auto", "series", "closed", "treesum", "dagsum", "brute"};

struct CountRequest {
  std::string cls;
  long l = 1;
  int k = 0;
  std::string method = "auto";
  int trunc_order = 64;
  int threads = 1;
};

/// validity is one of
///   validated  the value was computed by, or cross-checked against, an
///              exact method (series, sums, enumeration)
///   bound      k exceeds the class's maximum reticulation number
///   formula    a closed form with no exact method to compare against here
///   disagrees  a closed form that differs from the series value
struct CountResult {
  std::string cls;
  long l = 0;
  int k = 0;
  std::string method;
  BigInt value;
  std::string validity;
};

/// Largest k with a nonzero count for the class, or -1 when unbounded.
long max_reticulations(const std::string& cls, long l);

/// Methods that can serve (cls, l, k), in the order "auto" tries them.
std::vector<std::string> supported_methods(const std::string& cls, long l, int k, int trunc_order = 64);

CountResult count(const CountRequest& req);

}  // namespace phylocount::cli
