#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace geomcfg {

using BigInt = boost::multiprecision::cpp_int;

/// Error with a machine-readable kind tag ("NotTactical", "GenusMismatch", ...).
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

/// Runs fn(i) for i in [0,n). Results must be written by index; the split is
/// deterministic, so output does not depend on the worker count.
inline void parallel_for(std::size_t n, int workers,
                         const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

inline std::string to_decimal(const BigInt& n) { return n.str(); }

}  // namespace geomcfg
