#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace towerkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (cycle notation, tower files, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition or invariant does not hold for the input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured enumeration threshold.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// One named pass/fail verdict in a report.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};
using CheckList = std::vector<Check>;

inline bool all_passed(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

bool is_prime(std::uint64_t n);

// Returns (base, exponent) when n = base^exponent with base prime, else (0, 0).
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

std::string to_string(const BigInt& v);

}  // namespace towerkit
