#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiq {

using Int = std::int64_t;
using DimVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Bad user input (malformed files, wrong vector length, negative entries).
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematically well-formed input outside an operation's domain
// (wrong quiver class, dimension vector not regular, ...). Exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotRegularError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline DimVector make_dim(std::initializer_list<Int> xs) {
  DimVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Int x : xs) v[i++] = x;
  return v;
}

inline std::vector<Int> to_std(const DimVector& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

inline DimVector from_std(const std::vector<Int>& v) {
  DimVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

inline bool dim_eq(const DimVector& a, const DimVector& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

inline bool lex_less(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// "1,2,3" in the quiver's vertex order; the CLI format for dimension vectors.
inline std::string format_dim(const DimVector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace semiq
