#pragma once

// Exact scalar type and the dense Eigen types built on it.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace qspp {

/// Arbitrary precision integer.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Arbitrary precision rational, always kept in canonical form by GMP.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

/// Per-arc linear costs. Sign-unrestricted at the type level.
using CostVector = Vector;
/// m x m pairwise interaction costs indexed by arc id.
using InteractionMatrix = Matrix;

/// Parses "a", "-a" or "a/b" with decimal integers a, b (b != 0).
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view token);

/// Canonical text form: bare integer or "p/q".
std::string to_string(const Rational& value);

/// If value is the square of a rational, returns true and stores the
/// nonnegative root.
bool exact_sqrt(const Rational& value, Rational& root);

/// Binomial coefficient with the convention C(n, k) = 0 outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

}  // namespace qspp
