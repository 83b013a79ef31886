#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace dupont {

// Exact rationals; GMP keeps them reduced with a positive denominator.
using Scalar = boost::multiprecision::mpq_rational;

template <class S = Scalar>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

inline std::string to_string(const Scalar& x) { return x.str(); }

Scalar factorial(int n);
Scalar binomial(int n, int k);
Scalar parse_scalar(const std::string& text);

}  // namespace dupont
