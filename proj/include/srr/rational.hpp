#ifndef SRR_RATIONAL_HPP
#define SRR_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace srr {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVectorQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

/// "p/q" with the denominator omitted when it is 1.
std::string to_string(const Rational& x);

/**
 * Parses "a", "a/b", "-a/b" or a finite decimal such as "3.01" into an
 * exact rational.  Throws Error(ParseError) on anything else.
 */
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "3/2,3/2,1/2".
VectorQ parse_rational_list(std::string_view text);

/// Decimal approximation with the given number of significant digits.
std::string to_decimal(const Rational& x, int significant_digits = 12);

double to_double(const Rational& x);

Integer lcm(const Integer& a, const Integer& b);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

VectorQ to_vector(const std::vector<Rational>& values);

/// Lexicographic comparison of two equally sized vectors.
bool lex_less(const VectorQ& a, const VectorQ& b);

}   // namespace srr

#endif
