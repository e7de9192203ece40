#ifndef SRR_TEST_SUPPORT_HPP
#define SRR_TEST_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "srr/error.hpp"
#include "srr/rational.hpp"

namespace support {

inline srr::Rational q(std::string_view text) { return srr::parse_rational(text); }

inline srr::VectorQ vec(std::initializer_list<srr::Rational> values)
{
    return srr::to_vector(std::vector<srr::Rational>(values));
}

inline srr::VectorQ to_vector_list(std::initializer_list<srr::Rational> values) { return vec(values); }

inline srr::MatrixQ mat(std::initializer_list<std::initializer_list<srr::Rational>> rows)
{
    srr::MatrixQ m(static_cast<Eigen::Index>(rows.size()),
                   rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
    Eigen::Index r = 0;
    for (const auto& row : rows)
    {
        Eigen::Index c = 0;
        for (const auto& x : row)
            m(r, c++) = x;
        ++r;
    }
    return m;
}

/// Convex combination of the points with random weights of denominator <= 64.
inline srr::VectorQ random_convex_combination(const std::vector<srr::VectorQ>& pts, std::mt19937& rng)
{
    std::uniform_int_distribution<int> den(1, 64);
    const int d = den(rng);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pts.size()) - 1);
    srr::VectorQ out = srr::VectorQ::Zero(pts.front().size());
    // d unit masses dropped on random points give weights in (1/d) Z.
    for (int unit = 0; unit < d; ++unit)
        out += pts[pick(rng)] * srr::Rational(1, d);
    return out;
}

template <class F>
srr::ErrorKind error_kind(F&& f)
{
    try
    {
        f();
    }
    catch (const srr::Error& e)
    {
        return e.kind();
    }
    throw std::logic_error("expected an srr::Error");
}

}   // namespace support

#endif
