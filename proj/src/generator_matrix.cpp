#include "srr/generator_matrix.hpp"

#include <string>

#include "srr/error.hpp"

namespace srr {

GeneratorMatrix::GeneratorMatrix(FFMatrix m) : m_(std::move(m))
{
    if (m_.rows() < 1 || m_.cols() < 1)
        throw Error(ErrorKind::ValidationError, "generator", "matrix must have at least one row and column");
    for (int c = 0; c < m_.cols(); ++c)
    {
        bool zero = true;
        for (int r = 0; r < m_.rows() && zero; ++r)
            zero = m_(r, c) == 0;
        if (zero)
            throw Error(ErrorKind::ValidationError, "generator",
                        "column " + std::to_string(c + 1) + " is the zero vector");
    }
    int r = rank(m_);
    if (r != m_.rows())
        throw Error(ErrorKind::ValidationError, "generator",
                    "rank " + std::to_string(r) + " is below k = " + std::to_string(m_.rows()));
}

std::vector<Element> GeneratorMatrix::server(int nu) const
{
    if (nu < 1 || nu > n())
        throw Error(ErrorKind::IndexOutOfRange, "generator", "server index " + std::to_string(nu) + " out of range");
    return m_.column(nu - 1);
}

}   // namespace srr
