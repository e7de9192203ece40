#ifndef SRR_GENERATOR_MATRIX_HPP
#define SRR_GENERATOR_MATRIX_HPP

#include <vector>

#include "srr/ff_linalg.hpp"

namespace srr {

/**
 * A k x n system matrix over F_q: full row rank and no zero column.
 * Object i (1..k) corresponds to e_i, server nu (1..n) stores column nu.
 */
class GeneratorMatrix
{
    public:
        /// Throws ValidationError when the rank is below k or a column is zero.
        explicit GeneratorMatrix(FFMatrix m);

        GeneratorMatrix(const FieldContext& field, int k, int n, std::vector<Element> entries)
            : GeneratorMatrix(FFMatrix(field, k, n, std::move(entries)))
        {
        }

        int k() const { return m_.rows(); }
        int n() const { return m_.cols(); }
        const FFMatrix& matrix() const { return m_; }
        const FieldContext& field() const { return m_.field(); }

        /// Column stored at server nu, 1-based.
        std::vector<Element> server(int nu) const;

    private:
        FFMatrix m_;
};

}   // namespace srr

#endif
