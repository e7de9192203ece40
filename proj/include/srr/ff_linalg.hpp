#ifndef SRR_FF_LINALG_HPP
#define SRR_FF_LINALG_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace srr {

/**
 * Field elements are codes 0..q-1.  For q = p^e the code is read as the
 * base-p digit vector (c_0, ..., c_{e-1}) of the polynomial
 * c_0 + c_1 x + ... + c_{e-1} x^{e-1} modulo the field's modulus.
 */
using Element = std::uint32_t;

/**
 * Arithmetic context for F_q.  Immutable and cheap to copy (shared state).
 */
class FieldContext
{
    public:
        /**
         * Builds F_{p^e}.  For e > 1 a monic irreducible modulus of degree e
         * must be supplied as coefficients (c_0, ..., c_e), lowest degree
         * first.  Throws NotPrime, MissingModulus, ReducibleModulus or
         * ValidationError.
         */
        static FieldContext make(std::uint32_t p, std::uint32_t e = 1,
                                 std::vector<std::uint32_t> modulus = {});

        std::uint32_t order() const;
        std::uint32_t characteristic() const;
        std::uint32_t degree() const;
        const std::vector<std::uint32_t>& modulus() const;

        Element add(Element a, Element b) const;
        Element sub(Element a, Element b) const;
        Element neg(Element a) const;
        Element mul(Element a, Element b) const;
        /// Throws DivisionByZero for a == 0.
        Element inv(Element a) const;
        Element div(Element a, Element b) const { return mul(a, inv(b)); }
        Element pow(Element a, std::uint64_t exponent) const;

        /// Multiplicative order of a nonzero element.
        std::uint32_t multiplicative_order(Element a) const;
        bool is_primitive(Element a) const;

        bool operator==(const FieldContext& other) const;

    private:
        struct Impl;
        explicit FieldContext(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
        std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);

/// Dense row-major matrix over a finite field.  Indices are 0-based.
class FFMatrix
{
    public:
        FFMatrix(FieldContext field, int rows, int cols);
        /// Throws ValidationError if an entry is >= q or the size is wrong.
        FFMatrix(FieldContext field, int rows, int cols, std::vector<Element> entries);

        static FFMatrix identity(const FieldContext& field, int n);
        /// Matrix whose columns are the given vectors (all of length rows).
        static FFMatrix from_columns(const FieldContext& field, int rows,
                                     std::span<const std::vector<Element>> columns);

        int rows() const { return rows_; }
        int cols() const { return cols_; }
        const FieldContext& field() const { return field_; }

        Element operator()(int r, int c) const { return data_[index(r, c)]; }
        void set(int r, int c, Element value);

        std::vector<Element> row(int r) const;
        std::vector<Element> column(int c) const;
        const std::vector<Element>& entries() const { return data_; }

        FFMatrix select_columns(std::span<const int> columns) const;
        FFMatrix transpose() const;
        FFMatrix operator*(const FFMatrix& rhs) const;
        bool is_zero() const;

        bool operator==(const FFMatrix& other) const;

    private:
        std::size_t index(int r, int c) const
        {
            return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_)
                + static_cast<std::size_t>(c);
        }

        FieldContext field_;
        int rows_;
        int cols_;
        std::vector<Element> data_;
};

int rank(const FFMatrix& m);

struct RowEchelonForm
{
    FFMatrix reduced;
    std::vector<int> pivots;   ///< 0-based pivot columns, strictly increasing.
};

/// Reduced row echelon form; the pivot row is always the lowest-index
/// candidate so the result is reproducible.
RowEchelonForm rref(const FFMatrix& m);

/// Basis of the right kernel {x : M x = 0}, one vector per free column.
std::vector<std::vector<Element>> null_space(const FFMatrix& m);

struct SpanMembership
{
    bool contained = false;
    std::vector<Element> coefficients;   ///< one per input vector when contained
};

/**
 * Decides whether target is an F_q-combination of the vectors and returns
 * one witness.  Throws DimensionMismatch when lengths disagree.
 */
SpanMembership in_span(const FieldContext& field,
                       std::span<const std::vector<Element>> vectors,
                       std::span<const Element> target);

}   // namespace srr

#endif
