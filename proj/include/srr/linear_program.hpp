#ifndef SRR_LINEAR_PROGRAM_HPP
#define SRR_LINEAR_PROGRAM_HPP

#include <vector>

#include "srr/rational.hpp"

namespace srr {

enum class Relation
{
    LessEqual,
    Equal,
    GreaterEqual
};

enum class Sense
{
    Maximize,
    Minimize
};

enum class LPStatus
{
    Optimal,
    Infeasible,
    Unbounded
};

const char* to_string(LPStatus status);

struct LPOutcome
{
    LPStatus status = LPStatus::Infeasible;
    Rational value;   ///< objective value when optimal
    VectorQ point;    ///< basic optimal solution when optimal
};

/**
 * Exact two-phase tableau simplex with Bland's rule.  Variables are free
 * unless marked nonnegative; free variables are split internally.
 */
class LinearProgram
{
    public:
        explicit LinearProgram(int num_vars);

        int num_vars() const { return num_vars_; }
        int num_constraints() const { return static_cast<int>(rows_.size()); }

        void set_nonnegative(int var, bool nonnegative = true);
        void set_all_nonnegative();

        void add_constraint(const RowVectorQ& coefficients, Relation relation, const Rational& rhs);
        /// Sparse form: (variable, coefficient) pairs.
        void add_constraint(const std::vector<std::pair<int, Rational>>& terms, Relation relation,
                            const Rational& rhs);

        void set_objective(const VectorQ& c, Sense sense);

        LPOutcome solve() const;

    private:
        struct Row
        {
            std::vector<std::pair<int, Rational>> terms;
            Relation relation;
            Rational rhs;
        };

        int num_vars_;
        std::vector<bool> nonnegative_;
        std::vector<Row> rows_;
        VectorQ objective_;
        Sense sense_ = Sense::Maximize;
};

}   // namespace srr

#endif
