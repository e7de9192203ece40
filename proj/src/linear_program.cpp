#include "srr/linear_program.hpp"

#include <string>

#include "srr/error.hpp"

namespace srr {

namespace {

constexpr const char* kModule = "exact_polyhedra";

/// Dense tableau for min c x s.t. T x = b, x >= 0, kept in canonical form.
class Tableau
{
    public:
        Tableau(int rows, int cols) : rows_(rows), cols_(cols), t_(rows, std::vector<Rational>(cols + 1)),
                                      basis_(rows, -1), cost_(cols + 1), allowed_(cols, true)
        {
        }

        Rational& at(int r, int c) { return t_[r][c]; }
        Rational& rhs(int r) { return t_[r][cols_]; }
        int& basic(int r) { return basis_[r]; }
        int rows() const { return rows_; }
        int cols() const { return cols_; }
        void forbid(int c) { allowed_[c] = false; }

        /// Installs objective c (length cols) and prices out the basis.
        void set_cost(const std::vector<Rational>& c)
        {
            for (int j = 0; j < cols_; ++j)
                cost_[j] = c[j];
            cost_[cols_] = 0;
            for (int r = 0; r < rows_; ++r)
            {
                const Rational cb = c[basis_[r]];
                if (cb == 0)
                    continue;
                for (int j = 0; j <= cols_; ++j)
                    if (t_[r][j] != 0)
                        cost_[j] -= cb * t_[r][j];
            }
        }

        /// Minus the current objective value.
        const Rational& neg_value() const { return cost_[cols_]; }

        /// Runs Bland's rule to optimality; false when unbounded.
        bool optimize()
        {
            while (true)
            {
                int enter = -1;
                for (int j = 0; j < cols_; ++j)
                    if (allowed_[j] && cost_[j] < 0)
                    {
                        enter = j;
                        break;
                    }
                if (enter < 0)
                    return true;
                int leave = -1;
                Rational best;
                for (int r = 0; r < rows_; ++r)
                {
                    if (t_[r][enter] <= 0)
                        continue;
                    Rational ratio = t_[r][cols_] / t_[r][enter];
                    if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave]))
                    {
                        leave = r;
                        best = ratio;
                    }
                }
                if (leave < 0)
                    return false;
                pivot(leave, enter);
            }
        }

        void pivot(int r, int c)
        {
            auto& prow = t_[r];
            const Rational inv = 1 / prow[c];
            std::vector<int> support;
            for (int j = 0; j <= cols_; ++j)
                if (prow[j] != 0)
                {
                    prow[j] *= inv;
                    support.push_back(j);
                }
            auto eliminate = [&](std::vector<Rational>& row) {
                if (row[c] == 0)
                    return;
                const Rational factor = row[c];
                for (int j : support)
                    row[j] -= factor * prow[j];
            };
            for (int i = 0; i < rows_; ++i)
                if (i != r)
                    eliminate(t_[i]);
            eliminate(cost_);
            basis_[r] = c;
        }

        void drop_row(int r)
        {
            t_.erase(t_.begin() + r);
            basis_.erase(basis_.begin() + r);
            --rows_;
        }

    private:
        int rows_;
        int cols_;
        std::vector<std::vector<Rational>> t_;
        std::vector<int> basis_;
        std::vector<Rational> cost_;
        std::vector<bool> allowed_;
};

}   // namespace

const char* to_string(LPStatus status)
{
    switch (status)
    {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars), nonnegative_(num_vars, false), objective_(VectorQ::Zero(num_vars))
{
}

void LinearProgram::set_nonnegative(int var, bool nonnegative)
{
    nonnegative_.at(var) = nonnegative;
}

void LinearProgram::set_all_nonnegative()
{
    std::fill(nonnegative_.begin(), nonnegative_.end(), true);
}

void LinearProgram::add_constraint(const RowVectorQ& coefficients, Relation relation, const Rational& rhs)
{
    if (coefficients.size() != num_vars_)
        throw Error(ErrorKind::DimensionMismatch, kModule, "constraint has the wrong number of coefficients");
    Row row{{}, relation, rhs};
    for (int j = 0; j < num_vars_; ++j)
        if (coefficients(j) != 0)
            row.terms.emplace_back(j, coefficients(j));
    rows_.push_back(std::move(row));
}

void LinearProgram::add_constraint(const std::vector<std::pair<int, Rational>>& terms, Relation relation,
                                   const Rational& rhs)
{
    Row row{{}, relation, rhs};
    for (const auto& [j, a] : terms)
    {
        if (j < 0 || j >= num_vars_)
            throw Error(ErrorKind::IndexOutOfRange, kModule, "constraint references an unknown variable");
        if (a != 0)
            row.terms.emplace_back(j, a);
    }
    rows_.push_back(std::move(row));
}

void LinearProgram::set_objective(const VectorQ& c, Sense sense)
{
    if (c.size() != num_vars_)
        throw Error(ErrorKind::DimensionMismatch, kModule, "objective has the wrong length");
    objective_ = c;
    sense_ = sense;
}

LPOutcome LinearProgram::solve() const
{
    // Column layout: structural columns (free variables split in two), then
    // one slack per inequality, then one artificial per row that needs it.
    std::vector<int> pos_col(num_vars_), neg_col(num_vars_, -1);
    int cols = 0;
    for (int j = 0; j < num_vars_; ++j)
    {
        pos_col[j] = cols++;
        if (!nonnegative_[j])
            neg_col[j] = cols++;
    }
    const int structural = cols;
    const int m = static_cast<int>(rows_.size());
    std::vector<int> slack_col(m, -1);
    for (int r = 0; r < m; ++r)
        if (rows_[r].relation != Relation::Equal)
            slack_col[r] = cols++;
    // Rows are negated when the rhs is negative; a slack with coefficient +1
    // after that can start in the basis.
    std::vector<int> sign(m, 1);
    std::vector<bool> needs_artificial(m, true);
    for (int r = 0; r < m; ++r)
    {
        if (rows_[r].rhs < 0)
            sign[r] = -1;
        int slack_sign = rows_[r].relation == Relation::LessEqual ? 1 : -1;
        if (slack_col[r] >= 0 && slack_sign * sign[r] == 1)
            needs_artificial[r] = false;
    }
    const int first_artificial = cols;
    std::vector<int> artificial_col(m, -1);
    for (int r = 0; r < m; ++r)
        if (needs_artificial[r])
            artificial_col[r] = cols++;

    Tableau tab(m, cols);
    for (int r = 0; r < m; ++r)
    {
        const Row& row = rows_[r];
        for (const auto& [j, a] : row.terms)
        {
            tab.at(r, pos_col[j]) += sign[r] * a;
            if (neg_col[j] >= 0)
                tab.at(r, neg_col[j]) -= sign[r] * a;
        }
        if (slack_col[r] >= 0)
            tab.at(r, slack_col[r]) = sign[r] * (row.relation == Relation::LessEqual ? 1 : -1);
        tab.rhs(r) = sign[r] * row.rhs;
        if (artificial_col[r] >= 0)
        {
            tab.at(r, artificial_col[r]) = 1;
            tab.basic(r) = artificial_col[r];
        }
        else
        {
            tab.basic(r) = slack_col[r];
        }
    }

    LPOutcome outcome;
    if (first_artificial < cols)
    {
        std::vector<Rational> phase1(cols, Rational(0));
        for (int j = first_artificial; j < cols; ++j)
            phase1[j] = 1;
        tab.set_cost(phase1);
        tab.optimize();
        if (tab.neg_value() != 0)
        {
            outcome.status = LPStatus::Infeasible;
            return outcome;
        }
        // Drive zero-level artificials out of the basis, dropping redundant rows.
        for (int r = tab.rows() - 1; r >= 0; --r)
        {
            if (tab.basic(r) < first_artificial)
                continue;
            int replacement = -1;
            for (int j = 0; j < first_artificial && replacement < 0; ++j)
                if (tab.at(r, j) != 0)
                    replacement = j;
            if (replacement >= 0)
                tab.pivot(r, replacement);
            else
                tab.drop_row(r);
        }
        for (int j = first_artificial; j < cols; ++j)
            tab.forbid(j);
    }

    std::vector<Rational> cost(cols, Rational(0));
    const int direction = sense_ == Sense::Maximize ? -1 : 1;
    for (int j = 0; j < num_vars_; ++j)
    {
        cost[pos_col[j]] = direction * objective_(j);
        if (neg_col[j] >= 0)
            cost[neg_col[j]] = -direction * objective_(j);
    }
    tab.set_cost(cost);
    if (!tab.optimize())
    {
        outcome.status = LPStatus::Unbounded;
        return outcome;
    }
    std::vector<Rational> column_value(structural, Rational(0));
    for (int r = 0; r < tab.rows(); ++r)
        if (tab.basic(r) < structural)
            column_value[tab.basic(r)] = tab.rhs(r);
    outcome.status = LPStatus::Optimal;
    outcome.point = VectorQ::Zero(num_vars_);
    for (int j = 0; j < num_vars_; ++j)
    {
        outcome.point(j) = column_value[pos_col[j]];
        if (neg_col[j] >= 0)
            outcome.point(j) -= column_value[neg_col[j]];
    }
    outcome.value = objective_.dot(outcome.point);
    return outcome;
}

}   // namespace srr
