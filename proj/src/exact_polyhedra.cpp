#include "srr/exact_polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "srr/error.hpp"

namespace srr {

namespace {

constexpr const char* kModule = "exact_polyhedra";

struct VecLess
{
    bool operator()(const VectorQ& a, const VectorQ& b) const { return lex_less(a, b); }
};

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<MatrixQ> exact_inverse(MatrixQ m)
{
    const Eigen::Index n = m.rows();
    MatrixQ inv = MatrixQ::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c)
    {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = c; r < n; ++r)
            if (m(r, c) != 0)
            {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return std::nullopt;
        m.row(c).swap(m.row(pivot));
        inv.row(c).swap(inv.row(pivot));
        const Rational scale = 1 / m(c, c);
        m.row(c) *= scale;
        inv.row(c) *= scale;
        for (Eigen::Index r = 0; r < n; ++r)
        {
            if (r == c || m(r, c) == 0)
                continue;
            const Rational factor = m(r, c);
            m.row(r) -= factor * m.row(c);
            inv.row(r) -= factor * inv.row(c);
        }
    }
    return inv;
}

/// Scales a x <= b to a primitive integer row (positive factor only).
void normalize_row(RowVectorQ& a, Rational& b)
{
    Integer den = 1;
    for (Eigen::Index j = 0; j < a.size(); ++j)
        den = lcm(den, boost::multiprecision::denominator(a(j)));
    den = lcm(den, boost::multiprecision::denominator(b));
    Integer g = 0;
    for (Eigen::Index j = 0; j < a.size(); ++j)
        g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(a(j)) * (den / boost::multiprecision::denominator(a(j)))));
    if (g == 0)
        return;
    g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(b) * (den / boost::multiprecision::denominator(b))));
    const Rational factor = Rational(den) / Rational(g);
    a *= factor;
    b *= factor;
}

bool is_zero_row(const RowVectorQ& a)
{
    for (Eigen::Index j = 0; j < a.size(); ++j)
        if (a(j) != 0)
            return false;
    return true;
}

/// Column of a row of the form -x_j <= 0, or -1.
int nonnegativity_column(const RowVectorQ& a, const Rational& b)
{
    if (b != 0)
        return -1;
    int column = -1;
    for (Eigen::Index j = 0; j < a.size(); ++j)
    {
        if (a(j) == 0)
            continue;
        if (column >= 0 || a(j) > 0)
            return -1;
        column = static_cast<int>(j);
    }
    return column;
}

/// LP over the rows listed in `use`, with sign-constraint detection.
LPOutcome solve_over_rows(const MatrixQ& a, const VectorQ& b, const std::vector<int>& use, const VectorQ& c,
                          Sense sense, const std::optional<std::pair<int, Rational>>& extra = std::nullopt)
{
    LinearProgram lp(static_cast<int>(a.cols()));
    auto add = [&](int r, const Rational& rhs) {
        int column = nonnegativity_column(a.row(r), rhs);
        if (column >= 0)
            lp.set_nonnegative(column);
        else
            lp.add_constraint(RowVectorQ(a.row(r)), Relation::LessEqual, rhs);
    };
    for (int r : use)
        add(r, b(r));
    if (extra)
        add(extra->first, extra->second);
    lp.set_objective(c, sense);
    return lp.solve();
}

}   // namespace

// ---------------------------------------------------------------------------

HPolytope::HPolytope(MatrixQ a, VectorQ rhs) : A(std::move(a)), b(std::move(rhs))
{
    if (A.rows() != b.size())
        throw Error(ErrorKind::DimensionMismatch, kModule, "constraint matrix and right-hand side disagree");
}

bool HPolytope::contains(const VectorQ& x) const
{
    if (x.size() != A.cols())
        throw Error(ErrorKind::DimensionMismatch, kModule, "point has the wrong dimension");
    for (Eigen::Index r = 0; r < A.rows(); ++r)
        if (A.row(r).dot(x) > b(r))
            return false;
    return true;
}

std::vector<int> HPolytope::tight(const VectorQ& x) const
{
    std::vector<int> out;
    for (Eigen::Index r = 0; r < A.rows(); ++r)
        if (A.row(r).dot(x) == b(r))
            out.push_back(static_cast<int>(r));
    return out;
}

void HPolytope::add_row(const RowVectorQ& a, const Rational& rhs)
{
    if (A.rows() == 0 && A.cols() == 0)
        A.resize(0, a.size());
    if (a.size() != A.cols())
        throw Error(ErrorKind::DimensionMismatch, kModule, "row has the wrong dimension");
    A.conservativeResize(A.rows() + 1, Eigen::NoChange);
    A.row(A.rows() - 1) = a;
    b.conservativeResize(b.size() + 1);
    b(b.size() - 1) = rhs;
}

void VPolytope::canonicalize()
{
    std::sort(vertices.begin(), vertices.end(), VecLess{});
    vertices.erase(std::unique(vertices.begin(), vertices.end(),
                               [](const VectorQ& a, const VectorQ& b) { return a == b; }),
                   vertices.end());
}

int exact_rank(const MatrixQ& input)
{
    MatrixQ m = input;
    int rank = 0;
    for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c)
    {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < m.rows(); ++r)
            if (m(r, c) != 0)
            {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        m.row(rank).swap(m.row(pivot));
        for (Eigen::Index r = rank + 1; r < m.rows(); ++r)
        {
            if (m(r, c) == 0)
                continue;
            const Rational factor = m(r, c) / m(rank, c);
            m.row(r) -= factor * m.row(rank);
        }
        ++rank;
    }
    return rank;
}

Rational exact_determinant(MatrixQ m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, kModule, "determinant of a non-square matrix");
    Rational det = 1;
    const Eigen::Index n = m.rows();
    for (Eigen::Index c = 0; c < n; ++c)
    {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = c; r < n; ++r)
            if (m(r, c) != 0)
            {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return 0;
        if (pivot != c)
        {
            m.row(c).swap(m.row(pivot));
            det = -det;
        }
        det *= m(c, c);
        for (Eigen::Index r = c + 1; r < n; ++r)
        {
            if (m(r, c) == 0)
                continue;
            const Rational factor = m(r, c) / m(c, c);
            m.row(r) -= factor * m.row(c);
        }
    }
    return det;
}

std::optional<VectorQ> exact_solve(MatrixQ m, VectorQ rhs)
{
    auto inv = exact_inverse(std::move(m));
    if (!inv)
        return std::nullopt;
    return VectorQ(*inv * rhs);
}

// ---------------------------------------------------------------------------

namespace {

/// A nonzero vector d with M d = 0, or nullopt when M has full column rank.
std::optional<VectorQ> kernel_vector(MatrixQ m)
{
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < m.rows(); ++c)
    {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < m.rows(); ++r)
            if (m(r, c) != 0)
            {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        m.row(rank).swap(m.row(pivot));
        m.row(rank) /= m(rank, c);
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (r != rank && m(r, c) != 0)
                m.row(r) -= m(r, c) * m.row(rank);
        pivot_col.push_back(c);
        ++rank;
    }
    for (Eigen::Index c = 0; c < cols; ++c)
    {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end())
            continue;
        VectorQ d = VectorQ::Zero(cols);
        d(c) = 1;
        for (Eigen::Index r = 0; r < rank; ++r)
            d(pivot_col[r]) = -m(r, c);
        return d;
    }
    return std::nullopt;
}

/// Walks from a feasible x along the kernel of its tight rows until the
/// tight rows have full rank.  The objective is constant along every such
/// step taken from an optimum.  Stops early when P contains a line.
VectorQ move_to_vertex(const HPolytope& p, VectorQ x)
{
    while (true)
    {
        const auto tight = p.tight(x);
        MatrixQ active(static_cast<Eigen::Index>(tight.size()), p.dim());
        for (std::size_t r = 0; r < tight.size(); ++r)
            active.row(static_cast<Eigen::Index>(r)) = p.A.row(tight[r]);
        auto d = kernel_vector(active);
        if (!d)
            return x;
        VectorQ slack = p.b - p.A * x;
        bool moved = false;
        for (int sign : {1, -1})
        {
            VectorQ dir = Rational(sign) * *d;
            std::optional<Rational> step;
            for (int r = 0; r < p.num_constraints(); ++r)
            {
                Rational rate = p.A.row(r).dot(dir);
                if (rate > 0 && (!step || slack(r) / rate < *step))
                    step = slack(r) / rate;
            }
            if (step)
            {
                x += *step * dir;
                moved = true;
                break;
            }
        }
        if (!moved)
            return x;
    }
}

}   // namespace

LPOutcome lp_solve(const HPolytope& p, const VectorQ& c, Sense sense)
{
    if (c.size() != p.dim())
        throw Error(ErrorKind::DimensionMismatch, kModule, "objective has the wrong dimension");
    std::vector<int> all(p.num_constraints());
    std::iota(all.begin(), all.end(), 0);
    auto outcome = solve_over_rows(p.A, p.b, all, c, sense);
    if (outcome.status == LPStatus::Optimal)
        outcome.point = move_to_vertex(p, std::move(outcome.point));
    return outcome;
}

bool is_bounded(const HPolytope& p)
{
    for (int j = 0; j < p.dim(); ++j)
    {
        VectorQ c = VectorQ::Zero(p.dim());
        c(j) = 1;
        for (Sense sense : {Sense::Maximize, Sense::Minimize})
        {
            auto outcome = lp_solve(p, c, sense);
            if (outcome.status == LPStatus::Unbounded)
                return false;
            if (outcome.status == LPStatus::Infeasible)
                return true;
        }
    }
    return true;
}

HPolytope remove_redundant(const HPolytope& p)
{
    // Normalize and merge parallel rows, keeping the tightest right-hand side.
    std::map<std::vector<Rational>, Rational> merged;
    bool infeasible_row = false;
    for (int r = 0; r < p.num_constraints(); ++r)
    {
        RowVectorQ a = p.A.row(r);
        Rational b = p.b(r);
        if (is_zero_row(a))
        {
            infeasible_row = infeasible_row || b < 0;
            continue;
        }
        normalize_row(a, b);
        std::vector<Rational> key(a.data(), a.data() + a.size());
        auto [it, inserted] = merged.emplace(std::move(key), b);
        if (!inserted && b < it->second)
            it->second = b;
    }
    HPolytope out;
    out.A.resize(static_cast<Eigen::Index>(merged.size()), p.dim());
    out.b.resize(static_cast<Eigen::Index>(merged.size()));
    Eigen::Index row = 0;
    for (const auto& [key, rhs] : merged)
    {
        for (int j = 0; j < p.dim(); ++j)
            out.A(row, j) = key[j];
        out.b(row) = rhs;
        ++row;
    }
    if (infeasible_row)
    {
        out.add_row(RowVectorQ::Zero(p.dim()), Rational(-1));
        return out;
    }
    std::vector<int> kept(out.num_constraints());
    std::iota(kept.begin(), kept.end(), 0);
    for (int r = 0; r < out.num_constraints(); ++r)
    {
        std::vector<int> others;
        for (int k : kept)
            if (k != r)
                others.push_back(k);
        auto outcome = solve_over_rows(out.A, out.b, others, out.A.row(r).transpose(), Sense::Maximize,
                                       std::pair<int, Rational>{r, out.b(r) + 1});
        if (outcome.status == LPStatus::Infeasible)
            return out;
        if (outcome.status == LPStatus::Optimal && outcome.value <= out.b(r))
            kept = std::move(others);
    }
    HPolytope reduced;
    reduced.A.resize(static_cast<Eigen::Index>(kept.size()), p.dim());
    reduced.b.resize(static_cast<Eigen::Index>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
    {
        reduced.A.row(static_cast<Eigen::Index>(i)) = out.A.row(kept[i]);
        reduced.b(static_cast<Eigen::Index>(i)) = out.b(kept[i]);
    }
    return reduced;
}

// ---------------------------------------------------------------------------

namespace {

/// Integer inequality a z <= b with the set of originating input rows.
struct FMRow
{
    std::vector<Integer> a;
    Integer b;
    std::vector<std::uint64_t> history;
    std::vector<std::uint64_t> eliminated;   ///< variables removed in this row's derivation
};

void normalize(FMRow& row)
{
    Integer g = 0;
    for (const auto& x : row.a)
        if (x != 0)
            g = boost::multiprecision::gcd(g, x);
    if (g == 0)
        return;
    g = boost::multiprecision::gcd(g, row.b);
    if (g < 0)
        g = -g;
    if (g > 1)
    {
        for (auto& x : row.a)
            x /= g;
        row.b /= g;
    }
}

FMRow integer_row(const RowVectorQ& a, const Rational& b, std::size_t history_words, int bit)
{
    Integer den = boost::multiprecision::denominator(b);
    for (Eigen::Index j = 0; j < a.size(); ++j)
        den = lcm(den, boost::multiprecision::denominator(a(j)));
    FMRow row;
    row.a.resize(static_cast<std::size_t>(a.size()));
    for (Eigen::Index j = 0; j < a.size(); ++j)
        row.a[j] = boost::multiprecision::numerator(a(j)) * (den / boost::multiprecision::denominator(a(j)));
    row.b = boost::multiprecision::numerator(b) * (den / boost::multiprecision::denominator(b));
    row.history.assign(history_words, 0);
    if (bit >= 0)
        row.history[bit / 64] |= std::uint64_t{1} << (bit % 64);
    normalize(row);
    return row;
}

int popcount(const std::vector<std::uint64_t>& words)
{
    int total = 0;
    for (auto w : words)
        total += std::popcount(w);
    return total;
}

/// Merges rows with identical left-hand sides, keeping the smallest rhs.
/// Zero rows are dropped; returns false when one of them is infeasible.
bool dedupe(std::vector<FMRow>& rows)
{
    std::map<std::vector<Integer>, std::size_t> seen;
    std::vector<FMRow> out;
    for (auto& row : rows)
    {
        if (std::all_of(row.a.begin(), row.a.end(), [](const Integer& x) { return x == 0; }))
        {
            if (row.b < 0)
                return false;
            continue;
        }
        auto it = seen.find(row.a);
        if (it == seen.end())
        {
            seen.emplace(row.a, out.size());
            out.push_back(std::move(row));
        }
        else if (row.b < out[it->second].b
                 || (row.b == out[it->second].b && popcount(row.history) < popcount(out[it->second].history)))
        {
            out[it->second] = std::move(row);
        }
    }
    std::sort(out.begin(), out.end(), [](const FMRow& x, const FMRow& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    rows = std::move(out);
    return true;
}

/// LP-based redundancy removal restricted to the live variables.
void prune_redundant(std::vector<FMRow>& rows, const std::vector<int>& live, FMStats* stats)
{
    const int n = static_cast<int>(live.size());
    MatrixQ a(static_cast<Eigen::Index>(rows.size()), n);
    VectorQ b(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        for (int j = 0; j < n; ++j)
            a(static_cast<Eigen::Index>(r), j) = Rational(rows[r].a[live[j]]);
        b(static_cast<Eigen::Index>(r)) = Rational(rows[r].b);
    }
    std::vector<int> kept(rows.size());
    std::iota(kept.begin(), kept.end(), 0);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    {
        std::vector<int> others;
        for (int k : kept)
            if (k != r)
                others.push_back(k);
        if (stats)
            ++stats->redundancy_lps;
        auto outcome = solve_over_rows(a, b, others, a.row(r).transpose(), Sense::Maximize,
                                       std::pair<int, Rational>{r, b(r) + 1});
        if (outcome.status == LPStatus::Infeasible)
            return;
        if (outcome.status == LPStatus::Optimal && outcome.value <= b(r))
            kept = std::move(others);
    }
    std::vector<FMRow> out;
    for (int k : kept)
        out.push_back(std::move(rows[k]));
    rows = std::move(out);
}

HPolytope infeasible_polytope(int dim)
{
    HPolytope out(MatrixQ::Zero(1, dim), VectorQ::Constant(1, Rational(-1)));
    return out;
}

}   // namespace

HPolytope fm_project(const HPolytope& p, const MatrixQ& map, const FMOptions& options, FMStats* stats)
{
    if (map.cols() != p.dim())
        throw Error(ErrorKind::DimensionMismatch, kModule, "projection map has the wrong number of columns");
    const int m = p.dim();
    const int out_dim = static_cast<int>(map.rows());
    const int total = m + out_dim;
    const std::uint64_t cap = scaled_guard(options.max_constraints);
    FMStats local;
    FMStats& st = stats ? *stats : local;
    st = FMStats{};

    std::size_t words = (static_cast<std::size_t>(p.num_constraints()) + out_dim * 2 + 63) / 64 + 1;
    const std::size_t var_words = (static_cast<std::size_t>(total) + 63) / 64;
    std::vector<FMRow> rows;
    for (int r = 0; r < p.num_constraints(); ++r)
    {
        RowVectorQ a = RowVectorQ::Zero(total);
        a.head(m) = p.A.row(r);
        rows.push_back(integer_row(a, p.b(r), words, r));
    }
    int next_bit = p.num_constraints();

    // Equalities L x - y = 0, substituted one at a time.
    std::vector<RowVectorQ> equalities;
    for (int i = 0; i < out_dim; ++i)
    {
        RowVectorQ e = RowVectorQ::Zero(total);
        e.head(m) = map.row(i);
        e(m + i) = -1;
        equalities.push_back(e);
    }
    std::vector<bool> eliminated(total, false);
    for (std::size_t q = 0; q < equalities.size(); ++q)
    {
        const RowVectorQ& e = equalities[q];
        int pivot = -1;
        std::size_t best = 0;
        for (int j = 0; j < m; ++j)
        {
            if (eliminated[j] || e(j) == 0)
                continue;
            std::size_t uses = 0;
            for (const auto& row : rows)
                uses += row.a[j] != 0 ? 1 : 0;
            if (pivot < 0 || uses < best)
            {
                pivot = j;
                best = uses;
            }
        }
        if (pivot < 0)
        {
            if (!is_zero_row(e))
            {
                rows.push_back(integer_row(e, Rational(0), words, next_bit++));
                rows.push_back(integer_row(RowVectorQ(-e), Rational(0), words, next_bit++));
            }
            continue;
        }
        // x_pivot = -(1/e_pivot) * sum_{l != pivot} e_l z_l
        for (auto& row : rows)
        {
            if (row.a[pivot] == 0)
                continue;
            RowVectorQ a(total);
            for (int j = 0; j < total; ++j)
                a(j) = Rational(row.a[j]);
            const Rational factor = a(pivot) / e(pivot);
            a -= factor * e;
            a(pivot) = 0;
            auto history = row.history;
            row = integer_row(a, Rational(row.b), words, -1);
            row.history = std::move(history);
        }
        for (std::size_t later = q + 1; later < equalities.size(); ++later)
        {
            RowVectorQ& f = equalities[later];
            if (f(pivot) == 0)
                continue;
            const Rational factor = f(pivot) / e(pivot);
            f -= factor * e;
            f(pivot) = 0;
        }
        eliminated[pivot] = true;
    }
    if (!dedupe(rows))
        return infeasible_polytope(out_dim);

    auto live_vars = [&]() {
        std::vector<int> live;
        for (int j = 0; j < total; ++j)
            if (!eliminated[j])
                live.push_back(j);
        return live;
    };
    prune_redundant(rows, live_vars(), &st);
    st.peak_constraints = rows.size();

    int fm_steps = 0;
    std::size_t last_pruned = rows.size();
    while (true)
    {
        int var = -1;
        std::int64_t best_score = 0;
        for (int j = 0; j < m; ++j)
        {
            if (eliminated[j])
                continue;
            std::int64_t pos = 0, neg = 0;
            for (const auto& row : rows)
            {
                pos += row.a[j] > 0 ? 1 : 0;
                neg += row.a[j] < 0 ? 1 : 0;
            }
            std::int64_t score = pos * neg - pos - neg;
            if (var < 0 || score < best_score)
            {
                var = j;
                best_score = score;
            }
        }
        if (var < 0)
            break;
        ++fm_steps;
        std::vector<FMRow> next, pos, neg;
        for (auto& row : rows)
        {
            if (row.a[var] > 0)
                pos.push_back(std::move(row));
            else if (row.a[var] < 0)
                neg.push_back(std::move(row));
            else
                next.push_back(std::move(row));
        }
        for (const auto& u : pos)
            for (const auto& v : neg)
            {
                FMRow combo;
                combo.history.resize(words);
                for (std::size_t w = 0; w < words; ++w)
                    combo.history[w] = u.history[w] | v.history[w];
                const int inputs = popcount(combo.history);
                const Integer cu = -v.a[var];
                const Integer cv = u.a[var];
                combo.a.resize(total);
                for (int j = 0; j < total; ++j)
                    combo.a[j] = cu * u.a[j] + cv * v.a[j];
                combo.a[var] = 0;
                combo.b = cu * u.b + cv * v.b;
                combo.eliminated.assign(var_words, 0);
                for (std::size_t w = 0; w < var_words; ++w)
                    combo.eliminated[w] = (u.eliminated.empty() ? 0 : u.eliminated[w]) | (v.eliminated.empty() ? 0 : v.eliminated[w]);
                combo.eliminated[var / 64] |= std::uint64_t{1} << (var % 64);
                for (int j = 0; j < m; ++j)
                        if (!eliminated[j] && combo.a[j] == 0 && (u.a[j] != 0 || v.a[j] != 0))
                            combo.eliminated[j / 64] |= std::uint64_t{1} << (j % 64);
                if (inputs > fm_steps + 1 || inputs > popcount(combo.eliminated) + 1)
                    continue;
                normalize(combo);
                next.push_back(std::move(combo));
                if (next.size() > cap)
                    throw Error(ErrorKind::Explosion, kModule,
                                "Fourier-Motzkin produced more than " + std::to_string(cap) + " constraints");
            }
        eliminated[var] = true;
        ++st.eliminated;
        st.peak_constraints = std::max<std::uint64_t>(st.peak_constraints, next.size());
        if (!dedupe(next))
            return infeasible_polytope(out_dim);
        if (next.size() > std::max<std::size_t>(options.prune_threshold, 2 * last_pruned))
        {
            prune_redundant(next, live_vars(), &st);
            // The pruned system is a fresh starting point for the history rule.
            words = (next.size() + 63) / 64;
            for (std::size_t r = 0; r < next.size(); ++r)
            {
                next[r].history.assign(words, 0);
                next[r].history[r / 64] |= std::uint64_t{1} << (r % 64);
                next[r].eliminated.clear();
            }
            fm_steps = 0;
            last_pruned = next.size();
        }
        rows = std::move(next);
    }

    HPolytope out;
    out.A.resize(static_cast<Eigen::Index>(rows.size()), out_dim);
    out.b.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        for (int i = 0; i < out_dim; ++i)
            out.A(static_cast<Eigen::Index>(r), i) = Rational(rows[r].a[m + i]);
        out.b(static_cast<Eigen::Index>(r)) = Rational(rows[r].b);
    }
    return remove_redundant(out);
}

HPolytope fm_project(const HPolytope& p, const std::vector<int>& keep, const FMOptions& options, FMStats* stats)
{
    MatrixQ map = MatrixQ::Zero(static_cast<Eigen::Index>(keep.size()), p.dim());
    for (std::size_t i = 0; i < keep.size(); ++i)
    {
        if (keep[i] < 0 || keep[i] >= p.dim())
            throw Error(ErrorKind::IndexOutOfRange, kModule, "kept coordinate out of range");
        map(static_cast<Eigen::Index>(i), keep[i]) = 1;
    }
    return fm_project(p, map, options, stats);
}

// ---------------------------------------------------------------------------

VPolytope enumerate_vertices(const HPolytope& p, std::uint64_t max_bases)
{
    const int m = p.dim();
    const int rows = p.num_constraints();
    VPolytope out;
    out.dim = m;
    VectorQ c = VectorQ::Zero(m);
    auto start = lp_solve(p, c, Sense::Maximize);
    if (start.status == LPStatus::Infeasible)
        throw Error(ErrorKind::EmptyPolytope, kModule, "polytope is empty");
    if (m == 0)
    {
        out.vertices.push_back(VectorQ(0));
        return out;
    }
    // Pick m independent tight rows at the start vertex.
    std::vector<int> basis;
    {
        MatrixQ chosen(0, m);
        for (int r : p.tight(start.point))
        {
            MatrixQ trial(chosen.rows() + 1, m);
            trial.topRows(chosen.rows()) = chosen;
            trial.row(chosen.rows()) = p.A.row(r);
            if (exact_rank(trial) == trial.rows())
            {
                chosen = trial;
                basis.push_back(r);
                if (static_cast<int>(basis.size()) == m)
                    break;
            }
        }
        if (static_cast<int>(basis.size()) < m)
            throw Error(ErrorKind::ValidationError, kModule, "polytope is not pointed (unbounded)");
        std::sort(basis.begin(), basis.end());
    }
    std::set<std::vector<int>> seen{basis};
    std::vector<std::vector<int>> queue{basis};
    std::set<VectorQ, VecLess> vertices;
    const std::uint64_t limit = scaled_guard(max_bases);
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
        const std::vector<int> current = queue[head];
        MatrixQ ai(m, m);
        VectorQ bi(m);
        for (int i = 0; i < m; ++i)
        {
            ai.row(i) = p.A.row(current[i]);
            bi(i) = p.b(current[i]);
        }
        auto inv = exact_inverse(ai);
        VectorQ x = *inv * bi;
        vertices.insert(x);
        VectorQ slack = p.b - p.A * x;
        for (int leave = 0; leave < m; ++leave)
        {
            VectorQ d = -inv->col(leave);
            Rational best;
            std::vector<int> entering;
            for (int j = 0; j < rows; ++j)
            {
                if (std::binary_search(current.begin(), current.end(), j))
                    continue;
                Rational rate = p.A.row(j).dot(d);
                if (rate <= 0)
                    continue;
                Rational step = slack(j) / rate;
                if (entering.empty() || step < best)
                {
                    best = step;
                    entering = {j};
                }
                else if (step == best)
                {
                    entering.push_back(j);
                }
            }
            if (entering.empty())
                throw Error(ErrorKind::ValidationError, kModule, "polytope is unbounded");
            for (int j : entering)
            {
                std::vector<int> next = current;
                next[leave] = j;
                std::sort(next.begin(), next.end());
                if (seen.insert(next).second)
                {
                    if (seen.size() > limit)
                        throw Error(ErrorKind::TooManyBases, kModule,
                                    "more than " + std::to_string(limit) + " feasible bases");
                    queue.push_back(std::move(next));
                }
            }
        }
    }
    out.vertices.assign(vertices.begin(), vertices.end());
    return out;
}

HPolytope facets_from_vertices(const VPolytope& v)
{
    const int m = v.dim;
    const int count = static_cast<int>(v.vertices.size());
    HPolytope out;
    out.A.resize(0, m);
    out.b.resize(0);
    if (count == 0)
        return out;
    MatrixQ diffs(count - 1, m);
    for (int i = 1; i < count; ++i)
        diffs.row(i - 1) = (v.vertices[i] - v.vertices[0]).transpose();
    if (count <= m || exact_rank(diffs) < m)
        throw Error(ErrorKind::ValidationError, kModule, "vertex set is not full-dimensional");
    std::set<std::vector<Rational>> seen;
    std::vector<int> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    while (true)
    {
        // Hyperplane through the m picked points: normal spans the kernel of the differences.
        MatrixQ system(m, m + 1);
        for (int i = 0; i < m; ++i)
        {
            system.row(i).head(m) = v.vertices[pick[i]].transpose();
            system(i, m) = -1;
        }
        // Solve a . x_i = b via the kernel of [x_i^T, -1].
        MatrixQ reduced = system;
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c <= m && r < m; ++c)
        {
            int pivot = -1;
            for (int i = r; i < m; ++i)
                if (reduced(i, c) != 0)
                {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                continue;
            reduced.row(r).swap(reduced.row(pivot));
            reduced.row(r) /= reduced(r, c);
            for (int i = 0; i < m; ++i)
                if (i != r && reduced(i, c) != 0)
                {
                    const Rational factor = reduced(i, c);
                    reduced.row(i) -= factor * reduced.row(r);
                }
            pivots.push_back(c);
            ++r;
        }
        if (r == m)
        {
            int free = 0;
            while (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
                ++free;
            VectorQ kernel = VectorQ::Zero(m + 1);
            kernel(free) = 1;
            for (int i = 0; i < m; ++i)
                kernel(pivots[i]) = -reduced(i, free);
            RowVectorQ a = kernel.head(m).transpose();
            Rational b = kernel(m);
            if (!is_zero_row(a))
            {
                bool below = true, above = true;
                for (const auto& x : v.vertices)
                {
                    Rational value = a.dot(x);
                    below = below && value <= b;
                    above = above && value >= b;
                }
                if (above && !below)
                {
                    a = -a;
                    b = -b;
                }
                if (below || above)
                {
                    normalize_row(a, b);
                    std::vector<Rational> key(a.data(), a.data() + a.size());
                    key.push_back(b);
                    if (seen.insert(key).second)
                        out.add_row(a, b);
                }
            }
        }
        int pos = m - 1;
        while (pos >= 0 && pick[pos] == count - m + pos)
            --pos;
        if (pos < 0)
            break;
        ++pick[pos];
        for (int i = pos + 1; i < m; ++i)
            pick[i] = pick[i - 1] + 1;
    }
    return out;
}

bool is_irredundant(const VPolytope& v)
{
    const int count = static_cast<int>(v.vertices.size());
    for (int t = 0; t < count; ++t)
    {
        // Is vertex t a convex combination of the others?
        LinearProgram lp(count - 1);
        lp.set_all_nonnegative();
        std::vector<std::pair<int, Rational>> ones;
        for (int j = 0; j < count - 1; ++j)
            ones.emplace_back(j, Rational(1));
        lp.add_constraint(ones, Relation::Equal, Rational(1));
        for (int coord = 0; coord < v.dim; ++coord)
        {
            std::vector<std::pair<int, Rational>> terms;
            int col = 0;
            for (int j = 0; j < count; ++j)
                if (j != t)
                    terms.emplace_back(col++, v.vertices[j](coord));
            lp.add_constraint(terms, Relation::Equal, v.vertices[t](coord));
        }
        lp.set_objective(VectorQ::Zero(count - 1), Sense::Maximize);
        if (lp.solve().status == LPStatus::Optimal)
            return false;
    }
    return true;
}

Rational simplex_volume(const std::vector<VectorQ>& points)
{
    const int m = static_cast<int>(points.size()) - 1;
    if (m <= 0)
        return 0;
    MatrixQ d(m, m);
    for (int i = 0; i < m; ++i)
        d.col(i) = points[i + 1] - points[0];
    Rational det = exact_determinant(d);
    if (det < 0)
        det = -det;
    Rational factorial = 1;
    for (int i = 2; i <= m; ++i)
        factorial *= i;
    return det / factorial;
}

namespace {

int affine_dimension(const std::vector<VectorQ>& points, const std::vector<int>& subset)
{
    if (subset.size() <= 1)
        return 0;
    const Eigen::Index m = points[subset[0]].size();
    MatrixQ d(static_cast<Eigen::Index>(subset.size() - 1), m);
    for (std::size_t i = 1; i < subset.size(); ++i)
        d.row(static_cast<Eigen::Index>(i - 1)) = (points[subset[i]] - points[subset[0]]).transpose();
    return exact_rank(d);
}

}   // namespace

VolumeResult volume(const HPolytope& h, const VPolytope& v)
{
    VolumeResult result;
    const int m = v.dim;
    const int count = static_cast<int>(v.vertices.size());
    std::vector<int> all(count);
    std::iota(all.begin(), all.end(), 0);
    if (count <= m || affine_dimension(v.vertices, all) < m)
    {
        result.value = 0;
        result.degenerate = true;
        return result;
    }
    // vertices tight on each constraint
    std::vector<std::vector<int>> on(h.num_constraints());
    for (int j = 0; j < h.num_constraints(); ++j)
        for (int i = 0; i < count; ++i)
            if (h.A.row(j).dot(v.vertices[i]) == h.b(j))
                on[j].push_back(i);

    std::map<std::pair<std::vector<int>, int>, std::vector<std::vector<int>>> memo;
    std::function<std::vector<std::vector<int>>(const std::vector<int>&, int)> triangulate =
        [&](const std::vector<int>& face, int dim) -> std::vector<std::vector<int>> {
        if (static_cast<int>(face.size()) == dim + 1)
            return {face};
        auto key = std::make_pair(face, dim);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const int apex = face.front();
        std::set<std::vector<int>> facets;
        for (int j = 0; j < h.num_constraints(); ++j)
        {
            std::vector<int> sub;
            std::set_intersection(face.begin(), face.end(), on[j].begin(), on[j].end(), std::back_inserter(sub));
            if (sub.size() == face.size() || sub.empty())
                continue;
            if (std::binary_search(sub.begin(), sub.end(), apex))
                continue;
            if (affine_dimension(v.vertices, sub) == dim - 1)
                facets.insert(sub);
        }
        std::vector<std::vector<int>> simplices;
        for (const auto& facet : facets)
            for (auto s : triangulate(facet, dim - 1))
            {
                s.push_back(apex);
                simplices.push_back(std::move(s));
            }
        memo.emplace(key, simplices);
        return simplices;
    };

    result.value = 0;
    for (const auto& s : triangulate(all, m))
    {
        std::vector<VectorQ> pts;
        for (int i : s)
            pts.push_back(v.vertices[i]);
        result.value += simplex_volume(pts);
    }
    return result;
}

VolumeResult volume(const VPolytope& v)
{
    std::vector<int> all(v.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    if (static_cast<int>(v.vertices.size()) <= v.dim || affine_dimension(v.vertices, all) < v.dim)
        return {Rational(0), true};
    return volume(facets_from_vertices(v), v);
}

VolumeResult volume(const HPolytope& h)
{
    return volume(h, enumerate_vertices(h));
}

// ---------------------------------------------------------------------------

Rational knapsack_volume(const VectorQ& y, const Rational& cap)
{
    const int m = static_cast<int>(y.size());
    if (m > 24)
        throw Error(ErrorKind::TooLarge, kModule, "knapsack dimension above 24");
    Rational denom = 1;
    for (int i = 0; i < m; ++i)
    {
        if (y(i) <= 0)
            throw Error(ErrorKind::ValidationError, kModule, "knapsack weights must be positive");
        denom *= y(i) * (i + 1);
    }
    Rational sum = 0;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << m); ++x)
    {
        Rational g = cap;
        for (int i = 0; i < m; ++i)
            if (x & (1u << i))
                g -= y(i);
        if (g < 0)
            continue;
        Rational term = 1;
        for (int i = 0; i < m; ++i)
            term *= g;
        sum += (std::popcount(x) % 2 == 0) ? term : Rational(-term);
    }
    return sum / denom;
}

HPolytope knapsack_polytope(const VectorQ& y, const Rational& cap)
{
    const int m = static_cast<int>(y.size());
    HPolytope p;
    p.A = MatrixQ::Zero(2 * m + 1, m);
    p.b = VectorQ::Zero(2 * m + 1);
    for (int i = 0; i < m; ++i)
    {
        p.A(i, i) = -1;
        p.A(m + i, i) = 1;
        p.b(m + i) = 1;
    }
    p.A.row(2 * m) = y.transpose();
    p.b(2 * m) = cap;
    return p;
}

DantzigResult dantzig_max(const VectorQ& c, const VectorQ& y, const Rational& cap)
{
    const int m = static_cast<int>(c.size());
    if (y.size() != m)
        throw Error(ErrorKind::DimensionMismatch, kModule, "objective and weights differ in length");
    for (int j = 0; j < m; ++j)
    {
        if (c(j) < 0)
            throw Error(ErrorKind::NegativeObjective, kModule, "objective entry " + std::to_string(j + 1) + " is negative");
        if (y(j) <= 0)
            throw Error(ErrorKind::ValidationError, kModule, "weights must be positive");
    }
    if (cap < 0)
        throw Error(ErrorKind::ValidationError, kModule, "capacity must be nonnegative");
    DantzigResult result;
    result.order.resize(m);
    std::iota(result.order.begin(), result.order.end(), 0);
    std::stable_sort(result.order.begin(), result.order.end(),
                     [&](int a, int b) { return c(a) / y(a) > c(b) / y(b); });
    result.x = VectorQ::Zero(m);
    result.value = 0;
    result.sigma = 0;
    Rational used = 0;
    for (int pos = 0; pos < m; ++pos)
    {
        const int j = result.order[pos];
        if (used + y(j) > cap)
        {
            result.r = pos + 1;
            result.sigma = (cap - used) / y(j);
            result.x(j) = result.sigma;
            result.value += c(j) * result.sigma;
            return result;
        }
        used += y(j);
        result.x(j) = 1;
        result.value += c(j);
    }
    result.r = m + 1;
    return result;
}

}   // namespace srr
