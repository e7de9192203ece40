#include "oracles.hpp"

#include <algorithm>

namespace oracles {

using srr::Element;

bool recovers_by_enumeration(const srr::GeneratorMatrix& g, int i, std::uint32_t mask)
{
    const auto& f = g.field();
    std::vector<int> chosen;
    for (int nu = 0; nu < g.n(); ++nu)
        if (mask & (1u << nu))
            chosen.push_back(nu);
    std::vector<Element> coeff(chosen.size(), 0);
    while (true)
    {
        bool hit = true;
        for (int r = 0; r < g.k() && hit; ++r)
        {
            Element acc = 0;
            for (std::size_t j = 0; j < chosen.size(); ++j)
                acc = f.add(acc, f.mul(coeff[j], g.matrix()(r, chosen[j])));
            hit = acc == (r == i - 1 ? 1u : 0u);
        }
        if (hit)
            return true;
        std::size_t pos = 0;
        while (pos < coeff.size() && coeff[pos] == f.order() - 1)
            coeff[pos++] = 0;
        if (pos == coeff.size())
            return false;
        ++coeff[pos];
    }
}

std::vector<srr::RecoverySet> minimal_sets_by_sweep(const srr::GeneratorMatrix& g, int i)
{
    const std::uint32_t full = 1u << g.n();
    std::vector<bool> good(full, false);
    for (std::uint32_t mask = 1; mask < full; ++mask)
        good[mask] = recovers_by_enumeration(g, i, mask);
    std::vector<srr::RecoverySet> out;
    for (std::uint32_t mask = 1; mask < full; ++mask)
    {
        if (!good[mask])
            continue;
        bool minimal = true;
        for (std::uint32_t sub = (mask - 1) & mask; sub > 0 && minimal; sub = (sub - 1) & mask)
            minimal = !good[sub];
        if (!minimal)
            continue;
        srr::RecoverySet r;
        for (int nu = 0; nu < g.n(); ++nu)
            if (mask & (1u << nu))
                r.push_back(nu + 1);
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), srr::shortlex_less);
    return out;
}

int min_weight_by_enumeration(const srr::FFMatrix& m)
{
    const auto& f = m.field();
    std::vector<Element> coeff(m.rows(), 0);
    int best = m.cols() + 1;
    while (true)
    {
        std::size_t pos = 0;
        while (pos < coeff.size() && coeff[pos] == f.order() - 1)
            coeff[pos++] = 0;
        if (pos == coeff.size())
            return best;
        ++coeff[pos];
        int weight = 0;
        for (int c = 0; c < m.cols(); ++c)
        {
            Element acc = 0;
            for (int r = 0; r < m.rows(); ++r)
                acc = f.add(acc, f.mul(coeff[r], m(r, c)));
            weight += acc != 0 ? 1 : 0;
        }
        best = std::min(best, weight);
    }
}

}   // namespace oracles
