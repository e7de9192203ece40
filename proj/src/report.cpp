#include "srr/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "srr/error.hpp"

namespace srr::report {

namespace {

constexpr const char* kModule = "report";

json sets_json(const std::vector<RecoverySet>& sets)
{
    json out = json::array();
    for (const auto& r : sets)
        out.push_back(r);
    return out;
}

template <class T>
json integers_json(const std::vector<T>& values)
{
    json out = json::array();
    for (const auto& x : values)
        out.push_back(x.str());
    return out;
}

}   // namespace

json to_json(const Rational& x)
{
    return to_string(x);
}

json to_json(const VectorQ& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(to_string(v(i)));
    return out;
}

json to_json(const HPolytope& p)
{
    json rows = json::array();
    for (int r = 0; r < p.num_constraints(); ++r)
        rows.push_back(to_json(VectorQ(p.A.row(r).transpose())));
    return {{"dim", p.dim()}, {"A", rows}, {"b", to_json(p.b)}};
}

json to_json(const VPolytope& v)
{
    json vertices = json::array();
    for (const auto& x : v.vertices)
        vertices.push_back(to_json(x));
    return {{"dim", v.dim}, {"vertices", vertices}};
}

json to_json(const Region& r)
{
    return {{"h", to_json(r.h)}, {"v", to_json(r.v)}};
}

json to_json(const RecoverySystem& system)
{
    json objects = json::array();
    for (int i = 1; i <= system.k; ++i)
        objects.push_back({{"object", i}, {"sets", sets_json(system.of(i))}});
    return {{"k", system.k},
            {"n", system.n},
            {"origin", system.origin == SystemOrigin::MinimalOfG ? "minimal" : "user"},
            {"size", system.size()},
            {"objects", objects}};
}

json to_json(const CodeProfile& p)
{
    json out = {{"n", p.n},
                {"k", p.k},
                {"q", p.q},
                {"d", p.d},
                {"d_dual", p.d_dual},
                {"is_mds", p.is_mds},
                {"is_systematic", p.is_systematic},
                {"is_replication", p.is_replication},
                {"s", p.s},
                {"max_hyperplane_points", p.max_hyperplane_points}};
    out["availability"] = p.availability_t ? json(*p.availability_t) : json(nullptr);
    return out;
}

json to_json(const RegionParams& p)
{
    json out = {{"max_sum", to_json(p.max_sum)},
                {"axis_maxima", to_json(p.axis_maxima)},
                {"max_axis", to_json(p.max_axis)},
                {"hypercube", to_json(p.hypercube)},
                {"simplex", to_json(p.simplex)}};
    json powers = json::object();
    for (const auto& [r, value] : p.r_max_sum)
        powers[std::to_string(r)] = to_json(value);
    out["r_max_sum"] = powers;
    out["volume"] = p.volume ? to_json(*p.volume) : json(nullptr);
    return out;
}

json to_json(const FractionalAllocation& a)
{
    json entries = json::array();
    for (int j = 0; j < a.index.size(); ++j)
    {
        if (a.values(j) == 0)
            continue;
        entries.push_back({{"object", a.index.entries[j].first},
                           {"set", a.index.entries[j].second},
                           {"value", to_json(a.values(j))}});
    }
    return {{"mu", to_json(a.mu)}, {"entries", entries}, {"rates", to_json(a.rates())}, {"loads", to_json(a.loads())}};
}

json to_json(const IntegerAllocation& a)
{
    json entries = json::array();
    for (int j = 0; j < a.index.size(); ++j)
    {
        if (a.counts[j] == 0)
            continue;
        entries.push_back({{"object", a.index.entries[j].first},
                           {"set", a.index.entries[j].second},
                           {"count", a.counts[j].str()}});
    }
    return {{"s", a.s.str()},
            {"entries", entries},
            {"loads", integers_json(a.loads())},
            {"rates", integers_json(a.rates())},
            {"feasible", a.feasible()}};
}

json to_json(const MembershipResult& m)
{
    json out = {{"inside", m.inside}, {"status", to_string(m.status)}};
    out["certificate"] = m.certificate ? to_json(*m.certificate) : json(nullptr);
    return out;
}

json to_json(const BoundEvaluation& e)
{
    return {{"lhs", to_json(e.lhs)}, {"rhs", to_json(e.rhs)}, {"satisfied", e.satisfied}};
}

json to_json(const BoundReport& b)
{
    json terms = json::array();
    for (const auto& t : b.terms)
        terms.push_back({{"low_slope", to_json(t.low_slope)},
                         {"breakpoint", to_json(t.breakpoint)},
                         {"high_slope", to_json(t.high_slope)}});
    const auto& m = b.metadata;
    json meta = json::object();
    if (m.dual_distance)
        meta["d_dual"] = *m.dual_distance;
    if (!m.systematic.empty())
        meta["s"] = m.systematic;
    if (!m.mu.empty())
    {
        json mu = json::array();
        for (const auto& x : m.mu)
            mu.push_back(x ? to_json(*x) : json(nullptr));
        meta["mu"] = mu;
        meta["J"] = m.uniform_objects;
    }
    if (!m.objects.empty())
        meta["I"] = m.objects;
    if (!m.normal.empty())
        meta["normal"] = m.normal;
    if (m.weights.size() > 0)
        meta["b"] = to_json(m.weights);
    if (!m.order.empty())
        meta["order"] = m.order;
    if (m.critical)
        meta["r"] = *m.critical;
    if (m.sigma)
        meta["sigma"] = to_json(*m.sigma);
    if (!m.flags.empty())
        meta["flags"] = m.flags;
    return {{"name", b.name},
            {"kind", to_string(b.kind)},
            {"description", b.description},
            {"terms", terms},
            {"constant", to_json(b.constant)},
            {"rhs", to_json(b.rhs)},
            {"metadata", meta}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw Error(ErrorKind::ParseError, kModule, "expected a rational string, got " + j.dump());
}

VectorQ vector_from_json(const json& j)
{
    if (!j.is_array())
        throw Error(ErrorKind::ParseError, kModule, "expected an array of rationals");
    VectorQ v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
    return v;
}

HPolytope hpolytope_from_json(const json& j)
{
    try
    {
        const int dim = j.at("dim").get<int>();
        const auto& rows = j.at("A");
        VectorQ b = vector_from_json(j.at("b"));
        if (rows.size() != static_cast<std::size_t>(b.size()))
            throw Error(ErrorKind::ParseError, kModule, "A and b have different lengths");
        MatrixQ a(static_cast<Eigen::Index>(rows.size()), dim);
        for (std::size_t r = 0; r < rows.size(); ++r)
        {
            VectorQ row = vector_from_json(rows[r]);
            if (row.size() != dim)
                throw Error(ErrorKind::ParseError, kModule, "row " + std::to_string(r) + " has the wrong length");
            a.row(static_cast<Eigen::Index>(r)) = row.transpose();
        }
        return HPolytope(a, b);
    }
    catch (const json::exception& e)
    {
        throw Error(ErrorKind::ParseError, kModule, e.what());
    }
}

VPolytope vpolytope_from_json(const json& j)
{
    try
    {
        VPolytope out;
        out.dim = j.at("dim").get<int>();
        for (const auto& x : j.at("vertices"))
        {
            out.vertices.push_back(vector_from_json(x));
            if (out.vertices.back().size() != out.dim)
                throw Error(ErrorKind::ParseError, kModule, "vertex has the wrong length");
        }
        out.canonicalize();
        return out;
    }
    catch (const json::exception& e)
    {
        throw Error(ErrorKind::ParseError, kModule, e.what());
    }
}

std::string digest(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json envelope(const std::string& command, const std::string& input_digest, json result, double elapsed_ms)
{
    return {{"schema", kSchema},
            {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
            {"command", command},
            {"input_digest", input_digest},
            {"result", std::move(result)},
            {"timing", {{"elapsed_ms", elapsed_ms}}}};
}

std::string vertices_csv(const VPolytope& v)
{
    std::ostringstream out;
    for (int i = 0; i < v.dim; ++i)
        out << (i ? "," : "") << "lambda_" << i + 1;
    out << "\n";
    for (const auto& x : v.vertices)
    {
        for (Eigen::Index i = 0; i < x.size(); ++i)
            out << (i ? "," : "") << to_string(x(i));
        out << "\n";
    }
    return out.str();
}

std::string svg_plot(const std::vector<SvgLayer>& layers, const std::string& title)
{
    double max_x = 0, max_y = 0;
    for (const auto& layer : layers)
        for (const auto& p : layer.points)
        {
            if (p.size() != 2)
                throw Error(ErrorKind::UnsupportedDimension, kModule, "SVG output needs k = 2");
            max_x = std::max(max_x, to_double(p(0)));
            max_y = std::max(max_y, to_double(p(1)));
        }
    if (max_x <= 0)
        max_x = 1;
    if (max_y <= 0)
        max_y = 1;
    const double size = 480, margin = 60;
    const double scale = size / std::max(max_x, max_y);
    auto sx = [&](double x) { return margin + x * scale; };
    auto sy = [&](double y) { return margin + size - y * scale; };
    auto num = [](double x) {
        std::ostringstream s;
        s.precision(12);
        s << x;
        return s.str();
    };

    std::ostringstream out;
    const double full = size + 2 * margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(full) << "\" height=\"" << num(full)
        << "\" viewBox=\"0 0 " << num(full) << " " << num(full) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        out << "<text x=\"" << num(full / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title
            << "</text>\n";
    for (const auto& layer : layers)
    {
        if (layer.points.empty())
            continue;
        // Angular order around the centroid; plotting only.
        double cx = 0, cy = 0;
        for (const auto& p : layer.points)
        {
            cx += to_double(p(0));
            cy += to_double(p(1));
        }
        cx /= static_cast<double>(layer.points.size());
        cy /= static_cast<double>(layer.points.size());
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : layer.points)
            pts.emplace_back(to_double(p(0)), to_double(p(1)));
        std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
            return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
        });
        out << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out << (i ? " " : "") << num(sx(pts[i].first)) << "," << num(sy(pts[i].second));
        out << "\" fill=\"" << (layer.fill.empty() ? "none" : layer.fill) << "\" fill-opacity=\"0.4\" stroke=\""
            << (layer.stroke.empty() ? "black" : layer.stroke) << "\" stroke-width=\"2\"><title>" << layer.label
            << "</title></polygon>\n";
    }
    out << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(max_x * 1.1))
        << "\" y2=\"" << num(sy(0)) << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(0)) << "\" y2=\""
        << num(sy(max_y * 1.1)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(sx(max_x * 1.1) + 8) << "\" y=\"" << num(sy(0) + 5) << "\" font-size=\"14\">λ1</text>\n";
    out << "<text x=\"" << num(sx(0) - 8) << "\" y=\"" << num(sy(max_y * 1.1) - 8)
        << "\" font-size=\"14\" text-anchor=\"middle\">λ2</text>\n";
    out << "<text x=\"" << num(sx(max_x)) << "\" y=\"" << num(sy(0) + 20) << "\" font-size=\"12\" text-anchor=\"middle\">"
        << num(max_x) << "</text>\n";
    out << "<text x=\"" << num(sx(0) - 10) << "\" y=\"" << num(sy(max_y) + 4) << "\" font-size=\"12\" text-anchor=\"end\">"
        << num(max_y) << "</text>\n";
    double legend_y = margin;
    for (const auto& layer : layers)
    {
        out << "<rect x=\"" << num(full - margin - 150) << "\" y=\"" << num(legend_y) << "\" width=\"12\" height=\"12\" fill=\""
            << (layer.fill.empty() ? "none" : layer.fill) << "\" stroke=\"" << (layer.stroke.empty() ? "black" : layer.stroke)
            << "\"/>\n";
        out << "<text x=\"" << num(full - margin - 132) << "\" y=\"" << num(legend_y + 11) << "\" font-size=\"12\">"
            << layer.label << "</text>\n";
        legend_y += 18;
    }
    out << "</svg>\n";
    return out.str();
}

}   // namespace srr::report
