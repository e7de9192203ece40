#ifndef SRR_REPORT_HPP
#define SRR_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "srr/code_analysis.hpp"
#include "srr/outer_bounds.hpp"
#include "srr/srr_core.hpp"

namespace srr::report {

using nlohmann::json;

inline constexpr const char* kSchema = "srr-report/1";
inline constexpr const char* kToolName = "srr";
inline constexpr const char* kToolVersion = "1.0.0";

// Rationals always serialize as "p/q" strings.
json to_json(const Rational& x);
json to_json(const VectorQ& v);
json to_json(const HPolytope& p);
json to_json(const VPolytope& v);
json to_json(const Region& r);
json to_json(const RecoverySystem& system);
json to_json(const CodeProfile& profile);
json to_json(const RegionParams& params);
json to_json(const FractionalAllocation& a);
json to_json(const IntegerAllocation& a);
json to_json(const MembershipResult& m);
json to_json(const BoundEvaluation& e);
json to_json(const BoundReport& b);

/// Accepts "p/q" strings and JSON integers.  Throws ParseError.
Rational rational_from_json(const json& j);
VectorQ vector_from_json(const json& j);
HPolytope hpolytope_from_json(const json& j);
VPolytope vpolytope_from_json(const json& j);

/// "fnv1a64:" followed by 16 hex digits.
std::string digest(std::string_view bytes);

/**
 * {"schema", "tool": {name, version}, "command", "input_digest", "result",
 * "timing": {"elapsed_ms"}}.  Everything except timing is a function of the
 * inputs.
 */
json envelope(const std::string& command, const std::string& input_digest, json result, double elapsed_ms);

/// One vertex per row, header lambda_1..lambda_k.
std::string vertices_csv(const VPolytope& v);

struct SvgLayer
{
    std::string label;
    std::vector<VectorQ> points;   ///< convex polygon vertices, any order
    std::string stroke;
    std::string fill;
};

/// Planar plot of convex polygons; throws UnsupportedDimension for non-2D input.
std::string svg_plot(const std::vector<SvgLayer>& layers, const std::string& title = {});

}   // namespace srr::report

#endif
