#pragma once

#include "wallcross/chamber.hpp"
#include "wallcross/conjugacy.hpp"
#include "wallcross/engine.hpp"
#include "wallcross/invariant_expr.hpp"
#include "wallcross/knot.hpp"
#include "wallcross/polynomial.hpp"
#include "wallcross/verify.hpp"

#include <json.hpp>

#include <string>

namespace wallcross {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "wallcross-report/1";

Json to_json(const ConjugacyClass& cls);
Json to_json(const Hyperplane& h);
Json to_json(const Chamber& chamber, const std::vector<Hyperplane>& arrangement);
Json to_json(const WallDatum& datum);
Json to_json(const IntPolynomial& p);
Json to_json(const InvariantExpr& e);
Json to_json(const KnotValidation& v);

FibredKnot knot_from_json(const Json& j);
FibredKnot load_knot(const std::string& path);
FiberDimMap fiber_dims_from_json(const Json& j);
FiberDimMap load_fiber_dims(const std::string& path);
std::map<std::string, std::int64_t> base_values_from_json(const Json& j);
std::map<std::string, std::int64_t> load_base_values(const std::string& path);

/// Reports behind the CLI subcommands; each is one JSON object carrying the
/// schema version.
Json chambers_report(int n, int k, int genus);
Json knot_report(const FibredKnot& knot, bool allow_qhs);
Json invariants_report(int n, int k, int genus, const FibredKnot& knot,
                       const FiberDimMap& fiber_dims,
                       const std::map<std::string, std::int64_t>& base_values);
Json verify_report(const BatteryReport& battery);

}  // namespace wallcross
