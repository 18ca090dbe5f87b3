#include "wallcross/json_io.hpp"

#include "wallcross/error.hpp"

#include <algorithm>
#include <fstream>

namespace wallcross {

namespace {

Json angles_to_json(const std::vector<Rational>& angles) {
    Json out = Json::array();
    for (const Rational& a : angles) out.push_back(rational_str(a));
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::usage, "cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::usage, "malformed JSON in " + path + ": " + e.what());
    }
}

}  // namespace

Json to_json(const ConjugacyClass& cls) {
    return Json{{"n", cls.n}, {"angles", angles_to_json(cls.angles)}};
}

Json to_json(const Hyperplane& h) {
    return Json{{"S", h.subset}, {"d", h.level}, {"bad", h.bad}};
}

Json to_json(const Chamber& chamber, const std::vector<Hyperplane>& arrangement) {
    Json signs = Json::object();
    const std::vector<Hyperplane> good = good_hyperplanes(arrangement);
    for (std::size_t i = 0; i < good.size() && i < chamber.signs.size(); ++i) {
        signs[good[i].id()] = chamber.signs[i] > 0 ? "+" : "-";
    }
    return Json{{"id", chamber.id},
                {"signs", signs},
                {"representative", angles_to_json(chamber.representative)}};
}

Json to_json(const WallDatum& datum) {
    Json fiber = nullptr;
    if (datum.fiber_dims) {
        fiber = Json::array({datum.fiber_dims->first, datum.fiber_dims->second});
    }
    return Json{{"wall", to_json(datum.wall)},
                {"gamma", angles_to_json(datum.gamma.angles)},
                {"split", Json::array({angles_to_json(datum.gamma1.angles),
                                       angles_to_json(datum.gamma2.angles)})},
                {"codim", datum.codim},
                {"fiber_dims", fiber},
                {"side_convention", datum.side_convention}};
}

Json to_json(const IntPolynomial& p) {
    return Json(p.coeffs());
}

Json to_json(const InvariantExpr& e) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : e.terms()) {
        Json m = Json::object();
        for (const auto& [name, exp] : mono) m[name] = exp;
        terms.push_back(Json{{"coeff", coeff}, {"monomial", m}});
    }
    return Json{{"terms", terms}, {"text", e.str()}};
}

Json to_json(const KnotValidation& v) {
    return Json{{"shape_ok", v.shape_ok},
                {"unimodular", v.unimodular},
                {"homology_sphere", v.homology_sphere},
                {"rational_homology_sphere", v.qhs},
                {"symplectic", v.symplectic},
                {"det_monodromy", v.det_monodromy.str()},
                {"det_id_minus_monodromy", v.det_id_minus_monodromy.str()},
                {"failures", v.failures},
                {"warnings", v.warnings}};
}

FibredKnot knot_from_json(const Json& j) {
    FibredKnot knot;
    try {
        knot.name = j.at("name").get<std::string>();
        knot.genus = j.at("genus").get<int>();
        knot.monodromy = j.at("monodromy").get<IntMatrix>();
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::usage, std::string("bad knot file: ") + e.what());
    }
    return knot;
}

FibredKnot load_knot(const std::string& path) {
    return knot_from_json(load_json_file(path));
}

FiberDimMap fiber_dims_from_json(const Json& j) {
    FiberDimMap map;
    if (!j.is_array()) {
        throw Error(ErrorKind::usage, "fiber-dims file must hold an array");
    }
    for (const Json& entry : j) {
        try {
            std::vector<int> subset = entry.at("S").get<std::vector<int>>();
            const int level = entry.at("d").get<int>();
            const int a = entry.at("a").get<int>();
            const int b = entry.at("b").get<int>();
            std::sort(subset.begin(), subset.end());
            map[{std::move(subset), level}] = {a, b};
        } catch (const Json::exception& e) {
            throw Error(ErrorKind::usage, std::string("bad fiber-dims entry: ") + e.what());
        }
    }
    return map;
}

FiberDimMap load_fiber_dims(const std::string& path) {
    return fiber_dims_from_json(load_json_file(path));
}

std::map<std::string, std::int64_t> base_values_from_json(const Json& j) {
    std::map<std::string, std::int64_t> values;
    if (!j.is_object()) {
        throw Error(ErrorKind::usage, "base-values file must hold an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number_integer()) {
            throw Error(ErrorKind::usage, "base value for " + key + " must be an integer");
        }
        values[key] = value.get<std::int64_t>();
    }
    return values;
}

std::map<std::string, std::int64_t> load_base_values(const std::string& path) {
    return base_values_from_json(load_json_file(path));
}

Json chambers_report(int n, int k, int genus) {
    const std::vector<Hyperplane> arrangement = enumerate_hyperplanes(n, k);
    const std::vector<Chamber> chambers = enumerate_chambers(n, k);

    Json hyperplanes = Json::array();
    for (const Hyperplane& h : arrangement) hyperplanes.push_back(to_json(h));

    Json chambers_json = Json::array();
    for (const Chamber& c : chambers) chambers_json.push_back(to_json(c, arrangement));

    Json adjacency = Json::array();
    Json walls = Json::array();
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        for (std::size_t j = i + 1; j < chambers.size(); ++j) {
            const auto wall = adjacent_chambers(chambers[i], chambers[j], arrangement);
            if (!wall) continue;
            adjacency.push_back(Json{{"chambers", {chambers[i].id, chambers[j].id}},
                                     {"wall", wall->id()}});
            WallDatum datum = wall_splitting(generic_wall_point(*wall), *wall);
            wall_codimension(datum, genus);
            walls.push_back(to_json(datum));
        }
    }

    // How the sector faces a_1 = 0 and a_n = 1 glue to the neighboring
    // sectors when the class space is reassembled. Crossing them is not
    // modeled; the table only records the identification.
    Json transitions = Json::array();
    if (k + 1 <= n - 1) {
        transitions.push_back(Json{{"from_sector", k},
                                   {"face", "a_1=0"},
                                   {"to_sector", k + 1},
                                   {"identified_with", "a_n=1"},
                                   {"map", "(0,x2,...,xn) -> (x2,...,xn,1)"}});
    }
    if (k - 1 >= 1) {
        transitions.push_back(Json{{"from_sector", k},
                                   {"face", "a_n=1"},
                                   {"to_sector", k - 1},
                                   {"identified_with", "a_1=0"},
                                   {"map", "(x1,...,x(n-1),1) -> (0,x1,...,x(n-1))"}});
    }

    return Json{{"schema", kReportSchema},
                {"command", "chambers"},
                {"n", n},
                {"k", k},
                {"genus", genus},
                {"hyperplanes", hyperplanes},
                {"chambers", chambers_json},
                {"adjacency", adjacency},
                {"walls", walls},
                {"sector_transitions", transitions}};
}

Json knot_report(const FibredKnot& knot, bool allow_qhs) {
    const KnotValidation v = validate(knot);
    Json report{{"schema", kReportSchema},
                {"command", "knot"},
                {"name", knot.name},
                {"genus", knot.genus},
                {"validation", to_json(v)},
                {"valid", v.ok(allow_qhs)}};
    if (v.shape_ok) {
        report["alexander"] = to_json(alexander_polynomial(knot));
        report["jacobian_lefschetz"] = to_json(jacobian_lefschetz_polynomial(knot));
        report["jacobian_lefschetz_at_1"] = jacobian_lefschetz_number(knot);
    }
    return report;
}

Json invariants_report(int n, int k, int genus, const FibredKnot& knot,
                       const FiberDimMap& fiber_dims,
                       const std::map<std::string, std::int64_t>& base_values) {
    const ChamberGraph graph = build_graph(n, k, genus, knot, fiber_dims);
    if (graph.chambers.empty()) {
        throw Error(ErrorKind::invalid_input, "sector has no chambers");
    }
    const std::string anchor = graph.chambers.front().id;
    const InvariantExpr anchor_value =
        InvariantExpr::symbol("mu(" + std::to_string(n) + "; " + anchor + ")");
    InvariantAssignment assignment = propagate(graph, anchor, anchor_value);

    Json values = Json::object();
    std::set<std::string> free_symbols;
    for (const auto& [id, expr] : assignment.values) {
        const InvariantExpr resolved = expr.substitute(base_values);
        values[id] = to_json(resolved);
        for (const auto& sym : resolved.free_symbols()) free_symbols.insert(sym);
    }

    Json omegas = Json::array();
    for (const OmegaEdge& edge : graph.boundary) {
        Json entry{{"omega", to_json(edge.omega)},
                   {"chamber", edge.chamber},
                   {"flag_euler", edge.flag_chi},
                   {"relation", "value(" + edge.chamber + ") = " +
                                    std::to_string(edge.flag_chi) + " * mu(omega)"}};
        const InvariantExpr resolved =
            assignment.values.at(edge.chamber).substitute(base_values);
        const auto quotient = resolved.divide_exact(edge.flag_chi);
        if (quotient) {
            entry["mu_omega"] = to_json(*quotient);
        } else {
            entry["mu_omega"] = nullptr;
            entry["note"] = "chamber value not divisible in integer terms; "
                            "supply base values to resolve";
        }
        omegas.push_back(std::move(entry));
    }

    const ConsistencyReport consistency = check_loop_consistency(graph);

    Json edges = Json::array();
    for (const GraphEdge& edge : graph.edges) {
        edges.push_back(Json{{"from", edge.from},
                             {"to", edge.to},
                             {"datum", to_json(edge.datum)},
                             {"delta", to_json(edge.delta)}});
    }

    Json chambers_json = Json::array();
    for (const Chamber& c : graph.chambers) {
        chambers_json.push_back(to_json(c, graph.arrangement));
    }

    return Json{{"schema", kReportSchema},
                {"command", "invariants"},
                {"n", n},
                {"k", k},
                {"genus", genus},
                {"knot", knot.name},
                {"anchor", anchor},
                {"side_convention", "alpha side: sum_S(angles) > d"},
                {"chambers", chambers_json},
                {"edges", edges},
                {"assignment", values},
                {"omega", omegas},
                {"free_symbols", Json(free_symbols)},
                {"consistency", Json{{"consistent", consistency.consistent},
                                     {"violations", consistency.violations}}}};
}

Json verify_report(const BatteryReport& battery) {
    Json trials = Json::array();
    for (const TrialRecord& t : battery.trials) {
        trials.push_back(Json{{"seed", t.seed},
                              {"equivariance_residual", t.equivariance_residual},
                              {"det_residual", t.det_residual},
                              {"unitarity_residual", t.unitarity_residual},
                              {"haar_rank", t.haar_rank},
                              {"reducible_ranks", t.reducible_ranks},
                              {"pass", t.pass}});
    }
    std::map<int, int> tally;
    for (const TrialRecord& t : battery.trials) tally[t.haar_rank]++;
    Json tally_json = Json::object();
    for (const auto& [rank, count] : tally) {
        tally_json[std::to_string(rank)] = count;
    }
    return Json{{"schema", kReportSchema},
                {"command", "verify"},
                {"n", battery.config.n},
                {"genus", battery.config.g},
                {"trials", battery.config.trials},
                {"seed_base", battery.config.seed_base},
                {"tolerances", Json{{"residual", battery.config.tol_residual},
                                    {"rank", battery.config.rank_tol},
                                    {"fd_step", battery.config.fd_step},
                                    {"angle", battery.config.angle_tol}}},
                {"full_rank_expected", battery.full_rank_expected},
                {"haar_rank_tally", tally_json},
                {"fd_halfstep_relative_error", battery.fd_halfstep_relative_error},
                {"trial_records", trials},
                {"failures", battery.failures},
                {"pass", battery.pass}};
}

}  // namespace wallcross
