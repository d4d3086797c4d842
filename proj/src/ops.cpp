#include "tropmat/ops.hpp"

#include <algorithm>

#include "tropmat/colorful.hpp"
#include "tropmat/gen.hpp"

namespace tropmat::ops {

namespace {

json report(const char* status) {
    return json{{"schema_version", "1"}, {"status", status}};
}

std::optional<std::vector<std::string>> labels_field(const json& instance) {
    if (!instance.contains("labels")) return std::nullopt;
    const json& l = instance["labels"];
    if (!l.is_array()) throw InputError("\"labels\" must be an array of strings");
    std::vector<std::string> out;
    for (const json& e : l) {
        if (!e.is_string()) throw InputError("\"labels\" entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

struct TropInstance {
    Matroid m;
    TropConfig config;
    std::vector<std::string> labels;
};

TropInstance parse_trop_instance(const json& instance) {
    if (!instance.is_object() || !instance.contains("matroid"))
        throw InputError("instance needs a \"matroid\" descriptor");
    if (!instance.contains("config")) throw InputError("instance needs a \"config\"");
    auto [config, labels] = trop_config_from_json(instance["config"], labels_field(instance));
    Matroid m = matroid_from_json(instance["matroid"], GroundSet(config.n(), labels));
    return TropInstance{std::move(m), std::move(config), std::move(labels)};
}

struct RatInstance {
    Matroid m;
    RatConfig config;
    std::vector<std::string> labels;
};

RatInstance parse_rat_instance(const json& instance) {
    if (!instance.is_object() || !instance.contains("matroid"))
        throw InputError("instance needs a \"matroid\" descriptor");
    if (!instance.contains("config")) throw InputError("instance needs a \"config\"");
    auto [config, labels] = rat_config_from_json(instance["config"], labels_field(instance));
    Matroid m = matroid_from_json(instance["matroid"], GroundSet(config.n(), labels));
    return RatInstance{std::move(m), std::move(config), std::move(labels)};
}

int resolve_label(const std::string& label, const std::vector<std::string>& labels) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw InputError("unknown element label \"" + label + "\"");
    return static_cast<int>(it - labels.begin());
}

json lambda_to_json(const TropVec& lambda, SmallSet elements,
                    const std::vector<std::string>& labels) {
    json out = json::object();
    std::size_t idx = 0;
    for (int e : elements) out[labels[static_cast<std::size_t>(e)]] = trop_to_json(lambda[idx++]);
    return out;
}

json bc_witness_to_json(const ConditionWitness& w, const std::vector<std::string>& labels) {
    json out = json{{"basis", set_to_labels(w.first, labels)},
                    {"cocircuit", set_to_labels(w.second, labels)}};
    if (w.sector >= 0) out["sector"] = w.sector + 1;
    return out;
}

json cc_witness_to_json(const ConditionWitness& w, const std::vector<std::string>& labels) {
    return json{{"cocircuit", set_to_labels(w.first, labels)},
                {"cocircuit2", set_to_labels(w.second, labels)},
                {"sector", w.sector + 1}};
}

json trace_to_json(const std::vector<TraceStep>& trace, const std::vector<std::string>& labels) {
    json out = json::array();
    for (const TraceStep& step : trace) {
        json s{{"basis", set_to_labels(step.basis, labels)},
               {"covered", sectors_to_json(step.covered)},
               {"leaving", labels[static_cast<std::size_t>(step.leaving)]},
               {"cocircuit", set_to_labels(step.cocircuit, labels)}};
        if (step.cocircuit2) s["cocircuit2"] = set_to_labels(*step.cocircuit2, labels);
        s["entering"] = labels[static_cast<std::size_t>(step.entering)];
        s["sector"] = step.sector + 1;
        out.push_back(std::move(s));
    }
    return out;
}

json colorful_outcome_to_json(const ColorfulOutcome& outcome, const std::vector<std::string>& labels,
                              bool want_trace, bool cocircuit_pair) {
    json out;
    switch (outcome.status) {
        case ColorfulOutcome::Status::found:
            out = report("found");
            out["basis"] = set_to_labels(outcome.basis, labels);
            out["certificate"] =
                json{{"lambda", lambda_to_json(outcome.certificate.lambda, outcome.basis, labels)}};
            break;
        case ColorfulOutcome::Status::violated:
            out = report("violated");
            out["witness"] = cocircuit_pair ? cc_witness_to_json(*outcome.witness, labels)
                                            : bc_witness_to_json(*outcome.witness, labels);
            break;
        case ColorfulOutcome::Status::not_found:
            out = report("not-found");
            break;
    }
    if (want_trace) out["trace"] = trace_to_json(outcome.trace, labels);
    return out;
}

std::vector<Rational> parse_target(const json& instance, int d) {
    std::vector<Rational> target(static_cast<std::size_t>(d));
    if (!instance.contains("target")) return target;
    const json& t = instance["target"];
    if (!t.is_array() || static_cast<int>(t.size()) != d)
        throw InputError("target must have exactly d coordinates");
    for (int k = 0; k < d; ++k) {
        Trop v = trop_from_json(t[static_cast<std::size_t>(k)]);
        if (!v.finite())
            throw InputError("membership targets with -inf coordinates are not supported");
        target[static_cast<std::size_t>(k)] = v.value();
    }
    return target;
}

}  // namespace

json membership(const json& instance) {
    if (!instance.is_object() || !instance.contains("config"))
        throw InputError("instance needs a \"config\"");
    auto [config, labels] = trop_config_from_json(instance["config"], std::nullopt);
    std::vector<Rational> target = parse_target(instance, config.d);
    Membership r = tropical_membership(target, config);
    if (r.inside) {
        json out = report("inside");
        out["certificate"] =
            json{{"lambda", lambda_to_json(r.lambda, SmallSet::full(config.n()), labels)}};
        return out;
    }
    json out = report("outside");
    out["witness"] = json{{"sector", r.uncovered_sector + 1}};
    return out;
}

json colorful_basis(const json& instance, const std::optional<std::string>& pin, bool want_trace) {
    TropInstance in = parse_trop_instance(instance);
    std::optional<int> pin_idx;
    if (pin) pin_idx = resolve_label(*pin, in.labels);
    ColorfulOutcome outcome = tropmat::colorful_basis(in.m, in.config, pin_idx);
    return colorful_outcome_to_json(outcome, in.labels, want_trace, false);
}

json verify_condition(const json& instance, bool two_cocircuit) {
    TropInstance in = parse_trop_instance(instance);
    ConditionReport r = two_cocircuit ? verify_two_cocircuit_condition(in.m, in.config)
                                      : verify_bc_condition(in.m, in.config);
    if (r.ok) return report("ok");
    json out = report("violated");
    out["witness"] = two_cocircuit ? cc_witness_to_json(*r.witness, in.labels)
                                   : bc_witness_to_json(*r.witness, in.labels);
    return out;
}

json two_cocircuit_basis(const json& instance, bool want_trace) {
    TropInstance in = parse_trop_instance(instance);
    ColorfulOutcome outcome = colorful_basis_two_cocircuit(in.m, in.config);
    return colorful_outcome_to_json(outcome, in.labels, want_trace, true);
}

json km_verify(const json& instance, bool corank2) {
    RatInstance in = parse_rat_instance(instance);
    if (corank2) {
        ConditionReport r = verify_corank2_condition(in.m, in.config);
        if (r.ok) return report("ok");
        json out = report("violated");
        out["witness"] = json{{"set", set_to_labels(r.witness->first, in.labels)}};
        return out;
    }
    ConditionReport r = verify_km_condition(in.m, in.config);
    if (r.ok) return report("ok");
    json out = report("violated");
    out["witness"] = json{{"basis", set_to_labels(r.witness->first, in.labels)},
                          {"cocircuit", set_to_labels(r.witness->second, in.labels)}};
    return out;
}

json km_basis(const json& instance, const std::optional<std::string>& pin) {
    RatInstance in = parse_rat_instance(instance);
    std::optional<int> pin_idx;
    if (pin) pin_idx = resolve_label(*pin, in.labels);
    auto found = find_km_basis(in.m, in.config, pin_idx);
    if (!found) return report("not-found");
    json out = report("found");
    out["basis"] = set_to_labels(found->basis, in.labels);
    std::vector<int> elems = found->basis.elements();
    json support = json::array();
    json weights = json::object();
    for (std::size_t i = 0; i < found->certificate.support.size(); ++i) {
        const std::string& label =
            in.labels[static_cast<std::size_t>(elems[static_cast<std::size_t>(found->certificate.support[i])])];
        support.push_back(label);
        weights[label] = rational_to_json(found->certificate.weights[i]);
    }
    out["certificate"] = json{{"support", support}, {"weights", weights}};
    return out;
}

json rado_check(const json& instance) {
    TropInstance in = parse_trop_instance(instance);
    RadoReport r = generic_rado_check(in.m, in.config);
    if (!r.generic) {
        json out = report("non-generic");
        out["generic"] = false;
        return out;
    }
    json out = report(*r.rado_holds ? "ok" : "violated");
    out["generic"] = true;
    out["rado_holds"] = *r.rado_holds;
    if (r.violating_sectors) out["witness"] = json{{"sectors", sectors_to_json(*r.violating_sectors)}};
    if (r.transversal) out["transversal"] = set_to_labels(*r.transversal, in.labels);
    return out;
}

json clp_solve(const json& instance) {
    ColorfulLP inst = clp_from_json(instance);
    auto sol = tropmat::solve_clp(inst);
    if (!sol) return report("infeasible");
    json out = report("feasible");
    json x = json::array();
    for (const Trop& v : sol->x) x.push_back(trop_to_json(v));
    out["x"] = x;
    out["support"] = sol->support;
    return out;
}

json clp_from_3dm(const json& instance) {
    ThreeDM h = threedm_from_json(instance);
    ColorfulLP inst = from_3dm(h);
    json out = json{{"schema_version", "1"}};
    out.update(clp_to_json(inst));
    return out;
}

json horn_solve(const json& instance) {
    DualHornSystem sys = horn_from_json(instance);
    ZeroInfSolution sol = solve_zero_inf(sys);
    if (!sol.feasible) return report("infeasible");
    json out = report("feasible");
    json x = json::array();
    for (bool ninf : sol.is_ninf) x.push_back(ninf ? json("-inf") : json(0));
    out["x"] = x;
    return out;
}

json realize_complex_op(const json& instance) {
    SupportComplex complex = complex_from_json(instance);
    TropConfig config = realize_complex(complex);
    std::vector<std::string> labels;
    for (int e = 0; e < complex.n; ++e) labels.push_back(std::to_string(e));
    json out = report("ok");
    out["config"] = trop_config_to_json(config, labels);
    return out;
}

json support_complex_op(const json& instance) {
    if (!instance.is_object() || !instance.contains("config"))
        throw InputError("instance needs a \"config\"");
    auto [config, labels] = trop_config_from_json(instance["config"], std::nullopt);
    std::vector<Rational> target = parse_target(instance, config.d);
    SupportComplex complex = support_complex(config, target);
    json out = report("ok");
    out["complex"] = complex_to_json(complex);
    out["labels"] = labels;
    return out;
}

json matroid_info(const json& instance) {
    const json& descriptor = instance.contains("matroid") ? instance["matroid"] : instance;
    std::optional<std::vector<std::string>> given = labels_field(instance);
    if (!descriptor.is_object() || !descriptor.contains("n") || !descriptor["n"].is_number_integer())
        throw InputError("matroid descriptor needs an integer \"n\"");
    int n = descriptor["n"].get<int>();
    Matroid m = matroid_from_json(descriptor, GroundSet(n, given));
    std::vector<std::string> labels;
    for (int e = 0; e < n; ++e) labels.push_back(m.ground().label(e));
    json out = report("ok");
    out["n"] = n;
    out["rank"] = m.rank();
    out["loops"] = set_to_labels(m.loops(), labels);
    out["bases"] = sets_to_labels(m.bases(), labels);
    out["cocircuits"] = sets_to_labels(m.cocircuits(), labels);
    out["dual_bases"] = sets_to_labels(m.dual().bases(), labels);
    return out;
}

json clutter_check(const json& instance) {
    Clutter f = clutter_from_json(instance);
    json blk = json::array();
    for (SmallSet b : blocker(f).members) blk.push_back(b.elements());
    if (f.members.empty()) {
        json out = report("violated");
        out["witness"] = json{{"reason", "a basis family cannot be empty"}};
        out["blocker"] = blk;
        return out;
    }
    auto witness = exchange_axiom_violation(f);
    json out = report(witness ? "violated" : "ok");
    if (witness)
        out["witness"] = json{{"b1", witness->b1.elements()},
                              {"b2", witness->b2.elements()},
                              {"element", witness->element}};
    out["blocker"] = blk;
    return out;
}

json gen_instance(const std::string& kind, const json& params, std::uint64_t seed) {
    auto param = [&](const char* key, int fallback) {
        if (!params.contains(key)) return fallback;
        if (!params[key].is_number_integer()) throw InputError(std::string("parameter \"") + key + "\" must be an integer");
        return params[key].get<int>();
    };
    if (kind == "fig1" || kind == "fig2") {
        json out = kind == "fig1" ? gen::fig1() : gen::fig2();
        json wrapped = json{{"schema_version", "1"}};
        wrapped.update(out);
        return wrapped;
    }
    Rng rng(seed);
    if (kind == "random-3dm") {
        int k = param("k", 3);
        int edges = param("edges", 3 * k);
        if (k < 1 || edges < 0) throw InputError("random-3dm needs k >= 1 and edges >= 0");
        json out = json{{"schema_version", "1"}};
        out.update(threedm_to_json(gen::random_threedm(k, edges, rng)));
        return out;
    }
    if (kind == "random-clp") {
        int rows = param("rows", 3);
        int cols = param("cols", 6);
        int classes = param("classes", 3);
        if (rows < 1 || cols < 1) throw InputError("random-clp needs rows >= 1 and cols >= 1");
        if (classes < 1 || classes > cols)
            throw InputError("random-clp needs 1 <= classes <= cols");
        json out = json{{"schema_version", "1"}};
        out.update(clp_to_json(gen::random_clp(rows, cols, classes, rng)));
        return out;
    }
    if (kind == "random-config") {
        int n = param("n", 6);
        if (n < 1 || n > SmallSet::max_elements) throw InputError("random-config needs 1 <= n <= 64");
        std::string matroid_kind = "any";
        if (params.contains("kind")) {
            if (!params["kind"].is_string()) throw InputError("parameter \"kind\" must be a string");
            matroid_kind = params["kind"].get<std::string>();
        }
        Matroid m = gen::random_matroid(n, rng, 4, matroid_kind);
        int d = param("d", std::max(m.rank() - 1, 0));
        if (d < 0 || d > 62) throw InputError("random-config needs 0 <= d <= 62");
        TropConfig config = gen::random_trop_config(n, d, rng);
        std::vector<std::string> labels;
        for (int e = 0; e < n; ++e) labels.push_back(std::to_string(e));
        return json{{"schema_version", "1"},
                    {"matroid", matroid_to_json(m)},
                    {"config", trop_config_to_json(config, labels)}};
    }
    throw InputError("unknown instance kind \"" + kind + "\"");
}

int exit_code_for(const json& report_json) {
    if (!report_json.is_object() || !report_json.contains("status")) return 0;
    const std::string status = report_json["status"].get<std::string>();
    if (status == "violated" || status == "outside" || status == "infeasible" ||
        status == "not-found" || status == "non-generic")
        return 1;
    return 0;
}

}  // namespace tropmat::ops
