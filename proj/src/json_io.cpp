#include "tropmat/json_io.hpp"

#include <algorithm>
#include <cmath>

namespace tropmat {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

int int_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
        bad(std::string("expected integer field \"") + key + "\"");
    return j[key].get<int>();
}

SmallSet set_from_json(const json& j, int n, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of element indices");
    SmallSet s;
    for (const json& e : j) {
        if (!e.is_number_integer()) bad(std::string(what) + " entries must be integers");
        int v = e.get<int>();
        if (v < 0 || v >= n) bad(std::string(what) + " entry out of range");
        s.insert(v);
    }
    return s;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string t = text;
    if (t.empty()) bad("empty rational literal");
    if (auto slash = t.find('/'); slash != std::string::npos) {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (num.empty() || den.empty()) bad("malformed rational \"" + text + "\"");
        try {
            BigInt p(num), q(den);
            if (q == 0) bad("zero denominator in \"" + text + "\"");
            return Rational(p, q);
        } catch (const std::runtime_error&) {
            bad("malformed rational \"" + text + "\"");
        }
    }
    bool neg = false;
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
        neg = t[0] == '-';
        i = 1;
    }
    std::string int_part, frac_part;
    bool seen_dot = false;
    for (; i < t.size(); ++i) {
        if (t[i] == '.') {
            if (seen_dot) bad("malformed rational \"" + text + "\"");
            seen_dot = true;
        } else if (t[i] >= '0' && t[i] <= '9') {
            (seen_dot ? frac_part : int_part) += t[i];
        } else {
            bad("malformed rational \"" + text + "\"");
        }
    }
    if (int_part.empty() && frac_part.empty()) bad("malformed rational \"" + text + "\"");
    BigInt num = int_part.empty() ? BigInt(0) : BigInt(int_part);
    BigInt den = 1;
    for (char c : frac_part) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational r(num, den);
    return neg ? -r : r;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) bad("non-finite number is not a rational");
    if (x == 0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);
    auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(scaled);
    BigInt two = 1;
    for (int i = 0; i < std::abs(exp); ++i) two *= 2;
    if (exp > 0) r *= two;
    if (exp < 0) r /= two;
    return r;
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("expected a rational (integer, decimal string or \"p/q\")");
}

json rational_to_json(const Rational& r) {
    if (denominator(r) == 1) {
        const BigInt& num = numerator(r);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max())
            return json(num.convert_to<std::int64_t>());
    }
    return json(rational_to_string(r));
}

Trop trop_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "-inf") return Trop::ninf();
    return Trop::of(rational_from_json(j));
}

json trop_to_json(const Trop& t) {
    if (!t.finite()) return json("-inf");
    return rational_to_json(t.value());
}

Matroid matroid_from_json(const json& descriptor, GroundSet ground) {
    if (!descriptor.is_object() || !descriptor.contains("kind") || !descriptor["kind"].is_object())
        bad("matroid descriptor needs an object field \"kind\"");
    int n = int_field(descriptor, "n");
    if (n != ground.n) bad("matroid descriptor size does not match the ground set");
    const json& kind = descriptor["kind"];
    if (kind.size() != 1) bad("matroid kind must have exactly one entry");
    const std::string name = kind.begin().key();
    const json& body = kind.begin().value();
    if (name == "partition") {
        std::vector<SmallSet> blocks;
        for (const json& b : body) blocks.push_back(set_from_json(b, n, "partition block"));
        return Matroid::partition(std::move(ground), std::move(blocks));
    }
    if (name == "uniform") {
        if (!body.is_number_integer()) bad("uniform rank must be an integer");
        return Matroid::uniform(std::move(ground), body.get<int>());
    }
    if (name == "graphic") {
        std::vector<std::pair<int, int>> edges;
        for (const json& e : body) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                bad("graphic edges must be [u, v] integer pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return Matroid::graphic(std::move(ground), std::move(edges));
    }
    if (name == "explicit") {
        std::vector<SmallSet> bases;
        for (const json& b : body) bases.push_back(set_from_json(b, n, "basis"));
        return Matroid::from_bases(std::move(ground), std::move(bases));
    }
    if (name == "truncation") {
        if (!body.is_object() || !body.contains("inner")) bad("truncation needs an \"inner\" descriptor");
        Matroid inner = matroid_from_json(body["inner"], std::move(ground));
        return Matroid::truncation(inner, int_field(body, "k"));
    }
    bad("unknown matroid kind \"" + name + "\"");
}

json matroid_to_json(const Matroid& m) {
    json kind;
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Matroid::PartitionKind>) {
                json blocks = json::array();
                for (SmallSet b : k.blocks) blocks.push_back(b.elements());
                kind = json{{"partition", blocks}};
            } else if constexpr (std::is_same_v<K, Matroid::UniformKind>) {
                kind = json{{"uniform", k.r}};
            } else if constexpr (std::is_same_v<K, Matroid::GraphicKind>) {
                json edges = json::array();
                for (auto [u, v] : k.edges) edges.push_back(json::array({u, v}));
                kind = json{{"graphic", edges}};
            } else if constexpr (std::is_same_v<K, Matroid::ExplicitKind>) {
                json bases = json::array();
                for (SmallSet b : k.bases) bases.push_back(b.elements());
                kind = json{{"explicit", bases}};
            } else {
                static_assert(std::is_same_v<K, Matroid::TruncationKind>);
                kind = json{{"truncation", json{{"inner", matroid_to_json(*k.inner)}, {"k", k.k}}}};
            }
        },
        m.kind());
    return json{{"n", m.n()}, {"kind", kind}};
}

namespace {

std::vector<std::string> point_labels(const json& points,
                                      const std::optional<std::vector<std::string>>& expected) {
    if (!points.is_object()) bad("\"points\" must be an object keyed by element label");
    if (expected) {
        if (points.size() != expected->size()) bad("points must cover every element exactly once");
        for (const std::string& l : *expected)
            if (!points.contains(l)) bad("missing point for element \"" + l + "\"");
        return *expected;
    }
    std::vector<std::string> labels;
    for (auto it = points.begin(); it != points.end(); ++it) labels.push_back(it.key());
    return labels;
}

}  // namespace

std::pair<TropConfig, std::vector<std::string>> trop_config_from_json(
    const json& cfg, const std::optional<std::vector<std::string>>& expected_labels) {
    if (!cfg.is_object() || !cfg.contains("points")) bad("configuration needs a \"points\" object");
    int d = int_field(cfg, "d");
    std::vector<std::string> labels = point_labels(cfg["points"], expected_labels);
    std::vector<TropVec> points;
    for (const std::string& l : labels) {
        const json& coords = cfg["points"][l];
        if (!coords.is_array()) bad("point \"" + l + "\" must be an array");
        TropVec v;
        for (const json& c : coords) v.push_back(trop_from_json(c));
        points.push_back(std::move(v));
    }
    return {TropConfig(d, std::move(points)), std::move(labels)};
}

json trop_config_to_json(const TropConfig& config, const std::vector<std::string>& labels) {
    json points = json::object();
    for (int e = 0; e < config.n(); ++e) {
        json coords = json::array();
        for (const Trop& t : config.points[static_cast<std::size_t>(e)]) coords.push_back(trop_to_json(t));
        points[labels[static_cast<std::size_t>(e)]] = coords;
    }
    return json{{"d", config.d}, {"points", points}};
}

std::pair<RatConfig, std::vector<std::string>> rat_config_from_json(
    const json& cfg, const std::optional<std::vector<std::string>>& expected_labels) {
    if (!cfg.is_object() || !cfg.contains("points")) bad("configuration needs a \"points\" object");
    int d = int_field(cfg, "d");
    std::vector<std::string> labels = point_labels(cfg["points"], expected_labels);
    RatVec origin(static_cast<std::size_t>(d));
    if (cfg.contains("origin")) {
        const json& o = cfg["origin"];
        if (!o.is_array() || static_cast<int>(o.size()) != d) bad("origin must have d coordinates");
        for (int k = 0; k < d; ++k) origin[static_cast<std::size_t>(k)] = rational_from_json(o[static_cast<std::size_t>(k)]);
    }
    std::vector<RatVec> points;
    for (const std::string& l : labels) {
        const json& coords = cfg["points"][l];
        if (!coords.is_array() || static_cast<int>(coords.size()) != d)
            bad("point \"" + l + "\" must have d coordinates");
        RatVec v(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
            v[static_cast<std::size_t>(k)] =
                rational_from_json(coords[static_cast<std::size_t>(k)]) - origin[static_cast<std::size_t>(k)];
        points.push_back(std::move(v));
    }
    return {RatConfig(d, std::move(points)), std::move(labels)};
}

SupportComplex complex_from_json(const json& j) {
    int n = int_field(j, "n");
    if (n < 0 || n > SmallSet::max_elements) bad("complex ground set size out of range");
    if (!j.contains("facets") || !j["facets"].is_array()) bad("complex needs a \"facets\" array");
    std::vector<SmallSet> facets;
    for (const json& f : j["facets"]) facets.push_back(set_from_json(f, n, "facet"));
    std::sort(facets.begin(), facets.end(), SmallSet::lex_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return SupportComplex{n, std::move(facets)};
}

json complex_to_json(const SupportComplex& complex) {
    json facets = json::array();
    for (SmallSet f : complex.facets) facets.push_back(f.elements());
    return json{{"n", complex.n}, {"facets", facets}};
}

ColorfulLP clp_from_json(const json& j) {
    if (!j.is_object() || !j.contains("A") || !j["A"].is_array()) bad("colorful LP needs a matrix \"A\"");
    if (!j.contains("classes") || !j["classes"].is_array()) bad("colorful LP needs \"classes\"");
    std::vector<TropVec> rows;
    int cols = -1;
    for (const json& row : j["A"]) {
        if (!row.is_array()) bad("matrix rows must be arrays");
        TropVec r;
        for (const json& e : row) r.push_back(trop_from_json(e));
        if (cols < 0) cols = static_cast<int>(r.size());
        if (static_cast<int>(r.size()) != cols) bad("matrix rows must have equal length");
        rows.push_back(std::move(r));
    }
    if (cols < 0) cols = 0;
    std::vector<std::vector<int>> classes;
    for (const json& cls : j["classes"]) {
        if (!cls.is_array()) bad("classes must be arrays of column indices");
        std::vector<int> c;
        for (const json& e : cls) {
            if (!e.is_number_integer()) bad("class entries must be integers");
            c.push_back(e.get<int>());
        }
        classes.push_back(std::move(c));
    }
    int num_rows = static_cast<int>(rows.size());
    return ColorfulLP(TropMatrix(num_rows, cols, std::move(rows)), std::move(classes));
}

json clp_to_json(const ColorfulLP& inst) {
    json rows = json::array();
    for (const TropVec& row : inst.a.a) {
        json r = json::array();
        for (const Trop& e : row) r.push_back(trop_to_json(e));
        rows.push_back(r);
    }
    json classes = json::array();
    for (const auto& cls : inst.classes) classes.push_back(cls);
    return json{{"A", rows}, {"classes", classes}};
}

namespace {

int parse_3dm_label(const json& j, char part, int k) {
    if (!j.is_string()) bad("3DM edge entries must be label strings");
    std::string s = j.get<std::string>();
    if (s.size() < 2 || s[0] != part)
        bad("3DM edge node \"" + s + "\" must belong to part '" + std::string(1, part) + "'");
    int idx = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') bad("malformed 3DM node label \"" + s + "\"");
        idx = idx * 10 + (s[i] - '0');
    }
    if (idx < 1 || idx > k) bad("3DM node label \"" + s + "\" out of range");
    return idx - 1;
}

}  // namespace

ThreeDM threedm_from_json(const json& j) {
    int k = int_field(j, "k");
    if (!j.contains("edges") || !j["edges"].is_array()) bad("3DM instance needs an \"edges\" array");
    std::vector<ThreeDM::Edge> edges;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) bad("3DM edges must be triples");
        edges.push_back(ThreeDM::Edge{parse_3dm_label(e[0], 'a', k), parse_3dm_label(e[1], 'b', k),
                                      parse_3dm_label(e[2], 'c', k)});
    }
    return ThreeDM(k, std::move(edges));
}

json threedm_to_json(const ThreeDM& h) {
    json edges = json::array();
    for (const ThreeDM::Edge& e : h.edges)
        edges.push_back(json::array({"a" + std::to_string(e.a + 1), "b" + std::to_string(e.b + 1),
                                     "c" + std::to_string(e.c + 1)}));
    return json{{"k", h.k}, {"edges", edges}};
}

DualHornSystem horn_from_json(const json& j) {
    int n = int_field(j, "n");
    if (!j.contains("constraints") || !j["constraints"].is_array())
        bad("system needs a \"constraints\" array");
    std::vector<DualHornSystem::Constraint> constraints;
    for (const json& c : j["constraints"]) {
        if (!c.is_object() || c.size() != 1) bad("each constraint must be {\"eq\": ...} or {\"le\": ...}");
        DualHornSystem::Constraint out;
        if (c.contains("eq")) {
            out.is_equation = true;
            for (const json& v : c["eq"]) {
                if (!v.is_number_integer()) bad("\"eq\" entries must be integers");
                out.set.push_back(v.get<int>());
            }
        } else if (c.contains("le")) {
            out.is_equation = false;
            out.lhs = int_field(c["le"], "lhs");
            if (!c["le"].contains("rhs") || !c["le"]["rhs"].is_array()) bad("\"le\" needs an \"rhs\" array");
            for (const json& v : c["le"]["rhs"]) {
                if (!v.is_number_integer()) bad("\"rhs\" entries must be integers");
                out.set.push_back(v.get<int>());
            }
        } else {
            bad("unknown constraint kind");
        }
        constraints.push_back(std::move(out));
    }
    return DualHornSystem(n, std::move(constraints));
}

Clutter clutter_from_json(const json& j) {
    int n = int_field(j, "n");
    if (n < 0 || n > SmallSet::max_elements) bad("clutter ground set size out of range");
    if (!j.contains("members") || !j["members"].is_array()) bad("clutter needs a \"members\" array");
    std::vector<SmallSet> members;
    for (const json& m : j["members"]) members.push_back(set_from_json(m, n, "member"));
    return Clutter(n, std::move(members));
}

json set_to_labels(SmallSet s, const std::vector<std::string>& labels) {
    json out = json::array();
    for (int e : s) out.push_back(labels[static_cast<std::size_t>(e)]);
    return out;
}

json sets_to_labels(const std::vector<SmallSet>& sets, const std::vector<std::string>& labels) {
    json out = json::array();
    for (SmallSet s : sets) out.push_back(set_to_labels(s, labels));
    return out;
}

json sectors_to_json(SmallSet sectors) {
    json out = json::array();
    for (int s : sectors) out.push_back(s + 1);
    return out;
}

}  // namespace tropmat
