#include "cylprod/config.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string_view>

#include "json.hpp"

namespace cylprod {

namespace {

using nlohmann::json;

double parse_full_double(std::string_view sv, const std::string& what) {
    if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
    double v = 0.0;
    const auto* begin = sv.data();
    const auto* end = sv.data() + sv.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || p != end || sv.empty()) {
        throw std::invalid_argument("cannot parse number '" + std::string(sv) + "' in " + what);
    }
    return v;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                ok = true;
                break;
            }
        }
        if (!ok) throw std::runtime_error("config: unknown key '" + item.key() + "' in " + where);
    }
}

quad::Scheme scheme_from_string(const std::string& s) {
    if (s == "double_exponential") return quad::Scheme::double_exponential;
    if (s == "gauss_kronrod") return quad::Scheme::gauss_kronrod;
    throw std::runtime_error("config: unknown quadrature scheme '" + s + "'");
}

const char* scheme_to_string(quad::Scheme s) {
    return s == quad::Scheme::double_exponential ? "double_exponential" : "gauss_kronrod";
}

TailStrategy tail_strategy_from_string(const std::string& s) {
    if (s == "none") return TailStrategy::none;
    if (s == "semiclassical_tail") return TailStrategy::semiclassical_tail;
    if (s == "averaging_acceleration") return TailStrategy::averaging_acceleration;
    if (s == "both") return TailStrategy::both;
    throw std::runtime_error("config: unknown tail_strategy '" + s + "'");
}

const char* tail_strategy_to_string(TailStrategy t) {
    switch (t) {
        case TailStrategy::none: return "none";
        case TailStrategy::semiclassical_tail: return "semiclassical_tail";
        case TailStrategy::averaging_acceleration: return "averaging_acceleration";
        default: return "both";
    }
}

}  // namespace

void HarnessConfig::validate() const {
    quadrature.validate();
    series.validate();
    if (!(pcf_x_switch >= 4.0 && pcf_x_switch <= 30.0)) {
        throw std::invalid_argument("config: pcf_x_switch must lie in [4, 30]");
    }
    if (!(threshold > 0.0)) throw std::invalid_argument("config: threshold must be positive");
    if (grid_z.empty()) throw std::invalid_argument("config: grid.z must not be empty");
    if (grid_x.empty()) throw std::invalid_argument("config: grid.x must not be empty");
    if (grid_methods.empty()) {
        throw std::invalid_argument("config: grid.methods must not be empty");
    }
}

HarnessConfig default_config() {
    HarnessConfig cfg;
    cfg.grid_z = {Complex{0.25, 0.0}, Complex{0.5, 0.0}, Complex{1.0, 0.0},
                  Complex{2.5, 0.0},  Complex{5.0, 0.0}, Complex{1.0, 2.0}};
    cfg.grid_x = {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0};
    cfg.grid_methods = {"tanh_integral", "finite_integral", "oracle_direct"};
    return cfg;
}

HarnessConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config: parse error in '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("config: top level must be an object");

    HarnessConfig cfg = default_config();
    reject_unknown_keys(doc, {"quadrature", "series", "pcf_x_switch", "threshold", "grid"},
                        "top level");

    if (doc.contains("quadrature")) {
        const json& q = doc["quadrature"];
        reject_unknown_keys(q,
                            {"rel_tol", "abs_tol", "max_subdivisions", "max_levels", "scheme",
                             "fixed_truncation"},
                            "quadrature");
        if (q.contains("rel_tol")) cfg.quadrature.rel_tol = q["rel_tol"].get<double>();
        if (q.contains("abs_tol")) cfg.quadrature.abs_tol = q["abs_tol"].get<double>();
        if (q.contains("max_subdivisions"))
            cfg.quadrature.max_subdivisions = q["max_subdivisions"].get<int>();
        if (q.contains("max_levels")) cfg.quadrature.max_levels = q["max_levels"].get<int>();
        if (q.contains("fixed_truncation"))
            cfg.quadrature.fixed_truncation = q["fixed_truncation"].get<double>();
        if (q.contains("scheme") && !q["scheme"].is_null()) {
            cfg.quadrature.scheme = scheme_from_string(q["scheme"].get<std::string>());
        }
    }
    if (doc.contains("series")) {
        const json& s = doc["series"];
        reject_unknown_keys(s, {"max_terms", "target_tol", "tail_strategy"}, "series");
        if (s.contains("max_terms")) cfg.series.max_terms = s["max_terms"].get<long>();
        if (s.contains("target_tol")) cfg.series.target_tol = s["target_tol"].get<double>();
        if (s.contains("tail_strategy")) {
            cfg.series.tail_strategy = tail_strategy_from_string(s["tail_strategy"].get<std::string>());
        }
    }
    if (doc.contains("pcf_x_switch")) cfg.pcf_x_switch = doc["pcf_x_switch"].get<double>();
    if (doc.contains("threshold")) cfg.threshold = doc["threshold"].get<double>();
    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        reject_unknown_keys(g, {"z", "x", "methods"}, "grid");
        if (g.contains("z")) {
            cfg.grid_z.clear();
            for (const auto& zv : g["z"]) {
                if (zv.is_number()) {
                    cfg.grid_z.emplace_back(zv.get<double>(), 0.0);
                } else {
                    cfg.grid_z.push_back(parse_complex(zv.get<std::string>()));
                }
            }
        }
        if (g.contains("x")) {
            cfg.grid_x.clear();
            for (const auto& xv : g["x"]) cfg.grid_x.push_back(xv.get<double>());
        }
        if (g.contains("methods")) {
            cfg.grid_methods.clear();
            for (const auto& mv : g["methods"]) cfg.grid_methods.push_back(mv.get<std::string>());
        }
    }
    cfg.validate();
    return cfg;
}

Complex parse_complex(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    if (s.back() != 'i' && s.back() != 'I') {
        return Complex{parse_full_double(s, "complex literal"), 0.0};
    }
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.empty() || s == "+") return Complex{0.0, 1.0};
        if (s == "-") return Complex{0.0, -1.0};
        return Complex{0.0, parse_full_double(s, "complex literal")};
    }
    const double re = parse_full_double(s.substr(0, split), "complex literal");
    std::string im_part = s.substr(split);
    double im;
    if (im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else {
        im = parse_full_double(im_part, "complex literal");
    }
    return Complex{re, im};
}

std::string config_echo_json(const HarnessConfig& cfg) {
    json q;
    q["rel_tol"] = cfg.quadrature.rel_tol;
    q["abs_tol"] = cfg.quadrature.abs_tol;
    q["max_subdivisions"] = cfg.quadrature.max_subdivisions;
    q["max_levels"] = cfg.quadrature.max_levels;
    q["fixed_truncation"] = cfg.quadrature.fixed_truncation;
    if (cfg.quadrature.scheme) {
        q["scheme"] = scheme_to_string(*cfg.quadrature.scheme);
    } else {
        q["scheme"] = nullptr;
    }
    json s;
    s["max_terms"] = cfg.series.max_terms;
    s["target_tol"] = cfg.series.target_tol;
    s["tail_strategy"] = tail_strategy_to_string(cfg.series.tail_strategy);
    json g;
    g["z"] = json::array();
    for (const Complex& z : cfg.grid_z) g["z"].push_back({z.real(), z.imag()});
    g["x"] = cfg.grid_x;
    g["methods"] = cfg.grid_methods;
    json doc;
    doc["quadrature"] = q;
    doc["series"] = s;
    doc["pcf_x_switch"] = cfg.pcf_x_switch;
    doc["threshold"] = cfg.threshold;
    doc["grid"] = g;
    return doc.dump();
}

}  // namespace cylprod
