#include "cylprod/report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace cylprod {

namespace {

using nlohmann::json;

json cell_to_json(const Cell& c) {
    json j;
    j["z"] = {c.z.real(), c.z.imag()};
    j["x"] = c.x;
    j["method"] = c.method;
    if (c.ok) {
        j["value"] = {c.value.real(), c.value.imag()};
        j["err_estimate"] = c.err_estimate;
        j["work"] = c.work;
        j["wall_ns"] = c.wall_ns;
    } else {
        j["error"] = c.error;
    }
    return j;
}

}  // namespace

char method_family(const std::string& method) {
    if (method == "coth_integral" || method == "shifted_integral" ||
        method == "unified-" || method == "alternating_series" ||
        method == "combination-") {
        return 'Q';
    }
    return 'P';
}

void sort_cells(std::vector<Cell>& cells) {
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return std::make_tuple(a.method, a.z.real(), a.z.imag(), a.x) <
               std::make_tuple(b.method, b.z.real(), b.z.imag(), b.x);
    });
}

CrossCheckReport build_crosscheck_report(std::vector<Cell> cells, double threshold) {
    CrossCheckReport rep;
    rep.threshold = threshold;
    sort_cells(cells);
    rep.cells = std::move(cells);

    struct Key {
        double zr, zi, x;
        bool operator<(const Key& o) const {
            return std::tie(zr, zi, x) < std::tie(o.zr, o.zi, o.x);
        }
    };
    std::vector<std::pair<Key, std::vector<const Cell*>>> groups;
    for (const Cell& c : rep.cells) {
        const Key k{c.z.real(), c.z.imag(), c.x};
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return !(g.first < k) && !(k < g.first); });
        if (it == groups.end()) {
            groups.emplace_back(k, std::vector<const Cell*>{});
            it = groups.end() - 1;
        }
        it->second.push_back(&c);
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    bool all_ok = true;
    for (const auto& [key, members] : groups) {
        double worst = 0.0;
        bool compared = false;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!members[i]->ok) {
                all_ok = false;
                continue;
            }
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (!members[j]->ok) continue;
                if (method_family(members[i]->method) != method_family(members[j]->method))
                    continue;
                compared = true;
                worst = std::max(worst,
                                 rel_deviation(members[i]->value, members[j]->value));
            }
        }
        if (!compared) continue;
        rep.deviations.push_back({Complex{key.zr, key.zi}, key.x, worst});
        rep.max_rel_deviation = std::max(rep.max_rel_deviation, worst);
    }
    rep.pass = all_ok && rep.max_rel_deviation <= threshold;
    return rep;
}

std::string report_to_json(const CrossCheckReport& report, const HarnessConfig& cfg) {
    json doc;
    doc["config_echo"] = json::parse(config_echo_json(cfg));
    doc["cells"] = json::array();
    for (const Cell& c : report.cells) doc["cells"].push_back(cell_to_json(c));
    doc["deviations"] = json::array();
    for (const DeviationRow& d : report.deviations) {
        json j;
        j["z"] = {d.z.real(), d.z.imag()};
        j["x"] = d.x;
        j["max_rel_deviation"] = d.max_rel_deviation;
        doc["deviations"].push_back(j);
    }
    doc["max_rel_deviation"] = report.max_rel_deviation;
    doc["threshold"] = report.threshold;
    doc["pass"] = report.pass;
    return doc.dump(2) + "\n";
}

std::string cells_to_csv(const std::vector<Cell>& cells) {
    std::string out = "method,z_re,z_im,x,value_re,value_im,err_estimate,work\n";
    for (const Cell& c : cells) {
        if (!c.ok) continue;
        out += c.method;
        out += ',';
        out += format_double(c.z.real());
        out += ',';
        out += format_double(c.z.imag());
        out += ',';
        out += format_double(c.x);
        out += ',';
        out += format_double(c.value.real());
        out += ',';
        out += format_double(c.value.imag());
        out += ',';
        out += format_double(c.err_estimate);
        out += ',';
        out += std::to_string(c.work);
        out += '\n';
    }
    return out;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "method,z_re,z_im,x,median_ns,work,err_estimate\n";
    for (const BenchRow& r : rows) {
        out += r.method;
        out += ',';
        out += format_double(r.z.real());
        out += ',';
        out += format_double(r.z.imag());
        out += ',';
        out += format_double(r.x);
        out += ',';
        out += std::to_string(r.median_ns);
        out += ',';
        out += std::to_string(r.work);
        out += ',';
        out += format_double(r.err_estimate);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace cylprod
