#include "folcalc/scene.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <future>
#include <set>
#include <sstream>

#include "folcalc/ntlab.hpp"

namespace folcalc {

const FoliationDecl* SceneDoc::find_foliation(const std::string& name) const {
    for (const auto& f : foliations)
        if (f.name == name) return &f;
    return nullptr;
}
const MapDecl* SceneDoc::find_map(const std::string& name) const {
    for (const auto& m : maps)
        if (m.name == name) return &m;
    return nullptr;
}
const FieldDecl* SceneDoc::find_field(const std::string& name) const {
    for (const auto& f : fields)
        if (f.name == name) return &f;
    return nullptr;
}
const ChartDecl* SceneDoc::find_chart(const std::string& name) const {
    for (const auto& c : charts)
        if (c.name == name) return &c;
    return nullptr;
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Line {
    int number = 0;
    std::string text;  // comment-stripped, trimmed
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r");
        lines.push_back({no, raw.substr(b, e - b + 1)});
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

struct SceneParser {
    std::vector<SceneError> errors;
    SceneDoc doc;

    void err(int line, const std::string& msg) { errors.push_back({line, 1, msg}); }

    bool parse_double(const std::string& s, double& out) {
        try {
            size_t used = 0;
            out = std::stod(s, &used);
            return used == s.size();
        } catch (...) {
            return false;
        }
    }
    bool parse_int(const std::string& s, int& out) {
        try {
            size_t used = 0;
            out = std::stoi(s, &used);
            return used == s.size();
        } catch (...) {
            return false;
        }
    }

    void run(const std::string& text) {
        auto lines = split_lines(text);
        size_t i = 0;
        bool ring_seen = false;
        while (i < lines.size()) {
            const Line& ln = lines[i];
            auto toks = split_ws(ln.text);
            const std::string& head = toks[0];
            if (head == "ring") {
                if (ring_seen) err(ln.number, "duplicate ring declaration");
                ring_seen = true;
                if (toks.size() < 2) {
                    err(ln.number, "ring needs at least one variable");
                } else {
                    doc.nvars = static_cast<int>(toks.size()) - 1;
                    for (int v = 0; v < doc.nvars; ++v) {
                        std::string expect = "z" + std::to_string(v + 1);
                        if (toks[v + 1] != expect)
                            err(ln.number, "ring variables must be z1..zn in order; got '" +
                                               toks[v + 1] + "'");
                    }
                }
                ++i;
            } else if (head == "foliation" || head == "map" || head == "field" ||
                       head == "chart") {
                if (!ring_seen) {
                    err(ln.number, "declaration before ring");
                    doc.nvars = std::max(doc.nvars, 1);
                }
                if (toks.size() != 3 || toks[2] != "{") {
                    err(ln.number, head + " wants: " + head + " <name> {");
                    ++i;
                    continue;
                }
                if (!valid_name(toks[1])) {
                    err(ln.number, "invalid name '" + toks[1] + "'");
                }
                std::vector<Line> body;
                size_t j = i + 1;
                bool closed = false;
                for (; j < lines.size(); ++j) {
                    if (lines[j].text == "}") {
                        closed = true;
                        break;
                    }
                    body.push_back(lines[j]);
                }
                if (!closed) {
                    err(ln.number, "unterminated '" + head + " " + toks[1] + "' block");
                    i = j;
                    continue;
                }
                if (head == "foliation")
                    parse_foliation(toks[1], ln.number, body);
                else if (head == "map")
                    parse_map(toks[1], ln.number, body);
                else if (head == "field")
                    parse_field(toks[1], ln.number, body);
                else
                    parse_chart(toks[1], ln.number, body);
                i = j + 1;
            } else if (head == "task") {
                parse_task(ln);
                ++i;
            } else {
                err(ln.number, "unknown directive '" + head + "'");
                ++i;
            }
        }
        if (!ring_seen) err(1, "missing ring declaration");
        validate();
    }

    static bool key_value(const std::string& text, std::string& key, std::string& value) {
        size_t eq = text.find('=');
        if (eq == std::string::npos) return false;
        size_t kb = text.find_first_not_of(" \t");
        size_t ke = text.find_last_not_of(" \t", eq - 1);
        if (kb == std::string::npos || ke == std::string::npos || kb > ke) return false;
        key = text.substr(kb, ke - kb + 1);
        size_t vb = text.find_first_not_of(" \t", eq + 1);
        if (vb == std::string::npos) {
            value.clear();
        } else {
            size_t ve = text.find_last_not_of(" \t");
            value = text.substr(vb, ve - vb + 1);
        }
        return true;
    }

    void parse_foliation(const std::string& name, int line, const std::vector<Line>& body) {
        FoliationDecl d;
        d.name = name;
        d.line = line;
        for (const Line& ln : body) {
            std::string key, value;
            if (!key_value(ln.text, key, value) || key != "gen") {
                err(ln.number, "foliation body wants: gen = <vector field>");
                continue;
            }
            try {
                d.gens.push_back(parse_vector_field(value, doc.nvars).v);
            } catch (const ParseError& e) {
                err(ln.number, "malformed generator: " + e.message);
            }
        }
        if (d.gens.empty()) err(line, "foliation '" + name + "' declares no generators");
        doc.foliations.push_back(std::move(d));
    }

    void parse_map(const std::string& name, int line, const std::vector<Line>& body) {
        MapDecl d;
        d.name = name;
        d.line = line;
        for (const Line& ln : body) {
            std::string key, value;
            if (!key_value(ln.text, key, value) || key != "comp") {
                err(ln.number, "map body wants: comp = <polynomial>");
                continue;
            }
            try {
                d.comps.push_back(parse_poly(value, doc.nvars));
            } catch (const ParseError& e) {
                err(ln.number, "malformed component: " + e.message);
            }
        }
        if (d.comps.empty()) err(line, "map '" + name + "' declares no components");
        doc.maps.push_back(std::move(d));
    }

    void parse_field(const std::string& name, int line, const std::vector<Line>& body) {
        FieldDecl d;
        d.name = name;
        d.line = line;
        d.field = HermitianField::make(doc.nvars);
        for (const Line& ln : body) {
            std::string key, value;
            if (!key_value(ln.text, key, value)) {
                err(ln.number, "field body wants: h <a> <b> = <expr> or eps = <list>");
                continue;
            }
            auto ktoks = split_ws(key);
            if (ktoks.size() == 3 && ktoks[0] == "h") {
                int a = 0, b = 0;
                if (!parse_int(ktoks[1], a) || !parse_int(ktoks[2], b) || a < 1 || b < 1 ||
                    a > doc.nvars || b > doc.nvars) {
                    err(ln.number, "field entry indices out of range");
                    continue;
                }
                if (a > b) {
                    err(ln.number, "declare only the upper triangle (row <= column)");
                    continue;
                }
                try {
                    d.field.set_entry(a - 1, b - 1, parse_expression(value, doc.nvars));
                    d.entry_texts.push_back({{a, b}, value});
                } catch (const ParseError& e) {
                    err(ln.number, "malformed field entry: " + e.message);
                }
            } else if (ktoks.size() == 1 && ktoks[0] == "eps") {
                auto vals = split_ws(value);
                if (vals.empty()) err(ln.number, "eps wants a nonempty list");
                for (const auto& v : vals) {
                    double x = 0;
                    if (!parse_double(v, x)) {
                        err(ln.number, "bad epsilon '" + v + "'");
                        break;
                    }
                    d.field.epsilons.push_back(x);
                }
            } else {
                err(ln.number, "unknown field key '" + key + "'");
            }
        }
        for (size_t t = 0; t < d.field.epsilons.size(); ++t) {
            if (d.field.epsilons[t] <= 0)
                err(line, "epsilon schedule must be positive");
            if (t > 0 && d.field.epsilons[t] >= d.field.epsilons[t - 1])
                err(line, "epsilon schedule must be strictly decreasing");
        }
        if (d.field.epsilons.empty()) err(line, "field '" + name + "' has no epsilon schedule");
        doc.fields.push_back(std::move(d));
    }

    void parse_chart(const std::string& name, int line, const std::vector<Line>& body) {
        ChartDecl d;
        d.name = name;
        d.line = line;
        d.chart.n = doc.nvars;
        bool have_center = false;
        for (const Line& ln : body) {
            std::string key, value;
            if (!key_value(ln.text, key, value)) {
                err(ln.number, "chart body wants key = value lines");
                continue;
            }
            if (key == "center") {
                d.chart.center.clear();
                for (const auto& v : split_ws(value)) {
                    double x = 0;
                    if (!parse_double(v, x)) {
                        err(ln.number, "bad center coordinate '" + v + "'");
                        break;
                    }
                    d.chart.center.push_back(x);
                }
                have_center = true;
            } else if (key == "half_width") {
                if (!parse_double(value, d.chart.half_width))
                    err(ln.number, "bad half_width '" + value + "'");
            } else if (key == "grid") {
                if (!parse_int(value, d.chart.grid)) err(ln.number, "bad grid '" + value + "'");
            } else if (key == "k") {
                if (!parse_int(value, d.chart.k)) err(ln.number, "bad k '" + value + "'");
            } else {
                err(ln.number, "unknown chart key '" + key + "'");
            }
        }
        if (!have_center) d.chart.center.assign(2 * doc.nvars, 0.0);
        try {
            d.chart.validate();
        } catch (const Error& e) {
            err(line, e.what());
        }
        doc.charts.push_back(std::move(d));
    }

    void parse_task(const Line& ln) {
        auto toks = split_ws(ln.text);
        // task <id> : <op> args...
        if (toks.size() < 4 || toks[2] != ":") {
            err(ln.number, "task wants: task <id> : <op> <args>");
            return;
        }
        TaskDecl t;
        t.id = toks[1];
        t.op = toks[3];
        t.line = ln.number;
        if (!valid_name(t.id)) err(ln.number, "invalid task id '" + t.id + "'");
        for (size_t j = 4; j < toks.size(); ++j) {
            size_t eq = toks[j].find('=');
            if (eq == std::string::npos) {
                t.args.push_back(toks[j]);
            } else {
                t.kv[toks[j].substr(0, eq)] = toks[j].substr(eq + 1);
            }
        }
        doc.tasks.push_back(std::move(t));
    }

    void validate() {
        std::set<std::string> names;
        auto check_name = [&](const std::string& n, int line) {
            if (!names.insert(n).second) err(line, "duplicate name '" + n + "'");
        };
        for (const auto& f : doc.foliations) check_name(f.name, f.line);
        for (const auto& m : doc.maps) check_name(m.name, m.line);
        for (const auto& f : doc.fields) check_name(f.name, f.line);
        for (const auto& c : doc.charts) check_name(c.name, c.line);
        std::set<std::string> ids;
        for (const auto& t : doc.tasks)
            if (!ids.insert(t.id).second) err(t.line, "duplicate task id '" + t.id + "'");

        for (const auto& t : doc.tasks) validate_task(t);
    }

    void need_args(const TaskDecl& t, size_t n) {
        if (t.args.size() != n)
            err(t.line, "task '" + t.id + "': op '" + t.op + "' wants " + std::to_string(n) +
                            " name argument(s)");
    }
    void need_foliation(const TaskDecl& t, const std::string& name) {
        if (!doc.find_foliation(name))
            err(t.line, "task '" + t.id + "' references undeclared foliation '" + name + "'");
    }
    void need_kv(const TaskDecl& t, const char* key) {
        if (!t.kv.count(key))
            err(t.line, "task '" + t.id + "': op '" + t.op + "' wants " + key + "=<value>");
    }

    void validate_task(const TaskDecl& t) {
        static const std::set<std::string> fol_ops = {"rank", "singular-locus", "saturate",
                                                      "involutive", "closure"};
        static const std::set<std::string> two_fol_ops = {"union", "intersection"};
        static const std::set<std::string> numeric_ops = {"nt-check", "transversality",
                                                          "pullback-check", "cs-audit"};
        if (fol_ops.count(t.op)) {
            need_args(t, 1);
            if (t.args.size() == 1) need_foliation(t, t.args[0]);
        } else if (two_fol_ops.count(t.op)) {
            need_args(t, 2);
            for (const auto& a : t.args) need_foliation(t, a);
        } else if (t.op == "induced") {
            need_args(t, 1);
            if (t.args.size() == 1 && !doc.find_map(t.args[0]))
                err(t.line, "task '" + t.id + "' references undeclared map '" + t.args[0] + "'");
        } else if (t.op == "test-form-basis") {
            need_kv(t, "n");
            need_kv(t, "k");
            need_kv(t, "p");
        } else if (numeric_ops.count(t.op)) {
            need_args(t, 2);
            if (t.args.size() == 2) {
                if (!doc.find_field(t.args[0]))
                    err(t.line,
                        "task '" + t.id + "' references undeclared field '" + t.args[0] + "'");
                if (!doc.find_chart(t.args[1]))
                    err(t.line,
                        "task '" + t.id + "' references undeclared chart '" + t.args[1] + "'");
            }
            if (t.op == "transversality" || t.op == "pullback-check" || t.op == "cs-audit")
                need_kv(t, "eps");
            if (t.op == "cs-audit") need_kv(t, "p");
        } else {
            err(t.line, "task '" + t.id + "': unknown op '" + t.op + "'");
        }
    }
};

}  // namespace

SceneDoc parse_scene(const std::string& text) {
    SceneParser p;
    p.run(text);
    if (!p.errors.empty()) throw SceneParseError(std::move(p.errors));
    return std::move(p.doc);
}

std::string print_scene(const SceneDoc& doc) {
    std::string out = "ring";
    for (int v = 0; v < doc.nvars; ++v) out += " z" + std::to_string(v + 1);
    out += "\n";
    for (const auto& f : doc.foliations) {
        out += "\nfoliation " + f.name + " {\n";
        for (const auto& g : f.gens) out += "  gen = " + print_vector_field(g) + "\n";
        out += "}\n";
    }
    for (const auto& m : doc.maps) {
        out += "\nmap " + m.name + " {\n";
        for (const auto& c : m.comps) out += "  comp = " + print_poly(c) + "\n";
        out += "}\n";
    }
    for (const auto& f : doc.fields) {
        out += "\nfield " + f.name + " {\n";
        for (const auto& [ab, text] : f.entry_texts)
            out += "  h " + std::to_string(ab.first) + " " + std::to_string(ab.second) + " = " +
                   text + "\n";
        out += "  eps =";
        char buf[64];
        for (double e : f.field.epsilons) {
            std::snprintf(buf, sizeof buf, "%.17g", e);
            out += std::string(" ") + buf;
        }
        out += "\n}\n";
    }
    for (const auto& c : doc.charts) {
        char buf[64];
        out += "\nchart " + c.name + " {\n  center =";
        for (double x : c.chart.center) {
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out += std::string(" ") + buf;
        }
        out += "\n";
        std::snprintf(buf, sizeof buf, "%.17g", c.chart.half_width);
        out += "  half_width = " + std::string(buf) + "\n";
        out += "  grid = " + std::to_string(c.chart.grid) + "\n";
        out += "  k = " + std::to_string(c.chart.k) + "\n}\n";
    }
    for (const auto& t : doc.tasks) {
        out += "\ntask " + t.id + " : " + t.op;
        for (const auto& a : t.args) out += " " + a;
        for (const auto& [k, v] : t.kv) out += " " + k + "=" + v;
    }
    if (!doc.tasks.empty()) out += "\n";
    return out;
}

// ---- task execution ----------------------------------------------------------

namespace {

Json module_generators_json(const PolyModule& m, const Budget& budget) {
    PolyModule g = groebner_module(m, budget);
    Json arr = Json::array();
    for (const auto& v : *g.gb) arr.push_back(print_vector_field(v));
    return arr;
}

Json ideal_json(PolyIdeal ideal, const Budget& budget) {
    Json arr = Json::array();
    for (const auto& p : ideal_basis(ideal, budget)) arr.push_back(print_poly(p));
    return arr;
}

Json foliation_json(const Foliation& f, const Budget& budget) {
    Json o = Json::object();
    o["generators"] = module_generators_json(f.module, budget);
    o["rank"] = f.rank;
    o["singular_ideal"] = ideal_json(f.sing_ideal, budget);
    o["empty"] = f.empty();
    return o;
}

Json pair_json(const IndexPair& pr) {
    Json o = Json::object();
    Json i = Json::array(), j = Json::array();
    for (int v : pr.I) i.push_back(v);
    for (int v : pr.J) j.push_back(v);
    o["I"] = std::move(i);
    o["J"] = std::move(j);
    return o;
}

Json report_json(const NTReport& rep) {
    Json o = Json::object();
    o["n"] = rep.n;
    o["k"] = rep.k;
    Json eps = Json::array();
    for (double e : rep.epsilons) eps.push_back(e);
    o["epsilons"] = std::move(eps);
    o["r_max"] = rep.opts.r_max;
    o["floor"] = rep.opts.floor;
    Json series = Json::array();
    for (const auto& s : rep.series) {
        Json e = pair_json(s.pair);
        e["p"] = s.p;
        Json vals = Json::array();
        for (double v : s.values) vals.push_back(v);
        e["values"] = std::move(vals);
        Json ratios = Json::array();
        for (double r : s.ratios) ratios.push_back(std::isnan(r) ? Json(nullptr) : Json(r));
        e["ratios"] = std::move(ratios);
        e["decays"] = s.decays;
        series.push_back(std::move(e));
    }
    o["series"] = std::move(series);
    Json psd = Json::array();
    for (long long v : rep.psd_violations) psd.push_back(v);
    o["psd_violations"] = std::move(psd);
    o["verdict"] = rep.verdict_text;
    o["note"] = rep.note;
    return o;
}

PolyModule seed_module(const SceneDoc& scene, const std::string& name) {
    const FoliationDecl* d = scene.find_foliation(name);
    if (!d) throw Error("undeclared foliation '" + name + "'");
    return PolyModule::make(scene.nvars, scene.nvars, d->gens);
}

Foliation materialize(const SceneDoc& scene, const std::string& name, const Budget& budget) {
    return involutive_closure(seed_module(scene, name), budget);
}

double kv_double(const TaskDecl& t, const char* key, std::optional<double> fallback = {}) {
    auto it = t.kv.find(key);
    if (it == t.kv.end()) {
        if (fallback) return *fallback;
        throw Error(std::string("missing option ") + key + "=<value>");
    }
    return std::stod(it->second);
}

int kv_int(const TaskDecl& t, const char* key, std::optional<int> fallback = {}) {
    auto it = t.kv.find(key);
    if (it == t.kv.end()) {
        if (fallback) return *fallback;
        throw Error(std::string("missing option ") + key + "=<value>");
    }
    return std::stoi(it->second);
}

Json dispatch(const SceneDoc& scene, const TaskDecl& t, const Budget& budget) {
    Json r = Json::object();
    if (t.op == "rank") {
        r["rank"] = materialize(scene, t.args[0], budget).rank;
    } else if (t.op == "singular-locus") {
        r["generators"] = ideal_json(materialize(scene, t.args[0], budget).sing_ideal, budget);
    } else if (t.op == "saturate") {
        PolyModule sat = saturate(seed_module(scene, t.args[0]), budget);
        r["generators"] = module_generators_json(sat, budget);
    } else if (t.op == "involutive") {
        r["involutive"] = is_involutive(seed_module(scene, t.args[0]), budget);
    } else if (t.op == "closure") {
        ClosureStats stats;
        Foliation f = involutive_closure(seed_module(scene, t.args[0]), budget, &stats);
        r = foliation_json(f, budget);
        r["iterations"] = stats.iterations;
    } else if (t.op == "union") {
        ClosureStats stats;
        Foliation f = materialize(scene, t.args[0], budget);
        Foliation g = materialize(scene, t.args[1], budget);
        r = foliation_json(foliation_union(f, g, budget, &stats), budget);
        r["iterations"] = stats.iterations;
    } else if (t.op == "intersection") {
        Foliation f = materialize(scene, t.args[0], budget);
        Foliation g = materialize(scene, t.args[1], budget);
        IntersectionResult ir = intersection_foliation(f, g, budget);
        r["generators"] = module_generators_json(ir.module, budget);
        r["saturated"] = ir.saturated;
    } else if (t.op == "induced") {
        const MapDecl* m = scene.find_map(t.args[0]);
        RationalMap f{scene.nvars, m->comps};
        r = foliation_json(induced_foliation(f, budget), budget);
    } else if (t.op == "test-form-basis") {
        int n = kv_int(t, "n"), k = kv_int(t, "k"), p = kv_int(t, "p");
        Json pairs = Json::array();
        for (const auto& pr : constant_test_form_basis(n, k, p)) pairs.push_back(pair_json(pr));
        r["pairs"] = std::move(pairs);
    } else if (t.op == "nt-check" || t.op == "transversality" || t.op == "pullback-check" ||
               t.op == "cs-audit") {
        const FieldDecl* fd = scene.find_field(t.args[0]);
        const ChartDecl* cd = scene.find_chart(t.args[1]);
        int k = kv_int(t, "k", cd->chart.k);
        NTOptions opts;
        opts.r_max = kv_double(t, "r_max", opts.r_max);
        opts.floor = kv_double(t, "floor", opts.floor);
        if (t.op == "nt-check") {
            r = report_json(nt_report(fd->field, cd->chart, scene.nvars, k, opts));
        } else if (t.op == "transversality") {
            double eps = kv_double(t, "eps");
            auto delta = transversality_check(fd->field, cd->chart, k, eps, opts);
            r["delta"] = delta ? Json(*delta) : Json(nullptr);
        } else if (t.op == "pullback-check") {
            double eps = kv_double(t, "eps");
            double tol = kv_double(t, "tol", 1e-9);
            r["pullback"] = pullback_check(fd->field, cd->chart, k, eps, tol, opts);
        } else {
            double eps = kv_double(t, "eps");
            int p = kv_int(t, "p");
            // Audit every grid sample of the evaluated field.
            const Chart& chart = cd->chart;
            chart.validate();
            long long cells = chart.cell_count();
            bool all = true;
            std::vector<int> multi(2 * chart.n);
            std::vector<std::complex<double>> z(chart.n);
            CMatrix h;
            double step = 2.0 * chart.half_width / chart.grid;
            for (long long idx = 0; idx < cells && all; ++idx) {
                long long rem = idx;
                for (int a = 2 * chart.n - 1; a >= 0; --a) {
                    multi[a] = static_cast<int>(rem % chart.grid);
                    rem /= chart.grid;
                }
                for (int j = 0; j < chart.n; ++j)
                    z[j] = {chart.center[2 * j] - chart.half_width + (multi[2 * j] + 0.5) * step,
                            chart.center[2 * j + 1] - chart.half_width +
                                (multi[2 * j + 1] + 0.5) * step};
                fd->field.eval(z, eps, h);
                for (int a = 0; a < chart.n; ++a) h[a][a] += eps;  // audit H + eps Id
                all = all && cauchy_schwarz_audit(h, p);
            }
            r["passed"] = all;
            r["samples"] = cells;
        }
    } else {
        throw Error("unknown op '" + t.op + "'");
    }
    return r;
}

}  // namespace

Report run_task(const SceneDoc& scene, const TaskDecl& t, const Budget& budget) {
    Report rep;
    rep.id = t.id;
    rep.op = t.op;
    Json inputs = Json::object();
    Json args = Json::array();
    for (const auto& a : t.args) args.push_back(a);
    inputs["args"] = std::move(args);
    Json kv = Json::object();
    for (const auto& [k, v] : t.kv) kv[k] = v;
    inputs["options"] = std::move(kv);
    rep.inputs = std::move(inputs);
    auto t0 = std::chrono::steady_clock::now();
    try {
        rep.result = dispatch(scene, t, budget);
        rep.status = "ok";
    } catch (const BudgetExceeded& e) {
        rep.status = "budget-exceeded";
        rep.message = e.what();
        rep.result = Json(nullptr);
    } catch (const std::exception& e) {
        rep.status = "error";
        rep.message = e.what();
        rep.result = Json(nullptr);
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<Report> run_all_tasks(const SceneDoc& scene, const Budget& budget, bool parallel) {
    std::vector<Report> reports(scene.tasks.size());
    if (parallel) {
        std::vector<std::future<Report>> futs;
        futs.reserve(scene.tasks.size());
        for (const auto& t : scene.tasks)
            futs.push_back(std::async(std::launch::async, [&scene, &t, &budget] {
                return run_task(scene, t, budget);
            }));
        for (size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < scene.tasks.size(); ++i)
            reports[i] = run_task(scene, scene.tasks[i], budget);
    }
    return reports;
}

std::string emit_report(const std::vector<Report>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) {
        Json o = Json::object();
        o["id"] = r.id;
        o["op"] = r.op;
        o["inputs"] = r.inputs;
        o["status"] = r.status;
        o["message"] = r.message;
        o["result"] = r.result;
        arr.push_back(std::move(o));
    }
    return arr.dump();
}

}  // namespace folcalc
