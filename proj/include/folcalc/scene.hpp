#ifndef FOLCALC_SCENE_HPP
#define FOLCALC_SCENE_HPP

#include <map>
#include <string>
#include <vector>

#include "folcalc/field.hpp"
#include "folcalc/foliation.hpp"
#include "folcalc/jsonw.hpp"

namespace folcalc {

struct SceneError {
    int line = 0, col = 0;
    std::string message;
};

class SceneParseError : public Error {
public:
    explicit SceneParseError(std::vector<SceneError> errs)
        : Error(errs.empty() ? "scene parse failed"
                             : "scene parse failed: " + errs.front().message + " (line " +
                                   std::to_string(errs.front().line) + ")"),
          errors(std::move(errs)) {}
    std::vector<SceneError> errors;
};

struct FoliationDecl {
    std::string name;
    std::vector<PolyVec> gens;
    int line = 0;
};

struct MapDecl {
    std::string name;
    std::vector<MultiPoly> comps;
    int line = 0;
};

struct FieldDecl {
    std::string name;
    HermitianField field;
    // Raw upper-triangle entry texts keyed by (row, col), 1-based, for echo
    // and round-trip printing.
    std::vector<std::pair<std::pair<int, int>, std::string>> entry_texts;
    int line = 0;
};

struct ChartDecl {
    std::string name;
    Chart chart;
    int line = 0;
};

struct TaskDecl {
    std::string id;
    std::string op;
    std::vector<std::string> args;          // entity names, in order
    std::map<std::string, std::string> kv;  // key=value options
    int line = 0;
};

struct SceneDoc {
    int nvars = 0;
    std::vector<FoliationDecl> foliations;
    std::vector<MapDecl> maps;
    std::vector<FieldDecl> fields;
    std::vector<ChartDecl> charts;
    std::vector<TaskDecl> tasks;

    const FoliationDecl* find_foliation(const std::string& name) const;
    const MapDecl* find_map(const std::string& name) const;
    const FieldDecl* find_field(const std::string& name) const;
    const ChartDecl* find_chart(const std::string& name) const;
};

// Validated scene or the full list of located errors; no partial success.
SceneDoc parse_scene(const std::string& text);
std::string print_scene(const SceneDoc& doc);

struct Report {
    std::string id;
    std::string op;
    Json inputs;
    std::string status;  // "ok" | "budget-exceeded" | "error"
    std::string message;
    Json result;
    double elapsed_ms = 0.0;  // diagnostic only; never serialized
};

Report run_task(const SceneDoc& scene, const TaskDecl& task, const Budget& budget = default_budget());
std::vector<Report> run_all_tasks(const SceneDoc& scene, const Budget& budget = default_budget(),
                                  bool parallel = false);

// Canonical serialization: sorted keys, 17 significant digits, no timing.
// Identical inputs yield byte-identical output.
std::string emit_report(const std::vector<Report>& reports);

}  // namespace folcalc

#endif
