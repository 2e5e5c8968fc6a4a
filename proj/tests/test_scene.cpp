#include <doctest.h>

#include "folcalc/ntlab.hpp"
#include "folcalc/scene.hpp"

using namespace folcalc;

namespace {

const char* kFigureScene = R"(# twisted horizontals joined with vertical leaves
ring z1 z2 z3

foliation F {
  gen = d3
}

foliation G {
  gen = d1 + z2*d3
}

task u1 : union F G
task r1 : rank F
)";

const char* kFsScene = R"(ring z1 z2

foliation F {
  gen = d1
}

field T {
  h 1 1 = eps
  h 2 2 = 1/(1+abs2(z2))^2 + eps
  eps = 0.1 0.05 0.025
}

chart C {
  center = 0 0 0 0
  half_width = 1
  grid = 8
  k = 1
}

task nt : nt-check T C
task tv : transversality T C eps=0.1
)";

}  // namespace

TEST_CASE("minimal scene parses") {
    SceneDoc doc = parse_scene("ring z1 z2\n\nfoliation F {\n  gen = d1\n}\n");
    CHECK(doc.nvars == 2);
    REQUIRE(doc.foliations.size() == 1);
    CHECK(doc.foliations[0].gens.size() == 1);
}

TEST_CASE("scene errors are located and complete") {
    // dangling chart reference
    try {
        parse_scene("ring z1 z2\nfoliation F {\n  gen = d1\n}\ntask t : nt-check T C\n");
        FAIL("expected parse error");
    } catch (const SceneParseError& e) {
        REQUIRE(e.errors.size() >= 2);  // both T and C are undeclared
        CHECK(e.errors[0].line == 5);
    }

    // malformed generator names the offending line
    try {
        parse_scene("ring z1 z2\nfoliation F {\n  gen = z1*d3\n}\n");
        FAIL("expected parse error");
    } catch (const SceneParseError& e) {
        REQUIRE(!e.errors.empty());
        CHECK(e.errors[0].line == 3);
        CHECK(e.errors[0].message.find("malformed generator") != std::string::npos);
    }

    // duplicate names
    CHECK_THROWS_AS(
        parse_scene("ring z1\nfoliation F {\n  gen = d1\n}\nfoliation F {\n  gen = d1\n}\n"),
        SceneParseError);
    // epsilon schedules must decrease
    CHECK_THROWS_AS(parse_scene("ring z1\nfield T {\n  h 1 1 = eps\n  eps = 0.1 0.2\n}\n"),
                    SceneParseError);
    // parse failures collect instead of stopping at the first
    try {
        parse_scene("ring z1\nfoliation F {\n  gen = d2\n}\nfoliation G {\n  gen = w\n}\n");
        FAIL("expected parse error");
    } catch (const SceneParseError& e) {
        bool saw_f = false, saw_g = false;
        for (const auto& err : e.errors) {
            saw_f = saw_f || err.line == 3;
            saw_g = saw_g || err.line == 6;
        }
        CHECK(saw_f);
        CHECK(saw_g);
    }
}

TEST_CASE("scene round-trips through printing") {
    for (const char* text : {kFigureScene, kFsScene}) {
        SceneDoc doc = parse_scene(text);
        std::string printed = print_scene(doc);
        SceneDoc doc2 = parse_scene(printed);
        CHECK(print_scene(doc2) == printed);
        CHECK(doc2.nvars == doc.nvars);
        REQUIRE(doc2.foliations.size() == doc.foliations.size());
        for (size_t i = 0; i < doc.foliations.size(); ++i)
            CHECK(doc2.foliations[i].gens == doc.foliations[i].gens);
        REQUIRE(doc2.tasks.size() == doc.tasks.size());
        for (size_t i = 0; i < doc.tasks.size(); ++i) {
            CHECK(doc2.tasks[i].op == doc.tasks[i].op);
            CHECK(doc2.tasks[i].args == doc.tasks[i].args);
            CHECK(doc2.tasks[i].kv == doc.tasks[i].kv);
        }
    }
}

TEST_CASE("running the twisted-horizontal scene") {
    SceneDoc doc = parse_scene(kFigureScene);
    auto reports = run_all_tasks(doc);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].status == "ok");
    std::string json = emit_report(reports);
    CHECK(json.find("\"rank\":2") != std::string::npos);
    CHECK(json.find("d1") != std::string::npos);
    CHECK(json.find("d3") != std::string::npos);
}

TEST_CASE("reports are deterministic and parallel-stable") {
    SceneDoc doc = parse_scene(kFsScene);
    std::string a = emit_report(run_all_tasks(doc));
    std::string b = emit_report(run_all_tasks(doc));
    std::string c = emit_report(run_all_tasks(doc, default_budget(), /*parallel=*/true));
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.find(kVerdictPositive) != std::string::npos);
}

TEST_CASE("task failures are isolated and budget errors reported in-band") {
    const char* text =
        "ring z1 z2\n"
        "foliation F {\n  gen = z1*d1 + z2^2*d2\n  gen = z2*d1 + z1^2*d2\n  gen = z1*z2*d1 + d2\n}\n"
        "foliation G {\n  gen = d1\n}\n"
        "task a : closure F\n"
        "task b : rank G\n";
    SceneDoc doc = parse_scene(text);
    Budget tiny;
    tiny.max_steps = 5;
    auto reports = run_all_tasks(doc, tiny);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].status == "budget-exceeded");
    CHECK(reports[0].message.find("budget exceeded") != std::string::npos);
    // the failing task does not prevent the next one
    CHECK(reports[1].status == "ok");
}

TEST_CASE("empty task list serializes to an empty array") {
    SceneDoc doc = parse_scene("ring z1\nfoliation F {\n  gen = d1\n}\n");
    CHECK(emit_report(run_all_tasks(doc)) == "[]");
}

TEST_CASE("single rank task payload") {
    SceneDoc doc = parse_scene("ring z1 z2\nfoliation F {\n  gen = d1\n}\ntask t : rank F\n");
    auto reports = run_all_tasks(doc);
    std::string json = emit_report(reports);
    CHECK(json ==
          R"([{"id":"t","inputs":{"args":["F"],"options":{}},"message":"","op":"rank","result":{"rank":1},"status":"ok"}])");
}
