#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "toric/experiments.hpp"

using namespace toric;

namespace {

// Sets TORIC_BUDGET_SECS for one scope and restores the outer state after.
class BudgetGuard {
public:
    explicit BudgetGuard(const char* value) {
        const char* old = std::getenv("TORIC_BUDGET_SECS");
        if (old != nullptr) saved_ = old;
        had_ = old != nullptr;
        setenv("TORIC_BUDGET_SECS", value, 1);
    }
    ~BudgetGuard() {
        if (had_)
            setenv("TORIC_BUDGET_SECS", saved_.c_str(), 1);
        else
            unsetenv("TORIC_BUDGET_SECS");
    }

private:
    std::string saved_;
    bool had_ = false;
};

bool all_pass(const ExperimentVerdict& v) {
    return !v.assertions.empty() &&
           std::all_of(v.assertions.begin(), v.assertions.end(),
                       [](const Assertion& a) { return a.status == "pass"; });
}

}  // namespace

TEST_CASE("the experiment registry") {
    const auto& ids = experiment_ids();
    CHECK(ids == std::vector<std::string>{"ladder-sizes", "nonpointed-size",
                                          "triangle-tree-markov-gap", "triangle-tree-euler-degree",
                                          "subdivision-robust", "subdivision-degrees",
                                          "complete-graph-degrees", "nonpointed-degree"});
    try {
        reproduce("tm1");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find("unknown experiment \"tm1\"") != std::string::npos);
        CHECK(what.find("ladder-sizes") != std::string::npos);
        CHECK(what.find("nonpointed-degree") != std::string::npos);
    }
}

TEST_CASE("every experiment passes end to end") {
    const std::vector<ExperimentVerdict> verdicts = reproduce_all();
    REQUIRE(verdicts.size() == experiment_ids().size());
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        CAPTURE(verdicts[i].id);
        CHECK(verdicts[i].id == experiment_ids()[i]);
        CHECK(all_pass(verdicts[i]));
    }
}

TEST_CASE("expected values come with their formula provenance") {
    const ExperimentVerdict verdict = reproduce("triangle-tree-euler-degree");
    CHECK(verdict.passed());
    for (const Assertion& a : verdict.assertions) {
        CHECK_FALSE(a.provenance.empty());
        CHECK_FALSE(a.expected.empty());
    }
    const auto by_label = [&](const std::string& needle) {
        for (const Assertion& a : verdict.assertions)
            if (a.label == needle) return a;
        REQUIRE(false);
        return verdict.assertions.front();
    };
    CHECK(by_label("r=1 euler walk degree").expected == "6");
    CHECK(by_label("r=1 euler walk degree").provenance == "expected_euler_degree(3,r,1)");
    CHECK(by_label("r=2 euler walk degree").expected == "15");
    CHECK(by_label("r=2 max circuit degree").expected == "9");
}

TEST_CASE("a zero budget skips every instance") {
    const BudgetGuard guard("0");
    const ExperimentVerdict verdict = reproduce("ladder-sizes");
    CHECK(verdict.passed());  // skips do not fail
    REQUIRE_FALSE(verdict.assertions.empty());
    for (const Assertion& a : verdict.assertions) {
        CHECK(a.status == "skipped (budget)");
        CHECK(a.computed == "-");
        CHECK_FALSE(a.expected.empty());  // the closed form still shows
    }
    const std::string text = emit({verdict}, Format::Text);
    CHECK(text.find("[SKIP]") != std::string::npos);
    CHECK(text.find("skipped (budget)") != std::string::npos);
}

TEST_CASE("a malformed budget is rejected") {
    const BudgetGuard guard("soon");
    CHECK_THROWS_WITH(reproduce("nonpointed-size"),
                      "TORIC_BUDGET_SECS is not a nonnegative number");
}

TEST_CASE("verdict documents") {
    const std::vector<ExperimentVerdict> verdicts = {reproduce("nonpointed-size"),
                                                     reproduce("ladder-sizes")};

    SUBCASE("json") {
        const auto doc = nlohmann::json::parse(emit(verdicts, Format::Json));
        CHECK(doc["schema_version"] == 1);
        CHECK(doc["passed"] == true);
        REQUIRE(doc["experiments"].size() == 2);
        CHECK(doc["experiments"][0]["id"] == "nonpointed-size");
        CHECK(doc["experiments"][0]["passed"] == true);
        const auto& assertion = doc["experiments"][0]["assertions"][0];
        CHECK(assertion["label"] == "s=2 markov basis size");
        CHECK(assertion["expected"] == "2");
        CHECK(assertion["computed"] == "2");
        CHECK(assertion["status"] == "pass");
    }
    SUBCASE("csv quotes fields containing commas") {
        const std::string text = emit(verdicts, Format::Csv);
        CHECK(text.rfind("experiment,assertion,provenance,expected,computed,status\n", 0) == 0);
        CHECK(text.find("nonpointed-size,s=2 markov basis size,markov_from_coprimes keeps one "
                        "exponent per factor,2,2,pass\n") != std::string::npos);
        // this provenance contains a comma, so the field arrives quoted
        CHECK(text.find("\"the cap equals the top Graver degree, so nothing above it exists to "
                        "lose\"") != std::string::npos);
    }
    SUBCASE("text summary") {
        const std::string text = emit(verdicts, Format::Text);
        CHECK(text.find("nonpointed-size:") != std::string::npos);
        CHECK(text.find("[PASS] n=4 graver size: expected 264, got 264") != std::string::npos);
        CHECK(text.find("summary: 2/2 experiments passed") != std::string::npos);
    }
    SUBCASE("documents are byte-stable") {
        const std::vector<ExperimentVerdict> again = {reproduce("nonpointed-size"),
                                                      reproduce("ladder-sizes")};
        for (const Format format : {Format::Json, Format::Csv, Format::Text})
            CHECK(emit(verdicts, format) == emit(again, format));
    }
}
