#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <cstdlib>

#include "hopfrob/builders.hpp"
#include "hopfrob/parallel.hpp"
#include "hopfrob/pipeline.hpp"

using namespace hopfrob;

TEST_CASE("parallel_for visits every index once", "[parallel]") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(1000, [&](int i) { hits[i]++; });
    for (const auto& h : hits) CHECK(h == 1);
}

TEST_CASE("first_failure is independent of scheduling", "[parallel][property]") {
    auto probe = [](int i) -> std::optional<std::string> {
        if (i % 97 == 13 || i % 89 == 7) return std::to_string(i);
        return std::nullopt;
    };
    auto s = first_failure<std::string>(5000, probe, Exec::Serial);
    for (int rep = 0; rep < 5; ++rep) {
        auto p = first_failure<std::string>(5000, probe, Exec::Parallel);
        REQUIRE(p);
        CHECK(*p == *s);
    }
    CHECK(s->first == 7);
    CHECK_FALSE(first_failure<int>(100, [](int) { return std::optional<int>(); }));
}

TEST_CASE("serial and parallel axiom checks agree", "[parallel]") {
    for (const auto& h : {kac_paljutkin(), taft(4), drinfeld_double(klein_four()).H}) {
        INFO(h->name);
        CHECK(verify_hopf(*h, Exec::Serial, true).text() == verify_hopf(*h, Exec::Parallel, true).text());
    }
    // A corrupted algebra reports the same first witness either way.
    FinHopf bad = *taft(3);
    bad.mult.set_fiber(4, {});
    Report s = verify_hopf(bad, Exec::Serial, true), p = verify_hopf(bad, Exec::Parallel, true);
    CHECK_FALSE(s.all_pass());
    CHECK(s.text() == p.text());
}

TEST_CASE("thread count follows the environment", "[parallel]") {
    // Read once per process; ctest also runs this suite with HOPFROB_THREADS=3.
    const char* env = std::getenv("HOPFROB_THREADS");
    if (env && std::atoi(env) > 0)
        CHECK(thread_count() == std::atoi(env));
    else
        CHECK(thread_count() >= 1);
}

TEST_CASE("reports are identical across runs", "[parallel]") {
    Document doc = load_input("builtin:h8");
    std::string a = render_json(run_analyze(doc.inclusions[0]));
    for (int i = 0; i < 3; ++i) CHECK(render_json(run_analyze(doc.inclusions[0])) == a);
    std::string f = render_text(run_frob_objects(doc.inclusions[0], "all"));
    CHECK(render_text(run_frob_objects(doc.inclusions[0], "all")) == f);
}
