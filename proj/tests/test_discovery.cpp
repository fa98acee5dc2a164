#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <thread>

#include "fogllm/discovery/select.hpp"
#include "fogllm/discovery/simlink.hpp"
#include "support/helpers.hpp"

using namespace fogllm;
using namespace fogllm::discovery;

namespace {

ServiceAd ad_named(const std::string& name, std::uint16_t port = 60300) {
    ServiceAd ad;
    ad.instance_name = name;
    ad.host = "localhost";
    ad.addresses = {"127.0.0.1"};
    ad.port = port;
    ad.txt = {{"api", "v1"}, {"models", "llama2:7b"}, {"tier", "fog"}};
    return ad;
}

}  // namespace

TEST_CASE("every advertised instance appears exactly once in a browse") {
    SimulatedLink link;
    auto r1 = link.advertise(ad_named("alpha"));
    auto r2 = link.advertise(ad_named("beta"));
    auto r3 = link.advertise(ad_named("gamma"));

    auto records = browse_and_resolve(link, std::chrono::milliseconds(10));
    REQUIRE(records.size() == 3);
    CHECK(records[0].instance_name == "alpha");
    CHECK(records[1].instance_name == "beta");
    CHECK(records[2].instance_name == "gamma");
    for (const auto& r : records) {
        CHECK(!r.addresses.empty());
        CHECK(r.txt.at("api") == "v1");
        CHECK(r.models() == std::vector<std::string>{"llama2:7b"});
    }
}

TEST_CASE("name collisions rename deterministically with ' (2)'") {
    SimulatedLink link;
    auto r1 = link.advertise(ad_named("node"));
    auto r2 = link.advertise(ad_named("node"));
    auto r3 = link.advertise(ad_named("node"));
    CHECK(r1.claimed_name() == "node");
    CHECK(r2.claimed_name() == "node (2)");
    CHECK(r3.claimed_name() == "node (3)");

    auto records = browse_and_resolve(link, std::chrono::milliseconds(5));
    REQUIRE(records.size() == 3);
}

TEST_CASE("a deregistered node disappears from subsequent browses") {
    SimulatedLink link;
    auto keep = link.advertise(ad_named("keep"));
    {
        auto gone = link.advertise(ad_named("gone"));
        CHECK(browse_and_resolve(link, std::chrono::milliseconds(5)).size() == 2);
    }  // registration handle dropped -> withdrawn
    auto records = browse_and_resolve(link, std::chrono::milliseconds(5));
    REQUIRE(records.size() == 1);
    CHECK(records[0].instance_name == "keep");
}

TEST_CASE("deregistration during the browse window is reflected in the result") {
    SimulatedLink link;
    auto keep = link.advertise(ad_named("keep"));
    auto going = std::make_unique<Registration>(link.advertise(ad_named("going")));

    std::thread withdrawer([&] {
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
        going.reset();
    });
    auto records = browse_and_resolve(link, std::chrono::milliseconds(40));
    withdrawer.join();
    REQUIRE(records.size() == 1);
    CHECK(records[0].instance_name == "keep");
}

TEST_CASE("measure_proximity takes the median of three probes") {
    SimulatedLink link;
    auto reg = link.advertise(ad_named("steady"));
    link.set_probe_profile("steady", {5, 5, 5});
    auto records = browse_and_resolve(link, std::chrono::milliseconds(5));
    auto measured = measure_proximity(records[0], link);
    CHECK(*measured.proximity_rtt_ms == doctest::Approx(5));

    auto reg2 = link.advertise(ad_named("jittery"));
    link.set_probe_profile("jittery", {4, 9, 5});
    records = browse_and_resolve(link, std::chrono::milliseconds(5));
    auto jittery = std::find_if(records.begin(), records.end(), [](const auto& r) {
        return r.instance_name == "jittery";
    });
    REQUIRE(jittery != records.end());
    CHECK(*measure_proximity(*jittery, link).proximity_rtt_ms == doctest::Approx(5));
}

TEST_CASE("unreachable nodes raise and are excluded by probe_all") {
    SimulatedLink link;
    auto ok = link.advertise(ad_named("ok"));
    auto dead = link.advertise(ad_named("dead"));
    link.set_probe_profile("ok", {3});
    link.set_probe_profile("dead", {});  // unreachable

    auto records = browse_and_resolve(link, std::chrono::milliseconds(5));
    auto dead_record = std::find_if(records.begin(), records.end(), [](const auto& r) {
        return r.instance_name == "dead";
    });
    REQUIRE(dead_record != records.end());
    CHECK_THROWS_AS(measure_proximity(*dead_record, link), Unreachable);

    auto measured = probe_all(records, link);
    REQUIRE(measured.size() == 1);
    CHECK(measured[0].instance_name == "ok");
}

TEST_CASE("select_node picks the minimum rtt with lexicographic tie-break") {
    auto record = [](const std::string& name, double rtt) {
        FogNodeRecord r;
        r.instance_name = name;
        r.addresses = {"127.0.0.1"};
        r.port = 1;
        r.proximity_rtt_ms = rtt;
        return r;
    };

    CHECK(select_node({record("A", 12), record("B", 5), record("C", 30)}).instance_name == "B");
    CHECK(select_node({record("solo", 9)}).instance_name == "solo");
    CHECK(select_node({record("B", 5), record("A", 5)}).instance_name == "A");
    CHECK_THROWS_AS(select_node({}), NoNodesDiscovered);

    FogNodeRecord unmeasured;
    unmeasured.instance_name = "x";
    CHECK_THROWS_AS(select_node({unmeasured}), NoNodesDiscovered);
}

TEST_CASE("selection oracle: 500 random topologies, argmin + permutation invariance") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<std::size_t> count_dist(1, 8);
    std::uniform_int_distribution<int> rtt_dist(1, 20);  // small range forces ties

    for (int trial = 0; trial < 500; ++trial) {
        std::size_t count = count_dist(rng);
        std::vector<FogNodeRecord> records;
        for (std::size_t i = 0; i < count; ++i) {
            FogNodeRecord r;
            r.instance_name = "node-" + testsupport::random_word(rng, 1, 4);
            r.addresses = {"127.0.0.1"};
            r.port = static_cast<std::uint16_t>(1000 + i);
            r.proximity_rtt_ms = static_cast<double>(rtt_dist(rng));
            records.push_back(std::move(r));
        }

        auto chosen = select_node(records);

        // Brute-force argmin with the documented tie-break.
        const FogNodeRecord* expected = &records[0];
        for (const auto& r : records) {
            if (*r.proximity_rtt_ms < *expected->proximity_rtt_ms ||
                (*r.proximity_rtt_ms == *expected->proximity_rtt_ms &&
                 r.instance_name < expected->instance_name)) {
                expected = &r;
            }
        }
        const FogNodeRecord expected_record = *expected;
        CHECK(chosen.instance_name == expected_record.instance_name);
        CHECK(*chosen.proximity_rtt_ms == *expected_record.proximity_rtt_ms);

        std::shuffle(records.begin(), records.end(), rng);
        auto shuffled_choice = select_node(records);
        CHECK(shuffled_choice.instance_name == expected_record.instance_name);
    }
}

TEST_CASE("uniform latency shifts never change the selection") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<FogNodeRecord> records;
        std::size_t count = 1 + rng() % 6;
        for (std::size_t i = 0; i < count; ++i) {
            FogNodeRecord r;
            r.instance_name = "n" + std::to_string(i);
            r.proximity_rtt_ms = static_cast<double>(1 + rng() % 50);
            records.push_back(std::move(r));
        }
        auto baseline = select_node(records).instance_name;
        double shift = static_cast<double>(rng() % 100);
        for (auto& r : records) *r.proximity_rtt_ms += shift;
        CHECK(select_node(records).instance_name == baseline);
    }
}

TEST_CASE("discovery cache serves within the TTL and refreshes after invalidation") {
    SimulatedLink link;
    auto first = link.advertise(ad_named("first"));
    DiscoveryCache cache(link, std::chrono::seconds(30));

    CHECK(cache.records(std::chrono::milliseconds(5)).size() == 1);

    auto second = link.advertise(ad_named("second"));
    // Within TTL: still the cached single record.
    CHECK(cache.records(std::chrono::milliseconds(5)).size() == 1);

    cache.invalidate();
    CHECK(cache.records(std::chrono::milliseconds(5)).size() == 2);
}
