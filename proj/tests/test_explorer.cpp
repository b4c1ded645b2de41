#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pgsynth/explorer.hpp"
#include "pgsynth/parser.hpp"
#include "support/oracle.hpp"

using namespace pgsynth;
using namespace pgsynth::testing;

namespace {

struct Built {
    DpaHandle h;
    Arena a;
    Built(const std::string& ltl, const Alphabet& ab)
        : h(annotate(parse(ltl, ab)), ab), a(h.initial(), h.parity()) {}
};

const Alphabet arb2({"r1", "r2"}, {"g1", "g2"});
std::vector<char> none;  // "nothing decided" for a given arena

std::vector<char> undecided(const Arena& a) {
    return std::vector<char>(a.nodes().size(), 0);
}

}  // namespace

TEST_CASE("bfs picks the earliest minimal-depth boundary node") {
    Built b(arbiter_ltl(2), arb2);
    Arena& a = b.a;
    CHECK(explore_bfs(a, a.boundary()) == std::vector<int>{a.initial()});
    a.expand({a.initial()}, b.h);
    auto pick = explore_bfs(a, a.boundary());
    REQUIRE(pick.size() == 1);
    CHECK(pick[0] == a.boundary()[0]);  // first discovered at depth 1
    // layer mode returns the whole front
    auto layer = explore_bfs(a, a.boundary(), true);
    CHECK(layer == a.boundary());
}

TEST_CASE("pq picks argmin of min score and argmax of max score") {
    Built b(arbiter_ltl(2), arb2);
    Arena& a = b.a;
    a.expand({a.initial()}, b.h);
    auto picks = explore_pq(a, a.boundary());
    REQUIRE(!picks.empty());
    CHECK(picks.size() <= 2);
    double lo = 2.0, hi = -1.0;
    for (int v : a.boundary()) {
        lo = std::min(lo, a.node(v).min_score);
        hi = std::max(hi, a.node(v).max_score);
    }
    CHECK(a.node(picks.front()).min_score == lo);
    CHECK(a.node(picks.back()).max_score == hi);
}

TEST_CASE("single candidate collapses pq to a singleton") {
    Built b("G(r1 -> F g1)", arb2);
    Arena& a = b.a;
    auto picks = explore_pq(a, a.boundary());
    CHECK(picks == std::vector<int>{a.initial()});
}

TEST_CASE("filter keeps only nodes reachable through undecided territory") {
    Built b(arbiter_ltl(2), arb2);
    Arena& a = b.a;
    a.expand({a.initial()}, b.h);
    std::vector<char> dec = undecided(a);
    auto all = filter_boundary(a, dec);
    CHECK(all == a.boundary());
    // deciding the initial node cuts off everything
    dec[a.initial()] = 1;
    CHECK(filter_boundary(a, dec).empty());
    // deciding one intermediate node prunes only its boundary successors
    int mid = a.node(a.initial()).edges[0].to;
    dec = undecided(a);
    dec[mid] = 1;
    auto filtered = filter_boundary(a, dec);
    CHECK(filtered.size() <= all.size());
    for (int v : filtered) {
        bool only_via_mid = true;
        for (const ArenaEdge& e : a.node(a.initial()).edges)
            if (e.to != mid)
                for (const ArenaEdge& f : a.node(e.to).edges) only_via_mid &= f.to != v;
        CHECK(!only_via_mid);
    }
}

TEST_CASE("filter result is always a subset of the boundary") {
    Rng rng(53);
    for (int i = 0; i < 20; i++) {
        Built b(to_string(random_supported(rng, 3, 3), Alphabet({"r1", "r2"}, {"g1", "g2"})),
                arb2);
        Arena& a = b.a;
        if (!a.boundary().empty()) a.expand({a.boundary()[0]}, b.h);
        std::vector<char> dec(a.nodes().size(), 0);
        for (std::size_t v = 0; v < dec.size(); v++) dec[v] = rng() % 3 == 0;
        for (int v : filter_boundary(a, dec))
            CHECK(std::find(a.boundary().begin(), a.boundary().end(), v) != a.boundary().end());
    }
}

TEST_CASE("plus variants fall back when the filter is empty") {
    Built b(arbiter_ltl(2), arb2);
    Arena& a = b.a;
    a.expand({a.initial()}, b.h);
    std::vector<char> dec = undecided(a);
    dec[a.initial()] = 1;  // filter comes back empty, boundary is not
    int fallbacks = 0;
    auto picks = explore(a, Exploration::BfsPlus, dec, false, &fallbacks);
    CHECK(!picks.empty());
    CHECK(fallbacks == 1);
    // with nothing decided the plus variant equals the base one
    dec = undecided(a);
    fallbacks = 0;
    CHECK(explore(a, Exploration::PqPlus, dec, false, &fallbacks) ==
          explore(a, Exploration::Pq, dec));
    CHECK(fallbacks == 0);
}

TEST_CASE("explore dispatch matches the base strategies") {
    Built b(arbiter_ltl(2), arb2);
    Arena& a = b.a;
    a.expand({a.initial()}, b.h);
    std::vector<char> dec = undecided(a);
    CHECK(explore(a, Exploration::Bfs, dec) == explore_bfs(a, a.boundary()));
    CHECK(explore(a, Exploration::Pq, dec) == explore_pq(a, a.boundary()));
}
