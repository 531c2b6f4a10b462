#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "snn/complex.hpp"
#include "snn/rng.hpp"
#include "support/fixtures.hpp"

using namespace snn;
using snn::testing::random_complex;
using snn::testing::toy_complex;

TEST_CASE("simplex canonicalization and validation") {
    const Simplex s({2, 0, 1});
    CHECK(s.vertices() == std::vector<VertexId>{0, 1, 2});
    CHECK(s.dimension() == 2);
    CHECK_THROWS_AS(Simplex(std::vector<VertexId>{}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Simplex({-1, 2}), std::invalid_argument);
}

TEST_CASE("faces come out in omitted-index order") {
    const Simplex abc{0, 1, 2};
    const auto faces = abc.faces();
    REQUIRE(faces.size() == 3);
    CHECK(faces[0] == Simplex{1, 2});
    CHECK(faces[1] == Simplex{0, 2});
    CHECK(faces[2] == Simplex{0, 1});

    const auto edge_faces = Simplex{0, 1}.faces();
    REQUIRE(edge_faces.size() == 2);
    CHECK(edge_faces[0] == Simplex{1});
    CHECK(edge_faces[1] == Simplex{0});

    CHECK(Simplex{0}.faces().empty());
}

TEST_CASE("insert_closure fills in all subsets") {
    SimplicialComplex complex;
    complex.insert_closure(Simplex{0, 1, 2});
    CHECK(complex.count(0) == 3);
    CHECK(complex.count(1) == 3);
    CHECK(complex.count(2) == 1);
    CHECK(complex.top_dimension() == 2);
}

TEST_CASE("toy complex has the expected skeleton") {
    const auto complex = toy_complex();
    CHECK(complex.counts() == std::vector<SimplicialComplex::Index>{4, 5, 1});
    CHECK(complex.simplices(0) ==
          std::vector<Simplex>{Simplex{0}, Simplex{1}, Simplex{2}, Simplex{3}});
    CHECK(complex.simplices(1) == std::vector<Simplex>{Simplex{0, 1}, Simplex{0, 2}, Simplex{0, 3},
                                                       Simplex{1, 2}, Simplex{2, 3}});
    CHECK(complex.simplices(2) == std::vector<Simplex>{Simplex{0, 1, 2}});
}

TEST_CASE("insertion is idempotent") {
    SimplicialComplex a;
    a.insert_closure(Simplex{0, 1, 2});
    SimplicialComplex b = a;
    b.insert_closure(Simplex{0, 1, 2});
    CHECK(a == b);
    CHECK(b.counts() == std::vector<SimplicialComplex::Index>{3, 3, 1});
    CHECK(b.position(Simplex{0, 1}) == a.position(Simplex{0, 1}));
}

TEST_CASE("cofaces on the toy complex") {
    const auto complex = toy_complex();
    CHECK(complex.cofaces(Simplex{0, 1}) == std::vector<Simplex>{Simplex{0, 1, 2}});
    CHECK(complex.cofaces(Simplex{2, 3}).empty());
    CHECK(complex.cofaces(Simplex{0}) ==
          std::vector<Simplex>{Simplex{0, 1}, Simplex{0, 2}, Simplex{0, 3}});
    CHECK_THROWS_AS(complex.cofaces(Simplex{1, 3}), std::invalid_argument);
}

TEST_CASE("simplicial distance on the toy complex") {
    const auto complex = toy_complex();
    CHECK(complex.simplicial_distance(Simplex{0, 1}, Simplex{0, 1}) == 0);
    CHECK(complex.simplicial_distance(Simplex{0, 1}, Simplex{0, 2}) == 1);
    CHECK(complex.simplicial_distance(Simplex{0, 1}, Simplex{2, 3}) == 2);
    CHECK_THROWS_AS(complex.simplicial_distance(Simplex{0}, Simplex{0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(complex.simplicial_distance(Simplex{1, 3}, Simplex{0, 1}),
                    std::invalid_argument);
}

TEST_CASE("distance is infinite across components") {
    SimplicialComplex complex;
    complex.insert_closure(Simplex{0, 1});
    complex.insert_closure(Simplex{2, 3});
    CHECK(complex.simplicial_distance(Simplex{0, 1}, Simplex{2, 3}) == std::nullopt);
    // The vertices are still joined through... nothing: two components.
    CHECK(complex.simplicial_distance(Simplex{0}, Simplex{2}) == std::nullopt);
    CHECK(complex.simplicial_distance(Simplex{0}, Simplex{1}) == 1);
}

TEST_CASE("closure property on random complexes") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto complex = random_complex(rng);
        for (int p = 1; p <= complex.top_dimension(); ++p)
            for (const auto& sigma : complex.simplices(p))
                for (const auto& face : sigma.faces()) CHECK(complex.contains(face));
    }
}

TEST_CASE("insertion order does not matter") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Simplex> maximal;
        const int n = 2 + static_cast<int>(rng.uniform_below(5));
        for (int i = 0; i < n; ++i) {
            std::vector<VertexId> pool{0, 1, 2, 3, 4, 5, 6};
            rng.shuffle(pool);
            pool.resize(1 + rng.uniform_below(4));
            maximal.emplace_back(pool);
        }
        SimplicialComplex forward, backward;
        for (const auto& s : maximal) forward.insert_closure(s);
        auto reversed = maximal;
        std::reverse(reversed.begin(), reversed.end());
        for (const auto& s : reversed) backward.insert_closure(s);
        REQUIRE(forward == backward);
        for (int p = 0; p <= forward.top_dimension(); ++p) {
            CHECK(forward.simplices(p) == backward.simplices(p));
            for (const auto& s : forward.simplices(p))
                CHECK(forward.position(s) == backward.position(s));
        }
    }
}

TEST_CASE("distance restricted to a component is a metric") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto complex = random_complex(rng, 50);
        for (int p = 0; p <= complex.top_dimension(); ++p) {
            const auto& level = complex.simplices(p);
            const auto n = static_cast<std::size_t>(level.size());
            if (n == 0 || n > 12) continue;
            std::vector<std::vector<std::optional<int>>> d(n, std::vector<std::optional<int>>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    d[i][j] = complex.simplicial_distance(level[i], level[j]);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(d[i][i] == 0);
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(d[i][j] == d[j][i]);
                    if (i != j && d[i][j].has_value()) CHECK(*d[i][j] >= 1);
                    // triangle inequality where all three legs exist
                    for (std::size_t k = 0; k < n; ++k)
                        if (d[i][k] && d[k][j] && d[i][j])
                            CHECK(*d[i][j] <= *d[i][k] + *d[k][j]);
                }
            }
        }
    }
}
