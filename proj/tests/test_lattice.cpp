#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <crtarray/lattice.hpp>
#include <crtarray/splitting.hpp>

#include "oracles.hpp"

using crtarray::Coord;
using crtarray::Lattice;
using crtarray::QuadInt;
using crtarray::Rational;
using crtarray::RingSpec;
using crtarray::Surd;

TEST_CASE("ideal membership") {
    RingSpec gauss = crtarray::ring_from_d(-1);
    Lattice five = crtarray::ideal_lattice(QuadInt{gauss, 5, 0});
    CHECK(crtarray::contains(five, Coord{5, 0}));
    CHECK(crtarray::contains(five, Coord{0, 5}));
    CHECK(crtarray::contains(five, Coord{10, -5}));
    CHECK_FALSE(crtarray::contains(five, Coord{3, 4}));
    CHECK_FALSE(crtarray::contains(five, Coord{1, 0}));

    Lattice pi = crtarray::ideal_lattice(QuadInt{gauss, 2, 1});
    CHECK(crtarray::contains(pi, Coord{2, 1}));
    CHECK(crtarray::contains(pi, Coord{-1, 2}));
    CHECK(crtarray::contains(pi, Coord{5, 0}));
    CHECK(crtarray::contains(pi, Coord{1, -2}));
    CHECK_FALSE(crtarray::contains(pi, Coord{1, 0}));
    CHECK_FALSE(crtarray::contains(pi, Coord{0, -1}));

    CHECK_THROWS_AS(crtarray::ideal_lattice(QuadInt{gauss, 0, 0}), std::invalid_argument);
}

TEST_CASE("lattice indices") {
    RingSpec gauss = crtarray::ring_from_d(-1);
    Lattice full = crtarray::full_lattice(gauss);
    Lattice five = crtarray::ideal_lattice(QuadInt{gauss, 5, 0});
    Lattice pi = crtarray::ideal_lattice(QuadInt{gauss, 1, -2});
    CHECK(crtarray::lattice_index(five, full) == 25);
    CHECK(crtarray::lattice_index(pi, full) == 5);
    CHECK(crtarray::lattice_index(crtarray::scaled_lattice(pi, 2), full) == 20);
    CHECK(crtarray::lattice_index(five, pi) == 5);
    CHECK(crtarray::lattice_index(full, full) == 1);
    CHECK_THROWS_AS(crtarray::lattice_index(pi, five), std::invalid_argument);
    CHECK_THROWS_AS(crtarray::lattice_index(pi, crtarray::full_lattice(crtarray::ring_from_d(-3))),
                    std::invalid_argument);
}

TEST_CASE("coset reduction") {
    RingSpec gauss = crtarray::ring_from_d(-1);
    RingSpec eis = crtarray::ring_from_d(-3);

    SECTION("interior points") {
        Lattice five = crtarray::ideal_lattice(QuadInt{gauss, 5, 0});
        CHECK(crtarray::reduce_mod(five, Coord{2, 2}) == Coord{2, 2});
        CHECK(crtarray::reduce_mod(five, Coord{3, 0}) == Coord{-2, 0});
        CHECK(crtarray::reduce_mod(five, Coord{5, 7}) == Coord{0, 2});
        CHECK(crtarray::reduce_mod(five, Coord{7, 6}) == Coord{2, 1});

        Lattice pi = crtarray::ideal_lattice(QuadInt{gauss, 2, 1});
        CHECK(crtarray::reduce_mod(pi, Coord{1, 0}) == Coord{1, 0});
        CHECK(crtarray::reduce_mod(pi, Coord{2, 0}) == Coord{0, -1});
    }

    SECTION("boundary ties pick the lex-least point") {
        Lattice twog = crtarray::ideal_lattice(QuadInt{gauss, 2, 0});
        CHECK(crtarray::reduce_mod(twog, Coord{1, 1}) == Coord{-1, -1});
        CHECK(crtarray::reduce_mod(twog, Coord{1, -1}) == Coord{-1, -1});
        CHECK(crtarray::reduce_mod(twog, Coord{1, 0}) == Coord{-1, 0});
        CHECK(crtarray::reduce_mod(twog, Coord{0, 1}) == Coord{0, -1});

        Lattice twoe = crtarray::ideal_lattice(QuadInt{eis, 2, 0});
        CHECK(crtarray::reduce_mod(twoe, Coord{0, 1}) == Coord{0, -1});
        CHECK(crtarray::reduce_mod(twoe, Coord{1, 1}) == Coord{-1, 1});
        CHECK(crtarray::reduce_mod(twoe, Coord{1, -1}) == Coord{-1, 1});
    }

    SECTION("agrees with the exhaustive scan oracle") {
        std::mt19937 rng(20260814u);
        std::uniform_int_distribution<int64_t> coord(-50, 50);
        std::uniform_int_distribution<int64_t> gen(-9, 9);
        for (int64_t d : crtarray::kPidDiscriminants) {
            RingSpec ring = crtarray::ring_from_d(d);
            int done = 0;
            while (done < 200) {
                QuadInt g{ring, gen(rng), gen(rng)};
                if (g.is_zero()) continue;
                Lattice lat = crtarray::ideal_lattice(g);
                Coord x{coord(rng), coord(rng)};
                Coord got = crtarray::reduce_mod(lat, x);
                CHECK(got == oracle::reduce_by_scan(lat, x));
                CHECK(crtarray::contains(lat, x - got));
                CHECK(crtarray::reduce_mod(lat, got) == got);
                ++done;
            }
        }
    }
}

TEST_CASE("coset representatives") {
    RingSpec gauss = crtarray::ring_from_d(-1);
    RingSpec eis = crtarray::ring_from_d(-3);
    Lattice gfull = crtarray::full_lattice(gauss);
    Lattice efull = crtarray::full_lattice(eis);

    SECTION("golden systems for index 4 and 5 and 7") {
        auto quarter = crtarray::coset_representatives(
            crtarray::ideal_lattice(QuadInt{gauss, 2, 0}), gfull);
        CHECK(quarter == std::vector<Coord>{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}});

        auto quarter_e = crtarray::coset_representatives(
            crtarray::ideal_lattice(QuadInt{eis, 2, 0}), efull);
        CHECK(quarter_e == std::vector<Coord>{{-1, 0}, {-1, 1}, {0, -1}, {0, 0}});

        auto quincunx = crtarray::coset_representatives(
            crtarray::ideal_lattice(QuadInt{gauss, 2, 1}), gfull);
        CHECK(quincunx == std::vector<Coord>{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}});

        auto hexstar = crtarray::coset_representatives(
            crtarray::ideal_lattice(QuadInt{eis, 1, 2}), efull);
        CHECK(hexstar == std::vector<Coord>{{-1, 0}, {-1, 1}, {0, -1}, {0, 0}, {0, 1}, {1, -1}, {1, 0}});
    }

    SECTION("representative systems are complete and non-redundant") {
        std::vector<Lattice> subs{
            crtarray::ideal_lattice(QuadInt{gauss, 5, 0}),
            crtarray::ideal_lattice(QuadInt{eis, 3, -4}),
            crtarray::scaled_lattice(crtarray::ideal_lattice(QuadInt{gauss, 1, -2}), 2),
        };
        std::vector<Lattice> wholes{gfull, efull, gfull};
        std::vector<int64_t> sizes{25, 13, 20};
        for (size_t k = 0; k < subs.size(); ++k) {
            auto reps = crtarray::coset_representatives(subs[k], wholes[k]);
            REQUIRE(static_cast<int64_t>(reps.size()) == sizes[k]);
            for (size_t i = 0; i < reps.size(); ++i) {
                CHECK(crtarray::reduce_mod(subs[k], reps[i]) == reps[i]);
                for (size_t j = i + 1; j < reps.size(); ++j)
                    CHECK_FALSE(crtarray::contains(subs[k], reps[i] - reps[j]));
            }
        }
    }

    SECTION("nested lattices") {
        Lattice five = crtarray::ideal_lattice(QuadInt{gauss, 5, 0});
        Lattice pi = crtarray::ideal_lattice(QuadInt{gauss, 1, -2});
        auto reps = crtarray::coset_representatives(five, pi);
        REQUIRE(reps.size() == 5);
        for (const Coord& r : reps) CHECK(crtarray::contains(pi, r));
        CHECK_THROWS_AS(crtarray::coset_representatives(pi, five), std::invalid_argument);
    }
}

TEST_CASE("half-open cells partition the plane") {
    struct Case {
        int64_t d;
        int64_t p;
    };
    for (Case c : {Case{-1, 5}, Case{-1, 13}, Case{-3, 7}, Case{-3, 13}}) {
        RingSpec ring = crtarray::ring_from_d(c.d);
        Lattice sub = crtarray::ideal_lattice(QuadInt{ring, c.p, 0});
        auto reps = crtarray::coset_representatives(sub, crtarray::full_lattice(ring));
        REQUIRE(static_cast<int64_t>(reps.size()) == c.p * c.p);
        std::set<Coord> rep_set(reps.begin(), reps.end());
        std::set<Coord> seen;
        int64_t members = 0;
        for (int64_t a = -2 * c.p; a <= 2 * c.p; ++a) {
            for (int64_t b = -2 * c.p; b <= 2 * c.p; ++b) {
                Coord x{a, b};
                Coord r = crtarray::reduce_mod(sub, x);
                CHECK(rep_set.count(r) == 1);
                seen.insert(r);
                if (crtarray::voronoi_member(sub, x)) ++members;
            }
        }
        // The scan box covers every coset and contains the whole cell.
        CHECK(seen == rep_set);
        CHECK(members == c.p * c.p);
    }
}

TEST_CASE("tied representatives") {
    RingSpec gauss = crtarray::ring_from_d(-1);
    RingSpec eis = crtarray::ring_from_d(-3);
    Lattice twog = crtarray::ideal_lattice(QuadInt{gauss, 2, 0});
    Lattice twoe = crtarray::ideal_lattice(QuadInt{eis, 2, 0});

    CHECK(crtarray::min_norm_coset_points(twog, Coord{1, 1}) ==
          std::vector<Coord>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
    CHECK(crtarray::min_norm_coset_points(twog, Coord{1, 0}) ==
          std::vector<Coord>{{-1, 0}, {1, 0}});
    CHECK(crtarray::min_norm_coset_points(twog, Coord{0, 0}) == std::vector<Coord>{{0, 0}});
    CHECK(crtarray::min_norm_coset_points(twoe, Coord{0, 1}) ==
          std::vector<Coord>{{0, -1}, {0, 1}});
    CHECK(crtarray::min_norm_coset_points(twoe, Coord{1, 1}) ==
          std::vector<Coord>{{-1, 1}, {1, -1}});

    SECTION("members are congruent, tied in norm, and led by reduce_mod") {
        std::mt19937 rng(555u);
        std::uniform_int_distribution<int64_t> coord(-30, 30);
        std::uniform_int_distribution<int64_t> gen(-6, 6);
        for (int64_t d : crtarray::kPidDiscriminants) {
            RingSpec ring = crtarray::ring_from_d(d);
            int done = 0;
            while (done < 60) {
                QuadInt g{ring, gen(rng), gen(rng)};
                if (g.is_zero()) continue;
                Lattice lat = crtarray::ideal_lattice(g);
                Coord x{coord(rng), coord(rng)};
                auto tied = crtarray::min_norm_coset_points(lat, x);
                REQUIRE_FALSE(tied.empty());
                CHECK(tied.front() == crtarray::reduce_mod(lat, x));
                int64_t level = crtarray::norm_sq(ring, tied.front());
                for (const Coord& t : tied) {
                    CHECK(crtarray::norm_sq(ring, t) == level);
                    CHECK(crtarray::contains(lat, t - x));
                }
                ++done;
            }
        }
    }
}

TEST_CASE("embedded coordinates") {
    RingSpec eis = crtarray::ring_from_d(-3);
    auto [ex, ey] = crtarray::embed_exact(eis, Coord{1, 2});
    CHECK(ex == Surd(2));
    CHECK(ey == Surd(Rational(0), Rational(1), 3));

    RingSpec gauss = crtarray::ring_from_d(-1);
    auto [gx, gy] = crtarray::embed_exact(gauss, Coord{3, -4});
    CHECK(gx == Surd(3));
    CHECK(gy == Surd(-4));

    SECTION("squared length equals the norm form") {
        std::mt19937 rng(99u);
        std::uniform_int_distribution<int64_t> coord(-40, 40);
        for (int64_t d : crtarray::kPidDiscriminants) {
            RingSpec ring = crtarray::ring_from_d(d);
            for (int iter = 0; iter < 50; ++iter) {
                Coord x{coord(rng), coord(rng)};
                auto [px, py] = crtarray::embed_xy(ring, x);
                CHECK(px * px + py * py ==
                      Catch::Approx(static_cast<double>(crtarray::norm_sq(ring, x))).margin(1e-6));
            }
        }
    }
}

TEST_CASE("voronoi cell polygons") {
    RingSpec gauss = crtarray::ring_from_d(-1);
    RingSpec eis = crtarray::ring_from_d(-3);

    auto square = crtarray::voronoi_cell_polygon(crtarray::full_lattice(gauss));
    CHECK(square.size() == 4);
    CHECK(crtarray::polygon_area(square) == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(crtarray::polygon_perimeter(square) == Catch::Approx(4.0).epsilon(1e-12));

    auto hex = crtarray::voronoi_cell_polygon(crtarray::full_lattice(eis));
    CHECK(hex.size() == 6);
    CHECK(crtarray::polygon_area(hex) == Catch::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(crtarray::polygon_perimeter(hex) == Catch::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));

    auto big = crtarray::voronoi_cell_polygon(
        crtarray::scaled_lattice(crtarray::full_lattice(gauss), 10));
    CHECK(crtarray::polygon_area(big) == Catch::Approx(100.0).epsilon(1e-12));
    CHECK(crtarray::polygon_perimeter(big) == Catch::Approx(40.0).epsilon(1e-12));

    SECTION("cell area equals the covolume") {
        std::mt19937 rng(31u);
        std::uniform_int_distribution<int64_t> gen(-7, 7);
        for (int64_t d : crtarray::kPidDiscriminants) {
            RingSpec ring = crtarray::ring_from_d(d);
            double covol_unit = crtarray::generator_matrix(ring).det().to_double();
            int done = 0;
            while (done < 30) {
                QuadInt g{ring, gen(rng), gen(rng)};
                if (g.is_zero()) continue;
                auto poly = crtarray::voronoi_cell_polygon(crtarray::ideal_lattice(g));
                double area = crtarray::polygon_area(poly);
                CHECK(area > 0.0);
                CHECK(area == Catch::Approx(crtarray::norm(g) * covol_unit).epsilon(1e-9));
                ++done;
            }
        }
    }
}
