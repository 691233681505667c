#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "ring.hpp"
#include "splitting.hpp"

namespace crtarray {

enum class ArrayVariant { Crt, Hscrt };

inline std::string to_string(ArrayVariant v) {
    return v == ArrayVariant::Crt ? "crt" : "hscrt";
}

// Two-subarray sparse sensor design over the ring, built from the conjugate
// generator pair of a split rational prime. Subarray points are coordinates
// in the basis {1, q}; the physical array is the union of the two subarrays,
// which always share exactly the origin sensor.
struct ArrayDesign {
    RingSpec ring;
    int64_t p;
    QuadInt pi;
    QuadInt pihat;
    ArrayVariant variant;
    std::vector<Coord> subarray1;
    std::vector<Coord> subarray2;
    // Set when the hole-free search had to fall back from the default
    // half-open representative choice to the alternative tied choice.
    bool used_closed_fallback = false;
    // Sensor spacing in metric units. Metadata for physical_metrics only,
    // never serialized.
    double spacing = 1.0;
};

inline std::vector<Coord> sensor_positions(const ArrayDesign& design) {
    std::set<Coord> all(design.subarray1.begin(), design.subarray1.end());
    all.insert(design.subarray2.begin(), design.subarray2.end());
    return std::vector<Coord>(all.begin(), all.end());
}

inline int64_t sensor_count(const ArrayDesign& design) {
    return static_cast<int64_t>(sensor_positions(design).size());
}

enum class CoarrayKind { Difference, Sum };

// Virtual coarray of a design: every cross pair (z1 from subarray1, z2 from
// subarray2) contributes one entry; entries map each distinct point to the
// number of sensor pairs that produce it. std::map keeps the points in
// lexicographic order, so iteration is deterministic.
struct Coarray {
    CoarrayKind kind;
    std::map<Coord, int64_t> entries;
};

inline Coarray cross_difference(const ArrayDesign& design) {
    Coarray co{CoarrayKind::Difference, {}};
    for (const Coord& z1 : design.subarray1)
        for (const Coord& z2 : design.subarray2) ++co.entries[z1 - z2];
    return co;
}

inline Coarray sum_coarray(const ArrayDesign& design) {
    Coarray co{CoarrayKind::Sum, {}};
    for (const Coord& z1 : design.subarray1)
        for (const Coord& z2 : design.subarray2) ++co.entries[z1 + z2];
    return co;
}

// Distinct coarray points in lexicographic order, multiplicities dropped.
inline std::vector<Coord> coarray_points(const Coarray& co) {
    std::vector<Coord> pts;
    pts.reserve(co.entries.size());
    for (const auto& entry : co.entries) pts.push_back(entry.first);
    return pts;
}

// Cross-remainder design: subarray k holds one representative of each coset
// of p * ring inside the ideal of one conjugate generator. 2p - 1 sensors.
inline ArrayDesign crt_array(const RingSpec& ring, int64_t p) {
    SplitResult sp = split_prime(p, ring);
    Lattice whole = ideal_lattice(QuadInt{ring, p, 0});
    ArrayDesign design{ring, p, sp.pi, sp.pihat, ArrayVariant::Crt, {}, {}, false};
    design.subarray1 = coset_representatives(whole, ideal_lattice(sp.pihat));
    design.subarray2 = coset_representatives(whole, ideal_lattice(sp.pi));
    return design;
}

// All points of the ambient ring inside the half-open Voronoi cell of
// p * ring: the contiguous segment a hole-free difference coarray must
// cover. Always exactly p * p points, one per residue class.
inline std::vector<Coord> contiguous_core(const RingSpec& ring, int64_t p) {
    if (p <= 0) throw std::invalid_argument("contiguous_core: p must be positive");
    Lattice cell = ideal_lattice(QuadInt{ring, p, 0});
    int64_t reach = checked_mul(p, 1 + static_cast<int64_t>(std::ceil(std::sqrt(
                                        static_cast<double>(ring.C)))));
    std::vector<Coord> core;
    for (int64_t a = -reach; a <= reach; ++a)
        for (int64_t b = -reach; b <= reach; ++b)
            if (voronoi_member(cell, Coord{a, b})) core.push_back(Coord{a, b});
    std::sort(core.begin(), core.end());
    if (static_cast<int64_t>(core.size()) != checked_mul(p, p))
        throw std::logic_error("contiguous_core: cell enumeration missed points");
    return core;
}

// Does the cross-difference map hit every residue class mod p * ring exactly
// once? Recomputed from the stored subarrays so imported designs are checked
// rather than trusted.
inline bool verify_crt_bijection(const ArrayDesign& design) {
    Lattice whole = ideal_lattice(QuadInt{design.ring, design.p, 0});
    int64_t pairs = 0;
    std::set<Coord> residues;
    for (const Coord& x1 : design.subarray1)
        for (const Coord& x2 : design.subarray2) {
            residues.insert(reduce_mod(whole, x1 - x2));
            ++pairs;
        }
    int64_t classes = checked_mul(design.p, design.p);
    return pairs == classes && static_cast<int64_t>(residues.size()) == classes;
}

struct HoleReport {
    bool hole_free = false;
    std::vector<Coord> holes;
};

// Check that the raw cross-difference coarray covers the whole contiguous
// core. Only the hole-free variant promises coverage; plain crt designs are
// rejected so a missing hole-free request is reported as misuse, not holes.
inline HoleReport verify_hole_free(const ArrayDesign& design) {
    if (design.variant != ArrayVariant::Hscrt)
        throw std::invalid_argument("verify_hole_free: design is not a hole-free variant");
    Coarray diff = cross_difference(design);
    HoleReport report;
    for (const Coord& x : contiguous_core(design.ring, design.p))
        if (diff.entries.count(x) == 0) report.holes.push_back(x);
    report.hole_free = report.holes.empty();
    return report;
}

namespace detail {

// Representatives of ring / (2 pi), each mapped through multiplication by
// pihat into the ideal of pihat. Points landing on p * ring are redundant
// with the conjugate subarray and are dropped, except for the shared origin.
inline std::vector<Coord> hscrt_subarray1(const RingSpec& ring, int64_t p, const QuadInt& pi,
                                          const QuadInt& pihat, bool closed_choice) {
    QuadInt two_pi = QuadInt{ring, 2, 0} * pi;
    Lattice double_ideal = ideal_lattice(two_pi);
    Lattice whole = ideal_lattice(QuadInt{ring, p, 0});
    IntMat2 mul = matrix_rep(pihat);
    std::vector<Coord> out;
    for (const Coord& rep : coset_representatives(double_ideal, full_lattice(ring))) {
        Coord choice = rep;
        if (closed_choice) choice = min_norm_coset_points(double_ideal, rep).back();
        Coord y = apply(mul, choice);
        if (y != Coord{0, 0} && contains(whole, y)) continue;
        out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Hole-free cross-remainder design with 5p - 4 sensors: subarray1 spreads
// representatives of ring / (2 pi) through multiplication by pihat, and
// subarray2 spreads representatives of ring / (pihat) through pi. The
// default half-open representative choice is tried first; if its coarray
// misses part of the core, the alternative tied choice is tried and flagged.
inline ArrayDesign hscrt_array(const RingSpec& ring, int64_t p) {
    SplitResult sp = split_prime(p, ring);
    ArrayDesign design{ring, p, sp.pi, sp.pihat, ArrayVariant::Hscrt, {}, {}, false};
    IntMat2 mul2 = matrix_rep(sp.pi);
    for (const Coord& rep : coset_representatives(ideal_lattice(sp.pihat), full_lattice(ring)))
        design.subarray2.push_back(apply(mul2, rep));
    std::sort(design.subarray2.begin(), design.subarray2.end());

    design.subarray1 = detail::hscrt_subarray1(ring, p, sp.pi, sp.pihat, false);
    if (verify_hole_free(design).hole_free) return design;

    design.subarray1 = detail::hscrt_subarray1(ring, p, sp.pi, sp.pihat, true);
    design.used_closed_fallback = true;
    if (verify_hole_free(design).hole_free) return design;
    throw std::logic_error("hscrt_array: no hole-free representative choice found");
}

struct VerifyReport {
    bool ok = false;
    std::vector<std::string> failures;
};

// Full structural and combinatorial audit of a design, recomputed from its
// stored contents. Used on imported files, where nothing can be trusted.
inline VerifyReport verify_design(const ArrayDesign& design) {
    VerifyReport report;
    auto fail = [&report](const std::string& what) { report.failures.push_back(what); };

    if (!is_rational_prime(design.p)) fail("p is not a rational prime");
    if (norm(design.pi) != design.p) fail("generator norm does not equal p");
    if (design.pihat != conjugate(design.pi)) fail("generators are not conjugate");
    if (design.pi != canonical_associate(design.pi)) fail("generator is not in canonical form");
    if (norm(design.pi) == design.p && !is_prime_element(design.pi))
        fail("generator is not a prime element");
    if (norm(design.pi) == design.p &&
        !conjugate_pair_coprime(design.pi.m1, design.pi.m2, design.ring))
        fail("conjugate generators are not coprime");

    int64_t want1 = design.variant == ArrayVariant::Crt ? design.p : 4 * design.p - 3;
    if (static_cast<int64_t>(design.subarray1.size()) != want1) fail("subarray1 size is wrong");
    if (static_cast<int64_t>(design.subarray2.size()) != design.p) fail("subarray2 size is wrong");

    Lattice ideal1 = ideal_lattice(design.pihat);
    Lattice ideal2 = ideal_lattice(design.pi);
    Lattice whole = ideal_lattice(QuadInt{design.ring, design.p, 0});
    Lattice twice = scaled_lattice(whole, 2);
    bool origin1 = false, origin2 = false, member1 = true, member2 = true, redundant = false;
    for (const Coord& s : design.subarray1) {
        if (s == Coord{0, 0}) origin1 = true;
        if (!contains(ideal1, s)) member1 = false;
        if (design.variant == ArrayVariant::Hscrt && s != Coord{0, 0} && contains(whole, s))
            redundant = true;
    }
    for (const Coord& s : design.subarray2) {
        if (s == Coord{0, 0}) origin2 = true;
        if (!contains(ideal2, s)) member2 = false;
    }
    if (!member1) fail("subarray1 leaves the ideal of the conjugate generator");
    if (!member2) fail("subarray2 leaves the ideal of the generator");
    if (redundant) fail("subarray1 keeps a redundant point of p times the ring");
    if (!origin1 || !origin2) fail("a subarray is missing the shared origin sensor");

    const Lattice& mod1 = design.variant == ArrayVariant::Crt ? whole : twice;
    for (size_t i = 0; i < design.subarray1.size() && report.failures.empty(); ++i)
        for (size_t j = i + 1; j < design.subarray1.size(); ++j)
            if (contains(mod1, design.subarray1[i] - design.subarray1[j])) {
                fail("subarray1 repeats a residue class");
                i = design.subarray1.size();
                break;
            }
    for (size_t i = 0; i < design.subarray2.size() && report.failures.empty(); ++i)
        for (size_t j = i + 1; j < design.subarray2.size(); ++j)
            if (contains(whole, design.subarray2[i] - design.subarray2[j])) {
                fail("subarray2 repeats a residue class");
                i = design.subarray2.size();
                break;
            }

    if (report.failures.empty()) {
        if (design.variant == ArrayVariant::Crt) {
            if (!verify_crt_bijection(design)) fail("cross differences do not enumerate the residues");
        } else {
            HoleReport holes = verify_hole_free(design);
            if (!holes.hole_free) fail("difference coarray misses part of the contiguous core");
        }
    }
    report.ok = report.failures.empty();
    return report;
}

// Physical footprint of a hole-free design at its sensor spacing. The
// sensors span the Voronoi cell of 2p * ring, so the aperture is that cell
// scaled to metric units. dof_contiguous counts the contiguous coarray
// points, one per residue class of p * ring.
struct PhysicalMetrics {
    int64_t sensor_count = 0;
    double perimeter = 0.0;
    double area = 0.0;
    int64_t dof_contiguous = 0;
};

inline PhysicalMetrics physical_metrics(const ArrayDesign& design) {
    if (design.variant != ArrayVariant::Hscrt)
        throw std::invalid_argument("physical_metrics: design is not a hole-free variant");
    if (!(design.spacing > 0))
        throw std::invalid_argument("physical_metrics: spacing must be positive");
    Lattice tile = scaled_lattice(full_lattice(design.ring), 2 * design.p);
    auto poly = voronoi_cell_polygon(tile);
    PhysicalMetrics metrics;
    metrics.sensor_count = sensor_count(design);
    metrics.perimeter = polygon_perimeter(poly) * design.spacing;
    metrics.area = polygon_area(poly) * design.spacing * design.spacing;
    metrics.dof_contiguous = checked_mul(design.p, design.p);
    return metrics;
}

}  // namespace crtarray
