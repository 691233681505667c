#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "array_design.hpp"
#include "lattice.hpp"

namespace crtarray {

namespace detail {

// Fixed 12-significant-digit rendering so exports are byte-stable and round
// trips through strtod land on the same value.
inline std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline void append_coord_lists(std::string& out, const RingSpec& ring,
                               const std::vector<Coord>& pts, int indent) {
    std::string pad(indent, ' ');
    out += pad + "\"coords_basis\": [";
    for (size_t k = 0; k < pts.size(); ++k) {
        if (k) out += ", ";
        out += '[' + std::to_string(pts[k].a) + ", " + std::to_string(pts[k].b) + ']';
    }
    out += "],\n" + pad + "\"coords_cartesian\": [";
    for (size_t k = 0; k < pts.size(); ++k) {
        auto [x, y] = embed_xy(ring, pts[k]);
        if (k) out += ", ";
        out += '[' + format_g12(x) + ", " + format_g12(y) + ']';
    }
    out += ']';
}

}  // namespace detail

// Serialize a design as schema version 1 JSON. The writer is hand-rolled so
// that key order, whitespace, and number formatting never drift between
// runs. The shared origin sensor is stored only in subarray1; the
// subarray2_origin_omitted flag tells importers to put it back.
inline std::string export_design(const ArrayDesign& design) {
    std::vector<Coord> sub2 = design.subarray2;
    bool omitted = false;
    auto origin = std::find(sub2.begin(), sub2.end(), Coord{0, 0});
    if (origin != sub2.end()) {
        sub2.erase(origin);
        omitted = true;
    }
    std::string out = "{\n";
    out += "  \"schema_version\": 1,\n";
    out += "  \"ring\": {\"D\": " + std::to_string(design.ring.D) +
           ", \"B\": " + std::to_string(design.ring.B) +
           ", \"C\": " + std::to_string(design.ring.C) + "},\n";
    out += "  \"p\": " + std::to_string(design.p) + ",\n";
    out += "  \"variant\": \"" + to_string(design.variant) + "\",\n";
    out += "  \"generators\": [[" + std::to_string(design.pi.m1) + ", " +
           std::to_string(design.pi.m2) + "], [" + std::to_string(design.pihat.m1) + ", " +
           std::to_string(design.pihat.m2) + "]],\n";
    out += std::string("  \"used_closed_fallback\": ") +
           (design.used_closed_fallback ? "true" : "false") + ",\n";
    out += std::string("  \"subarray2_origin_omitted\": ") + (omitted ? "true" : "false") + ",\n";
    out += "  \"subarrays\": [\n";
    out += "    {\n      \"label\": 1,\n";
    detail::append_coord_lists(out, design.ring, design.subarray1, 6);
    out += "\n    },\n";
    out += "    {\n      \"label\": 2,\n";
    detail::append_coord_lists(out, design.ring, sub2, 6);
    out += "\n    }\n  ]\n}\n";
    return out;
}

namespace detail {

inline std::vector<Coord> parse_coords(const nlohmann::json& list) {
    std::vector<Coord> out;
    for (const auto& entry : list) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw std::invalid_argument("design import: malformed basis coordinate");
        out.push_back(Coord{entry[0].get<int64_t>(), entry[1].get<int64_t>()});
    }
    return out;
}

}  // namespace detail

// Parse and validate a schema version 1 design. Basis coordinates are
// authoritative; Cartesian coordinates, when present, are cross-checked
// against the embedding to catch hand-edited files.
inline ArrayDesign import_design(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("design import: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int64_t>() != 1)
            throw std::invalid_argument("design import: unsupported schema_version");
        RingSpec ring = ring_from_d(j.at("ring").at("D").get<int64_t>());
        if (j.at("ring").at("B").get<int64_t>() != ring.B ||
            j.at("ring").at("C").get<int64_t>() != ring.C)
            throw std::invalid_argument("design import: ring parameters do not match D");

        ArrayDesign design;
        design.ring = ring;
        design.p = j.at("p").get<int64_t>();
        std::string variant = j.at("variant").get<std::string>();
        if (variant == "crt")
            design.variant = ArrayVariant::Crt;
        else if (variant == "hscrt")
            design.variant = ArrayVariant::Hscrt;
        else
            throw std::invalid_argument("design import: unknown variant");

        const auto& gens = j.at("generators");
        if (!gens.is_array() || gens.size() != 2)
            throw std::invalid_argument("design import: generators must hold two elements");
        design.pi = QuadInt{ring, gens[0][0].get<int64_t>(), gens[0][1].get<int64_t>()};
        design.pihat = QuadInt{ring, gens[1][0].get<int64_t>(), gens[1][1].get<int64_t>()};
        design.used_closed_fallback = j.value("used_closed_fallback", false);
        bool origin_omitted = j.value("subarray2_origin_omitted", false);

        const auto& subs = j.at("subarrays");
        if (!subs.is_array() || subs.size() != 2)
            throw std::invalid_argument("design import: expected exactly two subarrays");
        for (const auto& sub : subs) {
            int64_t label = sub.at("label").get<int64_t>();
            if (label != 1 && label != 2)
                throw std::invalid_argument("design import: subarray label must be 1 or 2");
            std::vector<Coord> pts = detail::parse_coords(sub.at("coords_basis"));
            if (sub.contains("coords_cartesian")) {
                const auto& cart = sub.at("coords_cartesian");
                if (cart.size() != pts.size())
                    throw std::invalid_argument("design import: coordinate lists disagree in length");
                for (size_t k = 0; k < pts.size(); ++k) {
                    auto [x, y] = embed_xy(ring, pts[k]);
                    double gx = cart[k][0].get<double>(), gy = cart[k][1].get<double>();
                    if (std::abs(gx - x) > 1e-9 * std::max(1.0, std::abs(x)) ||
                        std::abs(gy - y) > 1e-9 * std::max(1.0, std::abs(y)))
                        throw std::invalid_argument(
                            "design import: cartesian coordinates do not match the basis");
                }
            }
            (label == 1 ? design.subarray1 : design.subarray2) = std::move(pts);
        }
        if (origin_omitted) design.subarray2.push_back(Coord{0, 0});
        std::sort(design.subarray1.begin(), design.subarray1.end());
        std::sort(design.subarray2.begin(), design.subarray2.end());
        return design;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("design import: ") + e.what());
    }
}

// Sensor table with one row per physical sensor. The shared origin is listed
// under subarray 1 only, mirroring the JSON dedup convention.
inline std::string sensors_csv(const ArrayDesign& design) {
    std::string out = "x,y,subarray\n";
    auto emit = [&out, &design](const Coord& c, int label) {
        auto [x, y] = embed_xy(design.ring, c);
        out += detail::format_g12(x) + "," + detail::format_g12(y) + "," +
               std::to_string(label) + "\n";
    };
    for (const Coord& c : design.subarray1) emit(c, 1);
    for (const Coord& c : design.subarray2)
        if (c != Coord{0, 0}) emit(c, 2);
    return out;
}

// Coarray as a table of basis coordinates, Cartesian coordinates, and the
// number of sensor pairs producing each point.
inline std::string coarray_csv(const RingSpec& ring, const Coarray& co) {
    std::string out = "a,b,x,y,weight\n";
    for (const auto& entry : co.entries) {
        auto [x, y] = embed_xy(ring, entry.first);
        out += std::to_string(entry.first.a) + "," + std::to_string(entry.first.b) + "," +
               detail::format_g12(x) + "," + detail::format_g12(y) + "," +
               std::to_string(entry.second) + "\n";
    }
    return out;
}

enum class ExportFormat { Json, Csv };

inline std::string export_design(const ArrayDesign& design, ExportFormat format) {
    return format == ExportFormat::Json ? export_design(design) : sensors_csv(design);
}

}  // namespace crtarray
