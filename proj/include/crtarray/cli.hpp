#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "array_design.hpp"
#include "design_io.hpp"
#include "render_svg.hpp"
#include "ring.hpp"
#include "splitting.hpp"

namespace crtarray {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::invalid_argument("failed to write " + path);
}

inline void print_design_summary(const ArrayDesign& design) {
    std::cout << "variant: " << to_string(design.variant) << "\n";
    std::cout << "ring: D=" << design.ring.D << " (B=" << design.ring.B
              << ", C=" << design.ring.C << ")\n";
    std::cout << "p: " << design.p << "\n";
    std::cout << "generators: " << design.pi.str() << " and " << design.pihat.str() << "\n";
    std::cout << "subarray1: " << design.subarray1.size() << " sensors\n";
    std::cout << "subarray2: " << design.subarray2.size() << " sensors\n";
    std::cout << "total: " << sensor_count(design) << " sensors (origin shared)\n";
    if (design.variant == ArrayVariant::Hscrt)
        std::cout << "fallback representatives: " << (design.used_closed_fallback ? "yes" : "no")
                  << "\n";
}

}  // namespace detail

// Command line front end. Exit codes: 0 for success (split, verified,
// coprime), 1 when a mathematical check fails (inert or ramified prime, a
// design that does not verify, holes in the core, a non-coprime pair), 2 for
// usage errors, malformed input, and tests the ring cannot decide.
inline int run_cli(std::vector<std::string> args) {
    CLI::App app{"coprime sparse array designer over imaginary quadratic rings"};
    app.require_subcommand(1);

    auto* split = app.add_subcommand("split", "factor a rational prime into conjugate generators");
    int64_t split_d = 0, split_p = 0;
    split->add_option("-D", split_d, "ring discriminant")->required();
    split->add_option("-p", split_p, "rational prime")->required();

    auto* design = app.add_subcommand("design", "build a sensor array design");
    int64_t design_d = 0, design_p = 0;
    bool design_holefree = false;
    std::string design_out, design_csv;
    double design_spacing = 0.0;
    design->add_option("-D", design_d, "ring discriminant")->required();
    design->add_option("-p", design_p, "split rational prime")->required();
    design->add_flag("--hole-free", design_holefree,
                     "build the hole-free symmetric variant instead of the compact one");
    design->add_option("-o,--out", design_out, "write the design JSON here instead of stdout");
    design->add_option("--csv", design_csv, "also write a sensor table CSV");
    design->add_option("--spacing", design_spacing, "sensor spacing in metric units")
        ->check(CLI::PositiveNumber);

    auto* coarray = app.add_subcommand("coarray", "print the coarray of a stored design");
    std::string coarray_in;
    bool coarray_sum = false, coarray_check = false;
    coarray->add_option("file", coarray_in, "design JSON path")->required();
    coarray->add_flag("--sum", coarray_sum, "emit the sum coarray instead of differences");
    coarray->add_flag("--check-contiguous", coarray_check,
                      "check that the difference coarray covers the contiguous core");

    auto* verify = app.add_subcommand("verify", "re-check every invariant of a stored design");
    std::string verify_in;
    verify->add_option("file", verify_in, "design JSON path")->required();

    auto* render = app.add_subcommand("render", "draw a stored design as SVG");
    std::string render_in, render_out;
    bool render_voronoi = false, render_coarray = false;
    render->add_option("file", render_in, "design JSON path")->required();
    render->add_option("-o,--out", render_out, "output SVG path")->required();
    render->add_flag("--show-voronoi", render_voronoi,
                     "outline the period cells that frame the subarrays");
    render->add_flag("--coarray", render_coarray,
                     "add a second panel with the cross-difference coarray");

    auto* coprime = app.add_subcommand("coprime", "test coprimality of two ring elements");
    int64_t cop_d = 0;
    std::vector<int64_t> cop_m, cop_n;
    coprime->add_option("-D", cop_d, "ring discriminant")->required();
    coprime->add_option("--m", cop_m, "first element as coordinates a,b in the basis {1,q}")
        ->required()
        ->delimiter(',')
        ->expected(2);
    coprime->add_option("--n", cop_n, "second element as coordinates c,d")
        ->required()
        ->delimiter(',')
        ->expected(2);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(split)) {
            RingSpec ring = ring_from_d(split_d);
            SplitResult sp = split_prime(split_p, ring);
            std::cout << "D = " << ring.D << ", p = " << split_p << ": split\n";
            std::cout << "generator 1: " << sp.pi.str() << " (norm " << norm(sp.pi) << ")\n";
            std::cout << "generator 2: " << sp.pihat.str() << " (norm " << norm(sp.pihat)
                      << ")\n";
            return 0;
        }

        if (app.got_subcommand(design)) {
            RingSpec ring = ring_from_d(design_d);
            ArrayDesign d =
                design_holefree ? hscrt_array(ring, design_p) : crt_array(ring, design_p);
            if (design_spacing > 0.0) d.spacing = design_spacing;
            if (design_out.empty() && design_csv.empty()) {
                std::cout << export_design(d);
                return 0;
            }
            detail::print_design_summary(d);
            if (d.variant == ArrayVariant::Hscrt) {
                PhysicalMetrics metrics = physical_metrics(d);
                std::cout << "aperture area: " << detail::format_g12(metrics.area)
                          << "\naperture perimeter: " << detail::format_g12(metrics.perimeter)
                          << "\ncontiguous dof: " << metrics.dof_contiguous << "\n";
            }
            if (!design_out.empty()) {
                detail::write_file(design_out, export_design(d));
                std::cout << "wrote " << design_out << "\n";
            }
            if (!design_csv.empty()) {
                detail::write_file(design_csv, sensors_csv(d));
                std::cout << "wrote " << design_csv << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(coarray)) {
            ArrayDesign d = import_design(detail::read_file(coarray_in));
            if (coarray_check) {
                HoleReport holes = verify_hole_free(d);
                int64_t total = checked_mul(d.p, d.p);
                std::cout << "contiguous core: "
                          << total - static_cast<int64_t>(holes.holes.size()) << "/" << total
                          << " covered\n";
                for (size_t k = 0; k < holes.holes.size() && k < 8; ++k)
                    std::cout << "hole: (" << holes.holes[k].a << ", " << holes.holes[k].b
                              << ")\n";
                if (holes.holes.size() > 8)
                    std::cout << "... " << holes.holes.size() - 8 << " more holes\n";
                return holes.hole_free ? 0 : 1;
            }
            std::cout << coarray_csv(d.ring, coarray_sum ? sum_coarray(d) : cross_difference(d));
            return 0;
        }

        if (app.got_subcommand(verify)) {
            ArrayDesign d = import_design(detail::read_file(verify_in));
            detail::print_design_summary(d);
            VerifyReport report = verify_design(d);
            if (report.ok) {
                std::cout << "result: verified\n";
                return 0;
            }
            for (const std::string& failure : report.failures)
                std::cout << "failed: " << failure << "\n";
            std::cout << "result: not verified\n";
            return 1;
        }

        if (app.got_subcommand(render)) {
            ArrayDesign d = import_design(detail::read_file(render_in));
            RenderOptions opts;
            opts.show_voronoi = render_voronoi;
            opts.coarray_panel = render_coarray;
            detail::write_file(render_out, render_svg(d, opts));
            std::cout << "wrote " << render_out << "\n";
            return 0;
        }

        if (app.got_subcommand(coprime)) {
            RingSpec ring = ring_from_d(cop_d);
            QuadInt m{ring, cop_m[0], cop_m[1]};
            QuadInt n{ring, cop_n[0], cop_n[1]};
            bool result = are_coprime(m, n);
            std::cout << m.str() << " and " << n.str() << ": "
                      << (result ? "coprime" : "not coprime") << "\n";
            return result ? 0 : 1;
        }
    } catch (const unsupported_operation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace crtarray
