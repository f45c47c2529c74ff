// ietx: command-line front end for the interval exchange library.
//
// Exit codes: 0 success, 2 usage error, 3 format error, 4 capacity error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "iet/errors.hpp"
#include "iet/flows.hpp"
#include "iet/golden.hpp"
#include "iet/growth.hpp"
#include "iet/interval_exchange.hpp"
#include "iet/io.hpp"
#include "iet/metric.hpp"
#include "iet/rotation_verifier.hpp"
#include "iet/scalar.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitCapacity = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

iet::Scalar scalar_arg(const std::string& text) {
    try {
        return iet::parse_scalar(text);
    } catch (const iet::ParseError& e) {
        throw UsageError(e.what());
    }
}

std::vector<iet::Scalar> scalar_list_arg(const std::string& text) {
    std::vector<iet::Scalar> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(scalar_arg(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

iet::IntervalExchange load_iet(const std::string& path) {
    iet::ParsedIet parsed = iet::parse_iet_file(path);
    for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    return parsed.map;
}

void save_iet(const std::string& path, const iet::IntervalExchange& f) {
    iet::write_iet_file(path, f);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw iet::ParseError(path + ": cannot open file for writing");
    return out;
}

// filenames cannot carry '/', so scalar text in sample filenames uses '_'
std::string decode_filename_scalar(std::string text) {
    std::replace(text.begin(), text.end(), '_', '/');
    return text;
}

void print_verdict(const iet::RotationVerdict& verdict) {
    if (const auto* ok = std::get_if<iet::ConsistentWithRotation>(&verdict)) {
        std::cout << "verdict ConsistentWithRotation\n";
        std::cout << "max-delta " << ok->max_delta << "\n";
        for (const iet::RatePiece& p : ok->rates) {
            std::cout << "rate [" << iet::format_scalar(p.left) << ","
                      << iet::format_scalar(p.right) << ") "
                      << (p.rate ? iet::format_scalar(*p.rate) : std::string("none")) << "\n";
        }
        return;
    }
    if (const auto* no = std::get_if<iet::NotRotation>(&verdict)) {
        std::cout << "verdict NotRotation\n";
        if (const auto* h = std::get_if<iet::HomomorphismWitness>(&no->witness)) {
            std::cout << "witness homomorphism s=" << iet::format_scalar(h->s)
                      << " t=" << iet::format_scalar(h->t) << "\n";
        } else if (const auto* g = std::get_if<iet::DeltaGrowthWitness>(&no->witness)) {
            std::cout << "witness delta-growth times=";
            for (size_t i = 0; i < g->times.size(); ++i)
                std::cout << (i ? "," : "") << iet::format_scalar(g->times[i]);
            std::cout << " deltas=";
            for (size_t i = 0; i < g->deltas.size(); ++i)
                std::cout << (i ? "," : "") << g->deltas[i];
            std::cout << "\n";
        } else if (const auto* l = std::get_if<iet::LocalTranslationWitness>(&no->witness)) {
            std::cout << "witness local-translation [" << iet::format_scalar(l->left) << ","
                      << iet::format_scalar(l->right)
                      << ") inconsistent-measure=" << iet::format_scalar(l->inconsistent_measure)
                      << "\n";
        }
        return;
    }
    std::cout << "verdict Inconclusive\n";
    std::cout << "reason " << std::get<iet::Inconclusive>(verdict).reason << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact interval exchange toolkit"};
    app.require_subcommand(1);

    // compose A B -o C
    std::string in_a, in_b, out_path, scalar_text;
    auto* compose_cmd = app.add_subcommand("compose", "write the composition A after B");
    compose_cmd->add_option("A", in_a)->required();
    compose_cmd->add_option("B", in_b)->required();
    compose_cmd->add_option("-o,--output", out_path)->required();

    auto* invert_cmd = app.add_subcommand("invert", "write the inverse of A");
    invert_cmd->add_option("A", in_a)->required();
    invert_cmd->add_option("-o,--output", out_path)->required();

    auto* apply_cmd = app.add_subcommand("apply", "print A(x)");
    apply_cmd->add_option("A", in_a)->required();
    apply_cmd->add_option("x", scalar_text)->required();

    auto* dist_cmd = app.add_subcommand("dist", "print the integral metric d(A, B)");
    dist_cmd->add_option("A", in_a)->required();
    dist_cmd->add_option("B", in_b)->required();

    auto* sup_cmd = app.add_subcommand("sup", "print the uniform displacement of A against B");
    sup_cmd->add_option("A", in_a)->required();
    sup_cmd->add_option("B", in_b)->required();

    auto* delta_cmd = app.add_subcommand("delta", "print the discontinuity count of A");
    delta_cmd->add_option("A", in_a)->required();

    auto* fixset_cmd = app.add_subcommand("fixset", "print the fixed set of A");
    fixset_cmd->add_option("A", in_a)->required();

    std::string len_text, alpha_text;
    auto* torus_cmd = app.add_subcommand("torus", "write a standard torus action element");
    torus_cmd->add_option("--len", len_text, "comma-separated block lengths")->required();
    torus_cmd->add_option("--alpha", alpha_text, "comma-separated torus coordinates")->required();
    torus_cmd->add_option("-o,--output", out_path)->required();

    std::string t_text;
    auto* flow_cmd = app.add_subcommand("flow", "evaluate a rotation flow at a time");
    flow_cmd->add_option("SPEC", in_a)->required();
    flow_cmd->add_option("--t", t_text)->required();
    flow_cmd->add_option("-o,--output", out_path)->required();

    auto* verify_cmd = app.add_subcommand("verify-rotation", "check sampled maps against the rotation laws");
    verify_cmd->add_option("DIR", in_a)->required();

    std::string map_path, rt_text, tsv_path;
    std::vector<std::string> rr_texts;
    int power_count = 0;
    int max_pieces = 1 << 20;
    auto* growth_cmd = app.add_subcommand("growth", "record delta(h^n) for n = 1..N");
    growth_cmd->add_option("--map", map_path, "iet file for h");
    growth_cmd->add_option("--rt", rt_text, "rotation time t for h = r_t o r_{s,delta}");
    growth_cmd->add_option("--rr", rr_texts, "restricted rotation s delta")->expected(2);
    growth_cmd->add_option("-N", power_count, "largest power")->required();
    growth_cmd->add_option("--tsv", tsv_path, "write the (n, delta, diff) table here");
    growth_cmd->add_option("--max-pieces", max_pieces, "partition-size capacity bound");

    std::string family;
    int golden_n = 0;
    auto* golden_cmd = app.add_subcommand("golden", "write a golden-sequence element");
    golden_cmd->add_option("family", family)->check(CLI::IsMember({"fn", "gn"}))->required();
    golden_cmd->add_option("n", golden_n)->required();
    golden_cmd->add_option("-o,--output", out_path)->required();

    auto* plot_cmd = app.add_subcommand("plot", "emit graph segments of A as TSV");
    plot_cmd->add_option("A", in_a)->required();
    plot_cmd->add_option("--tsv", tsv_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    if (compose_cmd->parsed()) {
        save_iet(out_path, compose(load_iet(in_a), load_iet(in_b)));
    } else if (invert_cmd->parsed()) {
        save_iet(out_path, load_iet(in_a).inverse());
    } else if (apply_cmd->parsed()) {
        iet::Scalar x = scalar_arg(scalar_text);
        std::cout << iet::format_scalar(load_iet(in_a).apply(x)) << "\n";
    } else if (dist_cmd->parsed()) {
        std::cout << iet::format_scalar(distance(load_iet(in_a), load_iet(in_b))) << "\n";
    } else if (sup_cmd->parsed()) {
        std::cout << iet::format_scalar(sup_displacement(load_iet(in_a), load_iet(in_b))) << "\n";
    } else if (delta_cmd->parsed()) {
        std::cout << load_iet(in_a).delta() << "\n";
    } else if (fixset_cmd->parsed()) {
        std::cout << iet::format_interval_set(load_iet(in_a).fixed_set()) << "\n";
    } else if (torus_cmd->parsed()) {
        std::vector<iet::Scalar> lambda = scalar_list_arg(len_text);
        iet::TorusPoint alpha(scalar_list_arg(alpha_text));
        save_iet(out_path, torus_element(lambda, alpha));
    } else if (flow_cmd->parsed()) {
        iet::FlowSpec spec = iet::parse_flow_file(in_a);
        save_iet(out_path, flow_at(spec, scalar_arg(t_text)));
    } else if (verify_cmd->parsed()) {
        std::vector<iet::FlowSample> samples;
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(in_a)) {
            if (entry.path().extension() == ".iet") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            std::string stem = path.stem().string();
            if (stem.rfind("t=", 0) != 0)
                throw iet::ParseError(path.string() + ": sample files must be named t=<scalar>.iet");
            iet::Scalar t = iet::parse_scalar(decode_filename_scalar(stem.substr(2)));
            samples.push_back({std::move(t), load_iet(path.string())});
        }
        print_verdict(verify_rotation_family(std::move(samples)));
    } else if (growth_cmd->parsed()) {
        iet::IntervalExchange h = iet::IntervalExchange::identity();
        if (!map_path.empty()) {
            if (!rt_text.empty() || !rr_texts.empty())
                throw UsageError("growth: give either --map or --rt/--rr, not both");
            h = load_iet(map_path);
        } else if (!rt_text.empty() && rr_texts.size() == 2) {
            h = compose(iet::IntervalExchange::rotation(scalar_arg(rt_text)),
                        iet::restricted_rotation(scalar_arg(rr_texts[0]), scalar_arg(rr_texts[1])));
        } else {
            throw UsageError("growth: need --map FILE or both --rt and --rr");
        }
        iet::GrowthReport report = iet::growth(h, power_count, max_pieces);
        if (!tsv_path.empty()) {
            std::ofstream out = open_out(tsv_path);
            write_growth_tsv(out, report);
        }
        std::cout << "N " << power_count << "\n";
        std::cout << "delta-first " << report.powers.front().second << "\n";
        std::cout << "delta-last " << report.powers.back().second << "\n";
        if (report.eventually_constant_difference) {
            std::cout << "eventually-constant-difference C="
                      << report.eventually_constant_difference->first
                      << " onset=" << report.eventually_constant_difference->second << "\n";
        } else {
            std::cout << "eventually-constant-difference none\n";
        }
        if (power_count >= 2)
            std::cout << "slope " << iet::Rational(report.slope_estimate).get_str() << "\n";
    } else if (golden_cmd->parsed()) {
        save_iet(out_path, family == "fn" ? iet::golden_fn(golden_n) : iet::golden_gn(golden_n));
    } else if (plot_cmd->parsed()) {
        std::ofstream out = open_out(tsv_path);
        write_plot_tsv(out, load_iet(in_a));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const iet::CapacityError& e) {
        std::cerr << "error: capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const iet::ParseError& e) {
        std::cerr << "error: format: " << e.what() << "\n";
        return kExitFormat;
    } catch (const iet::FieldMismatchError& e) {
        std::cerr << "error: format: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::domain_error& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: format: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
