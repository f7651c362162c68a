#include "polarmem/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polarmem/construction.hpp"
#include "polarmem/csv.hpp"
#include "polarmem/decoder.hpp"
#include "polarmem/errors.hpp"
#include "polarmem/geometry.hpp"
#include "polarmem/lab.hpp"
#include "polarmem/sim.hpp"
#include "polarmem/spec_io.hpp"

namespace polarmem::cli {

namespace {

double round12(double v) {
    if (!std::isfinite(v)) return v;
    return std::stod(format_number(v));
}

// Writes to the named file, or to `out` when the path is empty or "-".
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (path.empty() || path == "-") {
        body(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    body(file);
}

enum class FrameFormat { Hex, Bits };

std::string write_frame(const BitVector& bits, FrameFormat fmt) {
    if (fmt == FrameFormat::Hex) return bits_to_hex(bits);
    std::string s;
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

BitVector read_frame(const std::string& line, std::size_t length, FrameFormat fmt) {
    if (fmt == FrameFormat::Hex) return hex_to_bits(line, length);
    if (line.size() != length) throw ValidationError("bit frame has the wrong length");
    BitVector bits(length);
    for (std::size_t k = 0; k < length; ++k) {
        if (line[k] != '0' && line[k] != '1') throw ValidationError("bit frame contains a non-binary character");
        bits[k] = line[k] == '1';
    }
    return bits;
}

// Applies fn to every line of `in`, writing one result line per frame.
void for_each_frame(std::istream& in, std::ostream& out, const std::function<std::string(const std::string&)>& fn) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out << fn(line) << '\n';
    }
}

struct Options {
    unsigned m = 1;
    int n = 1;
    int n_max = 10;
    double eps = 0.5;
    double rate = 0.5;
    double delta = 1e-3;
    std::string output;
    std::string spec_path;
    std::string channel;
    std::string format = "hex";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string which;
    unsigned m_max = 0;
    std::vector<double> targets{1e4, 1e6};
};

FrameFormat parse_format(const std::string& f) { return f == "bits" ? FrameFormat::Bits : FrameFormat::Hex; }

int cmd_analyze(const Options& o, std::ostream& out) {
    const auto r = geometry_report(o.m, o.n_max);
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["phi"] = round12(r.phi);
    j["p_plus"] = round12(r.p_plus);
    j["p_minus"] = round12(r.p_minus);
    j["p_star"] = round12(r.p_star);
    j["exponent"] = round12(r.exponent);
    j["log2_phi"] = round12(std::log2(r.phi));
    auto levels = nlohmann::ordered_json::array();
    for (const auto& lv : r.levels) {
        nlohmann::ordered_json e;
        e["n"] = lv.n;
        e["N"] = lv.length;
        e["chi_enc"] = lv.chi_enc;
        e["chi_dec"] = lv.chi_dec;
        if (lv.length > 1) {
            e["eta_enc"] = round12(complexity_ratio(lv.n, o.m, ComplexityKind::Encoding));
            e["eta_dec"] = round12(complexity_ratio(lv.n, o.m, ComplexityKind::Decoding));
        } else {
            e["eta_enc"] = nullptr;
            e["eta_dec"] = nullptr;
        }
        levels.push_back(e);
    }
    j["levels"] = levels;
    emit(o.output, out, [&](std::ostream& s) { s << j.dump(2) << '\n'; });
    return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
    if (!(o.rate >= 0.0 && o.rate <= 1.0)) throw ValidationError("rate must lie in [0, 1]");
    const auto rel = bec_reliabilities(o.n, o.m, o.eps);
    const auto K = static_cast<std::size_t>(std::llround(o.rate * static_cast<double>(rel.size())));
    const auto spec = CodeSpec::make(o.m, o.n, NoiseModel::bec(o.eps), select_info_set(rel, K));
    emit(o.output, out, [&](std::ostream& s) { s << code_spec_to_json(spec); });
    return kExitOk;
}

int cmd_encode(const Options& o, std::istream& in, std::ostream& out) {
    const auto spec = read_code_spec(o.spec_path);
    const auto fmt = parse_format(o.format);
    for_each_frame(in, out, [&](const std::string& line) {
        return write_frame(encode_message(read_frame(line, spec.K(), fmt), spec), fmt);
    });
    return kExitOk;
}

int cmd_decode(const Options& o, std::istream& in, std::ostream& out) {
    const auto spec = read_code_spec(o.spec_path);
    const auto fmt = parse_format(o.format);
    DecoderWorkspace ws(DecoderPlan::shared(spec.n, spec.m));
    std::vector<double> llr(spec.N);
    constexpr double inf = std::numeric_limits<double>::infinity();
    for_each_frame(in, out, [&](const std::string& line) {
        const auto y = read_frame(line, spec.N, fmt);
        for (std::size_t k = 0; k < y.size(); ++k) llr[k] = y[k] ? -inf : inf;
        ws.reset();
        const auto r = decode(llr, spec, ws);
        return write_frame(extract_message(r.u_hat, spec), fmt);
    });
    return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    const auto spec = read_code_spec(o.spec_path);
    const NoiseModel noise = o.channel.empty() ? spec.design_channel : parse_noise_model(o.channel);
    const auto rep = simulate_bler(spec, noise, o.trials, o.seed, o.threads);
    CsvTable t;
    t.header = {"m", "n", "N", "K", "rate", "channel", "parameter", "trials", "block_errors", "bler",
                "wilson_95_low", "wilson_95_high", "seed", "rng"};
    t.rows.push_back({std::to_string(spec.m), std::to_string(spec.n), std::to_string(spec.N),
                      std::to_string(spec.K()), format_number(spec.rate()), noise.name(),
                      format_number(noise.parameter), std::to_string(rep.trials), std::to_string(rep.block_errors),
                      format_number(rep.bler), format_number(rep.wilson_95_low), format_number(rep.wilson_95_high),
                      std::to_string(rep.seed), rep.rng});
    emit(o.output, out, [&](std::ostream& s) { write_csv(s, t); });
    return kExitOk;
}

int cmd_polarize(const Options& o, std::ostream& out) {
    const auto trace = cutoff_sequence(o.n, o.m, o.eps, o.delta);
    CsvTable t;
    t.header = {"n", "N", "mean_J", "mean_I", "high_fraction", "low_fraction"};
    for (const auto& r : trace.rows)
        t.rows.push_back({std::to_string(r.n), std::to_string(r.length), format_number(r.mean_j),
                          format_number(r.mean_i), format_number(r.high_fraction), format_number(r.low_fraction)});
    emit(o.output, out, [&](std::ostream& s) { write_csv(s, t); });
    return kExitOk;
}

int cmd_figures(const Options& o, std::ostream& out) {
    CsvTable t;
    if (o.which == "complexity") {
        const auto rows = complexity_figure(memory_range(1, o.m_max ? o.m_max : 20), o.targets);
        t.header = {"m", "target", "n", "N", "eta_enc", "eta_dec"};
        for (const auto& r : rows)
            t.rows.push_back({std::to_string(r.m), format_number(r.target), std::to_string(r.n), std::to_string(r.N),
                              format_number(r.eta_enc), format_number(r.eta_dec)});
    } else {
        const auto rows = exponent_figure(memory_range(1, o.m_max ? o.m_max : 50));
        t.header = {"m", "p_plus"};
        for (const auto& r : rows) t.rows.push_back({std::to_string(r.m), format_number(r.p_plus)});
    }
    emit(o.output, out, [&](std::ostream& s) { write_csv(s, t); });
    return kExitOk;
}

}  // namespace

std::string bits_to_hex(const std::vector<std::uint8_t>& bits) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s((bits.size() + 3) / 4, '0');
    for (std::size_t k = 0; k < s.size(); ++k) {
        unsigned nib = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t idx = 4 * k + b;
            if (idx < bits.size() && bits[idx]) nib |= 8u >> b;
        }
        s[k] = digits[nib];
    }
    return s;
}

std::vector<std::uint8_t> hex_to_bits(const std::string& frame, std::size_t length) {
    if (frame.size() != (length + 3) / 4) throw ValidationError("hex frame has the wrong length");
    std::vector<std::uint8_t> bits(length);
    for (std::size_t k = 0; k < frame.size(); ++k) {
        const char c = frame[k];
        unsigned nib;
        if (c >= '0' && c <= '9')
            nib = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nib = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            nib = static_cast<unsigned>(c - 'A' + 10);
        else
            throw ValidationError("hex frame contains a non-hex character");
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t idx = 4 * k + b;
            const bool set = nib & (8u >> b);
            if (idx < length)
                bits[idx] = set;
            else if (set)
                throw ValidationError("hex frame has non-zero padding bits");
        }
    }
    return bits;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polar codes with higher-order memory: analysis, construction, coding and simulation"};
    app.name(args.empty() ? "polarmem" : args.front());
    app.require_subcommand(1);
    Options o;

    auto* analyze = app.add_subcommand("analyze", "Geometry report as JSON");
    analyze->add_option("--m", o.m, "Memory order")->required()->check(CLI::Range(1u, 1000u));
    analyze->add_option("--n-max", o.n_max, "Largest level")->check(CLI::Range(0, 10000));
    analyze->add_option("-o,--output", o.output, "Output path (default stdout)");

    auto* construct = app.add_subcommand("construct", "BEC construction, writes a code spec");
    construct->add_option("--m", o.m, "Memory order")->required()->check(CLI::Range(1u, 1000u));
    construct->add_option("--n", o.n, "Level")->required()->check(CLI::Range(0, 10000));
    construct->add_option("--eps", o.eps, "Design erasure probability")->required();
    construct->add_option("--rate", o.rate, "Code rate K/N")->required();
    construct->add_option("-o,--output", o.output, "Output path (default stdout)");

    auto* encode_cmd = app.add_subcommand("encode", "Encode newline-delimited message frames from stdin");
    encode_cmd->add_option("--spec", o.spec_path, "Code spec JSON")->required();
    encode_cmd->add_option("--format", o.format, "Frame format")->check(CLI::IsMember({"hex", "bits"}));

    auto* decode_cmd = app.add_subcommand("decode", "Decode newline-delimited hard-decision codeword frames");
    decode_cmd->add_option("--spec", o.spec_path, "Code spec JSON")->required();
    decode_cmd->add_option("--format", o.format, "Frame format")->check(CLI::IsMember({"hex", "bits"}));

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo block error rate");
    simulate->add_option("--spec", o.spec_path, "Code spec JSON")->required();
    simulate->add_option("--channel", o.channel, "Noise, e.g. bec:0.3 or bsc:0.1 (default: design channel)");
    simulate->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", o.seed, "RNG seed");
    simulate->add_option("--threads", o.threads, "Worker threads (default POLARMEM_THREADS or all cores)");
    simulate->add_option("-o,--output", o.output, "Output CSV (default stdout)");

    auto* polarize = app.add_subcommand("polarize", "Exact BEC process trace as CSV");
    polarize->add_option("--m", o.m, "Memory order")->required()->check(CLI::Range(1u, 1000u));
    polarize->add_option("--n", o.n, "Largest level")->required()->check(CLI::Range(0, 10000));
    polarize->add_option("--eps", o.eps, "Erasure probability")->required();
    polarize->add_option("--delta", o.delta, "Polarization threshold");
    polarize->add_option("-o,--output", o.output, "Output CSV (default stdout)");

    auto* figures = app.add_subcommand("figures", "Complexity or exponent tables as CSV");
    figures->add_option("--which", o.which, "complexity or exponent")
        ->required()
        ->check(CLI::IsMember({"complexity", "exponent"}));
    figures->add_option("--m-max", o.m_max, "Largest memory order")->check(CLI::Range(1u, 200u));
    figures->add_option("--targets", o.targets, "Target code lengths, comma separated (complexity only)")->delimiter(',');
    figures->add_option("-o,--output", o.output, "Output CSV (default stdout)");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(o, out);
        if (*construct) return cmd_construct(o, out);
        if (*encode_cmd) return cmd_encode(o, in, out);
        if (*decode_cmd) return cmd_decode(o, in, out);
        if (*simulate) return cmd_simulate(o, out);
        if (*polarize) return cmd_polarize(o, out);
        if (*figures) return cmd_figures(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace polarmem::cli
