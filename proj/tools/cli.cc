// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "qwalk/entanglement.h"
#include "qwalk/experiments.h"
#include "qwalk/sequences.h"
#include "qwalk/version.h"
#include "qwalk/walk.h"

namespace qwalk::cli {

nlohmann::ordered_json RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "qwalk";
    j["version"] = VERSION;
    j["command"] = command;
    j["params"] = params;
    return j;
}

std::string RunManifest::header_line() const {
    return "# manifest: " + to_json().dump();
}

std::string format_number(double x) {
    if (x == 0) {
        return "0";
    }
    if (std::abs(x) < 1e-3) {
        return fmt::format("{:.11e}", x);
    }
    return fmt::format("{:.12g}", x);
}

double round_reported(double x) {
    if (x == 0 || !std::isfinite(x)) {
        return x;
    }
    std::string s = fmt::format("{:.11e}", x);
    double out = 0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

std::string strip_comment_header(std::string_view text) {
    size_t pos = 0;
    while (pos < text.size() && text[pos] == '#') {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            return {};
        }
        pos = nl + 1;
    }
    return std::string(text.substr(pos));
}

namespace {

constexpr int EXIT_RUNTIME = 1;
constexpr int EXIT_USAGE = 2;

struct TraceArgs {
    std::string seq;
    double theta = 0;
    double phi = 0;
    int steps = 1;
    bool degrees = false;
};

struct AverageArgs {
    std::string seq;
    int steps = 1;
    int samples = 100;
    uint64_t seed = 1;
};

struct FitArgs {
    std::string in;
    int t_min = DEFAULT_FIT_T_MIN;
    std::vector<int> extrapolate{400};
};

struct GridArgs {
    std::string seq;
    int t = 50;
    int theta_steps = 37;
    int phi_steps = 72;
};

struct CompareArgs {
    std::vector<std::string> seqs;
    std::vector<int> t_list;
    int samples = 1000;
    uint64_t seed = 1;
};

struct ParrondoArgs {
    std::string ab;
    std::string a;
    std::string b;
    int t = 50;
    int samples = 100;
    uint64_t seed = 1;
};

struct SearchArgs {
    std::string alphabet = "HFMX";
    int max_period = 3;
    int t = 10;
    int samples = 1000;
    uint64_t seed = 1;
    int top = 10;
};

std::string join_row(std::initializer_list<std::string> cells) {
    std::string out;
    bool first = true;
    for (const auto &c : cells) {
        if (!first) {
            out.push_back(',');
        }
        out += c;
        first = false;
    }
    out.push_back('\n');
    return out;
}

std::vector<CoinSequence> parse_sequences(const std::vector<std::string> &labels) {
    std::vector<CoinSequence> out;
    out.reserve(labels.size());
    for (const auto &l : labels) {
        out.push_back(CoinSequence::parse(l));
    }
    return out;
}

std::string run_trace(const TraceArgs &a, RunManifest &m) {
    CoinSequence seq = CoinSequence::parse(a.seq);
    InitialState init = a.degrees ? InitialState::from_degrees(a.theta, a.phi) : InitialState::make(a.theta, a.phi);
    m.params["seq"] = seq.label();
    m.params["theta"] = a.theta;
    m.params["phi"] = a.phi;
    m.params["degrees"] = a.degrees;
    m.params["steps"] = a.steps;

    std::string body = join_row({"t", "S", "pop0", "pop1", "re_coherence", "im_coherence", "E_minus", "E_plus"});
    for (const auto &r : trace_entanglement(init, seq, a.steps)) {
        body += join_row({
            std::to_string(r.step),
            format_number(r.schmidt_norm),
            format_number(r.pop0),
            format_number(r.pop1),
            format_number(r.coherence.real()),
            format_number(r.coherence.imag()),
            format_number(r.eigen_minus),
            format_number(r.eigen_plus),
        });
    }
    return body;
}

std::string run_average(const AverageArgs &a, unsigned threads, RunManifest &m) {
    CoinSequence seq = CoinSequence::parse(a.seq);
    m.params["seq"] = seq.label();
    m.params["steps"] = a.steps;
    m.params["samples"] = a.samples;
    m.params["seed"] = a.seed;
    AverageTrajectory traj = average_schmidt(seq, a.steps, a.samples, a.seed, threads);

    std::string body = join_row({"t", "mean_S", "std_S", "mean_S_over_sqrt2"});
    for (const auto &p : traj.points) {
        body += join_row({
            std::to_string(p.t),
            format_number(p.mean_s),
            format_number(p.std_s),
            format_number(p.mean_s / std::numbers::sqrt2),
        });
    }
    return body;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> cells;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    for (auto &c : cells) {
        while (!c.empty() && (c.back() == '\r' || c.back() == ' ')) {
            c.remove_suffix(1);
        }
        while (!c.empty() && c.front() == ' ') {
            c.remove_prefix(1);
        }
    }
    return cells;
}

template <typename T>
T parse_cell(std::string_view cell, size_t line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw std::invalid_argument(
            "malformed trajectory CSV: line " + std::to_string(line_no) + ": cannot parse '" + std::string(cell) +
            "'");
    }
    return value;
}

/// Reads a trajectory written by `qwalk average`.
AverageTrajectory read_trajectory_csv(std::istream &in, std::optional<nlohmann::json> &source_manifest) {
    AverageTrajectory traj;
    std::string line;
    size_t line_no = 0;
    std::optional<size_t> t_col;
    std::optional<size_t> mean_col;
    std::optional<size_t> std_col;
    size_t width = 0;
    bool have_header = false;
    constexpr std::string_view manifest_prefix = "# manifest: ";
    while (std::getline(in, line)) {
        line_no++;
        std::string_view view(line);
        if (view.starts_with('#')) {
            if (view.starts_with(manifest_prefix)) {
                source_manifest = nlohmann::json::parse(view.substr(manifest_prefix.size()), nullptr, false);
                if (source_manifest->is_discarded()) {
                    source_manifest.reset();
                }
            }
            continue;
        }
        if (view.empty() || view == "\r") {
            continue;
        }
        auto cells = split_csv_line(view);
        if (!have_header) {
            for (size_t k = 0; k < cells.size(); k++) {
                if (cells[k] == "t") {
                    t_col = k;
                } else if (cells[k] == "mean_S") {
                    mean_col = k;
                } else if (cells[k] == "std_S") {
                    std_col = k;
                }
            }
            if (!t_col || !mean_col) {
                throw std::invalid_argument("malformed trajectory CSV: header must name columns 't' and 'mean_S'");
            }
            width = cells.size();
            have_header = true;
            continue;
        }
        if (cells.size() != width) {
            throw std::invalid_argument(
                "malformed trajectory CSV: line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                " cells, expected " + std::to_string(width));
        }
        TrajectoryPoint p;
        p.t = parse_cell<int>(cells[*t_col], line_no);
        p.mean_s = parse_cell<double>(cells[*mean_col], line_no);
        p.std_s = std_col ? parse_cell<double>(cells[*std_col], line_no) : 0.0;
        if (!traj.points.empty() && p.t <= traj.points.back().t) {
            throw std::invalid_argument(
                "malformed trajectory CSV: steps must be strictly increasing (line " + std::to_string(line_no) + ")");
        }
        traj.points.push_back(p);
    }
    if (!have_header) {
        throw std::invalid_argument("malformed trajectory CSV: no header row");
    }
    if (source_manifest) {
        const auto &params = (*source_manifest)["params"];
        if (params.is_object()) {
            traj.sequence_label = params.value("seq", "");
            traj.samples_per_point = params.value("samples", 0);
            traj.seed = params.value("seed", uint64_t{0});
        }
    }
    return traj;
}

std::string run_fit(const FitArgs &a, RunManifest &m) {
    m.params["in"] = a.in;
    m.params["tmin"] = a.t_min;
    m.params["extrapolate"] = a.extrapolate;
    std::ifstream in(a.in);
    if (!in) {
        throw std::runtime_error("cannot open trajectory file '" + a.in + "'");
    }
    std::optional<nlohmann::json> source;
    AverageTrajectory traj = read_trajectory_csv(in, source);
    FitResult fit = log_fit(traj, a.t_min, a.extrapolate);

    nlohmann::ordered_json j;
    j["manifest"] = m.to_json();
    if (source) {
        j["source_manifest"] = *source;
    }
    j["sequence"] = traj.sequence_label;
    j["a"] = round_reported(fit.slope);
    j["b"] = round_reported(fit.intercept);
    j["residual_rms"] = round_reported(fit.residual_rms);
    j["t_min"] = fit.t_min;
    j["t_max"] = fit.t_max;
    j["points_used"] = fit.points_used;
    nlohmann::ordered_json preds = nlohmann::ordered_json::array();
    for (const auto &p : fit.extrapolation) {
        nlohmann::ordered_json row;
        row["t"] = p.t;
        row["S"] = round_reported(p.schmidt);
        row["S_over_sqrt2"] = round_reported(p.ratio);
        preds.push_back(row);
    }
    j["predictions"] = preds;
    return j.dump(2) + "\n";
}

std::string run_grid(const GridArgs &a, unsigned threads, RunManifest &m) {
    CoinSequence seq = CoinSequence::parse(a.seq);
    m.params["seq"] = seq.label();
    m.params["t"] = a.t;
    m.params["theta_steps"] = a.theta_steps;
    m.params["phi_steps"] = a.phi_steps;
    GridResult g = grid_schmidt(seq, a.t, a.theta_steps, a.phi_steps, threads);

    std::string body = join_row({"theta", "phi", "S"});
    for (size_t i = 0; i < g.theta_axis.size(); i++) {
        for (size_t j = 0; j < g.phi_axis.size(); j++) {
            body += join_row({format_number(g.theta_axis[i]), format_number(g.phi_axis[j]), format_number(g.at(i, j))});
        }
    }
    return body;
}

std::string comparison_csv(const ComparisonTable &table) {
    std::string body = join_row({"t", "rank", "sequence", "mean_S", "std_S", "mean_S_over_sqrt2"});
    for (const auto &r : table.rows) {
        body += join_row({
            std::to_string(r.t),
            std::to_string(r.rank),
            r.sequence_label,
            format_number(r.mean_s),
            format_number(r.std_s),
            format_number(r.mean_ratio),
        });
    }
    return body;
}

std::string run_compare(const CompareArgs &a, unsigned threads, RunManifest &m) {
    auto seqs = parse_sequences(a.seqs);
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (const auto &s : seqs) {
        labels.push_back(s.label());
    }
    m.params["seqs"] = labels;
    m.params["t_list"] = a.t_list;
    m.params["samples"] = a.samples;
    m.params["seed"] = a.seed;
    return comparison_csv(compare_sequences(seqs, a.t_list, a.samples, a.seed, threads));
}

std::string run_parrondo(const ParrondoArgs &a, unsigned threads, RunManifest &m) {
    CoinSequence ab = CoinSequence::parse(a.ab);
    CoinSequence sa = CoinSequence::parse(a.a);
    CoinSequence sb = CoinSequence::parse(a.b);
    m.params["ab"] = ab.label();
    m.params["a"] = sa.label();
    m.params["b"] = sb.label();
    m.params["t"] = a.t;
    m.params["samples"] = a.samples;
    m.params["seed"] = a.seed;
    ParrondoReport r = parrondo_check(ab, sa, sb, a.t, a.samples, a.seed, threads);

    nlohmann::ordered_json j;
    j["manifest"] = m.to_json();
    j["ab"] = r.combined_label;
    j["a"] = r.a_label;
    j["b"] = r.b_label;
    j["t"] = r.t;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["mean_ab"] = round_reported(r.mean_combined);
    j["mean_a"] = round_reported(r.mean_a);
    j["mean_b"] = round_reported(r.mean_b);
    j["margin_a"] = round_reported(r.margin_over_a);
    j["margin_b"] = round_reported(r.margin_over_b);
    j["verdict"] = r.parrondo;
    return j.dump(2) + "\n";
}

std::string run_search(const SearchArgs &a, unsigned threads, RunManifest &m) {
    std::vector<CoinName> alphabet;
    for (char c : a.alphabet) {
        alphabet.push_back(parse_coin_name(c));
    }
    if (alphabet.empty()) {
        throw std::invalid_argument("alphabet must contain at least one coin");
    }
    m.params["alphabet"] = a.alphabet;
    m.params["max_period"] = a.max_period;
    m.params["t"] = a.t;
    m.params["samples"] = a.samples;
    m.params["seed"] = a.seed;
    m.params["top"] = a.top;
    auto candidates = enumerate_patterns(alphabet, a.max_period);
    ComparisonTable table = rank_sequences(candidates, a.t, a.samples, a.seed, threads);
    if (a.top > 0 && table.rows.size() > static_cast<size_t>(a.top)) {
        table.rows.resize(static_cast<size_t>(a.top));
    }
    return comparison_csv(table);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Discrete-time quantum walks with deterministic Parrondo coin sequences", "qwalk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", VERSION);

    std::string out_path;
    unsigned threads = 0;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", out_path, "Output file (default: stdout)");
        sub->add_option("--threads", threads, "Worker threads, 0 = hardware concurrency; results do not depend on it");
    };
    auto positive = CLI::PositiveNumber;

    TraceArgs trace;
    auto *trace_cmd = app.add_subcommand("trace", "Per-step entanglement of a single walk");
    trace_cmd->add_option("--seq", trace.seq, "Coin sequence, e.g. XXH")->required();
    trace_cmd->add_option("--theta", trace.theta, "Initial polar angle")->required();
    trace_cmd->add_option("--phi", trace.phi, "Initial relative phase");
    trace_cmd->add_option("--steps", trace.steps, "Number of steps")->required()->check(positive);
    trace_cmd->add_flag("--degrees", trace.degrees, "Angles are in degrees");
    add_common(trace_cmd);

    AverageArgs average;
    auto *average_cmd = app.add_subcommand("average", "Mean Schmidt norm over random initial states");
    average_cmd->add_option("--seq", average.seq, "Coin sequence")->required();
    average_cmd->add_option("--steps", average.steps, "Number of steps")->required()->check(positive);
    average_cmd->add_option("--samples", average.samples, "Random initial states")->check(positive)->capture_default_str();
    average_cmd->add_option("--seed", average.seed, "Sampling seed")->capture_default_str();
    add_common(average_cmd);

    FitArgs fit;
    auto *fit_cmd = app.add_subcommand("fit", "Logarithmic fit and extrapolation of an averaged trajectory");
    fit_cmd->add_option("--in", fit.in, "Trajectory CSV from `qwalk average`")->required();
    fit_cmd->add_option("--tmin", fit.t_min, "First step included in the fit")->capture_default_str();
    fit_cmd->add_option("--extrapolate", fit.extrapolate, "Steps to extrapolate to")
        ->delimiter(',')
        ->check(positive)
        ->capture_default_str();
    add_common(fit_cmd);

    GridArgs grid;
    auto *grid_cmd = app.add_subcommand("grid", "Schmidt norm on a (theta, phi) grid");
    grid_cmd->add_option("--seq", grid.seq, "Coin sequence")->required();
    grid_cmd->add_option("--t", grid.t, "Number of steps")->check(positive)->capture_default_str();
    grid_cmd->add_option("--theta-steps", grid.theta_steps, "Theta samples over [0, pi]")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    grid_cmd->add_option("--phi-steps", grid.phi_steps, "Phi samples over [0, 2 pi)")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    add_common(grid_cmd);

    CompareArgs compare;
    auto *compare_cmd = app.add_subcommand("compare", "Rank sequences by mean Schmidt norm at several steps");
    compare_cmd->add_option("--seqs", compare.seqs, "Comma-separated coin sequences")->required()->delimiter(',');
    compare_cmd->add_option("--t-list", compare.t_list, "Comma-separated steps")
        ->required()
        ->delimiter(',')
        ->check(positive);
    compare_cmd->add_option("--samples", compare.samples, "Random initial states")->check(positive)->capture_default_str();
    compare_cmd->add_option("--seed", compare.seed, "Sampling seed")->capture_default_str();
    add_common(compare_cmd);

    ParrondoArgs parrondo;
    auto *parrondo_cmd = app.add_subcommand("parrondo", "Check whether a two-coin sequence beats both single coins");
    parrondo_cmd->add_option("--ab", parrondo.ab, "Combined sequence")->required();
    parrondo_cmd->add_option("--a", parrondo.a, "First single-coin sequence")->required();
    parrondo_cmd->add_option("--b", parrondo.b, "Second single-coin sequence")->required();
    parrondo_cmd->add_option("--t", parrondo.t, "Number of steps")->check(positive)->capture_default_str();
    parrondo_cmd->add_option("--samples", parrondo.samples, "Random initial states")->check(positive)->capture_default_str();
    parrondo_cmd->add_option("--seed", parrondo.seed, "Sampling seed")->capture_default_str();
    add_common(parrondo_cmd);

    SearchArgs search;
    auto *search_cmd = app.add_subcommand("search", "Enumerate periodic sequences and rank them");
    search_cmd->add_option("--alphabet", search.alphabet, "Coins to draw from, e.g. HX")->capture_default_str();
    search_cmd->add_option("--max-period", search.max_period, "Longest pattern")
        ->check(CLI::Range(1, MAX_ENUMERATION_PERIOD))
        ->capture_default_str();
    search_cmd->add_option("--t", search.t, "Number of steps")->check(positive)->capture_default_str();
    search_cmd->add_option("--samples", search.samples, "Random initial states")->check(positive)->capture_default_str();
    search_cmd->add_option("--seed", search.seed, "Sampling seed")->capture_default_str();
    search_cmd->add_option("--top", search.top, "Rows to keep, 0 = all")->check(CLI::NonNegativeNumber)->capture_default_str();
    add_common(search_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "qwalk: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    RunManifest manifest;
    manifest.command = app.get_subcommands().front()->get_name();
    manifest.params["threads"] = threads;
    std::string body;
    bool json_output = false;
    try {
        if (*trace_cmd) {
            body = run_trace(trace, manifest);
        } else if (*average_cmd) {
            body = run_average(average, threads, manifest);
        } else if (*fit_cmd) {
            body = run_fit(fit, manifest);
            json_output = true;
        } else if (*grid_cmd) {
            body = run_grid(grid, threads, manifest);
        } else if (*compare_cmd) {
            body = run_compare(compare, threads, manifest);
        } else if (*parrondo_cmd) {
            body = run_parrondo(parrondo, threads, manifest);
            json_output = true;
        } else if (*search_cmd) {
            body = run_search(search, threads, manifest);
        }
    } catch (const std::exception &e) {
        err << "qwalk " << manifest.command << ": " << e.what() << "\n";
        return EXIT_RUNTIME;
    }

    std::string text = json_output ? body : manifest.header_line() + "\n" + body;
    if (out_path.empty()) {
        out << text;
        out.flush();
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "qwalk " << manifest.command << ": cannot open output file '" << out_path << "'\n";
        return EXIT_RUNTIME;
    }
    file << text;
    if (!file) {
        err << "qwalk " << manifest.command << ": failed writing '" << out_path << "'\n";
        return EXIT_RUNTIME;
    }
    return 0;
}

}  // namespace qwalk::cli
