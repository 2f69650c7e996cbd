#include "cli.hpp"

#include "vtcode/vtcode.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace vtcode::cli {
namespace {

struct Options {
    std::size_t n = 0;
    int a1 = -1;
    std::int64_t a2 = -1;
    bool best = false;
    bool all_params = false;
    bool no_erasure = false;
    std::size_t cap = kDefaultEnumerationCap;
    std::string word;
    std::string received;
    std::size_t d = 0;
    std::size_t e = 0;
    std::vector<std::size_t> n_list;
    std::string n_grid;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

std::vector<std::size_t> parse_grid(const std::string& spec)
{
    std::vector<std::size_t> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        std::size_t pos = 0;
        const auto value = std::stoull(item, &pos);
        if (pos != item.size()) {
            throw std::invalid_argument("bad grid field '" + item + "'");
        }
        parts.push_back(static_cast<std::size_t>(value));
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("--n-grid expects start:stop:factor");
    }
    return geometric_grid(parts[0], parts[1], parts[2]);
}

const char* pass_label(bool pass) { return pass ? "PASS" : "FAIL"; }

int cmd_codebook(const Options& o, CLI::App& sub, std::ostream& out)
{
    CodeParams params;
    if (o.best) {
        if (sub.count("--a1") || sub.count("--a2")) {
            throw CLI::ValidationError("--best cannot be combined with --a1/--a2");
        }
        params = best_params(o.n, o.cap);
    } else {
        if (!sub.count("--a1") || !sub.count("--a2")) {
            throw CLI::ValidationError("codebook needs --a1 and --a2, or --best");
        }
        params = CodeParams{o.n, o.a1, o.a2};
    }
    write_codebook(out, enumerate(params, o.cap));
    return kOk;
}

int cmd_corrupt(const Options& o, std::ostream& out)
{
    out << corrupt(parse_word(o.word), {o.d, o.e}).to_string() << '\n';
    return kOk;
}

int cmd_decode(const Options& o, CLI::App& sub, std::ostream& out, std::ostream& err)
{
    const CodeParams params{o.n, o.a1, o.a2};
    params.validate();
    const auto y = parse_received(o.received, o.n);
    if (o.no_erasure && y.has_erasure()) {
        throw std::invalid_argument("--no-erasure given but the received word contains '?'");
    }
    if (sub.count("--e") && y.erasure_pos() != o.e) {
        throw std::invalid_argument("--e " + std::to_string(o.e) +
                                    " does not match the position of '?' in the received word");
    }
    const auto outcome = decode(y, params);
    if (!outcome) {
        err << "decode failed: " << to_string(outcome.failure().reason) << '\n';
        return kCheckFailed;
    }
    out << outcome.recovered().word.to_string() << '\n';
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::vector<CodeParams> targets;
    if (o.all_params) {
        for (int a1 = 0; a1 < 3; ++a1) {
            for (std::size_t a2 = 0; a2 <= o.n; ++a2) {
                targets.push_back({o.n, a1, static_cast<std::int64_t>(a2)});
            }
        }
    } else {
        targets.push_back(best_params(o.n, o.cap));
    }
    bool all_pass = true;
    for (const auto& params : targets) {
        const auto book = enumerate(params, o.cap);
        const std::string prefix = "n=" + std::to_string(params.n) +
                                   " a1=" + std::to_string(params.a1) +
                                   " a2=" + std::to_string(params.a2) +
                                   " size=" + std::to_string(book.size());
        const auto code = verify_code(book);
        const auto dec = verify_decoder(book);
        const auto balls = deletion_balls_disjoint(book);
        out << prefix << " verify_code " << code.render() << '\n';
        out << prefix << " verify_decoder " << dec.render() << '\n';
        out << prefix << " deletion_balls " << balls.render() << '\n';
        all_pass = all_pass && code.pass() && dec.pass() && balls.pass();
    }
    out << "overall " << pass_label(all_pass) << '\n';
    return all_pass ? kOk : kCheckFailed;
}

int cmd_bounds(const Options& o, CLI::App& sub, std::ostream& out)
{
    const bool has_list = sub.count("--n-list") > 0;
    const bool has_grid = sub.count("--n-grid") > 0;
    if (has_list == has_grid) {
        throw CLI::ValidationError("bounds needs exactly one of --n-list or --n-grid");
    }
    const auto ns = has_list ? o.n_list : parse_grid(o.n_grid);
    write_bounds_csv(out, bounds_table(ns));
    return kOk;
}

int cmd_simulate(const Options& o, CLI::App& sub, std::ostream& out)
{
    CodeParams params;
    if (sub.count("--a1") || sub.count("--a2")) {
        if (!sub.count("--a1") || !sub.count("--a2")) {
            throw CLI::ValidationError("--a1 and --a2 must be given together");
        }
        params = CodeParams{o.n, o.a1, o.a2};
    } else if (o.n <= kDefaultEnumerationCap) {
        params = best_params(o.n);
    } else {
        params = CodeParams{o.n, 0, 0};
    }
    const auto report = simulate(params, o.trials, o.seed);
    out << "n=" << params.n << " a1=" << params.a1 << " a2=" << params.a2
        << " trials=" << report.trials << " seed=" << report.seed
        << " failures=" << report.failures << '\n';
    if (report.first_failure) {
        out << report.first_failure->render() << '\n';
    }
    return report.failures == 0 ? kOk : kCheckFailed;
}

int cmd_runs(const Options& o, std::ostream& out)
{
    const auto s = run_statistics(o.n, o.cap);
    out << std::fixed << std::setprecision(6);
    out << "n=" << s.n << " words=" << s.words << " total_runs=" << s.total_runs
        << " mean_runs=" << s.mean_runs()
        << " mean_equals_half_n_plus_1=" << (s.mean_is_exact() ? "yes" : "no") << '\n';
    out << "threshold=" << s.threshold << " un_size=" << s.in_un
        << " un_fraction=" << s.un_fraction() << " guarantee=" << s.un_guarantee()
        << " guarantee_holds=" << (s.un_guarantee_holds() ? "yes" : "no") << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Two-parameter Varshamov-Tenengolts code for ordered deletion-erasures",
                 "vtcode"};
    app.require_subcommand(1);
    Options o;

    const auto add_n = [&o](CLI::App* sub) {
        sub->add_option("--n", o.n, "Word length")->required()->check(CLI::Range(std::size_t{3}, std::size_t{1} << 30));
    };
    const auto add_cap = [&o](CLI::App* sub) {
        sub->add_option("--cap", o.cap, "Largest n for exhaustive enumeration")
            ->capture_default_str()
            ->check(CLI::Range(std::size_t{3}, std::size_t{40}));
    };

    auto* codebook = app.add_subcommand("codebook", "List the words of VT_{a1,a2}(n)");
    add_n(codebook);
    codebook->add_option("--a1", o.a1, "Weight residue mod 3")->check(CLI::Range(0, 2));
    codebook->add_option("--a2", o.a2, "Weighted checksum residue mod n+1");
    codebook->add_flag("--best", o.best, "Use the largest class");
    add_cap(codebook);

    auto* corrupt_cmd = app.add_subcommand("corrupt", "Apply an ordered deletion-erasure");
    corrupt_cmd->add_option("--word", o.word, "Binary word")->required();
    corrupt_cmd->add_option("--d", o.d, "Deleted position (1-based)")->required();
    corrupt_cmd->add_option("--e", o.e, "Erasure position (1-based, e = n for none)")->required();

    auto* decode_cmd = app.add_subcommand("decode", "Recover a codeword from a received word");
    decode_cmd->add_option("--received", o.received, "Received word over 0, 1 and ?")->required();
    add_n(decode_cmd);
    decode_cmd->add_option("--a1", o.a1, "Weight residue mod 3")->required()->check(CLI::Range(0, 2));
    decode_cmd->add_option("--a2", o.a2, "Weighted checksum residue mod n+1")->required();
    auto* e_opt = decode_cmd->add_option("--e", o.e, "Erasure position (1-based)");
    decode_cmd->add_flag("--no-erasure", o.no_erasure, "The received word has no erasure")
        ->excludes(e_opt);

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive capability and decoder checks");
    add_n(verify_cmd);
    verify_cmd->add_flag("--all-params", o.all_params, "Check all 3(n+1) classes");
    add_cap(verify_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "CSV table of the redundancy bounds");
    bounds_cmd->add_option("--n-list", o.n_list, "Comma-separated word lengths")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--n-grid", o.n_grid, "Geometric grid start:stop:factor");

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo round trips");
    add_n(simulate_cmd);
    simulate_cmd->add_option("--trials", o.trials, "Number of trials")->required();
    simulate_cmd->add_option("--seed", o.seed, "Generator seed")->required();
    simulate_cmd->add_option("--a1", o.a1, "Weight residue mod 3")->check(CLI::Range(0, 2));
    simulate_cmd->add_option("--a2", o.a2, "Weighted checksum residue mod n+1");

    auto* runs_cmd = app.add_subcommand("runs", "Exhaustive run-count statistics");
    add_n(runs_cmd);
    add_cap(runs_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (codebook->parsed()) return cmd_codebook(o, *codebook, out);
        if (corrupt_cmd->parsed()) return cmd_corrupt(o, out);
        if (decode_cmd->parsed()) return cmd_decode(o, *decode_cmd, out, err);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (bounds_cmd->parsed()) return cmd_bounds(o, *bounds_cmd, out);
        if (simulate_cmd->parsed()) return cmd_simulate(o, *simulate_cmd, out);
        if (runs_cmd->parsed()) return cmd_runs(o, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace vtcode::cli
