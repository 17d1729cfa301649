// toricsplit: decides diagonal splitness of complete toric varieties,
// constructs the splitting maps, and verifies them against the brute-force
// chart oracles. See README.md for the file formats and exit codes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric/io.hpp"
#include "toric/oracle.hpp"
#include "toric/sections.hpp"
#include "toric/splitting.hpp"
#include "toric/svg.hpp"

using namespace toric;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct RunConfig {
    std::string fan_file;
    std::string builtin;
    long long q = 0;
    long long q_min = 0, q_max = 0;
    int n = 2;
    long long bound = 3;
    std::string d_csv;
    long long kmax = 4;
    bool json = false;
    std::string out;
    bool assume_complete = false;
    unsigned seed = 0;
    std::string recheck;
    int workers = 1;
};

void add_fan_options(CLI::App* cmd, RunConfig& cfg) {
    auto* fan = cmd->add_option("--fan", cfg.fan_file, "fan JSON file");
    auto* builtin =
        cmd->add_option("--builtin", cfg.builtin,
                        "builtin fan: pn:<n>, hirzebruch:<a>, product:<spec>x<spec>[x...]");
    fan->excludes(builtin);
    builtin->excludes(fan);
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_flag("--json", cfg.json, "emit JSON instead of text");
    cmd->add_option("--out", cfg.out, "write output to a file instead of stdout");
    cmd->add_flag("--assume-complete", cfg.assume_complete,
                  "treat a fan whose completeness is not verified as complete "
                  "(boundedness of the splitting polytope is still checked)");
    cmd->add_option("--seed", cfg.seed,
                    "seed for randomized sampling; current commands are fully deterministic");
    cmd->add_option("--workers", cfg.workers, "worker threads; output is identical for any count")
        ->check(CLI::PositiveNumber);
}

Fan parse_builtin(const std::string& spec) {
    if (spec.rfind("pn:", 0) == 0) return projective_space(std::stoi(spec.substr(3)));
    if (spec.rfind("hirzebruch:", 0) == 0) return hirzebruch(Int(spec.substr(11)));
    if (spec.rfind("product:", 0) == 0) {
        std::string rest = spec.substr(8);
        std::vector<std::string> factors;
        size_t pos = 0;
        while (true) {
            size_t x = rest.find('x', pos);
            if (x == std::string::npos) {
                factors.push_back(rest.substr(pos));
                break;
            }
            factors.push_back(rest.substr(pos, x - pos));
            pos = x + 1;
        }
        if (factors.size() < 2) throw std::invalid_argument("product needs at least two factors");
        Fan out = parse_builtin(factors[0]);
        for (size_t i = 1; i < factors.size(); ++i) out = product_fan(out, parse_builtin(factors[i]));
        return out;
    }
    throw std::invalid_argument("unknown builtin fan '" + spec + "'");
}

struct NamedFan {
    Fan fan;
    std::string name;
};

NamedFan load_fan(const RunConfig& cfg) {
    if (!cfg.builtin.empty()) return {parse_builtin(cfg.builtin), cfg.builtin};
    if (!cfg.fan_file.empty()) return {load_fan_file(cfg.fan_file, &std::cerr), cfg.fan_file};
    throw std::invalid_argument("need exactly one fan source (--fan or --builtin)");
}

void require_usable_completeness(const Fan& fan, const RunConfig& cfg) {
    if (fan.completeness() != Completeness::Complete && !cfg.assume_complete)
        throw std::invalid_argument("fan is not verified complete (" +
                                    std::string(to_string(fan.completeness())) +
                                    "); pass --assume-complete to override");
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
}

DecisionOptions decision_options(const RunConfig& cfg) {
    DecisionOptions opt;
    opt.assume_complete = cfg.assume_complete;
    opt.workers = cfg.workers;
    return opt;
}

std::string fan_summary(const NamedFan& nf) {
    std::ostringstream s;
    s << "fan " << nf.name << ": dim " << nf.fan.dim() << ", " << nf.fan.rays().size()
      << " rays, " << nf.fan.max_cones().size() << " maximal cones, "
      << to_string(nf.fan.completeness());
    return s.str();
}

std::vector<Rat> parse_divisor(const std::string& csv, size_t ray_count) {
    std::vector<Rat> d;
    if (csv.empty()) return std::vector<Rat>(ray_count, Rat(1));
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) d.push_back(parse_rational(item));
    if (d.size() != ray_count)
        throw std::invalid_argument("--d needs one coefficient per ray (" +
                                    std::to_string(ray_count) + ")");
    return d;
}

int cmd_recheck(const RunConfig& cfg, const NamedFan& nf) {
    std::ifstream in(cfg.recheck);
    if (!in) throw std::runtime_error("cannot open " + cfg.recheck);
    Json j;
    in >> j;
    if (cfg.q != 0 && detail::int_from_json(j.at("q")) != cfg.q)
        throw std::invalid_argument("--q does not match the q stored in " + cfg.recheck);
    std::ostringstream s;
    if (j.contains("classes")) {
        SplitCertificate cert = certificate_from_json(j);
        if (auto err = validate_certificate(nf.fan, cert)) {
            s << "certificate INVALID: " << *err << "\n";
            emit(cfg, s.str());
            return kExitNegative;
        }
        s << "certificate valid: " << cert.reps.size()
          << " classes re-validated (reduction, strict interiority, coverage)\n";
        emit(cfg, s.str());
        return kExitPositive;
    }
    if (j.contains("class")) {
        NonSplitWitness w = witness_from_json(j);
        if (auto err = validate_witness(nf.fan, w)) {
            s << "witness INVALID: " << *err << "\n";
            emit(cfg, s.str());
            return kExitNegative;
        }
        s << "witness confirmed: class " << w.missing.str()
          << " has no strict-interior representative over " << w.box.str() << "\n";
        emit(cfg, s.str());
        return kExitPositive;
    }
    throw std::invalid_argument(cfg.recheck + " holds neither a certificate nor a witness");
}

int cmd_check(const RunConfig& cfg) {
    NamedFan nf = load_fan(cfg);
    if (!cfg.recheck.empty()) return cmd_recheck(cfg, nf);
    if (cfg.q < 2) throw std::invalid_argument("check needs --q >= 2");
    require_usable_completeness(nf.fan, cfg);
    SplitDecision d = is_diagonally_split(nf.fan, cfg.q, decision_options(cfg));

    if (cfg.json) {
        Json j = is_split(d) ? certificate_to_json(std::get<SplitCertificate>(d))
                             : witness_to_json(std::get<NonSplitWitness>(d));
        emit(cfg, j.dump(2) + "\n");
        return is_split(d) ? kExitPositive : kExitNegative;
    }

    std::ostringstream s;
    s << fan_summary(nf) << "\n";
    if (is_split(d)) {
        const auto& cert = std::get<SplitCertificate>(d);
        s << "q = " << cfg.q << ": diagonally split (" << cert.reps.size() << "/"
          << cert.reps.size() << " classes covered)\n";
        if (cert.reps.size() <= 64) {
            for (const auto& [cls, rep] : cert.reps)
                s << "  class " << cls.str() << "  representative " << rep.str() << "\n";
        } else {
            s << "  (" << cert.reps.size() << " representatives; use --json for the full certificate)\n";
        }
    } else {
        const auto& w = std::get<NonSplitWitness>(d);
        s << "q = " << cfg.q << ": NOT diagonally split\n";
        s << "  witness class " << w.missing.str()
          << " has no representative strictly inside the splitting polytope\n";
        s << "  exhausted search box " << w.box.str() << "\n";
    }
    emit(cfg, s.str());
    return is_split(d) ? kExitPositive : kExitNegative;
}

int cmd_scan(const RunConfig& cfg) {
    NamedFan nf = load_fan(cfg);
    if (cfg.q_min < 2 || cfg.q_max < cfg.q_min)
        throw std::invalid_argument("scan needs 2 <= --q-min <= --q-max");
    require_usable_completeness(nf.fan, cfg);
    auto rows = split_q_scan(nf.fan, cfg.q_min, cfg.q_max, decision_options(cfg));

    if (cfg.json) {
        emit(cfg, scan_to_json(rows).dump(2) + "\n");
        return kExitPositive;
    }
    std::ostringstream s;
    s << "# scan " << nf.name << " q=" << cfg.q_min << ".." << cfg.q_max << "\n";
    s << "q\tsplit\tclasses\twitness\n";
    for (const auto& row : rows) {
        s << row.q.str() << "\t" << (row.split ? "yes" : "no") << "\t" << row.classes.str() << "\t"
          << (row.witness ? row.witness->str() : "-") << "\n";
    }
    emit(cfg, s.str());
    return kExitPositive;
}

int cmd_verify(const RunConfig& cfg) {
    NamedFan nf = load_fan(cfg);
    if (cfg.q < 2) throw std::invalid_argument("verify needs --q >= 2");
    if (cfg.n < 2) throw std::invalid_argument("verify needs --n >= 2");
    if (cfg.bound < 0) throw std::invalid_argument("verify needs --bound >= 0");
    require_usable_completeness(nf.fan, cfg);

    SplitDecision d = is_diagonally_split(nf.fan, cfg.q, decision_options(cfg));
    if (!is_split(d)) {
        std::ostringstream s;
        s << fan_summary(nf) << "\n";
        s << "not diagonally split at q = " << cfg.q << " (witness class "
          << std::get<NonSplitWitness>(d).missing.str() << "); nothing to verify\n";
        emit(cfg, s.str());
        return kExitNegative;
    }
    const auto& cert = std::get<SplitCertificate>(d);

    struct Check {
        std::string name;
        OracleReport report;
    };
    std::vector<Check> checks;
    SplittingMap diag = diagonal_splitting(nf.fan, cfg.q, cert);
    checks.push_back({"splitting-law(pi_Delta)", verify_splitting_law(diag, cfg.bound)});
    checks.push_back(
        {"diagonal-compatibility", verify_diagonal_compatibility(nf.fan, cfg.q, diag, cfg.bound)});
    if (cfg.n > 2) {
        SplittingMap semi = semidiagonal_splitting(nf.fan, cfg.q, cfg.n, cert);
        checks.push_back({"splitting-law(pi_semidiagonal)", verify_splitting_law(semi, cfg.bound)});
        for (int i = 1; i < cfg.n; ++i)
            checks.push_back({"semidiagonal-compatibility(i=" + std::to_string(i) + ")",
                              verify_semidiagonal_compatibility(nf.fan, cfg.q, cfg.n, i, semi,
                                                                cfg.bound)});
    }

    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.report.pass;

    if (cfg.json) {
        Json j;
        j["q"] = cfg.q;
        j["n"] = cfg.n;
        j["bound"] = cfg.bound;
        j["pass"] = all_pass;
        j["checks"] = Json::array();
        for (const auto& c : checks) {
            Json cj = report_to_json(c.report);
            cj["name"] = c.name;
            j["checks"].push_back(std::move(cj));
        }
        emit(cfg, j.dump(2) + "\n");
        return all_pass ? kExitPositive : kExitNegative;
    }

    std::ostringstream s;
    s << fan_summary(nf) << "\n";
    s << "q = " << cfg.q << ", n = " << cfg.n << ", oracle bound B = " << cfg.bound << "\n";
    for (const auto& c : checks) {
        s << "  " << c.name << ": " << (c.report.pass ? "pass" : "FAIL") << " ("
          << c.report.elements_checked << " elements)\n";
        if (c.report.counterexample) {
            s << "    counterexample on chart " << c.report.counterexample->chart << ":";
            for (const auto& e : c.report.counterexample->elements) s << " " << e.str();
            s << " -> " << c.report.counterexample->image.str() << "\n";
        }
    }
    s << (all_pass ? "overall: pass\n" : "overall: FAIL\n");
    emit(cfg, s.str());
    return all_pass ? kExitPositive : kExitNegative;
}

int cmd_plot(const RunConfig& cfg) {
    NamedFan nf = load_fan(cfg);
    if (nf.fan.dim() != 2) throw std::invalid_argument("plot needs a 2-dimensional fan");
    if (cfg.q < 2) throw std::invalid_argument("plot needs --q >= 2");
    require_usable_completeness(nf.fan, cfg);
    SplitDecision d = is_diagonally_split(nf.fan, cfg.q, decision_options(cfg));
    std::ostringstream caption;
    caption << "splitting polytope of " << nf.name << ", q=" << cfg.q
            << (is_split(d) ? " (split)" : " (not split)");
    emit(cfg, render_decision_svg(nf.fan, cfg.q, d, caption.str()));
    return kExitPositive;
}

int cmd_basis(const RunConfig& cfg) {
    NamedFan nf = load_fan(cfg);
    if (cfg.q < 1) throw std::invalid_argument("basis needs --q >= 1");
    auto basis = splitting_basis(nf.fan, cfg.q);
    if (cfg.json) {
        Json j;
        j["q"] = cfg.q;
        j["den"] = cfg.q;
        j["points"] = Json::array();
        for (const auto& a : basis) j["points"].push_back(detail::json_vector(a.numerators()));
        emit(cfg, j.dump(2) + "\n");
        return kExitPositive;
    }
    std::ostringstream s;
    s << fan_summary(nf) << "\n";
    s << "Hom basis points (strict interior of the anticanonical polytope), q = " << cfg.q << ": "
      << basis.size() << "\n";
    for (const auto& a : basis) s << "  " << a.str() << "\n";
    emit(cfg, s.str());
    return kExitPositive;
}

int cmd_normality(const RunConfig& cfg) {
    NamedFan nf = load_fan(cfg);
    if (cfg.kmax < 1) throw std::invalid_argument("normality needs --kmax >= 1");
    std::vector<Rat> d = parse_divisor(cfg.d_csv, nf.fan.rays().size());
    HPolytope p = divisor_polytope(nf.fan, d);
    NormalityReport r = normality_check(p, cfg.kmax);
    if (cfg.json) {
        emit(cfg, normality_to_json(r).dump(2) + "\n");
        return r.pass ? kExitPositive : kExitNegative;
    }
    std::ostringstream s;
    s << fan_summary(nf) << "\n";
    s << "degree-one generation up to k = " << cfg.kmax << ": " << (r.pass ? "pass" : "FAIL")
      << " (" << r.points_checked << " points)\n";
    if (r.counterexample)
        s << "  point " << r.counterexample->second.str() << " of " << r.counterexample->first.str()
          << "P is not a sum of " << r.counterexample->first.str() << " polytope points\n";
    emit(cfg, s.str());
    return r.pass ? kExitPositive : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagonal splitting of complete toric varieties"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* check = app.add_subcommand("check", "decide diagonal splitness for one q");
    add_fan_options(check, cfg);
    add_common_options(check, cfg);
    check->add_option("--q", cfg.q, "the denominator q (>= 2)");
    check->add_option("--recheck", cfg.recheck,
                      "re-validate a previously emitted certificate/witness JSON without searching");

    auto* scan = app.add_subcommand("scan", "decide diagonal splitness over a q range");
    add_fan_options(scan, cfg);
    add_common_options(scan, cfg);
    scan->add_option("--q-min", cfg.q_min, "first q")->required();
    scan->add_option("--q-max", cfg.q_max, "last q")->required();

    auto* verify = app.add_subcommand(
        "verify", "construct the splitting maps and run the brute-force chart oracles");
    add_fan_options(verify, cfg);
    add_common_options(verify, cfg);
    verify->add_option("--q", cfg.q, "the denominator q (>= 2)")->required();
    verify->add_option("--n", cfg.n, "verify semidiagonals in the n-fold product (default 2)");
    verify->add_option("--bound", cfg.bound, "oracle truncation bound B (default 3)");

    auto* plot = app.add_subcommand("plot", "SVG figure of the splitting polytope and the q-grid");
    add_fan_options(plot, cfg);
    add_common_options(plot, cfg);
    plot->add_option("--q", cfg.q, "the denominator q (>= 2)")->required();

    auto* basis = app.add_subcommand("basis", "list the Hom-space basis points");
    add_fan_options(basis, cfg);
    add_common_options(basis, cfg);
    basis->add_option("--q", cfg.q, "the denominator q (>= 1)")->required();

    auto* normality = app.add_subcommand("normality",
                                         "degree-one generation check for a divisor polytope");
    add_fan_options(normality, cfg);
    add_common_options(normality, cfg);
    normality->add_option("--d", cfg.d_csv,
                          "comma-separated divisor coefficients, one per ray (default all 1)");
    normality->add_option("--kmax", cfg.kmax, "largest dilation factor to check (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(cfg);
        if (scan->parsed()) return cmd_scan(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (plot->parsed()) return cmd_plot(cfg);
        if (basis->parsed()) return cmd_basis(cfg);
        if (normality->parsed()) return cmd_normality(cfg);
        std::cerr << "no command\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
