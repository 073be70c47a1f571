// SPDX-License-Identifier: MIT
// leja: Leja points, Lebesgue constants, Green-function bounds and I_tau checks.
#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leja/appendix.hpp"
#include "leja/bounds.hpp"
#include "leja/compact_set.hpp"
#include "leja/errors.hpp"
#include "leja/green.hpp"
#include "leja/interp.hpp"
#include "leja/io.hpp"
#include "leja/keylemma.hpp"
#include "leja/leja.hpp"
#include "leja/parallel.hpp"

namespace fs = std::filesystem;
using namespace leja;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct SetOptions {
    std::string set_json;
    std::string set_file;
    int cantor_depth = -1;
    double cantor_ratio = 1.0 / 3.0;

    [[nodiscard]] CompactSet build() const {
        const int given = !set_json.empty() + !set_file.empty() + (cantor_depth >= 0);
        if (given > 1) throw ValidationError("give only one of --set, --set-file, --cantor-depth");
        if (!set_json.empty()) return parse_set_spec(set_json);
        if (!set_file.empty()) return parse_set_spec(read_file(set_file));
        if (cantor_depth >= 0) return cantor_approx(cantor_depth, cantor_ratio);
        return make_union({{-1.0, 1.0}});
    }
};

struct Common {
    SetOptions set;
    std::size_t n = 0;
    std::size_t n_min = 1;
    std::size_t n_max = 0;
    double tau = 1.0;
    std::uint64_t seed = 0;
    double density = kDefaultLejaDensity;
    double lebesgue_density = kDefaultLebesgueDensity;
    std::string x0 = "right";
    std::string out;
    std::string out_dir;
    bool json = false;
};

void add_set_options(CLI::App* app, SetOptions& s) {
    app->add_option("--set", s.set_json, R"(set as JSON: {"intervals": [[lo, hi], ...]} or {"cantor": {...}})");
    app->add_option("--set-file", s.set_file, "file holding the set JSON");
    app->add_option("--cantor-depth", s.cantor_depth, "Cantor generation depth");
    app->add_option("--cantor-ratio", s.cantor_ratio, "Cantor ratio in (0, 1/2)");
}

X0Policy x0_policy(const std::string& s) {
    if (s == "right") return X0Policy::right_end();
    if (s == "left") return X0Policy::left_end();
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos == s.size()) return X0Policy::given(v);
    } catch (const std::exception&) {
    }
    throw ValidationError("--x0 must be left, right or a number");
}

PointSequence make_sequence(const CompactSet& k, std::size_t n, const Common& c) {
    if (c.tau == 1.0) return leja_sequence(k, n, x0_policy(c.x0), c.density);
    return quasi_leja_sequence(k, n, c.tau, c.seed, c.density, x0_policy(c.x0));
}

// Writes to a file, or to stdout when the path is empty or "-".
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        if (const auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw ValidationError("cannot write " + path);
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void write_json(const std::string& path, const Json& j) {
    Output o(path);
    o.stream() << j.dump(2) << '\n';
}

Json config_echo(const Common& c, const CompactSet& k) {
    Json j;
    j["set"] = set_to_json(k);
    j["tau"] = c.tau;
    j["seed"] = c.seed;
    j["grid_density"] = c.density;
    j["lebesgue_density"] = c.lebesgue_density;
    j["x0"] = c.x0;
    return j;
}

std::pair<std::size_t, std::size_t> n_range(const Common& c) {
    const std::size_t hi = c.n_max ? c.n_max : c.n;
    if (hi == 0 || c.n_min == 0 || c.n_min > hi) throw ValidationError("empty n range: need 1 <= n-min <= n-max");
    return {c.n_min, hi};
}

void check_tau(double tau) {
    if (!(tau > 0.0 && tau <= 1.0)) throw ValidationError("--tau must lie in (0, 1]");
}

int cmd_points(const Common& c) {
    if (c.n == 0) throw ValidationError("--n must be >= 1");
    check_tau(c.tau);
    const auto k = c.set.build();
    const auto seq = make_sequence(k, c.n, c);
    {
        Output o(c.out);
        write_sequence_csv(o.stream(), seq);
    }
    if (!c.out.empty() && c.out != "-") {
        Json meta = sequence_to_json(seq);
        meta["config"] = config_echo(c, k);
        write_json(c.out + ".json", meta);
    }
    return kExitOk;
}

std::vector<LebesgueReport> lebesgue_table(const CompactSet& k, const PointSequence& seq, std::size_t lo,
                                           std::size_t hi, double density) {
    std::vector<LebesgueReport> reps(hi - lo + 1);
    parallel_for(reps.size(), [&](std::size_t i) {
        const std::size_t n = lo + i;
        const InterpolationOperator op(std::vector<double>(seq.points.begin(), seq.points.begin() + n));
        reps[i] = lebesgue_constant(op, k, density);
    });
    return reps;
}

int cmd_lebesgue(const Common& c, std::size_t profile_n, const std::string& profile_out) {
    check_tau(c.tau);
    const auto [lo, hi] = n_range(c);
    const auto k = c.set.build();
    const auto seq = make_sequence(k, std::max(hi, profile_n), c);
    const auto reps = lebesgue_table(k, seq, lo, hi, c.lebesgue_density);
    {
        Output o(c.out);
        o.stream() << "n,lambda,argmax\n";
        for (const auto& r : reps) o.stream() << r.n << ',' << fmt_num(r.lambda_n) << ',' << fmt_num(r.argmax_x) << '\n';
    }
    for (const auto& r : reps) {
        if (r.coarse_grid_warning)
            std::cerr << "warning: n=" << r.n << ": sample spacing exceeds half the smallest node gap\n";
    }
    if (profile_n > 0) {
        const InterpolationOperator op(std::vector<double>(seq.points.begin(), seq.points.begin() + profile_n));
        Output o(profile_out);
        write_profile_csv(o.stream(), lebesgue_profile(op, k, c.lebesgue_density));
    }
    return kExitOk;
}

int cmd_bound(const Common& c, const DeltaGridSpec& spec, const std::string& merged) {
    check_tau(c.tau);
    const auto [lo, hi] = n_range(c);
    const auto k = c.set.build();
    const auto model = build_green_model(k);
    GTable g(model);
    const std::size_t count = hi - lo + 1;
    std::vector<BoundReport> t1(count), t2(count);
    parallel_for(count, [&](std::size_t i) {
        t1[i] = theorem1_bound_opt(k, g, lo + i, spec);
        t2[i] = theorem2_bound_opt(k, g, lo + i, c.tau, spec);
    });
    const auto seq = make_sequence(k, hi, c);
    const auto lam = lebesgue_table(k, seq, lo, hi, c.lebesgue_density);

    const std::string dir = c.out_dir.empty() ? "." : c.out_dir;
    fs::create_directories(dir);
    const double d = diam(k);
    bool all_ok = true;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = lo + i;
        Output o((fs::path(dir) / ("bound_n" + std::to_string(n) + ".csv")).string());
        o.stream() << "delta,G,bound,bound_tau\n";
        for (std::size_t r = 0; r < t1[i].delta_grid.size(); ++r) {
            const double delta = t1[i].delta_grid[r], gv = t1[i].G_values[r];
            const double b2 = theorem2_log_bound(d, n, c.tau, delta, gv);
            o.stream() << fmt_num(delta) << ',' << fmt_num(gv) << ',' << fmt_num(t1[i].bound_values[r]) << ','
                       << fmt_num(b2 > 709.0 ? INFINITY : std::exp(b2)) << '\n';
        }
    }
    {
        const std::string path = merged.empty() ? (fs::path(dir) / "lambda_vs_bound.csv").string() : merged;
        Output o(path);
        o.stream() << "n,lambda,theorem1_bound,theorem1_delta,theorem2_bound,theorem2_delta,ok\n";
        for (std::size_t i = 0; i < count; ++i) {
            const double bound = c.tau == 1.0 ? t1[i].best_bound : t2[i].best_bound;
            const bool ok = lam[i].lambda_n <= bound;
            all_ok = all_ok && ok;
            o.stream() << lo + i << ',' << fmt_num(lam[i].lambda_n) << ',' << fmt_num(t1[i].best_bound) << ','
                       << fmt_num(t1[i].best_delta) << ',' << fmt_num(t2[i].best_bound) << ','
                       << fmt_num(t2[i].best_delta) << ',' << (ok ? 1 : 0) << '\n';
        }
    }
    Json meta;
    meta["config"] = config_echo(c, k);
    meta["delta_grid"] = {{"lo_factor", spec.lo_factor}, {"hi_factor", spec.hi_factor}, {"points", spec.points}};
    Json reports = Json::array();
    for (std::size_t i = 0; i < count; ++i) reports.push_back({{"theorem1", bound_to_json(t1[i])}, {"theorem2", bound_to_json(t2[i])}});
    meta["reports"] = reports;
    write_json((fs::path(dir) / "bound.json").string(), meta);
    return all_ok ? kExitOk : kExitVerify;
}

struct ItauRow {
    std::string kind;
    std::size_t id = 0;
    KeyLemmaReport lemma;
    ITauResult exact;
    double naive = 0.0;
    double family = 0.0;
    double every_step = NAN;
    std::size_t q = 0;
    double tau = 1.0;
};

ItauRow evaluate(const std::string& kind, std::size_t id, const ITauInstance& inst) {
    ItauRow r;
    r.kind = kind;
    r.id = id;
    r.q = inst.q();
    r.tau = inst.tau();
    r.exact = i_tau_exact(inst);
    r.lemma = check_key_lemma(inst);
    r.naive = strategy_naive(inst).log_value;
    r.family = strategy_lambda_family(inst).log_value;
    return r;
}

int cmd_itau(const Common& c, const std::string& instances, std::size_t random_count, std::size_t q_max,
             std::size_t worst_q) {
    check_tau(c.tau);
    if (q_max < 1) throw ValidationError("--q-max must be >= 1");
    std::vector<std::pair<std::string, ITauInstance>> todo;
    if (!instances.empty()) {
        Json j;
        try {
            j = Json::parse(read_file(instances));
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("instance file: invalid JSON: ") + e.what());
        }
        for (auto& inst : instances_from_json(j)) todo.emplace_back("file", std::move(inst));
    }
    if (worst_q > 0) todo.emplace_back("worst_case", worst_case_sequence(c.tau, worst_q));
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::size_t> qd(1, q_max);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t i = 0; i < random_count; ++i) {
        const std::size_t q = qd(rng);
        std::vector<double> xs;
        while (xs.size() < q + 1) {
            const double x = u(rng);
            bool far = true;
            for (double y : xs) far = far && std::abs(x - y) >= 1e-3;
            if (far) xs.push_back(x);
        }
        todo.emplace_back("random", ITauInstance(std::move(xs), c.tau));
    }

    std::vector<ItauRow> rows(todo.size());
    parallel_for(todo.size(), [&](std::size_t i) {
        rows[i] = evaluate(todo[i].first, i, todo[i].second);
        if (todo[i].first == "worst_case") rows[i].every_step = worst_case_switch_value(rows[i].tau, rows[i].q);
    });

    std::size_t violations = 0;
    for (const auto& r : rows) violations += !r.lemma.holds;
    {
        Output o(c.out);
        o.stream() << "kind,id,q,tau,exact,m,naive,lambda_family,every_step,lemma2_bound,D,Delta,holds\n";
        for (const auto& r : rows) {
            o.stream() << r.kind << ',' << r.id << ',' << r.q << ',' << fmt_num(r.tau) << ',' << fmt_num(r.exact.value())
                       << ',' << r.exact.m << ',' << fmt_num(std::exp(r.naive)) << ',' << fmt_num(std::exp(r.family))
                       << ',' << (std::isnan(r.every_step) ? std::string() : fmt_num(r.every_step)) << ','
                       << fmt_num(r.lemma.bound) << ',' << fmt_num(r.lemma.D) << ',' << fmt_num(r.lemma.Delta) << ','
                       << (r.lemma.holds ? 1 : 0) << '\n';
        }
    }
    if (c.json) {
        Json j;
        j["instances"] = rows.size();
        j["lemma2_violations"] = violations;
        Json arr = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Json e = instance_to_json(todo[i].second);
            e["kind"] = rows[i].kind;
            e["result"] = itau_result_to_json(rows[i].exact);
            arr.push_back(e);
        }
        j["results"] = arr;
        std::cout << j.dump(2) << '\n';
    }
    std::cerr << rows.size() << " instances, " << violations << " I_tau bound violations\n";
    return violations == 0 ? kExitOk : kExitVerify;
}

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

int cmd_verify(const Common& c, double audit_tau) {
    std::vector<Check> checks;
    auto add = [&](std::string name, bool ok, std::string detail) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    };
    const double tau = c.tau == 1.0 ? 0.9 : c.tau;
    check_tau(tau);
    const auto k = c.set.build();
    const std::size_t n = c.n ? c.n : 30;

    // Green model quality and, on single intervals, the closed form.
    const auto model = build_green_model(k);
    add("green_mass", model.mass_error() < 1e-10, fmt_num(model.mass_error()));
    add("green_zero_on_set", model.robin_residual() < 1e-6, fmt_num(model.robin_residual()));
    if (k.size() == 1) {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const Complex z{k.lo() - 1.0 + (k.hi() - k.lo() + 2.0) * i / 49.0, 0.05 + 0.1 * i};
            worst = std::max(worst, std::abs(green_value(model, z) - green_interval_analytic(k.lo(), k.hi(), z)));
        }
        add("green_oracle", worst <= 1e-6, fmt_num(worst));
    }

    // Sequences: quasi-Leja audit and separation lemma.
    GTable g(model);
    std::vector<double> ds, gs;
    for (int i = 0; i < 20; ++i) {
        ds.push_back(1e-4 * std::pow(diam(k) / 1e-4, i / 19.0));
        gs.push_back(g(ds.back()));
    }
    const auto exact = leja_sequence(k, n, x0_policy(c.x0), c.density);
    const auto quasi = quasi_leja_sequence(k, n, tau, c.seed, c.density, x0_policy(c.x0));
    const double at = audit_tau > 0.0 ? audit_tau : tau;
    const auto audit = verify_quasi_leja(quasi, k, at, 2.0 * c.density);
    add("quasi_leja_audit", audit.ok, "tau " + fmt_num(at) + ", worst ratio " + fmt_num(audit.worst_ratio));
    for (const auto* s : {&exact, &quasi}) {
        const auto rep = check_separation(*s, ds, gs);
        add(s == &exact ? "separation_exact" : "separation_quasi", rep.ok, fmt_num(rep.worst_margin));
    }
    // Diameter bound on the exact sequence.
    {
        bool ok = true;
        for (std::size_t m = 1; m <= n; m += std::max<std::size_t>(1, n / 10)) {
            const InterpolationOperator op(std::vector<double>(exact.points.begin(), exact.points.begin() + m));
            ok = ok && lebesgue_constant(op, k, c.lebesgue_density).lambda_n <= theorem1_bound_opt(k, g, m).best_bound;
        }
        add("theorem1", ok, "");
    }
    // I_tau: DP against enumeration, closed-form bound, chain bound.
    {
        std::mt19937_64 rng(c.seed + 1);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst_dp = 0.0;
        bool lemma = true;
        for (int i = 0; i < 200; ++i) {
            const std::size_t q = 1 + static_cast<std::size_t>(i % 8);
            std::vector<double> xs;
            while (xs.size() < q + 1) {
                const double x = u(rng);
                bool far = true;
                for (double y : xs) far = far && std::abs(x - y) >= 1e-3;
                if (far) xs.push_back(x);
            }
            const ITauInstance inst(xs, i % 2 ? 1.0 : tau);
            const auto r = i_tau_exact(inst);
            double brute = INFINITY;
            for (unsigned long mask = 0; mask < (1ul << (q - 1)); ++mask) {
                std::vector<std::size_t> bp{0};
                for (std::size_t j = 1; j < q; ++j) {
                    if (mask & (1ul << (j - 1))) bp.push_back(j);
                }
                bp.push_back(q);
                brute = std::min(brute, i_tau_log_objective(inst, bp));
            }
            worst_dp = std::max(worst_dp, std::abs(brute - r.log_value));
            lemma = lemma && check_key_lemma(inst).holds;
        }
        add("itau_dp_vs_enumeration", worst_dp <= 1e-10, fmt_num(worst_dp));
        add("key_lemma", lemma, "");
        bool chain = true;
        for (int i = 0; i < 20; ++i) {
            const double x = k.lo() + (k.hi() - k.lo()) * (i + 0.5) / 20.0;
            if (!k.contains(x)) continue;
            for (std::size_t kk = 0; kk < std::min<std::size_t>(n, 20); ++kk) {
                const auto r = lk_via_itau(InterpolationOperator(std::vector<double>(
                                               quasi.points.begin(), quasi.points.begin() + std::min<std::size_t>(n, 20))),
                                           kk, x, tau);
                chain = chain && (r.skipped || r.ok);
            }
        }
        add("lk_chain", chain, "");
    }
    // Elementary inequalities.
    {
        std::mt19937_64 rng(c.seed + 2);
        std::uniform_real_distribution<double> lu(std::log(1e-3), std::log(1e3)), u(0.0, 1.0);
        const double lam = lambda_constant(), s = std::exp(-lam);
        double m1 = INFINITY, m2 = INFINITY, m3 = INFINITY;
        for (int i = 0; i < 10000; ++i) {
            const double a = std::exp(lu(rng)), b = std::exp(lu(rng)), f = std::exp(3.0 * u(rng));
            m1 = std::min(m1, ineq1(a, b, u(rng) < 0.5 ? -s * a * f : s * b * f, lam).margin);
            double w = u(rng);
            if (w == 0.0) w = 0.5;
            m2 = std::min(m2, ineq2(a, b, w * a).margin);
            m3 = std::min(m3, ineq3(a, b).margin);
        }
        add("ineq1", m1 >= -kIneqSlack, fmt_num(m1));
        add("ineq2", m2 >= -kIneqSlack, fmt_num(m2));
        add("ineq3", m3 >= -kIneqSlack, fmt_num(m3));
        add("ineq4", ineq4().holds, fmt_num(ineq4().rhs));
    }

    bool all = true;
    for (const auto& ch : checks) all = all && ch.ok;
    if (c.json) {
        Json j;
        j["ok"] = all;
        Json arr = Json::array();
        for (const auto& ch : checks) arr.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
        j["checks"] = arr;
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& ch : checks)
            std::cout << (ch.ok ? "ok   " : "FAIL ") << ch.name << (ch.detail.empty() ? "" : "  " + ch.detail) << '\n';
    }
    return all ? kExitOk : kExitVerify;
}

int cmd_ineq(const Common& c, std::size_t samples) {
    const double lam = lambda_constant(), s = std::exp(-lam);
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> lu(std::log(1e-3), std::log(1e3)), u(0.0, 1.0);
    Output o(c.out);
    o.stream() << "inequality,p1,p2,p3,lhs,rhs,margin,holds\n";
    bool all = true;
    auto row = [&](const char* name, double p1, double p2, double p3, const IneqReport& r) {
        all = all && r.holds;
        o.stream() << name << ',' << fmt_num(p1) << ',' << fmt_num(p2) << ',' << fmt_num(p3) << ',' << fmt_num(r.lhs)
                   << ',' << fmt_num(r.rhs) << ',' << fmt_num(r.margin) << ',' << (r.holds ? 1 : 0) << '\n';
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const double a = std::exp(lu(rng)), b = std::exp(lu(rng)), f = std::exp(3.0 * u(rng));
        const double x = u(rng) < 0.5 ? -s * a * f : s * b * f;
        row("ineq1", a, b, x, ineq1(a, b, x, lam));
        double w = u(rng);
        if (w == 0.0) w = 0.5;
        row("ineq2", a, b, w * a, ineq2(a, b, w * a));
        row("ineq3", a, b, 0.0, ineq3(a, b));
    }
    row("ineq4", 0.2, 0.0, 0.0, ineq4());
    const auto scan = ineq2_tightness_scan();
    std::cerr << "lambda = " << fmt_num(lam) << ", max (B-1)/(B+1)^2 = " << fmt_num(scan.max_value) << " at B = "
              << fmt_num(scan.argmax) << '\n';
    return all ? kExitOk : kExitVerify;
}

// A JSON config object becomes leading "--key value" arguments, so flags given
// on the command line (parsed later, last one wins) override it.
std::vector<std::string> config_args(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config: expected a JSON object");
    std::vector<std::string> args;
    for (const auto& [key, value] : j.items()) {
        std::string flag = "--" + key;
        for (char& ch : flag) ch = ch == '_' ? '-' : ch;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_string()) {
            args.push_back(flag);
            args.push_back(value.get<std::string>());
        } else if (value.is_number_integer()) {
            args.push_back(flag);
            args.push_back(std::to_string(value.get<long long>()));
        } else if (value.is_number()) {
            args.push_back(flag);
            args.push_back(fmt_num(value.get<double>()));
        } else {
            // Objects and arrays: the set spec.
            args.push_back(flag);
            args.push_back(value.dump());
        }
    }
    return args;
}

int run(int argc, char** argv) {
    CLI::App app{"Leja points, Lebesgue constants and Green-function bounds on compact subsets of the line"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    Common c;
    DeltaGridSpec spec;
    std::string merged, instances, profile_out;
    std::size_t profile_n = 0, random_count = 200, q_max = 25, worst_q = 10, samples = 1000;
    double audit_tau = 0.0;

    auto common = [&](CLI::App* sub) {
        add_set_options(sub, c.set);
        sub->add_option("--tau", c.tau, "quasi-Leja parameter in (0, 1]; 1 = exact Leja");
        sub->add_option("--seed", c.seed, "RNG seed");
        sub->add_option("--density", c.density, "Leja search grid points per unit length");
        sub->add_option("--x0", c.x0, "first point: left, right or a value in K");
        sub->add_option("--out", c.out, "output CSV (default stdout)");
        sub->add_flag("--json", c.json, "print a JSON report");
        sub->add_flag("--config", "JSON config file with default flag values");
    };

    auto* points = app.add_subcommand("points", "generate Leja or quasi-Leja points");
    common(points);
    points->add_option("--n", c.n, "number of points")->required();

    auto* leb = app.add_subcommand("lebesgue", "Lebesgue constants over an n range");
    common(leb);
    leb->add_option("--n", c.n, "same as --n-max");
    leb->add_option("--n-min", c.n_min, "first n");
    leb->add_option("--n-max", c.n_max, "last n");
    leb->add_option("--lebesgue-density", c.lebesgue_density, "samples per unit length");
    leb->add_option("--profile-n", profile_n, "also write the Lebesgue function for this n");
    leb->add_option("--profile-out", profile_out, "profile CSV (x,lambda(x))");

    auto* bound = app.add_subcommand("bound", "Lebesgue-constant upper bounds over an n range, with Lambda_n");
    common(bound);
    bound->add_option("--n", c.n, "same as --n-max");
    bound->add_option("--n-min", c.n_min, "first n");
    bound->add_option("--n-max", c.n_max, "last n");
    bound->add_option("--lebesgue-density", c.lebesgue_density, "samples per unit length");
    bound->add_option("--out-dir", c.out_dir, "directory for the per-n CSVs");
    bound->add_option("--merged", merged, "merged table path (default <out-dir>/lambda_vs_bound.csv)");
    bound->add_option("--delta-points", spec.points, "log-grid points for delta");
    bound->add_option("--delta-lo", spec.lo_factor, "smallest delta / diam");
    bound->add_option("--delta-hi", spec.hi_factor, "largest delta / diam");

    auto* itau = app.add_subcommand("itau", "batch I_tau: exact value, strategies and the closed-form bound");
    common(itau);
    itau->add_option("--instances", instances, R"(JSON file: [{"xs": [...], "tau": t}, ...])");
    itau->add_option("--random", random_count, "number of random instances");
    itau->add_option("--q-max", q_max, "largest q for random instances");
    itau->add_option("--worst-case-q", worst_q, "q of the worst-case sequence (0 to skip)");

    auto* verify = app.add_subcommand("verify", "run the invariant suite; exit 1 on any violation");
    common(verify);
    verify->add_option("--n", c.n, "sequence length (default 30)");
    verify->add_option("--lebesgue-density", c.lebesgue_density, "samples per unit length");
    verify->add_option("--audit-tau", audit_tau, "tau for the quasi-Leja audit (default: the generation tau)");

    auto* ineq = app.add_subcommand("ineq", "margin table for the elementary inequalities");
    common(ineq);
    ineq->add_option("--samples", samples, "random samples per inequality");

    // --config is expanded before CLI11 sees the arguments.
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" || args[i].rfind("--config=", 0) == 0) {
            const bool inline_value = args[i].size() > 8;
            if (!inline_value && i + 1 >= args.size()) throw ValidationError("--config needs a file");
            const std::string path = inline_value ? args[i].substr(9) : args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i + (inline_value ? 1 : 2)));
            const auto extra = config_args(path);
            // Right after the subcommand name.
            const std::size_t at = args.empty() ? 0 : 1;
            args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
            break;
        }
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*points) return cmd_points(c);
    if (*leb) return cmd_lebesgue(c, profile_n, profile_out);
    if (*bound) return cmd_bound(c, spec, merged);
    if (*itau) return cmd_itau(c, instances, random_count, q_max, worst_q);
    if (*verify) return cmd_verify(c, audit_tau);
    if (*ineq) return cmd_ineq(c, samples);
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerify;
    }
}
