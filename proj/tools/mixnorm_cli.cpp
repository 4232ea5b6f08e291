#include "CLI11.hpp"

#include "mixnorm/serialize.hpp"

#include <charconv>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Command line front end.  Exit-code protocol (so shell pipelines can branch
// on verdicts):
//
//   0   yes / success / witness verified
//   1   internal failure, or witness requested where none exists
//   2   malformed parameters, grid, or config
//   3   norm diverged
//   10  not contractive
//   11  contractivity unknown (open problem regime)
//   12  no inclusion at all
//
// stdout carries exactly one JSON document (or CSV for sweeps); everything
// diagnostic goes to stderr.

namespace {

using namespace mixnorm;

constexpr int kExitYes = 0;
constexpr int kExitFailure = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitDivergent = 3;
constexpr int kExitNo = 10;
constexpr int kExitUnknownOpen = 11;
constexpr int kExitNoInclusion = 12;

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s)
{
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

// Plain decimal only: "inf", "nan" and friends are rejected here, which keeps
// the "inf" spelling an exclusive property of the exponent grammar.
double parse_real(const std::string& token)
{
    if (token.empty())
        throw std::invalid_argument("empty numeric token");
    for (char c : token) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
              c == '.' || c == 'e' || c == 'E'))
            throw std::invalid_argument("bad numeric token '" + token + "'");
    }
    double out = 0.0;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), last, out);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("bad numeric token '" + token + "'");
    return out;
}

long parse_integer(const std::string& token, long lo, const char* what)
{
    const double v = parse_real(token);
    const long n = static_cast<long>(v);
    if (n != v || n < lo)
        throw std::invalid_argument(std::string(what) + ": bad integer '" + token + "'");
    return n;
}

SpaceParams parse_space_triple(const std::string& s, const char* flag)
{
    const auto parts = split(s, ',');
    if (parts.size() != 3)
        throw std::invalid_argument(std::string(flag) +
                                    " expects three comma-separated values p,q,a, got '" + s +
                                    "'");
    const ExtExponent p = parse_ext_exponent(parts[0]);
    const ExtExponent q = parse_ext_exponent(parts[1]);
    const double a = parse_real(parts[2]);
    return SpaceParams{p, q, a};
}

std::string fmt_real(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void print_json(const nlohmann::json& j)
{
    std::cout << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Config file (TOML subset: sections, dotted keys, numeric values, comments)

struct Config {
    std::optional<double> rel_tol;
    std::optional<long> max_circle_samples;
    std::optional<double> witness_gamma_fraction;
    std::optional<unsigned long long> probe_seed;
    std::optional<int> probe_degree;
    std::optional<long> probe_count;
};

Config load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    Config cfg;
    std::string line;
    std::string section;
    int lineno = 0;
    auto where = [&] { return path + ":" + std::to_string(lineno) + ": "; };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument(where() + "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "witness" && section != "probe")
                throw std::invalid_argument(where() + "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(where() + "expected key = value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!section.empty())
            key = section + "." + key;
        try {
            if (key == "rel_tol") {
                cfg.rel_tol = parse_real(value);
                if (!(*cfg.rel_tol > 0.0 && *cfg.rel_tol < 1.0))
                    throw std::invalid_argument("rel_tol must be in (0, 1)");
            } else if (key == "max_circle_samples") {
                cfg.max_circle_samples = parse_integer(value, 64, "max_circle_samples");
            } else if (key == "witness.gamma_fraction") {
                cfg.witness_gamma_fraction = parse_real(value);
                if (!(*cfg.witness_gamma_fraction > 0.0 &&
                      *cfg.witness_gamma_fraction < 0.5))
                    throw std::invalid_argument("witness.gamma_fraction must be in (0, 0.5)");
            } else if (key == "probe.seed") {
                const double v = parse_real(value);
                if (v < 0 || v != static_cast<double>(static_cast<unsigned long long>(v)))
                    throw std::invalid_argument("probe.seed must be a nonnegative integer");
                cfg.probe_seed = static_cast<unsigned long long>(v);
            } else if (key == "probe.degree") {
                cfg.probe_degree = static_cast<int>(parse_integer(value, 0, "probe.degree"));
            } else if (key == "probe.count") {
                cfg.probe_count = parse_integer(value, 1, "probe.count");
            } else {
                throw std::invalid_argument("unknown config key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where() + e.what());
        }
    }
    return cfg;
}

// Shared tolerance flags: the command line wins over the config file, the
// config file wins over built-in defaults.
struct ToleranceFlags {
    double rel_tol = 0.0;
    long max_circle_samples = 0;
    CLI::Option* rel_tol_opt = nullptr;
    CLI::Option* samples_opt = nullptr;

    void attach(CLI::App* cmd)
    {
        rel_tol_opt = cmd->add_option("--rel-tol", rel_tol,
                                      "relative quadrature tolerance (overrides config)");
        samples_opt = cmd->add_option("--max-circle-samples", max_circle_samples,
                                      "circle-mean sample cap (overrides config)");
    }

    NormOptions resolve(NormOptions base, const Config& cfg) const
    {
        double rt = 0.0;
        if (rel_tol_opt != nullptr && rel_tol_opt->count() > 0)
            rt = rel_tol;
        else if (cfg.rel_tol)
            rt = *cfg.rel_tol;
        if (rt != 0.0) {
            if (!(rt > 0.0 && rt < 1.0))
                throw std::invalid_argument("--rel-tol must be in (0, 1)");
            base.radial_rel_tol = rt;
            base.mean.rel_tol = rt / 10.0; // means feed the radial integrand
        }
        long ms = 0;
        if (samples_opt != nullptr && samples_opt->count() > 0)
            ms = max_circle_samples;
        else if (cfg.max_circle_samples)
            ms = *cfg.max_circle_samples;
        if (ms != 0) {
            if (ms < 64)
                throw std::invalid_argument("--max-circle-samples must be at least 64");
            base.mean.max_samples = ms;
        }
        return base;
    }
};

// ---------------------------------------------------------------------------
// classify

int run_classify(const std::string& src_str, const std::string& dst_str)
{
    const SpaceParams src = parse_space_triple(src_str, "--src");
    const SpaceParams dst = parse_space_triple(dst_str, "--dst");
    const InclusionResult inc = inclusion(src, dst);
    const ContractivityResult con = contractive(src, dst);

    std::string verdict;
    int code;
    if (inc.included != Tri::yes) {
        verdict = "no-inclusion";
        code = kExitNoInclusion;
    } else {
        switch (con.contractive) {
        case Tri::yes:
            verdict = "yes";
            code = kExitYes;
            break;
        case Tri::no:
            verdict = "no";
            code = kExitNo;
            break;
        case Tri::unknown_open:
            verdict = "unknown_open";
            code = kExitUnknownOpen;
            break;
        default:
            verdict = "?";
            code = kExitFailure;
        }
    }
    print_json({{"src", src},
                {"dst", dst},
                {"inclusion", inc},
                {"contractivity", con},
                {"verdict", verdict},
                {"exit_code", code}});
    return code;
}

// ---------------------------------------------------------------------------
// norm

struct NormArgs {
    std::string fn;
    std::string space;
    std::string bergman;
    std::string hardy;
    bool force_quadrature = false;
    ToleranceFlags tol;
};

int run_norm(const NormArgs& args, const Config& cfg)
{
    const int modes = (args.space.empty() ? 0 : 1) + (args.bergman.empty() ? 0 : 1) +
                      (args.hardy.empty() ? 0 : 1);
    if (modes != 1)
        throw std::invalid_argument("exactly one of --space, --bergman, --hardy is required");

    const AnalyticFn f = parse_function_literal(args.fn);
    NormOptions opts = args.tol.resolve(NormOptions{}, cfg);
    opts.force_quadrature = args.force_quadrature;

    nlohmann::json j;
    j["f"] = f;
    NormResult res;
    if (!args.space.empty()) {
        const SpaceParams sp = parse_space_triple(args.space, "--space");
        res = mixed_norm(f, sp, opts);
        j["space"] = sp;
    } else if (!args.bergman.empty()) {
        const auto parts = split(args.bergman, ',');
        if (parts.size() != 2)
            throw std::invalid_argument("--bergman expects p,alpha");
        const double p = parse_real(parts[0]);
        const double alpha = parse_real(parts[1]);
        res = bergman_norm(f, p, alpha, opts);
        j["bergman"] = {{"p", p}, {"alpha", alpha}};
    } else {
        const ExtExponent p = parse_ext_exponent(args.hardy);
        res = hardy_norm(f, p, opts);
        j["hardy"] = {{"p", p}};
    }
    j["result"] = res;
    print_json(j);
    return res.diverged ? kExitDivergent : kExitYes;
}

// ---------------------------------------------------------------------------
// sweep

struct RangeSpec {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    long count = 0;

    double at(long i) const
    {
        if (count == 1)
            return lo;
        if (i == count - 1)
            return hi;
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
};

RangeSpec parse_range(const std::string& item)
{
    const auto eq = item.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("grid item '" + item + "' must look like name=lo:hi:count");
    RangeSpec r;
    r.name = item.substr(0, eq);
    static const char* kNames[] = {"p", "q", "a", "u", "v", "b"};
    bool known = false;
    for (const char* n : kNames)
        known = known || r.name == n;
    if (!known)
        throw std::invalid_argument("grid parameter '" + r.name +
                                    "' is not one of p, q, a, u, v, b");
    const auto parts = split(item.substr(eq + 1), ':');
    if (parts.size() != 3)
        throw std::invalid_argument("grid item '" + item + "' must look like name=lo:hi:count");
    r.lo = parse_real(parts[0]);
    r.hi = parse_real(parts[1]);
    r.count = parse_integer(parts[2], 1, "grid count");
    if (!(r.lo > 0.0))
        throw std::invalid_argument("grid '" + r.name + "': lo must be positive");
    if (r.hi < r.lo)
        throw std::invalid_argument("grid '" + r.name + "': hi must be >= lo");
    if (r.count == 1 && r.hi != r.lo)
        throw std::invalid_argument("grid '" + r.name + "': a 1-point range needs lo == hi");
    return r;
}

struct SweepArgs {
    std::string grid;
    std::string out;
    std::string fixed[6]; // p, q, a, u, v, b
    CLI::Option* fixed_opt[6] = {nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
};

int run_sweep(const SweepArgs& args)
{
    static const char* kNames[] = {"p", "q", "a", "u", "v", "b"};

    const auto items = split(args.grid, ',');
    if (items.size() != 2)
        throw std::invalid_argument("--grid expects exactly two ranges, e.g. q=0.5:4:8,v=0.5:4:8");
    const RangeSpec r1 = parse_range(items[0]);
    const RangeSpec r2 = parse_range(items[1]);
    if (r1.name == r2.name)
        throw std::invalid_argument("--grid parameters must be distinct");

    // Everything not swept must be pinned with its flag; "inf" is legal for
    // the four exponents but not for the weights a, b.
    double fixed_val[6];
    bool is_swept[6];
    for (int k = 0; k < 6; ++k) {
        const std::string name = kNames[k];
        is_swept[k] = name == r1.name || name == r2.name;
        if (is_swept[k]) {
            if (args.fixed_opt[k]->count() > 0)
                throw std::invalid_argument("parameter '" + name +
                                            "' is both swept and fixed");
            continue;
        }
        if (args.fixed_opt[k]->count() == 0)
            throw std::invalid_argument("parameter '" + name +
                                        "' is not swept, fix it with --" + name);
        if (name == "a" || name == "b")
            fixed_val[k] = parse_real(args.fixed[k]);
        else
            fixed_val[k] = parse_ext_exponent(args.fixed[k]).value();
    }

    std::ofstream file;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file)
            throw std::invalid_argument("cannot open output file '" + args.out + "'");
    }
    std::ostream& os = args.out.empty() ? std::cout : file;

    os << csv_field(r1.name) << ',' << csv_field(r2.name)
       << ",inclusion,contractive,rule\r\n";

    for (long i = 0; i < r1.count; ++i) {
        for (long j = 0; j < r2.count; ++j) {
            double val[6];
            for (int k = 0; k < 6; ++k) {
                if (kNames[k] == r1.name)
                    val[k] = r1.at(i);
                else if (kNames[k] == r2.name)
                    val[k] = r2.at(j);
                else
                    val[k] = fixed_val[k];
            }
            const SpaceParams src{ExtExponent(val[0]), ExtExponent(val[1]), val[2]};
            const SpaceParams dst{ExtExponent(val[3]), ExtExponent(val[4]), val[5]};
            const InclusionResult inc = inclusion(src, dst);
            const ContractivityResult con = contractive(src, dst);
            const std::string rule = inc.included == Tri::yes ? con.rule : inc.rule;
            os << csv_field(fmt_real(r1.at(i))) << ',' << csv_field(fmt_real(r2.at(j)))
               << ',' << to_string(inc.included) << ',' << to_string(con.contractive)
               << ',' << csv_field(rule) << "\r\n";
        }
    }
    return kExitYes;
}

// ---------------------------------------------------------------------------
// witness

struct WitnessArgs {
    std::string src;
    std::string dst;
    double gamma_fraction = 0.25;
    int max_log2_n = 20;
    CLI::Option* gamma_opt = nullptr;
    ToleranceFlags tol;
};

int run_witness(const WitnessArgs& args, const Config& cfg)
{
    const SpaceParams src = parse_space_triple(args.src, "--src");
    const SpaceParams dst = parse_space_triple(args.dst, "--dst");

    WitnessOptions wo;
    if (args.gamma_opt != nullptr && args.gamma_opt->count() > 0)
        wo.gamma_fraction = args.gamma_fraction;
    else if (cfg.witness_gamma_fraction)
        wo.gamma_fraction = *cfg.witness_gamma_fraction;
    if (!(wo.gamma_fraction > 0.0 && wo.gamma_fraction < 0.5))
        throw std::invalid_argument("--gamma-fraction must be in (0, 0.5)");
    if (args.max_log2_n < 0 || args.max_log2_n > 24)
        throw std::invalid_argument("--max-log2-n must be in [0, 24]");
    wo.max_log2_n = args.max_log2_n;
    wo.certificate = args.tol.resolve(wo.certificate, cfg);

    Witness w;
    try {
        w = find_witness(src, dst, wo);
    } catch (const std::domain_error& e) {
        // Not an error in the arguments: the pair simply admits no witness
        // (contractive, not included, or in the open regime).
        std::cerr << "mixnorm witness: " << e.what() << '\n';
        print_json({{"src", src}, {"dst", dst}, {"error", e.what()}});
        return kExitFailure;
    }

    const WitnessCheck check = verify_witness(w, args.tol.resolve(NormOptions{}, cfg));
    print_json({{"witness", w}, {"check", check}});
    return check.valid ? kExitYes : kExitFailure;
}

// ---------------------------------------------------------------------------
// beta

struct BetaArgs {
    std::string check;
    std::string a;
    std::string n;
    std::string q_grid = "0.25:8:64";
    std::string x = "1.1,2,5,10";
    std::string y = "0.1,1,5";
    std::string delta = "0,0.5,2";
    double tolerance = 1e-12;
};

std::vector<double> parse_real_list(const std::string& s, const char* what)
{
    std::vector<double> out;
    for (const std::string& tok : split(s, ','))
        out.push_back(parse_real(tok));
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

int run_beta(const BetaArgs& args)
{
    if (!(args.tolerance >= 0.0))
        throw std::invalid_argument("--tolerance must be nonnegative");

    if (args.check == "cor31") {
        if (args.a.empty() || args.n.empty())
            throw std::invalid_argument("beta --check cor31 requires --a and --n");
        const double a = parse_real(args.a);
        const int n = static_cast<int>(parse_integer(args.n, 1, "--n"));
        const auto parts = split(args.q_grid, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("--q-grid expects lo:hi:count");
        const double lo = parse_real(parts[0]);
        const double hi = parse_real(parts[1]);
        const long count = parse_integer(parts[2], 2, "--q-grid count");
        if (!(lo > 0.0) || !(hi > lo))
            throw std::invalid_argument("--q-grid needs 0 < lo < hi");
        std::vector<double> grid(count);
        for (long i = 0; i < count; ++i)
            grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);

        const MonotoneReport rep = check_F_decreasing(a, n, grid, args.tolerance);
        print_json({{"check", "cor31"},
                    {"a", a},
                    {"n", n},
                    {"q_lo", lo},
                    {"q_hi", hi},
                    {"q_count", count},
                    {"tolerance", args.tolerance},
                    {"report", rep}});
        return rep.ok ? kExitYes : kExitFailure;
    }
    if (args.check == "cor32") {
        const std::vector<double> xs = parse_real_list(args.x, "--x");
        const std::vector<double> ys = parse_real_list(args.y, "--y");
        const std::vector<double> deltas = parse_real_list(args.delta, "--delta");
        std::vector<int> ns;
        for (const std::string& tok : split(args.n.empty() ? std::string("1,4,16") : args.n, ','))
            ns.push_back(static_cast<int>(parse_integer(tok, 1, "--n")));

        const Cor32Report rep = cor32_grid_check(xs, ys, deltas, ns, args.tolerance);
        print_json({{"check", "cor32"},
                    {"x", xs},
                    {"y", ys},
                    {"delta", deltas},
                    {"n", ns},
                    {"tolerance", args.tolerance},
                    {"report", rep}});
        return rep.ok ? kExitYes : kExitFailure;
    }
    throw std::invalid_argument("--check must be cor31 or cor32");
}

// ---------------------------------------------------------------------------
// probe

struct ProbeArgs {
    std::string conjecture;
    unsigned long long seed = 7;
    long count = 1000;
    int degree = 32;
    std::string csv;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* count_opt = nullptr;
    CLI::Option* degree_opt = nullptr;
    ToleranceFlags tol;
};

int run_probe(const ProbeArgs& args, const Config& cfg)
{
    const Conjecture c = conjecture_from_string(args.conjecture);

    CorpusSpec spec;
    spec.seed = args.seed_opt->count() > 0 ? args.seed : cfg.probe_seed.value_or(args.seed);
    spec.count = args.count_opt->count() > 0 ? args.count : cfg.probe_count.value_or(args.count);
    spec.max_degree =
        args.degree_opt->count() > 0 ? args.degree : cfg.probe_degree.value_or(args.degree);
    if (spec.count < 1)
        throw std::invalid_argument("--count must be at least 1");
    if (spec.max_degree < 0)
        throw std::invalid_argument("--degree must be nonnegative");

    std::ofstream csv;
    std::ostream* csvp = nullptr;
    if (!args.csv.empty()) {
        csv.open(args.csv);
        if (!csv)
            throw std::invalid_argument("cannot open CSV file '" + args.csv + "'");
        csvp = &csv;
    }

    const NormOptions opts = args.tol.resolve(sweep_norm_options(), cfg);
    const SweepSummary summary = probe_sweep(spec, c, SweepGrid{}, opts, csvp);
    print_json(summary);
    // Candidate violations are reported in the summary, not turned into a
    // failing exit: they are open conjectures, not assertions.
    return kExitYes;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mixed norm spaces on the unit disk: inclusion, contractivity, norms, "
                 "counterexamples, Beta inequalities, conjecture probes"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --config after the subcommand name

    std::string config_path;
    app.add_option("--config", config_path,
                   "TOML config (keys: rel_tol, max_circle_samples, witness.gamma_fraction, "
                   "probe.seed, probe.degree, probe.count); flags override");

    CLI::App* c_classify =
        app.add_subcommand("classify", "decide inclusion and contractivity for a pair of spaces");
    std::string classify_src, classify_dst;
    c_classify->add_option("--src", classify_src, "source space p,q,a ('inf' allowed for p, q)")
        ->required();
    c_classify->add_option("--dst", classify_dst, "target space u,v,b")->required();

    CLI::App* c_norm = app.add_subcommand("norm", "compute the norm of a function");
    NormArgs norm_args;
    c_norm->add_option("--f", norm_args.fn,
                       "function literal: poly:..., cpoly:..., mono:k, binpow:a, "
                       "fnseq:n=...,gamma=...")
        ->required();
    c_norm->add_option("--space", norm_args.space, "mixed-norm space p,q,a");
    c_norm->add_option("--bergman", norm_args.bergman, "weighted Bergman space p,alpha");
    c_norm->add_option("--hardy", norm_args.hardy, "Hardy space exponent p");
    c_norm->add_flag("--force-quadrature", norm_args.force_quadrature,
                     "disable closed forms and coefficient series");
    norm_args.tol.attach(c_norm);

    CLI::App* c_sweep =
        app.add_subcommand("sweep", "classify over a 2-parameter grid, emit CSV");
    SweepArgs sweep_args;
    c_sweep->add_option("--grid", sweep_args.grid,
                        "two ranges name=lo:hi:count over {p,q,a,u,v,b}, comma separated")
        ->required();
    c_sweep->add_option("--out", sweep_args.out, "output CSV path (default stdout)");
    {
        static const char* kNames[] = {"p", "q", "a", "u", "v", "b"};
        static const char* kHelp[] = {"source exponent p", "source exponent q",
                                      "source weight a",   "target exponent u",
                                      "target exponent v", "target weight b"};
        for (int k = 0; k < 6; ++k)
            sweep_args.fixed_opt[k] = c_sweep->add_option(std::string("--") + kNames[k],
                                                          sweep_args.fixed[k], kHelp[k]);
    }

    CLI::App* c_witness = app.add_subcommand(
        "witness", "construct and verify a non-contractivity counterexample");
    WitnessArgs witness_args;
    c_witness->add_option("--src", witness_args.src, "source space p,q,a")->required();
    c_witness->add_option("--dst", witness_args.dst, "target space u,v,b")->required();
    witness_args.gamma_opt =
        c_witness->add_option("--gamma-fraction", witness_args.gamma_fraction,
                              "gamma as a fraction of a, in (0, 0.5) (overrides config)");
    c_witness->add_option("--max-log2-n", witness_args.max_log2_n,
                          "sequence search tries n = 1, 2, ..., 2^this");
    witness_args.tol.attach(c_witness);

    CLI::App* c_beta = app.add_subcommand("beta", "check the Beta-function inequalities");
    BetaArgs beta_args;
    c_beta->add_option("--check", beta_args.check, "cor31 or cor32")->required();
    c_beta->add_option("--a", beta_args.a, "cor31: weight parameter a > 0");
    c_beta->add_option("--n", beta_args.n, "cor31: single n; cor32: comma list of n");
    c_beta->add_option("--q-grid", beta_args.q_grid, "cor31: q grid lo:hi:count");
    c_beta->add_option("--x", beta_args.x, "cor32: comma list of x > 1");
    c_beta->add_option("--y", beta_args.y, "cor32: comma list of y > 0");
    c_beta->add_option("--delta", beta_args.delta, "cor32: comma list of delta >= 0");
    c_beta->add_option("--tolerance", beta_args.tolerance, "violation tolerance");

    CLI::App* c_probe =
        app.add_subcommand("probe", "stress an open conjecture on a random corpus");
    ProbeArgs probe_args;
    c_probe->add_option("--conjecture", probe_args.conjecture, "eq14, eq15, eq16 or eq17")
        ->required();
    probe_args.seed_opt =
        c_probe->add_option("--seed", probe_args.seed, "corpus RNG seed (overrides config)");
    probe_args.count_opt =
        c_probe->add_option("--count", probe_args.count, "corpus size (overrides config)");
    probe_args.degree_opt = c_probe->add_option("--degree", probe_args.degree,
                                                "max polynomial degree (overrides config)");
    c_probe->add_option("--csv", probe_args.csv, "stream every sample to this CSV file");
    probe_args.tol.attach(c_probe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }

    try {
        Config cfg;
        if (!config_path.empty())
            cfg = load_config(config_path);

        if (c_classify->parsed())
            return run_classify(classify_src, classify_dst);
        if (c_norm->parsed())
            return run_norm(norm_args, cfg);
        if (c_sweep->parsed())
            return run_sweep(sweep_args);
        if (c_witness->parsed())
            return run_witness(witness_args, cfg);
        if (c_beta->parsed())
            return run_beta(beta_args);
        if (c_probe->parsed())
            return run_probe(probe_args, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "mixnorm: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::domain_error& e) {
        std::cerr << "mixnorm: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "mixnorm: internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitMalformed;
}
