// Batch front-end over the C API: verify / sweep identities, partition tables,
// asymptotic comparisons and the Meijer-G oracle.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "lxf/lxf.h"

namespace {

constexpr int EXIT_FAILING = 1;
constexpr int EXIT_CONFIG = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string identity;
    std::vector<std::string> N{"1"}, m{"1"}, a, y, z, alpha, beta;
    int r = 1;
    long max_n = 26;
    std::string tier, format, out; // format: empty means the command default
    double tol = 0.0;
    long max_terms = 0;
    bool k_form = false;
    bool constant = false;
    unsigned jobs = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) v.push_back(item);
    return v;
}

std::vector<int> int_list(const std::vector<std::string>& raw, const char* flag) {
    std::vector<int> v;
    for (const auto& s : raw)
        for (const auto& t : split(s, ',')) {
            try {
                size_t used = 0;
                int x = std::stoi(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
                v.push_back(x);
            } catch (const std::exception&) {
                throw ConfigError(std::string("--") + flag + ": not an integer: " + t);
            }
        }
    if (v.empty()) throw ConfigError(std::string("--") + flag + ": empty list");
    return v;
}

// each occurrence is one value "re[,im]"; ';' separates several values in one occurrence
std::vector<lxf_value> value_list(const std::vector<std::string>& raw, const char* flag) {
    std::vector<lxf_value> v;
    for (const auto& s : raw)
        for (const auto& t : split(s, ';')) {
            lxf_value x;
            if (lxf_value_parse(t.c_str(), &x) != LXF_OK) throw ConfigError(std::string("--") + flag + ": " + lxf_last_error());
            v.push_back(x);
        }
    return v;
}

lxf_tier pick_tier(const std::string& flag) {
    std::string t = flag;
    if (t.empty())
        if (const char* env = std::getenv("LXF_TIER")) t = env;
    if (t.empty()) return LXF_TIER_EXTENDED;
    for (auto& c : t) c = char(std::tolower(static_cast<unsigned char>(c)));
    if (t == "double") return LXF_TIER_DOUBLE;
    if (t == "extended") return LXF_TIER_EXTENDED;
    throw ConfigError("tier must be double or extended, got '" + t + "'");
}

struct PolicyDeleter {
    void operator()(lxf_policy* p) const { lxf_policy_free(p); }
};
struct ReportDeleter {
    void operator()(lxf_report* r) const { lxf_report_free(r); }
};
using Policy = std::unique_ptr<lxf_policy, PolicyDeleter>;
using Report = std::unique_ptr<lxf_report, ReportDeleter>;

Policy make_policy(const Options& o) {
    Policy p(lxf_policy_new(pick_tier(o.tier)));
    if (o.max_terms > 0 && lxf_policy_set_max_terms(p.get(), o.max_terms) != LXF_OK)
        throw ConfigError(std::string("--max-terms: ") + lxf_last_error());
    return p;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

// runs jobs in parallel, hands results back in index order
template <class F> std::vector<Report> run_all(size_t n, unsigned jobs, F&& task) {
    std::vector<Report> out(n);
    std::atomic<size_t> next{0};
    unsigned w = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    w = unsigned(std::min<size_t>(w, std::max<size_t>(n, 1)));
    auto worker = [&] {
        for (size_t i; (i = next++) < n;) out[i] = task(i);
    };
    std::vector<std::thread> ts;
    for (unsigned k = 1; k < w; ++k) ts.emplace_back(worker);
    worker();
    for (auto& t : ts) t.join();
    return out;
}

int emit(const std::vector<Report>& reports, const Options& o) {
    Output out(o.out);
    bool all = true;
    if (o.format == "csv") out.os() << lxf_csv_header() << '\n';
    for (const auto& r : reports) {
        out.os() << (o.format == "csv" ? lxf_report_csv_row(r.get()) : lxf_report_json(r.get())) << '\n';
        all = all && lxf_report_pass(r.get());
    }
    out.os().flush();
    return all ? 0 : EXIT_FAILING;
}

int run_identities(const Options& o, bool grid) {
    if (o.identity.empty()) throw ConfigError("--identity is required");
    bool known = false;
    for (size_t i = 0; i < lxf_identity_count(); ++i) known = known || o.identity == lxf_identity_name(i);
    if (!known) throw ConfigError("unknown identity '" + o.identity + "'");
    Policy pol = make_policy(o);

    auto Ns = int_list(o.N, "N"), ms = int_list(o.m, "m");
    struct Axis {
        std::vector<lxf_value> v;
        unsigned bit;
    };
    Axis axes[] = {{value_list(o.a, "a"), LXF_HAS_A},
                   {value_list(o.y, "y"), LXF_HAS_Y},
                   {value_list(o.z, "z"), LXF_HAS_Z},
                   {value_list(o.alpha, "alpha"), LXF_HAS_ALPHA},
                   {value_list(o.beta, "beta"), LXF_HAS_BETA}};

    // cartesian product in flag order: N, m, a, y, z, alpha, beta
    std::vector<lxf_params> points;
    lxf_params base;
    lxf_params_init(&base);
    base.k_form = o.k_form ? 1 : 0;
    for (int N : Ns)
        for (int m : ms) {
            std::vector<lxf_params> acc{base};
            acc[0].N = N;
            acc[0].m = m;
            for (auto& ax : axes) {
                if (ax.v.empty()) continue;
                std::vector<lxf_params> next;
                for (const auto& p : acc)
                    for (const auto& v : ax.v) {
                        lxf_params q = p;
                        q.set |= ax.bit;
                        lxf_value* slot = ax.bit == LXF_HAS_A   ? &q.a
                                          : ax.bit == LXF_HAS_Y ? &q.y
                                          : ax.bit == LXF_HAS_Z ? &q.z
                                          : ax.bit == LXF_HAS_ALPHA ? &q.alpha
                                                                    : &q.beta;
                        *slot = v;
                        next.push_back(q);
                    }
                acc = std::move(next);
            }
            points.insert(points.end(), acc.begin(), acc.end());
        }
    if (!grid && points.size() != 1) throw ConfigError("verify takes one parameter point; use sweep for grids");

    std::string config_msg;
    std::atomic<bool> config_fail{false};
    auto reports = run_all(points.size(), o.jobs, [&](size_t i) {
        lxf_report* r = nullptr;
        lxf_status s = lxf_verify(o.identity.c_str(), &points[i], pol.get(), o.tol, &r);
        if (!r && !config_fail.exchange(true)) config_msg = std::string(lxf_status_name(s)) + ": " + lxf_last_error();
        return Report(r);
    });
    if (config_fail) throw ConfigError(config_msg);
    return emit(reports, o);
}

int run_partitions(const Options& o) {
    auto Ns = int_list(o.N, "N");
    if (Ns.size() != 1) throw ConfigError("partitions takes a single --N");
    char* csv = nullptr;
    if (lxf_partitions_csv(Ns[0], o.max_n, &csv) != LXF_OK) throw ConfigError(lxf_last_error());
    Output out(o.out);
    if (o.format == "json") {
        // {"N": n, "counts": ["1", ...]} keeps exact big integers as strings
        std::stringstream ss(csv);
        std::string line;
        std::getline(ss, line);
        out.os() << "{\"N\":" << Ns[0] << ",\"counts\":[";
        bool first = true;
        while (std::getline(ss, line)) {
            out.os() << (first ? "" : ",") << '"' << line.substr(line.find(',') + 1) << '"';
            first = false;
        }
        out.os() << "]}\n";
    } else {
        out.os() << csv;
    }
    lxf_string_free(csv);
    return 0;
}

int run_asym(const Options& o) {
    auto Ns = int_list(o.N, "N"), ms = int_list(o.m, "m");
    Output out(o.out);
    int rc = 0;
    for (int N : Ns) {
        char* js = nullptr;
        lxf_status s;
        if (o.constant) {
            s = lxf_asym_constant_json(N, &js);
        } else {
            std::vector<double> ys;
            for (const auto& v : value_list(o.y, "y")) ys.push_back(v.re_hi);
            if (ys.empty()) ys = {0.2, 0.1, 0.05};
            for (int m : ms) {
                s = lxf_asym_sigma_json(N, m, o.r, ys.data(), ys.size(), &js);
                if (s != LXF_OK) break;
                out.os() << js << '\n';
                lxf_string_free(js);
                js = nullptr;
            }
        }
        if (s == LXF_DOMAIN || s == LXF_CONFIG) throw ConfigError(lxf_last_error());
        if (s != LXF_OK) {
            std::cerr << lxf_status_name(s) << ": " << lxf_last_error() << '\n';
            rc = EXIT_FAILING;
        }
        if (js) {
            out.os() << js << '\n';
            lxf_string_free(js);
        }
    }
    return rc;
}

int run_oracle(const Options& o) {
    Policy pol = make_policy(o);
    auto Ns = int_list(o.N, "N");
    auto as = value_list(o.a, "a"), zs = value_list(o.z, "z");
    if (as.empty() || zs.empty()) throw ConfigError("oracle needs --a and --z");
    struct P {
        int N;
        lxf_value a, z;
    };
    std::vector<P> pts;
    for (int N : Ns)
        for (const auto& a : as)
            for (const auto& z : zs) pts.push_back({N, a, z});
    auto reports = run_all(pts.size(), o.jobs, [&](size_t i) {
        lxf_report* r = nullptr;
        lxf_meijer_oracle(pts[i].N, pts[i].a, pts[i].z, pol.get(), o.tol, &r);
        return Report(r);
    });
    for (const auto& r : reports)
        if (!r) throw ConfigError(lxf_last_error());
    return emit(reports, o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lxf: Lambert-series transformation checks"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--N", o.N, "N values (comma list)");
        c->add_option("--m", o.m, "m values (comma list)");
        c->add_option("--tier", o.tier, "double|extended (default: $LXF_TIER, else extended)");
        c->add_option("--tol", o.tol, "pass tolerance; overrides the identity default");
        c->add_option("--max-terms", o.max_terms, "series term cap");
        c->add_option("--format", o.format, "json|csv (partitions default csv, others json)")->check(CLI::IsMember({"json", "csv"}));
        c->add_option("--out", o.out, "output path (default stdout)");
        c->add_option("--jobs", o.jobs, "worker threads (default: hardware)");
    };
    auto values = [&](CLI::App* c) {
        c->add_option("--identity", o.identity, "identity name");
        c->add_option("--a", o.a, "a as re[,im]; repeat or ';' for lists");
        c->add_option("--y", o.y, "y as re[,im]");
        c->add_option("--z", o.z, "z as re[,im]");
        c->add_option("--alpha", o.alpha, "alpha (pi, 2pi, e tokens allowed)");
        c->add_option("--beta", o.beta, "beta");
        c->add_flag("--k-form", o.k_form, "main-transform: use the K form");
    };

    auto* verify = app.add_subcommand("verify", "check one identity at one parameter point");
    common(verify);
    values(verify);
    auto* sweep = app.add_subcommand("sweep", "check one identity over a parameter grid");
    common(sweep);
    values(sweep);
    auto* parts = app.add_subcommand("partitions", "power-partition counts");
    common(parts);
    parts->add_option("--max-n", o.max_n, "largest n");
    auto* asym = app.add_subcommand("asym", "small-y expansion against the exact series");
    common(asym);
    asym->add_option("--r", o.r, "truncation order");
    asym->add_option("--y", o.y, "y values");
    asym->add_flag("--constant", o.constant, "Wright constant and fitted c instead");
    auto* oracle = app.add_subcommand("oracle", "reduced Meijer G against the Mellin-Barnes oracle");
    common(oracle);
    oracle->add_option("--a", o.a, "a values");
    oracle->add_option("--z", o.z, "z values");
    auto* list = app.add_subcommand("list", "print the registered identity names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_CONFIG;
    }

    try {
        if (*verify) return run_identities(o, false);
        if (*sweep) return run_identities(o, true);
        if (*parts) return run_partitions(o);
        if (*asym) return run_asym(o);
        if (*oracle) return run_oracle(o);
        if (*list) {
            for (size_t i = 0; i < lxf_identity_count(); ++i) std::cout << lxf_identity_name(i) << '\n';
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return EXIT_CONFIG;
    }
    return EXIT_CONFIG;
}
