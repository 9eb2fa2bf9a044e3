// Command-line front end over the adjoint C API.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <adjoint/adjoint.h>

namespace
{

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_malformed = 2;

int exit_code_for(adj_status s)
{
    switch (s) {
        case ADJ_OK:
            return exit_ok;
        case ADJ_ERR_MISSING_FLAG:
        case ADJ_ERR_NON_INTEGER_CHI:
        case ADJ_ERR_SIGN_CONTRADICTION:
        case ADJ_ERR_POSITIVITY_CONTRADICTION:
        case ADJ_ERR_INVALID_PROFILE:
            return exit_failed;
        default:
            return exit_malformed;
    }
}

struct ProfileDeleter {
    void operator()(adj_profile *p) const
    {
        adj_profile_free(p);
    }
};
using ProfilePtr = std::unique_ptr<adj_profile, ProfileDeleter>;

// Takes ownership of a library-allocated string.
std::string take(char *s)
{
    std::string out = s ? s : "";
    adj_string_free(s);
    return out;
}

// Carries a failed status out of a command body.
struct Failure {
    adj_status status;
    std::string message;
    json violations;
};

void check(adj_status s)
{
    if (s != ADJ_OK) {
        throw Failure{s, adj_last_error(), nullptr};
    }
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{ADJ_ERR_PARSE, "cannot read '" + path + "'", nullptr};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProfilePtr load(const std::string &path)
{
    adj_profile *p = nullptr;
    check(adj_profile_parse(read_file(path).c_str(), &p));
    return ProfilePtr(p);
}

// Loads and refuses to evaluate on a profile that violates its invariants.
ProfilePtr load_valid(const std::string &path)
{
    ProfilePtr p = load(path);
    size_t count = 0;
    char *violations = nullptr;
    check(adj_profile_validate(p.get(), &count, &violations));
    json v = json::parse(take(violations));
    if (count != 0) {
        throw Failure{ADJ_ERR_INVALID_PROFILE, "profile violates its invariants", std::move(v)};
    }
    return p;
}

struct Outcome {
    json report;
    int code = exit_ok;
};

// Runs one command body and wraps its result or failure in a report.
Outcome run_report(const std::string &command, json inputs, const std::function<void(json &)> &body)
{
    Outcome o;
    o.report["command"] = command;
    o.report["inputs"] = std::move(inputs);
    try {
        body(o.report);
    } catch (const Failure &f) {
        o.report["error"] = {{"kind", adj_status_name(f.status)}, {"message", f.message}};
        if (!f.violations.is_null()) {
            o.report["violations"] = f.violations;
        }
        o.code = exit_code_for(f.status);
    }
    return o;
}

// Evaluates `one` on every file with up to `jobs` workers and prints the
// reports in input order.
int run_batch(const std::vector<std::string> &files, unsigned jobs,
              const std::function<Outcome(const std::string &)> &one)
{
    std::vector<Outcome> results(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            results[i] = one(files[i]);
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    int code = exit_ok;
    for (const auto &r : results) {
        std::cout << r.report.dump(2) << "\n";
        code = std::max(code, r.code);
    }
    return code;
}

int write_output(const std::string &text, const std::string &path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return exit_ok;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "cannot write '" << path << "'\n";
        return exit_malformed;
    }
    return exit_ok;
}

// "g=76,deg=H:25;E:0" -> genus and {"H": "25/1", ...}
void parse_curve_spec(const std::string &spec, long &genus, json &degrees)
{
    bool have_genus = false;
    std::stringstream ss(spec);
    std::string field;
    while (std::getline(ss, field, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) {
            throw Failure{ADJ_ERR_PARSE, "curve spec field '" + field + "' has no '='", nullptr};
        }
        const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "g") {
            try {
                std::size_t used = 0;
                genus = std::stol(value, &used);
                if (used != value.size()) {
                    throw std::invalid_argument(value);
                }
            } catch (const std::exception &) {
                throw Failure{ADJ_ERR_PARSE, "bad genus '" + value + "'", nullptr};
            }
            have_genus = true;
        } else if (key == "deg") {
            std::stringstream ds(value);
            std::string item;
            while (std::getline(ds, item, ';')) {
                const auto colon = item.find(':');
                if (colon == std::string::npos) {
                    throw Failure{ADJ_ERR_PARSE, "degree '" + item + "' must read SYM:p/q", nullptr};
                }
                degrees[item.substr(0, colon)] = item.substr(colon + 1);
            }
        } else {
            throw Failure{ADJ_ERR_PARSE, "unknown curve spec key '" + key + "'", nullptr};
        }
    }
    if (!have_genus) {
        throw Failure{ADJ_ERR_PARSE, "curve spec needs g=<genus>", nullptr};
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact intersection-number calculator for adjoint bundles on threefolds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(adj_version()));

    unsigned jobs = 1;
    std::vector<std::string> files;
    std::string divisor, rule, target, with_h, symbol = "E", curve, output, catalog_name;
    bool point = false, want_h0 = false, identities_json = false, list = false;

    auto add_files = [&](CLI::App *cmd) {
        cmd->add_option("files", files, "Profile files")->required()->check(CLI::ExistingFile);
        cmd->add_option("--jobs,-j", jobs, "Evaluate files concurrently")->check(CLI::PositiveNumber);
    };

    auto *validate = app.add_subcommand("validate", "Check profile invariants");
    add_files(validate);

    auto *chi = app.add_subcommand("chi", "Euler characteristic of a line bundle");
    add_files(chi);
    chi->add_option("--divisor,-d", divisor, "Divisor expression or name")->required();
    chi->add_flag("--h0", want_h0, "Also report h0 using the declared vanishing flags");

    auto *bound = app.add_subcommand("bound", "Evaluate an effective lower bound");
    add_files(bound);
    bound->add_option("--divisor,-d", divisor, "The ample divisor A")->required();
    bound->add_option("--rule,-r", rule, "Bound to evaluate")
        ->required()
        ->check(CLI::IsMember({"fukuma-ka", "fukuma-gap", "nefbig", "bs", "miyaoka"}));
    bound->add_option("--with", with_h, "Miyaoka only: the ample class H (defaults to A)");

    auto *certify = app.add_subcommand("certify", "Certify non-vanishing of an adjoint bundle");
    add_files(certify);
    certify->add_option("--divisor,-d", divisor, "The ample divisor A")->required();
    certify->add_option("--target,-t", target, "K+A (adjoint) or K+2A (bs)")
        ->required()
        ->check(CLI::IsMember({"adjoint", "bs"}));

    auto *blowup = app.add_subcommand("blowup", "Blow up a point or a smooth curve");
    std::string blowup_file;
    blowup->add_option("file", blowup_file, "Profile file")->required()->check(CLI::ExistingFile);
    auto *point_opt = blowup->add_flag("--point", point, "Blow up a point");
    auto *curve_opt = blowup->add_option("--curve", curve, "Curve data: g=<genus>,deg=SYM:p/q[;SYM:p/q...]");
    point_opt->excludes(curve_opt);
    blowup->add_option("--symbol,-s", symbol, "Name of the exceptional divisor");
    blowup->add_option("--output,-o", output, "Write the profile here instead of stdout");

    auto *identities = app.add_subcommand("identities", "Verify the symbolic chi identities");
    identities->add_flag("--json", identities_json, "Print a JSON report");

    auto *catalog = app.add_subcommand("catalog", "Write a built-in profile");
    catalog->add_option("name", catalog_name, "Entry name, e.g. P3 or hypersurface(5)");
    catalog->add_flag("--list", list, "List entry names");
    catalog->add_option("--output,-o", output, "Write the profile here instead of stdout");

    auto *witness = app.add_subcommand("witness-bad-anticanonical", "Search eps with K.(F+eps H)^2 > 0");
    add_files(witness);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_malformed;
    }

    if (*validate) {
        return run_batch(files, jobs, [](const std::string &file) {
            return run_report("validate", {{"file", file}}, [&](json &r) {
                ProfilePtr p = load(file);
                size_t count = 0;
                char *v = nullptr;
                check(adj_profile_validate(p.get(), &count, &v));
                r["violations"] = json::parse(take(v));
                r["result"] = {{"valid", count == 0}};
                if (count != 0) {
                    throw Failure{ADJ_ERR_INVALID_PROFILE, "profile violates its invariants", r["violations"]};
                }
            });
        });
    }

    if (*chi) {
        return run_batch(files, jobs, [&](const std::string &file) {
            return run_report("chi", {{"file", file}, {"divisor", divisor}}, [&](json &r) {
                ProfilePtr p = load_valid(file);
                char *out = nullptr;
                check(adj_chi(p.get(), divisor.c_str(), &out));
                r["result"] = {{"chi", take(out)}};
                if (want_h0) {
                    check(adj_h0_from_chi(p.get(), divisor.c_str(), &out));
                    r["result"]["h0"] = take(out);
                }
            });
        });
    }

    if (*bound) {
        return run_batch(files, jobs, [&](const std::string &file) {
            json inputs = {{"file", file}, {"divisor", divisor}, {"rule", rule}};
            if (!with_h.empty()) {
                inputs["with"] = with_h;
            }
            return run_report("bound", std::move(inputs), [&](json &r) {
                ProfilePtr p = load_valid(file);
                char *out = nullptr;
                if (rule == "miyaoka") {
                    const std::string h = with_h.empty() ? divisor : with_h;
                    check(adj_miyaoka(p.get(), divisor.c_str(), h.c_str(), &out));
                    r["result"] = json::parse(take(out));
                    return;
                }
                check(adj_bound(p.get(), divisor.c_str(), rule.c_str(), &out));
                json res = json::parse(take(out));
                res["display"] = res["value"].get<std::string>() + " (ceil " + res["ceil"].get<std::string>() + ")";
                r["result"] = std::move(res);
            });
        });
    }

    if (*certify) {
        return run_batch(files, jobs, [&](const std::string &file) {
            return run_report("certify", {{"file", file}, {"divisor", divisor}, {"target", target}}, [&](json &r) {
                ProfilePtr p = load_valid(file);
                char *out = nullptr;
                check(adj_certify(p.get(), divisor.c_str(), target.c_str(), &out));
                json cert = json::parse(take(out));
                r["result"] = {{"conclusion", cert["conclusion"]}};
                r["certificate"] = std::move(cert);
            });
        });
    }

    if (*witness) {
        return run_batch(files, jobs, [&](const std::string &file) {
            return run_report("witness-bad-anticanonical", {{"file", file}}, [&](json &r) {
                ProfilePtr p = load_valid(file);
                char *out = nullptr;
                check(adj_witness_bad_anticanonical(p.get(), &out));
                r["result"] = json::parse(take(out));
            });
        });
    }

    if (*blowup) {
        if (!point && curve.empty()) {
            std::cerr << "blowup: one of --point or --curve is required\n";
            return exit_malformed;
        }
        json inputs = {{"file", blowup_file}, {"symbol", symbol}};
        std::string profile_text;
        Outcome o = run_report("blowup", inputs, [&](json &) {
            ProfilePtr p = load_valid(blowup_file);
            adj_profile *q = nullptr;
            if (point) {
                check(adj_blowup_point(p.get(), symbol.c_str(), &q));
            } else {
                long genus = 0;
                json degrees = json::object();
                parse_curve_spec(curve, genus, degrees);
                check(adj_blowup_curve(p.get(), symbol.c_str(), genus, degrees.dump().c_str(), &q));
            }
            ProfilePtr blown(q);
            char *text = nullptr;
            check(adj_profile_serialize(blown.get(), &text));
            profile_text = take(text);
        });
        if (o.code != exit_ok) {
            std::cout << o.report.dump(2) << "\n";
            return o.code;
        }
        return write_output(profile_text, output);
    }

    if (*identities) {
        char *out = nullptr;
        int all = 0;
        if (adj_identities(&out, &all) != ADJ_OK) {
            std::cerr << adj_last_error() << "\n";
            return exit_malformed;
        }
        const json suite = json::parse(take(out));
        if (identities_json) {
            const json report = {{"command", "identities"}, {"inputs", json::object()}, {"result", suite}};
            std::cout << report.dump(2) << "\n";
        } else {
            for (const auto &id : suite) {
                std::cout << (id["holds"].get<bool>() ? "PASS " : "FAIL ") << id["name"].get<std::string>() << "\n";
            }
        }
        return all ? exit_ok : exit_failed;
    }

    if (*catalog) {
        if (list) {
            char *out = nullptr;
            check(adj_catalog_names(&out));
            for (const auto &n : json::parse(take(out))) {
                std::cout << n.get<std::string>() << "\n";
            }
            return exit_ok;
        }
        if (catalog_name.empty()) {
            std::cerr << "catalog: an entry name is required\n";
            return exit_malformed;
        }
        std::string profile_text;
        Outcome o = run_report("catalog", {{"name", catalog_name}}, [&](json &) {
            adj_profile *p = nullptr;
            check(adj_catalog_get(catalog_name.c_str(), &p));
            ProfilePtr owned(p);
            char *text = nullptr;
            check(adj_profile_serialize(owned.get(), &text));
            profile_text = take(text);
        });
        if (o.code != exit_ok) {
            std::cout << o.report.dump(2) << "\n";
            return o.code;
        }
        return write_output(profile_text, output);
    }

    return exit_malformed;
}
