#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qkap/bijections.hpp"
#include "qkap/checker.hpp"
#include "qkap/errors.hpp"
#include "qkap/qseries.hpp"
#include "qkap/records.hpp"
#include "qkap/words.hpp"

namespace {

using namespace qkap;

struct Fmt {
    bool json = false;
    bool csv = false;
};

void add_fmt(CLI::App* cmd, Fmt& f) {
    auto* j = cmd->add_flag("--json", f.json, "emit JSON");
    auto* c = cmd->add_flag("--csv", f.csv, "emit CSV");
    j->excludes(c);
    c->excludes(j);
}

int run_coeffs(const std::string& family, const std::vector<int>& args, const Fmt& fmt) {
    auto need = [&](std::size_t k) {
        if (args.size() != k) {
            throw Error("family " + family + " takes " + std::to_string(k) +
                        (k == 1 ? " parameter" : " parameters"));
        }
    };
    IntPoly p;
    std::map<std::string, int> params;
    if (family == "gaussian") {
        need(2);
        p = gaussian(args[0], args[1]);
        params = {{"n", args[0]}, {"m", args[1]}};
    } else if (family == "kaplansky") {
        need(2);
        p = kaplansky(args[0], args[1]);
        params = {{"n", args[0]}, {"m", args[1]}};
    } else if (family == "catalan") {
        need(1);
        p = q_catalan(args[0]);
        params = {{"n", args[0]}};
    } else if (family == "reiner-stanton") {
        need(2);
        p = reiner_stanton(args[0], args[1]);
        params = {{"n", args[0]}, {"m", args[1]}};
    } else {
        throw Error("unknown family: " + family +
                    " (gaussian, kaplansky, catalan, reiner-stanton)");
    }
    OutputRecord rec = make_record(family, std::move(params), p);
    if (fmt.json) {
        std::cout << to_json(rec) << '\n';
    } else if (fmt.csv) {
        std::cout << to_csv(rec);
    } else {
        std::cout << to_human(rec);
    }
    return 0;
}

bool report_clean(const CheckReport& r) {
    return r.outcome != Outcome::falsified && r.counterexamples.empty();
}

void print_report(const CheckReport& r, const Fmt& fmt) {
    if (fmt.json) {
        std::cout << to_json(r) << '\n';
    } else if (fmt.csv) {
        std::cout << to_csv(r);
    } else {
        std::cout << to_human(r);
    }
}

int run_check_cmd(const std::string& id, const std::string& profile_str, bool has_max_n,
                  int max_n, bool allow_large, const Fmt& fmt) {
    auto prof = profile_from_name(profile_str);
    if (!prof) {
        throw Error("unknown profile: " + profile_str + " (quick, standard, extended)");
    }
    if (id == "all") {
        if (has_max_n) throw Error("--max-n applies to a single check, not 'all'");
        std::vector<CheckReport> reports = run_all(*prof);
        bool clean = true;
        if (fmt.json) {
            std::cout << to_json(reports) << '\n';
        } else if (fmt.csv) {
            std::cout << to_csv(reports);
        }
        std::size_t verified = 0, falsified = 0, scans = 0, violations = 0;
        for (const CheckReport& r : reports) {
            if (!fmt.json && !fmt.csv) std::cout << to_human(r);
            clean = clean && report_clean(r);
            switch (r.outcome) {
                case Outcome::verified: ++verified; break;
                case Outcome::falsified: ++falsified; break;
                case Outcome::scan_report:
                    ++scans;
                    violations += r.counterexamples.size();
                    break;
            }
        }
        if (!fmt.json && !fmt.csv) {
            std::cout << "registry: " << reports.size() << " checks, " << verified
                      << " verified, " << falsified << " falsified, " << scans << " scans ("
                      << violations << " violations)\n";
        }
        return clean ? 0 : 1;
    }
    if (!is_check_id(id)) {
        std::ostringstream msg;
        msg << "unknown check id: " << id << "\nvalid ids:";
        for (const std::string& known : check_ids()) msg << "\n  " << known;
        throw UnknownCheckError(msg.str());
    }
    CheckBounds bounds = default_bounds(id, *prof);
    if (has_max_n) {
        std::string key = primary_bound_key(id);
        if (key.empty()) {
            throw Error("check " + id + " has fixed parameters; --max-n does not apply");
        }
        bounds.values[key] = max_n;
    }
    bounds.allow_large = allow_large;
    CheckReport rep = run_check(id, bounds);
    print_report(rep, fmt);
    return report_clean(rep) ? 0 : 1;
}

int run_scan(const std::string& which, bool has_from, int from, int to, bool allow_large,
             const Fmt& fmt) {
    if (!has_from) from = (which == "conj18") ? 16 : 1;
    CheckReport rep = scan_conjecture(which, from, to, allow_large);
    print_report(rep, fmt);
    return rep.counterexamples.empty() ? 0 : 1;
}

int run_bijection(const std::string& name, const std::string& word_str, const Fmt& fmt) {
    BinaryWord w = BinaryWord::from_string(word_str);
    BinaryWord v;
    if (name == "foata") {
        v = foata(w);
    } else if (name == "foata-inv") {
        v = foata_inv(w);
    } else if (name == "psi") {
        v = psi(w);
    } else if (name == "psi-inv") {
        v = psi_inv(w);
    } else if (name == "varphi" || name == "wrap") {
        v = wrap(w);
    } else if (name == "varphi-inv" || name == "wrap-inv") {
        v = wrap_inv(w);
    } else if (name == "tau") {
        v = tau(w);
    } else if (name == "tau-inv") {
        v = tau_inv(w);
    } else {
        throw Error("unknown map: " + name +
                    " (foata, foata-inv, psi, psi-inv, varphi, varphi-inv, tau, tau-inv)");
    }
    const std::size_t in_inv = inv(w), in_maj = maj(w);
    const std::size_t out_inv = inv(v), out_maj = maj(v);
    if (fmt.json) {
        nlohmann::ordered_json j;
        j["map"] = name;
        j["input"] = w.to_string();
        j["image"] = v.to_string();
        j["input_inv"] = in_inv;
        j["input_maj"] = in_maj;
        j["image_inv"] = out_inv;
        j["image_maj"] = out_maj;
        std::cout << j.dump(2) << '\n';
    } else if (fmt.csv) {
        std::cout << "map,input,image,input_inv,input_maj,image_inv,image_maj\n"
                  << name << ',' << w.to_string() << ',' << v.to_string() << ',' << in_inv
                  << ',' << in_maj << ',' << out_inv << ',' << out_maj << '\n';
    } else {
        std::cout << name << ": " << w.to_string() << " -> " << v.to_string() << '\n'
                  << "  input  inv=" << in_inv << " maj=" << in_maj << '\n'
                  << "  image  inv=" << out_inv << " maj=" << out_maj << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-binomial families: coefficient tables, statistic-preserving "
                 "bijections, instance checks, conjecture scans"};
    app.require_subcommand(1);

    auto* coeffs_cmd = app.add_subcommand("coeffs", "print one polynomial as a coefficient table");
    std::string family;
    std::vector<int> family_args;
    Fmt coeffs_fmt;
    coeffs_cmd->add_option("family", family, "gaussian | kaplansky | catalan | reiner-stanton")
        ->required();
    coeffs_cmd->add_option("params", family_args, "integer parameters: n, or n m")
        ->required()
        ->expected(1, 2);
    add_fmt(coeffs_cmd, coeffs_fmt);

    auto* check_cmd = app.add_subcommand("check", "run one verification check or 'all'");
    std::string check_id;
    std::string profile_str = "standard";
    int max_n = 0;
    bool check_allow_large = false;
    Fmt check_fmt;
    check_cmd->add_option("id", check_id, "check id, or 'all' for the whole registry")
        ->required();
    check_cmd->add_option("--profile", profile_str, "quick | standard | extended")
        ->capture_default_str();
    auto* max_n_opt =
        check_cmd->add_option("--max-n", max_n, "override the check's main sweep bound");
    check_cmd->add_flag("--allow-large", check_allow_large,
                        "lift the per-check guard on sweep bounds");
    add_fmt(check_cmd, check_fmt);

    auto* scan_cmd = app.add_subcommand("scan", "sweep a conjecture over a range of n");
    std::string which;
    int from = 0, to = 0;
    bool scan_allow_large = false;
    Fmt scan_fmt;
    scan_cmd->add_option("conjecture", which, "conj18 | conj19")->required();
    auto* from_opt =
        scan_cmd->add_option("--from", from, "first n (default 16 for conj18, 1 for conj19)");
    scan_cmd->add_option("--to", to, "last n")->required();
    scan_cmd->add_flag("--allow-large", scan_allow_large,
                       "lift the guard on the scan's upper end");
    add_fmt(scan_cmd, scan_fmt);

    auto* bij_cmd = app.add_subcommand("bijection", "apply a statistic-preserving map to a 0/1 word");
    std::string map_name, word_str;
    Fmt bij_fmt;
    bij_cmd->add_option("name", map_name,
                        "foata | foata-inv | psi | psi-inv | varphi | varphi-inv | tau | tau-inv")
        ->required();
    bij_cmd->add_option("word", word_str, "binary word, e.g. 10010110")->required();
    add_fmt(bij_cmd, bij_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (coeffs_cmd->parsed()) return run_coeffs(family, family_args, coeffs_fmt);
        if (check_cmd->parsed()) {
            return run_check_cmd(check_id, profile_str, max_n_opt->count() > 0, max_n,
                                 check_allow_large, check_fmt);
        }
        if (scan_cmd->parsed()) {
            return run_scan(which, from_opt->count() > 0, from, to, scan_allow_large, scan_fmt);
        }
        if (bij_cmd->parsed()) return run_bijection(map_name, word_str, bij_fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
