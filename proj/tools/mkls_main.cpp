#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mkls/checks.hpp"
#include "mkls/json_io.hpp"

namespace {

using namespace mkls;

constexpr int kHardCap = 16;

struct OutputOptions {
    bool as_json = false;
    std::string out_path;
};

void emit(const json& j, const std::string& table, const OutputOptions& o) {
    std::string text = o.as_json ? j.dump(2) + "\n" : table;
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + o.out_path);
        f << text;
    } else {
        std::cout << text;
    }
}

json load_json(const std::string& path_or_inline) {
    if (!path_or_inline.empty() && path_or_inline[0] == '{')
        return json::parse(path_or_inline);
    std::ifstream f(path_or_inline);
    if (!f) throw std::invalid_argument("cannot open matroid spec: " + path_or_inline);
    return json::parse(f);
}

void enforce_cap(const Matroid& m, bool unsafe_large) {
    if (m.ground_size() > kHardCap && !unsafe_large)
        throw std::invalid_argument("ground set exceeds " + std::to_string(kHardCap) +
                                    " elements; pass --unsafe-large to override");
}

// --range k=1..5,n=9 -> {"k": (1,5), "n": (9,9)}
std::map<std::string, std::pair<int, int>> parse_range(const std::string& spec) {
    std::map<std::string, std::pair<int, int>> out;
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad --range entry (expected var=lo..hi): " + item);
        std::string var = item.substr(0, eq), val = item.substr(eq + 1);
        auto dots = val.find("..");
        int lo, hi;
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(val);
            } else {
                lo = std::stoi(val.substr(0, dots));
                hi = std::stoi(val.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad --range bounds in: " + item);
        }
        if (lo > hi) throw std::invalid_argument("empty --range interval in: " + item);
        out[var] = {lo, hi};
    }
    return out;
}

std::string schur_str(const SchurVector& v) {
    if (v.coeffs().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [la, c] : v.coeffs()) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Int a = c < 0 ? -c : c;
        if (a != 1) os << a.str() << "*";
        os << "s_" << la.str();
    }
    return os.str();
}

std::string graded_rep_str(const GradedRep& f) {
    std::ostringstream os;
    os << (f.flavor() == Flavor::SymmetricGroup ? "S_" : "GL-unipotent, n=")
       << f.group_degree() << ":\n";
    for (int i = 0; i <= f.degree(); ++i)
        os << "  t^" << i << ": " << schur_str(f.coeff(i)) << "\n";
    return os.str();
}

// --- MKLS_CACHE_DIR: content-addressed memo persistence -------------------

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<std::string> cache_path(const json& matroid_json, const std::string& tag) {
    const char* dir = std::getenv("MKLS_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    std::ostringstream os;
    os << dir << "/" << std::hex << fnv1a(matroid_json.dump() + "#" + tag) << ".json";
    return os.str();
}

std::optional<json> cache_load(const std::optional<std::string>& path) {
    if (!path) return std::nullopt;
    std::ifstream f(*path);
    if (!f) return std::nullopt;
    try {
        return json::parse(f);
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt cache entries are ignored
    }
}

void cache_store(const std::optional<std::string>& path, const json& j) {
    if (!path) return;
    std::ofstream f(*path);
    if (f) f << j.dump();
}

// --- compute ---------------------------------------------------------------

json compute_report(const Matroid& m) {
    json j;
    j["matroid"] = matroid_to_json(m);
    j["char_poly"] = poly_to_json(char_poly(m));
    KlsEngine e(m);
    IntPolynomial y = e.inv_z_poly();
    j["P"] = poly_to_json(e.kl_poly());
    j["Q"] = poly_to_json(e.inverse_kl_poly());
    j["Z"] = poly_to_json(e.z_poly());
    j["Y"] = poly_to_json(y);
    j["predicates"] = json{{"Y_palindromic", y.is_palindromic(m.rank())},
                           {"Y_unimodal", y.unimodal()},
                           {"Y_strongly_log_concave", y.strongly_log_concave()}};
    return j;
}

std::string compute_table(const json& j) {
    std::ostringstream os;
    const auto& m = j["matroid"];
    os << "matroid: " << m["backend"].get<std::string>() << " n=" << m["n"].get<int>()
       << " k=" << m["k"].get<int>() << "\n";
    for (const char* f : {"char_poly", "P", "Q", "Z", "Y"})
        os << f << " = " << poly_from_json(j[f]).str() << "\n";
    for (const auto& [key, val] : j["predicates"].items())
        os << key << " = " << (val.get<bool>() ? "true" : "false") << "\n";
    return os.str();
}

int cmd_compute(const std::string& spec, bool unsafe_large, bool freeze,
                const OutputOptions& out) {
    json mj = load_json(spec);
    Matroid m = matroid_from_json(mj);
    enforce_cap(m, unsafe_large);
    json canonical = matroid_to_json(m);
    auto cpath = cache_path(canonical, "compute");
    json j;
    if (auto hit = cache_load(cpath)) {
        j = *hit;
    } else {
        j = compute_report(m);
        cache_store(cpath, j);
    }
    if (freeze) {
        if (out.out_path.empty())
            throw std::invalid_argument("--freeze requires --out FILE for the fixture");
        j["frozen"] = true;
        OutputOptions fo{true, out.out_path};
        emit(j, "", fo);
        return 0;
    }
    emit(j, compute_table(j), out);
    return 0;
}

// --- formula ---------------------------------------------------------------

const std::vector<std::string> kFormulaIds = {
    "equiv_Y_uniform",        "equiv_Y_uniform_irreducible",
    "equiv_Y_uniform_via_definition", "equiv_Q_uniform",
    "equiv_mobius_uniform",   "ordinary_Y_uniform",
    "equiv_Y_qniform",        "ordinary_Y_qniform",
    "paving_delta",           "equiv_char_qniform",
    "ordinary_paving_Y"};

int cmd_formula(const std::string& id, int k, int n, int h, int q,
                const std::string& matroid_spec, const OutputOptions& out) {
    json j{{"formula", id}};
    std::ostringstream table;
    auto need = [&](int v, const char* name) {
        if (v <= 0)
            throw std::invalid_argument(std::string("formula ") + id + " needs --" + name);
    };
    auto emit_rep = [&](const GradedRep& f, json params) {
        j["params"] = std::move(params);
        j["value"] = graded_rep_to_json(f);
        table << id << ":\n" << graded_rep_str(f);
    };
    auto emit_poly = [&](const IntPolynomial& p, json params) {
        j["params"] = std::move(params);
        j["value"] = poly_to_json(p);
        table << id << " = " << p.str() << "\n";
    };
    if (id == "equiv_Y_uniform" || id == "equiv_Y_uniform_irreducible" ||
        id == "equiv_Y_uniform_via_definition" || id == "equiv_Q_uniform" ||
        id == "equiv_Y_qniform" || id == "equiv_char_qniform") {
        need(k, "k"), need(n, "n");
        GradedRep f = id == "equiv_Y_uniform"              ? equiv_Y_uniform(k, n)
                      : id == "equiv_Y_uniform_irreducible" ? equiv_Y_uniform_irreducible(k, n)
                      : id == "equiv_Y_uniform_via_definition"
                          ? equiv_Y_uniform_via_definition(k, n)
                      : id == "equiv_Q_uniform" ? equiv_Q_uniform(k, n)
                      : id == "equiv_Y_qniform" ? equiv_Y_qniform(k, n)
                                                : equiv_char_qniform(k, n);
        emit_rep(f, json{{"k", k}, {"n", n}});
    } else if (id == "equiv_mobius_uniform") {
        need(k, "k"), need(n, "n");
        SchurVector v = equiv_mobius_uniform(k, n);
        j["params"] = json{{"k", k}, {"n", n}};
        j["value"] = schur_vector_to_json(v);
        table << id << " = " << schur_str(v) << "\n";
    } else if (id == "ordinary_Y_uniform") {
        need(k, "k"), need(n, "n");
        emit_poly(ordinary_Y_uniform(k, n), json{{"k", k}, {"n", n}});
    } else if (id == "ordinary_Y_qniform") {
        need(k, "k"), need(n, "n"), need(q, "q");
        emit_poly(ordinary_Y_qniform(k, n, q), json{{"k", k}, {"n", n}, {"q", q}});
    } else if (id == "paving_delta") {
        need(k, "k"), need(h, "h");
        emit_rep(paving_delta(k, h), json{{"k", k}, {"h", h}});
    } else if (id == "ordinary_paving_Y") {
        if (matroid_spec.empty())
            throw std::invalid_argument("ordinary_paving_Y needs --matroid SPEC");
        Matroid m = matroid_from_json(load_json(matroid_spec));
        PavingProfile prof = paving_profile(m);
        json lam = json::object();
        for (auto [hh, c] : prof.lambda) lam[std::to_string(hh)] = c;
        emit_poly(ordinary_paving_Y(prof),
                  json{{"k", prof.k}, {"n", prof.n}, {"lambda", lam}});
    } else {
        std::ostringstream msg;
        msg << "unknown formula id: " << id << "\nknown ids:";
        for (const auto& f : kFormulaIds) msg << " " << f;
        throw std::invalid_argument(msg.str());
    }
    emit(j, table.str(), out);
    return 0;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(std::vector<std::string> ids, const CheckOptions& opts,
               const OutputOptions& out) {
    if (ids.empty()) ids = known_check_ids();
    const auto known = known_check_ids();
    for (const auto& id : ids)
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            std::ostringstream msg;
            msg << "unknown theorem id: " << id << "\nknown ids:";
            for (const auto& kid : known) msg << " " << kid;
            throw std::invalid_argument(msg.str());
        }
    json reports = json::array();
    std::ostringstream table;
    bool all_pass = true;
    for (const auto& id : ids) {
        TheoremReport r = run_check(id, opts);
        reports.push_back(theorem_report_to_json(r));
        table << r.theorem_id << "  " << (r.pass ? "pass" : "FAIL") << "  (" << r.params
              << ")\n";
        for (const auto& w : r.witnesses) table << "    witness: " << w << "\n";
        all_pass = all_pass && r.pass;
    }
    emit(json{{"reports", reports}, {"all_pass", all_pass}}, table.str(), out);
    return all_pass ? 0 : 1;
}

// --- relax -----------------------------------------------------------------

int cmd_relax(const std::string& spec, const std::vector<std::string>& hyp_args,
              bool all_stressed, bool unsafe_large, const OutputOptions& out) {
    Matroid m = matroid_from_json(load_json(spec));
    enforce_cap(m, unsafe_large);
    std::vector<Bits> targets;
    if (all_stressed) {
        for (Bits h : stressed_hyperplanes(m))
            if (popcount(h) >= m.rank()) targets.push_back(h);
    } else {
        for (const auto& a : hyp_args) {
            Bits h = 0;
            std::stringstream ss(a);
            std::string e;
            while (std::getline(ss, e, ',')) {
                int v = std::stoi(e);
                if (v < 0 || v >= m.ground_size())
                    throw std::invalid_argument("hyperplane element out of range: " + e);
                h |= Bits(1) << v;
            }
            if (!m.is_stressed_hyperplane(h) || popcount(h) < m.rank())
                throw std::invalid_argument("selection is not a relaxable stressed hyperplane: " +
                                            a);
            targets.push_back(h);
        }
    }
    KlsEngine before(m);
    IntPolynomial y0 = before.inv_z_poly();
    json j{{"matroid", matroid_to_json(m)}, {"Y_before", poly_to_json(y0)}};
    std::ostringstream table;
    table << "Y before = " << y0.str() << "\n";
    if (targets.empty()) {
        j["relaxed"] = json::array();
        j["Y_after"] = poly_to_json(y0);
        j["diff"] = poly_to_json(IntPolynomial());
        j["match"] = true;
        table << "nothing to relax\n";
        emit(j, table.str(), out);
        return 0;
    }
    Matroid cur = m;
    IntPolynomial predicted;
    json relaxed = json::array();
    for (Bits h : targets) {
        if (!cur.is_stressed_hyperplane(h))
            throw std::invalid_argument("hyperplane no longer stressed after earlier relaxation");
        predicted += dimension_poly(paving_delta(m.rank(), popcount(h)));
        relaxed.push_back(subset_to_json(h));
        cur = cur.relax(h);
    }
    KlsEngine after(cur);
    IntPolynomial y1 = after.inv_z_poly();
    IntPolynomial diff = y1 - y0;
    const bool match = diff == predicted;
    j["relaxed"] = relaxed;
    j["Y_after"] = poly_to_json(y1);
    j["diff"] = poly_to_json(diff);
    j["predicted_diff"] = poly_to_json(predicted);
    j["match"] = match;
    table << "relaxed " << targets.size() << " hyperplane(s)\n"
          << "Y after  = " << y1.str() << "\n"
          << "diff      = " << diff.str() << "\n"
          << "predicted = " << predicted.str() << "\n"
          << "match = " << (match ? "true" : "false") << "\n";
    emit(j, table.str(), out);
    return match ? 0 : 1;
}

// --- explore ---------------------------------------------------------------

int cmd_explore(std::uint64_t seed, int count, int n_min, int n_max, bool unsafe_large,
                const OutputOptions& out) {
    if (n_max > kHardCap && !unsafe_large)
        throw std::invalid_argument("range exceeds the n <= 16 cap; pass --unsafe-large");
    if (n_min < 3 || n_min > n_max) throw std::invalid_argument("explore: need 3 <= n_min <= n_max");
    std::mt19937_64 rng(seed);
    json findings = json::array();
    std::ostringstream table;
    int bad = 0;
    for (int i = 0; i < count; ++i) {
        Matroid m = random_sparse_paving(rng, n_min, n_max);
        KlsEngine e(m);
        IntPolynomial y = e.inv_z_poly();
        const bool uni = y.unimodal(), slc = y.strongly_log_concave();
        if (uni && slc) continue;
        ++bad;
        json f{{"instance", i},
               {"matroid", matroid_to_json(m)},
               {"Y", poly_to_json(y)},
               {"unimodal", uni},
               {"strongly_log_concave", slc}};
        findings.push_back(f);
        table << "counterexample at instance " << i << ": " << f.dump() << "\n";
        std::cout << f.dump() << "\n";  // stream findings as they appear
    }
    table << "instances = " << count << ", counterexamples = " << bad << "\n";
    emit(json{{"seed", seed}, {"count", count}, {"counterexamples", bad},
              {"findings", findings}},
         table.str(), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mkls: exact Kazhdan-Lusztig-Stanley invariants of matroids"};
    app.require_subcommand(1);

    OutputOptions out;
    bool unsafe_large = false, freeze = false, all_stressed = false;
    std::string matroid_spec, range_spec, formula_id;
    std::vector<std::string> ids, hyps;
    std::uint64_t seed = 1;
    int k = 0, n = 0, h = 0, q = 0, count = 200, jobs = 1;

    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json", out.as_json, "emit JSON instead of a table");
        c->add_option("--out", out.out_path, "write output to FILE");
        c->add_option("--jobs", jobs, "worker count hint (execution is sequential)");
    };

    CLI::App* c_compute = app.add_subcommand("compute", "invariants of a matroid spec");
    c_compute->add_option("--matroid", matroid_spec, "spec file or inline JSON")->required();
    c_compute->add_flag("--unsafe-large", unsafe_large, "lift the n <= 16 cap");
    c_compute->add_flag("--freeze", freeze, "write an oracle fixture to --out");
    add_common(c_compute);

    CLI::App* c_formula = app.add_subcommand("formula", "evaluate a closed form");
    c_formula->set_help_flag("--help", "print help");
    c_formula->add_option("id", formula_id, "formula id")->required();
    c_formula->add_option("-k,--k", k, "rank parameter");
    c_formula->add_option("-n,--n", n, "ground-set / space parameter");
    c_formula->add_option("--h", h, "hyperplane-size parameter");
    c_formula->add_option("-q,--q", q, "prime field size");
    c_formula->add_option("--matroid", matroid_spec, "matroid spec (ordinary_paving_Y)");
    add_common(c_formula);

    CLI::App* c_verify = app.add_subcommand("verify", "run theorem-verification sweeps");
    c_verify->add_option("ids", ids, "theorem ids (default: all)");
    c_verify->add_option("--range", range_spec, "parameter range, e.g. n=1..8");
    c_verify->add_option("--seed", seed, "seed for randomized sweeps");
    c_verify->add_option("--count", count, "instances for randomized sweeps");
    add_common(c_verify);

    CLI::App* c_relax = app.add_subcommand("relax", "relax stressed hyperplanes");
    c_relax->add_option("--matroid", matroid_spec, "spec file or inline JSON")->required();
    c_relax->add_option("--hyperplane", hyps, "comma-separated elements (repeatable)");
    c_relax->add_flag("--all-stressed", all_stressed, "relax every relaxable stressed hyperplane");
    c_relax->add_flag("--unsafe-large", unsafe_large, "lift the n <= 16 cap");
    add_common(c_relax);

    CLI::App* c_explore = app.add_subcommand("explore", "test conjectures on random matroids");
    c_explore->add_option("--seed", seed, "generator seed");
    c_explore->add_option("--count", count, "number of instances");
    c_explore->add_option("--range", range_spec, "n range, e.g. n=4..9");
    c_explore->add_flag("--unsafe-large", unsafe_large, "lift the n <= 16 cap");
    add_common(c_explore);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (c_compute->parsed()) return cmd_compute(matroid_spec, unsafe_large, freeze, out);
        if (c_formula->parsed())
            return cmd_formula(formula_id, k, n, h, q, matroid_spec, out);
        if (c_verify->parsed()) {
            CheckOptions opts;
            opts.seed = seed;
            opts.count = count;
            auto ranges = parse_range(range_spec);
            if (auto it = ranges.find("n"); it != ranges.end()) opts.n_max = it->second.second;
            return cmd_verify(ids, opts, out);
        }
        if (c_relax->parsed())
            return cmd_relax(matroid_spec, hyps, all_stressed, unsafe_large, out);
        if (c_explore->parsed()) {
            auto ranges = parse_range(range_spec);
            int lo = 4, hi = 9;
            if (auto it = ranges.find("n"); it != ranges.end()) {
                lo = it->second.first;
                hi = it->second.second;
            }
            return cmd_explore(seed, count, lo, hi, unsafe_large, out);
        }
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
