// arithq: exact-arithmetic CLI for Weil-number purity tests, symplectic
// witness verification, local-field extension counts, formal parallel
// transport and Kodaira-Parshin parameter searches. Batch computation
// only; every subcommand emits a deterministic report (JSON with --json).
//
// Exit codes: 0 success, 1 negative verdict, 2 usage or input error.

#include "arithq/formalode.hpp"
#include "arithq/kp.hpp"
#include "arithq/localfield.hpp"
#include "arithq/numbertheory.hpp"
#include "arithq/symplectic.hpp"
#include "arithq/trichotomy.hpp"
#include "arithq/weil.hpp"

#include "parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>

namespace {

using arithq::Int;
using arithq::Rat;
using json = nlohmann::ordered_json;

json json_rat(const Rat& r) {
    json j;
    j["fraction"] = r.get_num().get_str() + "/" + r.get_den().get_str();
    j["decimal"] = arithq::rat_decimal(r);
    return j;
}

json json_conditions(const arithq::ConditionReport& rep) {
    json arr = json::array();
    for (const auto& item : rep.items) {
        json c;
        c["name"] = item.name;
        c["pass"] = item.pass;
        if (item.is_inequality) {
            c["lhs"] = json_rat(item.lhs);
            c["rhs"] = json_rat(item.rhs);
            c["marginal"] = item.marginal;
        }
        if (!item.note.empty()) c["note"] = item.note;
        arr.push_back(std::move(c));
    }
    return arr;
}

void render_text(const json& j, const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object() || value.is_array()) {
            render_text(value, name);
        } else {
            std::cout << name << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                      << "\n";
        }
    }
}

struct Emitter {
    bool json_mode = false;
    bool with_timing = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int emit(const std::string& command, json inputs, json outputs, int code) const {
        json report;
        report["schema_version"] = 1;
        report["command"] = command;
        report["inputs"] = std::move(inputs);
        report["outputs"] = std::move(outputs);
        if (with_timing) {
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            report["timing"] = {{"elapsed_ms", static_cast<double>(us) / 1000.0}};
        }
        if (json_mode) {
            std::cout << report.dump(2) << "\n";
        } else {
            render_text(report, "");
        }
        return code;
    }
};

struct PlaceArgs {
    std::string qv;
    std::string p;
    unsigned e = 1, f = 1;
    bool not_self_conjugate = false;
    bool good_reduction = false;

    void attach(CLI::App* cmd, bool with_flags = true) {
        cmd->add_option("--qv", qv, "residue cardinality q_v (prime power); shorthand for an unramified place");
        cmd->add_option("--p", p, "residue characteristic of the place");
        cmd->add_option("--e", e, "ramification index over Q_p");
        cmd->add_option("--f", f, "residue degree over Q_p");
        if (with_flags) {
            cmd->add_flag("--not-self-conjugate", not_self_conjugate,
                          "withdraw the self-conjugacy flag");
            cmd->add_flag("--good-reduction", good_reduction, "mark the place as good reduction");
        }
    }

    arithq::PlaceProfile resolve(bool* provided = nullptr) const {
        arithq::PlaceProfile place;
        if (!qv.empty()) {
            Int q(qv);
            auto fac = arithq::factor(q);
            if (fac.size() != 1)
                throw arithq::cli::ParseError("--qv must be a prime power, got " + qv);
            place.p = fac[0].prime;
            place.f = fac[0].exponent;
            place.e = 1;
        } else if (!p.empty()) {
            place.p = Int(p);
            place.e = e;
            place.f = f;
        } else {
            place.p = 2;  // default place: q_v = 2
            if (provided) *provided = false;
        }
        if (provided && (!qv.empty() || !p.empty())) *provided = true;
        place.self_conjugate = !not_self_conjugate;
        place.good_reduction = good_reduction;
        return place;
    }

    json describe(const arithq::PlaceProfile& place) const {
        json j;
        j["p"] = place.p.get_str();
        j["e"] = place.e;
        j["f"] = place.f;
        j["qv"] = arithq::residue_cardinality(place).get_str();
        j["self_conjugate"] = place.self_conjugate;
        j["good_reduction"] = place.good_reduction;
        return j;
    }
};

arithq::Variant parse_variant(const std::string& name) {
    if (name == "new") return arithq::Variant::New;
    if (name == "original") return arithq::Variant::Original;
    if (name == "prop") return arithq::Variant::Prop;
    throw arithq::cli::ParseError("unknown variant '" + name + "' (expected new|original|prop)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithq: exact arithmetic for Weil polynomials, symplectic witnesses,\n"
                 "local-field extension counts and Kodaira-Parshin parameter searches"};
    app.require_subcommand(1);

    Emitter emitter;
    bool no_timing = false;
    app.add_flag("--json", emitter.json_mode, "emit the report as JSON");
    app.add_flag("--no-timing", no_timing, "omit timing from the report");

    // ---- find-q / check-q ----
    struct QArgs {
        unsigned genus = 2;
        std::string variant = "new";
        std::string n_v;
        std::string q;
        std::string ceiling = "1000000";
        bool good_model = false;
        bool not_friendly = false;
        PlaceArgs place;
    } qargs;

    auto add_q_options = [&](CLI::App* cmd, bool with_q) {
        if (with_q) cmd->add_option("--q", qargs.q, "odd prime to check")->required();
        cmd->add_option("--genus", qargs.genus, "curve genus g >= 2")->required();
        cmd->add_option("--variant", qargs.variant, "condition list: new|original|prop");
        cmd->add_option("--n-v", qargs.n_v, "override n_v (good-reduction substitution)");
        cmd->add_flag("--good-model", qargs.good_model, "grant the good-model assumption");
        cmd->add_flag("--not-friendly", qargs.not_friendly,
                      "withdraw the unramified-over-Q and odd-residue-characteristic flags");
        if (!with_q) cmd->add_option("--ceiling", qargs.ceiling, "search ceiling for q");
        qargs.place.attach(cmd);
    };

    CLI::App* find_q = app.add_subcommand("find-q", "least odd prime q passing the chosen conditions");
    add_q_options(find_q, false);
    CLI::App* check_q = app.add_subcommand("check-q", "check one odd prime q against the conditions");
    add_q_options(check_q, true);

    auto build_query = [&]() {
        arithq::KPQuery query;
        query.genus = qargs.genus;
        query.variant = parse_variant(qargs.variant);
        query.place = qargs.place.resolve();
        if (!qargs.n_v.empty()) query.n_v_override = Int(qargs.n_v);
        query.good_model = qargs.good_model;
        query.friendly = !qargs.not_friendly;
        return query;
    };
    auto query_inputs = [&](const arithq::KPQuery& query) {
        json in;
        in["genus"] = query.genus;
        in["variant"] = qargs.variant;
        in["place"] = qargs.place.describe(query.place);
        if (query.n_v_override) in["n_v_override"] = query.n_v_override->get_str();
        in["good_model"] = query.good_model;
        in["friendly"] = query.friendly;
        return in;
    };

    // ---- density / linnik-q ----
    std::string density_q;
    CLI::App* density = app.add_subcommand("density", "place-density lower bound for a parameter q");
    density->add_option("--q", density_q, "odd prime")->required();

    std::string linnik_r0, linnik_ceiling = "1000000000";
    CLI::App* linnik = app.add_subcommand(
        "linnik-q", "least prime congruent to 3 mod 4 and 2 mod all odd primes below r0");
    linnik->add_option("--r0", linnik_r0, "prime cut-off")->required();
    linnik->add_option("--ceiling", linnik_ceiling, "search ceiling");

    // ---- count-ext / n-v ----
    PlaceArgs ext_place;
    unsigned ext_degree = 2;
    CLI::App* count_ext = app.add_subcommand("count-ext", "extensions of K_v of one degree inside a fixed closure");
    ext_place.attach(count_ext);
    count_ext->add_option("--degree", ext_degree, "extension degree, 2 or 3")->required();
    CLI::App* nv_cmd = app.add_subcommand("n-v", "number of extensions of K_v of degree 2 or 3");
    ext_place.attach(nv_cmd);

    // ---- weil-check ----
    std::string weil_poly, weil_q;
    unsigned weil_n = 1;
    CLI::App* weil = app.add_subcommand("weil-check", "decide whether a monic polynomial is q-Weil of weight n");
    weil->add_option("--poly", weil_poly, "monic integer polynomial in x, e.g. \"x^2-3x+2\"")->required();
    weil->add_option("--q", weil_q, "prime power >= 2")->required();
    weil->add_option("--n", weil_n, "weight (nonnegative integer)");

    // ---- sublemma / lagrangian-count ----
    unsigned sub_p = 3, sub_d = 2;
    std::string sub_lambdas;
    CLI::App* sublemma = app.add_subcommand(
        "sublemma", "build the four-Lagrangian witness tuple and verify it by brute force");
    sublemma->add_option("--char", sub_p, "field characteristic p")->required();
    sublemma->add_option("--d", sub_d, "half-dimension d")->required();
    sublemma->add_option("--lambdas", sub_lambdas, "d distinct nonzero eigenvalues, e.g. \"1,2\"")->required();

    unsigned lag_p = 3, lag_dim = 4;
    CLI::App* lag = app.add_subcommand("lagrangian-count", "count Lagrangian subspaces by enumeration");
    lag->add_option("--char", lag_p, "field characteristic p")->required();
    lag->add_option("--dim", lag_dim, "ambient dimension 2d")->required();

    // ---- surj-count ----
    unsigned surj_g = 1;
    std::string surj_k;
    CLI::App* surj = app.add_subcommand("surj-count", "number of surjections Z^2g -> Z/kZ");
    surj->add_option("--genus", surj_g, "g >= 1")->required();
    surj->add_option("--k", surj_k, "modulus k >= 1")->required();

    // ---- transport / flat-check ----
    struct OdeArgs {
        std::string omega;
        unsigned order = 8;
        std::string at;
    } ode;
    CLI::App* transport = app.add_subcommand(
        "transport", "formal parallel transport T with dT = -omega T, T(0) = I");
    transport->add_option("--omega", ode.omega,
                          "connection matrices per variable, ';'-separated, e.g. \"[[0,1],[0,0]]\"")
        ->required();
    transport->add_option("--order", ode.order, "truncation order N");
    transport->add_option("--at", ode.at, "evaluate T at a rational point, e.g. \"1/2\"");
    CLI::App* flat = app.add_subcommand("flat-check", "test the flatness identity for a connection form");
    flat->add_option("--omega", ode.omega, "connection matrices per variable, ';'-separated")->required();
    flat->add_option("--order", ode.order, "truncation order N");

    // ---- size-v / weight-identity / trichotomy-scan / dims ----
    std::string orbits_arg;
    CLI::App* sizev = app.add_subcommand("size-v", "fraction of a finite G_v-set in orbits of size < 4");
    sizev->add_option("--orbits", orbits_arg, "orbit sizes, e.g. \"2,4,6\"")->required();

    struct WIArgs {
        unsigned n = 1, lk = 1, dim_w = 2;
        std::string places;
    } wi;
    CLI::App* weight = app.add_subcommand("weight-identity", "check the self-conjugate weight identity");
    weight->add_option("--n", wi.n, "weight");
    weight->add_option("--global-degree", wi.lk, "[L:K]")->required();
    weight->add_option("--dim-w", wi.dim_w, "dim W")->required();
    weight->add_option("--places", wi.places, "degree:dimF1 pairs, e.g. \"2:1,2:1\"")->required();

    unsigned scan_d = 3, scan_sigma = 12;
    CLI::App* scan = app.add_subcommand("trichotomy-scan",
                                        "exhaustive closure scan over orbit partitions");
    scan->add_option("--max-d", scan_d, "largest half-rank d");
    scan->add_option("--max-sigma", scan_sigma, "largest #Sigma");

    struct DimArgs {
        std::string d = "2";
        unsigned genus = 0;
        std::string q;
    } dims;
    CLI::App* dims_cmd = app.add_subcommand("dims", "dimension bounds and the minimal trichotomy degree");
    dims_cmd->add_option("--d", dims.d, "half-rank d");
    dims_cmd->add_option("--genus", dims.genus, "genus for the relative dimension");
    dims_cmd->add_option("--q", dims.q, "odd prime for the relative dimension");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    emitter.with_timing = !no_timing;

    try {
        if (*find_q) {
            auto query = build_query();
            Int q = arithq::find_min_q(query, Int(qargs.ceiling));
            auto rep = arithq::check_conditions(q, query);
            json out;
            out["q"] = q.get_str();
            out["k"] = rep.k.get_str();
            out["conditions"] = json_conditions(rep);
            return emitter.emit("find-q", query_inputs(query), out, 0);
        }
        if (*check_q) {
            auto query = build_query();
            auto rep = arithq::check_conditions(Int(qargs.q), query);
            json in = query_inputs(query);
            in["q"] = qargs.q;
            json out;
            out["pass"] = rep.overall;
            out["k"] = rep.k.get_str();
            out["conditions"] = json_conditions(rep);
            return emitter.emit("check-q", in, out, rep.overall ? 0 : 1);
        }
        if (*density) {
            Int q(density_q);
            json out;
            out["density_lower_bound"] = json_rat(arithq::density_lower_bound(q));
            return emitter.emit("density", {{"q", density_q}}, out, 0);
        }
        if (*linnik) {
            Int q = arithq::linnik_q(Int(linnik_r0), Int(linnik_ceiling));
            json out;
            out["q"] = q.get_str();
            return emitter.emit("linnik-q", {{"r0", linnik_r0}}, out, 0);
        }
        if (*count_ext) {
            auto place = ext_place.resolve();
            Int c = arithq::count_extensions(place, ext_degree);
            json in;
            in["place"] = ext_place.describe(place);
            in["degree"] = ext_degree;
            json out;
            out["count"] = c.get_str();
            return emitter.emit("count-ext", in, out, 0);
        }
        if (*nv_cmd) {
            auto place = ext_place.resolve();
            json in;
            in["place"] = ext_place.describe(place);
            json out;
            out["degree_2"] = arithq::count_extensions(place, 2).get_str();
            out["degree_3"] = arithq::count_extensions(place, 3).get_str();
            out["n_v"] = arithq::n_v(place).get_str();
            return emitter.emit("n-v", in, out, 0);
        }
        if (*weil) {
            arithq::RatPoly parsed = arithq::cli::parse_rat_poly(weil_poly);
            if (parsed.is_zero() || parsed.leading() != 1)
                throw arithq::cli::ParseError("--poly must be monic, got " + weil_poly);
            bool integral = arithq::is_integral(parsed);
            json in;
            in["poly"] = weil_poly;
            in["q"] = weil_q;
            in["n"] = weil_n;
            json out;
            out["is_integral"] = integral;
            if (!integral) {
                out["is_weil"] = false;
                out["note"] = "non-integral coefficients cannot be q-Weil integral";
                return emitter.emit("weil-check", in, out, 1);
            }
            std::vector<Int> coeffs;
            for (const auto& a : parsed.c) coeffs.push_back(a.get_num());
            arithq::WeilCandidate cand{arithq::IntPoly(std::move(coeffs)), Int(weil_q), weil_n};
            auto verdict = arithq::check_weil(cand);
            out["is_weil"] = verdict.is_weil;
            out["stripped"] = {{"x^2-q^n", verdict.stripped_quadratic},
                               {"x-q^(n/2)", verdict.stripped_minus},
                               {"x+q^(n/2)", verdict.stripped_plus}};
            out["certificate"] = verdict.certificate;
            return emitter.emit("weil-check", in, out, verdict.is_weil ? 0 : 1);
        }
        if (*sublemma) {
            arithq::FpField K(sub_p);
            auto S = arithq::FpSymplecticSpace::standard(K, sub_d);
            auto raw = arithq::cli::parse_uint_list(sub_lambdas);
            std::vector<arithq::FpField::Elem> lambdas;
            for (unsigned v : raw) lambdas.push_back(v % sub_p);
            auto witness = arithq::build_witness(S, lambdas);
            bool ok = arithq::sublemma_brute_check(S, witness);
            json in;
            in["char"] = sub_p;
            in["d"] = sub_d;
            in["lambdas"] = sub_lambdas;
            json out;
            out["witness_clear"] = ok;
            json phis = json::array();
            for (const auto& phi : witness.phi) {
                json rows = json::array();
                for (std::size_t i = 0; i < phi.dim(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < phi.ambient(); ++j) row.push_back(phi.basis.at(i, j));
                    rows.push_back(std::move(row));
                }
                phis.push_back(std::move(rows));
            }
            out["lagrangians"] = std::move(phis);
            return emitter.emit("sublemma", in, out, ok ? 0 : 1);
        }
        if (*lag) {
            if (lag_dim == 0 || lag_dim % 2 != 0)
                throw arithq::cli::ParseError("--dim must be a positive even number");
            arithq::FpField K(lag_p);
            auto S = arithq::FpSymplecticSpace::standard(K, lag_dim / 2);
            json out;
            out["count"] = arithq::count_lagrangians(S).get_str();
            return emitter.emit("lagrangian-count", {{"char", lag_p}, {"dim", lag_dim}}, out, 0);
        }
        if (*surj) {
            Int count = arithq::surj_count(surj_g, Int(surj_k));
            json out;
            out["count"] = count.get_str();
            return emitter.emit("surj-count", {{"genus", surj_g}, {"k", surj_k}}, out, 0);
        }
        if (*transport) {
            auto omega = arithq::cli::parse_connection(ode.omega, ode.order);
            auto T = arithq::parallel_transport(omega, ode.order);
            json in;
            in["omega"] = ode.omega;
            in["order"] = ode.order;
            json out;
            json rows = json::array();
            for (const auto& row : T) {
                json jr = json::array();
                for (const auto& entry : row) jr.push_back(entry.str());
                rows.push_back(std::move(jr));
            }
            out["transport"] = std::move(rows);
            if (!ode.at.empty()) {
                auto point = arithq::cli::parse_rat_list(ode.at);
                auto values = arithq::series_evaluate(T, point);
                json jv = json::array();
                for (const auto& row : values) {
                    json jr = json::array();
                    for (const auto& v : row) jr.push_back(json_rat(v));
                    jv.push_back(std::move(jr));
                }
                in["at"] = ode.at;
                out["value"] = std::move(jv);
            }
            return emitter.emit("transport", in, out, 0);
        }
        if (*flat) {
            auto omega = arithq::cli::parse_connection(ode.omega, ode.order);
            auto fail = arithq::flatness_failure(omega, ode.order);
            json in;
            in["omega"] = ode.omega;
            in["order"] = ode.order;
            json out;
            out["flat"] = !fail.has_value();
            if (fail) {
                out["failing_component"] =
                    "dt" + std::to_string(fail->i + 1) + "^dt" + std::to_string(fail->j + 1);
            }
            return emitter.emit("flat-check", in, out, fail ? 1 : 0);
        }
        if (*sizev) {
            auto orbits = arithq::cli::parse_uint_list(orbits_arg);
            json out;
            out["size_v"] = json_rat(arithq::size_v(orbits));
            return emitter.emit("size-v", {{"orbits", orbits_arg}}, out, 0);
        }
        if (*weight) {
            arithq::WeightProfile profile;
            profile.weight = wi.n;
            profile.global_degree = wi.lk;
            profile.dim_w = wi.dim_w;
            std::string cur;
            auto flush = [&] {
                auto colon = cur.find(':');
                if (colon == std::string::npos)
                    throw arithq::cli::ParseError("--places entries must be degree:dimF1, got '" + cur + "'");
                try {
                    profile.places.push_back(
                        {static_cast<unsigned>(std::stoul(cur.substr(0, colon))),
                         static_cast<unsigned>(std::stoul(cur.substr(colon + 1)))});
                } catch (const std::exception&) {
                    throw arithq::cli::ParseError("bad --places entry '" + cur + "'");
                }
                cur.clear();
            };
            for (char ch : wi.places) {
                if (ch == ',') flush();
                else if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
            }
            flush();
            bool ok = arithq::check_weight_identity(profile);
            json in;
            in["n"] = wi.n;
            in["global_degree"] = wi.lk;
            in["dim_w"] = wi.dim_w;
            in["places"] = wi.places;
            json out;
            out["identity_holds"] = ok;
            return emitter.emit("weight-identity", in, out, ok ? 0 : 1);
        }
        if (*scan) {
            auto summary = arithq::trichotomy_scan(scan_d, scan_sigma);
            json out;
            out["cases"] = summary.cases;
            out["satisfiable"] = summary.satisfiable;
            out["vacuous"] = summary.vacuous;
            out["violations"] = summary.violations;
            return emitter.emit("trichotomy-scan", {{"max_d", scan_d}, {"max_sigma", scan_sigma}},
                                out, summary.violations == 0 ? 0 : 1);
        }
        if (*dims_cmd) {
            Int d(dims.d);
            json in;
            in["d"] = dims.d;
            json out;
            out["aut_dim_bound"] = arithq::aut_dim_bound(d).get_str();
            out["trichotomy_min_degree"] = arithq::trichotomy_min_degree(d).get_str();
            if (dims.genus >= 2 && !dims.q.empty()) {
                in["genus"] = dims.genus;
                in["q"] = dims.q;
                out["kp_dimension"] = json_rat(arithq::kp_dimension(dims.genus, Int(dims.q)));
            }
            return emitter.emit("dims", in, out, 0);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
