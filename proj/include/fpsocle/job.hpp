#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "instance_gen.hpp"

namespace fpsocle {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Malformed job document or flags; maps to exit code 1. The message always
// starts with the offending field path.
class schema_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { Check, Socle, Betti, Gb, Tor1, Fuzz, Explore };

inline std::string mode_name(Mode m) {
    switch (m) {
        case Mode::Check: return "check";
        case Mode::Socle: return "socle";
        case Mode::Betti: return "betti";
        case Mode::Gb: return "gb";
        case Mode::Tor1: return "tor1";
        case Mode::Fuzz: return "fuzz";
        case Mode::Explore: return "explore";
    }
    return "?";
}

inline std::optional<Mode> mode_from_name(const std::string& s) {
    for (Mode m : {Mode::Check, Mode::Socle, Mode::Betti, Mode::Gb, Mode::Tor1, Mode::Fuzz,
                   Mode::Explore})
        if (mode_name(m) == s) return m;
    return std::nullopt;
}

struct JobOptions {
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::int64_t count = 0;
    bool count_set = false;
    std::int64_t all_e_up_to = 0;
    std::int64_t q_cap = 32;
    std::string profile = "ci";
    bool gorenstein_certified = false;
    std::optional<std::int64_t> a_R;
    bool simulate_inconsistency = false;  // testing hook for the exit-3 path
};

struct JobSpec {
    Mode mode = Mode::Check;
    std::uint32_t p = 2;
    std::vector<Variable> vars;
    std::vector<std::string> C;
    std::vector<std::string> I;
    std::int64_t e = 1;
    JobOptions options;
};

inline nlohmann::json job_to_json(const JobSpec& job) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : job.vars) vars.push_back({v.name, v.weight});
    nlohmann::json opts{{"q_cap", job.options.q_cap}};
    if (job.options.seed_set) opts["seed"] = job.options.seed;
    if (job.options.count_set) opts["count"] = job.options.count;
    if (job.options.all_e_up_to > 0) opts["all_e_up_to"] = job.options.all_e_up_to;
    if (job.mode == Mode::Fuzz) opts["profile"] = job.options.profile;
    if (job.options.gorenstein_certified) opts["gorenstein_certified"] = true;
    if (job.options.a_R) opts["a_R"] = *job.options.a_R;
    return nlohmann::json{{"schema_version", kSchemaVersion},
                          {"mode", mode_name(job.mode)},
                          {"p", job.p},
                          {"vars", vars},
                          {"C", job.C},
                          {"I", job.I},
                          {"e", job.e},
                          {"options", opts}};
}

inline JobSpec job_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw schema_error("job: expected a JSON object");
    auto need = [&](const char* key) -> const nlohmann::json& {
        auto it = j.find(key);
        if (it == j.end()) throw schema_error(std::string("job.") + key + ": missing");
        return *it;
    };

    JobSpec job;

    const auto& jmode = need("mode");
    if (!jmode.is_string()) throw schema_error("job.mode: expected a string");
    auto m = mode_from_name(jmode.get<std::string>());
    if (!m) throw schema_error("job.mode: unknown mode '" + jmode.get<std::string>() + "'");
    job.mode = *m;

    const auto& jp = need("p");
    if (!jp.is_number_unsigned() && !jp.is_number_integer())
        throw schema_error("job.p: expected an integer");
    std::int64_t pv = jp.get<std::int64_t>();
    if (pv < 2 || pv > (1ll << 31) || !is_prime(static_cast<std::uint64_t>(pv)))
        throw schema_error("job.p: must be a prime in [2, 2^31]");
    job.p = static_cast<std::uint32_t>(pv);

    const auto& jvars = need("vars");
    if (!jvars.is_array() || jvars.empty())
        throw schema_error("job.vars: expected a non-empty array of [name, weight] pairs");
    for (std::size_t i = 0; i < jvars.size(); ++i) {
        const auto& v = jvars[i];
        std::string path = "job.vars[" + std::to_string(i) + "]";
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_number_integer())
            throw schema_error(path + ": expected [name, weight]");
        std::int64_t w = v[1].get<std::int64_t>();
        if (w < 1) throw schema_error(path + ": weight must be >= 1");
        job.vars.push_back({v[0].get<std::string>(), w});
    }
    {
        std::set<std::string> seen;
        for (const auto& v : job.vars)
            if (v.name.empty() || !seen.insert(v.name).second)
                throw schema_error("job.vars: names must be unique and non-empty");
    }

    auto read_strings = [&](const char* key, std::vector<std::string>& out) {
        auto it = j.find(key);
        if (it == j.end()) return;
        if (!it->is_array()) throw schema_error(std::string("job.") + key + ": expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            if (!(*it)[i].is_string())
                throw schema_error(std::string("job.") + key + "[" + std::to_string(i) +
                                   "]: expected a string");
            out.push_back((*it)[i].get<std::string>());
        }
    };
    read_strings("C", job.C);
    read_strings("I", job.I);

    bool e_required =
        job.mode == Mode::Check || job.mode == Mode::Tor1 || job.mode == Mode::Explore;
    auto it_e = j.find("e");
    if (it_e == j.end()) {
        if (e_required) throw schema_error("job.e: missing");
    } else {
        if (!it_e->is_number_integer()) throw schema_error("job.e: expected an integer");
        job.e = it_e->get<std::int64_t>();
        if (job.e < 1) throw schema_error("job.e: must be >= 1");
    }

    auto it_o = j.find("options");
    if (it_o != j.end()) {
        if (!it_o->is_object()) throw schema_error("job.options: expected an object");
        const auto& o = *it_o;
        auto geti = [&](const char* key, std::int64_t& out, bool* set = nullptr) {
            auto it = o.find(key);
            if (it == o.end()) return;
            if (!it->is_number_integer() && !it->is_number_unsigned())
                throw schema_error(std::string("job.options.") + key + ": expected an integer");
            out = it->get<std::int64_t>();
            if (set) *set = true;
        };
        auto its = o.find("seed");
        if (its != o.end()) {
            if (!its->is_number_unsigned() && !its->is_number_integer())
                throw schema_error("job.options.seed: expected an integer");
            job.options.seed = its->get<std::uint64_t>();
            job.options.seed_set = true;
        }
        geti("count", job.options.count, &job.options.count_set);
        geti("all_e_up_to", job.options.all_e_up_to);
        geti("q_cap", job.options.q_cap);
        if (job.options.q_cap < 2) throw schema_error("job.options.q_cap: must be >= 2");
        auto itp = o.find("profile");
        if (itp != o.end()) {
            if (!itp->is_string() ||
                (itp->get<std::string>() != "ci" && itp->get<std::string>() != "explore"))
                throw schema_error("job.options.profile: expected \"ci\" or \"explore\"");
            job.options.profile = itp->get<std::string>();
        }
        auto itg = o.find("gorenstein_certified");
        if (itg != o.end()) {
            if (!itg->is_boolean())
                throw schema_error("job.options.gorenstein_certified: expected a boolean");
            job.options.gorenstein_certified = itg->get<bool>();
        }
        auto ita = o.find("a_R");
        if (ita != o.end() && !ita->is_null()) {
            if (!ita->is_number_integer())
                throw schema_error("job.options.a_R: expected an integer");
            job.options.a_R = ita->get<std::int64_t>();
        }
        auto itsim = o.find("simulate_inconsistency");
        if (itsim != o.end()) {
            if (!itsim->is_boolean())
                throw schema_error("job.options.simulate_inconsistency: expected a boolean");
            job.options.simulate_inconsistency = itsim->get<bool>();
        }
    }
    if (job.mode == Mode::Fuzz) {
        if (!job.options.seed_set) throw schema_error("job.options.seed: missing (required for fuzz)");
        if (!job.options.count_set)
            throw schema_error("job.options.count: missing (required for fuzz)");
        if (job.options.count < 1) throw schema_error("job.options.count: must be >= 1");
    }
    return job;
}

// -------- JSON rendering of results --------

namespace detail {

inline nlohmann::json degrees_json(const std::vector<std::int64_t>& ds) {
    return nlohmann::json(ds);
}

inline nlohmann::json by_degree_json(const std::map<std::int64_t, std::int64_t>& m) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [d, v] : m) o[std::to_string(d)] = v;
    return o;
}

inline nlohmann::json poly_strings(const std::vector<Polynomial>& ps) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& f : ps) a.push_back(to_string(f));
    return a;
}

inline nlohmann::json theorem_report_json(const TheoremReport& r, const Ideal& C,
                                          const Ideal& I) {
    nlohmann::json out{{"e", r.e},
                       {"q", r.q},
                       {"a_R", r.a_R},
                       {"C", poly_strings(C.generators())},
                       {"I", poly_strings(I.generators())},
                       {"socle_S", degrees_json(r.socle_S.degrees)},
                       {"socle_FqS", degrees_json(r.socle_FqS.degrees)},
                       {"predicted", degrees_json(r.predicted)},
                       {"cond_a_via_tor1", r.cond_a_via_tor1},
                       {"cond_b", r.cond_b},
                       {"cond_c", r.cond_c},
                       {"cond_d", r.cond_d},
                       {"tor1_total", r.tor1_total},
                       {"tor1_by_degree", by_degree_json(r.tor1_by_degree)},
                       {"tsd", nlohmann::json{{"lhs", r.tsd_lhs},
                                              {"rhs", r.tsd_rhs},
                                              {"holds", r.tsd_holds}}},
                       {"consistent", r.consistent},
                       {"ci_mode", r.ci_mode}};
    if (r.linkage_holds)
        out["linkage_identity"] = *r.linkage_holds;
    else
        out["linkage_identity"] = nullptr;
    return out;
}

} // namespace detail

struct JobOutcome {
    int exit_code = 0;
    nlohmann::json doc;
    std::string human;  // table for stderr when a terminal is attached
};

namespace detail {

inline std::string profile_str(const SocleProfile& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.degrees.size(); ++i) {
        if (i) os << ", ";
        os << s.degrees[i];
    }
    os << '}';
    return os.str();
}

inline std::string degrees_str(const std::vector<std::int64_t>& ds) {
    SocleProfile tmp{ds, ds.size()};
    return profile_str(tmp);
}

inline std::string human_check_table(const TheoremReport& r) {
    std::ostringstream os;
    os << "e=" << r.e << "  q=" << r.q << "  a(R)=" << r.a_R
       << (r.ci_mode ? "  [complete intersection]" : "  [explore: Gorenstein, not CI]") << "\n"
       << "socle(S)    = " << profile_str(r.socle_S) << "\n"
       << "socle(F^eS) = " << profile_str(r.socle_FqS) << "\n"
       << "predicted   = " << degrees_str(r.predicted) << "\n"
       << "cond (a via Tor1)=" << (r.cond_a_via_tor1 ? "true" : "false")
       << "  (b)=" << (r.cond_b ? "true" : "false") << "  (c)=" << (r.cond_c ? "true" : "false")
       << "  (d)=" << (r.cond_d ? "true" : "false") << "\n"
       << "Tor1 dimension = " << r.tor1_total << "\n";
    if (r.linkage_holds)
        os << "linkage identity C^[q]:C = (y)+C^[q] : " << (*r.linkage_holds ? "holds" : "FAILS")
           << "\n";
    os << "tsd: " << r.tsd_lhs << (r.tsd_holds ? " >= " : " <  ") << r.tsd_rhs
       << (r.tsd_holds ? " (holds)" : " (VIOLATED)") << "\n"
       << "consistent = " << (r.consistent ? "true" : "false") << "\n";
    return os.str();
}

} // namespace detail

inline JobOutcome run_job(const JobSpec& job) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();

    nlohmann::json doc{{"schema_version", kSchemaVersion},
                       {"tool", "fpsocle"},
                       {"version", kToolVersion},
                       {"mode", mode_name(job.mode)},
                       {"job", job_to_json(job)}};
    JobOutcome out;

    auto finish = [&](int code) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0);
        doc["timing_ms"] = ms.count();
        out.exit_code = code;
        out.doc = std::move(doc);
        return out;
    };
    auto fail = [&](int code, const std::string& message) {
        doc["error"] = {{"code", code}, {"message", message}};
        out.human = "error: " + message + "\n";
        return finish(code);
    };

    RingPtr ring;
    std::vector<Polynomial> C_gens, I_gens;
    try {
        ring = make_ring(job.p, job.vars);
        for (const auto& s : job.C) C_gens.push_back(parse_poly(s, ring));
        for (const auto& s : job.I) I_gens.push_back(parse_poly(s, ring));
    } catch (const parse_error& ex) {
        return fail(1, std::string("polynomial: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        return fail(1, ex.what());
    }

    try {
        switch (job.mode) {
            case Mode::Check:
            case Mode::Explore: {
                auto one_report = [&](std::int64_t e) {
                    CISetup setup =
                        job.mode == Mode::Check
                            ? make_ci_setup(ring, C_gens, I_gens, e, job.options.q_cap)
                            : make_explore_setup(
                                  ring, C_gens, I_gens, e, job.options.q_cap,
                                  ExploreOptions{job.options.gorenstein_certified,
                                                 job.options.a_R});
                    TheoremReport r = job.mode == Mode::Check ? check_theorem(setup)
                                                              : gorenstein_explore(setup);
                    if (job.options.simulate_inconsistency)
                        throw internal_inconsistency_error("simulated inconsistency (testing hook)");
                    return std::make_pair(detail::theorem_report_json(r, setup.C, setup.I), r);
                };
                if (job.options.all_e_up_to > 0) {
                    nlohmann::json arr = nlohmann::json::array();
                    std::string tables;
                    for (std::int64_t e = 1; e <= job.options.all_e_up_to; ++e) {
                        auto [json, rep] = one_report(e);
                        arr.push_back(std::move(json));
                        tables += detail::human_check_table(rep) + "\n";
                    }
                    doc["result"] = {{"per_e", arr}};
                    out.human = tables;
                } else {
                    auto [json, rep] = one_report(job.e);
                    doc["result"] = std::move(json);
                    out.human = detail::human_check_table(rep);
                }
                return finish(0);
            }
            case Mode::Socle: {
                std::vector<Polynomial> gens = C_gens;
                gens.insert(gens.end(), I_gens.begin(), I_gens.end());
                Ideal S(ring, gens);
                if (S.is_unit_ideal()) throw hypothesis_error("C+I is the unit ideal");
                if (!is_m_primary(S)) throw hypothesis_error("C+I is not m-primary");
                SocleProfile prof = socle_profile(S);
                doc["result"] = {{"ideal", detail::poly_strings(S.generators())},
                                 {"degrees", detail::degrees_json(prof.degrees)},
                                 {"ell", prof.ell},
                                 {"top", prof.top()},
                                 {"gorenstein", prof.ell == 1}};
                out.human = "socle degrees " + detail::profile_str(prof) + "\n";
                return finish(0);
            }
            case Mode::Betti: {
                std::vector<Polynomial> gens = C_gens;
                gens.insert(gens.end(), I_gens.begin(), I_gens.end());
                Ideal S(ring, gens);
                if (S.is_unit_ideal()) throw hypothesis_error("C+I is the unit ideal");
                if (!is_m_primary(S)) throw hypothesis_error("C+I is not m-primary");
                BettiTable t = koszul_betti(S);
                nlohmann::json entries = nlohmann::json::array();
                for (const auto& [key, rank] : t.entries)
                    entries.push_back(
                        {{"i", key.first}, {"j", key.second}, {"rank", rank}});
                doc["result"] = {{"n", t.n},
                                 {"entries", entries},
                                 {"back_twists", detail::degrees_json(back_twists(t))}};
                // text grid: rows are internal degrees, columns homological index
                std::ostringstream grid;
                std::int64_t jmax = 0;
                for (const auto& [key, rank] : t.entries) jmax = std::max(jmax, key.second);
                grid << "j\\i";
                for (std::size_t i = 0; i <= t.n; ++i) grid << '\t' << i;
                grid << '\n';
                for (std::int64_t jdeg = 0; jdeg <= jmax; ++jdeg) {
                    bool any = false;
                    for (std::size_t i = 0; i <= t.n && !any; ++i) any = t.at(static_cast<int>(i), jdeg) != 0;
                    if (!any) continue;
                    grid << jdeg;
                    for (std::size_t i = 0; i <= t.n; ++i) {
                        grid << '\t';
                        auto b = t.at(static_cast<int>(i), jdeg);
                        if (b) grid << b; else grid << '.';
                    }
                    grid << '\n';
                }
                out.human = grid.str();
                return finish(0);
            }
            case Mode::Gb: {
                std::vector<Polynomial> gens = C_gens;
                gens.insert(gens.end(), I_gens.begin(), I_gens.end());
                Ideal I(ring, gens);
                const GroebnerBasis& gb = I.groebner();
                doc["result"] = {{"basis", detail::poly_strings(gb.elements)}};
                std::ostringstream os;
                for (const auto& g : gb.elements) os << to_string(g) << "\n";
                out.human = os.str();
                return finish(0);
            }
            case Mode::Tor1: {
                CISetup setup = make_ci_setup(ring, C_gens, I_gens, job.e, job.options.q_cap);
                Tor1 t = tor1_dim(setup);
                doc["result"] = {{"total", t.total},
                                 {"by_degree", detail::by_degree_json(t.by_degree)}};
                out.human = "Tor1 dimension = " + std::to_string(t.total) + "\n";
                return finish(0);
            }
            case Mode::Fuzz: {
                FuzzProfile profile = job.options.profile == "explore" ? FuzzProfile::Explore
                                                                       : FuzzProfile::Ci;
                FuzzSummary sum =
                    run_fuzz(job.options.seed, static_cast<std::size_t>(job.options.count),
                             profile, job.options.q_cap);
                nlohmann::json instances = nlohmann::json::array();
                for (const auto& o : sum.outcomes) {
                    nlohmann::json vars = nlohmann::json::array();
                    for (const auto& v : o.inst.ring->vars) vars.push_back({v.name, v.weight});
                    nlohmann::json d{{"index", o.inst.index},
                                     {"seed", o.inst.seed},
                                     {"p", o.inst.ring->p},
                                     {"vars", vars},
                                     {"C", detail::poly_strings(o.inst.C_gens)},
                                     {"I", detail::poly_strings(o.inst.I_gens)},
                                     {"e", o.inst.e},
                                     {"c", o.c}};
                    if (o.ok()) {
                        d["q"] = o.q;
                        d["verdicts"] = verdict_pattern(o.report);
                        d["cond_b"] = o.report.cond_b;
                        d["cond_c"] = o.report.cond_c;
                        d["cond_d"] = o.report.cond_d;
                        d["tor1_total"] = o.report.tor1_total;
                        d["consistent"] = o.report.consistent;
                        if (o.report.linkage_holds)
                            d["linkage_identity"] = *o.report.linkage_holds;
                        else
                            d["linkage_identity"] = nullptr;
                        d["tsd"] = {{"lhs", o.report.tsd_lhs},
                                    {"rhs", o.report.tsd_rhs},
                                    {"holds", o.report.tsd_holds}};
                    } else {
                        d["error"] = o.error;
                    }
                    instances.push_back(std::move(d));
                }
                nlohmann::json hist = nlohmann::json::object();
                for (const auto& [k, v] : sum.histogram) hist[k] = v;
                nlohmann::json incon = nlohmann::json::array();
                for (std::size_t idx : sum.inconsistent) {
                    const auto& o = sum.outcomes[idx];
                    incon.push_back({{"index", idx},
                                     {"seed", o.inst.seed},
                                     {"C", detail::poly_strings(o.inst.C_gens)},
                                     {"I", detail::poly_strings(o.inst.I_gens)},
                                     {"e", o.inst.e}});
                }
                doc["result"] = {{"seed", sum.seed},
                                 {"count", job.options.count},
                                 {"profile", job.options.profile},
                                 {"instances", instances},
                                 {"histogram", hist},
                                 {"inconsistencies", incon},
                                 {"errors", static_cast<std::int64_t>(sum.errored.size())}};
                std::ostringstream os;
                os << "fuzz: " << job.options.count << " instances, "
                   << sum.inconsistent.size() << " inconsistencies\n";
                for (const auto& [k, v] : sum.histogram) os << "  " << k << " : " << v << "\n";
                out.human = os.str();
                if (profile == FuzzProfile::Ci && !sum.inconsistent.empty())
                    return fail(3, "theorem equivalence violated on " +
                                       std::to_string(sum.inconsistent.size()) + " instance(s)");
                if (!sum.errored.empty())
                    return fail(2, "fuzz: " + std::to_string(sum.errored.size()) +
                                       " instance(s) failed hypothesis validation");
                return finish(0);
            }
        }
        return fail(1, "job.mode: unhandled mode");
    } catch (const internal_inconsistency_error& ex) {
        return fail(3, ex.what());
    } catch (const hypothesis_error& ex) {
        return fail(2, ex.what());
    } catch (const std::invalid_argument& ex) {
        return fail(2, ex.what());
    } catch (const std::exception& ex) {
        return fail(3, std::string("internal error: ") + ex.what());
    }
}

// Runs a job and renders the report; convenience used by the CLI and tests.
inline std::string render_report(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

} // namespace fpsocle
