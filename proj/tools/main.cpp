#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include <fpsocle/fpsocle.hpp>

namespace {

// "x:1,y:1" -> [{x,1},{y,1}]
std::vector<fpsocle::Variable> parse_vars_flag(const std::string& s) {
    std::vector<fpsocle::Variable> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        std::string name = colon == std::string::npos ? item : item.substr(0, colon);
        std::int64_t w = 1;
        if (colon != std::string::npos) {
            try {
                w = std::stoll(item.substr(colon + 1));
            } catch (const std::exception&) {
                throw fpsocle::schema_error("--vars: bad weight in '" + item + "'");
            }
        }
        if (name.empty()) throw fpsocle::schema_error("--vars: empty variable name");
        out.push_back({name, w});
    }
    if (out.empty()) throw fpsocle::schema_error("--vars: expected name:weight[,name:weight...]");
    return out;
}

bool color_allowed() {
    return isatty(fileno(stderr)) && std::getenv("NO_COLOR") == nullptr;
}

void emit(const fpsocle::JobOutcome& outcome) {
    std::cout << fpsocle::render_report(outcome.doc);
    if (isatty(fileno(stderr)) && !outcome.human.empty()) {
        if (color_allowed() && outcome.exit_code == 0)
            std::cerr << "\033[1m== fpsocle ==\033[0m\n" << outcome.human;
        else
            std::cerr << outcome.human;
    } else if (outcome.exit_code != 0 && !outcome.human.empty()) {
        std::cerr << outcome.human;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"socle degrees of Frobenius powers over F_p"};
    app.fallthrough(true);

    std::string job_file;
    std::int64_t p = 0;
    std::string vars_flag;
    std::vector<std::string> C_flags, I_flags;
    std::int64_t e = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::int64_t count = 0;
    bool count_given = false;
    std::int64_t all_e_up_to = 0;
    std::int64_t q_cap = 32;
    std::string profile = "ci";
    bool gorenstein_certified = false;
    std::int64_t a_R = 0;
    bool a_R_given = false;
    bool simulate_inconsistency = false;

    app.add_option("--job", job_file, "job specification file (JSON)");
    app.add_option("--p", p, "field characteristic (prime)");
    app.add_option("--vars", vars_flag, "variables with weights, e.g. x:1,y:2");
    app.add_option("--C", C_flags, "generator of C (repeatable)");
    app.add_option("--I", I_flags, "generator of I (repeatable)");
    app.add_option("--e", e, "Frobenius exponent e (q = p^e)");
    app.add_option("--seed", seed, "fuzz seed")->each([&](const std::string&) { seed_given = true; });
    app.add_option("--count", count, "fuzz instance count")->each([&](const std::string&) {
        count_given = true;
    });
    app.add_option("--all-e-up-to", all_e_up_to, "run check for every e in 1..N");
    app.add_option("--q-cap", q_cap, "refuse q = p^e beyond this bound (default 32)");
    app.add_option("--profile", profile, "fuzz profile: ci | explore");
    app.add_flag("--gorenstein-certified", gorenstein_certified,
                 "explore: vouch that positive-dimensional C is Gorenstein");
    app.add_option("--a-R", a_R, "explore: a-invariant of P/C when not computable")
        ->each([&](const std::string&) { a_R_given = true; });
    app.add_flag("--simulate-inconsistency", simulate_inconsistency)->group("");  // testing hook

    std::string subcommand;
    for (const char* name : {"check", "socle", "betti", "gb", "tor1", "fuzz", "explore"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->callback([&subcommand, name] { subcommand = name; });
    }
    app.require_subcommand(0, 1);

    CLI11_PARSE(app, argc, argv);

    fpsocle::JobSpec job;
    try {
        if (!job_file.empty()) {
            std::ifstream in(job_file);
            if (!in) throw fpsocle::schema_error("--job: cannot open '" + job_file + "'");
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& ex) {
                throw fpsocle::schema_error(std::string("--job: invalid JSON: ") + ex.what());
            }
            if (!subcommand.empty()) j["mode"] = subcommand;
            job = fpsocle::job_from_json(j);
        } else {
            nlohmann::json j{{"mode", subcommand.empty() ? "check" : subcommand}};
            if (subcommand.empty())
                throw fpsocle::schema_error("job.mode: missing (give a subcommand or --job)");
            if (p == 0) throw fpsocle::schema_error("job.p: missing (--p)");
            j["p"] = p;
            if (vars_flag.empty()) throw fpsocle::schema_error("job.vars: missing (--vars)");
            nlohmann::json jvars = nlohmann::json::array();
            for (const auto& v : parse_vars_flag(vars_flag)) jvars.push_back({v.name, v.weight});
            j["vars"] = jvars;
            j["C"] = C_flags;
            j["I"] = I_flags;
            if (e > 0) j["e"] = e;
            nlohmann::json opts = nlohmann::json::object();
            if (seed_given) opts["seed"] = seed;
            if (count_given) opts["count"] = count;
            if (all_e_up_to > 0) opts["all_e_up_to"] = all_e_up_to;
            opts["q_cap"] = q_cap;
            opts["profile"] = profile;
            if (gorenstein_certified) opts["gorenstein_certified"] = true;
            if (a_R_given) opts["a_R"] = a_R;
            if (simulate_inconsistency) opts["simulate_inconsistency"] = true;
            j["options"] = opts;
            job = fpsocle::job_from_json(j);
        }
    } catch (const fpsocle::schema_error& ex) {
        nlohmann::json doc{{"schema_version", fpsocle::kSchemaVersion},
                           {"tool", "fpsocle"},
                           {"version", fpsocle::kToolVersion},
                           {"error", {{"code", 1}, {"message", ex.what()}}}};
        std::cout << fpsocle::render_report(doc);
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }

    fpsocle::JobOutcome outcome = fpsocle::run_job(job);
    emit(outcome);
    return outcome.exit_code;
}
