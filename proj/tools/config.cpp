#include "config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hypoheat::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& v, int line) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (...) {
            throw std::runtime_error("config line " + std::to_string(line) +
                                     ": malformed number '" + tok + "'");
        }
    }
    return out;
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    bool have_command = false;
    std::stringstream ss(text);
    std::string raw;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line) +
                                     ": expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        auto num = [&](const char* what) {
            try {
                std::size_t used = 0;
                const double d = std::stod(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
                return d;
            } catch (...) {
                throw std::runtime_error("config line " + std::to_string(line) +
                                         ": malformed " + std::string(what) + " '" + val +
                                         "'");
            }
        };
        if (key == "command") {
            c.command = val;
            have_command = true;
        } else if (key == "model") {
            c.model = val;
        } else if (key == "t") {
            c.t = num("t");
        } else if (key == "steps") {
            c.steps = static_cast<int>(num("steps"));
        } else if (key == "paths") {
            c.paths = static_cast<std::size_t>(num("paths"));
        } else if (key == "seed") {
            c.seed = static_cast<uint64_t>(num("seed"));
        } else if (key == "lambda_grid") {
            c.lambda_grid = parse_list(val, line);
        } else if (key == "r_grid") {
            c.r_grid = parse_list(val, line);
        } else if (key == "theta_grid") {
            c.theta_grid = parse_list(val, line);
        } else if (key == "suite") {
            c.suite = val;
        } else if (key == "out") {
            c.out_dir = val;
        } else if (key == "threads") {
            c.threads = static_cast<int>(num("threads"));
        } else if (key.rfind("tol.", 0) == 0) {
            c.tolerance_overrides[key.substr(4)] = num("tolerance");
        } else {
            throw std::runtime_error("config line " + std::to_string(line) +
                                     ": unknown key '" + key + "'");
        }
    }
    if (!have_command) throw std::runtime_error("config: missing required key 'command'");
    const std::vector<std::string> known = {"simulate", "cf",     "kernel",
                                            "verify",   "limits", "list-models"};
    bool ok = false;
    for (const auto& k : known) ok = ok || k == c.command;
    if (!ok) throw std::runtime_error("config: unknown command '" + c.command + "'");
    if ((c.command == "verify" || c.command == "limits") && c.suite.empty())
        throw std::runtime_error("config: command '" + c.command +
                                 "' requires key 'suite'");
    if ((c.command == "simulate" || c.command == "cf" || c.command == "kernel") &&
        c.model.empty())
        throw std::runtime_error("config: command '" + c.command +
                                 "' requires key 'model'");
    return c;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string RunConfig::serialize() const {
    std::ostringstream o;
    o << "command = " << command << "\n";
    if (!model.empty()) o << "model = " << model << "\n";
    o << "t = " << t << "\nsteps = " << steps << "\npaths = " << paths
      << "\nseed = " << seed << "\n";
    auto list = [&](const char* k, const std::vector<double>& v) {
        if (v.empty()) return;
        o << k << " = ";
        for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
        o << "\n";
    };
    list("lambda_grid", lambda_grid);
    list("r_grid", r_grid);
    list("theta_grid", theta_grid);
    if (!suite.empty()) o << "suite = " << suite << "\n";
    o << "out = " << out_dir << "\n";
    if (threads) o << "threads = " << threads << "\n";
    return o.str();
}

} // namespace hypoheat::cli
