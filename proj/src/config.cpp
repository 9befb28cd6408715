#include "qlab/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qlab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

LabConfig LabConfig::parse(std::istream& in) {
    LabConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config parse error at line " + std::to_string(lineno));
        std::string key = trim(s.substr(0, eq));
        double value = std::stod(trim(s.substr(eq + 1)));
        if (key == "alpha_sample") cfg.alpha_sample = value;
        else if (key == "c_grover") cfg.c_grover = value;
        else if (key == "c_exact") cfg.c_exact = value;
        else if (key == "c_count") cfg.c_count = value;
        else if (key == "c_amplify") cfg.c_amplify = value;
        else if (key == "eps") cfg.eps = value;
        else if (key == "C0") cfg.c0 = value;
        else throw std::runtime_error("config parse error: unknown key '" + key + "'");
    }
    return cfg;
}

LabConfig LabConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse(in);
}

void LabConfig::dump(std::ostream& out) const {
    out << "alpha_sample = " << format_value(alpha_sample) << '\n';
    out << "c_grover = " << format_value(c_grover) << '\n';
    out << "c_exact = " << format_value(c_exact) << '\n';
    out << "c_count = " << format_value(c_count) << '\n';
    out << "c_amplify = " << format_value(c_amplify) << '\n';
    out << "eps = " << format_value(eps) << '\n';
    out << "C0 = " << format_value(c0) << '\n';
}

void LabConfig::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config file: " + path);
    dump(out);
}

}  // namespace qlab
