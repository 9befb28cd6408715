#pragma once

#include <iosfwd>
#include <string>

#include "qlab/algorithms.hpp"
#include "qlab/quantum.hpp"

namespace qlab {

// Flat key=value configuration shared by the CLI and the test suites.
// `c0` is the fitted constant of the expected-subtree-size bound; the
// calibration procedure is described in the README.
struct LabConfig {
    double alpha_sample = 4.0;
    double c_grover = 1.0;
    double c_exact = 1.0;
    double c_count = 1.0;
    double c_amplify = 1.0;
    double eps = 1e-4;
    double c0 = 4.0;

    AlgoConfig algo(uint64_t seed, int max_reps = 1) const {
        return AlgoConfig{alpha_sample, max_reps, seed};
    }
    QuantumConstants quantum(double inject = 0.0) const {
        return QuantumConstants{c_grover, c_exact, c_count, c_amplify, eps, inject};
    }

    static LabConfig parse(std::istream& in);
    static LabConfig load(const std::string& path);
    void dump(std::ostream& out) const;
    void save(const std::string& path) const;

    friend bool operator==(const LabConfig&, const LabConfig&) = default;
};

}  // namespace qlab
