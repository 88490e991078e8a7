#pragma once

#include <Eigen/Dense>

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fairweigh {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IntVector = Eigen::VectorXi;

// Thrown for malformed inputs: bad CSV, missing columns, empty subgroups.
// The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Optimizer failed to reach the requested tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A violated internal invariant (e.g. a non-PD Hessian with positive l2).
// The CLI maps it to exit code 70.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Notion { Eop, Dp };

std::string to_string(Notion n);
Notion notion_from_string(const std::string& s);

// splitmix64: tiny, seedable, stable across platforms. Used wherever output
// bytes must not depend on the standard library's distribution details.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) without modulo bias (Lemire)
    std::uint64_t bounded(std::uint64_t n);

    double uniform();          // [0, 1)
    double normal();           // standard normal, Box-Muller (stateless pairs)

private:
    std::uint64_t state_;
};

// Fisher-Yates permutation of {0, .., n-1}, stable across platforms.
std::vector<int> random_permutation(int n, std::uint64_t seed);

// First k entries of a random permutation, sorted ascending.
std::vector<int> sample_without_replacement(int n, int k, std::uint64_t seed);

// Worker budget: min(REWEIGH_THREADS if set, hardware_concurrency), >= 1.
int worker_budget();

// Index-parallel loop with deterministic per-index output slots. Runs
// serially when the budget is 1. fn may throw; the first exception is
// rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fairweigh
