#include "fairweigh/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>

namespace fairweigh {

std::string to_string(Notion n) {
    return n == Notion::Eop ? "eop" : "dp";
}

Notion notion_from_string(const std::string& s) {
    if (s == "eop") return Notion::Eop;
    if (s == "dp") return Notion::Dp;
    throw DataError("unknown fairness notion '" + s + "' (expected eop or dp)");
}

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
    if (n == 0) throw InternalError("bounded(0)");
    __uint128_t m = static_cast<__uint128_t>(next()) * n;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
        std::uint64_t t = (0 - n) % n;
        while (lo < t) {
            m = static_cast<__uint128_t>(next()) * n;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double SplitMix64::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::normal() {
    // Box-Muller, one value per pair of uniforms; u1 kept away from 0.
    double u1 = (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    return perm;
}

std::vector<int> sample_without_replacement(int n, int k, std::uint64_t seed) {
    if (k > n) throw DataError("sample size exceeds population");
    auto perm = random_permutation(n, seed);
    std::vector<int> out(perm.begin(), perm.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

int worker_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("REWEIGH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) hw = std::min(hw, static_cast<int>(v));
    }
    return hw;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(worker_budget(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next_index{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            int i = next_index.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DataError("pearson_correlation needs two equally sized series of length >= 2");
    }
    double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace fairweigh
