#ifndef BTS_NUMERIC_HPP
#define BTS_NUMERIC_HPP

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

namespace bts {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;

inline double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440); }

/// Inverse of the standard normal CDF (Acklam's rational approximation
/// polished with one Halley step), accurate to ~1e-15 over (0,1).
double normal_quantile(double p);

/// Trapezoid rule over values sampled on an even grid with spacing dx.
template <typename Derived>
double trapezoid(const Eigen::DenseBase<Derived>& y, double dx) {
    const auto n = y.size();
    if (n < 2) return 0.0;
    return dx * (y.sum() - 0.5 * (y(0) + y(n - 1)));
}

/// Gauss-Legendre nodes and weights on [-1, 1]; cached per order.
struct GaussRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};
const GaussRule& gauss_legendre(int order);

/// log(sum(exp(v))) with max shift.
double log_sum_exp(const Eigen::VectorXd& v);

/// Deterministic uniforms/normals built directly on the mt19937_64 stream so
/// results do not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        // splitmix64; passes through the full 64-bit state deterministically
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1), never exactly 0 or 1.
    double uniform() {
        const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return u == 0.0 ? 0x1.0p-53 : u;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() { return normal_quantile(uniform()); }

    /// Derive an independent stream for a labelled sub-task.
    std::uint64_t fork(std::uint64_t label) {
        std::uint64_t z = state_ ^ (0x9e3779b97f4a7c15ULL * (label + 1));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        return z ^ (z >> 27);
    }

private:
    std::uint64_t state_;
};

/// Stable 64-bit hash of a string label plus integers, for per-cell seeds.
std::uint64_t hash_combine(const std::string& label, std::uint64_t a, std::uint64_t b);

}  // namespace bts

#endif
