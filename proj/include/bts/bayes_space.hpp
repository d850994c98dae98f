#ifndef BTS_BAYES_SPACE_HPP
#define BTS_BAYES_SPACE_HPP

#include <Eigen/Dense>

#include "bts/errors.hpp"

namespace bts {

/// Compact support [a, b] of every density handled by the library.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("Interval: require finite a < b");
    }
    double length() const { return b - a; }
};

/// A positive density on [a, b] stored through its clr values on an even
/// grid t_1 = a, ..., t_m = b. The clr values integrate to zero, which is
/// re-established after every operation.
class GridDensity {
public:
    GridDensity(Interval interval, Eigen::VectorXd clr_values);

    const Interval& interval() const { return interval_; }
    Eigen::Index size() const { return clr_.size(); }
    double spacing() const { return interval_.length() / static_cast<double>(clr_.size() - 1); }
    const Eigen::VectorXd& clr_values() const { return clr_; }
    double grid_point(Eigen::Index i) const { return interval_.a + spacing() * static_cast<double>(i); }
    Eigen::VectorXd grid() const;

private:
    Interval interval_;
    Eigen::VectorXd clr_;
};

/// clr transform of strictly positive density values sampled on the even grid.
GridDensity clr(const Eigen::VectorXd& density_values, const Interval& interval);

/// Back-transform to a positive density normalised to unit integral.
Eigen::VectorXd clr_inverse(const GridDensity& g);

/// Bayes-space sum: pointwise addition of clr values, re-centred.
GridDensity perturb(const GridDensity& f, const GridDensity& g);

/// Bayes-space scalar multiple: gamma times the clr values, re-centred.
GridDensity power(double gamma, const GridDensity& f);

/// Inner product of Bayes space, i.e. the L2 product of the clr functions.
double inner_product(const GridDensity& f, const GridDensity& g);

namespace detail {
/// Subtract the grid mean so the trapezoid integral of v over [a,b] is zero.
void recenter(Eigen::VectorXd& v, double dx, double length);
}

}  // namespace bts

#endif
