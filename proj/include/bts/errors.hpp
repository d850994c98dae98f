#ifndef BTS_ERRORS_HPP
#define BTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bts {

// Contract violations carry the name of the failed precondition so callers
// can branch on the error class rather than parse messages.

struct GridMismatch : std::invalid_argument {
    explicit GridMismatch(const std::string& msg) : std::invalid_argument("GridMismatch: " + msg) {}
};

struct NonPositiveDensity : std::invalid_argument {
    explicit NonPositiveDensity(const std::string& msg) : std::invalid_argument("NonPositiveDensity: " + msg) {}
};

struct BadDimension : std::invalid_argument {
    explicit BadDimension(const std::string& msg) : std::invalid_argument("BadDimension: " + msg) {}
};

struct BadKnots : std::invalid_argument {
    explicit BadKnots(const std::string& msg) : std::invalid_argument("BadKnots: " + msg) {}
};

struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& msg) : std::runtime_error("SingularSystem: " + msg) {}
};

struct DegenerateFlat : std::runtime_error {
    explicit DegenerateFlat(const std::string& msg) : std::runtime_error("DegenerateFlat: " + msg) {}
};

struct BadBandwidth : std::invalid_argument {
    explicit BadBandwidth(const std::string& msg) : std::invalid_argument("BadBandwidth: " + msg) {}
};

struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& msg) : std::runtime_error("BracketFailure: " + msg) {}
};

struct ZeroVariance : std::runtime_error {
    explicit ZeroVariance(const std::string& msg) : std::runtime_error("ZeroVariance: " + msg) {}
};

struct AllRemoved : std::runtime_error {
    explicit AllRemoved(const std::string& msg) : std::runtime_error("AllRemoved: " + msg) {}
};

struct InitInvalid : std::invalid_argument {
    explicit InitInvalid(const std::string& msg) : std::invalid_argument("InitInvalid: " + msg) {}
};

struct NonFinite : std::runtime_error {
    explicit NonFinite(const std::string& msg) : std::runtime_error("NonFinite: " + msg) {}
};

struct DegenerateBandwidths : std::runtime_error {
    explicit DegenerateBandwidths(const std::string& msg) : std::runtime_error("DegenerateBandwidths: " + msg) {}
};

struct OutOfSupport : std::invalid_argument {
    explicit OutOfSupport(const std::string& msg) : std::invalid_argument("OutOfSupport: " + msg) {}
};

struct UnknownTestbed : std::invalid_argument {
    explicit UnknownTestbed(const std::string& msg) : std::invalid_argument("UnknownTestbed: " + msg) {}
};

}  // namespace bts

#endif
