#ifndef RICCI_TRANSPORT_HPP
#define RICCI_TRANSPORT_HPP

#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace ricci {

// Finitely supported probability distribution on vertices.
// All stored weights are > 0 and sum to exactly 1.
class Measure {
public:
    Measure() = default;
    explicit Measure(std::map<int, Rational> weights);

    const std::map<int, Rational>& weights() const { return weights_; }
    Rational at(int v) const;
    bool operator==(const Measure&) const = default;

private:
    std::map<int, Rational> weights_;
};

// Feasible transport plan plus 1-Lipschitz dual potentials with zero gap;
// together they prove the W1 value exact.
struct TransportCertificate {
    std::map<std::pair<int, int>, Rational> flow;  // positive entries only
    std::map<int, long long> potentials;           // integer, support union
    Rational cost;
};

struct CertificateCheck {
    bool ok = false;
    std::string detail;
};

// Independent validation: marginals, nonnegativity, Lipschitz potentials,
// zero duality gap. Does not rely on how the certificate was produced.
CertificateCheck validate_certificate(const Graph& g, const Measure& mu, const Measure& nu,
                                      const TransportCertificate& cert);

// Lazy random-walk measure: mass alpha at x, (1-alpha)/deg(x) on each neighbor.
Measure lazy_measure(const Graph& g, int x, const Rational& alpha);

// Exact W1 under hop-count distance, with a validating certificate.
std::pair<Rational, TransportCertificate> wasserstein(const Graph& g, const Measure& mu,
                                                      const Measure& nu);

// kappa_alpha(x,y) = 1 - W(mu_x^alpha, mu_y^alpha); xy must be an edge.
Rational kappa_alpha(const Graph& g, int x, int y, const Rational& alpha);

// Raised when the alpha=1/2 and alpha=2/3 quotients disagree, which would
// invalidate the linearity assumption the extraction relies on.
struct LinearityViolation : Error {
    int x, y;
    Rational at_half, at_two_thirds;
    LinearityViolation(int x_, int y_, Rational half, Rational two_thirds)
        : Error("linearity violation at edge (" + std::to_string(x_) + "," + std::to_string(y_) +
                "): " + half.str() + " vs " + two_thirds.str()),
          x(x_), y(y_), at_half(std::move(half)), at_two_thirds(std::move(two_thirds)) {}
};

// Lin-Lu-Yau curvature: kappa_alpha/(1-alpha) evaluated at alpha = 1/2, cross
// checked against alpha = 2/3 (both lie in the linear range of the idleness
// function; disagreement raises LinearityViolation).
Rational lly_curvature(const Graph& g, int x, int y);

struct FlatnessVerdict {
    bool flat = false;
    Edge witness{-1, -1};  // first non-zero edge, lexicographic
    Rational kappa;
};

// Flat iff every edge has curvature exactly zero.
FlatnessVerdict is_ricci_flat(const Graph& g);

}  // namespace ricci

#endif  // RICCI_TRANSPORT_HPP
