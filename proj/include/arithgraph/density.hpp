#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithgraph/critpoly.hpp"
#include "arithgraph/graph.hpp"

namespace arithgraph {

// { modulus * t + b : t >= 0 } for each residue b, reduced to [0, modulus).
struct Progression {
    Integer modulus;
    std::vector<Integer> residues;
};

class ProgressionUnion {
public:
    ProgressionUnion() = default;
    explicit ProgressionUnion(std::vector<Progression> parts);

    void add(const Integer& modulus, std::vector<Integer> residues);
    const std::vector<Progression>& parts() const { return parts_; }
    bool pairwise_coprime() const;
    bool empty() const { return parts_.empty(); }

private:
    std::vector<Progression> parts_;
};

// 1 - prod(1 - r_i / a_i). Throws ContractError unless the moduli are pairwise coprime.
Rational union_density(const ProgressionUnion& u);

// |U ∩ [0, N]| / N capped at 1, by direct counting; works for any moduli.
Rational counted_density(const ProgressionUnion& u, std::int64_t n);

// |S ∩ [0, N]| / N capped at 1, where member[k] says whether k is in S.
Rational empirical_density(const std::vector<bool>& member, std::int64_t n);

struct CertifiedForm {
    LinearForm form;
    std::vector<Integer> rest;  // on G minus v minus the t vertex, increasing G index order
};

struct DensityCertificate {
    Multigraph graph;
    std::size_t vertex = 0;    // the deleted vertex v
    std::size_t t_vertex = 0;  // vertex of G minus v carrying t, as a G index
    std::string subgraph;      // family name of G minus v, or "other"
    std::string recipe;        // path, cycle, D, star, complete, K(2,q) or scan
    std::vector<CertifiedForm> forms;
};

// A vertex v and a labeling of G minus v that is linear in t with coprime coefficients.
// Named recipes are tried for every v first, then a scan of diagonals in [2,7].
std::optional<DensityCertificate> density_certificate(const Multigraph& g);

// Re-evaluates each form at t = 2, 3, 101 and checks gcd(alpha, beta) = 1.
bool verify_certificate(const DensityCertificate& c);

struct ValueProgression {
    Integer u;  // prime value of d at the generating labeling of G minus v
    Integer w;  // d_G(s, ...) = u s - w
    Integer t;  // the t giving u
};

struct CertificateProgressions {
    std::vector<ValueProgression> values;
    ProgressionUnion progressions;
};

// The first `budget` primes u of the form alpha t - beta (t >= 2), each giving values u s - w, s >= 2.
// Throws ContractError when fewer primes are found for t up to max_t.
CertificateProgressions progressions_from_certificate(const DensityCertificate& c, int budget,
                                                      std::int64_t max_t = 1000000);

}  // namespace arithgraph
