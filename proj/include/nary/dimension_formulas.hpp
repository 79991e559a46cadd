#pragma once

#include <cstdint>
#include <vector>

#include "nary/count.hpp"
#include "nary/solution_counting.hpp"
#include "nary/weight_lattice.hpp"

namespace nary {

/// Dimension of the degree-k invariants of an n-ary form of degree d:
///   sum over s in W of sign(s) * c_{n,d}(k, (rho - s(rho))*).
/// Throws std::logic_error if the alternating sum is negative.
Count nu(int n, int d, std::int64_t k, const CountOptions& options = {});

/// Multiplicity of the irreducible module with dominant highest weight lambda
/// in S^k(A):
///   sum over s in W of sign(s) * c_{n,d}(k, (lambda + rho - s(rho))*).
Count gamma(int n, int d, std::int64_t k, const Weight& lambda, const CountOptions& options = {});

/// Ternary specialization with the five orbit terms written out:
///   c(k,(0,0)) - 2c(k,(1,1)) - c(k,(2,2)) + c(k,(0,3)) + c(k,(3,0)).
Count nu_ternary(int d, std::int64_t k, const CountOptions& options = {});

/// [nu(n,d,0), ..., nu(n,d,k_max)]; the degree slots are computed in parallel.
std::vector<Count> hilbert_prefix(int n, int d, std::int64_t k_max, const CountOptions& options = {});

/// Dominant weights that can occur in S^k(A): partitions of kd into at most n
/// parts, read as consecutive differences. Every lambda with nonzero gamma is
/// among them.
std::vector<Weight> candidate_highest_weights(int n, int d, std::int64_t k);

}  // namespace nary
