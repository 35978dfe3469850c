// SPDX-License-Identifier: Apache-2.0
#ifndef QINV_CLIFFORD_ORACLE_HPP
#define QINV_CLIFFORD_ORACLE_HPP

#include <map>

#include "qinv/quadform.hpp"

namespace qinv {

/// Brute-force structure-constant analysis of the even Clifford algebra of a
/// form over Q with small integer coefficients (dim <= 6).  Every claim in the
/// report is certified by explicit multiplication on the 2^(d-1) monomial
/// basis e_S (|S| even) with e_i^2 = a_i, e_i e_j = -e_j e_i:
///   - the center is found by solving the commutation equations against the
///     algebra generators;
///   - the algebra is decomposed as a tensor product of quaternion
///     subalgebras (pairs of verified anticommuting elements with verified
///     scalar squares) times its center;
///   - each simple factor's Brauer class is the sum of the quaternion classes,
///     evaluated through Hilbert symbols.
struct CliffordOracleReport {
    int dim = 0;
    int center_dim = 0;        // 1 (odd dim) or 2 (even dim)
    bool center_split = false; // even dim: center k x k vs k(sqrt(delta))
    std::optional<SquareClass> center_disc;  // even dim: square class of z^2
    int factor_count = 0;      // simple k-algebra factors of C0(q)

    /// Verified generator squares of the peeled quaternion subalgebras.
    std::vector<std::pair<i64, i64>> quaternion_generators;
    /// Sum of their classes over Q.
    BrauerClass2 base_class;
    /// Brauer class per simple factor: over Q for center k or k x k (both
    /// factors isomorphic), over k(sqrt(delta)) in the field-center case.
    std::vector<BrauerClass2> factor_classes;
    /// Division(1) / split(0) verdict per factor at each relevant place.
    std::map<std::string, int> division_at;
};

CliffordOracleReport clifford_oracle(const QuadraticForm& q);

}  // namespace qinv

#endif
