#pragma once

#include <cstddef>
#include <vector>

#include "dd.hpp"
#include "wrpoly/racah.hpp"

namespace wr {
namespace detail {

// Orthonormalized discrete table kept in compensated arithmetic: value(n, m) is
// sqrt(|omega_hat(n)|) * bare(n, m), rho(m) the normalized weights, row_signs the
// metric signs. Shared by the normalization front end and the Gram checks, which
// need the extra digits before rounding.
struct RacahNormalizedDD {
    int size = 0;
    std::vector<DD> values;
    std::vector<DD> rho;
    std::vector<int> row_signs;

    const DD& value(int n, int m) const {
        return values[static_cast<std::size_t>(n) * static_cast<std::size_t>(size) +
                      static_cast<std::size_t>(m)];
    }
};

RacahNormalizedDD racah_normalized_dd(const RacahParams& r);

}  // namespace detail
}  // namespace wr
