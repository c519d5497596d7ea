#pragma once

#include <mutex>
#include <vector>

#include "oddzeta/rational.hpp"

namespace oddzeta::exact {

/// Memoized table of Bernoulli numbers under the z/(e^z - 1) convention
/// (B_0 = 1, B_1 = -1/2, odd indices >= 3 vanish). Values are produced by the
/// defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 and are append-only:
/// recomputation returns bit-identical rationals.
///
/// Thread safety: all accessors lock internally; concurrent extension is
/// idempotent (both threads observe the same values).
class BernoulliCache {
public:
    BernoulliCache();

    /// B_n, extending the table through index n if needed.
    Rational get(unsigned long n);

    /// Largest index computed so far.
    unsigned long high_water() const;

private:
    void extend_locked(unsigned long n);

    mutable std::mutex mu_;
    std::vector<Rational> table_;  // table_[i] = B_i
};

/// Process-wide shared cache used by the coefficient helpers.
BernoulliCache& default_bernoulli_cache();

/// B_n using an explicit cache.
Rational bernoulli(unsigned long n, BernoulliCache& cache);

/// B_n using the shared cache.
Rational bernoulli(unsigned long n);

}  // namespace oddzeta::exact
