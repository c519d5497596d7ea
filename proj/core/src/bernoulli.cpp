#include "oddzeta/bernoulli.hpp"

namespace oddzeta::exact {

BernoulliCache::BernoulliCache() {
    table_.emplace_back(1);      // B_0
    table_.emplace_back(-1, 2);  // B_1, fixed by the z/(e^z - 1) convention
}

void BernoulliCache::extend_locked(unsigned long n) {
    while (table_.size() <= n) {
        const unsigned long i = table_.size();
        // sum_{j=0}^{i} C(i+1, j) B_j = 0  =>  B_i = -sum_{j<i} C(i+1,j) B_j / (i+1)
        Rational acc(0);
        for (unsigned long j = 0; j < i; ++j) {
            if (j >= 3 && (j & 1ul)) continue;  // odd B_j are exactly zero
            acc += Rational(Integer::binomial(i + 1, j)) * table_[j];
        }
        acc /= Rational(static_cast<long>(i + 1));
        table_.push_back(-acc);
    }
}

Rational BernoulliCache::get(unsigned long n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend_locked(n);
    return table_[n];
}

unsigned long BernoulliCache::high_water() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size() - 1;
}

BernoulliCache& default_bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli(unsigned long n, BernoulliCache& cache) { return cache.get(n); }

Rational bernoulli(unsigned long n) { return default_bernoulli_cache().get(n); }

}  // namespace oddzeta::exact
