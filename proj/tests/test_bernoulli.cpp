#include <doctest.h>

#include <thread>
#include <vector>

#include "oddzeta/bernoulli.hpp"
#include "oracles.hpp"

using oddzeta::exact::BernoulliCache;
using oddzeta::exact::Integer;
using oddzeta::exact::Rational;
using oddzeta::exact::bernoulli;

TEST_CASE("generating-function convention and small values") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3).is_zero());
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (const auto& row : oracles::kBernoulliTable)
        CHECK(bernoulli(row.n) == Rational::from_string(row.value));
}

TEST_CASE("defining recurrence holds exactly") {
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
    for (unsigned long n = 1; n <= 80; ++n) {
        Rational acc(0);
        for (unsigned long j = 0; j <= n; ++j)
            acc += Rational(Integer::binomial(n + 1, j)) * bernoulli(j);
        CHECK_MESSAGE(acc.is_zero(), "recurrence failed at n=", n);
    }
}

TEST_CASE("odd indices vanish, even indices alternate in sign") {
    for (unsigned long k = 1; k <= 50; ++k) CHECK(bernoulli(2 * k + 1).is_zero());
    for (unsigned long k = 1; k <= 40; ++k) {
        Rational b = bernoulli(2 * k);
        CHECK((k % 2 == 1 ? b.sign() : -b.sign()) == 1);  // (-1)^(k-1) B_2k > 0
    }
}

TEST_CASE("tangent-number oracle agrees") {
    oracles::TangentBernoulli oracle(64);
    for (unsigned long n = 0; n <= 64; ++n) CHECK(bernoulli(n) == oracle.get(n));
}

TEST_CASE("cache extension is append-only and deterministic") {
    BernoulliCache cache;
    CHECK(cache.high_water() == 1);
    Rational b20 = cache.get(20);
    CHECK(cache.high_water() == 20);
    CHECK(cache.get(10) == bernoulli(10));
    CHECK(cache.high_water() == 20);
    CHECK(cache.get(20).to_string() == b20.to_string());

    BernoulliCache fresh;
    CHECK(fresh.get(20).to_string() == b20.to_string());
}

TEST_CASE("concurrent readers and extenders race benignly") {
    BernoulliCache cache;
    oracles::TangentBernoulli oracle(60);
    std::vector<std::thread> pool;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w) {
        pool.emplace_back([&cache, &oracle, &ok, w] {
            for (unsigned long n = static_cast<unsigned long>(w); n <= 60; n += 2)
                if (!(cache.get(n) == oracle.get(n))) ok = false;
        });
    }
    for (auto& th : pool) th.join();
    CHECK(ok.load());
    CHECK(cache.high_water() == 60);
}
