#include "doctest.h"

#include <vector>

#include "cesaro2/operators.hpp"
#include "cesaro2/telescoping.hpp"
#include "support.hpp"

using namespace cesaro2;

namespace {
using KFun = RationalFunction<Rational>;

KFun kpoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return KFun(AlphaPoly(std::move(c)));
}

const std::vector<Rational> kAlphaSamples = {Rational(-1, 2), Rational(0), Rational(1, 3),
                                             Rational(1, 2), Rational(1), Rational(5, 2)};
const std::vector<long> kPartialSumKs = {0, 1, 5, 50};
}  // namespace

TEST_CASE("classic telescope 1/((k+1)(k+2))") {
    const KFun summand(AlphaPoly(1L), (AlphaPoly::variable() + AlphaPoly(1L)) *
                                          (AlphaPoly::variable() + AlphaPoly(2L)));
    const KFun s(AlphaPoly(1L), AlphaPoly::variable() + AlphaPoly(1L));
    const auto w = telescope_verify(summand, s);
    CHECK(w.initial_value == Rational(1));
    CHECK(w.remainder(0) == Rational(1, 2));
    for (long K : kPartialSumKs) CHECK(w.partial_sum(K) + w.remainder(K) == w.initial_value);
}

TEST_CASE("telescope_verify rejects a wrong antidifference and divergent summands") {
    const KFun harmonic(AlphaPoly(1L), AlphaPoly::variable() + AlphaPoly(1L));
    // no vanishing rational antidifference exists; any candidate fails the identity
    CHECK_THROWS_AS(telescope_verify(harmonic, KFun(AlphaPoly(1L), AlphaPoly::variable() + AlphaPoly(2L))),
                    TelescopeError);
    // an antidifference that does not vanish at infinity is rejected up front
    CHECK_THROWS_AS(telescope_verify(harmonic, kpoly({0, 1})), TelescopeError);
}

TEST_CASE("M*PM series witness at i=j=0, alpha=0") {
    const auto w = mpm_tail_witness(Rational(0), 0L, 0L);
    // s(k) = (4k^2 + 10k + 6)/((k+1)(k+2)(k+3)); the shared factor (k+1)
    // cancels in canonical form, the function is the same
    const KFun stated(AlphaPoly(std::vector<Rational>{Rational(6), Rational(10), Rational(4)}),
                      (AlphaPoly::variable() + AlphaPoly(1L)) * (AlphaPoly::variable() + AlphaPoly(2L)) *
                          (AlphaPoly::variable() + AlphaPoly(3L)));
    CHECK(ratfun_equal(w.s, stated));
    CHECK(w.s.num() == AlphaPoly(std::vector<Rational>{Rational(6), Rational(4)}));
    CHECK(w.initial_value == Rational(1));
    // summand matches the displayed 4(k+1)^2 / ((k+1)(k+2)(k+3)(k+4)) too
    const KFun summand(AlphaPoly(std::vector<Rational>{Rational(4), Rational(8), Rational(4)}),
                       stated.den() * (AlphaPoly::variable() + AlphaPoly(4L)));
    CHECK(ratfun_equal(w.summand, summand));
}

TEST_CASE("M*PM witness ties to the entry generators and closed form") {
    for (const auto& a : kAlphaSamples) {
        for (long i = 0; i <= 4; ++i) {
            for (long j = i; j <= 5; ++j) {
                const auto w = mpm_tail_witness(a, i, j);
                CHECK(w.initial_value == mpm_entry(a, i, j));
                // summand(k) == m_{j+k,i} p_{j+k} m_{j+k,j} at sampled k
                for (long k = 0; k <= 3; ++k) {
                    const Rational expected =
                        c2_entry(a, j + k, i) * c2_p_diag(a, j + k) * c2_entry(a, j + k, j);
                    CHECK(w.summand.eval(Rational(k)) == expected);
                }
                for (long K : kPartialSumKs)
                    CHECK(w.partial_sum(K) + w.remainder(K) == w.initial_value);
            }
        }
    }
    CHECK_THROWS_AS(mpm_tail_witness(Rational(0), 3L, 1L), std::invalid_argument);
}

TEST_CASE("BM upper witness ties to the entry generators") {
    for (const auto& a : kAlphaSamples) {
        for (long i = 0; i <= 3; ++i) {
            for (long j = i; j <= 4; ++j) {
                const auto w = bm_upper_tail_witness(a, i, j);
                CHECK(w.initial_value == c2_entry(a, j, i));  // (M*)_{ij}
                for (long k = 0; k <= 3; ++k)
                    CHECK(w.summand.eval(Rational(k)) == b_entry(a, i, j + k) * c2_entry(a, j + k, j));
                for (long K : kPartialSumKs)
                    CHECK(w.partial_sum(K) + w.remainder(K) == w.initial_value);
            }
        }
    }
    CHECK_THROWS_AS(bm_upper_tail_witness(Rational(0), 2L, 1L), std::invalid_argument);
}

TEST_CASE("BM lower witness absorbs the head terms to zero") {
    for (const auto& a : kAlphaSamples) {
        for (long i = 1; i <= 5; ++i) {
            for (long j = 0; j < i; ++j) {
                const auto w = bm_lower_tail_witness(a, i, j);
                for (long k = 0; k <= 3; ++k)
                    CHECK(w.summand.eval(Rational(k)) == b_entry(a, i, i + k) * c2_entry(a, i + k, j));
                Rational head(0);
                for (long k = std::max(0L, i - 2); k < i; ++k)
                    head += b_entry(a, i, k) * c2_entry(a, k, j);
                CHECK(head + w.initial_value == Rational(0));
                for (long K : kPartialSumKs)
                    CHECK(w.partial_sum(K) + w.remainder(K) == w.initial_value);
            }
        }
    }
    CHECK_THROWS_AS(bm_lower_tail_witness(Rational(0), 1L, 1L), std::invalid_argument);
}

TEST_CASE("order-one tail witness") {
    // value 1/(m+1+alpha); at alpha=0, m=0: 1, and m=1: 1/2
    CHECK(c1_tail_witness(Rational(0), 0L).initial_value == Rational(1));
    CHECK(c1_tail_witness(Rational(0), 1L).initial_value == Rational(1, 2));
    for (const auto& a : kAlphaSamples) {
        for (long m = 0; m <= 6; ++m) {
            const auto w = c1_tail_witness(a, m);
            CHECK(w.initial_value == Rational(1) / (Rational(m + 1) + a));
            for (long K : kPartialSumKs)
                CHECK(w.partial_sum(K) + w.remainder(K) == w.initial_value);
        }
    }
}

TEST_CASE("witnesses instantiate over the symbolic coefficient field") {
    const AlphaRatFun a = AlphaRatFun::variable();
    const auto w = mpm_tail_witness(a, 1L, 2L);
    CHECK(w.initial_value == mpm_entry(a, 1L, 2L));
    CHECK(w.partial_sum(5) + w.remainder(5) == w.initial_value);
    const auto wl = bm_lower_tail_witness(a, 3L, 1L);
    AlphaRatFun head;
    for (long k = 1; k <= 2; ++k) head += b_entry(a, 3L, k) * c2_entry(a, k, 1L);
    CHECK(head + wl.initial_value == AlphaRatFun(0));
}
