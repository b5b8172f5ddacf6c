#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oalg/odd_symmetric.hpp"
#include "oalg/permutation.hpp"
#include "oalg/skew_poly.hpp"

#include <random>
#include <thread>
#include <vector>

using namespace oalg;

namespace {

std::vector<Partition> partitions_up_to(int max_size, int max_rows) {
    std::vector<Partition> out;
    for (int m = 0; m <= max_size; ++m)
        for (const auto& p : partitions_of_in_box(m, max_rows, m)) out.push_back(p);
    return out;
}

SkewPoly combination_poly(int n, const PartitionSum& s, SchurVariant v) {
    SkewPoly r(n);
    for (const auto& [p, c] : s.terms()) r += c * odd_schur(n, p, v);
    return r;
}

long long cross_sum(const Partition& p) {
    long long s = 0;
    for (int i = 0; i < p.length(); ++i)
        for (int j = i + 1; j < p.length(); ++j)
            s += static_cast<long long>(p.parts[i]) * p.parts[j];
    return s;
}

SkewPoly staircase_monomial(int n) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = n - 1 - i;
    return SkewPoly::monomial(n, d);
}

SkewPoly padded_monomial(int n, const Partition& p) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < p.length(); ++i) e[i] = p.parts[i];
    return SkewPoly::monomial(n, e);
}

} // namespace

TEST_SUITE("partition sums") {
    TEST_CASE("str and parse") {
        PartitionSum s;
        CHECK(s.str() == "0");
        CHECK(PartitionSum::parse("0") == s);
        s.add(Partition({1, 1}), 1);
        s.add(Partition({2}), 1);
        CHECK(s.str() == "+1*[2] +1*[1,1]");
        CHECK(PartitionSum::parse("+1*[2] +1*[1,1]") == s);
        CHECK(PartitionSum::parse("+1*[1,1] + 1*[2]") == s);
        PartitionSum t;
        t.add(Partition({3, 1}), -2);
        t.add(Partition({2}), 1);
        CHECK(t.str() == "+1*[2] -2*[3,1]");
        CHECK(PartitionSum::parse(t.str()) == t);
        CHECK(PartitionSum::parse("[2]").coeff(Partition({2})) == 1);
    }

    TEST_CASE("cancellation") {
        PartitionSum s;
        s.add(Partition({2, 1}), 3);
        s.add(Partition({2, 1}), -3);
        CHECK(s.is_zero());
        PartitionSum a = PartitionSum::parse("+1*[2]");
        PartitionSum b = PartitionSum::parse("+1*[2] +1*[1,1]");
        CHECK((b - a).str() == "+1*[1,1]");
        CHECK((a + (b - a)) == b);
    }
}

TEST_SUITE("complete symmetric polynomials") {
    TEST_CASE("low degrees match the recurrence by hand") {
        for (int n = 1; n <= 4; ++n) {
            CHECK(odd_complete(n, 0) == SkewPoly::one(n));
            SkewPoly e1 = odd_elementary(n, 1);
            SkewPoly e2 = odd_elementary(n, 2);
            CHECK(odd_complete(n, 1) == e1);
            CHECK(odd_complete(n, 2) == e1 * e1 + e2);
        }
    }

    TEST_CASE("values stay odd symmetric") {
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= 4; ++k) CHECK(is_odd_symmetric(odd_complete(n, k)));
    }
}

TEST_SUITE("odd Schur polynomials") {
    TEST_CASE("base cases") {
        for (int n = 1; n <= 4; ++n) {
            Partition empty(std::vector<int>{});
            CHECK(odd_schur(n, empty, SchurVariant::untwisted) == SkewPoly::one(n));
            CHECK(odd_schur(n, empty, SchurVariant::twisted) == SkewPoly::one(n));
            SkewPoly hat_one = Int(neg_one_pow(choose3(n))) * SkewPoly::one(n);
            CHECK(odd_schur(n, empty, SchurVariant::hat) == hat_one);
            CHECK(odd_schur(n, empty, SchurVariant::hat_twisted) == hat_one);
            CHECK(odd_schur(n, Partition({1})) == odd_elementary(n, 1));
        }
        CHECK(odd_schur(2, Partition({1})).str() == "x1 + x2");
        CHECK_THROWS_AS((void)odd_schur(2, Partition({1, 1, 1})), std::invalid_argument);
    }

    TEST_CASE("four variants sit in a commuting square") {
        for (int n = 1; n <= 4; ++n) {
            const auto w0 = longest_word(n);
            for (const auto& lambda : partitions_up_to(4, n)) {
                SkewPoly s = odd_schur(n, lambda, SchurVariant::untwisted);
                SkewPoly st = odd_schur(n, lambda, SchurVariant::twisted);
                SkewPoly sh = odd_schur(n, lambda, SchurVariant::hat);
                SkewPoly sht = odd_schur(n, lambda, SchurVariant::hat_twisted);
                long long size = lambda.size();
                long long cross = cross_sum(lambda);

                CHECK(st == s.theta());
                CHECK(sht == sh.theta());
                CHECK(sh ==
                      Int(neg_one_pow(choose3(n) + choose2(n - 1) * size + cross)) * s.apply_w0());
                CHECK(sht ==
                      Int(neg_one_pow(choose3(n) + choose2(n) * size + cross)) * st.apply_w0());

                SkewPoly xlxd = padded_monomial(n, lambda) * staircase_monomial(n);
                CHECK(sht == Int(neg_one_pow(cross)) * divided_difference_word(w0, xlxd));
                CHECK(st == Int(neg_one_pow(choose3(n) + choose2(n) * size)) *
                                divided_difference_word(w0, xlxd).apply_w0());
            }
        }
    }

    TEST_CASE("monomial reordering across the staircase") {
        for (int n = 1; n <= 4; ++n) {
            for (const auto& lambda : partitions_up_to(4, n)) {
                long long jl = 0;
                for (int j = 1; j <= lambda.length(); ++j)
                    jl += static_cast<long long>(j) * lambda.part(j);
                SkewPoly lhs = padded_monomial(n, lambda) * staircase_monomial(n);
                SkewPoly rhs = staircase_monomial(n) * padded_monomial(n, lambda);
                long long size = lambda.size();
                CHECK(lhs == Int(neg_one_pow(choose2(n) * size + n * size + jl)) * rhs);
            }
        }
    }

    TEST_CASE("memo is safe under concurrent use") {
        std::vector<SkewPoly> expected;
        auto items = partitions_up_to(4, 3);
        for (const auto& p : items) expected.push_back(odd_schur(3, p, SchurVariant::hat));
        std::vector<std::thread> pool;
        std::vector<int> bad(4, 0);
        for (int t = 0; t < 4; ++t)
            pool.emplace_back([&, t] {
                for (size_t k = 0; k < items.size(); ++k)
                    if (!(odd_schur(3, items[k], SchurVariant::hat) == expected[k])) bad[t] = 1;
            });
        for (auto& th : pool) th.join();
        for (int t = 0; t < 4; ++t) CHECK(bad[t] == 0);
    }
}

TEST_SUITE("schur expansion") {
    TEST_CASE("symmetry detection") {
        CHECK(is_odd_symmetric(odd_elementary(3, 2)));
        CHECK(is_odd_symmetric(odd_complete(3, 3)));
        CHECK(!is_odd_symmetric(SkewPoly::variable(2, 1)));
        CHECK(odd_elementary_twisted(3, 2).is_twisted_symmetric());
    }

    TEST_CASE("frozen expansions") {
        for (int n = 2; n <= 4; ++n) {
            SkewPoly e1 = odd_elementary(n, 1);
            CHECK(expand_in_schur(e1 * e1).str() == "+1*[2] +1*[1,1]");
            CHECK(expand_in_schur(odd_elementary(n, 2)).str() == "-1*[1,1]");
            CHECK(expand_in_schur(SkewPoly::one(n)).str() == "+1*[]");
        }
        // s_{(1^k)} = (-1)^C(k,2) e_k.
        CHECK(expand_in_schur(odd_elementary(3, 3)).str() == "-1*[1,1,1]");
        CHECK(expand_in_schur(odd_elementary(4, 4)).str() == "+1*[1,1,1,1]");
        CHECK_THROWS_AS((void)expand_in_schur(SkewPoly::variable(2, 1)), std::invalid_argument);
    }

    TEST_CASE("recomposition round trip") {
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<int> coeff(-4, 4);
        for (int n = 2; n <= 4; ++n) {
            auto basis = partitions_up_to(4, n);
            for (auto v : {SchurVariant::untwisted, SchurVariant::twisted, SchurVariant::hat,
                           SchurVariant::hat_twisted}) {
                for (int rep = 0; rep < 3; ++rep) {
                    PartitionSum s;
                    for (const auto& p : basis) s.add(p, coeff(rng));
                    SkewPoly f = combination_poly(n, s, v);
                    CHECK(expand_in_schur(f, v) == s);
                }
            }
        }
    }

    TEST_CASE("expansion is stable in the variable count") {
        for (int n = 3; n <= 4; ++n) {
            std::vector<SkewPoly> lo{odd_elementary(n, 1) * odd_elementary(n, 2),
                                     odd_complete(n, 3),
                                     odd_elementary(n, 1) * odd_elementary(n, 1) *
                                         odd_elementary(n, 1)};
            std::vector<SkewPoly> hi{odd_elementary(n + 1, 1) * odd_elementary(n + 1, 2),
                                     odd_complete(n + 1, 3),
                                     odd_elementary(n + 1, 1) * odd_elementary(n + 1, 1) *
                                         odd_elementary(n + 1, 1)};
            for (size_t k = 0; k < lo.size(); ++k)
                CHECK(expand_in_schur(lo[k]) == expand_in_schur(hi[k]));
        }
        CHECK(expand_in_schur(odd_elementary(4, 2) * odd_elementary(4, 2)) ==
              expand_in_schur(odd_elementary(5, 2) * odd_elementary(5, 2)));
        CHECK(expand_in_schur(odd_complete(4, 4)) == expand_in_schur(odd_complete(5, 4)));
    }
}

TEST_SUITE("schur differential formula") {
    TEST_CASE("frozen examples") {
        CHECK(schur_differential(Partition(std::vector<int>{})).is_zero());
        CHECK(schur_differential(Partition({1})).str() == "+1*[2] +1*[1,1]");
        CHECK(schur_differential(Partition({2, 2})).is_zero());
    }

    TEST_CASE("matches differentiating the polynomial") {
        for (const auto& lambda : partitions_up_to(5, 5)) {
            int n = lambda.size() + 1;
            SkewPoly d = odd_schur(n, lambda).differential();
            CHECK(expand_in_schur(d) == schur_differential(lambda, n));
        }
    }

    TEST_CASE("hat variant matches the oracle") {
        int n = 4;
        for (const auto& lambda : partitions_up_to(4, n)) {
            SkewPoly d = odd_schur(n, lambda, SchurVariant::hat).differential();
            CHECK(expand_in_schur(d, SchurVariant::hat) == schur_hat_differential(n, lambda));
        }
    }
}

TEST_SUITE("pieri rule") {
    TEST_CASE("frozen examples") {
        CHECK(pieri_e1(Partition(std::vector<int>{})).str() == "+1*[1]");
        CHECK(pieri_e1(Partition({1})).str() == "+1*[2] +1*[1,1]");
    }

    TEST_CASE("matches polynomial multiplication") {
        int n = 4;
        SkewPoly et1 = odd_elementary_twisted(n, 1);
        for (const auto& lambda : partitions_up_to(4, n)) {
            SkewPoly prod = odd_schur(n, lambda, SchurVariant::twisted) * et1;
            CHECK(expand_in_schur(prod, SchurVariant::twisted) == pieri_e1(lambda, n));
        }
    }

    TEST_CASE("untwisted multiplication carries the same coefficients") {
        int n = 3;
        SkewPoly e1 = odd_elementary(n, 1);
        for (const auto& lambda : partitions_up_to(3, n)) {
            SkewPoly prod = odd_schur(n, lambda) * e1;
            CHECK(expand_in_schur(prod) == pieri_e1(lambda, n));
        }
    }

    TEST_CASE("hat variant matches left multiplication") {
        int n = 4;
        SkewPoly et1 = odd_elementary_twisted(n, 1);
        for (const auto& lambda : partitions_up_to(4, n)) {
            SkewPoly prod = et1 * odd_schur(n, lambda, SchurVariant::hat_twisted);
            CHECK(expand_in_schur(prod, SchurVariant::hat_twisted) == pieri_hat_e1(n, lambda));
        }
    }
}

TEST_SUITE("two-row even products") {
    TEST_CASE("leading coefficient one") {
        int n = 6;
        struct Case {
            std::vector<int> ks;
        };
        std::vector<Case> cases{{{1}}, {{2}}, {{3}}, {{1, 1}}, {{2, 1}}, {{1, 1, 1}}};
        for (const auto& c : cases) {
            SkewPoly prod = SkewPoly::one(n);
            std::vector<int> parts;
            for (int k : c.ks) {
                prod = prod * odd_schur(n, Partition({2 * k, 2 * k}));
                parts.push_back(2 * k);
                parts.push_back(2 * k);
            }
            std::sort(parts.rbegin(), parts.rend());
            PartitionSum expansion = expand_in_schur(prod);
            CHECK(expansion.coeff(Partition(parts)) == 1);
        }
    }
}
