#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <thread>
#include <vector>

#include "bpa/exact.hpp"
#include "bpa/sequence_table.hpp"

using namespace bpa;

// ----------------------------------------------------------------------
// independent oracles
// ----------------------------------------------------------------------

// Pascal triangle, nothing shared with the implementation path.
static BigNat pascal_oracle(unsigned n, unsigned k) {
    std::vector<std::vector<BigNat>> tri(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        tri[i].assign(i + 2, 0);
        tri[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j) tri[i][j] = tri[i - 1][j - 1] + tri[i - 1][j];
    }
    return k > n ? BigNat(0) : tri[n][k];
}

// Count multisets of size k over {1..n} by direct recursion.
static unsigned long multiset_oracle(unsigned n, unsigned k, unsigned min = 1) {
    if (k == 0) return 1;
    unsigned long total = 0;
    for (unsigned v = min; v <= n; ++v) total += multiset_oracle(n, k - 1, v);
    return total;
}

// Count set partitions of [n] by block count, growing one element at a time.
static std::map<unsigned, unsigned long> partition_oracle(unsigned n) {
    std::vector<std::vector<std::vector<int>>> parts{{}};
    for (int e = 1; e <= static_cast<int>(n); ++e) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& p : parts) {
            for (std::size_t b = 0; b < p.size(); ++b) {
                auto q = p;
                q[b].push_back(e);
                next.push_back(std::move(q));
            }
            auto q = p;
            q.push_back({e});
            next.push_back(std::move(q));
        }
        parts = std::move(next);
    }
    std::map<unsigned, unsigned long> by_blocks;
    for (const auto& p : parts) ++by_blocks[static_cast<unsigned>(p.size())];
    return by_blocks;
}

// Count permutations of [n] by cycle count.
static std::map<unsigned, unsigned long> cycle_count_oracle(unsigned n) {
    std::vector<int> image(n);
    for (unsigned i = 0; i < n; ++i) image[i] = static_cast<int>(i) + 1;
    std::map<unsigned, unsigned long> by_cycles;
    do {
        std::vector<bool> seen(n + 1, false);
        unsigned cycles = 0;
        for (unsigned s = 1; s <= n; ++s) {
            if (seen[s]) continue;
            ++cycles;
            unsigned cur = s;
            while (!seen[cur]) {
                seen[cur] = true;
                cur = static_cast<unsigned>(image[cur - 1]);
            }
        }
        ++by_cycles[cycles];
    } while (std::next_permutation(image.begin(), image.end()));
    return by_cycles;
}

// The reference grid of r(m,l) for 0<=m<=5, 0<=l<=8.
static const unsigned long kReferenceTable[6][9] = {
    {1, 1, 3, 13, 75, 541, 4683, 47293, 545835},
    {1, 2, 8, 44, 308, 2612, 25988, 296564, 3816548},
    {1, 3, 15, 99, 807, 7803, 87135, 1102419, 15575127},
    {1, 4, 24, 184, 1704, 18424, 227304, 3147064, 48278184},
    {1, 5, 35, 305, 3155, 37625, 507035, 7608305, 125687555},
    {1, 6, 48, 468, 5340, 69516, 1014348, 16372908, 289366860},
};

// ----------------------------------------------------------------------

TEST_CASE("binomial matches the Pascal oracle") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(6, 3) == 20);
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n + 2; ++k)
            CHECK(binomial(n, k) == pascal_oracle(n, k));
}

TEST_CASE("multichoose counts multisets") {
    CHECK(multichoose(1, 7) == 1);
    CHECK(multichoose(3, 0) == 1);
    CHECK(multichoose(3, 2) == 6);
    for (unsigned n = 0; n <= 5; ++n)
        for (unsigned k = 0; k <= 5; ++k)
            CHECK(multichoose(n, k) == multiset_oracle(n, k));
}

TEST_CASE("stirling2 matches set-partition enumeration") {
    CHECK(stirling2(0, 0) == 1);
    for (unsigned n = 1; n <= 6; ++n) CHECK(stirling2(n, 1) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    for (unsigned n = 1; n <= 8; ++n) {
        auto oracle = partition_oracle(n);
        for (unsigned k = 0; k <= n + 1; ++k) {
            unsigned long want = oracle.count(k) ? oracle[k] : 0;
            CHECK(stirling2(n, k) == want);
        }
    }
}

TEST_CASE("stirling1_unsigned matches cycle-count enumeration") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(stirling1_unsigned(n, n) == 1);
    CHECK(stirling1_unsigned(3, 1) == 2);
    CHECK(stirling1_unsigned(4, 2) == 11);
    for (unsigned n = 1; n <= 7; ++n) {
        auto oracle = cycle_count_oracle(n);
        for (unsigned k = 0; k <= n + 1; ++k) {
            unsigned long want = oracle.count(k) ? oracle[k] : 0;
            CHECK(stirling1_unsigned(n, k) == want);
        }
    }
}

TEST_CASE("ordered_bell reproduces the reference row") {
    CHECK(ordered_bell(0) == 1);
    CHECK(ordered_bell(2) == 3);
    CHECK(ordered_bell(8) == 545835);
    for (unsigned l = 0; l <= 8; ++l) CHECK(ordered_bell(l) == kReferenceTable[0][l]);
}

TEST_CASE("r formulas reproduce the full reference grid") {
    CHECK(r_via_recurrence(2, 2) == 15);
    CHECK(r_via_recurrence(5, 0) == 1);
    CHECK(r_via_recurrence(3, 4) == 1704);
    CHECK(r_via_stirling_first(1, 2) == 8);
    CHECK(r_via_stirling_first(0, 5) == 541);
    CHECK(r_via_stirling_first(4, 8) == 125687555);
    CHECK(r_via_blocks(2, 3) == 99);
    CHECK(r_via_blocks(0, 1) == 1);
    CHECK(r_via_blocks(5, 8) == 289366860);

    for (unsigned m = 0; m <= 5; ++m) {
        for (unsigned l = 0; l <= 8; ++l) {
            const BigNat want(kReferenceTable[m][l]);
            CHECK(r_via_recurrence(m, l) == want);
            CHECK(r_via_stirling_first(m, l) == want);
            CHECK(r_via_blocks(m, l) == want);
        }
    }
}

TEST_CASE("single-bar counts average consecutive ordered Bell numbers") {
    for (unsigned l = 0; l <= 20; ++l)
        CHECK(r_via_stirling_first(1, l) * 2 == ordered_bell(l) + ordered_bell(l + 1));
}

TEST_CASE("stirling-first numerator is divisible by 2^m m!") {
    for (unsigned m = 0; m <= 8; ++m) {
        const BigNat den = pow2(m) * factorial(m);
        for (unsigned l = 0; l <= 12; ++l) {
            BigNat num = 0;
            for (unsigned i = 0; i <= m; ++i)
                num += stirling1_unsigned(m + 1, i + 1) * ordered_bell(l + i);
            CHECK(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
        }
    }
}

TEST_CASE("s formulas agree with each other") {
    CHECK(s_via_blocks(2, 0) == 0);
    CHECK(s_via_blocks(1, 2) == 2);
    CHECK(s_via_blocks(2, 3) == 6);
    CHECK(s_via_inclusion_exclusion(1, 2) == 2);
    CHECK(s_via_inclusion_exclusion(0, 4) == 75);
    CHECK(s_via_inclusion_exclusion(2, 1) == 0);
    CHECK(s_via_first_blocks(0, 0) == 0);
    CHECK(s_via_first_blocks(1, 3) == 18); // enumeration oracle value (test_enumerate)
    CHECK(s_via_first_blocks(1, 2) == 2);

    for (unsigned m = 0; m <= 4; ++m) {
        for (unsigned l = 0; l <= 10; ++l) {
            const BigNat want = s_via_blocks(m, l);
            CHECK(s_via_first_blocks(m, l) == want);
            if (l >= 1) CHECK(s_via_inclusion_exclusion(m, l) == want);
        }
    }
}

TEST_CASE("empty-section counts partition the barred arrangements") {
    CHECK(count_k_empty_sections(2, 1, 2) == 3);
    CHECK(count_k_empty_sections(1, 2, 0) == 2);
    CHECK(count_k_empty_sections(1, 2, 1) == 6);
    CHECK_THROWS_AS(count_k_empty_sections(1, 2, 2), std::invalid_argument);

    for (unsigned m = 0; m <= 4; ++m) {
        for (unsigned l = 1; l <= 8; ++l) {
            BigNat sum = 0;
            for (unsigned k = 0; k <= m; ++k) sum += count_k_empty_sections(m, l, k);
            CHECK(sum == r_via_recurrence(m, l));
        }
    }
}

TEST_CASE("r recovered from the special counts") {
    CHECK(r_from_s(1, 2) == 8);
    CHECK(r_from_s(2, 1) == 3);
    CHECK(r_from_s(3, 3) == 184);
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned l = 1; l <= 10; ++l)
            CHECK(r_from_s(m, l) == r_via_recurrence(m, l));
}

TEST_CASE("verify_identities reports all-pass over the reference range") {
    auto report = verify_identities(5, 8);
    for (const auto& c : report.checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
    CHECK(report.all_pass());

    CHECK(verify_identities(0, 0).all_pass());
    CHECK(verify_identities(4, 12).all_pass());
}

TEST_CASE("SequenceTable flags cross-method disagreement") {
    SequenceTable table;
    table.insert(SeqKind::r, 2, 2, BigNat(15), "recurrence");
    table.insert(SeqKind::r, 2, 2, BigNat(15), "block-sum");
    REQUIRE(table.lookup(SeqKind::r, 2, 2));
    CHECK(*table.lookup(SeqKind::r, 2, 2) == 15);
    CHECK(table.method_of(SeqKind::r, 2, 2) == "recurrence+block-sum");
    CHECK_THROWS_AS(table.insert(SeqKind::r, 2, 2, BigNat(16), "broken"), internal_error);
    CHECK(!table.lookup(SeqKind::s, 2, 2));
}

TEST_CASE("memoized sequences are safe under concurrent readers") {
    std::vector<std::thread> workers;
    std::vector<BigNat> results(8);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([t, &results] {
            BigNat acc = 0;
            for (unsigned m = 0; m <= 4; ++m)
                for (unsigned l = 0; l <= 10; ++l)
                    acc += r_via_recurrence(m, l) + s_via_blocks(m, l) +
                           r_via_stirling_first(m, l);
            results[t] = acc;
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}
