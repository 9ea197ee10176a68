#pragma once

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpa/bignat.hpp"
#include "bpa/errors.hpp"
#include "bpa/report.hpp"

// Exact big-integer computation of the counting sequences:
//   r(l)      ordered Bell numbers (preferential arrangements of [l])
//   r(m,l)    arrangements of [l] with m bars
//   s(m,l)    arrangements with m bars and no empty section
// Each sequence has several independent formulas; they are kept separate so
// they can cross-check one another.

namespace bpa {

inline BigNat binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigNat r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// C(n+k-1, k): multisets of size k drawn from n symbols.
inline BigNat multichoose(unsigned long n, unsigned long k) {
    if (k == 0) return 1;
    if (n == 0) return 0;
    return binomial(n + k - 1, k);
}

namespace detail {

// Lazily extended Stirling triangle. Safe for concurrent readers; rows are
// appended under an exclusive lock.
class StirlingTriangle {
public:
    enum class Kind { first_unsigned, second };

    explicit StirlingTriangle(Kind kind) : kind_(kind) {
        rows_.push_back({BigNat(1)}); // row 0: single entry, value 1
    }

    BigNat at(unsigned long n, unsigned long k) {
        if (k > n) return 0;
        {
            std::shared_lock lock(mu_);
            if (n < rows_.size()) return rows_[n][k];
        }
        std::unique_lock lock(mu_);
        while (rows_.size() <= n) {
            const std::vector<BigNat>& prev = rows_.back();
            const unsigned long row_index = rows_.size();
            std::vector<BigNat> row(row_index + 1);
            row[0] = 0;
            for (unsigned long j = 1; j <= row_index; ++j) {
                const BigNat above = (j < row_index) ? prev[j] : BigNat(0);
                if (kind_ == Kind::second)
                    row[j] = BigNat(j) * above + prev[j - 1];
                else
                    row[j] = BigNat(row_index - 1) * above + prev[j - 1];
            }
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    Kind kind_;
    std::shared_mutex mu_;
    std::vector<std::vector<BigNat>> rows_;
};

} // namespace detail

// Partitions of an l-set into k nonempty blocks; stirling2(0,0) = 1.
inline BigNat stirling2(unsigned long l, unsigned long k) {
    static detail::StirlingTriangle tri(detail::StirlingTriangle::Kind::second);
    return tri.at(l, k);
}

// Permutations of [n] with k cycles (unsigned Stirling numbers of the first
// kind), via c(m+1, j+1) = c(m, j) + m*c(m, j+1).
inline BigNat stirling1_unsigned(unsigned long n, unsigned long k) {
    static detail::StirlingTriangle tri(detail::StirlingTriangle::Kind::first_unsigned);
    return tri.at(n, k);
}

// r(l), the number of preferential arrangements of [l]: sum over block
// counts of {l,k} * k!.
inline BigNat ordered_bell(unsigned long l) {
    static std::vector<BigNat> memo;
    static std::shared_mutex mu;
    {
        std::shared_lock lock(mu);
        if (l < memo.size()) return memo[l];
    }
    std::unique_lock lock(mu);
    while (memo.size() <= l) {
        const unsigned long n = memo.size();
        BigNat sum = 0;
        for (unsigned long k = 0; k <= n; ++k)
            sum += stirling2(n, k) * factorial(k);
        memo.push_back(std::move(sum));
    }
    return memo[l];
}

// r(m,l) by iterating 2m * r(m,l) = r(m-1,l+1) + m * r(m-1,l) down from the
// ordered Bell row. The divisions are exact; a remainder is reported.
inline BigNat r_via_recurrence(unsigned long m, unsigned long l) {
    std::vector<BigNat> row(m + 1);
    for (unsigned long j = 0; j <= m; ++j)
        row[j] = ordered_bell(l + j);
    for (unsigned long level = 1; level <= m; ++level) {
        for (unsigned long j = 0; j + level <= m; ++j) {
            BigNat num = row[j + 1] + BigNat(level) * row[j];
            row[j] = exact_div(num, BigNat(2 * level), "r_via_recurrence");
        }
    }
    return row[0];
}

// r(m,l) = (1 / (2^m m!)) * sum_i c(m+1, i+1) * r(l+i).
inline BigNat r_via_stirling_first(unsigned long m, unsigned long l) {
    BigNat num = 0;
    for (unsigned long i = 0; i <= m; ++i)
        num += stirling1_unsigned(m + 1, i + 1) * ordered_bell(l + i);
    return exact_div(num, pow2(m) * factorial(m), "r_via_stirling_first");
}

// r(m,l) = sum_k {l,k} * k! * multichoose(m+1, k); r(m,0) = 1 by the table
// convention (the block-sum identity is stated for l >= 1).
inline BigNat r_via_blocks(unsigned long m, unsigned long l) {
    if (l == 0) return 1;
    BigNat sum = 0;
    for (unsigned long k = 0; k <= l; ++k)
        sum += stirling2(l, k) * factorial(k) * multichoose(m + 1, k);
    return sum;
}

// s(m,l) = sum_k {l,k} * k! * C(k-1, m): k ordered blocks leave k-1 gaps,
// each holding at most one bar. s(m,0) = 0 (the empty sum).
inline BigNat s_via_blocks(unsigned long m, unsigned long l) {
    BigNat sum = 0;
    for (unsigned long k = 1; k <= l; ++k)
        sum += stirling2(l, k) * factorial(k) * binomial(k - 1, m);
    return sum;
}

// s(m,l) = sum_i (-1)^(m-i) * C(m+1, i+1) * r(i,l), l >= 1.
inline BigNat s_via_inclusion_exclusion(unsigned long m, unsigned long l) {
    if (l == 0)
        throw std::invalid_argument("s_via_inclusion_exclusion requires l >= 1");
    BigInt acc = 0;
    for (unsigned long i = 0; i <= m; ++i) {
        BigInt term = binomial(m + 1, i + 1) * r_via_recurrence(i, l);
        if ((m - i) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    if (acc < 0)
        throw internal_error("s_via_inclusion_exclusion: negative count " + acc.get_str());
    return acc;
}

// s(m,l) = (m+1)! * sum_j C(l,j) * {j, m+1} * r(m, l-j), splitting off the
// elements that occupy the first block of every section.
inline BigNat s_via_first_blocks(unsigned long m, unsigned long l) {
    BigNat sum = 0;
    for (unsigned long j = 0; j <= l; ++j)
        sum += binomial(l, j) * stirling2(j, m + 1) * r_via_recurrence(m, l - j);
    return factorial(m + 1) * sum;
}

// Arrangements of [l] with m bars and exactly k empty sections:
// C(m+1, k) * s(m-k, l).
inline BigNat count_k_empty_sections(unsigned long m, unsigned long l, unsigned long k) {
    if (k > m)
        throw std::invalid_argument("count_k_empty_sections: k exceeds bar count");
    if (l == 0)
        throw std::invalid_argument("count_k_empty_sections requires l >= 1");
    return binomial(m + 1, k) * s_via_blocks(m - k, l);
}

// r(m,l) = sum_k C(m+1, k+1) * s(k,l), l >= 1.
inline BigNat r_from_s(unsigned long m, unsigned long l) {
    if (l == 0)
        throw std::invalid_argument("r_from_s requires l >= 1");
    BigNat sum = 0;
    for (unsigned long k = 0; k <= m; ++k)
        sum += binomial(m + 1, k + 1) * s_via_blocks(k, l);
    return sum;
}

namespace detail {

inline std::string cell(unsigned long m, unsigned long l) {
    return "(m=" + std::to_string(m) + ",l=" + std::to_string(l) + ")";
}

inline std::string grid_range(unsigned long m_max, unsigned long l_max) {
    return "0<=m<=" + std::to_string(m_max) + ", 0<=l<=" + std::to_string(l_max);
}

// Compare `lhs` against `rhs` cell by cell; failures are accumulated, not
// thrown, so a report can name every broken identity.
template <typename L, typename R>
CheckResult compare_grid(const std::string& name, unsigned long m_max, unsigned long l_max,
                         unsigned long l_min, L&& lhs, R&& rhs) {
    CheckResult res{name, grid_range(m_max, l_max), true, ""};
    for (unsigned long m = 0; m <= m_max; ++m) {
        for (unsigned long l = l_min; l <= l_max; ++l) {
            BigNat a = lhs(m, l);
            BigNat b = rhs(m, l);
            if (a != b) {
                res.pass = false;
                if (!res.detail.empty()) res.detail += "; ";
                res.detail += cell(m, l) + ": " + a.get_str() + " != " + b.get_str();
            }
        }
    }
    return res;
}

} // namespace detail

// Every applicable formula on the grid, checked pairwise. Failures are
// collected rather than aborting on the first mismatch.
inline VerifyReport verify_identities(unsigned long m_max, unsigned long l_max) {
    VerifyReport report;
    report.checks.push_back(detail::compare_grid(
        "r-recurrence-vs-stirling-first", m_max, l_max, 0, r_via_recurrence, r_via_stirling_first));
    report.checks.push_back(detail::compare_grid(
        "r-recurrence-vs-block-sum", m_max, l_max, 0, r_via_recurrence, r_via_blocks));
    report.checks.push_back(detail::compare_grid(
        "r-recurrence-vs-r-from-s", m_max, l_max, 1, r_via_recurrence, r_from_s));
    report.checks.push_back(detail::compare_grid(
        "s-block-sum-vs-inclusion-exclusion", m_max, l_max, 1, s_via_blocks,
        s_via_inclusion_exclusion));
    report.checks.push_back(detail::compare_grid(
        "s-block-sum-vs-first-blocks", m_max, l_max, 0, s_via_blocks, s_via_first_blocks));
    report.checks.push_back(detail::compare_grid(
        "empty-section-partition", m_max, l_max, 1,
        [](unsigned long m, unsigned long l) {
            BigNat sum = 0;
            for (unsigned long k = 0; k <= m; ++k)
                sum += count_k_empty_sections(m, l, k);
            return sum;
        },
        r_via_recurrence));

    // Triangle recurrences on the values the grid actually touched.
    {
        CheckResult res{"stirling-triangle-recurrences",
                        "n <= " + std::to_string(m_max + l_max + 2), true, ""};
        for (unsigned long n = 0; n <= m_max + l_max + 1; ++n) {
            for (unsigned long k = 0; k <= n; ++k) {
                if (stirling1_unsigned(n + 1, k + 1) !=
                    stirling1_unsigned(n, k) + BigNat(n) * stirling1_unsigned(n, k + 1)) {
                    res.pass = false;
                    res.detail += "c(" + std::to_string(n + 1) + "," + std::to_string(k + 1) + ") ";
                }
                if (k >= 1 && stirling2(n + 1, k) !=
                                  BigNat(k) * stirling2(n, k) + stirling2(n, k - 1)) {
                    res.pass = false;
                    res.detail += "{" + std::to_string(n + 1) + "," + std::to_string(k) + "} ";
                }
            }
        }
        report.checks.push_back(std::move(res));
    }
    return report;
}

} // namespace bpa
