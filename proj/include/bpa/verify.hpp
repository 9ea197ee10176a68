#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bpa/bignat.hpp"
#include "bpa/bijections.hpp"
#include "bpa/enumerate.hpp"
#include "bpa/exact.hpp"
#include "bpa/report.hpp"

// Whole-family sweeps: enumeration counts against the formulas, and
// exhaustive round trips of the two bijections. Shared by the verify
// subcommand and the test suites.

namespace bpa {

// Every f input over R(m,l): each bar choice crossed with each binary label.
inline std::vector<LabeledBPA> all_f_inputs(std::size_t m, std::size_t l) {
    std::vector<LabeledBPA> out;
    auto stream = enumerate_bpa(m, l);
    for (const auto& [text, x] : stream.items()) {
        for (std::size_t bar = 0; bar < m; ++bar)
            for (int b = 0; b <= 1; ++b)
                out.push_back(LabeledBPA::f_mode(x, bar, b));
    }
    return out;
}

// Every g input over R(m,l): binary labels in {0,1}^m, order labels over all
// permutations of [m].
inline std::vector<LabeledBPA> all_g_inputs(std::size_t m, std::size_t l) {
    std::vector<int> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = static_cast<int>(i) + 1;

    std::vector<LabeledBPA> out;
    auto stream = enumerate_bpa(m, l);
    for (const auto& [text, x] : stream.items()) {
        std::vector<int> p = perm;
        do {
            for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
                std::vector<BarLabel> labels(m);
                for (std::size_t i = 0; i < m; ++i) {
                    labels[i].order = p[i];
                    labels[i].binary = (mask >> i) & 1ul;
                }
                out.emplace_back(x, std::move(labels));
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

// All permutations of [n] in canonical cycle form, grouped by cycle count.
inline std::map<std::size_t, std::vector<CyclePermutation>> all_cycle_permutations(std::size_t n) {
    std::vector<int> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<int>(i) + 1;

    std::map<std::size_t, std::vector<CyclePermutation>> out;
    do {
        std::vector<std::vector<int>> cycles;
        std::vector<bool> seen(n + 1, false);
        for (std::size_t start = 1; start <= n; ++start) {
            if (seen[start]) continue;
            std::vector<int> cyc;
            std::size_t cur = start;
            while (!seen[cur]) {
                seen[cur] = true;
                cyc.push_back(static_cast<int>(cur));
                cur = static_cast<std::size_t>(image[cur - 1]);
            }
            cycles.push_back(std::move(cyc));
        }
        auto perm = CyclePermutation::canonical(std::move(cycles));
        out[perm.cycle_count()].push_back(std::move(perm));
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

// Enumeration counts vs the formulas, plus stream hygiene (no duplicates,
// parse/render identity).
inline VerifyReport verify_oracle(std::size_t m_max, std::size_t l_max) {
    VerifyReport report;
    const std::string range = detail::grid_range(m_max, l_max);

    CheckResult pa_count{"enumerate-pa-count-vs-ordered-bell", "0<=l<=" + std::to_string(l_max),
                         true, ""};
    for (std::size_t l = 0; l <= l_max; ++l) {
        if (BigNat(static_cast<unsigned long>(enumerate_pa(l).size())) != ordered_bell(l)) {
            pa_count.pass = false;
            pa_count.detail += "l=" + std::to_string(l) + " ";
        }
    }
    report.checks.push_back(std::move(pa_count));

    CheckResult bpa_count{"enumerate-bpa-count-vs-r", range, true, ""};
    CheckResult special_count{"enumerate-special-count-vs-s", range, true, ""};
    CheckResult roundtrip{"parse-render-identity", range, true, ""};
    for (std::size_t m = 0; m <= m_max; ++m) {
        for (std::size_t l = 0; l <= l_max; ++l) {
            auto stream = enumerate_bpa(m, l);
            if (BigNat(static_cast<unsigned long>(stream.size())) != r_via_recurrence(m, l)) {
                bpa_count.pass = false;
                bpa_count.detail += detail::cell(m, l) + " ";
            }
            auto special = enumerate_special(m, l);
            BigNat s_count(static_cast<unsigned long>(special.size()));
            if (s_count != s_via_blocks(m, l) || s_count != s_via_first_blocks(m, l) ||
                (l >= 1 && s_count != s_via_inclusion_exclusion(m, l))) {
                special_count.pass = false;
                special_count.detail += detail::cell(m, l) + " ";
            }
            for (const auto& [text, x] : stream.items()) {
                if (parse(text, l, m) != x) {
                    roundtrip.pass = false;
                    roundtrip.detail += text + " ";
                    break;
                }
            }
        }
    }
    report.checks.push_back(std::move(bpa_count));
    report.checks.push_back(std::move(special_count));
    report.checks.push_back(std::move(roundtrip));
    return report;
}

// Exhaustive f round trips with the image counts they must induce.
inline VerifyReport verify_bijection_f(std::size_t m_max, std::size_t l_max) {
    VerifyReport report;
    const std::string range = detail::grid_range(m_max, l_max);

    CheckResult f_round{"f-round-trip", range, true, ""};
    CheckResult f_counts{"f-image-partition", range, true, ""};
    CheckResult f_onto{"f-covers-codomain", range, true, ""};
    for (std::size_t m = 1; m <= m_max; ++m) {
        for (std::size_t l = 0; l <= l_max; ++l) {
            std::set<std::string> grown_seen;
            std::set<std::pair<std::string, std::size_t>> shrunk_seen;
            for (const auto& x : all_f_inputs(m, l)) {
                FOutput y = f_forward(x);
                if (!(f_inverse(y) == x)) {
                    f_round.pass = false;
                    f_round.detail += render_labeled(x) + " ";
                    continue;
                }
                if (y.is_grown())
                    grown_seen.insert(render_canonical(y.arrangement()));
                else
                    shrunk_seen.insert({render_canonical(y.arrangement()), y.position()});
            }
            const BigNat grown_want = r_via_recurrence(m - 1, l + 1);
            const BigNat shrunk_want = BigNat(static_cast<unsigned long>(m)) *
                                       r_via_recurrence(m - 1, l);
            if (BigNat(static_cast<unsigned long>(grown_seen.size())) != grown_want ||
                BigNat(static_cast<unsigned long>(shrunk_seen.size())) != shrunk_want) {
                f_counts.pass = false;
                f_counts.detail += detail::cell(m, l) + " ";
            }

            // Opposite direction: every codomain point maps back to itself.
            auto grown = enumerate_bpa(m - 1, l + 1);
            for (const auto& [text, y] : grown.items()) {
                if (!(f_forward(f_inverse(FOutput::grown(y))) == FOutput::grown(y))) {
                    f_onto.pass = false;
                    f_onto.detail += text + " ";
                }
            }
            auto shrunk = enumerate_bpa(m - 1, l);
            for (const auto& [text, z] : shrunk.items()) {
                for (std::size_t a = 0; a < m; ++a) {
                    FOutput y = FOutput::shrunk(z, a);
                    if (!(f_forward(f_inverse(y)) == y)) {
                        f_onto.pass = false;
                        f_onto.detail += text + "/" + std::to_string(a) + " ";
                    }
                }
            }
        }
    }
    report.checks.push_back(std::move(f_round));
    report.checks.push_back(std::move(f_counts));
    report.checks.push_back(std::move(f_onto));
    return report;
}

// Exhaustive g round trips, the cycle/size law, and the image counts
// stratified by cycle count.
inline VerifyReport verify_bijection_g(std::size_t m_max, std::size_t l_max) {
    VerifyReport report;
    const std::string range = detail::grid_range(m_max, l_max);

    CheckResult g_round{"g-round-trip", range, true, ""};
    CheckResult g_law{"g-cycle-size-law", range, true, ""};
    CheckResult g_counts{"g-image-stratification", range, true, ""};
    for (std::size_t m = 0; m <= m_max; ++m) {
        for (std::size_t l = 0; l <= l_max; ++l) {
            std::map<std::size_t, std::set<std::string>> images_by_cycles;
            for (const auto& x : all_g_inputs(m, l)) {
                auto [perm, pa] = g_forward(x);
                if (perm.cycle_count() - 1 != pa.element_count() - l) {
                    g_law.pass = false;
                    g_law.detail += render_labeled(x) + " ";
                }
                if (!(g_inverse(perm, pa) == x)) {
                    g_round.pass = false;
                    g_round.detail += render_labeled(x) + " ";
                    continue;
                }
                images_by_cycles[perm.cycle_count()].insert(perm.to_string() + "/" +
                                                            render_canonical(pa));
            }
            for (std::size_t i = 0; i <= m; ++i) {
                const BigNat want = stirling1_unsigned(m + 1, i + 1) * ordered_bell(l + i);
                const auto it = images_by_cycles.find(i + 1);
                const std::size_t got = it == images_by_cycles.end() ? 0 : it->second.size();
                if (BigNat(static_cast<unsigned long>(got)) != want) {
                    g_counts.pass = false;
                    g_counts.detail += detail::cell(m, l) + "/i=" + std::to_string(i) + " ";
                }
            }
        }
    }
    report.checks.push_back(std::move(g_round));
    report.checks.push_back(std::move(g_law));
    report.checks.push_back(std::move(g_counts));
    return report;
}

inline VerifyReport verify_bijections(std::size_t m_max, std::size_t l_max) {
    VerifyReport report = verify_bijection_f(m_max, l_max);
    report.merge(verify_bijection_g(m_max, l_max));
    return report;
}

} // namespace bpa
