#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bpa/arrangement.hpp"
#include "bpa/errors.hpp"

// Explicit construction of every arrangement in a family. These enumerators
// are the brute-force oracle the counting formulas are tested against, so
// they use nothing from the exact-core module.

namespace bpa {

// Yields items one at a time in lexicographic order of the canonical
// rendering. The order guarantee requires generating the full family up
// front; consumers can still stop after any prefix.
template <typename T>
class ArrangementStream {
public:
    explicit ArrangementStream(std::vector<std::pair<std::string, T>> items)
        : items_(std::move(items)) {
        std::sort(items_.begin(), items_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < items_.size(); ++i)
            if (items_[i].first == items_[i - 1].first)
                throw internal_error("enumerator produced a duplicate: " + items_[i].first);
    }

    std::optional<T> next() {
        if (pos_ >= items_.size()) return std::nullopt;
        return items_[pos_++].second;
    }

    std::optional<std::string> next_text() {
        if (pos_ >= items_.size()) return std::nullopt;
        return items_[pos_++].first;
    }

    bool done() const { return pos_ >= items_.size(); }
    std::size_t size() const { return items_.size(); }

    // Rendering/value pairs in stream order, for whole-family sweeps.
    const std::vector<std::pair<std::string, T>>& items() const { return items_; }

private:
    std::vector<std::pair<std::string, T>> items_;
    std::size_t pos_ = 0;
};

namespace detail {

// All ordered set partitions of `elems` (sorted ascending); the first block
// ranges over every nonempty subset, the rest recurses.
inline void for_each_pa(const std::vector<int>& elems,
                        std::vector<std::vector<int>>& prefix,
                        const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (elems.empty()) {
        emit(prefix);
        return;
    }
    const std::size_t n = elems.size();
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<int> block, rest;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ul << i))
                block.push_back(elems[i]);
            else
                rest.push_back(elems[i]);
        }
        prefix.push_back(std::move(block));
        for_each_pa(rest, prefix, emit);
        prefix.pop_back();
    }
}

inline std::vector<PreferentialArrangement> all_pa_of(const std::vector<int>& elems) {
    std::vector<PreferentialArrangement> out;
    std::vector<std::vector<int>> prefix;
    for_each_pa(elems, prefix, [&](const std::vector<std::vector<int>>& blocks) {
        out.push_back(PreferentialArrangement::from_blocks(blocks));
    });
    return out;
}

// Distribute `elems` over m+1 sections: section 0 takes any subset (or any
// nonempty subset when `special`), arranged every possible way; recurse on
// the rest.
inline void for_each_bpa(std::size_t m, const std::vector<int>& elems, bool special,
                         std::vector<PreferentialArrangement>& prefix,
                         const std::function<void(const std::vector<PreferentialArrangement>&)>& emit) {
    if (m == 0) {
        if (special && elems.empty()) return;
        for (auto& pa : all_pa_of(elems)) {
            prefix.push_back(std::move(pa));
            emit(prefix);
            prefix.pop_back();
        }
        return;
    }
    const std::size_t n = elems.size();
    const unsigned long first = special ? 1 : 0;
    for (unsigned long mask = first; mask < (1ul << n); ++mask) {
        std::vector<int> here, rest;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ul << i))
                here.push_back(elems[i]);
            else
                rest.push_back(elems[i]);
        }
        for (auto& pa : all_pa_of(here)) {
            prefix.push_back(std::move(pa));
            for_each_bpa(m - 1, rest, special, prefix, emit);
            prefix.pop_back();
        }
    }
}

inline std::vector<int> ground_set(std::size_t l) {
    std::vector<int> elems(l);
    for (std::size_t i = 0; i < l; ++i) elems[i] = static_cast<int>(i) + 1;
    return elems;
}

} // namespace detail

inline ArrangementStream<PreferentialArrangement> enumerate_pa(std::size_t l) {
    std::vector<std::pair<std::string, PreferentialArrangement>> items;
    for (auto& pa : detail::all_pa_of(detail::ground_set(l)))
        items.emplace_back(render_canonical(pa), std::move(pa));
    return ArrangementStream<PreferentialArrangement>(std::move(items));
}

inline ArrangementStream<BarredPA> enumerate_bpa(std::size_t m, std::size_t l) {
    std::vector<std::pair<std::string, BarredPA>> items;
    std::vector<PreferentialArrangement> prefix;
    detail::for_each_bpa(m, detail::ground_set(l), false, prefix,
                         [&](const std::vector<PreferentialArrangement>& sections) {
                             BarredPA x = BarredPA::make(sections);
                             items.emplace_back(render_canonical(x), std::move(x));
                         });
    return ArrangementStream<BarredPA>(std::move(items));
}

// Only the arrangements whose m+1 sections are all nonempty.
inline ArrangementStream<BarredPA> enumerate_special(std::size_t m, std::size_t l) {
    std::vector<std::pair<std::string, BarredPA>> items;
    std::vector<PreferentialArrangement> prefix;
    detail::for_each_bpa(m, detail::ground_set(l), true, prefix,
                         [&](const std::vector<PreferentialArrangement>& sections) {
                             BarredPA x = BarredPA::make(sections);
                             items.emplace_back(render_canonical(x), std::move(x));
                         });
    return ArrangementStream<BarredPA>(std::move(items));
}

} // namespace bpa
