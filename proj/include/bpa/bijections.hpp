#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bpa/arrangement.hpp"
#include "bpa/errors.hpp"

// Executable forms of the two counting bijections:
//   f: one bar carries a binary label; the arrangement either grows by one
//      element or loses the bar and remembers its position.
//   g: every bar carries a binary label and a distinct order label; iterating
//      the f-step over the bars produces a plain arrangement plus a
//      permutation recorded as cycles.

namespace bpa {

struct BarLabel {
    std::optional<int> order;  // 1..m, distinct across bars
    std::optional<int> binary; // 0 or 1
    bool operator==(const BarLabel&) const = default;
};

class LabeledBPA {
public:
    LabeledBPA(BarredPA base, std::vector<BarLabel> labels)
        : base_(std::move(base)), labels_(std::move(labels)) {
        if (labels_.size() != base_.bar_count())
            throw std::invalid_argument("LabeledBPA: one label record per bar");
        for (const auto& lb : labels_)
            if (lb.binary && *lb.binary != 0 && *lb.binary != 1)
                throw std::invalid_argument("LabeledBPA: binary label must be 0 or 1");
    }

    // f-mode: a single bar carries a binary label, order labels unused.
    static LabeledBPA f_mode(BarredPA base, std::size_t bar_index, int binary) {
        std::vector<BarLabel> labels(base.bar_count());
        if (bar_index >= labels.size())
            throw std::invalid_argument("LabeledBPA: bar index out of range");
        labels[bar_index].binary = binary;
        return LabeledBPA(std::move(base), std::move(labels));
    }

    const BarredPA& base() const { return base_; }
    const std::vector<BarLabel>& labels() const { return labels_; }
    std::size_t bar_count() const { return base_.bar_count(); }
    std::size_t element_count() const { return base_.element_count(); }

    // Index of the unique binary-labeled bar; rejects anything else.
    std::size_t f_mode_bar() const {
        std::optional<std::size_t> found;
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].order)
                throw std::invalid_argument("f expects no order labels");
            if (labels_[i].binary) {
                if (found)
                    throw std::invalid_argument("f expects exactly one labeled bar, found several");
                found = i;
            }
        }
        if (!found)
            throw std::invalid_argument("f expects exactly one labeled bar, found none");
        return *found;
    }

    // Order labels must form a permutation of 1..m and every bar needs a
    // binary label.
    void check_g_mode() const {
        const std::size_t m = labels_.size();
        std::vector<bool> used(m + 1, false);
        for (const auto& lb : labels_) {
            if (!lb.binary || !lb.order)
                throw std::invalid_argument("g expects binary and order labels on every bar");
            if (*lb.order < 1 || *lb.order > static_cast<int>(m) || used[*lb.order])
                throw std::invalid_argument("g expects order labels forming a permutation of 1..m");
            used[*lb.order] = true;
        }
    }

    bool operator==(const LabeledBPA&) const = default;

private:
    BarredPA base_;
    std::vector<BarLabel> labels_;
};

// Permutation stored as cycles; canonical form writes each cycle with its
// maximum first and lists cycles by decreasing maxima.
struct CyclePermutation {
    std::vector<std::vector<int>> cycles;

    static CyclePermutation canonical(std::vector<std::vector<int>> raw) {
        std::set<int> seen;
        int top = 0;
        for (auto& cyc : raw) {
            if (cyc.empty())
                throw std::invalid_argument("CyclePermutation: empty cycle");
            auto max_it = std::max_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), max_it, cyc.end());
            for (int x : cyc) {
                if (x < 1 || !seen.insert(x).second)
                    throw std::invalid_argument("CyclePermutation: entries must be distinct positives");
                top = std::max(top, x);
            }
        }
        if (static_cast<int>(seen.size()) != top)
            throw std::invalid_argument("CyclePermutation: cycles must cover 1..n");
        std::sort(raw.begin(), raw.end(),
                  [](const auto& a, const auto& b) { return a.front() > b.front(); });
        CyclePermutation p;
        p.cycles = std::move(raw);
        return p;
    }

    std::size_t degree() const {
        std::size_t n = 0;
        for (const auto& c : cycles) n += c.size();
        return n;
    }

    std::size_t cycle_count() const { return cycles.size(); }

    // "(5)(412)(3)" when every entry is a single digit, space-separated
    // entries otherwise.
    std::string to_string() const {
        bool compact = true;
        for (const auto& c : cycles)
            for (int x : c)
                if (x > 9) compact = false;
        std::string out;
        for (const auto& c : cycles) {
            out += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i > 0 && !compact) out += ' ';
                out += std::to_string(c[i]);
            }
            out += ')';
        }
        return out;
    }

    static CyclePermutation parse(const std::string& text) {
        std::vector<std::vector<int>> raw;
        std::size_t i = 0;
        while (i < text.size()) {
            if (text[i] == ' ') { ++i; continue; }
            if (text[i] != '(')
                throw parse_error(parse_error_kind::malformed, "expected '('");
            std::size_t close = text.find(')', i);
            if (close == std::string::npos)
                throw parse_error(parse_error_kind::malformed, "unterminated cycle");
            std::string body = text.substr(i + 1, close - i - 1);
            std::vector<int> cyc;
            if (body.find(' ') != std::string::npos) {
                for (const auto& tok : detail::split(body, ' '))
                    if (!tok.empty()) cyc.push_back(std::stoi(tok));
            } else {
                for (char c : body) {
                    if (c < '0' || c > '9')
                        throw parse_error(parse_error_kind::malformed, "bad cycle entry");
                    cyc.push_back(c - '0');
                }
            }
            if (cyc.empty())
                throw parse_error(parse_error_kind::malformed, "empty cycle");
            raw.push_back(std::move(cyc));
            i = close + 1;
        }
        return canonical(std::move(raw));
    }

    bool operator==(const CyclePermutation&) const = default;
};

// Codomain of f: either an arrangement that grew by one element and lost a
// bar, or one that only lost a bar plus the position it was removed from.
class FOutput {
public:
    static FOutput grown(BarredPA a) {
        FOutput y;
        y.v_ = std::move(a);
        return y;
    }
    static FOutput shrunk(BarredPA a, std::size_t position) {
        if (position > a.bar_count())
            throw std::invalid_argument("FOutput: position exceeds bar count");
        FOutput y;
        y.v_ = std::make_pair(std::move(a), position);
        return y;
    }

    bool is_grown() const { return std::holds_alternative<BarredPA>(v_); }
    const BarredPA& arrangement() const {
        if (is_grown()) return std::get<BarredPA>(v_);
        return std::get<std::pair<BarredPA, std::size_t>>(v_).first;
    }
    std::size_t position() const {
        return std::get<std::pair<BarredPA, std::size_t>>(v_).second;
    }

    bool operator==(const FOutput&) const = default;

private:
    std::variant<BarredPA, std::pair<BarredPA, std::size_t>> v_;
};

namespace detail {

// Left-to-right sequence of blocks and bars; the working form for both maps.
struct SeqItem {
    bool is_bar = false;
    std::vector<int> block; // !is_bar
    BarLabel label;         // is_bar
    std::vector<int> cycle; // is_bar, g bookkeeping
};

inline std::vector<SeqItem> to_items(const BarredPA& x, const std::vector<BarLabel>& labels) {
    std::vector<SeqItem> items;
    for (std::size_t s = 0; s < x.sections().size(); ++s) {
        if (s > 0) {
            SeqItem bar;
            bar.is_bar = true;
            bar.label = labels[s - 1];
            items.push_back(std::move(bar));
        }
        for (const auto& b : x.sections()[s].blocks()) {
            SeqItem blk;
            blk.block = b;
            items.push_back(std::move(blk));
        }
    }
    return items;
}

inline LabeledBPA from_items(const std::vector<SeqItem>& items) {
    std::vector<PreferentialArrangement> sections;
    std::vector<BarLabel> labels;
    std::vector<std::vector<int>> blocks;
    for (const auto& it : items) {
        if (it.is_bar) {
            sections.push_back(PreferentialArrangement::from_blocks(std::move(blocks)));
            blocks.clear();
            labels.push_back(it.label);
        } else {
            blocks.push_back(it.block);
        }
    }
    sections.push_back(PreferentialArrangement::from_blocks(std::move(blocks)));
    return LabeledBPA(BarredPA::make(std::move(sections)), std::move(labels));
}

} // namespace detail

// One application of the labeled-bar rule. The labeled bar either becomes
// the new element l+1 in its own block (label 0), feeds l+1 into the block
// directly to its left (label 1 with such a block), or disappears and
// reports how many bars preceded it (label 1 without one).
inline FOutput f_forward(const LabeledBPA& x) {
    const std::size_t bar_index = x.f_mode_bar();
    const int next = static_cast<int>(x.element_count()) + 1;
    auto items = detail::to_items(x.base(), x.labels());

    std::size_t pos = 0, bars_seen = 0;
    for (; pos < items.size(); ++pos) {
        if (!items[pos].is_bar) continue;
        if (bars_seen == bar_index) break;
        ++bars_seen;
    }

    const int binary = *items[pos].label.binary;
    if (binary == 0) {
        items[pos] = detail::SeqItem{false, {next}, {}, {}};
    } else if (pos > 0 && !items[pos - 1].is_bar) {
        items[pos - 1].block.push_back(next);
        items.erase(items.begin() + pos);
    } else {
        items.erase(items.begin() + pos);
        return FOutput::shrunk(detail::from_items(items).base(), bar_index);
    }
    return FOutput::grown(detail::from_items(items).base());
}

// Reconstruct the unique labeled arrangement f maps to y. In the grown
// branch the added element's block determines the bar and its label; in the
// shrunk branch a 1-labeled bar is reinserted at the recorded position.
inline LabeledBPA f_inverse(const FOutput& y) {
    if (y.is_grown()) {
        const BarredPA& a = y.arrangement();
        const int added = static_cast<int>(a.element_count());
        auto items = detail::to_items(a, std::vector<BarLabel>(a.bar_count()));

        std::size_t pos = items.size();
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (!items[i].is_bar &&
                std::find(items[i].block.begin(), items[i].block.end(), added) !=
                    items[i].block.end()) {
                pos = i;
                break;
            }
        }
        if (pos == items.size())
            throw std::invalid_argument("f_inverse: arrangement lacks the added element");

        detail::SeqItem bar;
        bar.is_bar = true;
        if (items[pos].block.size() == 1) {
            bar.label.binary = 0;
            items[pos] = std::move(bar);
        } else {
            auto& blk = items[pos].block;
            blk.erase(std::find(blk.begin(), blk.end(), added));
            bar.label.binary = 1;
            items.insert(items.begin() + pos + 1, std::move(bar));
        }
        return detail::from_items(items);
    }

    const BarredPA& z = y.arrangement();
    const std::size_t a = y.position();
    auto items = detail::to_items(z, std::vector<BarLabel>(z.bar_count()));

    // Insertion point: the very front for a = 0, directly right of the a-th
    // bar otherwise.
    std::size_t insert_at = 0;
    if (a > 0) {
        std::size_t bars_seen = 0;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].is_bar && ++bars_seen == a) {
                insert_at = i + 1;
                break;
            }
        }
        if (insert_at == 0)
            throw std::invalid_argument("f_inverse: position exceeds bar count");
    }
    detail::SeqItem bar;
    bar.is_bar = true;
    bar.label.binary = 1;
    items.insert(items.begin() + insert_at, std::move(bar));
    return detail::from_items(items);
}

// Iterated map: processes bars in increasing order label, growing cycle
// labels as bars merge and closing a cycle whenever a bar turns into a new
// element. An extra bar with order label m+1 anchors the left end; its cycle
// closes last. The result sizes are tied: the arrangement has l+i elements
// exactly when the permutation has i+1 cycles.
inline std::pair<CyclePermutation, PreferentialArrangement> g_forward(const LabeledBPA& x) {
    x.check_g_mode();
    const std::size_t m = x.bar_count();
    auto items = detail::to_items(x.base(), x.labels());

    detail::SeqItem extra;
    extra.is_bar = true;
    extra.label.order = static_cast<int>(m) + 1;
    items.insert(items.begin(), std::move(extra));
    for (auto& it : items)
        if (it.is_bar) it.cycle = {*it.label.order};

    int next = static_cast<int>(x.element_count()) + 1;
    std::vector<std::vector<int>> closed;

    for (int order = 1; order <= static_cast<int>(m); ++order) {
        std::size_t pos = items.size();
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (items[i].is_bar && *items[i].label.order == order) {
                pos = i;
                break;
            }
        }
        if (*items[pos].label.binary == 0) {
            closed.push_back(std::move(items[pos].cycle));
            items[pos] = detail::SeqItem{false, {next++}, {}, {}};
        } else if (!items[pos - 1].is_bar) {
            // pos > 0 always: the extra bar holds the left end.
            closed.push_back(std::move(items[pos].cycle));
            items[pos - 1].block.push_back(next++);
            items.erase(items.begin() + pos);
        } else {
            auto& left = items[pos - 1].cycle;
            left.insert(left.end(), items[pos].cycle.begin(), items[pos].cycle.end());
            items.erase(items.begin() + pos);
        }
    }

    // Only the extra bar remains; its cycle closes last.
    if (!items.front().is_bar)
        throw internal_error("g_forward: extra bar displaced from the left end");
    closed.push_back(std::move(items.front().cycle));
    items.erase(items.begin());

    std::vector<std::vector<int>> blocks;
    for (auto& it : items) {
        if (it.is_bar)
            throw internal_error("g_forward: unprocessed bar remains");
        blocks.push_back(std::move(it.block));
    }
    auto pa = PreferentialArrangement::from_blocks(std::move(blocks));
    if (!pa.covers_prefix(x.element_count() + (closed.size() - 1)))
        throw internal_error("g_forward: result does not cover its ground set");
    return {CyclePermutation::canonical(std::move(closed)), std::move(pa)};
}

// Inverse of g. Each cycle is a run of adjacent bars: the cycle's maximum is
// the bar that became an added element, the rest were swallowed right to
// left. Cycles pair with the added elements by increasing maxima; the cycle
// holding m+1 pins the left end. Runs sharing one block stand in increasing
// order of their maxima.
inline LabeledBPA g_inverse(const CyclePermutation& y, const PreferentialArrangement& z) {
    const std::size_t degree = y.degree();
    if (degree < 1)
        throw std::invalid_argument("g_inverse: empty permutation");
    const std::size_t m = degree - 1;
    const std::size_t added_count = y.cycle_count() - 1;
    const std::size_t n = z.element_count();
    if (n < added_count)
        throw std::invalid_argument("g_inverse: arrangement is smaller than the cycle count allows");
    const std::size_t l = n - added_count;
    if (!z.covers_prefix(n))
        throw std::invalid_argument("g_inverse: arrangement must cover {1..n}");

    const int extra_label = static_cast<int>(degree);
    const std::vector<int>* extra_cycle = nullptr;
    std::vector<const std::vector<int>*> rest;
    for (const auto& cyc : y.cycles) {
        if (std::find(cyc.begin(), cyc.end(), extra_label) != cyc.end())
            extra_cycle = &cyc;
        else
            rest.push_back(&cyc);
    }
    if (extra_cycle->front() != extra_label)
        throw std::invalid_argument("g_inverse: the extra bar's label must head its cycle");

    // Added elements l+1 < ... < n pair with the remaining cycles by
    // increasing maxima.
    std::sort(rest.begin(), rest.end(),
              [](const auto* a, const auto* b) { return a->front() < b->front(); });
    std::vector<const std::vector<int>*> cycle_of_added(n + 1, nullptr);
    for (std::size_t j = 0; j < rest.size(); ++j)
        cycle_of_added[l + 1 + j] = rest[j];

    std::vector<detail::SeqItem> items;
    auto push_run = [&items](const std::vector<int>& cyc, std::size_t from, int first_binary) {
        for (std::size_t i = from; i < cyc.size(); ++i) {
            detail::SeqItem bar;
            bar.is_bar = true;
            bar.label.order = cyc[i];
            bar.label.binary = (i == from) ? first_binary : 1;
            items.push_back(std::move(bar));
        }
    };

    // Left-end run: the extra bar itself is dropped, its tail stays.
    push_run(*extra_cycle, 1, 1);

    for (const auto& block : z.blocks()) {
        std::vector<int> kept;
        std::vector<int> added;
        for (int e : block)
            (e <= static_cast<int>(l) ? kept : added).push_back(e);
        const bool kept_empty = kept.empty();
        if (!kept_empty) {
            detail::SeqItem blk;
            blk.block = std::move(kept);
            items.push_back(std::move(blk));
        }
        for (std::size_t j = 0; j < added.size(); ++j) {
            // With nothing kept, the smallest added element sat in its own
            // block, so its run starts with binary label 0.
            const int first_binary = (kept_empty && j == 0) ? 0 : 1;
            push_run(*cycle_of_added[added[j]], 0, first_binary);
        }
    }

    auto result = detail::from_items(items);
    if (result.bar_count() != m)
        throw internal_error("g_inverse: reconstructed bar count mismatch");
    return result;
}

// Debug text for labeled arrangements: each bar renders as "|^b_o" with its
// binary label b and order label o (either suffix may be absent), sections
// as canonical text, single spaces as separators.
inline std::string render_labeled(const LabeledBPA& x) {
    std::string out;
    const auto& sections = x.base().sections();
    for (std::size_t s = 0; s < sections.size(); ++s) {
        if (s > 0) {
            const auto& lb = x.labels()[s - 1];
            if (!out.empty() && out.back() != ' ') out += ' ';
            out += '|';
            if (lb.binary) out += "^" + std::to_string(*lb.binary);
            if (lb.order) out += "_" + std::to_string(*lb.order);
            out += ' ';
        }
        std::string sec = detail::render_section(sections[s]);
        if (!sec.empty()) {
            out += sec;
            out += ' ';
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

inline LabeledBPA parse_labeled(const std::string& text, std::size_t l, std::size_t m) {
    std::vector<std::string> section_texts{""};
    std::vector<BarLabel> labels;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '|') {
            section_texts.back() += text[i];
            ++i;
            continue;
        }
        ++i;
        BarLabel lb;
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i >= text.size() || (text[i] != '0' && text[i] != '1'))
                throw parse_error(parse_error_kind::malformed, "binary label must be 0 or 1");
            lb.binary = text[i] - '0';
            ++i;
        }
        if (i < text.size() && text[i] == '_') {
            ++i;
            std::string digits;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits += text[i++];
            if (digits.empty())
                throw parse_error(parse_error_kind::malformed, "order label missing digits");
            lb.order = std::stoi(digits);
        }
        labels.push_back(lb);
        section_texts.emplace_back();
    }
    if (labels.size() != m)
        throw parse_error(parse_error_kind::bar_count,
                          "expected " + std::to_string(m) + " bars, found " +
                              std::to_string(labels.size()));
    std::string plain;
    for (std::size_t s = 0; s < section_texts.size(); ++s) {
        if (s > 0) plain += '|';
        plain += detail::strip(section_texts[s]);
    }
    return LabeledBPA(parse(plain, l, m), std::move(labels));
}

} // namespace bpa
