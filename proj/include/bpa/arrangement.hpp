#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bpa/errors.hpp"

namespace bpa {

// Ordered set partition: blocks listed in rank order, each block a set of
// positive integers kept sorted ascending. A standalone arrangement covers
// {1..l}; as a section of a barred arrangement it covers an arbitrary subset.
class PreferentialArrangement {
public:
    PreferentialArrangement() = default;

    static PreferentialArrangement from_blocks(std::vector<std::vector<int>> blocks) {
        PreferentialArrangement pa;
        for (auto& b : blocks) {
            if (b.empty())
                throw std::invalid_argument("PreferentialArrangement: empty block");
            std::sort(b.begin(), b.end());
            for (std::size_t i = 0; i < b.size(); ++i) {
                if (b[i] <= 0)
                    throw std::invalid_argument("PreferentialArrangement: element must be positive");
                if (i > 0 && b[i] == b[i - 1])
                    throw std::invalid_argument("PreferentialArrangement: duplicate element");
            }
        }
        pa.blocks_ = std::move(blocks);
        pa.check_disjoint();
        return pa;
    }

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }

    std::size_t element_count() const {
        std::size_t n = 0;
        for (const auto& b : blocks_) n += b.size();
        return n;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    // True when the arrangement covers exactly {1..l}.
    bool covers_prefix(std::size_t l) const {
        auto e = elements();
        if (e.size() != l) return false;
        for (std::size_t i = 0; i < l; ++i)
            if (e[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    bool operator==(const PreferentialArrangement&) const = default;

private:
    void check_disjoint() const {
        std::set<int> seen;
        for (const auto& b : blocks_)
            for (int x : b)
                if (!seen.insert(x).second)
                    throw std::invalid_argument("PreferentialArrangement: duplicate element");
    }

    std::vector<std::vector<int>> blocks_;
};

// A preferential arrangement of {1..l} cut by m bars into m+1 sections.
// Storing the sections directly makes "no bar splits a block" structural.
class BarredPA {
public:
    BarredPA() : sections_(1) {}

    static BarredPA make(std::vector<PreferentialArrangement> sections) {
        if (sections.empty())
            throw std::invalid_argument("BarredPA: needs at least one section");
        BarredPA x;
        x.sections_ = std::move(sections);
        std::vector<int> all;
        for (const auto& s : x.sections_) {
            auto e = s.elements();
            all.insert(all.end(), e.begin(), e.end());
        }
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (i > 0 && all[i] == all[i - 1])
                throw std::invalid_argument("BarredPA: duplicate element across sections");
            if (all[i] != static_cast<int>(i) + 1)
                throw std::invalid_argument("BarredPA: elements must form {1..l}");
        }
        return x;
    }

    static BarredPA whole(PreferentialArrangement pa) {
        return make({std::move(pa)});
    }

    const std::vector<PreferentialArrangement>& sections() const { return sections_; }
    std::size_t bar_count() const { return sections_.size() - 1; }

    std::size_t element_count() const {
        std::size_t n = 0;
        for (const auto& s : sections_) n += s.element_count();
        return n;
    }

    bool all_sections_nonempty() const {
        for (const auto& s : sections_)
            if (s.empty()) return false;
        return true;
    }

    bool operator==(const BarredPA&) const = default;

private:
    std::vector<PreferentialArrangement> sections_;
};

struct ArrangementText {
    std::string canonical;
    // Digit-adjacent form, present when every element is a single digit.
    std::optional<std::string> compact;
};

namespace detail {

inline std::string render_block(const std::vector<int>& block) {
    std::string out;
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(block[i]);
    }
    return out;
}

inline std::string render_section(const PreferentialArrangement& pa) {
    std::string out;
    for (std::size_t i = 0; i < pa.blocks().size(); ++i) {
        if (i > 0) out += ',';
        out += render_block(pa.blocks()[i]);
    }
    return out;
}

} // namespace detail

// Canonical text: elements of a block ascending and space-separated, blocks
// joined by ",", sections joined by "|". An empty section is the empty
// string between bars.
inline std::string render_canonical(const BarredPA& x) {
    std::string out;
    for (std::size_t i = 0; i < x.sections().size(); ++i) {
        if (i > 0) out += '|';
        out += detail::render_section(x.sections()[i]);
    }
    return out;
}

inline std::string render_canonical(const PreferentialArrangement& pa) {
    return detail::render_section(pa);
}

inline ArrangementText render(const BarredPA& x) {
    ArrangementText t;
    t.canonical = render_canonical(x);
    bool single_digit = true;
    for (const auto& s : x.sections())
        for (const auto& b : s.blocks())
            for (int e : b)
                if (e > 9) single_digit = false;
    if (single_digit) {
        std::string c = t.canonical;
        c.erase(std::remove(c.begin(), c.end(), ' '), c.end());
        t.compact = std::move(c);
    }
    return t;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(' ');
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(' ');
    return s.substr(a, b - a + 1);
}

// One block token -> elements. Space-separated numbers are always accepted;
// an unspaced multi-digit token reads as adjacent single digits when the
// ground set allows the compact form (l <= 9), as one number otherwise.
inline std::vector<int> parse_block_token(const std::string& raw, std::size_t l) {
    std::string tok = strip(raw);
    if (tok.empty())
        throw parse_error(parse_error_kind::malformed, "empty block");
    std::vector<int> elems;
    if (tok.find(' ') != std::string::npos) {
        for (const auto& piece : split(tok, ' ')) {
            if (piece.empty()) continue;
            for (char c : piece)
                if (c < '0' || c > '9')
                    throw parse_error(parse_error_kind::malformed,
                                      "unexpected character '" + std::string(1, c) + "'");
            elems.push_back(std::stoi(piece));
        }
    } else {
        for (char c : tok)
            if (c < '0' || c > '9')
                throw parse_error(parse_error_kind::malformed,
                                  "unexpected character '" + std::string(1, c) + "'");
        if (tok.size() > 1 && l <= 9) {
            for (char c : tok) elems.push_back(c - '0');
        } else {
            elems.push_back(std::stoi(tok));
        }
    }
    return elems;
}

} // namespace detail

// Inverse of render: accepts canonical or compact text and validates the
// arrangement invariants against the claimed l and m.
inline BarredPA parse(const std::string& text, std::size_t l, std::size_t m) {
    auto section_texts = detail::split(text, '|');
    if (section_texts.size() != m + 1)
        throw parse_error(parse_error_kind::bar_count,
                          "expected " + std::to_string(m) + " bars, found " +
                              std::to_string(section_texts.size() - 1));

    std::set<int> seen;
    std::vector<PreferentialArrangement> sections;
    for (const auto& sec_text : section_texts) {
        std::vector<std::vector<int>> blocks;
        if (!detail::strip(sec_text).empty()) {
            for (const auto& block_tok : detail::split(sec_text, ',')) {
                auto elems = detail::parse_block_token(block_tok, l);
                for (int e : elems) {
                    if (e < 1 || e > static_cast<int>(l))
                        throw parse_error(parse_error_kind::out_of_range,
                                          "element " + std::to_string(e) + " outside 1.." +
                                              std::to_string(l));
                    if (!seen.insert(e).second)
                        throw parse_error(parse_error_kind::duplicate_element,
                                          "element " + std::to_string(e) + " repeated");
                }
                blocks.push_back(std::move(elems));
            }
        }
        sections.push_back(PreferentialArrangement::from_blocks(std::move(blocks)));
    }
    if (seen.size() != l)
        throw parse_error(parse_error_kind::missing_element,
                          "arrangement covers " + std::to_string(seen.size()) +
                              " of " + std::to_string(l) + " elements");
    return BarredPA::make(std::move(sections));
}

} // namespace bpa
