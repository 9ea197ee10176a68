#pragma once

#include <map>
#include <optional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "bpa/bignat.hpp"
#include "bpa/errors.hpp"

namespace bpa {

enum class SeqKind { r, s };

inline char seq_kind_letter(SeqKind k) { return k == SeqKind::r ? 'r' : 's'; }

// Memo for computed sequence values, keyed by (kind, m, l). Each entry
// remembers which formula produced it; a second write to the same cell must
// agree with the first, so every cache hit doubles as a consistency check.
// Concurrent readers are fine; writes are serialized.
class SequenceTable {
public:
    struct Entry {
        BigNat value;
        std::string method;
    };

    void insert(SeqKind kind, unsigned long m, unsigned long l, const BigNat& value,
                const std::string& method) {
        std::unique_lock lock(mu_);
        auto key = std::make_tuple(seq_kind_letter(kind), m, l);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            entries_.emplace(key, Entry{value, method});
            return;
        }
        if (it->second.value != value) {
            throw internal_error(
                std::string("SequenceTable: ") + seq_kind_letter(kind) + "(" +
                std::to_string(m) + "," + std::to_string(l) + ") disagrees: " +
                it->second.method + " gave " + it->second.value.get_str() + ", " + method +
                " gave " + value.get_str());
        }
        // Same value from a second method: keep the first tag, note the rest.
        it->second.method += "+" + method;
    }

    std::optional<BigNat> lookup(SeqKind kind, unsigned long m, unsigned long l) const {
        std::shared_lock lock(mu_);
        auto it = entries_.find(std::make_tuple(seq_kind_letter(kind), m, l));
        if (it == entries_.end()) return std::nullopt;
        return it->second.value;
    }

    std::optional<std::string> method_of(SeqKind kind, unsigned long m, unsigned long l) const {
        std::shared_lock lock(mu_);
        auto it = entries_.find(std::make_tuple(seq_kind_letter(kind), m, l));
        if (it == entries_.end()) return std::nullopt;
        return it->second.method;
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return entries_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::map<std::tuple<char, unsigned long, unsigned long>, Entry> entries_;
};

} // namespace bpa
