#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

#include "bpa/bignat.hpp"
#include "bpa/errors.hpp"
#include "bpa/exact.hpp"
#include "bpa/sequence_table.hpp"

namespace bpa {

// Flat-file value cache: a version line followed by "kind m l value" rows in
// decimal. Loading revalidates every entry against one formula, so a stale
// or corrupted file can never feed wrong values back.
class CacheFile {
public:
    static constexpr int format_version = 1;

    static CacheFile load(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cache: cannot open " + path);
        CacheFile cache;
        std::string header;
        std::getline(in, header);
        if (header != "bpa-cache " + std::to_string(format_version))
            throw std::runtime_error("cache: unrecognized header in " + path);
        std::string line;
        std::size_t line_no = 1;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            std::istringstream fields(line);
            std::string kind, value;
            unsigned long m = 0, l = 0;
            if (!(fields >> kind >> m >> l >> value) || (kind != "r" && kind != "s"))
                throw std::runtime_error("cache: bad entry at " + path + ":" +
                                         std::to_string(line_no));
            const SeqKind k = kind == "r" ? SeqKind::r : SeqKind::s;
            BigNat parsed;
            if (parsed.set_str(value, 10) != 0 || parsed < 0)
                throw std::runtime_error("cache: bad value at " + path + ":" +
                                         std::to_string(line_no));
            auto key = std::make_tuple(kind[0], m, l);
            if (cache.entries_.count(key))
                throw std::runtime_error("cache: duplicate key at " + path + ":" +
                                         std::to_string(line_no));
            const BigNat expect = k == SeqKind::r ? r_via_recurrence(m, l) : s_via_blocks(m, l);
            if (parsed != expect)
                throw internal_error("cache: " + kind + "(" + std::to_string(m) + "," +
                                     std::to_string(l) + ") stored " + parsed.get_str() +
                                     " but recomputes to " + expect.get_str());
            cache.entries_.emplace(key, std::move(parsed));
        }
        return cache;
    }

    void save(const std::string& path) const {
        std::ofstream out(path, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cache: cannot write " + path);
        out << "bpa-cache " << format_version << "\n";
        for (const auto& [key, value] : entries_) {
            out << std::get<0>(key) << " " << std::get<1>(key) << " " << std::get<2>(key)
                << " " << value.get_str() << "\n";
        }
        if (!out)
            throw std::runtime_error("cache: write failed for " + path);
    }

    std::optional<BigNat> lookup(SeqKind kind, unsigned long m, unsigned long l) const {
        auto it = entries_.find(std::make_tuple(seq_kind_letter(kind), m, l));
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void put(SeqKind kind, unsigned long m, unsigned long l, const BigNat& value) {
        auto key = std::make_tuple(seq_kind_letter(kind), m, l);
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            if (it->second != value)
                throw internal_error("cache: conflicting value for existing key");
            return;
        }
        entries_.emplace(key, value);
    }

    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::tuple<char, unsigned long, unsigned long>, BigNat> entries_;
};

} // namespace bpa
