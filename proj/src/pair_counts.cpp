#include "hearstkit/pair_counts.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hearstkit {

void PairCounts::add(const std::string& hypo, const std::string& hyper,
                     const std::string& pattern_id, uint64_t count) {
    Entry& e = entries_[Key(hypo, hyper)];
    e.count += count;
    e.patterns.insert(pattern_id);
    total_ += count;
}

void PairCounts::merge(const PairCounts& other) {
    for (const auto& [key, entry] : other.entries_) {
        Entry& e = entries_[key];
        e.count += entry.count;
        e.patterns.insert(entry.patterns.begin(), entry.patterns.end());
    }
    total_ += other.total_;
}

size_t PairCounts::unique_terms() const {
    std::set<std::string> terms;
    for (const auto& [key, entry] : entries_) {
        terms.insert(key.first);
        terms.insert(key.second);
    }
    return terms.size();
}

uint64_t PairCounts::count(const std::string& hypo, const std::string& hyper) const {
    auto it = entries_.find(Key(hypo, hyper));
    return it == entries_.end() ? 0 : it->second.count;
}

PairCounts PairCounts::postprocess() const {
    PairCounts out;
    // (a) two-distinct-patterns filter
    Map kept;
    for (const auto& [key, entry] : entries_) {
        if (entry.patterns.size() >= 2) kept.emplace(key, entry);
    }
    // (b) direction filter over the survivors
    for (const auto& [key, entry] : kept) {
        auto rev = kept.find(Key(key.second, key.first));
        if (rev != kept.end() && entry.count < rev->second.count) continue;
        out.entries_.emplace(key, entry);
        out.total_ += entry.count;
    }
    return out;
}

void PairCounts::write_tsv(std::ostream& out,
                           const std::vector<std::string>& header_lines) const {
    for (const auto& h : header_lines) out << h << '\n';
    std::vector<const Map::value_type*> rows;
    rows.reserve(entries_.size());
    for (const auto& kv : entries_) rows.push_back(&kv);
    std::stable_sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
        if (a->second.count != b->second.count) return a->second.count > b->second.count;
        return a->first < b->first;
    });
    for (const auto* row : rows) {
        out << row->first.first << '\t' << row->first.second << '\t' << row->second.count
            << '\t';
        bool first = true;
        for (const auto& p : row->second.patterns) {
            if (!first) out << ',';
            out << p;
            first = false;
        }
        out << '\n';
    }
}

PairCounts PairCounts::read_tsv(std::istream& in, const std::string& name) {
    PairCounts out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string hypo, hyper, count_str, patterns;
        if (!std::getline(ls, hypo, '\t') || !std::getline(ls, hyper, '\t') ||
            !std::getline(ls, count_str, '\t')) {
            throw std::runtime_error(name + ":" + std::to_string(line_no) +
                                     ": expected at least 3 tab-separated fields");
        }
        std::getline(ls, patterns, '\t');
        uint64_t count = 0;
        try {
            count = std::stoull(count_str);
        } catch (...) {
            throw std::runtime_error(name + ":" + std::to_string(line_no) + ": bad count '" +
                                     count_str + "'");
        }
        Entry& e = out.entries_[Key(hypo, hyper)];
        e.count += count;
        out.total_ += count;
        std::istringstream ps(patterns);
        std::string pid;
        while (std::getline(ps, pid, ',')) {
            if (!pid.empty()) e.patterns.insert(pid);
        }
    }
    return out;
}

}  // namespace hearstkit
