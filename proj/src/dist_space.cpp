#include "hearstkit/dist_space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hearstkit {

std::optional<uint32_t> DistributionalSpace::index(const std::string& term) const {
    auto it = term_index.find(term);
    if (it == term_index.end()) return std::nullopt;
    return it->second;
}

void DistributionalSpace::rebuild_derived() {
    term_index.clear();
    for (uint32_t i = 0; i < terms.size(); ++i) term_index.emplace(terms[i], i);

    const size_t nc = contexts.size();
    context_marginal.assign(nc, 0.0);
    std::vector<double> nlogn(nc, 0.0);
    for (size_t r = 0; r < raw.rows; ++r) {
        auto idx = raw.row_indices(r);
        auto val = raw.row_values(r);
        for (size_t k = 0; k < idx.size(); ++k) {
            context_marginal[idx[k]] += val[k];
            if (val[k] > 0) nlogn[idx[k]] += val[k] * std::log2(val[k]);
        }
    }
    context_entropy.assign(nc, 0.0);
    for (size_t c = 0; c < nc; ++c) {
        const double s = context_marginal[c];
        if (s > 0) context_entropy[c] = std::log2(s) - nlogn[c] / s;
    }
}

DistributionalSpace build_window_space(const std::vector<AnnotatedSentence>& corpus,
                                       size_t window, uint64_t min_count) {
    if (window < 1) throw std::invalid_argument("window must be at least 1");
    if (corpus.empty()) throw std::runtime_error("empty corpus");

    std::map<std::string, uint64_t> freq;
    for (const auto& sent : corpus)
        for (const auto& tok : sent.tokens) ++freq[tok.lemma];

    std::vector<std::string> vocab;
    for (const auto& [lemma, n] : freq)
        if (n >= min_count) vocab.push_back(lemma);
    if (vocab.empty()) throw std::runtime_error("frequency filter left an empty space");

    std::unordered_map<std::string, uint32_t> vindex;
    for (uint32_t i = 0; i < vocab.size(); ++i) vindex.emplace(vocab[i], i);

    std::map<std::pair<uint32_t, uint32_t>, uint64_t> cooc;
    for (const auto& sent : corpus) {
        const auto& toks = sent.tokens;
        for (size_t i = 0; i < toks.size(); ++i) {
            auto ti = vindex.find(toks[i].lemma);
            if (ti == vindex.end()) continue;
            const size_t lo = i >= window ? i - window : 0;
            const size_t hi = std::min(toks.size(), i + window + 1);
            for (size_t j = lo; j < hi; ++j) {
                if (j == i) continue;
                auto tj = vindex.find(toks[j].lemma);
                if (tj == vindex.end()) continue;
                ++cooc[{ti->second, tj->second}];
            }
        }
    }
    if (cooc.empty()) throw std::runtime_error("no co-occurrences survive the filter");

    double total = 0.0;
    std::vector<double> row_sum(vocab.size(), 0.0), col_sum(vocab.size(), 0.0);
    for (const auto& [key, n] : cooc) {
        total += static_cast<double>(n);
        row_sum[key.first] += static_cast<double>(n);
        col_sum[key.second] += static_cast<double>(n);
    }

    // PPMI per cell; rows that clamp to empty are dropped from the space.
    std::vector<char> keep(vocab.size(), 0);
    std::map<std::pair<uint32_t, uint32_t>, double> weighted;
    for (const auto& [key, n] : cooc) {
        const double p = n / total;
        const double px = row_sum[key.first] / total;
        const double pc = col_sum[key.second] / total;
        const double w = std::log(p / (px * pc));
        if (w > 0) {
            weighted[key] = w;
            keep[key.first] = 1;
        }
    }

    DistributionalSpace space;
    std::vector<uint32_t> remap(vocab.size(), UINT32_MAX);
    for (uint32_t i = 0; i < vocab.size(); ++i) {
        if (keep[i]) {
            remap[i] = static_cast<uint32_t>(space.terms.size());
            space.terms.push_back(vocab[i]);
        }
    }
    if (space.terms.empty()) throw std::runtime_error("ppmi transform left an empty space");
    space.contexts = vocab;

    CsrBuilder wb(space.terms.size(), vocab.size());
    for (const auto& [key, w] : weighted) wb.push(remap[key.first], key.second, w);
    space.ppmi = wb.finish();

    CsrBuilder rb(space.terms.size(), vocab.size());
    for (const auto& [key, n] : cooc) {
        if (keep[key.first]) rb.push(remap[key.first], key.second, static_cast<double>(n));
    }
    space.raw = rb.finish();

    space.rebuild_derived();
    return space;
}

namespace {

void write_matrix_file(const std::string& path, const std::vector<std::string>& terms,
                       size_t num_contexts, const CsrMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write space file: " + path);
    out.precision(17);  // values must survive the text round trip
    out << "HKDS1 " << terms.size() << ' ' << num_contexts << '\n';
    for (size_t r = 0; r < m.rows; ++r) {
        out << terms[r] << '\t';
        auto idx = m.row_indices(r);
        auto val = m.row_values(r);
        for (size_t k = 0; k < idx.size(); ++k) {
            if (k) out << ' ';
            out << idx[k] << ':' << val[k];
        }
        out << '\n';
    }
}

CsrMatrix read_matrix_file(const std::string& path, std::vector<std::string>* terms) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open space file: " + path);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error(path + ": empty file");
    std::istringstream hs(header);
    std::string magic;
    size_t nt = 0, nc = 0;
    hs >> magic >> nt >> nc;
    if (magic != "HKDS1") throw std::runtime_error(path + ": bad header (expected HKDS1)");

    terms->clear();
    CsrBuilder builder(nt, nc);
    std::string line;
    size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (row >= nt) throw std::runtime_error(path + ": more rows than header declares");
        size_t tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error(path + ": missing term field");
        terms->push_back(line.substr(0, tab));
        std::istringstream cells(line.substr(tab + 1));
        std::string cell;
        long long prev = -1;
        while (cells >> cell) {
            size_t colon = cell.find(':');
            if (colon == std::string::npos)
                throw std::runtime_error(path + ": malformed cell '" + cell + "'");
            uint32_t ci = static_cast<uint32_t>(std::stoul(cell.substr(0, colon)));
            double v = std::stod(cell.substr(colon + 1));
            if (static_cast<long long>(ci) <= prev)
                throw std::runtime_error(path + ": context indices must be increasing");
            prev = ci;
            builder.push(row, ci, v);
        }
        ++row;
    }
    if (row != nt) throw std::runtime_error(path + ": fewer rows than header declares");
    return builder.finish();
}

}  // namespace

void save_space(const DistributionalSpace& space, const std::string& space_path,
                const std::string& contexts_path, const std::string& counts_path) {
    write_matrix_file(space_path, space.terms, space.contexts.size(), space.ppmi);
    write_matrix_file(counts_path, space.terms, space.contexts.size(), space.raw);
    std::ofstream out(contexts_path);
    if (!out) throw std::runtime_error("cannot write context file: " + contexts_path);
    out.precision(17);
    for (size_t c = 0; c < space.contexts.size(); ++c) {
        out << c << '\t' << space.contexts[c] << '\t' << space.context_marginal[c] << '\n';
    }
}

DistributionalSpace load_space(const std::string& space_path, const std::string& contexts_path,
                               const std::string& counts_path) {
    DistributionalSpace space;
    space.ppmi = read_matrix_file(space_path, &space.terms);
    std::vector<std::string> raw_terms;
    space.raw = read_matrix_file(counts_path, &raw_terms);
    if (raw_terms != space.terms)
        throw std::runtime_error("count file terms do not match the space file");

    std::ifstream in(contexts_path);
    if (!in) throw std::runtime_error("cannot open context file: " + contexts_path);
    space.contexts.assign(space.ppmi.cols, "");
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string idx_s, ctx, marg;
        if (!std::getline(ls, idx_s, '\t') || !std::getline(ls, ctx, '\t'))
            throw std::runtime_error(contexts_path + ":" + std::to_string(line_no) +
                                     ": expected index<TAB>context<TAB>marginal");
        std::getline(ls, marg, '\t');
        size_t idx = std::stoul(idx_s);
        if (idx >= space.contexts.size())
            throw std::runtime_error(contexts_path + ": context index out of range");
        space.contexts[idx] = ctx;
    }
    space.rebuild_derived();

    for (size_t r = 0; r < space.ppmi.rows; ++r) {
        if (space.ppmi.row_ptr[r] == space.ppmi.row_ptr[r + 1])
            throw std::runtime_error("term '" + space.terms[r] + "' has an empty row");
    }
    return space;
}

}  // namespace hearstkit
