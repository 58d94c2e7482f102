#ifndef HEARSTKIT_DIST_SPACE_HPP
#define HEARSTKIT_DIST_SPACE_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hearstkit/corpus.hpp"
#include "hearstkit/sparse.hpp"

namespace hearstkit {

// Sparse non-negative term-by-context space. `ppmi` carries the weighted
// entries used by the inclusion measures; `raw` carries the co-occurrence
// counts that back context entropies. Rows are parallel across the two
// matrices and every ppmi row has at least one nonzero.
struct DistributionalSpace {
    std::vector<std::string> terms;
    std::unordered_map<std::string, uint32_t> term_index;
    std::vector<std::string> contexts;
    CsrMatrix ppmi;
    CsrMatrix raw;
    std::vector<double> context_entropy;  // Shannon entropy (base 2) of p(term | context)
    std::vector<double> context_marginal; // raw count sum per context

    std::optional<uint32_t> index(const std::string& term) const;
    void rebuild_derived();  // recomputes term_index, entropies, marginals
};

// Symmetric-window lemma co-occurrence space: counts within +-window inside
// a sentence, drops lemmas occurring fewer than min_count times in the
// corpus, PPMI-transforms. Terms whose PPMI row clamps empty are dropped.
// Throws on an empty corpus or when the filter leaves nothing.
DistributionalSpace build_window_space(const std::vector<AnnotatedSentence>& corpus,
                                       size_t window, uint64_t min_count);

// Text serialization: `HKDS1 <num_terms> <num_contexts>` header, then one
// `term<TAB>ctx:val ctx:val ...` line per term; the context vocabulary goes
// to a separate `index<TAB>context<TAB>raw_marginal` file, and a raw-count
// file with the same layout as the space backs entropies.
void save_space(const DistributionalSpace& space, const std::string& space_path,
                const std::string& contexts_path, const std::string& counts_path);
DistributionalSpace load_space(const std::string& space_path, const std::string& contexts_path,
                               const std::string& counts_path);

}  // namespace hearstkit

#endif
