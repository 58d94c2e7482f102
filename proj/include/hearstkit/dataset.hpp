#ifndef HEARSTKIT_DATASET_HPP
#define HEARSTKIT_DATASET_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hearstkit {

// One benchmark pair. `gold_score` is present only for graded datasets
// (0..6 scale); `fold` is an optional split tag some files carry.
struct DatasetRecord {
    std::string x;
    std::string y;
    std::string relation;
    std::optional<double> gold_score;
    std::string fold;
};

// TSV loader: x<TAB>y<TAB>relation[<TAB>score[<TAB>fold]], `#` comments
// allowed. Relation labels must be nonempty.
std::vector<DatasetRecord> load_dataset(const std::string& path);
std::vector<DatasetRecord> parse_dataset(std::istream& in, const std::string& name);

}  // namespace hearstkit

#endif
