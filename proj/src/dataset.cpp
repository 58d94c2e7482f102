#include "hearstkit/dataset.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hearstkit {

std::vector<DatasetRecord> parse_dataset(std::istream& in, const std::string& name) {
    std::vector<DatasetRecord> records;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        DatasetRecord rec;
        std::string score_s;
        if (!std::getline(ls, rec.x, '\t') || !std::getline(ls, rec.y, '\t') ||
            !std::getline(ls, rec.relation, '\t') || rec.relation.empty()) {
            throw std::runtime_error(name + ":" + std::to_string(line_no) +
                                     ": expected x<TAB>y<TAB>relation");
        }
        if (std::getline(ls, score_s, '\t') && !score_s.empty()) {
            try {
                rec.gold_score = std::stod(score_s);
            } catch (...) {
                throw std::runtime_error(name + ":" + std::to_string(line_no) +
                                         ": bad score '" + score_s + "'");
            }
        }
        std::getline(ls, rec.fold, '\t');
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<DatasetRecord> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    return parse_dataset(in, path);
}

}  // namespace hearstkit
