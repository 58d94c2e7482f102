#ifndef HEARSTKIT_MODEL_IO_HPP
#define HEARSTKIT_MODEL_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "hearstkit/scorer.hpp"
#include "hearstkit/svd.hpp"

namespace hearstkit {

// Binary model container, magic `HKSM1`, little-endian throughout:
//   magic | kind u8 (1 sparse, 2 svd) | meta (u32 len + utf8)
//   | vocab: u64 m, then m * (u32 len + utf8) in index order
//   | sparse payload: weighting u8, u64 nnz, row_ptr (m+1)*u64,
//     col_idx nnz*u32, values nnz*f64, p_hypo m*f64, p_hyper m*f64
//   | svd payload: weighting u8, u32 r, sigma r*f64,
//     U rows m*r*f64 row-major, V rows m*r*f64 row-major.

struct ModelMeta {
    std::string info;  // free-form provenance (version, config hash, seed)
};

void save_model(std::ostream& out, const PairModel& model, const ModelMeta& meta);
void save_model(std::ostream& out, const SvdModel& model, const ModelMeta& meta);
void save_model_file(const std::string& path, const PairModel& model, const ModelMeta& meta);
void save_model_file(const std::string& path, const SvdModel& model, const ModelMeta& meta);

using AnyModel = std::variant<PairModel, SvdModel>;

AnyModel load_model(std::istream& in, ModelMeta* meta = nullptr);
AnyModel load_model_file(const std::string& path, ModelMeta* meta = nullptr);

}  // namespace hearstkit

#endif
