#include "hearstkit/model_io.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace hearstkit {

namespace {

constexpr char kMagic[5] = {'H', 'K', 'S', 'M', '1'};

void put_u8(std::ostream& out, uint8_t v) { out.put(static_cast<char>(v)); }

void put_u32(std::ostream& out, uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_u64(std::ostream& out, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

void put_f64(std::ostream& out, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

void put_string(std::ostream& out, const std::string& s) {
    put_u32(out, static_cast<uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

uint8_t get_u8(std::istream& in) {
    int c = in.get();
    if (c == EOF) throw std::runtime_error("model file truncated");
    return static_cast<uint8_t>(c);
}

uint32_t get_u32(std::istream& in) {
    char b[4];
    if (!in.read(b, 4)) throw std::runtime_error("model file truncated");
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<uint8_t>(b[i]);
    return v;
}

uint64_t get_u64(std::istream& in) {
    char b[8];
    if (!in.read(b, 8)) throw std::runtime_error("model file truncated");
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<uint8_t>(b[i]);
    return v;
}

double get_f64(std::istream& in) {
    uint64_t bits = get_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

std::string get_string(std::istream& in) {
    uint32_t len = get_u32(in);
    std::string s(len, '\0');
    if (len && !in.read(s.data(), len)) throw std::runtime_error("model file truncated");
    return s;
}

void put_vocab(std::ostream& out, const Vocabulary& vocab) {
    put_u64(out, vocab.size());
    for (const auto& term : vocab.terms()) put_string(out, term);
}

Vocabulary get_vocab(std::istream& in) {
    uint64_t m = get_u64(in);
    std::vector<std::string> terms;
    terms.reserve(m);
    for (uint64_t i = 0; i < m; ++i) terms.push_back(get_string(in));
    return Vocabulary(std::move(terms));
}

void put_header(std::ostream& out, uint8_t kind, const ModelMeta& meta) {
    out.write(kMagic, 5);
    put_u8(out, kind);
    put_string(out, meta.info);
}

}  // namespace

void save_model(std::ostream& out, const PairModel& model, const ModelMeta& meta) {
    put_header(out, 1, meta);
    put_vocab(out, model.vocab);
    put_u8(out, model.weighting == Weighting::Prob ? 1 : 2);
    put_u64(out, model.matrix.nnz());
    for (uint64_t p : model.matrix.row_ptr) put_u64(out, p);
    for (uint32_t c : model.matrix.col_idx) put_u32(out, c);
    for (double v : model.matrix.values) put_f64(out, v);
    for (double v : model.p_hypo) put_f64(out, v);
    for (double v : model.p_hyper) put_f64(out, v);
}

void save_model(std::ostream& out, const SvdModel& model, const ModelMeta& meta) {
    if (model.vocab.size() != model.u_rows || model.u_rows != model.v_rows)
        throw std::invalid_argument("svd model needs a square shape with attached vocabulary");
    put_header(out, 2, meta);
    put_vocab(out, model.vocab);
    put_u8(out, model.weighting == Weighting::Prob ? 1 : 2);
    put_u32(out, static_cast<uint32_t>(model.rank));
    for (double s : model.singular_values) put_f64(out, s);
    for (double v : model.u) put_f64(out, v);
    for (double v : model.v) put_f64(out, v);
}

AnyModel load_model(std::istream& in, ModelMeta* meta) {
    char magic[5];
    if (!in.read(magic, 5) || std::memcmp(magic, kMagic, 5) != 0)
        throw std::runtime_error("not a HKSM1 model file (bad magic bytes)");
    uint8_t kind = get_u8(in);
    std::string info = get_string(in);
    if (meta) meta->info = info;
    Vocabulary vocab = get_vocab(in);
    const size_t m = vocab.size();
    uint8_t wbyte;

    if (kind == 1) {
        PairModel model;
        model.vocab = std::move(vocab);
        wbyte = get_u8(in);
        model.weighting = wbyte == 1 ? Weighting::Prob : Weighting::Ppmi;
        uint64_t nnz = get_u64(in);
        model.matrix.rows = m;
        model.matrix.cols = m;
        model.matrix.row_ptr.resize(m + 1);
        for (auto& p : model.matrix.row_ptr) p = get_u64(in);
        model.matrix.col_idx.resize(nnz);
        for (auto& c : model.matrix.col_idx) c = get_u32(in);
        model.matrix.values.resize(nnz);
        for (auto& v : model.matrix.values) v = get_f64(in);
        model.p_hypo.resize(m);
        for (auto& v : model.p_hypo) v = get_f64(in);
        model.p_hyper.resize(m);
        for (auto& v : model.p_hyper) v = get_f64(in);
        return model;
    }
    if (kind == 2) {
        SvdModel model;
        model.vocab = std::move(vocab);
        model.u_rows = m;
        model.v_rows = m;
        wbyte = get_u8(in);
        model.weighting = wbyte == 1 ? Weighting::Prob : Weighting::Ppmi;
        model.rank = get_u32(in);
        model.singular_values.resize(model.rank);
        for (auto& s : model.singular_values) s = get_f64(in);
        model.u.resize(m * model.rank);
        for (auto& v : model.u) v = get_f64(in);
        model.v.resize(m * model.rank);
        for (auto& v : model.v) v = get_f64(in);
        return model;
    }
    throw std::runtime_error("unknown model kind byte");
}

void save_model_file(const std::string& path, const PairModel& model, const ModelMeta& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    save_model(out, model, meta);
}

void save_model_file(const std::string& path, const SvdModel& model, const ModelMeta& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    save_model(out, model, meta);
}

AnyModel load_model_file(const std::string& path, ModelMeta* meta) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    return load_model(in, meta);
}

}  // namespace hearstkit
