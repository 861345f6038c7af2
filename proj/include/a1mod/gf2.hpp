#pragma once

// Dense bit-packed linear algebra over GF(2).
//
// Everything in the library reduces to rank / kernel / solve here, so the
// pivot rule is fixed once and for all: leftmost nonzero column, topmost
// row.  All bases and witness vectors produced downstream are therefore
// bit-reproducible across runs.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace a1mod::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & Word(1);
    }
    void set(std::size_t i, bool v = true) {
        Word mask = Word(1) << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    BitVec& operator^=(const BitVec& rhs) {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] ^= rhs.words_[k];
        return *this;
    }

    bool is_zero() const {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    // Index of the first set bit, or -1.
    int first_set() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * kWordBits + std::countr_zero(words_[k]));
        return -1;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (Word w : words_) n += std::popcount(w);
        return n;
    }

    bool operator==(const BitVec& rhs) const {
        return size_ == rhs.size_ && words_ == rhs.words_;
    }

    const std::vector<Word>& words() const { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

// Row-major packed matrix.  Invariant: bits beyond column `cols` in the last
// word of each row are zero (maintained by every operation below).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & Word(1);
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        Word mask = Word(1) << (c % kWordBits);
        if (v)
            data_[r * wpr_ + c / kWordBits] |= mask;
        else
            data_[r * wpr_ + c / kWordBits] &= ~mask;
    }

    void xor_row_into(std::size_t src, std::size_t dst) {
        Word* d = data_.data() + dst * wpr_;
        const Word* s = data_.data() + src * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }

    BitVec row(std::size_t r) const {
        BitVec v(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) v.set(c);
        return v;
    }
    void set_row(std::size_t r, const BitVec& v) {
        for (std::size_t c = 0; c < cols_; ++c) set(r, c, v.get(c));
    }

    bool row_is_zero(std::size_t r) const {
        const Word* p = data_.data() + r * wpr_;
        for (std::size_t k = 0; k < wpr_; ++k)
            if (p[k]) return false;
        return true;
    }

    bool is_zero() const {
        for (Word w : data_)
            if (w) return false;
        return true;
    }

    // y = M x (column-vector convention).
    BitVec apply(const BitVec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("gf2: apply dimension mismatch");
        BitVec y(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            Word acc = 0;
            const Word* p = data_.data() + r * wpr_;
            for (std::size_t k = 0; k < wpr_; ++k) acc ^= p[k] & x.words()[k];
            if (std::popcount(acc) & 1) y.set(r);
        }
        return y;
    }

    BitMatrix operator*(const BitMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("gf2: mul dimension mismatch");
        BitMatrix out(rows_, rhs.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            Word* orow = out.data_.data() + r * out.wpr_;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (get(r, c)) {
                    const Word* srow = rhs.data_.data() + c * rhs.wpr_;
                    for (std::size_t k = 0; k < rhs.wpr_; ++k) orow[k] ^= srow[k];
                }
            }
        }
        return out;
    }

    BitMatrix operator+(const BitMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("gf2: add dimension mismatch");
        BitMatrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] ^= rhs.data_[k];
        return out;
    }

    BitMatrix transpose() const {
        BitMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) out.set(c, r);
        return out;
    }

    bool operator==(const BitMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<Word> data_;
};

// Reduced row echelon form. pivot_of_row[i] = pivot column of row i (rows
// sorted by pivot); row_of_col[c] = which echelon row has its pivot at c.
struct Echelon {
    BitMatrix mat;
    std::vector<int> pivot_of_row;
    std::vector<int> row_of_col;
    std::size_t rank = 0;
};

inline Echelon rref(BitMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Echelon e;
    e.row_of_col.assign(cols, -1);
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t pr = next;
        while (pr < rows && !m.get(pr, c)) ++pr;
        if (pr == rows) continue;
        if (pr != next) {
            BitVec a = m.row(pr), b = m.row(next);
            m.set_row(pr, b);
            m.set_row(next, a);
        }
        for (std::size_t r = 0; r < rows; ++r)
            if (r != next && m.get(r, c)) m.xor_row_into(next, r);
        e.pivot_of_row.push_back(static_cast<int>(c));
        e.row_of_col[c] = static_cast<int>(next);
        ++next;
    }
    e.rank = next;
    e.mat = std::move(m);
    return e;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

// Basis of {v : m v = 0}, one vector per free column, in reduced echelon
// form, ordered by free column index.
inline std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    Echelon e = rref(m);
    std::vector<BitVec> out;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (e.row_of_col[c] >= 0) continue;
        BitVec v(m.cols());
        v.set(c);
        for (std::size_t r = 0; r < e.rank; ++r)
            if (e.mat.get(r, c)) v.set(static_cast<std::size_t>(e.pivot_of_row[r]));
        out.push_back(std::move(v));
    }
    return out;
}

// Some x with m x = b, or nullopt.  Free variables are set to zero, so the
// answer follows the leftmost-pivot rule.
inline std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("gf2: solve dimension mismatch");
    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c);
        if (b.get(r)) aug.set(r, m.cols());
    }
    Echelon e = rref(std::move(aug));
    BitVec x(m.cols());
    for (std::size_t r = 0; r < e.rank; ++r) {
        std::size_t pc = static_cast<std::size_t>(e.pivot_of_row[r]);
        if (pc == m.cols()) return std::nullopt;  // row (0 ... 0 | 1)
        if (e.mat.get(r, m.cols())) x.set(pc);
    }
    return x;
}

// Row span helper: echelonized basis of the span of the given rows.
inline BitMatrix row_space(const BitMatrix& m) {
    Echelon e = rref(m);
    BitMatrix out(e.rank, m.cols());
    for (std::size_t r = 0; r < e.rank; ++r) out.set_row(r, e.mat.row(r));
    return out;
}

// Is v in the row span of rows(m)?  Convenience for membership tests.
inline bool in_row_space(const BitMatrix& rows, const BitVec& v) {
    return solve(rows.transpose(), v).has_value();
}

}  // namespace a1mod::gf2
