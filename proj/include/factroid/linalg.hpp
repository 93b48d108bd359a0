#pragma once

#include <cstdint>
#include <vector>

#include "factroid/error.hpp"
#include "factroid/rings.hpp"

namespace factroid {

// dense matrix over GF(p); rows kept in reduced row echelon form by rref()
struct FpMat {
  int64_t p = 2;
  int cols = 0;
  std::vector<std::vector<int16_t>> rows;

  static FpMat make(int64_t p, int cols) { return FpMat{p, cols, {}}; }

  void push_row(std::vector<int16_t> r) {
    if (int(r.size()) != cols) fail(errc::internal, "row width mismatch");
    rows.push_back(std::move(r));
  }
};

namespace detail {

// packed elimination for p = 2, one word per 64 columns
inline void rref_gf2(FpMat& m) {
  const int words = (m.cols + 63) / 64;
  std::vector<std::vector<uint64_t>> bits(m.rows.size(), std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < m.rows.size(); ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.rows[i][j]) bits[i][j / 64] |= uint64_t(1) << (j % 64);

  size_t rank = 0;
  for (int col = 0; col < m.cols && rank < bits.size(); ++col) {
    const int w = col / 64;
    const uint64_t mask = uint64_t(1) << (col % 64);
    size_t pivot = rank;
    while (pivot < bits.size() && !(bits[pivot][w] & mask)) ++pivot;
    if (pivot == bits.size()) continue;
    std::swap(bits[rank], bits[pivot]);
    for (size_t i = 0; i < bits.size(); ++i) {
      if (i == rank || !(bits[i][w] & mask)) continue;
      for (int k = w; k < words; ++k) bits[i][k] ^= bits[rank][k];
    }
    ++rank;
  }
  m.rows.assign(rank, std::vector<int16_t>(m.cols, 0));
  for (size_t i = 0; i < rank; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (bits[i][j / 64] & (uint64_t(1) << (j % 64))) m.rows[i][j] = 1;
}

inline void rref_generic(FpMat& m) {
  const int64_t p = m.p;
  size_t rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < m.rows.size() && m.rows[pivot][col] == 0) ++pivot;
    if (pivot == m.rows.size()) continue;
    std::swap(m.rows[rank], m.rows[pivot]);
    int64_t inv = mod_inverse(m.rows[rank][col], p);
    for (int j = col; j < m.cols; ++j)
      m.rows[rank][j] = int16_t(mod_norm(m.rows[rank][j] * inv, p));
    for (size_t i = 0; i < m.rows.size(); ++i) {
      if (i == rank) continue;
      int64_t f = m.rows[i][col];
      if (f == 0) continue;
      for (int j = col; j < m.cols; ++j)
        m.rows[i][j] = int16_t(mod_norm(m.rows[i][j] - f * m.rows[rank][j], p));
    }
    ++rank;
  }
  m.rows.resize(rank);
}

}  // namespace detail

// reduce to canonical reduced row echelon form; zero rows dropped
inline void rref(FpMat& m) {
  if (m.p == 2) detail::rref_gf2(m);
  else detail::rref_generic(m);
}

inline int rank_of(const FpMat& m) { return int(m.rows.size()); }

// reduce v against echelon rows in place; returns true when v lands in the row space
inline bool reduce_by(const FpMat& m, std::vector<int16_t>& v) {
  const int64_t p = m.p;
  for (const auto& row : m.rows) {
    int pivot = 0;
    while (pivot < m.cols && row[pivot] == 0) ++pivot;
    if (pivot == m.cols) continue;
    int64_t f = v[pivot];
    if (f == 0) continue;
    for (int j = pivot; j < m.cols; ++j) v[j] = int16_t(mod_norm(v[j] - f * row[j], p));
  }
  for (int j = 0; j < m.cols; ++j)
    if (v[j] != 0) return false;
  return true;
}

// basis of { c : sum_i c_i * vecs_i = 0 } as an rref matrix with vecs.size() columns
inline FpMat left_kernel(int64_t p, const std::vector<std::vector<int16_t>>& vecs, int width) {
  const int n = int(vecs.size());
  FpMat aug = FpMat::make(p, width + n);
  for (int i = 0; i < n; ++i) {
    std::vector<int16_t> row(width + n, 0);
    for (int j = 0; j < width; ++j) row[j] = vecs[i][j];
    row[width + i] = 1;
    aug.push_row(std::move(row));
  }
  rref(aug);
  FpMat ker = FpMat::make(p, n);
  for (const auto& row : aug.rows) {
    bool left_zero = true;
    for (int j = 0; j < width; ++j)
      if (row[j] != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    ker.push_row(std::vector<int16_t>(row.begin() + width, row.end()));
  }
  rref(ker);
  return ker;
}

// row-space sum
inline FpMat mat_sum(const FpMat& a, const FpMat& b) {
  FpMat s = a;
  for (const auto& r : b.rows) s.push_row(r);
  rref(s);
  return s;
}

// row-space intersection via the Zassenhaus block trick
inline FpMat mat_intersect(const FpMat& a, const FpMat& b) {
  const int n = a.cols;
  FpMat big = FpMat::make(a.p, 2 * n);
  for (const auto& r : a.rows) {
    std::vector<int16_t> row(2 * n, 0);
    for (int j = 0; j < n; ++j) row[j] = row[n + j] = r[j];
    big.push_row(std::move(row));
  }
  for (const auto& r : b.rows) {
    std::vector<int16_t> row(2 * n, 0);
    for (int j = 0; j < n; ++j) row[j] = r[j];
    big.push_row(std::move(row));
  }
  rref(big);
  FpMat out = FpMat::make(a.p, n);
  for (const auto& row : big.rows) {
    bool left_zero = true;
    for (int j = 0; j < n; ++j)
      if (row[j] != 0) {
        left_zero = false;
        break;
      }
    if (left_zero) {
      std::vector<int16_t> tail(row.begin() + n, row.end());
      bool nonzero = false;
      for (auto c : tail) nonzero |= c != 0;
      if (nonzero) out.push_row(std::move(tail));
    }
  }
  rref(out);
  return out;
}

inline bool mat_equal(const FpMat& a, const FpMat& b) {
  return a.p == b.p && a.cols == b.cols && a.rows == b.rows;
}

// all p^rank row-space vectors, deterministic odometer order; cap guards blowups
inline std::vector<std::vector<int16_t>> row_space_elements(const FpMat& m, int64_t cap) {
  int64_t count = 1;
  for (size_t i = 0; i < m.rows.size(); ++i) {
    count *= m.p;
    if (count > cap) fail(errc::budget, "row space too large to enumerate");
  }
  std::vector<std::vector<int16_t>> out;
  std::vector<int64_t> cs(m.rows.size(), 0);
  for (;;) {
    std::vector<int16_t> v(m.cols, 0);
    for (size_t i = 0; i < m.rows.size(); ++i) {
      if (cs[i] == 0) continue;
      for (int j = 0; j < m.cols; ++j)
        v[j] = int16_t(mod_norm(v[j] + cs[i] * m.rows[i][j], m.p));
    }
    out.push_back(std::move(v));
    size_t i = 0;
    while (i < cs.size() && ++cs[i] == m.p) cs[i++] = 0;
    if (i == cs.size()) break;
  }
  return out;
}

}  // namespace factroid
