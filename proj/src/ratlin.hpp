#pragma once

// Internal: incremental Gaussian elimination over Q with combination
// tracking. Feeding vectors one at a time either extends the span or
// returns the coefficients expressing the new vector in the previous ones.

#include <optional>
#include <vector>

#include "toralsym/numeric.hpp"

namespace toralsym {

class RatLinSolver {
 public:
  explicit RatLinSolver(int width) : width_(width) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  /// If v is dependent on the vectors added so far, returns c with
  /// v = sum c_i * v_i (in insertion order); otherwise stores v and returns
  /// nullopt.
  std::optional<std::vector<Rat>> add_vector(const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != width_) throw dimension_error("RatLinSolver: width mismatch");
    std::vector<Rat> w = v;
    std::vector<Rat> comb(rows_.size() + 1);
    comb.back() = 1;  // coefficient of the incoming vector itself
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rat& lead = w[pivot_[r]];
      if (lead == 0) continue;
      Rat f = lead / rows_[r][pivot_[r]];
      for (int j = 0; j < width_; ++j) w[j] -= f * rows_[r][j];
      for (size_t k = 0; k < history_[r].size(); ++k) comb[k] -= f * history_[r][k];
    }
    int p = -1;
    for (int j = 0; j < width_; ++j)
      if (w[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) {
      // dependent: v = -sum_{k < last} comb_k / comb_last * v_k, comb_last = 1
      std::vector<Rat> out(rows0_count_);
      for (size_t k = 0; k + 1 < comb.size(); ++k) out[k] = -comb[k];
      return out;
    }
    pivot_.push_back(p);
    rows_.push_back(std::move(w));
    comb.resize(rows0_count_ + 1);
    history_.push_back(std::move(comb));
    ++rows0_count_;
    return std::nullopt;
  }

 private:
  int width_;
  int rows0_count_ = 0;                     // number of stored original vectors
  std::vector<std::vector<Rat>> rows_;      // reduced rows
  std::vector<int> pivot_;                  // pivot column per reduced row
  std::vector<std::vector<Rat>> history_;   // reduced row = sum history * originals
};

}  // namespace toralsym
