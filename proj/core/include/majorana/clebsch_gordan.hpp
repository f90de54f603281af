#pragma once

#include <vector>

#include "majorana/spin.hpp"

namespace majorana {

// <j1 m1; j2 m2 | J M> with all arguments doubled. Condon-Shortley phase,
// evaluated from the Racah sum in exact rational arithmetic. Returns 0 when a
// selection rule (M = m1 + m2, triangle, parity, |m| <= j) is violated.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M);

// Matrix elements of the orthonormal tensors T_Kq on spin S:
// <S,m+q|T_Kq|S,m> = sqrt((2K+1)/(2S+1)) <S m; K q|S m+q>, built once per S
// and shared read-only afterwards.
class TensorTable {
 public:
  explicit TensorTable(SpinLabel label);

  const SpinLabel& label() const noexcept { return label_; }
  // Element for column k (m = k - S) of T_Kq; row is k + q.
  double element(int K, int q, int k) const {
    return data_[offset(K, q) + static_cast<std::size_t>(k)];
  }

  static const TensorTable& get(SpinLabel label);

 private:
  std::size_t offset(int K, int q) const {
    return (static_cast<std::size_t>(K * K + (q + K))) * static_cast<std::size_t>(label_.dimension());
  }

  SpinLabel label_;
  std::vector<double> data_;
};

}  // namespace majorana
