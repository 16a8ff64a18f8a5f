#include "weave/poly_matrix.hpp"

namespace weave {

CycloMatrix eval_matrix(const PolyMatrix& m, long long half_power_of_zeta) {
  CycloMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = eval_at(m(r, c), half_power_of_zeta);
  return out;
}

}  // namespace weave
