#include "multitype/multi_index.hpp"

#include <numeric>

#include "multitype/errors.hpp"

namespace multitype {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t var, Exponent power) {
  MultiIndex m(n);
  m.exps_.at(var) = power;
  return m;
}

std::uint64_t MultiIndex::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool MultiIndex::is_constant() const {
  for (auto e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw DimensionError("multiindex length mismatch");
  MultiIndex out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool GrevlexGreater::operator()(const MultiIndex& a, const MultiIndex& b) const {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace multitype
