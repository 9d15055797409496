#include "algebroid/tensor.hpp"

#include <stdexcept>

namespace algebroid {

void DefectTensor::add(Index idx, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = entries_.try_emplace(std::move(idx), v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

Scalar DefectTensor::at(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Scalar() : it->second;
}

bool DefectReport::passed() const {
  for (const auto& [name, t] : vanishing_)
    if (!t.vanishes()) return false;
  for (const auto& [name, s] : nonvanishing_)
    if (s.is_zero()) return false;
  return true;
}

const DefectTensor& DefectReport::at(const std::string& name) const {
  auto it = vanishing_.find(name);
  if (it == vanishing_.end()) throw std::out_of_range("no defect named '" + name + "'");
  return it->second;
}

}  // namespace algebroid
