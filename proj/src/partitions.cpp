#include "steenrod/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace steenrod {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int v : parts_) {
    if (v < 1) throw std::invalid_argument("composition parts must be positive");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::offset(int i) const {
  if (i < 1 || i > length()) throw std::out_of_range("composition position");
  return std::accumulate(parts_.begin(), parts_.begin() + (i - 1), 0);
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void build(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    build(remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("compositions are defined for n >= 1");
  if (n > max_n) throw std::length_error("n = " + std::to_string(n) + " exceeds the composition limit " + std::to_string(max_n));
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (n - 1));
  std::vector<int> prefix;
  build(n, prefix, out);
  return out;
}

Composition extend_composition(const Composition& nu, int m) {
  if (m <= nu.total()) throw std::invalid_argument("extension target must exceed the composition's total");
  auto parts = nu.parts();
  parts.push_back(m - nu.total());
  return Composition(std::move(parts));
}

}  // namespace steenrod
