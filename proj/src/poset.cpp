#include "satlat/poset.hpp"

#include <stdexcept>

#include "satlat/io.hpp"

namespace satlat {

PosetSpec::PosetSpec(int size, std::vector<std::pair<int, int>> strict_pairs,
                     std::string label, bool close)
    : size_(size), label_(std::move(label)) {
  if (size_ < 1)
    throw std::invalid_argument("poset size must be positive, got " +
                                std::to_string(size_));
  less_.assign(static_cast<size_t>(size_) * static_cast<size_t>(size_), 0);
  for (auto [i, j] : strict_pairs) {
    if (i < 0 || i >= size_ || j < 0 || j >= size_)
      throw std::invalid_argument("relation (" + std::to_string(i) + "," +
                                  std::to_string(j) +
                                  ") references element outside 0.." +
                                  std::to_string(size_ - 1));
    less_[static_cast<size_t>(i) * static_cast<size_t>(size_) +
          static_cast<size_t>(j)] = 1;
  }
  if (close) close_transitively();
  validate();
}

void PosetSpec::close_transitively() {
  const size_t p = static_cast<size_t>(size_);
  for (size_t k = 0; k < p; ++k)
    for (size_t i = 0; i < p; ++i) {
      if (!less_[i * p + k]) continue;
      for (size_t j = 0; j < p; ++j)
        if (less_[k * p + j]) less_[i * p + j] = 1;
    }
}

void PosetSpec::validate() const {
  const int p = size_;
  for (int i = 0; i < p; ++i)
    if (less(i, i))
      throw std::invalid_argument(
          "not a strict order: irreflexivity fails at element " +
          std::to_string(i));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j && less(i, j) && less(j, i))
        throw std::invalid_argument(
            "not a strict order: asymmetry fails on pair (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (!less(i, j)) continue;
      for (int k = 0; k < p; ++k)
        if (less(j, k) && !less(i, k))
          throw std::invalid_argument(
              "not a strict order: transitivity fails on triple (" +
              std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(k) + ")");
    }
}

PosetSpec PosetSpec::chain(int k) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) rel.emplace_back(i, j);
  return PosetSpec(k, std::move(rel), "chain:" + std::to_string(k));
}

PosetSpec PosetSpec::antichain(int k) {
  return PosetSpec(k, {}, "antichain:" + std::to_string(k));
}

PosetSpec PosetSpec::v2() {
  return PosetSpec(3, {{0, 1}, {0, 2}}, "v2");
}

PosetSpec PosetSpec::diamond() {
  return PosetSpec(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}, "diamond");
}

PosetSpec PosetSpec::butterfly() {
  return PosetSpec(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, "butterfly");
}

PosetSpec PosetSpec::dual() const {
  PosetSpec d;
  d.size_ = size_;
  d.label_ = "dual(" + label_ + ")";
  const size_t p = static_cast<size_t>(size_);
  d.less_.assign(p * p, 0);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) d.less_[j * p + i] = less_[i * p + j];
  return d;
}

bool PosetSpec::is_antichain() const {
  for (std::uint8_t b : less_)
    if (b) return false;
  return true;
}

bool PosetSpec::is_chain() const {
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (!comparable(i, j)) return false;
  return true;
}

bool PosetSpec::same_relation(const PosetSpec& other) const {
  return size_ == other.size_ && less_ == other.less_;
}

namespace {

int parse_count(const std::string& descriptor, const std::string& prefix) {
  std::string tail = descriptor.substr(prefix.size());
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("poset descriptor needs a positive count: " +
                                descriptor);
  long k = 0;
  try {
    k = std::stol(tail);
  } catch (const std::exception&) {
    throw std::invalid_argument("poset count out of range: " + descriptor);
  }
  if (k < 1)
    throw std::invalid_argument("poset count must be >= 1: " + descriptor);
  if (k > 64)
    throw std::invalid_argument("poset count too large for copy search: " +
                                descriptor);
  return static_cast<int>(k);
}

}  // namespace

PosetSpec parse_poset(const std::string& descriptor) {
  if (descriptor.rfind("chain:", 0) == 0)
    return PosetSpec::chain(parse_count(descriptor, "chain:"));
  if (descriptor.rfind("antichain:", 0) == 0)
    return PosetSpec::antichain(parse_count(descriptor, "antichain:"));
  if (descriptor == "v2") return PosetSpec::v2();
  if (descriptor == "diamond") return PosetSpec::diamond();
  if (descriptor == "butterfly") return PosetSpec::butterfly();
  if (descriptor.rfind("custom:", 0) == 0)
    return load_poset_file(descriptor.substr(7));
  throw std::invalid_argument("unknown poset descriptor: " + descriptor);
}

}  // namespace satlat
