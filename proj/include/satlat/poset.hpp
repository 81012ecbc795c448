#pragma once

// Target posets for copy search: a finite strict order on {0..p-1} stored as
// a dense less-than matrix.  Construction validates the strict-order axioms
// and reports the violated axiom with a witness.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace satlat {

class PosetSpec {
 public:
  // strict_pairs lists i < j relations (cover relations are enough when
  // close_transitively is set; otherwise the full strict relation is
  // expected and validated as given).
  PosetSpec(int size, std::vector<std::pair<int, int>> strict_pairs,
            std::string label, bool close_transitively = false);

  static PosetSpec chain(int k);      // total order on k elements
  static PosetSpec antichain(int k);  // no relations
  static PosetSpec v2();        // one minimum below two incomparable tops
  static PosetSpec diamond();   // bottom < two incomparable middles < top
  static PosetSpec butterfly(); // two bottoms each below two tops

  int size() const { return size_; }
  bool less(int i, int j) const {
    return less_[static_cast<size_t>(i) * static_cast<size_t>(size_) +
                 static_cast<size_t>(j)] != 0;
  }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  const std::string& label() const { return label_; }

  // Transpose of the relation; mechanical label "dual(<label>)".
  PosetSpec dual() const;

  bool is_antichain() const;  // no related pair
  bool is_chain() const;      // all pairs related
  // Same size and identical less-than matrix (labels ignored).
  bool same_relation(const PosetSpec& other) const;

 private:
  int size_;
  std::string label_;
  std::vector<std::uint8_t> less_;  // row-major strict less-than matrix

  PosetSpec() : size_(0) {}
  void close_transitively();
  void validate() const;  // throws std::invalid_argument with witness
};

// Descriptors: "chain:k" | "antichain:k" (k >= 1) | "v2" | "diamond" |
// "butterfly" | "custom:<path to JSON poset file>".
PosetSpec parse_poset(const std::string& descriptor);

}  // namespace satlat
