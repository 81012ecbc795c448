#pragma once

// Copy search: does a family contain an (induced or weak) copy of a target
// poset?  find_* return the lexicographically least embedding, measured on
// the image index vector with candidates tried in ascending mask order; the
// existence-only entry point dispatches to shape-specific fast detectors
// where one applies.

#include <optional>

#include "satlat/family.hpp"
#include "satlat/poset.hpp"

namespace satlat {

enum class Mode { induced, weak };

struct Embedding {
  // image[u] = index into Family::members for target element u.
  std::vector<int> image;
  bool operator==(const Embedding&) const = default;
};

// Injectivity plus relation match: strict relations of the target must map
// to strict containments; incomparabilities must map to incomparabilities
// for induced mode and are unconstrained for weak mode.
bool valid_embedding(const Family& f, const PosetSpec& p, const Embedding& e,
                     Mode mode);

// Lexicographically least embedding, or absent.  With `required`, least
// among embeddings whose image includes that member (error if it is not a
// member of f).
std::optional<Embedding> find_embedding(const Family& f, const PosetSpec& p,
                                        Mode mode,
                                        std::optional<Mask> required);

std::optional<Embedding> find_induced(const Family& f, const PosetSpec& p,
                                      std::optional<Mask> required = {});
std::optional<Embedding> find_weak(const Family& f, const PosetSpec& p);

// Existence only; same answer as find_embedding().has_value() but routed
// through the antichain/chain/diamond fast paths when the target matches.
bool contains_copy(const Family& f, const PosetSpec& p, Mode mode,
                   std::optional<Mask> required = {});

// Specialised diamond detector: S strictly below two incomparable middles
// strictly below U.  Any such quadruple is automatically an induced copy.
bool contains_induced_diamond(const Family& f,
                              std::optional<Mask> required = {});

// Length of the longest chain of members (through `required` if given).
int longest_chain(const Family& f, std::optional<Mask> required = {});

}  // namespace satlat
