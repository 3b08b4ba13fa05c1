#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubegray/errors.hpp"

namespace cubegray {

// The letter sequence a_1 ... a_n with 1 <= a_i <= 2i-1.  Letter a_i records
// where the left endpoint of the i-th arc sits once all later arcs are
// removed from the diagram, so every in-bounds sequence is a valid word and
// the words of length n are in bijection with the standard permutations.
class ArcWord {
 public:
  explicit ArcWord(std::vector<int> letters) : letters_(std::move(letters)) {
    if (letters_.empty())
      throw validation_error(errc::zero_dimension, "an arc word has at least one letter");
    for (size_t i = 0; i < letters_.size(); ++i) {
      const int bound = 2 * static_cast<int>(i + 1) - 1;
      if (letters_[i] < 1 || letters_[i] > bound)
        throw validation_error(errc::letter_out_of_range,
                               "letter a_" + std::to_string(i + 1) + " = " +
                                   std::to_string(letters_[i]) + " outside [1, " +
                                   std::to_string(bound) + "]");
    }
  }

  int n() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }

  // 1-based letter access: letter(i) = a_i.
  int letter(int i) const { return letters_[static_cast<size_t>(i) - 1]; }

  // a_1 ... a_{n-1}; requires n >= 2.
  ArcWord truncated() const {
    if (n() < 2)
      throw validation_error(errc::out_of_range, "cannot truncate a one-letter word");
    return ArcWord(std::vector<int>(letters_.begin(), letters_.end() - 1));
  }

  bool operator==(const ArcWord& o) const = default;

 private:
  std::vector<int> letters_;
};

}  // namespace cubegray
