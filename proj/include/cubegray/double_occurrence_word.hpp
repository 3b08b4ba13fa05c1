#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubegray/errors.hpp"

namespace cubegray {

// A word of length 2n over {1..n} in which every letter occurs exactly twice
// and the first occurrences of 1, 2, ..., n appear in increasing order.
class DoubleOccurrenceWord {
 public:
  explicit DoubleOccurrenceWord(std::vector<int> letters) : letters_(std::move(letters)) {
    if (letters_.empty() || letters_.size() % 2 != 0)
      throw validation_error(errc::dow_letter_count,
                             "a double occurrence word has 2n letters, n >= 1");
    n_ = static_cast<int>(letters_.size()) / 2;
    std::vector<int> count(n_ + 1, 0);
    int fresh = 0;  // letters whose first occurrence has been seen
    for (int v : letters_) {
      if (v < 1 || v > n_)
        throw validation_error(errc::dow_letter_count,
                               "letter " + std::to_string(v) + " outside 1.." + std::to_string(n_));
      if (++count[v] > 2)
        throw validation_error(errc::dow_letter_count,
                               "letter " + std::to_string(v) + " occurs more than twice");
      if (count[v] == 1 && v != ++fresh)
        throw validation_error(errc::dow_not_standard,
                               "first occurrences must read 1, 2, ..., n (saw " +
                                   std::to_string(v) + " where " + std::to_string(fresh) +
                                   " was due)");
    }
    // counts are all exactly 2 here: 2n letters, none above 2, n distinct seen
  }

  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }

  bool operator==(const DoubleOccurrenceWord& o) const = default;

 private:
  int n_;
  std::vector<int> letters_;
};

}  // namespace cubegray
