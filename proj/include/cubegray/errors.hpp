#pragma once

#include <stdexcept>
#include <string>

namespace cubegray {

// Reason codes for rejected constructions and mismatched arguments.
enum class errc {
  zero_dimension,
  letter_out_of_range,      // arc word letter outside [1, 2i-1]
  not_a_signed_permutation, // some value of {-n..-1, 1..n} missing or repeated
  positive_after_negative,  // standard-form condition (1): i must precede -i
  negatives_out_of_order,   // standard-form condition (2): negatives read -1,-2,...,-n
  bad_matching,             // arc endpoints do not partition 1..2n
  dow_letter_count,         // some letter does not occur exactly twice
  dow_not_standard,         // first occurrences not in increasing order
  bad_involution,
  bad_relabeling,           // not a bijection on {1..n}
  dimension_mismatch,
  ordinal_mismatch,         // run ordinal parity disagrees with the prefix
  out_of_range,
  parse_error,
};

// Thrown whenever a refined type would be constructed from data violating
// its invariants.  The code() identifies the violated condition.
class validation_error : public std::invalid_argument {
 public:
  validation_error(errc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace cubegray
