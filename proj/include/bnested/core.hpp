#pragma once

// Permutation and interval primitives shared by every other module.
//
// All labels handed out by this library live in the renumbered space where
// the first permutation is the identity, so an interval of the family is
// always a range (lo..hi) of labels.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bnested {

/// Closed range of labels (lo..hi), 1-based.
struct Interval {
  int lo = 1;
  int hi = 1;

  constexpr int size() const { return hi - lo + 1; }
  constexpr bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  constexpr bool strictly_contains(const Interval& o) const { return contains(o) && o != *this; }
  constexpr bool overlaps(const Interval& o) const {
    return (lo < o.lo && o.lo <= hi && hi < o.hi) || (o.lo < lo && lo <= o.hi && o.hi < hi);
  }

  constexpr auto operator<=>(const Interval&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<std::int8_t>(a) == static_cast<std::int8_t>(b) ? Sign::Plus : Sign::Minus;
}

/// Output filter: whether unit intervals are reported.
enum class MinSize : int { One = 1, Two = 2 };

class InputError : public std::runtime_error {
 public:
  enum class Kind { Empty, DuplicateElement, LengthMismatch, NotAPermutation, BadFrame };

  InputError(Kind kind, int perm_index, std::int64_t label, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind), perm_(perm_index), label_(label) {}

  Kind kind() const { return kind_; }
  int perm_index() const { return perm_; }
  std::int64_t label() const { return label_; }

 private:
  Kind kind_;
  int perm_;
  std::int64_t label_;
};

/// Bijection on {1..n}. Positions are 0-based.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `elements` is a permutation of 1..n.
  explicit Permutation(std::vector<int> elements);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(elements_.size()); }
  int at(int pos) const { return elements_[pos]; }
  int position(int label) const { return positions_[label]; }
  std::span<const int> elements() const { return elements_; }
  std::span<const int> positions() const { return positions_; }

  bool operator==(const Permutation& o) const { return elements_ == o.elements_; }

 private:
  std::vector<int> elements_;
  std::vector<int> positions_;  // indexed by label, slot 0 unused
};

class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(Permutation perm, std::vector<Sign> signs);
  explicit SignedPermutation(Permutation perm);  // all positive

  int size() const { return perm_.size(); }
  const Permutation& unsigned_perm() const { return perm_; }
  int at(int pos) const { return perm_.at(pos); }
  int position(int label) const { return perm_.position(label); }
  Sign sign_at(int pos) const { return signs_[pos]; }
  Sign sign_of(int label) const { return signs_[perm_.position(label)]; }
  /// Label times sign, e.g. -3.
  int signed_at(int pos) const { return sign_at(pos) == Sign::Plus ? at(pos) : -at(pos); }

  bool operator==(const SignedPermutation&) const = default;

 private:
  Permutation perm_;
  std::vector<Sign> signs_;  // indexed by position
};

/// One element of an input sequence, before renumbering.
struct RawElement {
  std::int64_t label = 0;
  Sign sign = Sign::Plus;
  bool operator==(const RawElement&) const = default;
};
using RawSequence = std::vector<RawElement>;

/// K permutations over {1..n}, the first being the identity.
///
/// Unsigned inputs are stored with all signs positive. `original_label(v)`
/// maps a renumbered label back to the caller's label; sentinels added by
/// `add_sentinels` have no original label.
class PermutationSet {
 public:
  PermutationSet() = default;
  /// Takes already-renumbered permutations; perms[0] must be the identity.
  PermutationSet(std::vector<SignedPermutation> perms, std::vector<std::optional<std::int64_t>> original,
                 bool has_signs);

  int n() const { return n_; }
  int k() const { return static_cast<int>(perms_.size()); }
  bool has_signs() const { return has_signs_; }
  const SignedPermutation& operator[](int i) const { return perms_[i]; }
  std::span<const SignedPermutation> perms() const { return perms_; }

  std::optional<std::int64_t> original_label(int label) const { return original_[label]; }
  std::optional<int> renumbered_label(std::int64_t original) const;

  /// Back to raw sequences in renumbered labels (useful for round trips).
  std::vector<RawSequence> to_raw() const;

 private:
  int n_ = 0;
  bool has_signs_ = false;
  std::vector<SignedPermutation> perms_;
  std::vector<std::optional<std::int64_t>> original_;  // indexed by renumbered label
  std::unordered_map<std::int64_t, int> renumbered_;
};

/// Renumbers so that the first sequence becomes the identity. The sign of a
/// renumbered element is its sign in P_k times its sign in P_1.
PermutationSet normalize(std::span<const RawSequence> raw);

/// Convenience: integers whose sign is the element sign (0 counts as positive).
std::vector<RawSequence> from_signed_ints(const std::vector<std::vector<std::int64_t>>& rows);

/// Throws InputError(BadFrame) unless every permutation starts with +1 and ends with +n.
void validate_conserved_frame(const PermutationSet& set);

/// Wraps every permutation in +0 ... +(n+1) and relabels to {1..n+2}.
PermutationSet add_sentinels(const PermutationSet& set);

/// validate_conserved_frame, or add_sentinels when `frame` is set.
PermutationSet prepare_conserved(const PermutationSet& set, bool frame);

bool is_common_interval(const PermutationSet& set, Interval iv);
bool is_conserved_interval(const PermutationSet& set, Interval iv);

/// Text format: one permutation per line, whitespace separated integers,
/// optional leading '-' for a negative sign, '#' comments and blank lines
/// ignored. Throws InputError(Empty) when no permutation is present and
/// std::invalid_argument on malformed tokens.
std::vector<RawSequence> parse_permutations(std::istream& in);
void write_permutations(std::ostream& os, const PermutationSet& set, bool with_signs);

}  // namespace bnested
