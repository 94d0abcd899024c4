#include "bnested/core.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace bnested {

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '(' << iv.lo << ".." << iv.hi << ')';
}

Permutation::Permutation(std::vector<int> elements) : elements_(std::move(elements)) {
  const int n = size();
  positions_.assign(n + 1, -1);
  for (int p = 0; p < n; ++p) {
    const int v = elements_[p];
    if (v < 1 || v > n || positions_[v] != -1) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": label " +
                                  std::to_string(v));
    }
    positions_[v] = p;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return Permutation(std::move(e));
}

SignedPermutation::SignedPermutation(Permutation perm, std::vector<Sign> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != perm_.size()) {
    throw std::invalid_argument("sign vector length differs from permutation length");
  }
}

SignedPermutation::SignedPermutation(Permutation perm)
    : perm_(std::move(perm)), signs_(perm_.size(), Sign::Plus) {}

PermutationSet::PermutationSet(std::vector<SignedPermutation> perms,
                               std::vector<std::optional<std::int64_t>> original, bool has_signs)
    : has_signs_(has_signs), perms_(std::move(perms)), original_(std::move(original)) {
  if (perms_.empty()) throw InputError(InputError::Kind::Empty, 0, 0, "no permutations");
  n_ = perms_[0].size();
  for (int k = 0; k < static_cast<int>(perms_.size()); ++k) {
    if (perms_[k].size() != n_) {
      throw InputError(InputError::Kind::LengthMismatch, k, perms_[k].size(), "length mismatch");
    }
  }
  for (int p = 0; p < n_; ++p) {
    if (perms_[0].at(p) != p + 1 || perms_[0].sign_at(p) != Sign::Plus) {
      throw std::invalid_argument("first permutation of a PermutationSet must be the identity");
    }
  }
  if (original_.empty()) {
    original_.resize(n_ + 1);
    for (int v = 1; v <= n_; ++v) original_[v] = v;
  }
  if (static_cast<int>(original_.size()) != n_ + 1) {
    throw std::invalid_argument("relabeling table has wrong size");
  }
  for (int v = 1; v <= n_; ++v) {
    if (original_[v]) renumbered_.emplace(*original_[v], v);
  }
}

std::optional<int> PermutationSet::renumbered_label(std::int64_t original) const {
  auto it = renumbered_.find(original);
  if (it == renumbered_.end()) return std::nullopt;
  return it->second;
}

std::vector<RawSequence> PermutationSet::to_raw() const {
  std::vector<RawSequence> out;
  out.reserve(perms_.size());
  for (const auto& p : perms_) {
    RawSequence seq(n_);
    for (int i = 0; i < n_; ++i) seq[i] = {p.at(i), p.sign_at(i)};
    out.push_back(std::move(seq));
  }
  return out;
}

PermutationSet normalize(std::span<const RawSequence> raw) {
  using Kind = InputError::Kind;
  if (raw.empty() || raw[0].empty()) throw InputError(Kind::Empty, 0, 0, "no permutations");
  const int n = static_cast<int>(raw[0].size());

  std::unordered_map<std::int64_t, int> index;  // original label -> renumbered label
  index.reserve(n * 2);
  std::vector<std::optional<std::int64_t>> original(n + 1);
  std::vector<Sign> base_sign(n + 1, Sign::Plus);
  bool has_signs = false;
  for (int p = 0; p < n; ++p) {
    const auto& e = raw[0][p];
    if (!index.emplace(e.label, p + 1).second) {
      throw InputError(Kind::DuplicateElement, 0, e.label,
                       "permutation 0: duplicate element " + std::to_string(e.label));
    }
    original[p + 1] = e.label;
    base_sign[p + 1] = e.sign;
    has_signs |= e.sign == Sign::Minus;
  }

  std::vector<SignedPermutation> perms;
  perms.reserve(raw.size());
  perms.emplace_back(Permutation::identity(n));
  std::vector<char> seen(n + 1);
  for (int k = 1; k < static_cast<int>(raw.size()); ++k) {
    const auto& seq = raw[k];
    if (static_cast<int>(seq.size()) != n) {
      throw InputError(Kind::LengthMismatch, k, static_cast<std::int64_t>(seq.size()),
                       "permutation " + std::to_string(k) + ": length " + std::to_string(seq.size()) +
                           ", expected " + std::to_string(n));
    }
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> elems(n);
    std::vector<Sign> signs(n);
    for (int p = 0; p < n; ++p) {
      auto it = index.find(seq[p].label);
      if (it == index.end() || seen[it->second]) {
        throw InputError(Kind::NotAPermutation, k, seq[p].label,
                         "permutation " + std::to_string(k) + ": label " + std::to_string(seq[p].label) +
                             (it == index.end() ? " does not occur in permutation 0" : " repeated"));
      }
      seen[it->second] = 1;
      elems[p] = it->second;
      signs[p] = seq[p].sign * base_sign[it->second];
      has_signs |= seq[p].sign == Sign::Minus;
    }
    perms.emplace_back(Permutation(std::move(elems)), std::move(signs));
  }
  return PermutationSet(std::move(perms), std::move(original), has_signs);
}

std::vector<RawSequence> from_signed_ints(const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<RawSequence> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    RawSequence seq;
    seq.reserve(row.size());
    for (auto v : row) seq.push_back({v < 0 ? -v : v, v < 0 ? Sign::Minus : Sign::Plus});
    out.push_back(std::move(seq));
  }
  return out;
}

void validate_conserved_frame(const PermutationSet& set) {
  const int n = set.n();
  for (int k = 0; k < set.k(); ++k) {
    const auto& p = set[k];
    if (p.signed_at(0) != 1) {
      throw InputError(InputError::Kind::BadFrame, k, p.signed_at(0),
                       "permutation " + std::to_string(k) + ": left end is " + std::to_string(p.signed_at(0)) +
                           ", expected +1");
    }
    if (p.signed_at(n - 1) != n) {
      throw InputError(InputError::Kind::BadFrame, k, p.signed_at(n - 1),
                       "permutation " + std::to_string(k) + ": right end is " +
                           std::to_string(p.signed_at(n - 1)) + ", expected +" + std::to_string(n));
    }
  }
}

PermutationSet add_sentinels(const PermutationSet& set) {
  const int n = set.n();
  std::vector<SignedPermutation> perms;
  perms.reserve(set.k());
  for (const auto& p : set.perms()) {
    std::vector<int> elems(n + 2);
    std::vector<Sign> signs(n + 2, Sign::Plus);
    elems[0] = 1;
    elems[n + 1] = n + 2;
    for (int i = 0; i < n; ++i) {
      elems[i + 1] = p.at(i) + 1;
      signs[i + 1] = p.sign_at(i);
    }
    perms.emplace_back(Permutation(std::move(elems)), std::move(signs));
  }
  std::vector<std::optional<std::int64_t>> original(n + 3);
  for (int v = 1; v <= n; ++v) original[v + 1] = set.original_label(v);
  return PermutationSet(std::move(perms), std::move(original), set.has_signs());
}

PermutationSet prepare_conserved(const PermutationSet& set, bool frame) {
  if (frame) return add_sentinels(set);
  validate_conserved_frame(set);
  return set;
}

namespace {

// Position span of labels lo..hi in one permutation.
std::pair<int, int> span_of(const SignedPermutation& p, Interval iv) {
  int lo = p.position(iv.lo);
  int hi = lo;
  for (int v = iv.lo + 1; v <= iv.hi; ++v) {
    const int q = p.position(v);
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  return {lo, hi};
}

}  // namespace

bool is_common_interval(const PermutationSet& set, Interval iv) {
  if (iv.lo < 1 || iv.hi > set.n() || iv.lo > iv.hi) throw std::out_of_range("interval out of range");
  for (const auto& p : set.perms()) {
    auto [lo, hi] = span_of(p, iv);
    if (hi - lo + 1 != iv.size()) return false;
  }
  return true;
}

bool is_conserved_interval(const PermutationSet& set, Interval iv) {
  if (iv.size() == 1) return iv.lo >= 1 && iv.hi <= set.n();
  if (!is_common_interval(set, iv)) return false;
  for (const auto& p : set.perms()) {
    auto [lo, hi] = span_of(p, iv);
    const int left = p.signed_at(lo);
    const int right = p.signed_at(hi);
    const bool forward = left == iv.lo && right == iv.hi;
    const bool backward = left == -iv.hi && right == -iv.lo;
    if (!forward && !backward) return false;
  }
  return true;
}

std::vector<RawSequence> parse_permutations(std::istream& in) {
  std::vector<RawSequence> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    RawSequence seq;
    while (tokens >> tok) {
      RawElement e;
      std::string_view digits = tok;
      if (digits.front() == '-' || digits.front() == '+') {
        e.sign = digits.front() == '-' ? Sign::Minus : Sign::Plus;
        digits.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e.label);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
      seq.push_back(e);
    }
    out.push_back(std::move(seq));
  }
  if (out.empty()) throw InputError(InputError::Kind::Empty, 0, 0, "no permutations in input");
  return out;
}

void write_permutations(std::ostream& os, const PermutationSet& set, bool with_signs) {
  for (const auto& p : set.perms()) {
    for (int i = 0; i < p.size(); ++i) {
      if (i) os << ' ';
      os << (with_signs ? p.signed_at(i) : p.at(i));
    }
    os << '\n';
  }
}

}  // namespace bnested
