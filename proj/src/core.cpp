#include "signedpat/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace signedpat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::ZeroLetter: return "ZeroLetter";
  case ErrorCode::DuplicateMagnitude: return "DuplicateMagnitude";
  case ErrorCode::MagnitudeOutOfRange: return "MagnitudeOutOfRange";
  case ErrorCode::EqualMagnitudes: return "EqualMagnitudes";
  case ErrorCode::CapExceeded: return "CapExceeded";
  case ErrorCode::NegativeInput: return "NegativeInput";
  case ErrorCode::NonpositiveIndex: return "NonpositiveIndex";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::UnknownId: return "UnknownId";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::SchemaMismatch: return "SchemaMismatch";
  case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

SignedLetter::SignedLetter(int encoded) : encoded_(encoded) {
  if (encoded == 0)
    throw Error(ErrorCode::ZeroLetter, "signed letter cannot be 0");
}

SignedPermutation SignedPermutation::from_letters(std::span<const int> raw) {
  const auto n = raw.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : raw) {
    if (v == 0)
      throw Error(ErrorCode::ZeroLetter, "letter 0 is not allowed");
    const auto m = static_cast<std::size_t>(v < 0 ? -static_cast<long>(v) : v);
    if (m > n)
      throw Error(ErrorCode::MagnitudeOutOfRange,
                  "magnitude " + std::to_string(m) + " outside 1.." + std::to_string(n));
    if (seen[m])
      throw Error(ErrorCode::DuplicateMagnitude, "magnitude " + std::to_string(m) + " repeated");
    seen[m] = true;
  }
  return SignedPermutation(std::vector<int>(raw.begin(), raw.end()));
}

SignedPermutation SignedPermutation::from_trusted(std::vector<int> raw) {
  return SignedPermutation(std::move(raw));
}

std::string SignedPermutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i)
      out += ", ";
    out += std::to_string(letters_[i]);
  }
  return out + "]";
}

SignedPermutation validate_permutation(std::span<const int> raw) {
  return SignedPermutation::from_letters(raw);
}

Pattern Pattern::from_letters(int first, int second) {
  for (int i = 0; i < kCount; ++i)
    if (kTable[static_cast<std::size_t>(i)] == std::pair{first, second})
      return Pattern(i);
  throw Error(ErrorCode::InvalidArgument,
              "(" + std::to_string(first) + ", " + std::to_string(second) + ") is not an element of B_2");
}

std::string Pattern::to_string() const {
  auto [a, b] = letters();
  return std::to_string(a) + " " + std::to_string(b);
}

Pattern pair_pattern(SignedLetter a, SignedLetter b) {
  if (a.magnitude() == b.magnitude())
    throw Error(ErrorCode::EqualMagnitudes, "pair_pattern needs distinct magnitudes");
  return Pattern::from_index(pattern_index(a.barred(), b.barred(), a.magnitude() < b.magnitude()));
}

std::vector<Pattern> PatternSet::patterns() const {
  std::vector<Pattern> out;
  for (int i = 0; i < Pattern::kCount; ++i)
    if ((mask_ >> i) & 1u)
      out.push_back(Pattern::from_index(i));
  return out;
}

ContainmentMask containment_mask(std::span<const int> letters) {
  std::uint8_t mask = 0;
  const auto n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int a = letters[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const int b = letters[j];
      const int ma = a < 0 ? -a : a;
      const int mb = b < 0 ? -b : b;
      mask = static_cast<std::uint8_t>(mask | (1u << pattern_index(a < 0, b < 0, ma < mb)));
    }
  }
  return ContainmentMask(mask);
}

ContainmentMask containment_mask(const SignedPermutation& alpha) {
  return containment_mask(alpha.encoded());
}

bool contains(const SignedPermutation& alpha, Pattern tau) {
  const int n = alpha.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pair_pattern(alpha[i], alpha[j]) == tau)
        return true;
  return false;
}

bool avoids(const SignedPermutation& alpha, PatternSet forbidden) {
  return containment_mask(alpha).disjoint_from(forbidden);
}

void check_n(int n, int cap) {
  if (n < 0)
    throw Error(ErrorCode::NegativeInput, "n must be nonnegative");
  if (n > cap || n > kHardCap)
    throw Error(ErrorCode::CapExceeded,
                "n = " + std::to_string(n) + " exceeds cap " + std::to_string(std::min(cap, kHardCap)));
}

SignedPermutations::iterator::iterator(int n, int first_magnitude)
  : arrangement_(static_cast<std::size_t>(n)),
    sign_limit_(1u << n),
    fixed_first_(first_magnitude > 0),
    done_(false) {
  std::iota(arrangement_.begin(), arrangement_.end(), 1);
  if (fixed_first_) {
    // first_magnitude followed by the remaining magnitudes in ascending order
    std::rotate(arrangement_.begin(), arrangement_.begin() + (first_magnitude - 1),
                arrangement_.begin() + first_magnitude);
  }
  rebuild();
}

void SignedPermutations::iterator::rebuild() {
  std::vector<int> letters(arrangement_);
  for (std::size_t i = 0; i < letters.size(); ++i)
    if ((signs_ >> i) & 1u)
      letters[i] = -letters[i];
  current_ = SignedPermutation::from_trusted(std::move(letters));
}

SignedPermutations::iterator& SignedPermutations::iterator::operator++() {
  if (done_)
    return *this;
  if (++signs_ < sign_limit_) {
    rebuild();
    return *this;
  }
  signs_ = 0;
  const auto first = arrangement_.begin() + (fixed_first_ ? 1 : 0);
  if (first >= arrangement_.end() || !std::next_permutation(first, arrangement_.end())) {
    done_ = true;
    return *this;
  }
  rebuild();
  return *this;
}

SignedPermutations iterate_bn(int n, int cap) {
  check_n(n, cap);
  return SignedPermutations(n, 0);
}

SignedPermutations iterate_bn_partition(int n, int first_magnitude, int cap) {
  check_n(n, cap);
  if (first_magnitude < 1 || first_magnitude > n)
    throw Error(ErrorCode::InvalidArgument, "first magnitude must lie in 1..n");
  return SignedPermutations(n, first_magnitude);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Pattern parse_pattern(std::string_view item) {
  std::vector<int> values;
  std::string_view rest = trim(item);
  while (!rest.empty()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc())
      throw Error(ErrorCode::ParseError, "cannot parse pattern '" + std::string(item) + "'");
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty() && !std::isspace(static_cast<unsigned char>(rest.front())))
      throw Error(ErrorCode::ParseError, "unexpected character in pattern '" + std::string(item) + "'");
    rest = trim(rest);
    values.push_back(v);
  }
  if (values.size() != 2)
    throw Error(ErrorCode::ParseError, "pattern '" + std::string(trim(item)) + "' must have two letters");
  const int a = values[0] < 0 ? -values[0] : values[0];
  const int b = values[1] < 0 ? -values[1] : values[1];
  if (!((a == 1 && b == 2) || (a == 2 && b == 1)))
    throw Error(ErrorCode::ParseError, "pattern '" + std::string(trim(item)) + "' must use magnitudes 1 and 2");
  return Pattern::from_letters(values[0], values[1]);
}

} // namespace

ParsedPatternSet parse_pattern_set(std::string_view text) {
  ParsedPatternSet out;
  if (trim(text).empty())
    return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const Pattern p = parse_pattern(item);
    if (out.set.contains(p))
      out.warnings.push_back("duplicate pattern '" + p.to_string() + "' ignored");
    out.set.insert(p);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

std::string format_pattern_set(PatternSet set) {
  std::string out;
  for (Pattern p : set.patterns()) {
    if (!out.empty())
      out += ", ";
    out += p.to_string();
  }
  return out;
}

} // namespace signedpat
