#include "signedpat/formulas.hpp"

#include <array>
#include <map>
#include <mutex>

namespace signedpat {

namespace {

struct IdName {
  FormulaId id;
  std::string_view name;
};

constexpr std::array<IdName, 37> kIdNames{{
  {FormulaId::EQ1, "EQ1"}, {FormulaId::EQ2, "EQ2"}, {FormulaId::EQ3, "EQ3"}, {FormulaId::EQ4, "EQ4"},
  {FormulaId::EQ5, "EQ5"}, {FormulaId::EQ6, "EQ6"}, {FormulaId::EQ7, "EQ7"}, {FormulaId::EQ8, "EQ8"},
  {FormulaId::EQ9, "EQ9"}, {FormulaId::EQ10, "EQ10"}, {FormulaId::EQ11, "EQ11"}, {FormulaId::EQ12, "EQ12"},
  {FormulaId::EQ13, "EQ13"}, {FormulaId::EQ13A, "EQ13A"},
  {FormulaId::TH4_1, "TH4_1"}, {FormulaId::TH4_2, "TH4_2"}, {FormulaId::TH4_3, "TH4_3"},
  {FormulaId::TH4_4, "TH4_4"}, {FormulaId::TH4_5, "TH4_5"}, {FormulaId::TH4_6, "TH4_6"},
  {FormulaId::TH4_7, "TH4_7"},
  {FormulaId::TH5_1, "TH5_1"}, {FormulaId::TH5_2, "TH5_2"}, {FormulaId::TH5_3, "TH5_3"},
  {FormulaId::TH5_4, "TH5_4"}, {FormulaId::TH5_5, "TH5_5"},
  {FormulaId::TH6_1, "TH6_1"}, {FormulaId::TH6_2, "TH6_2"}, {FormulaId::TH6_3, "TH6_3"},
  {FormulaId::TH7_1, "TH7_1"}, {FormulaId::TH7_2, "TH7_2"},
  {FormulaId::COR_EXTU1, "COR_EXTU1"}, {FormulaId::COR_EXTU2, "COR_EXTU2"},
  {FormulaId::COR_EXTU3, "COR_EXTU3"}, {FormulaId::COR_EXTU4, "COR_EXTU4"},
  {FormulaId::COR_EXTU5, "COR_EXTU5"},
  {FormulaId::EMPTYSET, "EMPTYSET"},
}};

void require_nonnegative(long m, const char* what) {
  if (m < 0)
    throw Error(ErrorCode::NegativeInput, std::string(what) + " requires a nonnegative argument");
}

BigInt pow2(long e) {
  BigInt out = 1;
  out <<= static_cast<unsigned>(e);
  return out;
}

// n! * sum_{j=0}^{n} 1/j!  ==  sum_{j=0}^{n} n!/j!
BigInt sum_falling_tails(int n) {
  BigInt sum = 0;
  BigInt term = 1; // n!/n!
  for (int j = n; j >= 0; --j) {
    sum += term;
    term *= j;
  }
  return sum;
}

// sum_{j=0}^{m} j! (m-j)!
BigInt factorial_pair_sum(int m) {
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j)
    sum += factorial(j) * factorial(m - j);
  return sum;
}

BigInt eq4_recurrence(int n) {
  // b_n = n b_{n-1} + sum_{i=0}^{n-1} C(n-1, i) i!,  b_0 = 1
  BigInt b = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt tail = 0;
    for (int i = 0; i < k; ++i)
      tail += binomial(k - 1, i) * factorial(i);
    b = k * b + tail;
  }
  return b;
}

BigInt eq6_value(int n) {
  BigInt sum = 0;
  for (int d = 0; d <= n; ++d)
    sum += weak_compositions_sum(n - d, d + 1);
  return sum;
}

} // namespace

const std::vector<FormulaId>& all_formula_ids() {
  static const std::vector<FormulaId> ids = [] {
    std::vector<FormulaId> out;
    for (const IdName& e : kIdNames)
      out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(FormulaId id) {
  for (const IdName& e : kIdNames)
    if (e.id == id)
      return e.name;
  throw Error(ErrorCode::UnknownId, "unknown formula id");
}

FormulaId parse_formula_id(std::string_view text) {
  for (const IdName& e : kIdNames)
    if (e.name == text)
      return e.id;
  throw Error(ErrorCode::UnknownId, "unknown formula id '" + std::string(text) + "'");
}

BigInt factorial(long m) {
  require_nonnegative(m, "factorial");
  BigInt out = 1;
  for (long i = 2; i <= m; ++i)
    out *= i;
  return out;
}

BigInt binomial(long m, long k) {
  require_nonnegative(m, "binomial");
  require_nonnegative(k, "binomial");
  if (k > m)
    return 0;
  k = std::min(k, m - k);
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= m - k + i;
    out /= i;
  }
  return out;
}

BigInt catalan(long m) {
  require_nonnegative(m, "catalan");
  static std::mutex lock;
  static std::vector<BigInt> memo{1};
  std::lock_guard guard(lock);
  while (static_cast<long>(memo.size()) <= m) {
    const std::size_t k = memo.size();
    BigInt next = 0;
    for (std::size_t j = 0; j < k; ++j)
      next += memo[j] * memo[k - 1 - j];
    memo.push_back(next);
  }
  return memo[static_cast<std::size_t>(m)];
}

BigInt fibonacci(long m) {
  if (m < 1)
    throw Error(ErrorCode::NonpositiveIndex, "fibonacci index starts at 1");
  BigInt a = 1, b = 1;
  for (long i = 2; i < m; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return m <= 2 ? BigInt(1) : b;
}

BigInt compositions_sum(long n, long min_part) {
  require_nonnegative(n, "compositions_sum");
  if (min_part < 1)
    throw Error(ErrorCode::InvalidArgument, "compositions_sum needs min_part >= 1");
  // total[k] = sum over compositions of k
  std::vector<BigInt> total(static_cast<std::size_t>(n + 1));
  total[0] = 1;
  for (long k = 1; k <= n; ++k)
    for (long last = min_part; last <= k; ++last)
      total[static_cast<std::size_t>(k)] += factorial(last) * total[static_cast<std::size_t>(k - last)];
  return total[static_cast<std::size_t>(n)];
}

BigInt weak_compositions_sum(long total, long parts) {
  require_nonnegative(total, "weak_compositions_sum");
  require_nonnegative(parts, "weak_compositions_sum");
  // row[k] = sum over weak compositions of k into the parts seen so far
  std::vector<BigInt> row(static_cast<std::size_t>(total + 1));
  row[0] = 1;
  for (long p = 0; p < parts; ++p) {
    std::vector<BigInt> next(row.size());
    for (long k = 0; k <= total; ++k)
      for (long last = 0; last <= k; ++last)
        next[static_cast<std::size_t>(k)] += factorial(last) * row[static_cast<std::size_t>(k - last)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(total)];
}

BigInt eval_formula(FormulaId id, int n) {
  require_nonnegative(n, "eval_formula");
  switch (id) {
  case FormulaId::EQ1: {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) {
      const BigInt c = binomial(n, k);
      sum += c * c * factorial(k);
    }
    return sum;
  }
  case FormulaId::EQ2: return factorial(n + 1);
  case FormulaId::EQ3: return binomial(2L * n, n);
  case FormulaId::EQ4: return eq4_recurrence(n);
  case FormulaId::EQ5: return n == 0 ? BigInt(1) : 2 * compositions_sum(n, 1);
  case FormulaId::EQ6: return eq6_value(n);
  case FormulaId::EQ7: return catalan(n + 1);
  case FormulaId::EQ8: {
    const BigInt f = factorial(n);
    BigInt sum = f;
    for (int j = 1; j <= n; ++j)
      sum += f / j;
    return sum;
  }
  case FormulaId::EQ9: return sum_falling_tails(n);
  case FormulaId::EQ10: return fibonacci(2L * n + 1);
  case FormulaId::EQ11: return BigInt(n) * n + 1;
  case FormulaId::EQ12: return pow2(n + 1) - (n + 1);
  case FormulaId::EQ13: {
    BigInt sum = factorial(n);
    for (int j = 1; j <= n; ++j)
      sum += factorial_pair_sum(n - j);
    return sum;
  }
  case FormulaId::EQ13A: return factorial_pair_sum(n);

  case FormulaId::TH4_1: return 0;
  case FormulaId::TH4_2: return BigInt(2 * n);
  case FormulaId::TH4_3: return 1 + binomial(n + 1, 2);
  case FormulaId::TH4_4: return pow2(n);
  case FormulaId::TH4_5: return 2 * factorial(n);
  case FormulaId::TH4_6: {
    BigInt sum = 0;
    for (int j = 0; j <= n; ++j)
      sum += factorial(j);
    return sum;
  }
  // n! + sum_{j=0}^{n-1} j!(n-1-j)!: all letters barred, or exactly one unbarred
  case FormulaId::TH4_7: return n == 0 ? BigInt(1) : factorial(n) + factorial_pair_sum(n - 1);

  case FormulaId::TH5_1: return 0;
  case FormulaId::TH5_2: return 3;
  case FormulaId::TH5_3: return BigInt(n + 1);
  case FormulaId::TH5_4: return 1 + factorial(n);
  // (n+1)(n-1)!, with (n-1)! undefined at n = 0 we return b_0 = 1 there
  case FormulaId::TH5_5: return n == 0 ? BigInt(1) : (n + 1) * factorial(n - 1);

  case FormulaId::TH6_1: return 0;
  case FormulaId::TH6_2: return 2;
  case FormulaId::TH6_3: return factorial(n);

  case FormulaId::TH7_1: return 0;
  case FormulaId::TH7_2: return 1;

  case FormulaId::COR_EXTU1: return BigInt(2 * n);
  case FormulaId::COR_EXTU2: return pow2(n);
  case FormulaId::COR_EXTU3: return 1 + binomial(n + 1, 2);
  case FormulaId::COR_EXTU4: return 2 * factorial(n);
  case FormulaId::COR_EXTU5: return pow2(n);

  case FormulaId::EMPTYSET: return pow2(n) * factorial(n);
  }
  throw Error(ErrorCode::UnknownId, "unknown formula id");
}

std::optional<Rational> eval_rational_form(FormulaId id, int n) {
  require_nonnegative(n, "eval_rational_form");
  const Rational f(factorial(n));
  switch (id) {
  case FormulaId::EQ4: {
    // n! + n! sum_{i=1}^{n} (1/i) sum_{j=0}^{i-1} 1/j!
    Rational outer = 0;
    for (int i = 1; i <= n; ++i) {
      Rational inner = 0;
      for (int j = 0; j < i; ++j)
        inner += Rational(1, factorial(j));
      outer += inner / i;
    }
    return f + f * outer;
  }
  case FormulaId::EQ8: {
    Rational harmonic = 0;
    for (int j = 1; j <= n; ++j)
      harmonic += Rational(1, j);
    return f + f * harmonic;
  }
  case FormulaId::EQ9: {
    Rational e_partial = 0;
    for (int j = 0; j <= n; ++j)
      e_partial += Rational(1, factorial(j));
    return f * e_partial;
  }
  case FormulaId::EQ13A: {
    Rational inverse_binomials = 0;
    for (int j = 0; j <= n; ++j)
      inverse_binomials += Rational(1, binomial(n, j));
    return f * inverse_binomials;
  }
  default: return std::nullopt;
  }
}

PatternSet pattern_set(std::span<const std::string_view> tokens) {
  PatternSet out;
  for (std::string_view token : tokens) {
    int letters[2];
    int count = 0;
    bool bar = false;
    for (char c : token) {
      if (c == '-') {
        bar = true;
        continue;
      }
      if (c < '1' || c > '2' || count == 2)
        throw Error(ErrorCode::ParseError, "bad pattern token '" + std::string(token) + "'");
      letters[count++] = bar ? -(c - '0') : c - '0';
      bar = false;
    }
    if (count != 2)
      throw Error(ErrorCode::ParseError, "bad pattern token '" + std::string(token) + "'");
    out.insert(Pattern::from_letters(letters[0], letters[1]));
  }
  return out;
}

} // namespace signedpat
