#include "signedpat/formulas.hpp"
#include "signedpat/symmetry.hpp"

namespace signedpat {

namespace {

using F = FormulaId;

RegistryEntry entry(std::string name, PatternSet set, FormulaId formula, int min_n, std::string citation,
                    std::string note = {}) {
  return {std::move(name), set, canonical_representative(set), formula, min_n, std::move(citation), std::move(note)};
}

// Named 3-sets.
const PatternSet T1 = pattern_set({"12", "1-2", "-12"});
const PatternSet T2 = pattern_set({"12", "1-2", "-1-2"});
const PatternSet T3 = pattern_set({"12", "1-2", "21"});
const PatternSet T4 = pattern_set({"12", "1-2", "2-1"});
const PatternSet T5 = pattern_set({"12", "1-2", "-21"});
const PatternSet T6 = pattern_set({"12", "1-2", "-2-1"});
const PatternSet T7 = pattern_set({"12", "-1-2", "21"});
const PatternSet T8 = pattern_set({"12", "-1-2", "2-1"});
const PatternSet T9 = pattern_set({"12", "2-1", "-21"});
const PatternSet T10 = pattern_set({"1-2", "-12", "2-1"});

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> r;

  r.push_back(entry("{}", PatternSet(), F::EMPTYSET, 0, "|B_n| = 2^n n!"));

  r.push_back(entry("{12}", pattern_set({"12"}), F::EQ1, 0, "b_n(12) = sum_k C(n,k)^2 k!"));
  r.push_back(entry("{1-2}", pattern_set({"1-2"}), F::EQ1, 0, "b_n(1-2) = sum_k C(n,k)^2 k!"));

  r.push_back(entry("{12,21}", pattern_set({"12", "21"}), F::EQ2, 0, "(n+1)!"));
  r.push_back(entry("{12,1-2}", pattern_set({"12", "1-2"}), F::EQ2, 0, "(n+1)!"));
  r.push_back(entry("{2-1,1-2}", pattern_set({"2-1", "1-2"}), F::EQ2, 0, "(n+1)!"));
  r.push_back(entry("{2-1,-12}", pattern_set({"2-1", "-12"}), F::EQ2, 0, "(n+1)!"));
  r.push_back(entry("{12,-1-2}", pattern_set({"12", "-1-2"}), F::EQ3, 0, "C(2n,n)"));
  r.push_back(entry("{12,-2-1}", pattern_set({"12", "-2-1"}), F::EQ3, 0, "C(2n,n)"));
  r.push_back(entry("{12,-21}", pattern_set({"12", "-21"}), F::EQ4, 0,
                    "b_n = n b_{n-1} + sum_{i<n} C(n-1,i) i!"));
  r.push_back(entry("{1-2,-12}", pattern_set({"1-2", "-12"}), F::EQ5, 0,
                    "2 sum over compositions of n of prod i_j!"));

  r.push_back(entry("T_1", T1, F::EQ6, 0, "sum_d sum_{i_0+..+i_d=n-d} prod i_j!"));
  r.push_back(entry("T_2", T2, F::EQ7, 0, "C_{n+1}"));
  r.push_back(entry("T_3", T3, F::EQ8, 0, "n! + n! sum_{j=1}^n 1/j"));
  r.push_back(entry("T_4", T4, F::EQ9, 0, "n! sum_{j=0}^n 1/j!"));
  r.push_back(entry("T_5", T5, F::EQ9, 0, "n! sum_{j=0}^n 1/j!"));
  r.push_back(entry("T_6", T6, F::EQ10, 0, "F_{2n+1}"));
  r.push_back(entry("T_7", T7, F::EQ11, 0, "n^2 + 1"));
  r.push_back(entry("T_8", T8, F::EQ12, 0, "2^{n+1} - (n+1)"));
  r.push_back(entry("T_9", T9, F::EQ13, 0, "n! + sum_{j=1}^n sum_{p+q=n-j} p! q!"));
  r.push_back(entry("T_10", T10, F::EQ13A, 0, "n! sum_{j=0}^n C(n,j)^{-1}",
                    "also labelled b_n(T_9); its derivation and enumeration bind it to T_10"));

  r.push_back(entry("T_8+{21}", T8 | pattern_set({"21"}), F::COR_EXTU1, 1, "2n"));
  r.push_back(entry("T_8+{-21}", T8 | pattern_set({"-21"}), F::COR_EXTU1, 1, "2n"));
  r.push_back(entry("T_1+{-1-2}", T1 | pattern_set({"-1-2"}), F::COR_EXTU2, 0, "2^n"));
  r.push_back(entry("T_1+{-2-1}", T1 | pattern_set({"-2-1"}), F::COR_EXTU3, 2, "1 + C(n+1,2)",
                    "second clause of the T_1 corollary; shares the 1 + C(n+1,2) evaluator"));
  r.push_back(entry("T_3+{-1-2}", T3 | pattern_set({"-1-2"}), F::COR_EXTU3, 0, "1 + C(n+1,2)"));
  r.push_back(entry("T_4+{-1-2}", T4 | pattern_set({"-1-2"}), F::COR_EXTU5, 1, "2^n",
                    "2^n clause of the T_4 corollary; shares the 2^n evaluator"));
  r.push_back(entry("T_4+{-2-1}", T4 | pattern_set({"-2-1"}), F::COR_EXTU5, 1, "2^n",
                    "2^n clause of the T_4 corollary; shares the 2^n evaluator"));
  r.push_back(entry("T_4+{21}", T4 | pattern_set({"21"}), F::COR_EXTU4, 1, "2 n!"));
  r.push_back(entry("T_5+{-2-1}", T5 | pattern_set({"-2-1"}), F::COR_EXTU5, 0, "2^n"));

  struct Named {
    const char* name;
    std::vector<std::string_view> tokens;
    FormulaId formula;
  };
  const Named four[] = {
    {"U4_1", {"12", "1-2", "-12", "-1-2"}, F::TH4_4},
    {"U4_2", {"12", "1-2", "-12", "21"}, F::TH4_7},
    {"U4_3", {"12", "1-2", "-12", "2-1"}, F::TH4_6},
    {"U4_4", {"12", "1-2", "-12", "-2-1"}, F::TH4_3},
    {"U4_5", {"12", "1-2", "-1-2", "21"}, F::TH4_3},
    {"U4_6", {"12", "1-2", "-1-2", "2-1"}, F::TH4_4},
    {"U4_7", {"12", "1-2", "-1-2", "-21"}, F::TH4_4},
    {"U4_8", {"12", "1-2", "21", "2-1"}, F::TH4_5},
    {"U4_9", {"12", "1-2", "21", "-21"}, F::TH4_5},
    {"U4_10", {"12", "1-2", "21", "-2-1"}, F::TH4_2},
    {"U4_11", {"12", "1-2", "2-1", "-21"}, F::TH4_6},
    {"U4_12", {"12", "1-2", "2-1", "-2-1"}, F::TH4_4},
    {"U4_13", {"12", "1-2", "-21", "-2-1"}, F::TH4_4},
    {"U4_14", {"12", "-1-2", "21", "-2-1"}, F::TH4_1},
    {"U4_15", {"12", "-1-2", "2-1", "-21"}, F::TH4_2},
    {"U4_16", {"1-2", "-12", "2-1", "-21"}, F::TH4_5},
  };
  for (const Named& u : four) {
    std::string citation;
    std::string note;
    switch (u.formula) {
    case F::TH4_1: citation = "0"; break;
    case F::TH4_2: citation = "2n"; break;
    case F::TH4_3: citation = "1 + C(n+1,2)"; break;
    case F::TH4_4: citation = "2^n"; break;
    case F::TH4_5: citation = "2 n!"; break;
    case F::TH4_6: citation = "sum_{j=0}^n j!"; break;
    default:
      citation = "n! + sum_{j=0}^{n-1} j!(n-1-j)!";
      note = "printed as n!(1 + sum_{j<n} j!(n-1-j)!); the derivation counts n! + sum_{i=1}^n (n-i)!(i-1)!, "
             "which enumeration confirms";
    }
    r.push_back(entry(u.name, pattern_set(u.tokens), u.formula, 3, citation, note));
  }

  const Named five[] = {
    {"W_1", {"12", "1-2", "-12", "-1-2", "21"}, F::TH5_3},
    {"W_2", {"12", "1-2", "-12", "-1-2", "2-1"}, F::TH5_3},
    {"W_3", {"12", "1-2", "-12", "21", "2-1"}, F::TH5_5},
    {"W_4", {"12", "1-2", "-12", "21", "-2-1"}, F::TH5_2},
    {"W_5", {"12", "1-2", "-12", "2-1", "-21"}, F::TH5_4},
    {"W_6", {"12", "1-2", "-12", "2-1", "-2-1"}, F::TH5_3},
    {"W_7", {"12", "1-2", "-1-2", "21", "2-1"}, F::TH5_3},
    {"W_8", {"12", "1-2", "-1-2", "21", "-21"}, F::TH5_3},
    {"W_9", {"12", "1-2", "-1-2", "21", "-2-1"}, F::TH5_1},
    {"W_10", {"12", "1-2", "-1-2", "2-1", "-21"}, F::TH5_3},
  };
  for (const Named& w : five) {
    const char* citation = w.formula == F::TH5_1   ? "0"
                           : w.formula == F::TH5_2 ? "3"
                           : w.formula == F::TH5_3 ? "n + 1"
                           : w.formula == F::TH5_4 ? "1 + n!"
                                                   : "(n+1)(n-1)!";
    r.push_back(entry(w.name, pattern_set(w.tokens), w.formula, 3, citation));
  }

  const Named six[] = {
    {"V_1", {"12", "1-2", "-12", "-1-2", "21", "2-1"}, F::TH6_2},
    {"V_2", {"12", "1-2", "-12", "-1-2", "21", "-2-1"}, F::TH6_1},
    {"V_3", {"12", "1-2", "-12", "-1-2", "2-1", "-21"}, F::TH6_2},
    {"V_4", {"12", "1-2", "-12", "21", "2-1", "-21"}, F::TH6_3},
    {"V_5", {"12", "1-2", "-12", "21", "2-1", "-2-1"}, F::TH6_2},
    {"V_6", {"12", "1-2", "-12", "2-1", "-21", "-2-1"}, F::TH6_2},
    {"V_7", {"12", "1-2", "-1-2", "21", "2-1", "-2-1"}, F::TH6_1},
    {"V_8", {"12", "1-2", "-1-2", "21", "-21", "-2-1"}, F::TH6_1},
  };
  for (const Named& v : six) {
    if (v.formula == F::TH6_1) {
      // b_2(T) = 8 - |T| = 2 for every 6-set, so the zero clause can only start at n = 3.
      r.push_back(entry(v.name, pattern_set(v.tokens), v.formula, 3, "0",
                        "stated for n >= 2, but b_2 = 8 - |T| = 2 for every 6-set; valid from n = 3"));
    } else {
      r.push_back(entry(v.name, pattern_set(v.tokens), v.formula, 2, v.formula == F::TH6_2 ? "2" : "n!"));
    }
  }

  r.push_back(entry("U78_1", PatternSet::all(), F::TH7_1, 3, "0"));
  r.push_back(entry("U78_2", pattern_set({"12", "1-2", "-12", "-1-2", "21", "2-1", "-2-1"}), F::TH7_1, 3, "0"));
  r.push_back(entry("U78_3", pattern_set({"12", "1-2", "-12", "-1-2", "21", "2-1", "-21"}), F::TH7_2, 3, "1"));

  return r;
}

} // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build_registry();
  return entries;
}

std::vector<const RegistryEntry*> lookup(PatternSet set) {
  const PatternSet canonical = canonical_representative(set);
  std::vector<const RegistryEntry*> out;
  for (const RegistryEntry& e : registry())
    if (e.canonical_set == canonical)
      out.push_back(&e);
  return out;
}

const std::vector<SupersededClaim>& superseded_claims() {
  static const std::vector<SupersededClaim> claims = [] {
    std::vector<SupersededClaim> out;
    out.push_back({"earlier claim b_n(12,21) = 2 n!", pattern_set({"12", "21"}), 2,
                   [](int n) { return 2 * factorial(n); }});
    out.push_back({"earlier claim b_n(1-2,-12) = (n+1)!", pattern_set({"1-2", "-12"}), 0,
                   [](int n) { return factorial(n + 1); }});
    out.push_back({"printed U4_2 form n!(1 + sum_{j<n} j!(n-1-j)!)", pattern_set({"12", "1-2", "-12", "21"}), 3,
                   [](int n) {
                     BigInt inner = 1;
                     for (int j = 0; j < n; ++j)
                       inner += factorial(j) * factorial(n - 1 - j);
                     return factorial(n) * inner;
                   }});
    for (const char* name : {"V_2", "V_7", "V_8"}) {
      for (const RegistryEntry& e : registry())
        if (e.paper_name == name)
          out.push_back({std::string("zero clause for ") + name + " at the stated start n = 2", e.named_set, 2,
                         [](int) { return BigInt(0); }});
    }
    return out;
  }();
  return claims;
}

} // namespace signedpat
