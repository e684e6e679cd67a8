#pragma once

#include "sp6/parity.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sp6 {

// Basis symbol of a formal dimension expression: the unit line, cusp forms
// S_k, anti-holomorphic cusp forms Sb_k (same dimension as S_k, kept distinct
// for audit), and Eisenstein series E_k.
struct DimSymbol {
  enum class Kind { unit, cusp, anticusp, eis };
  Kind kind = Kind::unit;
  int k = 0;  // modular weight; 0 for the unit

  friend auto operator<=>(const DimSymbol&, const DimSymbol&) = default;
};

long dim_cusp(long k);  // dim S_k for level one; 0 for k < 4 and odd k
long dim_eis(long k);   // 1 for even k >= 4, else 0 (no weight-2 series)

// Formal nonnegative combination of symbols. Tensoring two genuinely mixed
// expressions collapses to (evaluated product) * unit; the factor-level
// display strings keep the readable form.
struct DimExpr {
  std::map<DimSymbol, long> terms;

  static DimExpr unit(long mult = 1);
  static DimExpr symbol(DimSymbol::Kind kind, int k, long mult = 1);
  static DimExpr parse(std::string_view text);  // "Q+S4+Sb4+E4", "0"

  bool is_zero() const { return terms.empty(); }
  bool is_unit_multiple() const;
  long eval() const;
  std::string str() const;

  friend DimExpr operator+(const DimExpr& a, const DimExpr& b);
  DimExpr tensor(const DimExpr& b) const;
  friend bool operator==(const DimExpr&, const DimExpr&) = default;
};

// Requested (factor, weight) outside the quoted knowledge. Raised, never
// silently zero.
class UnknownFact : public std::runtime_error {
 public:
  UnknownFact(std::string factor, std::string weight);
  const std::string factor;
  const std::string weight;
};

// Sporadic closed facts (currently the Sp4 entries) live in a versioned data
// file; the formula-backed families are code.
struct SporadicFact {
  struct Line {
    int degree = 0;
    DimExpr expr;
    std::string text;  // the quoted form, including its term order
  };
  std::string factor;
  std::vector<Rat> weight;
  std::vector<Line> lines;
  std::string provenance;
};

struct FactTable {
  int version = 0;
  std::vector<SporadicFact> sporadic;

  const SporadicFact* find(const std::string& factor, const std::vector<Rat>& weight) const;
};

const FactTable& fact_table();  // loaded once from the data directory

// One graded component of a cohomology space. A component can be formally
// nonzero while its dimension evaluates to 0 (cusp form spaces of low
// weight); `evaluated` is kept separately because tensoring mixed
// expressions collapses the formal content.
struct GradedComponent {
  DimExpr expr;
  std::string display;  // formal form, e.g. "(S4+E4) x (S4+Sb4+E4)"
  long evaluated = 0;
};
using GradedSpace = std::map<int, std::vector<GradedComponent>>;

// Cohomology of one Levi factor with the given weight coordinates
// (GL1: any single; GL2: (k,l); Sp2: k; Sp4: (a,b); GL3: (a,b,c)).
GradedSpace factor_cohomology(LeviFactor::Kind kind, const std::vector<Rat>& weight,
                              const FactTable& facts = fact_table());

// Kuenneth product over the Levi factors of P_I at the weight dot(w, lambda).
// Caller guarantees the parity verdict is `survives`.
GradedSpace levi_cohomology(const Parabolic& I, const WeylElement& w,
                            const Weight& lambda = Weight(),
                            const FactTable& facts = fact_table());

// One labeled summand of a face's cohomology; q = internal_degree + length(w).
struct FaceLine {
  Parabolic parabolic;
  WeylElement w;
  int internal_degree = 0;
  DimExpr dim;
  std::string display;
  long evaluated = 0;
};
using FaceCohomology = std::map<int, std::vector<FaceLine>>;  // q -> lines

// Union over the surviving Kostant representatives, shifted by l(w).
// `keep_zero` keeps formally nonzero lines whose dimension evaluates to 0
// (the decorated view); by default they are dropped.
FaceCohomology face_cohomology(const Parabolic& I, const Weight& lambda = Weight(),
                               bool keep_zero = false,
                               const FactTable& facts = fact_table());

// Dual weight for SL3: (a,b) -> (b,a); interior cohomology vanishes whenever
// the pair is not self-dual.
inline std::pair<Rat, Rat> sl3_dual_pair(const Rat& a, const Rat& b) { return {b, a}; }

}  // namespace sp6
