#include "sp6/cohomdb.hpp"

#include "sp6/data.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace sp6 {

long dim_cusp(long k) {
  if (k < 4 || k % 2 != 0) return 0;
  long l = (k - 2) / 12;
  long i = (k - 2) % 12;
  if (i == 0) return l - 1;
  if (i == 10) return l + 1;
  return l;
}

long dim_eis(long k) { return (k >= 4 && k % 2 == 0) ? 1 : 0; }

DimExpr DimExpr::unit(long mult) {
  DimExpr e;
  if (mult != 0) e.terms[DimSymbol{}] = mult;
  return e;
}

DimExpr DimExpr::symbol(DimSymbol::Kind kind, int k, long mult) {
  DimExpr e;
  if (mult != 0) e.terms[DimSymbol{kind, k}] = mult;
  return e;
}

DimExpr DimExpr::parse(std::string_view text) {
  DimExpr e;
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  skip_ws();
  if (text.substr(pos) == "0") return e;
  while (pos < text.size()) {
    skip_ws();
    size_t end = pos;
    while (end < text.size() && text[end] != '+') ++end;
    std::string term(text.substr(pos, end - pos));
    while (!term.empty() && term.back() == ' ') term.pop_back();
    long mult = 1;
    size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits])))
      ++digits;
    if (digits > 0 && digits < term.size()) {
      mult = std::stol(term.substr(0, digits));
      term = term.substr(digits);
    }
    if (term == "Q") {
      e = e + unit(mult);
    } else if (term.rfind("Sb", 0) == 0) {
      e = e + symbol(DimSymbol::Kind::anticusp, std::stoi(term.substr(2)), mult);
    } else if (term.rfind('S', 0) == 0) {
      e = e + symbol(DimSymbol::Kind::cusp, std::stoi(term.substr(1)), mult);
    } else if (term.rfind('E', 0) == 0) {
      e = e + symbol(DimSymbol::Kind::eis, std::stoi(term.substr(1)), mult);
    } else {
      throw std::invalid_argument("bad dimension term: '" + term + "'");
    }
    pos = end + (end < text.size() ? 1 : 0);
  }
  return e;
}

bool DimExpr::is_unit_multiple() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first.kind == DimSymbol::Kind::unit);
}

long DimExpr::eval() const {
  long total = 0;
  for (const auto& [sym, mult] : terms) {
    long d = 0;
    switch (sym.kind) {
      case DimSymbol::Kind::unit: d = 1; break;
      case DimSymbol::Kind::cusp:
      case DimSymbol::Kind::anticusp: d = dim_cusp(sym.k); break;
      case DimSymbol::Kind::eis: d = dim_eis(sym.k); break;
    }
    total += mult * d;
  }
  return total;
}

std::string DimExpr::str() const {
  if (terms.empty()) return "0";
  // Non-unit symbols by weight, unit last, matching the displayed tables.
  std::vector<std::pair<DimSymbol, long>> order(terms.begin(), terms.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    bool ua = a.first.kind == DimSymbol::Kind::unit;
    bool ub = b.first.kind == DimSymbol::Kind::unit;
    if (ua != ub) return ub;
    if (a.first.k != b.first.k) return a.first.k < b.first.k;
    return a.first.kind < b.first.kind;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, mult] : order) {
    if (!first) os << "+";
    first = false;
    if (mult != 1) os << mult;
    switch (sym.kind) {
      case DimSymbol::Kind::unit: os << "Q"; break;
      case DimSymbol::Kind::cusp: os << "S" << sym.k; break;
      case DimSymbol::Kind::anticusp: os << "Sb" << sym.k; break;
      case DimSymbol::Kind::eis: os << "E" << sym.k; break;
    }
  }
  return os.str();
}

DimExpr operator+(const DimExpr& a, const DimExpr& b) {
  DimExpr r = a;
  for (const auto& [sym, mult] : b.terms) {
    r.terms[sym] += mult;
    if (r.terms[sym] == 0) r.terms.erase(sym);
  }
  return r;
}

DimExpr DimExpr::tensor(const DimExpr& b) const {
  if (is_zero() || b.is_zero()) return DimExpr{};
  if (is_unit_multiple()) {
    long m = terms.empty() ? 0 : terms.begin()->second;
    DimExpr r;
    for (const auto& [sym, mult] : b.terms) r.terms[sym] = mult * m;
    return r;
  }
  if (b.is_unit_multiple()) return b.tensor(*this);
  return DimExpr::unit(eval() * b.eval());
}

UnknownFact::UnknownFact(std::string f, std::string w)
    : std::runtime_error("unknown cohomology fact: (" + f + ", " + w + ")"),
      factor(std::move(f)),
      weight(std::move(w)) {}

const SporadicFact* FactTable::find(const std::string& factor,
                                    const std::vector<Rat>& weight) const {
  for (const SporadicFact& f : sporadic) {
    if (f.factor == factor && f.weight == weight) return &f;
  }
  return nullptr;
}

const FactTable& fact_table() {
  static const FactTable table = [] {
    FactTable t;
    nlohmann::json j = load_json("cohomology_facts.json");
    t.version = j.at("version").get<int>();
    for (const auto& f : j.at("facts")) {
      SporadicFact sf;
      sf.factor = f.at("factor").get<std::string>();
      for (const auto& w : f.at("weight")) sf.weight.push_back(rat_parse(w.get<std::string>()));
      for (const auto& line : f.at("lines")) {
        std::string text = line.at("expr").get<std::string>();
        sf.lines.push_back({line.at("degree").get<int>(), DimExpr::parse(text), text});
      }
      sf.provenance = f.value("provenance", "");
      t.sporadic.push_back(std::move(sf));
    }
    return t;
  }();
  return table;
}

namespace {

std::string weight_text(const std::vector<Rat>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += rat_str(w[i]);
  }
  return s + ")";
}

long as_long(const Rat& r, const char* factor, const std::vector<Rat>& w) {
  if (!is_integer(r)) throw UnknownFact(factor, weight_text(w));
  return static_cast<long>(numerator(r));
}

GradedSpace one_component(int degree, DimExpr expr) {
  GradedSpace g;
  std::string d = expr.str();
  long n = expr.eval();
  g[degree].push_back(GradedComponent{std::move(expr), std::move(d), n});
  return g;
}

GradedSpace gl2_cohomology(const std::vector<Rat>& w) {
  long k = as_long(w.at(0), "GL2", w);
  long l = as_long(w.at(1), "GL2", w);
  if (k < 0 || k % 2 != 0) throw UnknownFact("GL2", weight_text(w));
  if (k == 0) {
    if (l % 2 != 0) return {};  // det^odd has no invariants
    return one_component(0, DimExpr::unit());
  }
  DimExpr h1 = DimExpr::symbol(DimSymbol::Kind::cusp, static_cast<int>(k + 2));
  // The Eisenstein class survives the GL2(Z) involution iff k/2 and l have
  // opposite parity.
  if (((k / 2) - l) % 2 != 0) h1 = h1 + DimExpr::symbol(DimSymbol::Kind::eis, static_cast<int>(k + 2));
  return one_component(1, h1);
}

GradedSpace sp2_cohomology(const std::vector<Rat>& w) {
  long k = as_long(w.at(0), "Sp2", w);
  if (k < 0) throw UnknownFact("Sp2", weight_text(w));
  if (k == 0) return one_component(0, DimExpr::unit());
  // Eichler-Shimura.
  DimExpr h1 = DimExpr::symbol(DimSymbol::Kind::cusp, static_cast<int>(k + 2)) +
               DimExpr::symbol(DimSymbol::Kind::anticusp, static_cast<int>(k + 2)) +
               DimExpr::symbol(DimSymbol::Kind::eis, static_cast<int>(k + 2));
  return one_component(1, h1);
}

GradedSpace sporadic_space(const SporadicFact& f) {
  GradedSpace g;
  for (const auto& line : f.lines)
    g[line.degree].push_back(GradedComponent{line.expr, line.text, line.expr.eval()});
  return g;
}

GradedSpace sp4_cohomology(const std::vector<Rat>& w, const FactTable& facts) {
  if (const SporadicFact* f = facts.find("Sp4", w)) return sporadic_space(*f);
  throw UnknownFact("Sp4", weight_text(w));
}

GradedSpace gl3_cohomology(const std::vector<Rat>& w, const FactTable& facts) {
  long a = as_long(w.at(0), "GL3", w);
  long b = as_long(w.at(1), "GL3", w);
  long c = as_long(w.at(2), "GL3", w);
  if ((a + 2 * b + 3 * c) % 2 != 0) return {};  // determinant parity kills the sheaf
  if (a < 0 || b < 0) throw UnknownFact("GL3", weight_text(w));
  if (const SporadicFact* f = facts.find("SL3", {Rat(a), Rat(b)})) return sporadic_space(*f);
  if (a == 0 && b == 0) return one_component(0, DimExpr::unit());
  // Interior cohomology vanishes for these weights: (a,b) != dual (b,a).
  long x = a, y = b;
  if (x == 0 || y == 0) {
    long s = x + y;
    if (s % 2 == 0) return one_component(3, DimExpr::symbol(DimSymbol::Kind::cusp, static_cast<int>(s + 2)));
    return one_component(2, DimExpr::symbol(DimSymbol::Kind::cusp, static_cast<int>(s + 3)) + DimExpr::unit());
  }
  // Both positive: quoted only for one even and one odd, in either order.
  long even = x % 2 == 0 ? x : y;
  long odd = x % 2 == 0 ? y : x;
  if (even % 2 != 0 || odd % 2 != 1) throw UnknownFact("GL3", weight_text(w));
  GradedSpace g;
  DimExpr q2 = DimExpr::symbol(DimSymbol::Kind::cusp, static_cast<int>(even + odd + 3));
  DimExpr q3 = DimExpr::symbol(DimSymbol::Kind::cusp, static_cast<int>(even + 2));
  g[2].push_back(GradedComponent{q2, q2.str()});
  g[3].push_back(GradedComponent{q3, q3.str()});
  return g;
}

}  // namespace

GradedSpace factor_cohomology(LeviFactor::Kind kind, const std::vector<Rat>& weight,
                              const FactTable& facts) {
  switch (kind) {
    case LeviFactor::Kind::GL1:
      return one_component(0, DimExpr::unit());
    case LeviFactor::Kind::GL2:
      return gl2_cohomology(weight);
    case LeviFactor::Kind::Sp2:
      return sp2_cohomology(weight);
    case LeviFactor::Kind::Sp4:
      return sp4_cohomology(weight, facts);
    case LeviFactor::Kind::GL3:
      return gl3_cohomology(weight, facts);
  }
  throw std::logic_error("unreachable");
}

GradedSpace levi_cohomology(const Parabolic& I, const WeylElement& w,
                            const Weight& lambda, const FactTable& facts) {
  LeviDescriptor levi = levi_data(I);
  LeviWeightCoords m = to_levi_coords(I, dot(w, lambda));

  GradedSpace acc = one_component(0, DimExpr::unit());
  for (const LeviFactor& factor : levi.factors) {
    std::vector<Rat> fw;
    for (int slot : factor.slots) fw.push_back(m[slot]);
    GradedSpace part = factor_cohomology(factor.kind, fw, facts);
    GradedSpace next;
    for (const auto& [da, comps_a] : acc) {
      for (const GradedComponent& ca : comps_a) {
        for (const auto& [db, comps_b] : part) {
          for (const GradedComponent& cb : comps_b) {
            GradedComponent c;
            c.expr = ca.expr.tensor(cb.expr);
            c.evaluated = ca.evaluated * cb.evaluated;
            if (ca.display == "Q") {
              c.display = cb.display;
            } else if (cb.display == "Q") {
              c.display = ca.display;
            } else {
              auto wrap = [](const std::string& s) {
                return s.find('+') == std::string::npos ? s : "(" + s + ")";
              };
              c.display = wrap(ca.display) + " x " + wrap(cb.display);
            }
            next[da + db].push_back(std::move(c));
          }
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

FaceCohomology face_cohomology(const Parabolic& I, const Weight& lambda, bool keep_zero,
                               const FactTable& facts) {
  FaceCohomology face;
  for (const WeylElement& w : filtered_reps(I, lambda)) {
    GradedSpace levi = levi_cohomology(I, w, lambda, facts);
    int lw = length(w);
    for (const auto& [i, comps] : levi) {
      for (const GradedComponent& c : comps) {
        FaceLine line{I, w, i, c.expr, c.display, c.evaluated};
        if (line.evaluated == 0 && !keep_zero) continue;
        face[i + lw].push_back(std::move(line));
      }
    }
  }
  // Display order within each degree: by (length, word), then internal degree.
  for (auto& [q, lines] : face) {
    std::stable_sort(lines.begin(), lines.end(), [](const FaceLine& a, const FaceLine& b) {
      if (!(a.w == b.w)) return weyl_display_less(a.w, b.w);
      return a.internal_degree < b.internal_degree;
    });
  }
  return face;
}

}  // namespace sp6
