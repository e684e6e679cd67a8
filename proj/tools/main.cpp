#include "sp6/data.hpp"
#include "sp6/fixtures.hpp"
#include "sp6/report.hpp"
#include "sp6/spectral.hpp"
#include "sp6/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

namespace {

using namespace sp6;

struct Options {
  std::string format = "markdown";
  std::string parabolic;
  std::string sign_policy = "solved";
  std::vector<long> lambda;
  bool symbolic = false;
  bool decorated = false;
};

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  return ReportFormat::markdown;
}

Parabolic require_parabolic(const std::string& name) {
  auto p = Parabolic::parse(name);
  if (!p) throw CLI::ValidationError("--parabolic", "expected one of a1 a2 a3 a12 a13 a23 b");
  return *p;
}

Weight lambda_of(const Options& opt) {
  if (opt.lambda.empty()) return Weight();
  return lambda_from_n(Rat(opt.lambda[0]), Rat(opt.lambda[1]), Rat(opt.lambda[2]));
}

void emit(const ReportTable& table, const Options& opt) {
  std::cout << render(table, parse_format(opt.format));
}

std::string rat3(const Rat& a, const Rat& b, const Rat& c) {
  return "(" + rat_str(a) + ", " + rat_str(b) + ", " + rat_str(c) + ")";
}

int cmd_weyl_table(const Options& opt) {
  ReportTable t;
  t.kind = "weyl_table";
  t.label_headers = {"w"};
  t.value_headers = {"w_inv", "length", "w_inv(alpha1)", "w_inv(alpha2)", "w_inv(alpha3)"};
  auto alpha_str = [](const std::array<int, 3>& a) {
    return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) +
           ")";
  };
  for (const WeylElement& w : enumerate_weyl()) {
    ReportRow r;
    r.labels = {weyl_name(w)};
    r.values = {weyl_name(inverse(w)), std::to_string(length(w)),
                alpha_str(inverse_simple_image(w, 1)), alpha_str(inverse_simple_image(w, 2)),
                alpha_str(inverse_simple_image(w, 3))};
    r.provenance = "generated: signed-permutation enumeration, alpha-coordinates";
    t.rows.push_back(std::move(r));
  }
  emit(t, opt);
  return 0;
}

int cmd_kostant(const Options& opt) {
  Parabolic I = require_parabolic(opt.parabolic);
  ReportTable t;
  t.kind = "kostant";
  t.label_headers = {"w"};
  t.value_headers = {"length"};
  for (const WeylElement& w : kostant_reps(I)) {
    t.rows.push_back(
        {{weyl_name(w)}, {std::to_string(length(w))}, "minimal coset representatives of " + I.name()});
  }
  emit(t, opt);
  return 0;
}

int cmd_weights(const Options& opt) {
  Parabolic I = require_parabolic(opt.parabolic);
  ReportTable t;
  t.kind = "weights";
  t.label_headers = {"w"};
  if (opt.symbolic) {
    t.value_headers = {"gamma1 coeff", "gamma2 coeff", "gamma3 coeff"};
    for (const auto& row : kostant_weight_table(I)) {
      t.rows.push_back({{weyl_name(row.w)},
                        {row.coeff[0].str(), row.coeff[1].str(), row.coeff[2].str()},
                        "dot action in the Levi fundamental-weight basis of " + I.name()});
    }
  } else {
    Weight lambda = lambda_of(opt);
    t.value_headers = {"m1", "m2", "m3"};
    for (const WeylElement& w : kostant_reps(I)) {
      LeviWeightCoords m = to_levi_coords(I, dot(w, lambda));
      t.rows.push_back({{weyl_name(w)},
                        {rat_str(m.m1), rat_str(m.m2), rat_str(m.m3)},
                        "dot action in the Levi fundamental-weight basis of " + I.name()});
    }
  }
  emit(t, opt);
  return 0;
}

int cmd_parity(const Options& opt) {
  Parabolic I = require_parabolic(opt.parabolic);
  Weight lambda = lambda_of(opt);
  ReportTable t;
  t.kind = "parity";
  t.label_headers = {"w"};
  t.value_headers = {"m", "verdict", "reason"};
  for (const WeylElement& w : kostant_reps(I)) {
    LeviWeightCoords m = to_levi_coords(I, dot(w, lambda));
    SurvivalVerdict v = survives(I, m);
    const char* status = v.status == Survival::survives
                             ? "survives"
                             : (v.status == Survival::sheaf_zero ? "sheaf_zero" : "cohomology_zero");
    t.rows.push_back({{weyl_name(w)},
                      {rat3(m.m1, m.m2, m.m3), status, v.reason},
                      "parity conditions for " + I.name()});
  }
  emit(t, opt);

  ReportTable s;
  s.kind = "parity_survivors";
  s.label_headers = {"parabolic"};
  s.value_headers = {"surviving set"};
  std::string set;
  for (const WeylElement& w : filtered_reps(I, lambda))
    set += (set.empty() ? "" : " ") + weyl_name(w);
  s.rows.push_back({{I.name()}, {set}, "surviving representatives"});
  emit(s, opt);
  return 0;
}

int cmd_face(const Options& opt) {
  Parabolic I = require_parabolic(opt.parabolic);
  FaceCohomology fc = face_cohomology(I, lambda_of(opt), opt.decorated);
  ReportTable t;
  t.kind = "face";
  t.label_headers = {"q", "w"};
  t.value_headers = {"expression", "dim"};
  for (const auto& [q, lines] : fc)
    for (const FaceLine& l : lines)
      t.rows.push_back({{std::to_string(q), weyl_name(l.w)},
                        {l.display, std::to_string(l.evaluated)},
                        "face cohomology of " + I.name()});
  emit(t, opt);
  return 0;
}

SignPolicy require_policy(const Options& opt) {
  auto p = sign_policy_parse(opt.sign_policy);
  if (!p)
    throw CLI::ValidationError("--sign-policy",
                               "expected pure-epsilon, paper-fixture or solved");
  return *p;
}

int cmd_page(const Options& opt, int r) {
  E1Page page = assemble_E1(lambda_of(opt));
  ReportTable t;
  t.kind = "e" + std::to_string(r);
  if (r == 1) {
    t.label_headers = {"p", "q"};
    t.value_headers = {"dim", "lines"};
    for (const auto& [key, lines] : page.entries) {
      std::string names;
      long d = 0;
      for (const E1Line& l : lines) {
        if (!names.empty()) names += " ";
        names += l.label();
        d += l.dim;
      }
      t.rows.push_back({{std::to_string(key.first), std::to_string(key.second)},
                        {std::to_string(d), names},
                        "first page"});
    }
    emit(t, opt);
    // The differentials are part of the page dump.
    Differentials d = build_d1(page, require_policy(opt));
    ReportTable dt;
    dt.kind = "d1";
    dt.label_headers = {"p", "q"};
    dt.value_headers = {"matrix", "rank"};
    for (const auto& [key, m] : d.blocks)
      dt.rows.push_back({{std::to_string(key.first), std::to_string(key.second)},
                         {matrix_str(m), std::to_string(rank(m))},
                         "sign policy: " + sign_policy_name(d.policy)});
    emit(dt, opt);
    return 0;
  }
  Differentials d = build_d1(page, require_policy(opt));
  E2Page e2 = compute_E2(page, d);
  if (r == 2) {
    t.label_headers = {"p", "q"};
    t.value_headers = {"dim", "labels"};
    for (const auto& [key, entry] : e2.entries) {
      std::string labels;
      for (const auto& l : entry.labels) labels += (labels.empty() ? "" : " ") + l;
      t.rows.push_back({{std::to_string(key.first), std::to_string(key.second)},
                        {std::to_string(entry.dim), labels},
                        "second page"});
    }
    emit(t, opt);
    return 0;
  }
  E3Page e3 = compute_E3(page, e2);
  t.label_headers = {"p", "q"};
  t.value_headers = {"dim", "labels"};
  for (const auto& [key, dim] : e3.dims) {
    std::string labels;
    for (const auto& l : e3.labels.at(key)) labels += (labels.empty() ? "" : " ") + l;
    t.rows.push_back({{std::to_string(key.first), std::to_string(key.second)},
                      {std::to_string(dim), labels},
                      "third page"});
  }
  emit(t, opt);
  return 0;
}

int cmd_boundary(const Options& opt) {
  BoundaryCohomology b = boundary_cohomology(require_policy(opt), lambda_of(opt));
  if (parse_format(opt.format) == ReportFormat::json) {
    nlohmann::json j;
    j["H"] = b.dims;
    std::cout << j.dump() << "\n";
    return 0;
  }
  ReportTable t;
  t.kind = "boundary";
  t.label_headers = {"degree"};
  t.value_headers = {"dim", "contributors"};
  for (int k = 0; k < 12; ++k) {
    std::string contrib;
    for (auto [p, q] : b.contributors[k])
      contrib += (contrib.empty() ? "" : " ") + ("E3^{" + std::to_string(p) + "," +
                                                 std::to_string(q) + "}");
    t.rows.push_back(
        {{std::to_string(k)}, {std::to_string(b.dims[k]), contrib}, "boundary cohomology"});
  }
  emit(t, opt);
  return 0;
}

int cmd_verify(const Options& opt) {
  std::vector<CheckResult> results = run_all_checks(require_policy(opt));
  bool all_pass = true;
  for (const CheckResult& c : results) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.message.empty()) std::cout << "  -- " << c.message;
    std::cout << "\n";
    all_pass = all_pass && c.pass;
  }
  std::cout << (all_pass ? "verify: all checks passed" : "verify: MISMATCH") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary cohomology of Sp6(Z): Weyl combinatorics, face cohomology and the "
               "boundary spectral sequence, in exact rational arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string data_dir_override;
  app.add_option("--data-dir", data_dir_override, "directory with the embedded tables");
  app.add_option("--format", opt.format, "markdown|json|csv")->default_str("markdown");

  auto add_parabolic = [&](CLI::App* cmd) {
    cmd->add_option("--parabolic", opt.parabolic, "a1 a2 a3 a12 a13 a23 b")->required();
  };
  auto add_lambda = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", opt.lambda, "highest weight n1 n2 n3")->expected(3);
  };
  auto add_policy = [&](CLI::App* cmd) {
    cmd->add_option("--sign-policy", opt.sign_policy, "pure-epsilon|paper-fixture|solved");
  };

  CLI::App* weyl = app.add_subcommand("weyl-table", "all 48 Weyl elements with inverse images");
  CLI::App* kostant = app.add_subcommand("kostant", "minimal coset representatives");
  add_parabolic(kostant);
  CLI::App* weights = app.add_subcommand("weights", "dot-action weight tables");
  add_parabolic(weights);
  add_lambda(weights);
  weights->add_flag("--symbolic", opt.symbolic, "affine coefficients in n1,n2,n3");
  CLI::App* parity = app.add_subcommand("parity", "vanishing verdicts per representative");
  add_parabolic(parity);
  add_lambda(parity);
  CLI::App* face = app.add_subcommand("face", "graded face cohomology");
  add_parabolic(face);
  add_lambda(face);
  face->add_flag("--decorated", opt.decorated, "keep formally nonzero lines of dimension 0");
  CLI::App* e1 = app.add_subcommand("e1", "first page and differentials");
  add_policy(e1);
  add_lambda(e1);
  CLI::App* e2 = app.add_subcommand("e2", "second page");
  add_policy(e2);
  add_lambda(e2);
  CLI::App* e3 = app.add_subcommand("e3", "third page");
  add_policy(e3);
  add_lambda(e3);
  CLI::App* boundary = app.add_subcommand("boundary", "boundary cohomology dimensions");
  add_policy(boundary);
  add_lambda(boundary);
  CLI::App* verify = app.add_subcommand("verify", "compare every stage against embedded tables");
  add_policy(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!data_dir_override.empty()) sp6::set_data_dir(data_dir_override);

  try {
    if (weyl->parsed()) return cmd_weyl_table(opt);
    if (kostant->parsed()) return cmd_kostant(opt);
    if (weights->parsed()) return cmd_weights(opt);
    if (parity->parsed()) return cmd_parity(opt);
    if (face->parsed()) return cmd_face(opt);
    if (e1->parsed()) return cmd_page(opt, 1);
    if (e2->parsed()) return cmd_page(opt, 2);
    if (e3->parsed()) return cmd_page(opt, 3);
    if (boundary->parsed()) return cmd_boundary(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const sp6::UnknownFact& e) {
    std::cerr << "unknown cohomology fact for (" << e.factor << ", " << e.weight << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
