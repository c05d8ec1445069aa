// Command-line front end. One subcommand per operation family; all output
// is machine-readable (JSON by default, CSV for the dimension tables) and
// deterministic for a fixed --seed. Exit codes: 0 success, 1 a check ran
// and found a violation, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "klein/molien.hpp"
#include "klein/serialize.hpp"

namespace {

using namespace klein;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_quiver(const std::string& type, bool doubled, const std::string& format) {
  QuiverSpec q = build_extended_dynkin(type);
  IntVec dl = delta(q);
  IntVec df = defect(q);
  if (doubled) q = double_quiver(q);
  Json j = to_json(q);
  j["delta"] = dl;
  j["defect"] = df;
  j["orientation"] = type[0] == 'A' ? "cycle" : "away-from-extending-vertex";
  if (format == "csv") {
    std::cout << "tail,head,dual\n";
    for (const auto& a : q.arrows)
      std::cout << a.tail << "," << a.head << "," << (a.dual ? 1 : 0) << "\n";
    return 0;
  }
  emit(j);
  return 0;
}

int run_roots(const std::string& type, Int bound) {
  QuiverSpec q = build_extended_dynkin(type);
  emit(roots_to_json(enumerate_roots(q, bound)));
  return 0;
}

int run_classify_weight(const std::string& type, const std::string& xi_csv) {
  QuiverSpec q = build_extended_dynkin(type);
  IntVec xi = parse_int_list(xi_csv);
  if (static_cast<int>(xi.size()) != q.vertex_count)
    throw std::invalid_argument("xi must have one entry per vertex");
  emit(Json{{"xi", xi}, {"class", weight_class_name(classify_weight(q, xi))}});
  return 0;
}

int run_analyze(const std::string& type, const std::string& re,
                const std::string& im) {
  QuiverSpec q = build_extended_dynkin(type);
  ParamVector lambda = parse_param(re, im);
  if (static_cast<int>(lambda.size()) != q.vertex_count)
    throw std::invalid_argument("lambda must have one entry per vertex");
  Json j = to_json(analyze_param(q, lambda));
  j["lambda"] = to_json(lambda);
  emit(j);
  return 0;
}

int run_choose_xi(const std::string& type, const std::string& re,
                  const std::string& im, Int d, bool minimize, int scan_dominant,
                  unsigned seed) {
  QuiverSpec q = build_extended_dynkin(type);
  if (scan_dominant > 0) {
    DominantScanReport rep = scan_dominant_xi_zero(q, d, scan_dominant, seed);
    emit(Json{{"tested", rep.tested},
              {"obstructed", rep.obstructed},
              {"d", d},
              {"seed", seed}});
    return 0;
  }
  if (re.empty())
    throw std::invalid_argument("--lambda is required unless --scan-dominant is given");
  ParamVector lambda = parse_param(re, im);
  if (static_cast<int>(lambda.size()) != q.vertex_count)
    throw std::invalid_argument("lambda must have one entry per vertex");
  IntVec xi = choose_xi(q, lambda, d);
  Json j{{"xi", xi},
         {"d", d},
         {"class", weight_class_name(classify_weight(q, xi))},
         {"shifted_report", to_json(analyze_param(q, lambda.shifted(xi)))}};
  if (minimize) {
    auto smaller = choose_xi_minimal(q, lambda, d);
    j["minimal_xi"] = smaller ? Json(*smaller) : Json(nullptr);
  }
  emit(j);
  return 0;
}

int run_weyl_decompose(const std::string& type, const std::string& xi_csv,
                       unsigned seed) {
  QuiverSpec q = build_extended_dynkin(type);
  IntVec xi = parse_int_list(xi_csv);
  if (static_cast<int>(xi.size()) != q.vertex_count)
    throw std::invalid_argument("xi must have one entry per vertex");
  TranslationWord w = decompose_translation(q, xi, seed);
  Json j = to_json(w);
  j["xi"] = xi;
  emit(j);
  return w.verified ? 0 : 1;
}

int run_apply_word(const std::string& type, const std::string& re,
                   const std::string& im, const std::string& autom,
                   const std::string& refl) {
  QuiverSpec q = build_extended_dynkin(type);
  ParamVector lambda = parse_param(re, im);
  WeylWord w;
  if (!autom.empty()) {
    IntVec p = parse_int_list(autom);
    w.automorphism.assign(p.begin(), p.end());
  } else {
    w.automorphism.resize(q.vertex_count);
    for (int v = 0; v < q.vertex_count; ++v) w.automorphism[v] = v;
  }
  if (!refl.empty()) {
    IntVec r = parse_int_list(refl);
    w.reflections.assign(r.begin(), r.end());
  }
  emit(Json{{"word", to_json(w)}, {"result", to_json(apply_word(q, w, lambda))}});
  return 0;
}

int run_semiinv(int n, const std::string& chi_csv, Int m, int dmax,
                const std::string& format, bool with_basis) {
  FiberRing ring = build_fiber_ring(n);
  IntVec chi = parse_int_list(chi_csv);
  std::vector<Int> dims;
  Json basis = Json::array();
  for (int d = 0; d <= dmax; ++d) {
    GradedSlice s = slice(ring, chi, m, d);
    dims.push_back(s.dim());
    if (with_basis) {
      Json names = Json::array();
      for (const auto& e : s.basis) names.push_back(monomial_str(ring, e));
      basis.push_back(names);
    }
  }
  if (format == "csv") {
    std::cout << "degree,dimension\n";
    for (int d = 0; d <= dmax; ++d) std::cout << d << "," << dims[d] << "\n";
    return 0;
  }
  Json j{{"n", n}, {"chi", chi}, {"m", m}, {"dmax", dmax}, {"dims", dims}};
  if (with_basis) j["basis"] = basis;
  emit(j);
  return 0;
}

int run_mult_check(int n, const std::string& chi_csv, int mn_max, Int m, Int k,
                   int dmax) {
  FiberRing ring = build_fiber_ring(n);
  IntVec chi = parse_int_list(chi_csv);
  if (m >= 0 && k >= 0) {
    MultSurjReport rep = check_mult_surjective(ring, chi, m, k, dmax);
    emit(to_json(rep));
    return rep.surjective ? 0 : 1;
  }
  MultScanReport rep = scan_mult_surjectivity(ring, chi, mn_max, dmax);
  emit(to_json(rep));
  return rep.minimal_passing_n >= 1 ? 0 : 1;
}

int run_power_check(int n, const std::string& chi_csv, Int npow, int jmax,
                    int dmax) {
  FiberRing ring = build_fiber_ring(n);
  IntVec chi = parse_int_list(chi_csv);
  PowerReport rep = check_power_stabilization(ring, chi, npow, jmax, dmax);
  emit(to_json(rep));
  return rep.holds ? 0 : 1;
}

int run_kleinian_check(int n, int dmax) {
  FiberRing ring = build_fiber_ring(n);
  KleinianReport rep = verify_kleinian_presentation(ring, dmax);
  std::vector<Int> hilbert = invariant_hilbert(ring, dmax);
  std::vector<Int> oracle = molien_dims(cyclic_group(n), dmax);
  bool hilbert_match = (hilbert == oracle);
  Json j = to_json(rep);
  j["invariant_hilbert"] = hilbert;
  j["molien_oracle"] = oracle;
  j["hilbert_matches_molien"] = hilbert_match;
  emit(j);
  return (rep.product_relation && rep.invariants_spanned && hilbert_match) ? 0 : 1;
}

int run_molien(const std::string& group, int dmax, const std::string& format) {
  FiniteSubgroupSL2 g = parse_group_label(group);
  std::vector<Int> dims = molien_dims(g, dmax);
  if (format == "csv") {
    std::cout << "degree,dimension\n";
    for (int d = 0; d <= dmax; ++d) std::cout << d << "," << dims[d] << "\n";
    return 0;
  }
  emit(Json{{"group", g.label}, {"order", g.order()}, {"dims", dims}});
  return 0;
}

int run_preproj_dims(const std::string& type, const std::string& re,
                     const std::string& im, int length, int buffer,
                     const std::string& block, const std::string& format) {
  QuiverSpec q = double_quiver(build_extended_dynkin(type));
  ParamVector lambda = parse_param(re, im);
  if (static_cast<int>(lambda.size()) != q.vertex_count)
    throw std::invalid_argument("lambda must have one entry per vertex");
  std::optional<std::pair<int, int>> only;
  if (!block.empty()) {
    IntVec b = parse_int_list(block);
    if (b.size() != 2) throw std::invalid_argument("--block expects \"i,j\"");
    only = {static_cast<int>(b[0]), static_cast<int>(b[1])};
  }
  FiltrationTable t = truncated_dims(q, lambda, length, buffer, only);
  if (format == "csv") {
    std::cout << "target,source,length,dim\n";
    for (int i = 0; i < t.vertex_count; ++i)
      for (int j = 0; j < t.vertex_count; ++j)
        if (t.has_block(i, j))
          for (int l = 0; l <= t.max_length; ++l)
            std::cout << i << "," << j << "," << l << "," << t.dims[i][j][l]
                      << "\n";
    return 0;
  }
  Json j = to_json(t);
  j["type"] = type;
  j["lambda"] = to_json(lambda);
  emit(j);
  return 0;
}

int run_zalg_check(const std::string& model, int n, const std::string& chi_csv,
                   int threshold, int max_index, int cap) {
  GradedRingTruncation ring;
  if (model == "typeA") {
    IntVec chi = parse_int_list(chi_csv);
    ring = build_type_a_ring(n, chi, max_index, cap);
  } else if (model == "poly") {
    ring = build_polynomial_ring(max_index);
  } else {
    throw std::invalid_argument("unknown model '" + model + "' (typeA or poly)");
  }
  ZAlgebraTruncation z = hat(std::move(ring), max_index);
  AssociativityReport assoc = check_associativity(z);
  MoritaReport morita = morita_condition_ii(z, threshold);
  ZalgCheckReport rep;
  rep.associative = assoc.associative;
  rep.morita_ii = morita.vacuous ? "vacuous"
                                 : (morita.surjective ? "surjective" : "failed");
  rep.vacuous = morita.vacuous;
  if (assoc.witness) {
    std::ostringstream os;
    os << "associativity at (" << assoc.witness->i << "," << assoc.witness->j
       << "," << assoc.witness->k << "," << assoc.witness->l << "): "
       << assoc.witness->x << " | " << assoc.witness->y << " | "
       << assoc.witness->z;
    rep.witnesses.push_back(os.str());
  }
  if (morita.witness) {
    std::ostringstream os;
    os << "morita at (" << morita.witness->i << "," << morita.witness->j << ","
       << morita.witness->k << ") degree " << morita.witness->degree
       << ": missing " << morita.witness->missing;
    rep.witnesses.push_back(os.str());
  }
  emit(to_json(rep));
  return (rep.associative && (morita.vacuous || morita.surjective)) ? 0 : 1;
}

int run_decompose_sum(Int m, Int n) {
  emit(Json{{"m", m}, {"N", n}, {"parts", decompose_sum(m, n)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations around deformed preprojective algebras of affine "
      "ADE quivers: root systems, parameter analysis, Weyl words, torus "
      "semi-invariants, filtration dimensions, Z-algebra checks."};
  app.require_subcommand(1);

  std::string type, xi_csv, lambda_re, lambda_im, chi_csv, autom, refl, group;
  std::string format = "json", model = "typeA", block;
  Int bound = 1, m_val = 0, n_power = 1, big_m = 7, big_n = 3, d_small = 1;
  Int pair_m = -1, pair_k = -1;
  int n = 2, dmax = 0, jmax = 1, length = 0, buffer = 0, mn_max = 3;
  int threshold = 1, max_index = 0, cap = 0, scan_dominant = 0;
  unsigned seed = 0;
  bool doubled = false, minimize = false, with_basis = false;
  int rc = 0;

  auto* quiver = app.add_subcommand("quiver", "emit an extended Dynkin quiver");
  quiver->add_option("--type", type, "quiver type (A<n>, D<n>, E6, E7, E8)")
      ->required();
  quiver->add_flag("--double", doubled, "emit the doubled quiver");
  quiver->add_option("--format", format, "json or csv");
  quiver->callback([&] { rc = run_quiver(type, doubled, format); });

  auto* roots = app.add_subcommand("roots", "enumerate roots in a box");
  roots->add_option("--type", type)->required();
  roots->add_option("--bound", bound, "coordinate box bound")->required();
  roots->callback([&] { rc = run_roots(type, bound); });

  auto* clw = app.add_subcommand("classify-weight", "locate xi in the lattices");
  clw->add_option("--type", type)->required();
  clw->add_option("--xi", xi_csv, "integer vector, comma separated")->required();
  clw->callback([&] { rc = run_classify_weight(type, xi_csv); });

  auto* analyze = app.add_subcommand("analyze", "parameter report for lambda");
  analyze->add_option("--type", type)->required();
  analyze->add_option("--lambda", lambda_re, "rational vector \"p/q,...\"")
      ->required();
  analyze->add_option("--lambda-im", lambda_im, "imaginary part (optional)");
  analyze->callback([&] { rc = run_analyze(type, lambda_re, lambda_im); });

  auto* cxi = app.add_subcommand("choose-xi", "constructive dominant shift");
  cxi->add_option("--type", type)->required();
  cxi->add_option("--lambda", lambda_re);
  cxi->add_option("--lambda-im", lambda_im);
  cxi->add_option("--d", d_small, "dimension threshold")->required();
  cxi->add_flag("--minimize", minimize, "scan for a coordinatewise smaller xi");
  cxi->add_option("--scan-dominant", scan_dominant,
                  "instead: test K random dominant lambda at xi = 0");
  cxi->add_option("--seed", seed);
  cxi->callback([&] {
    rc = run_choose_xi(type, lambda_re, lambda_im, d_small, minimize,
                       scan_dominant, seed);
  });

  auto* wd = app.add_subcommand("weyl-decompose",
                                "write lambda -> lambda + xi as a word");
  wd->add_option("--type", type)->required();
  wd->add_option("--xi", xi_csv)->required();
  wd->add_option("--seed", seed);
  wd->callback([&] { rc = run_weyl_decompose(type, xi_csv, seed); });

  auto* aw = app.add_subcommand("apply-word", "apply a Weyl word to lambda");
  aw->add_option("--type", type)->required();
  aw->add_option("--lambda", lambda_re)->required();
  aw->add_option("--lambda-im", lambda_im);
  aw->add_option("--automorphism", autom, "permutation, comma separated");
  aw->add_option("--reflections", refl, "vertex indices, comma separated");
  aw->callback(
      [&] { rc = run_apply_word(type, lambda_re, lambda_im, autom, refl); });

  auto* si = app.add_subcommand("semiinv", "semi-invariant slice dimensions");
  si->add_option("--n", n, "cyclic quiver vertex count")->required();
  si->add_option("--chi", chi_csv)->required();
  si->add_option("--m", m_val, "character power")->required();
  si->add_option("--dmax", dmax)->required();
  si->add_option("--format", format);
  si->add_flag("--basis", with_basis, "include monomial bases");
  si->callback(
      [&] { rc = run_semiinv(n, chi_csv, m_val, dmax, format, with_basis); });

  auto* mc = app.add_subcommand("mult-check", "S_m . S_k surjectivity");
  mc->add_option("--n", n)->required();
  mc->add_option("--chi", chi_csv)->required();
  mc->add_option("--mmax", mn_max, "scan all pairs 1..mmax");
  mc->add_option("--m", pair_m, "single pair: left power");
  mc->add_option("--k", pair_k, "single pair: right power");
  mc->add_option("--dmax", dmax)->required();
  mc->callback(
      [&] { rc = run_mult_check(n, chi_csv, mn_max, pair_m, pair_k, dmax); });

  auto* pc = app.add_subcommand("power-check", "S_{jN} = (S_N)^j check");
  pc->add_option("--n", n)->required();
  pc->add_option("--chi", chi_csv)->required();
  pc->add_option("--N", n_power)->required();
  pc->add_option("--jmax", jmax)->required();
  pc->add_option("--dmax", dmax)->required();
  pc->callback([&] { rc = run_power_check(n, chi_csv, n_power, jmax, dmax); });

  auto* kc = app.add_subcommand("kleinian-check", "x, A, B presentation check");
  kc->add_option("--n", n)->required();
  kc->add_option("--dmax", dmax)->required();
  kc->callback([&] { rc = run_kleinian_check(n, dmax); });

  auto* mo = app.add_subcommand("molien", "invariant dimensions of C[x,y]");
  mo->add_option("--group", group, "Z<n> or BD<4n>")->required();
  mo->add_option("--dmax", dmax)->required();
  mo->add_option("--format", format);
  mo->callback([&] { rc = run_molien(group, dmax, format); });

  auto* pd = app.add_subcommand("preproj-dims", "truncated filtration table");
  pd->add_option("--type", type)->required();
  pd->add_option("--lambda", lambda_re)->required();
  pd->add_option("--lambda-im", lambda_im);
  pd->add_option("--L", length)->required();
  pd->add_option("--buffer", buffer);
  pd->add_option("--block", block, "restrict to one \"target,source\" block");
  pd->add_option("--format", format);
  pd->callback([&] {
    rc = run_preproj_dims(type, lambda_re, lambda_im, length, buffer, block,
                          format);
  });

  auto* zc = app.add_subcommand("zalg-check", "hat construction checks");
  zc->add_option("--model", model, "typeA or poly");
  zc->add_option("--n", n);
  zc->add_option("--chi", chi_csv);
  zc->add_option("--N", threshold, "Morita range threshold")->required();
  zc->add_option("--M", max_index, "Z-algebra truncation index")->required();
  zc->add_option("--cap", cap, "internal degree cap")->required();
  zc->callback(
      [&] { rc = run_zalg_check(model, n, chi_csv, threshold, max_index, cap); });

  auto* ds = app.add_subcommand("decompose-sum", "parts in [N, 2N-1]");
  ds->add_option("--m", big_m)->required();
  ds->add_option("--N", big_n)->required();
  ds->callback([&] { rc = run_decompose_sum(big_m, big_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
