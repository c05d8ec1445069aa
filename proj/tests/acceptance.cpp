// Acceptance suite. Runs every criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion; exit code is the number of
// failures. Usage: acceptance [path-to-cli] [golden-dir]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "klein/molien.hpp"
#include "klein/params.hpp"
#include "klein/preproj.hpp"
#include "klein/weyl.hpp"
#include "klein/zalgebra.hpp"

using namespace klein;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      if (detail_.empty()) detail_ = what;
    }
  }

  ~Criterion() {
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
    char line[512];
    std::snprintf(line, sizeof(line), "%s criterion %d: %s [%.2f s]%s%s",
                  ok_ ? "PASS" : "FAIL", number_, title_.c_str(), elapsed,
                  ok_ ? "" : " -- ", ok_ ? "" : detail_.c_str());
    std::cout << line << "\n";
    if (!ok_) ++failures;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::string detail_;
  std::chrono::steady_clock::time_point start_;
};

ParamVector random_on_e(const QuiverSpec& q, const IntVec& dl, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<Rat> re(q.vertex_count, Rat(0));
  Rat s = 0;
  for (int i = 1; i < q.vertex_count; ++i) {
    re[i] = make_rat(num(rng), den(rng));
    s += re[i] * static_cast<long>(dl[i]);
  }
  re[0] = Rat(1) - s;
  return ParamVector(re);
}

void criterion_1() {
  Criterion c(1, "root suite: delta minimality and Dynkin root counts");
  const std::pair<const char*, int> cases[] = {
      {"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10},
      {"D4", 12}, {"D5", 20}, {"E6", 36}};
  for (auto [t, expected] : cases) {
    QuiverSpec q = build_extended_dynkin(t);
    CartanData cd = cartan(q);
    IntVec dl = delta(q);
    int n = q.vertex_count;
    // minimality brute force over the box 0 <= v <= delta
    IntVec v(n, 0);
    bool minimal = true;
    auto scan = [&](auto&& self, int idx) -> void {
      if (!minimal) return;
      if (idx == n) {
        bool zero = true, is_delta = true;
        for (int i = 0; i < n; ++i) {
          if (v[i] != 0) zero = false;
          if (v[i] != dl[i]) is_delta = false;
        }
        if (!zero && !is_delta && cd.tits(v) == 0) minimal = false;
        return;
      }
      for (Int x = 0; x <= dl[idx] && minimal; ++x) {
        v[idx] = x;
        self(self, idx + 1);
      }
      v[idx] = 0;
    };
    scan(scan, 0);
    c.check(minimal, std::string(t) + ": smaller q=0 vector found in box");

    auto box = positive_dynkin_roots(q);
    auto closure = dynkin_roots_by_reflection(q);
    int positive_in_closure = 0;
    for (const auto& r : closure) {
      bool pos = true;
      for (Int x : r) pos = pos && x >= 0;
      if (pos) ++positive_in_closure;
    }
    c.check(static_cast<int>(box.size()) == positive_in_closure,
            std::string(t) + ": box vs reflection-closure count mismatch");
    c.check(static_cast<int>(box.size()) == expected,
            std::string(t) + ": unexpected positive Dynkin count");
  }
}

void criterion_2() {
  Criterion c(2, "Weyl decomposition: 100 seeded random translations verify");
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<int> coord(-10, 10);
  const char* types[] = {"A1", "A2", "A3", "D4"};
  int done = 0, failures_here = 0;
  while (done < 100) {
    QuiverSpec q = build_extended_dynkin(types[done % 4]);
    IntVec dl = delta(q);
    int n = q.vertex_count;
    IntVec xi(n, 0);
    for (int i = 1; i < n; ++i) xi[i] = coord(rng);
    Int s = 0;
    for (int i = 1; i < n; ++i) s += xi[i] * dl[i];
    xi[0] = -s;
    if (std::abs(xi[0]) > 10) continue;
    ++done;
    TranslationWord w = decompose_translation(q, xi, 7000 + done);
    if (!w.verified) ++failures_here;
    for (int t = 0; t < 5; ++t) {
      ParamVector l = random_on_e(q, dl, rng);
      if (!(apply_word(q, w.word, l) == l.shifted(xi))) ++failures_here;
    }
  }
  c.check(failures_here == 0,
          std::to_string(failures_here) + " verification failures");
}

void criterion_3() {
  Criterion c(3, "shift construction: xi in Lambda_+ and no dims in [1,d]");
  std::mt19937 rng(6020842);
  const char* types[] = {"A1", "A2", "A3"};
  int produced = 0, bad = 0;
  while (produced < 50) {
    QuiverSpec q = build_extended_dynkin(types[produced % 3]);
    IntVec dl = delta(q);
    ParamVector lambda = random_on_e(q, dl, rng);
    if (!is_regular(q, lambda)) continue;
    ++produced;
    for (Int d : {1, 2, 3}) {
      IntVec xi = choose_xi(q, lambda, d);
      WeightClass wc = classify_weight(q, xi);
      if (!(wc == WeightClass::LambdaPlus || wc == WeightClass::LambdaPlusPlus))
        ++bad;
      ParamVector shifted = lambda.shifted(xi);
      if (!is_regular(q, shifted)) ++bad;
      for (Int dim : simple_module_dims(q, shifted))
        if (dim >= 1 && dim <= d) ++bad;
    }
  }
  c.check(bad == 0, std::to_string(bad) + " construction failures");
}

void criterion_4() {
  Criterion c(4, "Molien cross-oracle: A1 L=8 buffers 0..2 and A2 L=6");
  QuiverSpec a1 = double_quiver(build_extended_dynkin("A1"));
  ParamVector half = parse_param("1/2,1/2");
  std::vector<Int> expected = {1, 1, 4, 4, 9, 9, 16, 16, 25};
  if (cumulative(molien_dims(cyclic_group(2), 8)) != expected) {
    c.check(false, "Z/2 oracle does not reproduce the frozen series");
    return;
  }
  for (int b : {0, 1, 2}) {
    auto dims = spherical_dims(a1, half, 8, b);
    c.check(dims == expected,
            "A1 buffer " + std::to_string(b) + " disagrees with the oracle");
  }
  QuiverSpec a2 = double_quiver(build_extended_dynkin("A2"));
  auto oracle3 = cumulative(molien_dims(cyclic_group(3), 6));
  for (const char* lam : {"1/3,1/3,1/3", "1/2,1/4,1/4"}) {
    auto dims = spherical_dims(a2, parse_param(lam), 6);
    c.check(dims == oracle3,
            std::string("A2 lambda=(") + lam + ") disagrees with the oracle");
  }
}

void criterion_5(std::vector<int>& minimal_n_by_vertex_count) {
  Criterion c(5, "multiplication surjectivity with some passing N <= 3");
  for (int n : {2, 3, 4}) {
    FiberRing r = build_fiber_ring(n);
    MultScanReport rep = scan_mult_surjectivity(r, uniform_chi(n), 3, 8);
    c.check(rep.minimal_passing_n >= 1 && rep.minimal_passing_n <= 3,
            "n=" + std::to_string(n) + ": no passing N <= 3");
    minimal_n_by_vertex_count[n] = rep.minimal_passing_n;
  }
}

void criterion_6(const std::vector<int>& minimal_n_by_vertex_count) {
  Criterion c(6, "power stabilization at the minimal passing N");
  for (int n : {2, 3}) {
    int npow = minimal_n_by_vertex_count[n];
    if (npow < 1) {
      c.check(false, "n=" + std::to_string(n) + ": no N from criterion 5");
      continue;
    }
    FiberRing r = build_fiber_ring(n);
    PowerReport rep = check_power_stabilization(r, uniform_chi(n), npow, 4, 8);
    c.check(rep.holds, "n=" + std::to_string(n) + ": stabilization fails");
  }
}

void criterion_7() {
  Criterion c(7, "Kleinian presentation and invariant Hilbert function");
  for (int n : {2, 3, 4}) {
    FiberRing r = build_fiber_ring(n);
    KleinianReport rep = verify_kleinian_presentation(r, 8);
    c.check(rep.product_relation,
            "n=" + std::to_string(n) + ": A.B does not reduce to x^n");
    c.check(rep.invariants_spanned,
            "n=" + std::to_string(n) + ": invariants not spanned by x, A, B");
    c.check(invariant_hilbert(r, 12) == molien_dims(cyclic_group(n), 12),
            "n=" + std::to_string(n) + ": Hilbert function vs Molien mismatch");
  }
}

void criterion_8() {
  Criterion c(8, "Z-algebra suite: associativity, Morita (ii), controls");
  for (int n : {3, 4}) {  // quiver types A2 and A3
    GradedRingTruncation ring = build_type_a_ring(n, uniform_chi(n), 4, 8);
    ZAlgebraTruncation z = hat(std::move(ring), 4);
    AssociativityReport assoc = check_associativity(z);
    c.check(assoc.associative,
            "n=" + std::to_string(n) + ": associativity violated");
    c.check(check_units(z), "n=" + std::to_string(n) + ": unit axiom violated");
    MoritaReport morita = morita_condition_ii(z, 1);
    c.check(!morita.vacuous && morita.surjective,
            "n=" + std::to_string(n) + ": Morita (ii) not surjective at N=1");
  }
  // negative controls on a small model
  {
    GradedRingTruncation ring = build_type_a_ring(2, uniform_chi(2), 3, 6);
    ZAlgebraTruncation z = hat(std::move(ring), 3);
    BasisVec scaled = z.product(2, 1, 0, 1, 0, 1, 0);
    c.check(!scaled.empty(), "negative control: no product to perturb");
    for (auto& [idx, coef] : scaled) coef *= 2;
    z.set_override(2, 1, 0, 1, 0, 1, 0, scaled);
    AssociativityReport broken = check_associativity(z);
    c.check(!broken.associative && broken.witness.has_value(),
            "perturbed multiplication not caught with a witness");
  }
  {
    GradedRingTruncation ring = build_type_a_ring(2, uniform_chi(2), 2, 4);
    ZAlgebraTruncation z = hat(std::move(ring), 2);
    for (int d1 = 0; d1 <= 2; ++d1)
      for (int i1 = 0; i1 < z.dim(2, 1, d1); ++i1)
        for (int i2 = 0; i2 < z.dim(1, 0, 2 - d1); ++i2)
          z.set_override(2, 1, 0, d1, i1, 2 - d1, i2, {});
    MoritaReport broken = morita_condition_ii(z, 1);
    c.check(!broken.surjective && broken.witness.has_value() &&
                broken.witness->degree == 2,
            "deleted product not caught with a witness bidegree");
  }
  // integer decomposition, total correctness
  {
    bool ok = true;
    for (Int n = 1; n <= 10 && ok; ++n)
      for (Int m = n; m <= 200 && ok; ++m) {
        auto parts = decompose_sum(m, n);
        Int total = 0;
        for (Int p : parts) {
          if (p < n || p > 2 * n - 1) ok = false;
          total += p;
        }
        if (total != m) ok = false;
      }
    c.check(ok, "decompose_sum violated its contract");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_9(const std::string& cli, const std::string& golden_dir) {
  Criterion c(9, "CLI determinism: 10 canonical invocations, golden outputs");
  if (cli.empty()) {
    c.check(false, "no CLI path supplied");
    return;
  }
  const std::pair<const char*, const char*> invocations[] = {
      {"quiver_a2", "quiver --type A2"},
      {"quiver_d4_double", "quiver --type D4 --double"},
      {"roots_a1_b3", "roots --type A1 --bound 3"},
      {"classify_a1", "classify-weight --type A1 --xi \"-1,1\""},
      {"analyze_a1", "analyze --type A1 --lambda \"2,-1\""},
      {"choose_xi_a1", "choose-xi --type A1 --lambda \"2,-1\" --d 1"},
      {"weyl_a1", "weyl-decompose --type A1 --xi \"-1,1\" --seed 42"},
      {"semiinv_n2", "semiinv --n 2 --chi \"-1,1\" --m 1 --dmax 6"},
      {"molien_z3", "molien --group Z3 --dmax 12"},
      {"decompose_sum", "decompose-sum --m 7 --N 3"},
  };
  for (const auto& [name, args] : invocations) {
    std::string out1 = "/tmp/klein_acc_" + std::string(name) + "_1.json";
    std::string out2 = "/tmp/klein_acc_" + std::string(name) + "_2.json";
    std::string cmd1 = cli + " " + args + " > " + out1 + " 2>/dev/null";
    std::string cmd2 = cli + " " + args + " > " + out2 + " 2>/dev/null";
    int rc1 = std::system(cmd1.c_str());
    int rc2 = std::system(cmd2.c_str());
    c.check(rc1 == 0 && rc2 == 0, std::string(name) + ": nonzero exit");
    std::string run1 = slurp(out1), run2 = slurp(out2);
    c.check(!run1.empty() && run1 == run2,
            std::string(name) + ": outputs differ across runs");
    if (!golden_dir.empty()) {
      std::string golden = slurp(golden_dir + "/" + name + ".json");
      c.check(!golden.empty(), std::string(name) + ": missing golden file");
      c.check(run1 == golden, std::string(name) + ": differs from golden");
    }
    std::remove(out1.c_str());
    std::remove(out2.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  std::string golden = argc > 2 ? argv[2] : "";
  std::vector<int> minimal_n_by_vertex_count(8, -1);
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5(minimal_n_by_vertex_count);
  criterion_6(minimal_n_by_vertex_count);
  criterion_7();
  criterion_8();
  criterion_9(cli, golden);
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria FAILED\n";
  return failures;
}
