// Acceptance gate: one printed line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "kwb/chern.hpp"
#include "kwb/pipeline.hpp"
#include "test_util.hpp"

using namespace kwb;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", secs);
  if (error.empty()) {
    std::cout << "PASS  " << name << "  (" << timing << ")\n";
  } else {
    ++g_failures;
    std::cout << "FAIL  " << name << "  (" << timing << "): " << error << "\n";
  }
  std::cout.flush();
}

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// expansions shared between criteria, keyed by (name, a_max)
std::map<std::pair<std::string, int>, ExpandedAlgebra> g_cache;

const ExpandedAlgebra& expanded(const std::string& name, int a_max) {
  const auto key = std::make_pair(name, a_max);
  auto it = g_cache.find(key);
  if (it == g_cache.end())
    it = g_cache
             .emplace(key, expand_presentation(kwbtest::corpus(name),
                                               Window{-a_max, a_max, -8, 8}))
             .first;
  return it->second;
}

SparseVec random_vec(int dim, std::mt19937& rng) {
  SparseVec v;
  for (int i = 0; i < dim; ++i)
    if (rng() % 2) v[i] = Scalar(static_cast<int>(rng() % 11) - 5);
  return v;
}

int total_dim(const CyclicComplexWindow& cc, Bidegree total) {
  auto it = cc.slices.find(total);
  if (it == cc.slices.end() || it->second.empty()) return 0;
  return it->second.back().offset + it->second.back().dim;
}

PerfObject random_object(std::mt19937& rng, int depth) {
  const int pick = depth <= 0 ? 0 : static_cast<int>(rng() % 4);
  switch (pick) {
    case 1:
      return PerfObject::shifted(random_object(rng, depth - 1),
                                 static_cast<int>(rng() % 7) - 3);
    case 2:
    case 3:
      return PerfObject::cone(random_object(rng, depth - 1),
                              random_object(rng, depth - 1));
    default:
      return PerfObject::generator("k");
  }
}

// ---------------------------------------------------------------- criteria

void structure_gates() {
  const Window w{-6, 6, -8, 8};
  for (const auto& name : kwbtest::corpus_names()) {
    const auto start = std::chrono::steady_clock::now();
    const ExpandedAlgebra& e = expanded(name, 6);
    const auto problems = check_axioms(e.algebra);
    require(problems.empty(), name + ": " + (problems.empty() ? "" : problems.front()));

    const CoalgebraWindow bar = bar_construction(e.algebra, w);
    for (const auto& [b, m] : bar.codiff) {
      const Bidegree t = b + Bidegree{-1, 0};
      if (w.contains(t + Bidegree{-1, 0}))
        require(bar.codiff_at(t).multiply(m).is_zero(),
                name + ": codiff^2 != 0 at " + to_string(b));
    }

    // construction verifies b^2 = 0, B^2 = 0, bB + Bb = 0 exactly
    hochschild_mixed(e.algebra, w);

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    require(secs < 60.0, name + ": structure gates took " + std::to_string(secs) +
                             "s (budget 60s)");
  }
}

void double_dual() {
  const Window w{-5, 5, -8, 8};
  for (const auto& name : kwbtest::corpus_names()) {
    const DimComparison cmp = double_dual_report(expanded(name, 5).algebra, w);
    std::string site;
    for (const auto& [b, lr] : cmp.dims)
      if (!cmp.truncated.count(b) && lr.first != lr.second) {
        site = to_string(b) + ": " + std::to_string(lr.first) + " vs " +
               std::to_string(lr.second);
        break;
      }
    require(cmp.pass && site.empty(), name + " at " + site);
  }
}

void koszul_pair() {
  const Window w{-6, 6, -8, 8};
  // H(Lambda(x)^!) must be the polynomial pattern: one class per (-n,-n)
  {
    const HomologyReport h =
        homology(koszul_dual(expanded("exterior1", 6).algebra, w).as_complex());
    for (int n = 0; n <= 6; ++n)
      require(h.dim({-n, -n}) == 1,
              "H(exterior1^!) misses the class at (-" + std::to_string(n) + ",-" +
                  std::to_string(n) + ")");
    int total = 0;
    for (const auto& [b, v] : h.dims) total += v;
    require(total == 7, "H(exterior1^!) has extra classes");
  }
  // H(k[x]^!) must be the exterior pattern: unit plus one odd generator
  {
    const HomologyReport h =
        homology(koszul_dual(expanded("poly1", 6).algebra, w).as_complex());
    require(h.dim({0, 0}) == 1, "H(poly1^!) misses the unit");
    require(h.dim({-1, -1}) == 1, "H(poly1^!) misses the odd generator");
    int total = 0;
    for (const auto& [b, v] : h.dims) total += v;
    require(total == 2, "H(poly1^!) has extra classes");
  }
}

void quadratic_dual_crosscheck() {
  const Window w{-6, 6, -8, 8};
  const DimComparison cmp = compare_quadratic_vs_bar(kwbtest::corpus("poly2"), w);
  require(cmp.pass, "bar-model homology disagrees with the quadratic dual");
  // per dual Adams degree the pattern is 1, 2, 1, 0, 0, ...
  const HomologyReport h =
      homology(koszul_dual(expanded("poly2", 6).algebra, w).as_complex());
  std::map<int, int> by_adams;
  for (const auto& [b, v] : h.dims) by_adams[-b.a] += v;
  const int expected[4] = {1, 2, 1, 0};
  for (int a = 0; a <= 3; ++a)
    require(by_adams[a] == expected[a],
            "H(poly2^!) at dual Adams degree " + std::to_string(a) + " is " +
                std::to_string(by_adams[a]) + ", expected " +
                std::to_string(expected[a]));
}

void jones_mccleary() {
  const Window w{-5, 5, -8, 8};
  for (const auto& name : kwbtest::corpus_names()) {
    const JMReport r = jones_mccleary_compare(expanded(name, 5).algebra, w);
    const auto blame = [&](const DimComparison& cmp) {
      for (const auto& [b, lr] : cmp.dims)
        if (!cmp.truncated.count(b) && lr.first != lr.second)
          return cmp.lhs_name + " vs " + cmp.rhs_name + " at " + to_string(b) +
                 ": " + std::to_string(lr.first) + " vs " +
                 std::to_string(lr.second);
      return std::string();
    };
    require(r.forward.pass, name + ": " + blame(r.forward));
    require(r.mirrored.pass, name + ": " + blame(r.mirrored));
  }
}

void trivial_algebra_tables() {
  const Window w{-6, 6, -8, 8};
  const MixedComplexWindow m = hochschild_mixed(expanded("ground", 6).algebra, w);
  const HomologyReport hc = cyclic_homology(cyclic_complex(m, CyclicVariant::Cyclic));
  const HomologyReport hcm =
      cyclic_homology(cyclic_complex(m, CyclicVariant::Negative));
  const HomologyReport hcp =
      cyclic_homology(cyclic_complex(m, CyclicVariant::Periodic));
  for (int h = -8; h <= 8; ++h) {
    const Bidegree b{h, 0};
    require(!hc.is_truncated(b) && !hcm.is_truncated(b) && !hcp.is_truncated(b),
            "table entry at degree " + std::to_string(h) + " is truncated");
    require(hc.dim(b) == ((h >= 0 && h % 2 == 0) ? 1 : 0),
            "HC_" + std::to_string(h) + "(k) != expected");
    require(hcm.dim(b) == ((h <= 0 && h % 2 == 0) ? 1 : 0),
            "HC^-_" + std::to_string(h) + "(k) != expected");
    require(hcp.dim(b) == (h % 2 == 0 ? 1 : 0),
            "HC^per_" + std::to_string(h) + "(k) != expected");
  }
}

void pairing_properties() {
  const Window w{-4, 4, -8, 8};
  std::mt19937 rng(20260824);
  for (const auto& name : kwbtest::corpus_names()) {
    const ExpandedAlgebra& e = expanded(name, 4);
    const MixedComplexWindow m = hochschild_mixed(e.algebra, w);
    const CyclicComplexWindow neg = cyclic_complex(m, CyclicVariant::Negative);
    const CyclicCochainWindow cw = cyclic_cochain(e.algebra, w);

    // bilinearity over random classes in every populated opposite pair
    int bilinear_checks = 0;
    for (int h = -3; h <= 3 && bilinear_checks < 20; ++h)
      for (int a = -3; a <= 3 && bilinear_checks < 20; ++a) {
        const Bidegree xt{h, a};
        const int xd = total_dim(neg, xt);
        const int pd = total_dim(cw.cc, -xt);
        if (xd == 0 || pd == 0) continue;
        const CyclicClass p1{-xt, random_vec(pd, rng)};
        const CyclicClass x1{xt, random_vec(xd, rng)};
        const CyclicClass x2{xt, random_vec(xd, rng)};
        const Scalar c1(static_cast<int>(rng() % 9) - 4);
        const Scalar c2(static_cast<int>(rng() % 9) - 4);
        CyclicClass mix{xt, scaled(x1.coords, c1)};
        axpy(mix.coords, c2, x2.coords);
        require(cyclic_pairing(cw, p1, neg, mix) ==
                    c1 * cyclic_pairing(cw, p1, neg, x1) +
                        c2 * cyclic_pairing(cw, p1, neg, x2),
                name + ": pairing is not bilinear at " + to_string(xt));
        ++bilinear_checks;
      }

    // 100 randomized boundary perturbations leave the pairing unchanged
    const CyclicClass phi = contravariant_chern0(cw, 1);
    const CyclicClass x0 = chern0(neg, m, 3);
    const Scalar base = cyclic_pairing(cw, phi, neg, x0);
    const int yd = total_dim(neg, {1, 0});
    for (int t = 0; t < 100; ++t) {
      CyclicClass pert = x0;
      axpy(pert.coords, Scalar(1),
           neg.complex.diff_at({1, 0}).apply(random_vec(yd, rng)));
      require(cyclic_pairing(cw, phi, neg, pert) == base,
              name + ": pairing changed under a boundary perturbation");
    }

    // chain compatibility <D phi, x> = (-1)^h <phi, d x> on 100 elements
    int compat_checks = 0;
    while (compat_checks < 100) {
      bool advanced = false;
      for (int h = -3; h <= 3 && compat_checks < 100; ++h)
        for (int a = -3; a <= 3 && compat_checks < 100; ++a) {
          const Bidegree u{h, a};
          const Bidegree xt = -u + Bidegree{1, 0};
          const int pd = total_dim(cw.cc, u);
          const int xd = total_dim(neg, xt);
          if (pd == 0 || xd == 0) continue;
          const CyclicClass phi_r{u, random_vec(pd, rng)};
          const CyclicClass x_r{xt, random_vec(xd, rng)};
          const CyclicClass dphi{u + Bidegree{-1, 0},
                                 cw.cc.complex.diff_at(u).apply(phi_r.coords)};
          const CyclicClass dx{-u, neg.complex.diff_at(xt).apply(x_r.coords)};
          require(cyclic_pairing(cw, dphi, neg, x_r) ==
                      sign_pow(u.h) * cyclic_pairing(cw, phi_r, neg, dx),
                  name + ": chain compatibility fails at " + to_string(u));
          ++compat_checks;
          advanced = true;
        }
      if (!advanced) break;  // ground field: no populated pairs beyond (0,0)
    }
  }
}

void chern_and_k0() {
  const Window w{-4, 4, -8, 8};
  // chern0 outputs are cycles for every corpus algebra
  for (const auto& name : kwbtest::corpus_names()) {
    const ExpandedAlgebra& e = expanded(name, 4);
    const MixedComplexWindow m = hochschild_mixed(e.algebra, w);
    const CyclicComplexWindow neg = cyclic_complex(m, CyclicVariant::Negative);
    for (long mult : {1L, -2L}) {
      const CyclicClass c = chern0(neg, m, mult);  // throws if not a cycle
      require(vec_is_zero(neg.complex.diff_at(c.total).apply(c.coords)),
              name + ": chern0 is not a cycle");
    }
  }

  // commutation square on 50 generated objects
  FinitenessReport fin;
  fin.weakly_adams_connected = Verdict::Holds;
  std::mt19937 rng(42);
  for (int t = 0; t < 50; ++t) {
    const PerfObject x = random_object(rng, 5);
    const K0Class via_objects = euler_class(koszul_transform(x));
    const K0Class via_classes = k0_transport(euler_class(x), fin);
    require(via_objects.generator == via_classes.generator &&
                via_objects.m == via_classes.m,
            "transport square does not commute on " + to_string(x));
  }

  // triangle on Lambda(x): bilinear samples, generator value reproduced
  // across runs and across A versus its double Koszul dual
  const ExpandedAlgebra& e = expanded("exterior1", 4);
  const FinitenessReport ef = classify_finiteness(e.pres);
  const TriangleReport r1 = loday_triangle_check(e.algebra, ef, w);
  const TriangleReport r2 = loday_triangle_check(e.algebra, ef, w);
  require(r1.pass, "triangle samples disagree with m * m' on exterior1");
  for (size_t i = 0; i < r1.samples.size(); ++i) {
    require(r1.samples[i].direct == Scalar(r1.samples[i].m * r1.samples[i].mp),
            "triangle sample is not bilinear");
    require(r1.samples[i].direct == r2.samples[i].direct &&
                r1.samples[i].mirrored == r2.samples[i].mirrored,
            "triangle values differ between runs");
  }
  const Scalar generator_value = r1.samples.front().direct;  // the (1,1) sample
  require(generator_value == Scalar(1), "generator pairing value is not 1");

  AlgebraWindow dd = koszul_dual(koszul_dual(e.algebra, w), w);
  const TriangleReport rd = loday_triangle_check(dd, ef, w);
  require(rd.pass, "triangle fails on the double dual of exterior1");
  require(rd.samples.front().direct == generator_value,
          "generator value differs between exterior1 and its double dual");
}

void finiteness_implications() {
  for (const auto& name : kwbtest::corpus_names()) {
    const FinitenessReport f = classify_finiteness(kwbtest::corpus(name));
    require(f.adams_connected == Verdict::Holds, name + " is not Adams connected");
    require(f.strongly_locally_finite == Verdict::Holds,
            name + ": Adams connected must imply strongly locally finite");
    require(f.weakly_adams_connected == Verdict::Holds,
            name + ": strongly locally finite must imply weak Adams connectivity");
  }
  // the deliberately failing case: a polynomial generator at Adams degree 0
  const Presentation bad =
      parse_presentation("field Q\ngenerator x 0 0\n", "adams0");
  const FinitenessReport f = classify_finiteness(bad);
  require(f.adams_connected == Verdict::Fails, "adams0 must fail connectivity");
  require(!f.witness.empty(), "adams0 failure carries no witness");
  require(f.strongly_locally_finite == Verdict::Fails,
          "adams0 is not strongly locally finite");
}

void determinism() {
  PipelineOptions opt;
  opt.algebra_path = kwbtest::corpus_path("exterior1");
  opt.adams_max = 3;
  const ReportBundle r1 = run_pipeline(opt);
  const ReportBundle r2 = run_pipeline(opt);
  require(to_tsv(r1) == to_tsv(r2), "repeated runs differ (tsv)");
  require(to_json(r1) == to_json(r2), "repeated runs differ (json)");
  require(r1.all_pass(), "full pipeline reports a failing verdict");

  const fs::path cache = fs::temp_directory_path() / "kwb_acceptance_cache";
  fs::remove_all(cache);
  opt.cache_dir = cache.string();
  const std::string cold = to_tsv(run_pipeline(opt));
  bool wrote = false;
  for (const auto& entry : fs::directory_iterator(cache)) {
    (void)entry;
    wrote = true;
  }
  require(wrote, "cold run left no cache entry");
  const std::string warm = to_tsv(run_pipeline(opt));
  require(warm == cold, "warm cache differs from the cold run");
  require(warm == to_tsv(r1), "cached output differs from the uncached run");
  fs::remove_all(cache);
}

}  // namespace

int main() {
  criterion("1 structure-gates (d^2, associativity, Leibniz, codiff^2, mixed identities)",
            structure_gates);
  criterion("2 double-dual dimensions", double_dual);
  criterion("3 koszul-pair sanity (exterior <-> polynomial)", koszul_pair);
  criterion("4 quadratic-dual cross-check for k[x,y]", quadratic_dual_crosscheck);
  criterion("5 negative-cyclic vs cochain-cyclic of the dual", jones_mccleary);
  criterion("6 trivial-algebra cyclic tables", trivial_algebra_tables);
  criterion("7 pairing bilinearity, boundary annihilation, chain compatibility",
            pairing_properties);
  criterion("8 Chern classes, K0 transport square, triangle values", chern_and_k0);
  criterion("9 finiteness implications and the failing Adams-0 case",
            finiteness_implications);
  criterion("10 determinism and cache transparency", determinism);
  return g_failures;
}
