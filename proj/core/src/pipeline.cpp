#include "kwb/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "kwb/chern.hpp"
#include "kwb/parser.hpp"

namespace kwb {

const std::vector<std::string>& pipeline_tasks() {
  static const std::vector<std::string> tasks = {
      "expand", "classify",  "bar",    "dual",       "double-dual",
      "hh",     "hc",        "hc-minus", "hc-per",   "hc-cochain",
      "jm-compare", "quad-dual", "chern", "pairing", "triangle"};
  return tasks;
}

namespace {

HomologyReport basis_dims(const GradedBasis& basis) {
  HomologyReport r;
  for (const auto& [b, ls] : basis.labels)
    if (!ls.empty()) r.dims[b] = static_cast<int>(ls.size());
  return r;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string tsv_field(const std::string& s) {
  std::string out;
  for (char c : s) out += (c == '\t' || c == '\n') ? ' ' : c;
  return out;
}

/// Shared lazily-computed intermediates for one invocation.
struct Ctx {
  Presentation pres;
  Window w;

  std::optional<ExpandedAlgebra> exp;
  std::optional<FinitenessReport> fin;
  std::optional<CoalgebraWindow> barc;
  std::optional<AlgebraWindow> dual;
  std::optional<MixedComplexWindow> mixed;

  const ExpandedAlgebra& expanded() {
    if (!exp) exp = expand_presentation(pres, w);
    return *exp;
  }
  const FinitenessReport& finiteness() {
    if (!fin) fin = classify_finiteness(pres);
    return *fin;
  }
  const CoalgebraWindow& bar() {
    if (!barc) barc = bar_construction(expanded().algebra, w);
    return *barc;
  }
  const AlgebraWindow& koszul() {
    if (!dual) {
      dual = dual_algebra(bar());
      dual->name = pres.name + "!";
    }
    return *dual;
  }
  const MixedComplexWindow& hochschild() {
    if (!mixed) mixed = hochschild_mixed(expanded().algebra, w);
    return *mixed;
  }
};

void run_task(const std::string& task, Ctx& c, ReportBundle& out) {
  if (task == "expand") {
    const ExpandedAlgebra& e = c.expanded();
    out.add_dims("A", basis_dims(e.algebra.basis));
    out.add_dims("H(A)", homology(e.algebra.as_complex()));
    out.add_verdict("expand", true, "algebra axioms verified in the window");
  } else if (task == "classify") {
    const FinitenessReport& f = c.finiteness();
    out.notes["adams-connected"] = to_string(f.adams_connected);
    out.notes["strongly-locally-finite"] = to_string(f.strongly_locally_finite);
    out.notes["weakly-adams-connected"] = to_string(f.weakly_adams_connected);
    if (!f.witness.empty()) out.notes["finiteness-witness"] = f.witness;
  } else if (task == "bar") {
    out.add_dims("B(A)", basis_dims(c.bar().basis));
  } else if (task == "dual") {
    const AlgebraWindow& d = c.koszul();
    out.add_dims("A!", basis_dims(d.basis));
    out.add_dims("H(A!)", homology(d.as_complex()));
  } else if (task == "double-dual") {
    out.add_comparison("double-dual", double_dual_report(c.expanded().algebra, c.w));
  } else if (task == "hh") {
    ChainComplexWindow hh{c.w, c.hochschild().basis, c.hochschild().b_op};
    out.add_dims("HH", homology(hh));
  } else if (task == "hc") {
    out.add_dims("HC", cyclic_homology(cyclic_complex(c.hochschild(),
                                                      CyclicVariant::Cyclic)));
  } else if (task == "hc-minus") {
    out.add_dims("HC^-", cyclic_homology(cyclic_complex(c.hochschild(),
                                                        CyclicVariant::Negative)));
  } else if (task == "hc-per") {
    out.add_dims("HC^per", cyclic_homology(cyclic_complex(c.hochschild(),
                                                          CyclicVariant::Periodic)));
  } else if (task == "hc-cochain") {
    out.add_dims("HC^*",
                 cyclic_homology(cyclic_cochain(c.expanded().algebra, c.w).cc));
  } else if (task == "jm-compare") {
    const JMReport jm = jones_mccleary_compare(c.expanded().algebra, c.w);
    out.add_comparison("jm-forward", jm.forward);
    out.add_comparison("jm-mirrored", jm.mirrored);
  } else if (task == "quad-dual") {
    out.add_comparison("quad-dual", compare_quadratic_vs_bar(c.pres, c.w));
  } else if (task == "chern") {
    const MixedComplexWindow& m = c.hochschild();
    const CyclicComplexWindow neg = cyclic_complex(m, CyclicVariant::Negative);
    for (long mult : {1L, 2L, -3L}) chern0(neg, m, mult);
    const CyclicCochainWindow coch = cyclic_cochain(c.expanded().algebra, c.w);
    for (long mult : {1L, 2L, -3L}) contravariant_chern0(coch, mult);
    const K0Class t = k0_transport({"k", 1}, c.finiteness());
    out.notes["k0-transport"] = "[k] -> " + std::to_string(t.m) + "[" +
                                t.generator + "]";
    out.add_verdict("chern", true, "Chern classes are (b+uB)-cycles");
  } else if (task == "pairing") {
    const MixedComplexWindow& m = c.hochschild();
    const CyclicComplexWindow neg = cyclic_complex(m, CyclicVariant::Negative);
    const CyclicCochainWindow coch = cyclic_cochain(c.expanded().algebra, c.w);
    bool ok = true;
    std::string detail = "<ch^(m[k]), ch(m'[A])> = m*m'";
    for (auto [mm, mp] : {std::pair<long, long>{1, 1}, {2, 3}, {-1, 2}}) {
      const Scalar v = cyclic_pairing(coch, contravariant_chern0(coch, mm), neg,
                                      chern0(neg, m, mp));
      if (v != Scalar(mm * mp)) {
        ok = false;
        detail = "pairing gave " + scalar_to_string(v) + " for m=" +
                 std::to_string(mm) + ", m'=" + std::to_string(mp);
        break;
      }
    }
    out.add_verdict("pairing", ok, detail);
  } else if (task == "triangle") {
    const TriangleReport tr =
        loday_triangle_check(c.expanded().algebra, c.finiteness(), c.w);
    std::string detail = "direct and transported pairings agree with the rank form";
    for (const auto& s : tr.samples)
      if (s.direct != Scalar(s.m * s.mp) || s.mirrored != Scalar(s.m * s.mp)) {
        detail = "mismatch at m=" + std::to_string(s.m) + ", m'=" +
                 std::to_string(s.mp) + ": direct " + scalar_to_string(s.direct) +
                 ", transported " + scalar_to_string(s.mirrored);
        break;
      }
    out.add_verdict("triangle", tr.pass, detail);
  } else {
    throw std::runtime_error("unknown task '" + task + "'");
  }
}

}  // namespace

std::string serialize_bundle(const ReportBundle& r) {
  std::ostringstream os;
  os << "bundle\t" << kReportSchemaVersion << "\n";
  os << "algebra\t" << tsv_field(r.algebra) << "\n";
  os << "window\t" << r.window.a_min << "\t" << r.window.a_max << "\t"
     << r.window.h_min << "\t" << r.window.h_max << "\n";
  for (const auto& t : r.tasks) os << "task\t" << tsv_field(t) << "\n";
  for (const auto& row : r.rows)
    os << "row\t" << tsv_field(row.theory) << "\t" << row.h << "\t" << row.a << "\t"
       << row.dim << "\t" << (row.truncated ? 1 : 0) << "\n";
  for (const auto& v : r.verdicts)
    os << "verdict\t" << tsv_field(v.check) << "\t" << (v.pass ? 1 : 0) << "\t"
       << tsv_field(v.detail) << "\n";
  for (const auto& [k, v] : r.notes)
    os << "note\t" << tsv_field(k) << "\t" << tsv_field(v) << "\n";
  return os.str();
}

std::optional<ReportBundle> deserialize_bundle(const std::string& payload) {
  ReportBundle r;
  std::istringstream in(payload);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    size_t start = 0;
    while (true) {
      const size_t tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    try {
      if (f[0] == "bundle" && f.size() == 2) {
        if (std::stoi(f[1]) != kReportSchemaVersion) return std::nullopt;
        header = true;
      } else if (f[0] == "algebra" && f.size() == 2) {
        r.algebra = f[1];
      } else if (f[0] == "window" && f.size() == 5) {
        r.window = {std::stoi(f[1]), std::stoi(f[2]), std::stoi(f[3]),
                    std::stoi(f[4])};
      } else if (f[0] == "task" && f.size() == 2) {
        r.tasks.push_back(f[1]);
      } else if (f[0] == "row" && f.size() == 6) {
        r.rows.push_back({f[1], std::stoi(f[2]), std::stoi(f[3]), std::stoi(f[4]),
                          f[5] == "1"});
      } else if (f[0] == "verdict" && f.size() == 4) {
        r.verdicts.push_back({f[1], f[2] == "1", f[3]});
      } else if (f[0] == "note" && f.size() == 3) {
        r.notes[f[1]] = f[2];
      } else {
        return std::nullopt;
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (!header) return std::nullopt;
  return r;
}

ReportBundle run_pipeline(const PipelineOptions& opt) {
  Ctx c;
  c.pres = load_presentation(opt.algebra_path);
  if (opt.adams_max < 0) throw std::runtime_error("adams-max must be nonnegative");
  if (opt.hmin > opt.hmax) throw std::runtime_error("empty homological window");
  c.w = Window{-opt.adams_max, opt.adams_max, opt.hmin, opt.hmax};

  // normalize the task list into canonical execution order
  std::vector<std::string> tasks;
  for (const std::string& t : pipeline_tasks()) {
    const bool wanted =
        opt.tasks.empty() ||
        std::find(opt.tasks.begin(), opt.tasks.end(), t) != opt.tasks.end();
    if (wanted) tasks.push_back(t);
  }
  for (const std::string& t : opt.tasks)
    if (std::find(tasks.begin(), tasks.end(), t) == tasks.end())
      throw std::runtime_error("unknown task '" + t + "'");

  std::string cache_dir = opt.cache_dir;
  if (cache_dir.empty())
    if (const char* env = std::getenv("KWB_CACHE_DIR")) cache_dir = env;

  std::string cache_file;
  if (!cache_dir.empty()) {
    std::string key_src = c.pres.pretty_print() + "\n" + c.pres.name + "\n" +
                          to_string(c.w) + "\n";
    for (const auto& t : tasks) key_src += t + ";";
    key_src += "\nschema=" + std::to_string(kReportSchemaVersion);
    char key[32];
    std::snprintf(key, sizeof key, "%016llx",
                  static_cast<unsigned long long>(fnv1a(key_src)));
    cache_file = cache_dir + "/" + key + ".kwb";
    std::ifstream in(cache_file);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      if (auto cached = deserialize_bundle(buf.str())) return *cached;
    }
  }

  ReportBundle out;
  out.algebra = c.pres.name;
  out.window = c.w;
  out.tasks = tasks;
  for (const std::string& t : tasks) run_task(t, c, out);
  out.normalize();

  if (!cache_file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    std::ofstream of(cache_file, std::ios::trunc);
    if (of) of << serialize_bundle(out);
  }
  return out;
}

}  // namespace kwb
