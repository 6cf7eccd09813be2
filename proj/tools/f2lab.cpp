// f2lab command-line front end. Every subcommand is a thin adapter over the
// library; no domain logic lives here.
//
// Exit codes: 0 ok, 1 verification violation, 2 usage/parse, 3 resource limit.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "f2lab/bounds.hpp"
#include "f2lab/classify.hpp"
#include "f2lab/config.hpp"
#include "f2lab/normal.hpp"
#include "f2lab/set_io.hpp"
#include "f2lab/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace f2lab;

constexpr const char* kVersion = "0.1.0";

int exit_code_for(Err e) {
  switch (e) {
    case Err::Parse:
    case Err::EmptySet:
    case Err::DimMismatch:
    case Err::OutOfRange:
    case Err::Singleton:
      return 2;
    case Err::ResourceLimit:
    case Err::CapExceeded:
      return 3;
    default:
      return 1;
  }
}

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  ordered_json results = ordered_json::object();
  std::vector<std::string> violations;

  ordered_json to_json() const {
    ordered_json j;
    j["command"] = command;
    j["version"] = kVersion;
    j["inputs"] = inputs;
    j["results"] = results;
    j["violations"] = violations;
    return j;
  }
  int exit_code() const { return violations.empty() ? 0 : 1; }
};

ordered_json rational_json(const Rational& r) { return {r.num(), r.den()}; }

ordered_json set_json(const GF2Set& a) {
  ordered_json arr = ordered_json::array();
  a.for_each([&](uint32_t p) { arr.push_back(bitstring(a.dim(), p)); });
  return arr;
}

void emit(const Report& report, bool json_mode, const std::string& text) {
  if (json_mode) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << "f2lab " << kVersion << "\n" << text;
    for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
  }
}

// ---- stats -----------------------------------------------------------------

int cmd_stats(const std::string& file, bool json_mode) {
  Report report{"stats", {file}, {}, {}};
  const GF2Set a = read_set_file(file);
  const Rational sigma = doubling_constant(a);
  const AffineSubspace hull = affine_hull(a);
  report.results["cardinality"] = a.cardinality();
  report.results["sumset_cardinality"] = sumset(a).cardinality();
  report.results["sigma"] = rational_json(sigma);
  report.results["hull_cardinality"] = hull.cardinality();
  report.results["hull_ratio"] = rational_json(hull_ratio(a));

  std::ostringstream text;
  text << "|A|      " << a.cardinality() << "\n"
       << "|A+A|    " << sumset(a).cardinality() << "\n"
       << "sigma    " << sigma.str() << "\n"
       << "hull     " << hull.cardinality() << "\n"
       << "ratio    " << hull_ratio(a).str() << "\n";
  emit(report, json_mode, text.str());
  return report.exit_code();
}

// ---- cover -----------------------------------------------------------------

int cmd_cover(const std::string& file, int cap, bool json_mode) {
  Report report{"cover", {file}, {}, {}};
  const GF2Set a = read_set_file(file);
  const CoverResult cover = cover_number(a, cap);
  ordered_json basis = ordered_json::array();
  for (uint32_t r : cover.subspace.basis()) basis.push_back(bitstring(a.dim(), r));
  ordered_json reps = ordered_json::array();
  for (uint32_t r : cover.coset_reps) reps.push_back(bitstring(a.dim(), r));
  report.results["count"] = cover.count;
  report.results["subspace_dim"] = cover.subspace.dim();
  report.results["subspace_basis"] = basis;
  report.results["coset_representatives"] = reps;
  report.results["optimal"] = cover.optimal;

  std::ostringstream text;
  text << "cover count " << cover.count << (cover.optimal ? " (optimal)" : "") << "\n"
       << "subspace dim " << cover.subspace.dim() << "\n";
  for (uint32_t r : cover.subspace.basis())
    text << "  basis " << bitstring(a.dim(), r) << "\n";
  for (uint32_t r : cover.coset_reps)
    text << "  coset " << bitstring(a.dim(), r) << "\n";
  emit(report, json_mode, text.str());
  return report.exit_code();
}

// ---- normal ----------------------------------------------------------------

class FileCheckpoint : public EnumCheckpoint {
 public:
  FileCheckpoint(const std::string& checkpoint_path, const std::string& survivor_path)
      : ckpt_path_(checkpoint_path), surv_path_(survivor_path) {
    std::ifstream in(ckpt_path_);
    int d, p;
    while (in >> d >> p) done_.insert({d, p});
    std::ifstream sin(surv_path_);
    std::string line;
    while (std::getline(sin, line)) {
      std::istringstream ls(line);
      int sd;
      ls >> sd;
      GF2Set t(sd);
      uint32_t pt;
      char comma;
      while (ls >> pt) {
        t.insert(pt);
        ls >> comma;
      }
      stored_.emplace_back(sd, std::move(t));
    }
  }

  bool is_branch_done(int d, int first_point) const override {
    return done_.count({d, first_point}) > 0;
  }
  void branch_completed(int d, int first_point) override {
    done_.insert({d, first_point});
    std::ofstream out(ckpt_path_, std::ios::app);
    out << d << " " << first_point << "\n";
  }
  void survivor_found(int d, const GF2Set& t) override {
    std::ofstream out(surv_path_, std::ios::app);
    out << d;
    bool first = true;
    t.for_each([&](uint32_t p) {
      out << (first ? " " : ",") << p;
      first = false;
    });
    out << "\n";
  }
  std::vector<std::pair<int, GF2Set>> stored_survivors() const override { return stored_; }

 private:
  std::string ckpt_path_, surv_path_;
  std::set<std::pair<int, int>> done_;
  std::vector<std::pair<int, GF2Set>> stored_;
};

int cmd_normal_check(int n, bool extended, bool json_mode) {
  Report report{"normal check", {}, {}, {}};
  const NormalityVerdict v = is_normal_number(n, extended);
  report.results["n"] = v.n;
  report.results["is_normal"] = v.is_normal;
  if (v.witness) report.results["witness"] = set_json(*v.witness);
  ordered_json space = ordered_json::array();
  for (const auto& [d, count] : v.search_space) space.push_back({d, count});
  report.results["search_space"] = space;

  std::ostringstream text;
  text << n << (v.is_normal ? " is normal" : " is not normal") << "\n";
  for (const auto& [d, count] : v.search_space)
    text << "  d=" << d << " candidates examined " << count << "\n";
  emit(report, json_mode, text.str());
  return report.exit_code();
}

int cmd_normal_enum(int n, bool extended, const std::string& out_dir,
                    const std::string& checkpoint, bool json_mode) {
  Report report{"normal enum", {}, {}, {}};
  std::unique_ptr<FileCheckpoint> ckpt;
  if (!checkpoint.empty()) {
    const std::string surv = checkpoint + ".survivors";
    ckpt = std::make_unique<FileCheckpoint>(checkpoint, surv);
  }
  const auto classes = enumerate_normal_level(n, extended, ckpt.get());

  ordered_json index;
  index["level"] = n;
  index["count"] = classes.size();
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << classes.size() << " classes at level " << n << "\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    const auto& cls = classes[i];
    char name[32];
    std::snprintf(name, sizeof name, "class_%03zu.set", i);
    ordered_json row;
    row["file"] = name;
    row["span_dim"] = cls.span_dim;
    row["rank"] = cls.rank;
    rows.push_back(row);
    if (!out_dir.empty()) write_set_file(out_dir + "/" + name, cls.representative);
    text << "  " << name << " span_dim " << cls.span_dim << " rank " << cls.rank << "\n";
  }
  index["classes"] = rows;
  if (!out_dir.empty()) {
    std::ofstream out(out_dir + "/index.json");
    out << index.dump(2) << "\n";
  }
  report.results = index;
  emit(report, json_mode, text.str());
  return report.exit_code();
}

// ---- classify ----------------------------------------------------------------

int cmd_classify(const std::string& file, const std::string& json_out, bool json_mode) {
  Report report{"classify", {file}, {}, {}};
  const GF2Set a = read_set_file(file);
  const StructureCertificate cert = classify(a);
  const VerifyOutcome outcome = verify_certificate(a, cert);
  for (const auto& reason : outcome.reasons) report.violations.push_back(reason);

  const ordered_json cert_json = certificate_to_json(cert);
  if (!json_out.empty()) {
    if (json_out == "-") {
      std::cout << cert_json.dump(2) << "\n";
    } else {
      std::ofstream out(json_out);
      out << cert_json.dump(2) << "\n";
    }
  }
  report.results["certificate"] = cert_json;
  report.results["verified"] = outcome.ok;

  std::ostringstream text;
  text << "sigma    " << cert.sigma.str() << "\n"
       << "level    " << cert.level << "\n"
       << "dim H    " << cert.stabilizer_h.dim() << "\n"
       << "density  " << cert.density.str() << "\n"
       << "m bound  " << cert.m_bound << "\n"
       << "verified " << (outcome.ok ? "yes" : "NO") << "\n";
  emit(report, json_mode, text.str());
  return report.exit_code();
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const std::string& suite, const VerifyOptions& opt, bool json_mode) {
  Report report{"verify " + suite, {}, {}, {}};
  const auto results = run_suite(suite, opt);
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    ordered_json row;
    row["check"] = r.name;
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    rows.push_back(row);
    text << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) text << " — " << r.detail;
    text << "\n";
    if (!r.pass) report.violations.push_back(r.name);
  }
  report.results["checks"] = rows;
  report.results["seed"] = opt.seed;
  report.results["samples"] = opt.samples;
  emit(report, json_mode, text.str());
  return report.exit_code();
}

// ---- fk / gk ------------------------------------------------------------------

int cmd_fk(int ambient, bool grid, int jobs, bool json_mode) {
  Report report{"fk", {}, {}, {}};
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << std::left << std::setw(10) << "sigma" << std::setw(12) << "max_ratio"
       << std::setw(12) << "F_theory" << "\n";
  for (const auto& row : empirical_F(ambient, jobs)) {
    const Rational f = F_theory(row.sigma);
    ordered_json j;
    j["sigma_num"] = row.sigma.num();
    j["sigma_den"] = row.sigma.den();
    j["max_ratio"] = rational_json(row.max_ratio);
    j["f_theory"] = rational_json(f);
    j["argmax"] = set_json(row.argmax);
    rows.push_back(j);
    text << std::setw(10) << row.sigma.str() << std::setw(12) << row.max_ratio.str()
         << std::setw(12) << f.str() << "\n";
    if (row.max_ratio > f)
      report.violations.push_back("hull ratio exceeds F at sigma " + row.sigma.str());
  }
  report.results["ambient"] = ambient;
  report.results["rows"] = rows;
  if (grid) {
    ordered_json grid_rows = ordered_json::array();
    text << "\n" << std::left << std::setw(10) << "K" << std::setw(12) << "F_theory"
         << std::setw(12) << "F_formula" << std::setw(12) << "dhp" << "\n";
    for (int j = 0; j < 64; ++j) {
      const Rational k(64 + j, 64);
      ordered_json gr;
      gr["k"] = rational_json(k);
      gr["f_theory"] = rational_json(F_theory(k));
      if (k >= Rational(7, 4)) gr["f_formula"] = rational_json(F_formula(k));
      gr["dhp"] = rational_json(dhp_bound(k));
      grid_rows.push_back(gr);
      text << std::setw(10) << k.str() << std::setw(12) << F_theory(k).str()
           << std::setw(12) << (k >= Rational(7, 4) ? F_formula(k).str() : "-")
           << std::setw(12) << dhp_bound(k).str() << "\n";
    }
    report.results["grid"] = grid_rows;
  }
  emit(report, json_mode, text.str());
  return report.exit_code();
}

int cmd_gk(int ambient, int jobs, bool json_mode) {
  Report report{"gk", {}, {}, {}};
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << std::left << std::setw(10) << "sigma" << std::setw(12) << "max_cover"
       << std::setw(12) << "G_theory" << "\n";
  for (const auto& row : empirical_G(ambient, jobs)) {
    const int g = G_theory(row.sigma);
    ordered_json j;
    j["sigma_num"] = row.sigma.num();
    j["sigma_den"] = row.sigma.den();
    j["max_cover"] = row.max_cover;
    j["g_theory"] = g;
    j["argmax"] = set_json(row.argmax);
    rows.push_back(j);
    text << std::setw(10) << row.sigma.str() << std::setw(12) << row.max_cover
         << std::setw(12) << g << "\n";
    if (row.max_cover > g)
      report.violations.push_back("cover exceeds G at sigma " + row.sigma.str());
  }
  report.results["ambient"] = ambient;
  report.results["rows"] = rows;
  emit(report, json_mode, text.str());
  return report.exit_code();
}

// ---- witness -------------------------------------------------------------------

int cmd_witness(const std::string& kind_name, const std::string& out_file, bool json_mode) {
  Report report{"witness " + kind_name, {}, {}, {}};
  WitnessKind kind;
  if (kind_name == "F_eq")
    kind = WitnessKind::F_eq;
  else if (kind_name == "G3")
    kind = WitnessKind::G3;
  else if (kind_name == "G4")
    kind = WitnessKind::G4;
  else
    fail(Err::OutOfRange, "witness kind must be F_eq, G3 or G4");

  const WitnessReport w = make_witness(kind);
  if (!out_file.empty()) write_set_file(out_file, w.set);
  report.results["cardinality"] = w.set.cardinality();
  report.results["sigma"] = rational_json(w.sigma);
  report.results["hull_ratio"] = rational_json(w.hull);
  report.results["cover_count"] = w.cover_count;
  ordered_json claims = ordered_json::array();
  std::ostringstream text;
  text << "|A| " << w.set.cardinality() << ", sigma " << w.sigma.str() << ", cover "
       << w.cover_count << "\n";
  for (const auto& [name, ok] : w.claims) {
    claims.push_back({{"claim", name}, {"pass", ok}});
    text << (ok ? "  ok   " : "  FAIL ") << name << "\n";
    if (!ok) report.violations.push_back(name);
  }
  report.results["claims"] = claims;
  emit(report, json_mode, text.str());
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  apply_env_overrides();
  CLI::App app{"exact additive-structure toolkit for F_2^m"};
  app.require_subcommand(1);
  bool json_mode = false;

  std::string file, out_dir, checkpoint, json_out, suite, kind, out_file;
  int n = 0, cap = 1 << 20, ambient = 3;
  bool extended = false, grid = false;
  VerifyOptions opt;

  auto add_json_flag = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json_mode, "machine-readable report on stdout");
  };

  auto* stats = app.add_subcommand("stats", "cardinalities, sigma, hull of a set file");
  stats->add_option("file", file)->required();
  add_json_flag(stats);

  auto* cover = app.add_subcommand("cover", "minimal coset cover of a set file");
  cover->add_option("file", file)->required();
  cover->add_option("--cap", cap, "largest cover count to search");
  add_json_flag(cover);

  auto* normal = app.add_subcommand("normal", "normal numbers and level enumeration");
  normal->require_subcommand(1);
  auto* ncheck = normal->add_subcommand("check", "normality verdict for n");
  ncheck->add_option("n", n)->required();
  ncheck->add_flag("--extended", extended, "allow levels 13..16 (long-running)");
  add_json_flag(ncheck);
  auto* nenum = normal->add_subcommand("enum", "all level-n classes up to 2-isomorphism");
  nenum->add_option("n", n)->required();
  nenum->add_flag("--extended", extended, "allow levels 13..16 (long-running)");
  nenum->add_option("--out", out_dir, "directory for class set files + index.json");
  nenum->add_option("--checkpoint", checkpoint, "resumable progress file");
  add_json_flag(nenum);

  auto* classify_cmd = app.add_subcommand("classify", "structure certificate for a set file");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--json", json_out, "certificate JSON path ('-' = stdout)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "thm18|thm19|kneser|rank|galois|all")->required();
  verify->add_option("--seed", opt.seed);
  verify->add_option("--samples", opt.samples);
  verify->add_flag("--extended", opt.extended);
  verify->add_option("--jobs", opt.jobs);
  add_json_flag(verify);

  auto* fk = app.add_subcommand("fk", "empirical extremal hull ratios vs F");
  fk->add_option("--ambient", ambient, "scan F_2^ambient (<= 4)");
  fk->add_flag("--grid", grid, "include the K grid table");
  fk->add_option("--jobs", opt.jobs);
  add_json_flag(fk);

  auto* gk = app.add_subcommand("gk", "empirical extremal covers vs G");
  gk->add_option("--ambient", ambient, "scan F_2^ambient (<= 4)");
  gk->add_option("--jobs", opt.jobs);
  add_json_flag(gk);

  auto* witness = app.add_subcommand("witness", "deterministic witness constructions");
  witness->add_option("kind", kind, "F_eq|G3|G4")->required();
  witness->add_option("--out", out_file, "write the witness set file");
  add_json_flag(witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*stats) return cmd_stats(file, json_mode);
    if (*cover) return cmd_cover(file, cap, json_mode);
    if (*ncheck) return cmd_normal_check(n, extended, json_mode);
    if (*nenum) return cmd_normal_enum(n, extended, out_dir, checkpoint, json_mode);
    if (*classify_cmd) return cmd_classify(file, json_out, json_mode);
    if (*verify) return cmd_verify(suite, opt, json_mode);
    if (*fk) return cmd_fk(ambient, grid, opt.jobs, json_mode);
    if (*gk) return cmd_gk(ambient, opt.jobs, json_mode);
    if (*witness) return cmd_witness(kind, out_file, json_mode);
  } catch (const F2Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
