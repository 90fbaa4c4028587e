// ainf: command-line front end over the corpus documents.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 for malformed input or usage.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ainf/corpus.hpp"
#include "ainf/deformation.hpp"
#include "ainf/suite.hpp"

namespace {

using namespace ainf;
using J = nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Bad command-line values detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  bool json = false;
  std::string parity = to_string(kDefaultParity);
  std::string side = "right";
};

int default_order() {
  const char* env = std::getenv("AINF_DEFAULT_ORDER");
  if (!env || !*env) return 6;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 12) throw UsageError("AINF_DEFAULT_ORDER must be an integer in [1, 12]");
  return static_cast<int>(v);
}

SuiteOptions options(const Globals& g, int order, int max_word) {
  SuiteOptions opt;
  opt.seed = g.seed;
  opt.order = order;
  opt.fundlem_order = std::min(order - 1, 5);
  opt.max_word = max_word;
  opt.parity = parse_parity(g.parity);
  opt.side = g.side == "left" ? DerivativeSide::left : DerivativeSide::right;
  return opt;
}

std::string render_report(const Report& r, const Globals& g) {
  return g.json ? r.to_json().dump(2) + "\n" : r.to_text();
}

/// x0^3*x2 style name; the empty monomial is "1".
std::string monomial_name(const VariableSet& vars, const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t e = k;
    while (e < m.size() && m[e] == m[k]) ++e;
    if (!out.empty()) out += "*";
    out += vars.name(m[k]);
    if (e - k > 1) out += "^" + std::to_string(e - k);
    k = e;
  }
  return out.empty() ? "1" : out;
}

std::string render_potential(const PotentialSeries& p, const AlgebraDocument& doc, const Globals& g) {
  const VariableSet& vars = *p.series.vars();
  if (g.json) {
    J j;
    j["document"] = doc.name;
    j["kind"] = to_string(p.provenance);
    j["order"] = p.order_cap;
    j["parity"] = g.parity;
    J vs = J::array();
    for (int i = 0; i < vars.size(); ++i)
      vs.push_back({{"name", vars.name(i)}, {"basis", doc.algebra->basis()->label(i)}, {"odd", vars.odd(i)}});
    j["variables"] = vs;
    J terms = J::object();
    for (const auto& [m, c] : p.series.terms()) terms[monomial_name(vars, m)] = to_string(c);
    j["terms"] = terms;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << to_string(p.provenance) << " potential of " << doc.name << " up to word length " << p.order_cap << "\n";
  if (p.series.terms().empty()) os << "  0\n";
  for (const auto& [m, c] : p.series.terms()) os << "  " << to_string(c) << " " << monomial_name(vars, m) << "\n";
  return os.str();
}

// ---------------------------------------------------------------- subcommands

struct Outcome {
  std::string text;
  int code = kPass;
};

Outcome from_report(const Report& r, const Globals& g) { return {render_report(r, g), r.passed ? kPass : kFail}; }

Outcome run_potential(const AlgebraDocument& doc, const std::string& kind, int order, const Globals& g) {
  const ParityConvention parity = parse_parity(g.parity);
  if (kind == "cyclic") {
    if (!doc.pairing) throw UsageError(doc.name + " has no cyclic pairing");
    return {render_potential(potential_cyclic(*doc.algebra, *doc.pairing, order, parity), doc, g), kPass};
  }
  auto phi = doc.shi();
  if (!phi) throw UsageError(doc.name + " has neither phi nor a pairing");
  if (kind == "shi") return {render_potential(potential_shi(*doc.algebra, *phi, order, parity), doc, g), kPass};
  if (!doc.algebra->basis()->unit()) throw UsageError(doc.name + " has no unit, so Psi is undefined");
  return {render_potential(potential_psi(*doc.algebra, *phi, order, parity), doc, g), kPass};
}

int document_order(const AlgebraDocument& doc, int requested) {
  if (requested <= 0) return doc.eps_order;
  return requested;
}

Outcome run_mc_check(const AlgebraDocument& doc, int eps_order, const Globals& g) {
  const AInfAlgebra& a = *doc.algebra;
  const int n = document_order(doc, eps_order);
  if (n > doc.eps_order && !doc.mc.empty())
    throw UsageError("document MC data is only known modulo eps^" + std::to_string(doc.eps_order));
  Report rep;
  rep.check = "maurer-cartan";
  rep.caps["eps_order"] = n;
  for (const auto& m : doc.mc) {
    Report r = mc_check(a, truncate_eps(m.b, n));
    r.check = "maurer-cartan " + m.id;
    r.note("b = " + render_artin(*a.basis(), truncate_eps(m.b, n)));
    rep.merge(std::move(r));
  }
  if (doc.mc.empty()) rep.note("document has no MC elements");
  return from_report(rep, g);
}

Outcome run_mc_flow(const AlgebraDocument& doc, int eps_order, const Globals& g) {
  const AInfAlgebra& a = *doc.algebra;
  const int n = document_order(doc, eps_order);
  if (n > doc.eps_order && !doc.gauge.empty())
    throw UsageError("document gauge data is only known modulo eps^" + std::to_string(doc.eps_order));
  auto phi = doc.shi();
  const bool with_psi = phi && a.basis()->unit();
  Report rep;
  rep.check = "gauge-flow";
  rep.caps["eps_order"] = n;
  J flows = J::array();
  for (const auto& gd : doc.gauge) {
    const GaugePath path = gauge_flow(a, truncate_eps(gd.b0, n), truncate_eps(gd.c, n));
    Report r = check_gauge_path(a, path);
    r.check = "gauge-path " + gd.id;
    r.note("b(t) = " + render_artin(*a.basis(), path.b));
    J f;
    f["id"] = gd.id;
    f["iterations"] = path.iterations;
    J comps = J::array();
    for (int i = 0; i < a.dim(); ++i)
      if (!path.b[i].is_zero())
        comps.push_back({{"index", i}, {"label", a.basis()->label(i)}, {"coeffs", artin_to_json(path.b[i])}});
    f["b"] = comps;
    if (with_psi) {
      const ArtinScalar psi = eval_psi(a, *phi, path.b);
      r.note("Psi(b(t)) = " + psi.to_string());
      f["psi"] = artin_to_json(psi);
    }
    f["passed"] = r.passed;
    flows.push_back(f);
    rep.merge(std::move(r));
  }
  if (doc.gauge.empty()) rep.note("document has no gauge data");
  if (!g.json) return from_report(rep, g);
  J j;
  j["document"] = doc.name;
  j["eps_order"] = n;
  j["flows"] = flows;
  j["report"] = rep.to_json();
  return {j.dump(2) + "\n", rep.passed ? kPass : kFail};
}

/// Runs `job` over every file on a small thread pool and prints the outputs in argument order.
int run_files(const std::vector<std::string>& files, const std::function<Outcome(const AlgebraDocument&)>& job,
              const Globals& g) {
  std::vector<Outcome> out(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        out[i] = job(load_file(files[i]));
      } catch (const DocumentError& e) {
        out[i] = {std::string(e.what()) + "\n", kUsage};
      } catch (const std::exception& e) {
        out[i] = {files[i] + ": " + e.what() + "\n", kUsage};
      }
    }
  };
  const std::size_t n = std::min<std::size_t>(files.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kPass;
  if (g.json && files.size() > 1) {
    // One array so the combined output stays a single JSON value.
    J arr = J::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
      if (out[i].code == kUsage) {
        arr.push_back({{"file", files[i]}, {"error", out[i].text}});
      } else {
        arr.push_back(J::parse(out[i].text));
      }
      code = std::max(code, out[i].code);
    }
    std::cout << arr.dump(2) << "\n";
    return code;
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    (out[i].code == kUsage ? std::cerr : std::cout) << out[i].text;
    code = std::max(code, out[i].code);
  }
  return code;
}

int write_corpus(const std::string& dir, const Globals& g) {
  std::filesystem::create_directories(dir);
  const auto names = builtin_names();
  std::vector<AlgebraDocument> docs(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < names.size(); i = next++) docs[i] = builtin_document(names[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::max(1u, std::thread::hardware_concurrency()); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  J listing = J::array();
  for (const auto& d : docs) {
    const auto path = std::filesystem::path(dir) / (d.name + ".json");
    save_file(d, path);
    listing.push_back(path.string());
    if (!g.json) std::cout << "wrote " << path.string() << "\n";
  }
  if (g.json) std::cout << listing.dump(2) << "\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and potentials for finite-dimensional A-infinity algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized sweeps")->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--parity", g.parity, "Parity of the formal variables")
      ->check(CLI::IsMember({"shifted", "unshifted"}))
      ->capture_default_str();
  app.add_option("--derivative", g.side, "Side of the odd derivative in the fraction-free check")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();

  std::string file;
  std::vector<std::string> files;
  int order = 0;
  int max_word = 6;
  int eps_order = 0;
  std::string kind;
  std::string morphism_id;
  std::string out_dir;
  bool all = false;

  auto* validate_cmd = app.add_subcommand("validate", "A-infinity, unit, cyclic and inner product checks");
  validate_cmd->add_option("file", file, "Document")->required();
  validate_cmd->add_option("--max-word", max_word, "Longest word swept")->check(CLI::Range(2, 8));

  auto* potential_cmd = app.add_subcommand("potential", "Print a potential as a truncated series");
  potential_cmd->add_option("file", file, "Document")->required();
  potential_cmd->add_option("--kind", kind, "Which potential")
      ->required()
      ->check(CLI::IsMember({"cyclic", "shi", "psi"}));
  potential_cmd->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 12));

  auto* pullback_cmd = app.add_subcommand("pullback", "Morphism equations and pull-back of the potential");
  pullback_cmd->add_option("file", file, "Document")->required();
  pullback_cmd->add_option("--morphism", morphism_id, "Morphism id")->required();
  pullback_cmd->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 12));

  auto* mc_cmd = app.add_subcommand("mc", "Maurer-Cartan elements and gauge flows");
  mc_cmd->require_subcommand(1);
  auto* mc_check_cmd = mc_cmd->add_subcommand("check", "Check the document's MC elements");
  auto* mc_flow_cmd = mc_cmd->add_subcommand("flow", "Solve the document's gauge flows");
  for (auto* c : {mc_check_cmd, mc_flow_cmd}) {
    c->add_option("file", file, "Document")->required();
    c->add_option("--eps-order", eps_order, "Work modulo eps^N")->check(CLI::Range(1, 8));
  }

  auto* gauge_cmd = app.add_subcommand("gauge-check", "Gauge invariance of Psi");
  gauge_cmd->add_option("file", file, "Document")->required();

  auto* holonomy_cmd = app.add_subcommand("holonomy", "Holonomy of cochains against Psi");
  holonomy_cmd->add_option("file", file, "Document")->required();

  auto* report_cmd = app.add_subcommand("report", "Run checks over several documents concurrently");
  report_cmd->add_option("files", files, "Documents")->required();
  report_cmd->add_flag("--all", all, "Include pull-backs, MC, gauge and holonomy sweeps");
  report_cmd->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 12));
  report_cmd->add_option("--max-word", max_word, "Longest word swept")->check(CLI::Range(2, 8));

  auto* corpus_cmd = app.add_subcommand("corpus", "Write the built-in documents as JSON");
  corpus_cmd->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (order == 0) order = default_order();
    if (corpus_cmd->parsed()) return write_corpus(out_dir, g);
    if (report_cmd->parsed()) {
      const SuiteOptions opt = options(g, order, max_word);
      return run_files(files, [&](const AlgebraDocument& d) {
        if (all) return from_report(report_all(d, opt), g);
        Report r;
        r.check = "report " + d.name;
        r.merge(validate(d, opt));
        if (r.passed) r.merge(potential_checks(d, opt));
        return from_report(r, g);
      }, g);
    }
    const SuiteOptions opt = options(g, order, max_word);
    std::function<Outcome(const AlgebraDocument&)> job;
    if (validate_cmd->parsed()) {
      job = [&](const AlgebraDocument& d) { return from_report(validate(d, opt), g); };
    } else if (potential_cmd->parsed()) {
      job = [&](const AlgebraDocument& d) { return run_potential(d, kind, order, g); };
    } else if (pullback_cmd->parsed()) {
      job = [&](const AlgebraDocument& d) {
        (void)d.morphism(morphism_id);  // unknown ids are input errors
        return from_report(pullback_check(d, morphism_id, opt), g);
      };
    } else if (mc_check_cmd->parsed()) {
      job = [&](const AlgebraDocument& d) { return run_mc_check(d, eps_order, g); };
    } else if (mc_flow_cmd->parsed()) {
      job = [&](const AlgebraDocument& d) { return run_mc_flow(d, eps_order, g); };
    } else if (gauge_cmd->parsed()) {
      job = [&](const AlgebraDocument& d) { return from_report(gauge_check(d, opt), g); };
    } else if (holonomy_cmd->parsed()) {
      job = [&](const AlgebraDocument& d) { return from_report(holonomy_check(d, opt), g); };
    }
    return run_files({file}, job, g);
  } catch (const std::exception& e) {
    std::cerr << "ainf: " << e.what() << "\n";
    return kUsage;
  }
}
