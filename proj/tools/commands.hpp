#pragma once

// Command implementations for the yoklab CLI. Each command fills a JSON
// object and a text rendering and reports whether every check passed.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "yoklab/aks.hpp"
#include "yoklab/compare.hpp"
#include "yoklab/json_io.hpp"
#include "yoklab/labels.hpp"
#include "yoklab/modrep.hpp"
#include "yoklab/nil.hpp"
#include "yoklab/nil_analysis.hpp"
#include "yoklab/structure.hpp"
#include "yoklab/ycore.hpp"

namespace yoklab::cli {

struct Config {
  int r = 2;
  int n = 2;
  std::string q = "0";
  std::string field = "cyclotomic";
  std::uint64_t seed = 1;
  bool json = false;
  std::string output;
  bool allow_large = false;
  Exec exec = Exec::Parallel;

  std::string presentation;
  std::string lhs_file;
  std::string rhs_file;
  bool list = false;
  bool count = false;
  bool bruteforce = false;
  bool nil = false;
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::string export_file;
  std::string form = "sum";
};

struct Outcome {
  json data = json::object();
  std::ostringstream text;
  bool ok = true;
};

inline TraceForm parse_trace_form(const std::string& s) {
  if (s == "sum") return TraceForm::CoefficientSum;
  if (s == "identity") return TraceForm::IdentityCoefficient;
  throw UsageError("--form must be 'sum' or 'identity'");
}

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

inline std::string join_dims(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s;
}

inline std::string join_ints(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

template <Field F>
typename F::value_type parse_q(const F& f, const Config& cfg) {
  return f.parse(cfg.q);
}

template <Field F>
void require_q_zero(const F& f, const Config& cfg, const char* command) {
  if (!f.is_zero(parse_q(f, cfg))) throw UsageError(std::string(command) + " requires --q 0");
}

template <Field F>
void cmd_dim(const F&, const Config& cfg, Outcome& out) {
  const BasisIndex idx(cfg.r, cfg.n);
  const std::size_t d = idx.dimension();
  out.data = {{"r", cfg.r},
              {"n", cfg.n},
              {"dimension", d},
              {"labels", idx.num_labels()},
              {"permutations", idx.num_perms()},
              {"bases", {{"T", d}, {"E", d}, {"L", d}, {"NIL", d}}}};
  out.text << d << "\n";
  out.text << "r^n = " << idx.num_labels() << ", n! = " << idx.num_perms() << "\n";
  out.text << "basis sizes: T " << d << ", E " << d << ", L " << d << ", NIL " << d << "\n";
}

inline void render_report(const RelationReport& rep, Outcome& out) {
  out.data = report_to_json(rep);
  out.ok = rep.all_zero();
  out.text << "presentation " << rep.presentation << "\n";
  for (const auto& fam : rep.families) {
    out.text << "  " << (fam.ok() ? "ok  " : "FAIL") << "  " << fam.name << "  (" << fam.instances << " instances";
    if (!fam.ok()) out.text << ", " << fam.failures << " nonzero, first at " << fam.first_failure;
    out.text << ")\n";
  }
  out.text << "residual " << (rep.all_zero() ? "zero" : "NONZERO") << "\n";
}

template <Field F>
RelationReport verify_report(const F& f, const Config& cfg, const std::string& which) {
  if (which == "1" || which == "2") return YAlgebra<F>(f, cfg.n, parse_q(f, cfg)).verify_presentation(which == "1" ? 1 : 2);
  if (which == "4") return AksAlgebra<F>(f, cfg.n, parse_q(f, cfg)).verify_presentation4();
  if (which == "nil") return NilAlgebra<F>(f, cfg.n).verify_relations();
  throw UsageError("--presentation must be one of 1, 2, 4, nil");
}

template <Field F>
void cmd_verify(const F& f, const Config& cfg, Outcome& out) {
  if (cfg.presentation.empty()) throw UsageError("verify needs --presentation {1|2|4|nil}");
  render_report(verify_report(f, cfg, cfg.presentation), out);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <Field F>
void cmd_mult(const F& f, const Config& cfg, Outcome& out) {
  if (cfg.lhs_file.empty() || cfg.rhs_file.empty()) throw UsageError("mult needs --lhs FILE and --rhs FILE");
  const BasisIndex idx(cfg.r, cfg.n);
  const auto lhs = element_from_json(f, idx, read_json_file(cfg.lhs_file));
  const auto rhs = element_from_json(f, idx, read_json_file(cfg.rhs_file));
  const bool y_l = lhs.basis == Basis::T || lhs.basis == Basis::E;
  const bool y_r = rhs.basis == Basis::T || rhs.basis == Basis::E;
  Element<typename F::value_type> product;
  if (y_l && y_r) {
    YAlgebra<F> y(f, cfg.n, parse_q(f, cfg));
    product = y.mul(lhs, rhs);
    if (lhs.basis == Basis::T) product = y.to_T(product);
  } else if (lhs.basis == Basis::L && rhs.basis == Basis::L) {
    product = AksAlgebra<F>(f, cfg.n, parse_q(f, cfg)).mul(lhs, rhs);
  } else if (lhs.basis == Basis::Nil && rhs.basis == Basis::Nil) {
    product = NilAlgebra<F>(f, cfg.n).mul(lhs, rhs);
  } else {
    throw UsageError("cannot multiply elements of bases " + basis_name(lhs.basis) + " and " + basis_name(rhs.basis));
  }
  out.data = element_to_json(f, idx, product);
  out.text << out.data.dump(2) << "\n";
}

template <Field F>
void cmd_simples(const F& f, const Config& cfg, Outcome& out) {
  if (cfg.nil) {
    NilAlgebra<F> a(f, cfg.n);
    const auto rad = nil_radical(a, cfg.exec);
    const auto rep = nil_simples_report(a, rad, cfg.exec);
    out.ok = rep.ok();
    json list = json::array();
    for (const auto& c : all_color_vectors(cfg.r, cfg.n)) list.push_back(c);
    out.data = {{"count", rep.count},
                {"expected", rep.expected},
                {"relations_hold", rep.relations_hold},
                {"pairwise_distinct", rep.pairwise_distinct},
                {"vanish_on_radical", rep.vanish_on_radical},
                {"character_matrix_invertible", rep.character_matrix_invertible}};
    if (cfg.list) out.data["characters"] = list;
    out.text << "nil simples: " << rep.count << " (expected r^n = " << rep.expected << ")\n";
    if (cfg.list)
      for (const auto& c : all_color_vectors(cfg.r, cfg.n)) out.text << "  t -> zeta^" << join_ints(c) << ", T -> 0\n";
    out.text << "relations " << verdict(rep.relations_hold) << ", distinct " << verdict(rep.pairwise_distinct)
             << ", kill radical " << verdict(rep.vanish_on_radical) << ", character matrix "
             << verdict(rep.character_matrix_invertible) << "\n";
    return;
  }
  require_q_zero(f, cfg, "simples");
  const auto labels = enumerate_labels(cfg.r, cfg.n);
  const auto count = count_labels(cfg.r, cfg.n);
  out.data["count"] = count;
  out.text << count << "\n";
  out.ok = count == labels.size();
  if (cfg.list) {
    json list = json::array();
    for (const auto& l : labels) {
      list.push_back(label_to_json(l));
      const auto rep = rep_of_label(f, l);
      out.text << "  c=" << join_ints(l.c) << " J=";
      for (const auto& comp : l.J) out.text << join_ints(comp.parts());
      out.text << "  g -> (";
      for (std::size_t k = 0; k < rep.g_values.size(); ++k) out.text << (k ? "," : "") << f.render(rep.g_values[k]);
      out.text << ")\n";
    }
    out.data["labels"] = list;
  }
  if (cfg.bruteforce) {
    const auto brute = enumerate_one_dim_bruteforce(f, cfg.n);
    std::size_t matched = 0;
    bool all_valid = true;
    for (const auto& l : labels) {
      const auto rep = rep_of_label(f, l);
      all_valid = all_valid && check_one_dim(f, rep, f.zero());
      for (const auto& b : brute)
        if (same_rep(f, rep, b)) ++matched;
    }
    const bool agree = brute.size() == labels.size() && matched == labels.size() && all_valid;
    out.ok = out.ok && agree;
    out.data["bruteforce_count"] = brute.size();
    out.data["labels_matched"] = matched;
    out.data["agree"] = agree;
    out.text << "brute force: " << brute.size() << " one-dimensional representations, " << matched
             << " matched by labels: " << verdict(agree) << "\n";
  }
}

template <Field F>
void cmd_radical(const F& f, const Config& cfg, Outcome& out) {
  if (cfg.nil) {
    NilAlgebra<F> a(f, cfg.n);
    const auto rep = nil_radical_report(a, cfg.exec);
    out.ok = rep.ok();
    out.data = {{"dimension", rep.dimension},
                {"expected_dimension", rep.expected_dimension},
                {"span_of_positive_length", rep.span_matches},
                {"power_dims", rep.power_dims},
                {"nilpotency_index", rep.nilpotency_index ? json(*rep.nilpotency_index) : json(nullptr)},
                {"nilpotency_bound", rep.nilpotency_bound},
                {"quotient_dimension", rep.quotient_dimension}};
    out.text << "nil radical dim " << rep.dimension << " (expected " << rep.expected_dimension << ")\n";
    out.text << "powers: " << join_dims(rep.power_dims) << "\n";
    out.text << "nilpotency index "
             << (rep.nilpotency_index ? std::to_string(*rep.nilpotency_index) : std::string("none")) << " (bound "
             << rep.nilpotency_bound << ")\n";
    out.text << "quotient dim " << rep.quotient_dimension << "\n" << verdict(out.ok) << "\n";
    return;
  }
  require_q_zero(f, cfg, "radical");
  YAlgebra<F> y(f, cfg.n, f.zero());
  const auto ideal = commutator_ideal(y, cfg.exec);
  const auto labels = enumerate_labels(cfg.r, cfg.n);
  const auto rep = radical_report(y, ideal, cfg.exec);
  const auto cert = semisimplicity_certificate(y, ideal, labels, cfg.exec);
  out.ok = rep.nilpotency_index.has_value() && cert.ok();
  out.data = {{"power_dims", rep.power_dims},
              {"nilpotency_index", rep.nilpotency_index ? json(*rep.nilpotency_index) : json(nullptr)},
              {"quotient_dimension", rep.quotient_dimension},
              {"certificate",
               {{"ok", cert.ok()},
                {"dimension_matches", cert.dimension_matches},
                {"quotient_commutative", cert.quotient_commutative},
                {"reps_vanish_on_ideal", cert.reps_vanish_on_ideal},
                {"character_matrix_invertible", cert.character_matrix_invertible},
                {"quotient_relations_hold", cert.quotient_relations_hold},
                {"label_count", cert.label_count}}}};
  if (!cert.witness.empty()) out.data["certificate"]["witness"] = cert.witness;
  out.text << "commutator ideal powers: " << join_dims(rep.power_dims) << "\n";
  out.text << "nilpotency index "
           << (rep.nilpotency_index ? std::to_string(*rep.nilpotency_index) : std::string("none")) << "\n";
  out.text << "quotient dim " << rep.quotient_dimension << ", labels " << cert.label_count << "\n";
  out.text << "certificate: dimension " << verdict(cert.dimension_matches) << ", commutative "
           << verdict(cert.quotient_commutative) << ", characters kill J " << verdict(cert.reps_vanish_on_ideal)
           << ", character matrix " << verdict(cert.character_matrix_invertible) << ", quotient relations "
           << verdict(cert.quotient_relations_hold) << "\n";
  if (!cert.witness.empty()) out.text << "witness: " << cert.witness << "\n";
  out.text << verdict(out.ok) << "\n";
}

template <Field F>
void cmd_gram(const F& f, const Config& cfg, Outcome& out) {
  const TraceForm form = parse_trace_form(cfg.form);
  DenseMatrix<typename F::value_type> g;
  if (cfg.nil) {
    g = nil_gram_matrix(NilAlgebra<F>(f, cfg.n), form, cfg.exec);
  } else {
    require_q_zero(f, cfg, "gram");
    g = gram_matrix(YAlgebra<F>(f, cfg.n, f.zero()), form, cfg.exec);
  }
  const std::size_t rank = matrix_rank(f, g, cfg.exec);
  out.ok = rank == g.rows;
  out.data = {{"algebra", cfg.nil ? "nil" : "Y(0)"},
              {"form", trace_form_name(form)},
              {"size", g.rows},
              {"rank", rank},
              {"invertible", out.ok}};
  if (!cfg.nil) {
    const auto w = constructive_witness_check(YAlgebra<F>(f, cfg.n, f.zero()));
    out.data["basis_witnesses"] = check_to_json(w);
  }
  out.text << (cfg.nil ? "nil" : "Y(0)") << " Gram matrix of the " << trace_form_name(form) << " form: " << g.rows
           << "x" << g.cols << ", rank " << rank << "\n";
  out.text << (out.ok ? "nondegenerate" : "DEGENERATE") << "\n";
  if (!cfg.export_file.empty()) {
    std::ofstream file(cfg.export_file);
    if (!file) throw UsageError("cannot write " + cfg.export_file);
    file << json{{"schema", kSchema}, {"form", trace_form_name(form)}, {"matrix", matrix_to_json(f, g)}}.dump(1)
         << "\n";
    out.text << "written to " << cfg.export_file << "\n";
  }
}

template <Field F>
void cmd_nakayama(const F& f, const Config& cfg, Outcome& out) {
  const TraceForm form = parse_trace_form(cfg.form);
  const std::size_t dim = BasisIndex(cfg.r, cfg.n).dimension();
  const bool exhaustive = cfg.exhaustive || (!cfg.samples && dim <= 64);
  const std::size_t samples = cfg.samples.value_or(200);
  CheckResult res, inv;
  if (cfg.nil) {
    NilAlgebra<F> a(f, cfg.n);
    res = exhaustive ? nil_psi_exhaustive(a, form) : nil_psi_sampled(a, samples, cfg.seed, form);
    inv = nil_psi_involution_check(a, 50, cfg.seed);
  } else {
    require_q_zero(f, cfg, "nakayama");
    YAlgebra<F> y(f, cfg.n, f.zero());
    res = exhaustive ? nakayama_exhaustive(y, form, cfg.exec) : nakayama_sampled(y, samples, cfg.seed, form);
    inv = phi_involution_check(y, 50, cfg.seed);
  }
  out.ok = res.ok && inv.ok;
  out.data = {{"algebra", cfg.nil ? "nil" : "Y(0)"},
              {"form", trace_form_name(form)},
              {"mode", exhaustive ? "exhaustive" : "sampled"},
              {"identity", check_to_json(res)},
              {"involution", check_to_json(inv)}};
  const char* id = cfg.nil ? "lambda(xy) = lambda(psi(y)x)" : "tau(ab) = tau(phi(b)a)";
  out.text << id << ": " << verdict(res.ok) << " (" << res.checked << (exhaustive ? " basis pairs" : " samples")
           << ")\n";
  if (!res.ok) out.text << "  counterexample: " << res.witness << "\n";
  out.text << (cfg.nil ? "psi" : "phi") << " is an involution: " << verdict(inv.ok) << " (" << inv.checked
           << " elements)\n";
}

template <Field F>
void cmd_cells(const F& f, const Config& cfg, Outcome& out) {
  std::vector<CellReport<typename F::value_type>> reports;
  CheckResult tri;
  BasisIndex idx(cfg.r, cfg.n);
  std::size_t expected = 0;
  bool sign_rule = true;
  if (cfg.nil) {
    NilAlgebra<F> a(f, cfg.n);
    reports = cell_reports(NilCells<F>{a}, nil_predicted_cells(a), cfg.exec);
    tri = nil_triangularity_check(a, cfg.exec);
    expected = idx.num_labels();
  } else {
    require_q_zero(f, cfg, "cells");
    YAlgebra<F> y(f, cfg.n, f.zero());
    const auto labels = enumerate_labels(cfg.r, cfg.n);
    reports = cell_reports(YCells<F>{y}, predicted_cells(idx, labels), cfg.exec);
    tri = triangularity_check(y, cfg.exec);
    expected = labels.size();
    sign_rule = beta_sign_observation(f, idx, reports);
  }
  const auto summary = summarize_cells(f, reports, idx);
  out.ok = summary.classification_match && summary.squares_triangular && tri.ok && summary.nonzero == expected;
  json cells = json::array();
  const int width = 2 * idx.n() + 3;
  out.text << std::left << std::setw(width) << "chi" << std::setw(width) << "w" << std::setw(8) << "beta"
           << "predicted\n";
  for (const auto& rep : reports) {
    if (f.is_zero(rep.beta) && !rep.predicted) continue;
    cells.push_back(cell_to_json(f, idx, rep));
    out.text << std::setw(width) << join_ints(idx.colors(rep.chi)) << std::setw(width)
             << join_ints(idx.perm(rep.w).images()) << std::setw(8) << f.render(rep.beta)
             << (rep.predicted ? "yes" : "no") << "\n";
  }
  auto keys_json = [&](const std::vector<Index>& keys) {
    json arr = json::array();
    for (Index k : keys)
      arr.push_back({{"chi", idx.colors(idx.label_of(k))}, {"w", idx.perm(idx.perm_of(k)).images()}});
    return arr;
  };
  out.data = {{"algebra", cfg.nil ? "nil" : "Y(0)"},
              {"cells", cells},
              {"nonzero", summary.nonzero},
              {"expected", expected},
              {"match", summary.classification_match},
              {"squares_triangular", summary.squares_triangular},
              {"triangularity", check_to_json(tri)},
              {"only_computed", keys_json(summary.only_computed)},
              {"only_predicted", keys_json(summary.only_predicted)}};
  if (!cfg.nil) out.data["beta_sign_rule"] = sign_rule;
  out.text << "nonzero cells " << summary.nonzero << " (expected " << expected << "), match "
           << verdict(summary.classification_match) << ", triangularity " << verdict(tri.ok && summary.squares_triangular)
           << "\n";
  if (!tri.ok) out.text << "  witness: " << tri.witness << "\n";
}

inline json invariants_json(const AlgebraInvariants& inv) {
  return {{"dimension", inv.dimension},
          {"one_dim_count", inv.one_dim_count},
          {"commutator_power_dims", inv.commutator_power_dims}};
}

template <Field F>
void cmd_aks_compare(const F& f, const Config& cfg, Outcome& out) {
  require_q_zero(f, cfg, "aks-compare");
  const auto iy = y_invariants(YAlgebra<F>(f, cfg.n, f.zero()), cfg.exec);
  const auto ia = aks_invariants(AksAlgebra<F>(f, cfg.n, f.zero()), cfg.exec);
  out.ok = iy == ia;
  out.data = {{"Y", invariants_json(iy)}, {"AKS", invariants_json(ia)}, {"agree", out.ok}};
  out.text << "                      Y(0)          AKS(0)\n";
  out.text << "dimension             " << iy.dimension << "            " << ia.dimension << "\n";
  out.text << "1-dim simples         " << iy.one_dim_count << "            " << ia.one_dim_count << "\n";
  out.text << "commutator powers     " << join_dims(iy.commutator_power_dims) << "    "
           << join_dims(ia.commutator_power_dims) << "\n";
  out.text << verdict(out.ok) << "\n";
}

// Everything at once, as JSON.
template <Field F>
void cmd_report(const F& f, const Config& cfg, Outcome& out) {
  require_q_zero(f, cfg, "report");
  auto run = [&](auto&& fn, Config c) {
    Outcome o;
    fn(f, c, o);
    out.ok = out.ok && o.ok;
    o.data["ok"] = o.ok;
    return o.data;
  };
  json bundle{{"schema", kSchema},
              {"config", {{"r", cfg.r}, {"n", cfg.n}, {"q", cfg.q}, {"field", f.name()}, {"seed", cfg.seed}}}};
  bundle["dim"] = run(cmd_dim<F>, cfg);
  json verify = json::object();
  for (const char* p : {"1", "2", "4", "nil"}) {
    Config c = cfg;
    c.presentation = p;
    verify[p] = run(cmd_verify<F>, c);
  }
  bundle["verify"] = verify;
  Config simples = cfg;
  simples.list = simples.bruteforce = true;
  bundle["simples"] = run(cmd_simples<F>, simples);
  bundle["radical"] = run(cmd_radical<F>, cfg);
  Config gram_identity = cfg;
  gram_identity.form = "identity";
  json gram{{"sum", run(cmd_gram<F>, cfg)}, {"identity", run(cmd_gram<F>, gram_identity)}};
  bundle["gram"] = gram;
  bundle["nakayama"] = run(cmd_nakayama<F>, cfg);
  bundle["cells"] = run(cmd_cells<F>, cfg);
  Config nil = cfg;
  nil.nil = true;
  nil.list = true;
  Config nil_identity = nil;
  nil_identity.form = "identity";
  bundle["nil"] = {{"simples", run(cmd_simples<F>, nil)},
                   {"radical", run(cmd_radical<F>, nil)},
                   {"gram", {{"sum", run(cmd_gram<F>, nil)}, {"identity", run(cmd_gram<F>, nil_identity)}}},
                   {"nakayama", run(cmd_nakayama<F>, nil)},
                   {"cells", run(cmd_cells<F>, nil)}};
  bundle["aks_compare"] = run(cmd_aks_compare<F>, cfg);
  bundle["ok"] = out.ok;
  out.data = bundle;
  out.text << bundle.dump(2) << "\n";
}

}  // namespace yoklab::cli
