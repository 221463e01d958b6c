// gries: command-line front end over the griesmer library.
//
// Subcommands: analyze, construct, derive, basis, ward, padic, geometry,
// verify, search.  Every report is plain integer text on stdout; --json
// writes a machine-readable mirror with a stable key order.
//
// Exit codes: 0 success (a failed conjecture check is a discovery, still 0);
// 1 a verification found a genuine property violation; 2 usage or format
// errors (unknown subcommand, malformed input file, violated preconditions).

#include <CLI11.hpp>
#include <json.hpp>

#include <griesmer/analyze.hpp>
#include <griesmer/basis.hpp>
#include <griesmer/constructions.hpp>
#include <griesmer/gcode.hpp>
#include <griesmer/geometry.hpp>
#include <griesmer/search.hpp>
#include <griesmer/theorems.hpp>
#include <griesmer/ward.hpp>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace {

using griesmer::Elem;
using griesmer::error;
using griesmer::LinearCode;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw error("failed while writing '" + path + "'");
}

std::string csv(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<Elem> parse_elems(const griesmer::FieldSpec& F,
                              const std::vector<long long>& raw, int want,
                              const std::string& who) {
  if (static_cast<int>(raw.size()) != want)
    throw error(who + ": expected " + std::to_string(want) + " comma-separated entries, got " +
                std::to_string(raw.size()));
  std::vector<Elem> out(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || raw[i] >= F.q)
      throw error(who + ": entry " + std::to_string(raw[i]) + " out of range [0, " +
                  std::to_string(F.q) + ")");
    out[i] = static_cast<Elem>(raw[i]);
  }
  return out;
}

json analysis_json(const griesmer::AnalysisReport& r) {
  json j;
  j["p"] = r.p;
  j["f"] = r.f;
  j["q"] = r.q;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["griesmer_length"] = r.griesmer_length;
  j["is_griesmer"] = r.griesmer;
  json w = json::object();
  for (const auto& [wt, count] : r.wd.counts) w[std::to_string(wt)] = count;
  j["weights"] = w;
  j["divisor"] = r.divisor;
  j["p_exponent"] = r.p_exponent;
  j["max_multiplicity"] = r.max_multiplicity;
  j["endpoints"] = r.endpoints;
  j["projective"] = r.projective;
  return j;
}

json verdict_json(const griesmer::TheoremVerdict& v) {
  json j;
  j["theorem"] = v.theorem;
  j["code_id"] = v.code_id;
  j["applicable"] = v.applicable;
  j["conjecture"] = v.conjecture;
  j["p"] = v.p;
  j["f"] = v.f;
  j["q"] = v.q;
  j["n"] = v.n;
  j["k"] = v.k;
  j["d"] = v.d;
  j["e"] = v.e;
  j["claimed"] = v.claimed;
  j["observed"] = v.observed;
  j["pass"] = v.pass;
  if (v.witness)
    j["witness"] = *v.witness;
  else
    j["witness"] = nullptr;
  j["detail"] = v.detail;
  return j;
}

// One human-readable line per verdict; FAIL is reserved for non-conjectures.
std::string verdict_line(const griesmer::TheoremVerdict& v) {
  if (!v.applicable) return "skip " + v.theorem + " " + v.code_id + " (" + v.detail + ")";
  const std::string stats = " claimed=" + std::to_string(v.claimed) +
                            " observed=" + std::to_string(v.observed);
  if (v.pass) return "pass " + v.theorem + " " + v.code_id + stats;
  const std::string tag = v.conjecture ? "DISCOVERY" : "FAIL";
  return tag + " " + v.theorem + " " + v.code_id + stats + " (" + v.detail + ")";
}

int as_int(long long v, const std::string& who) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw error(who + ": parameter " + std::to_string(v) + " is out of range");
  return static_cast<int>(v);
}

LinearCode build_family(const std::string& family, const std::vector<long long>& a) {
  const auto want = [&](size_t count, const std::string& names) {
    if (a.size() != count)
      throw error("construct " + family + ": expected " + std::to_string(count) +
                  " parameter" + (count == 1 ? "" : "s") + " (" + names + "), got " +
                  std::to_string(a.size()));
  };
  if (family == "simplex") {
    want(2, "q k");
    return griesmer::simplex(as_int(a[0], family), as_int(a[1], family));
  }
  if (family == "rm1") {
    want(1, "m");
    return griesmer::rm1(as_int(a[0], family));
  }
  if (family == "hexacode") {
    want(0, "none");
    return griesmer::hexacode();
  }
  if (family == "unital") {
    want(1, "q0");
    return griesmer::unital(as_int(a[0], family));
  }
  if (family == "ovoid") {
    want(1, "q");
    return griesmer::ovoid(as_int(a[0], family));
  }
  if (family == "repetition") {
    want(2, "q n");
    return griesmer::repetition(as_int(a[0], family), as_int(a[1], family));
  }
  if (family == "rs") {
    want(3, "q n k");
    return griesmer::reed_solomon(as_int(a[0], family), as_int(a[1], family),
                                  as_int(a[2], family));
  }
  throw error("construct: unknown family '" + family +
              "' (expected simplex, rm1, hexacode, unital, ovoid, repetition, rs)");
}

LinearCode code_from_rows(const griesmer::Field& field,
                          const std::vector<std::vector<Elem>>& rows) {
  griesmer::FqMatrix gen(field, static_cast<int>(rows.size()),
                         static_cast<int>(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i) gen.set_row(static_cast<int>(i), rows[i]);
  return LinearCode(field, gen);
}

void apply_guard_env() {
  const char* env = std::getenv("GRIESMER_GUARD");
  if (!env) return;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw error("GRIESMER_GUARD must be a positive integer, got '" + std::string(env) + "'");
  griesmer::enumeration_guard() = v;
}

int run(int argc, char** argv) {
  apply_guard_env();

  CLI::App app{"exact divisibility analysis of length-optimal linear codes"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // ---- analyze ------------------------------------------------------------
  auto* cmd_analyze = app.add_subcommand("analyze", "summarize a .gcode file");
  std::string an_file, an_json;
  cmd_analyze->add_option("file", an_file, ".gcode input")->required();
  cmd_analyze->add_option("--json", an_json, "write a JSON mirror of the report");
  cmd_analyze->callback([&] {
    const LinearCode C = griesmer::read_gcode_file(an_file);
    const griesmer::AnalysisReport r = griesmer::analyze(C);
    std::cout << griesmer::render_analysis(r);
    if (!an_json.empty()) write_json_file(an_json, analysis_json(r));
  });

  // ---- construct ----------------------------------------------------------
  auto* cmd_construct = app.add_subcommand("construct", "build a named code family");
  std::string co_family, co_out, co_json;
  std::vector<long long> co_params;
  cmd_construct->add_option("family", co_family,
                            "simplex|rm1|hexacode|unital|ovoid|repetition|rs")
      ->required();
  cmd_construct->add_option("params", co_params, "integer family parameters");
  cmd_construct->add_option("-o,--output", co_out, ".gcode output path")->required();
  cmd_construct->add_option("--json", co_json, "write a JSON mirror of the report");
  cmd_construct->callback([&] {
    const LinearCode C = build_family(co_family, co_params);
    griesmer::write_gcode_file(C, co_out);
    const griesmer::AnalysisReport r = griesmer::analyze(C);
    std::cout << griesmer::render_analysis(r);
    if (!co_json.empty()) write_json_file(co_json, analysis_json(r));
  });

  // ---- derive -------------------------------------------------------------
  auto* cmd_derive = app.add_subcommand("derive", "residual, projected, or shortened code");
  std::string de_file, de_op, de_out, de_json;
  std::vector<long long> de_message, de_point;
  bool de_min_weight = false;
  cmd_derive->add_option("file", de_file, ".gcode input")->required();
  cmd_derive->add_option("--op", de_op, "residual|projected|shortened")->required();
  cmd_derive->add_option("--message", de_message, "message as k comma-separated entries")
      ->delimiter(',');
  cmd_derive->add_flag("--min-weight", de_min_weight,
                       "use the first minimum-weight codeword");
  cmd_derive->add_option("--point", de_point, "point as k comma-separated entries")
      ->delimiter(',');
  cmd_derive->add_option("-o,--output", de_out, ".gcode output path")->required();
  cmd_derive->add_option("--json", de_json, "write a JSON mirror of the report");
  cmd_derive->callback([&] {
    const LinearCode C = griesmer::read_gcode_file(de_file);
    const griesmer::FieldSpec& F = *C.field();
    griesmer::DerivedCode derived = [&] {
      if (de_op == "residual" || de_op == "projected") {
        if (de_min_weight == !de_message.empty())
          throw error("derive --op " + de_op +
                      ": give exactly one of --message and --min-weight");
        const std::vector<Elem> a =
            de_min_weight ? griesmer::min_weight_codeword(C)
                          : C.codeword(parse_elems(F, de_message, C.k(), "derive --message"));
        return de_op == "residual" ? griesmer::residual(C, a) : griesmer::projected(C, a);
      }
      if (de_op == "shortened") {
        if (de_point.empty()) throw error("derive --op shortened: --point is required");
        return griesmer::shortened(C, parse_elems(F, de_point, C.k(), "derive --point"));
      }
      throw error("derive: unknown --op '" + de_op +
                  "' (expected residual, projected, shortened)");
    }();
    griesmer::write_gcode_file(derived.code, de_out);
    const griesmer::AnalysisReport r = griesmer::analyze(derived.code);
    std::cout << "op = " << de_op << "\n"
              << "columns = " << csv(derived.columns) << "\n"
              << griesmer::render_analysis(r);
    if (!de_json.empty()) {
      json j;
      j["op"] = de_op;
      j["columns"] = derived.columns;
      j["report"] = analysis_json(r);
      write_json_file(de_json, j);
    }
  });

  // ---- basis --------------------------------------------------------------
  auto* cmd_basis = app.add_subcommand("basis", "certified divisibility basis");
  std::string ba_file, ba_out, ba_json;
  cmd_basis->add_option("file", ba_file, ".gcode input")->required();
  cmd_basis->add_option("-o,--output", ba_out, "re-based .gcode output path")->required();
  cmd_basis->add_option("--json", ba_json, "write a JSON mirror of the certificate");
  cmd_basis->callback([&] {
    const LinearCode C = griesmer::read_gcode_file(ba_file);
    const griesmer::BasisResult res = griesmer::construct_basis(C);
    griesmer::write_gcode_file(code_from_rows(C.field(), res.rows), ba_out);
    const griesmer::BasisCertificate& cert = res.certificate;
    std::cout << "rows = " << res.rows.size() << "\n"
              << "prefix_rows = " << cert.prefix_rows << "\n"
              << "gamma = " << cert.gamma << "\n";
    for (size_t i = 0; i < cert.unit_columns.size(); ++i)
      std::cout << "unit_columns[" << i << "] = " << csv(cert.unit_columns[i]) << "\n";
    for (const auto& clause : cert.clauses) {
      std::cout << clause.id << ": " << (clause.ok ? "ok" : "FAIL");
      if (!clause.ok) std::cout << " (" << clause.detail << ")";
      std::cout << "\n";
    }
    std::cout << "certificate = " << (cert.ok ? "ok" : "FAIL") << "\n";
    if (!ba_json.empty()) {
      json j;
      j["rows"] = res.rows.size();
      j["prefix_rows"] = cert.prefix_rows;
      j["gamma"] = cert.gamma;
      j["unit_columns"] = cert.unit_columns;
      json clauses = json::array();
      for (const auto& clause : cert.clauses) {
        json c;
        c["id"] = clause.id;
        c["ok"] = clause.ok;
        c["detail"] = clause.detail;
        clauses.push_back(c);
      }
      j["clauses"] = clauses;
      j["ok"] = cert.ok;
      write_json_file(ba_json, j);
    }
    if (!cert.ok) exit_code = kExitViolation;
  });

  // ---- ward ---------------------------------------------------------------
  auto* cmd_ward = app.add_subcommand("ward", "largest certified weight-divisor exponent");
  std::string wa_file, wa_mode = "folded", wa_json;
  int wa_max_e = 0;
  long long wa_alpha = -1;
  int wa_max_len = 0;
  cmd_ward->add_option("file", wa_file, ".gcode input")->required();
  cmd_ward->add_option("--max-e", wa_max_e, "largest exponent to certify")->required();
  cmd_ward->add_option("--mode", wa_mode, "folded|bounded")
      ->check(CLI::IsMember({"folded", "bounded"}));
  cmd_ward->add_option("--max-len", wa_max_len,
                       "bounded mode: longest spanning-set multiset (default 2k)");
  cmd_ward->add_option("--alpha", wa_alpha,
                       "shear the first basis row by alpha times the second");
  cmd_ward->add_option("--json", wa_json, "write a JSON mirror of the report");
  cmd_ward->callback([&] {
    const LinearCode C = griesmer::read_gcode_file(wa_file);
    const griesmer::FieldSpec& F = *C.field();
    std::vector<std::vector<Elem>> rows = griesmer::default_ward_basis(C);
    if (wa_alpha >= 0) {
      if (wa_alpha >= F.q)
        throw error("ward --alpha: entry " + std::to_string(wa_alpha) + " out of range [0, " +
                    std::to_string(F.q) + ")");
      if (C.k() < 2) throw error("ward --alpha: needs k >= 2");
      const Elem alpha = static_cast<Elem>(wa_alpha);
      for (int j = 0; j < C.n(); ++j)
        rows[0][j] = F.add(rows[0][j], F.mul(alpha, rows[1][j]));
    }
    const int max_len = wa_max_len > 0 ? wa_max_len : 2 * C.k();
    const griesmer::WardExponent we =
        wa_mode == "folded" ? griesmer::max_divisor_exponent(C, rows, wa_max_e)
                            : griesmer::max_divisor_exponent_bounded(C, rows, wa_max_e, max_len);
    std::cout << "mode = " << wa_mode << "\n"
              << "exponent = " << we.exponent << "\n"
              << "capped = " << (we.capped ? "true" : "false") << "\n";
    if (we.binding)
      std::cout << "witness = " << csv(we.binding->r) << "\n"
                << "witness_digit_sum = " << we.binding->digit_sum << "\n";
    else
      std::cout << "witness = none\n";
    if (!wa_json.empty()) {
      json j;
      j["mode"] = wa_mode;
      j["exponent"] = we.exponent;
      j["capped"] = we.capped;
      if (we.binding) {
        j["witness"] = we.binding->r;
        j["witness_digit_sum"] = we.binding->digit_sum;
      } else {
        j["witness"] = nullptr;
      }
      write_json_file(wa_json, j);
    }
  });

  // ---- padic --------------------------------------------------------------
  auto* cmd_padic = app.add_subcommand("padic", "p-adic helper computations");
  cmd_padic->require_subcommand(1);

  auto* cmd_kummer = cmd_padic->add_subcommand(
      "kummer", "p-adic valuation of a binomial coefficient");
  long long ku_n = 0, ku_m = 0;
  int ku_p = 0;
  std::string ku_json;
  cmd_kummer->add_option("n", ku_n)->required();
  cmd_kummer->add_option("m", ku_m)->required();
  cmd_kummer->add_option("p", ku_p)->required();
  cmd_kummer->add_option("--json", ku_json, "write a JSON mirror of the report");
  cmd_kummer->callback([&] {
    const long long nu = griesmer::nu_binom(ku_n, ku_m, ku_p);
    std::cout << "nu = " << nu << "\n";
    if (!ku_json.empty()) write_json_file(ku_json, json{{"nu", nu}});
  });

  auto* cmd_csum = cmd_padic->add_subcommand(
      "csum", "mixed-term coefficient c(r,s;1) and its valuation");
  int cs_r = 0, cs_s = 0;
  std::vector<long long> cs_field;
  std::string cs_json;
  cmd_csum->add_option("r", cs_r)->required();
  cmd_csum->add_option("s", cs_s)->required();
  cmd_csum->add_option("--field", cs_field, "base field as p,f")->delimiter(',')->required();
  cmd_csum->add_option("--json", cs_json, "write a JSON mirror of the report");
  cmd_csum->callback([&] {
    if (cs_field.size() != 2) throw error("padic csum: --field expects p,f");
    const griesmer::Field field = griesmer::make_field(
        as_int(cs_field[0], "padic csum"), as_int(cs_field[1], "padic csum"));
    const griesmer::BigInt c = griesmer::c_sum(cs_r, cs_s, field);
    const long long nu = griesmer::nu_exact(c, field->p);
    std::cout << "c = " << c.str() << "\n"
              << "nu = " << nu << "\n";
    if (!cs_json.empty()) write_json_file(cs_json, json{{"c", c.str()}, {"nu", nu}});
  });

  auto* cmd_teich = cmd_padic->add_subcommand(
      "teich", "Teichmuller lift of a field element to the Galois ring");
  long long te_elem = 0;
  int te_prec = 0;
  std::vector<long long> te_field;
  std::string te_json;
  cmd_teich->add_option("elem", te_elem)->required();
  cmd_teich->add_option("--field", te_field, "base field as p,f")->delimiter(',')->required();
  cmd_teich->add_option("--prec", te_prec, "ring precision N")->required();
  cmd_teich->add_option("--json", te_json, "write a JSON mirror of the report");
  cmd_teich->callback([&] {
    if (te_field.size() != 2) throw error("padic teich: --field expects p,f");
    const griesmer::Field field = griesmer::make_field(
        as_int(te_field[0], "padic teich"), as_int(te_field[1], "padic teich"));
    const std::vector<Elem> elems =
        parse_elems(*field, {te_elem}, 1, "padic teich");
    const griesmer::GaloisRingSpec R = griesmer::make_galois_ring(field, te_prec);
    const griesmer::GrElem t = griesmer::teichmuller_lift(R, elems[0]);
    std::string coeffs;
    for (size_t i = 0; i < t.c.size(); ++i) {
      if (i) coeffs += ",";
      coeffs += std::to_string(t.c[i]);
    }
    std::cout << "teich = " << coeffs << "\n";
    if (!te_json.empty()) write_json_file(te_json, json{{"teich", t.c}});
  });

  // ---- geometry -----------------------------------------------------------
  auto* cmd_geometry = app.add_subcommand("geometry", "projective multiset reports");
  cmd_geometry->require_subcommand(1);
  auto* cmd_spectrum =
      cmd_geometry->add_subcommand("spectrum", "per-hyperplane multiset counts");
  std::string ge_file, ge_json;
  cmd_spectrum->add_option("file", ge_file, ".gcode input")->required();
  cmd_spectrum->add_option("--json", ge_json, "write a JSON mirror of the report");
  cmd_spectrum->callback([&] {
    const LinearCode C = griesmer::read_gcode_file(ge_file);
    const griesmer::PointMultiset m = griesmer::multiset_of(C);
    const std::vector<long long> counts = griesmer::hyperplane_counts(m);
    for (size_t h = 0; h < counts.size(); ++h)
      std::cout << h << " " << counts[h] << "\n";
    const long long g = griesmer::gamma(m);
    const long long endpoints = griesmer::endpoint_count(m);
    std::cout << "gamma=" << g << " endpoints=" << endpoints << "\n";
    if (!ge_json.empty()) {
      json j;
      j["hyperplane_counts"] = counts;
      j["gamma"] = g;
      j["endpoints"] = endpoints;
      write_json_file(ge_json, j);
    }
  });

  // ---- verify -------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "check divisibility claims");
  std::string ve_file, ve_theorems = "t1.2,t1.3,t1.5,t1.6,conj1", ve_json;
  bool ve_corpus = false;
  cmd_verify->add_option("file", ve_file, ".gcode input");
  cmd_verify->add_flag("--corpus", ve_corpus, "run over the built-in corpus");
  cmd_verify->add_option("--theorems", ve_theorems,
                         "comma-separated ids among t1.2,t1.3,t1.5,t1.6,conj1");
  cmd_verify->add_option("--json", ve_json, "write all verdicts as a JSON array");
  cmd_verify->callback([&] {
    if (ve_corpus == !ve_file.empty())
      throw error("verify: give exactly one of <file> and --corpus");
    const std::vector<griesmer::TheoremId> selection =
        griesmer::parse_theorem_selection(ve_theorems);
    std::vector<griesmer::TheoremVerdict> verdicts;
    if (ve_corpus) {
      verdicts = griesmer::run_corpus(selection);
    } else {
      const LinearCode C = griesmer::read_gcode_file(ve_file);
      const std::string id = std::filesystem::path(ve_file).stem().string();
      for (const griesmer::TheoremId which : selection)
        verdicts.push_back(griesmer::verify_theorem(C, which, id));
    }
    long long passed = 0, skipped = 0, failed = 0, discoveries = 0;
    for (const auto& v : verdicts) {
      std::cout << verdict_line(v) << "\n";
      if (!v.applicable)
        ++skipped;
      else if (v.pass)
        ++passed;
      else if (v.conjecture)
        ++discoveries;
      else
        ++failed;
    }
    std::cout << "checked = " << verdicts.size() << "\n"
              << "passed = " << passed << "\n"
              << "skipped = " << skipped << "\n"
              << "failed = " << failed << "\n"
              << "discoveries = " << discoveries << "\n";
    if (!ve_json.empty()) {
      json arr = json::array();
      for (const auto& v : verdicts) arr.push_back(verdict_json(v));
      write_json_file(ve_json, arr);
    }
    if (failed > 0) exit_code = kExitViolation;
  });

  // ---- search -------------------------------------------------------------
  auto* cmd_search = app.add_subcommand("search", "hunt for length-optimal codes");
  griesmer::SearchTask task;
  std::string se_strategy = "exhaustive", se_out;
  cmd_search->add_option("--p", task.p, "field characteristic")->required();
  cmd_search->add_option("--f", task.f, "field extension degree")->required();
  cmd_search->add_option("--k", task.k, "code dimension")->required();
  cmd_search->add_option("--d", task.d, "minimum distance")->required();
  cmd_search->add_option("--strategy", se_strategy, "exhaustive|random");
  cmd_search->add_option("--budget", task.budget, "complete candidates to evaluate")
      ->required();
  cmd_search->add_option("--out", se_out, "findings directory")->required();
  cmd_search->add_flag("--relax-recipe", task.relax_recipe,
                       "lift the recipe window (structural checks remain)");
  cmd_search->add_option("--seed", task.seed, "random strategy seed");
  cmd_search->callback([&] {
    task.strategy = griesmer::parse_strategy(se_strategy);
    griesmer::validate_search_task(task);
    std::error_code ec;
    std::filesystem::create_directories(se_out, ec);
    if (ec) throw error("cannot create directory '" + se_out + "'");
    const griesmer::SearchReport report = griesmer::run_search(task);
    std::cout << "n = " << report.n << "\n"
              << "candidates = " << report.candidates << "\n"
              << "completed = " << (report.completed ? "true" : "false") << "\n"
              << "finds = " << report.finds.size() << "\n";
    json jfinds = json::array();
    for (size_t i = 0; i < report.finds.size(); ++i) {
      const griesmer::SearchFind& find = report.finds[i];
      const std::string name = "find-" + std::to_string(i + 1);
      const std::string gcode_path = se_out + "/" + name + ".gcode";
      griesmer::write_gcode_file(find.code, gcode_path);
      const griesmer::AnalysisReport r = griesmer::analyze(find.code);
      std::cout << name << ": [" << r.n << "," << r.k << "," << r.d << "]_" << r.q
                << " divisor=" << r.divisor << " conj1=" << (find.conj1.pass ? "pass" : "FAIL")
                << " -> " << gcode_path << "\n";
      if (!find.conj1.pass) {
        write_json_file(se_out + "/" + name + ".verdict.json", verdict_json(find.conj1));
        std::cout << verdict_line(find.conj1) << "\n";
      }
      json jf;
      jf["file"] = name + ".gcode";
      jf["report"] = analysis_json(r);
      jf["conj1"] = verdict_json(find.conj1);
      jfinds.push_back(jf);
    }
    json j;
    j["p"] = task.p;
    j["f"] = task.f;
    j["k"] = task.k;
    j["d"] = task.d;
    j["strategy"] = se_strategy;
    j["budget"] = task.budget;
    j["seed"] = task.seed;
    j["relax_recipe"] = task.relax_recipe;
    j["n"] = report.n;
    j["candidates"] = report.candidates;
    j["completed"] = report.completed;
    j["finds"] = jfinds;
    write_json_file(se_out + "/report.json", j);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
