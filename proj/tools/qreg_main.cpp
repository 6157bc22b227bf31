#include <CLI11.hpp>

#include <iostream>

#include "qreg/json_io.hpp"
#include "qreg/mub.hpp"

using namespace qreg;

namespace {

// Flat "key = value" rendering for --format text; JSON stays canonical.
void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items())
      render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    out << prefix << " = " << j.dump() << "\n";
  } else {
    out << prefix << " = " << j.dump() << "\n";
  }
}

void emit(const json& report, const std::string& format, const std::string& out_path) {
  if (!out_path.empty()) {
    if (format == "json") {
      write_json_file(report, out_path);
    } else {
      std::ofstream out(out_path);
      if (!out) throw FormatError("cannot write " + out_path);
      render_text(report, "", out);
    }
    return;
  }
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    render_text(report, "", std::cout);
}

ScanMode parse_mode(const std::string& m) {
  if (m == "exhaustive") return ScanMode::exhaustive;
  if (m == "sampled") return ScanMode::sampled;
  if (m == "structured") return ScanMode::structured;
  throw CLI::ValidationError("--mode", "unknown mode " + m);
}

json quadnum_report(const QuadNum& q) {
  return json{{"value", quadnum_to_json(q)}, {"approx", q.to_double()}};
}

int cmd_construct(const std::string& kind, const std::string& in,
                  std::size_t point, unsigned angle, const std::string& out) {
  if (kind == "mub-d4") {
    write_json_file(mub_to_json(construct_d4()), out);
  } else if (kind == "mub-d16") {
    write_json_file(mub_to_json(construct_d16()), out);
  } else if (kind == "nr-code") {
    write_code_file(extract_code(construct_d16(), 0), out);
  } else if (kind == "lsd-from-mub") {
    if (in.empty()) throw CLI::ValidationError("--in", "lsd-from-mub needs an input MUB");
    auto m = mub_from_json(read_json_file(in));
    auto x = mub_gram(m);
    auto angles = angle_set(x);
    if (angle < 1 || angle > angles.size())
      throw CLI::ValidationError("--angle", "angle index out of range");
    auto derived = derive_one(x, point, angles[angle - 1]);
    auto lsd = scheme_to_lsd(AssociationScheme::from_gram(derived));
    write_json_file(lsd_to_json(lsd), out);
  } else {
    throw CLI::ValidationError("kind", "unknown construct kind " + kind);
  }
  return 0;
}

int cmd_verify(const std::string& kind, const std::string& in,
               const std::string& format, const std::string& out) {
  json report{{"command", "verify"}, {"kind", kind}, {"input", in}};
  try {
    if (kind == "mub") {
      auto m = mub_from_json(read_json_file(in));
      report["d"] = m.d;
      report["f"] = m.f;
      report["D"] = m.D;
    } else if (kind == "design") {
      auto d = design_from_json(read_json_file(in));
      report["v"] = d.v;
      report["k"] = d.k;
      report["lambda"] = d.lambda;
    } else if (kind == "linked") {
      auto sys = lsd_from_json(read_json_file(in));
      report["f"] = sys.fibers();
      report["v"] = sys.fiber_size();
      report["k"] = sys.k();
      report["lambda"] = sys.lambda();
      if (sys.sigma_tau()) {
        report["sigma"] = sys.sigma_tau()->first;
        report["tau"] = sys.sigma_tau()->second;
        report["sign_branch"] = sys.sign_branch();
      }
    } else if (kind == "scheme") {
      auto s = scheme_from_json(read_json_file(in));
      report["n"] = s.points();
      report["classes"] = s.classes();
      report["valencies"] = s.valencies();
      auto qs = s.q_structure();
      report["q_structure"] = json{{"is_q_polynomial", qs.is_q_polynomial},
                                   {"is_q_bipartite", qs.is_q_bipartite},
                                   {"is_q_antipodal", qs.is_q_antipodal},
                                   {"antipodal_class_count", qs.antipodal_class_count}};
    } else if (kind == "cc") {
      auto cc = cc_from_json(read_json_file(in));
      report["n"] = cc.n;
      report["num_fibers"] = cc.num_fibers;
      report["num_relations"] = cc.num_relations;
    } else {
      throw CLI::ValidationError("kind", "unknown verify kind " + kind);
    }
  } catch (const FormatError&) {
    throw;  // malformed input is a usage error, not a failed property
  } catch (const std::runtime_error& e) {
    report["verdict"] = false;
    report["witness"] = e.what();
    emit(report, format, out);
    return 1;
  }
  report["verdict"] = true;
  emit(report, format, out);
  return 0;
}

int cmd_check(const std::string& kind, const std::string& in, const std::string& mode,
              std::uint64_t samples, std::uint64_t seed, std::size_t pairs,
              std::size_t fiber, unsigned t_max, const std::string& format,
              const std::string& out) {
  (void)t_max;
  json report{{"command", "check"}, {"kind", kind}, {"input", in}};
  bool verdict = true;

  if (kind == "triple" || kind == "quadruple") {
    auto s = scheme_from_json(read_json_file(in));
    auto m = parse_mode(mode);
    RegularityReport r = kind == "triple"
                             ? triple_regular(s, m, samples, seed)
                             : quadruple_regular(s, m, samples, seed, pairs);
    report["regularity"] = regularity_report_to_json(r);
    report["claim"] = kind == "triple"
                          ? "|R_l(x) n R_m(y) n R_n(z)| depends only on the class type"
                          : "4-point stabilizer counts depend only on the class type";
    verdict = r.verdict;
  } else if (kind == "noda") {
    auto sys = lsd_from_json(read_json_file(in));
    auto r = noda_check(sys);
    report["claim"] = "f - 1 <= (v-2) sqrt(k(v-k)) / ((v-2k) sqrt(v-1))";
    report["rhs"] = quadnum_report(r.rhs);
    report["f_minus_1"] = sys.fibers() - 1;
    report["is_equality"] = r.is_equality;
    report["complemented"] = r.complemented;
    report["k_used"] = r.k_used;
    verdict = r.is_equality;
  } else if (kind == "quad-counting") {
    auto sys = lsd_from_json(read_json_file(in));
    auto r = quad_counting(sys, fiber);
    report["claim"] =
        "sum alpha(S) and sum C(alpha(S),2) over 4-subsets of a fiber match "
        "their two-design counting identities";
    json hist = json::array();
    for (auto& [a, c] : r.histogram) hist.push_back(json::array({a, c.get_str()}));
    report["histogram"] = hist;
    report["sum_alpha"] = r.sum_alpha.get_str();
    report["sum_alpha_choose2"] = r.sum_alpha_choose2.get_str();
    report["is_4_design"] = r.is_4_design;
  } else if (kind == "weights") {
    auto c = read_code_file(in);
    auto w = weight_enumerator(c);
    json coeff = json::array();
    for (std::size_t i = 0; i < w.coeff.size(); ++i)
      if (w.coeff[i] != 0) coeff.push_back(json::array({i, w.coeff[i].get_str()}));
    report["claim"] = "dual weight distribution A'_j = (1/|C|) sum_w A_w K_j(w) "
                      "is nonnegative";
    report["weights"] = coeff;
    auto dual = macwilliams(w, mpz_class(static_cast<long>(c.words.size())));
    json dj = json::array();
    for (std::size_t i = 0; i < dual.size(); ++i)
      if (dual[i] != 0) dj.push_back(json::array({i, dual[i].get_str()}));
    report["dual_weights"] = dj;
  } else if (kind == "oa-strength") {
    auto c = read_code_file(in);
    report["claim"] = "orthogonal-array strength = min nonzero dual index - 1";
    report["length"] = c.length;
    report["size"] = c.words.size();
    report["strength"] = oa_strength(c);
  } else if (kind == "table1") {
    auto m = mub_from_json(read_json_file(in));
    auto x = mub_gram(m);
    std::size_t z1 = 0, z2 = x.size;
    for (std::size_t p = 1; p < x.size && z2 == x.size; ++p)
      if (x.inner(0, p) == QuadNum(0)) z2 = p;
    if (z2 == x.size) throw FormatError("no orthogonal pair in the input");
    report["claim"] =
        "two-point cell intersection counts match their closed forms in d";
    report["pair"] = json::array({z1, z2});
    auto bad = check_intersection_table(x, z1, z2, m.d);
    if (bad) report["witness"] = *bad;
    verdict = !bad;
  } else if (kind == "lemma-matrices") {
    auto s = scheme_from_json(read_json_file(in));
    if (s.classes() != 3) throw FormatError("lemma-matrices expects a 3-class scheme");
    std::size_t d = static_cast<std::size_t>(s.valency(2)) + 1;
    std::size_t f = s.points() / d + 1;
    report["d"] = d;
    report["f"] = f;
    report["claim"] = "derived-scheme B1, B2, B3, Q, B1* match their closed forms; "
                      "a1* = d/(f-1) - 2";
    auto c = derived_closed_forms(d, f);
    // Align eigenspaces by matching whole Q columns (multiplicities alone
    // can collide, e.g. at d = 4).
    std::vector<std::size_t> perm(4);
    std::vector<bool> used(4, false);
    for (std::size_t cf = 0; cf < 4; ++cf) {
      std::size_t hit = 4;
      for (std::size_t sc = 0; sc < 4 && hit == 4; ++sc) {
        if (used[sc]) continue;
        bool all = true;
        for (std::size_t r = 0; r < 4; ++r)
          if (s.Q().at(r, sc) != c.Q.at(r, cf)) all = false;
        if (all) hit = sc;
      }
      if (hit == 4)
        throw Mismatch("no eigenspace matches closed-form Q column " +
                       std::to_string(cf));
      perm[cf] = hit;
      used[hit] = true;
    }
    std::string bad;
    auto cmp = [&](const char* name, auto actual, const ExactMatrix& expect,
                   bool permute_cols) {
      for (std::size_t i = 0; i < 4 && bad.empty(); ++i)
        for (std::size_t j = 0; j < 4 && bad.empty(); ++j) {
          const QuadNum& a = permute_cols ? actual(i, perm[j]) : actual(i, j);
          if (a != expect.at(i, j))
            bad = std::string(name) + "[" + std::to_string(i) + "][" +
                  std::to_string(j) + "] = " + a.str() + ", closed form " +
                  expect.at(i, j).str();
        }
    };
    auto B = [&](unsigned i) {
      return [&s, i](std::size_t r, std::size_t cidx) {
        return s.intersection_matrix(i).at(r, cidx);
      };
    };
    cmp("B1", B(1), c.B1, false);
    cmp("B2", B(2), c.B2, false);
    cmp("B3", B(3), c.B3, false);
    cmp("Q", [&s](std::size_t r, std::size_t cidx) { return s.Q().at(r, cidx); },
        c.Q, true);
    // Krein matrix in the same eigenspace numbering as the closed form.
    cmp("B1*",
        [&](std::size_t r, std::size_t cidx) {
          return s.krein(static_cast<unsigned>(perm[1]),
                         static_cast<unsigned>(perm[r]),
                         static_cast<unsigned>(cidx));
        },
        c.B1star, true);
    if (!bad.empty()) report["witness"] = bad;
    verdict = bad.empty();
  } else {
    throw CLI::ValidationError("kind", "unknown check kind " + kind);
  }

  report["verdict"] = verdict;
  emit(report, format, out);
  return verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for real mutually unbiased bases, "
               "linked symmetric designs, their association schemes, and the "
               "associated binary codes"};
  app.require_subcommand(1);

  std::string kind, in, out, format = "json", mode = "exhaustive";
  std::uint64_t samples = 1000000, seed = 1;
  std::size_t point = 0, fiber = 0, pairs = 200;
  unsigned angle = 1, t_max = 8;

  auto* construct = app.add_subcommand("construct", "Build a canonical artifact");
  construct->add_option("kind", kind, "mub-d4 | mub-d16 | nr-code | lsd-from-mub")
      ->required();
  construct->add_option("--in", in, "input MUB JSON (lsd-from-mub)");
  construct->add_option("--point", point, "base point index (lsd-from-mub)");
  construct->add_option("--angle", angle, "angle class index, 1-based (lsd-from-mub)");
  construct->add_option("--out", out, "output path")->required();

  auto* verify = app.add_subcommand("verify", "Re-verify an artifact file");
  verify->add_option("kind", kind, "mub | design | linked | scheme | cc")->required();
  verify->add_option("in", in, "input file")->required();
  verify->add_option("--format", format, "json | text");
  verify->add_option("--out", out, "write the report here instead of stdout");

  auto* check = app.add_subcommand("check", "Run a named structural check");
  check
      ->add_option("kind", kind,
                   "triple | quadruple | noda | quad-counting | weights | "
                   "oa-strength | table1 | lemma-matrices")
      ->required();
  check->add_option("in", in, "input file")->required();
  check->add_option("--mode", mode, "exhaustive | sampled | structured");
  check->add_option("--samples", samples, "sample count for sampled mode");
  check->add_option("--seed", seed, "RNG seed for sampled/structured modes");
  check->add_option("--pairs", pairs, "pairs per class for structured mode");
  check->add_option("--fiber", fiber, "fiber index for quad-counting");
  check->add_option("--t-max", t_max, "design strength cap");
  check->add_option("--format", format, "json | text");
  check->add_option("--out", out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(kind, in, point, angle, out);
    if (verify->parsed()) return cmd_verify(kind, in, format, out);
    return cmd_check(kind, in, mode, samples, seed, pairs, fiber, t_max, format, out);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
}
