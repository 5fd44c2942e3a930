#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eqcoll/json_io.hpp"

namespace {

using namespace eqcoll;

std::string pretty(const GradedDim& g) {
  if (g.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [degree, mult] : g.dims()) {
    if (!first) os << "⊕";
    first = false;
    os << "C";
    if (mult != 1) os << "^" << mult;
    os << "[" << -degree << "]";
  }
  return os.str();
}

std::string pretty_parens(const GradedDim& g) {
  if (g.dims().size() > 1) return "(" + pretty(g) + ")";
  return pretty(g);
}

std::string pretty(const FormalKernel& k) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* atom, const GradedDim& mult) {
    if (mult.is_zero()) return;
    if (!first) os << " ⊕ ";
    first = false;
    os << atom << "·" << pretty_parens(mult);
  };
  emit("Δ", k.diagonal);
  emit("Prod", k.product);
  emit("Prodω", k.product_omega);
  if (first) return "0";
  return os.str();
}

int cmd_partitions(int n, bool as_json) {
  auto ps = partitions(n);
  if (as_json) {
    json j;
    j["n"] = n;
    j["count"] = ps.size();
    j["partitions"] = ps;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << ps.size() << "\n";
  for (const auto& p : ps) {
    for (size_t i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_seq_length(int k, int n, bool as_json) {
  Int len = sequence_length(k, n);
  if (as_json) {
    json j{{"k", k}, {"n", n}, {"length", len.str()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << len << "\n";
  }
  return 0;
}

int cmd_sym_power(const std::string& h_spec, int k, bool as_json) {
  GradedDim h = graded_dim_from_json(json::parse(h_spec));
  GradedDim result = sym_power(h, k);
  if (as_json)
    std::cout << to_json(result).dump(2) << "\n";
  else
    std::cout << pretty(result) << "\n";
  return 0;
}

int cmd_check_collection(const std::string& path, bool as_json) {
  ExceptionalCollection c = load_collection_file(path);
  ValidationReport report = validate(c);
  if (as_json) {
    json j = to_json(report);
    if (report.valid()) j["strength"] = strength_name(classify_strength(c));
    std::cout << j.dump(2) << "\n";
  } else if (report.valid()) {
    std::cout << "valid collection, k = " << c.k << ", "
              << strength_name(classify_strength(c)) << "\n";
  } else {
    std::cout << "invalid collection:\n";
    for (const auto& v : report.violations)
      std::cout << "  (" << v.i << "," << v.j << ") " << v.message << "\n";
  }
  return report.valid() ? 0 : 1;
}

int cmd_induce(const std::string& path, int n, bool oracle, bool as_json) {
  ExceptionalCollection c = load_collection_file(path);
  auto vr = validate(c);
  if (!vr.valid()) {
    std::cerr << "invalid base collection\n";
    return 1;
  }
  InducedCollection ic = enumerate_labels(c, n);
  ExtMethod method = oracle ? ExtMethod::BruteForce : ExtMethod::Character;
  VerifyReport report = verify_sequence(ic, c, method);
  if (as_json) {
    json j = to_json(report);
    json labels = json::array();
    for (const auto& label : ic.labels) labels.push_back(to_json(label));
    j["labels"] = labels;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.object_count << " objects, "
              << (report.passed() ? "exceptional sequence verified" : "verification FAILED")
              << ", " << strength_name(report.strength) << "\n"
              << report.fullness_note << "\n";
    for (const auto& f : report.failures)
      std::cout << "  failure " << f.kind << " at pair (" << f.i << "," << f.j
                << "): " << pretty(f.actual) << "\n";
  }
  return report.passed() ? 0 : 1;
}

int cmd_equi_ext(const std::string& path, int n, int i, int j, bool twist, bool oracle,
                 bool as_json) {
  ExceptionalCollection c = load_collection_file(path);
  InducedCollection ic = enumerate_labels(c, n);
  if (i < 0 || j < 0 || i >= static_cast<int>(ic.labels.size()) ||
      j >= static_cast<int>(ic.labels.size()))
    throw std::invalid_argument("label index out of range");
  ExtMethod method = oracle ? ExtMethod::BruteForce : ExtMethod::Character;
  GradedDim result = equivariant_ext(ic.labels[i], ic.labels[j], c, twist, method);
  if (as_json) {
    json out{{"from", to_json(ic.labels[i])},
             {"to", to_json(ic.labels[j])},
             {"twist_omega", twist},
             {"ext", to_json(result)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << pretty(result) << "\n";
  }
  return 0;
}

int cmd_functor_classify(const std::string& case_tag, int d, int n, bool as_json) {
  GeometricInput g;
  if (case_tag == "even-cy" || case_tag == "odd-cy")
    g = make_cy_input(n, d);
  else if (case_tag == "trivial")
    g = make_trivial_input(n, d);
  else
    throw std::invalid_argument("unknown case: " + case_tag);
  if ((case_tag == "even-cy") != (g.tag == CaseTag::EvenCY))
    throw std::invalid_argument("case tag does not match parity of d");
  GrgResult result = grg(g);
  if (as_json) {
    json j{{"case", case_name(g.tag)},
           {"d", d},
           {"n", n},
           {"class", functor_class_name(result.cls)}};
    if (result.kernel) j["kernel"] = to_json(*result.kernel);
    std::cout << j.dump(2) << "\n";
  } else if (result.kernel) {
    std::cout << functor_class_name(result.cls) << "; G^RG = " << pretty(*result.kernel)
              << "\n";
  } else {
    std::cout << "undetermined; no kernel claimed\n";
  }
  return 0;
}

int cmd_ranks(std::int64_t chi, int n, bool as_json) {
  RankInput r{Int(chi), n};
  Int fr = rank_fr(r), tw = rank_twist(r);
  if (as_json) {
    json j{{"chi", chi}, {"n", n}, {"rank_fr", fr.str()}, {"rank_twist", tw.str()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "rank FR(k(xi)) = " << fr << "\n"
              << "rank T(k(xi))  = " << tw << "\n";
  }
  return 0;
}

int cmd_twist_rank(int n, bool as_json) {
  TwistGroupReport report = twist_group_report(n);
  if (as_json) {
    std::cout << to_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << "generators commute: " << (report.commutes ? "yes" : "no") << "\n"
            << "action matrix (" << report.matrix.row_labels.size() << " objects x "
            << report.matrix.col_labels.size() << " generators):\n";
  for (size_t r = 0; r < report.matrix.entries.size(); ++r) {
    std::cout << "  " << report.matrix.row_labels[r] << ":";
    for (const auto& v : report.matrix.entries[r]) std::cout << " " << v;
    std::cout << "\n";
  }
  std::cout << "rational rank: " << report.rank << "\n"
            << "integer kernel trivial: " << (report.integer_kernel_trivial ? "yes" : "no")
            << "\n"
            << report.discrepancy_note << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for induced exceptional collections, kernel calculus and "
               "twist-group actions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  int n = 0, k = 0, d = 0, idx_i = 0, idx_j = 0;
  std::int64_t chi = 0;
  std::string path, case_tag, h_spec;
  bool oracle = false, twist = false;

  auto* p_partitions = app.add_subcommand("partitions", "enumerate partitions of n");
  p_partitions->add_option("n", n)->required();

  auto* p_seq = app.add_subcommand("seq-length", "length of the induced collection");
  p_seq->add_option("--k", k)->required();
  p_seq->add_option("--n", n)->required();

  auto* p_sym = app.add_subcommand("sym-power", "graded symmetric power");
  p_sym->add_option("--dims", h_spec,
                    "graded dimensions as JSON mapping degree to dimension, "
                    "e.g. {\"0\":1,\"2\":1} for C[0]+C[-2]")
      ->required();
  p_sym->add_option("--k", k)->required();

  auto* p_check = app.add_subcommand("check-collection", "validate a collection file");
  p_check->add_option("--collection", path)->required();

  auto* p_induce = app.add_subcommand("induce", "enumerate and verify the induced collection");
  p_induce->add_option("--collection", path)->required();
  p_induce->add_option("--n", n)->required();
  p_induce->add_flag("--oracle", oracle, "use the brute-force invariants oracle");

  auto* p_ext = app.add_subcommand("equi-ext", "equivariant Ext between two induced objects");
  p_ext->add_option("--collection", path)->required();
  p_ext->add_option("--n", n)->required();
  p_ext->add_option("--i", idx_i)->required();
  p_ext->add_option("--j", idx_j)->required();
  p_ext->add_flag("--twist-omega", twist);
  p_ext->add_flag("--oracle", oracle);

  auto* p_classify = app.add_subcommand("functor-classify", "classify the truncated ideal functor");
  p_classify->add_option("--case", case_tag, "even-cy | odd-cy | trivial")->required();
  p_classify->add_option("--d", d)->required();
  p_classify->add_option("--n", n)->required();

  auto* p_ranks = app.add_subcommand("ranks", "monad and twist ranks on a point");
  p_ranks->add_option("--chi", chi)->required();
  p_ranks->add_option("--n", n)->required();

  auto* p_twist = app.add_subcommand("twist-rank", "twist-group action matrix and rank");
  p_twist->add_option("--n", n)->required();

  // Let `--json` be given before or after the verb.
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (p_partitions->parsed()) return cmd_partitions(n, as_json);
    if (p_seq->parsed()) return cmd_seq_length(k, n, as_json);
    if (p_sym->parsed()) return cmd_sym_power(h_spec, k, as_json);
    if (p_check->parsed()) return cmd_check_collection(path, as_json);
    if (p_induce->parsed()) return cmd_induce(path, n, oracle, as_json);
    if (p_ext->parsed()) return cmd_equi_ext(path, n, idx_i, idx_j, twist, oracle, as_json);
    if (p_classify->parsed()) return cmd_functor_classify(case_tag, d, n, as_json);
    if (p_ranks->parsed()) return cmd_ranks(chi, n, as_json);
    if (p_twist->parsed()) return cmd_twist_rank(n, as_json);
  } catch (const eqcoll::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
