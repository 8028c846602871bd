#include "involut/cli.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "involut/selftest.hpp"
#include "involut/serialize.hpp"

namespace involut {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

json envelope(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

int cmd_classify(const FamilySpec& spec, const ClassifierOptions& options, std::uint64_t seed, std::ostream& out) {
  const ClassificationReport report = classify_involution(spec, seed, options);
  json j = to_json(report);
  j["command"] = "classify";
  out << j.dump(2) << '\n';
  const bool decided = report.verdict != Verdict::Inconclusive && report.verdict != Verdict::NotGenerating;
  return decided ? kExitOk : kExitNoVerdict;
}

int cmd_stabilizer(const std::string& input, const std::string& signs_text, std::ostream& out) {
  auto [tuple, file_signs] = tuple_from_json(read_json_file(input));
  SignVector signs = SignVector::all_plus(tuple.m());
  if (!signs_text.empty()) {
    signs = SignVector::parse(signs_text);
  } else if (file_signs) {
    signs = *file_signs;
  }
  if (signs.size() != tuple.m()) throw std::invalid_argument("signs length does not match m");
  json j = envelope("stabilizer");
  j["tuple"] = to_json(tuple, signs);
  j["generates_full_algebra"] = generates_full_algebra(tuple);
  j["centralizer_is_scalar"] = centralizer_is_scalar(tuple);
  if (!j["generates_full_algebra"].get<bool>()) {
    j["stabilizer"] = {{"outcome", "NotGenerating"}};
    out << j.dump(2) << '\n';
    return kExitNoVerdict;
  }
  const StabilizerOutcome s = stabilizer_element(signs, tuple);
  j["stabilizer"] = to_json(s);
  if (s.element) {
    const TauCanonicalForm form = canonicalize_tau_g(*s.element);
    json cf = to_json(form);
    cf["verified"] = verify_canonical_form(*s.element, form);
    j["canonical_form"] = cf;
  }
  out << j.dump(2) << '\n';
  return s.kind == StabilizerKind::Ambiguous ? kExitNoVerdict : kExitOk;
}

int cmd_normal_form(const std::string& input, const std::string& target, std::ostream& out) {
  const json in = read_json_file(input);
  MatrixQ m;
  if (in.is_array()) {
    m = matrix_from_json(in);
  } else if (in.contains("matrix")) {
    m = matrix_from_json(in.at("matrix"));
  } else {
    auto [tuple, signs] = tuple_from_json(in);
    if (tuple.m() != 1) throw std::invalid_argument("normal-form expects a single matrix");
    m = tuple[0];
  }
  if (m.rows() != m.cols()) throw std::invalid_argument("normal-form expects a square matrix");
  json j = envelope("normal-form");
  j["target"] = target;
  j["input"] = to_json(m);
  if (target == "identity") {
    const SymmetricNormalForm nf = sym_congruence_to_identity(m);
    json radicands = json::array();
    for (const auto& d : nf.context.radicands()) radicands.push_back(d.get_str());
    j["b"] = to_json(nf.b);
    j["radicands"] = radicands;
    j["residual_zero"] = is_zero_matrix(MatrixT(nf.b * m.cast<TowerScalar>() * nf.b.transpose() -
                                                MatrixT::Identity(m.rows(), m.rows())));
  } else if (target == "J") {
    const MatrixQ b = skew_congruence_to_J(m);
    j["b"] = to_json(b);
    j["radicands"] = json::array();
    j["residual_zero"] = is_zero_matrix(MatrixQ(b * m * b.transpose() - standard_symplectic(m.rows())));
  } else {
    throw std::invalid_argument("unknown target '" + target + "'");
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_witness(const std::string& name, std::uint64_t seed, std::ostream& out) {
  json j = envelope("witness");
  j["name"] = name;
  if (name == "tr-xyz") {
    const TupleQ a(3, {elementary(3, 1, 2), elementary(3, 2, 2), elementary(3, 2, 1)});
    const Rational xyz = trace_eval(NcPoly::parse("X1 X2 X3", 3), a);
    const Rational zyx = trace_eval(NcPoly::parse("X3 X2 X1", 3), a);
    j["tuple"] = to_json(a);
    j["tr_XYZ"] = to_json(xyz);
    j["tr_ZYX"] = to_json(zyx);
    j["equal"] = xyz == zyx;
  } else if (name == "tr-xy-deg6" || name == "tr-x y-deg6") {
    const TupleQ a(3, {MatrixQ(elementary(3, 1, 2) + elementary(3, 2, 3)),
                       MatrixQ(elementary(3, 1, 2) + elementary(3, 3, 1))});
    const Rational lhs = trace_eval(NcPoly::parse("X1 X2 X1^2 X2^2", 2), a);
    const Rational rhs = trace_eval(NcPoly::parse("X2^2 X1^2 X2 X1", 2), a);
    j["name"] = "tr-xy-deg6";
    j["tuple"] = to_json(a);
    j["tr_XYX2Y2"] = to_json(lhs);
    j["tr_Y2X2YX"] = to_json(rhs);
    j["equal"] = lhs == rhs;
  } else if (name == "ud22-center") {
    const Section6Result s = ud22_section6_walkthrough(Rational(1), Rational(2), Rational(0), Rational(1),
                                                       Rational(2), Rational(0));
    j["section6"] = {{"y", to_json(s.y)},
                     {"g", to_json(s.g.representative())},
                     {"conjugates_to_transpose", s.conjugates_to_transpose},
                     {"symmetric", s.symmetric}};
    const TraceIdentityResult t =
        trace_identity_test(NcPoly::parse("X1 X2", 2), NcPoly::parse("X2 X1", 2), 2, 50, seed);
    j["trace_XY_fixed_by_rho"] = {{"identity", t.identity}, {"trials", t.trials_run}, {"seed", t.seed}};
    j["passed"] = s.conjugates_to_transpose && s.symmetric && t.identity;
  } else {
    throw std::invalid_argument("unknown witness '" + name + "'");
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_selftest(std::uint64_t seed, std::ostream& out) {
  json j = envelope("selftest");
  j["seed"] = seed;
  json props = json::array();
  bool all = true;
  for (const PropertyResult& r : run_property_suite(seed)) {
    json p = {{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"passed", r.passed()}};
    if (!r.first_failure.empty()) p["first_failure"] = r.first_failure;
    props.push_back(std::move(p));
    all = all && r.passed();
  }
  j["properties"] = props;
  j["passed"] = all;
  out << j.dump(2) << '\n';
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify involutions of generic matrix algebras by exact stabilizer computations", "involut"};
  app.require_subcommand(1);

  FamilySpec spec;
  std::string family = "full";
  std::string signs_text;
  ClassifierOptions options;
  std::uint64_t seed = 0;
  auto* classify = app.add_subcommand("classify", "Kind and type verdict for a family of tuples");
  classify->add_option("--n", spec.n, "Matrix size")->required()->check(CLI::PositiveNumber);
  classify->add_option("--m", spec.m, "Number of generic matrices")->required();
  classify->add_option("--family", family, "full | sym | symp")->check(CLI::IsMember({"full", "sym", "symp"}));
  classify->add_option("--signs", signs_text, "Comma-separated signs, e.g. +,-");
  classify->add_option("--trials", options.trials, "Independent trials")->check(CLI::PositiveNumber);
  classify->add_option("--retry-cap", options.retry_cap, "Resamples per trial")->check(CLI::PositiveNumber);
  classify->add_option("--bound", options.bound, "Entry bound for sampling")->check(CLI::PositiveNumber);
  classify->add_option("--seed", seed, "Master seed");

  std::string input;
  auto* stabilizer = app.add_subcommand("stabilizer", "Stabilizer element of a tuple read from JSON");
  stabilizer->add_option("--input", input, "Tuple JSON file")->required();
  stabilizer->add_option("--signs", signs_text, "Comma-separated signs (overrides the file)");

  std::string target;
  auto* normal_form = app.add_subcommand("normal-form", "Congruence normal form of a matrix read from JSON");
  normal_form->add_option("--input", input, "Matrix JSON file")->required();
  normal_form->add_option("--target", target, "identity | J")->required()->check(CLI::IsMember({"identity", "J"}));

  std::string name;
  auto* witness = app.add_subcommand("witness", "Golden trace and stabilizer computations");
  witness->add_option("--name", name, "tr-xyz | tr-xy-deg6 | ud22-center")->required();
  witness->add_option("--seed", seed, "Seed for randomized parts");

  auto* selftest = app.add_subcommand("selftest", "Run the randomized property suite");
  selftest->add_option("--seed", seed, "Master seed");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  try {
    if (*classify) {
      spec.family = parse_family(family);
      if (!signs_text.empty()) spec.signs = SignVector::parse(signs_text);
      return cmd_classify(spec, options, seed, out);
    }
    if (*stabilizer) return cmd_stabilizer(input, signs_text, out);
    if (*normal_form) return cmd_normal_form(input, target, out);
    if (*witness) return cmd_witness(name, seed, out);
    if (*selftest) return cmd_selftest(seed, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInvalidInput;
}

}  // namespace involut
