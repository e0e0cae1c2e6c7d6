#include "salemlat/cli.hpp"

#include "salemlat/exact_linalg.hpp"
#include "salemlat/rankkit.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace salemlat::cli {

namespace {

const Rational kIsometryPrecision(1, 1000000000);

struct Flag {
  const char* name;
  const char* help;
  bool required;
  const char* fallback;  ///< default value, or nullptr
};

struct Subcommand {
  const char* name;
  const char* help;
  std::vector<Flag> flags;
  std::vector<Flag> switches;
};

const std::vector<Subcommand>& subcommands() {
  static const std::vector<Subcommand> all = {
      {"salem-test", "Decide whether a polynomial is a Salem polynomial",
       {{"poly", "comma-separated ascending integer coefficients", true, nullptr},
        {"precision", "width bound for the Salem number enclosure", false, "1e-12"}},
       {}},
      {"salem-enum", "List Salem polynomials of a degree within a trace window",
       {{"degree", "even degree", true, nullptr},
        {"trace-min", "smallest trace", true, nullptr},
        {"trace-max", "largest trace", true, nullptr}},
       {}},
      {"lattice-info", "Signature, class and discriminant group of a lattice",
       {{"lattice", "lattice JSON file", true, nullptr}},
       {}},
      {"lattice-vectors", "Vectors of a given norm in a definite lattice",
       {{"lattice", "lattice JSON file", true, nullptr}, {"norm", "target norm", true, nullptr}},
       {}},
      {"isom-classify", "Verify and classify a lattice isometry",
       {{"lattice", "lattice JSON file", true, nullptr}, {"matrix", "isometry JSON file", true, nullptr}},
       {}},
      {"k3-run", "Run the K3 lattice construction for a prime selection",
       {{"config", "prime selection JSON file", true, nullptr}},
       {{"skip-extension", "stop after building the isometries on L", false, nullptr}}},
      {"rank", "Rank of the subgroup generated by integer vectors",
       {{"vectors", "vectors JSON file", true, nullptr}},
       {}},
  };
  return all;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputOutputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputFormatError(path + ": " + e.what());
  }
}

int parse_int(const std::string& text, const char* what) {
  const Integer v = parse_integer(text);
  if (abs(v) > 1000000) throw PreconditionError(std::string(what) + " out of range");
  return v.convert_to<int>();
}

IntPolynomial parse_polynomial(const std::string& text) {
  std::vector<Integer> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw PreconditionError("empty coefficient in \"" + text + "\"");
    coeffs.push_back(parse_integer(item.substr(first, last - first + 1)));
  }
  if (coeffs.empty()) throw PreconditionError("polynomial has no coefficients");
  return IntPolynomial(std::move(coeffs));
}

Json check(const std::string& name, bool pass, const std::string& detail = {}) {
  return to_json(NamedCheck{name, pass, std::nullopt, detail});
}

struct Payload {
  Json result;
  Json checks = Json::array();
};

Payload salem_test(const CommandPlan& plan) {
  const IntPolynomial p = parse_polynomial(*plan.input("poly"));
  const Rational precision = parse_rational(*plan.input("precision"));
  const SalemClassification c = classify_salem(p, precision);
  Payload out;
  out.result["polynomial"] = to_json(p);
  const Json classification = to_json(c);
  for (const auto& [key, value] : classification.items()) out.result[key] = value;
  out.checks.push_back(check("salem", c.is_salem(), c.detail));
  return out;
}

Payload salem_enum(const CommandPlan& plan) {
  const int degree = parse_int(*plan.input("degree"), "degree");
  const Integer lo = parse_integer(*plan.input("trace-min"));
  const Integer hi = parse_integer(*plan.input("trace-max"));
  const auto found = enumerate_salem(degree, lo, hi);
  Payload out;
  out.result["degree"] = degree;
  out.result["trace_min"] = to_json(lo);
  out.result["trace_max"] = to_json(hi);
  out.result["count"] = found.size();
  Json list = Json::array();
  bool all_salem = true;
  for (const auto& c : found) {
    list.push_back(to_json(c));
    all_salem = all_salem && classify_salem(c.polynomial, Rational(1, 1000000)).is_salem();
  }
  out.result["polynomials"] = list;
  out.checks.push_back(check("all_reclassified_salem", all_salem));
  return out;
}

Payload lattice_info(const CommandPlan& plan) {
  const GramLattice l = lattice_from_json(read_json(*plan.input("lattice")));
  Payload out;
  out.result["lattice"] = to_json(l);
  out.result["signature"] = to_json(signature(l));
  out.result["class"] = to_string(classify(l));
  const Integer det = determinant(l.gram());
  out.result["determinant"] = to_json(det);
  out.result["discriminant_group"] = det == 0 ? Json(nullptr) : to_json(discriminant_group(l));
  return out;
}

Payload lattice_vectors(const CommandPlan& plan) {
  const GramLattice l = lattice_from_json(read_json(*plan.input("lattice")));
  const Integer norm = parse_integer(*plan.input("norm"));
  const auto reps = vectors_of_norm(l, norm);
  Payload out;
  out.result["norm"] = to_json(norm);
  out.result["pairs"] = reps.size();
  out.result["total"] = 2 * reps.size();
  Json list = Json::array();
  for (const auto& v : reps) list.push_back(to_json(v));
  out.result["representatives"] = list;
  return out;
}

Payload isom_classify(const CommandPlan& plan) {
  const GramLattice l = lattice_from_json(read_json(*plan.input("lattice")));
  const IntMatrix m = isometry_matrix_from_json(read_json(*plan.input("matrix")));
  Payload out;
  out.result["matrix"] = to_json(m);
  std::optional<LatticeIsometry> g;
  try {
    g = verify_isometry(m, l);
  } catch (const GramViolationError& e) {
    out.checks.push_back(to_json(NamedCheck{"isometry", false, std::nullopt, e.what()}));
  } catch (const DeterminantError& e) {
    out.checks.push_back(to_json(NamedCheck{"isometry", false, std::nullopt, e.what()}));
  }
  if (!g) {
    out.result["classification"] = nullptr;
    return out;
  }
  out.checks.push_back(check("isometry", true));
  out.result["char_poly"] = to_json(char_poly(*g));
  out.result["classification"] = to_json(classify_isometry(*g, kIsometryPrecision));
  const RationalInterval h = entropy(*g, kIsometryPrecision);
  out.result["entropy"] = Json{{"lo", to_json(h.lo)}, {"hi", to_json(h.hi)}};
  return out;
}

Payload k3_run(const CommandPlan& plan) {
  const PrimeSelection primes = primes_from_json(read_json(*plan.input("config")));
  const bool skip = plan.input("skip-extension") != nullptr;
  const K3Run run = run_k3(primes, skip);
  const K3ConstructionReport& r = run.report;
  Payload out;
  out.result["primes"] = to_json(r.primes);
  out.result["disc_order"] = to_json(r.disc_order);
  out.result["tbar_gram"] = to_json(run.lattices.tbar.induced().gram());
  Json orders = Json::array();
  for (auto k : r.extension_orders) orders.push_back(std::to_string(k));
  out.result["extension_orders"] = orders;
  out.result["group_rank"] = r.group_rank ? Json(std::to_string(*r.group_rank)) : Json(nullptr);
  out.result["period"] = run.period ? to_json(*run.period) : Json(nullptr);
  for (const auto& c : r.checks) out.checks.push_back(to_json(c));
  return out;
}

Payload rank(const CommandPlan& plan) {
  const auto vectors = vectors_from_json(read_json(*plan.input("vectors")));
  Payload out;
  out.result["count"] = vectors.size();
  out.result["length"] = vectors.empty() ? 0 : vectors.front().size();
  out.result["rank"] = abelian_rank_of_image(vectors);
  return out;
}

}  // namespace

const std::string* CommandPlan::input(const std::string& name) const {
  for (const auto& [k, v] : inputs) {
    if (k == name) return &v;
  }
  return nullptr;
}

CommandPlan parse_command(const std::vector<std::string>& args) {
  CLI::App app("Exact Salem-number and lattice-isometry certificates", "salemlat");
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "write the certificate to FILE instead of standard output");

  const auto& subs = subcommands();
  std::vector<std::vector<std::string>> values(subs.size());
  std::vector<std::vector<bool>> switched(subs.size());
  std::vector<CLI::App*> apps;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    CLI::App* sub = app.add_subcommand(subs[s].name, subs[s].help);
    apps.push_back(sub);
    values[s].resize(subs[s].flags.size());
    switched[s].assign(subs[s].switches.size(), false);
    for (std::size_t f = 0; f < subs[s].flags.size(); ++f) {
      const Flag& flag = subs[s].flags[f];
      if (flag.fallback) values[s][f] = flag.fallback;
      CLI::Option* opt = sub->add_option(std::string("--") + flag.name, values[s][f], flag.help);
      if (flag.required) opt->required();
      if (flag.fallback) opt->capture_default_str();
    }
    for (std::size_t f = 0; f < subs[s].switches.size(); ++f) {
      sub->add_flag_callback(std::string("--") + subs[s].switches[f].name,
                             [&switched, s, f] { switched[s][f] = true; }, subs[s].switches[f].help);
    }
  }

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-o" || a == "--output") {
      ++i;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const Subcommand& s) { return a == s.name; });
    if (!known) throw UsageError("unknown subcommand '" + a + "'");
    break;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CommandPlan plan;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (!apps[s]->parsed()) continue;
    plan.subcommand = subs[s].name;
    for (std::size_t f = 0; f < subs[s].flags.size(); ++f) plan.inputs.emplace_back(subs[s].flags[f].name, values[s][f]);
    for (std::size_t f = 0; f < subs[s].switches.size(); ++f) {
      if (switched[s][f]) plan.inputs.emplace_back(subs[s].switches[f].name, "true");
    }
  }
  if (!output.empty()) plan.output_path = output;
  return plan;
}

CommandResult execute(const CommandPlan& plan) {
  Payload payload;
  if (plan.subcommand == "salem-test") {
    payload = salem_test(plan);
  } else if (plan.subcommand == "salem-enum") {
    payload = salem_enum(plan);
  } else if (plan.subcommand == "lattice-info") {
    payload = lattice_info(plan);
  } else if (plan.subcommand == "lattice-vectors") {
    payload = lattice_vectors(plan);
  } else if (plan.subcommand == "isom-classify") {
    payload = isom_classify(plan);
  } else if (plan.subcommand == "k3-run") {
    payload = k3_run(plan);
  } else if (plan.subcommand == "rank") {
    payload = rank(plan);
  } else {
    throw UsageError("unknown subcommand " + plan.subcommand);
  }

  Json inputs = Json::object();
  for (const auto& [k, v] : plan.inputs) inputs[k] = v;
  Json cert;
  cert["schema"] = kSchema;
  cert["tool_version"] = kToolVersion;
  cert["command"] = Json{{"subcommand", plan.subcommand}, {"inputs", inputs}};
  cert["result"] = payload.result;
  cert["checks"] = payload.checks;

  bool pass = true;
  for (const auto& c : payload.checks) pass = pass && c.at("pass").get<bool>();
  return {std::move(cert), pass ? kPass : kCheckFailed};
}

std::string render(const Json& certificate) { return certificate.dump(2) + "\n"; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const CommandPlan plan = parse_command(args);
    const CommandResult result = execute(plan);
    const std::string text = render(result.certificate);
    if (plan.output_path) {
      std::ofstream file(*plan.output_path, std::ios::binary);
      if (!file) throw InputOutputError("cannot write " + *plan.output_path);
      file << text;
      file.close();
      if (!file) throw InputOutputError("write to " + *plan.output_path + " failed");
    } else {
      out << text;
    }
    return result.exit_code;
  } catch (const HelpRequested& e) {
    out << e.what();
    return kPass;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputOutputError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kInputOutput;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace salemlat::cli
