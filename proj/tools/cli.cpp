#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "rouquier/blocks.hpp"
#include "rouquier/combinatorics.hpp"
#include "rouquier/grid.hpp"
#include "rouquier/hyperplanes.hpp"
#include "rouquier/json_io.hpp"
#include "rouquier/schur.hpp"

namespace rouquier::cli {

namespace {

std::vector<int> parse_weight_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw ValidationError{"--weights", "expected comma-separated integers, got '" + text + "'"};
    out.push_back(value);
  }
  if (out.empty()) throw ValidationError{"--weights", "empty weight list"};
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

void require_dr(const CommandRequest& req) {
  if (!req.d) throw ValidationError{"--d", "missing required option"};
  if (*req.d < 1) throw ValidationError{"--d", "must be at least 1"};
  if (!req.r) throw ValidationError{"--r", "missing required option"};
  if (*req.r < 1) throw ValidationError{"--r", "must be at least 1"};
}

/// The specialization named by --spetsial or --weights/--n, if any.
std::optional<Specialization> specialization_of(const CommandRequest& req, bool required) {
  if (req.spetsial && req.weights) throw ValidationError{"--spetsial", "conflicts with --weights"};
  if (req.spetsial && req.n) throw ValidationError{"--spetsial", "conflicts with --n"};
  if (!req.spetsial && !req.weights && !req.n) {
    if (required) throw ValidationError{"--weights", "give --weights and --n, or --spetsial"};
    return std::nullopt;
  }
  require_dr(req);
  if (req.spetsial) return Specialization::spetsial(*req.d, *req.r);
  if (!req.weights) throw ValidationError{"--weights", "--n given without --weights"};
  if (!req.n) throw ValidationError{"--n", "--weights given without --n"};
  if (static_cast<int>(req.weights->size()) != *req.d)
    throw ValidationError{"--weights", "expected " + std::to_string(*req.d) + " weights, got " +
                                           std::to_string(req.weights->size())};
  return Specialization(*req.d, *req.r, *req.weights, *req.n);
}

MultiPartition lambda_of(const CommandRequest& req) {
  if (!req.lambda) throw ValidationError{"--lambda", "missing required option"};
  MultiPartition lambda;
  try {
    lambda = parse_multipartition(*req.lambda);
  } catch (const std::exception& e) {
    throw ValidationError{"--lambda", e.what()};
  }
  if (req.d && *req.d != lambda.d())
    throw ValidationError{"--d", "does not match the number of components of --lambda"};
  if (req.r && *req.r != lambda.size())
    throw ValidationError{"--r", "does not match the size of --lambda"};
  return lambda;
}

std::string render(const Json& j) { return j.dump() + "\n"; }

std::string blocks_text(const SetPartition& sp, const std::vector<MultiPartition>& chars) {
  std::ostringstream os;
  for (const auto& block : sp.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) os << (i ? " " : "") << chars[block[i]].to_string();
    os << '\n';
  }
  return os.str();
}

std::string factored_text(const FactoredSchurElement& f) {
  std::ostringstream os;
  os << (f.sign < 0 ? "-" : "+");
  if (f.x_exponent != 0) os << " x^" << f.x_exponent;
  for (int j = 0; j < f.d; ++j)
    if (f.u_exponents[j] != 0) os << " u" << j << "^" << f.u_exponents[j];
  for (const auto& [c, e] : f.xminus1) os << " (x^" << c << "-1)^" << e;
  for (const auto& [key, e] : f.binomials)
    os << " (x^" << key.k << "*u" << key.s << "-u" << key.t << ")^" << e;
  return os.str();
}

CommandResult run_hyperplanes(const CommandRequest& req) {
  require_dr(req);
  const auto phi = specialization_of(req, false);
  const auto all = essential_hyperplanes(*req.d, *req.r);
  std::vector<EssentialHyperplane> containing;
  if (phi) containing = hyperplanes_containing(*phi);

  if (req.format == "json") {
    Json j{{"d", *req.d}, {"r", *req.r}, {"count", all.size()}};
    Json hs = Json::array();
    for (const auto& h : all) hs.push_back(to_json(h));
    j["hyperplanes"] = hs;
    if (phi) {
      Json cs = Json::array();
      for (const auto& h : containing) cs.push_back(to_json(h));
      j["specialization"] = to_json(*phi);
      j["containing"] = cs;
    }
    return {0, render(j)};
  }
  std::ostringstream os;
  os << "essential hyperplanes for d=" << *req.d << " r=" << *req.r << ": " << all.size() << '\n';
  for (const auto& h : all) {
    os << to_string(h);
    if (phi && std::find(containing.begin(), containing.end(), h) != containing.end())
      os << "  [contains " << phi->to_string() << "]";
    os << '\n';
  }
  return {0, os.str()};
}

CommandResult run_symbols(const CommandRequest& req) {
  const auto lambda = lambda_of(req);
  if (req.spetsial || req.n) throw ValidationError{req.spetsial ? "--spetsial" : "--n", "not used by symbols"};
  WeightSystem m(lambda.d(), 0);
  if (req.weights) {
    if (static_cast<int>(req.weights->size()) != lambda.d())
      throw ValidationError{"--weights", "expected one weight per component of --lambda"};
    m = *req.weights;
  }
  const auto symbol = charged_symbol(lambda, m);
  const auto content = content_multiset(symbol);

  if (req.format == "json") {
    Json j{{"lambda", to_json(lambda)}, {"weights", m}, {"charged_height", symbol.charged_height},
           {"rows", to_json(symbol)}, {"content", to_json(content)}};
    return {0, render(j)};
  }
  std::ostringstream os;
  os << "lambda: " << lambda.to_string() << '\n';
  os << "weights: " << join(m, ",") << '\n';
  os << "charged height: " << symbol.charged_height << '\n';
  for (std::size_t a = 0; a < symbol.rows.size(); ++a)
    os << "row " << a << ": " << join(symbol.rows[a].entries) << '\n';
  os << "content: {" << join(content.sorted_values(), ",") << "}\n";
  return {0, os.str()};
}

CommandResult run_schur(const CommandRequest& req) {
  const auto lambda = lambda_of(req);
  CommandRequest with_dr = req;
  with_dr.d = lambda.d();
  with_dr.r = lambda.size();
  const auto phi = specialization_of(with_dr, false);
  const auto f = schur_factored(lambda);
  std::optional<SpecializedSchurData> specialized;
  if (phi) specialized = specialize_schur(f, *phi);

  if (req.format == "json") {
    Json j{{"lambda", to_json(lambda)}, {"factored", to_json(f)}};
    if (specialized) {
      j["specialization"] = to_json(*phi);
      j["specialized"] = to_json(*specialized);
    }
    return {0, render(j)};
  }
  std::ostringstream os;
  os << "lambda: " << lambda.to_string() << '\n';
  os << "schur element: " << factored_text(f) << '\n';
  if (specialized) {
    os << "specialization: " << phi->to_string() << '\n';
    os << "a: " << specialized->q_valuation << '\n';
    os << "A: " << specialized->q_degree << '\n';
    const auto primes = specialized->supporting_primes();
    os << "bad primes: {" << join(std::vector<int>(primes.begin(), primes.end()), ",") << "}\n";
  }
  return {0, os.str()};
}

CommandResult run_blocks(const CommandRequest& req) {
  const auto phi = *specialization_of(req, true);
  const auto chars = enumerate_multipartitions(phi.d, phi.r);
  const auto blocks = rouquier_blocks(phi);
  if (req.format == "json") {
    Json j = to_json(blocks, chars);
    return {0, render(Json{{"specialization", to_json(phi)}, {"blocks", j["blocks"]}})};
  }
  std::ostringstream os;
  os << "Rouquier blocks for " << phi.to_string() << ": " << blocks.block_count() << '\n';
  os << blocks_text(blocks, chars);
  return {0, os.str()};
}

CommandResult run_verify(const CommandRequest& req) {
  std::vector<Specialization> phis;
  if (req.grid) {
    if (req.d || req.r || req.weights || req.n || req.spetsial)
      throw ValidationError{"--grid", "conflicts with --d/--r/--weights/--n/--spetsial"};
    phis = standard_grid();
  } else {
    phis.push_back(*specialization_of(req, true));
  }
  std::size_t failed = 0;
  Json failures = Json::array();
  for (const auto& phi : phis) {
    const auto report = verify_specialization(phi);
    if (!report.passed()) {
      ++failed;
      failures.push_back(to_json(report));
    }
  }
  const int status = failed == 0 ? 0 : 1;
  // Failures are always reported as JSON.
  if (req.format == "json" || failed != 0) {
    Json j{{"specializations", phis.size()}, {"failed", failed}, {"passed", failed == 0},
           {"failures", failures}};
    return {status, render(j)};
  }
  std::ostringstream os;
  os << "verified " << phis.size() << " specialization" << (phis.size() == 1 ? "" : "s")
     << ": all checks passed\n";
  return {status, os.str()};
}

CommandResult run_atlas(const CommandRequest& req) {
  require_dr(req);
  if (req.spetsial || req.weights || req.n)
    throw ValidationError{req.spetsial ? "--spetsial" : (req.weights ? "--weights" : "--n"),
                          "atlas does not take a specialization"};
  const auto chars = enumerate_multipartitions(*req.d, *req.r);
  if (req.format == "json") {
    Json rows = Json::array();
    for (const auto& h : essential_hyperplanes(*req.d, *req.r)) {
      Json j = to_json(blocks_for_hyperplane(h, *req.d, *req.r), chars);
      rows.push_back(Json{{"hyperplane", to_json(h)}, {"blocks", j["blocks"]}});
    }
    return {0, render(Json{{"d", *req.d}, {"r", *req.r}, {"atlas", rows}})};
  }
  std::ostringstream os;
  for (const auto& h : essential_hyperplanes(*req.d, *req.r)) {
    const auto sp = blocks_for_hyperplane(h, *req.d, *req.r);
    os << to_string(h) << ": " << sp.block_count() << " blocks\n" << blocks_text(sp, chars);
  }
  return {0, os.str()};
}

/// "--weights -1,2" would otherwise be read as a short flag.
std::vector<std::string> glue_weight_values(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--weights" && i + 1 < argc) {
      args.push_back(a + "=" + argv[++i]);
    } else {
      args.push_back(std::move(a));
    }
  }
  return args;
}

}  // namespace

CommandResult run(const CommandRequest& req) {
  if (req.format != "text" && req.format != "json")
    throw ValidationError{"--format", "expected text or json"};
  if (req.grid && req.subcommand != "verify") throw ValidationError{"--grid", "only valid for verify"};
  if (req.subcommand == "hyperplanes") return run_hyperplanes(req);
  if (req.subcommand == "symbols") return run_symbols(req);
  if (req.subcommand == "schur") return run_schur(req);
  if (req.subcommand == "blocks") return run_blocks(req);
  if (req.subcommand == "verify") return run_verify(req);
  if (req.subcommand == "atlas") return run_atlas(req);
  throw ValidationError{"subcommand", "unknown subcommand '" + req.subcommand + "'"};
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blocks, symbols and Schur elements for Hecke algebras of G(d,1,r)"};
  app.require_subcommand(1);

  CommandRequest req;
  int d = 0, r = 0, n = 0;
  std::string weights, lambda, output;

  const std::vector<std::pair<const char*, const char*>> subcommands{
      {"hyperplanes", "essential hyperplanes, and those containing a specialization"},
      {"symbols", "charged symbol and content of a multipartition"},
      {"schur", "factored and specialized Schur element of a character"},
      {"blocks", "Rouquier blocks of a cyclotomic specialization"},
      {"verify", "check block invariants and the residue oracle"},
      {"atlas", "blocks attached to every essential hyperplane"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : subcommands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--d", d, "number of components (G(d,1,r))");
    sub->add_option("--r", r, "rank");
    sub->add_option("--weights", weights, "comma-separated weights m_0,...,m_{d-1}");
    sub->add_option("--n", n, "exponent of x -> q^n");
    sub->add_flag("--spetsial", req.spetsial, "use m = (1,0,...,0), n = 1");
    sub->add_option("--lambda", lambda, "multipartition literal, e.g. [[2,1],[3]]");
    sub->add_option("--format", req.format, "text or json");
    sub->add_option("--output", output, "write to this file instead of stdout");
    if (std::string(name) == "verify") sub->add_flag("--grid", req.grid, "run over the standard grid");
    subs.push_back(sub);
  }

  const auto args = glue_weight_values(argc, argv);
  std::vector<const char*> raw{argv[0]};
  for (const auto& a : args) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CommandResult result;
  try {
    for (auto* sub : subs) {
      if (!sub->parsed()) continue;
      req.subcommand = sub->get_name();
      if (sub->count("--d")) req.d = d;
      if (sub->count("--r")) req.r = r;
      if (sub->count("--n")) req.n = n;
      if (sub->count("--weights")) req.weights = parse_weight_list(weights);
      if (sub->count("--lambda")) req.lambda = lambda;
      if (sub->count("--output")) req.output = output;
    }
    result = run(req);
  } catch (const ValidationError& e) {
    err << "error: " << e.flag << ": " << e.message << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (req.output) {
    std::ofstream file(*req.output, std::ios::binary);
    if (!file) {
      err << "error: --output: cannot open '" << *req.output << "'\n";
      return 2;
    }
    file << result.output;
  } else {
    out << result.output;
  }
  return result.status;
}

}  // namespace rouquier::cli
