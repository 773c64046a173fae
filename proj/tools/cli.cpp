#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "howe/compact_characters.hpp"
#include "howe/errors.hpp"
#include "howe/parallel.hpp"
#include "howe/transfer.hpp"
#include "howe/verify.hpp"
#include "howe/weights.hpp"

namespace howe::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

struct Common {
  std::string format = "json";
  std::string out_file;
  int threads = 0;
};

struct WeightsArgs {
  int n = 0, p = 0, q = 0, bound = 3;
};

struct TransferArgs {
  int n = 1, p = 0, q = 0;
  std::optional<int> k;
  std::vector<int> lambda;
  std::vector<double> angles;
  std::string method;
  std::string r_seq = "auto";
};

struct VerifyArgs {
  std::string suite = "all";
  int cases = 0;
  std::uint64_t seed = 1;
  std::optional<int> k;
};

// ------------------------------------------------------------------ weights

int cmd_weights(const WeightsArgs& a, const Common& c, std::ostream& out) {
  const auto ws = enumerate_weights(a.n, a.p, a.q, a.bound);
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& w : ws) {
      json weight = json::array();
      for (int i = 0; i < w.n; ++i) weight.push_back(w.stored(i).value());
      arr.push_back({{"lambda", w.lambda}, {"shift", w.shift().value()}, {"weight", weight},
                     {"dimension", dimension(w)}});
    }
    out << arr.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "lambda,shift,weight,dimension\n";
    for (const auto& w : ws) {
      std::string l, wt;
      for (int i = 0; i < w.n; ++i) {
        l += (i ? " " : "") + std::to_string(w.lambda[i]);
        wt += (i ? " " : "") + w.stored(i).str();
      }
      out << l << "," << w.shift().str() << "," << wt << "," << num(dimension(w)) << "\n";
    }
  } else {
    out << std::left << std::setw(24) << "lambda" << std::setw(8) << "shift" << "dimension\n";
    for (const auto& w : ws) {
      std::string l = "(";
      for (int i = 0; i < w.n; ++i) l += (i ? ", " : "") + std::to_string(w.lambda[i]);
      l += ")";
      out << std::left << std::setw(24) << l << std::setw(8) << w.shift().str() << num(dimension(w)) << "\n";
    }
    out << ws.size() << " weights\n";
  }
  return 0;
}

// ------------------------------------------------------------------ transfer

struct Evaluation {
  std::string convention;
  cplx value;
  Method method = Method::ResidueExact;
  std::vector<std::pair<double, cplx>> rSequence;
  double errorEstimate = 0.0;
};

std::vector<double> parse_r_sequence(const std::string& spec, std::span<const double> angles) {
  if (spec == "auto") return auto_r_sequence(angles);
  if (spec == "default") return default_r_sequence();
  std::vector<double> rs;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      rs.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw PreconditionError("bad --r-seq entry: " + tok);
    }
  }
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (!(rs[i] > 0 && rs[i] < 1) || (i > 0 && !(rs[i] > rs[i - 1])))
      throw PreconditionError("--r-seq must be strictly increasing in (0, 1)");
  if (rs.empty()) throw PreconditionError("--r-seq is empty");
  return rs;
}

Evaluation evaluate(const TransferArgs& a, const HighestWeight& w, std::vector<double> angles, std::string label) {
  Evaluation e;
  e.convention = std::move(label);
  if (a.method == "closed") {
    e.value = char_closed_form_n1(w.lambda[0], angles, a.p, a.q).value;
    e.method = Method::ResidueExact;
    return e;
  }
  const auto rs = parse_r_sequence(a.r_seq, angles);
  TransferDiagnostics d;
  if (w.n == 1) {
    d = transfer_limit_n1(w.lambda[0], angles, a.p, a.q, rs);
    const double c = limit_convention_constant(a.p, a.q);
    d.extrapolated *= c;
    for (auto& rv : d.rSequence) rv.second *= c;
  } else {
    d = transfer_limit_general(w, angles, rs);
  }
  e.value = d.extrapolated;
  e.method = d.method;
  e.rSequence = d.rSequence;
  e.errorEstimate = d.errorEstimate;
  return e;
}

json evaluation_json(const Evaluation& e) {
  json seq = json::array();
  for (const auto& [r, v] : e.rSequence) seq.push_back({{"r", r}, {"value", to_json(v)}});
  return json{{"value_re", e.value.real()},   {"value_im", e.value.imag()},
              {"method", to_string(e.method)}, {"r_sequence", seq},
              {"error_estimate", e.errorEstimate}, {"convention", e.convention}};
}

int cmd_transfer(TransferArgs a, const Common& c, std::ostream& out) {
  if (a.n < 1 || a.p < 0 || a.q < 0 || a.p + a.q < 1) throw PreconditionError("need n >= 1, p, q >= 0, p + q >= 1");
  std::vector<int> lambda = a.lambda;
  if (a.k) {
    if (a.n != 1) throw PreconditionError("--k is the n = 1 weight; use --lambda for n > 1");
    if (!lambda.empty()) throw PreconditionError("give --k or --lambda, not both");
    lambda = {*a.k};
  }
  if (lambda.empty()) throw PreconditionError("missing --k or --lambda");
  const HighestWeight w = make_weight(a.n, a.p, a.q, lambda);
  if (static_cast<int>(a.angles.size()) != a.p + a.q) throw PreconditionError("--angles needs p + q entries");
  if (min_angle_gap(a.angles) < kSingularGap) throw NumericalDomainError("t' angles are not regular");
  if (a.method.empty()) a.method = a.n == 1 ? "closed" : "limit";
  if (a.method != "closed" && a.method != "limit") throw PreconditionError("--method must be closed or limit");
  if (a.method == "closed" && a.n != 1) throw PreconditionError("closed form is only available for n = 1");

  std::vector<double> inv = a.angles;
  for (auto& x : inv) x = -x;
  const Evaluation fwd = evaluate(a, w, a.angles, "g'");
  const Evaluation bwd = evaluate(a, w, inv, "g'^-1");
  const int constant = a.method == "limit" && a.n == 1 ? limit_convention_constant(a.p, a.q) : 1;

  if (c.format == "json") {
    json j = {{"n", a.n}, {"p", a.p}, {"q", a.q}, {"lambda", lambda}, {"angles", a.angles}};
    const json f = evaluation_json(fwd);
    for (auto it = f.begin(); it != f.end(); ++it) j[it.key()] = it.value();
    j["convention_constant"] = constant;
    j["inverse"] = evaluation_json(bwd);
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "convention,value_re,value_im,method,error_estimate\n";
    for (const auto* e : {&fwd, &bwd})
      out << e->convention << "," << num(e->value.real()) << "," << num(e->value.imag()) << ","
          << to_string(e->method) << "," << num(e->errorEstimate) << "\n";
  } else {
    for (const auto* e : {&fwd, &bwd}) {
      out << std::left << std::setw(6) << e->convention << " " << num(e->value.real()) << (e->value.imag() < 0 ? " - " : " + ")
          << num(std::abs(e->value.imag())) << "i  [" << to_string(e->method) << "]";
      if (e->method == Method::Extrapolated) out << "  error estimate " << num(e->errorEstimate);
      out << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  VerifyOptions o;
  o.suite = a.suite;
  o.cases = a.cases;
  o.seed = a.seed;
  o.k = a.k;
  if (o.cases < 0) throw PreconditionError("--cases must be non-negative");
  const auto results = run_verify(o);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;

  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      json j = {{"suite", r.suite}, {"cases", r.cases}, {"max_error", r.maxError}, {"pass", r.pass}};
      if (r.constant) j["constant"] = to_json(*r.constant);
      json notes = json::object();
      for (const auto& [k, v] : r.notes) notes[k] = v;
      j["notes"] = notes;
      arr.push_back(j);
    }
    out << arr.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "suite,cases,max_error,pass\n";
    for (const auto& r : results)
      out << r.suite << "," << r.cases << "," << num(r.maxError) << "," << (r.pass ? "true" : "false") << "\n";
  } else {
    for (const auto& r : results) {
      out << std::left << std::setw(18) << r.suite << std::setw(6) << (r.pass ? "PASS" : "FAIL") << std::setw(8)
          << r.cases << num(r.maxError) << "\n";
      for (const auto& [k, v] : r.notes) out << "    " << k << ": " << v << "\n";
    }
  }
  return all ? 0 : 1;
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("HOWE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("HOWE_THREADS must be a positive integer, got ") + env);
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characters for the dual pair (U(n), U(p,q))", "howe"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", common.out_file, "Write output to FILE instead of stdout");
  app.add_option("--threads", common.threads, "Worker threads (falls back to HOWE_THREADS)")
      ->check(CLI::PositiveNumber);

  WeightsArgs wa;
  auto* weights = app.add_subcommand("weights", "List the highest weights in the correspondence");
  weights->add_option("--n", wa.n, "Rank of U(n)")->required();
  weights->add_option("--p", wa.p, "p of U(p,q)")->required();
  weights->add_option("--q", wa.q, "q of U(p,q)")->required();
  weights->add_option("--bound", wa.bound, "Bound on |lambda_a|")->capture_default_str();

  TransferArgs ta;
  auto* transfer = app.add_subcommand("transfer", "Evaluate the transferred character at t' and t'^-1");
  transfer->add_option("--n", ta.n, "Rank of U(n)")->capture_default_str();
  transfer->add_option("--p", ta.p, "p of U(p,q)")->required();
  transfer->add_option("--q", ta.q, "q of U(p,q)")->required();
  transfer->add_option("--k", ta.k, "U(1) weight (n = 1)");
  transfer->add_option("--lambda", ta.lambda, "Highest weight lambda, comma separated")->delimiter(',');
  transfer->add_option("--angles", ta.angles, "Angles of t' in radians, comma separated")
      ->delimiter(',')
      ->required();
  transfer->add_option("--method", ta.method, "closed (n = 1) or limit")
      ->check(CLI::IsMember({"closed", "limit"}));
  transfer->add_option("--r-seq", ta.r_seq, "auto, default, or comma-separated r values")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", va.suite, "Suite name or all")->capture_default_str();
  verify->add_option("--cases", va.cases, "Cases per suite (0: suite default)")->capture_default_str();
  verify->add_option("--seed", va.seed, "Random seed")->capture_default_str();
  verify->add_option("--k", va.k, "Restrict hecht and orbit suites to one weight");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    return 2;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    set_thread_count(resolve_threads(common.threads));
    if (weights->parsed())
      code = cmd_weights(wa, common, buffer);
    else if (transfer->parsed())
      code = cmd_transfer(ta, common, buffer);
    else
      code = cmd_verify(va, common, buffer);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalDomainError& e) {
    err << "numerical domain error: " << e.what() << "\n";
    return 3;
  }

  if (common.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(common.out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << common.out_file << "\n";
      return 2;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace howe::cli
