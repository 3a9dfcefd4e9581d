#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sfill/chain_io.hpp"
#include "sfill/combinatorics.hpp"
#include "sfill/fill.hpp"
#include "sfill/hamiltonian.hpp"
#include "sfill/linalg.hpp"
#include "sfill/oracle.hpp"
#include "sfill/random.hpp"
#include "sfill/serialize.hpp"

using namespace sfill;

namespace {

// Exit codes.
enum : int {
  kOk = 0,
  kRuntime = 1,
  kUsage = 2,
  kInput = 3,
  kPrecondition = 4,
  kBudget = 5,
  kVerification = 6,
  kDiscrepancy = 7,
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field;
  int n = 0;
  int d = 0;
  std::string in;
  std::string out;
  int distinct = 1;
  double budget = -1;
  std::uint64_t seed = 0;
  int jobs = 1;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// out.json -> out.2.json
std::string numbered(const std::string& path, int i) {
  auto dot = path.rfind('.');
  auto slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "." + std::to_string(i);
  return path.substr(0, dot) + "." + std::to_string(i) + path.substr(dot);
}

Budget budget_of(const Options& o) {
  Budget b = Budget::from_env();
  if (o.budget >= 0) b.max_seconds = o.budget;
  return b;
}

Field field_of(const Options& o, Field fallback = Field::F2) {
  return o.field.empty() ? fallback : parse_field(o.field);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

// Serializes, parses back and re-checks a certificate.
Json verified(const FillCertificate& c) {
  Json j = certificate_to_json(c);
  try {
    certificate_from_json(Json::parse(j.dump()));
  } catch (const std::exception& e) {
    throw VerificationFailure(std::string("certificate failed re-verification: ") + e.what());
  }
  return j;
}

void check_hamiltonian(const HamiltonianResult& h) {
  verified(h.certificate);
  if (!is_simple_cycle(h.cycle)) throw VerificationFailure("constructed cycle is not simple");
  const auto expect = static_cast<std::size_t>(hypertree_size(h.n, h.d)) + 1 - h.deficit;
  if (h.cycle.size() != expect) throw VerificationFailure("cycle size does not match the filling deficit");
}

Chain input_cycle(const Options& o) {
  if (!o.in.empty()) {
    Chain z = parse_chain(read_file(o.in));
    if (!o.field.empty() && parse_field(o.field) != z.field())
      throw UsageError("--field does not match the chain header");
    if (o.d && z.dim() + 1 != o.d) throw UsageError("--d must be the chain dimension plus one");
    if (o.n && o.n != z.n()) throw UsageError("--n does not match the chain header");
    return z;
  }
  require(o.n > 0 && o.d > 0, "fill needs --in, or --n and --d for a random cycle");
  Rng rng(o.seed);
  return random_cycle(field_of(o), o.n, o.d, rng);
}

int cmd_fill(const Options& o) {
  require(o.distinct >= 1, "--distinct must be positive");
  FillRequest req;
  req.target = input_cycle(o);
  req.want_distinct = o.distinct;
  auto certs = fill(req);
  if (o.out.empty()) {
    Json arr = Json::array();
    for (const auto& c : certs) arr.push_back(verified(c));
    write_output("", dump(arr));
  } else {
    for (std::size_t i = 0; i < certs.size(); ++i) {
      const std::string path = o.distinct == 1 ? o.out : numbered(o.out, static_cast<int>(i + 1));
      write_output(path, dump(verified(certs[i])));
      std::cout << "wrote " << path << " deficit=" << certs[i].deficit << "\n";
    }
  }
  if (static_cast<int>(certs.size()) < o.distinct)
    std::cerr << "note: found " << certs.size() << " of " << o.distinct << " requested fillings\n";
  return kOk;
}

int emit_hamiltonian(const Options& o, const HamiltonianResult& h) {
  check_hamiltonian(h);
  write_output(o.out, dump(hamiltonian_to_json(h)));
  if (!o.out.empty())
    std::cout << "wrote " << o.out << " outcome=" << outcome_name(h.outcome) << " size=" << h.cycle.size() << "\n";
  return kOk;
}

int cmd_ham2(const Options& o) {
  require(o.n > 0, "ham2 needs --n");
  return emit_hamiltonian(o, hamiltonian_2cycle(o.n, field_of(o)));
}

int cmd_ham3(const Options& o) {
  require(o.n > 0, "ham3 needs --n");
  require(field_of(o) == Field::F2, "ham3 is defined over F2 only");
  return emit_hamiltonian(o, hamiltonian_3cycle(o.n));
}

int cmd_simple_cycle(const Options& o) {
  FillCertificate cert;
  if (!o.in.empty()) {
    try {
      cert = certificate_from_json(Json::parse(read_file(o.in)));
    } catch (const Json::exception& e) {
      throw ParseError(0, e.what());
    }
  } else {
    require(o.n > 0 && o.d > 0, "simple-cycle needs --in, or --n and --d");
    VertexSet s = 0;
    for (int v = 1; v <= o.d + 1; ++v) s |= vertex_bit(v);
    cert = fill(boundary(Chain::single(field_of(o), o.n, Simplex(s))), 1).front();
  }
  const Chain& z = cert.target;
  const Simplex sigma(z.vertex_set());
  if (z.is_zero() || sigma.dim() != z.dim() + 1) throw std::invalid_argument("target is not the boundary of a simplex");
  const Chain unit = boundary(Chain::single(z.field(), z.n(), sigma));
  const Rational c = z.terms().front().coef / unit.terms().front().coef;
  if (!(scale(unit, c) == z)) throw std::invalid_argument("target is not the boundary of a simplex");
  const Chain f = scale(cert.filling, 1 / c);
  if (f.contains(sigma)) throw std::invalid_argument("the filling contains sigma");
  const Chain cycle = simple_cycle_from_filling(f, sigma);
  const bool simple = is_simple_cycle(cycle);
  if (!simple) throw VerificationFailure("F - sigma is not a simple cycle");
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["kind"] = "simple_cycle";
  j["sigma"] = sigma.vertices();
  j["size"] = cycle.size();
  j["hamiltonian"] = cert.deficit == 0 && vertex_count(cert.universe) == cycle.n();
  j["filling_deficit"] = cert.deficit;
  j["cycle"] = chain_to_json(cycle);
  write_output(o.out, dump(j));
  return kOk;
}

int cmd_census(const Options& o) {
  require(o.n > 0 && o.d > 0, "census needs --n and --d");
  require(o.jobs >= 1, "--jobs must be positive");
  const auto start = std::chrono::steady_clock::now();
  CensusReport r = filling_census(o.n, o.d, o.jobs, budget_of(o));
  std::cerr << "census: "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s\n";
  if (!o.out.empty()) {
    write_census(r, o.out + ".bin", o.out + ".json");
    if (!(read_census(o.out + ".bin").count0 == r.count0)) throw VerificationFailure("census file did not read back");
  }
  write_output("", dump(census_summary_to_json(r)));
  if (!r.complete) {
    std::cerr << R"({"error":"budget","message":"census incomplete; counts are partial"})" << "\n";
    return kBudget;
  }
  return kOk;
}

int cmd_max_cycle(const Options& o) {
  require(o.n > 0 && o.d > 0, "max-cycle needs --n and --d");
  MaxCycleResult r = max_simple_cycle(o.n, o.d, field_of(o), budget_of(o));
  if (r.max_size > 0 && (!is_simple_cycle(r.witness) || static_cast<int>(r.witness.size()) != r.max_size))
    throw VerificationFailure("witness is not a simple cycle of the reported size");
  write_output(o.out, dump(max_cycle_to_json(r)));
  return kOk;
}

int cmd_verify(const Options& o) {
  if (!o.in.empty()) {
    FillCertificate c;
    try {
      c = certificate_from_json(Json::parse(read_file(o.in)));
    } catch (const Json::exception& e) {
      throw ParseError(0, e.what());
    } catch (const ParseError&) {
      throw;
    } catch (const std::runtime_error& e) {
      throw VerificationFailure(e.what());
    }
    Json j;
    j["ok"] = true;
    j["deficit"] = c.deficit;
    j["digest"] = certificate_digest(c);
    write_output(o.out, dump(j));
    return kOk;
  }
  require(o.n > 0 && o.d > 0, "verify needs --in, or --n and --d");
  require(o.jobs >= 1, "--jobs must be positive");
  VerifyReport r = verify_engine_against_oracle(o.n, o.d, o.jobs, budget_of(o));
  write_output(o.out, dump(verify_report_to_json(r)));
  if (!r.census.complete) return kBudget;
  return r.ok() ? kOk : kDiscrepancy;
}

int cmd_collapse(const Options& o) {
  if (!o.in.empty()) {
    Chain c = parse_chain(read_file(o.in));
    write_output(o.out, dump(collapse_report_to_json(collapse_check(c.support()))));
    return kOk;
  }
  require(o.n > 0 && o.d > 0, "collapse needs --in, or --n and --d");
  NonCollapsibleTree t = non_collapsible_tree(o.n, o.d);
  const auto facets = t.tree.support();
  if (static_cast<std::int64_t>(facets.size()) != hypertree_size(o.n, o.d) || !is_acyclic(Field::F2, o.n, facets))
    throw VerificationFailure("result is not a hypertree");
  CollapseReport rep = collapse_check(facets);
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["kind"] = "non_collapsible_tree";
  j["n"] = o.n;
  j["d"] = o.d;
  j["removed"] = t.removed.vertices();
  j["size"] = facets.size();
  j["cycle"] = chain_to_json(t.cycle);
  j["tree"] = chain_to_json(t.tree);
  j["collapse"] = collapse_report_to_json(rep);
  write_output(o.out, dump(j));
  return kOk;
}

int error_line(const char* kind, const std::string& msg, int code) {
  Json j;
  j["error"] = kind;
  j["message"] = msg;
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acyclic fillings of simplicial cycles"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--field", o.field, "F2 or Q")->check(CLI::IsMember({"F2", "Q"}));
    c->add_option("--n", o.n, "number of vertices")->check(CLI::Range(1, 63));
    c->add_option("--d", o.d, "dimension")->check(CLI::Range(0, 62));
    c->add_option("--in", o.in, "input file ('-' for stdin)");
    c->add_option("--out", o.out, "output file (default stdout)");
  };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "time limit in seconds (default $SFILL_BUDGET_SECONDS, 0 = none)");
    c->add_option("--jobs", o.jobs, "worker threads");
  };

  auto* fill_cmd = app.add_subcommand("fill", "fill a cycle by acyclic chains");
  add_common(fill_cmd);
  fill_cmd->add_option("--distinct", o.distinct, "number of distinct fillings");
  fill_cmd->add_option("--seed", o.seed, "seed for a random input cycle when --in is absent");
  auto* ham2 = app.add_subcommand("ham2", "Hamiltonian 2-cycle");
  add_common(ham2);
  auto* ham3 = app.add_subcommand("ham3", "Hamiltonian 3-cycle over F2");
  add_common(ham3);
  auto* simple = app.add_subcommand("simple-cycle", "F - sigma from a filling of the boundary of sigma");
  add_common(simple);
  auto* census = app.add_subcommand("census", "exhaustive filling census over F2 (--out is a file prefix)");
  add_common(census);
  add_budget(census);
  auto* maxc = app.add_subcommand("max-cycle", "largest simple cycle by exhaustive search");
  add_common(maxc);
  add_budget(maxc);
  auto* verify = app.add_subcommand("verify", "check a certificate, or the engine against the census");
  add_common(verify);
  add_budget(verify);
  auto* collapse = app.add_subcommand("collapse", "collapse a complex, or build a non-collapsible hypertree");
  add_common(collapse);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_line("usage", e.what(), kUsage);
  }

  try {
    if (*fill_cmd) return cmd_fill(o);
    if (*ham2) return cmd_ham2(o);
    if (*ham3) return cmd_ham3(o);
    if (*simple) return cmd_simple_cycle(o);
    if (*census) return cmd_census(o);
    if (*maxc) return cmd_max_cycle(o);
    if (*verify) return cmd_verify(o);
    if (*collapse) return cmd_collapse(o);
    return error_line("usage", "no command", kUsage);
  } catch (const UsageError& e) {
    return error_line("usage", e.what(), kUsage);
  } catch (const ParseError& e) {
    return error_line("input", e.what(), kInput);
  } catch (const Json::exception& e) {
    return error_line("input", e.what(), kInput);
  } catch (const BudgetExceeded& e) {
    return error_line("budget", e.what(), kBudget);
  } catch (const VerificationFailure& e) {
    return error_line("verification", e.what(), kVerification);
  } catch (const std::invalid_argument& e) {
    return error_line("precondition", e.what(), kPrecondition);
  } catch (const std::logic_error& e) {
    return error_line("verification", e.what(), kVerification);
  } catch (const std::exception& e) {
    return error_line("runtime", e.what(), kRuntime);
  }
}
