#include "ncploc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncploc/correspondence.hpp"
#include "ncploc/errors.hpp"
#include "ncploc/json_io.hpp"
#include "ncploc/verify.hpp"

namespace ncploc {

namespace {

using nlohmann::json;

struct CliConfig {
  int n = 1;
  int k = 1;
  int max_n = kDefaultMaxPoints;
  int brute_bits = kDefaultBruteForceBits;
  bool pretty = false;
  bool oracle = false;
  std::vector<int> y;
  std::vector<int> primes;
  std::string file;
  std::string dot_path;
};

void emit(std::ostream& out, const json& doc, bool pretty) {
  out << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_doc(const std::string& text, const std::string& origin) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw std::invalid_argument(origin + " is not valid JSON");
  }
  return doc;
}

std::vector<PrimeLabel> parse_primes(const std::vector<int>& raw) {
  if (raw.empty()) {
    throw std::invalid_argument("--primes needs at least one label");
  }
  std::vector<PrimeLabel> out;
  for (int v : raw) {
    if (!PrimeLabel::acceptable(v)) {
      throw std::invalid_argument("--primes entries must be 0 or primes, got " +
                                  std::to_string(v));
    }
    out.emplace_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// NCPLOC_BUDGET_BITS, when set to a number, caps the brute-force budget no
// matter what the flag says.
int effective_brute_bits(int flag_bits) {
  const char* env = std::getenv("NCPLOC_BUDGET_BITS");
  if (!env || !*env) return flag_bits;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) return flag_bits;
  return std::min(flag_bits, static_cast<int>(std::min(v, 64L)));
}

json element_json(const FiniteLattice& l, std::size_t i) {
  json parsed = json::parse(l.key(i), nullptr, false);
  return parsed.is_discarded() ? json(l.key(i)) : parsed;
}

int dispatch(const CLI::App& app, CliConfig& cfg, std::ostream& out) {
  const bool pretty = cfg.pretty;

  if (app.got_subcommand("intervals")) {
    for (Interval y : enumerate_intervals(Space(cfg.n))) {
      emit(out, to_json(y), pretty);
    }
    return 0;
  }

  if (app.got_subcommand("box")) {
    if (cfg.y.size() != 2) {
      throw std::invalid_argument("--y takes an interval as a,b");
    }
    if (cfg.y[0] < 1 || cfg.y[1] < cfg.y[0]) {
      throw std::invalid_argument("bad interval [" + std::to_string(cfg.y[0]) +
                                  "," + std::to_string(cfg.y[1]) +
                                  "]: need 1 <= a <= b");
    }
    Space space(cfg.n);
    emit(out, to_json(maximal_box(space, Interval(cfg.y[0], cfg.y[1]))),
         pretty);
    return 0;
  }

  if (app.got_subcommand("enumerate")) {
    Space space(cfg.n);
    auto tuples = cfg.oracle
                      ? brute_force_valid_plocal(
                            space, effective_brute_bits(cfg.brute_bits))
                      : enumerate_valid_plocal(space, cfg.max_n);
    for (const PLocalTuple& t : tuples) emit(out, to_json(t), pretty);
    return 0;
  }

  if (app.got_subcommand("check")) {
    json doc = parse_doc(read_file(cfg.file), "\"" + cfg.file + "\"");
    json result;
    if (doc.is_object() && doc.contains("universe")) {
      result = json{{"kind", "support"}, {"valid", is_valid(support_from_json(doc))}};
    } else {
      result = json{{"kind", "plocal"}, {"valid", is_valid_plocal(plocal_from_json(doc))}};
    }
    emit(out, result, pretty);
    return 0;
  }

  if (app.got_subcommand("psi")) {
    json doc = parse_doc(read_file(cfg.file), "\"" + cfg.file + "\"");
    emit(out, to_json(psi(plocal_from_json(doc))), pretty);
    return 0;
  }

  if (app.got_subcommand("psi-inv")) {
    json doc = parse_doc(read_file(cfg.file), "\"" + cfg.file + "\"");
    emit(out, to_json(psi_inverse(ncp_from_json(doc))), pretty);
    return 0;
  }

  if (app.got_subcommand("lattice")) {
    auto l = plocal_lattice(Space(cfg.n), cfg.max_n);
    emit(out, lattice_to_json(l), pretty);
    if (!cfg.dot_path.empty()) {
      std::ofstream dot(cfg.dot_path, std::ios::binary);
      if (!dot) {
        throw std::invalid_argument("cannot write \"" + cfg.dot_path + "\"");
      }
      dot << to_dot(l);
    }
    return 0;
  }

  if (app.got_subcommand("product")) {
    auto l = product_lattice(Space(cfg.n), parse_primes(cfg.primes), cfg.max_n);
    emit(out, lattice_to_json(l), pretty);
    return 0;
  }

  if (app.got_subcommand("distributive")) {
    auto l = product_lattice(Space(cfg.n), parse_primes(cfg.primes), cfg.max_n);
    json result;
    if (auto w = l.distributivity_witness()) {
      result = json{{"distributive", false},
                    {"witness", json::array({element_json(l, w->x),
                                             element_json(l, w->y),
                                             element_json(l, w->z)})}};
    } else {
      result = json{{"distributive", true}};
    }
    emit(out, result, pretty);
    return 0;
  }

  if (app.got_subcommand("catalan")) {
    if (cfg.k < 1) {
      throw std::invalid_argument("--k must be at least 1");
    }
    out << catalan(cfg.k).str() << "\n";
    return 0;
  }

  if (app.got_subcommand("verify")) {
    VerifyOptions options;
    options.max_points = cfg.max_n;
    options.brute_force_bits = effective_brute_bits(cfg.brute_bits);
    auto results = run_verification(Space(cfg.n), options);
    std::size_t failed = 0;
    for (const PropertyResult& r : results) {
      if (!r.pass) ++failed;
      emit(out,
           json{{"property", r.name}, {"pass", r.pass}, {"detail", r.detail}},
           pretty);
    }
    emit(out,
         json{{"checked", results.size()},
              {"failed", failed}},
         pretty);
    return failed == 0 ? 0 : 3;
  }

  throw std::invalid_argument("no subcommand given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"valid support tuples, noncrossing partitions, and the "
               "lattices they form"};
  app.name("ncploc");
  app.require_subcommand(0, 1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_flag("--pretty", cfg.pretty, "indent JSON output");
  };
  auto add_n = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of points")->required();
  };
  auto add_budgets = [&cfg](CLI::App* sub) {
    sub->add_option("--max-n", cfg.max_n,
                    "largest point count to enumerate (default 8)");
    sub->add_option("--max-bruteforce-bits", cfg.brute_bits,
                    "largest 2^bits tuple sweep allowed (default 22)");
  };

  auto* intervals = app.add_subcommand("intervals", "list the intervals");
  add_n(intervals);
  add_common(intervals);

  auto* box = app.add_subcommand("box", "maximal box of one interval");
  add_n(box);
  box->add_option("--y", cfg.y, "base interval as a,b")
      ->required()
      ->delimiter(',');
  add_common(box);

  auto* enumerate = app.add_subcommand("enumerate", "all valid tuples");
  add_n(enumerate);
  enumerate->add_flag("--oracle", cfg.oracle,
                      "filter every bitmask instead of folding boxes");
  add_budgets(enumerate);
  add_common(enumerate);

  auto* check = app.add_subcommand("check", "validity of a tuple document");
  check->add_option("--file", cfg.file, "JSON document to check")->required();
  add_common(check);

  auto* psi_cmd = app.add_subcommand("psi", "partition of a valid tuple");
  psi_cmd->add_option("--file", cfg.file, "tuple JSON document")->required();
  add_common(psi_cmd);

  auto* psi_inv = app.add_subcommand("psi-inv", "tuple of a partition");
  psi_inv->add_option("--file", cfg.file, "partition JSON document")
      ->required();
  add_common(psi_inv);

  auto* lattice = app.add_subcommand("lattice", "lattice of valid tuples");
  add_n(lattice);
  lattice->add_option("--dot", cfg.dot_path, "also write a Graphviz file");
  add_budgets(lattice);
  add_common(lattice);

  auto* product = app.add_subcommand("product",
                                     "lattice of valid support tuples");
  add_n(product);
  product->add_option("--primes", cfg.primes, "universe labels as p1,p2,...")
      ->required()
      ->delimiter(',');
  add_budgets(product);
  add_common(product);

  auto* distributive =
      app.add_subcommand("distributive", "distributivity verdict and witness");
  add_n(distributive);
  distributive
      ->add_option("--primes", cfg.primes, "universe labels as p1,p2,...")
      ->required()
      ->delimiter(',');
  add_budgets(distributive);
  add_common(distributive);

  auto* catalan_cmd = app.add_subcommand("catalan", "Catalan number C_k");
  catalan_cmd->add_option("--k", cfg.k, "index")->required();
  add_common(catalan_cmd);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_n(verify);
  add_budgets(verify);
  add_common(verify);

  auto fail = [&err](const std::string& message, int code) {
    err << json{{"error", message}, {"code", code}}.dump() << "\n";
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    // Subcommand help also lands here via CallForAllHelp.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    return fail(e.what(), 1);
  }

  if (app.get_subcommands().empty()) {
    out << app.help();
    return 0;
  }

  try {
    return dispatch(app, cfg, out);
  } catch (const BudgetError& e) {
    return fail(e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return fail(e.what(), 1);
  } catch (const std::exception& e) {
    return fail(std::string("internal error: ") + e.what(), 1);
  }
}

}  // namespace ncploc
