#include "bridgeburn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "bridgeburn/bounds.hpp"
#include "bridgeburn/errors.hpp"
#include "bridgeburn/families.hpp"
#include "bridgeburn/graph_io.hpp"
#include "bridgeburn/solver.hpp"
#include "bridgeburn/strategies.hpp"
#include "bridgeburn/tree_solver.hpp"

namespace bridgeburn {
namespace {

struct Flags {
  std::string graph_file;
  std::string family;
  std::vector<int> params;
  int cops = 1;
  std::optional<int> max_k;
  std::string variant = "bb";
  std::uint64_t budget = 10'000'000;
  std::vector<std::string> policies;
  std::optional<int> max_rounds;
  std::optional<int> root;
  bool pretty = false;
};

struct Board {
  Graph graph;
  std::optional<FamilySpec> family;
};

Board load_board(const Flags& f) {
  if (!f.graph_file.empty() && !f.family.empty()) throw InputError("use either --graph or --family, not both");
  if (!f.graph_file.empty()) return {read_graph_file(f.graph_file), std::nullopt};
  if (f.family.empty()) throw InputError("a graph is required (--graph FILE or --family NAME --params ...)");
  auto spec = FamilySpec::parse(f.family, f.params);
  return {generate(spec), spec};
}

Variant variant_of(const Flags& f) {
  if (f.variant == "bb") return Variant::bridge_burning();
  if (f.variant == "classic") return Variant::classic();
  throw InputError("--variant must be bb or classic");
}

SolveOptions solve_options(const Flags& f) {
  SolveOptions o;
  o.budget = f.budget;
  return o;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw InputError("graph must be connected");
}

nlohmann::json run_command(const std::string& command, const Flags& f) {
  if (f.cops < 1) throw InputError("--cops must be positive");
  if (f.budget == 0) throw InputError("--budget must be positive");
  const Board board = load_board(f);
  const Graph& g = board.graph;
  const Variant variant = variant_of(f);

  if (command == "generate") return to_json(g);

  if (command == "solve") {
    require_connected(g);
    return to_json(cop_wins_with_k(g, f.cops, variant, solve_options(f)));
  }

  if (command == "copnumber") {
    require_connected(g);
    const int k_max = f.max_k.value_or(std::min(std::max(1, g.vertex_count()), kSolverMaxCops));
    if (k_max < 1) throw InputError("--max-k must be positive");
    const auto r = cop_number(g, k_max, variant, solve_options(f));
    nlohmann::json j;
    const char* key = variant.burning ? "cb" : "c";
    j[key] = r.cop_number ? nlohmann::json(*r.cop_number) : nlohmann::json(nullptr);
    if (!r.cop_number) j["exceedsMaxK"] = k_max;
    return j;
  }

  if (command == "capture-time") {
    require_connected(g);
    if (!variant.burning) throw InputError("capture-time is defined for the bridge-burning game");
    return to_json(capture_time_bb(g, solve_options(f)));
  }

  if (command == "tree") {
    std::optional<Vertex> root;
    if (f.root) root = *f.root;
    return to_json(tree_cop_number(g, root));
  }

  if (command == "bounds") return to_json(domination_numbers(g, f.budget));

  if (command == "formula") {
    if (!board.family) throw InputError("formula needs --family");
    return to_json(family_formula(*board.family));
  }

  PolicyContext ctx{g, board.family, f.cops, variant};
  if (command == "arena") {
    std::unique_ptr<CopPolicy> cop;
    std::unique_ptr<RobberPolicy> robber;
    for (const auto& spec : f.policies) {
      const auto side = policy_side(spec);
      if (!side) throw InputError("unknown policy '" + spec + "'");
      if (*side == Side::kCop) {
        if (cop) throw InputError("arena takes one cop policy");
        cop = make_cop_policy(ctx, spec);
      } else {
        if (robber) throw InputError("arena takes one robber policy");
        robber = make_robber_policy(ctx, spec);
      }
    }
    if (!cop || !robber) throw InputError("arena needs one cop and one robber --policy");
    const int rounds = f.max_rounds.value_or(std::max(1, g.edge_count() * g.vertex_count()));
    if (rounds < 1) throw InputError("--max-rounds must be positive");
    return to_json(run_match(g, *cop, *robber, rounds, variant));
  }

  if (command == "exhaust") {
    if (f.policies.size() != 1) throw InputError("exhaust takes exactly one --policy");
    const auto side = policy_side(f.policies.front());
    if (!side) throw InputError("unknown policy '" + f.policies.front() + "'");
    ExhaustOptions options;
    options.cops = f.cops;
    options.budget = f.budget;
    options.variant = variant;
    if (*side == Side::kCop) return to_json(exhaust_vs_policy(g, *make_cop_policy(ctx, f.policies.front()), options));
    return to_json(exhaust_vs_policy(g, *make_robber_policy(ctx, f.policies.front()), options));
  }
  throw InputError("unknown command '" + command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bridge-burning cops and robbers toolkit", "bridgeburn"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--graph", f.graph_file, "graph file, edge list or JSON");
  app.add_option("--family", f.family, "named family");
  app.add_option("--params", f.params, "family parameters")->delimiter(',');
  app.add_option("--cops", f.cops, "number of cops");
  app.add_option("--max-k", f.max_k, "largest team tried by copnumber");
  app.add_option("--variant", f.variant, "bb or classic");
  app.add_option("--budget", f.budget, "explored-state cap");
  app.add_option("--policy", f.policies, "NAME[:params], once per side");
  app.add_option("--max-rounds", f.max_rounds, "arena round limit (default |E|*n)");
  app.add_option("--root", f.root, "tree root");
  app.add_flag("--json", "compact JSON output (default)");
  app.add_flag("--pretty", f.pretty, "indented JSON output");
  for (const char* name : {"generate", "solve", "copnumber", "capture-time", "tree", "bounds", "formula", "arena", "exhaust"})
    app.add_subcommand(name)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const auto j = run_command(command, f);
    out << (f.pretty ? j.dump(2) : j.dump()) << "\n";
    return 0;
  } catch (const BudgetExceeded& e) {
    out << nlohmann::json{{"outcome", "budget_exceeded"}, {"explored", e.explored()}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PolicyError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bridgeburn
