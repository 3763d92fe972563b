#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gct/claims.hpp"
#include "gct/constructions.hpp"
#include "gct/errors.hpp"
#include "gct/partitions.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct Options {
  std::uint64_t limit = gct::kDefaultEnumerationLimit;
  std::uint64_t seed = 0;
  bool as_json = false;
};

void print_parse_error(const gct::ParseError& e, const std::string& text) {
  std::cerr << "parse error: " << e.what() << "\n";
  if (e.offset <= text.size()) {
    std::cerr << "  " << text << "\n  " << std::string(e.offset, ' ') << "^\n";
  }
}

std::string relation_str(gct::Relation rel) {
  return rel == gct::Relation::Le ? "<=" : "<";
}

void emit_verdict(const gct::BoundVerdict& v, bool as_json) {
  if (as_json) {
    json doc{{"id", v.claim_id},
             {"relation", relation_str(v.relation)},
             {"lhs", v.lhs.str()},
             {"rhs", v.rhs.str()},
             {"holds", v.holds},
             {"context", v.context}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << v.claim_id << ": " << v.lhs.str() << " "
              << relation_str(v.relation) << " " << v.rhs.str() << " -> "
              << (v.holds ? "holds" : "FAILS");
    if (!v.context.empty()) std::cout << "  [" << v.context << "]";
    std::cout << "\n";
  }
}

int cmd_order(const Options& opt, const std::string& spec_text) {
  gct::PermGroup G = gct::parse_group_spec(spec_text);
  if (opt.as_json) {
    json doc{{"spec", spec_text},
             {"degree", G.degree()},
             {"order", G.order().str()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "degree=" << G.degree() << " order=" << G.order().str()
              << "\n";
  }
  return kExitPass;
}

int cmd_classes(const Options& opt, const std::string& spec_text) {
  gct::PermGroup G = gct::parse_group_spec(spec_text);
  gct::ClassCountResult res = gct::class_count(G, opt.limit);
  const char* method = "enumeration";
  switch (res.method) {
    case gct::CountMethod::SymmetricFormula: method = "symmetric-formula"; break;
    case gct::CountMethod::AlternatingFormula:
      method = "alternating-formula";
      break;
    case gct::CountMethod::WreathSymFormula: method = "wreath-formula"; break;
    default: break;
  }
  if (opt.as_json) {
    json doc{{"spec", spec_text},
             {"degree", G.degree()},
             {"order", G.order().str()},
             {"classes", res.count.str()},
             {"method", method}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "classes=" << res.count.str() << " method=" << method << "\n";
  }
  return kExitPass;
}

int cmd_blocks(const Options& opt, const std::string& spec_text) {
  gct::PermGroup G = gct::parse_group_spec(spec_text);
  if (!G.is_transitive()) {
    std::cerr << "blocks: group is not transitive\n";
    return kExitUsage;
  }
  auto systems = gct::minimal_block_systems(G);
  if (opt.as_json) {
    json doc{{"spec", spec_text},
             {"degree", G.degree()},
             {"primitive", systems.empty()},
             {"systems", json::array()}};
    for (const gct::BlockSystem& s : systems) {
      json sys{{"block_size", s.block_size},
               {"block_count", s.block_count},
               {"blocks", json::array()}};
      for (const auto& block : s.blocks()) {
        json b = json::array();
        for (unsigned x : block) b.push_back(x + 1);
        sys["blocks"].push_back(b);
      }
      doc["systems"].push_back(sys);
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "primitive=" << (systems.empty() ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < systems.size(); ++i) {
      std::cout << "system " << i << ": size=" << systems[i].block_size
                << " blocks=";
      for (const auto& block : systems[i].blocks()) {
        std::cout << "{";
        for (std::size_t j = 0; j < block.size(); ++j)
          std::cout << (j ? "," : "") << block[j] + 1;
        std::cout << "}";
      }
      std::cout << "\n";
    }
  }
  return kExitPass;
}

int cmd_pn(const Options& opt, unsigned n) {
  gct::BigNat p = gct::partition_number(n);
  if (opt.as_json) {
    json doc{{"n", n}, {"p", p.str()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "p(" << n << ")=" << p.str() << "\n";
  }
  return kExitPass;
}

int cmd_pn_bounds(const Options& opt, unsigned n) {
  gct::BoundSandwichReport rep = gct::bound_sandwich(n);
  bool ok = rep.lower_ok && rep.upper_ok;
  if (opt.as_json) {
    json doc{{"n", n},
             {"p", rep.p_n.str()},
             {"lower_ok", rep.lower_ok},
             {"upper_ok", rep.upper_ok},
             {"lower_log_margin", rep.lower_log_margin},
             {"upper_log_margin", rep.upper_log_margin}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "p(" << n << ")=" << rep.p_n.str()
              << " lower_ok=" << (rep.lower_ok ? "true" : "false")
              << " upper_ok=" << (rep.upper_ok ? "true" : "false")
              << " lower_log_margin=" << rep.lower_log_margin
              << " upper_log_margin=" << rep.upper_log_margin << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_bound_chain(const Options& opt, const std::string& indices_csv,
                    const std::string& k_text) {
  std::vector<unsigned> idx;
  std::stringstream in(indices_csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    idx.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  gct::ChainIndices chain(idx);
  gct::BigNat bound = gct::chain_bound(chain);
  bool holds = true;
  if (!k_text.empty()) holds = gct::BigNat(k_text) <= bound;
  if (opt.as_json) {
    json doc{{"indices", idx}, {"n", chain.n()}, {"bound", bound.str()}};
    if (!k_text.empty()) {
      doc["k"] = k_text;
      doc["holds"] = holds;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "n=" << chain.n() << " bound=" << bound.str();
    if (!k_text.empty())
      std::cout << " k=" << k_text << " holds=" << (holds ? "true" : "false");
    std::cout << "\n";
  }
  return holds ? kExitPass : kExitFail;
}

int cmd_bound_main(const Options& opt, const std::string& k_text, unsigned n) {
  gct::BoundVerdict v = gct::main_bound_check(gct::BigNat(k_text), n);
  emit_verdict(v, opt.as_json);
  return v.holds ? kExitPass : kExitFail;
}

int report_exit(const gct::RunReport& rep, bool strict) {
  if (!rep.overall_pass()) return kExitFail;
  if (strict && rep.any_skipped()) return kExitLimit;
  return kExitPass;
}

int cmd_verify_claims(const Options& opt, const std::string& manifest_path,
                      bool strict, bool timings) {
  std::string text;
  if (manifest_path.empty()) {
    text = gct::builtin_manifest();
  } else {
    std::ifstream in(manifest_path);
    if (!in) {
      std::cerr << "cannot open manifest: " << manifest_path << "\n";
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  gct::RunReport rep =
      gct::run_claims(gct::parse_manifest(text), opt.seed, opt.limit);
  std::cout << (opt.as_json ? gct::report_to_json(rep)
                            : gct::report_to_text(rep, timings));
  return report_exit(rep, strict);
}

int cmd_verify_sweep(const Options& opt, unsigned max_degree, bool strict,
                     bool timings) {
  gct::RunReport rep = gct::catalog_sweep(max_degree, opt.seed, opt.limit);
  std::cout << (opt.as_json ? gct::report_to_json(rep)
                            : gct::report_to_text(rep, timings));
  return report_exit(rep, strict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact conjugacy-class counts and bound verification for "
               "permutation groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--limit", opt.limit, "element enumeration limit")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for sampled checks")
      ->capture_default_str();
  app.add_flag("--json", opt.as_json, "machine-readable JSON output");

  std::string spec_order, spec_classes, spec_blocks;
  auto* order_cmd = app.add_subcommand("order", "group order from a spec");
  order_cmd->add_option("spec", spec_order, "group spec")->required();

  auto* classes_cmd =
      app.add_subcommand("classes", "number of conjugacy classes");
  classes_cmd->add_option("spec", spec_classes, "group spec")->required();

  auto* blocks_cmd =
      app.add_subcommand("blocks", "minimal block systems / primitivity");
  blocks_cmd->add_option("spec", spec_blocks, "group spec")->required();

  unsigned pn_n = 0, pnb_n = 0;
  auto* pn_cmd = app.add_subcommand("pn", "partition number p(n)");
  pn_cmd->add_option("n", pn_n, "argument")->required();
  auto* pnb_cmd =
      app.add_subcommand("pn-bounds", "sandwich bounds around p(n)");
  pnb_cmd->add_option("n", pnb_n, "argument")->required();

  auto* bound_cmd = app.add_subcommand("bound", "bound computations");
  bound_cmd->require_subcommand(1);
  std::string chain_indices, chain_k;
  auto* chain_cmd = bound_cmd->add_subcommand("chain", "index-chain bound");
  chain_cmd->add_option("--indices", chain_indices, "comma-separated indices")
      ->required();
  chain_cmd->add_option("--k", chain_k, "optional class count to test");
  std::string main_k;
  unsigned main_n = 0;
  auto* main_cmd = bound_cmd->add_subcommand("main", "cubed main bound");
  main_cmd->add_option("--k", main_k, "class count")->required();
  main_cmd->add_option("--n", main_n, "degree")->required();

  auto* verify_cmd = app.add_subcommand("verify", "claim verification");
  verify_cmd->require_subcommand(1);
  std::string manifest_path;
  bool strict = false, timings = false;
  auto* claims_cmd =
      verify_cmd->add_subcommand("claims", "run a reference-value manifest");
  claims_cmd->add_option("--manifest", manifest_path,
                         "manifest file (default: built-in)");
  claims_cmd->add_flag("--strict", strict, "treat skipped claims as failure");
  claims_cmd->add_flag("--timings", timings, "include per-claim timings");
  unsigned sweep_max = 16;
  auto* sweep_cmd =
      verify_cmd->add_subcommand("sweep", "catalog-wide bound sweep");
  sweep_cmd->add_option("--max-degree", sweep_max, "largest catalog degree")
      ->capture_default_str();
  sweep_cmd->add_flag("--strict", strict, "treat skipped entries as failure");
  sweep_cmd->add_flag("--timings", timings, "include timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::string parsed_text;  // for caret diagnostics
  try {
    if (*order_cmd) {
      parsed_text = spec_order;
      return cmd_order(opt, spec_order);
    }
    if (*classes_cmd) {
      parsed_text = spec_classes;
      return cmd_classes(opt, spec_classes);
    }
    if (*blocks_cmd) {
      parsed_text = spec_blocks;
      return cmd_blocks(opt, spec_blocks);
    }
    if (*pn_cmd) return cmd_pn(opt, pn_n);
    if (*pnb_cmd) return cmd_pn_bounds(opt, pnb_n);
    if (*chain_cmd) return cmd_bound_chain(opt, chain_indices, chain_k);
    if (*main_cmd) return cmd_bound_main(opt, main_k, main_n);
    if (*claims_cmd)
      return cmd_verify_claims(opt, manifest_path, strict, timings);
    if (*sweep_cmd) return cmd_verify_sweep(opt, sweep_max, strict, timings);
  } catch (const gct::ParseError& e) {
    print_parse_error(e, parsed_text);
    return kExitUsage;
  } catch (const gct::LimitExceededError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const gct::UncountableError& e) {
    std::cerr << "uncountable: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
