// Command-line front end: describe root systems, query the fundamental-group
// tables, test semifreeness, build reversors, analyze representation weight
// data, and run the verification sweeps.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "liecert/sweep.hpp"

using namespace liecert;

namespace {

Vec parse_coords(const ModelPtr& m, const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ';') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (static_cast<int>(parts.size()) != m->ambient_dim())
    throw Error(ErrorCode::UsageError,
                "expected " + std::to_string(m->ambient_dim()) + " coordinates, got " +
                    std::to_string(parts.size()));
  std::vector<Rat> c;
  for (const std::string& p : parts) c.push_back(parse_rat(p));
  if (!m->admits(c))
    throw Error(ErrorCode::UsageError, "coordinates do not lie in the model (" + m->tag() + ")");
  return Vec(m, std::move(c));
}

Vec parse_lambda(const RootSystem& rs, const std::string& s) {
  if (s.rfind("coset:", 0) == 0) {
    int k = -1;
    try {
      k = std::stoi(s.substr(6));
    } catch (const std::exception&) {
      throw Error(ErrorCode::UsageError, "bad coset index in '" + s + "'");
    }
    Pi1Table t = semifree_transversal(rs);
    if (k < 0 || k >= static_cast<int>(t.reps.size()))
      throw Error(ErrorCode::UsageError,
                  "coset index out of range (group order " + t.group.order().get_str() + ")");
    return t.reps[static_cast<size_t>(k)].lambda;
  }
  return parse_coords(rs.model(), s);
}

WeightMultiset parse_weights_file(const RootSystem& rs, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UsageError, "cannot open weights file '" + path + "'");
  WeightMultiset wts;
  std::string line;
  while (std::getline(in, line)) {
    std::string::size_type h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    long mult = 1;
    std::string coords = line;
    std::string::size_type star = line.find('*');
    if (star != std::string::npos) {
      try {
        mult = std::stol(line.substr(0, star));
      } catch (const std::exception&) {
        throw Error(ErrorCode::UsageError, "bad multiplicity in line '" + line + "'");
      }
      coords = line.substr(star + 1);
    }
    if (mult <= 0) throw Error(ErrorCode::UsageError, "multiplicity must be positive");
    wts.entries.push_back({parse_coords(rs.model(), coords), mult});
  }
  return wts;
}

std::vector<SimpleType> parse_type_list(const std::string& csv) {
  std::vector<SimpleType> out;
  std::string cur;
  std::istringstream is(csv);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) continue;
    out.push_back(SimpleType::parse(cur));
  }
  return out;
}

std::set<std::string> parse_claims(const std::string& csv) {
  std::set<std::string> out;
  std::string cur;
  std::istringstream is(csv);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) continue;
    if (!SweepConfig::all_claims().count(cur))
      throw Error(ErrorCode::UsageError, "unknown claim '" + cur + "'");
    out.insert(cur);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorCode::UsageError, "cannot write to '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-system, cocharacter-lattice, and Weyl-reversor verification"};
  app.require_subcommand(1);

  std::function<int()> action;

  {
    auto* cmd = app.add_subcommand("describe", "print a root system as JSON");
    auto type_arg = std::make_shared<std::string>();
    cmd->add_option("type", *type_arg, "simple type, e.g. D5")->required();
    cmd->callback([type_arg, &action] {
      action = [type_arg] {
        RootSystem rs = RootSystem::build(SimpleType::parse(*type_arg));
        std::cout << root_system_json(rs).dump(2) << "\n";
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("pi1", "fundamental group of the adjoint form");
    auto type_arg = std::make_shared<std::string>();
    auto reps = std::make_shared<bool>(false);
    cmd->add_option("type", *type_arg, "simple type, e.g. D5")->required();
    cmd->add_flag("--reps", *reps, "include certified coset representatives");
    cmd->callback([type_arg, reps, &action] {
      action = [type_arg, reps] {
        RootSystem rs = RootSystem::build(SimpleType::parse(*type_arg));
        Pi1Table t = *reps ? semifree_transversal(rs) : fundamental_group(rs);
        std::cout << pi1_json(rs, t, *reps).dump(2) << "\n";
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("semifree", "test the semifree pairing bound");
    auto type_arg = std::make_shared<std::string>();
    auto lambda_arg = std::make_shared<std::string>();
    cmd->add_option("type", *type_arg)->required();
    cmd->add_option("--lambda", *lambda_arg, "coordinates p/q,... (E6: n;x1,...,x6) or coset:k")
        ->required();
    cmd->callback([type_arg, lambda_arg, &action] {
      action = [type_arg, lambda_arg] {
        RootSystem rs = RootSystem::build(SimpleType::parse(*type_arg));
        Vec lam = parse_lambda(rs, *lambda_arg);
        PairingCert c = max_abs_root_pairing(rs, lam);
        Json j;
        j["type"] = rs.type().name();
        j["lambda"] = vec_json(lam);
        j["semifree"] = c.max_abs <= 1;
        j["max_pairing"] = rat_str(c.max_abs);
        j["maximizing_root"] = vec_json(c.maximizer);
        std::cout << j.dump(2) << "\n";
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("reversor", "construct a Weyl word sending lambda to -lambda");
    auto type_arg = std::make_shared<std::string>();
    auto lambda_arg = std::make_shared<std::string>();
    cmd->add_option("type", *type_arg)->required();
    cmd->add_option("--lambda", *lambda_arg)->required();
    cmd->callback([type_arg, lambda_arg, &action] {
      action = [type_arg, lambda_arg] {
        RootSystem rs = RootSystem::build(SimpleType::parse(*type_arg));
        Vec lam = parse_lambda(rs, *lambda_arg);
        try {
          WeylWord w = build_reversor(rs, lam);
          std::cout << reversor_json(rs, lam, w).dump(2) << "\n";
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoReversor) throw;
          Json details;
          details["message"] = e.what();
          Json j = envelope_json("NoReversor", lam, std::nullopt,
                                 pair(rs.dominant_rep(lam).first, rs.highest_root().vector),
                                 details);
          std::cout << j.dump(2) << "\n";
        }
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("analyze-rep",
                                   "semifree / reversor analysis of representation weights");
    auto type_arg = std::make_shared<std::string>();
    auto lambda_arg = std::make_shared<std::string>();
    auto weights_arg = std::make_shared<std::string>();
    cmd->add_option("type", *type_arg)->required();
    cmd->add_option("--lambda", *lambda_arg)->required();
    cmd->add_option("--weights", *weights_arg, "file with one weight per line: mult * coords")
        ->required();
    cmd->callback([type_arg, lambda_arg, weights_arg, &action] {
      action = [type_arg, lambda_arg, weights_arg] {
        RootSystem rs = RootSystem::build(SimpleType::parse(*type_arg));
        Vec lam = parse_lambda(rs, *lambda_arg);
        WeightMultiset wts = parse_weights_file(rs, *weights_arg);
        AnalysisResult res = semifree_rep_analysis(rs, lam, wts);
        std::cout << analysis_json(rs, lam, res).dump(2) << "\n";
        return 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("verify", "run the claim suite for one type");
    auto type_arg = std::make_shared<std::string>();
    auto claims_arg = std::make_shared<std::string>("a,b,c,d,pi1,lattices,transversal,reversor");
    auto bound = std::make_shared<int>(8);
    cmd->add_option("type", *type_arg)->required();
    cmd->add_option("--claims", *claims_arg, "comma-separated subset of a,b,c,d,pi1,lattices,transversal,reversor");
    cmd->add_option("--bound", *bound, "pairing bound for the lambda sweeps");
    cmd->callback([type_arg, claims_arg, bound, &action] {
      action = [type_arg, claims_arg, bound] {
        SweepConfig cfg;
        cfg.types = {SimpleType::parse(*type_arg)};
        cfg.claims = parse_claims(*claims_arg);
        if (*bound < 0) throw Error(ErrorCode::UsageError, "--bound must be >= 0");
        cfg.pairing_bound = *bound;
        Report rep = run_verification_suite(cfg);
        std::cout << render_report(rep, "text");
        return rep.fail > 0 ? 1 : 0;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("sweep", "run the full verification sweep");
    auto all = std::make_shared<bool>(false);
    auto types_arg = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(8);
    auto format = std::make_shared<std::string>("text");
    auto out_path = std::make_shared<std::string>();
    auto types_given = std::make_shared<bool>(false);
    cmd->add_flag("--all", *all, "sweep the whole in-scope type list (default)");
    cmd->add_option("--types", *types_arg, "comma-separated types, e.g. A2,D5,E6")
        ->trigger_on_parse(false);
    cmd->add_option("--bound", *bound, "pairing bound for the lambda sweeps");
    cmd->add_option("--format", *format, "text or json");
    cmd->add_option("--out", *out_path, "write the report to a file");
    cmd->callback([cmd, all, types_arg, bound, format, out_path, types_given, &action] {
      *types_given = cmd->count("--types") > 0;
      action = [all, types_arg, bound, format, out_path, types_given] {
        SweepConfig cfg;
        cfg.types = *types_given ? parse_type_list(*types_arg) : SweepConfig::default_types();
        if (*bound < 0) throw Error(ErrorCode::UsageError, "--bound must be >= 0");
        cfg.pairing_bound = *bound;
        Report rep = run_verification_suite(cfg);
        emit(render_report(rep, *format), *out_path);
        return rep.fail > 0 ? 1 : 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const Error& e) {
    Json j;
    j["error"] = e.what();
    std::cerr << j.dump(2) << "\n";
    switch (e.code()) {
      case ErrorCode::UsageError:
      case ErrorCode::UnsupportedRank:
      case ErrorCode::ZeroCocharacter:
      case ErrorCode::NotInSpan:
      case ErrorCode::PreconditionViolated:
      case ErrorCode::EmptyRepresentation:
      case ErrorCode::NotProper:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
