// Command-line front end: verify / construct / catalog / degrees / omega /
// matmul / search.  Exit codes: 0 success, 1 verification failure, 2 usage
// or input errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpp/bounds.hpp"
#include "tpp/certificate.hpp"
#include "tpp/chardeg.hpp"
#include "tpp/constructions.hpp"
#include "tpp/embed.hpp"
#include "tpp/report.hpp"
#include "tpp/search.hpp"

using nlohmann::json;
using namespace tpp;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<uint64_t> parse_params(const std::string& params) {
  std::vector<uint64_t> out;
  if (params.empty()) return out;
  std::istringstream in(params);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad --params value '" + tok + "'");
    out.push_back(std::stoull(tok));
  }
  return out;
}

RealizationCertificate build_family(const std::string& family,
                                    const std::string& params,
                                    const VerifyOptions& opt) {
  auto p = parse_params(params);
  auto need = [&](size_t n) {
    if (p.size() != n)
      throw Error("--family " + family + " needs " + std::to_string(n) +
                  " comma-separated parameter(s)");
  };
  if (family == "cyclic-axes") {
    need(3);
    return construct_cyclic_axes(p[0], p[1], p[2], opt);
  }
  if (family == "triangle") {
    need(1);
    return construct_triangle(uint32_t(p[0]), opt);
  }
  if (family == "sl2-parabolic") {
    need(1);
    return construct_sl2_parabolic(uint32_t(p[0]), opt);
  }
  if (family == "sl2-unitary") {
    need(1);
    return construct_sl2_unitary(uint32_t(p[0]), opt);
  }
  if (family == "bilinear") {
    if (p.size() == 1) return construct_bilinear(uint32_t(p[0]), {}, opt);
    need(2);
    return construct_bilinear(uint32_t(p[0]), uint32_t(p[1]), opt);
  }
  if (family == "frob80") {
    need(0);
    return construct_frobenius80(opt);
  }
  if (family == "wreath") {
    need(1);
    return construct_wreath(uint32_t(p[0]), opt);
  }
  if (family == "dihedral") {
    need(1);
    return construct_dihedral(uint32_t(p[0]), opt);
  }
  if (family == "dihedral5") {
    need(0);
    return construct_dihedral5(opt);
  }
  if (family == "sperner") {
    need(2);
    return construct_sperner_power(uint32_t(p[0]), uint32_t(p[1]), opt);
  }
  throw Error("unknown --family '" + family + "'");
}

json witness_json(const Group& g, const Witness& w) {
  return json{{"q1", g.encode(w.q1)},
              {"q2", g.encode(w.q2)},
              {"q3", g.encode(w.q3)}};
}

// Degrees with method "auto": closed form if the family has one, spectral
// otherwise.
CharacterDegrees degrees_for(const Group& g, const std::string& method,
                             uint64_t seed) {
  const std::string& d = g.descriptor();
  auto formula = [&]() -> CharacterDegrees {
    if (g.abelian()) return degrees_abelian(g.order());
    if (d.rfind("sl2:", 0) == 0)
      return degrees_sl2(uint32_t(std::stoul(d.substr(4))));
    if (d.rfind("dihedral:", 0) == 0) {
      uint32_t m = uint32_t(std::stoul(d.substr(9)));
      if (m % 2 == 0) return degrees_dihedral(m);
    }
    throw Error("no closed-form degree table for " + d +
                "; use --method numeric");
  };
  if (method == "formula") return formula();
  if (method == "numeric") return degrees_numeric(g, seed);
  try {
    return formula();
  } catch (const Error&) {
    return degrees_numeric(g, seed);
  }
}

json degrees_json(const Group& g, const CharacterDegrees& deg, uint64_t seed) {
  double gm = gamma_of(deg);
  json j{{"group", g.descriptor()},
         {"order", deg.order},
         {"method",
          deg.source == CharacterDegrees::Source::kFormula ? "formula"
                                                           : "numeric"},
         {"degrees", deg.degrees}};
  if (deg.source == CharacterDegrees::Source::kNumeric) j["seed"] = seed;
  if (std::isinf(gm))
    j["gamma"] = "inf";
  else
    j["gamma"] = gm;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix multiplication through finite group algebras"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  bool as_json = false;
  app.add_option("--seed", seed, "seed for randomized components");
  app.add_flag("--json", as_json, "machine-readable output");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "check a TPP certificate");
  std::string cert_path, group_desc, subsets_path;
  unsigned threads = 1;
  cmd_verify->add_option("--cert", cert_path, "certificate JSON file");
  cmd_verify->add_option("--group", group_desc, "group descriptor");
  cmd_verify->add_option("--subsets", subsets_path,
                         "JSON file: three arrays of element encodings");
  cmd_verify->add_option("--threads", threads,
                         "verification threads (0 = auto)");

  // construct
  auto* cmd_construct = app.add_subcommand("construct",
                                           "build a catalog certificate");
  std::string family, params, out_path;
  cmd_construct->add_option("--family", family, "construction family")
      ->required();
  cmd_construct->add_option("--params", params, "comma-separated parameters");
  cmd_construct->add_option("--out", out_path, "write certificate here");

  // catalog
  auto* cmd_catalog =
      app.add_subcommand("catalog", "run the full construction battery");

  // degrees
  auto* cmd_degrees = app.add_subcommand("degrees", "character degrees");
  std::string deg_group, method = "auto";
  cmd_degrees->add_option("--group", deg_group, "group descriptor")
      ->required();
  cmd_degrees->add_option("--method", method, "formula|numeric|auto");

  // omega
  auto* cmd_omega =
      app.add_subcommand("omega", "exponent bound for a certificate");
  std::string omega_cert, omega_method = "auto";
  cmd_omega->add_option("--cert", omega_cert, "certificate JSON file")
      ->required();
  cmd_omega->add_option("--degrees", omega_method, "formula|numeric|auto");

  // matmul
  auto* cmd_matmul =
      app.add_subcommand("matmul", "multiply matrices through a certificate");
  std::string mm_cert, a_path, b_path;
  cmd_matmul->add_option("--cert", mm_cert, "certificate JSON file")
      ->required();
  cmd_matmul->add_option("--A", a_path, "left matrix CSV")->required();
  cmd_matmul->add_option("--B", b_path, "right matrix CSV")->required();

  // search
  auto* cmd_search = app.add_subcommand("search", "search for TPP triples");
  std::string search_group, mode = "subgroups";
  uint64_t budget = 2'000'000'000ull;
  cmd_search->add_option("--group", search_group, "group descriptor")
      ->required();
  cmd_search->add_option("--mode", mode, "subsets|subgroups");
  cmd_search->add_option("--budget", budget, "work unit budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmd_verify) {
      VerifyOptions opt;
      opt.threads = threads;
      RealizationCertificate cert;
      Group g = Group::cyclic(1);
      TppResult r;
      if (!cert_path.empty()) {
        cert = read_certificate(cert_path);
        g = cert.group();
        r = reverify(cert, opt);
      } else if (!group_desc.empty() && !subsets_path.empty()) {
        g = Group::parse(group_desc);
        json j = json::parse(slurp(subsets_path));
        if (!j.is_array() || j.size() != 3)
          throw Error("--subsets file must hold three arrays");
        std::array<SubsetSpec, 3> ss;
        for (int i = 0; i < 3; ++i) {
          std::vector<Elem> elems;
          for (const auto& s : j[i])
            elems.push_back(g.decode(s.get<std::string>()));
          ss[i] = make_subset(g, std::move(elems));
        }
        r = verify_tpp(g, ss[0], ss[1], ss[2], opt);
      } else {
        throw Error("verify needs --cert or both --group and --subsets");
      }
      if (r.verified()) {
        std::cout << certificate_to_json(*r.certificate);
        return kOk;
      }
      json out{{"verified", false}, {"witness", witness_json(g, *r.witness)}};
      std::cout << out.dump(2) << "\n";
      return kVerifyFailure;
    }

    if (*cmd_construct) {
      RealizationCertificate cert = build_family(family, params, {});
      std::string text = certificate_to_json(cert);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << text;
      }
      std::cout << text;
      return kOk;
    }

    if (*cmd_catalog) {
      auto rows = full_report(seed);
      std::cout << (as_json ? report_to_json(rows) : report_to_text(rows));
      for (const auto& row : rows)
        if (!row.error.empty()) return kVerifyFailure;
      return kOk;
    }

    if (*cmd_degrees) {
      Group g = Group::parse(deg_group);
      CharacterDegrees deg = degrees_for(g, method, seed);
      std::cout << degrees_json(g, deg, seed).dump(2) << "\n";
      return kOk;
    }

    if (*cmd_omega) {
      RealizationCertificate cert = read_certificate(omega_cert);
      TppResult rr = reverify(cert);
      if (!rr.verified()) {
        std::cerr << "certificate failed re-verification\n";
        return kVerifyFailure;
      }
      Group g = cert.group();
      CharacterDegrees deg = degrees_for(g, omega_method, seed);
      OmegaBound ob = omega_bound_solve(cert.group_order, cert.alpha_upper, deg);
      Question1Report q1 = question1_check(cert, deg);
      double gm = gamma_of(deg);
      auto cor = corollary_bound(cert.alpha_upper, gm);
      json out{{"group", cert.group_descriptor},
               {"order", cert.group_order},
               {"alpha_upper", cert.alpha_upper},
               {"degrees", deg.degrees},
               {"question1",
                {{"nmp", q1.nmp},
                 {"sum_d3", q1.sum_d3},
                 {"satisfied", q1.satisfied}}},
               {"tolerance", ob.tol}};
      out["gamma"] = std::isinf(gm) ? json("inf") : json(gm);
      out["omega"] = ob.trivial ? json{{"outcome", "trivial"}}
                                : json{{"outcome", "bound"},
                                       {"omega_star", ob.omega_star}};
      out["corollary_bound"] = cor ? json(*cor) : json("inapplicable");
      std::cout << out.dump(2) << "\n";
      return kOk;
    }

    if (*cmd_matmul) {
      RealizationCertificate cert = read_certificate(mm_cert);
      Group g = cert.group();
      ExactMatrix a = matrix_from_csv(slurp(a_path));
      ExactMatrix b = matrix_from_csv(slurp(b_path));
      ExactMatrix via = matmul_via_group(g, cert, a, b);
      ExactMatrix oracle = naive_matmul(a, b);
      std::cout << matrix_to_csv(via);
      const bool match = via == oracle;
      std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
      return match ? kOk : kVerifyFailure;
    }

    if (*cmd_search) {
      Group g = Group::parse(search_group);
      SearchConfig cfg;
      cfg.budget = budget;
      if (mode == "subsets")
        cfg.mode = SearchConfig::Mode::kSubsets;
      else if (mode == "subgroups")
        cfg.mode = SearchConfig::Mode::kSubgroups;
      else
        throw Error("--mode must be subsets or subgroups");
      SearchResult r = cfg.mode == SearchConfig::Mode::kSubsets
                           ? search_subset_triples(g, cfg)
                           : search_subgroup_triples(g, cfg);
      json out{{"group", g.descriptor()},
               {"mode", mode},
               {"exhaustive", r.exhaustive},
               {"triples_examined", r.triples_examined},
               {"work_units", r.work_units}};
      if (r.best) {
        out["best"] = json::parse(certificate_to_json(*r.best));
        out["best_nmp"] = r.best->shape.nmp();
      }
      std::cout << out.dump(2) << "\n";
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
