#include "tpp/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tpp/constructions.hpp"

namespace tpp {

using nlohmann::json;

namespace {

// Fixed-format floats keep report bytes stable across runs.
std::string fmt_double(double v, int digits = 9) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

json cert_json(const RealizationCertificate& cert) {
  Group g = cert.group();
  json subsets = json::array();
  for (const SubsetSpec& s : cert.subsets) {
    json arr = json::array();
    for (const Elem& e : s.elems) arr.push_back(g.encode(e));
    subsets.push_back(std::move(arr));
  }
  return json{{"schema", 1},
              {"group", cert.group_descriptor},
              {"order", cert.group_order},
              {"subsets", std::move(subsets)},
              {"shape", {cert.shape.n, cert.shape.m, cert.shape.p}},
              {"alpha_upper", cert.alpha_upper},
              {"verified", cert.verified},
              {"subgroup", {cert.subgroup_flags[0], cert.subgroup_flags[1],
                            cert.subgroup_flags[2]}},
              {"note", cert.note}};
}

}  // namespace

std::string certificate_to_json(const RealizationCertificate& cert,
                                int indent) {
  return cert_json(cert).dump(indent) + "\n";
}

RealizationCertificate certificate_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("schema") || j["schema"].get<int>() != 1)
    throw Error("certificate: unsupported schema");
  RealizationCertificate cert;
  cert.group_descriptor = j.at("group").get<std::string>();
  Group g = Group::parse(cert.group_descriptor);
  cert.group_order = j.at("order").get<uint64_t>();
  if (cert.group_order != g.order())
    throw Error("certificate: stored order disagrees with the group");
  const auto& subsets = j.at("subsets");
  if (subsets.size() != 3) throw Error("certificate: need three subsets");
  auto flags = j.value("subgroup", json::array({false, false, false}));
  for (int i = 0; i < 3; ++i) {
    std::vector<Elem> elems;
    for (const auto& s : subsets[i])
      elems.push_back(g.decode(s.get<std::string>()));
    cert.subgroup_flags[i] = flags[i].get<bool>();
    cert.subsets[i] =
        make_subset(g, std::move(elems), cert.subgroup_flags[i]);
  }
  const auto& shape = j.at("shape");
  cert.shape = {shape[0].get<uint64_t>(), shape[1].get<uint64_t>(),
                shape[2].get<uint64_t>()};
  if (cert.shape.n != cert.subsets[0].size() ||
      cert.shape.m != cert.subsets[1].size() ||
      cert.shape.p != cert.subsets[2].size())
    throw Error("certificate: shape disagrees with subset sizes");
  cert.alpha_upper = j.at("alpha_upper").get<double>();
  cert.verified = j.at("verified").get<bool>();
  cert.note = j.value("note", "");
  return cert;
}

void write_certificate(const std::string& path,
                       const RealizationCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw Error("certificate: cannot write " + path);
  out << certificate_to_json(cert);
}

RealizationCertificate read_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("certificate: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return certificate_from_json(ss.str());
}

ExactMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Coeff>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    std::vector<Coeff> row;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      size_t a = tok.find_first_not_of(" \t\r");
      size_t b = tok.find_last_not_of(" \t\r");
      if (a == std::string::npos) throw Error("matrix: empty entry in CSV");
      row.emplace_back(tok.substr(a, b - a + 1));
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error("matrix: ragged CSV rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("matrix: empty CSV");
  ExactMatrix m(rows.size(), rows.front().size());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::string matrix_to_csv(const ExactMatrix& m) {
  std::string out;
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) {
      if (j) out += ',';
      out += m.at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

namespace {

// Degrees policy per family: closed forms first, the spectral method when
// the group is small enough, the wreath max-degree shortcut for gamma.
void fill_degrees(ReportRow& row, const Group& g, uint64_t seed) {
  const std::string& fam = row.family;
  if (g.abelian()) {
    row.degrees = degrees_abelian(g.order());
    row.degrees_method = "formula";
  } else if (fam == "sl2-parabolic") {
    row.degrees = degrees_sl2(uint32_t(std::stoul(row.params)));
    row.degrees_method = "formula";
  } else if (fam == "sl2-unitary") {
    uint32_t q = uint32_t(std::stoul(row.params));
    row.degrees = degrees_sl2(q * q);
    row.degrees_method = "formula";
  } else if (fam == "dihedral" && std::stoul(row.params) % 2 == 0) {
    row.degrees = degrees_dihedral(uint32_t(std::stoul(row.params)));
    row.degrees_method = "formula";
  } else if (fam == "wreath") {
    // Only the top degree is tabulated; gamma is still exact.
    row.gamma = gamma_of(wreath_max_degree(uint32_t(std::stoul(row.params))));
    row.gamma_known = true;
    row.degrees_method = "max-only";
    return;
  } else if (g.order() <= 2000) {
    row.degrees = degrees_numeric(g, seed);
    row.degrees_method = "numeric";
  }
  if (row.degrees) {
    row.gamma = gamma_of(*row.degrees);
    row.gamma_known = true;
  } else if (row.degrees_method.empty()) {
    row.degrees_method = "none";
  }
}

}  // namespace

std::vector<ReportRow> full_report(uint64_t seed, const VerifyOptions& opt) {
  std::vector<ReportRow> rows;
  for (const CatalogEntry& entry : construction_catalog()) {
    ReportRow row;
    row.family = entry.family;
    row.params = entry.params;
    row.seed = seed;
    try {
      auto t0 = std::chrono::steady_clock::now();
      RealizationCertificate cert = entry.build(opt);
      auto t1 = std::chrono::steady_clock::now();
      row.verify_ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      row.alpha = cert.alpha_upper;
      Group g = cert.group();
      fill_degrees(row, g, seed);
      if (row.degrees) {
        row.q1 = question1_check(cert, *row.degrees);
        row.omega = omega_bound_solve(cert.group_order, row.alpha,
                                      *row.degrees);
      }
      if (row.gamma_known) row.corollary = corollary_bound(row.alpha, row.gamma);
      row.cert = std::move(cert);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string report_to_json(const std::vector<ReportRow>& rows) {
  json out = json::array();
  for (const ReportRow& row : rows) {
    json j{{"family", row.family}, {"params", row.params}, {"seed", row.seed}};
    if (!row.error.empty()) {
      j["error"] = row.error;
      out.push_back(std::move(j));
      continue;
    }
    const RealizationCertificate& c = *row.cert;
    j["group"] = c.group_descriptor;
    j["order"] = c.group_order;
    j["shape"] = {c.shape.n, c.shape.m, c.shape.p};
    j["alpha_upper"] = fmt_double(row.alpha);
    j["degrees_method"] = row.degrees_method;
    if (row.degrees) j["degrees"] = row.degrees->degrees;
    if (row.gamma_known) j["gamma"] = fmt_double(row.gamma);
    if (row.q1)
      j["question1"] = {{"nmp", row.q1->nmp},
                        {"sum_d3", row.q1->sum_d3},
                        {"satisfied", row.q1->satisfied}};
    if (row.omega) {
      j["omega"] = row.omega->trivial
                       ? json{{"outcome", "trivial"}}
                       : json{{"outcome", "bound"},
                              {"omega_star", fmt_double(row.omega->omega_star)}};
    }
    if (row.corollary)
      j["corollary_bound"] = fmt_double(*row.corollary);
    else if (row.gamma_known)
      j["corollary_bound"] = "inapplicable";
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string report_to_text(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-14s %-6s %10s %-18s %9s %9s %5s %-10s %8s\n",
                "family", "params", "|G|", "shape", "alpha", "gamma", "Q1",
                "omega", "ms");
  out << buf;
  for (const ReportRow& row : rows) {
    if (!row.error.empty()) {
      std::snprintf(buf, sizeof(buf), "%-14s %-6s ERROR %s\n",
                    row.family.c_str(), row.params.c_str(), row.error.c_str());
      out << buf;
      continue;
    }
    const RealizationCertificate& c = *row.cert;
    std::string shape = "<" + std::to_string(c.shape.n) + "," +
                        std::to_string(c.shape.m) + "," +
                        std::to_string(c.shape.p) + ">";
    std::string gamma = row.gamma_known
                            ? (std::isinf(row.gamma) ? "inf"
                                                     : fmt_double(row.gamma, 4))
                            : "-";
    std::string q1 = row.q1 ? (row.q1->satisfied ? "YES" : "no") : "-";
    std::string omega = "-";
    if (row.omega)
      omega = row.omega->trivial ? "trivial"
                                 : fmt_double(row.omega->omega_star, 6);
    std::snprintf(buf, sizeof(buf),
                  "%-14s %-6s %10llu %-18s %9s %9s %5s %-10s %8.1f\n",
                  row.family.c_str(), row.params.c_str(),
                  (unsigned long long)c.group_order, shape.c_str(),
                  fmt_double(row.alpha, 4).c_str(), gamma.c_str(), q1.c_str(),
                  omega.c_str(), row.verify_ms);
    out << buf;
  }
  return out.str();
}

}  // namespace tpp
