#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/catalog.hpp"
#include "toric/invariants.hpp"

namespace toric {

enum class OutputFormat { text, json, csv };

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_list(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline Json coefficient_list(const IntPolynomial& p) { return integer_list(p.coefficients()); }

inline std::string joined(const std::vector<Integer>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s;
}

} // namespace detail

/// Big integers become decimal strings; polynomials become ascending
/// coefficient lists.
inline Json to_json(const InvariantReport& r) {
  Json j;
  j["vertices"] = r.vertices;
  j["snum"] = r.snum.get_str();
  j["anum"] = r.anum.get_str();
  j["bnum"] = r.bnum.get_str();
  j["c"] = detail::integer_list(r.c);
  j["sa_poly"] = detail::coefficient_list(r.sa_poly);
  j["betti"] = detail::integer_list(r.betti);
  j["euler"] = r.euler.get_str();
  j["poincare"] = detail::coefficient_list(r.poincare);
  return j;
}

inline InvariantReport report_from_json(const Json& j) {
  auto ints = [](const Json& a) {
    std::vector<Integer> v;
    for (const auto& x : a) v.emplace_back(x.get<std::string>());
    return v;
  };
  InvariantReport r;
  r.vertices = j.at("vertices").get<int>();
  r.snum = Integer(j.at("snum").get<std::string>());
  r.anum = Integer(j.at("anum").get<std::string>());
  r.bnum = Integer(j.at("bnum").get<std::string>());
  r.c = ints(j.at("c"));
  r.sa_poly = IntPolynomial(ints(j.at("sa_poly")));
  r.betti = ints(j.at("betti"));
  r.euler = Integer(j.at("euler").get<std::string>());
  r.poincare = IntPolynomial(ints(j.at("poincare")));
  return r;
}

inline std::string render(const InvariantReport& r, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
  case OutputFormat::json:
    os << to_json(r).dump(2) << '\n';
    break;
  case OutputFormat::csv:
    os << "vertices,snum,anum,bnum,c,sa_poly,betti,euler,poincare\n";
    os << r.vertices << ',' << r.snum << ',' << r.anum << ',' << r.bnum << ',' << detail::joined(r.c, ';') << ','
       << detail::joined(r.sa_poly.coefficients(), ';') << ',' << detail::joined(r.betti, ';') << ',' << r.euler
       << ',' << detail::joined(r.poincare.coefficients(), ';') << '\n';
    break;
  case OutputFormat::text:
    os << "vertices  " << r.vertices << '\n'
       << "s         " << r.snum << '\n'
       << "a         " << r.anum << '\n'
       << "b         " << r.bnum << '\n'
       << "c         " << detail::joined(r.c, ' ') << '\n'
       << "sa(t)     " << r.sa_poly.to_string("t") << '\n'
       << "betti     " << detail::joined(r.betti, ' ') << '\n'
       << "euler     " << r.euler << '\n'
       << "poincare  " << r.poincare.to_string("z") << '\n';
    break;
  }
  return os.str();
}

/// Entry [p][q] is the Poincare polynomial of K_{p,q}.
inline std::string render_table(const std::vector<std::vector<IntPolynomial>>& t, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
  case OutputFormat::json: {
    Json a = Json::array();
    for (std::size_t p = 0; p < t.size(); ++p) {
      for (std::size_t q = 0; q < t[p].size(); ++q) {
        Json e;
        e["p"] = p;
        e["q"] = q;
        e["poincare"] = detail::coefficient_list(t[p][q]);
        a.push_back(std::move(e));
      }
    }
    os << a.dump(2) << '\n';
    break;
  }
  case OutputFormat::csv:
    os << "p,q,poincare\n";
    for (std::size_t p = 0; p < t.size(); ++p) {
      for (std::size_t q = 0; q < t[p].size(); ++q) {
        os << p << ',' << q << ',' << detail::joined(t[p][q].coefficients(), ';') << '\n';
      }
    }
    break;
  case OutputFormat::text:
    for (std::size_t p = 0; p < t.size(); ++p) {
      for (std::size_t q = 0; q < t[p].size(); ++q) {
        os << "p=" << p << " q=" << q << "  " << t[p][q].to_string("z") << '\n';
      }
    }
    break;
  }
  return os.str();
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["passed"] = r.passed;
  j["coefficients_checked"] = r.checked;
  if (r.mismatch) {
    j["mismatch"] = {{"where", r.mismatch->where}, {"expected", r.mismatch->expected}, {"actual", r.mismatch->actual}};
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline std::string render(const std::vector<VerificationReport>& reports, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
  case OutputFormat::json: {
    Json a = Json::array();
    for (const auto& r : reports) a.push_back(to_json(r));
    os << a.dump(2) << '\n';
    break;
  }
  case OutputFormat::csv:
    os << "id,order,passed,coefficients_checked,mismatch\n";
    for (const auto& r : reports) {
      os << r.id << ',' << r.order << ',' << (r.passed ? "pass" : "fail") << ',' << r.checked << ',';
      if (r.mismatch) os << '"' << r.mismatch->where << ": expected " << r.mismatch->expected << " got "
                         << r.mismatch->actual << '"';
      os << '\n';
    }
    break;
  case OutputFormat::text:
    for (const auto& r : reports) {
      os << (r.passed ? "PASS " : "FAIL ") << r.id << " (order " << r.order << ", " << r.checked
         << " coefficients)";
      if (r.mismatch) {
        os << "  first mismatch at " << r.mismatch->where << ": expected " << r.mismatch->expected << ", got "
           << r.mismatch->actual;
      }
      if (!r.error.empty()) os << "  error: " << r.error;
      os << '\n';
    }
    break;
  }
  return os.str();
}

inline std::string render_sequence(const std::vector<Integer>& v, OutputFormat f) {
  switch (f) {
  case OutputFormat::json:
    return detail::integer_list(v).dump() + '\n';
  case OutputFormat::csv:
    return "n,value\n" + [&] {
      std::string s;
      for (std::size_t n = 0; n < v.size(); ++n) s += std::to_string(n) + ',' + v[n].get_str() + '\n';
      return s;
    }();
  case OutputFormat::text:
    break;
  }
  return detail::joined(v, ',') + '\n';
}

} // namespace toric
