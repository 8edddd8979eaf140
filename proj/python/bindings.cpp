// Python bindings for the main operations. Rationals cross the
// boundary as canonical "p/q" strings so exactness survives the trip.

#include "gitstrata/cli.hpp"
#include "gitstrata/json_io.hpp"
#include "gitstrata/p1.hpp"
#include "gitstrata/sheaf.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gitstrata;

namespace {

QVector to_qvector(const std::vector<std::string>& coords) {
  std::vector<Rational> c;
  c.reserve(coords.size());
  for (const auto& s : coords) c.push_back(Rational::parse(s));
  return QVector(std::move(c));
}

std::vector<QVector> to_points(const std::vector<std::vector<std::string>>& rows) {
  std::vector<QVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_qvector(r));
  return out;
}

InnerProduct to_ip(const std::optional<std::vector<std::vector<std::string>>>& rows, size_t dim) {
  if (!rows) return InnerProduct::identity(dim);
  std::vector<std::vector<Rational>> m;
  for (const auto& r : *rows) {
    std::vector<Rational> row;
    for (const auto& s : r) row.push_back(Rational::parse(s));
    m.push_back(std::move(row));
  }
  return InnerProduct(QMatrix(std::move(m)));
}

std::vector<std::string> from_qvector(const QVector& v) {
  std::vector<std::string> out;
  for (size_t i = 0; i < v.dim(); ++i) out.push_back(v[i].to_string());
  return out;
}

WeightSystem ws_from_json_text(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("not valid JSON");
  return weight_system_from_json(j);
}

std::vector<HilbertPolynomial> parse_polys(const std::vector<std::string>& texts) {
  std::vector<HilbertPolynomial> out;
  for (const auto& t : texts) out.push_back(HilbertPolynomial::parse(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_gitstrata, m) {
  m.doc() = "exact toolkit for instability stratifications";
  m.attr("__version__") = kEngineVersion;

  // exact convex geometry
  m.def(
      "origin_position",
      [](const std::vector<std::vector<std::string>>& points) {
        return std::string(to_string(origin_position(to_points(points))));
      },
      py::arg("points"), "Position of the origin in the convex hull: Outside/Boundary/Interior.");
  m.def(
      "min_norm_point",
      [](const std::vector<std::vector<std::string>>& points,
         const std::optional<std::vector<std::vector<std::string>>>& ip) {
        auto pts = to_points(points);
        auto r = min_norm_point(pts, to_ip(ip, pts.empty() ? 1 : pts[0].dim()));
        py::dict out;
        out["point"] = from_qvector(r.point);
        out["norm_sq"] = r.norm_sq.to_string();
        py::list comb;
        for (const auto& [idx, coeff] : r.combination)
          comb.append(py::make_tuple(idx, coeff.to_string()));
        out["combination"] = comb;
        return out;
      },
      py::arg("points"), py::arg("ip") = std::nullopt,
      "Closest point of the hull to the origin with its certificate.");

  // weight-system layer, consuming the same JSON the CLI reads
  m.def(
      "index_set",
      [](const std::string& ws_json) {
        std::vector<std::string> out;
        for (const auto& b : index_set(ws_from_json_text(ws_json))) out.push_back(b.to_string());
        std::sort(out.begin(), out.end());
        return out;
      },
      py::arg("ws_json"));
  m.def(
      "stratum_of",
      [](const std::string& ws_json, const std::vector<size_t>& support) {
        WeightSystem ws = ws_from_json_text(ws_json);
        return stratum_of(PointSupport(support), ws).to_string();
      },
      py::arg("ws_json"), py::arg("support"));
  m.def(
      "semistability",
      [](const std::string& ws_json, const std::vector<size_t>& support) {
        WeightSystem ws = ws_from_json_text(ws_json);
        return std::string(to_string(semistability(PointSupport(support), ws)));
      },
      py::arg("ws_json"), py::arg("support"));
  m.def(
      "mu",
      [](const std::string& ws_json, const std::vector<size_t>& support,
         const std::vector<std::string>& lam) {
        WeightSystem ws = ws_from_json_text(ws_json);
        return mu(PointSupport(support), Cocharacter{to_qvector(lam)}, ws).to_string();
      },
      py::arg("ws_json"), py::arg("support"), py::arg("lam"));

  // polynomial layer
  m.def(
      "rudakov_compare",
      [](const std::string& p, const std::string& q) {
        return std::string(to_string(
            rudakov_compare(HilbertPolynomial::parse(p), HilbertPolynomial::parse(q))));
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "validate_hn_type",
      [](const std::vector<std::string>& tau, const std::string& total) {
        auto v = validate_hn_type(parse_polys(tau), HilbertPolynomial::parse(total));
        return py::make_tuple(v.ok, v.diagnostic);
      },
      py::arg("tau"), py::arg("total"));
  m.def(
      "beta_of_type",
      [](const std::vector<std::string>& tau, long long n, long long m) {
        BetaVector bv = beta_of_type(HNType(parse_polys(tau)), n, m);
        py::list out;
        for (const auto& [value, mult] : bv.entries)
          out.append(py::make_tuple(value.to_string(), mult));
        return out;
      },
      py::arg("tau"), py::arg("n"), py::arg("m"));

  // sheaves on the line
  m.def(
      "hn_filtration",
      [](const std::vector<long long>& degrees) {
        auto r = sheaf::hn_filtration(sheaf::SplitBundle(degrees));
        py::dict out;
        py::list tau, pieces;
        for (const auto& p : r.type) tau.append(p.to_string());
        for (const auto& p : r.pieces) pieces.append(py::make_tuple(p.slope, p.piece.degrees));
        out["tau"] = tau;
        out["pieces"] = pieces;
        return out;
      },
      py::arg("degrees"));
  m.def(
      "hom_dim",
      [](const std::vector<long long>& from, const std::vector<long long>& to) {
        return sheaf::hom_dim(sheaf::SplitBundle(from), sheaf::SplitBundle(to));
      },
      py::arg("from_degrees"), py::arg("to_degrees"));
  m.def(
      "end_dim",
      [](const std::vector<long long>& degrees) { return sheaf::end_dim(sheaf::SplitBundle(degrees)); },
      py::arg("degrees"));

  // point configurations
  m.def(
      "p1_classify",
      [](const std::string& points) {
        return p1::classify(p1::Configuration::parse(points)).to_string();
      },
      py::arg("points"));
  m.def(
      "p1_support",
      [](const std::string& points) {
        return p1::to_support(p1::Configuration::parse(points)).indices;
      },
      py::arg("points"));
  m.def(
      "p1_membership",
      [](const std::string& points, size_t i) {
        p1::Configuration c = p1::Configuration::parse(points);
        py::dict out;
        out["yz"] = std::string(p1::to_string(p1::membership_yz(c, i)));
        out["ts"] = p1::membership_ts(c, i);
        return out;
      },
      py::arg("points"), py::arg("i"));
  m.def(
      "affine_equivalent",
      [](const std::string& c1, const std::string& c2) {
        return p1::affine_equivalent(p1::Configuration::parse(c1), p1::Configuration::parse(c2));
      },
      py::arg("c1"), py::arg("c2"));

  // blow-up bookkeeping
  m.def(
      "blowup_run",
      [](const std::string& cells_json) {
        auto j = nlohmann::json::parse(cells_json, nullptr, false);
        if (j.is_discarded()) throw std::invalid_argument("not valid JSON");
        BlowupState done = BlowupState::init(cells_from_json(j)).run();
        nlohmann::json out{{"steps", done.step_count()},
                           {"trace", trace_to_json(done.trace())},
                           {"survivors", done.survivors()}};
        return out.dump(2);
      },
      py::arg("cells_json"));

  // the full command layer, for callers who want the reports
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        auto r = cli::run(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"));
}
