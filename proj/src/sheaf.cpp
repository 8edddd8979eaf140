#include "gitstrata/sheaf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gitstrata::sheaf {

SplitBundle::SplitBundle(std::vector<long long> d) : degrees(std::move(d)) {
  if (degrees.empty()) throw std::invalid_argument("splitting type must be nonempty");
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
}

SplitBundle SplitBundle::parse(const std::string& text) {
  std::vector<long long> out;
  size_t i = 0;
  while (i <= text.size()) {
    size_t j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    std::string tok = text.substr(i, j - i);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("malformed splitting type '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    try {
      size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (...) {
      throw std::invalid_argument("malformed splitting type '" + text + "'");
    }
    i = j + 1;
    if (j == text.size()) break;
  }
  return SplitBundle(std::move(out));
}

std::string SplitBundle::to_string() const {
  std::string s;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(degrees[i]);
  }
  return s;
}

HilbertPolynomial hilbert_poly(const SplitBundle& b) {
  Rational constant;
  for (long long a : b.degrees) constant += Rational(a + 1);
  return HilbertPolynomial::linear(Rational(static_cast<long long>(b.rank())), constant);
}

HnResult hn_filtration(const SplitBundle& b) {
  HnResult out;
  size_t i = 0;
  while (i < b.degrees.size()) {
    size_t j = i;
    while (j < b.degrees.size() && b.degrees[j] == b.degrees[i]) ++j;
    SplitBundle piece(std::vector<long long>(b.degrees.begin() + i, b.degrees.begin() + j));
    out.type.push_back(hilbert_poly(piece));
    out.pieces.push_back({b.degrees[i], std::move(piece)});
    i = j;
  }
  auto v = validate_hn_type(out.type, hilbert_poly(b));
  if (!v.ok) throw std::logic_error("filtration failed validation: " + v.diagnostic);
  return out;
}

long long hom_dim(const SplitBundle& from, const SplitBundle& to) {
  long long d = 0;
  for (long long b : from.degrees)
    for (long long a : to.degrees)
      if (a - b + 1 > 0) d += a - b + 1;
  return d;
}

long long end_dim(const SplitBundle& b) { return hom_dim(b, b); }

Length2Sheaf Length2Sheaf::concrete(const SplitBundle& first, const SplitBundle& second) {
  HNType tau({hilbert_poly(first), hilbert_poly(second)});
  bool stable = first.rank() == 1 && second.rank() == 1;
  return Length2Sheaf{std::move(tau), first, second, true, hom_dim(second, first), stable};
}

Length2Sheaf Length2Sheaf::abstract_record(HNType tau, long long hom, bool is_split,
                                           bool summands_stable) {
  if (hom < 0) throw std::invalid_argument("negative Hom dimension");
  return Length2Sheaf{std::move(tau), std::nullopt, std::nullopt, is_split, hom, summands_stable};
}

namespace {

void require_length2(const Length2Sheaf& s) {
  if (s.tau.length() != 2)
    throw std::invalid_argument("operation requires HN length 2, got length " +
                                std::to_string(s.tau.length()));
}

}  // namespace

bool is_tau_stable(const Length2Sheaf& s) {
  require_length2(s);
  return !s.is_split && s.summands_stable;
}

bool is_indecomposable(const Length2Sheaf& s) {
  require_length2(s);
  return !s.is_split;
}

StabDims stab_dims(const Length2Sheaf& s) {
  StabDims out{s.hom, std::nullopt};
  if (is_tau_stable(s)) out.end_dim_claim = s.hom + 1;
  return out;
}

std::vector<StratumCell> to_blowup_cells(const std::vector<Length2Sheaf>& records) {
  if (records.empty()) throw std::invalid_argument("no records");
  const HilbertPolynomial p1 = records[0].tau.entries()[0];
  const HilbertPolynomial p2 = records[0].tau.entries().size() > 1
                                   ? records[0].tau.entries()[1]
                                   : HilbertPolynomial();
  for (const auto& r : records) {
    require_length2(r);
    if (r.tau.entries()[0] != p1 || r.tau.entries()[1] != p2)
      throw std::invalid_argument("records do not share a single HN type");
  }
  std::set<long long> split_dims, nonsplit_dims;
  for (const auto& r : records) (r.is_split ? split_dims : nonsplit_dims).insert(r.hom);

  std::vector<StratumCell> cells;
  auto split_id = [](long long d) { return "d" + std::to_string(d) + "-split"; };
  // a non-split class flows to its associated graded, which has the
  // same Hom dimension; ensure the target cell exists
  std::set<long long> all_split = split_dims;
  for (long long d : nonsplit_dims) all_split.insert(d);
  for (long long d : all_split) {
    StratumCell c;
    c.id = split_id(d);
    c.label = "split sheaves, hom=" + std::to_string(d);
    c.lambda_weights = {EpsWeight(Rational(0), Rational(0))};
    c.ustab_dim = static_cast<int>(d);
    c.flows_to = c.id;
    cells.push_back(std::move(c));
  }
  for (long long d : nonsplit_dims) {
    StratumCell c;
    c.id = "d" + std::to_string(d) + "-nonsplit";
    c.label = "non-split sheaves, hom=" + std::to_string(d);
    c.lambda_weights = {EpsWeight(Rational(0), Rational(0)), EpsWeight(Rational(1), Rational(0))};
    c.ustab_dim = static_cast<int>(d);
    c.flows_to = split_id(d);
    cells.push_back(std::move(c));
  }
  return cells;
}

}  // namespace gitstrata::sheaf
